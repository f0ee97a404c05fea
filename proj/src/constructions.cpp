#include "ssc/constructions.hpp"

#include <algorithm>

#include "ssc/registry.hpp"

namespace ssc {

namespace {

// Identifying vector assembled from unit blocks of lengths k, k-1, ..., 3
// followed by a weight-2 suffix; pos is the 0-based one position within each
// block (2 / 1 / 0 for the three recursive families).
IdVector family_vector(int k, int n, int pos, const IdVector& suffix) {
    std::vector<Symbol> bits;
    bits.reserve(n);
    for (int len = k; len >= 3; --len) {
        std::vector<Symbol> blk(len, 0);
        blk[pos] = 1;
        bits.insert(bits.end(), blk.begin(), blk.end());
    }
    bits.insert(bits.end(), suffix.bits.begin(), suffix.bits.end());
    if (static_cast<int>(bits.size()) != n) throw BadParams("family_vector length");
    return IdVector(std::move(bits));
}

// v_0j of the recursive family: blocks k..k-j+1 carry a one at offset k-j,
// block k-j is all ones, everything after is zero.
IdVector a0_vector(int k, int j, int n) {
    std::vector<Symbol> bits;
    bits.reserve(n);
    for (int len = k; len >= 3; --len) {
        std::vector<Symbol> blk(len, 0);
        if (len >= k - j + 1)
            blk[k - j] = 1;
        else if (len == k - j)
            std::fill(blk.begin(), blk.end(), 1);
        bits.insert(bits.end(), blk.begin(), blk.end());
    }
    bits.resize(n, 0);
    return IdVector(std::move(bits));
}

struct FamilyCellSpec {
    IdVector v;
    int l1 = 0;                   // block columns
    int fixed = 0;                // fixed color dots per block row
    std::vector<Symbol> colors;   // length = fixed
    std::vector<Symbol> word;     // staircase word, placed after the colors
    int d_rest = 2;
    int shared_pivots = 0;
};

Cell make_family_cell(const FamilyCellSpec& spec, const FieldSpec& f) {
    const FerrersDiagram dia = diagram_from_vector(spec.v);
    const int l1 = spec.l1;
    if (l1 < 0 || l1 > dia.ell()) throw BadParams("make_family_cell: bad block width");
    const FerrersDiagram rest = drop_left_columns(dia, l1);
    const FerrersDiagram blk = take_left_columns(dia, l1);

    Cell cell;
    cell.v = spec.v;
    cell.code.diagram = dia;
    cell.code.field = &f;
    cell.code.declared_d = spec.d_rest;
    cell.code.offset.assign(dia.dots(), 0);

    // rest code, zero-extended over the block dots
    FdrmCode restcode =
        spec.d_rest == 2 ? fdmrd_d2(rest, f) : fdmrd_rows(rest, spec.d_rest, f);
    for (const auto& rb : restcode.basis) {
        std::vector<Symbol> full(dia.dots(), 0);
        size_t src = 0;
        for (int j = 0; j < rest.m(); ++j) {
            const int blk_len = dia.row_lengths[j] - rest.row_lengths[j];
            for (int t = 0; t < rest.row_lengths[j]; ++t)
                full[dia.row_start(j) + blk_len + t] = rb[src++];
        }
        cell.code.basis.push_back(std::move(full));
    }

    if (l1 > 0) {
        PendingBlockInfo info;
        info.m1 = blk.m();
        info.l1 = l1;
        info.row_lens = blk.row_lengths;
        info.shared_pivots = spec.shared_pivots;
        for (int j = 0; j < blk.m(); ++j) {
            const int blen = blk.row_lengths[j];
            const auto cols = free_columns_of_row(spec.v, j);
            if (static_cast<int>(cols.size()) < blen)
                throw ConstructionFailed("block wider than the row");
            for (int t = 0; t < blen; ++t) {
                info.dot_idx.push_back(dia.row_start(j) + t);
                info.ambient_cols.push_back(cols[t]);
            }
            // color prefix, then the staircase word
            if (blen < spec.fixed) throw ConstructionFailed("block row shorter than color prefix");
            for (int t = 0; t < spec.fixed; ++t)
                cell.code.offset[dia.row_start(j) + t] = spec.colors[t];
            if (blen > spec.fixed) {
                if (blen < spec.fixed + static_cast<int>(spec.word.size()))
                    throw ConstructionFailed("block row cannot hold the staircase word");
                for (size_t t = 0; t < spec.word.size(); ++t)
                    cell.code.offset[dia.row_start(j) + spec.fixed + t] = spec.word[t];
            }
        }
        cell.block = std::move(info);
    }
    return cell;
}

std::vector<Symbol> base_q_word(int value, int digits, int q) {
    std::vector<Symbol> w(digits, 0);
    for (int i = digits - 1; i >= 0; --i) {
        w[i] = static_cast<Symbol>(value % q);
        value /= q;
    }
    if (value != 0) throw ConstructionFailed("staircase word overflow");
    return w;
}

int ell_of(int suffix_len) { return suffix_len % 2 == 0 ? suffix_len - 1 : suffix_len; }

}  // namespace

// ------------------------------------------------------------------ k = 3

CdcCode pending_dots(int n, int q) {
    if (n < 8) throw BadParams("pending_dots: n >= 8");
    const int suffix = n - 3;
    const int ell = ell_of(suffix);
    if (q * q + q + 1 < ell) throw FieldTooSmall("pending_dots: q^2+q+1 < ell");
    const FieldSpec& f = field_new(q);
    Factorization fact = factorize(suffix);

    CdcCode code;
    code.q = q;
    code.n = n;
    code.k = 3;
    code.d = 2;
    code.field = &f;
    code.meta = "construction=pending-dots n=" + std::to_string(n) + " q=" + std::to_string(q);

    {
        std::vector<Symbol> bits(n, 0);
        bits[0] = bits[1] = bits[2] = 1;
        Cell mrd;
        mrd.v = IdVector(bits);
        mrd.code = fdmrd_auto(diagram_from_vector(mrd.v), 2, f);
        code.cells.push_back(std::move(mrd));
    }

    auto add_family = [&](int fam, int cls_lo, int cls_hi) {
        for (int i = cls_lo; i <= cls_hi; ++i) {
            for (const auto& y : fact.classes[i - 1].vectors()) {
                FamilyCellSpec spec;
                spec.v = family_vector(3, n, 3 - fam, y);
                spec.d_rest = 2;
                spec.shared_pivots = 1;
                if (fam == 2) {
                    spec.l1 = 1;
                    spec.fixed = 1;
                    spec.colors = {static_cast<Symbol>(i - 2)};
                } else if (fam == 3) {
                    spec.l1 = 2;
                    spec.fixed = 2;
                    const int t = i - (q + 2);
                    spec.colors = base_q_word(t, 2, q);
                }
                code.cells.push_back(make_family_cell(spec, f));
            }
        }
    };
    add_family(1, 1, 1);
    add_family(2, 2, std::min(q + 1, ell));
    if (ell > q + 1) add_family(3, q + 2, ell);
    return code;
}

BigInt size_pending_dots(int n, int q) {
    if (n < 8) throw BadParams("size_pending_dots: n >= 8");
    return q_pow(q, 2 * (n - 3)) + gaussian_binomial(n - 3, 2, q);
}

// ------------------------------------------------------------------ A

namespace {

int a_sum(int from, int to) {  // sum of integers from..to
    int s = 0;
    for (int i = from; i <= to; ++i) s += i;
    return s;
}

void add_recursive_families(CdcCode& code, int n, int k, int q, const Factorization& fact,
                            int fam, int cls_lo, int cls_hi, const FieldSpec& f) {
    const int s = a_sum(3, k);
    const int rest_cols = n - s - 2;
    for (int i = cls_lo; i <= cls_hi; ++i) {
        int ty = 0;
        for (const auto& y : fact.classes[i - 1].vectors()) {
            FamilyCellSpec spec;
            spec.v = family_vector(k, n, 3 - fam, y);
            spec.d_rest = k - 1;
            spec.shared_pivots = k - 2;
            const FerrersDiagram dia = diagram_from_vector(spec.v);
            spec.l1 = dia.ell() - rest_cols;
            spec.fixed = fam == 1 ? 0 : fam == 2 ? 1 : 2;
            if (fam == 2) {
                spec.colors = {static_cast<Symbol>(i - 2)};
            } else if (fam == 3) {
                spec.colors = base_q_word(i - (q + 2), 2, q);
            }
            spec.word = base_q_word(ty++, 3, q);
            code.cells.push_back(make_family_cell(spec, f));
        }
    }
}

}  // namespace

CdcCode construction_A(int n, int k, int q) {
    if (k == 3) return pending_dots(n, q);
    if (k < 3) throw BadParams("construction_A: k >= 3");
    const int s = a_sum(3, k);
    if (n < s + 2 + k) throw BadParams("construction_A: n too small");
    const int suffix = n - s;
    const int ell = ell_of(suffix);
    if (q * q + q + 1 < ell) throw FieldTooSmall("construction_A: q^2+q+1 < ell");
    const FieldSpec& f = field_new(q);
    Factorization fact = factorize(suffix);

    CdcCode code;
    code.q = q;
    code.n = n;
    code.k = k;
    code.d = k - 1;
    code.field = &f;
    code.meta = "construction=A n=" + std::to_string(n) + " k=" + std::to_string(k) +
                " q=" + std::to_string(q);

    {
        std::vector<Symbol> bits(n, 0);
        for (int i = 0; i < k; ++i) bits[i] = 1;
        Cell mrd;
        mrd.v = IdVector(bits);
        mrd.code = fdmrd_auto(diagram_from_vector(mrd.v), k - 1, f);
        code.cells.push_back(std::move(mrd));
    }
    for (int j = 1; j <= k - 3; ++j) {
        Cell cell;
        cell.v = a0_vector(k, j, n);
        cell.code = fdmrd_auto(diagram_from_vector(cell.v), k - 1, f);
        code.cells.push_back(std::move(cell));
    }
    add_recursive_families(code, n, k, q, fact, 1, 1, 1, f);
    add_recursive_families(code, n, k, q, fact, 2, 2, std::min(q + 1, ell), f);
    if (ell > q + 1) add_recursive_families(code, n, k, q, fact, 3, q + 2, ell, f);
    return code;
}

BigInt size_A(int n, int k, int q) {
    if (k < 3) throw BadParams("size_A: k >= 3");
    const int s = a_sum(3, k);
    if (n < s + 2 + k) throw BadParams("size_A: n too small");
    BigInt total = q_pow(q, 2 * (n - k));
    for (int j = 3; j <= k - 1; ++j) total += q_pow(q, 2 * (n - a_sum(j, k)));
    total += gaussian_binomial(n - s, 2, q);
    return total;
}

BigInt size_A_auto(int n, int k, int q) {
    const int s = a_sum(3, k);
    const int ell = ell_of(n - s);
    return q * q + q + 1 >= ell ? size_A(n, k, q) : size_A_mod(n, k, q);
}

// ------------------------------------------------------------------ A, small fields

CdcCode construction_A_mod(int n, int k, int q) {
    if (k < 3) throw BadParams("construction_A_mod: k >= 3");
    const int s = a_sum(3, k);
    if (n < s + 2 + k) throw BadParams("construction_A_mod: n too small");
    const int suffix = n - s;
    const int seg = q * q + q + 2;
    if (q * q + q + 1 >= ell_of(suffix)) throw BadParams("construction_A_mod: use construction_A");
    const int alpha = suffix / seg;
    if (alpha != 1)
        throw BadParams("construction_A_mod: only the single-segment case is materializable");
    const FieldSpec& f = field_new(q);
    // classes of the segment's complete graph; seg is even, so seg-1 classes
    Factorization fact = factorize(seg);

    CdcCode code;
    code.q = q;
    code.n = n;
    code.k = k;
    code.d = k - 1;
    code.field = &f;
    code.meta = "construction=A-mod n=" + std::to_string(n) + " k=" + std::to_string(k) +
                " q=" + std::to_string(q);

    {
        std::vector<Symbol> bits(n, 0);
        for (int i = 0; i < k; ++i) bits[i] = 1;
        Cell mrd;
        mrd.v = IdVector(bits);
        mrd.code = fdmrd_auto(diagram_from_vector(mrd.v), std::max(1, k - 1), f);
        code.cells.push_back(std::move(mrd));
    }
    for (int j = 1; j <= k - 3; ++j) {
        Cell cell;
        cell.v = a0_vector(k, j, n);
        cell.code = fdmrd_auto(diagram_from_vector(cell.v), k - 1, f);
        code.cells.push_back(std::move(cell));
    }

    const int rest_cols = n - s - 2;
    auto add_family = [&](int fam, int cls_lo, int cls_hi) {
        for (int i = cls_lo; i <= cls_hi; ++i) {
            int ty = 0;
            for (const auto& yseg : fact.classes[i - 1].vectors()) {
                std::vector<Symbol> bits = yseg.bits;
                bits.resize(suffix, 0);  // segment occupies the leftmost suffix coordinates
                IdVector y(bits);
                FamilyCellSpec spec;
                spec.v = family_vector(k, n, 3 - fam, y);
                spec.d_rest = k == 3 ? 2 : k - 1;
                spec.shared_pivots = k - 2;
                const FerrersDiagram dia = diagram_from_vector(spec.v);
                spec.l1 = k == 3 ? (fam == 1 ? 0 : fam == 2 ? 1 : 2) : dia.ell() - rest_cols;
                spec.fixed = fam == 1 ? 0 : fam == 2 ? 1 : 2;
                if (fam == 2) spec.colors = {static_cast<Symbol>(i - 2)};
                if (fam == 3) spec.colors = base_q_word(i - (q + 2), 2, q);
                if (k > 3) spec.word = base_q_word(ty++, 3, q);
                code.cells.push_back(make_family_cell(spec, f));
            }
        }
    };
    add_family(1, 1, 1);
    add_family(2, 2, q + 1);
    add_family(3, q + 2, q * q + q + 1);
    return code;
}

BigInt size_A_mod(int n, int k, int q) {
    if (k < 3) throw BadParams("size_A_mod: k >= 3");
    const int s = a_sum(3, k);
    if (n < s + 2 + k) throw BadParams("size_A_mod: n too small");
    const int seg = q * q + q + 2;
    const int alpha = (n - s) / seg;
    BigInt total = q_pow(q, 2 * (n - k));
    for (int j = 3; j <= k - 1; ++j) total += q_pow(q, 2 * (n - a_sum(j, k)));
    for (int i = 1; i <= alpha; ++i)
        total += gaussian_binomial(seg, 2, q) * q_pow(q, 2 * (n - s - seg * i));
    return total;
}

// ------------------------------------------------------------------ B

CdcCode construction_B(int n, int k, int q, const Registry& reg) {
    if (k < 4 || n < 2 * k + 2) throw BadParams("construction_B: need k >= 4, n >= 2k+2");
    const FieldSpec& f = field_new(q);
    CdcCode code;
    code.q = q;
    code.n = n;
    code.k = k;
    code.d = 2;
    code.field = &f;
    code.meta = "construction=B n=" + std::to_string(n) + " k=" + std::to_string(k) +
                " q=" + std::to_string(q);

    {
        std::vector<Symbol> bits(n, 0);
        for (int i = 0; i < k; ++i) bits[i] = 1;
        Cell mrd;
        mrd.v = IdVector(bits);
        mrd.code = fdmrd_auto(diagram_from_vector(mrd.v), 2, f);
        code.cells.push_back(std::move(mrd));
    }
    for (const auto& u : obar_set(k)) {
        for (const auto& v : o_set(n - k)) {
            std::vector<Symbol> bits = u.bits;
            bits.insert(bits.end(), v.bits.begin(), v.bits.end());
            Cell cell;
            cell.v = IdVector(bits);
            cell.code = fdmrd_d2(diagram_from_vector(cell.v), f);
            code.cells.push_back(std::move(cell));
        }
    }
    CdcCode base = prepend_zero_columns(reg.materialize(q, n - k, 2, k), k);
    for (auto& cell : base.cells) code.cells.push_back(std::move(cell));
    return code;
}

BigInt size_B(int n, int k, int q, const BigInt& base) {
    if (k < 4 || n < 2 * k + 2) throw BadParams("size_B: need k >= 4, n >= 2k+2");
    auto eps = [](int i) { return i % 2; };
    BigInt fac1 = 0;
    for (int i = 0; i <= (k - 3) / 2; ++i) fac1 += q_pow(q, (k - 3) * (n - k) - 4 * i);
    if (eps(k - 1)) fac1 += q_pow(q, (k - 3) * (n - k - 2));
    BigInt fac2 = 0;
    for (int i = 0; i <= (n - k) / 2 - 1; ++i) fac2 += q_pow(q, 2 * (2 * i + eps(n - k)));
    return q_pow(q, (k - 1) * (n - k)) + base + fac1 * fac2;
}

// ------------------------------------------------------------------ C-4 / C-5

namespace {

// classes P_{half_up + i}; for even n' the largest valid index is n'-1
int family_upper_limit(int nprime, int q_side) {
    const int shape_side = nprime % 2 == 0 ? nprime / 2 - 1 : (nprime - 1) / 2;
    return std::min(q_side, shape_side);
}

struct PrefixedSet {
    std::vector<IdVector> prefixes;
    std::vector<int> classes;  // ascending
    bool pending = false;
};

void add_prefixed_cells(CdcCode& code, const PrefixedSet& set, const Factorization& fact,
                        const FieldSpec& f) {
    // colors indexed by the rank of the class inside the set
    for (const auto& prefix : set.prefixes) {
        for (size_t ci = 0; ci < set.classes.size(); ++ci) {
            const int cls = set.classes[ci];
            if (cls < 1 || cls > static_cast<int>(fact.classes.size()))
                throw BadParams("construction C: class index out of range");
            for (const auto& y : fact.classes[cls - 1].vectors()) {
                std::vector<Symbol> bits = prefix.bits;
                bits.insert(bits.end(), y.bits.begin(), y.bits.end());
                if (!set.pending) {
                    Cell cell;
                    cell.v = IdVector(bits);
                    cell.code = fdmrd_d2(diagram_from_vector(cell.v), f);
                    code.cells.push_back(std::move(cell));
                } else {
                    if (static_cast<int>(ci) >= f.q)
                        throw FieldTooSmall("construction C: not enough pending-dot values");
                    FamilyCellSpec spec;
                    spec.v = IdVector(bits);
                    spec.l1 = 1;
                    spec.fixed = 1;
                    spec.colors = {static_cast<Symbol>(ci)};
                    spec.d_rest = 2;
                    spec.shared_pivots = 1;
                    code.cells.push_back(make_family_cell(spec, f));
                }
            }
        }
    }
}

IdVector pfx(const std::string& s) { return IdVector::from_string(s); }

}  // namespace

CdcCode construction_C4(int n, int q, const Registry& reg) {
    if (n < 10) throw BadParams("construction_C4: n >= 10");
    const int nprime = n - 4;
    const int half_up = (nprime + 1) / 2;
    const FieldSpec& f = field_new(q);
    Factorization fact = factorize(nprime);

    CdcCode code;
    code.q = q;
    code.n = n;
    code.k = 4;
    code.d = 2;
    code.field = &f;
    code.meta = "construction=C4 n=" + std::to_string(n) + " q=" + std::to_string(q);

    {
        std::vector<Symbol> bits(n, 0);
        for (int i = 0; i < 4; ++i) bits[i] = 1;
        Cell mrd;
        mrd.v = IdVector(bits);
        mrd.code = fdmrd_auto(diagram_from_vector(mrd.v), 2, f);
        code.cells.push_back(std::move(mrd));
    }

    PrefixedSet a1{{pfx("1100"), pfx("0011")}, {half_up + 1}, false};
    PrefixedSet a2{{pfx("1001"), pfx("0110")}, {2}, false};
    PrefixedSet a3{{pfx("1010"), pfx("0101")}, {}, true};
    for (int i = 2; i <= family_upper_limit(nprime, (q + 1) / 2 + 1); ++i)
        a3.classes.push_back(half_up + i);
    for (int i = 3; i <= std::min(q / 2 + 2, half_up); ++i) a3.classes.push_back(i);
    std::sort(a3.classes.begin(), a3.classes.end());

    add_prefixed_cells(code, a1, fact, f);
    add_prefixed_cells(code, a2, fact, f);
    add_prefixed_cells(code, a3, fact, f);

    CdcCode base = prepend_zero_columns(reg.materialize(q, n - 4, 2, 4), 4);
    for (auto& cell : base.cells) code.cells.push_back(std::move(cell));
    return code;
}

BigInt size_C4(int n, int q, const BigInt& base) {
    if (n < 10) throw BadParams("size_C4: n >= 10");
    const int nprime = n - 4;
    auto term = [&](long coeff, long e) -> BigInt {
        if (coeff <= 0) return 0;
        return BigInt(coeff) * q_pow(q, e);
    };
    BigInt total = q_pow(q, 3 * (n - 4)) + base;
    const int lim1 = family_upper_limit(nprime, (q + 1) / 2 + 1);
    const int lim2 = std::min(q / 2 + 1, (nprime + 1) / 2 - 1);
    if (n % 2 == 0) {
        total += (q_pow(q, n - 4) + q_pow(q, n - 6)) *
                 (q_pow(q, 2 * (n - 6)) + term(n / 2 - 4, n - 7) + q_pow(q, n / 2 - 4));
        BigInt bracket = 0;
        for (int i = 2; i <= lim1; ++i)
            bracket += term(i, 2 * n - 2 * i - 10) + term((n - 6) / 2 - i, n - 2 * i - 5) +
                       q_pow(q, (n - 6) / 2 - i);
        for (int i = 1; i <= lim2; ++i)
            bracket += term(i, 2 * n - 2 * i - 11) + term((n - 6) / 2 - i, n - 2 * i - 6) +
                       q_pow(q, n - i - 6);
        total += (q_pow(q, n - 5) + q_pow(q, n - 6)) * bracket;
    } else {
        total += (q_pow(q, n - 4) + q_pow(q, n - 6)) *
                 (q_pow(q, 2 * (n - 6)) + term((n - 3) / 2, n - 8));
        BigInt bracket = 0;
        for (int i = 2; i <= lim1; ++i)
            bracket += term(i, 2 * n - 2 * i - 10) + term((n - 5) / 2 - i, n - 2 * i - 6);
        for (int i = 1; i <= lim2; ++i)
            bracket += term(i, 2 * n - 2 * i - 11) + term((n - 5) / 2 - i, n - 2 * i - 7);
        total += (q_pow(q, n - 5) + q_pow(q, n - 6)) * bracket;
    }
    return total;
}

CdcCode construction_C5(int n, int q, const Registry& reg) {
    if (n < 12) throw BadParams("construction_C5: n >= 12");
    const int nprime = n - 5;
    const int half_up = (nprime + 1) / 2;
    const FieldSpec& f = field_new(q);
    Factorization fact = factorize(nprime);

    CdcCode code;
    code.q = q;
    code.n = n;
    code.k = 5;
    code.d = 2;
    code.field = &f;
    code.meta = "construction=C5 n=" + std::to_string(n) + " q=" + std::to_string(q);

    {
        std::vector<Symbol> bits(n, 0);
        for (int i = 0; i < 5; ++i) bits[i] = 1;
        Cell mrd;
        mrd.v = IdVector(bits);
        mrd.code = fdmrd_auto(diagram_from_vector(mrd.v), 2, f);
        code.cells.push_back(std::move(mrd));
    }

    PrefixedSet a1{{pfx("11100"), pfx("10011")}, {half_up + 1}, false};
    PrefixedSet a2{{pfx("11010"), pfx("01101")}, {2}, false};
    PrefixedSet a3{{pfx("01110"), pfx("10101")}, {half_up + 2}, false};
    PrefixedSet a4{{pfx("00111"), pfx("11001")}, {3}, false};
    PrefixedSet a5{{pfx("10110"), pfx("01011")}, {}, true};
    for (int i = 3; i <= family_upper_limit(nprime, (q + 1) / 2 + 2); ++i)
        a5.classes.push_back(half_up + i);
    for (int i = 4; i <= std::min(q / 2 + 3, half_up); ++i) a5.classes.push_back(i);
    std::sort(a5.classes.begin(), a5.classes.end());

    add_prefixed_cells(code, a1, fact, f);
    add_prefixed_cells(code, a2, fact, f);
    add_prefixed_cells(code, a3, fact, f);
    add_prefixed_cells(code, a4, fact, f);
    add_prefixed_cells(code, a5, fact, f);

    CdcCode base = prepend_zero_columns(reg.materialize(q, n - 5, 2, 5), 5);
    for (auto& cell : base.cells) code.cells.push_back(std::move(cell));
    return code;
}

BigInt size_C5(int n, int q, const BigInt& base) {
    if (n < 12) throw BadParams("size_C5: n >= 12");
    const int nprime = n - 5;
    auto term = [&](long coeff, long e) -> BigInt {
        if (coeff <= 0) return 0;
        return BigInt(coeff) * q_pow(q, e);
    };
    BigInt total = q_pow(q, 4 * (n - 5)) + base;
    const int lim1 = family_upper_limit(nprime, (q + 1) / 2 + 2);
    const int lim2 = std::min(q / 2 + 2, (nprime + 1) / 2 - 1);
    if (n % 2 == 0) {
        total += (q_pow(q, 2 * n - 10) + q_pow(q, 2 * n - 14)) *
                 (q_pow(q, 2 * (n - 7)) + term((n - 8) / 2, n - 9));
        total += (q_pow(q, 2 * n - 11) + q_pow(q, 2 * n - 13)) *
                 (term((n - 8) / 2, n - 10) + q_pow(q, 2 * n - 15));
        total += (q_pow(q, 2 * n - 12) + q_pow(q, 2 * n - 13)) *
                 (BigInt(2) * q_pow(q, 2 * (n - 8)) + term((n - 10) / 2, n - 11));
        BigInt bracket = 0;
        for (int i = 3; i <= lim1; ++i)
            bracket += term(i, 2 * n - 2 * i - 12) + term((n - 6) / 2 - i, n - 2 * i - 7);
        for (int i = 2; i <= lim2; ++i)
            bracket += term(i, 2 * n - 2 * i - 13) + term((n - 6) / 2 - i, n - 2 * i - 8);
        total += (q_pow(q, 2 * n - 12) + q_pow(q, 2 * n - 14)) * bracket;
    } else {
        total += (q_pow(q, 2 * n - 10) + q_pow(q, 2 * n - 14)) *
                 (q_pow(q, 2 * n - 14) + term((n - 9) / 2, n - 8) + q_pow(q, (n - 9) / 2));
        total += (q_pow(q, 2 * n - 11) + q_pow(q, 2 * n - 13)) *
                 (term((n - 9) / 2, n - 9) + q_pow(q, 2 * n - 15) + q_pow(q, n - 8));
        total += (q_pow(q, 2 * n - 12) + q_pow(q, 2 * n - 13)) *
                 (q_pow(q, 2 * n - 16) + term((n - 11) / 2, n - 10) + q_pow(q, (n - 11) / 2));
        BigInt bracket = 0;
        for (int i = 3; i <= lim1; ++i)
            bracket += term(i, 2 * n - 2 * i - 12) + term((n - 7) / 2 - i, n - 2 * i - 6) +
                       q_pow(q, (n - 7) / 2 - i);
        for (int i = 2; i <= lim2; ++i)
            bracket += term(i, 2 * n - 2 * i - 13) + term((n - 7) / 2 - i, n - 2 * i - 7) +
                       q_pow(q, n - i - 7);
        total += (q_pow(q, 2 * n - 12) + q_pow(q, 2 * n - 14)) * bracket;
    }
    return total;
}

// ------------------------------------------------------------------ D

CdcCode construction_D(const CdcCode& base, int delta) {
    if (delta < base.k) throw DeltaTooSmall("construction_D: delta >= k required");
    const FieldSpec& f = *base.field;
    FdrmCode appendix = mrd_code(base.k, delta, base.d, f);

    CdcCode out;
    out.q = base.q;
    out.n = base.n + delta;
    out.k = base.k;
    out.d = base.d;
    out.field = base.field;
    out.meta = "construction=D delta=" + std::to_string(delta) + " base{" + base.meta + "}";

    for (const auto& cell : base.cells) {
        Cell nc;
        std::vector<Symbol> bits = cell.v.bits;
        bits.resize(out.n, 0);
        nc.v = IdVector(std::move(bits));
        const FerrersDiagram old = cell.code.diagram;
        const FerrersDiagram dia = diagram_from_vector(nc.v);
        nc.code.diagram = dia;
        nc.code.field = &f;
        nc.code.declared_d = base.d;
        // map old flat indices into the widened diagram (old dots first per row)
        auto old_len = [&](int j) {
            return j < old.m() ? old.row_lengths[j] : 0;
        };
        std::vector<int> remap;
        for (int j = 0; j < old.m(); ++j)
            for (int t = 0; t < old.row_lengths[j]; ++t) remap.push_back(dia.row_start(j) + t);
        nc.code.offset.assign(dia.dots(), 0);
        for (size_t i = 0; i < cell.code.offset.size(); ++i)
            nc.code.offset[remap[i]] = cell.code.offset[i];
        for (const auto& b : cell.code.basis) {
            std::vector<Symbol> v(dia.dots(), 0);
            for (size_t i = 0; i < b.size(); ++i) v[remap[i]] = b[i];
            nc.code.basis.push_back(std::move(v));
        }
        // appendix block: k x delta, rightmost delta columns of every row
        for (const auto& b : appendix.basis) {
            std::vector<Symbol> v(dia.dots(), 0);
            for (int j = 0; j < base.k; ++j)
                for (int c = 0; c < delta; ++c)
                    v[dia.row_start(j) + old_len(j) + c] = b[static_cast<size_t>(j) * delta + c];
            nc.code.basis.push_back(std::move(v));
        }
        if (cell.block) {
            PendingBlockInfo info = *cell.block;
            for (auto& idx : info.dot_idx) idx = remap[idx];
            nc.block = std::move(info);
        }
        out.cells.push_back(std::move(nc));
    }
    return out;
}

BigInt size_D(const BigInt& base_size, int k, int d, int q, int delta) {
    if (delta < k) throw DeltaTooSmall("size_D: delta >= k required");
    return base_size * q_pow(q, static_cast<long>(delta) * (k - d + 1));
}

// ------------------------------------------------------------------ multicomponent

CdcCode multicomponent(int n, int k, int d, int q) {
    if (d < 1 || d > k || n < k + d) throw BadParams("multicomponent: need 1 <= d <= k, n >= k+d");
    std::vector<IdVector> vectors;
    for (int i = 0; i * d + k <= n; ++i) {
        std::vector<Symbol> bits(n, 0);
        for (int t = 0; t < k; ++t) bits[i * d + t] = 1;
        vectors.emplace_back(std::move(bits));
    }
    CdcCode code = multilevel(vectors, d, q);
    code.meta = "construction=multicomponent n=" + std::to_string(n) + " k=" + std::to_string(k) +
                " d=" + std::to_string(d) + " q=" + std::to_string(q);
    return code;
}

BigInt size_MC(int n, int k, int d, int q) {
    if (d < 1 || d > k || n < k + d) throw BadParams("size_MC: need 1 <= d <= k, n >= k+d");
    BigInt total = 0;
    const int split = (n - 2 * k) / d;  // may be negative: first sum empty
    for (int i = 0; i <= split; ++i) total += q_pow(q, (k - d + 1) * (n - k - d * i));
    for (int i = std::max(0, split + 1); i * d + k <= n; ++i) {
        const long e = static_cast<long>(k) * (n - k + 1 - d * (i + 1));
        total += e >= 0 ? q_pow(q, e) : BigInt(1);  // ceil of a proper fraction
    }
    return total;
}

}  // namespace ssc
