#include "ssc/fdrm.hpp"

#include <algorithm>

#include "ssc/extfield.hpp"

namespace ssc {

std::uint64_t FdrmCode::size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < rho(); ++i) {
        if (s > (std::uint64_t{1} << 62) / field->q) throw TooLarge("FdrmCode::size overflow");
        s *= field->q;
    }
    return s;
}

std::vector<Symbol> FdrmCode::codeword(std::uint64_t idx) const {
    std::vector<Symbol> v = offset;
    for (int t = 0; t < rho(); ++t) {
        const Symbol digit = static_cast<Symbol>(idx % field->q);
        idx /= field->q;
        if (digit)
            for (size_t i = 0; i < v.size(); ++i)
                v[i] = field->add(v[i], field->mul(digit, basis[t][i]));
    }
    return v;
}

void FdrmCode::for_each_codeword(const std::function<void(const std::vector<Symbol>&)>& fn) const {
    // mixed-radix odometer: one basis addition per carry position
    const std::uint64_t total = size();
    std::vector<Symbol> cur = offset;
    std::vector<int> digits(rho(), 0);
    fn(cur);
    for (std::uint64_t i = 1; i < total; ++i) {
        int t = 0;
        for (;; ++t) {
            for (size_t j = 0; j < cur.size(); ++j) cur[j] = field->add(cur[j], basis[t][j]);
            if (++digits[t] < field->q) break;
            digits[t] = 0;  // the q additions of basis[t] cancel
        }
        fn(cur);
    }
}

MatGF values_to_matrix(const FerrersDiagram& d, const std::vector<Symbol>& values, const FieldSpec& f) {
    MatGF m(d.m(), d.ell(), f);
    size_t idx = 0;
    for (int j = 0; j < d.m(); ++j) {
        const int left = d.row_left_col(j);
        for (int t = 0; t < d.row_lengths[j]; ++t) m.at(j, left + t) = values[idx++];
    }
    return m;
}

int values_rank(const FerrersDiagram& d, const std::vector<Symbol>& values, const FieldSpec& f) {
    if (f.q == 2 && d.ell() <= 64) {
        PackedGF2 p;
        p.rows = d.m();
        p.cols = d.ell();
        size_t idx = 0;
        for (int j = 0; j < d.m(); ++j) {
            std::uint64_t w = 0;
            const int left = d.row_left_col(j);
            for (int t = 0; t < d.row_lengths[j]; ++t, ++idx)
                if (values[idx]) w |= std::uint64_t{1} << (left + t);
            p.r[j] = w;
        }
        return packed_rank(p);
    }
    return rank_of(values_to_matrix(d, values, f));
}

int min_rank_distance(const FdrmCode& c, std::uint64_t budget) {
    const int sentinel = std::min(c.diagram.m(), c.diagram.ell()) + 1;
    if (c.rho() == 0) return sentinel;
    std::uint64_t total = 1;
    for (int i = 0; i < c.rho(); ++i) {
        total *= c.field->q;
        if (total > budget) throw TooLarge("min_rank_distance: span too large");
    }
    int best = sentinel;
    // enumerate the span (offset ignored) with the same odometer
    FdrmCode span = c;
    span.offset.assign(c.diagram.dots(), 0);
    bool first = true;
    span.for_each_codeword([&](const std::vector<Symbol>& v) {
        if (first) {  // zero codeword
            first = false;
            return;
        }
        const int r = values_rank(c.diagram, v, *c.field);
        if (r < best) best = r;
    });
    return best;
}

FdrmCode mrd_code(int m, int l, int d, const FieldSpec& f) {
    if (m < 1 || l < 1 || d < 1 || d > std::min(m, l)) throw BadDistance("mrd_code");
    const int R = std::max(m, l), C = std::min(m, l);
    const bool transposed = (m < l);  // built tall R x C, emitted m x l
    ExtField E(f, R);

    // evaluation points 1, alpha, ..., alpha^{C-1}; Frobenius iterates cached
    std::vector<ExtField::Elem> g(C);
    g[0] = E.one();
    for (int j = 1; j < C; ++j) g[j] = E.mul(g[j - 1], E.gen());
    std::vector<std::vector<ExtField::Elem>> gq(C - d + 1, std::vector<ExtField::Elem>(C));
    for (int j = 0; j < C; ++j) {
        gq[0][j] = g[j];
        for (int i = 1; i <= C - d; ++i) gq[i][j] = E.pow_q(gq[i - 1][j]);
    }
    std::vector<ExtField::Elem> alpha_pow(R);
    alpha_pow[0] = E.one();
    for (int t = 1; t < R; ++t) alpha_pow[t] = E.mul(alpha_pow[t - 1], E.gen());

    FdrmCode code;
    code.field = &f;
    code.diagram = FerrersDiagram(std::vector<int>(m, l));
    code.offset.assign(static_cast<size_t>(m) * l, 0);
    code.declared_d = d;
    for (int i = 0; i <= C - d; ++i) {
        for (int t = 0; t < R; ++t) {
            // tall R x C matrix: column j = coords of alpha^t * g_j^{q^i}
            std::vector<Symbol> flat(static_cast<size_t>(m) * l, 0);
            for (int j = 0; j < C; ++j) {
                ExtField::Elem e = E.mul(alpha_pow[t], gq[i][j]);
                for (int r = 0; r < R; ++r) {
                    const Symbol s = e[r];
                    if (!s) continue;
                    if (transposed)
                        flat[static_cast<size_t>(j) * l + r] = s;  // emitted (j, r) of m x l
                    else
                        flat[static_cast<size_t>(r) * l + j] = s;
                }
            }
            code.basis.push_back(std::move(flat));
        }
    }
    return code;
}

namespace {

FdrmCode zero_code(const FerrersDiagram& f, int d, const FieldSpec& fld) {
    FdrmCode c;
    c.diagram = f;
    c.field = &fld;
    c.offset.assign(f.dots(), 0);
    c.declared_d = d;
    return c;
}

// Subcode of the MRD(m, ell, d) rectangle code vanishing outside F.
// Requires the wide orientation (ell >= m) and positive target dimension.
FdrmCode mrd_subcode(const FerrersDiagram& f, int d, const FieldSpec& fld) {
    const int m = f.m(), l = f.ell();
    FdrmCode big = mrd_code(m, l, d, fld);
    // constraint matrix over the outside positions
    std::vector<std::pair<int, int>> outside;
    for (int j = 0; j < m; ++j)
        for (int c = 0; c < f.row_left_col(j); ++c) outside.emplace_back(j, c);
    MatGF cons(static_cast<int>(outside.size()), big.rho(), fld);
    for (size_t p = 0; p < outside.size(); ++p) {
        const size_t flat = static_cast<size_t>(outside[p].first) * l + outside[p].second;
        for (int t = 0; t < big.rho(); ++t) cons.at(static_cast<int>(p), t) = big.basis[t][flat];
    }
    FdrmCode sub = zero_code(f, d, fld);
    for (const auto& x : kernel_basis(cons)) {
        std::vector<Symbol> dense(static_cast<size_t>(m) * l, 0);
        for (int t = 0; t < big.rho(); ++t) {
            if (!x[t]) continue;
            for (size_t i = 0; i < dense.size(); ++i)
                dense[i] = fld.add(dense[i], fld.mul(x[t], big.basis[t][i]));
        }
        std::vector<Symbol> flat(f.dots());
        size_t idx = 0;
        for (int j = 0; j < m; ++j)
            for (int c = f.row_left_col(j); c < l; ++c) flat[idx++] = dense[static_cast<size_t>(j) * l + c];
        sub.basis.push_back(std::move(flat));
    }
    return sub;
}

FdrmCode map_dots(const FdrmCode& src, const FerrersDiagram& target, const std::vector<int>& dot_map) {
    // dot_map[i] = index in src's diagram of target's dot i ... inverse mapping below
    FdrmCode out;
    out.diagram = target;
    out.field = src.field;
    out.declared_d = src.declared_d;
    out.offset.assign(target.dots(), 0);
    for (int i = 0; i < target.dots(); ++i) out.offset[i] = src.offset[dot_map[i]];
    for (const auto& b : src.basis) {
        std::vector<Symbol> v(target.dots());
        for (int i = 0; i < target.dots(); ++i) v[i] = b[dot_map[i]];
        out.basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace

FdrmCode fdmrd_d2(const FerrersDiagram& f, const FieldSpec& fld) {
    if (f.dots() == 0) return zero_code(f, 2, fld);
    const int bound = theorem1_bound(f, 2);
    if (bound == 0) return zero_code(f, 2, fld);
    FdrmCode sub;
    if (f.m() > f.ell()) {
        Conjugate cj = conjugate(f);
        FdrmCode on_conj = mrd_subcode(cj.diagram, 2, fld);
        // dot i of f maps to cj.dot_map[i] in the conjugate
        sub = map_dots(on_conj, f, cj.dot_map);
    } else {
        sub = mrd_subcode(f, 2, fld);
    }
    if (sub.rho() != bound) throw ConstructionFailed("fdmrd_d2: bound not attained");
    return sub;
}

FdrmCode fdmrd_rows(const FerrersDiagram& f, int d, const FieldSpec& fld) {
    if (d < 1) throw BadArgs("fdmrd_rows: d >= 1");
    const int bound = theorem1_bound(f, d);
    if (bound == 0) return zero_code(f, d, fld);
    if (f.ell() < f.m()) throw ShapeMismatch("fdmrd_rows: wide orientation required");
    for (int j = 0; j < d - 1; ++j)
        if (j >= f.m() || f.row_lengths[j] != f.ell())
            throw ShapeMismatch("fdmrd_rows: first d-1 rows must be full");
    FdrmCode sub = mrd_subcode(f, d, fld);
    if (sub.rho() != bound) throw ConstructionFailed("fdmrd_rows: bound not attained");
    return sub;
}

FdrmCode fdmrd_staircase(const FerrersDiagram& f, int x, const FieldSpec& fld) {
    if (x < 0) throw BadArgs("fdmrd_staircase: x >= 0");
    FdrmCode c = zero_code(f, std::max(1, f.m()), fld);
    if (x == 0) return c;
    for (int j = 0; j + 1 < f.m(); ++j)
        if (f.row_lengths[j] - f.row_lengths[j + 1] < x)
            throw ShapeMismatch("fdmrd_staircase: rows must drop by at least x");
    if (f.m() == 0 || f.row_lengths[f.m() - 1] != x)
        throw ShapeMismatch("fdmrd_staircase: last row must have exactly x dots");
    for (int t = 0; t < x; ++t) {
        std::vector<Symbol> v(f.dots(), 0);
        for (int j = 0; j < f.m(); ++j) v[f.row_start(j) + t] = 1;
        c.basis.push_back(std::move(v));
    }
    c.declared_d = f.m();
    return c;
}

FdrmCode fdmrd_rect_embed(const FerrersDiagram& f, int d, const FieldSpec& fld) {
    const int m = f.m();
    if (m < 2) throw ShapeMismatch("fdmrd_rect_embed: needs at least two rows");
    const int r = f.row_lengths[m - 1];
    if (f.row_lengths[m - 2] != r) throw ShapeMismatch("fdmrd_rect_embed: last two rows must be equal");
    const int bound = theorem1_bound(f, d);
    if (r == 0 || d > std::min(m, r)) {
        if (bound != 0) throw ConstructionFailed("fdmrd_rect_embed: bound not attained");
        return zero_code(f, d, fld);
    }
    FdrmCode rect = mrd_code(m, r, d, fld);
    FdrmCode out = zero_code(f, d, fld);
    for (const auto& b : rect.basis) {
        std::vector<Symbol> v(f.dots(), 0);
        for (int j = 0; j < m; ++j)
            for (int t = 0; t < r; ++t)
                v[f.row_start(j) + f.row_lengths[j] - r + t] = b[static_cast<size_t>(j) * r + t];
        out.basis.push_back(std::move(v));
    }
    if (out.rho() != bound) throw ConstructionFailed("fdmrd_rect_embed: bound not attained");
    return out;
}

FdrmCode fdmrd_auto(const FerrersDiagram& f, int d, const FieldSpec& fld) {
    if (d < 1) throw BadArgs("fdmrd_auto: d >= 1");
    if (f.dots() == 0 || theorem1_bound(f, d) == 0) return zero_code(f, d, fld);
    if (d == 1) {
        FdrmCode c = zero_code(f, 1, fld);
        for (int i = 0; i < f.dots(); ++i) {
            std::vector<Symbol> v(f.dots(), 0);
            v[i] = 1;
            c.basis.push_back(std::move(v));
        }
        return c;
    }
    if (d == 2) return fdmrd_d2(f, fld);
    auto full_rows = [&](const FerrersDiagram& g) {
        if (g.ell() < g.m()) return false;
        for (int j = 0; j < d - 1; ++j)
            if (j >= g.m() || g.row_lengths[j] != g.ell()) return false;
        return true;
    };
    auto last_two_equal = [](const FerrersDiagram& g) {
        return g.m() >= 2 && g.row_lengths[g.m() - 1] == g.row_lengths[g.m() - 2];
    };
    if (full_rows(f)) return fdmrd_rows(f, d, fld);
    if (last_two_equal(f)) {
        try {
            return fdmrd_rect_embed(f, d, fld);
        } catch (const ConstructionFailed&) {
        }
    }
    Conjugate cj = conjugate(f);
    if (full_rows(cj.diagram)) return map_dots(fdmrd_rows(cj.diagram, d, fld), f, cj.dot_map);
    if (last_two_equal(cj.diagram)) {
        try {
            return map_dots(fdmrd_rect_embed(cj.diagram, d, fld), f, cj.dot_map);
        } catch (const ConstructionFailed&) {
        }
    }
    throw ConstructionFailed("fdmrd_auto: no attaining construction for this shape");
}

}  // namespace ssc
