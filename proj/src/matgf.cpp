#include "ssc/matgf.hpp"

namespace ssc {

MatGF mat_from(const FieldSpec& f, std::vector<std::vector<int>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    MatGF m(r, c, f);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw DimMismatch("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<Symbol>(rows[i][j]);
    }
    return m;
}

MatGF identity(const FieldSpec& f, int n) {
    MatGF m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatGF vstack(const MatGF& top, const MatGF& bottom) {
    if (top.cols != bottom.cols) throw DimMismatch("vstack: column mismatch");
    MatGF m(top.rows + bottom.rows, top.cols, *top.field);
    m.a = top.a;
    m.a.insert(m.a.end(), bottom.a.begin(), bottom.a.end());
    return m;
}

MatGF transpose(const MatGF& m) {
    MatGF t(m.cols, m.rows, *m.field);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

MatGF sub(const MatGF& a, const MatGF& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw DimMismatch("sub: shape mismatch");
    MatGF r(a.rows, a.cols, *a.field);
    for (size_t i = 0; i < a.a.size(); ++i) r.a[i] = a.field->sub(a.a[i], b.a[i]);
    return r;
}

RrefResult rref(const MatGF& m) {
    RrefResult res;
    res.mat = m;
    MatGF& w = res.mat;
    const FieldSpec& f = *m.field;
    int lead = 0;
    for (int col = 0; col < w.cols && lead < w.rows; ++col) {
        int piv = -1;
        for (int r = lead; r < w.rows; ++r)
            if (w.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = 0; c < w.cols; ++c) std::swap(w.at(piv, c), w.at(lead, c));
        const Symbol s = f.inv(w.at(lead, col));
        if (s != 1)
            for (int c = col; c < w.cols; ++c) w.at(lead, c) = f.mul(s, w.at(lead, c));
        for (int r = 0; r < w.rows; ++r) {
            if (r == lead) continue;
            const Symbol v = w.at(r, col);
            if (v == 0) continue;
            for (int c = col; c < w.cols; ++c)
                w.at(r, c) = f.sub(w.at(r, c), f.mul(v, w.at(lead, c)));
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = static_cast<int>(res.pivots.size());
    return res;
}

std::vector<std::vector<Symbol>> kernel_basis(const MatGF& m) {
    const FieldSpec& f = *m.field;
    RrefResult r = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : r.pivots) is_piv[c] = true;
    std::vector<std::vector<Symbol>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<Symbol> x(m.cols, 0);
        x[free] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i)
            x[r.pivots[i]] = f.neg(r.mat.at(static_cast<int>(i), free));
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

int generic_rank(MatGF w) {
    const FieldSpec& f = *w.field;
    int lead = 0;
    for (int col = 0; col < w.cols && lead < w.rows; ++col) {
        int piv = -1;
        for (int r = lead; r < w.rows; ++r)
            if (w.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = col; c < w.cols; ++c) std::swap(w.at(piv, c), w.at(lead, c));
        const Symbol s = f.inv(w.at(lead, col));
        // eliminate below only; enough for rank
        for (int r = lead + 1; r < w.rows; ++r) {
            const Symbol v = w.at(r, col);
            if (v == 0) continue;
            const Symbol fac = f.mul(v, s);
            for (int c = col; c < w.cols; ++c)
                w.at(r, c) = f.sub(w.at(r, c), f.mul(fac, w.at(lead, c)));
        }
        ++lead;
    }
    return lead;
}

}  // namespace

int rank_of(const MatGF& m) {
    if (m.field->q == 2 && m.cols <= 64) return packed_rank(pack_gf2(m));
    return generic_rank(m);
}

int stack_rank(const MatGF& a, const MatGF& b) {
    if (a.cols != b.cols) throw DimMismatch("stack_rank: column mismatch");
    if (a.field->q == 2 && a.cols <= 64)
        return packed_stack_rank(pack_gf2(a), pack_gf2(b));
    return generic_rank(vstack(a, b));
}

PackedGF2 pack_gf2(const MatGF& m) {
    PackedGF2 p;
    p.rows = m.rows;
    p.cols = m.cols;
    for (int i = 0; i < m.rows; ++i) {
        std::uint64_t w = 0;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j)) w |= (std::uint64_t{1} << j);
        p.r[i] = w;
    }
    return p;
}

int packed_rank(PackedGF2 m) {
    int rank = 0;
    for (int i = 0; i < m.rows; ++i) {
        std::uint64_t row = m.r[i];
        // not yet reduced against pivots below rank; standard forward sweep
        for (int j = 0; j < rank; ++j) {
            std::uint64_t pw = m.r[j];
            if (row & (pw & -pw)) row ^= pw;
        }
        if (row) {
            m.r[rank++] = row;
        }
    }
    return rank;
}

int packed_stack_rank(const PackedGF2& a, const PackedGF2& b) {
    PackedGF2 s;
    s.cols = a.cols;
    s.rows = a.rows + b.rows;
    for (int i = 0; i < a.rows; ++i) s.r[i] = a.r[i];
    for (int i = 0; i < b.rows; ++i) s.r[a.rows + i] = b.r[i];
    return packed_rank(s);
}

}  // namespace ssc
