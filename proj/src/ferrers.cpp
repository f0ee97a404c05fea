#include "ssc/ferrers.hpp"

#include <algorithm>
#include <numeric>

namespace ssc {

IdVector IdVector::from_string(const std::string& s) {
    std::vector<Symbol> b;
    b.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw ParseError("identifying vector must be binary");
        b.push_back(c == '1' ? 1 : 0);
    }
    return IdVector(std::move(b));
}

int IdVector::weight() const {
    int w = 0;
    for (Symbol b : bits) w += b;
    return w;
}

std::vector<int> IdVector::one_positions() const {
    std::vector<int> p;
    for (int i = 0; i < n(); ++i)
        if (bits[i]) p.push_back(i);
    return p;
}

std::string IdVector::str() const {
    std::string s(bits.size(), '0');
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) s[i] = '1';
    return s;
}

int hamming_distance(const IdVector& u, const IdVector& v) {
    if (u.n() != v.n()) throw LengthMismatch("hamming_distance");
    int d = 0;
    for (int i = 0; i < u.n(); ++i) d += (u.bits[i] != v.bits[i]);
    return d;
}

int asym_distance(const IdVector& u, const IdVector& v) {
    if (u.n() != v.n()) throw LengthMismatch("asym_distance");
    int nuv = 0, nvu = 0;
    for (int i = 0; i < u.n(); ++i) {
        nuv += (u.bits[i] == 1 && v.bits[i] == 0);
        nvu += (v.bits[i] == 1 && u.bits[i] == 0);
    }
    return std::max(nuv, nvu);
}

FerrersDiagram::FerrersDiagram(std::vector<int> rows) : row_lengths(std::move(rows)) {
    while (!row_lengths.empty() && row_lengths.back() == 0) row_lengths.pop_back();
    for (size_t j = 0; j + 1 < row_lengths.size(); ++j)
        if (row_lengths[j] < row_lengths[j + 1])
            throw ShapeMismatch("row lengths must be non-increasing");
    for (int len : row_lengths)
        if (len < 0) throw ShapeMismatch("negative row length");
}

int FerrersDiagram::dots() const {
    return std::accumulate(row_lengths.begin(), row_lengths.end(), 0);
}

int FerrersDiagram::row_start(int j) const {
    int s = 0;
    for (int i = 0; i < j; ++i) s += row_lengths[i];
    return s;
}

std::vector<int> free_columns_of_row(const IdVector& v, int row) {
    const auto ones = v.one_positions();
    std::vector<bool> is_piv(v.n(), false);
    for (int c : ones) is_piv[c] = true;
    std::vector<int> cols;
    for (int c = ones[row] + 1; c < v.n(); ++c)
        if (!is_piv[c]) cols.push_back(c);
    return cols;
}

FerrersDiagram diagram_from_vector(const IdVector& v) {
    const auto ones = v.one_positions();
    if (ones.empty()) throw ZeroWeight("diagram_from_vector");
    const int n = v.n();
    const int k = static_cast<int>(ones.size());
    std::vector<int> rows(k);
    for (int j = 0; j < k; ++j) {
        // zeros strictly to the right of the j-th one
        rows[j] = (n - 1 - ones[j]) - (k - 1 - j);
    }
    return FerrersDiagram(rows);
}

int theorem1_bound(const FerrersDiagram& f, int d) {
    if (d < 1) throw BadArgs("theorem1_bound: d >= 1");
    int best = -1;
    for (int i = 0; i < d; ++i) {
        const int cut_cols = d - 1 - i;
        int w = 0;
        for (int j = i; j < f.m(); ++j) w += std::max(0, f.row_lengths[j] - cut_cols);
        if (best < 0 || w < best) best = w;
    }
    return best;
}

int pending_prefix(const FerrersDiagram& f, int d) {
    const int base = theorem1_bound(f, d);
    int best = 0;
    for (int l1 = 1; l1 < f.ell(); ++l1) {
        if (theorem1_bound(drop_left_columns(f, l1), d) == base) best = l1;
    }
    return best;
}

bool is_quasi_pending(const FerrersDiagram& f, int m1, int l1) {
    if (m1 < 1 || m1 >= f.m() || l1 >= f.ell()) return false;
    const int below = f.row_lengths[m1];  // (m1+1)-st row, 1-based
    return below < f.row_lengths[m1 - 1] && below <= f.ell() - l1;
}

FerrersDiagram drop_left_columns(const FerrersDiagram& f, int cut) {
    if (cut < 0 || cut > f.ell()) throw BadArgs("drop_left_columns");
    const int keep = f.ell() - cut;
    std::vector<int> rows;
    for (int len : f.row_lengths) rows.push_back(std::min(len, keep));
    return FerrersDiagram(rows);
}

FerrersDiagram take_left_columns(const FerrersDiagram& f, int cut) {
    if (cut < 0 || cut > f.ell()) throw BadArgs("take_left_columns");
    const int keep = f.ell() - cut;
    std::vector<int> rows;
    for (int len : f.row_lengths) rows.push_back(std::max(0, len - keep));
    return FerrersDiagram(rows);
}

Conjugate conjugate(const FerrersDiagram& f) {
    const int L = f.ell(), M = f.m();
    // column heights, c = 0 is the leftmost of the L columns
    std::vector<int> height(L, 0);
    for (int c = 0; c < L; ++c) {
        int h = 0;
        for (int j = 0; j < M; ++j)
            if (f.row_lengths[j] >= L - c) ++h;
        height[c] = h;
    }
    std::vector<int> rows(L);
    for (int c = 0; c < L; ++c) rows[c] = height[L - 1 - c];
    Conjugate res;
    res.diagram = FerrersDiagram(rows);
    res.dot_map.assign(f.dots(), -1);
    // Transpose then reverse both axes keeps the shape top-right-aligned and
    // is a plain row/column permutation of the bounding rectangle, so ranks
    // of fillings are preserved. Dot (j, c) of f lands in conjugate row
    // L-1-c at within-row offset h_c-1-j.
    for (int j = 0, idx = 0; j < M; ++j) {
        for (int t = 0; t < f.row_lengths[j]; ++t, ++idx) {
            const int c = f.row_left_col(j) + t;  // global column in f
            const int cj = L - 1 - c;             // conjugate row index
            const int off = res.diagram.row_lengths[cj] - 1 - j;
            res.dot_map[idx] = res.diagram.row_start(cj) + off;
        }
    }
    return res;
}

}  // namespace ssc
