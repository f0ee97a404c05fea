#include "ssc/subspace.hpp"

#include <algorithm>

namespace ssc {

SubspaceRep SubspaceRep::from_rref(MatGF rrefed) {
    SubspaceRep s;
    s.n = rrefed.cols;
    s.k = rrefed.rows;
    s.mat = std::move(rrefed);
    return s;
}

SubspaceRep SubspaceRep::from_span(const MatGF& any_basis) {
    RrefResult r = rref(any_basis);
    MatGF m(r.rank, any_basis.cols, *any_basis.field);
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < any_basis.cols; ++j) m.at(i, j) = r.mat.at(i, j);
    return from_rref(std::move(m));
}

bool SubspaceRep::operator<(const SubspaceRep& o) const {
    if (n != o.n) return n < o.n;
    if (k != o.k) return k < o.k;
    return mat.a < o.mat.a;
}

namespace {

std::vector<int> pivot_columns(const SubspaceRep& x) {
    std::vector<int> piv;
    for (int i = 0; i < x.k; ++i) {
        int c = 0;
        while (c < x.n && x.mat.at(i, c) == 0) ++c;
        piv.push_back(c);
    }
    return piv;
}

}  // namespace

IdVector identifying_vector(const SubspaceRep& x) {
    std::vector<Symbol> bits(x.n, 0);
    for (int c : pivot_columns(x))
        if (c < x.n) bits[c] = 1;
    return IdVector(std::move(bits));
}

Tableaux tableaux_of(const SubspaceRep& x) {
    const auto piv = pivot_columns(x);
    IdVector v = identifying_vector(x);
    Tableaux t;
    t.diagram = diagram_from_vector(v);
    t.values.reserve(t.diagram.dots());
    std::vector<bool> is_piv(x.n, false);
    for (int c : piv) is_piv[c] = true;
    for (int i = 0; i < static_cast<int>(t.diagram.m()); ++i) {
        for (int c = piv[i] + 1; c < x.n; ++c)
            if (!is_piv[c]) t.values.push_back(x.mat.at(i, c));
    }
    t.field = x.mat.field;
    return t;
}

SubspaceRep subspace_of(const IdVector& v, const Tableaux& t) {
    if (!(t.diagram == diagram_from_vector(v)))
        throw DiagramMismatch("subspace_of: diagram does not match identifying vector");
    if (!t.field) throw BadArgs("subspace_of: tableaux has no field");
    return lift(v, t.values, *t.field);
}

SubspaceRep lift(const IdVector& v, const std::vector<Symbol>& values, const FieldSpec& f) {
    const FerrersDiagram d = diagram_from_vector(v);
    if (static_cast<int>(values.size()) != d.dots())
        throw DiagramMismatch("lift: wrong number of diagram values");
    const auto ones = v.one_positions();
    const int k = static_cast<int>(ones.size());
    MatGF m(k, v.n(), f);
    std::vector<bool> is_piv(v.n(), false);
    for (int c : ones) is_piv[c] = true;
    size_t idx = 0;
    for (int i = 0; i < k; ++i) {
        m.at(i, ones[i]) = 1;
        if (i < d.m()) {
            for (int c = ones[i] + 1; c < v.n(); ++c)
                if (!is_piv[c]) m.at(i, c) = values[idx++];
        }
    }
    return SubspaceRep::from_rref(std::move(m));
}

int d_S(const SubspaceRep& x, const SubspaceRep& y) {
    if (x.n != y.n || x.mat.field->q != y.mat.field->q)
        throw AmbientMismatch("d_S: different ambient spaces");
    const int inter = x.k + y.k - stack_rank(x.mat, y.mat);
    return x.k + y.k - 2 * inter;
}

int d_I(const SubspaceRep& x, const SubspaceRep& y) {
    if (x.n != y.n || x.mat.field->q != y.mat.field->q)
        throw AmbientMismatch("d_I: different ambient spaces");
    const int inter = x.k + y.k - stack_rank(x.mat, y.mat);
    return std::max(x.k, y.k) - inter;
}

}  // namespace ssc
