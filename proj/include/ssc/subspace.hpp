#pragma once

#include "ssc/ferrers.hpp"
#include "ssc/matgf.hpp"

namespace ssc {

// Ferrers tableaux: diagram dots filled with field symbols, row-major,
// top row first, left to right within each row.
struct Tableaux {
    FerrersDiagram diagram;
    std::vector<Symbol> values;
    const FieldSpec* field = nullptr;

    bool operator==(const Tableaux& o) const { return diagram == o.diagram && values == o.values; }
};

// A k-dimensional subspace of F_q^n held as its k x n RREF basis matrix.
struct SubspaceRep {
    int n = 0;
    int k = 0;
    MatGF mat;  // k x n, RREF, rank k

    static SubspaceRep from_rref(MatGF rrefed);               // trusts the caller
    static SubspaceRep from_span(const MatGF& any_basis);     // canonicalizes, drops null rows

    bool operator==(const SubspaceRep& o) const { return n == o.n && mat == o.mat; }
    bool operator<(const SubspaceRep& o) const;
};

IdVector identifying_vector(const SubspaceRep& x);
Tableaux tableaux_of(const SubspaceRep& x);
SubspaceRep subspace_of(const IdVector& v, const Tableaux& t);

// lift: identifying vector + diagram filling -> subspace (values row-major).
SubspaceRep lift(const IdVector& v, const std::vector<Symbol>& values, const FieldSpec& f);

int d_S(const SubspaceRep& x, const SubspaceRep& y);
int d_I(const SubspaceRep& x, const SubspaceRep& y);

// e_i (0-based) membership and coordinate-deletion puncturing live in projective.

}  // namespace ssc
