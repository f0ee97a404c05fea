#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ssc/ferrers.hpp"
#include "ssc/matgf.hpp"

namespace ssc {

// Affine Ferrers-diagram rank-metric code: offset + linear span of basis.
// Codeword values are flat vectors over the diagram dots (row-major, top row
// first). declared_d is the minimum rank distance of the linear part.
struct FdrmCode {
    FerrersDiagram diagram;
    const FieldSpec* field = nullptr;
    std::vector<Symbol> offset;               // size = diagram.dots()
    std::vector<std::vector<Symbol>> basis;   // each size = diagram.dots()
    int declared_d = 1;

    int rho() const { return static_cast<int>(basis.size()); }
    std::uint64_t size() const;  // q^rho; throws TooLarge if it overflows 2^62

    // codeword for a message index; digit t of idx (base q) multiplies basis[t]
    std::vector<Symbol> codeword(std::uint64_t idx) const;
    void for_each_codeword(const std::function<void(const std::vector<Symbol>&)>& fn) const;
};

// Flat diagram values -> dense m x ell matrix (right-aligned rows).
MatGF values_to_matrix(const FerrersDiagram& d, const std::vector<Symbol>& values, const FieldSpec& f);

// rank of a flat filling, without materializing the dense matrix for GF(2)
int values_rank(const FerrersDiagram& d, const std::vector<Symbol>& values, const FieldSpec& f);

// Exact minimum nonzero rank over the linear span (offset irrelevant).
// Sentinel for the zero code: min(m, ell) + 1. Budget is the maximum number
// of span elements to enumerate; TooLarge beyond it.
int min_rank_distance(const FdrmCode& c, std::uint64_t budget = (1ull << 22));

// Gabidulin-style MRD code on the full m x l rectangle, min rank distance
// exactly d, rho = max(m,l) * (min(m,l) - d + 1). BadDistance unless
// 1 <= d <= min(m,l).
FdrmCode mrd_code(int m, int l, int d, const FieldSpec& f);

// FDMRD code with d = 2 on an arbitrary diagram: subcode of an MRD rectangle
// code forced to zero outside F (wide orientation). rho = theorem1_bound(F,2),
// certified; ConstructionFailed if the certificate fails.
FdrmCode fdmrd_d2(const FerrersDiagram& f, const FieldSpec& fld);

// Diagrams whose first d-1 rows are full (length ell) in the wide orientation:
// MRD-subcode construction, rho = theorem1_bound(F,d) = dots below row d-1.
// ShapeMismatch if the shape does not qualify.
FdrmCode fdmrd_rows(const FerrersDiagram& f, int d, const FieldSpec& fld);

// Staircase shapes: row j has >= x more dots than row j+1 and the last row
// has exactly x dots. Code of size q^x, min rank distance m (the row count):
// codeword for w fills the first x dots of every row with w.
FdrmCode fdmrd_staircase(const FerrersDiagram& f, int x, const FieldSpec& fld);

// Diagrams whose last two rows are equal (= r): MRD(m, r, d) embedded in the
// rightmost r columns, zeros elsewhere. Attains theorem1_bound for the
// shapes used by the recursive construction (checked; throws
// ConstructionFailed if the bound is not met).
FdrmCode fdmrd_rect_embed(const FerrersDiagram& f, int d, const FieldSpec& fld);

// Dispatch to whichever of the above applies for the requested distance.
FdrmCode fdmrd_auto(const FerrersDiagram& f, int d, const FieldSpec& fld);

}  // namespace ssc
