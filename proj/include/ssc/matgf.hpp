#pragma once

#include <cstdint>
#include <vector>

#include "ssc/field.hpp"

namespace ssc {

// Dense row-major matrix over GF(q). Treated as immutable by everything above
// this layer; the in-place mutators exist for construction and elimination.
struct MatGF {
    int rows = 0;
    int cols = 0;
    const FieldSpec* field = nullptr;
    std::vector<Symbol> a;

    MatGF() = default;
    MatGF(int r, int c, const FieldSpec& f) : rows(r), cols(c), field(&f), a(static_cast<size_t>(r) * c, 0) {}

    Symbol at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    Symbol& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const MatGF& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

MatGF mat_from(const FieldSpec& f, std::vector<std::vector<int>> rows);
MatGF identity(const FieldSpec& f, int n);
MatGF vstack(const MatGF& top, const MatGF& bottom);
MatGF transpose(const MatGF& m);
MatGF sub(const MatGF& a, const MatGF& b);

struct RrefResult {
    MatGF mat;
    std::vector<int> pivots;  // ascending pivot column indices
    int rank = 0;
};

RrefResult rref(const MatGF& m);
int rank_of(const MatGF& m);

// Basis of {x : Mx = 0}, one vector per free column of the RREF.
std::vector<std::vector<Symbol>> kernel_basis(const MatGF& m);

// rank of [A; B]; DimMismatch if column counts differ.
int stack_rank(const MatGF& a, const MatGF& b);

// Bit-packed GF(2) elimination kernel for matrices with <= 64 columns.
// One uint64_t per row, bit c = entry in column c.
struct PackedGF2 {
    int rows = 0;
    int cols = 0;
    std::uint64_t r[64];
};

PackedGF2 pack_gf2(const MatGF& m);
int packed_rank(PackedGF2 m);
int packed_stack_rank(const PackedGF2& a, const PackedGF2& b);

}  // namespace ssc
