#pragma once

#include <string>
#include <vector>

#include "ssc/field.hpp"

namespace ssc {

// Binary identifying vector of length n; weight() is the subspace dimension.
struct IdVector {
    std::vector<Symbol> bits;

    IdVector() = default;
    explicit IdVector(std::vector<Symbol> b) : bits(std::move(b)) {}
    static IdVector from_string(const std::string& s);

    int n() const { return static_cast<int>(bits.size()); }
    int weight() const;
    std::vector<int> one_positions() const;  // 0-based
    std::string str() const;

    bool operator==(const IdVector& o) const { return bits == o.bits; }
    bool operator<(const IdVector& o) const { return bits < o.bits; }
};

int hamming_distance(const IdVector& u, const IdVector& v);
int asym_distance(const IdVector& u, const IdVector& v);

// Top-right-aligned dot pattern: row_lengths non-increasing, top row first.
// Zero-length rows are dropped. Row j (0-based) occupies the rightmost
// row_lengths[j] of the ell() columns.
struct FerrersDiagram {
    std::vector<int> row_lengths;

    FerrersDiagram() = default;
    explicit FerrersDiagram(std::vector<int> rows);

    int m() const { return static_cast<int>(row_lengths.size()); }  // dots in rightmost column
    int ell() const { return row_lengths.empty() ? 0 : row_lengths[0]; }  // dots in top row
    int dots() const;
    int row_start(int j) const;  // flat index of row j's first (leftmost) dot

    // leftmost column index (0-based, within the ell() columns) of row j
    int row_left_col(int j) const { return ell() - row_lengths[j]; }

    bool operator==(const FerrersDiagram& o) const { return row_lengths == o.row_lengths; }
};

FerrersDiagram diagram_from_vector(const IdVector& v);

// Non-pivot matrix columns to the right of the row's pivot, ascending; these
// are the ambient columns of the row's diagram dots, left to right.
std::vector<int> free_columns_of_row(const IdVector& v, int row);

// Dimension bound for diagram codes: min over i = 0..d-1 of the dots outside the
// first i rows and the rightmost d-1-i columns.
int theorem1_bound(const FerrersDiagram& f, int d);

// Largest l1 < ell such that deleting the l1 leftmost columns leaves
// theorem1_bound(.., d) unchanged; 0 if none.
int pending_prefix(const FerrersDiagram& f, int d);

// Rows below m1 stay clear of the l1 leftmost columns and strictly shrink at
// the block boundary.
bool is_quasi_pending(const FerrersDiagram& f, int m1, int l1);

// Diagram minus its cut leftmost columns (cut >= 0), and the left part itself.
FerrersDiagram drop_left_columns(const FerrersDiagram& f, int cut);
FerrersDiagram take_left_columns(const FerrersDiagram& f, int cut);

// Conjugate (transpose) diagram plus the dot-index bijection: entry i of the
// returned map is the flat index in conj of the dot with flat index i in f.
struct Conjugate {
    FerrersDiagram diagram;
    std::vector<int> dot_map;
};
Conjugate conjugate(const FerrersDiagram& f);

}  // namespace ssc
