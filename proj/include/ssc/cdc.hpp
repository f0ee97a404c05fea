#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ssc/bigint.hpp"
#include "ssc/fdrm.hpp"
#include "ssc/subspace.hpp"

namespace ssc {

// Pending-block annotation on a cell: the leftmost l1 diagram columns,
// restricted to the first m1 rows. Blocks of two cells are comparable when
// their shapes and ambient matrix columns coincide; the block values are the
// cell offset restricted to dot_idx.
struct PendingBlockInfo {
    int m1 = 0;
    int l1 = 0;
    std::vector<int> row_lens;      // per block row, top first
    std::vector<int> dot_idx;       // flat indices into the cell's diagram values
    std::vector<int> ambient_cols;  // matrix column of each block dot, same order
    int shared_pivots = 0;          // leading pivots common to the whole family

    bool same_position(const PendingBlockInfo& o) const {
        return m1 == o.m1 && l1 == o.l1 && row_lens == o.row_lens && ambient_cols == o.ambient_cols;
    }
};

struct Cell {
    IdVector v;
    FdrmCode code;  // code.diagram == diagram_from_vector(v)
    std::optional<PendingBlockInfo> block;

    std::uint64_t size() const { return code.size(); }
};

// Constant-dimension code as a list of cells; subspaces are only materialized
// on demand. d is the declared minimum injection distance.
struct CdcCode {
    int q = 0;
    int n = 0;
    int k = 0;
    int d = 1;
    const FieldSpec* field = nullptr;
    std::vector<Cell> cells;
    std::string meta;

    BigInt size() const;

    // deterministic cell-by-cell expansion
    void for_each_codeword(const std::function<void(const SubspaceRep&)>& fn) const;
    std::vector<SubspaceRep> expand(std::uint64_t limit = 1u << 22) const;

    // structural checks: diagram conformance, distinct vectors (cells sharing a
    // vector must be disjoint affine sets), ambient bounds
    void validate() const;
};

CdcCode lifted_mrd(int n, int k, int d, int q);

// Generic multilevel engine: one lifted FDMRD cell per identifying vector.
// Vectors must have constant weight and pairwise asymmetric distance >= d.
CdcCode multilevel(const std::vector<IdVector>& vectors, int d, int q);

// Orthogonal-complement code: same q and n, dimension n-k, identical pairwise
// injection distances. Materializes, so desk scale only.
CdcCode dual_code(const CdcCode& c, std::uint64_t limit = 1u << 22);

// Same code in a longer ambient space, z zero columns in front of every
// codeword. Diagrams and cell codes are unchanged.
CdcCode prepend_zero_columns(const CdcCode& c, int z);

}  // namespace ssc
