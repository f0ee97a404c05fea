#pragma once

#include <string>
#include <vector>

#include "ssc/bigint.hpp"

namespace ssc {

class Registry;

// floor([n, k-d+1]_q / [k, k-d+1]_q)
BigInt johnson_bound(int n, int d, int k, int q);

struct SteinerBound {
    BigInt value;
    std::string estimate;  // which estimate backed the A_q(n-k, k-2, k-1) term
};
// q^{2(n-k)} + best upper estimate for A_q(n-k, k-2, k-1)
SteinerBound steiner_bound(int n, int k, int q, const Registry& reg);

// (best d=k-1 size minus the lifted-MRD part) over the Johnson-type estimate
// of A_q(n-k, k-2, k-1), compared exactly against num/den.
bool ratio_at_least(int n, int k, int q, long num, long den);

struct ComparisonRow {
    std::string label;
    int n = 0, k = 0, q = 0;
    BigInt lhs;
    BigInt rhs;
    bool pass = false;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    bool all_pass = true;
    std::string text() const;  // machine-readable lines param=.. lhs=.. rhs=.. pass=..
};

// Formula-level sweep of the three cardinality-difference inequalities over
// all valid parameters with n <= n_max.
ComparisonReport comparison_suite(int q, int n_max = 30);

}  // namespace ssc
