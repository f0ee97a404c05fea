#pragma once

#include <utility>
#include <vector>

#include "ssc/bigint.hpp"
#include "ssc/ferrers.hpp"

namespace ssc {

// One (nearly) perfect matching of K_m in the circle-method labelling.
// Nodes are 1-based; vector coordinate j-1 corresponds to node j.
struct MatchingClass {
    int m = 0;
    int index = 0;                          // class label i, 1-based
    std::vector<std::pair<int, int>> edges;  // (a, b) with a < b

    std::vector<IdVector> vectors() const;  // weight-2 vectors, sorted ascending
};

struct Factorization {
    int m = 0;
    std::vector<MatchingClass> classes;
};

// Circle-method (near) one-factorization: for even m, nodes 1..m-1 on the
// circle with center m and P_i contains the spoke (m, i); for odd m, P_i is
// the matching missing node i. TooSmall for m < 3.
Factorization factorize(int m);

// Closed form for sum over e in P_i of q^{|F_e|} (four cases by parity and side).
BigInt class_fdrm_size(int i, int nprime, int q);

// Weight-2 vectors (11 0..), (0011 0..), ...; floor(len/2) of them.
std::vector<IdVector> o_set(int len);

// Weight-(k-2) vectors (1..100), (1..10011), ...; floor(k/2) of them.
std::vector<IdVector> obar_set(int k);

}  // namespace ssc
