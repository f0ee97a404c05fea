#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ssc/cdc.hpp"

namespace ssc {

class Registry;

struct Hyperplane {
    SubspaceRep Q;  // dimension n-1
    int tau = 0;    // the unique zero position of v(Q)
};

Hyperplane coordinate_hyperplane(int n, int tau, const FieldSpec& f);

bool contains_vector(const SubspaceRep& x, const std::vector<Symbol>& v);

// Coordinate deletion; UnitVectorInside when e_i lies in x.
SubspaceRep puncture_coord(const SubspaceRep& x, int i);

// Union of constant-dimension layers in P_q(n); codewords may be empty when a
// layer rests on a registry constant only.
struct MixedCode {
    int n = 0;
    int q = 0;
    char metric = 'I';  // 'S' or 'I'
    int declared_d = 0;
    bool materialized = false;
    std::vector<SubspaceRep> codewords;
    std::string meta;
    struct Layer {
        int dim;
        BigInt size;
        std::string provenance;
    };
    std::vector<Layer> layers;

    BigInt total_size() const;
};

// {Gamma_tau(X) : X in C, X subset Q} union {Gamma_tau(X cap Q) : X in C, v in X}.
MixedCode punctured_code(const CdcCode& c, const Hyperplane& Q, const std::vector<Symbol>& v);

// ceil(M (q^{n-k} + q^k - 2) / (q^n - 1))
BigInt punctured_size_bound(const BigInt& M, int n, int k, int q);

// A (Q, v) pair meeting the bound: coordinate hyperplanes with v = e_tau first
// (smallest tau among the optima), exhaustive search as a fallback.
std::pair<Hyperplane, std::vector<Symbol>> choose_Qv(const CdcCode& c);

// Exact punctured size for a coordinate pair, computed cell-by-cell.
BigInt punctured_size(const CdcCode& c, int tau);

// Projective-space code for the requested metric: punctured seed from
// G_q(floor((n+1)/2), n+1) plus best-known side layers.
MixedCode projective_construct(int n, int d, int q, char metric, const Registry& reg);

}  // namespace ssc
