#pragma once

#include <optional>
#include <string>

#include "ssc/cdc.hpp"

namespace ssc {

enum class VerifyMode { exhaustive, structured, sampled };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::exhaustive;
    std::uint64_t max_codewords = 100000;        // exhaustive expansion budget
    std::uint64_t sample_pairs = 10000000;       // sampled mode pair budget
    std::uint64_t span_budget = 1ull << 22;      // rule (a) enumeration budget
    std::uint64_t fallback_budget = 1ull << 22;  // rule (d) pairs per cell pair
    std::uint64_t seed = 0;
    int jobs = 1;
};

struct RuleCounts {
    std::uint64_t same_cell = 0;       // (a) cells certified by span enumeration
    std::uint64_t asym = 0;            // (b) cell pairs certified by d_asym
    std::uint64_t qpb = 0;             // (c) cell pairs certified by a shared block
    std::uint64_t fallback_cells = 0;  // (d) cell pairs checked exhaustively
    std::uint64_t fallback_pairs = 0;  // codeword pairs inside rule (d)
    std::uint64_t fallback_failing = 0;
};

struct Witness {
    std::string where;
    int dist = 0;
};

struct VerifyReport {
    VerifyMode mode = VerifyMode::exhaustive;
    int declared_d = 0;
    int min_found = 0;   // exhaustive: exact; structured: certified lower bound
    bool exact = false;  // true when min_found is the exact minimum
    bool pass = false;
    BigInt pairs_checked = 0;
    RuleCounts rules;
    std::optional<Witness> witness;
    double wall_seconds = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
};

// Injection-metric distance verification against code.d (CertificateGap when
// the structured rules cannot cover a cell pair within budget, TooLarge when
// an exhaustive run exceeds its budget).
VerifyReport verify_distance(const CdcCode& code, const VerifyOptions& opts = {});

std::string format_report(const VerifyReport& r);

// Exhaustive pairwise scan of an explicit list (mixed dimensions allowed).
struct PairwiseMins {
    int min_dI = 0;
    int min_dS = 0;
    BigInt pairs = 0;
    bool mixed_identity_ok = true;  // d_S odd => d_I == (d_S+1)/2 on unequal dims
};
PairwiseMins pairwise_mins(const std::vector<SubspaceRep>& words, int jobs = 1);

}  // namespace ssc
