#include <set>

#include "doctest.h"
#include "ssc/constructions.hpp"
#include "ssc/registry.hpp"

using namespace ssc;

namespace {

// number of distinct subspaces after full expansion
std::uint64_t distinct_count(const CdcCode& code, std::uint64_t limit = 1u << 22) {
    std::set<std::vector<Symbol>> seen;
    for (const auto& s : code.expand(limit)) {
        std::vector<Symbol> key;
        key.push_back(static_cast<Symbol>(s.k));
        key.insert(key.end(), s.mat.a.begin(), s.mat.a.end());
        seen.insert(std::move(key));
    }
    return seen.size();
}

}  // namespace

TEST_CASE("lifted MRD sizes and parameters") {
    CHECK(lifted_mrd(8, 4, 3, 2).size() == 256);
    CHECK(lifted_mrd(13, 4, 3, 2).size() == q_pow(2, 18));
    CHECK(lifted_mrd(6, 3, 2, 2).size() == 64);
    CHECK_THROWS_AS(lifted_mrd(6, 4, 3, 2), BadParams);  // d > min(k, n-k)
}

TEST_CASE("multilevel rejects close identifying vectors") {
    std::vector<IdVector> vecs{IdVector::from_string("1110000"),
                               IdVector::from_string("1101000")};
    CHECK_THROWS_AS(multilevel(vecs, 2, 2), DistanceViolation);
}

TEST_CASE("pending_dots sizes and expansion") {
    CHECK(size_pending_dots(8, 2) == 1179);
    CHECK(size_pending_dots(9, 2) == 4096 + 651);
    CdcCode pd = pending_dots(8, 2);
    pd.validate();
    CHECK(pd.size() == 1179);
    CHECK(distinct_count(pd) == 1179);
    CdcCode pd9 = pending_dots(9, 2);
    pd9.validate();
    CHECK(pd9.size() == 4747);
    CHECK(distinct_count(pd9) == 4747);
    CHECK_THROWS_AS(pending_dots(20, 2), FieldTooSmall);
    CHECK_THROWS_AS(pending_dots(7, 2), BadParams);
}

TEST_CASE("construction A reference cardinalities") {
    CHECK(size_A(13, 4, 2) == q_pow(2, 18) + 4747);
    CHECK(size_A(14, 4, 2) == q_pow(2, 20) + 19051);
    CHECK(size_A(15, 4, 2) == q_pow(2, 22) + 76331);
    CHECK(size_A(19, 5, 2) == q_pow(2, 28) + 1067627);
    CHECK(size_A(20, 5, 2) == q_pow(2, 30) + 4270635);
    CHECK(size_A(19, 5, 3) == q_pow(3, 28) + 3491666833);
    CHECK(size_A(20, 5, 3) == q_pow(3, 30) + 31425002590);
    // decomposition of the k=4 tail
    CHECK(BigInt(4747) == q_pow(2, 12) + gaussian_binomial(6, 2, 2));
}

TEST_CASE("construction A cells sum to the formula and expand distinctly") {
    CdcCode a = construction_A(13, 4, 2);
    a.validate();
    CHECK(a.size() == size_A(13, 4, 2));
    CHECK(distinct_count(a) == 266891);
    CHECK(a.cells.size() == 17);  // v00 + one recursive vector + 15 suffix cells

    CdcCode a5 = construction_A(19, 5, 2);
    a5.validate();
    CHECK(a5.size() == size_A(19, 5, 2));
    CHECK_THROWS_AS(construction_A(12, 4, 2), BadParams);
    CHECK_THROWS_AS(construction_A(16, 4, 2), FieldTooSmall);
}

TEST_CASE("construction A at larger k and over GF(3)") {
    CdcCode a6 = construction_A(26, 6, 2);
    a6.validate();
    CHECK(a6.size() == size_A(26, 6, 2));
    CHECK(a6.d == 5);
    CdcCode a43 = construction_A(20, 4, 3);
    a43.validate();
    CHECK(a43.size() == size_A(20, 4, 3));
    // color capacity is exactly filled at ell = q^2+q+1
    VerifyOptions st;
    st.mode = VerifyMode::structured;
    st.span_budget = 1ull << 14;  // spot-check the certificate rules only
    CHECK_THROWS_AS(verify_distance(a43, st), TooLarge);  // big cells exceed the budget
}

TEST_CASE("construction A small-field variant") {
    // boundary dispatch
    CHECK(size_A_auto(13, 4, 2) == size_A(13, 4, 2));
    CHECK(size_A_auto(16, 4, 2) == size_A_mod(16, 4, 2));
    // direct evaluation for (30,4,2): alpha = 2
    const BigInt expect = q_pow(2, 52) + q_pow(2, 46) +
                          gaussian_binomial(8, 2, 2) * (q_pow(2, 30) + q_pow(2, 14));
    CHECK(size_A_mod(30, 4, 2) == expect);
    CHECK_THROWS_AS(construction_A_mod(13, 4, 2), BadParams);  // large field: use A
    CdcCode mod = construction_A_mod(16, 4, 2);
    mod.validate();
    CHECK(mod.size() == size_A_mod(16, 4, 2));
    // the k = 3 variant is small enough to expand fully
    CdcCode mod3 = construction_A_mod(12, 3, 2);
    mod3.validate();
    CHECK(mod3.size() == size_A_mod(12, 3, 2));
    CHECK(mod3.size() == q_pow(2, 18) + gaussian_binomial(8, 2, 2) * 4);
    CHECK(distinct_count(mod3, 1u << 19) == static_cast<std::uint64_t>(mod3.size()));
    // multi-segment builds are not materializable, only the formula is
    CHECK_THROWS_AS(construction_A_mod(30, 4, 2), BadParams);
}

TEST_CASE("construction B sizes") {
    CHECK(size_B(10, 4, 2, 21) == q_pow(2, 18) + 21861);
    CHECK(size_B(12, 5, 2, 41) == q_pow(2, 28) + 19009577);
    CHECK(size_B(11, 4, 2, 304) == q_pow(2, 21) + 175024);
    CHECK(size_B(12, 4, 2, BigInt(4096) + 701) == q_pow(2, 24) + 1402877);
    CHECK(size_B(13, 4, 2, 36945) == q_pow(2, 27) + 11221585);
    CHECK(size_B(13, 5, 2, 1164) == q_pow(2, 32) + 304223372);
    CHECK(size_B(15, 5, 2, q_pow(2, 20) + 118751) == q_pow(2, 40) + 77883166687);
    CHECK(size_B(16, 5, 2, 18699043) == q_pow(2, 44) + 1246130688803);
    // component identity from the cardinality proof
    CHECK(size_B(10, 4, 2, 0) - q_pow(2, 18) ==
          (q_pow(2, 6) + q_pow(2, 4)) * (1 + q_pow(2, 4) + q_pow(2, 8)));
}

TEST_CASE("construction B expansion matches the formula") {
    Registry reg = registry_default(2);
    CdcCode b = construction_B(10, 4, 2, reg);
    b.validate();
    CHECK(b.size() == size_B(10, 4, 2, 21));
    CHECK(b.size() == q_pow(2, 18) + 21861);
    CHECK(distinct_count(b) == 284005);
    CHECK_THROWS_AS(construction_B(9, 4, 2, reg), BadParams);
}

TEST_CASE("construction C-4 sizes") {
    CHECK(size_C4(10, 2, 21) == q_pow(2, 18) + 37477);
    CHECK(size_C4(10, 2, 21) == q_pow(2, 18) + 37456 + 21);
    CHECK(size_C4(11, 2, 304) == q_pow(2, 21) + 293200);
    CHECK(size_C4(12, 2, BigInt(4096) + 701) == q_pow(2, 24) + 2338365);
    CHECK(size_C4(13, 2, 36945) == q_pow(2, 27) + 18517073);
}

TEST_CASE("construction C-5 sizes") {
    CHECK(size_C5(12, 2, 41) == q_pow(2, 28) + 29377577);
    CHECK(size_C5(13, 2, 1164) == q_pow(2, 32) + 447026316);
    CHECK(size_C5(15, 2, q_pow(2, 20) + 118751) == q_pow(2, 40) + 113061122015);
    // the length-16 table entry disagrees with the closed formula; the
    // formula (and the cell enumeration) give this value
    CHECK(size_C5(16, 2, 18699043) == q_pow(2, 44) + 1903739884323);
}

TEST_CASE("construction C-4 expansion matches the formula") {
    Registry reg = registry_default(2);
    CdcCode c4 = construction_C4(10, 2, reg);
    c4.validate();
    CHECK(c4.size() == size_C4(10, 2, 21));
    CHECK(distinct_count(c4) == static_cast<std::uint64_t>(c4.size()));
}

TEST_CASE("construction C-5 cell sums match the formula at larger lengths") {
    Registry reg = registry_default(2);
    // cells only; no expansion at this scale
    CdcCode c5 = construction_C5(12, 2, reg);
    c5.validate();
    CHECK(c5.size() == size_C5(12, 2, 41));
}

TEST_CASE("construction D sizes and cell structure") {
    CdcCode pd = pending_dots(8, 2);
    CdcCode d = construction_D(pd, 3);
    d.validate();
    CHECK(d.n == 11);
    CHECK(d.k == 3);
    CHECK(d.size() == BigInt(1179) * 64);
    CHECK(d.size() == 75456);
    CHECK(size_D(pd.size(), 3, 2, 2, 3) == d.size());
    CHECK_THROWS_AS(construction_D(pd, 2), DeltaTooSmall);

    // old-code example at formula level
    CHECK(size_D(BigInt(4096) + 701, 4, 2, 2, 4) == q_pow(2, 24) + 2871296);
    CHECK(size_D(BigInt(4096) + 701, 4, 2, 2, 5) == q_pow(2, 27) + 22970368);
    CHECK(size_D(BigInt(260), 4, 3, 2, 5) == q_pow(2, 18) + 4096);
    CHECK(size_D(BigInt(1028), 5, 4, 2, 10) == q_pow(2, 30) + 4194304);

    // trivial base of one codeword
    CdcCode single = lifted_mrd(6, 3, 3, 2);
    CHECK(single.size() == 8);  // placeholder check below uses delta = k semantics
}

TEST_CASE("construction D with a one-codeword base") {
    // base: the single subspace spanned by unit vectors
    Registry reg = registry_default(2);
    CdcCode base = reg.materialize(2, 4, 3, 3);  // d > would be... use explicit single
    CHECK(base.size() == 1);
    CdcCode d = construction_D(base, 3);
    CHECK(d.size() == q_pow(2, 3 * (3 - 3 + 1)));
}

TEST_CASE("multicomponent reference sizes") {
    CHECK(size_MC(13, 4, 3, 2) == q_pow(2, 18) + 4113);
    CHECK(size_MC(10, 4, 2, 2) == q_pow(2, 18) + 4113);
    CHECK(size_MC(14, 4, 3, 2) == q_pow(2, 20) + 16641);
    CHECK(size_MC(15, 4, 3, 2) == q_pow(2, 22) + 66561);
    CHECK(size_MC(19, 5, 4, 2) == q_pow(2, 28) + 1052673);
    CHECK(size_MC(20, 5, 4, 2) == q_pow(2, 30) + 4210689);
    CHECK(size_MC(19, 5, 4, 3) == q_pow(3, 28) + 3487315843);
    CHECK(size_MC(20, 5, 4, 3) == q_pow(3, 30) + 31385842579);
    CHECK(size_MC(11, 4, 2, 2) == q_pow(2, 21) + 33025);
    CHECK(size_MC(12, 4, 2, 2) == q_pow(2, 24) + 266257);
    CHECK(size_MC(13, 4, 2, 2) == q_pow(2, 27) + 2130177);
    CHECK(size_MC(12, 5, 2, 2) == q_pow(2, 28) + 1049601);
    CHECK(size_MC(13, 5, 2, 2) == q_pow(2, 32) + 16810017);
    CHECK(size_MC(15, 5, 2, 2) == q_pow(2, 40) + 4311777313);
    CHECK(size_MC(16, 5, 2, 2) == q_pow(2, 44) + 68988961793);
}

TEST_CASE("identifying vector sets keep the distances the proofs rely on") {
    // within the recursive construction, the plain-vector part alone already
    // has pairwise asymmetric distance k-1
    for (auto [n, k] : std::vector<std::pair<int, int>>{{13, 4}, {19, 5}}) {
        CdcCode a = construction_A(n, k, 2);
        std::vector<IdVector> a0;
        for (const auto& cell : a.cells)
            if (!cell.block) a0.push_back(cell.v);  // v00 and the recursive family
        CHECK(a0.size() == static_cast<size_t>(k - 2));
        for (size_t i = 0; i < a0.size(); ++i)
            for (size_t j = i + 1; j < a0.size(); ++j)
                CHECK(asym_distance(a0[i], a0[j]) >= k - 1);
    }
    // the matching-based vectors are pairwise at asymmetric distance >= 2
    Registry reg = registry_default(2);
    CdcCode b = construction_B(10, 4, 2, reg);
    std::vector<IdVector> vs;
    for (const auto& cell : b.cells)
        if (cell.code.rho() > 0) vs.push_back(cell.v);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            CHECK(asym_distance(vs[i], vs[j]) >= 2);
}

TEST_CASE("multicomponent enumeration equals the closed formula") {
    for (auto [n, k, d] : std::vector<std::array<int, 3>>{{9, 3, 2}, {10, 4, 2}, {8, 3, 2}, {9, 4, 3}}) {
        CdcCode mc = multicomponent(n, k, d, 2);
        mc.validate();
        CHECK(mc.size() == size_MC(n, k, d, 2));
        if (mc.size() < BigInt(300000)) CHECK(distinct_count(mc) == static_cast<std::uint64_t>(mc.size()));
    }
    CdcCode mc = multicomponent(9, 3, 2, 2);
    CHECK(mc.size() == 4361);
}
