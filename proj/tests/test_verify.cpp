#include "doctest.h"
#include "ssc/bounds.hpp"
#include "ssc/constructions.hpp"
#include "ssc/registry.hpp"
#include "ssc/verify.hpp"

using namespace ssc;

TEST_CASE("exhaustive verification of the k=3 base construction") {
    CdcCode pd = pending_dots(8, 2);
    VerifyOptions opts;
    opts.mode = VerifyMode::exhaustive;
    VerifyReport rep = verify_distance(pd, opts);
    CHECK(rep.pass);
    CHECK(rep.exact);
    CHECK(rep.min_found == 2);
    CHECK(rep.pairs_checked == BigInt(1179) * 1178 / 2);
}

TEST_CASE("exhaustive verification of a lifted MRD code") {
    CdcCode c = lifted_mrd(6, 3, 2, 2);
    VerifyReport rep = verify_distance(c, {});
    CHECK(rep.pass);
    CHECK(rep.min_found == 2);
}

TEST_CASE("structured certificate equals exhaustive on the desk codes") {
    Registry reg = registry_default(2);
    std::vector<CdcCode> codes;
    codes.push_back(pending_dots(8, 2));
    codes.push_back(pending_dots(9, 2));
    codes.push_back(multicomponent(9, 3, 2, 2));
    codes.push_back(lifted_mrd(6, 3, 2, 2));
    for (const auto& code : codes) {
        VerifyOptions ex;
        ex.mode = VerifyMode::exhaustive;
        VerifyOptions st;
        st.mode = VerifyMode::structured;
        VerifyReport a = verify_distance(code, ex);
        VerifyReport b = verify_distance(code, st);
        CHECK(a.pass);
        CHECK(b.pass);
        CHECK(a.min_found == b.min_found);
    }
}

TEST_CASE("structured verification of the recursive construction has no fallback") {
    CdcCode a = construction_A(13, 4, 2);
    VerifyOptions st;
    st.mode = VerifyMode::structured;
    VerifyReport rep = verify_distance(a, st);
    CHECK(rep.pass);
    CHECK(rep.min_found == 3);
    CHECK(rep.rules.fallback_cells == 0);
    CHECK(rep.rules.qpb > 0);
}

TEST_CASE("structured verification of the matching-based construction") {
    Registry reg = registry_default(2);
    CdcCode b = construction_B(10, 4, 2, reg);
    VerifyOptions st;
    st.mode = VerifyMode::structured;
    VerifyReport rep = verify_distance(b, st);
    CHECK(rep.pass);
    CHECK(rep.min_found == 2);
    CHECK(rep.rules.fallback_failing == 0);
    // only embedded base pairs may need the fallback, and none of them fail
    CHECK(rep.rules.fallback_cells > 0);
    CHECK(rep.rules.fallback_cells <= 21 * 20 / 2);
}

TEST_CASE("verification is worker-count independent") {
    CdcCode pd = pending_dots(8, 2);
    VerifyOptions one;
    one.jobs = 1;
    VerifyOptions four;
    four.jobs = 4;
    VerifyReport a = verify_distance(pd, one);
    VerifyReport b = verify_distance(pd, four);
    CHECK(a.min_found == b.min_found);
    CHECK(a.pairs_checked == b.pairs_checked);

    VerifyOptions s1;
    s1.mode = VerifyMode::sampled;
    s1.sample_pairs = 20000;
    s1.jobs = 1;
    VerifyOptions s3 = s1;
    s3.jobs = 3;
    VerifyReport c = verify_distance(pd, s1);
    VerifyReport d = verify_distance(pd, s3);
    CHECK(c.min_found == d.min_found);
}

TEST_CASE("negative control: a corrupted cell is caught with a witness") {
    CdcCode pd = pending_dots(8, 2);
    // zero one basis matrix inside a cell: two messages now collide
    for (auto& cell : pd.cells) {
        if (cell.code.rho() > 0) {
            std::fill(cell.code.basis[0].begin(), cell.code.basis[0].end(), 0);
            break;
        }
    }
    VerifyOptions ex;
    VerifyReport rep = verify_distance(pd, ex);
    CHECK_FALSE(rep.pass);
    CHECK(rep.min_found == 0);
    CHECK(rep.witness.has_value());
    VerifyOptions st;
    st.mode = VerifyMode::structured;
    VerifyReport srep = verify_distance(pd, st);
    CHECK_FALSE(srep.pass);
    CHECK(srep.witness.has_value());
}

TEST_CASE("small-field recursive construction verifies") {
    // k = 3: structured certificate end to end
    CdcCode mod3 = construction_A_mod(12, 3, 2);
    VerifyOptions st;
    st.mode = VerifyMode::structured;
    VerifyReport rep = verify_distance(mod3, st);
    CHECK(rep.pass);
    CHECK(rep.min_found == 2);
    // k = 4: sampled inner- and cross-cell pairs all at distance >= 3
    CdcCode mod4 = construction_A_mod(16, 4, 2);
    VerifyOptions sm;
    sm.mode = VerifyMode::sampled;
    sm.sample_pairs = 200000;
    VerifyReport srep = verify_distance(mod4, sm);
    CHECK(srep.pass);
}

TEST_CASE("exhaustive budget is enforced") {
    Registry reg = registry_default(2);
    CdcCode b = construction_B(10, 4, 2, reg);
    VerifyOptions ex;
    ex.max_codewords = 100000;  // |B| = 283965
    CHECK_THROWS_AS(verify_distance(b, ex), TooLarge);
}

TEST_CASE("johnson bound") {
    CHECK(johnson_bound(13, 3, 4, 2) == 319449);
    CHECK(johnson_bound(9, 1, 3, 2) == gaussian_binomial(9, 3, 2));
    CHECK_THROWS_AS(johnson_bound(5, 4, 3, 2), BadParams);
    // every constructed size respects it
    CHECK(size_A(13, 4, 2) <= johnson_bound(13, 3, 4, 2));
    CHECK(size_A(19, 5, 2) <= johnson_bound(19, 4, 5, 2));
    Registry reg = registry_default(2);
    CHECK(size_C4(10, 2, reg.best(2, 6, 2, 4).size) <= johnson_bound(10, 2, 4, 2));
    CHECK(size_C5(12, 2, reg.best(2, 7, 2, 5).size) <= johnson_bound(12, 2, 5, 2));
}

TEST_CASE("steiner-structure bound") {
    Registry reg = registry_default(2);
    auto s3 = steiner_bound(8, 3, 2, reg);
    CHECK(s3.value == q_pow(2, 10) + gaussian_binomial(5, 2, 2));
    CHECK(size_pending_dots(8, 2) == s3.value);  // attained at k = 3
    auto s4 = steiner_bound(13, 4, 2, reg);
    CHECK(size_A(13, 4, 2) <= s4.value);
}

TEST_CASE("ratio against the packing bound at the quoted parameters") {
    const int k = 10, n = (k * k + 3 * k - 2) / 2;
    CHECK(ratio_at_least(n, k, 2, 99, 100));
}

TEST_CASE("comparison suite holds over the sweep") {
    for (int q : {2, 3}) {
        ComparisonReport rep = comparison_suite(q, 30);
        CHECK(rep.all_pass);
        CHECK(!rep.rows.empty());
        for (const auto& r : rep.rows) {
            CAPTURE(r.label);
            CAPTURE(r.n);
            CAPTURE(r.k);
            CAPTURE(r.q);
            CHECK(r.pass);
        }
    }
    // spot values
    CHECK(size_A(13, 4, 2) - size_MC(13, 4, 3, 2) == 634);
    Registry reg = registry_default(2);
    CHECK(size_C4(10, 2, 21) - size_B(10, 4, 2, 21) == 15616);
}
