#include <sstream>

#include "doctest.h"
#include "ssc/constructions.hpp"
#include "ssc/registry.hpp"
#include "ssc/verify.hpp"

using namespace ssc;

TEST_CASE("registry lookups") {
    Registry reg = registry_default(2);
    auto e = reg.best(2, 6, 2, 4);
    CHECK(e.size == 21);
    CHECK(e.provenance == "external");

    auto a = reg.best(2, 13, 3, 4);
    CHECK(a.size == q_pow(2, 18) + 4747);
    CHECK(a.provenance == "builder:A");

    CHECK_THROWS_AS(reg.best(2, 0, 1, 0), RegistryMiss);
}

TEST_CASE("registry duality and trivial cases") {
    Registry reg = registry_default(2);
    CHECK(reg.best(2, 11, 2, 3).size == 76331);  // pending dots
    CHECK(reg.best(2, 11, 2, 8).size == 76331);  // dual dimension
    CHECK(reg.best(2, 11, 2, 1).size == 1);
    CHECK(reg.best(2, 11, 2, 10).size == 1);
    CHECK(reg.best(2, 11, 2, 2).size == 681);
    CHECK(reg.best(2, 11, 2, 9).size == 681);
    CHECK(reg.best(2, 5, 1, 2).size == gaussian_binomial(5, 2, 2));
}

TEST_CASE("builder-tagged entries regenerate their stored size") {
    Registry reg = registry_default(2);
    for (auto [n, d, k] : std::vector<std::array<int, 3>>{{13, 3, 4}, {10, 2, 4}, {12, 2, 5}, {8, 2, 3}}) {
        auto e = reg.best(2, n, d, k);
        if (e.provenance == "builder:A") CHECK(e.size == size_A(n, k, 2));
        if (e.provenance == "builder:C4") CHECK(e.size == size_C4(n, 2, reg.best(2, n - 4, 2, 4).size));
        if (e.provenance == "builder:C5") CHECK(e.size == size_C5(n, 2, reg.best(2, n - 5, 2, 5).size));
        if (e.provenance == "builder:pending-dots") CHECK(e.size == size_pending_dots(n, 2));
    }
}

TEST_CASE("materialized base code for the embedded constructions") {
    Registry reg = registry_default(2);
    CdcCode base = reg.materialize(2, 6, 2, 4);
    base.validate();
    CHECK(base.n == 6);
    CHECK(base.k == 4);
    CHECK(base.size() == 21);
    auto words = base.expand();
    CHECK(words.size() == 21);
    auto mins = pairwise_mins(words);
    CHECK(mins.min_dI == 2);  // exact: the dual of a perfect spread
}

TEST_CASE("supplemental registry entries") {
    Registry reg = registry_default(2);
    std::istringstream in("2 9 2 3 5693 external\n# comment\n2 40 2 3 12345 somewhere\n");
    load_supplemental(reg, in);
    CHECK(reg.best(2, 9, 2, 3).size == 5693);
    CHECK(reg.best(2, 40, 2, 3).size >= 12345);
    CHECK(reg.external(2, 40, 2, 3)->provenance == "somewhere");
}
