#include <doctest.h>

#include "properties.hpp"

using namespace k3gm;

TEST_CASE("series-core laws on random instances")
{
    auto checks = props::series_core_laws();
    CHECK(checks.size() >= 15);
    for (const auto &c : checks) {
        CAPTURE(c.name);
        if (c.first_discrepancy) {
            CAPTURE(c.first_discrepancy->monomial);
            CAPTURE(c.first_discrepancy->lhs);
        }
        CHECK(c.status == Status::Pass);
    }
}

TEST_CASE("laws hold for a second seed")
{
    for (const auto &c : props::series_core_laws(props::kInstances, 7)) {
        CAPTURE(c.name);
        CHECK(c.status == Status::Pass);
    }
}
