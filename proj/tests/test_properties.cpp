#include "properties.hpp"

#include <doctest.h>

using namespace fglwb::props;

TEST_SUITE("properties") {

TEST_CASE("randomized properties under a fixed seed") {
    int total = 0;
    for (const auto& o : run_all()) {
        CAPTURE(o.family);
        CAPTURE(o.first_failure);
        CHECK(o.cases == kCasesPerFamily);
        CHECK(o.failures == 0);
        total += o.cases;
    }
    CHECK(total >= 1000);
}

TEST_CASE("each family is reproducible from its seed") {
    Outcome a = parser_round_trip(7, 40), b = parser_round_trip(7, 40);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
    CHECK(a.first_failure == b.first_failure);
}

}
