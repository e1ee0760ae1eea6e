#include <doctest.h>

#include <stdexcept>

#include "mixcage/bounds.hpp"

using namespace mixcage;

namespace {

// Vertices of a depth-d tree, root degree r and inner degree r-1, counted level by level.
Order tree_count(int r, int d) {
    Order total = 1, level = 1;
    for (int i = 1; i <= d; ++i) {
        level *= static_cast<Order>(i == 1 ? r : r - 1);
        total += level;
    }
    return total;
}

}  // namespace

TEST_CASE("moore bound") {
    CHECK(moore_bound(3, 2) == 10);
    CHECK(moore_bound(2, 3) == 7);
    CHECK(moore_bound(1, 0) == 1);
    CHECK(moore_bound(1, 4) == 2);
    for (int r = 1; r <= 7; ++r) CHECK(moore_bound(r, 0) == 1);
    for (int r = 1; r <= 8; ++r)
        for (int d = 0; d <= 6; ++d) CHECK(moore_bound(r, d) == tree_count(r, d));
    for (int r = 3; r <= 8; ++r)
        for (int d = 0; d < 10; ++d) CHECK(moore_bound(r, d) < moore_bound(r, d + 1));
    CHECK_THROWS_AS(moore_bound(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(moore_bound(1000, 60), std::overflow_error);
}

TEST_CASE("ahm bound") {
    CHECK(ahm_bound(3, 5) == 20);
    CHECK(ahm_bound(3, 6) == 30);
    CHECK(ahm_bound(3, 7) == 52);
    CHECK(ahm_bound(3, 8) == 74);
    CHECK(ahm_bound(4, 5) == 29);
    CHECK(ahm_bound(4, 6) == 46);
    CHECK(ahm_bound(5, 5) == 40);
    CHECK(ahm_bound(5, 6) == 66);
    for (int g = 3; g <= 30; ++g) CHECK(ahm_bound(1, g) == static_cast<Order>(2 * g - 2));
    for (int g = 3; g <= 50; ++g) CHECK(ahm_bound(2, g) == f21(g));
    for (int r = 1; r <= 6; ++r)
        for (int g = 3; g <= 12; ++g) CHECK(ahm_bound(r, g) >= bcw_order(1, g));
}

TEST_CASE("bcw order and f21") {
    CHECK(bcw_order(3, 5) == 13);
    for (int g = 2; g <= 20; ++g) {
        CHECK(bcw_order(2, g) == static_cast<Order>(2 * g - 1));
        CHECK(bcw_order(1, g) == static_cast<Order>(g));
    }
    CHECK(f21(5) == 13);
    CHECK(f21(6) == 18);
    CHECK(f21(7) == 25);
}

TEST_CASE("lower bound") {
    for (int g = 3; g <= 12; ++g) CHECK(lower_bound(1, 2, g) == static_cast<Order>(2 * g));
    CHECK(lower_bound(3, 1, 8) == 74);
    CHECK(lower_bound(4, 1, 5) == 29);
    CHECK(lower_bound(1, 1, 5) == 8);
    CHECK(lower_bound(2, 2, 5) == 9);
    for (int r = 1; r <= 6; ++r)
        for (int z = 1; z <= 3; ++z)
            for (int g = 3; g <= 9; ++g) {
                auto rep = bound_report(r, z, g);
                if (z == 1) CHECK(rep.parity_lower >= rep.ahm_lower);
                if (r % 2 == 1) CHECK(rep.parity_lower % 2 == 0);
            }
}

TEST_CASE("table lower entries agree with the formula") {
    int lower_rows = 0;
    for (const auto& t : bounds_table()) {
        if (!t.lower) continue;
        ++lower_rows;
        CHECK(*t.lower == lower_bound(t.r, t.z, t.g));
        if (t.upper) CHECK(*t.lower <= *t.upper);
    }
    CHECK(lower_rows == 6);  // exact rows (3,1,5), (3,1,6) carry no separate lower value
    auto rep = bound_report(3, 1, 7);
    REQUIRE(rep.table_entry);
    CHECK(rep.table_entry->upper == Order{60});
}
