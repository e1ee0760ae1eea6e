#include "mixcage/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mixcage {

namespace {

Order checked_mul(Order a, Order b) {
    if (a != 0 && b > std::numeric_limits<Order>::max() / a)
        throw std::overflow_error("bound exceeds 64-bit range");
    return a * b;
}

Order checked_add(Order a, Order b) {
    if (b > std::numeric_limits<Order>::max() - a)
        throw std::overflow_error("bound exceeds 64-bit range");
    return a + b;
}

Order round_up_even(Order n) { return n % 2 == 0 ? n : n + 1; }

}  // namespace

Order moore_bound(int r, int depth) {
    if (r < 1) throw std::invalid_argument("moore_bound: degree must be >= 1");
    if (depth < 0) throw std::invalid_argument("moore_bound: depth must be >= 0");
    if (depth == 0) return 1;
    if (r == 1) return 2;
    if (r == 2) return 2 * static_cast<Order>(depth) + 1;
    // r(r-1)^d - 2 is divisible by r-2 since (r-1)^d = 1 mod (r-2).
    Order p = 1;
    for (int i = 0; i < depth; ++i) p = checked_mul(p, static_cast<Order>(r - 1));
    return (checked_mul(static_cast<Order>(r), p) - 2) / static_cast<Order>(r - 2);
}

Order ahm_bound(int r, int g) {
    if (g < 3) throw std::invalid_argument("ahm_bound: girth must be >= 3");
    Order total = 0;
    for (int i = 0; i < g; ++i) total = checked_add(total, moore_bound(r, std::min(i, g - 1 - i)));
    return total;
}

Order bcw_order(int r, int g) {
    if (r < 1 || g < 2) throw std::invalid_argument("bcw_order: need r >= 1, g >= 2");
    return checked_add(checked_mul(static_cast<Order>(r), static_cast<Order>(g - 1)), 1);
}

Order lower_bound(int r, int z, int g) {
    if (r < 1 || z < 1 || g < 3) throw std::invalid_argument("lower_bound: need r, z >= 1, g >= 3");
    // z = 1: the AHM count. z >= 2: order of the smallest z-out digraph of
    // girth g (proved for z = 2, conjectured beyond) - a floor, not a claim
    // of sharpness.
    Order n = z == 1 ? ahm_bound(r, g) : bcw_order(z, g);
    return r % 2 == 1 ? round_up_even(n) : n;
}

Order f21(int g) {
    if (g < 3) throw std::invalid_argument("f21: girth must be >= 3");
    auto gg = static_cast<Order>(g) * static_cast<Order>(g);
    return g % 2 == 1 ? (gg + 1) / 2 : gg / 2;
}

const std::vector<TableEntry>& bounds_table() {
    static const std::vector<TableEntry> table = {
        {2, 2, 5, std::nullopt, 19, std::nullopt, "circulant225"},
        {2, 2, 6, std::nullopt, 27, std::nullopt, "graph226"},
        {3, 1, 5, std::nullopt, 24, std::nullopt, "graph315"},
        {3, 1, 6, std::nullopt, 30, std::nullopt, "graph316"},
        {3, 1, 7, 52, std::nullopt, 60, "lift317"},
        {3, 1, 8, 74, std::nullopt, 76, "lift318"},
        {4, 1, 5, 29, std::nullopt, 34, "lift415"},
        {4, 1, 6, 46, std::nullopt, 48, "lift416"},
        {5, 1, 5, 40, std::nullopt, 50, "hs-oriented"},
        {5, 1, 6, 66, std::nullopt, 72, "lift516"},
    };
    return table;
}

BoundReport bound_report(int r, int z, int g) {
    BoundReport rep;
    rep.r = r;
    rep.z = z;
    rep.g = g;
    rep.ahm_lower = ahm_bound(r, g);
    rep.parity_lower = lower_bound(r, z, g);
    rep.bcw_digraph_order = bcw_order(z, g);
    for (const auto& e : bounds_table())
        if (e.r == r && e.z == z && e.g == g) rep.table_entry = e;
    return rep;
}

}  // namespace mixcage
