#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mixcage {

using Order = std::uint64_t;

/// Vertices in a depth-d tree where the root has r children and every other
/// internal vertex r-1: (r(r-1)^d - 2)/(r-2), with the r = 1, 2 limits.
/// Throws std::invalid_argument for r < 1 and std::overflow_error past 64 bits.
Order moore_bound(int r, int depth);

/// Lower bound for f(r,1,g): Moore trees hung on a directed path of order g.
Order ahm_bound(int r, int g);

/// r(g-1)+1, the order of the circulant digraph with arc steps 1..r.
Order bcw_order(int r, int g);

/// Best documented lower bound for f(r,z,g): the AHM bound for z = 1, the
/// BCW order of the directed part for z >= 2; rounded up to even when r
/// is odd. Not claimed to be sharp for z >= 2.
Order lower_bound(int r, int z, int g);

/// Exact f(2,1,g): (g^2+1)/2 for odd g, g^2/2 for even g.
Order f21(int g);

struct TableEntry {
    int r = 0, z = 0, g = 0;
    std::optional<Order> lower;
    std::optional<Order> exact;
    std::optional<Order> upper;
    /// Catalog id of the construction realising the upper (or exact) value.
    std::string construction;
};

/// Published bounds for small f(r,z,g).
const std::vector<TableEntry>& bounds_table();

struct BoundReport {
    int r = 0, z = 0, g = 0;
    Order ahm_lower = 0;
    Order parity_lower = 0;
    Order bcw_digraph_order = 0;
    std::optional<TableEntry> table_entry;
};

BoundReport bound_report(int r, int z, int g);

}  // namespace mixcage
