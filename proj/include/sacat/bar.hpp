#pragma once

#include "sacat/group.hpp"
#include "sacat/intmat.hpp"

namespace sacat {

/// Normalized bar chain segment C3 -> C2 -> C1 for a finite group: free
/// modules on tuples of nonidentity elements, boundary terms through
/// degenerate tuples dropped. Basis indices: element x -> x-1; pair (x,y) ->
/// (x-1)*(n-1)+(y-1); triples one level deeper.
struct BarSegment {
    Group group;
    IntMatrix d2; // (n-1) x (n-1)^2
    IntMatrix d3; // (n-1)^2 x (n-1)^3

    uint32_t n = 0;
    uint32_t pair_index(uint32_t x, uint32_t y) const { return (x - 1) * (n - 1) + (y - 1); }
    std::pair<uint32_t, uint32_t> pair_of(uint32_t idx) const {
        return {idx / (n - 1) + 1, idx % (n - 1) + 1};
    }
};

/// Builds the segment and verifies d2 * d3 = 0 column by column.
BarSegment bar_segment(const Group& g);

/// The d2 column of a pair: +e_y - e_{xy} + e_x with identity terms dropped.
/// Exposed for the mod-p engines which stream columns without materializing
/// the integer matrices.
void d2_column(const Group& g, uint32_t x, uint32_t y,
               const std::function<void(uint32_t row, int coeff)>& emit);
void d3_column(const Group& g, uint32_t x, uint32_t y, uint32_t z,
               const std::function<void(uint32_t pair_row, int coeff)>& emit);

} // namespace sacat
