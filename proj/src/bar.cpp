#include "sacat/bar.hpp"

#include <functional>
#include <map>

namespace sacat {

void d2_column(const Group& g, uint32_t x, uint32_t y,
               const std::function<void(uint32_t, int)>& emit) {
    emit(y - 1, 1);
    const uint32_t xy = g->mul(x, y);
    if (xy != 0)
        emit(xy - 1, -1);
    emit(x - 1, 1);
}

void d3_column(const Group& g, uint32_t x, uint32_t y, uint32_t z,
               const std::function<void(uint32_t, int)>& emit) {
    const uint32_t n = g->order();
    auto pair_index = [n](uint32_t a, uint32_t b) { return (a - 1) * (n - 1) + (b - 1); };
    emit(pair_index(y, z), 1);
    const uint32_t xy = g->mul(x, y);
    if (xy != 0)
        emit(pair_index(xy, z), -1);
    const uint32_t yz = g->mul(y, z);
    if (yz != 0)
        emit(pair_index(x, yz), 1);
    emit(pair_index(x, y), -1);
}

BarSegment bar_segment(const Group& g) {
    BarSegment seg;
    seg.group = g;
    seg.n = g->order();
    const uint32_t n = seg.n;
    check(n >= 2, errc::schema_error, "bar segment needs a nontrivial group");
    const uint32_t m1 = n - 1, m2 = m1 * m1, m3 = m2 * m1;
    seg.d2 = IntMatrix(m1, m2);
    seg.d3 = IntMatrix(m2, m3);
    for (uint32_t x = 1; x < n; ++x)
        for (uint32_t y = 1; y < n; ++y) {
            const uint32_t col = seg.pair_index(x, y);
            d2_column(g, x, y, [&](uint32_t row, int c) { seg.d2.add(row, col, c); });
        }
    for (uint32_t x = 1; x < n; ++x)
        for (uint32_t y = 1; y < n; ++y)
            for (uint32_t z = 1; z < n; ++z) {
                const uint32_t col = seg.pair_index(x, y) * m1 + (z - 1);
                d3_column(g, x, y, z, [&](uint32_t row, int c) { seg.d3.add(row, col, c); });
            }

    // d2 * d3 = 0, checked exhaustively by streaming every triple.
    for (uint32_t x = 1; x < n; ++x)
        for (uint32_t y = 1; y < n; ++y)
            for (uint32_t z = 1; z < n; ++z) {
                std::map<uint32_t, int> acc;
                d3_column(g, x, y, z, [&](uint32_t prow, int c) {
                    const uint32_t px = prow / m1 + 1, py = prow % m1 + 1;
                    d2_column(g, px, py, [&](uint32_t row, int c2) { acc[row] += c * c2; });
                });
                for (const auto& [row, v] : acc)
                    check(v == 0, errc::internal, "composite differential d2*d3 is nonzero");
            }
    return seg;
}

} // namespace sacat
