#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hanoi {

// Default resource caps.  Library entry points that can blow up in memory or
// time take a ResourceLimits argument; the CLI exposes environment-variable
// overrides for each field.
struct ResourceLimits {
    std::uint64_t max_graph_vertices = 2'000'000;  // build_graph / BFS
    std::uint64_t max_diameter_vertices = 10'000;  // all-pairs BFS
    std::uint64_t max_dense_dim = 2187;            // dense matrices / eigensolver, 3^7
    int max_exact_pencil_level = 5;                // exact Bareiss side
    int max_preimage_depth = 40;
    std::uint64_t max_point_count = std::uint64_t{1} << 24;  // preimage/julia point sets
};

class ResourceCapExceeded : public std::runtime_error {
public:
    explicit ResourceCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hanoi
