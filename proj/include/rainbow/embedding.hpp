#pragma once

#include <cstdint>
#include <vector>

#include "rainbow/graph.hpp"

namespace rb {

// All copies of a target graph inside K_n, each as a set of canonical edge
// indices.  Copies are sorted ascending as 128-bit integers (bit i = edge
// index i), which is stable across runs and keeps overlapping copies close
// together.  Built once, immutable, shared read-only by search workers.
struct EmbeddingTable {
    int n = 0;
    SmallGraph target;
    int edges_per_copy = 0;
    std::vector<eset> copy_masks;
    std::vector<std::uint8_t> copy_edges; // flattened, stride = edges_per_copy

    std::size_t copy_count() const { return copy_masks.size(); }
    const std::uint8_t* edges_of(std::size_t c) const {
        return copy_edges.data() + c * edges_per_copy;
    }
    std::vector<int> vertices_of(std::size_t c) const;
};

// Enumerates every distinct copy of `target` in K_n.  Requires
// |V(target)| <= n <= 12 and an isolate-free target.
EmbeddingTable enumerate_copies(int n, const SmallGraph& target);

} // namespace rb
