#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rb {

// Adjacency bitstring (canonical edge order) under the lexicographically
// minimal vertex relabeling.  Equal codes <=> isomorphic graphs.
struct CanonicalCode {
    int order = 0;
    std::vector<std::uint8_t> bytes; // packed bits, edge index 8*i+b -> bytes[i] bit b

    std::string hex() const;
    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const SmallGraph& g);

// The code of the graph's own labeling (no relabeling).
CanonicalCode labeled_code(const SmallGraph& g);

// True iff the graph's own labeling already achieves the canonical code.
// This is the acceptance test of the orderly (canonical-representative)
// generation in the Turan search.
bool is_canonical_labeling(const SmallGraph& g);

bool isomorphic(const SmallGraph& a, const SmallGraph& b);

// |Aut(G)| by brute force over vertex permutations; order <= 10.
long automorphism_count(const SmallGraph& g);

} // namespace rb
