#pragma once

#include <cstdint>
#include <optional>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rb {

struct SearchConfig {
    double timeout_seconds = 300.0;
    int workers = 0;              // 0 = hardware concurrency; never affects results
    std::uint64_t node_limit = 0; // 0 = unlimited
    int split_depth = 6;          // DFS depth at which subtrees become tasks
    int prefix_symmetry_max = 6;  // largest j for S_j prefix canonicity pruning
    bool progress = false;        // progress lines on stderr
};

// Three-valued: a timeout is reported as unknown, never as infeasible.
enum class Feasibility { feasible, infeasible, unknown };

const char* to_string(Feasibility f);

struct DecideResult {
    Feasibility verdict = Feasibility::unknown;
    std::optional<EdgeColoring> witness; // present iff feasible
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
};

enum class SearchStatus { exact, lower_bound_only };

struct SearchOutcome {
    int value = -1;
    SearchStatus status = SearchStatus::lower_bound_only;
    std::optional<EdgeColoring> coloring_witness;
    std::optional<SmallGraph> graph_witness;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
};

// Is there an edge-coloring of K_n with exactly k colors and no rainbow
// copy of the target?  DFS over edges in canonical order with
// restricted-growth color branching, copy watchlists, a color-count bound,
// and lexicographic prefix canonicity under S_j for the first C(j,2) edges.
DecideResult decide_colorable(int n, const SmallGraph& target, int k,
                              const SearchConfig& cfg = {});

// f(n,H): the largest k for which decide_colorable succeeds.  Seeds the
// climb with a rainbow-extremal-plus-one coloring (or the given seed if it
// is better), so only the infeasibility side is usually searched.
SearchOutcome f_exact(int n, const SmallGraph& target, const SearchConfig& cfg = {},
                      const std::optional<EdgeColoring>& seed = {});

// rb(n,H) = f(n,H) + 1; witness is an optimal f-coloring.
SearchOutcome rb_exact(int n, const SmallGraph& target, const SearchConfig& cfg = {});

// ext(n, family) by orderly generation: graphs are grown one vertex at a
// time and kept only in their canonical labeling, with forbidden-subgraph
// checks restricted to copies through the newest vertex.  n <= 16.
SearchOutcome turan_exact(int n, const ForbiddenFamily& family,
                          const SearchConfig& cfg = {});

} // namespace rb
