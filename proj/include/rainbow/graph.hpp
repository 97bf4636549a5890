#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rb {

// Vertex sets are 16-bit masks; edge sets over K_16 (120 edges) fit in 128 bits.
using vset = std::uint16_t;
using eset = unsigned __int128;

constexpr int max_order = 16;        // representation cap (Turan search hosts)
constexpr int target_order_cap = 12; // cap for targets and catalog graphs

constexpr int popcount(eset s) {
    return __builtin_popcountll(static_cast<std::uint64_t>(s)) +
           __builtin_popcountll(static_cast<std::uint64_t>(s >> 64));
}

constexpr eset ebit(int i) { return eset{1} << i; }

// Canonical edge index of {i,j}, i < j.  Pairs are ordered colex, so the
// first C(k,2) indices are exactly the edges inside vertex set {0..k-1}.
constexpr int edge_index(int i, int j) {
    return j * (j - 1) / 2 + i;
}

constexpr int edge_count_of(int n) { return n * (n - 1) / 2; }

std::pair<int, int> edge_vertices(int index);

// Undirected simple graph on at most 16 vertices, adjacency as per-vertex
// bitsets.  Ordinary construction is capped at order 12; hosts for the
// Turan search may use host() to go up to 16.
class SmallGraph {
public:
    explicit SmallGraph(int order);
    static SmallGraph host(int order);

    int order() const { return order_; }
    int size() const;

    bool has_edge(int i, int j) const { return (adj_[i] >> j) & 1; }
    void add_edge(int i, int j);
    void remove_edge(int i, int j);

    vset neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return __builtin_popcount(adj_[v]); }

    // Edges in canonical (colex) order.
    std::vector<std::pair<int, int>> edges() const;
    eset edge_mask() const;

    int components() const;
    bool connected() const { return components() == 1; }

    std::vector<int> degree_sequence() const;

    SmallGraph without_edge(int i, int j) const;
    // Subgraph induced by the vertices of `keep`, relabeled 0.. in id order.
    SmallGraph induced(vset keep) const;
    // The graph with isolated vertices dropped (labels compacted).
    SmallGraph core() const;
    int isolated_count() const;

    bool operator==(const SmallGraph& o) const {
        return order_ == o.order_ && adj_ == o.adj_;
    }

private:
    SmallGraph(int order, bool is_host);
    int order_;
    std::array<vset, max_order> adj_{};
};

// ---------------------------------------------------------------------------
// Named graphs.  Frozen labelings (vertices 0-based):
//   bull      triangle 0,1,2 with pendant edges 1-3 and 2-4
//   diamond   K_4 minus the edge {2,3}
//   house     complement of the path 0-1-2-3-4
//   K2,3/K2,4 parts {0,1} and {2,..}
//   C_k       cycle 0-1-..-(k-1)-0
//   C_k+      C_k plus pendant edge {0,k}
//   P_k       path 0-1-..-(k-1)
//   K_k       complete on 0..k-1
//   K1,k      star centered at 0
//   K1,3+e    star center 0, leaves 1,2,3, plus edge {1,2}
//   Z2        triangle 0,1,2 with attached path 2-3-4
//   W5        cycle 0..4 plus hub 5
//   TC5       cycle 0..4 plus chords {0,2} and {0,3}

enum class GraphTag {
    bull,
    diamond,
    house,
    k23,
    k24,
    cycle,              // C_k, parametric
    cycle_plus,         // C_k with a pendant edge
    path,               // P_k
    complete,           // K_k
    star,               // K_{1,k}
    star_plus_edge,     // K_{1,3}+e
    z2,
    w5,
    tc5,
};

struct GraphName {
    GraphTag tag;
    int k = 0; // parameter for cycle/cycle_plus/path/complete/star
};

// Parses a tag such as "bull", "C5", "C5+", "P4", "K4", "K1,3", "K1,3+e",
// "K2,3", "K2,4", "Z2", "W5", "TC5", "house", "diamond".
std::optional<GraphName> parse_graph_name(const std::string& s);

SmallGraph resolve(const GraphName& name);

// Accepts a tag or a graph literal "<p>:<i>-<j>,...".
SmallGraph resolve(const std::string& name_or_literal);

// Graph literal mini-format: "<p>:<i>-<j>,<i>-<j>,...".  The dash may be
// omitted when p <= 10 and both indices are single digits ("5:01,02").
SmallGraph parse_graph_literal(const std::string& s);
std::string format_graph_literal(const SmallGraph& g);

// ---------------------------------------------------------------------------

// |E| - |V| + (number of components); 0 for forests, 1 for unicyclic graphs.
int cyclomatic(const SmallGraph& g);

// Non-induced subgraph containment.  Isolated vertices of `h` only require
// the host to have enough vertices: G contains K_2+K_1 iff G contains K_2
// and |V(G)| >= 3.
bool contains_subgraph(const SmallGraph& g, const SmallGraph& h);

// Same, but only embeddings that use host vertex v (for incremental checks
// after adding v).  Edgeless h never matches through v.
bool contains_subgraph_through(const SmallGraph& g, const SmallGraph& h, int v);

std::vector<int> degree_sequence(const SmallGraph& g);

// A family of forbidden subgraphs, deduplicated up to isomorphism and
// ordered by (order, size, canonical code).
struct ForbiddenFamily {
    std::vector<SmallGraph> members;

    static ForbiddenFamily of(std::vector<SmallGraph> graphs);
    std::string describe() const;
};

// The family {H - e : e in E(H)} up to isomorphism, isolated vertices
// retained.  Throws on edgeless H.
ForbiddenFamily minus_edge_family(const SmallGraph& h);

} // namespace rb
