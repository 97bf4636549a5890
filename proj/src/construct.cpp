#include "rainbow/construct.hpp"

#include <numeric>
#include <stdexcept>

namespace rb {

namespace {

EdgeColoring paint(int n, const std::vector<std::pair<int, int>>& rainbow_edges) {
    std::vector<int> raw(edge_count_of(n), 0);
    int next = 0;
    for (auto [i, j] : rainbow_edges) raw[edge_index(std::min(i, j), std::max(i, j))] = next++;
    eset painted = 0;
    for (auto [i, j] : rainbow_edges) painted |= ebit(edge_index(std::min(i, j), std::max(i, j)));
    for (int t = 0; t < edge_count_of(n); ++t)
        if (!((painted >> t) & 1)) raw[t] = next;
    return EdgeColoring::normalize(n, raw);
}

} // namespace

Certificate bull_cycle_partition(int n) {
    if (n < 6) throw std::invalid_argument("bull_cycle_partition: n < 6");
    if (n > target_order_cap) throw std::invalid_argument("bull_cycle_partition: n > 12");
    const int r = n % 3;
    const int triangles = n / 3 - r;
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (int t = 0; t < triangles; ++t, base += 3) {
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base, base + 2);
        edges.emplace_back(base + 1, base + 2);
    }
    for (int q = 0; q < r; ++q, base += 4) {
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base + 1, base + 2);
        edges.emplace_back(base + 2, base + 3);
        edges.emplace_back(base, base + 3);
    }
    EdgeColoring c = paint(n, edges);
    return Certificate{n, "bull", c, c.color_count(), "cycle-partition"};
}

Certificate disjoint_cliques_plus_one(int n, const std::vector<int>& parts,
                                      const std::string& target) {
    if (n < 2 || n > target_order_cap)
        throw std::invalid_argument("disjoint_cliques_plus_one: n out of range");
    int total = std::accumulate(parts.begin(), parts.end(), 0);
    if (total > n) throw std::invalid_argument("clique sizes exceed n");
    for (int s : parts)
        if (s < 1) throw std::invalid_argument("clique sizes must be >= 1");
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (int s : parts) {
        for (int j = 1; j < s; ++j)
            for (int i = 0; i < j; ++i) edges.emplace_back(base + i, base + j);
        base += s;
    }
    EdgeColoring c = paint(n, edges);
    std::string tag = "cliques=";
    for (std::size_t i = 0; i < parts.size(); ++i)
        tag += (i ? "," : "") + std::to_string(parts[i]);
    return Certificate{n, target, c, c.color_count(), tag};
}

Certificate k23_special(int n) {
    if (n == 6) {
        // K_4 on 0..3 rainbow; one color on the 4-5 edge, one on all edges
        // at 4, one on all edges at 5.
        std::vector<int> raw(edge_count_of(6), 0);
        int next = 0;
        for (int j = 1; j < 4; ++j)
            for (int i = 0; i < j; ++i) raw[edge_index(i, j)] = next++;
        raw[edge_index(4, 5)] = next++;
        for (int i = 0; i < 4; ++i) raw[edge_index(i, 4)] = next;
        ++next;
        for (int i = 0; i < 4; ++i) raw[edge_index(i, 5)] = next;
        EdgeColoring c = EdgeColoring::normalize(6, raw);
        return Certificate{6, "K2,3", c, c.color_count(), "k23-special"};
    }
    if (n == 7) {
        // K_3 on 0..2 and K_4 on 3..6 rainbow; one color on the edges from
        // 0 to the K_4, one on the edges from {1,2} to the K_4.
        std::vector<int> raw(edge_count_of(7), 0);
        int next = 0;
        raw[edge_index(0, 1)] = next++;
        raw[edge_index(0, 2)] = next++;
        raw[edge_index(1, 2)] = next++;
        for (int j = 4; j < 7; ++j)
            for (int i = 3; i < j; ++i) raw[edge_index(i, j)] = next++;
        for (int j = 3; j < 7; ++j) raw[edge_index(0, j)] = next;
        ++next;
        for (int j = 3; j < 7; ++j) {
            raw[edge_index(1, j)] = next;
            raw[edge_index(2, j)] = next;
        }
        EdgeColoring c = EdgeColoring::normalize(7, raw);
        return Certificate{7, "K2,3", c, c.color_count(), "k23-special"};
    }
    throw std::invalid_argument("k23_special: only n = 6 and n = 7");
}

Certificate extremal_plus_one(int n, const ForbiddenFamily& family,
                              const std::string& target, const SearchConfig& cfg) {
    SearchOutcome ext = turan_exact(n, family, cfg);
    if (ext.status != SearchStatus::exact)
        throw std::runtime_error("extremal_plus_one: extremal search timed out");
    EdgeColoring c = rainbow_graph_plus_one(n, *ext.graph_witness);
    return Certificate{n, target, c, c.color_count(), "extremal-plus-one"};
}

VerifyResult verify_certificate(const Certificate& cert) {
    VerifyResult r;
    SmallGraph target = resolve(cert.target);
    if (cert.coloring.n() != cert.n) {
        r.reason = "coloring is over K_" + std::to_string(cert.coloring.n()) +
                   ", certificate says n = " + std::to_string(cert.n);
        return r;
    }
    if (cert.claimed_colors != cert.coloring.color_count()) {
        r.reason = "claimed_colors = " + std::to_string(cert.claimed_colors) +
                   " but the coloring uses " + std::to_string(cert.coloring.color_count());
        return r;
    }
    EmbeddingTable table = enumerate_copies(cert.n, target);
    if (auto copy = find_rainbow_copy(cert.coloring, table)) {
        r.rainbow_copy = table.vertices_of(*copy);
        r.reason = "rainbow copy on vertices {";
        for (std::size_t i = 0; i < r.rainbow_copy.size(); ++i)
            r.reason += (i ? "," : "") + std::to_string(r.rainbow_copy[i]);
        r.reason += "}";
        return r;
    }
    r.ok = true;
    return r;
}

} // namespace rb
