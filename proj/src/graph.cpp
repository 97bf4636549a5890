#include "rainbow/graph.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "rainbow/canonical.hpp"

namespace rb {

std::pair<int, int> edge_vertices(int index) {
    int j = 1;
    while (edge_index(0, j + 1) <= index) ++j;
    return {index - edge_index(0, j), j};
}

SmallGraph::SmallGraph(int order, bool is_host) : order_(order) {
    const int cap = is_host ? max_order : target_order_cap;
    if (order < 1 || order > cap)
        throw std::invalid_argument("graph order " + std::to_string(order) +
                                    " out of range 1.." + std::to_string(cap));
}

SmallGraph::SmallGraph(int order) : SmallGraph(order, false) {}

SmallGraph SmallGraph::host(int order) { return SmallGraph(order, true); }

int SmallGraph::size() const {
    int m = 0;
    for (int v = 0; v < order_; ++v) m += degree(v);
    return m / 2;
}

void SmallGraph::add_edge(int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= order_ || j >= order_)
        throw std::invalid_argument("bad edge endpoints");
    adj_[i] |= vset(1) << j;
    adj_[j] |= vset(1) << i;
}

void SmallGraph::remove_edge(int i, int j) {
    adj_[i] &= ~(vset(1) << j);
    adj_[j] &= ~(vset(1) << i);
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j < order_; ++j)
        for (int i = 0; i < j; ++i)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

eset SmallGraph::edge_mask() const {
    eset m = 0;
    for (int j = 1; j < order_; ++j)
        for (int i = 0; i < j; ++i)
            if (has_edge(i, j)) m |= ebit(edge_index(i, j));
    return m;
}

int SmallGraph::components() const {
    vset seen = 0;
    int count = 0;
    for (int v = 0; v < order_; ++v) {
        if ((seen >> v) & 1) continue;
        ++count;
        vset frontier = vset(1) << v;
        while (frontier) {
            seen |= frontier;
            vset next = 0;
            for (int u = 0; u < order_; ++u)
                if ((frontier >> u) & 1) next |= adj_[u];
            frontier = next & ~seen;
        }
    }
    return count;
}

std::vector<int> SmallGraph::degree_sequence() const {
    std::vector<int> d(order_);
    for (int v = 0; v < order_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

SmallGraph SmallGraph::without_edge(int i, int j) const {
    SmallGraph g = *this;
    g.remove_edge(i, j);
    return g;
}

SmallGraph SmallGraph::induced(vset keep) const {
    std::vector<int> ids;
    for (int v = 0; v < order_; ++v)
        if ((keep >> v) & 1) ids.push_back(v);
    if (ids.empty()) throw std::invalid_argument("empty induced vertex set");
    SmallGraph g(static_cast<int>(ids.size()), true);
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (has_edge(ids[a], ids[b])) g.add_edge(int(a), int(b));
    return g;
}

SmallGraph SmallGraph::core() const {
    vset keep = 0;
    for (int v = 0; v < order_; ++v)
        if (adj_[v]) keep |= vset(1) << v;
    if (!keep) keep = 1; // edgeless graph: keep a single vertex
    return induced(keep);
}

int SmallGraph::isolated_count() const {
    int k = 0;
    for (int v = 0; v < order_; ++v)
        if (!adj_[v]) ++k;
    return k;
}

// ---------------------------------------------------------------------------

namespace {

SmallGraph make_path(int k) {
    SmallGraph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

SmallGraph make_cycle(int k) {
    SmallGraph g = make_path(k);
    g.add_edge(0, k - 1);
    return g;
}

SmallGraph make_complete(int k) {
    SmallGraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

SmallGraph make_biclique(int a, int b) {
    SmallGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

} // namespace

std::optional<GraphName> parse_graph_name(const std::string& s) {
    if (s == "bull") return GraphName{GraphTag::bull};
    if (s == "diamond") return GraphName{GraphTag::diamond};
    if (s == "house") return GraphName{GraphTag::house};
    if (s == "K2,3") return GraphName{GraphTag::k23};
    if (s == "K2,4") return GraphName{GraphTag::k24};
    if (s == "K1,3+e") return GraphName{GraphTag::star_plus_edge};
    if (s == "Z2") return GraphName{GraphTag::z2};
    if (s == "W5") return GraphName{GraphTag::w5};
    if (s == "TC5") return GraphName{GraphTag::tc5};

    auto param = [&](std::size_t pos, std::size_t end) -> std::optional<int> {
        if (pos >= end) return std::nullopt;
        int k = 0;
        for (std::size_t i = pos; i < end; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
            k = k * 10 + (s[i] - '0');
        }
        return k;
    };

    if (s.size() >= 2 && s[0] == 'C') {
        bool plus = s.back() == '+';
        if (auto k = param(1, s.size() - (plus ? 1 : 0)))
            return GraphName{plus ? GraphTag::cycle_plus : GraphTag::cycle, *k};
    }
    if (s.size() >= 2 && s[0] == 'P') {
        if (auto k = param(1, s.size())) return GraphName{GraphTag::path, *k};
    }
    if (s.size() >= 4 && s.rfind("K1,", 0) == 0) {
        if (auto k = param(3, s.size())) return GraphName{GraphTag::star, *k};
    }
    if (s.size() >= 2 && s[0] == 'K') {
        if (auto k = param(1, s.size())) return GraphName{GraphTag::complete, *k};
    }
    return std::nullopt;
}

SmallGraph resolve(const GraphName& name) {
    switch (name.tag) {
    case GraphTag::bull: {
        SmallGraph g = make_complete(3);
        SmallGraph b(5);
        for (auto [i, j] : g.edges()) b.add_edge(i, j);
        b.add_edge(1, 3);
        b.add_edge(2, 4);
        return b;
    }
    case GraphTag::diamond: {
        SmallGraph g = make_complete(4);
        g.remove_edge(2, 3);
        return g;
    }
    case GraphTag::house: {
        SmallGraph g(5);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (j != i + 1) g.add_edge(i, j); // complement of path 0-1-2-3-4
        return g;
    }
    case GraphTag::k23: return make_biclique(2, 3);
    case GraphTag::k24: return make_biclique(2, 4);
    case GraphTag::cycle:
        if (name.k < 3) throw std::invalid_argument("cycle needs k >= 3");
        return make_cycle(name.k);
    case GraphTag::cycle_plus: {
        if (name.k < 3) throw std::invalid_argument("cycle needs k >= 3");
        if (name.k + 1 > target_order_cap)
            throw std::invalid_argument("C_k+ parameter too large");
        SmallGraph c = make_cycle(name.k);
        SmallGraph g(name.k + 1);
        for (auto [i, j] : c.edges()) g.add_edge(i, j);
        g.add_edge(0, name.k);
        return g;
    }
    case GraphTag::path:
        if (name.k < 1) throw std::invalid_argument("path needs k >= 1");
        return make_path(name.k);
    case GraphTag::complete:
        if (name.k < 1) throw std::invalid_argument("complete graph needs k >= 1");
        return make_complete(name.k);
    case GraphTag::star: {
        if (name.k < 1) throw std::invalid_argument("star needs k >= 1");
        if (name.k + 1 > target_order_cap)
            throw std::invalid_argument("star parameter too large");
        SmallGraph g(name.k + 1);
        for (int i = 1; i <= name.k; ++i) g.add_edge(0, i);
        return g;
    }
    case GraphTag::star_plus_edge: {
        SmallGraph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.add_edge(1, 2);
        return g;
    }
    case GraphTag::z2: {
        SmallGraph g(5);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        return g;
    }
    case GraphTag::w5: {
        SmallGraph g(6);
        for (auto [i, j] : make_cycle(5).edges()) g.add_edge(i, j);
        for (int i = 0; i < 5; ++i) g.add_edge(i, 5);
        return g;
    }
    case GraphTag::tc5: {
        SmallGraph g = make_cycle(5);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        return g;
    }
    }
    throw std::invalid_argument("unknown graph tag");
}

SmallGraph resolve(const std::string& name_or_literal) {
    if (auto n = parse_graph_name(name_or_literal)) return resolve(*n);
    if (name_or_literal.find(':') != std::string::npos)
        return parse_graph_literal(name_or_literal);
    throw std::invalid_argument("unknown graph name: " + name_or_literal);
}

SmallGraph parse_graph_literal(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("graph literal missing ':'");
    int p = 0;
    try {
        std::size_t used = 0;
        p = std::stoi(s.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("graph literal: bad vertex count");
    }
    if (p < 1 || p > max_order)
        throw std::invalid_argument("graph literal: order out of range");
    SmallGraph g = SmallGraph::host(p);
    std::string rest = s.substr(colon + 1);
    if (rest.empty()) return g;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int i = -1, j = -1;
        auto dash = tok.find('-');
        try {
            if (dash != std::string::npos) {
                i = std::stoi(tok.substr(0, dash));
                j = std::stoi(tok.substr(dash + 1));
            } else if (tok.size() == 2 && p <= 10) {
                i = tok[0] - '0';
                j = tok[1] - '0';
            } else {
                throw std::invalid_argument("");
            }
        } catch (...) {
            throw std::invalid_argument("graph literal: bad edge token '" + tok + "'");
        }
        if (i == j || i < 0 || j < 0 || i >= p || j >= p)
            throw std::invalid_argument("graph literal: edge endpoints out of range in '" + tok + "'");
        if (g.has_edge(i, j))
            throw std::invalid_argument("graph literal: duplicate edge '" + tok + "'");
        g.add_edge(i, j);
    }
    return g;
}

std::string format_graph_literal(const SmallGraph& g) {
    std::string out = std::to_string(g.order()) + ":";
    bool first = true;
    for (auto [i, j] : g.edges()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(i) + "-" + std::to_string(j);
    }
    return out;
}

// ---------------------------------------------------------------------------

int cyclomatic(const SmallGraph& g) {
    return g.size() - g.order() + g.components();
}

std::vector<int> degree_sequence(const SmallGraph& g) { return g.degree_sequence(); }

namespace {

// Backtracking embedding of h's non-isolated part into g (non-induced).
// Vertices of h are processed in a connectivity-friendly order; `pin`
// optionally forces the first h-vertex onto a fixed g-vertex.
bool embed_core(const SmallGraph& g, const SmallGraph& h_core,
                const std::vector<int>& order, std::size_t depth,
                std::array<int, max_order>& image, vset used) {
    if (depth == order.size()) return true;
    int u = order[depth];
    vset h_adj = h_core.neighbors(u);
    for (int v = 0; v < g.order(); ++v) {
        if ((used >> v) & 1) continue;
        if (g.degree(v) < h_core.degree(u)) continue;
        bool ok = true;
        for (std::size_t t = 0; t < depth; ++t) {
            if ((h_adj >> order[t]) & 1) {
                if (!g.has_edge(image[order[t]], v)) { ok = false; break; }
            }
        }
        if (!ok) continue;
        image[u] = v;
        if (embed_core(g, h_core, order, depth + 1, image, vset(used | (vset(1) << v))))
            return true;
    }
    return false;
}

std::vector<int> embedding_order(const SmallGraph& h) {
    // Greedy: highest degree first, then most neighbors among placed.
    std::vector<int> order;
    vset placed = 0;
    for (int step = 0; step < h.order(); ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int u = 0; u < h.order(); ++u) {
            if ((placed >> u) & 1) continue;
            int links = __builtin_popcount(vset(h.neighbors(u) & placed));
            int deg = h.degree(u);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = u; best_links = links; best_deg = deg;
            }
        }
        order.push_back(best);
        placed |= vset(1) << best;
    }
    return order;
}

} // namespace

bool contains_subgraph(const SmallGraph& g, const SmallGraph& h) {
    if (g.order() < h.order()) return false;
    if (h.size() == 0) return true;
    if (g.size() < h.size()) return false;
    SmallGraph core = h.core();
    std::vector<int> order = embedding_order(core);
    std::array<int, max_order> image{};
    return embed_core(g, core, order, 0, image, 0);
}

bool contains_subgraph_through(const SmallGraph& g, const SmallGraph& h, int v) {
    if (g.order() < h.order() || h.size() == 0) return false;
    if (g.size() < h.size()) return false;
    SmallGraph core = h.core();
    std::vector<int> order = embedding_order(core);
    std::array<int, max_order> image{};
    // Try pinning each core vertex onto v.
    for (int u = 0; u < core.order(); ++u) {
        if (core.degree(u) > g.degree(v)) continue;
        std::vector<int> ord;
        ord.push_back(u);
        for (int w : order)
            if (w != u) ord.push_back(w);
        // Re-run the greedy order from u for better pruning.
        image[u] = v;
        vset used = vset(1) << v;
        // Place remaining vertices in connectivity order seeded at u.
        std::vector<int> rest;
        vset placed = vset(1) << u;
        for (int step = 1; step < core.order(); ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int w = 0; w < core.order(); ++w) {
                if ((placed >> w) & 1) continue;
                int links = __builtin_popcount(vset(core.neighbors(w) & placed));
                int deg = core.degree(w);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = w; best_links = links; best_deg = deg;
                }
            }
            rest.push_back(best);
            placed |= vset(1) << best;
        }
        std::vector<int> full;
        full.push_back(u);
        full.insert(full.end(), rest.begin(), rest.end());
        if (embed_core(g, core, full, 1, image, used)) return true;
    }
    return false;
}

ForbiddenFamily ForbiddenFamily::of(std::vector<SmallGraph> graphs) {
    ForbiddenFamily fam;
    std::vector<CanonicalCode> codes;
    for (auto& g : graphs) {
        CanonicalCode code = canonical_code(g);
        bool dup = false;
        for (auto& c : codes)
            if (c == code) { dup = true; break; }
        if (dup) continue;
        codes.push_back(std::move(code));
        fam.members.push_back(g);
    }
    // Order by (order, size, canonical code).
    std::vector<std::size_t> idx(fam.members.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const SmallGraph& x = fam.members[a];
        const SmallGraph& y = fam.members[b];
        if (x.order() != y.order()) return x.order() < y.order();
        if (x.size() != y.size()) return x.size() < y.size();
        return codes[a] < codes[b];
    });
    std::vector<SmallGraph> sorted;
    for (auto i : idx) sorted.push_back(fam.members[i]);
    fam.members = std::move(sorted);
    // Subgraph-of-another members are legal but usually a mistake: warn.
    for (std::size_t a = 0; a < fam.members.size(); ++a)
        for (std::size_t b = 0; b < fam.members.size(); ++b)
            if (a != b && contains_subgraph(fam.members[b], fam.members[a]))
                std::cerr << "warning: forbidden family member "
                          << format_graph_literal(fam.members[a])
                          << " is a subgraph of member "
                          << format_graph_literal(fam.members[b]) << "\n";
    return fam;
}

std::string ForbiddenFamily::describe() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ", ";
        out += format_graph_literal(members[i]);
    }
    return out + "}";
}

ForbiddenFamily minus_edge_family(const SmallGraph& h) {
    if (h.size() == 0) throw std::invalid_argument("minus_edge_family: edgeless graph");
    std::vector<SmallGraph> members;
    for (auto [i, j] : h.edges()) members.push_back(h.without_edge(i, j));
    return ForbiddenFamily::of(std::move(members));
}

} // namespace rb
