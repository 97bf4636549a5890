#include "rainbow/coloring.hpp"

#include <map>
#include <stdexcept>

namespace rb {

EdgeColoring EdgeColoring::normalize(int n, std::span<const int> raw) {
    const int m = edge_count_of(n);
    if (static_cast<int>(raw.size()) != m)
        throw std::invalid_argument("coloring length " + std::to_string(raw.size()) +
                                    " does not match " + std::to_string(m) +
                                    " edges of K_" + std::to_string(n));
    // Color names are arbitrary; only the partition matters.
    std::map<int, int> rename;
    std::vector<std::uint8_t> out(raw.size());
    int next = 0;
    for (int t = 0; t < m; ++t) {
        if (raw[t] < 0)
            throw std::invalid_argument("negative color id at edge " + std::to_string(t));
        auto [it, fresh] = rename.emplace(raw[t], next);
        if (fresh) ++next;
        out[t] = std::uint8_t(it->second);
    }
    return EdgeColoring(n, std::move(out), next);
}

EdgeColoring EdgeColoring::from_normalized(int n, std::vector<std::uint8_t> colors) {
    const int m = edge_count_of(n);
    if (static_cast<int>(colors.size()) != m)
        throw std::invalid_argument("coloring length does not match edge count");
    int maxc = -1;
    for (int t = 0; t < m; ++t) {
        if (colors[t] > maxc + 1)
            throw std::invalid_argument("colors not in restricted-growth form at edge " +
                                        std::to_string(t));
        maxc = std::max(maxc, int(colors[t]));
    }
    return EdgeColoring(n, std::move(colors), maxc + 1);
}

std::array<int, 3> ColorClasses::unique_color_stats() const {
    std::array<int, 3> out{0, 0, 0};
    for (int i = 0; i < color_count; ++i) {
        if ((c_star >> i) & 1)
            ++out[class_size(i) == 1 ? 0 : 1];
        else
            ++out[2];
    }
    return out;
}

ColorClasses color_classes(const EdgeColoring& c) {
    ColorClasses view;
    view.n = c.n();
    view.color_count = c.color_count();
    view.classes.assign(c.color_count(), 0);
    for (int t = 0; t < c.edge_count(); ++t) view.classes[c.color(t)] |= ebit(t);

    view.s_at.assign(c.n(), 0);
    for (int i = 0; i < c.color_count(); ++i) {
        // Vertices touched by every edge of the class.
        vset common = vset((vset(1) << c.n()) - 1);
        eset cls = view.classes[i];
        for (int t = 0; t < c.edge_count() && common; ++t) {
            if (!((cls >> t) & 1)) continue;
            auto [a, b] = edge_vertices(t);
            common &= vset((vset(1) << a) | (vset(1) << b));
        }
        for (int v = 0; v < c.n(); ++v)
            if ((common >> v) & 1) {
                view.s_at[v] |= cset(1) << i;
                view.c_star |= cset(1) << i;
            }
    }
    return view;
}

cset colors_within(const EdgeColoring& c, vset f) {
    cset out = 0;
    for (int t = 0; t < c.edge_count(); ++t) {
        auto [a, b] = edge_vertices(t);
        if (((f >> a) & 1) && ((f >> b) & 1)) out |= cset(1) << c.color(t);
    }
    return out;
}

cset unique_colors_at(const EdgeColoring& c, vset f, int w) {
    if (!((f >> w) & 1)) throw std::invalid_argument("unique_colors_at: w not in F");
    cset present = 0, violated = 0;
    for (int t = 0; t < c.edge_count(); ++t) {
        auto [a, b] = edge_vertices(t);
        if (!((f >> a) & 1) || !((f >> b) & 1)) continue;
        present |= cset(1) << c.color(t);
        if (a != w && b != w) violated |= cset(1) << c.color(t);
    }
    return present & ~violated;
}

EdgeColoring rainbow_graph_plus_one(int n, const SmallGraph& g) {
    if (g.order() > n)
        throw std::invalid_argument("rainbow_graph_plus_one: graph larger than host");
    std::vector<int> raw(edge_count_of(n), 0);
    int next = 0;
    for (auto [i, j] : g.edges()) raw[edge_index(i, j)] = next++;
    for (int t = 0; t < edge_count_of(n); ++t) {
        auto [i, j] = edge_vertices(t);
        if (i >= g.order() || j >= g.order() || !g.has_edge(i, j)) raw[t] = next;
    }
    return EdgeColoring::normalize(n, raw);
}

std::optional<std::size_t> find_rainbow_copy(const EdgeColoring& c,
                                             const EmbeddingTable& table) {
    if (table.n != c.n())
        throw std::invalid_argument("find_rainbow_copy: table built for different n");
    const int m = table.edges_per_copy;
    for (std::size_t k = 0; k < table.copy_count(); ++k) {
        const std::uint8_t* e = table.edges_of(k);
        cset seen = 0;
        bool rainbow = true;
        for (int t = 0; t < m; ++t) {
            cset bit = cset(1) << c.color(e[t]);
            if (seen & bit) { rainbow = false; break; }
            seen |= bit;
        }
        if (rainbow) return k;
    }
    return std::nullopt;
}

} // namespace rb
