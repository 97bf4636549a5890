#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/embedding.hpp"
#include "rainbow/graph.hpp"

namespace rb {

// Color sets as 128-bit masks (at most C(12,2) = 66 colors in play).
using cset = unsigned __int128;

// An edge-coloring of K_n: one color id per canonical edge index, kept in
// restricted-growth normal form (colors[0] = 0, each next color at most
// one above the running maximum).  Immutable after construction.
class EdgeColoring {
public:
    // Renames colors into restricted-growth form; throws on length mismatch.
    static EdgeColoring normalize(int n, std::span<const int> raw);
    // Accepts an already-normalized array; throws if not in normal form.
    static EdgeColoring from_normalized(int n, std::vector<std::uint8_t> colors);

    int n() const { return n_; }
    int edge_count() const { return edge_count_of(n_); }
    int color_count() const { return color_count_; }
    std::uint8_t color(int edge) const { return colors_[edge]; }
    const std::vector<std::uint8_t>& colors() const { return colors_; }

    bool operator==(const EdgeColoring& o) const = default;

private:
    EdgeColoring(int n, std::vector<std::uint8_t> colors, int count)
        : n_(n), colors_(std::move(colors)), color_count_(count) {}
    int n_;
    std::vector<std::uint8_t> colors_;
    int color_count_;
};

// The color classes E_i, per-vertex unique-color sets S(v), and the unique
// color set C*.  A color is unique at v when its whole class is incident to
// v; a one-edge class is unique at both endpoints.  Every class with a
// color in C* is a star.
struct ColorClasses {
    int n = 0;
    int color_count = 0;
    std::vector<eset> classes;  // E_i as edge masks
    std::vector<cset> s_at;     // S(v) as color masks, one per vertex
    cset c_star = 0;

    int class_size(int i) const { return popcount(classes[i]); }
    // (c1, c2, c3): unique singleton classes, unique classes of size >= 2,
    // and colors outside C*.
    std::array<int, 3> unique_color_stats() const;
};

ColorClasses color_classes(const EdgeColoring& c);

// S(w, F): colors whose every edge inside vertex set F touches w.
// Throws if w is not in F.
cset unique_colors_at(const EdgeColoring& c, vset f, int w);

// Colors present on edges inside F.
cset colors_within(const EdgeColoring& c, vset f);

// Index of the first copy (in table order) whose edges get pairwise
// distinct colors, or nothing.
std::optional<std::size_t> find_rainbow_copy(const EdgeColoring& c,
                                             const EmbeddingTable& table);

// Rainbow-colors the edges of `g` (in canonical order) inside K_n and puts
// one shared fresh color on all remaining edges: |E(g)| + 1 colors.
EdgeColoring rainbow_graph_plus_one(int n, const SmallGraph& g);

} // namespace rb
