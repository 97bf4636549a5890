#include "rainbow/embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rb {

namespace {

struct EsetHash {
    std::size_t operator()(eset s) const {
        std::uint64_t lo = static_cast<std::uint64_t>(s);
        std::uint64_t hi = static_cast<std::uint64_t>(s >> 64);
        std::uint64_t h = lo * 0x9e3779b97f4a7c15ull ^ (hi + 0x9e3779b97f4a7c15ull + (lo << 6));
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

} // namespace

std::vector<int> EmbeddingTable::vertices_of(std::size_t c) const {
    vset seen = 0;
    const std::uint8_t* e = edges_of(c);
    for (int t = 0; t < edges_per_copy; ++t) {
        auto [i, j] = edge_vertices(e[t]);
        seen |= vset(1) << i;
        seen |= vset(1) << j;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if ((seen >> v) & 1) out.push_back(v);
    return out;
}

EmbeddingTable enumerate_copies(int n, const SmallGraph& target) {
    if (n > target_order_cap)
        throw std::invalid_argument("enumerate_copies: host order > 12");
    if (target.order() > n)
        throw std::invalid_argument("enumerate_copies: target larger than host");
    if (target.isolated_count() > 0 && target.size() > 0)
        throw std::invalid_argument("enumerate_copies: target has isolated vertices");

    const int p = target.order();
    auto tedges = target.edges();

    EmbeddingTable table{n, target, static_cast<int>(tedges.size()), {}, {}};
    if (tedges.empty()) return table; // no edges: no rainbow constraint representable

    std::unordered_set<eset, EsetHash> seen;
    std::array<int, max_order> image{};
    vset used = 0;

    // All injective maps V(target) -> [n]; duplicates collapse in `seen`.
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == p) {
            eset mask = 0;
            for (auto [i, j] : tedges) {
                int a = image[i], b = image[j];
                if (a > b) std::swap(a, b);
                mask |= ebit(edge_index(a, b));
            }
            seen.insert(mask);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            image[depth] = v;
            used |= vset(1) << v;
            self(self, depth + 1);
            used &= ~(vset(1) << v);
        }
    };
    rec(rec, 0);

    table.copy_masks.assign(seen.begin(), seen.end());
    std::sort(table.copy_masks.begin(), table.copy_masks.end());

    table.copy_edges.reserve(table.copy_masks.size() * tedges.size());
    for (eset mask : table.copy_masks) {
        for (int e = 0; e < edge_count_of(n); ++e)
            if ((mask >> e) & 1) table.copy_edges.push_back(std::uint8_t(e));
    }
    return table;
}

} // namespace rb
