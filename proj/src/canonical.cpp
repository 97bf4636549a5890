#include "rainbow/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rb {

namespace {

// Backtracking search for the lexicographically minimal adjacency code.
//
// Positions are filled left to right; placing vertex v at position t fixes
// the code column (adj bits of v against the placed prefix, earlier
// position = more significant).  The current best code is kept per column
// and updated eagerly, so each node only compares its column against the
// best and descends on columns that match the minimum.  Complete labelings
// equal to the best yield automorphisms; candidates lying in one orbit of
// the recorded prefix-fixing automorphisms are interchangeable and only one
// representative is explored.
struct MinCodeSearch {
    int n;
    std::array<vset, max_order> adj{};
    std::array<std::uint32_t, max_order> best_col{};  // column per position
    std::array<std::uint8_t, max_order> best_perm{};  // position -> vertex
    bool best_concrete = true;
    int concrete_from; // columns >= this in best are stale after an improve

    std::array<std::uint8_t, max_order> chosen{};
    vset used = 0;

    std::vector<std::array<std::uint8_t, max_order>> gens;

    bool test_mode = false;  // abort as soon as identity is beaten
    bool beaten = false;

    explicit MinCodeSearch(const SmallGraph& g) : n(g.order()), concrete_from(g.order()) {
        for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
        for (int t = 0; t < n; ++t) {
            best_perm[t] = std::uint8_t(t);
            std::uint32_t col = 0;
            for (int i = 0; i < t; ++i)
                col = (col << 1) | ((adj[t] >> i) & 1);
            best_col[t] = col;
        }
    }

    std::uint32_t column(int t, int v) const {
        std::uint32_t col = 0;
        for (int i = 0; i < t; ++i)
            col = (col << 1) | ((adj[v] >> chosen[i]) & 1);
        return col;
    }

    // Union-find over vertices under recorded automorphisms fixing
    // chosen[0..t-1] pointwise.
    void orbit_roots(int t, std::array<std::uint8_t, max_order>& root) const {
        for (int v = 0; v < n; ++v) root[v] = std::uint8_t(v);
        auto find = [&](int v) {
            while (root[v] != v) { root[v] = root[root[v]]; v = root[v]; }
            return v;
        };
        for (const auto& g : gens) {
            bool fixes = true;
            for (int i = 0; i < t; ++i)
                if (g[chosen[i]] != chosen[i]) { fixes = false; break; }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(g[v]);
                if (a != b) root[b] = std::uint8_t(a);
            }
        }
        for (int v = 0; v < n; ++v) root[v] = std::uint8_t(find(v));
    }

    void record_automorphism() {
        // chosen and best_perm produce the same code; map one onto the other.
        std::array<std::uint8_t, max_order> g{};
        bool identity = true;
        for (int t = 0; t < n; ++t) {
            g[best_perm[t]] = chosen[t];
            if (best_perm[t] != chosen[t]) identity = false;
        }
        if (!identity) gens.push_back(g);
    }

    void run(int t) {
        if (beaten) return;
        if (t == n) {
            if (best_concrete) record_automorphism();
            else {
                best_perm = chosen;
                best_concrete = true;
            }
            return;
        }
        // Column values of unused candidates.
        std::uint32_t min_col = ~std::uint32_t(0);
        for (int v = 0; v < n; ++v)
            if (!((used >> v) & 1)) min_col = std::min(min_col, column(t, v));

        std::uint32_t bcol = best_col[t];
        if (t >= concrete_from) bcol = ~std::uint32_t(0); // stale tail counts as +inf
        if (min_col > bcol) return;
        if (min_col < bcol) {
            if (test_mode) { beaten = true; return; }
            best_col[t] = min_col;
            concrete_from = t + 1;
            best_concrete = false;
        }

        std::array<std::uint8_t, max_order> root{};
        std::size_t gens_seen = gens.size();
        orbit_roots(t, root);
        vset tried = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (column(t, v) != min_col) continue;
            if (gens.size() != gens_seen) { orbit_roots(t, root); gens_seen = gens.size(); }
            if ((tried >> root[v]) & 1) continue;
            tried |= vset(1) << root[v];
            chosen[t] = std::uint8_t(v);
            used |= vset(1) << v;
            run(t + 1);
            used &= ~(vset(1) << v);
            if (beaten) return;
        }
    }
};

CanonicalCode pack_code(int n, const std::array<std::uint32_t, max_order>& cols) {
    // Bits are packed most-significant first so that byte-wise comparison
    // of codes equals lexicographic comparison of the bit strings.
    CanonicalCode code;
    code.order = n;
    code.bytes.assign((edge_count_of(n) + 7) / 8, 0);
    int idx = 0;
    for (int t = 1; t < n; ++t)
        for (int i = 0; i < t; ++i) {
            // column bit for position pair (i, t): bit (t-1-i) of cols[t]
            if ((cols[t] >> (t - 1 - i)) & 1)
                code.bytes[idx / 8] |= std::uint8_t(0x80u >> (idx % 8));
            ++idx;
        }
    return code;
}

} // namespace

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s += digits[b >> 4];
        s += digits[b & 15];
    }
    return s;
}

CanonicalCode canonical_code(const SmallGraph& g) {
    MinCodeSearch search(g);
    search.run(0);
    return pack_code(g.order(), search.best_col);
}

CanonicalCode labeled_code(const SmallGraph& g) {
    std::array<std::uint32_t, max_order> cols{};
    for (int t = 0; t < g.order(); ++t) {
        std::uint32_t col = 0;
        for (int i = 0; i < t; ++i)
            col = (col << 1) | (g.has_edge(i, t) ? 1u : 0u);
        cols[t] = col;
    }
    return pack_code(g.order(), cols);
}

bool is_canonical_labeling(const SmallGraph& g) {
    MinCodeSearch search(g);
    search.test_mode = true;
    search.run(0);
    return !search.beaten;
}

bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_code(a) == canonical_code(b);
}

long automorphism_count(const SmallGraph& g) {
    const int n = g.order();
    if (n > 10) throw std::invalid_argument("automorphism_count: order > 10");
    std::array<int, max_order> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    long count = 0;
    auto edges = g.edges();
    do {
        bool ok = true;
        for (auto [i, j] : edges)
            if (!g.has_edge(perm[i], perm[j])) { ok = false; break; }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return count;
}

} // namespace rb
