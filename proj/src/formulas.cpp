#include "rainbow/formulas.hpp"

#include <stdexcept>

#include "rainbow/canonical.hpp"

namespace rb {

namespace {
long choose2(long x) { return x * (x - 1) / 2; }
} // namespace

long rb_cycle(long n, int k) {
    if (k < 3) throw std::invalid_argument("rb_cycle: k < 3");
    if (n < k) throw std::invalid_argument("rb_cycle: n < k");
    long q = n / (k - 1);
    long r = n % (k - 1);
    return q * choose2(k - 1) + choose2(r) + (n + k - 2) / (k - 1);
}

std::pair<long, long> theorem5_bounds(int p, int k, long n) {
    if (p < 5) throw std::invalid_argument("theorem5_bounds: p < 5");
    if (k < 3 || k > p - 2) throw std::invalid_argument("theorem5_bounds: k outside 3..p-2");
    if (n < p) throw std::invalid_argument("theorem5_bounds: n < p");
    return {rb_cycle(n, k), (p - 2) * n - long(p) * (p - 3) / 2};
}

Eq1Bounds eq1_bounds(long ext_family_value, long ext_target_value) {
    Eq1Bounds b;
    b.lower = ext_family_value + 2;
    b.upper = ext_target_value + 1;
    b.consistent = b.lower <= b.upper;
    return b;
}

const char* to_string(BoundKind k) {
    switch (k) {
    case BoundKind::superlinear: return "superlinear";
    case BoundKind::unicyclic_bounded: return "unicyclic-bounded";
    case BoundKind::cycle_exact: return "cycle-exact";
    case BoundKind::cycle_plus_pendant_exact: return "cycle-plus-pendant-exact";
    case BoundKind::out_of_theorem_scope: return "out-of-theorem-scope";
    }
    return "?";
}

long Classification::lower(long n) const {
    if (!has_bounds()) throw std::logic_error("no bounds for this classification");
    if (n < valid_from) throw std::invalid_argument("n below validity range");
    return rb_cycle(n, cycle_length);
}

long Classification::upper(long n) const {
    if (!has_bounds()) throw std::logic_error("no bounds for this classification");
    if (n < valid_from) throw std::invalid_argument("n below validity range");
    switch (kind) {
    case BoundKind::cycle_exact:
    case BoundKind::cycle_plus_pendant_exact:
        return rb_cycle(n, cycle_length);
    case BoundKind::unicyclic_bounded:
        return (order - 2) * n - long(order) * (order - 3) / 2;
    case BoundKind::superlinear:
    case BoundKind::out_of_theorem_scope:
        break;
    }
    throw std::logic_error("no upper bound evaluator");
}

namespace {

// Girth of a graph known to contain a cycle (BFS from every vertex).
int shortest_cycle(const SmallGraph& g) {
    int best = g.order() + 1;
    for (int s = 0; s < g.order(); ++s) {
        std::array<int, max_order> dist{};
        std::array<int, max_order> parent{};
        dist.fill(-1);
        parent.fill(-1);
        dist[s] = 0;
        std::array<int, max_order> queue{};
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            vset nb = g.neighbors(u);
            for (int v = 0; v < g.order(); ++v) {
                if (!((nb >> v) & 1)) continue;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue[tail++] = v;
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

} // namespace

Classification classify(const SmallGraph& target) {
    Classification c;
    c.order = target.order();
    c.cyclomatic_number = cyclomatic(target);
    const int p = target.order();
    const int v = c.cyclomatic_number;

    if (!target.connected()) {
        c.kind = BoundKind::out_of_theorem_scope;
        c.notes = "disconnected target: outside the classification theorems";
        return c;
    }
    if (v == 0) {
        c.kind = BoundKind::out_of_theorem_scope;
        c.notes = "tree: no cycle to anchor the bounds";
        return c;
    }

    // Exact cases first: C_k itself, then C_k with one pendant edge.
    bool is_cycle = true;
    for (int u = 0; u < p; ++u)
        if (target.degree(u) != 2) { is_cycle = false; break; }
    if (is_cycle && v == 1) {
        c.kind = BoundKind::cycle_exact;
        c.cycle_length = p;
        c.valid_from = p;
        c.notes = "closed form for cycles";
        return c;
    }
    if (v == 1 && p >= 4) {
        SmallGraph pendant = resolve(GraphName{GraphTag::cycle_plus, p - 1});
        if (isomorphic(target, pendant)) {
            c.kind = BoundKind::cycle_plus_pendant_exact;
            c.cycle_length = p - 1;
            c.valid_from = p; // = k+1
            c.notes = "cycle with a pendant edge: equals the cycle value";
            return c;
        }
    }

    if (v >= 2 && p >= 4) {
        c.kind = BoundKind::superlinear;
        c.notes = "cyclomatic number >= 2: grows faster than any linear function";
        return c;
    }

    // v == 1, not a cycle, not a cycle-plus-pendant.
    int k = shortest_cycle(target);
    c.cycle_length = k;
    if (p >= 5 && k >= 3 && k <= p - 2) {
        c.kind = BoundKind::unicyclic_bounded;
        c.valid_from = p;
        c.notes = "unicyclic: cycle formula below, linear bound above";
        return c;
    }
    c.kind = BoundKind::out_of_theorem_scope;
    c.notes = "unicyclic but outside the stated hypotheses";
    return c;
}

// ---------------------------------------------------------------------------

std::optional<int> table_ext_c3c4(int n) {
    static const int vals[] = {3, 5, 6, 8, 10, 12, 15, 16, 18, 21, 23, 26, 28};
    if (n < 4 || n > 16) return std::nullopt;
    return vals[n - 4];
}

std::optional<int> table_rb(const std::string& tag, int n) {
    if (tag == "diamond") {
        static const int vals[] = {5, 7, 8, 10, 12, 14, 17}; // n = 4..10
        if (n < 4 || n > 10) return std::nullopt;
        return vals[n - 4];
    }
    if (tag == "house") {
        static const int vals[] = {8, 9, 11, 14}; // n = 5..8
        if (n < 5 || n > 8) return std::nullopt;
        return vals[n - 5];
    }
    if (tag == "K2,3") {
        static const int vals[] = {8, 10, 12, 14}; // n = 5..8
        if (n < 5 || n > 8) return std::nullopt;
        return vals[n - 5];
    }
    if (tag == "bull") {
        if (n == 5) return 6;
        if (n >= 6) return n + 2;
        return std::nullopt;
    }
    return std::nullopt;
}

const char* non_reproducible_note() {
    return "Asymptotic statements (Theta(n^{3/2}) growth of the diamond, house and "
           "K_{2,3} rainbow numbers, the ext(n,{C3,C4}) limit constants) and "
           "all-n theorems such as rb(n,bull) = n+2 for every n >= 6 are not "
           "reproducible by finite computation; this toolkit checks them only at "
           "the finite scales listed in its tables and tests.";
}

} // namespace rb
