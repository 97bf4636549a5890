#include "rainbow/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rainbow/canonical.hpp"

namespace rb {

const char* to_string(Feasibility f) {
    switch (f) {
    case Feasibility::feasible: return "feasible";
    case Feasibility::infeasible: return "infeasible";
    case Feasibility::unknown: return "unknown";
    }
    return "?";
}

namespace {

using clock_type = std::chrono::steady_clock;

struct Deadline {
    clock_type::time_point start = clock_type::now();
    clock_type::time_point end{};
    bool limited = false;

    explicit Deadline(double seconds) {
        if (seconds > 0) {
            limited = true;
            end = start + std::chrono::duration_cast<clock_type::duration>(
                              std::chrono::duration<double>(seconds));
        }
    }
    bool expired() const { return limited && clock_type::now() >= end; }
    double elapsed() const {
        return std::chrono::duration<double>(clock_type::now() - start).count();
    }
    // 0 means unlimited.
    double remaining() const {
        if (!limited) return 0.0;
        double r = std::chrono::duration<double>(end - clock_type::now()).count();
        return std::max(r, 1e-9);
    }
};

// ---------------------------------------------------------------------------
// decide_colorable

struct Checkpoint {
    int depth = 0;      // prefix length C(j,2)
    int count = 0;      // permutations (j! - 1, identity dropped)
    std::vector<std::uint8_t> perms; // flattened edge maps, stride = depth
};

struct DecidePlan {
    int n = 0;
    int edge_total = 0;
    int k = 0;
    int copy_len = 0;
    // Copies grouped by their largest edge index, flattened edge lists.
    std::array<std::uint32_t, 122> bucket_begin{}; // offsets into bucket_edges
    std::vector<std::uint8_t> bucket_edges;
    std::array<std::int8_t, 122> checkpoint_at{};
    std::vector<Checkpoint> checkpoints;
};

DecidePlan build_plan(int n, const EmbeddingTable& table, int k, const SearchConfig& cfg) {
    DecidePlan plan;
    plan.n = n;
    plan.edge_total = edge_count_of(n);
    plan.k = k;
    plan.copy_len = table.edges_per_copy;

    const int m = plan.copy_len;
    // copy_masks ascend numerically, which groups copies by max edge already.
    std::array<std::uint32_t, 122> counts{};
    for (std::size_t c = 0; c < table.copy_count(); ++c)
        counts[table.edges_of(c)[m - 1]] += 1;
    std::uint32_t acc = 0;
    for (int t = 0; t <= plan.edge_total; ++t) {
        plan.bucket_begin[t] = acc * m;
        if (t < plan.edge_total) acc += counts[t];
    }
    plan.bucket_begin[plan.edge_total + 1] = acc * m;
    plan.bucket_edges.resize(acc * m);
    std::array<std::uint32_t, 122> fill{};
    for (std::size_t c = 0; c < table.copy_count(); ++c) {
        const std::uint8_t* e = table.edges_of(c);
        int t = e[m - 1];
        std::uint32_t at = plan.bucket_begin[t] + fill[t] * m;
        std::copy(e, e + m, plan.bucket_edges.begin() + at);
        fill[t] += 1;
    }

    plan.checkpoint_at.fill(-1);
    for (int j = 3; j <= std::min({n, cfg.prefix_symmetry_max, 7}); ++j) {
        int depth = edge_count_of(j);
        if (depth >= plan.edge_total) break;
        Checkpoint cp;
        cp.depth = depth;
        std::array<int, 8> perm{};
        std::iota(perm.begin(), perm.begin() + j, 0);
        while (std::next_permutation(perm.begin(), perm.begin() + j)) {
            for (int e = 0; e < depth; ++e) {
                auto [a, b] = edge_vertices(e);
                int pa = perm[a], pb = perm[b];
                if (pa > pb) std::swap(pa, pb);
                cp.perms.push_back(std::uint8_t(edge_index(pa, pb)));
            }
            cp.count += 1;
        }
        plan.checkpoint_at[depth] = std::int8_t(plan.checkpoints.size());
        plan.checkpoints.push_back(std::move(cp));
    }
    return plan;
}

struct SharedSearch {
    Deadline deadline;
    std::uint64_t node_limit = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<int> witness_task{INT_MAX};
    bool progress = false;
    std::atomic<std::int64_t> last_progress_ms{0};

    explicit SharedSearch(const SearchConfig& cfg)
        : deadline(cfg.timeout_seconds), node_limit(cfg.node_limit), progress(cfg.progress) {}

    // Returns true when the search must halt globally.
    bool flush(std::uint64_t& local) {
        std::uint64_t total = nodes.fetch_add(local) + local;
        local = 0;
        if (deadline.expired() || (node_limit && total >= node_limit)) {
            stop.store(true, std::memory_order_relaxed);
            return true;
        }
        if (progress) {
            auto ms = std::int64_t(deadline.elapsed() * 1000);
            auto last = last_progress_ms.load(std::memory_order_relaxed);
            if (ms - last >= 2000 &&
                last_progress_ms.compare_exchange_strong(last, ms)) {
                std::cerr << "  ... " << total << " nodes, "
                          << std::int64_t(total / std::max(0.001, deadline.elapsed()))
                          << " nodes/s\n";
            }
        }
        return stop.load(std::memory_order_relaxed);
    }
};

enum class Walk { none, found, aborted };

struct Partial {
    std::array<std::uint8_t, 32> colors{};
    int used = 0;
};

struct DfsWorker {
    const DecidePlan& plan;
    SharedSearch& shared;
    int task_index = INT_MAX; // tasks above a found witness index abandon work
    int collect_depth = -1;
    std::vector<Partial>* sink = nullptr;

    std::array<std::uint8_t, 128> colors{};
    std::uint64_t local_nodes = 0;
    std::vector<std::uint8_t> witness;

    DfsWorker(const DecidePlan& p, SharedSearch& s) : plan(p), shared(s) {}

    ~DfsWorker() { shared.nodes.fetch_add(local_nodes); }

    bool must_abort() {
        if ((local_nodes & 0xFFF) == 0) {
            if (shared.flush(local_nodes)) return true;
        }
        return shared.stop.load(std::memory_order_relaxed) ||
               shared.witness_task.load(std::memory_order_relaxed) < task_index;
    }

    bool prefix_canonical(const Checkpoint& cp) const {
        const int len = cp.depth;
        const std::uint8_t* p = cp.perms.data();
        for (int q = 0; q < cp.count; ++q, p += len) {
            std::array<std::int8_t, 16> rename;
            rename.fill(-1);
            std::int8_t next = 0;
            for (int i = 0; i < len; ++i) {
                std::uint8_t c = colors[p[i]];
                if (rename[c] < 0) rename[c] = next++;
                if (rename[c] != std::int8_t(colors[i])) {
                    if (rename[c] < std::int8_t(colors[i])) return false;
                    break; // this permutation is worse; try the next one
                }
            }
        }
        return true;
    }

    bool completes_rainbow(int t) const {
        const int m = plan.copy_len;
        const std::uint8_t* p = plan.bucket_edges.data() + plan.bucket_begin[t];
        const std::uint8_t* end = plan.bucket_edges.data() + plan.bucket_begin[t + 1];
        for (; p != end; p += m) {
            cset seen = 0;
            bool repeat = false;
            for (int i = 0; i < m; ++i) {
                cset bit = cset(1) << colors[p[i]];
                if (seen & bit) { repeat = true; break; }
                seen |= bit;
            }
            if (!repeat) return true;
        }
        return false;
    }

    Walk run(int t, int used) {
        if (t == collect_depth) {
            Partial part;
            std::copy(colors.begin(), colors.begin() + t, part.colors.begin());
            part.used = used;
            sink->push_back(part);
            return Walk::none;
        }
        if (t == plan.edge_total) {
            witness.assign(colors.begin(), colors.begin() + t);
            return Walk::found;
        }
        const int cap = std::min(used, plan.k - 1);
        for (int c = 0; c <= cap; ++c) {
            ++local_nodes;
            if (must_abort()) return Walk::aborted;
            int nu = used + (c == used ? 1 : 0);
            if (nu + (plan.edge_total - t - 1) < plan.k) continue;
            colors[t] = std::uint8_t(c);
            if (completes_rainbow(t)) continue;
            int cp = plan.checkpoint_at[t + 1];
            if (cp >= 0 && !prefix_canonical(plan.checkpoints[cp])) continue;
            Walk w = run(t + 1, nu);
            if (w != Walk::none) return w;
        }
        return Walk::none;
    }
};

} // namespace

DecideResult decide_colorable(int n, const SmallGraph& target, int k,
                              const SearchConfig& cfg) {
    Deadline timer(0);
    const int edge_total = edge_count_of(n);
    if (k < 1 || k > edge_total)
        throw std::invalid_argument("decide_colorable: k outside 1.." +
                                    std::to_string(edge_total));
    if (target.order() > n)
        throw std::invalid_argument("decide_colorable: target larger than host");

    DecideResult res;
    if (target.size() <= 1) {
        // Copies with at most one edge are rainbow under every coloring.
        res.verdict = Feasibility::infeasible;
        res.elapsed_seconds = timer.elapsed();
        return res;
    }

    EmbeddingTable table = enumerate_copies(n, target);
    DecidePlan plan = build_plan(n, table, k, cfg);
    SharedSearch shared(cfg);

    int workers = cfg.workers > 0 ? cfg.workers
                                  : std::max(1u, std::thread::hardware_concurrency());
    const int split = std::min(cfg.split_depth, edge_total);

    auto finish = [&](Walk w, std::vector<std::uint8_t> wit) {
        res.nodes = shared.nodes.load();
        res.elapsed_seconds = shared.deadline.elapsed();
        if (w == Walk::found) {
            res.verdict = Feasibility::feasible;
            res.witness = EdgeColoring::from_normalized(n, std::move(wit));
        } else if (w == Walk::aborted || shared.stop.load()) {
            res.verdict = Feasibility::unknown;
        } else {
            res.verdict = Feasibility::infeasible;
        }
        return res;
    };

    if (workers == 1 || split >= edge_total) {
        DfsWorker dfs(plan, shared);
        dfs.task_index = INT_MAX - 1;
        Walk w = dfs.run(0, 0);
        return finish(w, std::move(dfs.witness));
    }

    // Phase 1: enumerate independent subtree roots at the split depth.
    std::vector<Partial> partials;
    {
        DfsWorker dfs(plan, shared);
        dfs.task_index = INT_MAX - 1;
        dfs.collect_depth = split;
        dfs.sink = &partials;
        Walk w = dfs.run(0, 0);
        if (w == Walk::aborted) return finish(Walk::aborted, {});
    }

    // Phase 2: process subtrees; the witness from the lowest task index wins,
    // so results do not depend on scheduling.
    std::vector<Walk> walks(partials.size(), Walk::none);
    std::vector<std::vector<std::uint8_t>> wits(partials.size());
    std::atomic<std::size_t> next{0};
    auto worker_fn = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= partials.size()) return;
            if (shared.witness_task.load() < int(i)) continue;
            if (shared.stop.load()) { walks[i] = Walk::aborted; continue; }
            DfsWorker dfs(plan, shared);
            dfs.task_index = int(i);
            std::copy(partials[i].colors.begin(), partials[i].colors.begin() + split,
                      dfs.colors.begin());
            Walk w = dfs.run(split, partials[i].used);
            walks[i] = w;
            if (w == Walk::found) {
                wits[i] = std::move(dfs.witness);
                int expect = shared.witness_task.load();
                while (int(i) < expect &&
                       !shared.witness_task.compare_exchange_weak(expect, int(i))) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn);
    for (auto& th : pool) th.join();

    for (std::size_t i = 0; i < partials.size(); ++i)
        if (walks[i] == Walk::found) return finish(Walk::found, std::move(wits[i]));
    bool any_aborted = shared.stop.load();
    for (auto w : walks) any_aborted = any_aborted || w == Walk::aborted;
    return finish(any_aborted ? Walk::aborted : Walk::none, {});
}

// ---------------------------------------------------------------------------
// Turan search by orderly generation.

namespace {

// Canonical generation works on graphs labeled so that their own code is
// already minimal; each isomorphism class then has exactly one labeled
// representative, and deleting the last vertex of a canonical graph yields
// a canonical graph, so level-by-level extension is complete.
struct TuranLevel {
    std::vector<SmallGraph> graphs;
};

} // namespace

SearchOutcome turan_exact(int n, const ForbiddenFamily& family, const SearchConfig& cfg) {
    if (n < 1 || n > max_order)
        throw std::invalid_argument("turan_exact: n outside 1..16");
    Deadline timer(cfg.timeout_seconds);

    std::vector<SmallGraph> cores;
    int degree_cap = n - 1;
    for (const auto& member : family.members) {
        if (member.order() > n) continue; // cannot embed: ignore
        if (member.size() == 0)
            throw std::invalid_argument(
                "turan_exact: family member with no edges forbids every graph of order >= " +
                std::to_string(member.order()));
        SmallGraph core = member.core();
        // A forbidden star K_{1,s} caps every degree at s-1.
        auto ds = core.degree_sequence();
        if (core.size() == core.order() - 1 && ds.back() == core.size())
            degree_cap = std::min(degree_cap, core.size() - 1);
        cores.push_back(std::move(core));
    }

    SearchOutcome out;
    std::uint64_t nodes = 0;
    std::vector<SmallGraph> level;
    level.push_back(SmallGraph::host(1));
    int level_order = 1;
    bool timed_out = false;

    for (int k = 1; k < n && !timed_out; ++k) {
        std::vector<SmallGraph> next;
        for (const SmallGraph& parent : level) {
            for (vset s = 0; s < (vset(1) << k); ++s) {
                ++nodes;
                if ((nodes & 0x3FF) == 0 && timer.expired()) { timed_out = true; break; }
                if (__builtin_popcount(s) > degree_cap) continue;
                SmallGraph g = SmallGraph::host(k + 1);
                for (auto [i, j] : parent.edges()) g.add_edge(i, j);
                bool bad = false;
                for (int v = 0; v < k; ++v)
                    if ((s >> v) & 1) {
                        g.add_edge(v, k);
                        if (g.degree(v) > degree_cap) { bad = true; break; }
                    }
                if (bad) continue;
                for (const auto& core : cores)
                    if (contains_subgraph_through(g, core, k)) { bad = true; break; }
                if (bad) continue;
                if (!is_canonical_labeling(g)) continue;
                next.push_back(std::move(g));
            }
            if (timed_out) break;
        }
        if (!timed_out) {
            level = std::move(next);
            level_order = k + 1;
            if (cfg.progress)
                std::cerr << "  turan level " << level_order << ": " << level.size()
                          << " graphs\n";
        }
    }

    // Best graph of the deepest completed level, padded with isolated
    // vertices up to order n when the search timed out early.
    const SmallGraph* best = nullptr;
    CanonicalCode best_code;
    for (const SmallGraph& g : level) {
        if (!best || g.size() > best->size()) {
            best = &g;
            best_code = labeled_code(g);
        } else if (g.size() == best->size()) {
            CanonicalCode code = labeled_code(g);
            if (code < best_code) { best = &g; best_code = std::move(code); }
        }
    }
    if (!best) throw std::logic_error("turan_exact: empty level");
    SmallGraph witness = SmallGraph::host(n);
    for (auto [i, j] : best->edges()) witness.add_edge(i, j);
    (void)level_order;

    out.value = witness.size();
    out.status = timed_out ? SearchStatus::lower_bound_only : SearchStatus::exact;
    out.graph_witness = witness;
    out.nodes = nodes;
    out.elapsed_seconds = timer.elapsed();
    return out;
}

// ---------------------------------------------------------------------------
// f_exact / rb_exact

SearchOutcome f_exact(int n, const SmallGraph& target, const SearchConfig& cfg,
                      const std::optional<EdgeColoring>& seed) {
    Deadline timer(cfg.timeout_seconds);
    if (target.order() > n)
        throw std::invalid_argument("f_exact: target larger than host");

    SearchOutcome out;
    if (target.size() <= 1) {
        // Any copy with at most one edge is rainbow under every coloring,
        // so no coloring avoids it: f = 0 and rb = 1.
        out.value = 0;
        out.status = SearchStatus::exact;
        out.elapsed_seconds = timer.elapsed();
        return out;
    }

    EmbeddingTable table = enumerate_copies(n, target);

    auto remaining_cfg = [&]() {
        SearchConfig sub = cfg;
        sub.timeout_seconds = timer.limited ? timer.remaining() : 0.0;
        return sub;
    };

    // Seed: rainbow extremal graph for the H-minus-an-edge family plus one
    // shared color; a rainbow target would force a family member into the
    // extremal graph, so the seed is always valid.
    EdgeColoring best = [&] {
        ForbiddenFamily fam = minus_edge_family(target);
        SearchOutcome tr = turan_exact(n, fam, remaining_cfg());
        out.nodes += tr.nodes;
        EdgeColoring c = rainbow_graph_plus_one(n, *tr.graph_witness);
        if (find_rainbow_copy(c, table))
            throw std::logic_error("f_exact: extremal seed admits a rainbow target");
        return c;
    }();

    if (seed) {
        if (seed->n() != n) throw std::invalid_argument("f_exact: seed n mismatch");
        if (find_rainbow_copy(*seed, table))
            throw std::invalid_argument("f_exact: seed coloring has a rainbow target");
        if (seed->color_count() > best.color_count()) best = *seed;
    }

    int value = best.color_count();
    out.status = SearchStatus::exact;
    while (value < edge_count_of(n)) {
        DecideResult r = decide_colorable(n, target, value + 1, remaining_cfg());
        out.nodes += r.nodes;
        if (r.verdict == Feasibility::feasible) {
            value += 1;
            best = *r.witness;
            continue;
        }
        if (r.verdict == Feasibility::unknown) out.status = SearchStatus::lower_bound_only;
        break;
    }

    out.value = value;
    out.coloring_witness = best;
    out.elapsed_seconds = timer.elapsed();
    return out;
}

SearchOutcome rb_exact(int n, const SmallGraph& target, const SearchConfig& cfg) {
    SearchOutcome out = f_exact(n, target, cfg);
    out.value += 1;
    return out;
}

} // namespace rb
