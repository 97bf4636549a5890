#include <doctest.h>

#include <stdexcept>

#include "rainbow/construct.hpp"
#include "rainbow/search.hpp"

using namespace rb;

namespace {

SearchConfig quick() {
    SearchConfig cfg;
    cfg.timeout_seconds = 120.0;
    return cfg;
}

// Reference decider: enumerate every restricted-growth coloring with
// exactly k colors and test each leaf against find_rainbow_copy.  No
// symmetry breaking, no watchlists — slow but obviously right.
bool naive_decide(int n, const SmallGraph& target, int k) {
    EmbeddingTable table = enumerate_copies(n, target);
    const int total = edge_count_of(n);
    std::vector<std::uint8_t> colors(total, 0);
    auto rec = [&](auto&& self, int t, int used) -> bool {
        if (t == total) {
            if (used != k) return false;
            EdgeColoring c = EdgeColoring::from_normalized(n, colors);
            return !find_rainbow_copy(c, table).has_value();
        }
        if (used + (total - t) < k) return false;
        for (int c = 0; c <= std::min(used, k - 1); ++c) {
            colors[t] = std::uint8_t(c);
            if (self(self, t + 1, used + (c == used ? 1 : 0))) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

// Reference Turan number: scan every labeled graph on n vertices.
int naive_ext(int n, const ForbiddenFamily& fam) {
    const int total = edge_count_of(n);
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
        SmallGraph g(n);
        for (int t = 0; t < total; ++t)
            if ((mask >> t) & 1) {
                auto [i, j] = edge_vertices(t);
                g.add_edge(i, j);
            }
        bool free = true;
        for (const auto& m : fam.members)
            if (contains_subgraph(g, m)) { free = false; break; }
        if (free) best = std::max(best, g.size());
    }
    return best;
}

} // namespace

TEST_CASE("decide agrees with the unpruned reference search") {
    for (const char* name : {"C3", "C4", "K1,3+e", "diamond", "K4"}) {
        SmallGraph target = resolve(std::string(name));
        for (int k = 1; k <= 6; ++k) {
            bool fast = decide_colorable(4, target, k, quick()).verdict ==
                        Feasibility::feasible;
            CAPTURE(name);
            CAPTURE(k);
            CHECK(fast == naive_decide(4, target, k));
        }
    }
    for (const char* name : {"C3", "bull", "diamond", "C5", "house", "K2,3"}) {
        SmallGraph target = resolve(std::string(name));
        for (int k = 1; k <= 10; ++k) {
            bool fast = decide_colorable(5, target, k, quick()).verdict ==
                        Feasibility::feasible;
            CAPTURE(name);
            CAPTURE(k);
            CHECK(fast == naive_decide(5, target, k));
        }
    }
}

TEST_CASE("turan agrees with the all-graphs reference scan") {
    ForbiddenFamily c3c4 = ForbiddenFamily::of({resolve("C3"), resolve("C4")});
    CHECK(turan_exact(5, c3c4, quick()).value == naive_ext(5, c3c4));
    ForbiddenFamily paw = ForbiddenFamily::of({resolve("K1,3+e")});
    CHECK(turan_exact(5, paw, quick()).value == naive_ext(5, paw));
    ForbiddenFamily hbull = minus_edge_family(resolve("bull"));
    CHECK(turan_exact(5, hbull, quick()).value == naive_ext(5, hbull));
    ForbiddenFamily hhouse = minus_edge_family(resolve("house"));
    CHECK(turan_exact(6, hhouse, quick()).value == naive_ext(6, hhouse));
    CHECK(turan_exact(6, c3c4, quick()).value == naive_ext(6, c3c4));
}

TEST_CASE("decide: monochromatic is fine for targets with two edges") {
    DecideResult r = decide_colorable(5, resolve("bull"), 1, quick());
    REQUIRE(r.verdict == Feasibility::feasible);
    CHECK(r.witness->color_count() == 1);
}

TEST_CASE("decide around the bull threshold at n = 5") {
    DecideResult yes = decide_colorable(5, resolve("bull"), 5, quick());
    REQUIRE(yes.verdict == Feasibility::feasible);
    CHECK(yes.witness->color_count() == 5);
    EmbeddingTable table = enumerate_copies(5, resolve("bull"));
    CHECK(!find_rainbow_copy(*yes.witness, table).has_value());

    DecideResult no = decide_colorable(5, resolve("bull"), 6, quick());
    CHECK(no.verdict == Feasibility::infeasible);
}

TEST_CASE("decide rejects bad color counts") {
    CHECK_THROWS_AS(decide_colorable(5, resolve("bull"), 0, quick()), std::invalid_argument);
    CHECK_THROWS_AS(decide_colorable(5, resolve("bull"), 11, quick()), std::invalid_argument);
    CHECK_THROWS_AS(decide_colorable(4, resolve("bull"), 3, quick()), std::invalid_argument);
}

TEST_CASE("decide: single-edge targets are always hit") {
    CHECK(decide_colorable(4, resolve("K2"), 1, quick()).verdict == Feasibility::infeasible);
    CHECK(decide_colorable(4, resolve("K2"), 3, quick()).verdict == Feasibility::infeasible);
}

TEST_CASE("monotone feasibility in k") {
    SmallGraph bull = resolve("bull");
    bool prev_feasible = false;
    for (int k = 6; k >= 1; --k) {
        bool f = decide_colorable(5, bull, k, quick()).verdict == Feasibility::feasible;
        if (prev_feasible) CHECK(f); // feasible at k+1 forces feasible at k
        prev_feasible = f;
    }
}

TEST_CASE("f_exact on the smallest diamond case") {
    SearchOutcome out = f_exact(4, resolve("diamond"), quick());
    CHECK(out.status == SearchStatus::exact);
    CHECK(out.value == 4); // rb(4,D) = 5
    REQUIRE(out.coloring_witness.has_value());
    CHECK(out.coloring_witness->color_count() == 4);
    EmbeddingTable table = enumerate_copies(4, resolve("diamond"));
    CHECK(!find_rainbow_copy(*out.coloring_witness, table).has_value());
}

TEST_CASE("rb_exact wraps f_exact") {
    SearchOutcome out = rb_exact(4, resolve("diamond"), quick());
    CHECK(out.value == 5);
    CHECK(out.status == SearchStatus::exact);
}

TEST_CASE("degenerate targets: a lone edge is rainbow under any coloring") {
    SearchOutcome out = rb_exact(5, resolve("K2"), quick());
    CHECK(out.value == 1);
    CHECK(out.status == SearchStatus::exact);
}

TEST_CASE("cycle check: rb(5, C3) = 5") {
    SearchOutcome out = rb_exact(5, resolve("C3"), quick());
    CHECK(out.value == 5);
}

TEST_CASE("user seeds are validated and used") {
    Certificate cert = disjoint_cliques_plus_one(5, {3, 2}, "bull");
    SearchOutcome out = f_exact(5, resolve("bull"), quick(), cert.coloring);
    CHECK(out.value == 5);
    CHECK(out.status == SearchStatus::exact);

    // A coloring with a rainbow bull is rejected as a seed.
    std::vector<int> raw(10);
    for (int t = 0; t < 10; ++t) raw[t] = t;
    EdgeColoring all_distinct = EdgeColoring::normalize(5, raw);
    CHECK_THROWS_AS(f_exact(5, resolve("bull"), quick(), all_distinct),
                    std::invalid_argument);
}

TEST_CASE("node limits give unknown, never infeasible") {
    SearchConfig tiny;
    tiny.node_limit = 50;
    DecideResult r = decide_colorable(6, resolve("house"), 9, tiny);
    CHECK(r.verdict == Feasibility::unknown);

    SearchOutcome out = f_exact(6, resolve("house"), tiny);
    CHECK(out.status == SearchStatus::lower_bound_only);
    CHECK(out.value >= 1);
}

TEST_CASE("results do not depend on the worker count") {
    SearchConfig one = quick();
    one.workers = 1;
    SearchConfig four = quick();
    four.workers = 4;

    DecideResult a = decide_colorable(5, resolve("diamond"), 6, one);
    DecideResult b = decide_colorable(5, resolve("diamond"), 6, four);
    REQUIRE(a.verdict == Feasibility::feasible);
    REQUIRE(b.verdict == Feasibility::feasible);
    CHECK(a.witness->colors() == b.witness->colors());

    SearchOutcome fa = f_exact(5, resolve("diamond"), one);
    SearchOutcome fb = f_exact(5, resolve("diamond"), four);
    CHECK(fa.value == fb.value);
    CHECK(fa.coloring_witness->colors() == fb.coloring_witness->colors());
}

TEST_CASE("turan: the small C3/C4-free values") {
    ForbiddenFamily fam = ForbiddenFamily::of({resolve("C3"), resolve("C4")});
    const int expect[] = {3, 5, 6, 8}; // n = 4..7
    for (int n = 4; n <= 7; ++n) {
        SearchOutcome out = turan_exact(n, fam, quick());
        CAPTURE(n);
        CHECK(out.status == SearchStatus::exact);
        CHECK(out.value == expect[n - 4]);
        REQUIRE(out.graph_witness.has_value());
        CHECK(out.graph_witness->order() == n);
        CHECK(out.graph_witness->size() == out.value);
        CHECK(!contains_subgraph(*out.graph_witness, resolve("C3")));
        CHECK(!contains_subgraph(*out.graph_witness, resolve("C4")));
    }
}

TEST_CASE("turan handles families with isolated-vertex members") {
    // Bull minus an edge keeps its 5 vertices; containment needs order 5.
    ForbiddenFamily fam = minus_edge_family(resolve("bull"));
    SearchOutcome out = turan_exact(6, fam, quick());
    CHECK(out.status == SearchStatus::exact);
    CHECK(out.value == 6); // two disjoint triangles
    for (const auto& m : fam.members) CHECK(!contains_subgraph(*out.graph_witness, m));
}

TEST_CASE("turan: members larger than the host are ignored") {
    ForbiddenFamily fam = ForbiddenFamily::of({resolve("C3"), resolve("W5")});
    SearchOutcome out = turan_exact(4, fam, quick());
    CHECK(out.value == 4); // C_4 is triangle-free and W5 cannot embed
}

TEST_CASE("turan: empty and edgeless families") {
    ForbiddenFamily none;
    SearchOutcome out = turan_exact(5, none, quick());
    CHECK(out.value == 10); // K_5

    ForbiddenFamily edgeless = ForbiddenFamily::of({parse_graph_literal("2:")});
    CHECK_THROWS_AS(turan_exact(5, edgeless, quick()), std::invalid_argument);
}

TEST_CASE("turan witness ties break deterministically") {
    ForbiddenFamily fam = ForbiddenFamily::of({resolve("C3"), resolve("C4")});
    SearchOutcome a = turan_exact(6, fam, quick());
    SearchOutcome b = turan_exact(6, fam, quick());
    CHECK(format_graph_literal(*a.graph_witness) == format_graph_literal(*b.graph_witness));
}

TEST_CASE("star members cap degrees during generation") {
    ForbiddenFamily fam = ForbiddenFamily::of({resolve("K1,3")});
    SearchOutcome out = turan_exact(6, fam, quick());
    CHECK(out.status == SearchStatus::exact);
    CHECK(out.value == 6); // max degree 2: disjoint cycles
}
