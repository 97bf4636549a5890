// Acceptance suite: runs every gate with its time budget and prints one
// PASS/FAIL line per criterion.  Stretch computations are report-only.
//
// RB_STRETCH_TIMEOUT (seconds, default 60) bounds the non-gating stretch
// searches; RB_ACCEPT_WORKERS overrides the worker count.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "rainbow/canonical.hpp"
#include "rainbow/certio.hpp"
#include "rainbow/construct.hpp"
#include "rainbow/formulas.hpp"
#include "rainbow/search.hpp"

using namespace rb;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

void report_only(const std::string& name, const std::string& detail) {
    std::cout << "[REPORT] " << name << "  (" << detail << ")" << std::endl;
}

SearchConfig budget(double seconds) {
    SearchConfig cfg;
    cfg.timeout_seconds = seconds;
    if (const char* w = std::getenv("RB_ACCEPT_WORKERS")) cfg.workers = std::atoi(w);
    return cfg;
}

struct RbGate {
    const char* label;
    const char* target;
    int n;
    int expect;
    double seconds;
};

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

// --- criterion 1: exact value reproduction ---------------------------------

void criterion_values() {
    const RbGate gates[] = {
        {"rb(4,diamond) = 5", "diamond", 4, 5, 60},
        {"rb(5,diamond) = 7", "diamond", 5, 7, 60},
        {"rb(6,diamond) = 8", "diamond", 6, 8, 60},
        {"rb(5,bull) = 6", "bull", 5, 6, 10},
        {"rb(6,bull) = 8", "bull", 6, 8, 900},
        {"rb(5,K2,3) = 8", "K2,3", 5, 8, 60},
        {"rb(5,house) = 8", "house", 5, 8, 60},
        {"rb(6,house) = 9", "house", 6, 9, 1800},
    };
    for (const auto& g : gates) {
        SearchOutcome out = rb_exact(g.n, resolve(g.target), budget(g.seconds));
        bool exact = out.status == SearchStatus::exact;
        bool pass = exact && out.value == g.expect && out.elapsed_seconds <= g.seconds;
        std::string detail = "got " + std::string(exact ? "" : ">= ") +
                             std::to_string(out.value) + ", " + fmt_seconds(out.elapsed_seconds) +
                             ", " + std::to_string(out.nodes) + " nodes";
        report(std::string("criterion 1: ") + g.label, pass, detail);
    }

    double stretch = 60;
    if (const char* s = std::getenv("RB_STRETCH_TIMEOUT")) stretch = std::atof(s);
    const RbGate stretches[] = {
        {"rb(7,diamond) = 10", "diamond", 7, 10, 0},
        {"rb(6,K2,3) = 10", "K2,3", 6, 10, 0},
    };
    for (const auto& g : stretches) {
        SearchOutcome out = rb_exact(g.n, resolve(g.target), budget(stretch));
        std::string detail;
        if (out.status == SearchStatus::exact)
            detail = "exact " + std::to_string(out.value) + (out.value == g.expect ? " = " : " != ") +
                     std::to_string(g.expect) + ", " + fmt_seconds(out.elapsed_seconds);
        else
            detail = "lower bound " + std::to_string(out.value) + " after " +
                     fmt_seconds(out.elapsed_seconds) + " (stretch timeout)";
        report_only(std::string("stretch: ") + g.label, detail);
    }
}

// --- criterion 2: certificate suite ----------------------------------------

void criterion_certificates() {
    struct Entry {
        std::string label;
        Certificate cert;
    };
    std::vector<Entry> entries;

    entries.push_back({"bull n=5 cliques=3,2", disjoint_cliques_plus_one(5, {3, 2}, "bull")});
    for (int n = 6; n <= 10; ++n)
        entries.push_back({"bull n=" + std::to_string(n) + " cycle-partition",
                           bull_cycle_partition(n)});
    entries.push_back({"K2,3 n=5 cliques=4,1", disjoint_cliques_plus_one(5, {4, 1}, "K2,3")});
    entries.push_back({"K2,3 n=6 special", k23_special(6)});
    entries.push_back({"K2,3 n=7 special", k23_special(7)});
    entries.push_back({"K2,3 n=8 cliques=4,4", disjoint_cliques_plus_one(8, {4, 4}, "K2,3")});
    for (int i = 1; i <= 4; ++i)
        entries.push_back({"house n=" + std::to_string(4 + i) + " cliques=4," + std::to_string(i),
                           disjoint_cliques_plus_one(4 + i, {4, i}, "house")});
    ForbiddenFamily c3c4 = ForbiddenFamily::of({resolve("C3"), resolve("C4")});
    for (int n = 4; n <= 10; ++n)
        entries.push_back({"diamond n=" + std::to_string(n) + " extremal-plus-one",
                           extremal_plus_one(n, c3c4, "diamond", budget(300))});

    bool all = true;
    std::string first_bad;
    double worst = 0;
    for (const auto& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult r = verify_certificate(e.cert);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst = std::max(worst, dt);
        int paper = *table_rb(e.cert.target, e.cert.n);
        bool ok = r.ok && e.cert.claimed_colors == paper - 1 && dt <= 1.0;
        if (!ok) {
            all = false;
            if (first_bad.empty())
                first_bad = e.label + ": " + (r.ok ? "color count/time" : r.reason);
        }
    }
    std::string detail = std::to_string(entries.size()) + " certificates, worst verify " +
                         fmt_seconds(worst);
    if (!first_bad.empty()) detail += "; first failure: " + first_bad;
    report("criterion 2: certificate suite (color count = reference rb - 1, verify <= 1 s)",
           all, detail);
}

// --- criterion 3: Turan table ----------------------------------------------

void criterion_turan() {
    const int expect[] = {3, 5, 6, 8, 10, 12, 15};
    ForbiddenFamily c3c4 = ForbiddenFamily::of({resolve("C3"), resolve("C4")});
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    std::string detail;
    for (int n = 4; n <= 10; ++n) {
        SearchOutcome out = turan_exact(n, c3c4, budget(600));
        bool ok = out.status == SearchStatus::exact && out.value == expect[n - 4];
        if (!ok) {
            all = false;
            detail = "ext(" + std::to_string(n) + ") = " + std::to_string(out.value);
            break;
        }
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && total <= 600;
    report("criterion 3: ext(n,{C3,C4}) = (3,5,6,8,10,12,15) for n = 4..10, total <= 10 min",
           all, detail.empty() ? fmt_seconds(total) : detail);

    ForbiddenFamily paw_c4 = ForbiddenFamily::of({resolve("K1,3+e"), resolve("C4")});
    bool coro = true;
    std::string cdetail;
    auto t1 = std::chrono::steady_clock::now();
    for (int n = 4; n <= 8; ++n) {
        SearchOutcome out = turan_exact(n, paw_c4, budget(600));
        if (out.status != SearchStatus::exact || out.value != expect[n - 4]) {
            coro = false;
            cdetail = "ext(" + std::to_string(n) + ",{K1,3+e,C4}) = " + std::to_string(out.value);
            break;
        }
    }
    double ctotal = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    report("criterion 3: ext(n,{K1,3+e,C4}) matches for n = 4..8", coro,
           cdetail.empty() ? fmt_seconds(ctotal) : cdetail);
}

// --- criterion 4: minus-edge families --------------------------------------

void criterion_families() {
    ForbiddenFamily hd = minus_edge_family(resolve("diamond"));
    bool d_ok = hd.members.size() == 2 && isomorphic(hd.members[0], resolve("K1,3+e")) &&
                isomorphic(hd.members[1], resolve("C4"));

    ForbiddenFamily hh = minus_edge_family(resolve("house"));
    bool h_ok = hh.members.size() == 4;
    if (h_ok) {
        bool c5 = false, c4p = false, bull = false, z2 = false;
        for (const auto& m : hh.members) {
            c5 = c5 || isomorphic(m, resolve("C5"));
            c4p = c4p || isomorphic(m, resolve("C4+"));
            bull = bull || isomorphic(m, resolve("bull"));
            z2 = z2 || isomorphic(m, resolve("Z2"));
        }
        h_ok = c5 && c4p && bull && z2;
    }
    report("criterion 4: H(diamond) = {K1,3+e, C4} and H(house) = {C5, C4+, bull, Z2}",
           d_ok && h_ok, "");
}

// --- criterion 5: formula cross-checks --------------------------------------

void criterion_formulas() {
    const std::pair<int, int> pairs[] = {{4, 3}, {5, 3}, {6, 3}, {5, 4}, {6, 4}, {6, 5}};
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    std::string detail;
    for (auto [n, k] : pairs) {
        SearchOutcome out = rb_exact(n, resolve(GraphName{GraphTag::cycle, k}), budget(900));
        long formula = rb_cycle(n, k);
        if (out.status != SearchStatus::exact || out.value != formula) {
            all = false;
            detail = "rb(" + std::to_string(n) + ",C" + std::to_string(k) + "): search " +
                     std::to_string(out.value) + " vs formula " + std::to_string(formula);
            break;
        }
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && total <= 900;
    report("criterion 5: rb_cycle matches exact search on six (n,k) pairs, <= 15 min", all,
           detail.empty() ? fmt_seconds(total) : detail);

    auto t1 = std::chrono::steady_clock::now();
    bool gorgol = true;
    std::string gdetail;
    for (int n : {5, 6}) {
        SearchOutcome plus = rb_exact(n, resolve("C3+"), budget(900));
        SearchOutcome cyc = rb_exact(n, resolve("C3"), budget(900));
        if (plus.status != SearchStatus::exact || cyc.status != SearchStatus::exact ||
            plus.value != cyc.value) {
            gorgol = false;
            gdetail = "n=" + std::to_string(n) + ": " + std::to_string(plus.value) + " vs " +
                      std::to_string(cyc.value);
            break;
        }
    }
    double gtotal = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    gorgol = gorgol && gtotal <= 900;
    report("criterion 5: rb(n,C3+) = rb(n,C3) for n = 5,6, <= 15 min", gorgol,
           gdetail.empty() ? fmt_seconds(gtotal) : gdetail);
}

// --- criterion 6: property suites -------------------------------------------

int image_size(const EdgeColoring& c, vset f) {
    std::set<int> seen;
    for (int t = 0; t < c.edge_count(); ++t) {
        auto [a, b] = edge_vertices(t);
        if (((f >> a) & 1) && ((f >> b) & 1)) seen.insert(c.color(t));
    }
    return int(seen.size());
}

void criterion_properties() {
    std::mt19937 rng(20121024);

    // Unique-color identity and star structure over 1000 random colorings.
    int checked = 0;
    bool identity_ok = true, star_ok = true;
    while (checked < 1000) {
        int n = 4 + int(rng() % 5);
        std::vector<int> raw(edge_count_of(n));
        int palette = 2 + int(rng() % 10);
        for (auto& c : raw) c = int(rng() % palette);
        EdgeColoring col = EdgeColoring::normalize(n, raw);
        vset f = vset(rng() % (1u << n));
        if (__builtin_popcount(f) < 2) continue;
        std::vector<int> in_f;
        for (int v = 0; v < n; ++v)
            if ((f >> v) & 1) in_f.push_back(v);
        int w = in_f[rng() % in_f.size()];
        int lhs = image_size(col, vset(f & ~(vset(1) << w)));
        int rhs = image_size(col, f) - popcount(eset(unique_colors_at(col, f, w)));
        identity_ok = identity_ok && lhs == rhs;

        ColorClasses view = color_classes(col);
        for (int i = 0; i < view.color_count; ++i) {
            if (!((view.c_star >> i) & 1)) continue;
            vset common = vset((vset(1) << n) - 1);
            for (int t = 0; t < col.edge_count(); ++t)
                if ((view.classes[i] >> t) & 1) {
                    auto [a, b] = edge_vertices(t);
                    common &= vset((vset(1) << a) | (vset(1) << b));
                }
            star_ok = star_ok && common != 0;
        }
        ++checked;
    }
    report("criterion 6: |Gamma[F-w]| = |Gamma[F]| - |S(w,F)| on 1000 random colorings",
           identity_ok, "");
    report("criterion 6: every unique-color class is a star", star_ok, "");

    // Sandwich ext(n, H-e family) + 2 <= rb(n,H) <= ext(n, {H}) + 1 on the
    // exactly computed instances.
    struct Inst { const char* target; int n; };
    const Inst instances[] = {{"diamond", 4}, {"diamond", 5}, {"diamond", 6},
                              {"bull", 5},    {"bull", 6},    {"K2,3", 5},
                              {"house", 5},   {"house", 6}};
    bool sandwich_ok = true;
    std::string sdetail;
    for (const auto& inst : instances) {
        SmallGraph target = resolve(inst.target);
        int rbv = *table_rb(inst.target, inst.n);
        SearchOutcome fam = turan_exact(inst.n, minus_edge_family(target), budget(300));
        SearchOutcome tgt = turan_exact(inst.n, ForbiddenFamily::of({target}), budget(300));
        Eq1Bounds bounds = eq1_bounds(fam.value, tgt.value);
        bool ok = fam.status == SearchStatus::exact && tgt.status == SearchStatus::exact &&
                  bounds.consistent && bounds.lower <= rbv && rbv <= bounds.upper;
        if (!ok) {
            sandwich_ok = false;
            sdetail = std::string(inst.target) + " n=" + std::to_string(inst.n) + ": " +
                      std::to_string(bounds.lower) + " <= " + std::to_string(rbv) +
                      " <= " + std::to_string(bounds.upper);
            break;
        }
    }
    report("criterion 6: sandwich bounds hold on every exactly computed instance",
           sandwich_ok, sdetail);

    // Monotone feasibility of decide_colorable.
    bool monotone_ok = true;
    bool prev = false;
    for (int k = 8; k >= 1; --k) {
        bool f = decide_colorable(5, resolve("K2,3"), k, budget(120)).verdict ==
                 Feasibility::feasible;
        if (prev && !f) monotone_ok = false;
        prev = f;
    }
    report("criterion 6: feasibility is monotone in the color count", monotone_ok, "");

    // Worker-count determinism.
    SearchConfig one = budget(300);
    one.workers = 1;
    SearchConfig four = budget(300);
    four.workers = 4;
    DecideResult da = decide_colorable(5, resolve("diamond"), 6, one);
    DecideResult db = decide_colorable(5, resolve("diamond"), 6, four);
    SearchOutcome fa = f_exact(5, resolve("diamond"), one);
    SearchOutcome fb = f_exact(5, resolve("diamond"), four);
    bool det = da.verdict == Feasibility::feasible && db.verdict == Feasibility::feasible &&
               da.witness->colors() == db.witness->colors() && fa.value == fb.value &&
               fa.coloring_witness->colors() == fb.coloring_witness->colors();
    report("criterion 6: identical results with 1 and 4 workers", det, "");

    // Square-root bound over the whole embedded table.
    bool t8 = true;
    for (int n = 4; n <= 16; ++n) {
        long e = *table_ext_c3c4(n);
        if (4 * e * e > long(n) * n * (n - 1)) t8 = false;
    }
    report("criterion 6: ext table satisfies ext <= n sqrt(n-1)/2 for n = 4..16", t8, "");
}

} // namespace

int main() {
    std::cout << "acceptance suite\n================" << std::endl;
    criterion_values();
    criterion_certificates();
    criterion_turan();
    criterion_families();
    criterion_formulas();
    criterion_properties();

    // Criterion 7: scope statement.
    std::cout << "[NOTE] " << non_reproducible_note() << std::endl;
    report("criterion 7: out-of-scope statement is embedded and printed above",
           std::string(non_reproducible_note()).size() > 50, "");

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
