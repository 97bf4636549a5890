// rb: exact rainbow/anti-Ramsey numbers for small graphs.
//
// Subcommands: compute, decide, verify, construct, turan, classify, table.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 timeout/undecided.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/canonical.hpp"
#include "rainbow/certio.hpp"
#include "rainbow/construct.hpp"
#include "rainbow/formulas.hpp"
#include "rainbow/search.hpp"

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_unknown = 3;

std::string colors_csv(const rb::EdgeColoring& c) {
    std::string out;
    for (int t = 0; t < c.edge_count(); ++t) {
        if (t) out += ',';
        out += std::to_string(c.color(t));
    }
    return out;
}

// Splits a comma-separated family list.  Tags such as "K1,3+e" contain a
// comma themselves, so pieces that do not resolve are merged with the next
// one; semicolons separate graph literals (which contain commas).
rb::ForbiddenFamily parse_family(const std::string& spec) {
    std::vector<rb::SmallGraph> members;
    std::stringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, ';')) {
        if (group.empty()) continue;
        if (group.find(':') != std::string::npos) {
            members.push_back(rb::resolve(group));
            continue;
        }
        std::vector<std::string> pieces;
        std::stringstream inner(group);
        std::string tok;
        while (std::getline(inner, tok, ',')) pieces.push_back(tok);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            std::string name = pieces[i];
            while (true) {
                if (rb::parse_graph_name(name)) break;
                if (i + 1 >= pieces.size())
                    throw std::invalid_argument("unknown graph name: " + name);
                name += "," + pieces[++i];
            }
            members.push_back(rb::resolve(name));
        }
    }
    if (members.empty()) throw std::invalid_argument("empty forbidden family");
    return rb::ForbiddenFamily::of(std::move(members));
}

std::string family_code(const rb::ForbiddenFamily& fam) {
    std::string code;
    for (const auto& m : fam.members) {
        if (!code.empty()) code += "+";
        code += rb::canonical_code(m).hex();
    }
    return code;
}

struct CommonOpts {
    double timeout = 300.0;
    int workers = 0;
    bool progress = false;
    bool json_out = false;
    bool no_cache = false;
};

rb::SearchConfig to_config(const CommonOpts& o) {
    rb::SearchConfig cfg;
    cfg.timeout_seconds = o.timeout;
    cfg.workers = o.workers;
    cfg.progress = o.progress;
    return cfg;
}

int cmd_compute(const std::string& target_name, int n, const CommonOpts& opts) {
    rb::SmallGraph target = rb::resolve(target_name);
    rb::CacheKey key{"rb", n, rb::canonical_code(target).hex()};
    rb::ResultCache cache = rb::ResultCache::open_default();

    std::optional<int> paper = rb::table_rb(target_name, n);
    json j{{"command", "compute"}, {"n", n}, {"target", target_name}};
    if (paper) j["paper_value"] = *paper;

    if (!opts.no_cache) {
        if (auto hit = cache.lookup(key)) {
            j["rb"] = hit->value;
            j["f"] = hit->value - 1;
            j["status"] = "cached";
            j["witness_colors"] = hit->witness;
            if (paper) j["matches_paper"] = (*paper == hit->value);
            if (opts.json_out) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "rb(K_" << n << ", " << target_name << ") = " << hit->value
                          << "   [cached]\n";
                if (paper)
                    std::cout << "  reference value " << *paper
                              << (*paper == hit->value ? " (match)" : " (MISMATCH)") << "\n";
            }
            return exit_ok;
        }
    }

    rb::SearchOutcome out = rb::rb_exact(n, target, to_config(opts));
    bool exact = out.status == rb::SearchStatus::exact;
    j["rb"] = out.value;
    j["f"] = out.value - 1;
    j["status"] = exact ? "exact" : "lower-bound-only";
    j["nodes"] = out.nodes;
    j["elapsed_seconds"] = out.elapsed_seconds;
    if (out.coloring_witness) j["witness_colors"] = colors_csv(*out.coloring_witness);
    if (paper) j["matches_paper"] = (*paper == out.value);

    if (exact && !opts.no_cache) {
        rb::CacheRecord rec{key, out.value,
                            out.coloring_witness ? colors_csv(*out.coloring_witness) : "",
                            out.nodes, out.elapsed_seconds};
        cache.append(rec);
    }

    if (opts.json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "rb(K_" << n << ", " << target_name << ") "
                  << (exact ? "= " : ">= ") << out.value << "   [f = " << out.value - 1
                  << ", " << out.nodes << " nodes, " << out.elapsed_seconds << " s]\n";
        if (paper)
            std::cout << "  reference value " << *paper
                      << (*paper == out.value ? " (match)" : " (MISMATCH)") << "\n";
        if (!exact) std::cout << "  search timed out; value is only a lower bound\n";
    }
    return exact ? exit_ok : exit_unknown;
}

int cmd_decide(const std::string& target_name, int n, int k, const CommonOpts& opts) {
    rb::SmallGraph target = rb::resolve(target_name);
    rb::DecideResult r = rb::decide_colorable(n, target, k, to_config(opts));
    if (opts.json_out) {
        json j{{"command", "decide"},
               {"n", n},
               {"target", target_name},
               {"colors", k},
               {"verdict", rb::to_string(r.verdict)},
               {"nodes", r.nodes},
               {"elapsed_seconds", r.elapsed_seconds}};
        if (r.witness) j["witness_colors"] = colors_csv(*r.witness);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rb::to_string(r.verdict) << "\n";
        if (r.witness) std::cout << "witness: " << colors_csv(*r.witness) << "\n";
    }
    return r.verdict == rb::Feasibility::unknown ? exit_unknown : exit_ok;
}

int cmd_verify(const std::string& path, const CommonOpts& opts) {
    rb::Certificate cert = rb::load_certificate(path);
    rb::VerifyResult r = rb::verify_certificate(cert);
    if (opts.json_out) {
        json j{{"command", "verify"},
               {"file", path},
               {"n", cert.n},
               {"target", cert.target},
               {"claimed_colors", cert.claimed_colors},
               {"ok", r.ok}};
        if (!r.ok) j["reason"] = r.reason;
        if (!r.rainbow_copy.empty()) j["rainbow_copy_vertices"] = r.rainbow_copy;
        std::cout << j.dump(2) << "\n";
    } else if (r.ok) {
        std::cout << "OK: " << cert.claimed_colors << "-color certificate for no rainbow "
                  << cert.target << " in K_" << cert.n << "\n";
    } else {
        std::cout << "FAIL: " << r.reason << "\n";
    }
    return r.ok ? exit_ok : exit_verify_failed;
}

int cmd_construct(const std::string& target_name, int n, const std::string& method,
                  const std::string& forbid, const std::string& out_path,
                  const CommonOpts& opts) {
    rb::Certificate cert = [&] {
        if (method == "cycle-partition") return rb::bull_cycle_partition(n);
        if (method == "k23-special") return rb::k23_special(n);
        if (method.rfind("cliques=", 0) == 0) {
            std::vector<int> parts;
            std::stringstream ss(method.substr(8));
            std::string tok;
            while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
            return rb::disjoint_cliques_plus_one(n, parts, target_name);
        }
        if (method == "extremal-plus-one") {
            rb::ForbiddenFamily fam = forbid.empty()
                                          ? rb::minus_edge_family(rb::resolve(target_name))
                                          : parse_family(forbid);
            return rb::extremal_plus_one(n, fam, target_name, to_config(opts));
        }
        throw std::invalid_argument("unknown method '" + method + "'");
    }();

    rb::VerifyResult chk = rb::verify_certificate(cert);
    if (!chk.ok) {
        std::cerr << "generated certificate failed verification: " << chk.reason << "\n";
        return exit_verify_failed;
    }
    std::string text = rb::serialize_certificate(cert);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << text;
        if (!opts.json_out)
            std::cout << "wrote " << out_path << " (" << cert.claimed_colors << " colors, "
                      << cert.construction_tag << ")\n";
    }
    if (opts.json_out) {
        json j{{"command", "construct"}, {"n", cert.n},
               {"target", cert.target},  {"claimed_colors", cert.claimed_colors},
               {"construction_tag", cert.construction_tag}};
        if (!out_path.empty() && out_path != "-") j["file"] = out_path;
        std::cout << j.dump(2) << "\n";
    }
    return exit_ok;
}

int cmd_turan(const std::string& forbid, int n, const CommonOpts& opts) {
    rb::ForbiddenFamily fam = parse_family(forbid);
    rb::CacheKey key{"turan", n, family_code(fam)};
    rb::ResultCache cache = rb::ResultCache::open_default();

    if (!opts.no_cache) {
        if (auto hit = cache.lookup(key)) {
            if (opts.json_out) {
                json j{{"command", "turan"}, {"n", n},      {"forbid", fam.describe()},
                       {"ext", hit->value},  {"status", "cached"}, {"witness", hit->witness}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "ext(" << n << ", " << fam.describe() << ") = " << hit->value
                          << "   [cached]\n";
            }
            return exit_ok;
        }
    }

    rb::SearchOutcome out = rb::turan_exact(n, fam, to_config(opts));
    bool exact = out.status == rb::SearchStatus::exact;
    std::string witness = out.graph_witness ? rb::format_graph_literal(*out.graph_witness) : "";
    if (exact && !opts.no_cache)
        cache.append(rb::CacheRecord{key, out.value, witness, out.nodes, out.elapsed_seconds});

    if (opts.json_out) {
        json j{{"command", "turan"},
               {"n", n},
               {"forbid", fam.describe()},
               {"ext", out.value},
               {"status", exact ? "exact" : "lower-bound-only"},
               {"witness", witness},
               {"nodes", out.nodes},
               {"elapsed_seconds", out.elapsed_seconds}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "ext(" << n << ", " << fam.describe() << ") " << (exact ? "= " : ">= ")
                  << out.value << "   [" << out.nodes << " nodes, " << out.elapsed_seconds
                  << " s]\n  witness: " << witness << "\n";
    }
    return exact ? exit_ok : exit_unknown;
}

int cmd_classify(const std::string& target_name, const CommonOpts& opts) {
    rb::SmallGraph target = rb::resolve(target_name);
    rb::Classification c = rb::classify(target);
    if (opts.json_out) {
        json j{{"command", "classify"},
               {"target", target_name},
               {"kind", rb::to_string(c.kind)},
               {"order", c.order},
               {"cyclomatic", c.cyclomatic_number},
               {"notes", c.notes}};
        if (c.has_bounds()) {
            j["cycle_length"] = c.cycle_length;
            j["valid_from_n"] = c.valid_from;
            json bounds = json::array();
            for (int n = c.valid_from; n < c.valid_from + 6; ++n)
                bounds.push_back({{"n", n}, {"lower", c.lower(n)}, {"upper", c.upper(n)}});
            j["bounds"] = bounds;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << target_name << ": " << rb::to_string(c.kind) << " (order " << c.order
                  << ", cyclomatic number " << c.cyclomatic_number << ")\n  " << c.notes
                  << "\n";
        if (c.has_bounds()) {
            std::cout << "  bounds for n >= " << c.valid_from << " (cycle length "
                      << c.cycle_length << "):\n";
            for (int n = c.valid_from; n < c.valid_from + 6; ++n)
                std::cout << "    n = " << n << ": " << c.lower(n) << " <= rb <= "
                          << c.upper(n) << "\n";
        }
    }
    return exit_ok;
}

int cmd_table(const std::string& target_name, int n_min, int n_max, const CommonOpts& opts) {
    rb::SmallGraph target = rb::resolve(target_name);
    rb::Classification cls = rb::classify(target);
    rb::ResultCache cache = rb::ResultCache::open_default();
    std::string code = rb::canonical_code(target).hex();

    json rows = json::array();
    if (!opts.json_out)
        std::cout << "n | reference | computed | bounds\n"
                  << "--+-----------+----------+-------\n";
    for (int n = n_min; n <= n_max; ++n) {
        std::optional<int> paper = rb::table_rb(target_name, n);
        std::optional<int> computed;
        if (auto hit = cache.lookup(rb::CacheKey{"rb", n, code})) computed = hit->value;
        std::optional<long> lo, hi;
        if (cls.has_bounds() && n >= cls.valid_from) {
            lo = cls.lower(n);
            hi = cls.upper(n);
        }
        json row{{"n", n}};
        if (paper) row["paper"] = *paper;
        if (computed) {
            row["computed"] = *computed;
            row["provenance"] = "computed";
        } else if (paper) {
            row["provenance"] = "paper";
        } else if (lo) {
            row["provenance"] = "bounds";
        }
        if (lo) row["lower"] = *lo;
        if (hi) row["upper"] = *hi;
        if (paper && computed) row["match"] = (*paper == *computed);
        rows.push_back(row);
        if (!opts.json_out) {
            std::cout << n << " | " << (paper ? std::to_string(*paper) : "-") << " | "
                      << (computed ? std::to_string(*computed) : "-") << " | ";
            if (lo)
                std::cout << *lo << ".." << (hi ? std::to_string(*hi) : "?");
            else
                std::cout << "-";
            if (paper && computed && *paper != *computed) std::cout << "   MISMATCH";
            std::cout << "\n";
        }
    }
    if (opts.json_out) {
        json j{{"command", "table"}, {"target", target_name}, {"rows", rows}};
        std::cout << j.dump(2) << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rainbow (anti-Ramsey) and Turan numbers for small graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    CommonOpts opts;
    app.add_flag("--json", opts.json_out, "machine-readable output");
    app.add_flag("-v,--progress", opts.progress, "progress lines on stderr");

    std::string target, forbid, file, method, out_path;
    int n = 0, k = 0, n_min = 4, n_max = 10;

    auto add_search_opts = [&](CLI::App* cmd) {
        cmd->add_option("--timeout", opts.timeout, "seconds before giving up (0 = none)");
        cmd->add_option("--workers", opts.workers, "worker threads (0 = all cores)");
        cmd->add_flag("--no-cache", opts.no_cache, "skip the result cache");
    };

    CLI::App* compute = app.add_subcommand("compute", "rb(n,H) by exact search");
    compute->add_option("--n", n, "host order")->required();
    compute->add_option("--target", target, "target graph")->required();
    add_search_opts(compute);

    CLI::App* decide = app.add_subcommand("decide", "is a k-color no-rainbow coloring possible?");
    decide->add_option("--n", n, "host order")->required();
    decide->add_option("--target", target, "target graph")->required();
    decide->add_option("--colors", k, "number of colors")->required();
    add_search_opts(decide);

    CLI::App* verify = app.add_subcommand("verify", "check a certificate file");
    verify->add_option("file", file, "rbcert-v1 file")->required();

    CLI::App* construct = app.add_subcommand("construct", "emit a lower-bound certificate");
    construct->add_option("--n", n, "host order")->required();
    construct->add_option("--target", target, "target graph")->required();
    construct->add_option("--method", method,
                          "cycle-partition | cliques=<sizes> | k23-special | extremal-plus-one")
        ->required();
    construct->add_option("--forbid", forbid, "family override for extremal-plus-one");
    construct->add_option("-o,--output", out_path, "output file ('-' = stdout)");
    add_search_opts(construct);

    CLI::App* turan = app.add_subcommand("turan", "ext(n, family) by exhaustive search");
    turan->add_option("--n", n, "host order")->required();
    turan->add_option("--forbid", forbid, "comma-separated forbidden graphs")->required();
    add_search_opts(turan);

    CLI::App* classify = app.add_subcommand("classify", "bound classification of a target");
    classify->add_option("--target", target, "target graph")->required();

    CLI::App* table = app.add_subcommand("table", "per-n values vs the reference table");
    table->add_option("--target", target, "target graph")->required();
    table->add_option("--n-min", n_min, "first n");
    table->add_option("--n-max", n_max, "last n");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (compute->parsed()) return cmd_compute(target, n, opts);
        if (decide->parsed()) return cmd_decide(target, n, k, opts);
        if (verify->parsed()) return cmd_verify(file, opts);
        if (construct->parsed()) return cmd_construct(target, n, method, forbid, out_path, opts);
        if (turan->parsed()) return cmd_turan(forbid, n, opts);
        if (classify->parsed()) return cmd_classify(target, opts);
        if (table->parsed()) return cmd_table(target, n_min, n_max, opts);
    } catch (const rb::CertParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
