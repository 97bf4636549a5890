#include "rainbow/certio.hpp"

#include <sys/file.h>
#include <sys/stat.h>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rb {

std::string serialize_certificate(const Certificate& cert) {
    std::string out;
    out += "claimed_colors: " + std::to_string(cert.claimed_colors) + "\n";
    out += "construction_tag: " + cert.construction_tag + "\n";
    out += "edge_colors: ";
    for (int t = 0; t < cert.coloring.edge_count(); ++t) {
        if (t) out += ',';
        out += std::to_string(cert.coloring.color(t));
    }
    out += "\n";
    out += "format: rbcert-v1\n";
    out += "n: " + std::to_string(cert.n) + "\n";
    out += "target: " + cert.target + "\n";
    return out;
}

Certificate parse_certificate(const std::string& text) {
    std::optional<int> n, claimed;
    std::optional<std::string> tag, format, target, colors_line;
    int colors_lineno = 0;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto sep = line.find(": ");
        if (sep == std::string::npos)
            throw CertParseError(lineno, "", "expected 'key: value'");
        std::string key = line.substr(0, sep);
        std::string value = line.substr(sep + 2);
        auto parse_int = [&](const char* field) {
            try {
                std::size_t used = 0;
                int v = std::stoi(value, &used);
                if (used != value.size()) throw std::invalid_argument("");
                return v;
            } catch (...) {
                throw CertParseError(lineno, field, "not an integer: '" + value + "'");
            }
        };
        auto once = [&](bool already, const char* field) {
            if (already) throw CertParseError(lineno, field, "duplicate field");
        };
        if (key == "n") { once(n.has_value(), "n"); n = parse_int("n"); }
        else if (key == "claimed_colors") { once(claimed.has_value(), "claimed_colors"); claimed = parse_int("claimed_colors"); }
        else if (key == "construction_tag") { once(tag.has_value(), "construction_tag"); tag = value; }
        else if (key == "format") { once(format.has_value(), "format"); format = value; }
        else if (key == "target") { once(target.has_value(), "target"); target = value; }
        else if (key == "edge_colors") {
            once(colors_line.has_value(), "edge_colors");
            colors_line = value;
            colors_lineno = lineno;
        } else {
            throw CertParseError(lineno, key, "unknown field");
        }
    }
    if (!format) throw CertParseError(lineno, "format", "missing");
    if (*format != "rbcert-v1")
        throw CertParseError(lineno, "format", "unsupported format '" + *format + "'");
    if (!n) throw CertParseError(lineno, "n", "missing");
    if (!claimed) throw CertParseError(lineno, "claimed_colors", "missing");
    if (!tag) throw CertParseError(lineno, "construction_tag", "missing");
    if (!target) throw CertParseError(lineno, "target", "missing");
    if (!colors_line) throw CertParseError(lineno, "edge_colors", "missing");
    if (*n < 1 || *n > target_order_cap)
        throw CertParseError(lineno, "n", "host order out of range 1..12");

    std::vector<int> raw;
    std::stringstream cs(*colors_line);
    std::string tok;
    while (std::getline(cs, tok, ',')) {
        try {
            std::size_t used = 0;
            raw.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (...) {
            throw CertParseError(colors_lineno, "edge_colors", "bad entry '" + tok + "'");
        }
    }
    if (int(raw.size()) != edge_count_of(*n))
        throw CertParseError(colors_lineno, "edge_colors",
                             "expected " + std::to_string(edge_count_of(*n)) +
                                 " entries for n = " + std::to_string(*n) + ", found " +
                                 std::to_string(raw.size()));
    // The file stores normalized colors; reject anything else so that
    // serialization round-trips byte for byte.
    std::vector<std::uint8_t> norm(raw.size());
    int maxc = -1;
    for (std::size_t t = 0; t < raw.size(); ++t) {
        if (raw[t] < 0 || raw[t] > maxc + 1)
            throw CertParseError(colors_lineno, "edge_colors",
                                 "not in restricted-growth form at edge " + std::to_string(t));
        maxc = std::max(maxc, raw[t]);
        norm[t] = std::uint8_t(raw[t]);
    }
    EdgeColoring coloring = EdgeColoring::from_normalized(*n, std::move(norm));
    return Certificate{*n, *target, coloring, *claimed, *tag};
}

Certificate load_certificate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_certificate(buf.str());
}

void save_certificate(const Certificate& cert, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_certificate(cert);
}

// ---------------------------------------------------------------------------

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

ResultCache ResultCache::open_default() {
    std::string dir;
    if (const char* env = std::getenv("RB_CACHE_DIR")) {
        dir = env;
    } else if (const char* home = std::getenv("HOME")) {
        dir = std::string(home) + "/.cache/rainbow-numbers";
    } else {
        dir = ".rainbow-cache";
    }
    ::mkdir(dir.c_str(), 0755); // best effort; single level is enough here
    return ResultCache(dir + "/results.jsonl");
}

std::optional<CacheRecord> ResultCache::lookup(const CacheKey& key) const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::optional<CacheRecord> hit;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;
        if (j.value("kind", "") != key.kind || j.value("n", -1) != key.n ||
            j.value("code", "") != key.code)
            continue;
        CacheRecord rec;
        rec.key = key;
        rec.value = j.value("value", 0);
        rec.witness = j.value("witness", "");
        rec.nodes = j.value("nodes", std::uint64_t(0));
        rec.elapsed_seconds = j.value("elapsed_seconds", 0.0);
        hit = rec; // last record wins
    }
    return hit;
}

void ResultCache::append(const CacheRecord& record) const {
    nlohmann::json j{
        {"kind", record.key.kind},
        {"n", record.key.n},
        {"code", record.key.code},
        {"value", record.value},
        {"witness", record.witness},
        {"nodes", record.nodes},
        {"elapsed_seconds", record.elapsed_seconds},
    };
    std::string line = j.dump() + "\n";
    FILE* f = std::fopen(path_.c_str(), "a");
    if (!f) throw std::runtime_error("cannot append to cache " + path_);
    ::flock(fileno(f), LOCK_EX);
    std::fwrite(line.data(), 1, line.size(), f);
    std::fflush(f);
    ::flock(fileno(f), LOCK_UN);
    std::fclose(f);
}

} // namespace rb
