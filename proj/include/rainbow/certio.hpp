#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "rainbow/construct.hpp"

namespace rb {

// rbcert-v1: UTF-8 text, one "key: value" per line, keys sorted, trailing
// newline.  Byte-stable: serializing a parsed certificate reproduces the
// input exactly.
std::string serialize_certificate(const Certificate& cert);

struct CertParseError : std::runtime_error {
    CertParseError(int line_, std::string field_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) +
                             (field_.empty() ? "" : " (field '" + field_ + "')") + ": " +
                             what_),
          line(line_), field(std::move(field_)) {}
    int line;
    std::string field;
};

Certificate parse_certificate(const std::string& text);

Certificate load_certificate(const std::string& path);
void save_certificate(const Certificate& cert, const std::string& path);

// Append-only store of finished search results, so long computations are
// never repeated.  One JSON record per line; unknown outcomes are never
// stored.  Appends take an advisory lock; lookups scan the file.
struct CacheKey {
    std::string kind; // "rb" or "turan"
    int n = 0;
    std::string code; // canonical hex code(s) of the target or family
};

struct CacheRecord {
    CacheKey key;
    int value = 0;
    std::string witness; // edge-color CSV for rb, graph literal for turan
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
};

class ResultCache {
public:
    explicit ResultCache(std::string path);
    // $RB_CACHE_DIR/results.jsonl, else $HOME/.cache/rainbow-numbers/,
    // else ./.rainbow-cache/.
    static ResultCache open_default();

    std::optional<CacheRecord> lookup(const CacheKey& key) const;
    void append(const CacheRecord& record) const;
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace rb
