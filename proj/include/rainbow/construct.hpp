#pragma once

#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/search.hpp"

namespace rb {

// A portable lower-bound witness: a coloring of K_n claimed to contain no
// rainbow copy of the target.  claimed_colors must equal the coloring's
// color count and the verifier must find no rainbow copy.
struct Certificate {
    int n;
    std::string target; // tag or graph literal, resolvable
    EdgeColoring coloring;
    int claimed_colors;
    std::string construction_tag;
};

// n >= 6: pairwise disjoint triangles and 4-cycles covering all n vertices
// (r = n mod 3 many 4-cycles), their n edges rainbow, one shared color on
// the rest.  n+1 colors, no rainbow bull.
Certificate bull_cycle_partition(int n);

// Vertex-disjoint cliques on consecutive ranges starting at 0, each
// rainbow with fresh colors, one shared color on all remaining edges:
// sum C(s_i,2) + 1 colors.
Certificate disjoint_cliques_plus_one(int n, const std::vector<int>& parts,
                                      const std::string& target);

// Hand constructions for K_{2,3}: 9 colors at n = 6, 11 colors at n = 7.
Certificate k23_special(int n);

// Rainbow extremal family-free graph plus one shared color: ext(n,family)+1
// colors.  Throws when the extremal search cannot finish in time.
Certificate extremal_plus_one(int n, const ForbiddenFamily& family,
                              const std::string& target,
                              const SearchConfig& cfg = {});

struct VerifyResult {
    bool ok = false;
    std::string reason;
    std::vector<int> rainbow_copy; // offending vertex set when one exists
};

VerifyResult verify_certificate(const Certificate& cert);

} // namespace rb
