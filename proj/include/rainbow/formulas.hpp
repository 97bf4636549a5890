#pragma once

#include <optional>
#include <string>

#include "rainbow/graph.hpp"

namespace rb {

// rb(n, C_k): floor(n/(k-1))*C(k-1,2) + C(r,2) + ceil(n/(k-1)),
// r = n mod (k-1).  Requires n >= k >= 3.
long rb_cycle(long n, int k);

// For a unicyclic target on p >= 5 vertices whose cycle has k vertices,
// 3 <= k <= p-2: (rb_cycle(n,k), (p-2)*n - p*(p-3)/2), valid for n >= p.
std::pair<long, long> theorem5_bounds(int p, int k, long n);

// rb bounds from Turan numbers: ext(n,H-e family)+2 <= rb <= ext(n,H)+1.
struct Eq1Bounds {
    long lower = 0;
    long upper = 0;
    bool consistent = true; // false when lower > upper (bad inputs)
};
Eq1Bounds eq1_bounds(long ext_family_value, long ext_target_value);

enum class BoundKind {
    superlinear,               // cyclomatic >= 2: no linear upper bound exists
    unicyclic_bounded,         // cyclomatic 1, bounds from the cycle length
    cycle_exact,               // target is C_k: closed form
    cycle_plus_pendant_exact,  // target is C_k plus pendant: closed form
    out_of_theorem_scope,
};

const char* to_string(BoundKind k);

struct Classification {
    BoundKind kind = BoundKind::out_of_theorem_scope;
    int order = 0;
    int cyclomatic_number = 0;
    int cycle_length = 0; // for cycle/pendant/unicyclic kinds
    int valid_from = 0;   // minimal n for which bounds apply
    std::string notes;

    bool has_bounds() const {
        return kind == BoundKind::cycle_exact ||
               kind == BoundKind::cycle_plus_pendant_exact ||
               kind == BoundKind::unicyclic_bounded;
    }
    long lower(long n) const;
    long upper(long n) const;
};

Classification classify(const SmallGraph& target);

// ---------------------------------------------------------------------------
// Reference values embedded from the literature.  These are the single
// source for the constants used by tests and the `table` subcommand.

// ext(n, {C_3, C_4}) for 4 <= n <= 16.
std::optional<int> table_ext_c3c4(int n);

// Known exact rainbow numbers: diamond n=4..10, house n=5..8,
// K_{2,3} n=5..8, bull n>=5.  Tag is the catalog name.
std::optional<int> table_rb(const std::string& tag, int n);

// Statement of what this toolkit deliberately does not reproduce.
const char* non_reproducible_note();

} // namespace rb
