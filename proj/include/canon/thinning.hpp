#pragma once

#include <functional>
#include <vector>

#include "canon/colorings.hpp"
#include "canon/forms.hpp"

namespace canon::thinning {

using colorings::Color;
using forms::GroundSet;

// Greedy subsequence keeping the first element of each base-interval color
// class (colors then strictly increase), then dropping elements so that
// consecutive gaps strictly increase.
GroundSet thin_interval_rainbow(const GroundSet& x, long long base);

struct ResidueThinning {
  GroundSet kept;
  long long d;  // kept units are congruent to d + c*k mod k^2, 1 <= d < k
  long long c;  // 0 <= c < k
};

// Buckets x by unit-of-x mod k^2 and keeps the largest class (ties toward the
// smaller residue).
ResidueThinning thin_residue(const GroundSet& x, long long k);

struct FocusResult {
  std::vector<Int> items;  // subsequence of the input, original order
  bool shortfall;          // true when length < the requested m
};

// Color of a sorted t-subset of items.
using SubsetColorFn = std::function<Color(const std::vector<Int>&)>;

// Iterated-pigeonhole focusing: returns a subsequence on which color_fn is
// constant over all t-subsets (t = 2 or 3), of length >= m when achievable.
// The majority-class walk runs first; if it misses m, deterministic
// fixed-class walks (one color class followed at every step, colors in sorted
// order) are tried. Never fabricates: the result is machine-checkable and the
// shortfall flag reports a miss.
FocusResult ramsey_focus(const std::vector<Int>& items, const SubsetColorFn& color_fn, int t, int m);

struct StarCertificate {
  GroundSet z;
  long long p;
  long long common_residue;                 // all pair differences have unit = this mod p
  std::vector<long long> star_valuations;   // (z_j - z_i)' for each i < |Z|, constant over j
  bool shortfall;
};

// Composes pair focusing (difference-unit residues) and triple focusing
// (valuation comparisons), then extracts a strictly increasing valuation
// subsequence. All three certificate invariants are re-verified before
// returning; shortfall reports the achieved length honestly.
StarCertificate star_thin(const GroundSet& x, long long p, int m);

// Exhaustive re-check of the three star invariants (used by tests and by
// star_thin itself).
bool verify_star(const StarCertificate& cert);

struct CaseSplit {
  char which;  // 'a' strictly increasing valuations, 'b' all equal
  GroundSet kept;
  bool shortfall;
};

// Pigeonhole split on valuations: the longer of (a) a strictly increasing
// valuation subsequence and (b) a constant valuation class, trimmed to m when
// achieved; ties prefer (b).
CaseSplit split_case_ab(const GroundSet& x, long long p, int m);

}  // namespace canon::thinning
