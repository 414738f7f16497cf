#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "canon/colorings.hpp"
#include "canon/forms.hpp"

namespace canon::patterns {

using colorings::Color;
using colorings::ColoringSpec;
using forms::GroundSet;
using forms::IndexSet;
using forms::LinearForm;

// Equivalence relations on index sets used by the pattern biconditionals.
enum class RelationKind { Trivial, Identity, Max, Min, MinMax };

bool relation_holds(RelationKind rel, const std::vector<int>& a, const std::vector<int>& b);

// Which family of colored objects a verdict speaks about.
//   Taylor        : sums over every nonempty subset of [1..n], five patterns
//   SumsWithX     : x_i together with k-fold sums, five patterns
//   AltWithX      : x_i together with alternating sums, even k, five patterns
//   AltOddWithX   : x_i together with odd alternating sums, three patterns
//   SumsOnly      : k-fold sums alone, three patterns
//   AltOnly       : alternating sums alone, even k, five patterns
//   AltOddOnly    : odd alternating sums alone, three patterns
enum class ProfileKind { Taylor, SumsWithX, AltWithX, AltOddWithX, SumsOnly, AltOnly, AltOddOnly };

struct TheoremProfile {
  ProfileKind kind;
  int k;  // ignored for Taylor

  static TheoremProfile taylor();
  static TheoremProfile sums_with_x(int k);      // k >= 2
  static TheoremProfile alt_with_x(int k);       // even k >= 2
  static TheoremProfile alt_odd_with_x(int k);   // odd k >= 3
  static TheoremProfile sums_only(int k);        // k >= 2
  static TheoremProfile alt_only(int k);         // even k >= 2
  static TheoremProfile alt_odd_only(int k);     // odd k >= 3

  // Pattern labels in theorem order. Five-pattern profiles over k-sets list
  // four at k = 2: (v) coincides with (ii) there (min+max determine a 2-set).
  std::vector<std::string> pattern_labels() const;
  std::string str() const;  // stable token, e.g. "sums-with-x"

  static TheoremProfile from_name(const std::string& name, int k);
};

// An observed colored object: either a ground-set element x_i (id {i}) or a
// form value indexed by an index set (id = the positions).
struct ObjectRef {
  bool element;
  std::vector<int> id;

  friend bool operator==(const ObjectRef&, const ObjectRef&) = default;
  std::string str() const;  // "x3" or "{1,2,4}"
};

// Two objects whose colors contradict a pattern. expect_equal records what the
// pattern demanded of this pair, so a witness can be re-verified from scratch.
struct Witness {
  ObjectRef a, b;
  Color color_a, color_b;
  bool expect_equal;
  std::string reason;  // short token, e.g. "identity_violated"
};

struct PatternStatus {
  std::string label;  // "i".."v"
  bool consistent;
  std::optional<Witness> witness;  // present iff not consistent
};

struct PatternVerdict {
  TheoremProfile profile;
  int n;
  bool vacuous;  // n < k (no form objects): all patterns pass by default
  std::vector<PatternStatus> patterns;
  // Partition of the observed objects by color, classes ordered by their
  // smallest member (elements before forms, then lexicographic).
  std::vector<std::vector<ObjectRef>> observed_classes;

  std::vector<std::string> consistent_labels() const;
  std::vector<std::string> excluded_labels() const;
};

// Partition of C([1..n], arity) by the color of the form value, classes
// ordered by smallest member.
std::vector<std::vector<IndexSet>> induced_classes(const ColoringSpec& spec, const GroundSet& x,
                                                   const LinearForm& form, int n);

// Checks every pattern of the profile against the colored prefix x_1..x_n.
// Verdicts are "consistent with the data": a pattern is excluded only by an
// explicit witness pair. Pairs of objects with equal values are exempt from
// biconditional violations (a coloring cannot separate equal values).
PatternVerdict classify_canonical(const ColoringSpec& spec, const GroundSet& x, const TheoremProfile& profile,
                                  int n);

// Value of one observed object over the prefix: the element itself, or the
// profile's form evaluated at the recorded index set. Lets a witness pair be
// re-verified from nothing but its two ObjectRefs.
Int object_value(const ObjectRef& ref, const GroundSet& x, const TheoremProfile& profile);

// A total coloring of the k-subsets of [1..n] (keys sorted ascending).
using ColorTable = std::map<std::vector<int>, Color>;

// All I subseteq [1..k] for which the table's color equivalence is exactly
// "agreement on the positions in I". Results in ascending bitmask order.
std::vector<std::vector<int>> er_canonical_check(const ColorTable& table, int k);

}  // namespace canon::patterns
