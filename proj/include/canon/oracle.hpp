#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "canon/patterns.hpp"

namespace canon::oracle {

using colorings::ColoringSpec;
using forms::GroundSet;
using patterns::ColorTable;
using patterns::TheoremProfile;

// Streams every coloring of the k-subsets of [1..n] up to color renaming, as
// set partitions in restricted-growth-string order (lexicographic, the
// monochromatic table first). Stops after `cap` tables when cap > 0; without
// a cap C(n,k) must stay <= 12 so the Bell number is enumerable. The consumer
// returns false to stop the stream early. Returns the number of tables
// emitted.
long long enumerate_canonical_colorings(int n, int k, long long cap,
                                        const std::function<bool(const ColorTable&)>& fn);

// A finite canonical-theorem witness: on the m-set X the table's colors agree
// exactly when two k-subsets agree on the positions in I.
struct ErWitness {
  std::vector<int> x;  // ascending, size m
  std::vector<int> i;  // subset of [1..k], ascending
};

// First (X, I) in lexicographic order (X major, I by ascending bitmask) whose
// restriction matches exactly. Absent when nothing works at this finite size:
// a report, never an error.
std::optional<ErWitness> er_search(const ColorTable& table, int m);

// One excluded pattern with the pair that kills it.
struct ExclusionEntry {
  std::string label;
  patterns::Witness witness;
};

// Machine-checkable record of which patterns a colored prefix rules out.
struct ExclusionReport {
  ColoringSpec spec;
  TheoremProfile profile;
  int prefix_length;
  bool vacuous;
  std::vector<std::string> consistent;
  std::vector<ExclusionEntry> excluded;
};

// Classifies the prefix and repackages each excluded pattern with its
// witness. Every witness is re-verified from scratch (values recomputed from
// the index sets, colors re-evaluated) before the report is returned.
ExclusionReport witness_exclusion_report(const ColoringSpec& spec, const GroundSet& x,
                                         const TheoremProfile& profile, int n);

// From-scratch check of one witness: recompute both object values and their
// colors, confirm the recorded colors, and confirm the violation direction
// (expected-equal pairs differ; expected-different pairs coincide on
// genuinely distinct values).
bool reverify_witness(const ColoringSpec& spec, const GroundSet& x, const TheoremProfile& profile,
                      const patterns::Witness& w);

}  // namespace canon::oracle
