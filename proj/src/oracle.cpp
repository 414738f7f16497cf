#include "canon/oracle.hpp"

#include <algorithm>
#include <map>

namespace canon::oracle {

using colorings::Color;
using colorings::eval_coloring;

namespace {

constexpr int kNoCapBellLimit = 12;            // Bell(12) = 4213597 is still enumerable
constexpr unsigned long long kTableLimit = 200000ull;  // per-table key count

unsigned long long binom_capped(int n, int k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  const int kk = std::min(k, n - k);
  unsigned long long c = 1;
  for (int i = 0; i < kk && c <= cap; ++i)
    c = c * static_cast<unsigned long long>(n - i) / static_cast<unsigned long long>(i + 1);
  return c;
}

std::vector<std::vector<int>> k_subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

long long enumerate_canonical_colorings(int n, int k, long long cap,
                                        const std::function<bool(const ColorTable&)>& fn) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("enumerate_canonical_colorings: need 1 <= k <= n");
  const unsigned long long b = binom_capped(n, k, kTableLimit);
  if (b > kTableLimit) throw budget_error("enumerate_canonical_colorings: too many k-subsets");
  if (cap <= 0 && b > static_cast<unsigned long long>(kNoCapBellLimit))
    throw budget_error("enumerate_canonical_colorings: Bell(C(n,k)) not enumerable without a cap");

  const auto subsets = k_subsets_lex(n, k);
  const size_t items = subsets.size();
  std::vector<long long> rgs(items, 0);
  long long count = 0;
  while (true) {
    ColorTable table;
    for (size_t i = 0; i < items; ++i) table[subsets[i]] = Color{{rgs[i]}};
    ++count;
    if (!fn(table)) break;
    if (cap > 0 && count >= cap) break;
    // Lexicographic successor of the restricted-growth string.
    size_t pos = items;
    long long prefix_max = -1;
    for (size_t i = items; i-- > 1;) {
      prefix_max = *std::max_element(rgs.begin(), rgs.begin() + static_cast<long>(i));
      if (rgs[i] <= prefix_max) {
        pos = i;
        break;
      }
    }
    if (pos == items) break;
    ++rgs[pos];
    std::fill(rgs.begin() + static_cast<long>(pos) + 1, rgs.end(), 0);
  }
  return count;
}

std::optional<ErWitness> er_search(const ColorTable& table, int m) {
  if (table.empty()) throw std::invalid_argument("er_search: table must be nonempty");
  const int k = static_cast<int>(table.begin()->first.size());
  if (k < 1) throw std::invalid_argument("er_search: keys must be nonempty");
  if (m < k) throw std::invalid_argument("er_search: m must be >= k");
  int n = 0;
  for (const auto& [key, c] : table) {
    (void)c;
    if (static_cast<int>(key.size()) != k) throw std::invalid_argument("er_search: ragged keys");
    for (size_t i = 0; i < key.size(); ++i) {
      if (key[i] < 1 || (i > 0 && key[i] <= key[i - 1]))
        throw std::invalid_argument("er_search: keys must be ascending positive");
      n = std::max(n, key[i]);
    }
  }
  if (table.size() != binom_capped(n, k, kTableLimit))
    throw std::invalid_argument("er_search: table must cover all k-subsets of [1..n]");
  if (m > n) return std::nullopt;

  // Position patterns: which k of the m slots a subset occupies.
  const auto patterns_mk = k_subsets_lex(m, k);

  for (const auto& xs : k_subsets_lex(n, m)) {
    // Color of each k-subset of this X, in pattern order.
    std::vector<const Color*> colors;
    std::vector<std::vector<int>> keys;
    colors.reserve(patterns_mk.size());
    keys.reserve(patterns_mk.size());
    for (const auto& pat : patterns_mk) {
      std::vector<int> key;
      key.reserve(pat.size());
      for (int pos : pat) key.push_back(xs[static_cast<size_t>(pos - 1)]);
      colors.push_back(&table.at(key));
      keys.push_back(std::move(key));
    }
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      // Two-map consistency: projection key <-> color must be a bijection on
      // the classes appearing over C(X, k).
      std::map<std::vector<int>, const Color*> key_to_color;
      std::map<Color, std::vector<int>> color_to_key;
      bool ok = true;
      for (size_t s = 0; s < keys.size() && ok; ++s) {
        std::vector<int> proj;
        for (int pos = 1; pos <= k; ++pos)
          if (mask >> (pos - 1) & 1u) proj.push_back(keys[s][static_cast<size_t>(pos - 1)]);
        auto [it, fresh] = key_to_color.emplace(proj, colors[s]);
        if (!fresh && !(*it->second == *colors[s])) ok = false;
        auto [jt, fresh2] = color_to_key.emplace(*colors[s], proj);
        if (!fresh2 && jt->second != proj) ok = false;
      }
      if (ok) {
        ErWitness w;
        w.x = xs;
        for (int pos = 1; pos <= k; ++pos)
          if (mask >> (pos - 1) & 1u) w.i.push_back(pos);
        return w;
      }
    }
  }
  return std::nullopt;
}

bool reverify_witness(const ColoringSpec& spec, const GroundSet& x, const TheoremProfile& profile,
                      const patterns::Witness& w) {
  Int va = patterns::object_value(w.a, x, profile);
  Int vb = patterns::object_value(w.b, x, profile);
  Color ca = eval_coloring(spec, va);
  Color cb = eval_coloring(spec, vb);
  if (!(ca == w.color_a) || !(cb == w.color_b)) return false;
  if (w.expect_equal) return !(ca == cb);
  return ca == cb && va != vb;
}

ExclusionReport witness_exclusion_report(const ColoringSpec& spec, const GroundSet& x,
                                         const TheoremProfile& profile, int n) {
  patterns::PatternVerdict v = patterns::classify_canonical(spec, x, profile, n);
  ExclusionReport report{spec, profile, n, v.vacuous, v.consistent_labels(), {}};
  for (const auto& ps : v.patterns) {
    if (ps.consistent) continue;
    if (!ps.witness) throw std::logic_error("witness_exclusion_report: excluded pattern carries no witness");
    if (!reverify_witness(spec, x, profile, *ps.witness))
      throw std::logic_error("witness_exclusion_report: witness failed re-verification");
    report.excluded.push_back({ps.label, *ps.witness});
  }
  return report;
}

}  // namespace canon::oracle
