#include "canon/rado.hpp"

#include <algorithm>
#include <set>

namespace canon::rado {

using colorings::Color;
using colorings::eval_coloring;

namespace {
constexpr int kColumnsEnumCap = 20;          // 2^M subset enumeration
constexpr int kSubsetSumCap = 40;            // meet-in-the-middle halves of 2^20
constexpr unsigned long long kSearchBudget = 10'000'000ull;
}  // namespace

RationalMatrix::RationalMatrix(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) throw std::invalid_argument("RationalMatrix: need at least one row");
  n_ = static_cast<int>(rows.size());
  m_ = static_cast<int>(rows.front().size());
  if (m_ == 0) throw std::invalid_argument("RationalMatrix: need at least one column");
  a_.reserve(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m_) throw std::invalid_argument("RationalMatrix: ragged rows");
    bool nonzero = false;
    std::vector<Rat> row;
    row.reserve(r.size());
    for (const Int& e : r) {
      row.emplace_back(e);
      if (e != 0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("RationalMatrix: every row needs a nonzero entry");
    a_.push_back(std::move(row));
  }
}

const Rat& RationalMatrix::at(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > m_) throw std::invalid_argument("RationalMatrix: index out of range");
  return a_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

std::vector<Rat> RationalMatrix::column(int j) const {
  if (j < 1 || j > m_) throw std::invalid_argument("RationalMatrix: column index out of range");
  std::vector<Rat> c;
  c.reserve(a_.size());
  for (const auto& row : a_) c.push_back(row[static_cast<size_t>(j - 1)]);
  return c;
}

namespace {

// Incremental reduced row echelon basis over Q. Every stored row carries a 1
// at its pivot and 0 at every other pivot, so a single pass of eliminations
// in any order fully reduces a vector.
class SpanBasis {
 public:
  std::vector<Rat> reduce(std::vector<Rat> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      Rat f = v[pivots_[r]];
      if (f != 0)
        for (size_t i = 0; i < v.size(); ++i) v[i] -= f * rows_[r][i];
    }
    return v;
  }

  bool contains(const std::vector<Rat>& v) const {
    for (const Rat& e : reduce(v))
      if (e != 0) return false;
    return true;
  }

  void add(const std::vector<Rat>& v) {
    std::vector<Rat> w = reduce(v);
    size_t p = w.size();
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) {
        p = i;
        break;
      }
    if (p == w.size()) return;
    Rat lead = w[p];
    for (Rat& e : w) e /= lead;
    for (auto& row : rows_) {
      Rat f = row[p];
      if (f != 0)
        for (size_t i = 0; i < w.size(); ++i) row[i] -= f * w[i];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
  }

 private:
  std::vector<std::vector<Rat>> rows_;
  std::vector<size_t> pivots_;
};

bool all_zero(const std::vector<Rat>& v) {
  for (const Rat& e : v)
    if (e != 0) return false;
  return true;
}

bool structurally_valid(int m, const ColumnsPartition& part) {
  if (part.blocks.empty() || part.blocks.front().empty()) return false;
  std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
  for (const auto& blk : part.blocks) {
    if (blk.empty()) return false;
    for (int j : blk) {
      if (j < 1 || j > m || seen[static_cast<size_t>(j)]) return false;
      seen[static_cast<size_t>(j)] = 1;
    }
  }
  for (int j = 1; j <= m; ++j)
    if (!seen[static_cast<size_t>(j)]) return false;
  return true;
}

// Solve cols · x = target by a fresh Gauss-Jordan pass over the augmented
// matrix (free variables pinned to zero), then re-multiply and compare
// exactly. Independent of SpanBasis on purpose: it double-checks the search.
std::optional<std::vector<Rat>> solve_exact(const std::vector<std::vector<Rat>>& cols,
                                            const std::vector<Rat>& target) {
  const size_t n = target.size(), k = cols.size();
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(k + 1, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = cols[j][i];
    aug[i][k] = target[i];
  }
  std::vector<size_t> pivot_col;
  size_t prow = 0;
  for (size_t c = 0; c < k && prow < n; ++c) {
    size_t sel = n;
    for (size_t r = prow; r < n; ++r)
      if (aug[r][c] != 0) {
        sel = r;
        break;
      }
    if (sel == n) continue;
    std::swap(aug[prow], aug[sel]);
    Rat lead = aug[prow][c];
    for (Rat& e : aug[prow]) e /= lead;
    for (size_t r = 0; r < n; ++r) {
      if (r == prow || aug[r][c] == 0) continue;
      Rat f = aug[r][c];
      for (size_t cc = 0; cc <= k; ++cc) aug[r][cc] -= f * aug[prow][cc];
    }
    pivot_col.push_back(c);
    ++prow;
  }
  for (size_t r = prow; r < n; ++r)
    if (aug[r][k] != 0) return std::nullopt;
  std::vector<Rat> x(k, Rat(0));
  for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = aug[r][k];
  for (size_t i = 0; i < n; ++i) {
    Rat acc(0);
    for (size_t j = 0; j < k; ++j) acc += x[j] * cols[j][i];
    if (acc != target[i]) return std::nullopt;
  }
  return x;
}

}  // namespace

std::optional<ColumnsPartition> columns_property(const RationalMatrix& a) {
  const int m = a.m(), n = a.n();
  if (m > kColumnsEnumCap) throw budget_error("columns_property: column count exceeds the subset-enumeration cap");
  std::vector<std::vector<Rat>> col(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) col[static_cast<size_t>(j)] = a.column(j + 1);

  for (unsigned long long seed = 1; seed < (1ull << m); ++seed) {
    std::vector<Rat> s(static_cast<size_t>(n), Rat(0));
    for (int j = 0; j < m; ++j)
      if (seed >> j & 1ull)
        for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] += col[static_cast<size_t>(j)][static_cast<size_t>(i)];
    if (!all_zero(s)) continue;

    SpanBasis basis;
    std::vector<std::vector<int>> blocks(1);
    std::vector<int> remaining;
    for (int j = 0; j < m; ++j) {
      if (seed >> j & 1ull) {
        blocks[0].push_back(j + 1);
        basis.add(col[static_cast<size_t>(j)]);
      } else {
        remaining.push_back(j);
      }
    }

    bool ok = true;
    while (!remaining.empty()) {
      // Fast path: every column already in the span joins one block. Their
      // sum is then spanned too, and removing spanned columns never blocks a
      // later chain.
      std::vector<int> indiv, rest;
      for (int j : remaining)
        (basis.contains(col[static_cast<size_t>(j)]) ? indiv : rest).push_back(j);
      if (!indiv.empty()) {
        std::vector<int> blk;
        for (int j : indiv) blk.push_back(j + 1);
        blocks.push_back(std::move(blk));
        remaining = std::move(rest);
        continue;
      }
      // Otherwise: first subset (ascending bitmask over the remaining
      // columns) whose sum is spanned. If a valid chain exists its first
      // block qualifies, so failing here rules this seed out entirely.
      bool found = false;
      const size_t r = remaining.size();
      for (unsigned long long sub = 1; sub < (1ull << r) && !found; ++sub) {
        std::vector<Rat> bs(static_cast<size_t>(n), Rat(0));
        for (size_t b = 0; b < r; ++b)
          if (sub >> b & 1ull)
            for (int i = 0; i < n; ++i)
              bs[static_cast<size_t>(i)] += col[static_cast<size_t>(remaining[b])][static_cast<size_t>(i)];
        if (!basis.contains(bs)) continue;
        std::vector<int> blk, rest2;
        for (size_t b = 0; b < r; ++b) {
          if (sub >> b & 1ull) {
            blk.push_back(remaining[b] + 1);
            basis.add(col[static_cast<size_t>(remaining[b])]);
          } else {
            rest2.push_back(remaining[b]);
          }
        }
        blocks.push_back(std::move(blk));
        remaining = std::move(rest2);
        found = true;
      }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) return ColumnsPartition{std::move(blocks)};
  }
  return std::nullopt;
}

bool verify_columns_partition(const RationalMatrix& a, const ColumnsPartition& part) {
  if (!structurally_valid(a.m(), part)) return false;
  const int n = a.n();
  auto block_sum = [&](const std::vector<int>& blk) {
    std::vector<Rat> s(static_cast<size_t>(n), Rat(0));
    for (int j : blk) {
      std::vector<Rat> c = a.column(j);
      for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] += c[static_cast<size_t>(i)];
    }
    return s;
  };
  if (!all_zero(block_sum(part.blocks.front()))) return false;
  std::vector<std::vector<Rat>> earlier;
  for (int j : part.blocks.front()) earlier.push_back(a.column(j));
  for (size_t t = 1; t < part.blocks.size(); ++t) {
    if (!solve_exact(earlier, block_sum(part.blocks[t]))) return false;
    for (int j : part.blocks[t]) earlier.push_back(a.column(j));
  }
  return true;
}

bool single_equation_regular(const std::vector<long long>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("single_equation_regular: need at least one coefficient");
  for (long long c : coeffs)
    if (c == 0) throw std::invalid_argument("single_equation_regular: coefficients must be nonzero");
  if (static_cast<int>(coeffs.size()) > kSubsetSumCap)
    throw budget_error("single_equation_regular: too many coefficients for subset enumeration");

  const size_t half = coeffs.size() / 2;
  const size_t nb = coeffs.size() - half;
  std::set<Int> all_b, nonempty_b;
  for (unsigned long long mask = 0; mask < (1ull << nb); ++mask) {
    Int s = 0;
    for (size_t b = 0; b < nb; ++b)
      if (mask >> b & 1ull) s += static_cast<long>(coeffs[half + b]);
    all_b.insert(s);
    if (mask != 0) nonempty_b.insert(s);
  }
  for (unsigned long long mask = 0; mask < (1ull << half); ++mask) {
    Int s = 0;
    for (size_t b = 0; b < half; ++b)
      if (mask >> b & 1ull) s += static_cast<long>(coeffs[b]);
    if (mask != 0) {
      if (all_b.count(Int(-s))) return true;
    } else if (nonempty_b.count(Int(0))) {
      return true;
    }
  }
  return false;
}

namespace {

bool is_power_of(const Int& v, const Int& base) {
  Int x = v;
  while (x % base == 0) x /= base;
  return x == 1;
}

}  // namespace

GhlVerdict ghl_classify(const std::vector<long long>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("ghl_classify: need at least one coefficient");
  for (long long c : coeffs)
    if (c == 0) throw std::invalid_argument("ghl_classify: coefficients must be nonzero");

  GhlVerdict v;
  Int sum = 0;
  bool all_one = true;
  Int smallest_big = 0;  // smallest |a_t| > 1, if any
  for (long long c : coeffs) {
    sum += static_cast<long>(c);
    if (c != 1) all_one = false;
    Int av = abs(to_int(c));
    if (av > 1 && (smallest_big == 0 || av < smallest_big)) smallest_big = av;
  }
  v.cond_i = (coeffs.back() == 1 && sum == 0);
  v.cond_ii = (sum == 1);
  v.cond_iii = all_one;

  if (smallest_big == 0) {
    v.star_base = 2;  // every base works when all |a_t| = 1; report the smallest
    return v;
  }
  // A usable base c satisfies smallest_big = c^e for some e >= 1, so the
  // candidates are the exact integer roots of smallest_big, tried ascending.
  std::set<Int> candidates;
  const size_t bits = mpz_sizeinbase(smallest_big.get_mpz_t(), 2);
  for (unsigned long e = 1; e <= bits; ++e) {
    Int root;
    int exact = mpz_root(root.get_mpz_t(), smallest_big.get_mpz_t(), e);
    if (exact != 0 && root >= 2) candidates.insert(root);
  }
  for (const Int& c : candidates) {
    bool ok = true;
    for (long long t : coeffs)
      if (!is_power_of(abs(to_int(t)), c)) {
        ok = false;
        break;
      }
    if (ok) {
      v.star_base = c.get_si();
      break;
    }
  }
  return v;
}

std::string rado_pattern_name(RadoPattern p) {
  switch (p) {
    case RadoPattern::Monochromatic: return "mono";
    case RadoPattern::Rainbow: return "rainbow";
    case RadoPattern::Blocks: return "blocks";
    case RadoPattern::None: return "none";
  }
  return "none";
}

std::optional<RadoPattern> rado_pattern_from_name(const std::string& name) {
  if (name == "mono") return RadoPattern::Monochromatic;
  if (name == "rainbow") return RadoPattern::Rainbow;
  if (name == "blocks") return RadoPattern::Blocks;
  if (name == "none") return RadoPattern::None;
  return std::nullopt;
}

namespace {

// Shared verdict body; `part` may be absent, in which case the blocks check
// is skipped (no partition, no block pattern).
RadoPattern verdict_impl(const RationalMatrix& a, const ColumnsPartition* part, const std::vector<Int>& y,
                         const colorings::ColoringSpec& spec) {
  const int m = a.m();
  if (static_cast<int>(y.size()) != m)
    throw std::invalid_argument("canonical_rado_verdict: |y| must equal the column count");
  for (const Int& e : y)
    if (e < 1) throw std::invalid_argument("canonical_rado_verdict: entries must be positive");
  for (int i = 1; i <= a.n(); ++i) {
    Rat acc(0);
    for (int j = 1; j <= m; ++j) acc += a.at(i, j) * Rat(y[static_cast<size_t>(j - 1)]);
    if (acc != 0) throw std::invalid_argument("canonical_rado_verdict: y is not a solution");
  }

  std::vector<Color> col(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) col[static_cast<size_t>(j)] = eval_coloring(spec, y[static_cast<size_t>(j)]);

  bool mono = true;
  for (int j = 1; j < m && mono; ++j)
    if (!(col[static_cast<size_t>(j)] == col[0])) mono = false;
  if (mono) return RadoPattern::Monochromatic;

  bool rainbow = true;
  for (int i = 0; i < m && rainbow; ++i)
    for (int j = i + 1; j < m; ++j)
      if (y[static_cast<size_t>(i)] != y[static_cast<size_t>(j)] &&
          col[static_cast<size_t>(i)] == col[static_cast<size_t>(j)]) {
        rainbow = false;
        break;
      }
  if (rainbow) return RadoPattern::Rainbow;

  if (part != nullptr) {
    std::vector<int> block_of(static_cast<size_t>(m) + 1, -1);
    for (size_t t = 0; t < part->blocks.size(); ++t)
      for (int j : part->blocks[t]) block_of[static_cast<size_t>(j)] = static_cast<int>(t);
    bool blocks = true;
    for (int i = 1; i <= m && blocks; ++i)
      for (int j = i + 1; j <= m; ++j) {
        const bool same_color = col[static_cast<size_t>(i - 1)] == col[static_cast<size_t>(j - 1)];
        const bool share_late =
            block_of[static_cast<size_t>(i)] == block_of[static_cast<size_t>(j)] && block_of[static_cast<size_t>(i)] >= 1;
        if (same_color != share_late) {
          blocks = false;
          break;
        }
      }
    if (blocks) return RadoPattern::Blocks;
  }
  return RadoPattern::None;
}

}  // namespace

RadoPattern canonical_rado_verdict(const RationalMatrix& a, const ColumnsPartition& part, const std::vector<Int>& y,
                                   const colorings::ColoringSpec& spec) {
  if (!structurally_valid(a.m(), part)) throw std::invalid_argument("canonical_rado_verdict: malformed partition");
  return verdict_impl(a, &part, y, spec);
}

std::vector<std::vector<long long>> search_solutions(const RationalMatrix& a, long long n,
                                                     const colorings::ColoringSpec& spec, RadoPattern want) {
  if (n < 1) throw std::invalid_argument("search_solutions: bound must be >= 1");
  const int m = a.m();
  unsigned long long total = 1;
  for (int j = 0; j < m; ++j) {
    total *= static_cast<unsigned long long>(n);
    if (total > kSearchBudget) throw budget_error("search_solutions: N^M exceeds the search budget");
  }

  // The partition only matters once a solution survives the mono and rainbow
  // checks, so it is computed just for the verdicts that can reach it.
  std::optional<ColumnsPartition> part;
  if (want == RadoPattern::Blocks || want == RadoPattern::None) part = columns_property(a);
  const ColumnsPartition* pp = part ? &*part : nullptr;

  // int64 dot products when the entries and bound leave headroom.
  bool fast = true;
  std::vector<std::vector<long long>> ai(static_cast<size_t>(a.n()), std::vector<long long>(static_cast<size_t>(m), 0));
  unsigned long long maxa = 0;
  for (int i = 1; i <= a.n() && fast; ++i)
    for (int j = 1; j <= m; ++j) {
      const Rat& e = a.at(i, j);
      Int num = e.get_num();  // denominators are 1: entries come from integers
      if (!num.fits_slong_p()) {
        fast = false;
        break;
      }
      long long v = num.get_si();
      ai[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = v;
      unsigned long long av = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
      maxa = std::max(maxa, av);
    }
  if (fast && maxa > 0 &&
      maxa > (1ull << 62) / static_cast<unsigned long long>(m) / static_cast<unsigned long long>(n))
    fast = false;

  std::vector<long long> y(static_cast<size_t>(m), 1);
  std::vector<std::vector<long long>> out;
  while (true) {
    bool sol = true;
    if (fast) {
      for (int i = 0; i < a.n() && sol; ++i) {
        long long acc = 0;
        for (int j = 0; j < m; ++j) acc += ai[static_cast<size_t>(i)][static_cast<size_t>(j)] * y[static_cast<size_t>(j)];
        if (acc != 0) sol = false;
      }
    } else {
      for (int i = 1; i <= a.n() && sol; ++i) {
        Rat acc(0);
        for (int j = 1; j <= m; ++j) acc += a.at(i, j) * Rat(to_int(y[static_cast<size_t>(j - 1)]));
        if (acc != 0) sol = false;
      }
    }
    if (sol) {
      std::vector<Int> yi;
      yi.reserve(y.size());
      for (long long v : y) yi.push_back(to_int(v));
      if (verdict_impl(a, pp, yi, spec) == want) out.push_back(y);
    }
    int pos = m - 1;
    while (pos >= 0 && y[static_cast<size_t>(pos)] == n) {
      y[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++y[static_cast<size_t>(pos)];
  }
  return out;
}

}  // namespace canon::rado
