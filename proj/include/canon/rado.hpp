#pragma once

#include <optional>
#include <string>
#include <vector>

#include "canon/arith.hpp"
#include "canon/colorings.hpp"

namespace canon::rado {

// Exact-rational matrix built from integer entries. Every row must contain at
// least one nonzero entry; all arithmetic on it stays in exact rationals.
class RationalMatrix {
 public:
  explicit RationalMatrix(const std::vector<std::vector<Int>>& rows);
  int n() const { return n_; }
  int m() const { return m_; }
  const Rat& at(int i, int j) const;      // 1-based
  std::vector<Rat> column(int j) const;   // 1-based

 private:
  int n_ = 0, m_ = 0;
  std::vector<std::vector<Rat>> a_;
};

// Ordered partition I_0, I_1, ..., I_m of the column indices [1..M]. blocks[0]
// is the seed block whose columns sum to zero; each later block's column sum
// lies in the span of all columns of earlier blocks.
struct ColumnsPartition {
  std::vector<std::vector<int>> blocks;  // 1-based column indices, each sorted
};

// Decides whether such a partition exists and returns the first one found:
// seed blocks are tried over nonempty zero-sum subsets in ascending bitmask
// order; the remaining columns are then absorbed block by block (all
// individually spanned columns at once when possible, otherwise the first
// subset whose sum is spanned). Absorbing any valid block never loses a
// completable chain, so the search is exact for each seed.
// Throws budget_error when M exceeds the subset-enumeration cap (20).
std::optional<ColumnsPartition> columns_property(const RationalMatrix& a);

// Independent recheck of a claimed partition: structural validity, exact zero
// residual of the seed sum, and for each later block a fresh augmented-matrix
// solve whose solution is multiplied back and compared exactly.
bool verify_columns_partition(const RationalMatrix& a, const ColumnsPartition& part);

// True iff some nonempty subset of the coefficients sums to zero. Decided by
// meet-in-the-middle over the two halves; equivalent to the columns property
// for the 1-row matrix of the same coefficients.
bool single_equation_regular(const std::vector<long long>& coeffs);

// The three partition-regularity conditions for a single equation
// a_1 x_1 + ... + a_k x_k = 0, evaluated literally, plus the smallest base
// c >= 2 for which every |a_t| is a power of c (2 when all |a_t| = 1, absent
// when no base works). The base is reported, never used as a gate.
struct GhlVerdict {
  bool cond_i = false;    // a_k = 1 and the coefficients sum to 0
  bool cond_ii = false;   // the coefficients sum to 1
  bool cond_iii = false;  // every coefficient equals 1
  std::optional<long long> star_base;
};
GhlVerdict ghl_classify(const std::vector<long long>& coeffs);

enum class RadoPattern { Monochromatic, Rainbow, Blocks, None };
std::string rado_pattern_name(RadoPattern p);
std::optional<RadoPattern> rado_pattern_from_name(const std::string& name);

// Pattern verdict for one concrete solution y of A·y = 0 under a coloring:
//   mono    — all entries share one color;
//   rainbow — distinct values never share a color;
//   blocks  — equal colors exactly between indices sharing a block I_t, t >= 1;
//   none    — no pattern matches (legal for arbitrary solutions).
// Checks run in that order and the first match wins. A non-solution y or a
// malformed partition is a domain error.
RadoPattern canonical_rado_verdict(const RationalMatrix& a, const ColumnsPartition& part,
                                   const std::vector<Int>& y, const colorings::ColoringSpec& spec);

// All y in [1..N]^M with A·y = 0 whose verdict equals `want`, in lexicographic
// order (last coordinate fastest). Repeated values are permitted. The blocks
// verdict uses the partition found by columns_property (solutions can never
// match `blocks` when no partition exists). Throws budget_error when
// N^M > 10^7.
std::vector<std::vector<long long>> search_solutions(const RationalMatrix& a, long long n,
                                                     const colorings::ColoringSpec& spec, RadoPattern want);

}  // namespace canon::rado
