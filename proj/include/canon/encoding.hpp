#pragma once

#include <iosfwd>
#include <vector>

#include "canon/forms.hpp"

namespace canon::encoding {

// Finite sets of non-negative exponents B_1 < B_2 < ... (max of each block
// below the min of the next); every block nonempty.
struct BlockFamily {
  explicit BlockFamily(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int count() const { return static_cast<int>(blocks_.size()); }

 private:
  std::vector<std::vector<int>> blocks_;
};

// f(S) = sum of 2^s over s in S; S nonempty, entries >= 0 and distinct.
Int f_encode(const std::vector<int>& s);

// x_j = f(B_1 u ... u B_j): strictly increasing ground set of prefix codes.
forms::GroundSet blocks_to_x(const BlockFamily& fam);

// Index selection for alternating sums over J = {j_1 < ... < j_k}:
// even k: union of runs (j_1, j_2], (j_3, j_4], ...
// odd k:  [1, j_1] plus runs (j_2, j_3], (j_4, j_5], ...
std::vector<int> j_alt(const forms::IndexSet& j, forms::Parity parity);

struct AltIdentity {
  bool equal;
  Int lhs;  // alternating sum of the prefix codes over J
  Int rhs;  // code of the union of blocks selected by j_alt
};

// Checks that the alternating sum over J of blocks_to_x(fam) equals the code
// of union(B_i : i in j_alt(J)). Exact on both sides.
AltIdentity verify_alt_identity(const BlockFamily& fam, const forms::IndexSet& j, forms::Parity parity);

// One line per block: space-separated exponents.
BlockFamily parse_blocks(std::istream& in);

}  // namespace canon::encoding
