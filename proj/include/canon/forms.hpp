#pragma once

#include <vector>

#include "canon/arith.hpp"

namespace canon::forms {

// Strictly increasing positive integers x_1 < x_2 < ...; 1-based access.
struct GroundSet {
  explicit GroundSet(std::vector<Int> xs);

  const std::vector<Int>& values() const { return xs_; }
  int size() const { return static_cast<int>(xs_.size()); }
  const Int& at1(int i) const;  // 1-based, bounds-checked

 private:
  std::vector<Int> xs_;
};

// Strictly increasing positive positions j_1 < ... < j_k into a ground set.
struct IndexSet {
  explicit IndexSet(std::vector<int> idx);

  const std::vector<int>& positions() const { return idx_; }
  int k() const { return static_cast<int>(idx_.size()); }
  int min() const { return idx_.front(); }
  int max() const { return idx_.back(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> idx_;
};

enum class Parity { Even, Odd };

// Nonzero integer coefficients a_1..a_k applied positionally.
struct LinearForm {
  explicit LinearForm(std::vector<long long> coeffs);

  const std::vector<long long>& coeffs() const { return a_; }
  int arity() const { return static_cast<int>(a_.size()); }

 private:
  std::vector<long long> a_;
};

// Even k >= 2: (-1,+1,...,-1,+1); odd k >= 3: (+1,-1,...,-1,+1).
// The parity argument must match k and selects which family is meant.
LinearForm alt_sign_vector(int k, Parity parity);

// (1,1,...,1): plain k-fold sums.
LinearForm all_ones(int k);

// Sum of a_t * x_{j_t}; arity must equal |J| and max J must fit in X.
Int eval_form(const LinearForm& form, const GroundSet& x, const IndexSet& j);

// x_i = z0/k + z_i; requires k >= 2 and k | z0. Every k-element subset S then
// satisfies sum_{i in S} x_i = z0 + sum_{i in S} z_i.
GroundSet shift_construction(const Int& z0, const GroundSet& z, int k);

}  // namespace canon::forms
