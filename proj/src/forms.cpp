#include "canon/forms.hpp"

namespace canon::forms {

GroundSet::GroundSet(std::vector<Int> xs) : xs_(std::move(xs)) {
  if (xs_.empty()) throw std::invalid_argument("GroundSet: must be nonempty");
  if (xs_.front() < 1) throw std::invalid_argument("GroundSet: elements must be positive");
  for (size_t i = 1; i < xs_.size(); ++i)
    if (!(xs_[i - 1] < xs_[i])) throw std::invalid_argument("GroundSet: must be strictly increasing");
}

const Int& GroundSet::at1(int i) const {
  if (i < 1 || i > size()) throw std::invalid_argument("GroundSet: index out of range");
  return xs_[static_cast<size_t>(i - 1)];
}

IndexSet::IndexSet(std::vector<int> idx) : idx_(std::move(idx)) {
  if (idx_.empty()) throw std::invalid_argument("IndexSet: must be nonempty");
  if (idx_.front() < 1) throw std::invalid_argument("IndexSet: positions must be positive");
  for (size_t i = 1; i < idx_.size(); ++i)
    if (idx_[i - 1] >= idx_[i]) throw std::invalid_argument("IndexSet: must be strictly increasing");
}

LinearForm::LinearForm(std::vector<long long> coeffs) : a_(std::move(coeffs)) {
  if (a_.empty()) throw std::invalid_argument("LinearForm: must be nonempty");
  for (long long c : a_)
    if (c == 0) throw std::invalid_argument("LinearForm: coefficients must be nonzero");
}

LinearForm alt_sign_vector(int k, Parity parity) {
  if (parity == Parity::Even) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("alt_sign_vector: even parity needs even k >= 2");
  } else {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("alt_sign_vector: odd parity needs odd k >= 3");
  }
  std::vector<long long> a(static_cast<size_t>(k));
  // Both families end at +1 on the largest index; signs alternate downward.
  for (int t = k; t >= 1; --t) a[static_cast<size_t>(t - 1)] = ((k - t) % 2 == 0) ? 1 : -1;
  return LinearForm(std::move(a));
}

LinearForm all_ones(int k) {
  if (k < 1) throw std::invalid_argument("all_ones: k must be >= 1");
  return LinearForm(std::vector<long long>(static_cast<size_t>(k), 1));
}

Int eval_form(const LinearForm& form, const GroundSet& x, const IndexSet& j) {
  if (form.arity() != j.k()) throw std::invalid_argument("eval_form: arity mismatch");
  if (j.max() > x.size()) throw std::invalid_argument("eval_form: index set exceeds ground set");
  Int acc = 0;
  for (int t = 0; t < j.k(); ++t)
    acc += static_cast<long>(form.coeffs()[static_cast<size_t>(t)]) * x.at1(j.positions()[static_cast<size_t>(t)]);
  return acc;
}

GroundSet shift_construction(const Int& z0, const GroundSet& z, int k) {
  if (k < 2) throw std::invalid_argument("shift_construction: k must be >= 2");
  if (z0 < 1) throw std::invalid_argument("shift_construction: z0 must be positive");
  if (z0 % k != 0) throw std::invalid_argument("shift_construction: k must divide z0");
  Int base = z0 / k;
  std::vector<Int> xs;
  xs.reserve(static_cast<size_t>(z.size()));
  for (const Int& zi : z.values()) xs.push_back(base + zi);
  return GroundSet(std::move(xs));
}

}  // namespace canon::forms
