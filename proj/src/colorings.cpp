#include "canon/colorings.hpp"

#include <sstream>

namespace canon::colorings {

using arith::floor_log;
using arith::is_small_prime;
using arith::valuation_split;

std::string Color::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

ColoringSpec ColoringSpec::interval(long long base) {
  if (base < 2) throw std::invalid_argument("interval coloring: base must be >= 2");
  return ColoringSpec{IntervalBase{base}};
}

ColoringSpec ColoringSpec::valuation(long long k) {
  if (k < 2) throw std::invalid_argument("valuation coloring: k must be >= 2");
  return ColoringSpec{ValuationOnly{k}};
}

ColoringSpec ColoringSpec::valuation_residue(long long p) {
  if (p < 3 || p % 2 == 0 || !is_small_prime(p))
    throw std::invalid_argument("valuation-residue coloring: p must be an odd prime");
  return ColoringSpec{ValuationResidue{p}};
}

ColoringSpec ColoringSpec::sqrt2_mod5() { return ColoringSpec{Sqrt2Mod5{}}; }

ColoringSpec ColoringSpec::product(std::vector<ColoringSpec> factors) {
  if (factors.empty()) throw std::invalid_argument("product coloring: needs at least one factor");
  return ColoringSpec{ProductOf{std::move(factors)}};
}

ColoringSpec ColoringSpec::table(std::map<Int, Color> entries, Color fallback) {
  for (const auto& [x, c] : entries) {
    (void)c;
    if (x < 1) throw std::invalid_argument("table coloring: keys must be positive");
  }
  return ColoringSpec{ExplicitTable{std::move(entries), std::move(fallback)}};
}

std::string ColoringSpec::str() const {
  struct V {
    std::string operator()(const IntervalBase& s) const { return "interval:" + std::to_string(s.base); }
    std::string operator()(const ValuationOnly& s) const { return "valuation:" + std::to_string(s.k); }
    std::string operator()(const ValuationResidue& s) const { return "valres:" + std::to_string(s.p); }
    std::string operator()(const Sqrt2Mod5&) const { return "sqrt2mod5"; }
    std::string operator()(const ProductOf& s) const {
      std::string out = "product:";
      for (size_t i = 0; i < s.factors.size(); ++i) {
        if (i) out += '+';
        out += s.factors[i].str();
      }
      return out;
    }
    std::string operator()(const ExplicitTable& s) const {
      return "table:" + std::to_string(s.entries.size()) + "-entries";
    }
  };
  return std::visit(V{}, node);
}

Color eval_coloring(const ColoringSpec& spec, const Int& x) {
  if (x < 1) throw std::invalid_argument("eval_coloring: x must be >= 1");
  struct V {
    const Int& x;
    Color operator()(const IntervalBase& s) const { return Color::single(floor_log(x, s.base)); }
    Color operator()(const ValuationOnly& s) const { return Color::single(valuation_split(x, s.k).val); }
    Color operator()(const ValuationResidue& s) const {
      auto vs = valuation_split(x, s.p);
      Int r = vs.unit % to_int(s.p);
      return Color{{vs.val, r.get_si()}};
    }
    Color operator()(const Sqrt2Mod5&) const {
      if (x == 1) return Color::single(0);
      // x in [ceil(sqrt(2^i)), ceil(sqrt(2^{i+1}))-1] iff 2^i <= x^2 < 2^{i+1},
      // so i is one less than the bit length of x^2.
      Int sq = x * x;
      long long i = static_cast<long long>(mpz_sizeinbase(sq.get_mpz_t(), 2)) - 1;
      return Color::single(i % 5);
    }
    Color operator()(const ProductOf& s) const {
      Color out;
      for (const auto& f : s.factors) {
        Color c = eval_coloring(f, x);
        out.parts.insert(out.parts.end(), c.parts.begin(), c.parts.end());
      }
      return out;
    }
    Color operator()(const ExplicitTable& s) const {
      auto it = s.entries.find(x);
      return it == s.entries.end() ? s.fallback : it->second;
    }
  };
  return std::visit(V{x}, spec.node);
}

static void require_odd_prime(long long p, const char* who) {
  if (p < 3 || p % 2 == 0 || !is_small_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

Color eval_pair_coloring(long long p, const Int& xi, const Int& xj) {
  require_odd_prime(p, "eval_pair_coloring");
  if (!(xi < xj)) throw std::invalid_argument("eval_pair_coloring: requires xi < xj");
  auto vs = valuation_split(Int(xj - xi), p);
  Int r = vs.unit % to_int(p);
  return Color::single(r.get_si());
}

Color eval_triple_coloring(long long p, const Int& xi, const Int& xj, const Int& xk) {
  require_odd_prime(p, "eval_triple_coloring");
  if (!(xi < xj && xj < xk)) throw std::invalid_argument("eval_triple_coloring: requires xi < xj < xk");
  long long a = valuation_split(Int(xk - xi), p).val;
  long long b = valuation_split(Int(xj - xi), p).val;
  if (a == b) return Color::single(0);
  return Color::single(a < b ? 1 : 2);
}

}  // namespace canon::colorings
