#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "canon/arith.hpp"

namespace canon::colorings {

// A color is a tuple of integer components, compared for equality only; the
// ordering exists so colors can key deterministic containers.
struct Color {
  std::vector<long long> parts;

  Color() = default;
  explicit Color(std::vector<long long> p) : parts(std::move(p)) {}
  static Color single(long long v) { return Color{{v}}; }

  friend bool operator==(const Color&, const Color&) = default;
  friend auto operator<=>(const Color&, const Color&) = default;

  std::string str() const;  // "(a,b)"
};

struct ColoringSpec;

// Color i iff x in [base^i, base^{i+1} - 1].
struct IntervalBase {
  long long base;
};

// Color = exponent of k in x.
struct ValuationOnly {
  long long k;
};

// Color = (exponent of p in x, unit mod p), p an odd prime.
struct ValuationResidue {
  long long p;
};

// Color 0 for x = 1; for x >= 2 the color is i mod 5 for the unique i >= 2
// with x in [ceil(sqrt(2^i)), ceil(sqrt(2^{i+1})) - 1].
struct Sqrt2Mod5 {};

// Component-wise product of factor colorings (colors concatenate).
struct ProductOf {
  std::vector<ColoringSpec> factors;
};

// Finite lookup table with a total fallback color.
struct ExplicitTable {
  std::map<Int, Color> entries;
  Color fallback;
};

struct ColoringSpec {
  std::variant<IntervalBase, ValuationOnly, ValuationResidue, Sqrt2Mod5, ProductOf, ExplicitTable> node;

  // Factories validate parameters at construction.
  static ColoringSpec interval(long long base);
  static ColoringSpec valuation(long long k);
  static ColoringSpec valuation_residue(long long p);
  static ColoringSpec sqrt2_mod5();
  static ColoringSpec product(std::vector<ColoringSpec> factors);
  static ColoringSpec table(std::map<Int, Color> entries, Color fallback);

  std::string str() const;  // stable textual form, e.g. "interval:2"
};

// Total on x >= 1; rejects x <= 0.
Color eval_coloring(const ColoringSpec& spec, const Int& x);

// Unit of (xj - xi) mod p, in [1, p-1]; requires xi < xj, p an odd prime.
Color eval_pair_coloring(long long p, const Int& xi, const Int& xj);

// Compares the p-exponents of (xk - xi) and (xj - xi): 0 equal, 1 less, 2 greater.
// Requires xi < xj < xk, p an odd prime.
Color eval_triple_coloring(long long p, const Int& xi, const Int& xj, const Int& xk);

}  // namespace canon::colorings
