#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <stdexcept>

#include "canon/arith.hpp"
#include "canon/colorings.hpp"
#include "doctest.h"

using canon::Int;
using canon::to_int;
using namespace canon::colorings;
namespace arith = canon::arith;

TEST_CASE("colors compare componentwise and print stably") {
  CHECK(Color{{1, 2}} == Color{{1, 2}});
  CHECK(Color{{1, 2}} != Color{{2, 1}});
  CHECK(Color{{1}} != Color{{1, 0}});
  CHECK(Color{{1, 2}}.str() == "(1,2)");
  CHECK(Color::single(7).str() == "(7)");
}

TEST_CASE("interval coloring returns the base-power index") {
  const auto spec = ColoringSpec::interval(2);
  CHECK(eval_coloring(spec, 5) == Color::single(2));  // 4 <= 5 < 8
  CHECK(eval_coloring(spec, 1) == Color::single(0));
  for (long long b : {2LL, 3LL, 10LL}) {
    const auto s = ColoringSpec::interval(b);
    Int pw = 1;
    for (long long i = 0; i <= 30; ++i) {
      CHECK(eval_coloring(s, pw) == Color::single(i));
      CHECK(eval_coloring(s, pw * static_cast<long>(b) - 1) == Color::single(i));
      pw *= static_cast<long>(b);
    }
  }
}

TEST_CASE("interval coloring is monotone in x") {
  const auto spec = ColoringSpec::interval(2);
  long long prev = 0;
  for (long long x = 1; x <= 4096; ++x) {
    const long long c = eval_coloring(spec, to_int(x)).parts.front();
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("coloring construction validates parameters") {
  CHECK_THROWS_AS(ColoringSpec::interval(1), std::invalid_argument);
  CHECK_THROWS_AS(ColoringSpec::valuation(1), std::invalid_argument);
  CHECK_THROWS_AS(ColoringSpec::valuation_residue(2), std::invalid_argument);  // must be odd
  CHECK_THROWS_AS(ColoringSpec::valuation_residue(9), std::invalid_argument);  // must be prime
  CHECK_THROWS_AS(ColoringSpec::valuation_residue(4), std::invalid_argument);
  CHECK_THROWS_AS(ColoringSpec::product({}), std::invalid_argument);
  CHECK_THROWS_AS(ColoringSpec::table({{Int(0), Color::single(1)}}, Color::single(0)),
                  std::invalid_argument);
}

TEST_CASE("evaluation rejects nonpositive inputs") {
  CHECK_THROWS_AS(eval_coloring(ColoringSpec::interval(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(eval_coloring(ColoringSpec::sqrt2_mod5(), -4), std::invalid_argument);
}

TEST_CASE("valuation coloring keeps only the exponent") {
  const auto spec = ColoringSpec::valuation(3);
  CHECK(eval_coloring(spec, 12) == Color::single(1));
  CHECK(eval_coloring(spec, 7) == Color::single(0));
  CHECK(eval_coloring(spec, 27) == Color::single(3));
}

TEST_CASE("valuation-residue coloring keeps exponent and unit residue") {
  const auto spec = ColoringSpec::valuation_residue(3);
  CHECK(eval_coloring(spec, 12) == Color{{1, 1}});  // 12 = 3 * 4, 4 mod 3 = 1
  CHECK(eval_coloring(spec, 10) == Color{{0, 1}});
  CHECK(eval_coloring(spec, 54) == Color{{3, 2}});  // 54 = 27 * 2
}

TEST_CASE("square-root coloring fixes 1 to color 0 and 2 to color 2") {
  const auto spec = ColoringSpec::sqrt2_mod5();
  CHECK(eval_coloring(spec, 1) == Color::single(0));
  CHECK(eval_coloring(spec, 2) == Color::single(2));
}

TEST_CASE("square-root coloring agrees with an independent interval scan") {
  // Second route: find the unique i >= 2 with x in
  // [ceil_sqrt_pow(2,i), ceil_sqrt_pow(2,i+1) - 1] by direct scan.
  const auto spec = ColoringSpec::sqrt2_mod5();
  for (long long x = 2; x <= 20000; ++x) {
    long long i = 2;
    while (!(arith::ceil_sqrt_pow(2, static_cast<unsigned long>(i)) <= to_int(x) &&
             to_int(x) <= arith::ceil_sqrt_pow(2, static_cast<unsigned long>(i + 1)) - 1))
      ++i;
    CHECK(eval_coloring(spec, to_int(x)) == Color::single(i % 5));
  }
}

TEST_CASE("product coloring concatenates factor colors and refines them") {
  const auto spec =
      ColoringSpec::product({ColoringSpec::interval(2), ColoringSpec::valuation(2)});
  CHECK(eval_coloring(spec, 12) == Color{{3, 2}});  // 8 <= 12 < 16; 12 = 4 * 3
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Int x = to_int(static_cast<long long>(rng() % 100000) + 1);
    const Int y = to_int(static_cast<long long>(rng() % 100000) + 1);
    if (eval_coloring(spec, x) == eval_coloring(spec, y)) {
      CHECK(eval_coloring(ColoringSpec::interval(2), x) ==
            eval_coloring(ColoringSpec::interval(2), y));
      CHECK(eval_coloring(ColoringSpec::valuation(2), x) ==
            eval_coloring(ColoringSpec::valuation(2), y));
    }
  }
}

TEST_CASE("explicit tables fall back to the default color") {
  const auto spec = ColoringSpec::table({{Int(5), Color::single(9)}}, Color::single(0));
  CHECK(eval_coloring(spec, 5) == Color::single(9));
  CHECK(eval_coloring(spec, 6) == Color::single(0));
  CHECK(eval_coloring(spec, 1000000) == Color::single(0));
}

TEST_CASE("spec names are stable") {
  CHECK(ColoringSpec::interval(2).str() == "interval:2");
  CHECK(ColoringSpec::valuation(3).str() == "valuation:3");
  CHECK(ColoringSpec::valuation_residue(5).str() == "valres:5");
  CHECK(ColoringSpec::sqrt2_mod5().str() == "sqrt2mod5");
  CHECK(ColoringSpec::product({ColoringSpec::interval(2), ColoringSpec::sqrt2_mod5()}).str() ==
        "product:interval:2+sqrt2mod5");
}

TEST_CASE("pair coloring takes the difference unit mod p") {
  CHECK(eval_pair_coloring(3, 2, 14) == Color::single(1));  // 12 = 3*4, 4 mod 3
  CHECK(eval_pair_coloring(3, 1, 4) == Color::single(1));
  CHECK(eval_pair_coloring(5, 1, 11) == Color::single(2));  // 10 = 5*2
  CHECK_THROWS_AS(eval_pair_coloring(3, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(eval_pair_coloring(3, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(eval_pair_coloring(4, 1, 2), std::invalid_argument);  // p not an odd prime
  CHECK_THROWS_AS(eval_pair_coloring(2, 1, 2), std::invalid_argument);
}

TEST_CASE("pair coloring lands in [1, p-1]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const long long a = 1 + static_cast<long long>(rng() % 10000);
    const long long d = 1 + static_cast<long long>(rng() % 10000);
    const long long c = eval_pair_coloring(7, to_int(a), to_int(a + d)).parts.front();
    CHECK(c >= 1);
    CHECK(c <= 6);
  }
}

TEST_CASE("triple coloring compares difference valuations against the smallest element") {
  CHECK(eval_triple_coloring(3, 1, 4, 7) == Color::single(0));   // val(6)=1 = val(3)=1
  CHECK(eval_triple_coloring(3, 1, 10, 13) == Color::single(1)); // val(12)=1 < val(9)=2
  CHECK(eval_triple_coloring(3, 1, 4, 10) == Color::single(2));  // val(9)=2 > val(3)=1
  CHECK_THROWS_AS(eval_triple_coloring(3, 1, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(eval_triple_coloring(3, 4, 1, 10), std::invalid_argument);
}
