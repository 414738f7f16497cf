#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "canon/rado.hpp"
#include "doctest.h"

using canon::budget_error;
using canon::Int;
using canon::to_int;
using namespace canon::rado;
using canon::colorings::Color;
using canon::colorings::ColoringSpec;

namespace {

RationalMatrix mat(std::vector<std::vector<long long>> rows) {
  std::vector<std::vector<Int>> r;
  for (auto& row : rows) {
    std::vector<Int> conv;
    for (long long v : row) conv.push_back(to_int(v));
    r.push_back(std::move(conv));
  }
  return RationalMatrix(r);
}

// Direct subset-sum scan, the slow route.
bool subset_zero_brute(const std::vector<long long>& coeffs) {
  const size_t n = coeffs.size();
  for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
    Int s = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) s += static_cast<long>(coeffs[i]);
    if (s == 0) return true;
  }
  return false;
}

std::vector<int> sorted_blocks_flat(const ColumnsPartition& p) {
  std::vector<int> all;
  for (const auto& b : p.blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("rational matrices validate their shape") {
  CHECK_THROWS_AS(RationalMatrix(std::vector<std::vector<Int>>{}), std::invalid_argument);
  CHECK_THROWS_AS(mat({{1, 2}, {1}}), std::invalid_argument);      // ragged
  CHECK_THROWS_AS(mat({{1, 2}, {0, 0}}), std::invalid_argument);   // zero row
  const auto a = mat({{1, -2, 3}});
  CHECK(a.n() == 1);
  CHECK(a.m() == 3);
  CHECK(a.at(1, 2) == -2);
  CHECK_THROWS_AS(a.at(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(a.at(1, 0), std::invalid_argument);
}

TEST_CASE("columns property on the three worked single-row examples") {
  const auto schur = columns_property(mat({{1, 1, -1}}));
  REQUIRE(schur.has_value());
  REQUIRE(schur->blocks.size() == 2);
  CHECK(schur->blocks[0] == std::vector<int>{1, 3});
  CHECK(schur->blocks[1] == std::vector<int>{2});
  CHECK(verify_columns_partition(mat({{1, 1, -1}}), *schur));

  const auto cancel = columns_property(mat({{1, -1}}));
  REQUIRE(cancel.has_value());
  REQUIRE(cancel->blocks.size() == 1);
  CHECK(cancel->blocks[0] == std::vector<int>{1, 2});

  CHECK_FALSE(columns_property(mat({{2, -1}})).has_value());
}

TEST_CASE("columns property needs block-level absorption, not per-column membership") {
  // Neither column 3 nor column 4 lies in span{(1,1)} alone, but their block
  // sum (1,1) does; a per-column greedy would miss this partition.
  const auto a = mat({{1, -1, 1, 0}, {1, -1, 0, 1}});
  const auto part = columns_property(a);
  REQUIRE(part.has_value());
  REQUIRE(part->blocks.size() == 2);
  CHECK(part->blocks[0] == std::vector<int>{1, 2});
  CHECK(part->blocks[1] == std::vector<int>{3, 4});
  CHECK(verify_columns_partition(a, *part));
}

TEST_CASE("returned partitions cover the columns exactly once and re-verify") {
  std::mt19937_64 rng(2024);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const int m = 2 + static_cast<int>(rng() % 4);
    std::vector<std::vector<long long>> rows(static_cast<size_t>(n),
                                             std::vector<long long>(static_cast<size_t>(m)));
    bool zero_row = false;
    for (auto& row : rows) {
      bool nonzero = false;
      for (auto& v : row) {
        v = static_cast<long long>(rng() % 7) - 3;
        nonzero = nonzero || v != 0;
      }
      zero_row = zero_row || !nonzero;
    }
    if (zero_row) continue;
    const auto a = mat(rows);
    const auto part = columns_property(a);
    if (!part) continue;
    ++found;
    std::vector<int> expect(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) expect[static_cast<size_t>(j)] = j + 1;
    CHECK(sorted_blocks_flat(*part) == expect);
    CHECK(verify_columns_partition(a, *part));
  }
  CHECK(found > 20);  // the random battery must actually exercise the verifier
}

TEST_CASE("partition verification rejects tampering") {
  const auto a = mat({{1, 1, -1}});
  const auto part = *columns_property(a);
  CHECK(verify_columns_partition(a, part));

  auto moved = part;
  moved.blocks[0] = {1, 2};  // 1 + 1 != 0
  moved.blocks[1] = {3};
  CHECK_FALSE(verify_columns_partition(a, moved));

  auto swapped = part;
  std::swap(swapped.blocks[0], swapped.blocks[1]);  // seed no longer sums to zero
  CHECK_FALSE(verify_columns_partition(a, swapped));

  auto incomplete = part;
  incomplete.blocks[1].clear();
  CHECK_FALSE(verify_columns_partition(a, incomplete));
}

TEST_CASE("columns property enforces its enumeration budget") {
  std::vector<std::vector<long long>> wide(1, std::vector<long long>(21, 1));
  CHECK_THROWS_AS(columns_property(mat(wide)), budget_error);
}

TEST_CASE("single-equation regularity agrees with the worked examples") {
  CHECK(single_equation_regular({1, 1, -1}));
  CHECK_FALSE(single_equation_regular({2, -1}));
  CHECK(single_equation_regular({3, -3}));
  CHECK_FALSE(single_equation_regular({1}));
  CHECK(single_equation_regular({2, 3, -5}));
  CHECK_THROWS_AS(single_equation_regular({}), std::invalid_argument);
  CHECK_THROWS_AS(single_equation_regular({1, 0}), std::invalid_argument);
}

TEST_CASE("meet-in-the-middle matches the direct subset scan") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<long long> cs(static_cast<size_t>(n));
    for (auto& c : cs) {
      c = static_cast<long long>(rng() % 19) - 9;
      if (c == 0) c = 7;
    }
    CHECK(single_equation_regular(cs) == subset_zero_brute(cs));
  }
}

TEST_CASE("regularity coincides with the columns property on single rows") {
  // Spot checks here; the exhaustive sweep lives in the acceptance gate.
  for (const auto& cs : std::vector<std::vector<long long>>{
           {1, 1, -1}, {2, -1}, {3, -3}, {1, 2, 3}, {-2, 1, 1}, {2, 2, -1, -3}, {1, -1, 5}}) {
    std::vector<std::vector<long long>> row(1, cs);
    CHECK(single_equation_regular(cs) == columns_property(mat(row)).has_value());
  }
}

TEST_CASE("three-condition classification on the battery") {
  auto g = ghl_classify({1, 1, 1});
  CHECK_FALSE(g.cond_i);
  CHECK_FALSE(g.cond_ii);
  CHECK(g.cond_iii);
  REQUIRE(g.star_base.has_value());
  CHECK(*g.star_base == 2);

  g = ghl_classify({-1, 2});
  CHECK_FALSE(g.cond_i);
  CHECK(g.cond_ii);
  CHECK_FALSE(g.cond_iii);
  REQUIRE(g.star_base.has_value());
  CHECK(*g.star_base == 2);

  g = ghl_classify({-1, 1});
  CHECK(g.cond_i);
  CHECK_FALSE(g.cond_ii);
  CHECK_FALSE(g.cond_iii);

  g = ghl_classify({-1, 1, -1, 1});  // alternating, even length: sums to 0, ends at 1
  CHECK(g.cond_i);
  CHECK_FALSE(g.cond_ii);

  g = ghl_classify({1, -1, 1});  // alternating, odd length: sums to 1
  CHECK_FALSE(g.cond_i);
  CHECK(g.cond_ii);

  g = ghl_classify({2, -1});
  CHECK_FALSE(g.cond_i);
  CHECK(g.cond_ii);
  CHECK_FALSE(g.cond_iii);

  g = ghl_classify({4, -2});  // |a| in {4, 2}: powers of 2
  REQUIRE(g.star_base.has_value());
  CHECK(*g.star_base == 2);

  g = ghl_classify({9, -3, 1});
  REQUIRE(g.star_base.has_value());
  CHECK(*g.star_base == 3);

  g = ghl_classify({6, -2});  // 6 is no power of 2, 3, or 6... no base works
  CHECK_FALSE(g.star_base.has_value());

  g = ghl_classify({8, -8, 64});  // 8 and 64 are powers of 2, so 2 is smallest
  REQUIRE(g.star_base.has_value());
  CHECK(*g.star_base == 2);

  g = ghl_classify({6, -36});  // powers of no smaller base than 6
  REQUIRE(g.star_base.has_value());
  CHECK(*g.star_base == 6);
}

TEST_CASE("classification of the g-copies family matches the closed form") {
  for (long long a = -4; a <= 4; ++a) {
    if (a == 0) continue;
    for (int k = 1; k <= 6; ++k) {
      for (int g = 0; g <= k; ++g) {
        std::vector<long long> cs;
        for (int t = 0; t < g; ++t) cs.push_back(a);
        for (int t = g; t < k; ++t) cs.push_back(1);
        const auto v = ghl_classify(cs);
        const long long expr = g * (a - 1) + k;
        CHECK(v.cond_i == (cs.back() == 1 && expr == 0));
        CHECK(v.cond_ii == (expr == 1));
        CHECK(v.cond_iii == (g == 0 || a == 1));
      }
    }
  }
}

TEST_CASE("pattern names round-trip") {
  for (const auto p : {RadoPattern::Monochromatic, RadoPattern::Rainbow, RadoPattern::Blocks,
                       RadoPattern::None}) {
    const auto back = rado_pattern_from_name(rado_pattern_name(p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  CHECK_FALSE(rado_pattern_from_name("sparkly").has_value());
}

TEST_CASE("solution verdicts on the Schur equation") {
  const auto a = mat({{1, 1, -1}});
  const auto part = *columns_property(a);

  const auto table = [](std::vector<std::pair<long long, long long>> entries) {
    std::map<Int, Color> m;
    for (auto [x, c] : entries) m.emplace(to_int(x), Color::single(c));
    return ColoringSpec::table(std::move(m), Color::single(0));
  };

  const std::vector<Int> y112 = {Int(1), Int(1), Int(2)};
  // All three entries share the fallback color.
  CHECK(canonical_rado_verdict(a, part, y112, table({})) == RadoPattern::Monochromatic);

  const std::vector<Int> y123 = {Int(1), Int(2), Int(3)};
  CHECK(canonical_rado_verdict(a, part, y123, table({{1, 1}, {2, 2}, {3, 3}})) ==
        RadoPattern::Rainbow);
  // Distinct values sharing a color kill rainbow; equal values are exempt.
  CHECK(canonical_rado_verdict(a, part, y112, table({{1, 1}, {2, 2}})) == RadoPattern::Rainbow);
  CHECK(canonical_rado_verdict(a, part, y123, table({{1, 1}, {2, 1}, {3, 2}})) !=
        RadoPattern::Rainbow);

  // Blocks for the Schur partition I1 = {2}: y2 isolated, y1 and y3 rainbow.
  CHECK(canonical_rado_verdict(a, part, y123, table({{1, 1}, {2, 2}, {3, 3}})) ==
        RadoPattern::Rainbow);  // rainbow wins first
  CHECK(canonical_rado_verdict(a, part, y123, table({{1, 1}, {2, 1}, {3, 2}})) ==
        RadoPattern::None);
}

TEST_CASE("blocks verdict requires same-color exactly within late blocks") {
  // Partition: I0 = {1,2}, I1 = {3,4}.
  const auto a = mat({{1, -1, 1, -1}});
  const auto part = *columns_property(a);
  REQUIRE(part.blocks.size() == 2);
  REQUIRE(part.blocks[0] == std::vector<int>{1, 2});
  REQUIRE(part.blocks[1] == std::vector<int>{3, 4});

  std::map<Int, Color> m;
  m.emplace(Int(2), Color::single(10));
  m.emplace(Int(4), Color::single(11));
  m.emplace(Int(5), Color::single(12));
  m.emplace(Int(3), Color::single(12));
  const auto spec = ColoringSpec::table(std::move(m), Color::single(0));
  const std::vector<Int> y = {Int(2), Int(4), Int(5), Int(3)};  // 2 - 4 + 5 - 3 = 0
  CHECK(canonical_rado_verdict(a, part, y, spec) == RadoPattern::Blocks);
}

TEST_CASE("solution verdicts validate their inputs") {
  const auto a = mat({{1, 1, -1}});
  const auto part = *columns_property(a);
  const auto spec = ColoringSpec::interval(2);
  CHECK_THROWS_AS(canonical_rado_verdict(a, part, {Int(1), Int(1)}, spec), std::invalid_argument);
  CHECK_THROWS_AS(canonical_rado_verdict(a, part, {Int(1), Int(1), Int(3)}, spec),
                  std::invalid_argument);  // not a solution
  CHECK_THROWS_AS(canonical_rado_verdict(a, part, {Int(0), Int(2), Int(2)}, spec),
                  std::invalid_argument);  // positivity
  ColumnsPartition bad;
  bad.blocks = {{1, 3}};  // does not cover column 2
  CHECK_THROWS_AS(canonical_rado_verdict(a, bad, {Int(1), Int(1), Int(2)}, spec),
                  std::invalid_argument);
}

TEST_CASE("solution search equals the exhaustive filter") {
  const auto a = mat({{1, 1, -1}});
  std::map<Int, Color> m;
  m.emplace(Int(1), Color::single(1));
  m.emplace(Int(2), Color::single(1));
  m.emplace(Int(3), Color::single(2));
  m.emplace(Int(4), Color::single(2));
  const auto spec = ColoringSpec::table(std::move(m), Color::single(3));

  const auto mono = search_solutions(a, 4, spec, RadoPattern::Monochromatic);
  CHECK(mono == std::vector<std::vector<long long>>{{1, 1, 2}});

  // Independent route: enumerate the box directly and filter.
  const auto part = *columns_property(a);
  for (const auto want : {RadoPattern::Monochromatic, RadoPattern::Rainbow, RadoPattern::Blocks,
                          RadoPattern::None}) {
    std::vector<std::vector<long long>> expect;
    for (long long y1 = 1; y1 <= 4; ++y1)
      for (long long y2 = 1; y2 <= 4; ++y2)
        for (long long y3 = 1; y3 <= 4; ++y3) {
          if (y1 + y2 - y3 != 0) continue;
          const std::vector<Int> y = {to_int(y1), to_int(y2), to_int(y3)};
          if (canonical_rado_verdict(a, part, y, spec) == want)
            expect.push_back({y1, y2, y3});
        }
    CHECK(search_solutions(a, 4, spec, want) == expect);
  }
}

TEST_CASE("solution search stays within its budget") {
  const auto a = mat({{1, 1, -1}});
  CHECK_THROWS_AS(search_solutions(a, 500, ColoringSpec::interval(2), RadoPattern::Monochromatic),
                  budget_error);
}

TEST_CASE("doubling equation has rainbow solutions under an injective coloring") {
  const auto a = mat({{2, -1}});
  std::map<Int, Color> m;
  for (long long v = 1; v <= 10; ++v) m.emplace(to_int(v), Color::single(v));
  const auto spec = ColoringSpec::table(std::move(m), Color::single(0));
  const auto sols = search_solutions(a, 10, spec, RadoPattern::Rainbow);
  std::vector<std::vector<long long>> expect;
  for (long long t = 1; t <= 5; ++t) expect.push_back({t, 2 * t});
  CHECK(sols == expect);
}
