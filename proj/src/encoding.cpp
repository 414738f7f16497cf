#include "canon/encoding.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

namespace canon::encoding {

using forms::GroundSet;
using forms::IndexSet;
using forms::Parity;

BlockFamily::BlockFamily(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("BlockFamily: needs at least one block");
  int prev_max = -1;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("BlockFamily: blocks must be nonempty");
    std::sort(b.begin(), b.end());
    if (b.front() < 0) throw std::invalid_argument("BlockFamily: exponents must be >= 0");
    for (size_t i = 1; i < b.size(); ++i)
      if (b[i - 1] == b[i]) throw std::invalid_argument("BlockFamily: duplicate exponent in block");
    if (b.front() <= prev_max) throw std::invalid_argument("BlockFamily: blocks must be separated (max B_i < min B_{i+1})");
    prev_max = b.back();
  }
}

Int f_encode(const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("f_encode: set must be nonempty");
  Int out = 0;
  for (int e : s) {
    if (e < 0) throw std::invalid_argument("f_encode: exponents must be >= 0");
    if (mpz_tstbit(out.get_mpz_t(), static_cast<unsigned long>(e)))
      throw std::invalid_argument("f_encode: duplicate exponent");
    mpz_setbit(out.get_mpz_t(), static_cast<unsigned long>(e));
  }
  return out;
}

GroundSet blocks_to_x(const BlockFamily& fam) {
  std::vector<Int> xs;
  xs.reserve(static_cast<size_t>(fam.count()));
  Int acc = 0;
  for (const auto& b : fam.blocks()) {
    acc += f_encode(b);
    xs.push_back(acc);
  }
  return GroundSet(std::move(xs));
}

std::vector<int> j_alt(const IndexSet& j, Parity parity) {
  const auto& v = j.positions();
  const int k = j.k();
  if (parity == Parity::Even ? (k % 2 != 0) : (k % 2 == 0))
    throw std::invalid_argument("j_alt: |J| parity does not match the requested family");
  if (parity == Parity::Even && k < 2) throw std::invalid_argument("j_alt: even family needs k >= 2");
  if (parity == Parity::Odd && k < 1) throw std::invalid_argument("j_alt: odd family needs k >= 1");
  std::vector<int> out;
  if (parity == Parity::Even) {
    for (int t = 0; t + 1 < k; t += 2)
      for (int i = v[static_cast<size_t>(t)] + 1; i <= v[static_cast<size_t>(t + 1)]; ++i) out.push_back(i);
  } else {
    for (int i = 1; i <= v[0]; ++i) out.push_back(i);
    for (int t = 1; t + 1 < k; t += 2)
      for (int i = v[static_cast<size_t>(t)] + 1; i <= v[static_cast<size_t>(t + 1)]; ++i) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AltIdentity verify_alt_identity(const BlockFamily& fam, const IndexSet& j, Parity parity) {
  if (j.max() > fam.count()) throw std::invalid_argument("verify_alt_identity: J exceeds block count");
  GroundSet x = blocks_to_x(fam);
  Int lhs = eval_form(forms::alt_sign_vector(j.k(), parity), x, j);
  std::vector<int> sel = j_alt(j, parity);
  std::vector<int> expo;
  for (int bi : sel) {
    const auto& b = fam.blocks()[static_cast<size_t>(bi - 1)];
    expo.insert(expo.end(), b.begin(), b.end());
  }
  Int rhs = f_encode(expo);
  return AltIdentity{lhs == rhs, lhs, rhs};
}

BlockFamily parse_blocks(std::istream& in) {
  std::vector<std::vector<int>> blocks;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<int> b;
    int e;
    while (ls >> e) b.push_back(e);
    if (!ls.eof()) throw std::invalid_argument("parse_blocks: malformed line: " + line);
    blocks.push_back(std::move(b));
  }
  return BlockFamily(std::move(blocks));
}

}  // namespace canon::encoding
