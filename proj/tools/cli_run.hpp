#pragma once

#include <iosfwd>
#include <string>

namespace canon::cli {

// Fully parsed invocation. Flag parsing (main.cpp) fills this in; run()
// validates the combination against the selected command before any work, so
// the same checks cover direct library-level callers (tests drive run()
// without a subprocess).
struct RunConfig {
  std::string command;  // color|classify|thin|rado|encode|oracle|witness

  // Shared inputs. List-valued fields accept an inline comma list or @path.
  std::string coloring;  // interval:B | valuation:K | valres:P | sqrt2mod5 |
                         // product:SPEC+SPEC | table:PATH
  std::string ground;    // ground-set elements
  std::string values;    // color: values to evaluate
  std::string profile;   // taylor|sums-with-x|alt-with-x|altodd-with-x|sums|alt|altodd
  int k = 0;             // form arity (classify/witness/oracle) or residue modulus (thin)
  int n = 0;             // prefix length (classify/witness) or base-set size (oracle)
  int m = 0;             // target length (thin star/split, oracle er-search)

  // thin
  std::string algorithm;  // interval|residue|star|split
  long long base = 0;     // thin interval
  long long prime = 0;    // thin star/split

  // rado
  std::string matrix;        // matrix file path
  std::string coeffs;        // single-equation coefficients, comma list
  std::string solution;      // candidate solution, comma list
  std::string want;          // mono|rainbow|blocks|none
  long long search_bound = 0;  // search box [1..N]

  // encode
  std::string blocks;  // block-family file path
  std::string j;       // index set J, comma list
  std::string parity;  // even|odd
  bool verify = false;

  // oracle
  long long cap = 0;  // 0 = unbounded enumeration (small Bell numbers only)

  std::string format = "records";  // records|human
};

// Executes one command, writing results to `out` and a one-line diagnostic to
// `err` on failure. Returns 0 on success, 1 on a domain error (bad flags,
// malformed files, invalid parameters), 2 on an exceeded budget or an honest
// shortfall (a thinning run that could not reach its target length).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace canon::cli
