#include "cli_run.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canon/arith.hpp"
#include "canon/colorings.hpp"
#include "canon/encoding.hpp"
#include "canon/forms.hpp"
#include "canon/oracle.hpp"
#include "canon/patterns.hpp"
#include "canon/rado.hpp"
#include "canon/thinning.hpp"

namespace canon::cli {
namespace {

using colorings::Color;
using colorings::ColoringSpec;
using forms::GroundSet;
using forms::IndexSet;
using forms::Parity;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// ---------------------------------------------------------------------------
// Input parsing: inline comma lists, @file indirection, file grammars.
// ---------------------------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// List-valued flags accept "@path" to read the payload from a file.
std::string resolve_list(const std::string& text) {
  if (!text.empty() && text.front() == '@') return slurp(text.substr(1));
  return text;
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool integer_token(const std::string& t) {
  size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
  if (i >= t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

Int parse_big(const std::string& t) {
  if (!integer_token(t)) throw std::invalid_argument("not an integer: '" + t + "'");
  return Int(t, 10);
}

long long parse_ll(const std::string& t) {
  Int v = parse_big(t);
  if (!v.fits_slong_p()) throw std::invalid_argument("integer out of range: " + t);
  return static_cast<long long>(v.get_si());
}

int parse_i(const std::string& t) {
  long long v = parse_ll(t);
  if (v < -2147483647LL || v > 2147483647LL) throw std::invalid_argument("integer out of range: " + t);
  return static_cast<int>(v);
}

std::vector<Int> parse_big_list(const std::string& text, const std::string& what) {
  auto toks = split_tokens(resolve_list(text));
  require(!toks.empty(), what + ": empty list");
  std::vector<Int> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(parse_big(t));
  return out;
}

std::vector<long long> parse_ll_list(const std::string& text, const std::string& what) {
  auto toks = split_tokens(resolve_list(text));
  require(!toks.empty(), what + ": empty list");
  std::vector<long long> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(parse_ll(t));
  return out;
}

std::vector<int> parse_i_list(const std::string& text, const std::string& what) {
  auto toks = split_tokens(resolve_list(text));
  require(!toks.empty(), what + ": empty list");
  std::vector<int> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(parse_i(t));
  return out;
}

// Color-table file: one entry per line, "x c1 c2 ..."; exactly one line
// "default c1 c2 ..." supplies the fallback color. '#' starts a comment line.
ColoringSpec load_table(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open file: " + path);
  std::map<Int, Color> entries;
  std::optional<Color> fallback;
  std::string line;
  while (std::getline(in, line)) {
    auto toks = split_tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    std::vector<long long> parts;
    for (size_t i = 1; i < toks.size(); ++i) parts.push_back(parse_ll(toks[i]));
    require(!parts.empty(), "table file: entry without color components: " + line);
    if (toks.front() == "default") {
      require(!fallback.has_value(), "table file: duplicate default line");
      fallback = Color(std::move(parts));
    } else {
      Int x = parse_big(toks.front());
      require(entries.emplace(x, Color(std::move(parts))).second,
              "table file: duplicate entry for x=" + toks.front());
    }
  }
  require(fallback.has_value(), "table file: missing 'default <components>' line");
  return ColoringSpec::table(std::move(entries), std::move(*fallback));
}

ColoringSpec parse_simple_coloring(const std::string& text) {
  if (text == "sqrt2mod5") return ColoringSpec::sqrt2_mod5();
  auto colon = text.find(':');
  require(colon != std::string::npos, "unknown coloring spec: '" + text + "'");
  const std::string head = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (head == "interval") return ColoringSpec::interval(parse_ll(rest));
  if (head == "valuation") return ColoringSpec::valuation(parse_ll(rest));
  if (head == "valres") return ColoringSpec::valuation_residue(parse_ll(rest));
  if (head == "table") return load_table(rest);
  throw std::invalid_argument("unknown coloring spec: '" + text + "'");
}

// product:A+B+... composes simple specs; factors cannot themselves be products.
ColoringSpec parse_coloring(const std::string& text) {
  const std::string prefix = "product:";
  if (text.rfind(prefix, 0) != 0) return parse_simple_coloring(text);
  std::vector<ColoringSpec> factors;
  std::string rest = text.substr(prefix.size());
  size_t pos = 0;
  while (pos <= rest.size()) {
    size_t plus = rest.find('+', pos);
    std::string part = rest.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    require(!part.empty(), "product coloring: empty factor in '" + text + "'");
    factors.push_back(parse_simple_coloring(part));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return ColoringSpec::product(std::move(factors));
}

// Matrix file: first line "N M", then N rows of M integers.
rado::RationalMatrix load_matrix(const std::string& path) {
  auto toks = split_tokens(slurp(path));
  require(toks.size() >= 2, "matrix file: need an 'N M' header: " + path);
  const int n = parse_i(toks[0]);
  const int m = parse_i(toks[1]);
  require(n >= 1 && m >= 1 && n <= 1000 && m <= 1000, "matrix file: N and M must be in [1, 1000]");
  require(toks.size() == static_cast<size_t>(2 + n * m),
          "matrix file: expected " + std::to_string(n * m) + " entries after the header");
  std::vector<std::vector<Int>> rows(static_cast<size_t>(n));
  size_t at = 2;
  for (auto& row : rows) {
    row.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) row.push_back(parse_big(toks[at++]));
  }
  return rado::RationalMatrix(rows);
}

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be 'even' or 'odd', got '" + text + "'");
}

// ---------------------------------------------------------------------------
// Output formatting.
// ---------------------------------------------------------------------------

const char* bool_str(bool b) { return b ? "true" : "false"; }

template <class T>
std::string braces_of(const std::vector<T>& v) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << '}';
  return os.str();
}

std::string witness_record(const std::string& head, const std::string& label,
                           const patterns::Witness& w) {
  std::ostringstream os;
  os << head << " pattern=" << label << " a=" << w.a.str() << " b=" << w.b.str()
     << " color_a=" << w.color_a.str() << " color_b=" << w.color_b.str()
     << " expect_equal=" << bool_str(w.expect_equal) << " reason=" << w.reason;
  return os.str();
}

std::string witness_prose(const std::string& label, const patterns::Witness& w) {
  std::ostringstream os;
  os << "  pattern (" << label << ") fails on " << w.a.str() << " [" << w.color_a.str() << "] vs "
     << w.b.str() << " [" << w.color_b.str() << "]: "
     << (w.expect_equal ? "colors should match" : "colors should differ") << " (" << w.reason << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Commands.
// ---------------------------------------------------------------------------

int cmd_color(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require(!cfg.coloring.empty(), "color: --coloring is required");
  require(!cfg.values.empty(), "color: --values is required");
  const ColoringSpec spec = parse_coloring(cfg.coloring);
  const auto values = parse_big_list(cfg.values, "--values");
  const bool human = cfg.format == "human";
  if (human) out << "coloring " << spec.str() << ":\n";
  for (const Int& x : values) {
    const Color c = colorings::eval_coloring(spec, x);
    if (human)
      out << "  " << x << " -> " << c.str() << "\n";
    else
      out << "color x=" << x << " color=" << c.str() << "\n";
  }
  return 0;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require(!cfg.coloring.empty(), "classify: --coloring is required");
  require(!cfg.ground.empty(), "classify: --ground is required");
  require(!cfg.profile.empty(), "classify: --profile is required");
  require(cfg.n >= 1, "classify: --n must be >= 1");
  const ColoringSpec spec = parse_coloring(cfg.coloring);
  const GroundSet x(parse_big_list(cfg.ground, "--ground"));
  const auto profile = patterns::TheoremProfile::from_name(cfg.profile, cfg.k);
  const auto verdict = patterns::classify_canonical(spec, x, profile, cfg.n);

  if (cfg.format == "human") {
    out << "profile " << profile.str() << " (k=" << profile.k << ") on prefix n=" << verdict.n
        << (verdict.vacuous ? " (vacuous: no form objects)" : "") << "\n";
    out << "  consistent: " << braces_of(verdict.consistent_labels()) << "\n";
    out << "  excluded:   " << braces_of(verdict.excluded_labels()) << "\n";
    for (const auto& ps : verdict.patterns)
      if (!ps.consistent) out << witness_prose(ps.label, *ps.witness) << "\n";
  } else {
    out << "classify profile=" << profile.str() << " k=" << profile.k << " n=" << verdict.n
        << " vacuous=" << bool_str(verdict.vacuous)
        << " consistent=" << braces_of(verdict.consistent_labels())
        << " excluded=" << braces_of(verdict.excluded_labels()) << "\n";
    for (const auto& ps : verdict.patterns)
      if (!ps.consistent) out << witness_record("witness", ps.label, *ps.witness) << "\n";
  }
  return 0;
}

int cmd_thin(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require(!cfg.ground.empty(), "thin: --ground is required");
  require(!cfg.algorithm.empty(), "thin: --algorithm is required (interval|residue|star|split)");
  const GroundSet x(parse_big_list(cfg.ground, "--ground"));
  const bool human = cfg.format == "human";

  if (cfg.algorithm == "interval") {
    require(cfg.base != 0, "thin interval: --base is required");
    const GroundSet kept = thinning::thin_interval_rainbow(x, cfg.base);
    if (human)
      out << "interval thinning (base " << cfg.base << ") kept " << kept.size() << " of " << x.size()
          << ": " << braces_of(kept.values()) << "\n";
    else
      out << "thin algorithm=interval base=" << cfg.base << " kept=" << braces_of(kept.values())
          << "\n";
    return 0;
  }

  if (cfg.algorithm == "residue") {
    require(cfg.k != 0, "thin residue: --k is required");
    const auto r = thinning::thin_residue(x, cfg.k);
    if (human)
      out << "residue thinning (k " << cfg.k << ") kept class d=" << r.d << " c=" << r.c << ": "
          << braces_of(r.kept.values()) << "\n";
    else
      out << "thin algorithm=residue k=" << cfg.k << " d=" << r.d << " c=" << r.c
          << " kept=" << braces_of(r.kept.values()) << "\n";
    return 0;
  }

  if (cfg.algorithm == "star") {
    require(cfg.prime != 0, "thin star: --prime is required");
    require(cfg.m >= 2, "thin star: --m must be >= 2");
    const auto cert = thinning::star_thin(x, cfg.prime, cfg.m);
    if (human)
      out << "star thinning (p " << cfg.prime << ", target " << cfg.m << ") kept " << cert.z.size()
          << ": " << braces_of(cert.z.values()) << "\n  pair units = " << cert.common_residue
          << " mod " << cert.p << ", valuations " << braces_of(cert.star_valuations) << "\n";
    else
      out << "thin algorithm=star p=" << cert.p << " m=" << cfg.m << " size=" << cert.z.size()
          << " shortfall=" << bool_str(cert.shortfall) << " residue=" << cert.common_residue
          << " valuations=" << braces_of(cert.star_valuations)
          << " kept=" << braces_of(cert.z.values()) << "\n";
    if (cert.shortfall) {
      err << "shortfall: star thinning reached " << cert.z.size() << " of target " << cfg.m << "\n";
      return 2;
    }
    return 0;
  }

  if (cfg.algorithm == "split") {
    require(cfg.prime != 0, "thin split: --prime is required");
    require(cfg.m >= 1, "thin split: --m must be >= 1");
    const auto split = thinning::split_case_ab(x, cfg.prime, cfg.m);
    if (human)
      out << "valuation split (p " << cfg.prime << ", target " << cfg.m << ") case " << split.which
          << ": " << braces_of(split.kept.values()) << "\n";
    else
      out << "thin algorithm=split p=" << cfg.prime << " m=" << cfg.m << " case=" << split.which
          << " shortfall=" << bool_str(split.shortfall) << " kept=" << braces_of(split.kept.values())
          << "\n";
    if (split.shortfall) {
      err << "shortfall: split reached " << split.kept.size() << " of target " << cfg.m << "\n";
      return 2;
    }
    return 0;
  }

  throw std::invalid_argument("thin: unknown algorithm '" + cfg.algorithm +
                              "' (interval|residue|star|split)");
}

int cmd_rado(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const bool has_coeffs = !cfg.coeffs.empty();
  const bool has_matrix = !cfg.matrix.empty();
  require(has_coeffs != has_matrix, "rado: exactly one of --coeffs or --matrix is required");
  const bool human = cfg.format == "human";

  if (has_coeffs) {
    require(cfg.solution.empty() && cfg.want.empty() && cfg.search_bound == 0,
            "rado: --coeffs combines only with --format");
    const auto cs = parse_ll_list(cfg.coeffs, "--coeffs");
    const bool regular = rado::single_equation_regular(cs);
    const auto g = rado::ghl_classify(cs);
    const std::string base = g.star_base ? std::to_string(*g.star_base) : "absent";
    if (human) {
      out << "equation " << braces_of(cs) << ": " << (regular ? "regular" : "not regular")
          << "; conditions i=" << bool_str(g.cond_i) << " ii=" << bool_str(g.cond_ii)
          << " iii=" << bool_str(g.cond_iii) << "; power base " << base << "\n";
    } else {
      out << "rado coeffs=" << braces_of(cs) << " regular=" << bool_str(regular)
          << " cond_i=" << bool_str(g.cond_i) << " cond_ii=" << bool_str(g.cond_ii)
          << " cond_iii=" << bool_str(g.cond_iii) << " star_base=" << base << "\n";
    }
    return 0;
  }

  const auto a = load_matrix(cfg.matrix);

  if (!cfg.solution.empty()) {
    require(cfg.want.empty() && cfg.search_bound == 0,
            "rado: --solution cannot combine with --want/--bound");
    require(!cfg.coloring.empty(), "rado: --solution requires --coloring");
    const auto part = rado::columns_property(a);
    require(part.has_value(), "rado: matrix has no columns partition; verdicts need one");
    const auto yll = parse_ll_list(cfg.solution, "--solution");
    std::vector<Int> y;
    y.reserve(yll.size());
    for (long long v : yll) y.push_back(to_int(v));
    const auto verdict = rado::canonical_rado_verdict(a, *part, y, parse_coloring(cfg.coloring));
    if (human)
      out << "solution " << braces_of(yll) << " colors as: " << rado::rado_pattern_name(verdict)
          << "\n";
    else
      out << "verdict y=" << braces_of(yll) << " pattern=" << rado::rado_pattern_name(verdict)
          << "\n";
    return 0;
  }

  if (!cfg.want.empty() || cfg.search_bound != 0) {
    require(!cfg.want.empty(), "rado: searches need --want");
    require(cfg.search_bound >= 1, "rado: searches need --bound >= 1");
    require(!cfg.coloring.empty(), "rado: searches need --coloring");
    const auto want = rado::rado_pattern_from_name(cfg.want);
    require(want.has_value(), "rado: unknown pattern '" + cfg.want + "' (mono|rainbow|blocks|none)");
    const auto sols = rado::search_solutions(a, cfg.search_bound, parse_coloring(cfg.coloring), *want);
    for (const auto& y : sols) {
      if (human)
        out << "  " << braces_of(y) << "\n";
      else
        out << "solution y=" << braces_of(y) << "\n";
    }
    if (human)
      out << sols.size() << " solution(s) in [1.." << cfg.search_bound << "]^" << a.m()
          << " color as " << cfg.want << "\n";
    else
      out << "search bound=" << cfg.search_bound << " want=" << cfg.want << " count=" << sols.size()
          << "\n";
    return 0;
  }

  const auto part = rado::columns_property(a);
  if (human) {
    if (part) {
      out << "columns property holds:";
      for (size_t t = 0; t < part->blocks.size(); ++t)
        out << " I" << t << "=" << braces_of(part->blocks[t]);
      out << "\n";
    } else {
      out << "columns property fails\n";
    }
  } else {
    if (part) {
      out << "rado columns=true";
      for (size_t t = 0; t < part->blocks.size(); ++t)
        out << " I" << t << "=" << braces_of(part->blocks[t]);
      out << "\n";
    } else {
      out << "rado columns=false\n";
    }
  }
  return 0;
}

int cmd_encode(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require(!cfg.blocks.empty(), "encode: --blocks is required");
  std::ifstream in(cfg.blocks);
  require(static_cast<bool>(in), "cannot open file: " + cfg.blocks);
  const auto fam = encoding::parse_blocks(in);
  const bool human = cfg.format == "human";

  if (cfg.j.empty()) {
    require(!cfg.verify, "encode: --verify requires --J and --parity");
    require(cfg.parity.empty(), "encode: --parity requires --J");
    const auto x = encoding::blocks_to_x(fam);
    if (human)
      out << fam.count() << " block(s) encode to x = " << braces_of(x.values()) << "\n";
    else
      out << "encode blocks=" << fam.count() << " x=" << braces_of(x.values()) << "\n";
    return 0;
  }

  require(!cfg.parity.empty(), "encode: --J requires --parity");
  const Parity parity = parse_parity(cfg.parity);
  const IndexSet j(parse_i_list(cfg.j, "--J"));

  if (cfg.verify) {
    const auto r = encoding::verify_alt_identity(fam, j, parity);
    if (human)
      out << "alternating identity on J=" << braces_of(j.positions()) << " (" << cfg.parity
          << "): " << (r.equal ? "equal" : "NOT EQUAL") << ", both sides " << r.lhs << " / "
          << r.rhs << "\n";
    else
      out << "encode blocks=" << fam.count() << " J=" << braces_of(j.positions())
          << " parity=" << cfg.parity << " equal=" << bool_str(r.equal) << " lhs=" << r.lhs
          << " rhs=" << r.rhs << "\n";
    return 0;
  }

  const auto sel = encoding::j_alt(j, parity);
  if (human)
    out << "J=" << braces_of(j.positions()) << " (" << cfg.parity << ") selects blocks "
        << braces_of(sel) << "\n";
  else
    out << "encode blocks=" << fam.count() << " J=" << braces_of(j.positions())
        << " parity=" << cfg.parity << " jalt=" << braces_of(sel) << "\n";
  return 0;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require(cfg.n >= 1, "oracle: --n must be >= 1");
  require(cfg.k >= 1, "oracle: --k must be >= 1");
  require(cfg.cap >= 0, "oracle: --cap must be >= 0");
  require(cfg.m == 0 || cfg.m >= cfg.k, "oracle: --er-m must be >= k");
  const bool human = cfg.format == "human";

  const long long count = oracle::enumerate_canonical_colorings(
      cfg.n, cfg.k, cfg.cap, [&](const patterns::ColorTable& table) {
        std::vector<long long> rgs;
        rgs.reserve(table.size());
        for (const auto& [key, color] : table) {
          (void)key;
          rgs.push_back(color.parts.front());
        }
        if (cfg.m > 0) {
          const auto w = oracle::er_search(table, cfg.m);
          if (human) {
            out << "  " << braces_of(rgs) << ": ";
            if (w)
              out << "witness X=" << braces_of(w->x) << " I=" << braces_of(w->i) << "\n";
            else
              out << "no witness at m=" << cfg.m << "\n";
          } else {
            if (w)
              out << "er rgs=" << braces_of(rgs) << " x=" << braces_of(w->x)
                  << " i=" << braces_of(w->i) << "\n";
            else
              out << "er rgs=" << braces_of(rgs) << " witness=absent\n";
          }
        } else {
          if (human)
            out << "  " << braces_of(rgs) << "\n";
          else
            out << "table rgs=" << braces_of(rgs) << "\n";
        }
        return true;
      });

  if (human)
    out << count << " coloring(s) of the " << cfg.k << "-subsets of [1.." << cfg.n << "]\n";
  else
    out << "oracle n=" << cfg.n << " k=" << cfg.k << " count=" << count << "\n";
  return 0;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require(!cfg.coloring.empty(), "witness: --coloring is required");
  require(!cfg.ground.empty(), "witness: --ground is required");
  require(!cfg.profile.empty(), "witness: --profile is required");
  require(cfg.n >= 1, "witness: --n must be >= 1");
  const ColoringSpec spec = parse_coloring(cfg.coloring);
  const GroundSet x(parse_big_list(cfg.ground, "--ground"));
  const auto profile = patterns::TheoremProfile::from_name(cfg.profile, cfg.k);
  const auto report = oracle::witness_exclusion_report(spec, x, profile, cfg.n);

  if (cfg.format == "human") {
    out << "profile " << report.profile.str() << " (k=" << report.profile.k << ") on prefix n="
        << report.prefix_length << (report.vacuous ? " (vacuous)" : "") << "\n";
    out << "  consistent: " << braces_of(report.consistent) << "\n";
    for (const auto& e : report.excluded) out << witness_prose(e.label, e.witness) << "\n";
  } else {
    out << "witness-report profile=" << report.profile.str() << " k=" << report.profile.k
        << " n=" << report.prefix_length << " vacuous=" << bool_str(report.vacuous)
        << " consistent=" << braces_of(report.consistent) << "\n";
    for (const auto& e : report.excluded) out << witness_record("excluded", e.label, e.witness) << "\n";
  }
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    require(cfg.format == "records" || cfg.format == "human",
            "unknown output format: '" + cfg.format + "' (records|human)");
    if (cfg.command == "color") return cmd_color(cfg, out, err);
    if (cfg.command == "classify") return cmd_classify(cfg, out, err);
    if (cfg.command == "thin") return cmd_thin(cfg, out, err);
    if (cfg.command == "rado") return cmd_rado(cfg, out, err);
    if (cfg.command == "encode") return cmd_encode(cfg, out, err);
    if (cfg.command == "oracle") return cmd_oracle(cfg, out, err);
    if (cfg.command == "witness") return cmd_witness(cfg, out, err);
    throw std::invalid_argument("unknown command: '" + cfg.command + "'");
  } catch (const budget_error& e) {
    err << "budget: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace canon::cli
