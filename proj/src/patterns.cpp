#include "canon/patterns.hpp"

#include <algorithm>
#include <sstream>

namespace canon::patterns {

using colorings::eval_coloring;
using forms::Parity;

bool relation_holds(RelationKind rel, const std::vector<int>& a, const std::vector<int>& b) {
  switch (rel) {
    case RelationKind::Trivial:
      return true;
    case RelationKind::Identity:
      return a == b;
    case RelationKind::Max:
      return a.back() == b.back();
    case RelationKind::Min:
      return a.front() == b.front();
    case RelationKind::MinMax:
      return a.front() == b.front() && a.back() == b.back();
  }
  return false;
}

TheoremProfile TheoremProfile::taylor() { return {ProfileKind::Taylor, 0}; }

static void need(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

TheoremProfile TheoremProfile::sums_with_x(int k) {
  need(k >= 2, "profile sums-with-x: k must be >= 2");
  return {ProfileKind::SumsWithX, k};
}
TheoremProfile TheoremProfile::alt_with_x(int k) {
  need(k >= 2 && k % 2 == 0, "profile alt-with-x: k must be even and >= 2");
  return {ProfileKind::AltWithX, k};
}
TheoremProfile TheoremProfile::alt_odd_with_x(int k) {
  need(k >= 3 && k % 2 == 1, "profile altodd-with-x: k must be odd and >= 3");
  return {ProfileKind::AltOddWithX, k};
}
TheoremProfile TheoremProfile::sums_only(int k) {
  need(k >= 2, "profile sums: k must be >= 2");
  return {ProfileKind::SumsOnly, k};
}
TheoremProfile TheoremProfile::alt_only(int k) {
  need(k >= 2 && k % 2 == 0, "profile alt: k must be even and >= 2");
  return {ProfileKind::AltOnly, k};
}
TheoremProfile TheoremProfile::alt_odd_only(int k) {
  need(k >= 3 && k % 2 == 1, "profile altodd: k must be odd and >= 3");
  return {ProfileKind::AltOddOnly, k};
}

std::vector<std::string> TheoremProfile::pattern_labels() const {
  switch (kind) {
    case ProfileKind::Taylor:
      return {"i", "ii", "iii", "iv", "v"};
    case ProfileKind::SumsWithX:
    case ProfileKind::AltWithX:
    case ProfileKind::AltOnly:
      // (v) and (ii) coincide on 2-sets (min and max determine the pair).
      return k == 2 ? std::vector<std::string>{"i", "ii", "iii", "iv"}
                    : std::vector<std::string>{"i", "ii", "iii", "iv", "v"};
    case ProfileKind::AltOddWithX:
    case ProfileKind::SumsOnly:
    case ProfileKind::AltOddOnly:
      return {"i", "ii", "iii"};
  }
  return {};
}

std::string TheoremProfile::str() const {
  switch (kind) {
    case ProfileKind::Taylor:
      return "taylor";
    case ProfileKind::SumsWithX:
      return "sums-with-x";
    case ProfileKind::AltWithX:
      return "alt-with-x";
    case ProfileKind::AltOddWithX:
      return "altodd-with-x";
    case ProfileKind::SumsOnly:
      return "sums";
    case ProfileKind::AltOnly:
      return "alt";
    case ProfileKind::AltOddOnly:
      return "altodd";
  }
  return "?";
}

TheoremProfile TheoremProfile::from_name(const std::string& name, int k) {
  if (name == "taylor") return taylor();
  if (name == "sums-with-x") return sums_with_x(k);
  if (name == "alt-with-x") return alt_with_x(k);
  if (name == "altodd-with-x") return alt_odd_with_x(k);
  if (name == "sums") return sums_only(k);
  if (name == "alt") return alt_only(k);
  if (name == "altodd") return alt_odd_only(k);
  throw std::invalid_argument("unknown profile: " + name);
}

std::string ObjectRef::str() const {
  if (element) return "x" + std::to_string(id.front());
  std::string out = "{";
  for (size_t i = 0; i < id.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(id[i]);
  }
  return out + "}";
}

std::vector<std::string> PatternVerdict::consistent_labels() const {
  std::vector<std::string> out;
  for (const auto& p : patterns)
    if (p.consistent) out.push_back(p.label);
  return out;
}

std::vector<std::string> PatternVerdict::excluded_labels() const {
  std::vector<std::string> out;
  for (const auto& p : patterns)
    if (!p.consistent) out.push_back(p.label);
  return out;
}

namespace {

struct Obj {
  ObjectRef ref;
  Int value;
  Color color;
};

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  // All k-subsets of [1..n] in lexicographic order.
  std::vector<std::vector<int>> out;
  if (k > n || k < 1) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<std::vector<int>> all_nonempty_subsets_lex(int n) {
  std::vector<std::vector<int>> out;
  out.reserve((1u << n) - 1);
  for (unsigned long m = 1; m < (1ul << n); ++m) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (m & (1ul << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> rel_key(RelationKind rel, const std::vector<int>& id) {
  switch (rel) {
    case RelationKind::Trivial:
      return {};
    case RelationKind::Identity:
      return id;
    case RelationKind::Max:
      return {id.back()};
    case RelationKind::Min:
      return {id.front()};
    case RelationKind::MinMax:
      return {id.front(), id.back()};
  }
  return {};
}

Witness make_witness(const Obj& a, const Obj& b, bool expect_equal, const char* reason) {
  return Witness{a.ref, b.ref, a.color, b.color, expect_equal, reason};
}

// All colors equal; first offending pair otherwise.
std::optional<Witness> check_mono(const std::vector<const Obj*>& objs, const char* reason) {
  for (size_t i = 1; i < objs.size(); ++i)
    if (objs[i]->color != objs[0]->color) return make_witness(*objs[0], *objs[i], true, reason);
  return std::nullopt;
}

// Distinct values get distinct colors; equal-value pairs are exempt.
std::optional<Witness> check_rainbow(const std::vector<const Obj*>& objs, const char* reason) {
  std::map<Color, std::vector<const Obj*>> by_color;
  for (const Obj* o : objs) by_color[o->color].push_back(o);
  for (const auto& [c, grp] : by_color) {
    (void)c;
    for (size_t i = 1; i < grp.size(); ++i)
      if (grp[i]->value != grp[0]->value) return make_witness(*grp[0], *grp[i], false, reason);
  }
  return std::nullopt;
}

// Color equivalence must match the relation exactly on pairs with distinct
// values; returns the first offending pair found in a deterministic scan.
std::optional<Witness> check_biconditional(RelationKind rel, const std::vector<const Obj*>& objs,
                                           const char* reason) {
  // Related objects must share a color.
  {
    std::map<std::vector<int>, std::vector<const Obj*>> by_key;
    for (const Obj* o : objs) by_key[rel_key(rel, o->ref.id)].push_back(o);
    for (const auto& [k, grp] : by_key) {
      (void)k;
      for (size_t i = 1; i < grp.size(); ++i)
        if (grp[i]->color != grp[0]->color) return make_witness(*grp[0], *grp[i], true, reason);
    }
  }
  // Shared colors must come from related objects (or equal values).
  {
    std::map<Color, std::vector<const Obj*>> by_color;
    for (const Obj* o : objs) by_color[o->color].push_back(o);
    for (const auto& [c, grp] : by_color) {
      (void)c;
      const Obj* a = grp[0];
      const Obj* b = nullptr;  // first with a different relation key
      for (size_t i = 1; i < grp.size(); ++i)
        if (rel_key(rel, grp[i]->ref.id) != rel_key(rel, a->ref.id)) {
          b = grp[i];
          break;
        }
      if (!b) continue;
      if (b->value != a->value) return make_witness(*a, *b, false, reason);
      for (size_t i = 1; i < grp.size(); ++i) {
        const Obj* cnd = grp[i];
        if (cnd->value == a->value) continue;
        // cnd differs in value from both a and b; it differs in key from one.
        if (rel_key(rel, cnd->ref.id) != rel_key(rel, a->ref.id))
          return make_witness(*a, *cnd, false, reason);
        return make_witness(*b, *cnd, false, reason);
      }
    }
  }
  return std::nullopt;
}

// Every form's color equals the color of the element at its max (or min).
std::optional<Witness> check_match_extreme(const std::vector<const Obj*>& form_objs,
                                           const std::vector<Obj>& elements, bool use_max,
                                           const char* reason) {
  for (const Obj* f : form_objs) {
    int pos = use_max ? f->ref.id.back() : f->ref.id.front();
    const Obj& e = elements[static_cast<size_t>(pos - 1)];
    if (f->color != e.color) return make_witness(*f, e, true, reason);
  }
  return std::nullopt;
}

// No color may appear on both an element and a form of different value.
std::optional<Witness> check_disjoint(const std::vector<Obj>& elements,
                                      const std::vector<const Obj*>& form_objs, const char* reason) {
  std::map<Color, std::vector<const Obj*>> elems_by_color;
  for (const Obj& e : elements) elems_by_color[e.color].push_back(&e);
  for (const Obj* f : form_objs) {
    auto it = elems_by_color.find(f->color);
    if (it == elems_by_color.end()) continue;
    for (const Obj* e : it->second)
      if (e->value != f->value) return make_witness(*e, *f, false, reason);
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<IndexSet>> induced_classes(const ColoringSpec& spec, const GroundSet& x,
                                                   const LinearForm& form, int n) {
  if (n < 1 || n > x.size()) throw std::invalid_argument("induced_classes: n out of range");
  const int k = form.arity();
  std::vector<std::vector<IndexSet>> classes;
  std::map<Color, size_t> slot;
  for (const auto& js : subsets_lex(n, k)) {
    IndexSet j(js);
    Color c = eval_coloring(spec, forms::eval_form(form, x, j));
    auto it = slot.find(c);
    if (it == slot.end()) {
      slot.emplace(c, classes.size());
      classes.push_back({});
      classes.back().push_back(std::move(j));
    } else {
      classes[it->second].push_back(std::move(j));
    }
  }
  // Enumeration is lexicographic, so classes are already ordered by their
  // smallest member.
  return classes;
}

PatternVerdict classify_canonical(const ColoringSpec& spec, const GroundSet& x, const TheoremProfile& profile,
                                  int n) {
  if (n < 1 || n > x.size()) throw std::invalid_argument("classify_canonical: n out of range");

  const bool with_elements = profile.kind == ProfileKind::SumsWithX || profile.kind == ProfileKind::AltWithX ||
                             profile.kind == ProfileKind::AltOddWithX;
  const bool is_taylor = profile.kind == ProfileKind::Taylor;
  const int k = profile.k;

  PatternVerdict verdict{profile, n, false, {}, {}};

  // Degenerate prefix: no form objects to speak about.
  if (!is_taylor && n < k) {
    verdict.vacuous = true;
    for (const auto& lab : profile.pattern_labels()) verdict.patterns.push_back({lab, true, std::nullopt});
    return verdict;
  }
  if (is_taylor && n > 16) throw budget_error("taylor profile: n is limited to 16");
  if (!is_taylor) {
    // C(n,k) objects; keep the group checks comfortably bounded. C(n,k) is
    // increasing in k up to n/2, so the running product can cut off early.
    const int kk = std::min(k, n - k);
    unsigned long long cnt = 1;
    for (int i = 0; i < kk && cnt <= 200000ull; ++i)
      cnt = cnt * static_cast<unsigned long long>(n - i) / static_cast<unsigned long long>(i + 1);
    if (cnt > 200000ull) throw budget_error("classify_canonical: too many index sets (C(n,k) > 200000)");
  }

  // Build the observed objects.
  std::vector<Obj> elements;
  std::vector<Obj> form_objs;
  if (with_elements)
    for (int i = 1; i <= n; ++i)
      elements.push_back({ObjectRef{true, {i}}, x.at1(i), eval_coloring(spec, x.at1(i))});

  {
    std::vector<std::vector<int>> ids;
    LinearForm lf = forms::all_ones(1);  // replaced below
    if (is_taylor) {
      ids = all_nonempty_subsets_lex(n);
    } else {
      ids = subsets_lex(n, k);
      switch (profile.kind) {
        case ProfileKind::SumsWithX:
        case ProfileKind::SumsOnly:
          lf = forms::all_ones(k);
          break;
        case ProfileKind::AltWithX:
        case ProfileKind::AltOnly:
          lf = forms::alt_sign_vector(k, Parity::Even);
          break;
        case ProfileKind::AltOddWithX:
        case ProfileKind::AltOddOnly:
          lf = forms::alt_sign_vector(k, Parity::Odd);
          break;
        default:
          break;
      }
    }
    for (auto& id : ids) {
      Int v;
      if (is_taylor) {
        v = 0;
        for (int i : id) v += x.at1(i);
      } else {
        v = forms::eval_form(lf, x, IndexSet(id));
      }
      Color c = eval_coloring(spec, v);
      form_objs.push_back({ObjectRef{false, std::move(id)}, std::move(v), std::move(c)});
    }
  }

  std::vector<const Obj*> forms_view;
  forms_view.reserve(form_objs.size());
  for (const Obj& o : form_objs) forms_view.push_back(&o);
  std::vector<const Obj*> union_view;
  union_view.reserve(elements.size() + form_objs.size());
  for (const Obj& o : elements) union_view.push_back(&o);
  for (const Obj& o : form_objs) union_view.push_back(&o);

  std::vector<const Obj*> elems_view;
  for (const Obj& o : elements) elems_view.push_back(&o);

  auto x_rainbow = [&]() { return check_rainbow(elems_view, "elements_not_rainbow"); };
  auto x_mono = [&]() { return check_mono(elems_view, "elements_not_monochromatic"); };

  const RelationKind rel_by_label[5] = {RelationKind::Trivial, RelationKind::Identity, RelationKind::Max,
                                        RelationKind::Min, RelationKind::MinMax};

  auto eval_pattern = [&](const std::string& label) -> std::optional<Witness> {
    const int li = label == "i" ? 0 : label == "ii" ? 1 : label == "iii" ? 2 : label == "iv" ? 3 : 4;
    if (is_taylor || !with_elements)
      return check_biconditional(rel_by_label[li], forms_view, "relation_biconditional_violated");
    // Profiles with elements alongside forms.
    switch (li) {
      case 0:
        return check_mono(union_view, "union_not_monochromatic");
      case 1:
        return check_rainbow(union_view, "union_not_rainbow");
      case 2: {
        if (auto w = x_rainbow()) return w;
        return check_match_extreme(forms_view, elements, true, "form_color_differs_from_max_element");
      }
      case 3: {
        if (profile.kind == ProfileKind::AltWithX) {
          if (auto w = x_mono()) return w;
          if (auto w = check_disjoint(elements, forms_view, "element_form_color_overlap")) return w;
          return check_biconditional(RelationKind::Min, forms_view, "min_biconditional_violated");
        }
        if (auto w = x_rainbow()) return w;
        return check_match_extreme(forms_view, elements, false, "form_color_differs_from_min_element");
      }
      case 4: {
        if (auto w = x_rainbow()) return w;
        if (auto w = check_disjoint(elements, forms_view, "element_form_color_overlap")) return w;
        return check_biconditional(RelationKind::MinMax, forms_view, "minmax_biconditional_violated");
      }
    }
    return std::nullopt;
  };

  for (const auto& label : profile.pattern_labels()) {
    auto w = eval_pattern(label);
    verdict.patterns.push_back({label, !w.has_value(), std::move(w)});
  }

  // Observed classes: partition of all objects by color, in canonical order.
  {
    std::map<Color, size_t> slot;
    for (const Obj* o : union_view) {
      auto it = slot.find(o->color);
      if (it == slot.end()) {
        slot.emplace(o->color, verdict.observed_classes.size());
        verdict.observed_classes.push_back({o->ref});
      } else {
        verdict.observed_classes[it->second].push_back(o->ref);
      }
    }
  }
  return verdict;
}

Int object_value(const ObjectRef& ref, const GroundSet& x, const TheoremProfile& profile) {
  if (ref.element) {
    if (ref.id.size() != 1) throw std::invalid_argument("object_value: element refs carry exactly one index");
    return x.at1(ref.id.front());
  }
  if (ref.id.empty()) throw std::invalid_argument("object_value: form refs need a nonempty index set");
  if (profile.kind == ProfileKind::Taylor) {
    Int v = 0;
    for (int i : ref.id) v += x.at1(i);
    return v;
  }
  const int k = static_cast<int>(ref.id.size());
  if (k != profile.k) throw std::invalid_argument("object_value: index set size must match the profile");
  LinearForm lf = forms::all_ones(k);
  switch (profile.kind) {
    case ProfileKind::SumsWithX:
    case ProfileKind::SumsOnly:
      break;
    case ProfileKind::AltWithX:
    case ProfileKind::AltOnly:
      lf = forms::alt_sign_vector(k, Parity::Even);
      break;
    case ProfileKind::AltOddWithX:
    case ProfileKind::AltOddOnly:
      lf = forms::alt_sign_vector(k, Parity::Odd);
      break;
    default:
      break;
  }
  return forms::eval_form(lf, x, IndexSet(ref.id));
}

std::vector<std::vector<int>> er_canonical_check(const ColorTable& table, int k) {
  if (k < 1) throw std::invalid_argument("er_canonical_check: k must be >= 1");
  if (table.empty()) throw std::invalid_argument("er_canonical_check: table must be nonempty");
  int n = 0;
  for (const auto& [key, c] : table) {
    (void)c;
    if (static_cast<int>(key.size()) != k) throw std::invalid_argument("er_canonical_check: key arity mismatch");
    if (key.front() < 1) throw std::invalid_argument("er_canonical_check: indices must be positive");
    for (size_t i = 1; i < key.size(); ++i)
      if (key[i - 1] >= key[i]) throw std::invalid_argument("er_canonical_check: keys must be increasing");
    n = std::max(n, key.back());
  }
  // Totality on C([1..n], k).
  const auto combos = subsets_lex(n, k);
  if (combos.size() != table.size()) throw std::invalid_argument("er_canonical_check: table must be total");
  for (const auto& cmb : combos)
    if (!table.count(cmb)) throw std::invalid_argument("er_canonical_check: table must be total");

  std::vector<std::vector<int>> matches;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::map<Color, std::vector<int>> c2s;
    std::map<std::vector<int>, Color> s2c;
    bool ok = true;
    for (const auto& cmb : combos) {
      std::vector<int> sel;
      for (int i = 0; i < k; ++i)
        if (mask & (1ul << i)) sel.push_back(cmb[static_cast<size_t>(i)]);
      const Color& col = table.at(cmb);
      auto itc = c2s.find(col);
      if (itc == c2s.end())
        c2s.emplace(col, sel);
      else if (itc->second != sel) {
        ok = false;
        break;
      }
      auto its = s2c.find(sel);
      if (its == s2c.end())
        s2c.emplace(sel, col);
      else if (its->second != col) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<int> is;
      for (int i = 0; i < k; ++i)
        if (mask & (1ul << i)) is.push_back(i + 1);
      matches.push_back(std::move(is));
    }
  }
  return matches;
}

}  // namespace canon::patterns
