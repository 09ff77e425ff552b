#pragma once

#include "../monoidal.hpp"
#include "common.hpp"

namespace cartbicat::suites {

template <Bicategory B>
bool labels_match(const Adjunction<B>& f, const std::function<std::string(const std::string&)>& expected) {
  const auto fn = underlying_function<B>(f.left);
  for (std::size_t i = 0; i < fn.dom().size(); ++i)
    if (fn.cod()[fn(i)] != expected(fn.dom()[i])) return false;
  return true;
}

// "(a,b)" -> {a, b}, splitting at the top-level comma.
inline std::pair<std::string, std::string> split_pair(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) return {s.substr(1, i - 1), s.substr(i + 1, s.size() - i - 2)};
  }
  fail(ErrorKind::invalid_config, "not a pair label: " + s);
}

inline std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

template <Bicategory B>
typename B::Arr braid_square(const FinSet& x, const FinSet& y) {
  return B::compose(braid<B>(y, x).s.left, braid<B>(x, y).s.left);
}

template <Bicategory B>
std::vector<Property> monoidal_properties() {
  using K = Kit<B>;
  using S = typename K::S;
  std::vector<Property> ps;

  ps.push_back({.id = "monoidal.assoc-action",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y", "Z"}, max); },
                .holds = [](const Document& d) {
                  auto a = assoc_data<B>(d.set("X"), d.set("Y"), d.set("Z"));
                  bool ok = labels_match<B>(a.a, [](const std::string& l) {
                    auto [xy, z] = split_pair(l);
                    auto [x, y] = split_pair(xy);
                    return pair_label(x, pair_label(y, z));
                  });
                  for (const auto& m : a.mu) ok = ok && is_invertible<B>(m);
                  return ok && B::find_equivalence(a.a.left).has_value();
                },
                .cap = 3});

  ps.push_back({.id = "monoidal.unitors",
                .enumerate = [](std::size_t max) { return set_tuples({"X"}, max); },
                .holds = [](const Document& d) {
                  auto u = unitors<B>(d.set("X"));
                  return labels_match<B>(u.l, [](const std::string& l) { return split_pair(l).second; }) &&
                         labels_match<B>(u.r, [](const std::string& l) { return pair_label(l, "*"); }) &&
                         B::find_equivalence(u.l.left).has_value() && B::find_equivalence(u.r.left).has_value();
                },
                .cap = 4});

  ps.push_back({.id = "monoidal.braid-action",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y"}, max); },
                .holds = [](const Document& d) {
                  auto b = braid<B>(d.set("X"), d.set("Y"));
                  return labels_match<B>(b.s, [](const std::string& l) {
                           auto [x, y] = split_pair(l);
                           return pair_label(y, x);
                         }) &&
                         is_invertible<B>(b.mu) && is_invertible<B>(b.nu);
                },
                .cap = 4});

  ps.push_back({.id = "monoidal.syllepsis-equations",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y"}, max); },
                .holds = [](const Document& d) {
                  const auto& x = d.set("X");
                  const auto& y = d.set("Y");
                  auto c = product_object<B>(x, y);
                  auto sy = syllepsis<B>(x, y);
                  return B::whisker_left(c.legs[0].left, sy.sigma) == sy.phi &&
                         B::whisker_left(c.legs[1].left, sy.sigma) == sy.psi && is_invertible<B>(sy.sigma);
                },
                .cap = 3});

  // Brute force: sigma is the only cell 1 -> s s solving both equations.
  ps.push_back({.id = "monoidal.syllepsis-unique",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y"}, max); },
                .holds = [](const Document& d) {
                  const auto& x = d.set("X");
                  const auto& y = d.set("Y");
                  auto c = product_object<B>(x, y);
                  auto sy = syllepsis<B>(x, y);
                  std::size_t n = 0;
                  for (const auto& cand : B::all_cells(B::identity(c.vertex), braid_square<B>(x, y), 100000))
                    if (B::whisker_left(c.legs[0].left, cand) == sy.phi && B::whisker_left(c.legs[1].left, cand) == sy.psi)
                      n += cand == sy.sigma ? 1 : 2;
                  return n == 1;
                },
                .cap = 2});

  ps.push_back({.id = "monoidal.symmetry",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y"}, max); },
                .holds = [](const Document& d) {
                  auto sides = symmetry_sides<B>(d.set("X"), d.set("Y"));
                  return sides.lhs == sides.rhs;
                },
                .cap = 4});

  // The same equation seen through the projections of Y x X.
  ps.push_back({.id = "monoidal.symmetry-projected",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y"}, max); },
                .holds = [](const Document& d) {
                  const auto& x = d.set("X");
                  const auto& y = d.set("Y");
                  auto sides = symmetry_sides<B>(x, y);
                  auto c = product_object<B>(y, x);
                  for (const auto& leg : c.legs)
                    if (!(B::whisker_left(leg.left, sides.lhs) == B::whisker_left(leg.left, sides.rhs))) return false;
                  return true;
                },
                .cap = 4});

  // sigma_{Y,X} read from the input.
  ps.push_back({.id = "monoidal.symmetry-supplied",
                .enumerate = [](std::size_t max) {
                  auto out = set_tuples({"X", "Y"}, max);
                  for (auto& d : out) d.add("sigma", syllepsis<B>(d.set("Y"), d.set("X")).sigma);
                  return out;
                },
                .holds = [](const Document& d) {
                  const auto& x = d.set("X");
                  const auto& y = d.set("Y");
                  auto sig = d.template cell<B>("sigma");
                  const auto one = B::identity(product(y, x));
                  need(B::cod(sig) == braid_square<B>(y, x), "sigma has the wrong codomain");
                  // Relation cells are determined by their boundary, so there a wrong domain is the corruption.
                  if constexpr (std::is_same_v<B, SpanBicat>) need(B::dom(sig) == one, "sigma has the wrong domain");
                  if (!B::is_valid(sig) || !(B::dom(sig) == one)) return false;
                  auto sides = symmetry_sides<B>(x, y, sig);
                  return sides.lhs == sides.rhs;
                },
                .cap = 3,
                .fail_detail = "symmetry fails for the supplied syllepsis"});

  ps.push_back({.id = "monoidal.pi-equations",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y", "Z", "W"}, max); },
                .holds = [](const Document& d) {
                  auto p = pi<B>(d.set("X"), d.set("Y"), d.set("Z"), d.set("W"));
                  auto cmp = B::comparison(p.m, p.n);
                  return pi_equations_hold(p, p.pi) && cmp && *cmp == p.pi && is_invertible<B>(p.pi);
                },
                .cap = 3});

  ps.push_back({.id = "monoidal.pi-unique",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y", "Z", "W"}, max); },
                .holds = [](const Document& d) {
                  auto p = pi<B>(d.set("X"), d.set("Y"), d.set("Z"), d.set("W"));
                  std::size_t n = 0;
                  for (const auto& cand : B::all_cells(p.m, p.n, 100000))
                    if (pi_equations_hold(p, cand)) n += cand == p.pi ? 1 : 2;
                  return n == 1;
                },
                .cap = 2});

  ps.push_back({.id = "monoidal.pentagon",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y", "Z", "U", "V"}, max); },
                .holds = [](const Document& d) {
                  auto sides = pentagon_sides<B>(d.set("X"), d.set("Y"), d.set("Z"), d.set("U"), d.set("V"));
                  return sides.lhs == sides.rhs;
                },
                .cap = 2});

  auto g_objects = [](Gen& g, std::size_t k) {
    static const char* names[] = {"R", "S", "T", "U"};
    Document d;
    for (std::size_t i = 0; i < k; ++i) {
      std::string p(1, static_cast<char>(std::tolower(names[i][0])));
      auto x = g.set(p + "x"), a = g.set(p + "a");
      d.add(names[i], S::arrow(g, x, a, p));
    }
    return d;
  };

  ps.push_back({.id = "monoidal.psnatcon-invertible",
                .generate = [g_objects](Gen& g) -> std::optional<Document> { return g_objects(g, 3); },
                .holds = [](const Document& d) {
                  const GObj<B> r{K::arr(d, "R")}, s{K::arr(d, "S")}, t{K::arr(d, "T")};
                  return g_is_equivalence(a_tilde(r, s, t)).has_value() && g_is_equivalence(l_tilde(r)).has_value() &&
                         g_is_equivalence(r_tilde(r)).has_value() && g_is_equivalence(s_tilde(r, s)).has_value();
                },
                .cap = 2});

  // Squares a : R' -> R, b : S' -> S, c : T' -> T.
  ps.push_back({.id = "monoidal.psnatcon-natural",
                .generate = [g_objects](Gen& g) -> std::optional<Document> {
                  auto d = g_objects(g, 3);
                  K::square_into(g, d, "a", K::arr(d, "R"));
                  K::square_into(g, d, "b", K::arr(d, "S"));
                  K::square_into(g, d, "c", K::arr(d, "T"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto a = K::square(d, "a"), b = K::square(d, "b"), c = K::square(d, "c");
                  return s_tilde_natural(a, b) && a_tilde_natural(a, b, c);
                },
                .cap = 2});

  ps.push_back({.id = "monoidal.pi-modification",
                .generate = [g_objects](Gen& g) -> std::optional<Document> { return g_objects(g, 4); },
                .holds = [](const Document& d) {
                  const GObj<B> r{K::arr(d, "R")}, s{K::arr(d, "S")}, t{K::arr(d, "T")}, u{K::arr(d, "U")};
                  auto m = pi_modification(r, s, t, u);
                  return g_cell_condition(m) && is_invertible<B>(m.phi) && is_invertible<B>(m.psi);
                },
                .cap = 2});

  for (const char* id : {"monoidal.unit-coherence-1", "monoidal.unit-coherence-2"})
    ps.push_back({.id = id, .skip_reason = "depends on the unit modifications, which are not constructed"});

  // sigma_{Y,X} made non-leg-commuting (spans) or shrunk below 1 (relations).
  ps.push_back({.id = "monoidal.negative-control",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = K::sized(g, 1, "x"), y = K::sized(g, 1, "y");
                  if (x.size() * y.size() < 2) return std::nullopt;
                  auto sig = syllepsis<B>(y, x).sigma;
                  std::optional<typename B::Cell> bad;
                  if constexpr (std::is_same_v<B, SpanBicat>) {
                    bad = S::corrupt(g, sig);
                  } else {
                    if (auto sub = S::proper_sub(g, B::dom(sig))) bad = B::vcomp(sig, *sub);
                  }
                  if (!bad) return std::nullopt;
                  Document d;
                  d.directives.push_back("check monoidal.symmetry-supplied");
                  d.add_set("X", x);
                  d.add_set("Y", y);
                  d.add("sigma", *bad);
                  return d;
                },
                .holds = holds_of(ps, "monoidal.symmetry-supplied"),
                .floor = 2,
                .cap = 2,
                .max_trials = 25,
                .negative = true,
                .fail_detail = "symmetry fails for the supplied syllepsis"});
  return ps;
}

}  // namespace cartbicat::suites
