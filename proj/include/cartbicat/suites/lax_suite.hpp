#pragma once

#include <tuple>

#include "../cartesian.hpp"
#include "common.hpp"

namespace cartbicat::suites {

// R : X -> A, S : Y -> B, T : A -> L, U : B -> M, V : L -> N, W : M -> P.
template <Bicategory B>
Document six_arrows(Gen& g, std::size_t lo = 0) {
  using S = Sampler<B>;
  using K = Kit<B>;
  auto x = K::sized(g, lo, "x"), y = K::sized(g, lo, "y"), a = K::sized(g, lo, "a"), b = K::sized(g, lo, "b");
  auto l = K::sized(g, lo, "l"), m = K::sized(g, lo, "m"), n = K::sized(g, lo, "n"), p = K::sized(g, lo, "p");
  Document d;
  d.add("R", S::arrow(g, x, a, "r"));
  d.add("S", S::arrow(g, y, b, "s"));
  d.add("T", S::arrow(g, a, l, "t"));
  d.add("U", S::arrow(g, b, m, "u"));
  d.add("V", S::arrow(g, l, n, "v"));
  d.add("W", S::arrow(g, m, p, "w"));
  return d;
}

template <Bicategory B>
std::vector<typename B::Arr> read_six(const Document& d) {
  std::vector<typename B::Arr> v;
  for (const char* n : {"R", "S", "T", "U", "V", "W"}) v.push_back(d.template arrow<B>(n));
  for (std::size_t i = 0; i + 2 < v.size(); ++i) need(B::tgt(v[i]) == B::src(v[i + 2]), "arrows not composable");
  return v;
}

template <Bicategory B>
std::vector<Property> lax_properties() {
  using K = Kit<B>;
  using S = typename K::S;
  std::vector<Property> ps;

  ps.push_back({.id = "lax.tensor-functorial",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a"), y = g.set("y"), b = g.set("b");
                  auto a1 = S::sub(g, S::arrow(g, x, a, "r"), "q");
                  auto b1 = S::sub(g, S::arrow(g, y, b, "s"), "v");
                  Document d;
                  d.add("a1", a1);
                  d.add("a0", S::sub(g, B::dom(a1), "p"));
                  d.add("b1", b1);
                  d.add("b0", S::sub(g, B::dom(b1), "w"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto a0 = K::cell(d, "a0"), a1 = K::cell(d, "a1");
                  auto b0 = K::cell(d, "b0"), b1 = K::cell(d, "b1");
                  need(B::cod(a0) == B::dom(a1) && B::cod(b0) == B::dom(b1), "cells not composable");
                  auto lhs = tensor_2cells<B>(B::vcomp(a1, a0), B::vcomp(b1, b0));
                  auto rhs = B::vcomp(tensor_2cells<B>(a1, b1), tensor_2cells<B>(a0, b0));
                  auto ident = tensor_2cells<B>(B::id_cell(B::cod(a1)), B::id_cell(B::cod(b1)));
                  return lhs == rhs && ident == B::id_cell(B::cod(ident)) && B::dom(ident) == B::cod(ident);
                }});

  ps.push_back({.id = "lax.assoc-axiom",
                .generate = [](Gen& g) -> std::optional<Document> { return six_arrows<B>(g); },
                .holds = [](const Document& d) {
                  auto v = read_six<B>(d);
                  auto sides = lax_assoc_sides<B>(v[0], v[1], v[2], v[3], v[4], v[5]);
                  return sides.lhs == sides.rhs;
                },
                .cap = 3});

  // The same axiom with the inner (x)~_{R,S;T,U} read from the input.
  ps.push_back({.id = "lax.assoc-axiom-supplied",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto d = six_arrows<B>(g);
                  auto v = read_six<B>(d);
                  d.add("comp", tensor_comp_cell<B>(v[0], v[1], v[2], v[3]));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto v = read_six<B>(d);
                  auto comp = d.template cell<B>("comp");
                  const auto& [r, s, t, u, vv, w] = std::tie(v[0], v[1], v[2], v[3], v[4], v[5]);
                  need(B::cod(comp) == g_tensor<B>(B::compose(t, r), B::compose(u, s)).product.cell,
                       "supplied cell has the wrong codomain");
                  const auto rs = g_tensor<B>(r, s).product.cell;
                  const auto tu = g_tensor<B>(t, u).product.cell;
                  const auto vw = g_tensor<B>(vv, w).product.cell;
                  // Relation cells are determined by their boundary, so there a wrong domain is the corruption.
                  if constexpr (std::is_same_v<B, SpanBicat>)
                    need(B::dom(comp) == B::compose(tu, rs), "supplied cell has the wrong domain");
                  if (!B::is_valid(comp) || !(B::dom(comp) == B::compose(tu, rs))) return false;
                  auto lhs = vcomp_all<B>({tensor_comp_cell<B>(B::compose(t, r), B::compose(u, s), vv, w),
                                           B::whisker_left(vw, comp), B::assoc(vw, tu, rs)});
                  return lhs == lax_assoc_sides<B>(r, s, t, u, vv, w).rhs;
                },
                .cap = 3});

  ps.push_back({.id = "lax.unit-axioms",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a"), y = g.set("y"), b = g.set("b");
                  Document d;
                  d.add("R", S::arrow(g, x, a, "r"));
                  d.add("S", S::arrow(g, y, b, "s"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R"), s = K::arr(d, "S");
                  auto [left, right] = lax_unit_sides<B>(r, s);
                  const auto id = B::id_cell(g_tensor<B>(r, s).product.cell);
                  return left == id && right == id;
                }});

  ps.push_back({.id = "lax.naturality",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a"), y = g.set("y"), b = g.set("b");
                  auto l = g.set("l"), m = g.set("m");
                  Document d;
                  d.add("alpha", S::sub(g, S::arrow(g, x, a, "r"), "p"));
                  d.add("beta", S::sub(g, S::arrow(g, y, b, "s"), "q"));
                  d.add("gamma", S::sub(g, S::arrow(g, a, l, "t"), "v"));
                  d.add("delta", S::sub(g, S::arrow(g, b, m, "u"), "w"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto al = K::cell(d, "alpha"), be = K::cell(d, "beta");
                  auto ga = K::cell(d, "gamma"), de = K::cell(d, "delta");
                  need(B::tgt(B::cod(al)) == B::src(B::cod(ga)) && B::tgt(B::cod(be)) == B::src(B::cod(de)),
                       "cells not composable");
                  auto sides = lax_naturality_sides<B>(al, be, ga, de);
                  return sides.lhs == sides.rhs;
                },
                .cap = 3});

  ps.push_back({.id = "lax.m-unit",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y"}, max); },
                .holds = [](const Document& d) { return check_m_unit<B>(d.set("X"), d.set("Y")); },
                .cap = 4});

  ps.push_back({.id = "lax.m-binary",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), y = g.set("y");
                  auto a = K::over(g, x, "a"), b = K::over(g, y, "b");
                  Document d;
                  d.add("f", S::map(g, x, a));
                  d.add("g", S::map(g, y, b));
                  d.add("h", S::map(g, a, K::over(g, a, "l")));
                  d.add("k", S::map(g, b, K::over(g, b, "m")));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto f = K::map(d, "f"), g = K::map(d, "g"), h = K::map(d, "h"), k = K::map(d, "k");
                  need(B::tgt(f.left) == B::src(h.left) && B::tgt(g.left) == B::src(k.left), "maps not composable");
                  return check_m_binary<B>(f, g, h, k);
                }});

  ps.push_back({.id = "lax.m-natural",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), y = g.set("y");
                  auto f = S::map(g, x, K::over(g, x, "a"));
                  auto gg = S::map(g, y, K::over(g, y, "b"));
                  Document d;
                  d.add("f", f);
                  d.add("f2", S::relabel_map(g, f));
                  d.add("g", gg);
                  d.add("g2", S::relabel_map(g, gg));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto th = B::comparison(K::map(d, "f").left, K::map(d, "f2").left);
                  auto ka = B::comparison(K::map(d, "g").left, K::map(d, "g2").left);
                  need(th && ka, "no cell between the maps");
                  return check_m_natural<B>(*th, *ka);
                }});

  ps.push_back({.id = "lax.u-equations",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  Document d;
                  d.add("R", S::arrow(g, x, a, "r"));
                  return d;
                },
                .holds = [](const Document& d) { return check_u_equations<B>(K::arr(d, "R")); },
                .cap = 3});

  // I o and I~ make top a monad on I.
  ps.push_back({.id = "lax.unit-monad",
                .enumerate = [](std::size_t) { return std::vector<Document>{Document{}}; },
                .holds = [](const Document&) {
                  auto u = unit_functor_cells<B>();
                  const auto top = B::top(unit_set(), unit_set());
                  const auto idt = B::id_cell(top);
                  return B::vcomp(u.mult, B::whisker_left(top, u.unit)) == idt &&
                         B::vcomp(u.mult, B::whisker_right(u.unit, top)) == idt &&
                         B::vcomp(u.mult, B::whisker_right(u.mult, top)) ==
                             vcomp_all<B>({u.mult, B::whisker_left(top, u.mult), B::assoc(top, top, top)});
                }});

  // The supplied (x)~ precomposed with a non-identity automorphism (spans),
  // or replaced by a non-inclusion (relations).
  ps.push_back({.id = "lax.negative-control",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto d = six_arrows<B>(g, 1);
                  auto v = read_six<B>(d);
                  auto comp = tensor_comp_cell<B>(v[0], v[1], v[2], v[3]);
                  std::optional<typename B::Cell> bad;
                  if constexpr (std::is_same_v<B, SpanBicat>) {
                    // Only swaps still visible after whiskering by V (x) W change the axiom.
                    const auto vw = g_tensor<B>(v[4], v[5]).product.cell;
                    std::vector<typename B::Cell> seen;
                    for (const auto& aut : K::swaps(B::dom(comp)))
                      if (!(B::whisker_left(vw, aut) == B::id_cell(B::compose(vw, B::dom(comp))))) seen.push_back(aut);
                    if (!seen.empty()) bad = B::vcomp(comp, seen[g.below(seen.size())]);
                  } else {
                    bad = S::corrupt(g, comp);
                  }
                  if (!bad) return std::nullopt;
                  d.directives.push_back("check lax.assoc-axiom-supplied");
                  d.add("comp", *bad);
                  return d;
                },
                .holds = holds_of(ps, "lax.assoc-axiom-supplied"),
                .floor = 2,
                .cap = 2,
                .max_trials = 25,
                .negative = true,
                .fail_detail = "associativity axiom fails for the supplied cell"});
  return ps;
}

}  // namespace cartbicat::suites
