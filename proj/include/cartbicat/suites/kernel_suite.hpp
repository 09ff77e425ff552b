#pragma once

#include "common.hpp"

namespace cartbicat::suites {

template <Bicategory B>
std::vector<Property> kernel_properties() {
  using K = Kit<B>;
  using S = typename K::S;
  std::vector<Property> ps;

  ps.push_back({.id = "kernel.interchange",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a"), l = g.set("l");
                  auto a1 = S::sub(g, S::arrow(g, x, a, "r"), "q");
                  auto a0 = S::sub(g, B::dom(a1), "p");
                  auto b1 = S::sub(g, S::arrow(g, a, l, "t"), "v");
                  auto b0 = S::sub(g, B::dom(b1), "w");
                  Document d;
                  d.add("a0", a0);
                  d.add("a1", a1);
                  d.add("b0", b0);
                  d.add("b1", b1);
                  return d;
                },
                .holds = [](const Document& d) {
                  auto a0 = K::cell(d, "a0"), a1 = K::cell(d, "a1");
                  auto b0 = K::cell(d, "b0"), b1 = K::cell(d, "b1");
                  need(B::cod(a0) == B::dom(a1) && B::cod(b0) == B::dom(b1), "cells not vertically composable");
                  need(B::tgt(B::cod(a1)) == B::src(B::cod(b1)), "cells not horizontally composable");
                  auto lhs = hcomp<B>(B::vcomp(b1, b0), B::vcomp(a1, a0));
                  auto rhs = B::vcomp(hcomp<B>(b1, a1), hcomp<B>(b0, a0));
                  // Whiskering in the other order gives the same horizontal composite.
                  auto other = B::vcomp(B::whisker_left(B::cod(b1), a1), B::whisker_right(b1, B::dom(a1)));
                  return lhs == rhs && other == hcomp<B>(b1, a1);
                }});

  ps.push_back({.id = "kernel.assoc-pentagon",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a"), l = g.set("l"), m = g.set("m"), n = g.set("n");
                  Document d;
                  d.add("R", S::arrow(g, x, a, "r"));
                  d.add("S", S::arrow(g, a, l, "s"));
                  d.add("T", S::arrow(g, l, m, "t"));
                  d.add("U", S::arrow(g, m, n, "u"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R"), s = K::arr(d, "S"), t = K::arr(d, "T"), u = K::arr(d, "U");
                  need(B::tgt(r) == B::src(s) && B::tgt(s) == B::src(t) && B::tgt(t) == B::src(u),
                       "arrows not composable");
                  auto ut = B::compose(u, t), ts = B::compose(t, s), sr = B::compose(s, r);
                  auto lhs = B::vcomp(B::assoc(u, t, sr), B::assoc(ut, s, r));
                  auto rhs = vcomp_all<B>({B::whisker_left(u, B::assoc(t, s, r)), B::assoc(u, ts, r),
                                           B::whisker_right(B::assoc(u, t, s), r)});
                  auto round = B::vcomp(B::assoc_inv(t, s, r), B::assoc(t, s, r));
                  return lhs == rhs && round == B::id_cell(B::compose(ts, r));
                }});

  ps.push_back({.id = "kernel.unit-strict",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a"), l = g.set("l");
                  Document d;
                  d.add("R", S::arrow(g, x, a, "r"));
                  d.add("S", S::arrow(g, a, l, "s"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R"), s = K::arr(d, "S");
                  need(B::tgt(r) == B::src(s), "arrows not composable");
                  const auto one = B::identity(B::tgt(r));
                  return B::compose(r, B::identity(B::src(r))) == r && B::compose(one, r) == r &&
                         B::assoc(s, one, r) == B::id_cell(B::compose(s, r));
                }});

  ps.push_back({.id = "kernel.mate-involution",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  auto y = K::over(g, x, "y"), b = K::over(g, a, "b");
                  auto f = S::map(g, x, y);
                  auto u = S::map(g, a, b);
                  auto s = S::arrow(g, y, b, "s");
                  auto q = B::compose(adjunction_of<B>(u).right, B::compose(s, f));
                  Document d;
                  d.add("f", f);
                  d.add("u", u);
                  d.add("S", s);
                  d.add("beta", S::sub(g, q, "q"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto f = K::map(d, "f"), u = K::map(d, "u");
                  auto s = K::arr(d, "S");
                  auto beta = K::cell(d, "beta");
                  need(B::src(s) == B::tgt(f.left) && B::tgt(s) == B::tgt(u.left), "frame mismatch");
                  const auto sf = B::compose(s, f.left);
                  need(B::cod(beta) == B::compose(u.right, sf), "beta has the wrong codomain");
                  const auto r = B::dom(beta);
                  auto alpha = to_primary<B>(beta, u, sf);
                  return B::is_valid(alpha) && to_secondary<B>(alpha, u, r) == beta &&
                         to_primary<B>(to_secondary<B>(alpha, u, r), u, sf) == alpha;
                }});

  ps.push_back({.id = "kernel.triangle",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x");
                  Document d;
                  d.add("f", S::map(g, x, K::over(g, x, "y")));
                  return d;
                },
                .holds = [](const Document& d) { return check_adjunction<B>(K::map(d, "f")).all_pass(); }});

  ps.push_back({.id = "kernel.conjugate",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x");
                  auto f = S::map(g, x, K::over(g, x, "y"));
                  Document d;
                  d.add("f", f);
                  d.add("f2", S::relabel_map(g, f));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto f = K::map(d, "f"), f2 = K::map(d, "f2");
                  auto psi = B::comparison(f.left, f2.left);
                  need(psi.has_value(), "maps have different underlying functions");
                  auto c = conjugate<B>(*psi, f, f2);
                  return B::is_valid(c) && is_invertible<B>(c) && B::dom(c) == f2.right && B::cod(c) == f.right &&
                         conjugate<B>(B::id_cell(f.left), f, f) == B::id_cell(f.right);
                }});

  ps.push_back({.id = "kernel.cell-valid",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  Document d;
                  d.add("c", S::sub(g, S::arrow(g, x, a, "r"), "q"));
                  return d;
                },
                .holds = [](const Document& d) { return B::is_valid(d.template cell<B>("c")); }});

  ps.push_back({.id = "kernel.negative-control",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = K::sized(g, 1, "x"), a = K::sized(g, 1, "a");
                  auto bad = S::corrupt(g, S::sub(g, S::arrow(g, x, a, "r"), "q"));
                  if (!bad) return std::nullopt;
                  Document d;
                  d.directives.push_back("check kernel.cell-valid");
                  d.add("c", *bad);
                  return d;
                },
                .holds = holds_of(ps, "kernel.cell-valid"),
                .floor = 2,
                .max_trials = 25,
                .negative = true,
                .fail_detail = "2-cell does not respect the boundary"});
  return ps;
}

}  // namespace cartbicat::suites
