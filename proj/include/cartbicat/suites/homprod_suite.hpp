#pragma once

#include "../hom_products.hpp"
#include "common.hpp"

namespace cartbicat::suites {

template <Bicategory B>
std::vector<Property> homprod_properties() {
  using K = Kit<B>;
  using S = typename K::S;
  std::vector<Property> ps;

  // Cone legs from a random cell into R ^ S.
  ps.push_back({.id = "homprod.local-product-universal",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  auto r = S::arrow(g, x, a, "r"), s = S::arrow(g, x, a, "s");
                  auto c = S::sub(g, B::meet(r, s), "t");
                  Document d;
                  d.add("R", r);
                  d.add("S", s);
                  d.add("phi", B::vcomp(B::meet_p(r, s), c));
                  d.add("psi", B::vcomp(B::meet_r(r, s), c));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto phi = K::cell(d, "phi"), psi = K::cell(d, "psi");
                  need(B::dom(phi) == B::dom(psi), "cone legs have different domains");
                  need(B::cod(phi) == K::arr(d, "R") && B::cod(psi) == K::arr(d, "S"), "cone legs mismatch");
                  return check_local_product_universal<B>(phi, psi);
                },
                .cap = 3});

  ps.push_back({.id = "homprod.local-terminal-universal",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  Document d;
                  d.add("R", S::arrow(g, x, a, "r"));
                  return d;
                },
                .holds = [](const Document& d) { return check_local_terminal_universal<B>(K::arr(d, "R")); },
                .cap = 3});

  ps.push_back({.id = "homprod.product-cone",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  auto r = S::arrow(g, x, a, "r"), s = S::arrow(g, x, a, "s");
                  Document d;
                  d.add("R", r);
                  d.add("S", s);
                  d.add("q1", B::meet_p(r, s));
                  d.add("q2", B::meet_r(r, s));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto q1 = K::cell(d, "q1"), q2 = K::cell(d, "q2");
                  need(B::cod(q1) == K::arr(d, "R") && B::cod(q2) == K::arr(d, "S"), "cone legs mismatch");
                  return is_local_product_cone<B>(q1, q2);
                }});

  ps.push_back({.id = "homprod.transported-product",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto z = g.set("z"), c = g.set("c");
                  auto x = K::over(g, z, "x"), a = K::over(g, c, "a");
                  Document d;
                  d.add("f", S::map(g, z, x));
                  d.add("u", S::map(g, c, a));
                  d.add("R", S::arrow(g, x, a, "r"));
                  d.add("S", S::arrow(g, x, a, "s"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto f = K::map(d, "f"), u = K::map(d, "u");
                  auto r = K::arr(d, "R"), s = K::arr(d, "S");
                  need(B::src(r) == B::src(s) && B::tgt(r) == B::tgt(s), "R and S not parallel");
                  need(B::src(r) == B::tgt(f.left) && B::tgt(r) == B::tgt(u.left), "frame mismatch");
                  return check_transported_product<B>(f, u, r, s);
                }});

  ps.push_back({.id = "homprod.transported-terminal",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto z = g.set("z"), c = g.set("c");
                  Document d;
                  d.add("f", S::map(g, z, K::over(g, z, "x")));
                  d.add("u", S::map(g, c, K::over(g, c, "a")));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto f = K::map(d, "f"), u = K::map(d, "u");
                  return check_transported_terminal<B>(f, u, B::tgt(f.left), B::tgt(u.left));
                },
                .cap = 3});

  // R ^ S with one element removed still maps to R and S, but is not their product.
  ps.push_back({.id = "homprod.negative-control",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = K::sized(g, 1, "x"), a = K::sized(g, 1, "a");
                  auto r = S::arrow(g, x, a, "r"), s = S::arrow(g, x, a, "s");
                  auto inc = S::proper_sub(g, B::meet(r, s));
                  if (!inc) return std::nullopt;
                  Document d;
                  d.directives.push_back("check homprod.product-cone");
                  d.add("R", r);
                  d.add("S", s);
                  d.add("q1", B::vcomp(B::meet_p(r, s), *inc));
                  d.add("q2", B::vcomp(B::meet_r(r, s), *inc));
                  return d;
                },
                .holds = holds_of(ps, "homprod.product-cone"),
                .floor = 2,
                .max_trials = 25,
                .negative = true,
                .fail_detail = "cone is not a local product"});
  return ps;
}

}  // namespace cartbicat::suites
