#pragma once

#include "../cartesian.hpp"
#include "../monoidal.hpp"
#include "common.hpp"

namespace cartbicat::suites {

// Squares into R (x) S come with R, S and the pairing frame; shared by the
// product properties.
template <Bicategory B>
struct GrothGen {
  using K = Kit<B>;
  using S = typename K::S;
  using Arr = typename B::Arr;

  // Squares aR : T -> R, aS : T -> S with a common domain, from a cell into a meet.
  static Document cone(Gen& g) {
    auto x = g.set("x"), a = g.set("a"), y = g.set("y"), b = g.set("b");
    auto r = S::arrow(g, x, a, "r");
    auto s = S::arrow(g, y, b, "s");
    auto z = FinSet::range(x.size() && y.size() ? g.carrier() : 0, "z");
    auto c = FinSet::range(a.size() && b.size() ? g.carrier() : 0, "c");
    auto f = S::map(g, z, x), u = S::map(g, c, a);
    auto gg = S::map(g, z, y), v = S::map(g, c, b);
    auto qr = B::compose(adjunction_of<B>(u).right, B::compose(r, f));
    auto qs = B::compose(adjunction_of<B>(v).right, B::compose(s, gg));
    auto t = S::sub(g, B::meet(qr, qs), "t");
    Document d;
    d.add("r.f", f);
    d.add("r.u", u);
    d.add("r.cod", r);
    d.add("r.beta", B::vcomp(B::meet_p(qr, qs), t));
    d.add("s.f", gg);
    d.add("s.u", v);
    d.add("s.cod", s);
    d.add("s.beta", B::vcomp(B::meet_r(qr, qs), t));
    return d;
  }

  // A square a : T -> R (x) S with random frame maps.
  static Document into_product(Gen& g) {
    auto x = g.set("x"), a = g.set("a"), y = g.set("y"), b = g.set("b");
    auto r = S::arrow(g, x, a, "r");
    auto s = S::arrow(g, y, b, "s");
    auto prod = g_tensor<B>(r, s);
    Document d;
    d.add("R", r);
    d.add("S", s);
    K::square_into(g, d, "a", prod.product.cell);
    return d;
  }

  static GProductWitness<B> product_of(const Document& d) {
    auto prod = g_tensor<B>(K::arr(d, "R"), K::arr(d, "S"));
    need(K::arr(d, "a.cod") == prod.product.cell, "square does not land in R (x) S");
    return prod;
  }
};

template <Bicategory B>
std::vector<Property> groth_properties() {
  using K = Kit<B>;
  using S = typename K::S;
  using G = GrothGen<B>;
  using Cell = typename B::Cell;
  std::vector<Property> ps;

  auto pair_gen = [](Gen& g) -> std::optional<Document> {
    auto z = g.set("z"), c = g.set("c");
    auto tz = FinSet::range(z.size() ? g.between(1, std::max<std::size_t>(1, g.max_carrier())) : 0, "m");
    auto tc = FinSet::range(c.size() ? g.between(1, std::max<std::size_t>(1, g.max_carrier())) : 0, "n");
    auto t = S::arrow(g, tz, tc, "w");
    Document d;
    auto mid = K::square_into(g, d, "a2", t);
    K::square_into(g, d, "a1", mid);
    return d;
  };
  auto pair_of = [](const Document& d) {
    auto a1 = K::square(d, "a1"), a2 = K::square(d, "a2");
    need(a1.cod == a2.dom, "squares not composable");
    return std::pair{a1, a2};
  };

  ps.push_back({.id = "groth.compose-secondary",
                .generate = pair_gen,
                .holds = [pair_of](const Document& d) {
                  auto [a1, a2] = pair_of(d);
                  auto c = g_compose(a1, a2);
                  return B::is_valid(c.primary) && c.secondary == g_compose_secondary(a1, a2);
                }});

  ps.push_back({.id = "groth.boundary-functorial",
                .generate = pair_gen,
                .holds = [pair_of](const Document& d) {
                  auto [a1, a2] = pair_of(d);
                  auto c = g_compose(a1, a2);
                  return d0(c).left == B::compose(d0(a2).left, d0(a1).left) &&
                         d1(c).left == B::compose(d1(a2).left, d1(a1).left) && c.dom == a1.dom && c.cod == a2.cod;
                }});

  ps.push_back({.id = "groth.identity-unit",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto y = g.set("y"), b = g.set("b");
                  Document d;
                  K::square_into(g, d, "a", S::arrow(g, y, b, "s"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto a = K::square(d, "a");
                  return g_equal(g_compose(g_identity(a.dom), a), a) && g_equal(g_compose(a, g_identity(a.cod)), a);
                }});

  ps.push_back({.id = "groth.compose-assoc",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto y = g.set("y"), b = g.set("b");
                  Document d;
                  auto m2 = K::square_into(g, d, "a3", S::arrow(g, y, b, "s"));
                  auto m1 = K::square_into(g, d, "a2", m2);
                  K::square_into(g, d, "a1", m1);
                  return d;
                },
                .holds = [](const Document& d) {
                  auto a1 = K::square(d, "a1"), a2 = K::square(d, "a2"), a3 = K::square(d, "a3");
                  need(a1.cod == a2.dom && a2.cod == a3.dom, "squares not composable");
                  return g_comparison_cell(g_compose(g_compose(a1, a2), a3), g_compose(a1, g_compose(a2, a3)));
                },
                .cap = 3});

  // Pairing through relabelled frames h, w and explicit comparison isos.
  ps.push_back({.id = "groth.pair-exists",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto d = G::cone(g);
                  auto f = adjunction_of<B>(d.template arrow<B>("r.f"));
                  auto gg = adjunction_of<B>(d.template arrow<B>("s.f"));
                  auto u = adjunction_of<B>(d.template arrow<B>("r.u"));
                  auto v = adjunction_of<B>(d.template arrow<B>("s.u"));
                  d.add("h", S::relabel_map(g, pairing<B>(f, gg).map.left));
                  d.add("w", S::relabel_map(g, pairing<B>(u, v).map.left));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto ar = K::square(d, "r"), as = K::square(d, "s");
                  need(ar.dom == as.dom, "squares have different domains");
                  auto h = K::map(d, "h"), w = K::map(d, "w");
                  auto prod = g_tensor<B>(ar.cod, as.cod);
                  need(B::tgt(h.left) == prod.top_cone.vertex && B::tgt(w.left) == prod.bottom_cone.vertex,
                       "frame does not land in the products");
                  auto cmp = [](const auto& lhs, const auto& rhs) {
                    auto c = B::comparison(lhs, rhs);
                    need(c.has_value(), "frame is not a pairing of the given maps");
                    return *c;
                  };
                  const auto& tc = prod.top_cone.legs;
                  const auto& bc = prod.bottom_cone.legs;
                  Cell mu0 = cmp(B::compose(tc[0].left, h.left), ar.f.left);
                  Cell mu1 = cmp(B::compose(bc[0].left, w.left), ar.u.left);
                  Cell nu0 = cmp(B::compose(tc[1].left, h.left), as.f.left);
                  Cell nu1 = cmp(B::compose(bc[1].left, w.left), as.u.left);
                  auto res = g_pair<B>(ar.dom, ar, as, prod, h, w, mu0, mu1, nu0, nu1);
                  return g_cell_condition(GCell<B>{g_compose(res, prod.proj_p), ar, mu0, mu1}) &&
                         g_cell_condition(GCell<B>{g_compose(res, prod.proj_r), as, nu0, nu1});
                }});

  // A square into R (x) S is the pairing of its projections.
  ps.push_back({.id = "groth.pair-roundtrip",
                .generate = G::into_product,
                .holds = [](const Document& d) {
                  auto prod = G::product_of(d);
                  auto a = K::square(d, "a");
                  auto lp = g_compose(a, prod.proj_p);
                  auto lr = g_compose(a, prod.proj_r);
                  auto res = g_pair<B>(a.dom, lp, lr, prod, a.f, a.u, B::id_cell(lp.f.left), B::id_cell(lp.u.left),
                                       B::id_cell(lr.f.left), B::id_cell(lr.u.left));
                  return g_equal(res, a);
                },
                .cap = 3});

  ps.push_back({.id = "groth.pair-unique-bruteforce",
                .generate = [](Gen& g) -> std::optional<Document> { return G::cone(g); },
                .holds = [](const Document& d) {
                  auto ar = K::square(d, "r"), as = K::square(d, "s");
                  need(ar.dom == as.dom, "squares have different domains");
                  auto prod = g_tensor<B>(ar.cod, as.cod);
                  auto res = g_pair<B>(ar, as, prod);
                  return g_pair_solution_count(ar, as, prod, res) == 1;
                },
                .cap = 2});

  // Cells between two squares into R (x) S are determined by their projections.
  ps.push_back({.id = "groth.fill-cell",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto d = G::into_product(g);
                  d.add("h2", S::relabel_map(g, d.template arrow<B>("a.f")));
                  d.add("w2", S::relabel_map(g, d.template arrow<B>("a.u")));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto prod = G::product_of(d);
                  auto a = K::square(d, "a");
                  auto h2 = K::map(d, "h2"), w2 = K::map(d, "w2");
                  auto ch = B::comparison(a.f.left, h2.left);
                  auto cw = B::comparison(a.u.left, w2.left);
                  need(ch && cw, "relabelled frame differs");
                  const auto& tc = prod.top_cone.legs;
                  const auto& bc = prod.bottom_cone.legs;
                  auto lp = g_compose(a, prod.proj_p);
                  auto lr = g_compose(a, prod.proj_r);
                  auto side = [&](std::size_t i, const GArr<B>& l) {
                    auto m0 = B::comparison(B::compose(tc[i].left, h2.left), l.f.left);
                    auto m1 = B::comparison(B::compose(bc[i].left, w2.left), l.u.left);
                    return std::pair{*m0, *m1};
                  };
                  auto [mu0, mu1] = side(0, lp);
                  auto [nu0, nu1] = side(1, lr);
                  auto b = g_pair<B>(a.dom, lp, lr, prod, h2, w2, mu0, mu1, nu0, nu1);
                  auto bp = g_compose(b, prod.proj_p);
                  auto br = g_compose(b, prod.proj_r);
                  GCell<B> cp{lp, bp, B::whisker_left(tc[0].left, *ch), B::whisker_left(bc[0].left, *cw)};
                  GCell<B> cr{lr, br, B::whisker_left(tc[1].left, *ch), B::whisker_left(bc[1].left, *cw)};
                  if (!g_cell_condition(cp) || !g_cell_condition(cr)) return false;
                  auto fill = g_fill_cell(prod, a, b, cp, cr);
                  if (!g_cell_condition(fill)) return false;
                  if (!(B::whisker_left(tc[0].left, fill.phi) == cp.phi && B::whisker_left(tc[1].left, fill.phi) == cr.phi &&
                        B::whisker_left(bc[0].left, fill.psi) == cp.psi && B::whisker_left(bc[1].left, fill.psi) == cr.psi))
                    return false;
                  // Exhaustive uniqueness.
                  std::size_t n = 0;
                  for (const auto& phi : B::all_cells(a.f.left, b.f.left, 100000))
                    for (const auto& psi : B::all_cells(a.u.left, b.u.left, 100000))
                      if (B::whisker_left(tc[0].left, phi) == cp.phi && B::whisker_left(tc[1].left, phi) == cr.phi &&
                          B::whisker_left(bc[0].left, psi) == cp.psi && B::whisker_left(bc[1].left, psi) == cr.psi &&
                          g_cell_condition(GCell<B>{a, b, phi, psi}))
                        ++n;
                  return n == 1;
                },
                .cap = 3});

  ps.push_back({.id = "groth.terminal",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  auto r = S::arrow(g, x, a, "r");
                  auto t = g_bang<B>(GObj<B>{r});
                  Document d;
                  d.add("R", r);
                  d.add("tx", S::relabel_map(g, t.f.left));
                  d.add("ta", S::relabel_map(g, t.u.left));
                  return d;
                },
                .holds = [](const Document& d) {
                  const GObj<B> r{K::arr(d, "R")};
                  auto tx = K::map(d, "tx"), ta = K::map(d, "ta");
                  const auto top = g_terminal<B>();
                  need(B::tgt(tx.left) == top.src() && B::tgt(ta.left) == top.tgt(), "frame does not land in I");
                  need(B::src(tx.left) == r.src() && B::src(ta.left) == r.tgt(), "frame does not start at R");
                  auto t = g_bang<B>(r);
                  const auto q = B::compose(ta.right, B::compose(top.cell, tx.left));
                  auto t2 = make_garr_secondary<B>(r, top, tx, ta, B::fill_cone(r.cell, q, {}, {}));
                  std::size_t n = 0;
                  bool inv = true;
                  for (const auto& phi : B::all_cells(t.f.left, t2.f.left, 100000))
                    for (const auto& psi : B::all_cells(t.u.left, t2.u.left, 100000))
                      if (g_cell_condition(GCell<B>{t, t2, phi, psi})) {
                        ++n;
                        inv = inv && is_invertible<B>(phi) && is_invertible<B>(psi);
                      }
                  return n == 1 && inv && g_equal(g_bang<B>(top), g_identity(top));
                },
                .cap = 3});

  ps.push_back({.id = "groth.dunit-iso",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  Document d;
                  d.add("R", S::arrow(g, x, a, "r"));
                  d.add("S", S::arrow(g, x, a, "s"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R"), s = K::arr(d, "S");
                  need(B::src(r) == B::src(s) && B::tgt(r) == B::tgt(s), "R and S not parallel");
                  const GObj<B> ro{r};
                  auto prod = g_tensor<B>(ro, ro);
                  auto dg = g_diag(ro);
                  return is_invertible<B>(dunit_iso<B>(r, s)) &&
                         g_comparison_cell(g_compose(dg, prod.proj_p), g_identity(ro)) &&
                         g_comparison_cell(g_compose(dg, prod.proj_r), g_identity(ro));
                },
                .cap = 3});

  // iota of a bijection is an equivalence; a proper inclusion over identities is not.
  ps.push_back({.id = "groth.equivalence-detect",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  auto r = S::arrow(g, x, a, "r");
                  auto y = FinSet::range(x.size(), "y");
                  Document d;
                  d.add("R", r);
                  d.add("f", B::graph(SetFn(x, y, g.permutation(x.size()))));
                  if (auto inc = S::proper_sub(g, r)) d.add("inc", *inc);
                  return d;
                },
                .holds = [](const Document& d) {
                  auto f = K::map(d, "f");
                  auto fn = underlying_function<B>(f.left);
                  need(fn.dom().size() == fn.cod().size() && fn.inverse().has_value(), "f is not a bijection");
                  if (!g_is_equivalence(iota(f)).has_value()) return false;
                  if (!d.has("inc")) return true;
                  auto inc = K::cell(d, "inc");
                  need(B::cod(inc) == K::arr(d, "R"), "inclusion does not end at R");
                  need(!(B::dom(inc) == B::cod(inc)), "inclusion is not proper");
                  const GObj<B> dom{B::dom(inc)}, cod{B::cod(inc)};
                  auto sq = make_garr_secondary<B>(dom, cod, identity_adjunction<B>(dom.src()),
                                                   identity_adjunction<B>(dom.tgt()), inc);
                  return !g_is_equivalence(sq).has_value();
                }});

  ps.push_back({.id = "groth.square-valid",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto y = g.set("y"), b = g.set("b");
                  Document d;
                  K::square_into(g, d, "a", S::arrow(g, y, b, "s"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto f = K::map(d, "a.f"), u = K::map(d, "a.u");
                  auto s = K::arr(d, "a.cod");
                  auto beta = d.template cell<B>("a.beta");
                  need(B::cod(beta) == B::compose(u.right, B::compose(s, f.left)), "wrong codomain");
                  if (!B::is_valid(beta)) return false;
                  auto alpha = to_primary<B>(beta, u, B::compose(s, f.left));
                  return B::is_valid(alpha) && to_secondary<B>(alpha, u, B::dom(beta)) == beta;
                }});

  ps.push_back({.id = "groth.negative-control",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto y = K::sized(g, 1, "y"), b = K::sized(g, 1, "b");
                  Document d;
                  K::square_into(g, d, "a", S::arrow(g, y, b, "s"));
                  auto bad = S::corrupt(g, d.template cell<B>("a.beta"));
                  if (!bad) return std::nullopt;
                  Document out;
                  out.directives.push_back("check groth.square-valid");
                  out.add("a.f", d.template arrow<B>("a.f"));
                  out.add("a.u", d.template arrow<B>("a.u"));
                  out.add("a.cod", d.template arrow<B>("a.cod"));
                  out.add("a.beta", *bad);
                  return out;
                },
                .holds = holds_of(ps, "groth.square-valid"),
                .floor = 2,
                .max_trials = 25,
                .negative = true,
                .fail_detail = "secondary 2-cell is not a valid square"});
  return ps;
}

}  // namespace cartbicat::suites
