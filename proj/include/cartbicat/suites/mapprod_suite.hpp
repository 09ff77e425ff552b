#pragma once

#include "common.hpp"

namespace cartbicat::suites {

// A cone stored as set V and functions leg0, leg1, ... out of it.
inline Document cone_document(const FinSet& vertex, const std::vector<SetFn>& legs) {
  Document d;
  d.add_set("V", vertex);
  for (std::size_t i = 0; i < legs.size(); ++i) d.add_fn("leg" + std::to_string(i), legs[i]);
  return d;
}

template <Bicategory B>
std::vector<Document> canonical_cones(std::size_t arity, std::size_t max) {
  static const char* prefixes[] = {"x", "y", "z"};
  std::vector<Document> out;
  for (const auto& t : size_tuples(arity, max)) {
    std::vector<FinSet> objects;
    for (std::size_t i = 0; i < arity; ++i) objects.push_back(FinSet::range(t[i], prefixes[i]));
    auto cone = nary_product<B>(objects);
    std::vector<SetFn> legs;
    for (const auto& l : cone.legs) legs.push_back(underlying_function<B>(l.left));
    out.push_back(cone_document(cone.vertex, legs));
  }
  return out;
}

template <Bicategory B>
bool cone_holds(const Document& d) {
  ProductCone<B> cone{d.set("V"), {}, {}};
  for (std::size_t i = 0; d.has("leg" + std::to_string(i)); ++i) {
    const auto& f = d.fn("leg" + std::to_string(i));
    need(f.dom() == cone.vertex, "leg does not start at the vertex");
    cone.factors.push_back(f.cod());
    cone.legs.push_back(map_of<B>(f));
  }
  return check_product_cone<B>(cone, 3, 2).all_pass();
}

template <Bicategory B>
std::vector<Property> mapprod_properties() {
  using K = Kit<B>;
  using S = typename K::S;
  std::vector<Property> ps;

  ps.push_back({.id = "mapprod.cone-binary",
                .enumerate = [](std::size_t max) { return canonical_cones<B>(2, max); },
                .holds = cone_holds<B>,
                .cap = 3});
  ps.push_back({.id = "mapprod.cone-nullary",
                .enumerate = [](std::size_t) { return canonical_cones<B>(0, 0); },
                .holds = cone_holds<B>});
  ps.push_back({.id = "mapprod.cone-ternary",
                .enumerate = [](std::size_t max) { return canonical_cones<B>(3, max); },
                .holds = cone_holds<B>,
                .cap = 2});

  // A cell c : T -> U into X x Y is recovered from its two projections.
  ps.push_back({.id = "mapprod.fill2-unique",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto a = g.set("a"), x = g.set("x"), y = g.set("y");
                  auto u = S::arrow(g, a, product(x, y), "u");
                  Document d;
                  d.add_set("X", x);
                  d.add_set("Y", y);
                  d.add("c", S::sub(g, u, "t"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto c = K::cell(d, "c");
                  auto cone = product_object<B>(d.set("X"), d.set("Y"));
                  need(B::tgt(B::cod(c)) == cone.vertex, "cell does not land in X x Y");
                  auto alpha = B::whisker_left(cone.legs[0].left, c);
                  auto beta = B::whisker_left(cone.legs[1].left, c);
                  auto cands = fill2_candidates<B>(cone, B::dom(c), B::cod(c), alpha, beta);
                  return fill2(cone, B::dom(c), B::cod(c), alpha, beta) == c && cands.size() == 1 &&
                         cands.front() == c;
                },
                .cap = 3});

  ps.push_back({.id = "mapprod.pairing",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto z = g.set("z");
                  Document d;
                  d.add("f", S::map(g, z, K::over(g, z, "x")));
                  d.add("g", S::map(g, z, K::over(g, z, "y")));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto f = K::map(d, "f"), g = K::map(d, "g");
                  need(B::src(f.left) == B::src(g.left), "maps have different sources");
                  auto pr = pairing<B>(f, g);
                  // Expected function, by labels.
                  const auto x = B::tgt(f.left), y = B::tgt(g.left), z = B::src(f.left);
                  const auto xy = product(x, y);
                  const auto ff = underlying_function<B>(f.left), gf = underlying_function<B>(g.left);
                  const auto h = underlying_function<B>(pr.map.left);
                  for (std::size_t i = 0; i < z.size(); ++i)
                    if (xy[h(i)] != "(" + x[ff(i)] + "," + y[gf(i)] + ")") return false;
                  return is_invertible<B>(pr.mu) && is_invertible<B>(pr.nu);
                }});

  ps.push_back({.id = "mapprod.times-functorial",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), y = g.set("y");
                  Document d;
                  d.add("f", S::map(g, x, K::over(g, x, "a")));
                  d.add("g", S::map(g, y, K::over(g, y, "b")));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto f = K::map(d, "f"), g = K::map(d, "g");
                  auto t = times_on_arrows<B>(f, g);
                  const auto x = B::src(f.left), y = B::src(g.left);
                  const auto a = B::tgt(f.left), b = B::tgt(g.left);
                  const auto ab = product(a, b);
                  const auto ff = underlying_function<B>(f.left), gf = underlying_function<B>(g.left);
                  const auto h = underlying_function<B>(t.map.left);
                  for (std::size_t i = 0; i < x.size(); ++i)
                    for (std::size_t j = 0; j < y.size(); ++j)
                      if (ab[h(i * y.size() + j)] != "(" + a[ff(i)] + "," + b[gf(j)] + ")") return false;
                  return times_on_cells<B>(B::id_cell(f.left), B::id_cell(g.left)) == B::id_cell(t.map.left) &&
                         is_invertible<B>(t.p_prime) && is_invertible<B>(t.r_prime);
                }});

  ps.push_back({.id = "mapprod.bang-diag",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x");
                  Document d;
                  d.add("f", S::map(g, x, K::over(g, x, "a")));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto f = K::map(d, "f");
                  const auto x = B::src(f.left);
                  const auto dx = underlying_function<B>(diag<B>(x).left);
                  const auto xx = product(x, x);
                  for (std::size_t i = 0; i < x.size(); ++i)
                    if (xx[dx(i)] != "(" + x[i] + "," + x[i] + ")") return false;
                  return is_invertible<B>(bang_cell<B>(f)) && is_invertible<B>(diag_cell<B>(f));
                }});

  // The binary cone with its second leg made constant.
  ps.push_back({.id = "mapprod.negative-control",
                .enumerate = [](std::size_t) {
                  std::vector<Document> out;
                  for (std::size_t m = 1; m <= 2; ++m)
                    for (std::size_t n = 2; n <= 3; ++n) {
                      auto x = FinSet::range(m, "x"), y = FinSet::range(n, "y");
                      auto v = product(x, y);
                      auto d = cone_document(v, {proj1(x, y), SetFn::constant(v, y, 0)});
                      d.directives.push_back("check mapprod.cone-binary");
                      out.push_back(std::move(d));
                    }
                  return out;
                },
                .holds = cone_holds<B>,
                .negative = true,
                .fail_detail = "cone is not a product"});
  return ps;
}

}  // namespace cartbicat::suites
