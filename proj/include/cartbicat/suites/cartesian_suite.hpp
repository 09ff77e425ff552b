#pragma once

#include <array>

#include "../cartesian.hpp"
#include "../hom_products.hpp"
#include "common.hpp"

namespace cartbicat::suites {

// Every R : X -> I up to iso: a span is a multiset of X of size <= apex_max,
// a relation is a subset of X.
template <Bicategory B>
std::vector<typename B::Arr> arrows_to_unit(const FinSet& x, std::size_t apex_max, bool reverse) {
  std::vector<typename B::Arr> out;
  const FinSet& i = unit_set();
  if constexpr (std::is_same_v<B, SpanBicat>) {
    for (std::size_t k = 0; k <= apex_max; ++k) {
      if (x.size() == 0 && k > 0) break;
      // Non-decreasing sequences of length k.
      std::vector<std::size_t> seq(k, 0);
      while (true) {
        auto apex = FinSet::range(k, "e");
        SetFn to_x(apex, x, seq);
        SetFn to_i = SetFn::constant(apex, i, 0);
        out.push_back(reverse ? Span(to_i, to_x) : Span(to_x, to_i));
        std::size_t j = k;
        while (j > 0 && seq[j - 1] + 1 == x.size()) --j;
        if (j == 0) break;
        ++seq[j - 1];
        for (std::size_t m = j; m < k; ++m) seq[m] = seq[j - 1];
      }
    }
  } else {
    (void)apex_max;
    for (std::size_t mask = 0; mask < (std::size_t{1} << x.size()); ++mask) {
      Rel r = reverse ? Rel(i, x) : Rel(x, i);
      for (std::size_t e = 0; e < x.size(); ++e)
        if (mask >> e & 1) reverse ? r.set(0, e) : r.set(e, 0);
      out.push_back(r);
    }
  }
  return out;
}

template <Bicategory B>
typename B::Arr empty_arrow(const FinSet& x, const FinSet& a) {
  if constexpr (std::is_same_v<B, SpanBicat>) {
    const auto e = FinSet::range(0, "e");
    return Span(SetFn(e, x, {}), SetFn(e, a, {}));
  } else {
    return Rel(x, a);
  }
}

// |Hom(P, Q)| for parallel arrows, as an exponent vector over the primes
// 2, 3, 5, 7 (spans: prod over (x, a) of m_Q^m_P, with m <= 9), or 0/1 for
// relations. nullopt stands for zero.
using HomCount = std::optional<std::array<std::size_t, 4>>;

template <Bicategory B>
HomCount hom_count(const typename B::Arr& p, const typename B::Arr& q) {
  std::array<std::size_t, 4> e{};
  if constexpr (std::is_same_v<B, SpanBicat>) {
    const auto n = p.source().size() * p.target().size();
    std::vector<std::size_t> mp(n, 0), mq(n, 0);
    for (std::size_t i = 0; i < p.apex().size(); ++i) ++mp[p.left()(i) * p.target().size() + p.right()(i)];
    for (std::size_t i = 0; i < q.apex().size(); ++i) ++mq[q.left()(i) * q.target().size() + q.right()(i)];
    static constexpr std::size_t primes[] = {2, 3, 5, 7};
    for (std::size_t k = 0; k < n; ++k) {
      if (mp[k] == 0) continue;
      if (mq[k] == 0) return std::nullopt;
      require(mq[k] <= 10, ErrorKind::invalid_config, "multiplicity too large to count");
      std::size_t b = mq[k];
      for (std::size_t j = 0; j < 4; ++j)
        while (b % primes[j] == 0) {
          b /= primes[j];
          e[j] += mp[k];
        }
    }
    return e;
  } else {
    if (!p.subset_of(q)) return std::nullopt;
    return e;
  }
}

template <Bicategory B>
std::vector<Property> cartesian_properties() {
  using K = Kit<B>;
  using S = typename K::S;
  std::vector<Property> ps;

  ps.push_back({.id = "cartesian.precartesian-terminal",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  Document d;
                  d.add("R", S::arrow(g, x, a, "r"));
                  d.add("top", B::top(x, a));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R"), top = K::arr(d, "top");
                  need(B::src(top) == B::src(r) && B::tgt(top) == B::tgt(r), "top is not parallel to R");
                  return B::all_cells(r, top, 100000).size() == 1;
                },
                .cap = 3,
                .fail_detail = "precartesian precondition fails: hom-category has no terminal object"});

  ps.push_back({.id = "cartesian.precartesian-products",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), a = g.set("a");
                  auto r = S::arrow(g, x, a, "r"), s = S::arrow(g, x, a, "s");
                  auto c = S::sub(g, B::meet(r, s), "t");
                  Document d;
                  d.add("phi", B::vcomp(B::meet_p(r, s), c));
                  d.add("psi", B::vcomp(B::meet_r(r, s), c));
                  d.add_set("X", x);
                  d.add_set("Y", a);
                  return d;
                },
                .holds = [](const Document& d) {
                  auto phi = K::cell(d, "phi"), psi = K::cell(d, "psi");
                  need(B::dom(phi) == B::dom(psi), "cone legs have different domains");
                  return check_local_product_universal<B>(phi, psi) &&
                         check_product_cone<B>(product_object<B>(d.set("X"), d.set("Y")), 2, 1).all_pass();
                },
                .cap = 3,
                .fail_detail = "precartesian precondition fails: missing products"});

  ps.push_back({.id = "cartesian.tensor-unit-invertible",
                .enumerate = [](std::size_t max) { return set_tuples({"X", "Y"}, max); },
                .holds = [](const Document& d) { return is_invertible<B>(tensor_unit_cell<B>(d.set("X"), d.set("Y"))); },
                .cap = 4});

  ps.push_back({.id = "cartesian.tensor-comp-invertible",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), y = g.set("y"), a = g.set("a"), b = g.set("b"), l = g.set("l"), m = g.set("m");
                  Document d;
                  d.add("R", S::arrow(g, x, a, "r"));
                  d.add("S", S::arrow(g, y, b, "s"));
                  d.add("T", S::arrow(g, a, l, "t"));
                  d.add("U", S::arrow(g, b, m, "u"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R"), s = K::arr(d, "S"), t = K::arr(d, "T"), u = K::arr(d, "U");
                  need(B::tgt(r) == B::src(t) && B::tgt(s) == B::src(u), "arrows not composable");
                  return is_invertible<B>(tensor_comp_cell<B>(r, s, t, u));
                },
                .cap = 4});

  ps.push_back({.id = "cartesian.unit-invertible",
                .enumerate = [](std::size_t) { return std::vector<Document>{Document{}}; },
                .holds = [](const Document&) {
                  auto u = unit_functor_cells<B>();
                  return is_invertible<B>(u.unit) && is_invertible<B>(u.mult);
                }});

  // Every pair of functions between sets of size <= max.
  ps.push_back({.id = "cartesian.m-invertible-exhaustive",
                .enumerate = [](std::size_t max) {
                  std::vector<Document> out;
                  for (const auto& t : size_tuples(4, max)) {
                    auto x = FinSet::range(t[0], "x"), a = FinSet::range(t[1], "a");
                    auto y = FinSet::range(t[2], "y"), b = FinSet::range(t[3], "b");
                    for (const auto& f : all_functions(x, a))
                      for (const auto& g : all_functions(y, b)) {
                        Document d;
                        d.add("f", B::graph(f));
                        d.add("g", B::graph(g));
                        out.push_back(std::move(d));
                      }
                  }
                  return out;
                },
                .holds = [](const Document& d) { return is_invertible<B>(m_cell<B>(K::map(d, "f"), K::map(d, "g"))); },
                .cap = 3});

  ps.push_back({.id = "cartesian.m-invertible-sampled",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), y = g.set("y");
                  Document d;
                  d.add("f", S::map(g, x, K::over(g, x, "a")));
                  d.add("g", S::map(g, y, K::over(g, y, "b")));
                  return d;
                },
                .holds = [](const Document& d) { return is_invertible<B>(m_cell<B>(K::map(d, "f"), K::map(d, "g"))); },
                .cap = 4});

  auto r_and_set = [](Gen& g) -> std::optional<Document> {
    auto x = g.set("x"), a = g.set("a");
    Document d;
    d.add("R", S::arrow(g, x, a, "r"));
    d.add_set("Y", g.set("y"));
    return d;
  };

  ps.push_back({.id = "cartesian.spiso",
                .generate = r_and_set,
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R");
                  const auto& y = d.set("Y");
                  // The same data read as (X, S) with X := Y and S := R.
                  return is_invertible<B>(spiso_p<B>(r, y)) && is_invertible<B>(spiso_r<B>(y, r));
                },
                .cap = 4});

  ps.push_back({.id = "cartesian.prebeck",
                .generate = r_and_set,
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R");
                  const auto& y = d.set("Y");
                  return is_invertible<B>(prebeck_p<B>(r, y)) && is_invertible<B>(prebeck_r<B>(y, r));
                },
                .cap = 4});

  auto xi_gen = [](Gen& g) -> std::optional<Document> {
    auto x = g.set("x"), a = g.set("a"), y = g.set("y"), b = g.set("b");
    auto l = FinSet::range(x.size() ? g.carrier() : 0, "l");
    auto m = FinSet::range(y.size() ? g.carrier() : 0, "m");
    auto c = FinSet::range(a.size() ? g.carrier() : 0, "c");
    auto e = FinSet::range(b.size() ? g.carrier() : 0, "e");
    Document d;
    d.add("R", S::arrow(g, x, a, "r"));
    d.add("S", S::arrow(g, y, b, "s"));
    d.add("f", S::map(g, l, x));
    d.add("g", S::map(g, m, y));
    d.add("u", S::map(g, c, a));
    d.add("v", S::map(g, e, b));
    return d;
  };
  struct XiData {
    typename B::Arr r, s;
    Adjunction<B> f, g, u, v;
  };
  auto xi_read = [](const Document& d) {
    XiData x{K::arr(d, "R"), K::arr(d, "S"), K::map(d, "f"), K::map(d, "g"), K::map(d, "u"), K::map(d, "v")};
    need(B::tgt(x.f.left) == B::src(x.r) && B::tgt(x.g.left) == B::src(x.s), "top frame mismatch");
    need(B::tgt(x.u.left) == B::tgt(x.r) && B::tgt(x.v.left) == B::tgt(x.s), "bottom frame mismatch");
    return x;
  };

  ps.push_back({.id = "cartesian.xi",
                .generate = xi_gen,
                .holds = [xi_read](const Document& d) {
                  auto x = xi_read(d);
                  return is_invertible<B>(xi_iso<B>(x.r, x.s, x.f, x.g));
                },
                .cap = 3});

  ps.push_back({.id = "cartesian.xi-star",
                .generate = xi_gen,
                .holds = [xi_read](const Document& d) {
                  auto x = xi_read(d);
                  return is_invertible<B>(xi_star_iso<B>(x.r, x.s, x.u, x.v));
                },
                .cap = 3});

  ps.push_back({.id = "cartesian.xi-identity",
                .generate = xi_gen,
                .holds = [xi_read](const Document& d) {
                  auto x = xi_read(d);
                  const auto ix = identity_adjunction<B>(B::src(x.r)), iy = identity_adjunction<B>(B::src(x.s));
                  return xi_iso<B>(x.r, x.s, ix, iy) == B::id_cell(g_tensor<B>(x.r, x.s).product.cell);
                },
                .cap = 3});

  // m'_{f,g} = xi_{1,1,f,g} . ((x)o (f x g))
  ps.push_back({.id = "cartesian.xi-unit",
                .generate = xi_gen,
                .holds = [xi_read](const Document& d) {
                  auto x = xi_read(d);
                  const auto a = B::tgt(x.f.left), b = B::tgt(x.g.left);
                  const auto fg = times_on_arrows<B>(x.f, x.g).map.left;
                  auto rhs = B::vcomp(xi_iso<B>(B::identity(a), B::identity(b), x.f, x.g),
                                      B::whisker_right(tensor_unit_cell<B>(a, b), fg));
                  return m_cell<B>(x.f, x.g) == rhs;
                },
                .cap = 3});

  ps.push_back({.id = "cartesian.strange-iso-exhaustive",
                .enumerate = [](std::size_t max) {
                  std::vector<Document> out;
                  for (std::size_t nx = 0; nx <= max; ++nx)
                    for (std::size_t ny = 0; ny <= max; ++ny) {
                      auto x = FinSet::range(nx, "x"), y = FinSet::range(ny, "y");
                      for (const auto& r : arrows_to_unit<B>(x, max, false))
                        for (const auto& s : arrows_to_unit<B>(y, max, true)) {
                          Document d;
                          d.add("R", r);
                          d.add("S", s);
                          out.push_back(std::move(d));
                        }
                    }
                  return out;
                },
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R"), s = K::arr(d, "S");
                  need(B::tgt(r) == unit_set() && B::src(s) == unit_set(), "R must end and S start at I");
                  return is_invertible<B>(strange_iso<B>(r, s));
                },
                .cap = 3});

  // For every pair of iso classes (R, S), (R', S') with carriers <= max,
  // |Hom(r((R (x) S) p*), r((R' (x) S') p*))| = |Hom(S R, S' R')|, counted
  // independently of the isos. One input per pair of carrier sizes.
  ps.push_back({.id = "cartesian.strange-hom-bijection",
                .enumerate = [](std::size_t max) {
                  auto out = set_tuples({"X", "Y"}, max);
                  for (auto& d : out) d.directives.push_back("apex-max " + std::to_string(max));
                  return out;
                },
                .holds = [](const Document& d) {
                  const auto& x = d.set("X");
                  const auto& y = d.set("Y");
                  const auto bound = directive_value(d, "apex-max");
                  need(bound.has_value(), "missing apex-max directive");
                  const std::size_t apex = std::stoul(*bound);
                  need(apex <= 3, "apex-max above 3");
                  struct Pair {
                    typename B::Arr lhs, comp;
                  };
                  std::vector<Pair> classes;
                  for (const auto& r : arrows_to_unit<B>(x, apex, false))
                    for (const auto& s : arrows_to_unit<B>(y, apex, true))
                      classes.push_back({strange_lhs<B>(r, s), B::compose(s, r)});
                  for (const auto& a : classes)
                    for (const auto& b : classes)
                      if (hom_count<B>(a.lhs, b.lhs) != hom_count<B>(a.comp, b.comp)) return false;
                  return true;
                },
                .cap = 3});

  // Conjugating by the isos is a bijection Hom(L, L') -> Hom(SR, S'R').
  ps.push_back({.id = "cartesian.strange-conjugation",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), y = g.set("y");
                  const auto& i = unit_set();
                  Document d;
                  d.add("R", S::arrow(g, x, i, "r"));
                  d.add("S", S::arrow(g, i, y, "s"));
                  d.add("R2", S::arrow(g, x, i, "p"));
                  d.add("S2", S::arrow(g, i, y, "q"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R"), s = K::arr(d, "S"), r2 = K::arr(d, "R2"), s2 = K::arr(d, "S2");
                  need(B::tgt(r) == unit_set() && B::src(s) == unit_set(), "R must end and S start at I");
                  need(B::src(r) == B::src(r2) && B::tgt(s) == B::tgt(s2), "pairs not parallel");
                  auto iso = strange_iso<B>(r, s), iso2 = strange_iso<B>(r2, s2);
                  auto inv = B::inverse(iso);
                  if (!inv || !B::inverse(iso2)) return false;
                  auto lhs = B::all_cells(strange_lhs<B>(r, s), strange_lhs<B>(r2, s2), 100000);
                  auto rhs = B::all_cells(B::compose(s, r), B::compose(s2, r2), 100000);
                  if (lhs.size() != rhs.size()) return false;
                  std::vector<typename B::Cell> images;
                  for (const auto& th : lhs) {
                    auto im = vcomp_all<B>({iso2, th, *inv});
                    if (std::find(rhs.begin(), rhs.end(), im) == rhs.end()) return false;
                    if (std::find(images.begin(), images.end(), im) != images.end()) return false;
                    images.push_back(im);
                  }
                  return true;
                },
                .cap = 2});

  ps.push_back({.id = "cartesian.strange-natural",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), y = g.set("y");
                  const auto& i = unit_set();
                  Document d;
                  d.add("alpha", S::sub(g, S::arrow(g, x, i, "r"), "p"));
                  d.add("beta", S::sub(g, S::arrow(g, i, y, "s"), "q"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto al = K::cell(d, "alpha"), be = K::cell(d, "beta");
                  const auto r = B::dom(al), r2 = B::cod(al), s = B::dom(be), s2 = B::cod(be);
                  need(B::tgt(r) == unit_set() && B::src(s) == unit_set(), "R must end and S start at I");
                  const auto rs = g_tensor<B>(r, s);
                  const auto& pstar = rs.top_cone.legs[0].right;
                  const auto& rleg = rs.bottom_cone.legs[1].left;
                  auto lifted = B::whisker_left(rleg, B::whisker_right(tensor_2cells<B>(al, be), pstar));
                  return B::vcomp(strange_iso<B>(r2, s2), lifted) == B::vcomp(hcomp<B>(be, al), strange_iso<B>(r, s));
                },
                .cap = 3});

  ps.push_back({.id = "cartesian.strange-product",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = g.set("x"), y = g.set("y");
                  Document d;
                  d.add("R", S::arrow(g, x, unit_set(), "r"));
                  d.add("S", S::arrow(g, unit_set(), y, "s"));
                  return d;
                },
                .holds = [](const Document& d) {
                  auto r = K::arr(d, "R"), s = K::arr(d, "S");
                  need(B::tgt(r) == unit_set() && B::src(s) == unit_set(), "R must end and S start at I");
                  return g_is_equivalence(strange_product_pairing<B>(r, s)).has_value();
                },
                .cap = 3});

  // top replaced by the empty arrow: the hom-category has no terminal object.
  ps.push_back({.id = "cartesian.negative-control",
                .generate = [](Gen& g) -> std::optional<Document> {
                  auto x = K::sized(g, 1, "x"), a = K::sized(g, 1, "a");
                  auto r = S::arrow(g, x, a, "r");
                  const auto empty = empty_arrow<B>(x, a);
                  // R must have something that cannot map into the empty arrow.
                  if (r == empty) return std::nullopt;
                  Document d;
                  d.directives.push_back("check cartesian.precartesian-terminal");
                  d.add("R", r);
                  d.add("top", empty);
                  return d;
                },
                .holds = holds_of(ps, "cartesian.precartesian-terminal"),
                .floor = 2,
                .max_trials = 25,
                .negative = true,
                .fail_detail = "precartesian precondition fails: hom-category has no terminal object"});
  return ps;
}

}  // namespace cartbicat::suites
