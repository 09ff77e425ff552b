#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "finset.hpp"
#include "kernel.hpp"
#include "rel.hpp"
#include "report.hpp"
#include "span.hpp"

namespace cartbicat {

template <Bicategory B>
struct ProductCone {
  FinSet vertex;
  std::vector<FinSet> factors;
  std::vector<Adjunction<B>> legs;  // legs[i] : vertex -> factors[i]
};

template <Bicategory B>
Adjunction<B> map_of(const SetFn& f) {
  return adjunction_of<B>(B::graph(f));
}

template <Bicategory B>
ProductCone<B> product_object(const FinSet& x, const FinSet& y) {
  return {product(x, y), {x, y}, {map_of<B>(proj1(x, y)), map_of<B>(proj2(x, y))}};
}

template <Bicategory B>
ProductCone<B> terminal() {
  return {unit_set(), {}, {}};
}

// Iterated binary products: (...((X1 x X2) x X3) ...) with legs composed
// through the earlier projections.
template <Bicategory B>
ProductCone<B> nary_product(const std::vector<FinSet>& objects) {
  if (objects.empty()) return terminal<B>();
  ProductCone<B> c{objects[0], {objects[0]}, {identity_adjunction<B>(objects[0])}};
  for (std::size_t i = 1; i < objects.size(); ++i) {
    auto bin = product_object<B>(c.vertex, objects[i]);
    ProductCone<B> next{bin.vertex, c.factors, {}};
    next.factors.push_back(objects[i]);
    for (const auto& leg : c.legs) next.legs.push_back(compose_adjunction<B>(leg, bin.legs[0]));
    next.legs.push_back(bin.legs[1]);
    c = std::move(next);
  }
  return c;
}

template <Bicategory B>
struct Pairing {
  Adjunction<B> map;   // <f, g>
  typename B::Cell mu;  // p <f,g> -> f
  typename B::Cell nu;  // r <f,g> -> g
};

template <Bicategory B>
SetFn underlying_function(const typename B::Arr& f) {
  auto fn = B::map_function(f);
  require(fn.has_value(), ErrorKind::not_a_map, "1-cell is not a map");
  return *fn;
}

template <Bicategory B>
Pairing<B> pairing(const Adjunction<B>& f, const Adjunction<B>& g) {
  require(B::src(f.left) == B::src(g.left), ErrorKind::boundary_mismatch, "pairing maps with different sources");
  auto cone = product_object<B>(B::tgt(f.left), B::tgt(g.left));
  auto h = map_of<B>(fn_pair(underlying_function<B>(f.left), underlying_function<B>(g.left)));
  auto mu = B::comparison(B::compose(cone.legs[0].left, h.left), f.left);
  auto nu = B::comparison(B::compose(cone.legs[1].left, h.left), g.left);
  require(mu && nu, ErrorKind::no_solution, "pairing: projection composites do not match");
  return {h, *mu, *nu};
}

// ---- unique 2-cells into a binary product, against the canonical cone

inline SpanCell fill2(const ProductCone<SpanBicat>& cone, const Span& t, const Span& u, const SpanCell& alpha,
                      const SpanCell& beta) {
  require(cone.legs.size() == 2, ErrorKind::boundary_mismatch, "fill2 needs a binary cone");
  const Span& p = cone.legs[0].left;
  const Span& r = cone.legs[1].left;
  require(t.source() == u.source() && t.target() == cone.vertex && u.target() == cone.vertex,
          ErrorKind::boundary_mismatch, "fill2: arrows do not land in the cone vertex");
  Span pt, pu, rt, ru;
  auto f_pt = detail::span_factors(p, t, &pt);
  auto f_pu = detail::span_factors(p, u, &pu);
  auto f_rt = detail::span_factors(r, t, &rt);
  auto f_ru = detail::span_factors(r, u, &ru);
  require(alpha.dom() == pt && alpha.cod() == pu && beta.dom() == rt && beta.cod() == ru,
          ErrorKind::boundary_mismatch, "fill2: 2-cell boundaries differ from the projected arrows");
  std::vector<std::size_t> m(t.apex().size());
  for (std::size_t z = 0; z < m.size(); ++z) {
    // p and r are graphs, so their apex elements are the vertex elements.
    const std::size_t u1 = f_pu.parts[alpha.map()(f_pt.locate(z, t.right()(z)))].first;
    const std::size_t u2 = f_ru.parts[beta.map()(f_rt.locate(z, t.right()(z)))].first;
    require(u1 == u2, ErrorKind::no_solution, "fill2: the two projections disagree");
    m[z] = u1;
  }
  auto g = SpanCell::unchecked(t, u, SetFn(t.apex(), u.apex(), std::move(m)));
  require(g.is_valid(), ErrorKind::no_solution, "fill2: candidate does not commute with the legs");
  require(SpanBicat::whisker_left(p, g) == alpha && SpanBicat::whisker_left(r, g) == beta, ErrorKind::no_solution,
          "fill2: candidate does not restrict to the given projections");
  return g;
}

inline RelCell fill2(const ProductCone<RelBicat>& cone, const Rel& t, const Rel& u, const RelCell& alpha,
                     const RelCell& beta) {
  require(cone.legs.size() == 2, ErrorKind::boundary_mismatch, "fill2 needs a binary cone");
  require(alpha.dom() == rel_after(cone.legs[0].left, t) && alpha.cod() == rel_after(cone.legs[0].left, u) &&
              beta.dom() == rel_after(cone.legs[1].left, t) && beta.cod() == rel_after(cone.legs[1].left, u),
          ErrorKind::boundary_mismatch, "fill2: 2-cell boundaries differ from the projected arrows");
  require(t.subset_of(u), ErrorKind::no_solution, "fill2: no inclusion between the arrows");
  return RelCell::unchecked(t, u);
}

// Exhaustive cross-check: every 2-cell T -> U whose projections are alpha and beta.
template <Bicategory B>
std::vector<typename B::Cell> fill2_candidates(const ProductCone<B>& cone, const typename B::Arr& t,
                                               const typename B::Arr& u, const typename B::Cell& alpha,
                                               const typename B::Cell& beta, std::size_t limit = 100000) {
  std::vector<typename B::Cell> out;
  for (const auto& g : B::all_cells(t, u, limit))
    if (B::whisker_left(cone.legs[0].left, g) == alpha && B::whisker_left(cone.legs[1].left, g) == beta)
      out.push_back(g);
  return out;
}

// ---- arrow action and the cells p', r', t', d'

template <Bicategory B>
struct TimesData {
  Adjunction<B> map;          // f x g
  typename B::Cell p_prime;   // p (f x g) -> f p
  typename B::Cell r_prime;   // r (f x g) -> g r
};

template <Bicategory B>
TimesData<B> times_on_arrows(const Adjunction<B>& f, const Adjunction<B>& g) {
  auto dom = product_object<B>(B::src(f.left), B::src(g.left));
  auto pr = pairing<B>(compose_adjunction<B>(f, dom.legs[0]), compose_adjunction<B>(g, dom.legs[1]));
  return {pr.map, pr.mu, pr.nu};
}

// theta x kappa : F x G -> F' x G' for 2-cells between maps.
template <Bicategory B>
typename B::Cell times_on_cells(const typename B::Cell& theta, const typename B::Cell& kappa) {
  auto f = adjunction_of<B>(B::dom(theta));
  auto f2 = adjunction_of<B>(B::cod(theta));
  auto g = adjunction_of<B>(B::dom(kappa));
  auto g2 = adjunction_of<B>(B::cod(kappa));
  auto a = times_on_arrows<B>(f, g);
  auto b = times_on_arrows<B>(f2, g2);
  auto dom = product_object<B>(B::src(f.left), B::src(g.left));
  auto cod = product_object<B>(B::tgt(f.left), B::tgt(g.left));
  auto alpha = B::vcomp(inverse_or_throw<B>(b.p_prime, "p'"),
                        B::vcomp(B::whisker_right(theta, dom.legs[0].left), a.p_prime));
  auto beta = B::vcomp(inverse_or_throw<B>(b.r_prime, "r'"),
                       B::vcomp(B::whisker_right(kappa, dom.legs[1].left), a.r_prime));
  return fill2(cod, a.map.left, b.map.left, alpha, beta);
}

template <Bicategory B>
Adjunction<B> bang(const FinSet& x) {
  return map_of<B>(SetFn::constant(x, unit_set(), 0));
}

// t'_f : t_A f -> t_X
template <Bicategory B>
typename B::Cell bang_cell(const Adjunction<B>& f) {
  auto t_a = bang<B>(B::tgt(f.left));
  auto t_x = bang<B>(B::src(f.left));
  auto c = B::comparison(B::compose(t_a.left, f.left), t_x.left);
  require(c.has_value(), ErrorKind::no_solution, "t': no comparison cell");
  return *c;
}

template <Bicategory B>
Adjunction<B> diag(const FinSet& x) {
  auto one = identity_adjunction<B>(x);
  return pairing<B>(one, one).map;
}

// d'_f : d_A f -> (f x f) d_X
template <Bicategory B>
typename B::Cell diag_cell(const Adjunction<B>& f) {
  auto d_a = diag<B>(B::tgt(f.left));
  auto d_x = diag<B>(B::src(f.left));
  auto ff = times_on_arrows<B>(f, f);
  auto c = B::comparison(B::compose(d_a.left, f.left), B::compose(ff.map.left, d_x.left));
  require(c.has_value(), ErrorKind::no_solution, "d': no comparison cell");
  return *c;
}

// ---- the product-cone verifier

// Every function A -> P, as a table, for |A| = n.
inline std::vector<SetFn> all_functions(const FinSet& a, const FinSet& p) {
  std::vector<SetFn> out;
  for_each_function(a.size(), p.size(), [&](const std::vector<std::size_t>& t) { out.emplace_back(a, p, t); });
  return out;
}

// Essential surjectivity and full faithfulness of the functor induced by
// the cone legs, over test objects of size <= bound and maps in graph form.
template <Bicategory B>
CheckReport check_product_cone(const ProductCone<B>& cone, std::size_t bound, std::size_t ff_bound = 2) {
  CheckReport rep;
  rep.suite = "mapprod";
  std::vector<SetFn> leg_fns;
  for (const auto& l : cone.legs) leg_fns.push_back(underlying_function<B>(l.left));

  bool es_ok = true;
  std::size_t es_trials = 0;
  std::string es_detail;
  for (std::size_t n = 0; n <= bound && es_ok; ++n) {
    FinSet a = FinSet::range(n, "a");
    // All tuples of functions A -> X_i, as one function A -> product of factors.
    std::vector<std::vector<SetFn>> per_leg;
    for (const auto& x : cone.factors) per_leg.push_back(all_functions(a, x));
    std::vector<std::size_t> idx(per_leg.size(), 0);
    bool empty_family = false;
    for (const auto& v : per_leg) empty_family = empty_family || v.empty();
    if (empty_family) continue;
    while (es_ok) {
      ++es_trials;
      // Search the vertex elementwise for a preimage of the tuple.
      std::vector<std::size_t> h(n);
      for (std::size_t i = 0; i < n && es_ok; ++i) {
        bool found = false;
        for (std::size_t v = 0; v < cone.vertex.size() && !found; ++v) {
          bool all = true;
          for (std::size_t j = 0; j < per_leg.size() && all; ++j) all = leg_fns[j](v) == per_leg[j][idx[j]](i);
          if (all) {
            h[i] = v;
            found = true;
          }
        }
        if (!found) {
          es_ok = false;
          es_detail = "no vertex element over a tuple at |A|=" + std::to_string(n);
        }
      }
      if (es_ok) {
        auto hm = B::graph(SetFn(a, cone.vertex, h));
        for (std::size_t j = 0; j < per_leg.size() && es_ok; ++j) {
          auto c = B::comparison(B::compose(cone.legs[j].left, hm), B::graph(per_leg[j][idx[j]]));
          if (!c || !B::inverse(*c)) {
            es_ok = false;
            es_detail = "projection composite not isomorphic to the given map";
          }
        }
      }
      std::size_t k = idx.size();
      while (k > 0 && ++idx[k - 1] == per_leg[k - 1].size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  rep.record("cone.essentially-surjective", es_ok, es_trials, es_detail);

  bool ff_ok = true;
  std::size_t ff_trials = 0;
  std::string ff_detail;
  for (std::size_t n = 0; n <= std::min(bound, ff_bound) && ff_ok; ++n) {
    FinSet a = FinSet::range(n, "a");
    auto fns = all_functions(a, cone.vertex);
    for (const auto& tf : fns) {
      for (const auto& uf : fns) {
        if (!ff_ok) break;
        ++ff_trials;
        auto t = B::graph(tf);
        auto u = B::graph(uf);
        auto cells = B::all_cells(t, u, 100000);
        // Images of each cell under the legs must be pairwise distinct and
        // exhaust the product of the projected hom-sets.
        std::size_t expected = 1;
        for (const auto& l : cone.legs)
          expected *= B::all_cells(B::compose(l.left, t), B::compose(l.left, u), 100000).size();
        if (cells.size() != expected) {
          ff_ok = false;
          ff_detail = "hom-set sizes differ at |A|=" + std::to_string(n);
          break;
        }
        for (std::size_t i = 0; i < cells.size() && ff_ok; ++i)
          for (std::size_t j = i + 1; j < cells.size() && ff_ok; ++j) {
            bool same = true;
            for (const auto& l : cone.legs)
              same = same && B::whisker_left(l.left, cells[i]) == B::whisker_left(l.left, cells[j]);
            if (same) {
              ff_ok = false;
              ff_detail = "two 2-cells with the same projections";
            }
          }
      }
    }
  }
  rep.record("cone.fully-faithful", ff_ok, ff_trials, ff_detail);
  return rep;
}

}  // namespace cartbicat
