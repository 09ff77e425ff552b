#pragma once

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "hom_products.hpp"
#include "kernel.hpp"
#include "map_products.hpp"

namespace cartbicat {

// (X, R, A)
template <Bicategory B>
struct GObj {
  typename B::Arr cell;

  FinSet src() const { return B::src(cell); }
  FinSet tgt() const { return B::tgt(cell); }
  friend bool operator==(const GObj& a, const GObj& b) { return a.cell == b.cell; }
};

// A square R -> S framed by maps f : X -> Y (top) and u : A -> B (bottom).
template <Bicategory B>
struct GArr {
  GObj<B> dom, cod;
  Adjunction<B> f, u;
  typename B::Cell primary;    // u R -> S f
  typename B::Cell secondary;  // R -> u*(S f)
};

// Equality of squares: same boundary, same maps, same primary 2-cell.
template <Bicategory B>
bool g_equal(const GArr<B>& a, const GArr<B>& b) {
  return a.dom == b.dom && a.cod == b.cod && a.f.left == b.f.left && a.u.left == b.u.left &&
         a.primary == b.primary;
}

template <Bicategory B>
GArr<B> make_garr(const GObj<B>& r, const GObj<B>& s, const Adjunction<B>& f, const Adjunction<B>& u,
                  const typename B::Cell& alpha) {
  require(B::dom(alpha) == B::compose(u.left, r.cell) && B::cod(alpha) == B::compose(s.cell, f.left),
          ErrorKind::boundary_mismatch, "square: primary 2-cell is not u R -> S f");
  return {r, s, f, u, alpha, to_secondary<B>(alpha, u, r.cell)};
}

template <Bicategory B>
GArr<B> make_garr_secondary(const GObj<B>& r, const GObj<B>& s, const Adjunction<B>& f, const Adjunction<B>& u,
                            const typename B::Cell& beta) {
  const auto sf = B::compose(s.cell, f.left);
  require(B::dom(beta) == r.cell && B::cod(beta) == B::compose(u.right, sf), ErrorKind::boundary_mismatch,
          "square: secondary 2-cell is not R -> u*(S f)");
  return {r, s, f, u, to_primary<B>(beta, u, sf), beta};
}

template <Bicategory B>
GArr<B> g_identity(const GObj<B>& r) {
  return {r, r, identity_adjunction<B>(r.src()), identity_adjunction<B>(r.tgt()), B::id_cell(r.cell),
          B::id_cell(r.cell)};
}

// The identity square on a map f, from 1_X to 1_Y.
template <Bicategory B>
GArr<B> iota(const Adjunction<B>& f) {
  GObj<B> one_x{B::identity(B::src(f.left))};
  GObj<B> one_y{B::identity(B::tgt(f.left))};
  return make_garr<B>(one_x, one_y, f, f, B::id_cell(f.left));
}

template <Bicategory B>
const Adjunction<B>& d0(const GArr<B>& a) {
  return a.f;
}

template <Bicategory B>
const Adjunction<B>& d1(const GArr<B>& a) {
  return a.u;
}

// a2 after a1, by pasting the squares side by side.
template <Bicategory B>
GArr<B> g_compose(const GArr<B>& a1, const GArr<B>& a2) {
  using E = TwoCellExpr<B>;
  require(a1.cod == a2.dom, ErrorKind::boundary_mismatch, "square composition: boundaries differ");
  const auto& r = a1.dom.cell;
  const auto& s = a1.cod.cell;
  const auto& t = a2.cod.cell;
  const auto& f = a1.f.left;
  const auto& u = a1.u.left;
  const auto& g = a2.f.left;
  const auto& v = a2.u.left;
  // (v u) R -> v (u R) -> v (S f) -> (v S) f -> (T g) f -> T (g f)
  auto e = E::assoc(v, u, r);
  e = E::vcomp(E::whisker_left(v, E::leaf(a1.primary)), e);
  e = E::vcomp(E::assoc(v, s, f, false), e);
  e = E::vcomp(E::whisker_right(E::leaf(a2.primary), f), e);
  e = E::vcomp(E::assoc(t, g, f), e);
  return make_garr<B>(a1.dom, a2.cod, compose_adjunction<B>(a2.f, a1.f), compose_adjunction<B>(a2.u, a1.u),
                      e.evaluate());
}

// The same composite computed from secondary forms:
// R -> u*(S f) -> u*((v*(T g)) f) -> (u* v*)(T (g f)).
template <Bicategory B>
typename B::Cell g_compose_secondary(const GArr<B>& a1, const GArr<B>& a2) {
  using E = TwoCellExpr<B>;
  require(a1.cod == a2.dom, ErrorKind::boundary_mismatch, "square composition: boundaries differ");
  const auto& t = a2.cod.cell;
  const auto& f = a1.f.left;
  const auto& g = a2.f.left;
  const auto& us = a1.u.right;
  const auto& vs = a2.u.right;
  const auto tg = B::compose(t, g);
  auto e = E::leaf(a1.secondary);
  e = E::vcomp(E::whisker_left(us, E::whisker_right(E::leaf(a2.secondary), f)), e);
  e = E::vcomp(E::whisker_left(us, E::assoc(vs, tg, f)), e);
  e = E::vcomp(E::whisker_left(us, E::whisker_left(vs, E::assoc(t, g, f))), e);
  e = E::vcomp(E::assoc(us, vs, B::compose(t, B::compose(g, f)), false), e);
  return e.evaluate();
}

// Upper square R -> R' over maps (f, u) stacked on a lower square T -> T'
// over (u, v): the square T R -> T' R' over (f, v).
template <Bicategory B>
GArr<B> g_vpaste(const GArr<B>& upper, const GArr<B>& lower) {
  using E = TwoCellExpr<B>;
  require(upper.u.left == lower.f.left, ErrorKind::boundary_mismatch, "vertical pasting: middle maps differ");
  const auto& r = upper.dom.cell;
  const auto& r2 = upper.cod.cell;
  const auto& t = lower.dom.cell;
  const auto& t2 = lower.cod.cell;
  const auto& f = upper.f.left;
  const auto& u = upper.u.left;
  const auto& v = lower.u.left;
  // v (T R) -> (v T) R -> (T' u) R -> T' (u R) -> T' (R' f) -> (T' R') f
  auto e = E::assoc(v, t, r, false);
  e = E::vcomp(E::whisker_right(E::leaf(lower.primary), r), e);
  e = E::vcomp(E::assoc(t2, u, r), e);
  e = E::vcomp(E::whisker_left(t2, E::leaf(upper.primary)), e);
  e = E::vcomp(E::assoc(t2, r2, f, false), e);
  return make_garr<B>(GObj<B>{B::compose(t, r)}, GObj<B>{B::compose(t2, r2)}, upper.f, lower.u, e.evaluate());
}

// (phi : f -> f', psi : u -> u') between parallel squares.
template <Bicategory B>
struct GCell {
  GArr<B> dom, cod;
  typename B::Cell phi;
  typename B::Cell psi;
};

// alpha' . (psi R) = (S phi) . alpha
template <Bicategory B>
bool g_cell_condition(const GCell<B>& c) {
  const auto& r = c.dom.dom.cell;
  const auto& s = c.dom.cod.cell;
  if (!(c.dom.dom == c.cod.dom && c.dom.cod == c.cod.cod)) return false;
  if (!(B::dom(c.phi) == c.dom.f.left && B::cod(c.phi) == c.cod.f.left)) return false;
  if (!(B::dom(c.psi) == c.dom.u.left && B::cod(c.psi) == c.cod.u.left)) return false;
  return B::vcomp(c.cod.primary, B::whisker_right(c.psi, r)) == B::vcomp(B::whisker_left(s, c.phi), c.dom.primary);
}

// (psi^ (S f')) . beta' = (u* (S phi)) . beta
template <Bicategory B>
bool g_cell_condition_secondary(const GCell<B>& c) {
  const auto& s = c.dom.cod.cell;
  const auto conj = conjugate<B>(c.psi, c.dom.u, c.cod.u);
  const auto lhs = B::vcomp(B::whisker_right(conj, B::compose(s, c.cod.f.left)), c.cod.secondary);
  const auto rhs = B::vcomp(B::whisker_left(c.dom.u.right, B::whisker_left(s, c.phi)), c.dom.secondary);
  return lhs == rhs;
}

// outer . inner
template <Bicategory B>
GCell<B> g_vcomp(const GCell<B>& outer, const GCell<B>& inner) {
  require(g_equal(inner.cod, outer.dom), ErrorKind::boundary_mismatch, "2-cell composition: boundaries differ");
  return {inner.dom, outer.cod, B::vcomp(outer.phi, inner.phi), B::vcomp(outer.psi, inner.psi)};
}

// a . c for a square a out of the common codomain of c.
template <Bicategory B>
GCell<B> g_whisker_left(const GArr<B>& a, const GCell<B>& c) {
  return {g_compose(c.dom, a), g_compose(c.cod, a), B::whisker_left(a.f.left, c.phi),
          B::whisker_left(a.u.left, c.psi)};
}

template <Bicategory B>
struct GEquivWitness {
  EquivWitness<B> f, u;
  typename B::Cell primary_inverse;
};

template <Bicategory B>
std::optional<GEquivWitness<B>> g_is_equivalence(const GArr<B>& a) {
  auto fe = B::find_equivalence(a.f.left);
  auto ue = B::find_equivalence(a.u.left);
  auto inv = B::inverse(a.primary);
  if (!fe || !ue || !inv) return std::nullopt;
  return GEquivWitness<B>{*fe, *ue, *inv};
}

// ---- products

template <Bicategory B>
struct GProductWitness {
  GObj<B> left, right;  // R, S
  GObj<B> product;      // R (x) S
  ProductCone<B> top_cone, bottom_cone;  // X x Y, A x B
  typename B::Cell pi, rho;
  GArr<B> proj_p, proj_r;
};

// R (x) S = p*(R p) ^ r*(S r)
template <Bicategory B>
GProductWitness<B> g_tensor(const GObj<B>& r, const GObj<B>& s) {
  GProductWitness<B> w;
  w.left = r;
  w.right = s;
  w.top_cone = product_object<B>(r.src(), s.src());
  w.bottom_cone = product_object<B>(r.tgt(), s.tgt());
  const auto& p_top = w.top_cone.legs[0];
  const auto& r_top = w.top_cone.legs[1];
  const auto& p_bot = w.bottom_cone.legs[0];
  const auto& r_bot = w.bottom_cone.legs[1];
  const auto pr = B::compose(p_bot.right, B::compose(r.cell, p_top.left));
  const auto rs = B::compose(r_bot.right, B::compose(s.cell, r_top.left));
  auto lp = local_product<B>(pr, rs);
  w.product = GObj<B>{lp.product};
  w.pi = lp.proj1;
  w.rho = lp.proj2;
  w.proj_p = make_garr_secondary<B>(w.product, r, p_top, p_bot, w.pi);
  w.proj_r = make_garr_secondary<B>(w.product, s, r_top, r_bot, w.rho);
  return w;
}

template <Bicategory B>
GProductWitness<B> g_tensor(const typename B::Arr& r, const typename B::Arr& s) {
  return g_tensor<B>(GObj<B>{r}, GObj<B>{s});
}

// The unique gamma making (h, gamma, w) a square T -> R (x) S whose
// projections recover aR and aS through the isos mu and nu.
//   mu0 : p h -> f,  mu1 : p w -> u,  nu0 : r h -> g,  nu1 : r w -> v
template <Bicategory B>
GArr<B> g_pair(const GObj<B>& t, const GArr<B>& a_r, const GArr<B>& a_s, const GProductWitness<B>& prod,
               const Adjunction<B>& h, const Adjunction<B>& w, const typename B::Cell& mu0,
               const typename B::Cell& mu1, const typename B::Cell& nu0, const typename B::Cell& nu1) {
  using E = TwoCellExpr<B>;
  using Arr = typename B::Arr;
  using Cell = typename B::Cell;
  require(a_r.dom == t && a_s.dom == t && a_r.cod == prod.left && a_s.cod == prod.right,
          ErrorKind::boundary_mismatch, "pairing squares: boundaries differ from the product");
  const Arr q = B::compose(w.right, B::compose(prod.product.cell, h.left));

  // One side of the transported cone; `leg` is p or r on top and bottom.
  auto side = [&](const Cell& proj, const Adjunction<B>& top_leg, const Adjunction<B>& bot_leg, const Arr& obj,
                  const GArr<B>& a, const Cell& m0, const Cell& m1) -> std::pair<Cell, Cell> {
    const Arr ob_top = B::compose(obj, top_leg.left);  // R p
    const Arr rf = B::compose(obj, a.f.left);           // R f
    Cell q_leg = B::whisker_left(w.right, B::whisker_right(proj, h.left));
    // w*((p*(R p)) h) -> w*(p*((R p) h)) -> w*(p*(R (p h))) -> w*(p*(R f)) -> (w* p*)(R f)
    auto c = E::whisker_left(w.right, E::assoc(bot_leg.right, ob_top, h.left));
    c = E::vcomp(E::whisker_left(w.right, E::whisker_left(bot_leg.right, E::assoc(obj, top_leg.left, h.left))), c);
    c = E::vcomp(E::whisker_left(w.right, E::whisker_left(bot_leg.right, E::whisker_left(obj, E::leaf(m0)))), c);
    c = E::vcomp(E::assoc(w.right, bot_leg.right, rf, false), c);
    const Cell chain = c.evaluate();
    const auto pw = compose_adjunction<B>(bot_leg, w);
    const Cell conj = conjugate<B>(m1, pw, a.u);  // u* -> (p w)* = w* p*
    const Cell target = B::vcomp(B::whisker_right(conj, rf), a.secondary);
    return {q_leg, B::vcomp(inverse_or_throw<B>(chain, "transport chain"), target)};
  };

  auto [q1, phi] = side(prod.pi, prod.top_cone.legs[0], prod.bottom_cone.legs[0], prod.left.cell, a_r, mu0, mu1);
  auto [q2, psi] = side(prod.rho, prod.top_cone.legs[1], prod.bottom_cone.legs[1], prod.right.cell, a_s, nu0, nu1);
  const Cell gamma = B::fill_cone(t.cell, q, {q1, q2}, {phi, psi});
  return make_garr_secondary<B>(t, prod.product, h, w, gamma);
}

// Pairing with (h, w) the canonical pairings of the maps.
template <Bicategory B>
GArr<B> g_pair(const GArr<B>& a_r, const GArr<B>& a_s, const GProductWitness<B>& prod) {
  auto h = pairing<B>(a_r.f, a_s.f);
  auto w = pairing<B>(a_r.u, a_s.u);
  return g_pair<B>(a_r.dom, a_r, a_s, prod, h.map, w.map, h.mu, w.mu, h.nu, w.nu);
}

// Every gamma : T -> w*((R (x) S) h) satisfying the two transported
// projection equations, by enumeration. Used to cross-check g_pair.
template <Bicategory B>
std::size_t g_pair_solution_count(const GArr<B>& a_r, const GArr<B>& a_s, const GProductWitness<B>& prod,
                                  const GArr<B>& candidate_frame, std::size_t limit = 200000) {
  std::size_t n = 0;
  const auto q = B::compose(candidate_frame.u.right, B::compose(prod.product.cell, candidate_frame.f.left));
  for (const auto& g : B::all_cells(a_r.dom.cell, q, limit)) {
    auto a = make_garr_secondary<B>(a_r.dom, prod.product, candidate_frame.f, candidate_frame.u, g);
    auto lp = g_compose(a, prod.proj_p);
    auto lr = g_compose(a, prod.proj_r);
    // Compare through the canonical comparison cells of the maps.
    auto mu0 = B::comparison(lp.f.left, a_r.f.left);
    auto mu1 = B::comparison(lp.u.left, a_r.u.left);
    auto nu0 = B::comparison(lr.f.left, a_s.f.left);
    auto nu1 = B::comparison(lr.u.left, a_s.u.left);
    if (!mu0 || !mu1 || !nu0 || !nu1) continue;
    GCell<B> cp{lp, a_r, *mu0, *mu1};
    GCell<B> cr{lr, a_s, *nu0, *nu1};
    if (g_cell_condition(cp) && g_cell_condition(cr)) ++n;
  }
  return n;
}

// The 2-cell between squares into R (x) S with given projections.
template <Bicategory B>
GCell<B> g_fill_cell(const GProductWitness<B>& prod, const GArr<B>& a, const GArr<B>& b, const GCell<B>& c_p,
                     const GCell<B>& c_r) {
  auto phi = fill2(prod.top_cone, a.f.left, b.f.left, c_p.phi, c_r.phi);
  auto psi = fill2(prod.bottom_cone, a.u.left, b.u.left, c_p.psi, c_r.psi);
  return {a, b, phi, psi};
}

// ---- terminal object and the units t_R, d_R

template <Bicategory B>
GObj<B> g_terminal() {
  return GObj<B>{B::top(unit_set(), unit_set())};
}

template <Bicategory B>
GArr<B> g_bang(const GObj<B>& r) {
  auto t_x = bang<B>(r.src());
  auto t_a = bang<B>(r.tgt());
  auto top = g_terminal<B>();
  const auto q = B::compose(t_a.right, B::compose(top.cell, t_x.left));
  return make_garr_secondary<B>(r, top, t_x, t_a, B::fill_cone(r.cell, q, {}, {}));
}

// R ^ S -> d*((R (x) S) d)
template <Bicategory B>
typename B::Cell dunit_iso(const typename B::Arr& r, const typename B::Arr& s) {
  using E = TwoCellExpr<B>;
  using Arr = typename B::Arr;
  using Cell = typename B::Cell;
  const auto prod = g_tensor<B>(r, s);
  const auto x = B::src(r);
  const auto a = B::tgt(r);
  const auto dx = pairing<B>(identity_adjunction<B>(x), identity_adjunction<B>(x));
  const auto da = pairing<B>(identity_adjunction<B>(a), identity_adjunction<B>(a));
  const Arr q = B::compose(da.map.right, B::compose(prod.product.cell, dx.map.left));

  auto side = [&](const Cell& proj, const Adjunction<B>& top_leg, const Adjunction<B>& bot_leg, const Arr& obj,
                  const Cell& mx, const Cell& ma, const Cell& local) -> std::pair<Cell, Cell> {
    Cell q_leg = B::whisker_left(da.map.right, B::whisker_right(proj, dx.map.left));
    const Arr ob_top = B::compose(obj, top_leg.left);
    // d*((p*(R p)) d) -> d*(p*((R p) d)) -> d*(p*(R (p d))) -> d*(p* R) -> (d* p*) R -> R
    auto c = E::whisker_left(da.map.right, E::assoc(bot_leg.right, ob_top, dx.map.left));
    c = E::vcomp(E::whisker_left(da.map.right, E::whisker_left(bot_leg.right, E::assoc(obj, top_leg.left, dx.map.left))),
                 c);
    c = E::vcomp(E::whisker_left(da.map.right, E::whisker_left(bot_leg.right, E::whisker_left(obj, E::leaf(mx)))), c);
    c = E::vcomp(E::assoc(da.map.right, bot_leg.right, obj, false), c);
    const auto pd = compose_adjunction<B>(bot_leg, da.map);
    const Cell conj = conjugate<B>(ma, pd, identity_adjunction<B>(B::tgt(obj)));  // 1 -> d* p*
    c = E::vcomp(E::whisker_right(E::leaf(inverse_or_throw<B>(conj, "unit conjugate")), obj), c);
    const Cell chain = c.evaluate();
    return {q_leg, B::vcomp(inverse_or_throw<B>(chain, "diagonal chain"), local)};
  };
  auto [q1, phi] = side(prod.pi, prod.top_cone.legs[0], prod.bottom_cone.legs[0], r, dx.mu, da.mu, B::meet_p(r, s));
  auto [q2, psi] = side(prod.rho, prod.top_cone.legs[1], prod.bottom_cone.legs[1], s, dx.nu, da.nu, B::meet_r(r, s));
  return B::fill_cone(B::meet(r, s), q, {q1, q2}, {phi, psi});
}

template <Bicategory B>
GArr<B> g_diag(const GObj<B>& r) {
  const auto prod = g_tensor<B>(r, r);
  const auto dx = diag<B>(r.src());
  const auto da = diag<B>(r.tgt());
  return make_garr_secondary<B>(r, prod.product, dx, da, B::vcomp(dunit_iso<B>(r.cell, r.cell), delta<B>(r.cell)));
}

}  // namespace cartbicat
