#pragma once

#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "groth.hpp"
#include "hom_products.hpp"
#include "kernel.hpp"
#include "map_products.hpp"
#include "report.hpp"

namespace cartbicat {

// alpha (x) beta = (p* alpha p) ^ (r* beta r)
template <Bicategory B>
typename B::Cell tensor_2cells(const typename B::Cell& alpha, const typename B::Cell& beta) {
  const auto top = product_object<B>(B::src(B::dom(alpha)), B::src(B::dom(beta)));
  const auto bot = product_object<B>(B::tgt(B::dom(alpha)), B::tgt(B::dom(beta)));
  require(B::src(B::cod(alpha)) == top.factors[0] && B::src(B::cod(beta)) == top.factors[1],
          ErrorKind::boundary_mismatch, "tensor of 2-cells: boundaries differ");
  auto pa = B::whisker_left(bot.legs[0].right, B::whisker_right(alpha, top.legs[0].left));
  auto rb = B::whisker_left(bot.legs[1].right, B::whisker_right(beta, top.legs[1].left));
  return meet_cells<B>(pa, rb);
}

// The square (1, alpha, 1) : R -> R' for a 2-cell alpha.
template <Bicategory B>
GArr<B> g_of_cell(const typename B::Cell& alpha) {
  const auto r = B::dom(alpha);
  return make_garr<B>(GObj<B>{r}, GObj<B>{B::cod(alpha)}, identity_adjunction<B>(B::src(r)),
                      identity_adjunction<B>(B::tgt(r)), alpha);
}

// Pairing through identity maps: both projections are squares framed by p
// (resp. r) on top and bottom.
template <Bicategory B>
typename B::Cell pair_over_identities(const GObj<B>& t, const GArr<B>& a_r, const GArr<B>& a_s,
                                      const GProductWitness<B>& prod) {
  const auto one_top = identity_adjunction<B>(prod.top_cone.vertex);
  const auto one_bot = identity_adjunction<B>(prod.bottom_cone.vertex);
  return g_pair<B>(t, a_r, a_s, prod, one_top, one_bot, B::id_cell(prod.top_cone.legs[0].left),
                   B::id_cell(prod.bottom_cone.legs[0].left), B::id_cell(prod.top_cone.legs[1].left),
                   B::id_cell(prod.bottom_cone.legs[1].left))
      .secondary;
}

// (x)o : 1_{X x Y} -> 1_X (x) 1_Y
template <Bicategory B>
typename B::Cell tensor_unit_cell(const FinSet& x, const FinSet& y) {
  const auto prod = g_tensor<B>(B::identity(x), B::identity(y));
  const GObj<B> one{B::identity(product(x, y))};
  const auto& p = prod.top_cone.legs[0];
  const auto& r = prod.top_cone.legs[1];
  auto a_r = make_garr<B>(one, prod.left, p, p, B::id_cell(p.left));
  auto a_s = make_garr<B>(one, prod.right, r, r, B::id_cell(r.left));
  return pair_over_identities<B>(one, a_r, a_s, prod);
}

// (x)~ : (T (x) U)(R (x) S) -> (T R) (x) (U S)
template <Bicategory B>
typename B::Cell tensor_comp_cell(const typename B::Arr& r, const typename B::Arr& s, const typename B::Arr& t,
                                  const typename B::Arr& u) {
  const auto rs = g_tensor<B>(r, s);
  const auto tu = g_tensor<B>(t, u);
  const auto target = g_tensor<B>(B::compose(t, r), B::compose(u, s));
  const GObj<B> dom{B::compose(tu.product.cell, rs.product.cell)};
  auto vp = g_vpaste(rs.proj_p, tu.proj_p);
  auto vr = g_vpaste(rs.proj_r, tu.proj_r);
  return pair_over_identities<B>(dom, vp, vr, target);
}

template <Bicategory B>
struct UnitFunctorCells {
  typename B::Cell unit;  // I o : 1_I -> top
  typename B::Cell mult;  // I~ : top top -> top
};

template <Bicategory B>
UnitFunctorCells<B> unit_functor_cells() {
  const auto i = unit_set();
  const auto top = B::top(i, i);
  return {B::to_top(B::identity(i)), B::to_top(B::compose(top, top))};
}

// ---- lax functor axioms

template <Bicategory B>
struct LaxAxiomSides {
  typename B::Cell lhs, rhs;
};

// Associativity for R, S : X -> A, Y -> B; T, U : A -> L, B -> M;
// V, W : L -> N, M -> P.
template <Bicategory B>
LaxAxiomSides<B> lax_assoc_sides(const typename B::Arr& r, const typename B::Arr& s, const typename B::Arr& t,
                                 const typename B::Arr& u, const typename B::Arr& v, const typename B::Arr& w) {
  const auto rs = g_tensor<B>(r, s).product.cell;
  const auto tu = g_tensor<B>(t, u).product.cell;
  const auto vw = g_tensor<B>(v, w).product.cell;
  const auto tr = B::compose(t, r);
  const auto us = B::compose(u, s);
  const auto vt = B::compose(v, t);
  const auto wu = B::compose(w, u);
  auto lhs = vcomp_all<B>({tensor_comp_cell<B>(tr, us, v, w), B::whisker_left(vw, tensor_comp_cell<B>(r, s, t, u)),
                           B::assoc(vw, tu, rs)});
  auto rhs = vcomp_all<B>({tensor_2cells<B>(B::assoc(v, t, r), B::assoc(w, u, s)), tensor_comp_cell<B>(r, s, vt, wu),
                           B::whisker_right(tensor_comp_cell<B>(t, u, v, w), rs)});
  return {lhs, rhs};
}

// The two unit axioms for R : X -> A, S : Y -> B; both sides should be the identity.
template <Bicategory B>
std::pair<typename B::Cell, typename B::Cell> lax_unit_sides(const typename B::Arr& r, const typename B::Arr& s) {
  const auto rs = g_tensor<B>(r, s).product.cell;
  const auto x = B::src(r), y = B::src(s), a = B::tgt(r), b = B::tgt(s);
  auto left = B::vcomp(tensor_comp_cell<B>(B::identity(x), B::identity(y), r, s),
                       B::whisker_left(rs, tensor_unit_cell<B>(x, y)));
  auto right = B::vcomp(tensor_comp_cell<B>(r, s, B::identity(a), B::identity(b)),
                        B::whisker_right(tensor_unit_cell<B>(a, b), rs));
  return {left, right};
}

// Naturality of (x)~ in alpha : R -> R', beta : S -> S', gamma : T -> T', delta : U -> U'.
template <Bicategory B>
LaxAxiomSides<B> lax_naturality_sides(const typename B::Cell& alpha, const typename B::Cell& beta,
                                      const typename B::Cell& gamma, const typename B::Cell& delta) {
  auto lhs = B::vcomp(tensor_comp_cell<B>(B::cod(alpha), B::cod(beta), B::cod(gamma), B::cod(delta)),
                      hcomp<B>(tensor_2cells<B>(gamma, delta), tensor_2cells<B>(alpha, beta)));
  auto rhs = B::vcomp(tensor_2cells<B>(hcomp<B>(gamma, alpha), hcomp<B>(delta, beta)),
                      tensor_comp_cell<B>(B::dom(alpha), B::dom(beta), B::dom(gamma), B::dom(delta)));
  return {lhs, rhs};
}

// ---- the lax natural transformation m

// m'_{f,g} : f x g -> f (x) g
template <Bicategory B>
typename B::Cell m_cell(const Adjunction<B>& f, const Adjunction<B>& g) {
  const auto fg = times_on_arrows<B>(f, g);
  const auto prod = g_tensor<B>(f.left, g.left);
  const GObj<B> t{fg.map.left};
  auto a_r = make_garr<B>(t, prod.left, prod.top_cone.legs[0], prod.bottom_cone.legs[0], fg.p_prime);
  auto a_s = make_garr<B>(t, prod.right, prod.top_cone.legs[1], prod.bottom_cone.legs[1], fg.r_prime);
  return pair_over_identities<B>(t, a_r, a_s, prod);
}

// m'_{1,1} . x o = (x)o, with x o : 1 -> 1 x 1 the comparison.
template <Bicategory B>
bool check_m_unit(const FinSet& x, const FinSet& y) {
  const auto ix = identity_adjunction<B>(x);
  const auto iy = identity_adjunction<B>(y);
  const auto xx = times_on_arrows<B>(ix, iy);
  auto times_o = B::comparison(B::identity(product(x, y)), xx.map.left);
  if (!times_o) return false;
  return B::vcomp(m_cell<B>(ix, iy), *times_o) == tensor_unit_cell<B>(x, y);
}

// m'_{hf,kg} . x~ = (x)~ . (m'_{h,k} * m'_{f,g})
template <Bicategory B>
bool check_m_binary(const Adjunction<B>& f, const Adjunction<B>& g, const Adjunction<B>& h, const Adjunction<B>& k) {
  const auto fg = times_on_arrows<B>(f, g).map;
  const auto hk = times_on_arrows<B>(h, k).map;
  const auto hf = compose_adjunction<B>(h, f);
  const auto kg = compose_adjunction<B>(k, g);
  const auto hfkg = times_on_arrows<B>(hf, kg).map;
  auto times_t = B::comparison(B::compose(hk.left, fg.left), hfkg.left);
  if (!times_t) return false;
  auto lhs = B::vcomp(m_cell<B>(hf, kg), *times_t);
  auto rhs = B::vcomp(tensor_comp_cell<B>(f.left, g.left, h.left, k.left), hcomp<B>(m_cell<B>(h, k), m_cell<B>(f, g)));
  return lhs == rhs;
}

// Naturality of m' in theta : f -> f', kappa : g -> g'.
template <Bicategory B>
bool check_m_natural(const typename B::Cell& theta, const typename B::Cell& kappa) {
  auto f = adjunction_of<B>(B::dom(theta));
  auto f2 = adjunction_of<B>(B::cod(theta));
  auto g = adjunction_of<B>(B::dom(kappa));
  auto g2 = adjunction_of<B>(B::cod(kappa));
  return B::vcomp(tensor_2cells<B>(theta, kappa), m_cell<B>(f, g)) ==
         B::vcomp(m_cell<B>(f2, g2), times_on_cells<B>(theta, kappa));
}

// The equations for u compare parallel 2-cells into top; they hold iff
// 2-cells into top are unique.
template <Bicategory B>
bool check_u_equations(const typename B::Arr& r) {
  const auto cells = B::all_cells(r, B::top(B::src(r), B::tgt(r)), 100000);
  return cells.size() == 1;
}

// ---- special invertibles

// p~_{R,1_Y} : p (R (x) 1_Y) -> R p
template <Bicategory B>
typename B::Cell spiso_p(const typename B::Arr& r, const FinSet& y) {
  return g_tensor<B>(r, B::identity(y)).proj_p.primary;
}

// r~_{1_X,S} : r (1_X (x) S) -> S r
template <Bicategory B>
typename B::Cell spiso_r(const FinSet& x, const typename B::Arr& s) {
  return g_tensor<B>(B::identity(x), s).proj_r.primary;
}

// Mate of p~_{R,1_Y} : (R (x) 1_Y) p* -> p* R
template <Bicategory B>
typename B::Cell prebeck_p(const typename B::Arr& r, const FinSet& y) {
  const auto prod = g_tensor<B>(r, B::identity(y));
  return double_mate<B>(prod.proj_p.primary, prod.bottom_cone.legs[0], prod.product.cell, r, prod.top_cone.legs[0]);
}

// Mate of r~_{1_X,S} : (1_X (x) S) r* -> r* S
template <Bicategory B>
typename B::Cell prebeck_r(const FinSet& x, const typename B::Arr& s) {
  const auto prod = g_tensor<B>(B::identity(x), s);
  return double_mate<B>(prod.proj_r.primary, prod.bottom_cone.legs[1], prod.product.cell, s, prod.top_cone.legs[1]);
}

// xi : (R (x) S)(f x g) -> R f (x) S g
template <Bicategory B>
typename B::Cell xi_iso(const typename B::Arr& r, const typename B::Arr& s, const Adjunction<B>& f,
                        const Adjunction<B>& g) {
  const auto rs = g_tensor<B>(r, s);
  const auto fg = times_on_arrows<B>(f, g);
  const auto lm = product_object<B>(B::src(f.left), B::src(g.left));
  const GObj<B> ofg{fg.map.left};
  auto up = make_garr<B>(ofg, GObj<B>{f.left}, lm.legs[0], rs.top_cone.legs[0], fg.p_prime);
  auto ur = make_garr<B>(ofg, GObj<B>{g.left}, lm.legs[1], rs.top_cone.legs[1], fg.r_prime);
  auto vp = g_vpaste(up, rs.proj_p);
  auto vr = g_vpaste(ur, rs.proj_r);
  const auto target = g_tensor<B>(B::compose(r, f.left), B::compose(s, g.left));
  return pair_over_identities<B>(GObj<B>{B::compose(rs.product.cell, fg.map.left)}, vp, vr, target);
}

// (u x v)*(R (x) S) -> u* R (x) v* S
template <Bicategory B>
typename B::Cell xi_star_iso(const typename B::Arr& r, const typename B::Arr& s, const Adjunction<B>& u,
                             const Adjunction<B>& v) {
  const auto rs = g_tensor<B>(r, s);
  const auto uv = times_on_arrows<B>(u, v);
  const auto zw = product_object<B>(B::src(u.left), B::src(v.left));
  const GObj<B> ouv{uv.map.right};
  // p (u x v)* -> u* p, the mate of p'^-1.
  auto side = [&](const typename B::Cell& prime, const Adjunction<B>& leg, const Adjunction<B>& top_leg,
                  const Adjunction<B>& comp) {
    const auto inv = inverse_or_throw<B>(prime, "p'");
    auto cell = double_mate<B>(inv, comp, leg.left, top_leg.left, uv.map);
    return make_garr<B>(ouv, GObj<B>{comp.right}, top_leg, leg, cell);
  };
  auto lp = side(uv.p_prime, zw.legs[0], rs.bottom_cone.legs[0], u);
  auto lr = side(uv.r_prime, zw.legs[1], rs.bottom_cone.legs[1], v);
  auto vp = g_vpaste(rs.proj_p, lp);
  auto vr = g_vpaste(rs.proj_r, lr);
  const auto target = g_tensor<B>(B::compose(u.right, r), B::compose(v.right, s));
  return pair_over_identities<B>(GObj<B>{B::compose(uv.map.right, rs.product.cell)}, vp, vr, target);
}

// For R : X -> I and S : I -> Y, r((R (x) S) p*) -> S R.
template <Bicategory B>
typename B::Cell strange_iso(const typename B::Arr& r, const typename B::Arr& s) {
  using E = TwoCellExpr<B>;
  const auto i = unit_set();
  require(B::tgt(r) == i && B::src(s) == i, ErrorKind::boundary_mismatch, "strange iso: R must end and S start at I");
  const auto one = B::identity(i);
  const auto rs = g_tensor<B>(r, s);
  const auto& p_xi = rs.top_cone.legs[0];
  const auto& r_iy = rs.bottom_cone.legs[1];
  const auto r1 = g_tensor<B>(r, one);
  const auto one_s = g_tensor<B>(one, s);
  const auto ii = product_object<B>(i, i);
  const auto& p_ii = ii.legs[0];
  const auto& r_ii = ii.legs[1];

  const auto comp = tensor_comp_cell<B>(r, one, one, s);  // (1 (x) S)(R (x) 1) -> R (x) S
  const auto comp_inv = inverse_or_throw<B>(comp, "(x)~");
  const auto pb = prebeck_p<B>(r, i);  // (R (x) 1) p* -> p*_{I,I} R
  const auto rt = one_s.proj_r.primary;  // r (1 (x) S) -> S r
  const auto pr = B::compose(p_ii.right, r);
  const auto tau = B::to_top(B::compose(r_ii.left, p_ii.right));

  auto e = E::whisker_left(r_iy.left, E::whisker_right(E::leaf(comp_inv), p_xi.right));
  e = E::vcomp(E::whisker_left(r_iy.left, E::assoc(one_s.product.cell, r1.product.cell, p_xi.right)), e);
  e = E::vcomp(E::whisker_left(r_iy.left, E::whisker_left(one_s.product.cell, E::leaf(pb))), e);
  e = E::vcomp(E::assoc(r_iy.left, one_s.product.cell, pr, false), e);
  e = E::vcomp(E::whisker_right(E::leaf(rt), pr), e);
  e = E::vcomp(E::assoc(s, r_ii.left, pr), e);
  e = E::vcomp(E::whisker_left(s, E::assoc(r_ii.left, p_ii.right, r, false)), e);
  e = E::vcomp(E::whisker_left(s, E::whisker_right(E::leaf(tau), r)), e);
  return e.evaluate();
}

// r((R (x) S) p*), the left-hand side of the strange iso.
template <Bicategory B>
typename B::Arr strange_lhs(const typename B::Arr& r, const typename B::Arr& s) {
  const auto rs = g_tensor<B>(r, s);
  return B::compose(rs.bottom_cone.legs[1].left, B::compose(rs.product.cell, rs.top_cone.legs[0].right));
}

// S R with the squares SR -> R over (1, t) and SR -> S over (t, 1), paired
// into R (x) S; the result should be a G-equivalence.
template <Bicategory B>
GArr<B> strange_product_pairing(const typename B::Arr& r, const typename B::Arr& s) {
  using E = TwoCellExpr<B>;
  const auto x = B::src(r);
  const auto y = B::tgt(s);
  const auto sr = B::compose(s, r);
  const auto t_x = bang<B>(x);
  const auto t_y = bang<B>(y);
  const GObj<B> osr{sr};
  // t_Y (S R) -> (t_Y S) R -> top R = R
  auto c1 = E::assoc(t_y.left, s, r, false);
  c1 = E::vcomp(E::whisker_right(E::leaf(B::to_top(B::compose(t_y.left, s))), r), c1);
  auto a1 = make_garr<B>(osr, GObj<B>{r}, identity_adjunction<B>(x), t_y, c1.evaluate());
  // S R -> S t_X
  auto c2 = B::whisker_left(s, B::fill_cone(r, t_x.left, {}, {}));
  auto a2 = make_garr<B>(osr, GObj<B>{s}, t_x, identity_adjunction<B>(y), c2);
  return g_pair<B>(a1, a2, g_tensor<B>(r, s));
}

}  // namespace cartbicat
