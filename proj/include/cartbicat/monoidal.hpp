#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartesian.hpp"
#include "error.hpp"
#include "groth.hpp"
#include "kernel.hpp"
#include "map_products.hpp"

namespace cartbicat {

// X1 x (X2 x (... x Xn)) with legs p, p r, p r r, ..., r ... r.
template <Bicategory B>
ProductCone<B> right_nested_product(const std::vector<FinSet>& objects) {
  if (objects.empty()) return terminal<B>();
  if (objects.size() == 1) return {objects[0], {objects[0]}, {identity_adjunction<B>(objects[0])}};
  auto rest = right_nested_product<B>(std::vector<FinSet>(objects.begin() + 1, objects.end()));
  auto bin = product_object<B>(objects[0], rest.vertex);
  ProductCone<B> c{bin.vertex, objects, {bin.legs[0]}};
  for (const auto& leg : rest.legs) c.legs.push_back(compose_adjunction<B>(leg, bin.legs[1]));
  return c;
}

// e_n (... (e_2 e_1)), for a nonempty path e_1, ..., e_n.
template <Bicategory B>
typename B::Arr compose_path(const std::vector<typename B::Arr>& path) {
  require(!path.empty(), ErrorKind::boundary_mismatch, "empty path");
  auto acc = path[0];
  for (std::size_t i = 1; i < path.size(); ++i) acc = B::compose(path[i], acc);
  return acc;
}

// Unique fill T -> U through a right-nested cone, from cells c_i T -> c_i U.
template <Bicategory B>
typename B::Cell fill_right_nested(const std::vector<FinSet>& objects, const typename B::Arr& t,
                                   const typename B::Arr& u, const std::vector<typename B::Cell>& thetas) {
  require(objects.size() == thetas.size() && !objects.empty(), ErrorKind::boundary_mismatch,
          "nested fill: one cell per factor");
  if (objects.size() == 1) return thetas[0];
  const std::vector<FinSet> rest_objs(objects.begin() + 1, objects.end());
  const auto rest = right_nested_product<B>(rest_objs);
  const auto bin = product_object<B>(objects[0], rest.vertex);
  const auto& r = bin.legs[1].left;
  const auto rt = B::compose(r, t);
  const auto ru = B::compose(r, u);
  std::vector<typename B::Cell> inner;
  for (std::size_t j = 0; j < rest.legs.size(); ++j) {
    const auto& c = rest.legs[j].left;
    inner.push_back(vcomp_all<B>({B::assoc(c, r, u), thetas[j + 1], B::assoc_inv(c, r, t)}));
  }
  const auto rho = fill_right_nested<B>(rest_objs, rt, ru, inner);
  return fill2(bin, t, u, thetas[0], rho);
}

// ---- a, l, r

template <Bicategory B>
struct AssocData {
  Adjunction<B> a;  // (X x Y) x Z -> X x (Y x Z)
  ProductCone<B> dom_cone, cod_cone;
  std::vector<typename B::Cell> mu;  // c_i a -> q_i
};

template <Bicategory B>
AssocData<B> assoc_data(const FinSet& x, const FinSet& y, const FinSet& z) {
  AssocData<B> d;
  d.dom_cone = nary_product<B>({x, y, z});
  d.cod_cone = right_nested_product<B>({x, y, z});
  const auto& q = d.dom_cone.legs;
  const auto inner = pairing<B>(q[1], q[2]);
  const auto outer = pairing<B>(q[0], inner.map);
  d.a = outer.map;
  const auto yz = product_object<B>(y, z);
  const auto r_x = product_object<B>(x, yz.vertex).legs[1].left;
  d.mu.push_back(outer.mu);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& leg = yz.legs[k].left;
    const auto& last = k == 0 ? inner.mu : inner.nu;
    d.mu.push_back(vcomp_all<B>({last, B::whisker_left(leg, outer.nu), B::assoc(leg, r_x, d.a.left)}));
  }
  return d;
}

template <Bicategory B>
struct Unitors {
  Adjunction<B> l;  // I x X -> X
  Adjunction<B> r;  // X -> X x I
};

template <Bicategory B>
Unitors<B> unitors(const FinSet& x) {
  const auto ix = product_object<B>(unit_set(), x);
  return {ix.legs[1], pairing<B>(identity_adjunction<B>(x), bang<B>(x)).map};
}

// ---- s and sigma

template <Bicategory B>
struct Braid {
  Adjunction<B> s;      // X x Y -> Y x X
  typename B::Cell mu;  // p s -> r
  typename B::Cell nu;  // r s -> p
};

template <Bicategory B>
Braid<B> braid(const FinSet& x, const FinSet& y) {
  const auto c = product_object<B>(x, y);
  const auto pr = pairing<B>(c.legs[1], c.legs[0]);
  return {pr.map, pr.mu, pr.nu};
}

template <Bicategory B>
struct Syllepsis {
  typename B::Cell sigma;  // 1 -> s_{Y,X} s_{X,Y}
  typename B::Cell phi;    // p -> p (s s)
  typename B::Cell psi;    // r -> r (s s)
};

template <Bicategory B>
Syllepsis<B> syllepsis(const FinSet& x, const FinSet& y) {
  const auto c = product_object<B>(x, y);
  const auto& p = c.legs[0].left;
  const auto& r = c.legs[1].left;
  const auto sxy = braid<B>(x, y);
  const auto syx = braid<B>(y, x);
  const auto ss = B::compose(syx.s.left, sxy.s.left);
  auto inv = [](const typename B::Cell& a) { return inverse_or_throw<B>(a, "braid projection"); };
  Syllepsis<B> out;
  out.phi = vcomp_all<B>({B::assoc(p, syx.s.left, sxy.s.left), B::whisker_right(inv(syx.mu), sxy.s.left), inv(sxy.nu)});
  out.psi = vcomp_all<B>({B::assoc(r, syx.s.left, sxy.s.left), B::whisker_right(inv(syx.nu), sxy.s.left), inv(sxy.mu)});
  out.sigma = fill2(c, B::identity(c.vertex), ss, out.phi, out.psi);
  return out;
}

template <Bicategory B>
struct SymmetrySides {
  typename B::Cell lhs, rhs;  // s_{X,Y} sigma_{X,Y} and (sigma_{Y,X} s_{X,Y}) with the associator
};

// With `sigma_yx` given, that cell replaces sigma_{Y,X} (negative controls).
template <Bicategory B>
SymmetrySides<B> symmetry_sides(const FinSet& x, const FinSet& y,
                                const std::optional<typename B::Cell>& sigma_yx = std::nullopt) {
  const auto sxy = braid<B>(x, y).s.left;
  const auto syx = braid<B>(y, x).s.left;
  const auto sig_xy = syllepsis<B>(x, y).sigma;
  const auto sig_yx = sigma_yx ? *sigma_yx : syllepsis<B>(y, x).sigma;
  return {B::whisker_left(sxy, sig_xy), B::vcomp(B::assoc(sxy, syx, sxy), B::whisker_right(sig_yx, sxy))};
}

// ---- pi

template <Bicategory B>
struct PiData {
  std::vector<FinSet> objects;
  typename B::Arr m, n;
  ProductCone<B> source_cone, target_cone;
  std::vector<typename B::Cell> alpha, beta;  // c_i m -> b_i, c_i n -> b_i
  typename B::Cell pi;
};

template <Bicategory B>
Adjunction<B> times_identity(const Adjunction<B>& f, const FinSet& w) {
  return times_on_arrows<B>(f, identity_adjunction<B>(w)).map;
}

template <Bicategory B>
Adjunction<B> identity_times(const FinSet& x, const Adjunction<B>& f) {
  return times_on_arrows<B>(identity_adjunction<B>(x), f).map;
}

template <Bicategory B>
Adjunction<B> assoc_map(const FinSet& x, const FinSet& y, const FinSet& z) {
  return assoc_data<B>(x, y, z).a;
}

template <Bicategory B>
std::vector<typename B::Arr> pentagon_m_path(const FinSet& x, const FinSet& y, const FinSet& z, const FinSet& w) {
  return {times_identity<B>(assoc_map<B>(x, y, z), w).left, assoc_map<B>(x, product(y, z), w).left,
          identity_times<B>(x, assoc_map<B>(y, z, w)).left};
}

template <Bicategory B>
std::vector<typename B::Arr> pentagon_n_path(const FinSet& x, const FinSet& y, const FinSet& z, const FinSet& w) {
  return {assoc_map<B>(product(x, y), z, w).left, assoc_map<B>(x, y, product(z, w)).left};
}

template <Bicategory B>
PiData<B> pi(const FinSet& x, const FinSet& y, const FinSet& z, const FinSet& w) {
  PiData<B> d;
  d.objects = {x, y, z, w};
  d.m = compose_path<B>(pentagon_m_path<B>(x, y, z, w));
  d.n = compose_path<B>(pentagon_n_path<B>(x, y, z, w));
  d.source_cone = nary_product<B>(d.objects);
  d.target_cone = right_nested_product<B>(d.objects);
  std::vector<typename B::Cell> thetas;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& c = d.target_cone.legs[i].left;
    const auto& b = d.source_cone.legs[i].left;
    auto al = B::comparison(B::compose(c, d.m), b);
    auto be = B::comparison(B::compose(c, d.n), b);
    require(al && be, ErrorKind::no_solution, "pi: projection comparison missing");
    d.alpha.push_back(*al);
    d.beta.push_back(*be);
    thetas.push_back(B::vcomp(inverse_or_throw<B>(*be, "beta"), *al));
  }
  d.pi = fill_right_nested<B>(d.objects, d.m, d.n, thetas);
  return d;
}

// beta_i . (c_i pi) = alpha_i for every i.
template <Bicategory B>
bool pi_equations_hold(const PiData<B>& d, const typename B::Cell& candidate) {
  for (std::size_t i = 0; i < d.alpha.size(); ++i)
    if (!(B::vcomp(d.beta[i], B::whisker_left(d.target_cone.legs[i].left, candidate)) == d.alpha[i])) return false;
  return true;
}

// ---- the pentagon axiom, componentwise

// cp(pre ++ mid) -> cp(mid) cp(pre), for nonempty pre and mid.
template <Bicategory B>
typename B::Cell split_path(const std::vector<typename B::Arr>& pre, const std::vector<typename B::Arr>& mid) {
  const auto p = compose_path<B>(pre);
  std::vector<typename B::Arr> acc = pre;
  acc.push_back(mid[0]);
  auto c = B::id_cell(compose_path<B>(acc));
  for (std::size_t k = 1; k < mid.size(); ++k) {
    const std::vector<typename B::Arr> mid0(mid.begin(), mid.begin() + static_cast<std::ptrdiff_t>(k));
    c = B::vcomp(B::assoc_inv(mid[k], compose_path<B>(mid0), p), B::whisker_left(mid[k], c));
  }
  return c;
}

// cp(path) -> cp(path') where path[i, i+len) is replaced by `repl` along theta.
template <Bicategory B>
typename B::Cell replace_subpath(const std::vector<typename B::Arr>& path, std::size_t i, std::size_t len,
                                 const typename B::Cell& theta, const std::vector<typename B::Arr>& repl) {
  using Arr = typename B::Arr;
  const std::vector<Arr> pre(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i));
  const std::vector<Arr> mid(path.begin() + static_cast<std::ptrdiff_t>(i),
                             path.begin() + static_cast<std::ptrdiff_t>(i + len));
  const std::vector<Arr> post(path.begin() + static_cast<std::ptrdiff_t>(i + len), path.end());
  require(B::dom(theta) == compose_path<B>(mid) && B::cod(theta) == compose_path<B>(repl),
          ErrorKind::boundary_mismatch, "path rewrite: cell boundary differs from the subpath");
  typename B::Cell c = theta;
  if (!pre.empty()) {
    c = vcomp_all<B>({inverse_or_throw<B>(split_path<B>(pre, repl), "path split"),
                      B::whisker_right(theta, compose_path<B>(pre)), split_path<B>(pre, mid)});
  }
  for (const auto& e : post) c = B::whisker_left(e, c);
  return c;
}

template <Bicategory B>
struct PathState {
  std::vector<typename B::Arr> path;
  typename B::Cell cell;  // from the initial path to the current one
};

template <Bicategory B>
void rewrite(PathState<B>& st, std::size_t i, std::size_t len, const typename B::Cell& theta,
             const std::vector<typename B::Arr>& repl) {
  auto step = replace_subpath<B>(st.path, i, len, theta, repl);
  st.cell = B::vcomp(step, st.cell);
  st.path.erase(st.path.begin() + static_cast<std::ptrdiff_t>(i), st.path.begin() + static_cast<std::ptrdiff_t>(i + len));
  st.path.insert(st.path.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
}

// Pseudonaturality squares of a between maps: the unique comparison cell.
template <Bicategory B>
typename B::Cell map_square(const std::vector<typename B::Arr>& from, const std::vector<typename B::Arr>& to) {
  auto c = B::comparison(compose_path<B>(from), compose_path<B>(to));
  require(c.has_value(), ErrorKind::no_solution, "naturality square: composites differ");
  return *c;
}

// pi whiskered by an object on the right: cp(m-path x V) -> cp(n-path x V).
template <Bicategory B>
typename B::Cell pi_times(const PiData<B>& d, const FinSet& v, const std::vector<typename B::Arr>& from,
                          const std::vector<typename B::Arr>& to) {
  const auto mv = times_on_arrows<B>(adjunction_of<B>(d.m), identity_adjunction<B>(v)).map.left;
  const auto nv = times_on_arrows<B>(adjunction_of<B>(d.n), identity_adjunction<B>(v)).map.left;
  auto into = B::comparison(compose_path<B>(from), mv);
  auto out = B::comparison(nv, compose_path<B>(to));
  require(into && out, ErrorKind::no_solution, "pi x V: comparison missing");
  return vcomp_all<B>({*out, times_on_cells<B>(d.pi, B::id_cell(B::identity(v))), *into});
}

template <Bicategory B>
typename B::Cell times_pi(const FinSet& x, const PiData<B>& d, const std::vector<typename B::Arr>& from,
                          const std::vector<typename B::Arr>& to) {
  const auto xm = times_on_arrows<B>(identity_adjunction<B>(x), adjunction_of<B>(d.m)).map.left;
  const auto xn = times_on_arrows<B>(identity_adjunction<B>(x), adjunction_of<B>(d.n)).map.left;
  auto into = B::comparison(compose_path<B>(from), xm);
  auto out = B::comparison(xn, compose_path<B>(to));
  require(into && out, ErrorKind::no_solution, "X x pi: comparison missing");
  return vcomp_all<B>({*out, times_on_cells<B>(B::id_cell(B::identity(x)), d.pi), *into});
}

template <Bicategory B>
struct PentagonSides {
  typename B::Cell lhs, rhs;
};

// Both pastings of the associahedron boundary for X, Y, Z, U, V.
template <Bicategory B>
PentagonSides<B> pentagon_sides(const FinSet& x, const FinSet& y, const FinSet& z, const FinSet& u, const FinSet& v) {
  using Arr = typename B::Arr;
  auto a = [](const FinSet& p, const FinSet& q, const FinSet& r) { return assoc_map<B>(p, q, r); };
  auto tv = [](const Adjunction<B>& f, const FinSet& w) { return times_identity<B>(f, w); };
  auto xt = [](const FinSet& w, const Adjunction<B>& f) { return identity_times<B>(w, f); };
  const auto yz = product(y, z), zu = product(z, u), uv = product(u, v), xy = product(x, y);
  const auto yzu = product(yz, u), xyz = product(xy, z);

  const std::vector<Arr> start = {
      tv(tv(a(x, y, z), u), v).left, tv(a(x, yz, u), v).left, tv(xt(x, a(y, z, u)), v).left,
      a(x, product(y, zu), v).left, xt(x, a(y, zu, v)).left, xt(x, xt(y, a(z, u, v))).left};

  // Route A
  PathState<B> sa{start, B::id_cell(compose_path<B>(start))};
  {
    const auto p = pi<B>(x, y, z, u);
    std::vector<Arr> repl = {tv(a(xy, z, u), v).left, tv(a(x, y, zu), v).left};
    std::vector<Arr> from(sa.path.begin(), sa.path.begin() + 3);
    rewrite(sa, 0, 3, pi_times<B>(p, v, from, repl), repl);
  }
  {
    const auto p = pi<B>(x, y, zu, v);
    std::vector<Arr> repl = {a(xy, zu, v).left, a(x, y, product(zu, v)).left};
    std::vector<Arr> from(sa.path.begin() + 1, sa.path.begin() + 4);
    auto into = B::comparison(compose_path<B>(from), p.m);
    auto out = B::comparison(p.n, compose_path<B>(repl));
    require(into && out, ErrorKind::no_solution, "pentagon: comparison missing");
    rewrite(sa, 1, 3, vcomp_all<B>({*out, p.pi, *into}), repl);
  }
  {
    std::vector<Arr> repl = {xt(xy, a(z, u, v)).left, a(x, y, product(z, uv)).left};
    std::vector<Arr> from(sa.path.begin() + 2, sa.path.begin() + 4);
    rewrite(sa, 2, 2, map_square<B>(from, repl), repl);
  }
  {
    const auto p = pi<B>(xy, z, u, v);
    std::vector<Arr> repl = {a(xyz, u, v).left, a(xy, z, uv).left};
    std::vector<Arr> from(sa.path.begin(), sa.path.begin() + 3);
    auto into = B::comparison(compose_path<B>(from), p.m);
    auto out = B::comparison(p.n, compose_path<B>(repl));
    require(into && out, ErrorKind::no_solution, "pentagon: comparison missing");
    rewrite(sa, 0, 3, vcomp_all<B>({*out, p.pi, *into}), repl);
  }

  // Route B
  PathState<B> sb{start, B::id_cell(compose_path<B>(start))};
  {
    std::vector<Arr> repl = {a(x, yzu, v).left, xt(x, tv(a(y, z, u), v)).left};
    std::vector<Arr> from(sb.path.begin() + 2, sb.path.begin() + 4);
    rewrite(sb, 2, 2, map_square<B>(from, repl), repl);
  }
  {
    const auto p = pi<B>(y, z, u, v);
    std::vector<Arr> repl = {xt(x, a(yz, u, v)).left, xt(x, a(y, z, uv)).left};
    std::vector<Arr> from(sb.path.begin() + 3, sb.path.begin() + 6);
    rewrite(sb, 3, 3, times_pi<B>(x, p, from, repl), repl);
  }
  {
    const auto p = pi<B>(x, yz, u, v);
    std::vector<Arr> repl = {a(product(x, yz), u, v).left, a(x, yz, uv).left};
    std::vector<Arr> from(sb.path.begin() + 1, sb.path.begin() + 4);
    auto into = B::comparison(compose_path<B>(from), p.m);
    auto out = B::comparison(p.n, compose_path<B>(repl));
    require(into && out, ErrorKind::no_solution, "pentagon: comparison missing");
    rewrite(sb, 1, 3, vcomp_all<B>({*out, p.pi, *into}), repl);
  }
  {
    std::vector<Arr> repl = {a(xyz, u, v).left, tv(a(x, y, z), uv).left};
    std::vector<Arr> from(sb.path.begin(), sb.path.begin() + 2);
    rewrite(sb, 0, 2, map_square<B>(from, repl), repl);
  }
  {
    const auto p = pi<B>(x, y, z, uv);
    std::vector<Arr> repl = {a(xy, z, uv).left, a(x, y, product(z, uv)).left};
    std::vector<Arr> from(sb.path.begin() + 1, sb.path.begin() + 4);
    auto into = B::comparison(compose_path<B>(from), p.m);
    auto out = B::comparison(p.n, compose_path<B>(repl));
    require(into && out, ErrorKind::no_solution, "pentagon: comparison missing");
    rewrite(sb, 1, 3, vcomp_all<B>({*out, p.pi, *into}), repl);
  }
  require(sa.path == sb.path, ErrorKind::boundary_mismatch, "pentagon: routes end at different paths");
  return {sa.cell, sb.cell};
}

// ---- the cells of the pseudonatural equivalences on G

template <Bicategory B>
GArr<B> a_tilde(const GObj<B>& r, const GObj<B>& s, const GObj<B>& t) {
  const auto rs = g_tensor<B>(r, s);
  const auto rs_t = g_tensor<B>(rs.product, t);
  const auto st = g_tensor<B>(s, t);
  const auto r_st = g_tensor<B>(r, st.product);
  auto leg1 = g_compose(rs_t.proj_p, rs.proj_p);
  auto leg2 = g_compose(rs_t.proj_p, rs.proj_r);
  auto inner = g_pair<B>(leg2, rs_t.proj_r, st);
  return g_pair<B>(leg1, inner, r_st);
}

template <Bicategory B>
GArr<B> l_tilde(const GObj<B>& r) {
  return g_tensor<B>(g_terminal<B>(), r).proj_r;
}

template <Bicategory B>
GArr<B> r_tilde(const GObj<B>& r) {
  return g_tensor<B>(r, g_terminal<B>()).proj_p;
}

template <Bicategory B>
GArr<B> s_tilde(const GObj<B>& r, const GObj<B>& s) {
  const auto rs = g_tensor<B>(r, s);
  return g_pair<B>(rs.proj_r, rs.proj_p, g_tensor<B>(s, r));
}

// a (x) b : R (x) S -> R' (x) S'
template <Bicategory B>
GArr<B> g_tensor_arrows(const GArr<B>& a, const GArr<B>& b) {
  const auto dom = g_tensor<B>(a.dom, b.dom);
  const auto cod = g_tensor<B>(a.cod, b.cod);
  const auto h = times_on_arrows<B>(a.f, b.f);
  const auto w = times_on_arrows<B>(a.u, b.u);
  return g_pair<B>(dom.product, g_compose(dom.proj_p, a), g_compose(dom.proj_r, b), cod, h.map, w.map, h.p_prime,
                   w.p_prime, h.r_prime, w.r_prime);
}

// (pi_X.., pi_A..) as a 2-cell in G between the two composites of a~.
template <Bicategory B>
GCell<B> pi_modification(const GObj<B>& r, const GObj<B>& s, const GObj<B>& t, const GObj<B>& u) {
  const auto rs = g_tensor<B>(r, s).product;
  const auto st = g_tensor<B>(s, t).product;
  const auto tu = g_tensor<B>(t, u).product;
  auto m1 = g_tensor_arrows(a_tilde(r, s, t), g_identity(u));
  auto m2 = a_tilde(r, st, u);
  auto m3 = g_tensor_arrows(g_identity(r), a_tilde(s, t, u));
  auto mg = g_compose(g_compose(m1, m2), m3);
  auto ng = g_compose(a_tilde(rs, t, u), a_tilde(r, s, tu));
  auto top = pi<B>(r.src(), s.src(), t.src(), u.src());
  auto bot = pi<B>(r.tgt(), s.tgt(), t.tgt(), u.tgt());
  return {mg, ng, top.pi, bot.pi};
}

// Pseudonaturality of a square family: (x) applied along arrows a, b and the
// component squares; the comparison pair must be an invertible G-cell.
template <Bicategory B>
bool g_comparison_cell(const GArr<B>& lhs, const GArr<B>& rhs) {
  auto phi = B::comparison(lhs.f.left, rhs.f.left);
  auto psi = B::comparison(lhs.u.left, rhs.u.left);
  if (!phi || !psi || !B::inverse(*phi) || !B::inverse(*psi)) return false;
  return g_cell_condition(GCell<B>{lhs, rhs, *phi, *psi});
}

template <Bicategory B>
bool s_tilde_natural(const GArr<B>& a, const GArr<B>& b) {
  auto lhs = g_compose(g_tensor_arrows(a, b), s_tilde(a.cod, b.cod));
  auto rhs = g_compose(s_tilde(a.dom, b.dom), g_tensor_arrows(b, a));
  return g_comparison_cell(lhs, rhs);
}

template <Bicategory B>
bool a_tilde_natural(const GArr<B>& a, const GArr<B>& b, const GArr<B>& c) {
  auto lhs = g_compose(g_tensor_arrows(g_tensor_arrows(a, b), c), a_tilde(a.cod, b.cod, c.cod));
  auto rhs = g_compose(a_tilde(a.dom, b.dom, c.dom), g_tensor_arrows(a, g_tensor_arrows(b, c)));
  return g_comparison_cell(lhs, rhs);
}

}  // namespace cartbicat
