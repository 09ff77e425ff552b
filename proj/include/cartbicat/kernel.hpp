#pragma once

#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finset.hpp"
#include "report.hpp"

namespace cartbicat {

template <class B>
struct Adjunction;

template <class B>
struct EquivWitness;

// A normal bicategory whose objects are finite sets, with the extra
// structure the constructions need: local products, maps and adjoints.
// Composition is written applicatively: compose(T, R) is "R then T".
template <class B>
concept Bicategory = requires(const typename B::Arr& a, const typename B::Cell& c, const FinSet& x,
                              const SetFn& fn, const std::vector<typename B::Cell>& cells) {
  { B::src(a) } -> std::convertible_to<FinSet>;
  { B::tgt(a) } -> std::convertible_to<FinSet>;
  { B::dom(c) } -> std::convertible_to<typename B::Arr>;
  { B::cod(c) } -> std::convertible_to<typename B::Arr>;
  { B::identity(x) } -> std::same_as<typename B::Arr>;
  { B::compose(a, a) } -> std::same_as<typename B::Arr>;
  { B::is_identity(a) } -> std::same_as<bool>;
  { B::id_cell(a) } -> std::same_as<typename B::Cell>;
  { B::vcomp(c, c) } -> std::same_as<typename B::Cell>;
  { B::whisker_left(a, c) } -> std::same_as<typename B::Cell>;
  { B::whisker_right(c, a) } -> std::same_as<typename B::Cell>;
  { B::assoc(a, a, a) } -> std::same_as<typename B::Cell>;
  { B::assoc_inv(a, a, a) } -> std::same_as<typename B::Cell>;
  { B::inverse(c) } -> std::same_as<std::optional<typename B::Cell>>;
  { B::is_valid(c) } -> std::same_as<bool>;
  { B::meet(a, a) } -> std::same_as<typename B::Arr>;
  { B::meet_p(a, a) } -> std::same_as<typename B::Cell>;
  { B::meet_r(a, a) } -> std::same_as<typename B::Cell>;
  { B::meet_pair(c, c) } -> std::same_as<typename B::Cell>;
  { B::top(x, x) } -> std::same_as<typename B::Arr>;
  { B::to_top(a) } -> std::same_as<typename B::Cell>;
  { B::fill_cone(a, a, cells, cells) } -> std::same_as<typename B::Cell>;
  { B::graph(fn) } -> std::same_as<typename B::Arr>;
  { B::map_function(a) } -> std::same_as<std::optional<SetFn>>;
  { B::make_adjunction(a) } -> std::same_as<std::optional<Adjunction<B>>>;
  { B::find_equivalence(a) } -> std::same_as<std::optional<EquivWitness<B>>>;
  { B::comparison(a, a) } -> std::same_as<std::optional<typename B::Cell>>;
  { B::all_cells(a, a, std::size_t{}) } -> std::same_as<std::vector<typename B::Cell>>;
};

template <class B>
struct Adjunction {
  typename B::Arr left;
  typename B::Arr right;
  typename B::Cell unit;    // 1 -> right.left
  typename B::Cell counit;  // left.right -> 1
};

template <class B>
struct EquivWitness {
  typename B::Arr forward;
  typename B::Arr backward;
  typename B::Cell unit_iso;    // 1 -> backward.forward
  typename B::Cell counit_iso;  // forward.backward -> 1
};

// Horizontal composite b * a : T R -> T' R' for a : R -> R', b : T -> T'.
template <class B>
typename B::Cell hcomp(const typename B::Cell& b, const typename B::Cell& a) {
  return B::vcomp(B::whisker_right(b, B::cod(a)), B::whisker_left(B::dom(b), a));
}

template <class B>
typename B::Cell vcomp_all(std::initializer_list<typename B::Cell> outer_to_inner) {
  auto it = outer_to_inner.end();
  typename B::Cell acc = *--it;
  while (it != outer_to_inner.begin()) acc = B::vcomp(*--it, acc);
  return acc;
}

template <class B>
typename B::Cell inverse_or_throw(const typename B::Cell& c, const char* what) {
  auto inv = B::inverse(c);
  require(inv.has_value(), ErrorKind::no_solution, std::string("expected an invertible 2-cell: ") + what);
  return *inv;
}

// ---------------------------------------------------------------------------
// Pasting expressions

template <class B>
class TwoCellExpr {
 public:
  using Arr = typename B::Arr;
  using Cell = typename B::Cell;

  enum class Kind { leaf, vcomp, whisker_left, whisker_right, assoc, assoc_inv };

  static TwoCellExpr leaf(Cell c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::leaf;
    n->cell = std::move(c);
    return TwoCellExpr(std::move(n));
  }
  // outer . inner
  static TwoCellExpr vcomp(TwoCellExpr outer, TwoCellExpr inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::vcomp;
    n->children = {std::move(outer.node_), std::move(inner.node_)};
    return TwoCellExpr(std::move(n));
  }
  static TwoCellExpr whisker_left(Arr t, TwoCellExpr e) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::whisker_left;
    n->arrows = {std::move(t)};
    n->children = {std::move(e.node_)};
    return TwoCellExpr(std::move(n));
  }
  static TwoCellExpr whisker_right(TwoCellExpr e, Arr r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::whisker_right;
    n->arrows = {std::move(r)};
    n->children = {std::move(e.node_)};
    return TwoCellExpr(std::move(n));
  }
  // (T S) R -> T (S R), or the reverse.
  static TwoCellExpr assoc(Arr t, Arr s, Arr r, bool forward = true) {
    auto n = std::make_shared<Node>();
    n->kind = forward ? Kind::assoc : Kind::assoc_inv;
    n->arrows = {std::move(t), std::move(s), std::move(r)};
    return TwoCellExpr(std::move(n));
  }

  Kind kind() const { return node_->kind; }

  // Typechecks the tree and returns (domain, codomain).
  std::pair<Arr, Arr> boundary() const { return boundary_of(*node_, "root"); }

  Cell evaluate() const { return eval(*node_, "root"); }

 private:
  struct Node {
    Kind kind = Kind::leaf;
    std::optional<Cell> cell;
    std::vector<Arr> arrows;
    std::vector<std::shared_ptr<const Node>> children;
  };

  explicit TwoCellExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static void check_composable(const Arr& t, const Arr& r, const std::string& path) {
    require(B::src(t) == B::tgt(r), ErrorKind::boundary_mismatch, "at " + path + ": 1-cells not composable");
  }

  static std::pair<Arr, Arr> boundary_of(const Node& n, const std::string& path) {
    switch (n.kind) {
      case Kind::leaf: return {B::dom(*n.cell), B::cod(*n.cell)};
      case Kind::vcomp: {
        auto outer = boundary_of(*n.children[0], path + "/vcomp[0]");
        auto inner = boundary_of(*n.children[1], path + "/vcomp[1]");
        require(inner.second == outer.first, ErrorKind::boundary_mismatch,
                "at " + path + "/vcomp: codomain of inner differs from domain of outer");
        return {inner.first, outer.second};
      }
      case Kind::whisker_left: {
        auto b = boundary_of(*n.children[0], path + "/whisker_left");
        check_composable(n.arrows[0], b.first, path + "/whisker_left");
        return {B::compose(n.arrows[0], b.first), B::compose(n.arrows[0], b.second)};
      }
      case Kind::whisker_right: {
        auto b = boundary_of(*n.children[0], path + "/whisker_right");
        check_composable(b.first, n.arrows[0], path + "/whisker_right");
        return {B::compose(b.first, n.arrows[0]), B::compose(b.second, n.arrows[0])};
      }
      case Kind::assoc:
      case Kind::assoc_inv: {
        const Arr& t = n.arrows[0];
        const Arr& s = n.arrows[1];
        const Arr& r = n.arrows[2];
        check_composable(t, s, path + "/assoc");
        check_composable(s, r, path + "/assoc");
        Arr lhs = B::compose(B::compose(t, s), r);
        Arr rhs = B::compose(t, B::compose(s, r));
        return n.kind == Kind::assoc ? std::pair{lhs, rhs} : std::pair{rhs, lhs};
      }
    }
    fail(ErrorKind::boundary_mismatch, "at " + path + ": unknown node");
  }

  static Cell eval(const Node& n, const std::string& path) {
    switch (n.kind) {
      case Kind::leaf: return *n.cell;
      case Kind::vcomp: {
        Cell outer = eval(*n.children[0], path + "/vcomp[0]");
        Cell inner = eval(*n.children[1], path + "/vcomp[1]");
        require(B::cod(inner) == B::dom(outer), ErrorKind::boundary_mismatch,
                "at " + path + "/vcomp: codomain of inner differs from domain of outer");
        return B::vcomp(outer, inner);
      }
      case Kind::whisker_left: {
        Cell c = eval(*n.children[0], path + "/whisker_left");
        check_composable(n.arrows[0], B::dom(c), path + "/whisker_left");
        return B::whisker_left(n.arrows[0], c);
      }
      case Kind::whisker_right: {
        Cell c = eval(*n.children[0], path + "/whisker_right");
        check_composable(B::dom(c), n.arrows[0], path + "/whisker_right");
        return B::whisker_right(c, n.arrows[0]);
      }
      case Kind::assoc:
      case Kind::assoc_inv:
        check_composable(n.arrows[0], n.arrows[1], path + "/assoc");
        check_composable(n.arrows[1], n.arrows[2], path + "/assoc");
        return n.kind == Kind::assoc ? B::assoc(n.arrows[0], n.arrows[1], n.arrows[2])
                                     : B::assoc_inv(n.arrows[0], n.arrows[1], n.arrows[2]);
    }
    fail(ErrorKind::boundary_mismatch, "at " + path + ": unknown node");
  }

  std::shared_ptr<const Node> node_;
};

template <class B>
typename B::Cell evaluate(const TwoCellExpr<B>& e) {
  return e.evaluate();
}

// ---------------------------------------------------------------------------
// Mates

enum class MateDirection { primary_to_secondary, secondary_to_primary };

// For alpha : u R -> S f, returns beta : R -> u*(S f) as
// (u* alpha) . assoc . (eta_u R).
template <class B>
TwoCellExpr<B> mate_expr_secondary(const typename B::Cell& alpha, const Adjunction<B>& u,
                                   const typename B::Arr& r) {
  using E = TwoCellExpr<B>;
  require(B::dom(alpha) == B::compose(u.left, r), ErrorKind::adjunction_mismatch,
          "mate: domain of the 2-cell is not u.R for the given adjunction");
  return E::vcomp(E::whisker_left(u.right, E::leaf(alpha)),
                  E::vcomp(E::assoc(u.right, u.left, r), E::whisker_right(E::leaf(u.unit), r)));
}

// For beta : R -> u*(S f), returns alpha : u R -> S f as
// (eps_u (S f)) . assoc^-1 . (u beta).
template <class B>
TwoCellExpr<B> mate_expr_primary(const typename B::Cell& beta, const Adjunction<B>& u,
                                 const typename B::Arr& sf) {
  using E = TwoCellExpr<B>;
  require(B::cod(beta) == B::compose(u.right, sf), ErrorKind::adjunction_mismatch,
          "mate: codomain of the 2-cell is not u*.(S f) for the given adjunction");
  return E::vcomp(E::whisker_right(E::leaf(u.counit), sf),
                  E::vcomp(E::assoc(u.left, u.right, sf, false), E::whisker_left(u.left, E::leaf(beta))));
}

// `other` is R for primary_to_secondary and S f for secondary_to_primary.
template <class B>
typename B::Cell mate(const typename B::Cell& c, const Adjunction<B>& u, MateDirection dir,
                      const typename B::Arr& other) {
  return dir == MateDirection::primary_to_secondary ? mate_expr_secondary<B>(c, u, other).evaluate()
                                                    : mate_expr_primary<B>(c, u, other).evaluate();
}

template <class B>
typename B::Cell to_secondary(const typename B::Cell& alpha, const Adjunction<B>& u, const typename B::Arr& r) {
  return mate<B>(alpha, u, MateDirection::primary_to_secondary, r);
}

template <class B>
typename B::Cell to_primary(const typename B::Cell& beta, const Adjunction<B>& u, const typename B::Arr& sf) {
  return mate<B>(beta, u, MateDirection::secondary_to_primary, sf);
}

// For psi : u -> u' between left adjoints, the conjugate psi^ : u'* -> u*.
template <class B>
typename B::Cell conjugate(const typename B::Cell& psi, const Adjunction<B>& u, const Adjunction<B>& u2) {
  using E = TwoCellExpr<B>;
  require(B::dom(psi) == u.left && B::cod(psi) == u2.left, ErrorKind::adjunction_mismatch,
          "conjugate: 2-cell boundary does not match the adjunctions");
  // u'* -> (u* u) u'* -> u* (u u'*) -> u* (u' u'*) -> u*
  auto e = E::vcomp(
      E::whisker_left(u.right, E::leaf(u2.counit)),
      E::vcomp(E::whisker_left(u.right, E::whisker_right(E::leaf(psi), u2.right)),
               E::vcomp(E::assoc(u.right, u.left, u2.right), E::whisker_right(E::leaf(u.unit), u2.right))));
  return e.evaluate();
}

// For alpha : u R -> S f, the mate on both sides R f* -> u* S.
template <class B>
typename B::Cell double_mate(const typename B::Cell& alpha, const Adjunction<B>& u, const typename B::Arr& r,
                             const typename B::Arr& s, const Adjunction<B>& f) {
  using E = TwoCellExpr<B>;
  using Arr = typename B::Arr;
  require(B::dom(alpha) == B::compose(u.left, r) && B::cod(alpha) == B::compose(s, f.left),
          ErrorKind::adjunction_mismatch, "double mate: boundary does not match");
  const Arr rf = B::compose(r, f.right);
  // R f* -> (u* u)(R f*) -> u*(u(R f*)) -> u*((u R) f*) -> u*((S f) f*) -> u*(S(f f*)) -> u* S
  auto e = E::whisker_left(u.right, E::whisker_left(s, E::leaf(f.counit)));
  e = E::vcomp(e, E::whisker_left(u.right, E::assoc(s, f.left, f.right)));
  e = E::vcomp(e, E::whisker_left(u.right, E::whisker_right(E::leaf(alpha), f.right)));
  e = E::vcomp(e, E::whisker_left(u.right, E::assoc(u.left, r, f.right, false)));
  e = E::vcomp(e, E::assoc(u.right, u.left, rf));
  e = E::vcomp(e, E::whisker_right(E::leaf(u.unit), rf));
  return e.evaluate();
}

// ---------------------------------------------------------------------------
// Adjunctions

template <class B>
Adjunction<B> identity_adjunction(const FinSet& x) {
  auto one = B::identity(x);
  return {one, one, B::id_cell(one), B::id_cell(one)};
}

// Adjunction for g . f from adjunctions for f and g.
template <class B>
Adjunction<B> compose_adjunction(const Adjunction<B>& g, const Adjunction<B>& f) {
  using E = TwoCellExpr<B>;
  Adjunction<B> a;
  a.left = B::compose(g.left, f.left);
  a.right = B::compose(f.right, g.right);
  // 1 -> f* f -> f*((g* g) f) -> f*(g*(g f)) -> (f* g*)(g f)
  auto eta = E::leaf(f.unit);
  eta = E::vcomp(E::whisker_left(f.right, E::whisker_right(E::leaf(g.unit), f.left)), eta);
  eta = E::vcomp(E::whisker_left(f.right, E::assoc(g.right, g.left, f.left)), eta);
  eta = E::vcomp(E::assoc(f.right, g.right, a.left, false), eta);
  a.unit = eta.evaluate();
  // (g f)(f* g*) -> g(f(f* g*)) -> g((f f*) g*) -> g g* -> 1
  auto eps = E::assoc(g.left, f.left, a.right);
  eps = E::vcomp(E::whisker_left(g.left, E::assoc(f.left, f.right, g.right, false)), eps);
  eps = E::vcomp(E::whisker_left(g.left, E::whisker_right(E::leaf(f.counit), g.right)), eps);
  eps = E::vcomp(E::leaf(g.counit), eps);
  a.counit = eps.evaluate();
  return a;
}

template <class B>
Adjunction<B> adjunction_of(const typename B::Arr& f) {
  auto a = B::make_adjunction(f);
  require(a.has_value(), ErrorKind::not_a_map, "1-cell has no right adjoint");
  return *a;
}

// (eps f) . assoc^-1 . (f eta) : f -> f
template <class B>
typename B::Cell triangle_left(const Adjunction<B>& a) {
  using E = TwoCellExpr<B>;
  return E::vcomp(E::whisker_right(E::leaf(a.counit), a.left),
                  E::vcomp(E::assoc(a.left, a.right, a.left, false), E::whisker_left(a.left, E::leaf(a.unit))))
      .evaluate();
}

// (f* eps) . assoc . (eta f*) : f* -> f*
template <class B>
typename B::Cell triangle_right(const Adjunction<B>& a) {
  using E = TwoCellExpr<B>;
  return E::vcomp(E::whisker_left(a.right, E::leaf(a.counit)),
                  E::vcomp(E::assoc(a.right, a.left, a.right), E::whisker_right(E::leaf(a.unit), a.right)))
      .evaluate();
}

template <class B>
CheckReport check_adjunction(const Adjunction<B>& a) {
  CheckReport rep;
  rep.suite = "kernel";
  auto run = [&](const char* id, auto&& side, const typename B::Arr& arr) {
    try {
      rep.record(id, side() == B::id_cell(arr));
    } catch (const Error& e) {
      rep.record(id, false, 1, e.what());
    }
  };
  run("triangle-1", [&] { return triangle_left<B>(a); }, a.left);
  run("triangle-2", [&] { return triangle_right<B>(a); }, a.right);
  return rep;
}

template <class B>
bool is_invertible(const typename B::Cell& c) {
  return B::inverse(c).has_value();
}

}  // namespace cartbicat
