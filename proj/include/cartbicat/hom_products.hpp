#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "kernel.hpp"
#include "report.hpp"

namespace cartbicat {

template <Bicategory B>
struct LocalProductWitness {
  typename B::Arr product;
  typename B::Cell proj1;  // pi  : R ^ R' -> R
  typename B::Cell proj2;  // rho : R ^ R' -> R'

  typename B::Cell pair(const typename B::Cell& phi, const typename B::Cell& psi) const {
    require(B::cod(phi) == B::cod(proj1) && B::cod(psi) == B::cod(proj2), ErrorKind::boundary_mismatch,
            "local pairing: cone does not end at the factors");
    return B::meet_pair(phi, psi);
  }
};

template <Bicategory B>
LocalProductWitness<B> local_product(const typename B::Arr& r, const typename B::Arr& r2) {
  return {B::meet(r, r2), B::meet_p(r, r2), B::meet_r(r, r2)};
}

template <Bicategory B>
typename B::Arr local_terminal(const FinSet& x, const FinSet& a) {
  return B::top(x, a);
}

template <Bicategory B>
typename B::Cell local_pair(const typename B::Cell& phi, const typename B::Cell& psi) {
  return B::meet_pair(phi, psi);
}

template <Bicategory B>
typename B::Cell delta(const typename B::Arr& r) {
  return B::meet_pair(B::id_cell(r), B::id_cell(r));
}

template <Bicategory B>
typename B::Cell tau(const typename B::Arr& r) {
  return B::to_top(r);
}

// phi ^ psi : R ^ S -> R' ^ S'
template <Bicategory B>
typename B::Cell meet_cells(const typename B::Cell& phi, const typename B::Cell& psi) {
  const auto r = B::dom(phi);
  const auto s = B::dom(psi);
  return B::meet_pair(B::vcomp(phi, B::meet_p(r, s)), B::vcomp(psi, B::meet_r(r, s)));
}

// A cone (q1 : Q -> P1, q2 : Q -> P2) is a product iff its comparison into
// the canonical P1 ^ P2 is invertible.
template <Bicategory B>
bool is_local_product_cone(const typename B::Cell& q1, const typename B::Cell& q2) {
  if (!(B::dom(q1) == B::dom(q2))) return false;
  return B::inverse(B::meet_pair(q1, q2)).has_value();
}

// Universal property of R ^ R' against the cone (phi, psi), by enumerating
// every 2-cell T -> R ^ R'.
template <Bicategory B>
bool check_local_product_universal(const typename B::Cell& phi, const typename B::Cell& psi,
                                   std::size_t limit = 100000) {
  const auto r = B::cod(phi);
  const auto r2 = B::cod(psi);
  auto w = local_product<B>(r, r2);
  std::size_t solutions = 0;
  bool matches_pair = false;
  const auto paired = w.pair(phi, psi);
  for (const auto& g : B::all_cells(B::dom(phi), w.product, limit)) {
    if (B::vcomp(w.proj1, g) == phi && B::vcomp(w.proj2, g) == psi) {
      ++solutions;
      matches_pair = g == paired;
    }
  }
  return solutions == 1 && matches_pair && B::vcomp(w.proj1, paired) == phi && B::vcomp(w.proj2, paired) == psi;
}

template <Bicategory B>
bool check_local_terminal_universal(const typename B::Arr& r, std::size_t limit = 100000) {
  const auto t = B::top(B::src(r), B::tgt(r));
  auto cells = B::all_cells(r, t, limit);
  return cells.size() == 1 && cells.front() == tau<B>(r);
}

// B(f, u*) applied to R ^ R' is again a product: the comparison
// u*((R ^ R') f) -> u*(R f) ^ u*(R' f) is invertible.
template <Bicategory B>
bool check_transported_product(const Adjunction<B>& f, const Adjunction<B>& u, const typename B::Arr& r,
                               const typename B::Arr& r2) {
  auto w = local_product<B>(r, r2);
  auto q1 = B::whisker_left(u.right, B::whisker_right(w.proj1, f.left));
  auto q2 = B::whisker_left(u.right, B::whisker_right(w.proj2, f.left));
  return is_local_product_cone<B>(q1, q2);
}

template <Bicategory B>
bool check_transported_terminal(const Adjunction<B>& f, const Adjunction<B>& u, const FinSet& x,
                                const FinSet& a, std::size_t limit = 100000) {
  const auto t = B::compose(u.right, B::compose(B::top(x, a), f.left));
  const auto canon = B::top(B::src(t), B::tgt(t));
  // Terminal iff the unique cell into the canonical terminal is invertible.
  auto cells = B::all_cells(t, canon, limit);
  return cells.size() == 1 && B::inverse(cells.front()).has_value();
}

}  // namespace cartbicat
