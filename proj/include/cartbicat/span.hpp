#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finset.hpp"
#include "kernel.hpp"

namespace cartbicat {

// X <-left- S -right-> A
class Span {
 public:
  Span() = default;
  Span(SetFn left, SetFn right) : left_(std::move(left)), right_(std::move(right)) {
    require(left_.dom() == right_.dom(), ErrorKind::invalid_config, "span legs have different domains");
  }

  static Span identity(const FinSet& x) {
    auto id = SetFn::identity(x);
    return Span(id, id);
  }

  const FinSet& source() const { return left_.cod(); }
  const FinSet& target() const { return right_.cod(); }
  const FinSet& apex() const { return left_.dom(); }
  const SetFn& left() const { return left_; }
  const SetFn& right() const { return right_; }

  bool is_identity() const {
    return left_.is_identity() && right_.is_identity() && left_.cod() == right_.cod();
  }

  // The same span read backwards.
  Span reversed() const { return Span(right_, left_); }

  friend bool operator==(const Span& a, const Span& b) { return a.left_ == b.left_ && a.right_ == b.right_; }

 private:
  SetFn left_, right_;
};

// A leg-commuting function between apexes of parallel spans.
class SpanCell {
 public:
  SpanCell() = default;
  SpanCell(Span dom, Span cod, SetFn map) : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
    require(is_valid(), ErrorKind::boundary_mismatch, "apex map does not commute with the legs");
  }

  // No validation; for fixtures that are meant to be checked later.
  static SpanCell unchecked(Span dom, Span cod, SetFn map) {
    SpanCell c;
    c.dom_ = std::move(dom);
    c.cod_ = std::move(cod);
    c.map_ = std::move(map);
    return c;
  }

  const Span& dom() const { return dom_; }
  const Span& cod() const { return cod_; }
  const SetFn& map() const { return map_; }

  bool is_valid() const {
    if (!(dom_.source() == cod_.source() && dom_.target() == cod_.target())) return false;
    if (!(map_.dom() == dom_.apex() && map_.cod() == cod_.apex())) return false;
    for (std::size_t s = 0; s < dom_.apex().size(); ++s) {
      if (cod_.left()(map_(s)) != dom_.left()(s)) return false;
      if (cod_.right()(map_(s)) != dom_.right()(s)) return false;
    }
    return true;
  }

  friend bool operator==(const SpanCell& a, const SpanCell& b) {
    return a.map_.table() == b.map_.table() && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  Span dom_, cod_;
  SetFn map_;
};

// Decomposition of the apex of a composite T.R into pairs (r, t).
struct SpanFactors {
  enum class Shape { left_identity, right_identity, pullback } shape = Shape::pullback;
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  std::vector<std::size_t> lookup;  // r * nt + t -> index, or npos
  std::size_t nt = 0;
  const Span* r = nullptr;
  const Span* t = nullptr;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t locate(std::size_t ri, std::size_t ti) const {
    std::size_t z = npos;
    switch (shape) {
      case Shape::left_identity:
        if (r->right()(ri) == ti) z = ri;
        break;
      case Shape::right_identity:
        if (t->left()(ti) == ri) z = ti;
        break;
      case Shape::pullback: z = lookup[ri * nt + ti]; break;
    }
    require(z != npos, ErrorKind::boundary_mismatch, "element pair does not lie in the composite");
    return z;
  }
};

namespace detail {

inline SpanFactors span_factors(const Span& t, const Span& r, Span* out_composite) {
  require(r.target() == t.source(), ErrorKind::boundary_mismatch, "span composition: target/source differ");
  SpanFactors f;
  f.r = &r;
  f.t = &t;
  if (t.is_identity()) {
    f.shape = SpanFactors::Shape::left_identity;
    f.parts.reserve(r.apex().size());
    for (std::size_t z = 0; z < r.apex().size(); ++z) f.parts.emplace_back(z, r.right()(z));
    if (out_composite) *out_composite = r;
    return f;
  }
  if (r.is_identity()) {
    f.shape = SpanFactors::Shape::right_identity;
    f.parts.reserve(t.apex().size());
    for (std::size_t z = 0; z < t.apex().size(); ++z) f.parts.emplace_back(t.left()(z), z);
    if (out_composite) *out_composite = t;
    return f;
  }
  f.nt = t.apex().size();
  f.lookup.assign(r.apex().size() * f.nt, SpanFactors::npos);
  // Bucket t by its left leg so the pullback is enumerated in lexicographic order.
  std::vector<std::vector<std::size_t>> by_left(t.source().size());
  for (std::size_t j = 0; j < t.apex().size(); ++j) by_left[t.left()(j)].push_back(j);
  for (std::size_t i = 0; i < r.apex().size(); ++i)
    for (std::size_t j : by_left[r.right()(i)]) {
      f.lookup[i * f.nt + j] = f.parts.size();
      f.parts.emplace_back(i, j);
    }
  if (out_composite) {
    std::vector<std::string> labels;
    std::vector<std::size_t> l, rr;
    labels.reserve(f.parts.size());
    l.reserve(f.parts.size());
    rr.reserve(f.parts.size());
    for (auto [i, j] : f.parts) {
      labels.push_back(pair_label(r.apex()[i], t.apex()[j]));
      l.push_back(r.left()(i));
      rr.push_back(t.right()(j));
    }
    FinSet apex = FinSet::trusted(std::move(labels));
    *out_composite = Span(SetFn(apex, r.source(), std::move(l)), SetFn(apex, t.target(), std::move(rr)));
  }
  return f;
}

}  // namespace detail

// T after R. Identity arguments are absorbed: the other argument is returned.
inline Span span_after(const Span& t, const Span& r) {
  Span out;
  detail::span_factors(t, r, &out);
  return out;
}

// R then T, with the composite apex {(s,t) : R.right(s) = T.left(t)}.
inline Span span_compose(const Span& r, const Span& t) { return span_after(t, r); }

inline Span graph(const SetFn& f) { return Span(SetFn::identity(f.dom()), f); }

struct SpanBicat {
  using Arr = Span;
  using Cell = SpanCell;

  static constexpr const char* name = "span";

  static FinSet src(const Span& r) { return r.source(); }
  static FinSet tgt(const Span& r) { return r.target(); }
  static Span dom(const SpanCell& c) { return c.dom(); }
  static Span cod(const SpanCell& c) { return c.cod(); }

  static Span identity(const FinSet& x) { return Span::identity(x); }
  static Span compose(const Span& t, const Span& r) { return span_after(t, r); }
  static bool is_identity(const Span& r) { return r.is_identity(); }

  static SpanCell id_cell(const Span& r) { return SpanCell::unchecked(r, r, SetFn::identity(r.apex())); }

  static SpanCell vcomp(const SpanCell& b, const SpanCell& a) {
    require(a.cod() == b.dom(), ErrorKind::boundary_mismatch, "vertical composition: boundaries differ");
    return SpanCell::unchecked(a.dom(), b.cod(), cartbicat::compose(b.map(), a.map()));
  }

  // T a : T R -> T R'
  static SpanCell whisker_left(const Span& t, const SpanCell& a) {
    Span d, c;
    auto fd = detail::span_factors(t, a.dom(), &d);
    auto fc = detail::span_factors(t, a.cod(), &c);
    std::vector<std::size_t> m(d.apex().size());
    for (std::size_t z = 0; z < m.size(); ++z) {
      auto [ri, ti] = fd.parts[z];
      m[z] = fc.locate(a.map()(ri), ti);
    }
    return SpanCell::unchecked(d, c, SetFn(d.apex(), c.apex(), std::move(m)));
  }

  // a R : T R -> T' R
  static SpanCell whisker_right(const SpanCell& a, const Span& r) {
    Span d, c;
    auto fd = detail::span_factors(a.dom(), r, &d);
    auto fc = detail::span_factors(a.cod(), r, &c);
    std::vector<std::size_t> m(d.apex().size());
    for (std::size_t z = 0; z < m.size(); ++z) {
      auto [ri, ti] = fd.parts[z];
      m[z] = fc.locate(ri, a.map()(ti));
    }
    return SpanCell::unchecked(d, c, SetFn(d.apex(), c.apex(), std::move(m)));
  }

  // (T S) R -> T (S R)
  static SpanCell assoc(const Span& t, const Span& s, const Span& r) {
    Span ts, sr, lhs, rhs;
    auto f_ts = detail::span_factors(t, s, &ts);
    auto f_sr = detail::span_factors(s, r, &sr);
    auto f_l = detail::span_factors(ts, r, &lhs);
    auto f_r = detail::span_factors(t, sr, &rhs);
    std::vector<std::size_t> m(lhs.apex().size());
    for (std::size_t z = 0; z < m.size(); ++z) {
      auto [ri, y] = f_l.parts[z];
      auto [si, ti] = f_ts.parts[y];
      m[z] = f_r.locate(f_sr.locate(ri, si), ti);
    }
    return SpanCell::unchecked(lhs, rhs, SetFn(lhs.apex(), rhs.apex(), std::move(m)));
  }

  // T (S R) -> (T S) R
  static SpanCell assoc_inv(const Span& t, const Span& s, const Span& r) {
    Span ts, sr, lhs, rhs;
    auto f_ts = detail::span_factors(t, s, &ts);
    auto f_sr = detail::span_factors(s, r, &sr);
    auto f_l = detail::span_factors(ts, r, &lhs);
    auto f_r = detail::span_factors(t, sr, &rhs);
    std::vector<std::size_t> m(rhs.apex().size());
    for (std::size_t z = 0; z < m.size(); ++z) {
      auto [w, ti] = f_r.parts[z];
      auto [ri, si] = f_sr.parts[w];
      m[z] = f_l.locate(ri, f_ts.locate(si, ti));
    }
    return SpanCell::unchecked(rhs, lhs, SetFn(rhs.apex(), lhs.apex(), std::move(m)));
  }

  static bool is_valid(const SpanCell& c) { return c.is_valid(); }

  // Two-sided inverse, verified by composing both ways.
  static std::optional<SpanCell> inverse(const SpanCell& c) {
    auto inv = c.map().inverse();
    if (!inv) return std::nullopt;
    auto d = SpanCell::unchecked(c.cod(), c.dom(), *inv);
    if (!d.is_valid()) return std::nullopt;
    if (!(vcomp(d, c) == id_cell(c.dom())) || !(vcomp(c, d) == id_cell(c.cod()))) return std::nullopt;
    return d;
  }

  // ---- local products

  struct MeetData {
    Span meet;
    std::vector<std::size_t> lookup;  // i * |S'| + j -> index
    std::vector<std::pair<std::size_t, std::size_t>> parts;
  };

  static MeetData meet_data(const Span& r, const Span& s) {
    require(r.source() == s.source() && r.target() == s.target(), ErrorKind::boundary_mismatch,
            "local product of non-parallel spans");
    MeetData d;
    const std::size_t ns = s.apex().size();
    d.lookup.assign(r.apex().size() * ns, SpanFactors::npos);
    std::vector<std::string> labels;
    std::vector<std::size_t> l, rr;
    for (std::size_t i = 0; i < r.apex().size(); ++i)
      for (std::size_t j = 0; j < ns; ++j) {
        if (r.left()(i) != s.left()(j) || r.right()(i) != s.right()(j)) continue;
        d.lookup[i * ns + j] = d.parts.size();
        d.parts.emplace_back(i, j);
        labels.push_back(pair_label(r.apex()[i], s.apex()[j]));
        l.push_back(r.left()(i));
        rr.push_back(r.right()(i));
      }
    FinSet apex = FinSet::trusted(std::move(labels));
    d.meet = Span(SetFn(apex, r.source(), std::move(l)), SetFn(apex, r.target(), std::move(rr)));
    return d;
  }

  static Span meet(const Span& r, const Span& s) { return meet_data(r, s).meet; }

  static SpanCell meet_p(const Span& r, const Span& s) {
    auto d = meet_data(r, s);
    std::vector<std::size_t> m;
    for (auto [i, j] : d.parts) m.push_back(i);
    return SpanCell::unchecked(d.meet, r, SetFn(d.meet.apex(), r.apex(), std::move(m)));
  }

  static SpanCell meet_r(const Span& r, const Span& s) {
    auto d = meet_data(r, s);
    std::vector<std::size_t> m;
    for (auto [i, j] : d.parts) m.push_back(j);
    return SpanCell::unchecked(d.meet, s, SetFn(d.meet.apex(), s.apex(), std::move(m)));
  }

  static SpanCell meet_pair(const SpanCell& phi, const SpanCell& psi) {
    require(phi.dom() == psi.dom(), ErrorKind::boundary_mismatch, "pairing 2-cells with different domains");
    auto d = meet_data(phi.cod(), psi.cod());
    const std::size_t ns = psi.cod().apex().size();
    std::vector<std::size_t> m(phi.dom().apex().size());
    for (std::size_t z = 0; z < m.size(); ++z) {
      m[z] = d.lookup[phi.map()(z) * ns + psi.map()(z)];
      require(m[z] != SpanFactors::npos, ErrorKind::boundary_mismatch, "pairing: legs disagree");
    }
    return SpanCell::unchecked(phi.dom(), d.meet, SetFn(phi.dom().apex(), d.meet.apex(), std::move(m)));
  }

  static bool is_unit_pair(const FinSet& x, const FinSet& a) { return x == unit_set() && a == unit_set(); }

  // Full product span; on (I, I) the identity span, which is also terminal.
  static Span top(const FinSet& x, const FinSet& a) {
    if (is_unit_pair(x, a)) return Span::identity(unit_set());
    return Span(proj1(x, a), proj2(x, a));
  }

  static SpanCell to_top(const Span& r) {
    Span t = top(r.source(), r.target());
    std::vector<std::size_t> m(r.apex().size());
    for (std::size_t z = 0; z < m.size(); ++z)
      m[z] = is_unit_pair(r.source(), r.target()) ? 0 : r.left()(z) * r.target().size() + r.right()(z);
    return SpanCell::unchecked(r, t, SetFn(r.apex(), t.apex(), std::move(m)));
  }

  // The unique g : T -> Q with legs[i] . g = cells[i], found elementwise.
  static SpanCell fill_cone(const Span& t, const Span& q, const std::vector<SpanCell>& legs,
                            const std::vector<SpanCell>& cells) {
    require(legs.size() == cells.size(), ErrorKind::boundary_mismatch, "cone fill: leg/cell count differ");
    require(t.source() == q.source() && t.target() == q.target(), ErrorKind::boundary_mismatch,
            "cone fill: spans not parallel");
    for (std::size_t i = 0; i < legs.size(); ++i)
      require(legs[i].dom() == q && cells[i].dom() == t && legs[i].cod() == cells[i].cod(),
              ErrorKind::boundary_mismatch, "cone fill: cone boundaries differ");
    std::vector<std::size_t> m(t.apex().size());
    for (std::size_t z = 0; z < m.size(); ++z) {
      std::size_t found = SpanFactors::npos;
      for (std::size_t w = 0; w < q.apex().size(); ++w) {
        if (q.left()(w) != t.left()(z) || q.right()(w) != t.right()(z)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < legs.size() && ok; ++i) ok = legs[i].map()(w) == cells[i].map()(z);
        if (!ok) continue;
        require(found == SpanFactors::npos, ErrorKind::non_unique, "cone fill: more than one mediating element");
        found = w;
      }
      require(found != SpanFactors::npos, ErrorKind::no_solution, "cone fill: no mediating element");
      m[z] = found;
    }
    return SpanCell::unchecked(t, q, SetFn(t.apex(), q.apex(), std::move(m)));
  }

  // ---- maps

  static Span graph(const SetFn& f) { return cartbicat::graph(f); }

  static std::optional<SetFn> map_function(const Span& r) {
    auto inv = r.left().inverse();
    if (!inv) return std::nullopt;
    return cartbicat::compose(r.right(), *inv);
  }

  // f* is the reversed span; the unit is the diagonal into the kernel pair
  // and the counit collapses fibres.
  static std::optional<Adjunction<SpanBicat>> make_adjunction(const Span& f) {
    auto linv = f.left().inverse();
    if (!linv) return std::nullopt;
    Adjunction<SpanBicat> a;
    a.left = f;
    a.right = f.reversed();
    Span kp, fc;
    auto fk = detail::span_factors(a.right, f, &kp);
    std::vector<std::size_t> eta(f.source().size());
    for (std::size_t x = 0; x < eta.size(); ++x) eta[x] = fk.locate((*linv)(x), (*linv)(x));
    Span one_x = Span::identity(f.source());
    a.unit = SpanCell::unchecked(one_x, kp, SetFn(f.source(), kp.apex(), std::move(eta)));
    auto ff = detail::span_factors(f, a.right, &fc);
    Span one_a = Span::identity(f.target());
    std::vector<std::size_t> eps(fc.apex().size());
    for (std::size_t z = 0; z < eps.size(); ++z) eps[z] = f.right()(ff.parts[z].second);
    a.counit = SpanCell::unchecked(fc, one_a, SetFn(fc.apex(), f.target(), std::move(eps)));
    return a;
  }

  static std::optional<EquivWitness<SpanBicat>> find_equivalence(const Span& r) {
    if (!r.left().is_bijective() || !r.right().is_bijective()) return std::nullopt;
    auto a = make_adjunction(r);
    auto c = inverse(a->counit);
    if (!c || !inverse(a->unit)) return std::nullopt;
    return EquivWitness<SpanBicat>{a->left, a->right, a->unit, a->counit};
  }

  // The unique 2-cell f -> g when g's left leg is injective, if it exists.
  static std::optional<SpanCell> comparison(const Span& f, const Span& g) {
    if (!(f.source() == g.source() && f.target() == g.target())) return std::nullopt;
    std::vector<std::size_t> back(g.source().size(), SpanFactors::npos);
    for (std::size_t w = 0; w < g.apex().size(); ++w) {
      if (back[g.left()(w)] != SpanFactors::npos) return std::nullopt;
      back[g.left()(w)] = w;
    }
    std::vector<std::size_t> m(f.apex().size());
    for (std::size_t z = 0; z < m.size(); ++z) {
      std::size_t w = back[f.left()(z)];
      if (w == SpanFactors::npos || g.right()(w) != f.right()(z)) return std::nullopt;
      m[z] = w;
    }
    return SpanCell::unchecked(f, g, SetFn(f.apex(), g.apex(), std::move(m)));
  }

  // Every leg-commuting function R -> S, in lexicographic order of tables.
  static std::vector<SpanCell> all_cells(const Span& r, const Span& s, std::size_t limit) {
    std::vector<SpanCell> out;
    if (!(r.source() == s.source() && r.target() == s.target())) return out;
    const std::size_t n = r.apex().size();
    std::vector<std::vector<std::size_t>> cand(n);
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t w = 0; w < s.apex().size(); ++w)
        if (s.left()(w) == r.left()(z) && s.right()(w) == r.right()(z)) cand[z].push_back(w);
      if (cand[z].empty()) return out;
    }
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      require(out.size() < limit, ErrorKind::invalid_config, "2-cell enumeration exceeds its bound");
      std::vector<std::size_t> m(n);
      for (std::size_t z = 0; z < n; ++z) m[z] = cand[z][idx[z]];
      out.push_back(SpanCell::unchecked(r, s, SetFn(r.apex(), s.apex(), std::move(m))));
      std::size_t k = n;
      while (k > 0 && ++idx[k - 1] == cand[k - 1].size()) idx[--k] = 0;
      if (k == 0) break;
    }
    return out;
  }
};

inline std::optional<Adjunction<SpanBicat>> is_map(const Span& r) { return SpanBicat::make_adjunction(r); }

inline SpanBicat span_instance() { return {}; }

static_assert(Bicategory<SpanBicat>);

}  // namespace cartbicat
