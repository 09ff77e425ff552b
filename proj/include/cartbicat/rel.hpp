#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finset.hpp"
#include "kernel.hpp"

namespace cartbicat {

// A relation X -> A as a row-major membership table.
class Rel {
 public:
  Rel() = default;
  Rel(FinSet source, FinSet target)
      : source_(std::move(source)), target_(std::move(target)), bits_(source_.size() * target_.size(), 0) {}
  Rel(FinSet source, FinSet target, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
      : Rel(std::move(source), std::move(target)) {
    for (auto [x, a] : pairs) {
      require(x < source_.size() && a < target_.size(), ErrorKind::invalid_config, "relation pair out of range");
      set(x, a);
    }
  }

  static Rel identity(const FinSet& x) {
    Rel r(x, x);
    for (std::size_t i = 0; i < x.size(); ++i) r.set(i, i);
    return r;
  }

  static Rel full(const FinSet& x, const FinSet& a) {
    Rel r(x, a);
    r.bits_.assign(r.bits_.size(), 1);
    return r;
  }

  static Rel graph(const SetFn& f) {
    Rel r(f.dom(), f.cod());
    for (std::size_t i = 0; i < f.dom().size(); ++i) r.set(i, f(i));
    return r;
  }

  const FinSet& source() const { return source_; }
  const FinSet& target() const { return target_; }
  bool contains(std::size_t x, std::size_t a) const { return bits_[x * target_.size() + a] != 0; }
  void set(std::size_t x, std::size_t a, bool v = true) { bits_[x * target_.size() + a] = v ? 1 : 0; }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < source_.size(); ++x)
      for (std::size_t a = 0; a < target_.size(); ++a)
        if (contains(x, a)) out.emplace_back(x, a);
    return out;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (char b : bits_) n += b != 0;
    return n;
  }

  bool subset_of(const Rel& o) const {
    if (!(source_ == o.source_ && target_ == o.target_)) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !o.bits_[i]) return false;
    return true;
  }

  Rel converse() const {
    Rel r(target_, source_);
    for (std::size_t x = 0; x < source_.size(); ++x)
      for (std::size_t a = 0; a < target_.size(); ++a)
        if (contains(x, a)) r.set(a, x);
    return r;
  }

  bool is_identity() const { return source_ == target_ && *this == identity(source_); }

  friend bool operator==(const Rel& a, const Rel& b) {
    return a.bits_ == b.bits_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  FinSet source_, target_;
  std::vector<char> bits_;
};

// T after R.
inline Rel rel_after(const Rel& t, const Rel& r) {
  require(r.target() == t.source(), ErrorKind::boundary_mismatch, "relation composition: target/source differ");
  Rel out(r.source(), t.target());
  for (std::size_t x = 0; x < r.source().size(); ++x)
    for (std::size_t a = 0; a < r.target().size(); ++a) {
      if (!r.contains(x, a)) continue;
      for (std::size_t l = 0; l < t.target().size(); ++l)
        if (t.contains(a, l)) out.set(x, l);
    }
  return out;
}

// An inclusion R <= R'. At most one exists between two relations.
class RelCell {
 public:
  RelCell() = default;
  RelCell(Rel dom, Rel cod) : dom_(std::move(dom)), cod_(std::move(cod)) {
    require(is_valid(), ErrorKind::boundary_mismatch, "relation is not contained in the codomain");
  }
  static RelCell unchecked(Rel dom, Rel cod) {
    RelCell c;
    c.dom_ = std::move(dom);
    c.cod_ = std::move(cod);
    return c;
  }

  const Rel& dom() const { return dom_; }
  const Rel& cod() const { return cod_; }
  bool is_valid() const { return dom_.subset_of(cod_); }

  friend bool operator==(const RelCell& a, const RelCell& b) { return a.dom_ == b.dom_ && a.cod_ == b.cod_; }

 private:
  Rel dom_, cod_;
};

struct RelBicat {
  using Arr = Rel;
  using Cell = RelCell;

  static constexpr const char* name = "rel";

  static FinSet src(const Rel& r) { return r.source(); }
  static FinSet tgt(const Rel& r) { return r.target(); }
  static Rel dom(const RelCell& c) { return c.dom(); }
  static Rel cod(const RelCell& c) { return c.cod(); }

  static Rel identity(const FinSet& x) { return Rel::identity(x); }
  static Rel compose(const Rel& t, const Rel& r) { return rel_after(t, r); }
  static bool is_identity(const Rel& r) { return r.is_identity(); }

  static RelCell id_cell(const Rel& r) { return RelCell::unchecked(r, r); }
  static RelCell vcomp(const RelCell& b, const RelCell& a) {
    require(a.cod() == b.dom(), ErrorKind::boundary_mismatch, "vertical composition: boundaries differ");
    return RelCell::unchecked(a.dom(), b.cod());
  }
  static RelCell whisker_left(const Rel& t, const RelCell& a) {
    return RelCell::unchecked(rel_after(t, a.dom()), rel_after(t, a.cod()));
  }
  static RelCell whisker_right(const RelCell& a, const Rel& r) {
    return RelCell::unchecked(rel_after(a.dom(), r), rel_after(a.cod(), r));
  }
  static RelCell assoc(const Rel& t, const Rel& s, const Rel& r) {
    return RelCell::unchecked(rel_after(rel_after(t, s), r), rel_after(t, rel_after(s, r)));
  }
  static RelCell assoc_inv(const Rel& t, const Rel& s, const Rel& r) {
    return RelCell::unchecked(rel_after(t, rel_after(s, r)), rel_after(rel_after(t, s), r));
  }

  static bool is_valid(const RelCell& c) { return c.is_valid(); }

  static std::optional<RelCell> inverse(const RelCell& c) {
    if (!c.is_valid() || !(c.dom() == c.cod())) return std::nullopt;
    return RelCell::unchecked(c.cod(), c.dom());
  }

  static Rel meet(const Rel& r, const Rel& s) {
    require(r.source() == s.source() && r.target() == s.target(), ErrorKind::boundary_mismatch,
            "local product of non-parallel relations");
    Rel out(r.source(), r.target());
    for (std::size_t x = 0; x < r.source().size(); ++x)
      for (std::size_t a = 0; a < r.target().size(); ++a)
        if (r.contains(x, a) && s.contains(x, a)) out.set(x, a);
    return out;
  }
  static RelCell meet_p(const Rel& r, const Rel& s) { return RelCell::unchecked(meet(r, s), r); }
  static RelCell meet_r(const Rel& r, const Rel& s) { return RelCell::unchecked(meet(r, s), s); }
  static RelCell meet_pair(const RelCell& phi, const RelCell& psi) {
    require(phi.dom() == psi.dom(), ErrorKind::boundary_mismatch, "pairing 2-cells with different domains");
    return RelCell::unchecked(phi.dom(), meet(phi.cod(), psi.cod()));
  }

  static Rel top(const FinSet& x, const FinSet& a) { return Rel::full(x, a); }
  static RelCell to_top(const Rel& r) { return RelCell::unchecked(r, top(r.source(), r.target())); }

  static RelCell fill_cone(const Rel& t, const Rel& q, const std::vector<RelCell>& legs,
                           const std::vector<RelCell>& cells) {
    require(legs.size() == cells.size(), ErrorKind::boundary_mismatch, "cone fill: leg/cell count differ");
    for (std::size_t i = 0; i < legs.size(); ++i)
      require(legs[i].dom() == q && cells[i].dom() == t && legs[i].cod() == cells[i].cod(),
              ErrorKind::boundary_mismatch, "cone fill: cone boundaries differ");
    require(t.subset_of(q), ErrorKind::no_solution, "cone fill: relation not contained in the cone vertex");
    return RelCell::unchecked(t, q);
  }

  static Rel graph(const SetFn& f) { return Rel::graph(f); }

  static std::optional<SetFn> map_function(const Rel& r) {
    std::vector<std::size_t> v(r.source().size());
    for (std::size_t x = 0; x < r.source().size(); ++x) {
      std::size_t n = 0;
      for (std::size_t a = 0; a < r.target().size(); ++a)
        if (r.contains(x, a)) {
          v[x] = a;
          ++n;
        }
      if (n != 1) return std::nullopt;
    }
    return SetFn(r.source(), r.target(), std::move(v));
  }

  // Left adjoints are exactly the total single-valued relations.
  static std::optional<Adjunction<RelBicat>> make_adjunction(const Rel& f) {
    Rel fs = f.converse();
    Rel one_x = Rel::identity(f.source());
    Rel one_a = Rel::identity(f.target());
    Rel kp = rel_after(fs, f);
    Rel im = rel_after(f, fs);
    if (!one_x.subset_of(kp) || !im.subset_of(one_a)) return std::nullopt;
    return Adjunction<RelBicat>{f, fs, RelCell::unchecked(one_x, kp), RelCell::unchecked(im, one_a)};
  }

  static std::optional<EquivWitness<RelBicat>> find_equivalence(const Rel& r) {
    auto a = make_adjunction(r);
    if (!a || !inverse(a->unit) || !inverse(a->counit)) return std::nullopt;
    return EquivWitness<RelBicat>{a->left, a->right, a->unit, a->counit};
  }

  static std::optional<RelCell> comparison(const Rel& f, const Rel& g) {
    if (!f.subset_of(g)) return std::nullopt;
    return RelCell::unchecked(f, g);
  }

  static std::vector<RelCell> all_cells(const Rel& r, const Rel& s, std::size_t) {
    if (!r.subset_of(s)) return {};
    return {RelCell::unchecked(r, s)};
  }
};

inline RelBicat rel_instance() { return {}; }

static_assert(Bicategory<RelBicat>);

}  // namespace cartbicat
