#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "finset.hpp"
#include "kernel.hpp"
#include "rel.hpp"
#include "span.hpp"

namespace cartbicat {

// splitmix64 finalizer; derives independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::string_view check_id, std::size_t trial) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the id
  for (char c : check_id) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return mix_seed(mix_seed(seed ^ h) + trial);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed, std::size_t max_carrier) : rng_(seed), max_(max_carrier) {}

  std::size_t max_carrier() const { return max_; }

  // Uniform in [0, n).
  std::size_t below(std::size_t n) {
    if (n <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

  std::size_t carrier() { return between(0, max_); }

  FinSet set(std::string_view prefix) { return FinSet::range(carrier(), prefix); }
  FinSet set(std::size_t n, std::string_view prefix) { return FinSet::range(n, prefix); }

  // nullopt when cod is empty and dom is not.
  std::optional<SetFn> function(const FinSet& dom, const FinSet& cod) {
    if (cod.size() == 0 && dom.size() > 0) return std::nullopt;
    std::vector<std::size_t> t(dom.size());
    for (auto& v : t) v = below(cod.size());
    return SetFn(dom, cod, std::move(t));
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

 private:
  std::mt19937_64 rng_;
  std::size_t max_;
};

// Instance-specific sampling.
template <class B>
struct Sampler;

template <>
struct Sampler<SpanBicat> {
  static constexpr const char* apex_prefix = "s";

  // Apex size uniform in [0, max], legs uniform. Empty when a leg cannot exist.
  static Span arrow(Gen& g, const FinSet& x, const FinSet& a, std::string_view prefix = "s") {
    std::size_t n = (x.size() == 0 || a.size() == 0) ? 0 : g.carrier();
    FinSet apex = FinSet::range(n, prefix);
    return Span(*g.function(apex, x), *g.function(apex, a));
  }

  // A random 2-cell R -> s: R's apex maps into s's apex, legs induced.
  static SpanCell sub(Gen& g, const Span& s, std::string_view prefix = "q") {
    std::size_t n = s.apex().size() == 0 ? 0 : g.carrier();
    FinSet apex = FinSet::range(n, prefix);
    SetFn m = *g.function(apex, s.apex());
    Span r(compose(s.left(), m), compose(s.right(), m));
    return SpanCell::unchecked(r, s, m);
  }

  // A cell R -> s with R one element smaller.
  static std::optional<SpanCell> proper_sub(Gen& g, const Span& s) {
    if (s.apex().size() == 0) return std::nullopt;
    std::size_t drop = g.below(s.apex().size());
    std::vector<std::string> labels;
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < s.apex().size(); ++i)
      if (i != drop) {
        labels.push_back(s.apex()[i]);
        m.push_back(i);
      }
    FinSet apex = FinSet::trusted(std::move(labels));
    SetFn f(apex, s.apex(), std::move(m));
    return SpanCell::unchecked(Span(compose(s.left(), f), compose(s.right(), f)), s, f);
  }

  // A map X -> A whose apex is a relabelled copy of X.
  static Span map(Gen& g, const FinSet& x, const FinSet& a) {
    auto f = g.function(x, a);
    require(f.has_value(), ErrorKind::invalid_config, "no map into an empty set");
    auto perm = g.permutation(x.size());
    FinSet apex = FinSet::range(x.size(), "m");
    SetFn left(apex, x, perm);
    return Span(left, compose(*f, left));
  }

  // A map with the same underlying function as f.
  static Span relabel_map(Gen& g, const Span& f) {
    auto fn = *SpanBicat::map_function(f);
    auto perm = g.permutation(f.source().size());
    FinSet apex = FinSet::range(f.source().size(), "m");
    SetFn left(apex, f.source(), perm);
    return Span(left, compose(fn, left));
  }

  // Same boundary, map not leg-commuting. nullopt when impossible.
  static std::optional<SpanCell> corrupt(Gen& g, const SpanCell& c) {
    const auto& dom = c.dom();
    const auto& cod = c.cod();
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < dom.apex().size(); ++i)
      for (std::size_t j = 0; j < cod.apex().size(); ++j)
        if (cod.left()(j) != dom.left()(i) || cod.right()(j) != dom.right()(i)) bad.emplace_back(i, j);
    if (bad.empty()) return std::nullopt;
    auto [i, j] = bad[g.below(bad.size())];
    auto t = c.map().table();
    t[i] = j;
    return SpanCell::unchecked(dom, cod, SetFn(dom.apex(), cod.apex(), std::move(t)));
  }
};

template <>
struct Sampler<RelBicat> {
  static Rel arrow(Gen& g, const FinSet& x, const FinSet& a, std::string_view = "s") {
    Rel r(x, a);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (g.coin()) r.set(i, j);
    return r;
  }

  static RelCell sub(Gen& g, const Rel& s, std::string_view = "q") {
    Rel r(s.source(), s.target());
    for (auto [x, a] : s.pairs())
      if (g.coin()) r.set(x, a);
    return RelCell::unchecked(r, s);
  }

  static std::optional<RelCell> proper_sub(Gen& g, const Rel& s) {
    auto p = s.pairs();
    if (p.empty()) return std::nullopt;
    Rel r = s;
    auto [x, a] = p[g.below(p.size())];
    r.set(x, a, false);
    return RelCell::unchecked(r, s);
  }

  static Rel map(Gen& g, const FinSet& x, const FinSet& a) {
    auto f = g.function(x, a);
    require(f.has_value(), ErrorKind::invalid_config, "no map into an empty set");
    return Rel::graph(*f);
  }

  static Rel relabel_map(Gen&, const Rel& f) { return f; }

  // An "inclusion" whose domain is not contained in the codomain.
  static std::optional<RelCell> corrupt(Gen& g, const RelCell& c) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < c.cod().source().size(); ++x)
      for (std::size_t a = 0; a < c.cod().target().size(); ++a)
        if (!c.cod().contains(x, a)) out.emplace_back(x, a);
    if (out.empty()) return std::nullopt;
    Rel d = c.dom();
    auto [x, a] = out[g.below(out.size())];
    d.set(x, a);
    return RelCell::unchecked(d, c.cod());
  }
};

}  // namespace cartbicat
