#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "../gen.hpp"
#include "../groth.hpp"
#include "../harness.hpp"
#include "../interchange.hpp"
#include "../kernel.hpp"
#include "../map_products.hpp"

namespace cartbicat::suites {

template <Bicategory B>
struct Kit {
  using Arr = typename B::Arr;
  using Cell = typename B::Cell;
  using S = Sampler<B>;

  // A set that admits a map from src.
  static FinSet over(Gen& g, const FinSet& src, const std::string& prefix) {
    const std::size_t lo = src.size() > 0 ? 1 : 0;
    return FinSet::range(g.between(lo, std::max(lo, g.max_carrier())), prefix);
  }

  static FinSet sized(Gen& g, std::size_t lo, const std::string& prefix) {
    return FinSet::range(g.between(lo, std::max(lo, g.max_carrier())), prefix);
  }

  static Arr arr(const Document& d, const std::string& n) { return d.template arrow<B>(n); }

  static Adjunction<B> map(const Document& d, const std::string& n) {
    auto a = arr(d, n);
    need(B::map_function(a).has_value(), "arrow is not a map");
    return adjunction_of<B>(a);
  }

  static Cell cell(const Document& d, const std::string& n) {
    auto c = d.template cell<B>(n);
    need(B::is_valid(c), "invalid 2-cell");
    return c;
  }

  // A random square into s, written under k.f, k.u, k.cod, k.beta.
  // Returns its domain.
  static Arr square_into(Gen& g, Document& d, const std::string& k, const Arr& s) {
    auto x = FinSet::range(B::src(s).size() ? g.carrier() : 0, k + "x");
    auto a = FinSet::range(B::tgt(s).size() ? g.carrier() : 0, k + "a");
    auto f = S::map(g, x, B::src(s));
    auto u = S::map(g, a, B::tgt(s));
    auto q = B::compose(adjunction_of<B>(u).right, B::compose(s, f));
    auto beta = S::sub(g, q, k + "q");
    d.add(k + ".f", f);
    d.add(k + ".u", u);
    d.add(k + ".cod", s);
    d.add(k + ".beta", beta);
    return B::dom(beta);
  }

  static GArr<B> square(const Document& d, const std::string& k) {
    auto f = map(d, k + ".f");
    auto u = map(d, k + ".u");
    auto s = arr(d, k + ".cod");
    auto beta = cell(d, k + ".beta");
    need(B::src(s) == B::tgt(f.left) && B::tgt(s) == B::tgt(u.left), "square frame mismatch");
    need(B::cod(beta) == B::compose(u.right, B::compose(s, f.left)), "secondary cell has the wrong codomain");
    return make_garr_secondary<B>(GObj<B>{B::dom(beta)}, GObj<B>{s}, f, u, beta);
  }

  // Every automorphism of s swapping two elements (spans only).
  static std::vector<Cell> swaps(const Arr& s) {
    std::vector<Cell> out;
    if constexpr (std::is_same_v<Arr, Span>) {
      for (std::size_t i = 0; i < s.apex().size(); ++i)
        for (std::size_t j = i + 1; j < s.apex().size(); ++j)
          if (s.left()(i) == s.left()(j) && s.right()(i) == s.right()(j)) {
            std::vector<std::size_t> t(s.apex().size());
            for (std::size_t z = 0; z < t.size(); ++z) t[z] = z;
            std::swap(t[i], t[j]);
            out.push_back(SpanCell::unchecked(s, s, SetFn(s.apex(), s.apex(), std::move(t))));
          }
    } else {
      (void)s;
    }
    return out;
  }
};

// Every tuple in [0, max]^k, lexicographic.
inline std::vector<std::vector<std::size_t>> size_tuples(std::size_t k, std::size_t max) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(k, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && ++t[i - 1] > max) t[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// Documents holding only named sets, one per size tuple.
inline std::vector<Document> set_tuples(const std::vector<std::string>& names, std::size_t max) {
  std::vector<Document> out;
  for (const auto& t : size_tuples(names.size(), max)) {
    Document d;
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::string prefix(1, static_cast<char>(std::tolower(static_cast<unsigned char>(names[i][0]))));
      d.add_set(names[i], FinSet::range(t[i], prefix));
    }
    out.push_back(std::move(d));
  }
  return out;
}

inline std::function<bool(const Document&)> holds_of(const std::vector<Property>& ps, const std::string& id) {
  for (const auto& p : ps)
    if (p.id == id) return p.holds;
  fail(ErrorKind::invalid_config, "no property " + id);
}

}  // namespace cartbicat::suites
