#pragma once

// Brute-force reference computations, written directly from the definitions
// and independent of the library's constructions.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cartbicat/rel.hpp"
#include "cartbicat/span.hpp"

namespace oracle {

using cartbicat::FinSet;
using cartbicat::Rel;
using cartbicat::Span;

// Number of apex elements of s over (x, a).
inline std::size_t multiplicity(const Span& s, std::size_t x, std::size_t a) {
  std::size_t n = 0;
  for (std::size_t e = 0; e < s.apex().size(); ++e)
    if (s.left()(e) == x && s.right()(e) == a) ++n;
  return n;
}

// Matrix of multiplicities: the iso class of a span between fixed ends.
inline std::vector<std::size_t> matrix(const Span& s) {
  std::vector<std::size_t> m(s.source().size() * s.target().size(), 0);
  for (std::size_t e = 0; e < s.apex().size(); ++e) ++m[s.left()(e) * s.target().size() + s.right()(e)];
  return m;
}

// Span composite T R, up to iso: the matrix product of multiplicities.
inline std::vector<std::size_t> composite_matrix(const Span& t, const Span& r) {
  const auto x = r.source().size(), a = r.target().size(), l = t.target().size();
  std::vector<std::size_t> m(x * l, 0);
  for (std::size_t i = 0; i < x; ++i)
    for (std::size_t k = 0; k < l; ++k)
      for (std::size_t j = 0; j < a; ++j) m[i * l + k] += multiplicity(r, i, j) * multiplicity(t, j, k);
  return m;
}

inline bool related(const Rel& r, std::size_t x, std::size_t a) { return r.contains(x, a); }

inline Rel compose(const Rel& t, const Rel& r) {
  Rel out(r.source(), t.target());
  for (std::size_t x = 0; x < r.source().size(); ++x)
    for (std::size_t a = 0; a < r.target().size(); ++a)
      for (std::size_t l = 0; l < t.target().size(); ++l)
        if (r.contains(x, a) && t.contains(a, l)) out.set(x, l);
  return out;
}

// (x, y) ~ (a, b) iff x R a and y S b; pairs indexed x-major.
inline bool tensor_related(const Rel& r, const Rel& s, std::size_t xy, std::size_t ab) {
  const auto ny = s.source().size(), nb = s.target().size();
  return r.contains(xy / ny, ab / nb) && s.contains(xy % ny, ab % nb);
}

// Multiplicity of R (x) S over ((x,y),(a,b)) is the product of multiplicities.
inline std::size_t tensor_multiplicity(const Span& r, const Span& s, std::size_t xy, std::size_t ab) {
  const auto ny = s.source().size(), nb = s.target().size();
  return multiplicity(r, xy / ny, ab / nb) * multiplicity(s, xy % ny, ab % nb);
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace oracle
