#include <catch_amalgamated.hpp>

#include "cartbicat/cartesian.hpp"
#include "cartbicat/gen.hpp"
#include "cartbicat/suites/cartesian_suite.hpp"
#include "oracles.hpp"

using namespace cartbicat;

TEMPLATE_TEST_CASE("unit and composition comparisons are invertible", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m)
      CHECK(is_invertible<B>(tensor_unit_cell<B>(FinSet::range(n, "x"), FinSet::range(m, "y"))));
  auto u = unit_functor_cells<B>();
  CHECK(is_invertible<B>(u.unit));
  CHECK(is_invertible<B>(u.mult));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Gen g(seed, 2);
    auto x = g.set("x"), y = g.set("y"), a = g.set("a"), b = g.set("b"), l = g.set("l"), m = g.set("m");
    auto r = S::arrow(g, x, a, "r"), s = S::arrow(g, y, b, "s"), t = S::arrow(g, a, l, "t"), v = S::arrow(g, b, m, "u");
    CHECK(is_invertible<B>(tensor_comp_cell<B>(r, s, t, v)));
    auto sides = lax_assoc_sides<B>(r, s, t, v, S::arrow(g, l, x, "v"), S::arrow(g, m, y, "w"));
    CHECK(sides.lhs == sides.rhs);
  }
}

TEST_CASE("relation tensor of identities is the identity on the product") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      auto x = FinSet::range(n, "x"), y = FinSet::range(m, "y");
      auto t = g_tensor<RelBicat>(RelBicat::identity(x), RelBicat::identity(y)).product.cell;
      CHECK(t == RelBicat::identity(product(x, y)));
    }
}

TEMPLATE_TEST_CASE("special isos", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), a = g.set("a"), y = g.set("y");
    auto r = S::arrow(g, x, a, "r");
    CHECK(is_invertible<B>(spiso_p<B>(r, y)));
    CHECK(is_invertible<B>(spiso_r<B>(y, r)));
    CHECK(is_invertible<B>(prebeck_p<B>(r, y)));
    CHECK(is_invertible<B>(prebeck_r<B>(y, r)));
    auto f = adjunction_of<B>(S::map(g, x, FinSet::range(x.size() ? g.between(1, 3) : 0, "c")));
    auto h = adjunction_of<B>(S::map(g, y, FinSet::range(y.size() ? g.between(1, 3) : 0, "d")));
    CHECK(is_invertible<B>(m_cell<B>(f, h)));
  }
}

TEST_CASE("arrows into and out of I are enumerated once per iso class") {
  using namespace cartbicat::suites;
  for (std::size_t n = 0; n <= 3; ++n) {
    auto x = FinSet::range(n, "x");
    // Multisets of size k over n elements: C(n + k - 1, k); only k = 0 when n = 0.
    std::size_t spans = 0;
    for (std::size_t k = 0; k <= 3; ++k) spans += n == 0 ? (k == 0) : oracle::binomial(n + k - 1, k);
    CHECK(arrows_to_unit<SpanBicat>(x, 3, false).size() == spans);
    CHECK(arrows_to_unit<RelBicat>(x, 3, true).size() == oracle::power(2, n));
    // Distinct up to iso: pairwise different multiplicity matrices.
    auto v = arrows_to_unit<SpanBicat>(x, 3, false);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) CHECK(oracle::matrix(v[i]) != oracle::matrix(v[j]));
  }
  // Pairs (R, S) with carriers <= 3: frozen from the counts above.
  std::size_t span_pairs = 0, rel_pairs = 0;
  for (std::size_t nx = 0; nx <= 3; ++nx)
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      span_pairs += arrows_to_unit<SpanBicat>(FinSet::range(nx, "x"), 3, false).size() *
                    arrows_to_unit<SpanBicat>(FinSet::range(ny, "y"), 3, true).size();
      rel_pairs += oracle::power(2, nx) * oracle::power(2, ny);
    }
  CHECK(span_pairs == 1225);
  CHECK(rel_pairs == 225);
}

TEMPLATE_TEST_CASE("the strange iso is invertible and its source is a product", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), y = g.set("y");
    auto r = S::arrow(g, x, unit_set(), "r"), s = S::arrow(g, unit_set(), y, "s");
    auto iso = strange_iso<B>(r, s);
    CHECK(B::dom(iso) == strange_lhs<B>(r, s));
    CHECK(B::cod(iso) == B::compose(s, r));
    CHECK(is_invertible<B>(iso));
    CHECK(g_is_equivalence(strange_product_pairing<B>(r, s)).has_value());
  }
}

TEST_CASE("strange iso: both sides have the same multiplicities") {
  using S = Sampler<SpanBicat>;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), y = g.set("y");
    auto r = S::arrow(g, x, unit_set(), "r"), s = S::arrow(g, unit_set(), y, "s");
    CHECK(oracle::matrix(strange_lhs<SpanBicat>(r, s)) == oracle::composite_matrix(s, r));
  }
}
