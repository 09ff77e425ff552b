#include <catch_amalgamated.hpp>

#include "cartbicat/gen.hpp"
#include "cartbicat/monoidal.hpp"
#include "oracles.hpp"

using namespace cartbicat;

TEMPLATE_TEST_CASE("associator, unitors and braiding act on labels", "", SpanBicat, RelBicat) {
  using B = TestType;
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t k = 0; k <= 2; ++k) {
        auto x = FinSet::range(n, "x"), y = FinSet::range(m, "y"), z = FinSet::range(k, "z");
        auto a = underlying_function<B>(assoc_data<B>(x, y, z).a.left);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l) {
              auto src = "((" + x[i] + "," + y[j] + ")," + z[l] + ")";
              auto dst = "(" + x[i] + ",(" + y[j] + "," + z[l] + "))";
              auto si = a.dom().index_of(src);
              REQUIRE(si.has_value());
              CHECK(a.cod()[a(*si)] == dst);
            }
        auto s = underlying_function<B>(braid<B>(x, y).s.left);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < m; ++j)
            CHECK(s.cod()[s(product_index(x, y, i, j))] == "(" + y[j] + "," + x[i] + ")");
      }
  for (std::size_t n = 0; n <= 3; ++n) {
    auto x = FinSet::range(n, "x");
    auto u = unitors<B>(x);
    auto l = underlying_function<B>(u.l.left), r = underlying_function<B>(u.r.left);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(l(*l.dom().index_of("(*," + x[i] + ")")) == i);
      CHECK(r.cod()[r(i)] == "(" + x[i] + ",*)");
    }
  }
}

TEMPLATE_TEST_CASE("braiding twice is the identity function; syllepsis and symmetry", "", SpanBicat, RelBicat) {
  using B = TestType;
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      auto x = FinSet::range(n, "x"), y = FinSet::range(m, "y");
      auto ss = B::compose(braid<B>(y, x).s.left, braid<B>(x, y).s.left);
      CHECK(underlying_function<B>(ss).is_identity());
      auto sy = syllepsis<B>(x, y);
      auto c = product_object<B>(x, y);
      CHECK(B::whisker_left(c.legs[0].left, sy.sigma) == sy.phi);
      CHECK(B::whisker_left(c.legs[1].left, sy.sigma) == sy.psi);
      auto sides = symmetry_sides<B>(x, y);
      CHECK(sides.lhs == sides.rhs);
    }
}

TEMPLATE_TEST_CASE("pi is the comparison cell and the pentagon holds", "", SpanBicat, RelBicat) {
  using B = TestType;
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m) {
      auto x = FinSet::range(n, "x"), y = FinSet::range(m, "y"), z = FinSet::range(2, "z"), w = FinSet::range(1, "w");
      auto p = pi<B>(x, y, z, w);
      CHECK(pi_equations_hold(p, p.pi));
      CHECK(is_invertible<B>(p.pi));
      auto cmp = B::comparison(p.m, p.n);
      REQUIRE(cmp.has_value());
      CHECK(*cmp == p.pi);
      auto sides = pentagon_sides<B>(x, y, z, w, FinSet::range(2, "v"));
      CHECK(sides.lhs == sides.rhs);
    }
}

TEMPLATE_TEST_CASE("the structure squares on G are equivalences", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Gen g(seed, 2);
    GObj<B> r{S::arrow(g, g.set("x"), g.set("a"), "r")};
    GObj<B> s{S::arrow(g, g.set("y"), g.set("b"), "s")};
    GObj<B> t{S::arrow(g, g.set("z"), g.set("c"), "t")};
    CHECK(g_is_equivalence(a_tilde(r, s, t)).has_value());
    CHECK(g_is_equivalence(s_tilde(r, s)).has_value());
    CHECK(g_is_equivalence(l_tilde(r)).has_value());
    CHECK(g_is_equivalence(r_tilde(r)).has_value());
    auto m = pi_modification(r, s, t, r);
    CHECK(g_cell_condition(m));
  }
}
