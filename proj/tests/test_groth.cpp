#include <catch_amalgamated.hpp>

#include "cartbicat/gen.hpp"
#include "cartbicat/groth.hpp"
#include "oracles.hpp"

using namespace cartbicat;

TEST_CASE("relation tensor is the componentwise product relation") {
  using S = Sampler<RelBicat>;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), a = g.set("a"), y = g.set("y"), b = g.set("b");
    auto r = S::arrow(g, x, a), s = S::arrow(g, y, b);
    auto t = g_tensor<RelBicat>(r, s).product.cell;
    REQUIRE(t.source().size() == x.size() * y.size());
    REQUIRE(t.target().size() == a.size() * b.size());
    for (std::size_t i = 0; i < t.source().size(); ++i)
      for (std::size_t j = 0; j < t.target().size(); ++j) CHECK(t.contains(i, j) == oracle::tensor_related(r, s, i, j));
  }
}

TEST_CASE("span tensor multiplies multiplicities") {
  using S = Sampler<SpanBicat>;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), a = g.set("a"), y = g.set("y"), b = g.set("b");
    auto r = S::arrow(g, x, a, "r"), s = S::arrow(g, y, b, "s");
    auto t = g_tensor<SpanBicat>(r, s).product.cell;
    CHECK(t.apex().size() == r.apex().size() * s.apex().size());
    for (std::size_t i = 0; i < t.source().size(); ++i)
      for (std::size_t j = 0; j < t.target().size(); ++j)
        CHECK(oracle::multiplicity(t, i, j) == oracle::tensor_multiplicity(r, s, i, j));
  }
}

TEMPLATE_TEST_CASE("squares: identities are units, projections are secondary mates", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), a = g.set("a"), y = g.set("y"), b = g.set("b");
    auto prod = g_tensor<B>(S::arrow(g, x, a, "r"), S::arrow(g, y, b, "s"));
    const auto& pp = prod.proj_p;
    CHECK(g_equal(g_compose(g_identity(pp.dom), pp), pp));
    CHECK(g_equal(g_compose(pp, g_identity(pp.cod)), pp));
    CHECK(d0(pp).left == prod.top_cone.legs[0].left);
    CHECK(d1(pp).left == prod.bottom_cone.legs[0].left);
    CHECK(to_secondary<B>(pp.primary, pp.u, pp.dom.cell) == pp.secondary);
  }
}

TEMPLATE_TEST_CASE("pairing of the projections is the identity, and it is the only solution", "", SpanBicat,
                   RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Gen g(seed, 2);
    auto x = g.set("x"), a = g.set("a"), y = g.set("y"), b = g.set("b");
    auto prod = g_tensor<B>(S::arrow(g, x, a, "r"), S::arrow(g, y, b, "s"));
    auto id = g_pair<B>(prod.proj_p, prod.proj_r, prod);
    CHECK(g_equal(id, g_identity(prod.product)));
    CHECK(g_pair_solution_count<B>(prod.proj_p, prod.proj_r, prod, id) == 1);
  }
}

TEMPLATE_TEST_CASE("terminal object and diagonal", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  CHECK(g_terminal<B>().cell == B::identity(unit_set()));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), a = g.set("a");
    auto r = S::arrow(g, x, a, "r"), s = S::arrow(g, x, a, "s");
    CHECK(is_invertible<B>(dunit_iso<B>(r, s)));
    auto bang_r = g_bang(GObj<B>{r});
    CHECK(bang_r.cod == g_terminal<B>());
    auto d = g_diag(GObj<B>{r});
    auto pd = g_compose(d, g_tensor<B>(r, r).proj_p);
    CHECK(underlying_function<B>(pd.f.left).is_identity());
    CHECK(underlying_function<B>(pd.u.left).is_identity());
  }
}
