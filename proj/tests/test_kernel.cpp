#include <catch_amalgamated.hpp>

#include "cartbicat/gen.hpp"
#include "oracles.hpp"

using namespace cartbicat;

TEST_CASE("span composition matches the multiplicity matrix product") {
  using S = Sampler<SpanBicat>;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), a = g.set("a"), l = g.set("l");
    auto r = S::arrow(g, x, a, "r");
    auto t = S::arrow(g, a, l, "t");
    auto tr = SpanBicat::compose(t, r);
    CHECK(oracle::matrix(tr) == oracle::composite_matrix(t, r));
  }
}

TEST_CASE("relation composition matches the existential definition") {
  using S = Sampler<RelBicat>;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Gen g(seed, 4);
    auto x = g.set("x"), a = g.set("a"), l = g.set("l");
    auto r = S::arrow(g, x, a), t = S::arrow(g, a, l);
    CHECK(RelBicat::compose(t, r) == oracle::compose(t, r));
  }
}

TEST_CASE("identities are absorbed on the nose") {
  Gen g(5, 3);
  auto x = FinSet::range(2, "x"), a = FinSet::range(3, "a");
  auto r = Sampler<SpanBicat>::arrow(g, x, a);
  CHECK(SpanBicat::compose(SpanBicat::identity(a), r) == r);
  CHECK(SpanBicat::compose(r, SpanBicat::identity(x)) == r);
  auto q = Sampler<RelBicat>::arrow(g, x, a);
  CHECK(RelBicat::compose(RelBicat::identity(a), q) == q);
  CHECK(RelBicat::compose(q, RelBicat::identity(x)) == q);
}

TEMPLATE_TEST_CASE("interchange and associator coherence", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), a = g.set("a"), l = g.set("l"), n = g.set("n");
    auto a1 = S::sub(g, S::arrow(g, x, a, "r"), "p");
    auto b1 = S::sub(g, S::arrow(g, a, l, "t"), "q");
    auto a0 = S::sub(g, B::dom(a1), "u");
    auto b0 = S::sub(g, B::dom(b1), "v");
    CHECK(hcomp<B>(B::vcomp(b1, b0), B::vcomp(a1, a0)) == B::vcomp(hcomp<B>(b1, a1), hcomp<B>(b0, a0)));

    auto r = S::arrow(g, x, a, "r"), s = S::arrow(g, a, l, "s"), t = S::arrow(g, l, n, "t");
    auto al = B::assoc(t, s, r);
    CHECK(B::vcomp(B::assoc_inv(t, s, r), al) == B::id_cell(B::dom(al)));
    CHECK(is_invertible<B>(al));
    CHECK(B::is_valid(al));
  }
}

TEMPLATE_TEST_CASE("every map gets an adjunction satisfying both triangles", "", SpanBicat, RelBicat) {
  using B = TestType;
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = (n ? 1 : 0); m <= 3; ++m) {
      auto x = FinSet::range(n, "x"), a = FinSet::range(m, "a");
      for_each_function(n, m, [&](const std::vector<std::size_t>& t) {
        auto f = B::graph(SetFn(x, a, t));
        REQUIRE(B::map_function(f).has_value());
        auto adj = adjunction_of<B>(f);
        CHECK(check_adjunction(adj).all_pass());
      });
    }
}

TEST_CASE("a span with two legs over one point is not a map") {
  auto x = FinSet::range(1, "x"), a = FinSet::range(1, "a"), e = FinSet::range(2, "e");
  Span two(SetFn::constant(e, x, 0), SetFn::constant(e, a, 0));
  CHECK_FALSE(SpanBicat::map_function(two).has_value());
  CHECK_THROWS_AS(adjunction_of<SpanBicat>(two), Error);
  Span none(SetFn(FinSet::range(0, "e"), x, {}), SetFn(FinSet::range(0, "e"), a, {}));
  CHECK_FALSE(SpanBicat::map_function(none).has_value());
}

TEMPLATE_TEST_CASE("mates are mutually inverse", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Gen g(seed, 2);
    auto x = g.set("x"), a = g.set("a");
    auto c = FinSet::range(a.size() ? g.between(1, 2) : 0, "c");
    auto r = S::arrow(g, x, a, "r");
    auto u = adjunction_of<B>(S::map(g, a, c));
    const auto ur = B::compose(u.left, r);
    for (const auto& alpha : B::all_cells(ur, ur, 10000))
      CHECK(to_primary<B>(to_secondary<B>(alpha, u, r), u, ur) == alpha);
    for (const auto& beta : B::all_cells(r, B::compose(u.right, ur), 10000))
      CHECK(to_secondary<B>(to_primary<B>(beta, u, ur), u, r) == beta);
  }
}

TEST_CASE("inverse of a span cell exists iff the apex map is bijective") {
  auto x = FinSet::range(1, "x"), e = FinSet::range(2, "e");
  Span s(SetFn::constant(e, x, 0), SetFn::constant(e, x, 0));
  auto swap = SpanCell::unchecked(s, s, SetFn(e, e, {1, 0}));
  auto fold = SpanCell::unchecked(s, s, SetFn(e, e, {0, 0}));
  CHECK(is_invertible<SpanBicat>(swap));
  CHECK_FALSE(is_invertible<SpanBicat>(fold));
  CHECK(SpanBicat::vcomp(swap, swap) == SpanBicat::id_cell(s));
}
