#include <catch_amalgamated.hpp>

#include "cartbicat/gen.hpp"
#include "cartbicat/hom_products.hpp"
#include "oracles.hpp"

using namespace cartbicat;

TEST_CASE("relation meet is intersection, top is the full relation") {
  using S = Sampler<RelBicat>;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Gen g(seed, 4);
    auto x = g.set("x"), a = g.set("a");
    auto r = S::arrow(g, x, a), s = S::arrow(g, x, a);
    auto m = RelBicat::meet(r, s);
    auto t = RelBicat::top(x, a);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(m.contains(i, j) == (r.contains(i, j) && s.contains(i, j)));
        CHECK(t.contains(i, j));
      }
  }
}

TEST_CASE("span meet multiplies multiplicities, top has one element per pair") {
  using S = Sampler<SpanBicat>;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), a = g.set("a");
    auto r = S::arrow(g, x, a, "r"), s = S::arrow(g, x, a, "s");
    auto m = SpanBicat::meet(r, s);
    auto t = SpanBicat::top(x, a);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(oracle::multiplicity(m, i, j) == oracle::multiplicity(r, i, j) * oracle::multiplicity(s, i, j));
        CHECK(oracle::multiplicity(t, i, j) == 1);
      }
  }
}

TEST_CASE("top on I, I is the identity") {
  CHECK(SpanBicat::top(unit_set(), unit_set()) == SpanBicat::identity(unit_set()));
  CHECK(RelBicat::top(unit_set(), unit_set()) == RelBicat::identity(unit_set()));
}

TEMPLATE_TEST_CASE("local products and terminals are universal (exhaustive cells)", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Gen g(seed, 3);
    auto x = g.set("x"), a = g.set("a");
    auto r = S::arrow(g, x, a, "r"), r2 = S::arrow(g, x, a, "s");
    auto w = local_product<B>(r, r2);
    auto c = S::sub(g, w.product, "t");
    CHECK(check_local_product_universal<B>(B::vcomp(w.proj1, c), B::vcomp(w.proj2, c)));
    CHECK(check_local_terminal_universal<B>(r));
    auto rr = local_product<B>(r, r);
    CHECK(B::vcomp(rr.proj1, delta<B>(r)) == B::id_cell(r));
    CHECK(B::vcomp(rr.proj2, delta<B>(r)) == B::id_cell(r));
  }
}

TEST_CASE("a proper sub-span of the meet is not a product cone") {
  auto x = FinSet::range(1, "x"), a = FinSet::range(1, "a"), e = FinSet::range(2, "e");
  Span r(SetFn::constant(e, x, 0), SetFn::constant(e, a, 0));
  auto w = local_product<SpanBicat>(r, r);
  REQUIRE(w.product.apex().size() == 4);
  Gen g(1, 2);
  auto sub = *Sampler<SpanBicat>::proper_sub(g, w.product);
  CHECK_FALSE(is_local_product_cone<SpanBicat>(SpanBicat::vcomp(w.proj1, sub), SpanBicat::vcomp(w.proj2, sub)));
}
