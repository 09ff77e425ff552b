#include <catch_amalgamated.hpp>

#include "cartbicat/gen.hpp"
#include "cartbicat/map_products.hpp"
#include "oracles.hpp"

using namespace cartbicat;

TEMPLATE_TEST_CASE("canonical cones pass the product-cone verifier", "", SpanBicat, RelBicat) {
  using B = TestType;
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      auto rep = check_product_cone<B>(product_object<B>(FinSet::range(n, "x"), FinSet::range(m, "y")), 3, 2);
      CHECK(rep.all_pass());
    }
  CHECK(check_product_cone<B>(terminal<B>(), 3, 2).all_pass());
  CHECK(check_product_cone<B>(nary_product<B>({FinSet::range(2, "x"), FinSet::range(1, "y"), FinSet::range(2, "z")}), 2, 2)
            .all_pass());
}

TEMPLATE_TEST_CASE("a cone with a constant leg is not a product", "", SpanBicat, RelBicat) {
  using B = TestType;
  auto x = FinSet::range(2, "x"), y = FinSet::range(2, "y");
  auto v = product(x, y);
  ProductCone<B> cone{v, {x, y}, {map_of<B>(proj1(x, y)), map_of<B>(SetFn::constant(v, y, 0))}};
  CHECK_FALSE(check_product_cone<B>(cone, 3, 2).all_pass());
}

TEMPLATE_TEST_CASE("pairing and products of maps act as the set functions do", "", SpanBicat, RelBicat) {
  using B = TestType;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Gen g(seed, 3);
    auto z = g.set("z");
    auto x = FinSet::range(z.size() ? g.between(1, 3) : g.carrier(), "x");
    auto y = FinSet::range(z.size() ? g.between(1, 3) : g.carrier(), "y");
    auto f = *g.function(z, x), h = *g.function(z, y);
    auto pr = pairing<B>(map_of<B>(f), map_of<B>(h));
    CHECK(underlying_function<B>(pr.map.left).table() == fn_pair(f, h).table());
    CHECK(is_invertible<B>(pr.mu));
    CHECK(is_invertible<B>(pr.nu));

    auto t = times_on_arrows<B>(map_of<B>(f), map_of<B>(h));
    CHECK(underlying_function<B>(t.map.left).table() == fn_times(f, h).table());
    CHECK(is_invertible<B>(t.p_prime));
    CHECK(is_invertible<B>(t.r_prime));
    CHECK(underlying_function<B>(diag<B>(z).left).table() == fn_pair(SetFn::identity(z), SetFn::identity(z)).table());
    CHECK(underlying_function<B>(bang<B>(z).left).cod() == unit_set());
  }
}

TEST_CASE("number of functions is |P|^|A|") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m)
      CHECK(all_functions(FinSet::range(n, "a"), FinSet::range(m, "p")).size() == oracle::power(m, n));
}

TEMPLATE_TEST_CASE("fill2 recovers a cell from its projections", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Gen g(seed, 2);
    auto a = g.set("a"), x = g.set("x"), y = g.set("y");
    auto cone = product_object<B>(x, y);
    auto u = S::arrow(g, a, cone.vertex, "u");
    auto c = S::sub(g, u, "t");
    auto alpha = B::whisker_left(cone.legs[0].left, c);
    auto beta = B::whisker_left(cone.legs[1].left, c);
    CHECK(fill2(cone, B::dom(c), B::cod(c), alpha, beta) == c);
    CHECK(fill2_candidates<B>(cone, B::dom(c), B::cod(c), alpha, beta).size() == 1);
  }
}
