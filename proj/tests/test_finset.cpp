#include <catch_amalgamated.hpp>

#include "cartbicat/error.hpp"
#include "cartbicat/finset.hpp"

using namespace cartbicat;

TEST_CASE("range and unit set") {
  auto x = FinSet::range(3, "x");
  CHECK(x.labels() == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK(x.index_of("x2") == std::optional<std::size_t>(2));
  CHECK_FALSE(x.index_of("y0").has_value());
  CHECK(unit_set().labels() == std::vector<std::string>{"*"});
  CHECK(FinSet::range(0, "x").empty());
}

TEST_CASE("duplicate labels are rejected") {
  CHECK_THROWS_AS(FinSet({"a", "a"}), Error);
}

TEST_CASE("product labels are x-major") {
  auto x = FinSet::range(2, "x"), y = FinSet::range(3, "y");
  auto p = product(x, y);
  REQUIRE(p.size() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(p[product_index(x, y, i, j)] == "(" + x[i] + "," + y[j] + ")");
}

TEST_CASE("projections, pairing and product of functions agree with labels") {
  auto x = FinSet::range(2, "x"), y = FinSet::range(3, "y"), a = FinSet::range(2, "a");
  auto p1 = proj1(x, y), p2 = proj2(x, y);
  auto xy = product(x, y);
  for (std::size_t k = 0; k < xy.size(); ++k) CHECK(xy[k] == "(" + x[p1(k)] + "," + y[p2(k)] + ")");
  CHECK(fn_pair(p1, p2).is_identity());

  SetFn f(x, a, {1, 0});
  SetFn g(y, a, {0, 0, 1});
  auto fg = fn_times(f, g);
  auto aa = product(a, a);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(aa[fg(product_index(x, y, i, j))] == "(" + a[f(i)] + "," + a[g(j)] + ")");
}

TEST_CASE("inverse exists exactly for bijections") {
  auto x = FinSet::range(3, "x");
  SetFn perm(x, x, {2, 0, 1});
  auto inv = perm.inverse();
  REQUIRE(inv.has_value());
  CHECK(compose(*inv, perm).is_identity());
  CHECK(compose(perm, *inv).is_identity());
  CHECK_FALSE(SetFn(x, x, {0, 0, 1}).inverse().has_value());
}

TEST_CASE("function enumeration visits |cod|^|dom| tables") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      std::size_t count = 0;
      for_each_function(n, m, [&](const std::vector<std::size_t>&) { ++count; });
      std::size_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= m;
      CHECK(count == expected);
    }
}

TEST_CASE("composition checks boundaries") {
  auto x = FinSet::range(2, "x"), y = FinSet::range(2, "y");
  CHECK_THROWS_AS(compose(SetFn::identity(x), SetFn::identity(y)), Error);
}
