#include <catch_amalgamated.hpp>

#include "cartbicat/gen.hpp"
#include "cartbicat/harness.hpp"
#include "cartbicat/interchange.hpp"

using namespace cartbicat;

TEMPLATE_TEST_CASE("print and parse round trip", "", SpanBicat, RelBicat) {
  using B = TestType;
  using S = Sampler<B>;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Gen g(seed, 4);
    auto x = g.set("x"), a = g.set("a");
    Document d;
    d.directives.push_back("check kernel.interchange");
    d.add("R", S::arrow(g, x, a, "r"));
    d.add("c", S::sub(g, S::arrow(g, x, a, "s"), "q"));
    if (auto f = g.function(x, a)) d.add_fn("f", *f);
    const auto text = d.print();
    const auto back = Document::parse(text);
    CHECK(back == d);
    CHECK(back.print() == text);
    CHECK(back.template arrow<B>("R") == d.template arrow<B>("R"));
    CHECK(back.template cell<B>("c") == d.template cell<B>("c"));
  }
}

TEST_CASE("a hand-written document parses") {
  const std::string text =
      "# comment\n"
      "#!check kernel.cell-valid\n"
      "set X x0 x1\n"
      "set A a0\n"
      "span R X A r0:x0:a0 r1:x1:a0\n"
      "span T X A t0:x0:a0\n"
      "cell c T R t0:r0\n";
  auto d = Document::parse(text);
  CHECK(d.directives == std::vector<std::string>{"check kernel.cell-valid"});
  auto c = d.cell<SpanBicat>("c");
  CHECK(c.is_valid());
  CHECK(d.span("R").apex().size() == 2);
  CHECK(directive_value(d, "check") == std::optional<std::string>("kernel.cell-valid"));
}

TEST_CASE("malformed documents are parse errors") {
  auto kind_of = [](const std::string& text) -> std::optional<ErrorKind> {
    try {
      Document::parse(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  CHECK(kind_of("span R X X\n") == ErrorKind::parse_error);
  CHECK(kind_of("set X a a\n") == ErrorKind::parse_error);
  CHECK(kind_of("set X a\nset X b\n") == ErrorKind::parse_error);
  CHECK(kind_of("set X a\nrel R X X a:b\n") == ErrorKind::parse_error);
  CHECK(kind_of("frobnicate\n") == ErrorKind::parse_error);
  CHECK(kind_of("set X a\nspan R X X r:a:a\nspan T X X t:a:a\ncell c R T\n") == ErrorKind::parse_error);
  CHECK_FALSE(kind_of("set X\n").has_value());
}

TEST_CASE("one-element deletions all parse and are strictly smaller") {
  const std::string text =
      "set X x0 x1\n"
      "set A a0\n"
      "span R X A r0:x0:a0 r1:x1:a0\n"
      "span T X A t0:x0:a0\n"
      "cell c T R t0:r0\n";
  auto dels = one_element_deletions(text);
  CHECK_FALSE(dels.empty());
  for (const auto& t : dels) {
    CHECK_NOTHROW(Document::parse(t));
    CHECK(t.size() < text.size());
  }
}

TEST_CASE("shrinking stops at a locally minimal failing input") {
  // Fails whenever R has at least two apex elements.
  Property p;
  p.id = "test.small-apex";
  p.holds = [](const Document& d) { return d.span("R").apex().size() < 2; };
  Gen g(3, 4);
  Document d;
  auto x = FinSet::range(4, "x"), a = FinSet::range(3, "a");
  auto e = FinSet::range(4, "r");
  d.add("R", Span(*g.function(e, x), *g.function(e, a)));
  REQUIRE(evaluate(p, d) == Verdict::fail);
  const auto small = shrink(p, d.print());
  CHECK(evaluate_text(p, small) == Verdict::fail);
  CHECK(Document::parse(small).span("R").apex().size() == 2);
  for (const auto& cand : one_element_deletions(small)) CHECK(evaluate_text(p, cand) != Verdict::fail);
}
