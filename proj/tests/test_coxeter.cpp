#include <doctest.h>

#include <vector>

#include "test_util.hpp"

using namespace heckecat;
using testutil::fixture;

TEST_CASE("coxeter: cartan type parsing") {
  CHECK(CartanType::parse("A2").str() == "A2");
  CHECK(CartanType::parse("b3").str() == "B3");
  CHECK(CartanType::parse("g2").str() == "G2");
  // C_n shares its Weyl group with B_n and is accepted as an alias.
  CHECK(CartanType::parse("C3").weyl_order() == CartanType::parse("B3").weyl_order());
  CHECK_THROWS_AS((void)CartanType::parse("Z9"), UnsupportedType);
  CHECK_THROWS_AS((void)CartanType::parse("A0"), UnsupportedType);
  CHECK_THROWS_AS((void)CartanType::parse("G3"), UnsupportedType);
  CHECK_THROWS_AS((void)CartanType::parse(""), UnsupportedType);
}

TEST_CASE("coxeter: group orders") {
  CHECK(fixture("A1").g.size() == 2);
  CHECK(fixture("A2").g.size() == 6);
  CHECK(fixture("B2").g.size() == 8);
  CHECK(fixture("G2").g.size() == 12);
  CHECK(fixture("A3").g.size() == 24);
  CHECK_THROWS_AS(CoxeterGroup(CartanType::parse("A4"), 100), GroupTooLarge);
}

TEST_CASE("coxeter: multiplication") {
  const auto& f = fixture("A2");
  const CoxeterGroup& g = f.g;
  CHECK(g.multiply(f.el("1"), f.el("1")) == g.identity());
  CHECK(g.element_str(g.multiply(f.el("1"), f.el("2"))) == "12");
  CHECK(g.multiply(f.el("121"), f.el("212")) == g.identity());

  // Associativity over the full group.
  for (std::uint32_t a = 0; a < g.size(); ++a) {
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      for (std::uint32_t c = 0; c < g.size(); ++c) {
        CHECK(g.multiply(g.multiply(Element{a}, Element{b}), Element{c}) ==
              g.multiply(Element{a}, g.multiply(Element{b}, Element{c})));
      }
    }
  }
}

TEST_CASE("coxeter: inverse, length, longest element") {
  const auto& f = fixture("A2");
  CHECK(f.g.element_str(f.g.inverse(f.el("12"))) == "21");
  CHECK(f.g.length(f.g.longest()) == 3);
  CHECK(fixture("B2").g.length(fixture("B2").g.longest()) == 4);
  CHECK(fixture("G2").g.length(fixture("G2").g.longest()) == 6);
  CHECK(f.g.type().positive_roots() == 3);

  for (std::uint32_t id = 0; id < f.g.size(); ++id) {
    const Element w{id};
    CHECK(f.g.multiply(w, f.g.inverse(w)) == f.g.identity());
    CHECK(f.g.length(f.g.inverse(w)) == f.g.length(w));
  }
}

TEST_CASE("coxeter: length changes by one under a generator") {
  for (const char* cartan : {"A2", "B2", "G2"}) {
    const auto& f = fixture(cartan);
    for (std::uint32_t id = 0; id < f.g.size(); ++id) {
      const Element w{id};
      for (int s = 1; s <= f.g.rank(); ++s) {
        const int dr = static_cast<int>(f.g.length(f.g.right(w, s))) -
                       static_cast<int>(f.g.length(w));
        const int dl = static_cast<int>(f.g.length(f.g.left(s, w))) -
                       static_cast<int>(f.g.length(w));
        CHECK(dr * dr == 1);
        CHECK(dl * dl == 1);
      }
    }
  }
}

TEST_CASE("coxeter: descent sets") {
  const auto& f = fixture("A2");
  CHECK(f.g.descents(f.g.identity(), Side::Left).empty());
  CHECK(f.g.descents(f.el("12"), Side::Left) == std::vector<int>{1});
  CHECK(f.g.descents(f.g.longest(), Side::Right) == std::vector<int>{1, 2});
  CHECK(f.g.is_left_descent(1, f.el("12")));
  CHECK(!f.g.is_left_descent(2, f.el("12")));
  CHECK(f.g.is_right_descent(f.el("12"), 2));
}

TEST_CASE("coxeter: bruhat order") {
  const auto& f = fixture("A2");
  const CoxeterGroup& g = f.g;
  CHECK(g.bruhat_leq(f.el("1"), g.longest()));
  CHECK(!g.bruhat_leq(f.el("1"), f.el("2")));
  CHECK(g.bruhat_leq(f.el("1"), f.el("21")));

  const Element w0 = g.longest();
  for (std::uint32_t a = 0; a < g.size(); ++a) {
    const Element x{a};
    CHECK(g.bruhat_leq(g.identity(), x));
    CHECK(g.bruhat_leq(x, w0));
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      const Element y{b};
      // Order anti-automorphism by w0 and invariance under inversion.
      CHECK(g.bruhat_leq(x, y) == g.bruhat_leq(g.inverse(x), g.inverse(y)));
      CHECK(g.bruhat_leq(x, y) ==
            g.bruhat_leq(g.multiply(w0, y), g.multiply(w0, x)));
      CHECK(g.bruhat_leq(x, y) ==
            g.bruhat_leq(g.multiply(y, w0), g.multiply(x, w0)));
    }
  }
}

TEST_CASE("coxeter: words") {
  const auto& f = fixture("A2");
  const CoxeterGroup& g = f.g;
  CHECK(g.from_word(std::vector<int>{}) == g.identity());
  const std::vector<int> w121{1, 2, 1}, w212{2, 1, 2};
  CHECK(g.from_word(w121) == g.from_word(w212));
  CHECK(g.from_word(w121) == g.longest());
  CHECK(g.word(g.longest()) == std::vector<std::uint8_t>{1, 2, 1});
  CHECK_THROWS_AS((void)g.from_word(std::vector<int>{3}), BadGeneratorIndex);
  CHECK_THROWS_AS((void)g.from_word(std::vector<int>{0}), BadGeneratorIndex);

  // Canonical words are reduced and reproduce their element.
  for (std::uint32_t id = 0; id < g.size(); ++id) {
    const Element w{id};
    const auto& word = g.word(w);
    CHECK(word.size() == g.length(w));
    std::vector<int> as_int(word.begin(), word.end());
    CHECK(g.from_word(as_int) == w);
  }
}

TEST_CASE("coxeter: element text round trip") {
  const auto& f = fixture("B2");
  const CoxeterGroup& g = f.g;
  CHECK(g.element_str(g.identity()) == "e");
  CHECK(g.parse_element("e") == g.identity());
  CHECK(g.parse_element("w0") == g.longest());
  for (std::uint32_t id = 0; id < g.size(); ++id) {
    const Element w{id};
    CHECK(g.parse_element(g.element_str(w)) == w);
  }
  CHECK_THROWS_AS((void)g.parse_element("xyz"), Error);
  CHECK_THROWS_AS((void)g.parse_element("103"), Error);
}

TEST_CASE("coxeter: enumeration order is length-then-ShortLex") {
  const auto& f = fixture("A2");
  const CoxeterGroup& g = f.g;
  CHECK(g.element_str(Element{0}) == "e");
  CHECK(g.element_str(Element{1}) == "1");
  CHECK(g.element_str(Element{2}) == "2");
  CHECK(g.element_str(Element{3}) == "12");
  CHECK(g.element_str(Element{4}) == "21");
  CHECK(g.element_str(Element{5}) == "121");
}
