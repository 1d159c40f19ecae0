#include <doctest.h>

#include "twgr/error.hpp"
#include "twgr/field.hpp"

using namespace twgr;

namespace {

// Monic quadratics x^2 + b x + c over F_3 in ascending-tuple order (c, b, 1),
// irreducible iff they have no root.
std::vector<std::uint32_t> smallest_irreducible_quadratic_f3() {
  for (std::uint32_t c = 0; c < 3; ++c)
    for (std::uint32_t b = 0; b < 3; ++b) {
      bool root = false;
      for (std::uint32_t x = 0; x < 3; ++x) root = root || (x * x + b * x + c) % 3 == 0;
      if (!root) return {c, b, 1};
    }
  return {};
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};

}  // namespace

TEST_SUITE("ff") {
  TEST_CASE("prime field modulus is x") {
    auto f = make_field(3);
    CHECK(f->q() == 3);
    CHECK(f->modulus() == std::vector<std::uint32_t>{0, 1});
  }

  TEST_CASE("F_9 uses the smallest irreducible quadratic") {
    const auto expected = smallest_irreducible_quadratic_f3();
    REQUIRE(expected == std::vector<std::uint32_t>{1, 0, 1});
    auto f = make_field(3, 2);
    CHECK(f->modulus() == expected);
    CHECK(f->describe() == "F_9 = F_3[x]/(x^2 + 1)");
  }

  TEST_CASE("bad parameters are rejected") {
    CHECK_THROWS_AS(make_field(4), InvalidInput);
    CHECK_THROWS_AS(make_field(1), InvalidInput);
    CHECK_THROWS_AS(make_field(3, 0), InvalidInput);
    CHECK_THROWS_AS(make_field(3, 2, std::vector<std::uint32_t>{2, 0, 1}), InvalidInput);  // (x-1)(x+1)
    CHECK_THROWS_AS(make_field(3, 2, std::vector<std::uint32_t>{1, 0, 2}), InvalidInput);  // not monic
    CHECK_THROWS_AS(make_field(3, 2, std::vector<std::uint32_t>{1, 1}), InvalidInput);     // wrong degree
    CHECK_NOTHROW(make_field(3, 2, std::vector<std::uint32_t>{2, 1, 1}));                  // x^2+x+2
  }

  TEST_CASE("prime field arithmetic") {
    auto f = make_field(3);
    auto two = FieldElem::from_int(f, 2);
    CHECK((two + two) == FieldElem::from_int(f, 1));
    CHECK(two.inv() == two);
    CHECK(FieldElem::from_int(f, 1).inv() == FieldElem::from_int(f, 1));
    CHECK_THROWS_AS(FieldElem::from_int(f, 0).inv(), InvalidInput);
    CHECK(FieldElem::from_int(f, -1) == two);
  }

  TEST_CASE("x * x in F_9 reduces by the modulus") {
    auto f = make_field(3, 2);
    auto x = FieldElem::parse(f, "01");
    // x^2 = -1 modulo x^2 + 1.
    CHECK((x * x).to_string() == "20");
    CHECK((x * x * x * x) == FieldElem::from_int(f, 1));
  }

  TEST_CASE("Lagrange and negative powers") {
    auto f = make_field(3, 2);
    for (Fq a : f->elements()) {
      if (a.code == 0) continue;
      CHECK(f->pow(a, 8) == f->one());
      CHECK(f->mul(f->pow(a, -3), f->pow(a, 3)) == f->one());
      CHECK(f->mul(a, f->inv(a)) == f->one());
    }
    CHECK_THROWS_AS(f->pow(f->zero(), -1), InvalidInput);
    CHECK(f->pow(f->zero(), 0) == f->one());
  }

  TEST_CASE("field axioms, exhaustive for q <= 9") {
    for (auto [p, m] : kSmallFields) {
      auto f = make_field(p, m);
      CAPTURE(f->describe());
      const auto els = f->elements();
      bool ok = true;
      for (Fq a : els)
        for (Fq b : els) {
          ok = ok && f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
          ok = ok && f->add(a, f->neg(a)) == f->zero() && f->mul(a, f->one()) == a;
          for (Fq c : els) {
            ok = ok && f->add(f->add(a, b), c) == f->add(a, f->add(b, c));
            ok = ok && f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c));
            ok = ok && f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
          }
        }
      CHECK(ok);
    }
  }

  TEST_CASE("Frobenius is additive") {
    for (auto [p, m] : kSmallFields) {
      auto f = make_field(p, m);
      bool ok = true;
      for (Fq a : f->elements())
        for (Fq b : f->elements()) ok = ok && f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p));
      CHECK(ok);
    }
  }

  TEST_CASE("-1 has order 2 in odd characteristic") {
    for (auto [p, m] : kSmallFields) {
      auto f = make_field(p, m);
      if (p == 2) {
        CHECK(f->minus_one() == f->one());
      } else {
        CHECK(f->multiplicative_order(f->minus_one()) == 2);
      }
    }
  }

  TEST_CASE("primitive element generates the unit group") {
    for (auto [p, m] : kSmallFields) {
      auto f = make_field(p, m);
      CHECK(f->multiplicative_order(f->primitive_element()) == f->q() - 1);
    }
  }

  TEST_CASE("format and parse round trip") {
    auto f = make_field(5, 2);
    for (Fq a : f->elements()) CHECK(f->parse(f->format(a)) == a);
    CHECK_THROWS_AS(f->parse("5"), InvalidInput);
    CHECK_THROWS_AS(f->parse("123"), InvalidInput);
    CHECK_THROWS_AS(f->parse("9x"), InvalidInput);
  }

  TEST_CASE("elements of different fields do not mix") {
    auto a = FieldElem::from_int(make_field(3), 1);
    auto b = FieldElem::from_int(make_field(5), 1);
    CHECK_THROWS_AS(a + b, ContextMismatch);
    CHECK_THROWS_AS(a * b, ContextMismatch);
    // Separately built but identical fields are compatible.
    auto c = FieldElem::from_int(make_field(3), 2);
    CHECK((a + c).is_zero());
  }

  TEST_CASE("irreducibility test") {
    CHECK(is_irreducible(2, std::vector<std::uint32_t>{1, 1, 1}));
    CHECK_FALSE(is_irreducible(2, std::vector<std::uint32_t>{1, 0, 1}));
    CHECK(is_irreducible(2, std::vector<std::uint32_t>{1, 1, 0, 1}));
    CHECK_FALSE(is_irreducible(2, std::vector<std::uint32_t>{1, 0, 0, 0, 1}));  // (x+1)^4
    CHECK_FALSE(is_irreducible(3, std::vector<std::uint32_t>{1, 0, 2, 0, 1}));  // (x^2+1)^2
  }
}
