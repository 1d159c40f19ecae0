#include <doctest.h>

#include "twgr/error.hpp"
#include "twgr/group.hpp"

using namespace twgr;

namespace {

GroupElem named(const Group& g, const std::string& n) {
  auto e = g.find(n);
  REQUIRE(e.has_value());
  return *e;
}

bool associative(const Group& g) {
  const auto& t = g.table();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      for (std::size_t c = 0; c < g.order(); ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

std::vector<std::vector<GroupElem>> cyclic_table(std::size_t n) {
  std::vector<std::vector<GroupElem>> t(n, std::vector<GroupElem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("D6 basics") {
    auto g = dihedral(3);
    CHECK(g->order() == 6);
    const auto r = named(*g, "r"), s = named(*g, "s"), rs = named(*g, "r*s");
    CHECK(g->element_order(r) == 3);
    CHECK(g->element_order(s) == 2);
    CHECK(g->mul(g->mul(s, r), s) == g->inv(r));
    CHECK(g->inv(rs) == rs);
    for (std::size_t x = 0; x < g->order(); ++x) CHECK(g->mul(g->identity(), x) == x);
    CHECK(g->generators() == std::vector<GroupElem>{1, 3});
    CHECK_FALSE(g->is_abelian());
  }

  TEST_CASE("dihedral element order and names") {
    auto g = dihedral(6);
    CHECK(g->order() == 12);
    CHECK(g->name(0) == "1");
    CHECK(g->name(2) == "r^2");
    CHECK(g->name(6) == "s");
    CHECK(g->name(9) == "r^3*s");
    CHECK(g->format_word(g->word(9)) == "r*r*r*s");
    CHECK_THROWS_AS(dihedral(2), InvalidInput);
  }

  TEST_CASE("dihedral invariants") {
    for (std::size_t n = 3; n <= 9; ++n) {
      auto g = dihedral(n);
      CHECK(g->order() == 2 * n);
      CHECK(g->element_order(named(*g, "r")) == n);
      CHECK(associative(*g));
      for (const auto& w : g->relators()) CHECK(g->evaluate(w) == g->identity());
      for (std::size_t x = 0; x < g->order(); ++x) CHECK(g->evaluate(g->word(x)) == x);
      CHECK(g->word(g->identity()).empty());
    }
  }

  TEST_CASE("abelian constructor") {
    auto c2 = abelian({2});
    CHECK(c2->order() == 2);
    auto c33 = abelian({3, 3});
    CHECK(c33->order() == 9);
    CHECK(c33->is_abelian());
    CHECK(center(*c33).size() == 9);
    auto c24 = abelian({2, 4});
    CHECK(c24->element_order(named(*c24, "x1*x2")) == 4);
    CHECK(c24->relators().size() == 3);
    auto c13 = abelian({1, 3});
    CHECK(c13->order() == 3);
    CHECK(c13->abelian_orders() == std::vector<std::size_t>{3});
    CHECK_THROWS_AS(abelian({}), InvalidInput);
    CHECK_THROWS_AS(abelian({0, 2}), InvalidInput);
    for (const auto* g : {c2.get(), c33.get(), c24.get()}) {
      CHECK(associative(*g));
      for (const auto& w : g->relators()) CHECK(g->evaluate(w) == g->identity());
    }
  }

  TEST_CASE("breadth-first words") {
    auto g = dihedral(3);
    const auto words = assign_words(*g);
    CHECK(words[0].empty());
    // r^2 s = s r has length two.
    CHECK(words[named(*g, "r^2*s")].size() == 2);
    for (std::size_t x = 0; x < g->order(); ++x) CHECK(g->evaluate(words[x]) == x);
    // r^2 = r^-1 has length one.
    CHECK(words[named(*g, "r^2")] == Word{Letter{0, true}});
  }

  TEST_CASE("generators must generate") {
    CHECK_THROWS_AS(Group::from_table(cyclic_table(4), {2}, {}), InvalidInput);
    auto c4 = Group::from_table(cyclic_table(4), {1}, {Word(4, Letter{0, false})});
    CHECK(c4.order() == 4);
    CHECK(c4.name(3) == "g3");
  }

  TEST_CASE("table validation") {
    auto bad = cyclic_table(3);
    bad[1][1] = 1;
    CHECK_THROWS_AS(Group::from_table(bad, {1}, {}), InvalidInput);
    // A loop of order 5 that is not a group.
    std::vector<std::vector<GroupElem>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(Group::from_table(loop, {1, 2}, {}), InvalidInput);
    // Relator that is not the identity.
    CHECK_THROWS_AS(Group::from_table(cyclic_table(4), {1}, {Word(3, Letter{0, false})}), InvalidInput);
    CHECK_THROWS_AS(Group::from_table(cyclic_table(4), {1}, {Word{Letter{1, false}}}), InvalidInput);
  }

  TEST_CASE("signed letters") {
    CHECK(Letter::from_signed(2) == Letter{1, false});
    CHECK(Letter::from_signed(-1) == Letter{0, true});
    CHECK(Letter{3, true}.to_signed() == -4);
    CHECK_THROWS_AS(Letter::from_signed(0), InvalidInput);
  }

  TEST_CASE("center") {
    CHECK(center(*dihedral(3)) == std::vector<GroupElem>{0});
    auto d12 = dihedral(6);
    CHECK(center(*d12) == std::vector<GroupElem>{0, named(*d12, "r^3")});
    CHECK(center(*dihedral(4)).size() == 2);
  }

  TEST_CASE("re-presentation keeps the table") {
    auto g = abelian({6});
    const auto x = g->generators()[0];
    const Group h = g->with_presentation(
        {g->pow(x, 3), g->pow(x, 2)},
        {Word(2, Letter{0, false}), Word(3, Letter{1, false}),
         Word{Letter{0, true}, Letter{1, true}, Letter{0, false}, Letter{1, false}}});
    CHECK(h.table() == g->table());
    for (std::size_t e = 0; e < h.order(); ++e) CHECK(h.evaluate(h.word(e)) == e);
  }

  TEST_CASE("range checks") {
    auto g = dihedral(3);
    CHECK_THROWS_AS(g->mul(6, 0), InvalidInput);
    CHECK_THROWS_AS(g->inv(7), InvalidInput);
    CHECK_THROWS_AS(g->element_order(6), InvalidInput);
    CHECK_FALSE(g->find("t").has_value());
  }
}
