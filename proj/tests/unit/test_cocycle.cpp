#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support.hpp"

using namespace twgr;
using namespace twgr::testing;

namespace {

// Independent check of the identity, without the library's sampling.
bool identity_holds(const Cocycle& a) {
  const Group& g = *a.group();
  const Field& f = *a.field();
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      for (std::size_t z = 0; z < g.order(); ++z)
        if (f.mul(a(x, y), a(g.mul(x, y), z)) != f.mul(a(y, z), a(x, g.mul(y, z)))) return false;
  return true;
}

// The sign formula tables, built without validation.
std::vector<Fq> raw_sign_table(std::size_t n, const Field& f, int which) {
  std::vector<Fq> t(4 * n * n);
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      const std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      const std::size_t e = which == 1 ? b * c : which == 2 ? a * d : b * d;
      t[x * 2 * n + y] = e % 2 ? f.minus_one() : f.one();
    }
  return t;
}

std::size_t violations(const Group& g, const Field& f, const std::vector<Fq>& t) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        count += f.mul(t[x * n + y], t[g.mul(x, y) * n + z]) != f.mul(t[y * n + z], t[x * n + g.mul(y, z)]);
  return count;
}

OneChain random_chain(const Group& g, const Field& f, std::mt19937_64& rng) {
  OneChain phi;
  for (std::size_t i = 0; i < g.order(); ++i) phi.values.push_back(random_unit(f, rng));
  return phi;
}

}  // namespace

TEST_SUITE("cocycle") {
  TEST_CASE("constant tables") {
    auto g = dihedral(3);
    auto f = make_field(3, 2);
    const auto triv = trivial_cocycle(g, f);
    CHECK(triv.is_normalized());
    CHECK(is_cocycle(*g, *f, triv.table()));

    const Cocycle minus(g, f, std::vector<Fq>(36, f->minus_one()));
    CHECK_FALSE(minus.is_normalized());
    const Cocycle n = normalize(minus);
    CHECK(n.is_normalized());
    CHECK(n.table() == triv.table());
  }

  TEST_CASE("alpha3 on D6 over F9") {
    auto g = dihedral(3);
    auto f = make_field(3, 2);
    const auto a3 = dihedral_cocycle(CocycleKind::Alpha3, g, f);
    CHECK(a3.is_normalized());
    CHECK(identity_holds(a3));
    const auto s = *g->find("s");
    CHECK(a3(s, s) == f->minus_one());
    CHECK(normalize(a3).table() == a3.table());
  }

  TEST_CASE("sign values on D12") {
    auto g = dihedral(6);
    auto f = make_field(3, 2);
    const auto r = *g->find("r"), s = *g->find("s");
    const auto a1 = dihedral_cocycle(CocycleKind::Alpha1, g, f);
    const auto a2 = dihedral_cocycle(CocycleKind::Alpha2, g, f);
    CHECK(a1(r, s) == f->one());
    CHECK(a1(s, r) == f->minus_one());
    CHECK(a2(r, s) == f->minus_one());
    CHECK(normalize(a1).table() == a1.table());
    CHECK(identity_holds(a1));
    CHECK(identity_holds(a2));
  }

  TEST_CASE("alpha1 and alpha2 fail the identity for odd n") {
    auto f = make_field(3);
    // Frozen counts of violating triples, computed by brute force.
    CHECK(violations(*dihedral(3), *f, raw_sign_table(3, *f, 1)) == 36);
    CHECK(violations(*dihedral(5), *f, raw_sign_table(5, *f, 1)) == 200);
    CHECK(violations(*dihedral(3), *f, raw_sign_table(3, *f, 2)) > 0);
    CHECK(violations(*dihedral(3), *f, raw_sign_table(3, *f, 3)) == 0);
    CHECK_FALSE(is_cocycle(*dihedral(3), *f, raw_sign_table(3, *f, 1)));
    CHECK_THROWS_AS(dihedral_cocycle(CocycleKind::Alpha1, dihedral(3), f), InvalidInput);
    CHECK_THROWS_AS(dihedral_cocycle(CocycleKind::Alpha2, dihedral(5), f), InvalidInput);
    for (std::size_t n : {4, 6, 8})
      for (int w : {1, 2, 3}) CHECK(violations(*dihedral(n), *f, raw_sign_table(n, *f, w)) == 0);
  }

  TEST_CASE("characteristic 2 collapses the signs") {
    const auto c = dihedral_cocycle(CocycleKind::Alpha3, dihedral(4), make_field(2, 2));
    CHECK(c.sign_collapsed());
    CHECK(c.kind() == CocycleKind::Trivial);
    for (auto v : c.table()) CHECK(v == Fq{1});
    CHECK_FALSE(dihedral_cocycle(CocycleKind::Alpha3, dihedral(4), make_field(3)).sign_collapsed());
    CHECK_THROWS_AS(dihedral_cocycle(CocycleKind::Alpha3, abelian({4}), make_field(3)), InvalidInput);
  }

  TEST_CASE("coboundaries and twists") {
    auto g = dihedral(3);
    auto f = make_field(3, 2);
    OneChain ones{std::vector<Fq>(6, Fq{1})};
    CHECK(coboundary(g, f, ones).table() == trivial_cocycle(g, f).table());
    const auto a3 = dihedral_cocycle(CocycleKind::Alpha3, g, f);
    CHECK(twist(a3, ones).table() == a3.table());

    std::mt19937_64 rng(11);
    for (int i = 0; i < 5; ++i) {
      const auto t = twist(trivial_cocycle(g, f), random_chain(*g, *f, rng));
      CHECK(identity_holds(t));
      CHECK(identity_holds(twist(a3, random_chain(*g, *f, rng))));
    }
    OneChain zero{std::vector<Fq>(6, Fq{1})};
    zero.values[2] = Fq{0};
    CHECK_THROWS_AS(coboundary(g, f, zero), InvalidInput);
    CHECK_THROWS_AS(coboundary(g, f, OneChain{{Fq{1}}}), InvalidInput);
  }

  TEST_CASE("normalize is a twist by a constant chain") {
    auto g = dihedral(4);
    auto f = make_field(5);
    std::mt19937_64 rng(3);
    const auto a = twist(dihedral_cocycle(CocycleKind::Alpha2, g, f), random_chain(*g, *f, rng));
    OneChain c{std::vector<Fq>(g->order(), f->inv(a(0, 0)))};
    CHECK(normalize(a).table() == twist(a, c).table());
    CHECK(normalize(a).is_normalized());
  }

  TEST_CASE("table validation") {
    auto g = dihedral(3);
    auto f = make_field(3);
    std::vector<Fq> t(36, Fq{1});
    t[7] = Fq{0};
    CHECK_THROWS_AS(Cocycle(g, f, t), InvalidInput);
    CHECK_THROWS_AS(Cocycle(g, f, std::vector<Fq>(35, Fq{1})), InvalidInput);
    std::vector<Fq> u(36, Fq{1});
    u[7] = Fq{2};
    CHECK_THROWS_AS(Cocycle(g, f, u), InvalidInput);
  }

  TEST_CASE("alpha-center") {
    auto f = make_field(3, 2);
    auto d6 = dihedral(3);
    CHECK(alpha_center(trivial_cocycle(d6, f)) == center(*d6));
    CHECK(alpha_center(dihedral_cocycle(CocycleKind::Alpha3, d6, f)) == std::vector<GroupElem>{0});
    auto d12 = dihedral(6);
    // alpha1(r^3, r^c s^d) = 1 but alpha1(r^a s, r^3) = -1.
    CHECK(alpha_center(dihedral_cocycle(CocycleKind::Alpha1, d12, f)) == std::vector<GroupElem>{0});
    CHECK(alpha_center(dihedral_cocycle(CocycleKind::Alpha3, d12, f)).size() == 2);
    CHECK(alpha_center(trivial_cocycle(d12, f)) == center(*d12));

    // Closed under products and inverses.
    for (auto k : {CocycleKind::Trivial, CocycleKind::Alpha1, CocycleKind::Alpha2, CocycleKind::Alpha3}) {
      const auto z = alpha_center(dihedral_cocycle(k, dihedral(4), f));
      for (auto a : z) {
        CHECK(std::find(z.begin(), z.end(), dihedral(4)->inv(a)) != z.end());
        for (auto b : z) CHECK(std::find(z.begin(), z.end(), dihedral(4)->mul(a, b)) != z.end());
      }
    }
  }

  TEST_CASE("beta of words") {
    auto g = dihedral(3);
    auto f = make_field(3, 2);
    const auto a3 = dihedral_cocycle(CocycleKind::Alpha3, g, f);
    const Letter r{0, false}, s{1, false};
    CHECK(beta_of_word(a3, {}) == f->one());
    CHECK(beta_of_word(a3, {s}) == f->one());
    CHECK(beta_of_word(a3, {s, s}) == f->minus_one());
    CHECK(beta_of_word(trivial_cocycle(g, f), {r, r, r}) == f->one());
  }

  TEST_CASE("beta is multiplicative up to alpha") {
    std::mt19937_64 rng(5);
    auto g = dihedral(4);
    auto f = make_field(5);
    const auto a = normalize(twist(dihedral_cocycle(CocycleKind::Alpha1, g, f), random_chain(*g, *f, rng)));
    std::uniform_int_distribution<int> len(0, 6), letter(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
      Word u, w;
      for (int i = len(rng); i > 0; --i) {
        const int l = letter(rng);
        u.push_back(Letter{static_cast<std::size_t>(l % 2), l >= 2});
      }
      for (int i = len(rng); i > 0; --i) {
        const int l = letter(rng);
        w.push_back(Letter{static_cast<std::size_t>(l % 2), l >= 2});
      }
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      const Fq lhs = beta_of_word(a, uw);
      const Fq rhs = f->mul(f->mul(beta_of_word(a, u), beta_of_word(a, w)), a(g->evaluate(u), g->evaluate(w)));
      CHECK(lhs == rhs);
    }
  }
}
