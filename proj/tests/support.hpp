#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twgr/derivation.hpp"
#include "twgr/error.hpp"
#include "twgr/ring.hpp"

namespace twgr::testing {

inline RingPtr dihedral_ring(std::size_t n, std::uint32_t p, std::uint32_t m, CocycleKind kind) {
  return TwistedRing::make(dihedral_cocycle(kind, dihedral(n), make_field(p, m)));
}

inline RingPtr abelian_ring(const std::vector<std::size_t>& orders, std::uint32_t p, std::uint32_t m = 1) {
  return TwistedRing::make(trivial_cocycle(abelian(orders), make_field(p, m)));
}

using Terms = std::vector<std::pair<std::string, long>>;

/// Ring element from (element name, integer coefficient) pairs.
inline Vec elem(const RingPtr& ring, const Terms& terms) {
  const Field& f = *ring->field();
  Vec v(ring->dim(), Fq{0});
  for (const auto& [name, c] : terms) {
    const auto g = ring->group()->find(name);
    if (!g) throw InvalidInput("no element named " + name);
    v[*g] = f.add(v[*g], f.from_int(c));
  }
  return v;
}

inline GeneratorMap gmap(const RingPtr& ring, const std::vector<Terms>& images) {
  std::vector<Vec> v;
  for (const auto& t : images) v.push_back(elem(ring, t));
  return GeneratorMap(ring, std::move(v));
}

inline Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
  Vec v(n);
  for (auto& x : v) x = Fq{pick(rng)};
  return v;
}

inline Fq random_unit(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(1, f.q() - 1);
  return Fq{pick(rng)};
}

/// Random linear combination of derivations.
inline Derivation random_combination(const RingPtr& ring, const std::vector<Derivation>& basis,
                                     std::mt19937_64& rng) {
  const Field& f = *ring->field();
  const std::size_t n = ring->dim();
  Vec flat(n * n, Fq{0});
  for (const auto& d : basis) {
    const Fq c = random_vec(f, 1, rng)[0];
    const Vec v = d.flatten();
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = f.add(flat[i], f.mul(c, v[i]));
  }
  return Derivation::from_flat(ring, flat);
}

inline Vec ring_pow(const TwistedRing& r, const Vec& a, std::size_t k) {
  Vec out(r.dim(), Fq{0});
  out[r.group()->identity()] = Fq{1};
  for (std::size_t i = 0; i < k; ++i) out = r.mul(out, a);
  return out;
}

inline Vec vadd(const Field& f, Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
  return a;
}

inline Vec vscale(const Field& f, Fq c, Vec a) {
  for (auto& x : a) x = f.mul(c, x);
  return a;
}

inline bool is_zero_vec(const Vec& v) {
  for (auto x : v)
    if (x.code != 0) return false;
  return true;
}

/// d applied to a coefficient vector.
inline Vec apply_d(const Derivation& d, const Vec& x) { return d.apply(d.ring()->element(x)).coeffs(); }

/// Every sign-cocycle configuration swept by the method-agreement checks:
/// n in 3..6, four cocycles, fields F_3, F_5, F_9. Odd n with alpha1/alpha2
/// is included; those are expected to be rejected at construction.
struct DihedralConfig {
  std::size_t n;
  CocycleKind kind;
  std::uint32_t p;
  std::uint32_t m;
  std::string label() const {
    return "D" + std::to_string(2 * n) + "/F" + std::to_string(m == 1 ? p : p * p) + "/" + to_string(kind);
  }
};

inline std::vector<DihedralConfig> dihedral_sweep() {
  std::vector<DihedralConfig> out;
  for (std::size_t n : {3, 4, 5, 6})
    for (auto k : {CocycleKind::Trivial, CocycleKind::Alpha1, CocycleKind::Alpha2, CocycleKind::Alpha3})
      for (auto [p, m] : {std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{3u, 2u}}) out.push_back({n, k, p, m});
  return out;
}

}  // namespace twgr::testing
