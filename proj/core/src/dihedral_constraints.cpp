#include <utility>

#include "twgr/derivation.hpp"
#include "twgr/error.hpp"

namespace twgr {

Matrix dihedral_constraints(const RingPtr& ring) {
  const Group& G = *ring->group();
  const Field& f = *ring->field();
  const Cocycle& al = ring->cocycle();
  if (G.kind() != GroupKind::Dihedral) throw InvalidInput("closed-form system needs a dihedral group");
  if (G.generators() != std::vector<GroupElem>{1, G.dihedral_n()}) {
    throw InvalidInput("closed-form system needs the generators r, s");
  }
  if (al.kind() == CocycleKind::Table) {
    throw InvalidInput("closed-form system supports the trivial and sign cocycles only");
  }

  const long n = static_cast<long>(G.dihedral_n());
  auto mod = [n](long i) { return static_cast<std::size_t>(((i % n) + n) % n); };
  auto R = [&](long i) -> GroupElem { return mod(i); };
  auto RS = [&](long i) -> GroupElem { return mod(i) + static_cast<std::size_t>(n); };
  auto gamma = [&](long i) { return mod(i); };
  auto delta = [&](long i) { return static_cast<std::size_t>(n) + mod(i); };
  auto hcol = [&](long i) { return 2 * static_cast<std::size_t>(n) + mod(i); };
  auto tcol = [&](long i) { return 3 * static_cast<std::size_t>(n) + mod(i); };
  auto a = [&](GroupElem x, GroupElem y) { return al(x, y); };
  auto mul = [&](Fq x, Fq y) { return f.mul(x, y); };

  const std::size_t cols = 4 * static_cast<std::size_t>(n);
  std::vector<Vec> rows;
  auto row = [&](std::initializer_list<std::pair<std::size_t, Fq>> terms) {
    Vec v(cols, Fq{0});
    for (const auto& [c, x] : terms) v[c] = f.add(v[c], x);
    rows.push_back(std::move(v));
  };

  const Fq nf = f.from_int(n);
  for (long i = 0; i < n; ++i) row({{gamma(i), nf}});

  for (long omega = 0; omega < n; ++omega) {
    Vec v(cols, Fq{0});
    for (long i = 0; i < n; ++i) {
      std::vector<long> ks;
      const long e = omega - i - 1;
      if (n % 2 == 0) {
        if (((e % 2) + 2) % 2) continue;
        const long k1 = static_cast<long>(mod(e)) / 2;
        ks = {k1, k1 + n / 2};
      } else {
        // 2^{-1} mod n is (n + 1) / 2.
        ks = {static_cast<long>(mod(e * ((n + 1) / 2)))};
      }
      Fq val{0};
      for (long k : ks) val = f.add(val, mul(a(R(k), RS(i)), a(RS(k + i), R(n - k - 1))));
      v[delta(i)] = f.add(v[delta(i)], val);
    }
    rows.push_back(std::move(v));
  }

  const GroupElem s = RS(0), r = R(1), rs = RS(1);
  for (long i = 0; i < n; ++i) {
    row({{hcol(-i), a(s, s)}, {hcol(i), mul(a(R(i), s), a(s, RS(i)))}});
    row({{tcol(-i), a(s, s)}, {tcol(i), mul(a(RS(i), s), a(s, R(i)))}});
    const Fq wfac = mul(a(rs, R(i)), a(RS(1 - i), rs));
    row({{delta(i), mul(a(RS(i), s), wfac)},
         {hcol(i - 1), mul(a(r, R(i - 1)), wfac)},
         {delta(-i), mul(a(rs, rs), a(RS(-i), s))},
         {hcol(-i - 1), mul(a(r, R(-i - 1)), a(rs, rs))}});
    const Fq afac = mul(a(rs, RS(i)), a(R(1 - i), rs));
    row({{gamma(i), mul(a(R(i), s), afac)},
         {tcol(i - 1), mul(a(r, RS(i - 1)), afac)},
         {gamma(2 - i), mul(a(R(2 - i), s), a(rs, rs))},
         {tcol(1 - i), mul(a(r, RS(1 - i)), a(rs, rs))}});
  }
  return Matrix::from_rows(ring->field(), rows, cols);
}

}  // namespace twgr
