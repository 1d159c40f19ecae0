#include "twgr/cocycle.hpp"

#include <random>

#include "twgr/error.hpp"

namespace twgr {

namespace {

void require_size(const Group& g, std::size_t entries) {
  if (entries != g.order() * g.order()) {
    throw InvalidInput("cocycle table has " + std::to_string(entries) + " entries, expected " +
                       std::to_string(g.order() * g.order()));
  }
}

void require_chain(const Group& g, const OneChain& phi) {
  if (phi.values.size() != g.order()) throw InvalidInput("1-chain length does not match group order");
  for (auto v : phi.values) {
    if (v.code == 0) throw InvalidInput("1-chain takes the value 0");
  }
}

}  // namespace

bool is_cocycle(const Group& g, const Field& f, std::span<const Fq> table) {
  require_size(g, table.size());
  for (auto v : table) {
    if (v.code == 0) throw InvalidInput("cocycle table contains 0");
  }
  const std::size_t n = g.order();
  const auto& t = g.table();
  auto holds = [&](std::size_t x, std::size_t y, std::size_t z) {
    return f.mul(table[x * n + y], table[t[x][y] * n + z]) ==
           f.mul(table[y * n + z], table[x * n + t[y][z]]);
  };
  if (n <= 64) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (!holds(x, y, z)) return false;
    return true;
  }
  std::mt19937_64 rng(0xc0c7c1e);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int k = 0; k < 200'000; ++k) {
    if (!holds(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

Cocycle::Cocycle(GroupPtr group, FieldPtr field, std::vector<Fq> table, CocycleKind kind)
    : group_(std::move(group)), field_(std::move(field)), table_(std::move(table)), kind_(kind) {
  if (!group_ || !field_) throw InvalidInput("cocycle needs a group and a field");
  n_ = group_->order();
  for (auto v : table_) {
    if (v.code >= field_->q()) throw InvalidInput("cocycle entry outside the field");
  }
  if (!is_cocycle(*group_, *field_, table_)) {
    throw InvalidInput("table does not satisfy the cocycle identity");
  }
}

FieldElem Cocycle::value(GroupElem x, GroupElem y) const {
  if (x >= n_ || y >= n_) throw InvalidInput("group element out of range");
  return FieldElem(field_, (*this)(x, y));
}

bool Cocycle::is_normalized() const {
  for (std::size_t g = 0; g < n_; ++g) {
    if ((*this)(0, g) != field_->one() || (*this)(g, 0) != field_->one()) return false;
  }
  return true;
}

Cocycle trivial_cocycle(GroupPtr group, FieldPtr field) {
  const std::size_t n = group->order();
  return Cocycle(std::move(group), std::move(field), std::vector<Fq>(n * n, Fq{1}),
                 CocycleKind::Trivial);
}

Cocycle normalize(const Cocycle& alpha) {
  const Field& f = *alpha.field();
  const Fq c = alpha(0, 0);
  if (c == f.one()) return alpha;
  const Fq ci = f.inv(c);
  std::vector<Fq> t = alpha.table();
  for (auto& v : t) v = f.mul(v, ci);
  return Cocycle(alpha.group(), alpha.field(), std::move(t));
}

Cocycle coboundary(GroupPtr group, FieldPtr field, const OneChain& phi) {
  require_chain(*group, phi);
  const Field& f = *field;
  const std::size_t n = group->order();
  std::vector<Fq> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = f.div(f.mul(phi.values[x], phi.values[y]), phi.values[group->mul(x, y)]);
  return Cocycle(std::move(group), std::move(field), std::move(t));
}

Cocycle twist(const Cocycle& alpha, const OneChain& phi) {
  const Cocycle d = coboundary(alpha.group(), alpha.field(), phi);
  const Field& f = *alpha.field();
  std::vector<Fq> t = alpha.table();
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = f.mul(t[i], d.table()[i]);
  return Cocycle(alpha.group(), alpha.field(), std::move(t));
}

Cocycle dihedral_cocycle(CocycleKind which, GroupPtr group, FieldPtr field) {
  if (!group || group->kind() != GroupKind::Dihedral) {
    throw InvalidInput("sign cocycles are defined on dihedral groups only");
  }
  if (which == CocycleKind::Table) throw InvalidInput("not a named dihedral cocycle");
  if (which == CocycleKind::Trivial) return trivial_cocycle(std::move(group), std::move(field));

  if (field->p() == 2) {
    Cocycle c = trivial_cocycle(std::move(group), std::move(field));
    c.sign_collapsed_ = true;
    return c;
  }
  const std::size_t n = group->dihedral_n();
  if (n % 2 == 1 && which != CocycleKind::Alpha3) {
    throw InvalidInput(to_string(which) + " is not a 2-cocycle on D_" + std::to_string(2 * n) +
                       " (n odd)");
  }
  const Fq minus = field->minus_one();
  std::vector<Fq> t(4 * n * n);
  for (std::size_t x = 0; x < 2 * n; ++x) {
    const std::size_t a = x % n, b = x / n;
    for (std::size_t y = 0; y < 2 * n; ++y) {
      const std::size_t c = y % n, d = y / n;
      std::size_t e = 0;
      switch (which) {
        case CocycleKind::Alpha1: e = b * c; break;
        case CocycleKind::Alpha2: e = a * d; break;
        default: e = b * d; break;
      }
      t[x * 2 * n + y] = e % 2 ? minus : Fq{1};
    }
  }
  return Cocycle(std::move(group), std::move(field), std::move(t), which);
}

std::vector<GroupElem> alpha_center(const Cocycle& alpha) {
  std::vector<GroupElem> out;
  const std::size_t n = alpha.group()->order();
  for (GroupElem z : center(*alpha.group())) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = alpha(z, x) == alpha(x, z);
    if (ok) out.push_back(z);
  }
  return out;
}

Fq beta_of_word(const Cocycle& alpha, const Word& w) {
  const Group& g = *alpha.group();
  const Field& f = *alpha.field();
  Fq beta = f.one();
  if (w.empty()) return beta;
  GroupElem suffix = g.letter_value(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    const GroupElem x = g.letter_value(w[i]);
    beta = f.mul(beta, alpha(x, suffix));
    suffix = g.mul(x, suffix);
  }
  return beta;
}

std::string to_string(CocycleKind kind) {
  switch (kind) {
    case CocycleKind::Trivial: return "trivial";
    case CocycleKind::Alpha1: return "alpha1";
    case CocycleKind::Alpha2: return "alpha2";
    case CocycleKind::Alpha3: return "alpha3";
    case CocycleKind::Table: return "table";
  }
  return "table";
}

}  // namespace twgr
