#include "twgr/ring.hpp"

#include "twgr/error.hpp"

namespace twgr {

TwistedRing::TwistedRing(CocyclePtr alpha) : alpha_(std::move(alpha)), n_(alpha_->group()->order()) {}

RingPtr TwistedRing::make(const Cocycle& alpha) {
  auto normalized = std::make_shared<const Cocycle>(normalize(alpha));
  return RingPtr(new TwistedRing(std::move(normalized)));
}

RingElem TwistedRing::zero() const { return element(Vec(n_, Fq{0})); }

RingElem TwistedRing::one() const { return basis(group()->identity()); }

RingElem TwistedRing::basis(GroupElem g) const {
  if (g >= n_) throw InvalidInput("group element out of range");
  Vec v(n_, Fq{0});
  v[g] = Fq{1};
  return element(std::move(v));
}

RingElem TwistedRing::element(Vec coeffs) const { return RingElem(shared_from_this(), std::move(coeffs)); }

Vec TwistedRing::mul(std::span<const Fq> a, std::span<const Fq> b) const {
  const Field& f = *field();
  const auto& t = group()->table();
  const Cocycle& al = *alpha_;
  Vec out(n_, Fq{0});
  for (std::size_t g = 0; g < n_; ++g) {
    if (a[g].code == 0) continue;
    for (std::size_t h = 0; h < n_; ++h) {
      if (b[h].code == 0) continue;
      const std::size_t gh = t[g][h];
      out[gh] = f.add(out[gh], f.mul(f.mul(a[g], b[h]), al(g, h)));
    }
  }
  return out;
}

Vec TwistedRing::mul_basis_left(GroupElem g, std::span<const Fq> x) const {
  const Field& f = *field();
  const auto& row = group()->table()[g];
  Vec out(n_, Fq{0});
  for (std::size_t h = 0; h < n_; ++h) {
    if (x[h].code != 0) out[row[h]] = f.mul(x[h], (*alpha_)(g, h));
  }
  return out;
}

Vec TwistedRing::mul_basis_right(std::span<const Fq> x, GroupElem g) const {
  const Field& f = *field();
  const auto& t = group()->table();
  Vec out(n_, Fq{0});
  for (std::size_t h = 0; h < n_; ++h) {
    if (x[h].code != 0) out[t[h][g]] = f.mul(x[h], (*alpha_)(h, g));
  }
  return out;
}

Vec TwistedRing::commutator(std::span<const Fq> a, std::span<const Fq> b) const {
  const Field& f = *field();
  Vec ab = mul(a, b);
  const Vec ba = mul(b, a);
  for (std::size_t i = 0; i < n_; ++i) ab[i] = f.sub(ab[i], ba[i]);
  return ab;
}

bool TwistedRing::is_commutative() const {
  const auto& t = group()->table();
  for (std::size_t g = 0; g < n_; ++g)
    for (std::size_t h = g + 1; h < n_; ++h)
      if (t[g][h] != t[h][g] || (*alpha_)(g, h) != (*alpha_)(h, g)) return false;
  return true;
}

RingElem::RingElem(RingPtr ring, Vec coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) throw InvalidInput("ring element needs a ring");
  if (coeffs_.size() != ring_->dim()) throw InvalidInput("ring element has the wrong length");
  for (auto c : coeffs_) {
    if (c.code >= ring_->field()->q()) throw InvalidInput("coefficient outside the field");
  }
}

FieldElem RingElem::coeff(GroupElem g) const {
  if (g >= coeffs_.size()) throw InvalidInput("group element out of range");
  return FieldElem(ring_->field(), coeffs_[g]);
}

bool RingElem::is_zero() const {
  for (auto c : coeffs_)
    if (c.code != 0) return false;
  return true;
}

void require_same_ring(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring()) throw ContextMismatch("ring elements belong to different rings");
}

RingElem RingElem::operator-() const {
  Vec v = coeffs_;
  for (auto& c : v) c = ring_->field()->neg(c);
  return RingElem(ring_, std::move(v));
}

RingElem RingElem::scale(Fq c) const {
  Vec v = coeffs_;
  for (auto& x : v) x = ring_->field()->mul(c, x);
  return RingElem(ring_, std::move(v));
}

RingElem RingElem::scale(const FieldElem& c) const {
  require_same_field(*c.field(), *ring_->field());
  return scale(c.raw());
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  Vec v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.ring_->field()->add(v[i], b.coeffs_[i]);
  return RingElem(a.ring_, std::move(v));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  Vec v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.ring_->field()->sub(v[i], b.coeffs_[i]);
  return RingElem(a.ring_, std::move(v));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  return RingElem(a.ring_, a.ring_->mul(a.coeffs_, b.coeffs_));
}

bool operator==(const RingElem& a, const RingElem& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

std::string RingElem::to_string() const {
  const Field& f = *ring_->field();
  const Group& g = *ring_->group();
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].code == 0) continue;
    if (!s.empty()) s += " + ";
    s += f.format(coeffs_[i]) + "*" + g.name(i);
  }
  return s.empty() ? "0" : s;
}

RingElem commutator(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  return RingElem(a.ring(), a.ring()->commutator(a.coeffs(), b.coeffs()));
}

bool is_central(const RingElem& a) {
  const TwistedRing& r = *a.ring();
  const Field& f = *r.field();
  for (std::size_t g = 0; g < r.dim(); ++g) {
    const Vec left = r.mul_basis_left(g, a.coeffs());
    const Vec right = r.mul_basis_right(a.coeffs(), g);
    for (std::size_t i = 0; i < r.dim(); ++i) {
      if (f.sub(left[i], right[i]).code != 0) return false;
    }
  }
  return true;
}

std::vector<RingElem> center_basis(const RingPtr& ring) {
  const Group& G = *ring->group();
  const Field& f = *ring->field();
  const Cocycle& al = ring->cocycle();
  const std::size_t n = G.order();
  RowEchelon ech(ring->field(), n);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t g = 0; g < n; ++g) {
      const GroupElem c = G.mul(G.mul(h, g), G.inv(h));
      Vec row(n, Fq{0});
      row[c] = f.add(row[c], al(c, h));
      row[g] = f.sub(row[g], al(h, g));
      ech.insert(std::move(row));
    }
  }
  std::vector<RingElem> out;
  for (auto& v : ech.kernel_basis()) out.push_back(ring->element(std::move(v)));
  return out;
}

}  // namespace twgr
