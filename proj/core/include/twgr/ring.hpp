#pragma once

#include <memory>
#include <span>
#include <vector>

#include "twgr/cocycle.hpp"
#include "twgr/matrix.hpp"

namespace twgr {

class RingElem;

/// The twisted group ring F_q^alpha G with basis {g-bar} and product
/// (a g)(b h) = a b alpha(g, h) (gh). The cocycle is normalized on
/// construction, so the basis element of the identity is the unit.
///
/// Raw operations work on coefficient vectors indexed by GroupElem; RingElem
/// wraps them with a ring pointer.
class TwistedRing : public std::enable_shared_from_this<TwistedRing> {
 public:
  static std::shared_ptr<const TwistedRing> make(const Cocycle& alpha);

  const GroupPtr& group() const { return alpha_->group(); }
  const FieldPtr& field() const { return alpha_->field(); }
  const Cocycle& cocycle() const { return *alpha_; }
  std::size_t dim() const { return n_; }

  RingElem zero() const;
  RingElem one() const;
  RingElem basis(GroupElem g) const;
  RingElem element(Vec coeffs) const;

  Vec mul(std::span<const Fq> a, std::span<const Fq> b) const;
  /// g-bar times x.
  Vec mul_basis_left(GroupElem g, std::span<const Fq> x) const;
  /// x times g-bar.
  Vec mul_basis_right(std::span<const Fq> x, GroupElem g) const;
  Vec commutator(std::span<const Fq> a, std::span<const Fq> b) const;

  bool is_commutative() const;

 private:
  explicit TwistedRing(CocyclePtr alpha);

  CocyclePtr alpha_;
  std::size_t n_;
};

using RingPtr = std::shared_ptr<const TwistedRing>;

/// Element sum a_g g-bar of a twisted group ring.
class RingElem {
 public:
  RingElem(RingPtr ring, Vec coeffs);

  const RingPtr& ring() const { return ring_; }
  const Vec& coeffs() const { return coeffs_; }
  FieldElem coeff(GroupElem g) const;
  bool is_zero() const;

  RingElem operator-() const;
  RingElem scale(const FieldElem& c) const;
  RingElem scale(Fq c) const;
  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend bool operator==(const RingElem& a, const RingElem& b);

  /// e.g. "2*r + 1*r^2*s"; "0" for zero.
  std::string to_string() const;

 private:
  RingPtr ring_;
  Vec coeffs_;
};

/// ab - ba.
RingElem commutator(const RingElem& a, const RingElem& b);

/// True iff a commutes with every basis element.
bool is_central(const RingElem& a);

/// Basis of the center, from the linear conditions
/// a_{hgh^-1} alpha(hgh^-1, h) = a_g alpha(h, g) over all g, h.
std::vector<RingElem> center_basis(const RingPtr& ring);

/// Throws ContextMismatch unless both elements live in the same ring object.
void require_same_ring(const RingElem& a, const RingElem& b);

}  // namespace twgr
