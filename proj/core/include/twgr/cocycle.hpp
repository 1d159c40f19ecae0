#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "twgr/field.hpp"
#include "twgr/group.hpp"

namespace twgr {

/// A function G -> F_q^*, indexed by element.
struct OneChain {
  std::vector<Fq> values;
};

/// Where a cocycle table came from. Anything derived by twisting or
/// normalizing is reported as Table.
enum class CocycleKind { Trivial, Alpha1, Alpha2, Alpha3, Table };

/// 2-cocycle alpha: G x G -> F_q^*, stored as a row-major |G| x |G| table.
/// The cocycle identity alpha(x,y) alpha(xy,z) = alpha(y,z) alpha(x,yz) is
/// verified at construction, exhaustively for |G| <= 64 and on a fixed
/// pseudo-random sample of triples above that.
class Cocycle {
 public:
  Cocycle(GroupPtr group, FieldPtr field, std::vector<Fq> table,
          CocycleKind kind = CocycleKind::Table);

  const GroupPtr& group() const { return group_; }
  const FieldPtr& field() const { return field_; }
  CocycleKind kind() const { return kind_; }

  Fq operator()(GroupElem x, GroupElem y) const { return table_[x * n_ + y]; }
  FieldElem value(GroupElem x, GroupElem y) const;
  const std::vector<Fq>& table() const { return table_; }

  bool is_normalized() const;

  /// Set when a sign cocycle was requested in characteristic 2 and the
  /// trivial cocycle was returned instead.
  bool sign_collapsed() const { return sign_collapsed_; }

 private:
  friend Cocycle dihedral_cocycle(CocycleKind, GroupPtr, FieldPtr);

  GroupPtr group_;
  FieldPtr field_;
  std::size_t n_ = 0;
  std::vector<Fq> table_;
  CocycleKind kind_ = CocycleKind::Table;
  bool sign_collapsed_ = false;
};

using CocyclePtr = std::shared_ptr<const Cocycle>;

/// Checks the cocycle identity on all triples. Throws InvalidInput on a size
/// mismatch or a zero entry.
bool is_cocycle(const Group& g, const Field& f, std::span<const Fq> table);

Cocycle trivial_cocycle(GroupPtr group, FieldPtr field);

/// alpha / alpha(1,1).
Cocycle normalize(const Cocycle& alpha);

/// (x, y) -> phi(x) phi(y) phi(xy)^{-1}.
Cocycle coboundary(GroupPtr group, FieldPtr field, const OneChain& phi);

/// alpha times the coboundary of phi.
Cocycle twist(const Cocycle& alpha, const OneChain& phi);

/// Sign cocycles on D_{2n}, with r^a s^b, r^c s^d mapped to
/// (-1)^{bc} (Alpha1), (-1)^{ad} (Alpha2) or (-1)^{bd} (Alpha3).
/// Alpha1 and Alpha2 are not cocycles for odd n and are rejected with
/// InvalidInput. In characteristic 2 the trivial cocycle is returned with
/// sign_collapsed() set. Trivial is accepted as well.
Cocycle dihedral_cocycle(CocycleKind which, GroupPtr group, FieldPtr field);

/// Central z with alpha(z, x) = alpha(x, z) for every x.
std::vector<GroupElem> alpha_center(const Cocycle& alpha);

/// Product of alpha(w_i, w_{i+1} ... w_k) over i < k, so that the product of
/// the basis letters of w equals beta_w times the basis element of its value.
Fq beta_of_word(const Cocycle& alpha, const Word& w);

std::string to_string(CocycleKind kind);

}  // namespace twgr
