#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "twgr/matrix.hpp"
#include "twgr/ring.hpp"

namespace twgr {

/// Values f(s) for each generator s, in generator order.
class GeneratorMap {
 public:
  GeneratorMap(RingPtr ring, std::vector<Vec> images);
  static GeneratorMap zero(RingPtr ring);
  /// Generator-major layout: coefficient of h-bar in f(s_j) at j |G| + h.
  static GeneratorMap from_flat(RingPtr ring, std::span<const Fq> flat);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Vec>& images() const { return images_; }
  RingElem image(std::size_t generator) const;
  Vec flatten() const;

 private:
  RingPtr ring_;
  std::vector<Vec> images_;
};

/// Linear map on the ring given by the image of every basis element.
class Derivation {
 public:
  Derivation(RingPtr ring, std::vector<Vec> images, bool verified = false);
  /// Element-major layout: coefficient of h-bar in d(g-bar) at g |G| + h.
  static Derivation from_flat(RingPtr ring, std::span<const Fq> flat, bool verified = false);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Vec>& images() const { return images_; }
  RingElem image(GroupElem g) const;
  RingElem apply(const RingElem& x) const;
  /// True once the Leibniz rule was checked on all basis pairs.
  bool verified() const { return verified_; }

  Vec flatten() const;
  /// Images of the generators, as a GeneratorMap.
  GeneratorMap restrict_to_generators() const;

 private:
  RingPtr ring_;
  std::vector<Vec> images_;
  bool verified_;
};

/// A generator map whose extension violates a relator.
struct Rejection {
  std::size_t relator = 0;
  std::string relator_text;
  Vec residual;
};

using ExtendResult = std::variant<Derivation, Rejection>;

/// Images of the 2|S| letters: s_i at i, s_i^{-1} at |S| + i, using
/// f(s^{-1}) = -alpha(s, s^{-1})^{-1} (s^{-1}) f(s) (s^{-1}).
std::vector<Vec> letter_images(const TwistedRing& ring, std::span<const Vec> generator_images);

/// Sum over positions i of (w_1 ... w_{i-1}) f(w_i) (w_{i+1} ... w_k), each
/// product taken in the ring.
Vec word_derivative(const TwistedRing& ring, const Word& w, std::span<const Vec> letters);

/// Extends f to the unique derivation with the given generator values, or
/// reports the first relator whose word derivative is nonzero. Accepted
/// results are checked against the Leibniz rule; a failure there throws
/// InternalError.
ExtendResult extend(const GeneratorMap& f);

/// Leibniz rule on all pairs of basis elements.
bool is_derivation(const Derivation& d);

/// x -> ax - xa.
Derivation inner_derivation(const RingElem& a);

struct DerSpace {
  std::size_t dim = 0;
  /// Kernel vectors in generator-major layout (see GeneratorMap::from_flat).
  std::vector<Vec> basis;
  /// One block of |G| rows per relator, |S| |G| columns.
  Matrix constraints;
};

/// Der(R) through its generator values: the relator word derivatives are
/// linear in f, so column j |G| + h of the constraint matrix is the stacked
/// word derivatives of the map sending s_j to h-bar and the rest to 0.
DerSpace der_space_generators(const RingPtr& ring);

/// True iff f satisfies every relator constraint.
bool satisfies_constraints(const DerSpace& der, const GeneratorMap& f);

struct OracleSpace {
  std::size_t dim = 0;
  std::vector<Derivation> basis;
};

/// Der(R) by brute force over all |G|^2 coefficients of the basis images and
/// the Leibniz rule on all basis pairs. Throws InvalidInput above `bound`.
OracleSpace der_space_oracle(const RingPtr& ring, std::size_t bound = 24);

struct InnSpace {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  /// Basis elements g-bar spanning a complement of the center.
  std::vector<GroupElem> representatives;
  std::vector<Derivation> basis;
};

InnSpace inn_space(const RingPtr& ring);

/// True iff the derivation with these generator values is inner.
bool is_inner(const GeneratorMap& f, const InnSpace& inn);

struct HH1 {
  std::size_t dim = 0;
  DerSpace der;
  InnSpace inn;
  /// Der basis vectors completing the restricted Inn basis, in kernel order.
  std::vector<GeneratorMap> representatives;
};

/// Der / Inn. Throws InternalError if an inner derivation fails the relator
/// constraints.
HH1 hh1(const RingPtr& ring);

struct PartialBasis {
  /// Number of generators of the p-part.
  std::size_t p_generators = 0;
  /// The derivations g-bar d_i, i outer, g inner.
  std::vector<Derivation> derivations;
  bool all_verified = false;
  bool independent = false;
  /// Set when the group is within the oracle bound.
  std::optional<std::size_t> oracle_dim;
  std::optional<bool> spans_oracle;
};

/// For abelian G = H x X with X the Sylow p-subgroup (p the characteristic):
/// re-presents G on generators y_i of X followed by generators of H, extends
/// d_i(y_j) = [i = j] 1, d_i(H) = 0, and returns the products g-bar d_i.
/// Requires H inside the alpha-center; throws InvalidInput otherwise or when
/// an extension is rejected.
PartialBasis abelian_partial_basis(const RingPtr& ring, std::size_t oracle_bound = 64);

/// Constraint matrix on the coefficients of f(r) = sum gamma_i r^i +
/// delta_i r^i s and f(s) = sum h_i r^i + t_i r^i s (columns gamma, delta, h,
/// t, which is the generator-major layout of der_space_generators) for the
/// dihedral ring with a trivial or sign cocycle. Rows, each equal to zero:
///   n gamma_i;
///   for each Omega, sum_i delta_i sum_k alpha(r^k, r^i s) alpha(r^{k+i} s, r^{n-k-1})
///     over k with 2k = Omega - i - 1 mod n;
///   h_{-i} alpha(s,s) + h_i alpha(r^i,s) alpha(s, r^i s);
///   t_{-i} alpha(s,s) + t_i alpha(r^i s, s) alpha(s, r^i);
///   the delta/h and gamma/t rows of the (rs)^2 relator.
/// Throws InvalidInput for other groups or cocycles.
Matrix dihedral_constraints(const RingPtr& ring);

}  // namespace twgr
