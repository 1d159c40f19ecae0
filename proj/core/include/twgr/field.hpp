#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twgr {

/// Raw element of a finite field. Only meaningful together with its Field.
///
/// The polynomial c_0 + c_1 x + ... + c_{m-1} x^{m-1} is stored as the integer
/// c_0 + c_1 p + ... + c_{m-1} p^{m-1}, so 0 and 1 are the codes 0 and 1.
struct Fq {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Fq, Fq) = default;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_{p^m} as F_p[x] / (modulus). Immutable after construction.
///
/// Multiplication goes through discrete log tables built from the smallest
/// primitive element, so the field order is capped at kMaxOrder.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Use make_field(); this constructor trusts its arguments.
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  /// Ascending coefficients, length m + 1, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  Fq minus_one() const { return neg(one()); }
  Fq from_int(std::int64_t v) const;
  Fq from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(Fq a) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const { return Fq{neg_[a.code]}; }
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::int64_t k) const;
  bool is_zero(Fq a) const { return a.code == 0; }

  /// Least k >= 1 with a^k = 1; a must be nonzero.
  std::uint64_t multiplicative_order(Fq a) const;
  /// The generator used for the log tables.
  Fq primitive_element() const { return Fq{exp_[1]}; }

  /// m base-p digits, ascending degree ("21" is 2 + x in F_9). Needs p <= 36.
  std::string format(Fq a) const;
  Fq parse(std::string_view text) const;

  /// Same p, m and modulus.
  bool same_as(const Field& other) const;
  /// Human-readable, e.g. "F_9 = F_3[x]/(x^2 + 1)".
  std::string describe() const;

  /// All q elements in code order.
  std::vector<Fq> elements() const;

 private:
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> exp_;  // exp_[k] = g^k for k in [0, 2(q-1))
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::uint16_t> add_;  // q*q addition table when q is small
};

/// Builds F_{p^m}. Without a modulus the lexicographically smallest monic
/// irreducible (ascending coefficient tuple c_0, c_1, ...) is chosen.
/// Throws InvalidInput for non-prime p, m == 0, an oversized field, or a
/// modulus that is not monic of degree m and irreducible.
FieldPtr make_field(std::uint32_t p, std::uint32_t m = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

bool is_prime(std::uint64_t n);

/// Irreducibility of a polynomial over F_p given by ascending coefficients.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// Value-semantic field element bound to its field. Mixing elements of
/// different fields throws ContextMismatch.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Fq value);
  static FieldElem from_int(FieldPtr field, std::int64_t v);
  static FieldElem parse(FieldPtr field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  Fq raw() const { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->digits(value_); }
  bool is_zero() const { return value_.code == 0; }

  FieldElem inv() const;
  FieldElem pow(std::int64_t k) const;
  std::string to_string() const { return field_->format(value_); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const;
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  FieldPtr field_;
  Fq value_;
};

/// Throws ContextMismatch unless both fields are the same.
void require_same_field(const Field& a, const Field& b);

}  // namespace twgr
