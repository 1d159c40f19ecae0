#include "twgr/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "twgr/error.hpp"

namespace twgr {

namespace {

using Poly = std::vector<std::uint64_t>;  // ascending coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Remainder of a modulo a nonzero divisor.
Poly poly_rem(Poly a, const Poly& d, std::uint64_t p) {
  trim(a);
  const std::size_t dd = d.size() - 1;
  const std::uint64_t lead_inv = inv_mod(d.back(), p);
  while (a.size() > dd) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      a[shift + i] = (a[shift + i] + p - c * d[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_rem(std::move(r), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_pow(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

char digit_char(std::uint32_t d) {
  return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
}

int char_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Ben-Or: f has no factor of degree i iff gcd(f, x^{p^i} - x) = 1.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = poly_pow(h, p, f, p);
    Poly t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    if (t.empty()) return false;  // f divides x^{p^i} - x
    if (poly_gcd(f, t, p).size() > 1) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))), modulus_(std::move(modulus)) {
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t r = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
      const std::uint32_t d = x % p_;
      x /= p_;
      r += ((p_ - d) % p_) * scale;
      scale *= p_;
    }
    neg_[a] = r;
  }

  if (q_ <= 256) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
  }

  // Multiplication by polynomial arithmetic, used only to build log tables.
  const Poly f(modulus_.begin(), modulus_.end());
  auto to_poly = [&](std::uint32_t code) {
    Poly r(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
      r[i] = code % p_;
      code /= p_;
    }
    trim(r);
    return r;
  };
  auto to_code = [&](const Poly& a) {
    std::uint32_t r = 0, scale = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      r += static_cast<std::uint32_t>(a[i]) * scale;
      scale *= p_;
    }
    return r;
  };

  const std::uint32_t n = q_ - 1;
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::vector<std::uint32_t> powers;
    powers.reserve(n);
    const Poly gp = to_poly(g);
    Poly x{1};
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t c = to_code(x);
      if (k > 0 && c == 1) break;
      powers.push_back(c);
      x = poly_mulmod(x, gp, f, p_);
    }
    if (powers.size() != n) continue;
    exp_.resize(2 * static_cast<std::size_t>(n));
    log_.assign(q_, 0);
    for (std::uint32_t k = 0; k < n; ++k) {
      exp_[k] = powers[k];
      exp_[k + n] = powers[k];
      log_[powers[k]] = k;
    }
    break;
  }
  if (exp_.empty()) throw InternalError("no primitive element found; modulus is not irreducible");
}

std::uint32_t Field::add_digits(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return (a + b) % p_;
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Fq Field::add(Fq a, Fq b) const {
  if (!add_.empty()) return Fq{add_[static_cast<std::size_t>(a.code) * q_ + b.code]};
  return Fq{add_digits(a.code, b.code)};
}

Fq Field::mul(Fq a, Fq b) const {
  if (a.code == 0 || b.code == 0) return Fq{0};
  return Fq{exp_[log_[a.code] + log_[b.code]]};
}

Fq Field::inv(Fq a) const {
  if (a.code == 0) throw InvalidInput("inverse of zero");
  const std::uint32_t n = q_ - 1;
  return Fq{exp_[(n - log_[a.code]) % n]};
}

Fq Field::pow(Fq a, std::int64_t k) const {
  if (a.code == 0) {
    if (k == 0) return one();
    if (k < 0) throw InvalidInput("negative power of zero");
    return zero();
  }
  const std::int64_t n = q_ - 1;
  std::int64_t e = k % n;
  if (e < 0) e += n;
  return Fq{exp_[static_cast<std::size_t>((e * log_[a.code]) % n)]};
}

std::uint64_t Field::multiplicative_order(Fq a) const {
  if (a.code == 0) throw InvalidInput("zero has no multiplicative order");
  const std::uint64_t n = q_ - 1;
  return n / std::gcd<std::uint64_t>(log_[a.code], n);
}

Fq Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fq{static_cast<std::uint32_t>(r)};
}

Fq Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > m_) throw InvalidInput("too many digits for field element");
  std::uint32_t r = 0, scale = 1;
  for (auto d : digits) {
    r += (d % p_) * scale;
    scale *= p_;
  }
  return Fq{r};
}

std::vector<std::uint32_t> Field::digits(Fq a) const {
  std::vector<std::uint32_t> r(m_);
  std::uint32_t x = a.code;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r[i] = x % p_;
    x /= p_;
  }
  return r;
}

std::string Field::format(Fq a) const {
  if (p_ > 36) throw InvalidInput("element serialization needs p <= 36");
  std::string s;
  for (auto d : digits(a)) s += digit_char(d);
  return s;
}

Fq Field::parse(std::string_view text) const {
  if (text.size() != m_) {
    throw InvalidInput("field element '" + std::string(text) + "' must have " +
                       std::to_string(m_) + " digits");
  }
  std::vector<std::uint32_t> d;
  for (char c : text) {
    const int v = char_digit(c);
    if (v < 0 || static_cast<std::uint32_t>(v) >= p_) {
      throw InvalidInput("bad digit in field element '" + std::string(text) + "'");
    }
    d.push_back(static_cast<std::uint32_t>(v));
  }
  return from_digits(d);
}

bool Field::same_as(const Field& other) const {
  return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (m_ > 1) {
    os << " = F_" << p_ << "[x]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      const auto c = modulus_[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

std::vector<Fq> Field::elements() const {
  std::vector<Fq> r(q_);
  for (std::uint32_t i = 0; i < q_; ++i) r[i] = Fq{i};
  return r;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw InvalidInput("extension degree must be at least 1");
  if (ipow(p, m) > Field::kMaxOrder || m > 16) {
    throw InvalidInput("field of order " + std::to_string(p) + "^" + std::to_string(m) +
                       " exceeds the supported size");
  }
  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1) {
      throw InvalidInput("modulus must be monic of degree " + std::to_string(m));
    }
    for (auto c : mod) {
      if (c >= p) throw InvalidInput("modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible(p, mod)) throw InvalidInput("modulus is reducible over F_p");
  } else {
    // Lexicographic order on (c_0, ..., c_{m-1}): c_0 is the most significant.
    const std::uint64_t count = ipow(p, m);
    mod.assign(m + 1, 0);
    mod[m] = 1;
    bool found = false;
    for (std::uint64_t t = 0; t < count && !found; ++t) {
      std::uint64_t x = t;
      for (std::uint32_t i = m; i-- > 0;) {
        mod[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      found = is_irreducible(p, mod);
    }
    if (!found) throw InternalError("no irreducible polynomial found");
  }
  return std::make_shared<const Field>(p, m, std::move(mod));
}

void require_same_field(const Field& a, const Field& b) {
  if (!a.same_as(b)) throw ContextMismatch("elements belong to different fields");
}

FieldElem::FieldElem(FieldPtr field, Fq value) : field_(std::move(field)), value_(value) {
  if (!field_) throw InvalidInput("null field");
  if (value_.code >= field_->q()) throw InvalidInput("field element code out of range");
}

FieldElem FieldElem::from_int(FieldPtr field, std::int64_t v) {
  const Fq x = field->from_int(v);
  return FieldElem(std::move(field), x);
}

FieldElem FieldElem::parse(FieldPtr field, std::string_view text) {
  const Fq x = field->parse(text);
  return FieldElem(std::move(field), x);
}

FieldElem FieldElem::inv() const { return FieldElem(field_, field_->inv(value_)); }

FieldElem FieldElem::pow(std::int64_t k) const { return FieldElem(field_, field_->pow(value_, k)); }

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_field(*a.field_, *b.field_);
  return FieldElem(a.field_, a.field_->add(a.value_, b.value_));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same_field(*a.field_, *b.field_);
  return FieldElem(a.field_, a.field_->sub(a.value_, b.value_));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_field(*a.field_, *b.field_);
  return FieldElem(a.field_, a.field_->mul(a.value_, b.value_));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  require_same_field(*a.field_, *b.field_);
  return FieldElem(a.field_, a.field_->div(a.value_, b.value_));
}

FieldElem FieldElem::operator-() const { return FieldElem(field_, field_->neg(value_)); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

}  // namespace twgr
