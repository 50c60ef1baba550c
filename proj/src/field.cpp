#include "hopfcat/field.hpp"

#include <gmpxx.h>

#include <charconv>
#include <climits>
#include <limits>

#include "hopfcat/errors.hpp"

namespace hopfcat {

struct BigRational {
  mpq_class q;
};

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kInt64Min = std::numeric_limits<std::int64_t>::min();
constexpr i128 kInt64Max = std::numeric_limits<std::int64_t>::max();

bool fits64(i128 v) { return v > kInt64Min && v <= kInt64Max; }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31U) || !is_prime(p)) {
    throw InvalidPrimeError("not a prime below 2^31: " + std::to_string(p));
  }
  return FieldSpec{Kind::prime, static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  std::string_view digits;
  if (text.starts_with("Fp:")) {
    digits = text.substr(3);
  } else if (text.starts_with("F")) {
    digits = text.substr(1);
  } else {
    throw InvalidPrimeError("unrecognised field '" + std::string(text) + "'");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw InvalidPrimeError("unrecognised field '" + std::string(text) + "'");
  }
  return prime(p);
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rationals ? std::string("Q") : "Fp:" + std::to_string(p);
}

Scalar::Scalar(const FieldSpec& field, std::int64_t value) {
  if (field.is_prime_field()) {
    mod_ = field.p;
    num_ = static_cast<std::int64_t>(reduce_signed(value, field.p));
  } else {
    num_ = value;
  }
}

Scalar Scalar::fraction(const FieldSpec& field, std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (field.is_prime_field()) {
    Scalar d(field, den);
    if (d.is_zero()) throw std::domain_error("denominator vanishes in " + field.to_string());
    return Scalar(field, num) * d.inverse();
  }
  return from_wide(num, den);
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view num, std::string_view den) {
  mpz_class n;
  mpz_class d;
  if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0) {
    throw std::invalid_argument("not an integer: " + std::string(num) + "/" + std::string(den));
  }
  if (d == 0) throw std::domain_error("zero denominator");
  if (field.is_prime_field()) {
    Scalar dn = residue(field.p, reduce_mpz(d, field.p));
    if (dn.is_zero()) throw std::domain_error("denominator vanishes in " + field.to_string());
    return residue(field.p, reduce_mpz(n, field.p)) * dn.inverse();
  }
  BigRational q{mpq_class(n, d)};
  q.q.canonicalize();
  return from_big(q);
}

FieldSpec Scalar::field() const noexcept {
  return mod_ == 0 ? FieldSpec::rationals() : FieldSpec{FieldSpec::Kind::prime, mod_};
}

void Scalar::require_same_field(const Scalar& other) const {
  if (mod_ != other.mod_) {
    throw FieldMismatchError("scalar field mismatch: " + field().to_string() + " vs " +
                             other.field().to_string());
  }
}

Scalar Scalar::residue(std::uint32_t p, std::uint64_t value) {
  Scalar s;
  s.mod_ = p;
  s.num_ = static_cast<std::int64_t>(value % p);
  return s;
}

Scalar Scalar::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num == 0) den = 1;
  if (fits64(num) && fits64(den)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
    return s;
  }
  BigRational q{mpq_class(to_mpz(num), to_mpz(den))};
  q.q.canonicalize();
  Scalar s;
  s.big_ = std::make_shared<const BigRational>(std::move(q));
  return s;
}

Scalar Scalar::from_big(const BigRational& value) {
  const mpz_class& n = value.q.get_num();
  const mpz_class& d = value.q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != LONG_MIN && d != LONG_MIN) {
    Scalar s;
    s.num_ = n.get_si();
    s.den_ = d.get_si();
    return s;
  }
  Scalar s;
  s.big_ = std::make_shared<const BigRational>(value);
  return s;
}

BigRational Scalar::to_big() const {
  if (big_) return *big_;
  return BigRational{mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)))};
}

Scalar Scalar::operator-() const {
  if (mod_ != 0) return residue(mod_, num_ == 0 ? 0 : mod_ - static_cast<std::uint64_t>(num_));
  if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) {
    BigRational b = to_big();
    b.q = -b.q;
    return from_big(b);
  }
  Scalar s = *this;
  s.num_ = -num_;
  return s;
}

Scalar Scalar::operator+(const Scalar& other) const {
  require_same_field(other);
  if (mod_ != 0) {
    return residue(mod_, static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(other.num_));
  }
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t r = 0;
      if (!__builtin_add_overflow(num_, other.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
        Scalar s;
        s.num_ = r;
        return s;
      }
    }
    i128 n = static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_;
    i128 d = static_cast<i128>(den_) * other.den_;
    return from_wide(n, d);
  }
  BigRational r{to_big().q + other.to_big().q};
  return from_big(r);
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
  require_same_field(other);
  if (mod_ != 0) {
    return residue(mod_, static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(other.num_));
  }
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t r = 0;
      if (!__builtin_mul_overflow(num_, other.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
        Scalar s;
        s.num_ = r;
        return s;
      }
    }
    return from_wide(static_cast<i128>(num_) * other.num_, static_cast<i128>(den_) * other.den_);
  }
  BigRational r{to_big().q * other.to_big().q};
  return from_big(r);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (mod_ != 0) return residue(mod_, mod_pow(static_cast<std::uint64_t>(num_), mod_ - 2, mod_));
  if (big_) {
    BigRational r{1 / big_->q};
    return from_big(r);
  }
  return from_wide(den_, num_);
}

Scalar Scalar::operator/(const Scalar& other) const {
  require_same_field(other);
  return *this * other.inverse();
}

bool Scalar::operator==(const Scalar& other) const {
  if (mod_ != other.mod_) return false;
  if (big_ || other.big_) {
    if (!big_ || !other.big_) return false;
    return big_->q == other.big_->q;
  }
  return num_ == other.num_ && den_ == other.den_;
}

std::string Scalar::numerator_string() const {
  if (big_) return big_->q.get_num().get_str();
  return std::to_string(num_);
}

std::string Scalar::denominator_string() const {
  if (big_) return big_->q.get_den().get_str();
  return std::to_string(den_);
}

std::string Scalar::to_string() const {
  std::string den = denominator_string();
  if (den == "1") return numerator_string();
  return numerator_string() + "/" + den;
}

}  // namespace hopfcat
