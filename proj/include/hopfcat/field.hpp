#ifndef HOPFCAT_FIELD_HPP
#define HOPFCAT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace hopfcat {

bool is_prime(std::uint64_t n);

/// The base field: either the rationals or a prime field F_p with p < 2^31.
struct FieldSpec {
  enum class Kind : std::uint8_t { rationals, prime };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() noexcept { return {}; }
  /// Throws InvalidPrimeError unless p is a prime in [2, 2^31).
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q", "Fp:<p>" and "F<p>".
  static FieldSpec parse(std::string_view text);

  bool is_prime_field() const noexcept { return kind == Kind::prime; }
  std::uint32_t characteristic() const noexcept { return p; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct BigRational;

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator and fall back to GMP only when a value leaves the int64 range;
/// residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const FieldSpec& field, std::int64_t value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
  /// num/den mapped into the field. Throws if den vanishes in the field.
  static Scalar fraction(const FieldSpec& field, std::int64_t num, std::int64_t den);
  /// Decimal strings, for values that do not fit a machine word.
  static Scalar parse(const FieldSpec& field, std::string_view num, std::string_view den = "1");

  FieldSpec field() const noexcept;
  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
  Scalar inverse() const;

  bool operator==(const Scalar& other) const;

  /// "3", "-1/2"; residues print as their representative in [0, p).
  std::string to_string() const;
  std::string numerator_string() const;
  std::string denominator_string() const;

 private:
  void require_same_field(const Scalar& other) const;
  static Scalar residue(std::uint32_t p, std::uint64_t value);
  static Scalar from_wide(__int128 num, __int128 den);
  static Scalar from_big(const BigRational& value);
  BigRational to_big() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t mod_ = 0;  // 0 selects the rationals
  std::shared_ptr<const BigRational> big_;
};

}  // namespace hopfcat

#endif  // HOPFCAT_FIELD_HPP
