#pragma once

// Exact coefficient fields: the rationals (arbitrary precision) and prime
// fields GF(p) with p <= 2^16.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace invalg {

/// Raised on division by zero, mixed-field arithmetic and malformed literals.
class ScalarError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Field descriptor. Modulus 0 denotes the rationals.
class Field {
 public:
  constexpr Field() noexcept = default;

  static constexpr Field rationals() noexcept { return Field{}; }
  /// Throws ScalarError unless p is a prime not exceeding 65536.
  static Field prime(std::uint32_t p);
  /// Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  constexpr bool is_rational() const noexcept { return p_ == 0; }
  constexpr std::uint32_t characteristic() const noexcept { return p_; }
  /// Number of elements, or nullopt for the rationals.
  std::optional<std::uint64_t> size() const noexcept {
    if (p_ == 0) return std::nullopt;
    return p_;
  }

  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) noexcept = default;

 private:
  constexpr explicit Field(std::uint32_t p) noexcept : p_(p) {}

  std::uint32_t p_ = 0;
};

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator (mpq canonical form); residues are kept in [0, p).
class FieldElem {
 public:
  FieldElem() = default;

  static FieldElem zero(Field f) { return from_int(f, 0); }
  static FieldElem one(Field f) { return from_int(f, 1); }
  static FieldElem from_int(Field f, long value);
  static FieldElem from_rational(Field f, const mpq_class& value);
  /// Parses "a", "-a", "a/b" (any field) and "v mod p" (prime fields).
  /// Decimal points and exponents are rejected.
  static FieldElem parse(Field f, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Throws ScalarError for zero.
  FieldElem inv() const;

  /// Only valid for rationals.
  const mpq_class& rational() const;
  /// Only valid for prime fields.
  std::uint32_t residue() const;

  FieldElem& operator+=(const FieldElem& other);
  FieldElem& operator-=(const FieldElem& other);
  FieldElem& operator*=(const FieldElem& other);
  FieldElem& operator/=(const FieldElem& other);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const;

  /// Elements of different fields compare unequal.
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  /// Total order inside one field (residue order, or rational order).
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

  /// Serialized form: "a/b" (b omitted when 1) or "v mod p".
  std::string to_string() const;
  /// Bare value: "a/b" or "v"; used inside polynomial and element renderings.
  std::string to_plain_string() const;

 private:
  void require_same_field(const FieldElem& other) const;

  Field field_{};
  std::variant<std::uint32_t, mpq_class> value_{mpq_class{0}};
};

/// Named form of the basic field operations.
enum class FieldOp { add, sub, mul, inv, neg };

/// Dispatches one field operation; binary operations require `b`.
FieldElem field_arith(FieldOp op, const FieldElem& a,
                      const std::optional<FieldElem>& b = std::nullopt);

}  // namespace invalg
