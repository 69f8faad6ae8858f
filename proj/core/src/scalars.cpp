#include "invalg/scalars.hpp"

#include <cctype>
#include <charconv>

namespace invalg {

namespace {

constexpr std::uint32_t kMaxPrime = 65536;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit values; p < 2^17 so nothing overflows.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t -= quotient * new_t;
    std::swap(t, new_t);
    r -= quotient * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mpz(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class{std::string{s}, 10};
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p > kMaxPrime) {
    throw ScalarError("prime field modulus " + std::to_string(p) + " exceeds 2^16");
  }
  if (!is_prime(p)) {
    throw ScalarError("field modulus " + std::to_string(p) + " is not prime");
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    const auto digits = text.substr(3);
    std::uint32_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ScalarError("malformed field descriptor '" + std::string{text} + "'");
    }
    return prime(p);
  }
  throw ScalarError("unknown field descriptor '" + std::string{text} + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return p_ == 0 ? std::string{"Q"} : "Fp:" + std::to_string(p_);
}

FieldElem FieldElem::from_int(Field f, long value) {
  FieldElem e;
  e.field_ = f;
  if (f.is_rational()) {
    e.value_ = mpq_class{value};
  } else {
    const long p = f.characteristic();
    long r = value % p;
    if (r < 0) r += p;
    e.value_ = static_cast<std::uint32_t>(r);
  }
  return e;
}

FieldElem FieldElem::from_rational(Field f, const mpq_class& value) {
  FieldElem e;
  e.field_ = f;
  if (f.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    e.value_ = std::move(v);
    return e;
  }
  const std::uint32_t p = f.characteristic();
  const std::uint32_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) {
    throw ScalarError("denominator of " + value.get_str() + " vanishes in " + f.to_string());
  }
  const std::uint32_t num = reduce_mpz(value.get_num(), p);
  e.value_ = static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(num) * inverse_mod(den, p)) % p);
  return e;
}

FieldElem FieldElem::parse(Field f, std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto mod = s.find(" mod "); mod != std::string_view::npos) {
    const auto value = trim(s.substr(0, mod));
    const auto modulus = trim(s.substr(mod + 5));
    if (f.is_rational() || !is_integer_literal(value) || !is_integer_literal(modulus)) {
      throw ScalarError("malformed residue literal '" + std::string{s} + "' for " + f.to_string());
    }
    if (parse_integer(modulus) != f.characteristic()) {
      throw ScalarError("residue literal '" + std::string{s} + "' does not belong to " +
                        f.to_string());
    }
    return from_rational(f, mpq_class{parse_integer(value)});
  }
  const auto slash = s.find('/');
  const auto num_text = s.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw ScalarError("malformed exact literal '" + std::string{s} + "'");
  }
  mpz_class den{1};
  if (slash != std::string_view::npos) {
    const auto den_text = s.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
      throw ScalarError("malformed exact literal '" + std::string{s} + "'");
    }
    den = parse_integer(den_text);
    if (den == 0) throw ScalarError("zero denominator in literal '" + std::string{s} + "'");
  }
  return from_rational(f, mpq_class{parse_integer(num_text), den});
}

bool FieldElem::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool FieldElem::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw ScalarError("inverse of zero in " + field_.to_string());
  FieldElem e;
  e.field_ = field_;
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) {
    e.value_ = inverse_mod(*r, field_.characteristic());
  } else {
    e.value_ = mpq_class{1} / std::get<mpq_class>(value_);
  }
  return e;
}

const mpq_class& FieldElem::rational() const {
  if (!field_.is_rational()) throw ScalarError("rational() on an element of " + field_.to_string());
  return std::get<mpq_class>(value_);
}

std::uint32_t FieldElem::residue() const {
  if (field_.is_rational()) throw ScalarError("residue() on a rational element");
  return std::get<std::uint32_t>(value_);
}

void FieldElem::require_same_field(const FieldElem& other) const {
  if (field_ != other.field_) {
    throw ScalarError("mixed-field operands: " + field_.to_string() + " and " +
                      other.field_.to_string());
  }
}

FieldElem& FieldElem::operator+=(const FieldElem& other) {
  require_same_field(other);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint32_t p = field_.characteristic();
    const std::uint32_t s = *r + std::get<std::uint32_t>(other.value_);
    *r = s >= p ? s - p : s;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& other) {
  require_same_field(other);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint32_t p = field_.characteristic();
    const std::uint32_t b = std::get<std::uint32_t>(other.value_);
    *r = *r >= b ? *r - b : *r + p - b;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& other) {
  require_same_field(other);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t prod =
        static_cast<std::uint64_t>(*r) * std::get<std::uint32_t>(other.value_);
    *r = static_cast<std::uint32_t>(prod % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& other) {
  require_same_field(other);
  if (other.is_zero()) throw ScalarError("division by zero in " + field_.to_string());
  return *this *= other.inv();
}

FieldElem FieldElem::operator-() const {
  FieldElem e = *this;
  if (auto* r = std::get_if<std::uint32_t>(&e.value_)) {
    if (*r != 0) *r = field_.characteristic() - *r;
  } else {
    std::get<mpq_class>(e.value_) = -std::get<mpq_class>(e.value_);
  }
  return e;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.field_ != b.field_) return false;
  if (const auto* r = std::get_if<std::uint32_t>(&a.value_)) {
    return *r == std::get<std::uint32_t>(b.value_);
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
  a.require_same_field(b);
  if (const auto* r = std::get_if<std::uint32_t>(&a.value_)) {
    return *r <=> std::get<std::uint32_t>(b.value_);
  }
  const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string FieldElem::to_plain_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

std::string FieldElem::to_string() const {
  if (field_.is_rational()) return to_plain_string();
  return to_plain_string() + " mod " + std::to_string(field_.characteristic());
}

FieldElem field_arith(FieldOp op, const FieldElem& a, const std::optional<FieldElem>& b) {
  const auto rhs = [&]() -> const FieldElem& {
    if (!b) throw ScalarError("binary field operation without second operand");
    return *b;
  };
  switch (op) {
    case FieldOp::add: return a + rhs();
    case FieldOp::sub: return a - rhs();
    case FieldOp::mul: return a * rhs();
    case FieldOp::inv: return a.inv();
    case FieldOp::neg: return -a;
  }
  throw ScalarError("unknown field operation");
}

}  // namespace invalg
