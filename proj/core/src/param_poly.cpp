#include "invalg/param_poly.hpp"

#include <algorithm>
#include <cctype>

#include "invalg/linalg.hpp"

namespace invalg {

// ---------------------------------------------------------------------------
// ParamPoly

ParamPoly::ParamPoly(const FieldElem& constant) : field_(constant.field()) {
  add_term({0, 0}, constant);
}

ParamPoly ParamPoly::monomial(const FieldElem& coefficient, Exponent e) {
  ParamPoly p(coefficient.field());
  p.add_term(e, coefficient);
  return p;
}

void ParamPoly::add_term(Exponent e, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ParamPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

FieldElem ParamPoly::constant_term() const { return coefficient({0, 0}); }

FieldElem ParamPoly::coefficient(Exponent e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

unsigned ParamPoly::degree_k() const noexcept {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e.k);
  return d;
}

unsigned ParamPoly::degree_h() const noexcept {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e.h);
  return d;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  if (field_ != other.field_) {
    throw ScalarError("mixed-field polynomials: " + field_.to_string() + " and " +
                      other.field_.to_string());
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  if (field_ != other.field_) {
    throw ScalarError("mixed-field polynomials: " + field_.to_string() + " and " +
                      other.field_.to_string());
  }
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.field_ != b.field_) {
    throw ScalarError("mixed-field polynomials: " + a.field_.to_string() + " and " +
                      b.field_.to_string());
  }
  ParamPoly out(a.field_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({static_cast<std::uint16_t>(ea.k + eb.k), static_cast<std::uint16_t>(ea.h + eb.h)},
                   ca * cb);
    }
  }
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) { return *this = *this * other; }

ParamPoly ParamPoly::operator-() const {
  ParamPoly p(field_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

ParamPoly ParamPoly::scaled(const FieldElem& s) const {
  ParamPoly p(field_);
  for (const auto& [e, c] : terms_) p.add_term(e, c * s);
  return p;
}

namespace {

template <class T>
T power(const T& base, unsigned exponent, T one) {
  T result = std::move(one);
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

}  // namespace

FieldElem ParamPoly::eval(const FieldElem& k_val, const FieldElem& h_val) const {
  if (k_val.field() != field_ || h_val.field() != field_) {
    throw ScalarError("evaluating a polynomial over " + field_.to_string() + " at values from " +
                      k_val.field().to_string());
  }
  FieldElem sum = FieldElem::zero(field_);
  for (const auto& [e, c] : terms_) {
    sum += c * power(k_val, e.k, FieldElem::one(field_)) * power(h_val, e.h, FieldElem::one(field_));
  }
  return sum;
}

ParamPoly ParamPoly::substitute(const ParamPoly& k_val, const ParamPoly& h_val) const {
  ParamPoly sum(field_);
  const ParamPoly one = constant(field_, 1);
  for (const auto& [e, c] : terms_) {
    sum += (power(k_val, e.k, one) * power(h_val, e.h, one)).scaled(c);
  }
  return sum;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  return a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.field().is_rational() && c.rational() < 0;
    const FieldElem magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string vars;
    const auto append_var = [&vars](char name, unsigned exp) {
      if (exp == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (exp > 1) vars += "^" + std::to_string(exp);
    };
    append_var('k', e.k);
    append_var('h', e.h);
    if (vars.empty()) {
      out += magnitude.to_plain_string();
    } else if (magnitude.is_one()) {
      out += vars;
    } else {
      out += magnitude.to_plain_string() + "*" + vars;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Literal parser

namespace {

class PolyParser {
 public:
  PolyParser(Field f, std::string_view text) : field_(f), text_(text) {}

  ParamPoly parse() {
    ParamPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ScalarError("cannot parse parameter literal '" + std::string{text_} + "': " + what +
                      " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamPoly expression() {
    ParamPoly p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  ParamPoly term() {
    ParamPoly p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        const ParamPoly divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) fail("division by a non-constant or zero");
        p = p.scaled(divisor.constant_term().inv());
      } else {
        return p;
      }
    }
  }

  ParamPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power_expr();
  }

  ParamPoly power_expr() {
    ParamPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned exp = static_cast<unsigned>(std::stoul(std::string{text_.substr(start, pos_ - start)}));
      base = power(base, exp, ParamPoly::constant(field_, 1));
    }
    return base;
  }

  ParamPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParamPoly p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == 'k' || c == 'h') {
      ++pos_;
      return c == 'k' ? ParamPoly::k(field_) : ParamPoly::h(field_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
        fail("floating-point literals are not exact");
      }
      return ParamPoly{FieldElem::parse(field_, text_.substr(start, pos_ - start))};
    }
    fail(std::string{"unexpected '"} + c + "'");
  }

  Field field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamPoly ParamPoly::parse(Field f, std::string_view text) { return PolyParser(f, text).parse(); }

// ---------------------------------------------------------------------------
// Univariate helpers for gcd cancellation

namespace {

enum class Var { k, h };

using Dense = std::vector<FieldElem>;  // coefficient of x^i at index i

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense to_dense(const ParamPoly& p, Var v) {
  Dense d;
  for (const auto& [e, c] : p.terms()) {
    const unsigned deg = v == Var::k ? e.k : e.h;
    if (d.size() <= deg) d.resize(deg + 1, FieldElem::zero(p.field()));
    d[deg] = c;
  }
  return d;
}

ParamPoly from_dense(Field f, const Dense& d, Var v) {
  ParamPoly p(f);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto deg = static_cast<std::uint16_t>(i);
    p += ParamPoly::monomial(d[i], v == Var::k ? Exponent{deg, 0} : Exponent{0, deg});
  }
  return p;
}

// Returns quotient, leaves remainder in `num`.
Dense divide(Dense& num, const Dense& den) {
  trim(num);
  if (num.size() < den.size()) return {};
  Dense quotient(num.size() - den.size() + 1, FieldElem::zero(den.back().field()));
  const FieldElem lead_inv = den.back().inv();
  while (num.size() >= den.size() && !num.empty()) {
    const std::size_t shift = num.size() - den.size();
    const FieldElem factor = num.back() * lead_inv;
    quotient[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    trim(num);
  }
  return quotient;
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    divide(a, b);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// ParamRatFunc

ParamRatFunc::ParamRatFunc(ParamPoly numerator)
    : num_(std::move(numerator)), den_(ParamPoly::constant(num_.field(), 1)) {}

ParamRatFunc::ParamRatFunc(ParamPoly numerator, ParamPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw ScalarError("rational function with zero denominator");
  if (num_.field() != den_.field()) throw ScalarError("mixed-field rational function");
  normalize();
}

void ParamRatFunc::normalize() {
  const Field f = num_.field();
  if (num_.is_zero()) {
    den_ = ParamPoly::constant(f, 1);
    return;
  }
  // Common monomial factor.
  Exponent common{UINT16_MAX, UINT16_MAX};
  for (const auto* p : {&num_, &den_}) {
    for (const auto& [e, c] : p->terms()) {
      common.k = std::min(common.k, e.k);
      common.h = std::min(common.h, e.h);
    }
  }
  if (common.total() > 0) {
    const auto shift = [&](const ParamPoly& p) {
      ParamPoly out(f);
      for (const auto& [e, c] : p.terms()) {
        out += ParamPoly::monomial(
            c, {static_cast<std::uint16_t>(e.k - common.k), static_cast<std::uint16_t>(e.h - common.h)});
      }
      return out;
    };
    num_ = shift(num_);
    den_ = shift(den_);
  }
  // Polynomial gcd when only one indeterminate occurs.
  const bool k_used = num_.uses_k() || den_.uses_k();
  const bool h_used = num_.uses_h() || den_.uses_h();
  if (k_used != h_used) {
    const Var v = k_used ? Var::k : Var::h;
    const Dense g = gcd(to_dense(num_, v), to_dense(den_, v));
    if (g.size() > 1) {
      Dense n = to_dense(num_, v);
      Dense d = to_dense(den_, v);
      num_ = from_dense(f, divide(n, g), v);
      den_ = from_dense(f, divide(d, g), v);
    }
  }
  const FieldElem lead = den_.terms().begin()->second;
  if (!lead.is_one()) {
    const FieldElem inv = lead.inv();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

ParamRatFunc ParamRatFunc::inv() const {
  if (is_zero()) throw ScalarError("inverse of the zero rational function");
  return ParamRatFunc(den_, num_);
}

ParamRatFunc operator+(const ParamRatFunc& a, const ParamRatFunc& b) {
  if (a.den_ == b.den_) return ParamRatFunc(a.num_ + b.num_, a.den_);
  return ParamRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamRatFunc operator-(const ParamRatFunc& a, const ParamRatFunc& b) {
  if (a.den_ == b.den_) return ParamRatFunc(a.num_ - b.num_, a.den_);
  return ParamRatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ParamRatFunc operator*(const ParamRatFunc& a, const ParamRatFunc& b) {
  return ParamRatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

ParamRatFunc operator/(const ParamRatFunc& a, const ParamRatFunc& b) {
  if (b.is_zero()) throw ScalarError("division by the zero rational function");
  return ParamRatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

ParamRatFunc ParamRatFunc::operator-() const { return ParamRatFunc(-num_, den_); }

bool operator==(const ParamRatFunc& a, const ParamRatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ParamRatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_term().is_one()) return num_.to_string();
  const auto wrap = [](const ParamPoly& p) {
    const std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

// ---------------------------------------------------------------------------
// Linear systems

LinearSolution ratfunc_solve_linear(const std::vector<LinearEquation>& system,
                                    std::size_t unknowns) {
  Field f{};
  if (!system.empty()) f = system.front().rhs.field();
  std::vector<std::vector<ParamRatFunc>> rows;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (system[i].coefficients.size() != unknowns) {
      throw ScalarError("equation " + std::to_string(i) + " has " +
                        std::to_string(system[i].coefficients.size()) + " coefficients, expected " +
                        std::to_string(unknowns));
    }
    auto row = system[i].coefficients;
    row.push_back(system[i].rhs);
    rows.push_back(std::move(row));
    origin.push_back(i);
  }
  const auto pivots = reduce_rows(rows, unknowns, &origin);

  LinearSolution sol;
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (!rows[r][unknowns].is_zero()) {
      sol.status = LinearSolution::Status::inconsistent;
      sol.witness_equation = origin[r];
      sol.witness_rhs = rows[r][unknowns];
      return sol;
    }
  }
  sol.free.assign(unknowns, true);
  for (auto p : pivots) sol.free[p] = false;
  sol.particular.assign(unknowns, ParamRatFunc(f));
  sol.dependence.assign(unknowns, std::vector<ParamRatFunc>(unknowns, ParamRatFunc(f)));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    sol.particular[pivots[r]] = rows[r][unknowns];
    for (std::size_t j = 0; j < unknowns; ++j) {
      if (sol.free[j]) sol.dependence[pivots[r]][j] = rows[r][j];
    }
  }
  sol.status = pivots.size() == unknowns ? LinearSolution::Status::unique
                                         : LinearSolution::Status::underdetermined;
  return sol;
}

}  // namespace invalg
