#pragma once

// Polynomials and rational functions in the two scalar parameters k and h.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invalg/scalars.hpp"

namespace invalg {

/// Exponent pair of a monomial k^k h^h.
struct Exponent {
  std::uint16_t k = 0;
  std::uint16_t h = 0;

  constexpr unsigned total() const noexcept { return unsigned{k} + h; }
  friend constexpr bool operator==(Exponent, Exponent) noexcept = default;
};

/// Graded lexicographic order with k > h, largest monomial first.
struct GrlexDescending {
  constexpr bool operator()(Exponent a, Exponent b) const noexcept {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.k > b.k;
  }
};

/// Sparse polynomial in k and h over a Field. No zero coefficient is stored.
class ParamPoly {
 public:
  using Terms = std::map<Exponent, FieldElem, GrlexDescending>;

  ParamPoly() = default;
  explicit ParamPoly(Field f) : field_(f) {}
  explicit ParamPoly(const FieldElem& constant);

  static ParamPoly constant(Field f, long value) { return ParamPoly{FieldElem::from_int(f, value)}; }
  static ParamPoly monomial(const FieldElem& coefficient, Exponent e);
  static ParamPoly k(Field f) { return monomial(FieldElem::one(f), {1, 0}); }
  static ParamPoly h(Field f) { return monomial(FieldElem::one(f), {0, 1}); }
  /// Parses expressions over integers, a/b fractions, k and h with + - * ^ and
  /// parentheses, e.g. "-(k+1)", "1/2*k^2 - h".
  static ParamPoly parse(Field f, std::string_view text);

  Field field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Coefficient of k^0 h^0.
  FieldElem constant_term() const;
  FieldElem coefficient(Exponent e) const;
  unsigned degree_k() const noexcept;
  unsigned degree_h() const noexcept;
  bool uses_k() const noexcept { return degree_k() > 0; }
  bool uses_h() const noexcept { return degree_h() > 0; }

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly operator-() const;
  ParamPoly scaled(const FieldElem& s) const;

  FieldElem eval(const FieldElem& k_val, const FieldElem& h_val) const;
  /// Composition p(k_val, h_val) with polynomial arguments.
  ParamPoly substitute(const ParamPoly& k_val, const ParamPoly& h_val) const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  /// Terms in grlex order, e.g. "k^2*h - 1/2*k + 3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add_term(Exponent e, const FieldElem& c);

  Field field_{};
  Terms terms_;
};

/// Exact evaluation of p at (k, h).
inline FieldElem poly_eval(const ParamPoly& p, const FieldElem& k_val, const FieldElem& h_val) {
  return p.eval(k_val, h_val);
}

/// Quotient of two ParamPolys. The denominator is never zero and is scaled so
/// its leading grlex coefficient is 1. A common monomial factor is always
/// removed; polynomial gcds are cancelled when numerator and denominator
/// involve at most one common indeterminate. Equality is decided by
/// cross-multiplication, so it is exact in every case.
class ParamRatFunc {
 public:
  ParamRatFunc() : num_(Field{}), den_(ParamPoly::constant(Field{}, 1)) {}
  explicit ParamRatFunc(Field f) : num_(f), den_(ParamPoly::constant(f, 1)) {}
  explicit ParamRatFunc(ParamPoly numerator);
  ParamRatFunc(ParamPoly numerator, ParamPoly denominator);

  Field field() const noexcept { return num_.field(); }
  const ParamPoly& numerator() const noexcept { return num_; }
  const ParamPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  ParamRatFunc inv() const;

  friend ParamRatFunc operator+(const ParamRatFunc& a, const ParamRatFunc& b);
  friend ParamRatFunc operator-(const ParamRatFunc& a, const ParamRatFunc& b);
  friend ParamRatFunc operator*(const ParamRatFunc& a, const ParamRatFunc& b);
  friend ParamRatFunc operator/(const ParamRatFunc& a, const ParamRatFunc& b);
  ParamRatFunc operator-() const;

  friend bool operator==(const ParamRatFunc& a, const ParamRatFunc& b);

  /// "num" when the denominator is 1, otherwise "(num)/(den)" with parentheses
  /// dropped around single terms.
  std::string to_string() const;

 private:
  void normalize();

  ParamPoly num_;
  ParamPoly den_;
};

/// One linear equation sum_j coefficients[j] * u_j = rhs.
struct LinearEquation {
  std::vector<ParamRatFunc> coefficients;
  ParamRatFunc rhs;
};

/// Solution description of a linear system over Q(k, h).
struct LinearSolution {
  enum class Status { unique, underdetermined, inconsistent };

  Status status = Status::inconsistent;
  /// Values with every free unknown set to zero.
  std::vector<ParamRatFunc> particular;
  /// True for unknowns without a pivot.
  std::vector<bool> free;
  /// dependence[i][j]: unknown i equals particular[i] - sum_j dependence[i][j] * u_j
  /// over free unknowns j (zero rows for free unknowns themselves).
  std::vector<std::vector<ParamRatFunc>> dependence;
  /// For inconsistent systems: index of an input equation that reduces to
  /// 0 = witness_rhs with witness_rhs nonzero.
  std::optional<std::size_t> witness_equation;
  ParamRatFunc witness_rhs;

  bool consistent() const noexcept { return status != Status::inconsistent; }
};

/// Gauss-Jordan elimination over the rational function field. Pivots are
/// chosen among entries that are nonzero as rational functions, so the answer
/// is the generic one (valid away from the zeros of the pivots used).
LinearSolution ratfunc_solve_linear(const std::vector<LinearEquation>& system,
                                    std::size_t unknowns);

}  // namespace invalg
