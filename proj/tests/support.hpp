#pragma once

// Small fixtures and hand-rolled oracles shared by the unit tests. The oracles
// deliberately avoid the library's Matrix and Subspace types.

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "invalg/invariant.hpp"
#include "invalg/representations.hpp"

namespace fixtures {

using namespace invalg;

inline Vec vec(Field f, std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(FieldElem::from_int(f, x));
  return v;
}

// Lower-triangular 2x2 matrices on the basis E11, E21, E22.
inline FiniteAlgebra lower_triangular(Field f) {
  const auto one = FieldElem::one(f);
  StructureTable t(f, 3, {{0, 0, 0, one}, {1, 0, 1, one}, {2, 1, 1, one}, {2, 2, 2, one}});
  return FiniteAlgebra(t, vec(f, {1, 0, 1}));
}

inline InvariantAlgebra lower_triangular_inv(Field f) {
  return invariant_subalgebra(lower_triangular(f), vec(f, {1, 0, 0}));
}

// Full 2x2 matrices, E_ij at index 2i + j, q = E11.
inline InvariantAlgebra m2_inv(Field f) {
  return invariant_subalgebra(FiniteAlgebra::matrix_algebra(f, 2), vec(f, {1, 0, 0, 0}));
}

// The 2-dim GF(2) module: A = span(t), t*t = 0, t.e1 = e2, t.e2 = 0,
// W = span(e2), q = E11.
inline ModuleData gf2_three_irreducible() {
  const Field f = Field::prime(2);
  ModuleData m;
  m.star = StructureTable(f, 1, {});
  m.v_dim = 2;
  Matrix t(f, 2, 2);
  t(1, 0) = FieldElem::one(f);
  m.action = {t};
  m.w = Subspace::span(f, 2, std::vector<Vec>{vec(f, {0, 1})});
  m.q = Matrix(f, 2, 2);
  m.q(0, 0) = FieldElem::one(f);
  m.c = make_cvector(f, {1, 0, 0, 0, 0, 0, 0, 0});
  return m;
}

// V = W one-dimensional, zero action, q = 0.
inline ModuleData gf2_two_irreducible() {
  const Field f = Field::prime(2);
  ModuleData m;
  m.star = StructureTable(f, 1, {});
  m.v_dim = 1;
  m.action = {Matrix(f, 1, 1)};
  m.w = Subspace::whole(f, 1);
  m.q = Matrix(f, 1, 1);
  m.c = make_cvector(f, {1, 0, 0, 0, 0, 0, 0, 0});
  return m;
}

// Dense rational 2x2 matrices for independent evaluation.
using Q2 = std::array<std::array<mpq_class, 2>, 2>;

inline Q2 q2_mul(const Q2& a, const Q2& b) {
  Q2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) out[i][j] += a[i][l] * b[l][j];
  return out;
}

inline Q2 q2_from(const Vec& flat) {
  Q2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = flat[2 * i + j].rational();
  return out;
}

inline Vec q2_flat(const Q2& m) {
  Vec v;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) v.push_back(FieldElem::from_rational(Field::rationals(), m[i][j]));
  return v;
}

// Evaluates a formula written in compact notation, e.g. "xy-xqy+kqxy" or
// "(1-k)yqx-(k+1)qyx", on 2x2 rational matrices.
class FormulaOracle {
 public:
  FormulaOracle(std::string text, mpq_class k, mpq_class h = 0) : text_(std::move(text)), k_(k), h_(h) {}

  Q2 operator()(const Q2& x, const Q2& y, const Q2& q) const {
    Q2 out{};
    std::size_t pos = 0;
    while (pos < text_.size()) {
      mpq_class sign = 1;
      if (text_[pos] == '+' || text_[pos] == '-') sign = text_[pos++] == '-' ? -1 : 1;
      mpq_class coef = 1;
      if (text_[pos] == '(') {
        const auto close = text_.find(')', pos);
        coef = linear(text_.substr(pos + 1, close - pos - 1));
        pos = close + 1;
      } else {
        while (pos < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos])) || text_[pos] == 'k' ||
                                      text_[pos] == 'h')) {
          if (text_[pos] == 'k') {
            coef *= k_;
            ++pos;
          } else if (text_[pos] == 'h') {
            coef *= h_;
            ++pos;
          } else {
            std::size_t end = pos;
            while (std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
            coef *= mpq_class(text_.substr(pos, end - pos));
            pos = end;
          }
        }
      }
      Q2 term{};
      term[0][0] = term[1][1] = 1;
      while (pos < text_.size() && text_[pos] != '+' && text_[pos] != '-') {
        const char c = text_[pos++];
        term = q2_mul(term, c == 'x' ? x : c == 'y' ? y : q);
      }
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] += sign * coef * term[i][j];
    }
    return out;
  }

 private:
  // "a+bk" style linear expressions such as "1-k" or "k+1"
  mpq_class linear(const std::string& s) const {
    mpq_class total = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
      mpq_class sign = 1;
      if (s[pos] == '+' || s[pos] == '-') sign = s[pos++] == '-' ? -1 : 1;
      if (s[pos] == 'k') {
        total += sign * k_;
        ++pos;
      } else {
        std::size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        total += sign * mpq_class(s.substr(pos, end - pos));
        pos = end;
      }
    }
    return total;
  }

  std::string text_;
  mpq_class k_;
  mpq_class h_;
};

inline mpq_class small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  mpq_class r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace fixtures
