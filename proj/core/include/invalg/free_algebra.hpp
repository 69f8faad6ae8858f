#pragma once

// The free invariant algebra: linear combinations of words in the generators
// x, y, z, w and an idempotent q, modulo qq = q and q w q = q w. Normal-form
// monomials carry at most one q, namely the first one.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "invalg/param_poly.hpp"

namespace invalg {

enum class Generator : std::uint8_t { x = 0, y = 1, z = 2, w = 3 };
inline constexpr std::size_t kMaxGenerators = 4;

char generator_letter(Generator g) noexcept;
/// Throws std::invalid_argument for anything outside x, y, z, w.
Generator generator_from_letter(char c);

/// Image of each generator under a relabelling, indexed by generator id.
using GeneratorMap = std::array<Generator, kMaxGenerators>;
inline constexpr GeneratorMap kSwapXY{Generator::y, Generator::x, Generator::z, Generator::w};

/// Graded order used for maps and rendering: longer words first, then
/// lexicographic with q < x < y < z < w.
template <class Mono>
struct GradedOrder {
  bool operator()(const Mono& a, const Mono& b) const noexcept {
    if (a.key().size() != b.key().size()) return a.key().size() > b.key().size();
    return a.key() < b.key();
  }
};

/// A normal-form monomial: a generator word with at most one q inserted.
class QMonomial {
 public:
  using Order = GradedOrder<QMonomial>;

  QMonomial() = default;
  static QMonomial identity() { return {}; }
  static QMonomial q();
  static QMonomial generator(Generator g);
  /// Normalizes an arbitrary word over {x,y,z,w,q} by keeping only its first q.
  static QMonomial from_raw(std::string_view raw);

  /// The generator letters without q, e.g. "zyx" for zqyx.
  std::string word() const;
  std::optional<std::size_t> q_pos() const noexcept;
  bool has_q() const noexcept { return q_pos().has_value(); }
  bool is_identity() const noexcept { return key_.empty(); }
  std::size_t degree() const noexcept { return key_.size(); }

  friend QMonomial operator*(const QMonomial& a, const QMonomial& b);
  QMonomial map_generators(const GeneratorMap& map) const;

  /// Letters with q inline, e.g. "zqyx"; "1" for the identity.
  std::string to_string() const;
  /// Rank string (q=0, x=1, ..., w=4) that determines the monomial.
  const std::string& key() const noexcept { return key_; }

  friend bool operator==(const QMonomial&, const QMonomial&) = default;

 private:
  std::string key_;
};

/// Product of normal-form monomials: concatenate, keep the first q.
inline QMonomial mono_mul(const QMonomial& a, const QMonomial& b) { return a * b; }

/// A word in the free monoid on {x,y,z,w,q} subject only to qq = q. Used to
/// show which identities depend on the relation q w q = q w.
class RawWord {
 public:
  using Order = GradedOrder<RawWord>;

  RawWord() = default;
  static RawWord identity() { return {}; }
  static RawWord q();
  static RawWord generator(Generator g);

  friend RawWord operator*(const RawWord& a, const RawWord& b);
  RawWord map_generators(const GeneratorMap& map) const;
  std::string to_string() const;
  const std::string& key() const noexcept { return key_; }

  friend bool operator==(const RawWord&, const RawWord&) = default;

 private:
  std::string key_;
};

enum class RewriteStrategy { leftmost, rightmost };

/// Rewrites a raw word over {x,y,z,w,q} with the rules qq -> q and
/// q u q -> q u (u a nonempty generator word), always firing the leftmost or
/// the rightmost redex, until no redex remains.
std::string rewrite_to_normal_form(std::string_view raw, RewriteStrategy strategy);

/// Finite linear combination of monomials with ParamPoly coefficients.
template <class Mono>
class BasicFreeElement {
 public:
  using Terms = std::map<Mono, ParamPoly, typename Mono::Order>;

  explicit BasicFreeElement(Field f = {}) : field_(f) {}

  static BasicFreeElement monomial(Field f, const Mono& m) {
    return monomial(m, ParamPoly::constant(f, 1));
  }
  static BasicFreeElement monomial(const Mono& m, const ParamPoly& coefficient) {
    BasicFreeElement e(coefficient.field());
    e.add_term(m, coefficient);
    return e;
  }
  static BasicFreeElement identity(Field f) { return monomial(f, Mono::identity()); }
  static BasicFreeElement q(Field f) { return monomial(f, Mono::q()); }
  static BasicFreeElement generator(Field f, Generator g) { return monomial(f, Mono::generator(g)); }

  Field field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  ParamPoly coefficient(const Mono& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? ParamPoly(field_) : it->second;
  }

  void add_term(const Mono& m, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasicFreeElement& operator+=(const BasicFreeElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicFreeElement& operator-=(const BasicFreeElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend BasicFreeElement operator+(BasicFreeElement a, const BasicFreeElement& b) { return a += b; }
  friend BasicFreeElement operator-(BasicFreeElement a, const BasicFreeElement& b) { return a -= b; }
  BasicFreeElement operator-() const {
    BasicFreeElement e(field_);
    for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
    return e;
  }

  /// Bilinear extension of the monomial product.
  friend BasicFreeElement operator*(const BasicFreeElement& a, const BasicFreeElement& b) {
    BasicFreeElement out(a.field_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }

  BasicFreeElement scaled(const ParamPoly& s) const {
    BasicFreeElement e(field_);
    for (const auto& [m, c] : terms_) e.add_term(m, c * s);
    return e;
  }

  /// Coefficients evaluated at (k, h); zero coefficients dropped.
  BasicFreeElement specialize(const FieldElem& k_val, const FieldElem& h_val) const {
    BasicFreeElement e(k_val.field());
    for (const auto& [m, c] : terms_) e.add_term(m, ParamPoly{c.eval(k_val, h_val)});
    return e;
  }

  /// Coefficients composed with polynomial values for k and h.
  BasicFreeElement substitute_params(const ParamPoly& k_val, const ParamPoly& h_val) const {
    BasicFreeElement e(field_);
    for (const auto& [m, c] : terms_) e.add_term(m, c.substitute(k_val, h_val));
    return e;
  }

  BasicFreeElement map_generators(const GeneratorMap& map) const {
    BasicFreeElement e(field_);
    for (const auto& [m, c] : terms_) e.add_term(m.map_generators(map), c);
    return e;
  }

  friend bool operator==(const BasicFreeElement& a, const BasicFreeElement& b) {
    return a.terms_ == b.terms_;
  }

  /// "k*yx + h*yqx", "qxy - qyx", "(1 - k)*yqx", "1/2*qxy"; "0" when zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string coef = c.to_string();
      bool negative = false;
      if (c.terms().size() == 1 && coef.front() == '-') {
        negative = true;
        coef.erase(0, 1);
      } else if (c.terms().size() > 1) {
        coef = "(" + coef + ")";
      }
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const std::string mono = m.to_string();
      if (coef == "1") {
        out += mono;
      } else if (mono == "1") {
        out += coef;
      } else {
        out += coef + "*" + mono;
      }
    }
    return out;
  }

 private:
  Field field_;
  Terms terms_;
};

using FreeElement = BasicFreeElement<QMonomial>;
using RawElement = BasicFreeElement<RawWord>;

/// elem_mul: product in the free invariant algebra.
inline FreeElement elem_mul(const FreeElement& a, const FreeElement& b) { return a * b; }

/// Coefficients of `e` evaluated at (k, h).
inline FreeElement specialize(const FreeElement& e, const FieldElem& k_val, const FieldElem& h_val) {
  return e.specialize(k_val, h_val);
}

/// Parses a sum of monomials such as "k*yx + h*yqx - 1/2*qxy"; each monomial
/// word is normalized. Coefficients use the ParamPoly literal syntax and may be
/// parenthesized.
FreeElement parse_free_element(Field f, std::string_view text);

}  // namespace invalg
