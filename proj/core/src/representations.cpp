#include "invalg/representations.hpp"

#include <set>

namespace invalg {

namespace {

// Square matrices on V as a ring for apply_words.
class MatrixRing {
 public:
  using Value = Matrix;
  using Scalar = FieldElem;

  explicit MatrixRing(const Matrix& q) : q_(q) {}

  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value scale(const Scalar& s, const Value& v) const { return v.scaled(s); }
  Value zero() const { return Matrix(q_.field(), q_.rows(), q_.cols()); }
  const Value& q() const { return q_; }
  bool is_zero(const Scalar& s) const { return s.is_zero(); }

 private:
  Matrix q_;
};

std::string e(std::size_t i) { return "e" + std::to_string(i); }

bool square(const Matrix& m, std::size_t n) { return m.rows() == n && m.cols() == n; }

// First column where a and b differ.
std::optional<std::size_t> differing_column(const Matrix& a, const Matrix& b) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (a.column(c) != b.column(c)) return c;
  }
  return std::nullopt;
}

bool shapes_ok(Verdict& v, const StructureTable& star, std::size_t v_dim, const Subspace& w, const Matrix& q,
               const std::vector<Matrix>& maps) {
  std::string problem;
  if (w.ambient_dim() != v_dim) problem = "W lives in F^" + std::to_string(w.ambient_dim());
  else if (!square(q, v_dim)) problem = "q is " + std::to_string(q.rows()) + "x" + std::to_string(q.cols());
  else if (maps.size() != star.dim()) problem = std::to_string(maps.size()) + " action matrices for algebra dimension " + std::to_string(star.dim());
  for (std::size_t i = 0; problem.empty() && i < maps.size(); ++i) {
    if (!square(maps[i], v_dim)) problem = "action of " + e(i) + " is not " + std::to_string(v_dim) + "x" + std::to_string(v_dim);
  }
  v.add("shapes", problem.empty(), problem);
  return problem.empty();
}

// The c-law as matrices: sum_l star_ijl A_l == apply_words(c, A_i, A_j).
void check_c_law(Verdict& v, const StructureTable& star, const Matrix& q, const std::vector<Matrix>& maps,
                 const CVector& c, bool name_vector) {
  const MatrixRing ring(q);
  const auto n = star.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec xy = star.basis_product(i, j);
      Matrix lhs = ring.zero();
      for (std::size_t l = 0; l < n; ++l) {
        if (!xy[l].is_zero()) lhs = lhs + maps[l].scaled(xy[l]);
      }
      const Matrix rhs = apply_words(ring, c, maps[i], maps[j]);
      if (const auto col = differing_column(lhs, rhs)) {
        std::string w = "x = " + e(i) + ", y = " + e(j);
        if (name_vector) w += ", v = " + e(*col);
        w += ": lhs " + vec_to_string(lhs.column(*col)) + ", rhs " + vec_to_string(rhs.column(*col));
        v.add("c-law", false, w);
        return;
      }
    }
  }
  v.add("c-law", true);
}

// a restricted to an invariant subspace s, in s's basis coordinates.
Matrix restrict_map(const Matrix& a, const Subspace& s, const std::string& what) {
  const Field f = s.field();
  std::vector<Vec> cols;
  for (const auto& b : s.basis()) {
    auto coords = s.coordinates(a.apply(b));
    if (!coords) throw AlgebraError(what + " does not preserve " + s.to_string());
    cols.push_back(std::move(*coords));
  }
  return Matrix::from_columns(f, s.dim(), cols);
}

// Map induced by a on F^n / u, on the complement-index coset representatives.
Matrix induced_map(const Matrix& a, const Subspace& u) {
  const Field f = u.field();
  const auto comp = u.complement_indices();
  std::vector<Vec> cols;
  for (auto j : comp) cols.push_back(quotient_coordinates(u, a.column(j)));
  return Matrix::from_columns(f, comp.size(), cols);
}

Subspace coordinates_of(const Subspace& outer, const Subspace& inner) {
  std::vector<Vec> coords;
  for (const auto& b : inner.basis()) coords.push_back(*outer.coordinates(b));
  return Subspace::span(outer.field(), outer.dim(), coords);
}

void require_submodule(const ModuleData& m, const Subspace& u) {
  const auto check = is_submodule(m, u);
  if (!check.is_submodule) throw AlgebraError(u.to_string() + " is not a submodule: " + check.witness);
}

}  // namespace

CVector make_cvector(Field f, const std::array<long, 8>& values) {
  CVector c;
  for (std::size_t i = 0; i < 8; ++i) c[i] = FieldElem::from_int(f, values[i]);
  return c;
}

std::string cvector_to_string(const CVector& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += c[i].to_plain_string();
  }
  return out + ")";
}

Matrix ModuleData::action_of(const Vec& x) const {
  Matrix out(field(), v_dim, v_dim);
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (!x[i].is_zero()) out = out + action[i].scaled(x[i]);
  }
  return out;
}

ModuleData to_module(const RepData& r) {
  return {r.star, r.q.rows(), r.w, r.q, r.phi, r.c};
}

RepData to_representation(const ModuleData& m) { return {m.star, m.action, m.q, m.w, m.c}; }

Verdict check_module_axioms(const ModuleData& m) {
  Verdict v;
  if (!shapes_ok(v, m.star, m.v_dim, m.w, m.q, m.action)) return v;
  v.append(check_w_idempotent(m.q, m.w));
  std::string witness;
  for (std::size_t i = 0; i < m.action.size() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < m.w.dim(); ++j) {
      const Vec img = m.action[i].apply(m.w.basis()[j]);
      if (!m.w.contains(img)) {
        witness = e(i) + " . " + vec_to_string(m.w.basis()[j]) + " = " + vec_to_string(img) + " is not in W";
        break;
      }
    }
  }
  v.add("x.W in W", witness.empty(), witness);
  check_c_law(v, m.star, m.q, m.action, m.c, true);
  return v;
}

Verdict check_representation(const RepData& r) {
  Verdict v;
  const std::size_t n = r.q.rows();
  if (!shapes_ok(v, r.star, n, r.w, r.q, r.phi)) return v;
  v.append(check_w_idempotent(r.q, r.w));
  std::string witness;
  for (std::size_t i = 0; i < r.phi.size(); ++i) {
    if (!r.w.contains(r.w.image(r.phi[i]))) {
      witness = "phi(" + e(i) + ") does not preserve W";
      break;
    }
  }
  v.add("phi(x) in (End V, q)", witness.empty(), witness);
  check_c_law(v, r.star, r.q, r.phi, r.c, false);
  const bool module_form = check_module_axioms(to_module(r)).passed();
  v.add("module form agrees", module_form == v.passed(),
        module_form == v.passed() ? "" : std::string("module form ") + (module_form ? "passes" : "fails"));
  return v;
}

SubmoduleCheck is_submodule(const ModuleData& m, const Subspace& u) {
  if (u.ambient_dim() != m.v_dim) throw std::invalid_argument("submodule candidate lives in the wrong space");
  for (const auto& b : u.basis()) {
    for (std::size_t i = 0; i < m.action.size(); ++i) {
      const Vec img = m.action[i].apply(b);
      if (!u.contains(img)) {
        return {false, e(i) + " . " + vec_to_string(b) + " = " + vec_to_string(img) + " is not in U"};
      }
    }
    const Vec d = sub(m.q.apply(b), b);
    if (!u.contains(d)) return {false, "q.u - u = " + vec_to_string(d) + " is not in U for u = " + vec_to_string(b)};
  }
  return {};
}

ModuleData restrict_to_w(const ModuleData& m) {
  const Field f = m.field();
  ModuleData out;
  out.star = m.star;
  out.v_dim = m.w.dim();
  out.w = Subspace::whole(f, out.v_dim);
  out.q = restrict_map(m.q, m.w, "q");
  for (std::size_t i = 0; i < m.action.size(); ++i) out.action.push_back(restrict_map(m.action[i], m.w, "action of " + e(i)));
  out.c = m.c;
  for (std::size_t i = 2; i < 8; ++i) out.c[i] = FieldElem::zero(f);
  return out;
}

Vec quotient_coordinates(const Subspace& u, const Vec& v) {
  const Vec r = u.reduce(v);
  Vec out;
  for (auto j : u.complement_indices()) out.push_back(r[j]);
  return out;
}

ModuleData quotient_module(const ModuleData& m, const Subspace& u) {
  require_submodule(m, u);
  const Field f = m.field();
  ModuleData out;
  out.star = m.star;
  out.v_dim = m.v_dim - u.dim();
  out.q = induced_map(m.q, u);
  for (const auto& a : m.action) out.action.push_back(induced_map(a, u));
  std::vector<Vec> w_images;
  for (const auto& b : m.w.basis()) w_images.push_back(quotient_coordinates(u, b));
  out.w = Subspace::span(f, out.v_dim, w_images);
  out.c = m.c;
  if (u == m.w) {
    const CVector& c = m.c;
    out.c = make_cvector(f, {0, 0, 0, 0, 0, 0, 0, 0});
    out.c[0] = c[0] + c[2] + c[4] + c[6];
    out.c[1] = c[1] + c[3] + c[5] + c[7];
  }
  return out;
}

ModuleData submodule_module(const ModuleData& m, const Subspace& u) {
  require_submodule(m, u);
  ModuleData out;
  out.star = m.star;
  out.v_dim = u.dim();
  out.q = restrict_map(m.q, u, "q");
  for (std::size_t i = 0; i < m.action.size(); ++i) out.action.push_back(restrict_map(m.action[i], u, "action of " + e(i)));
  out.w = coordinates_of(u, m.w.intersect(u));
  out.c = m.c;
  return out;
}

ModuleData transport(const ModuleData& m, const Matrix& p) {
  const auto p_inv = p.inverse();
  if (!p_inv || !square(p, m.v_dim)) throw std::invalid_argument("change of basis must be invertible of size dim V");
  ModuleData out = m;
  out.q = *p_inv * m.q * p;
  for (auto& a : out.action) a = *p_inv * a * p;
  out.w = m.w.image(*p_inv);
  return out;
}

ModuleData direct_sum(const ModuleData& a, const ModuleData& b) {
  if (!(a.star == b.star) || a.c != b.c) throw std::invalid_argument("direct sum needs the same algebra and c");
  const Field f = a.field();
  const std::size_t n = a.v_dim + b.v_dim;
  const auto block = [&](const Matrix& x, const Matrix& y) {
    Matrix out(f, n, n);
    for (std::size_t r = 0; r < a.v_dim; ++r)
      for (std::size_t c = 0; c < a.v_dim; ++c) out(r, c) = x(r, c);
    for (std::size_t r = 0; r < b.v_dim; ++r)
      for (std::size_t c = 0; c < b.v_dim; ++c) out(a.v_dim + r, a.v_dim + c) = y(r, c);
    return out;
  };
  ModuleData out;
  out.star = a.star;
  out.v_dim = n;
  out.q = block(a.q, b.q);
  for (std::size_t i = 0; i < a.action.size(); ++i) out.action.push_back(block(a.action[i], b.action[i]));
  std::vector<Vec> w;
  for (const auto& x : a.w.basis()) {
    Vec v = zero_vec(f, n);
    std::copy(x.begin(), x.end(), v.begin());
    w.push_back(std::move(v));
  }
  for (const auto& y : b.w.basis()) {
    Vec v = zero_vec(f, n);
    std::copy(y.begin(), y.end(), v.begin() + static_cast<std::ptrdiff_t>(a.v_dim));
    w.push_back(std::move(v));
  }
  out.w = Subspace::span(f, n, w);
  out.c = a.c;
  return out;
}

ModuleData regular_module(const InvariantAlgebra& inv, const CVector& c) {
  const Field f = inv.field();
  ModuleData out;
  out.star = inv.intrinsic_table();
  out.v_dim = inv.dim();
  for (std::size_t i = 0; i < out.v_dim; ++i) out.action.push_back(out.star.left_multiplication(unit_vec(f, out.v_dim, i)));
  out.q = out.star.left_multiplication(inv.coordinates(inv.q()));
  const auto annihilated = annihilator(inv);
  std::vector<Vec> ann;
  for (const auto& b : annihilated.span.basis()) ann.push_back(inv.coordinates(b));
  out.w = Subspace::span(f, out.v_dim, ann);
  out.c = c;
  return out;
}

std::string_view irreducibility_name(Irreducibility i) noexcept {
  switch (i) {
    case Irreducibility::two_irreducible: return "2-irreducible";
    case Irreducibility::three_irreducible: return "3-irreducible";
    case Irreducibility::neither: return "neither";
  }
  return "?";
}

Subspace submodule_closure(const ModuleData& m, const std::vector<Vec>& vectors) {
  const Field f = m.field();
  Subspace s = Subspace::span(f, m.v_dim, vectors);
  for (;;) {
    std::vector<Vec> more = s.basis();
    for (const auto& b : s.basis()) {
      for (const auto& a : m.action) more.push_back(a.apply(b));
      more.push_back(sub(m.q.apply(b), b));
    }
    Subspace next = Subspace::span(f, m.v_dim, more);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

Classification classify_irreducibility(const ModuleData& m, std::uint64_t budget, std::size_t max_submodules) {
  const Field f = m.field();
  const auto size = f.size();
  if (!size) throw EnumerationLimit("submodule enumeration needs a finite field");
  const std::size_t n = m.v_dim;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > budget / *size) {
      throw EnumerationLimit("enumerating " + std::to_string(*size) + "^" + std::to_string(n) +
                             " vectors exceeds the budget of " + std::to_string(budget));
    }
    count *= *size;
  }

  std::set<Subspace> found{Subspace::zero(f, n)};
  const auto note = [&](Subspace s) {
    const bool inserted = found.insert(s).second;
    if (found.size() > max_submodules) {
      throw EnumerationLimit("more than " + std::to_string(max_submodules) + " submodules");
    }
    return inserted;
  };
  // Cyclic closures; scalar multiples share a closure, so only vectors whose
  // first nonzero coordinate is 1 are visited.
  for (std::uint64_t code = 1; code < count; ++code) {
    Vec v(n);
    std::uint64_t rest = code;
    std::optional<std::uint64_t> lead;
    for (std::size_t i = 0; i < n; ++i) {
      const auto digit = rest % *size;
      rest /= *size;
      if (!lead && digit != 0) lead = digit;
      v[i] = FieldElem::from_int(f, static_cast<long>(digit));
    }
    if (lead != 1) continue;
    note(submodule_closure(m, {v}));
  }
  std::vector<Subspace> list(found.begin(), found.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Subspace s = list[i].sum(list[j]);
      if (note(s)) list.push_back(std::move(s));
    }
  }

  Classification out;
  out.inventory.assign(found.begin(), found.end());
  const Subspace zero = Subspace::zero(f, n);
  const Subspace whole = Subspace::whole(f, n);
  const std::set<Subspace> two{zero, whole};
  const std::set<Subspace> three{zero, m.w, whole};
  if (n > 0 && found == two) {
    out.kind = Irreducibility::two_irreducible;
  } else if (m.w.dim() > 0 && m.w != whole && found == three) {
    out.kind = Irreducibility::three_irreducible;
  }

  if (out.kind == Irreducibility::two_irreducible) {
    const bool v_is_w = m.w == whole && m.q.is_zero();
    const bool w_is_zero = m.w.dim() == 0 && m.q == Matrix::identity(f, n);
    out.cross_checks.add("2-irreducible: V = W with q = 0, or W = 0 with q = 1", v_is_w || w_is_zero,
                         v_is_w || w_is_zero ? "" : "W = " + m.w.to_string() + ", q = " + m.q.to_string());
  } else if (out.kind == Irreducibility::three_irreducible) {
    const auto restricted = classify_irreducibility(restrict_to_w(m), budget, max_submodules);
    out.cross_checks.add("3-irreducible: W is 2-irreducible by restriction",
                         restricted.kind == Irreducibility::two_irreducible,
                         std::string{irreducibility_name(restricted.kind)});
    const auto quotient = classify_irreducibility(quotient_module(m, m.w), budget, max_submodules);
    out.cross_checks.add("3-irreducible: V/W is 2-irreducible", quotient.kind == Irreducibility::two_irreducible,
                         std::string{irreducibility_name(quotient.kind)});
  }
  return out;
}

namespace {

Verdict homomorphism_clauses(const Matrix& phi, const ModuleData& m1, const ModuleData& m2) {
  Verdict h;
  const bool shapes = phi.rows() == m2.v_dim && phi.cols() == m1.v_dim && m1.star == m2.star;
  h.add("shapes", shapes,
        shapes ? "" : "map is " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) + " or the algebras differ");
  if (!shapes) return h;

  std::string witness;
  for (std::size_t i = 0; i < m1.action.size() && witness.empty(); ++i) {
    const Matrix lhs = phi * m1.action[i];
    const Matrix rhs = m2.action[i] * phi;
    if (const auto col = differing_column(lhs, rhs)) {
      witness = "x = " + e(i) + ", v = " + e(*col) + ": phi(x.v) = " + vec_to_string(lhs.column(*col)) +
                ", x.phi(v) = " + vec_to_string(rhs.column(*col));
    }
  }
  h.add("phi(x.v) = x.phi(v)", witness.empty(), witness);
  witness.clear();
  if (const auto col = differing_column(phi * m1.q, m2.q * phi)) {
    witness = "v = " + e(*col) + ": phi(q1 v) = " + vec_to_string((phi * m1.q).column(*col)) +
              ", q2 phi(v) = " + vec_to_string((m2.q * phi).column(*col));
  }
  h.add("phi(q1 v) = q2 phi(v)", witness.empty(), witness);
  return h;
}

}  // namespace

HomAnalysis hom_tools(const Matrix& phi, const ModuleData& m1, const ModuleData& m2) {
  HomAnalysis out;
  out.homomorphism = homomorphism_clauses(phi, m1, m2);
  if (!out.homomorphism.passed()) return out;

  const Field f = m1.field();
  Verdict& iso = out.first_isomorphism;
  const Subspace w_image = m1.w.image(phi);
  iso.add("phi(W1) in W2", m2.w.contains(w_image), m2.w.contains(w_image) ? "" : w_image.to_string());

  const Subspace ker = Subspace::span(f, m1.v_dim, phi.nullspace());
  const Subspace im = Subspace::whole(f, m1.v_dim).image(phi);  // in F^v2
  out.kernel = ker;
  out.image = im;
  const auto ker_check = is_submodule(m1, ker);
  const auto im_check = is_submodule(m2, im);
  iso.add("kernel is a submodule", ker_check.is_submodule, ker_check.witness);
  iso.add("image is a submodule", im_check.is_submodule, im_check.witness);
  const bool rank_nullity = ker.dim() + im.dim() == m1.v_dim;
  iso.add("dim Ker + dim Im = dim V1", rank_nullity,
          rank_nullity ? "" : std::to_string(ker.dim()) + " + " + std::to_string(im.dim()) + " vs " + std::to_string(m1.v_dim));
  if (!ker_check.is_submodule || !im_check.is_submodule) return out;

  const ModuleData quotient = quotient_module(m1, ker);
  const ModuleData image = submodule_module(m2, im);
  bool well_defined = true;
  for (const auto& b : ker.basis()) well_defined = well_defined && is_zero_vec(phi.apply(b));
  iso.add("induced map well defined", well_defined);
  std::vector<Vec> cols;
  for (auto j : ker.complement_indices()) cols.push_back(*im.coordinates(phi.column(j)));
  const Matrix induced = Matrix::from_columns(f, im.dim(), cols);
  out.induced = induced;
  const bool bijective = induced.rows() == induced.cols() && induced.inverse().has_value();
  iso.add("induced map bijective", bijective);
  const Verdict sub_hom = homomorphism_clauses(induced, quotient, image);
  const Clause* fail = sub_hom.first_failure();
  iso.add("induced map is a homomorphism", fail == nullptr, fail ? fail->name + ": " + fail->witness : "");
  return out;
}

}  // namespace invalg
