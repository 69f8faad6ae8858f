#include "invalg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace invalg {

namespace {

using json = nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string{"not valid JSON: "} + e.what());
  }
}

const json& field_of(const json& obj, const std::string& key) {
  if (!obj.is_object()) throw InputError("top level must be a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field \"" + key + "\"");
  return *it;
}

std::size_t index_of(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(where + ": expected a non-negative integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

FieldElem scalar_of(Field f, const json& v, const std::string& where) {
  if (v.is_number_float()) throw InputError(where + ": floating point literal " + v.dump() + " rejected; use an exact string");
  try {
    if (v.is_number_integer()) return FieldElem::from_rational(f, mpq_class{v.dump()});
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (s.find_first_of(".eE") != std::string::npos) {
        throw InputError(where + ": floating point literal \"" + s + "\" rejected");
      }
      return FieldElem::parse(f, s);
    }
  } catch (const ScalarError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected an exact scalar, got " + v.dump());
}

Vec vector_of(Field f, const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) {
    throw InputError(where + ": expected an array of " + std::to_string(n) + " scalars");
  }
  Vec out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar_of(f, v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Vec> rows_of(Field f, const json& v, std::size_t cols, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of rows");
  std::vector<Vec> out;
  for (std::size_t r = 0; r < v.size(); ++r) out.push_back(vector_of(f, v[r], cols, where + "[" + std::to_string(r) + "]"));
  return out;
}

Matrix matrix_of(Field f, const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  const auto r = rows_of(f, v, cols, where);
  if (r.size() != rows) throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  return Matrix::from_rows(f, cols, r);
}

Field field_from(const json& doc, std::optional<Field> override_field) {
  if (override_field) return *override_field;
  const json& v = field_of(doc, "field");
  if (!v.is_string()) throw InputError("field: expected \"Q\" or \"Fp:<p>\"");
  try {
    return Field::parse(v.get<std::string>());
  } catch (const ScalarError& e) {
    throw InputError(std::string{"field: "} + e.what());
  }
}

StructureTable table_of(Field f, std::size_t n, const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of [i, j, l, value]");
  std::vector<StructureConstant> entries;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const json& e = v[k];
    if (!e.is_array() || e.size() != 4) throw InputError(at + ": expected [i, j, l, value]");
    StructureConstant c{index_of(e[0], at + "[0]"), index_of(e[1], at + "[1]"), index_of(e[2], at + "[2]"),
                        scalar_of(f, e[3], at + "[3]")};
    if (c.i >= n || c.j >= n || c.l >= n) throw InputError(at + ": index out of range for dimension " + std::to_string(n));
    entries.push_back(std::move(c));
  }
  return StructureTable(f, n, entries);
}

json table_json(const StructureTable& t) {
  json out = json::array();
  for (const auto& c : t.entries()) out.push_back({c.i, c.j, c.l, c.value.to_plain_string()});
  return out;
}

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_plain_string());
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraFile parse_algebra(std::string_view text, std::optional<Field> field) {
  const json doc = parse_json(text);
  const Field f = field_from(doc, field);
  const std::size_t n = index_of(field_of(doc, "dim"), "dim");
  if (n == 0) throw InputError("dim: must be positive");
  StructureTable table = table_of(f, n, field_of(doc, "structure"), "structure");
  Vec unit = vector_of(f, field_of(doc, "unit"), n, "unit");
  Vec q = vector_of(f, field_of(doc, "q"), n, "q");
  return {FiniteAlgebra(std::move(table), std::move(unit)), std::move(q)};
}

AlgebraFile read_algebra_file(const std::string& path, std::optional<Field> field) {
  try {
    return parse_algebra(read_text_file(path), field);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string write_algebra(const FiniteAlgebra& a, const Vec& q) {
  json doc;
  doc["field"] = a.field().to_string();
  doc["dim"] = a.dim();
  doc["unit"] = vec_json(a.unit());
  doc["structure"] = table_json(a.table());
  doc["q"] = vec_json(q);
  return doc.dump(2) + "\n";
}

ModuleData parse_module(std::string_view text, std::optional<Field> field) {
  const json doc = parse_json(text);
  const Field f = field_from(doc, field);
  ModuleData m;
  const std::size_t n = index_of(field_of(doc, "dim"), "dim");
  m.star = table_of(f, n, field_of(doc, "star"), "star");
  m.v_dim = index_of(field_of(doc, "vdim"), "vdim");
  const std::size_t v = m.v_dim;

  m.action.assign(n, Matrix(f, v, v));
  const json& act = field_of(doc, "action");
  if (!act.is_array()) throw InputError("action: expected an array of [i, v, l, value]");
  for (std::size_t k = 0; k < act.size(); ++k) {
    const std::string at = "action[" + std::to_string(k) + "]";
    const json& e = act[k];
    if (!e.is_array() || e.size() != 4) throw InputError(at + ": expected [i, v, l, value]");
    const std::size_t i = index_of(e[0], at + "[0]");
    const std::size_t col = index_of(e[1], at + "[1]");
    const std::size_t row = index_of(e[2], at + "[2]");
    if (i >= n) throw InputError(at + ": algebra index out of range");
    if (col >= v || row >= v) throw InputError(at + ": vector index out of range");
    m.action[i](row, col) += scalar_of(f, e[3], at + "[3]");
  }
  m.w = Subspace::span(f, v, rows_of(f, field_of(doc, "W"), v, "W"));
  if (m.w.dim() != field_of(doc, "W").size()) throw InputError("W: rows are linearly dependent");
  m.q = matrix_of(f, field_of(doc, "qmat"), v, v, "qmat");
  const Vec c = vector_of(f, field_of(doc, "c"), 8, "c");
  std::copy(c.begin(), c.end(), m.c.begin());
  return m;
}

ModuleData read_module_file(const std::string& path, std::optional<Field> field) {
  try {
    return parse_module(read_text_file(path), field);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string write_module(const ModuleData& m) {
  json doc;
  doc["field"] = m.field().to_string();
  doc["dim"] = m.algebra_dim();
  doc["star"] = table_json(m.star);
  doc["vdim"] = m.v_dim;
  json act = json::array();
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    for (std::size_t col = 0; col < m.v_dim; ++col) {
      for (std::size_t row = 0; row < m.v_dim; ++row) {
        const FieldElem& x = m.action[i](row, col);
        if (!x.is_zero()) act.push_back({i, col, row, x.to_plain_string()});
      }
    }
  }
  doc["action"] = act;
  json w = json::array();
  for (const auto& b : m.w.basis()) w.push_back(vec_json(b));
  doc["W"] = w;
  doc["qmat"] = matrix_json(m.q);
  doc["c"] = vec_json(Vec(m.c.begin(), m.c.end()));
  return doc.dump(2) + "\n";
}

Matrix parse_map(std::string_view text, Field f, std::size_t rows, std::size_t cols) {
  const json doc = parse_json(text);
  return matrix_of(f, field_of(doc, "map"), rows, cols, "map");
}

Matrix read_map_file(const std::string& path, Field f, std::size_t rows, std::size_t cols) {
  try {
    return parse_map(read_text_file(path), f, rows, cols);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Subspace parse_subspace(std::string_view text, Field f, std::size_t n) {
  const json doc = parse_json(text);
  return Subspace::span(f, n, rows_of(f, field_of(doc, "basis"), n, "basis"));
}

Subspace read_subspace_file(const std::string& path, Field f, std::size_t n) {
  try {
    return parse_subspace(read_text_file(path), f, n);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string write_map(const Matrix& m) {
  json doc;
  doc["map"] = matrix_json(m);
  return doc.dump(2) + "\n";
}

}  // namespace invalg
