#pragma once

// JSON-shaped input files for algebras, modules and module maps. All scalar
// values are exact: strings such as "3", "-1/2", "2 mod 5", or JSON integers.
// Floating point literals are rejected. Indices are 0-based.
//
// algebra: {"field": "Q" | "Fp:<p>", "dim": n, "unit": [...],
//           "structure": [[i, j, l, "v"], ...], "q": [...]}
// module:  {"field": ..., "dim": n, "star": [[i, j, l, "v"], ...],
//           "vdim": m, "action": [[i, v, l, "val"], ...],
//           "W": [[...], ...], "qmat": [[...], ...], "c": [8 values]}
//          where [i, v, l, val] says e_i . e_v has coefficient val on e_l.
// map:     {"map": [[...], ...]}  rows of the matrix, columns = images.
// subspace: {"basis": [[...], ...]}  spanning vectors.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "invalg/invariant.hpp"
#include "invalg/representations.hpp"

namespace invalg {

/// Malformed input; the message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlgebraFile {
  FiniteAlgebra algebra;
  Vec q;
};

/// Parses an algebra file. `field` overrides the file's own field. Throws
/// InputError for malformed input and AlgebraError for non-associative
/// structure constants or a bad unit.
AlgebraFile parse_algebra(std::string_view text, std::optional<Field> field = std::nullopt);
AlgebraFile read_algebra_file(const std::string& path, std::optional<Field> field = std::nullopt);
/// Canonical form: sorted keys, structure entries sorted with zeros dropped.
std::string write_algebra(const FiniteAlgebra& a, const Vec& q);

ModuleData parse_module(std::string_view text, std::optional<Field> field = std::nullopt);
ModuleData read_module_file(const std::string& path, std::optional<Field> field = std::nullopt);
std::string write_module(const ModuleData& m);

/// A rows x cols matrix from a map file.
Matrix parse_map(std::string_view text, Field f, std::size_t rows, std::size_t cols);
Matrix read_map_file(const std::string& path, Field f, std::size_t rows, std::size_t cols);
std::string write_map(const Matrix& m);

/// Span of the listed vectors in F^n.
Subspace parse_subspace(std::string_view text, Field f, std::size_t n);
Subspace read_subspace_file(const std::string& path, Field f, std::size_t n);

/// Whole file contents; throws InputError when the file cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace invalg
