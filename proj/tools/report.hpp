#pragma once

// JSON renderings of engine results for --report files.

#include "invalg/identities.hpp"
#include "invalg/representations.hpp"
#include "json.hpp"

namespace invalg::cli {

using json = nlohmann::json;

json to_json(const Verdict& v);
json to_json(const IdentityReport& r, bool timings);
json to_json(const BracketMatch& m);
json to_json(const AccompanyingRow& row);
json to_json(const Subspace& s);
json to_json(const Matrix& m);
json to_json(const Classification& c);

/// Writes doc to path with two-space indentation and a trailing newline.
void write_report(const std::string& path, const json& doc);

}  // namespace invalg::cli
