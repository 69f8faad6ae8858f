#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "invalg/identities.hpp"
#include "invalg/io.hpp"
#include "report.hpp"

namespace invalg::cli {

namespace {

std::optional<Field> field_override(const GlobalOptions& g) {
  if (g.field.empty()) return std::nullopt;
  return Field::parse(g.field);
}

void print_verdict(std::ostream& out, const Verdict& v, const std::string& indent = "  ") {
  for (const auto& c : v.clauses) {
    out << indent << (c.passed ? "ok    " : "FAIL  ") << c.name;
    if (!c.passed && !c.witness.empty()) out << "  [" << c.witness << "]";
    out << "\n";
  }
}

void print_subspace(std::ostream& out, const std::string& label, const Subspace& s) {
  out << label << ": dim " << s.dim() << "\n";
  for (const auto& b : s.basis()) out << "  " << vec_to_string(b) << "\n";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "all" for every element of a finite field, otherwise a comma separated list.
std::vector<FieldElem> parameter_values(Field f, const std::string& spec, const char* name) {
  std::vector<FieldElem> out;
  if (spec == "all") {
    const auto size = f.size();
    if (!size) throw std::invalid_argument(std::string{"--"} + name + " all needs a finite field");
    for (std::uint64_t v = 0; v < *size; ++v) out.push_back(FieldElem::from_int(f, static_cast<long>(v)));
    return out;
  }
  for (const auto& item : split_list(spec)) out.push_back(FieldElem::parse(f, item));
  if (out.empty()) throw std::invalid_argument(std::string{"--"} + name + " is empty");
  return out;
}

void print_accompanying(std::ostream& out, const AccompanyingRow& row) {
  out << family_name(row.family) << ":" << row.index << "  commutator " << row.commutator.to_string() << "\n";
  for (const auto& m : row.generic) out << "  generic  " << m.to_string() << "\n";
  for (const auto& m : row.at_k_zero) out << "  k = 0    " << m.to_string() << "\n";
  for (const auto& a : row.claims) {
    out << "  claim (" << condition_name(a.claim.condition) << ") " << a.claimed_scale.to_string() << " * [x,y]^dot = square:"
        << a.claim.bracket << "  " << (a.confirmed ? "confirmed" : "DISCREPANCY");
    if (a.parameter) out << " (k'' = " << a.parameter->to_string() << ")";
    out << "\n";
  }
}

}  // namespace

int run_prove(const GlobalOptions& g, const ProveOptions& o, std::ostream& out) {
  if (!o.all && o.families.empty() && o.identities.empty()) {
    throw std::invalid_argument("prove: choose --all, --family or --identity");
  }
  const Field f = field_override(g).value_or(Field::rationals());
  for (const auto& fam : o.families) family_from_name(fam);

  const bool accompanying =
      std::find(o.identities.begin(), o.identities.end(), "accompanying") != o.identities.end();
  std::vector<std::string> identities;
  std::copy_if(o.identities.begin(), o.identities.end(), std::back_inserter(identities),
               [](const std::string& s) { return s != "accompanying"; });

  Binding binding = Binding::symbolic(f);
  if (!o.k.empty()) binding.k = ParamPoly::parse(f, o.k);
  if (!o.h.empty()) binding.h = ParamPoly::parse(f, o.h);

  json doc{{"command", "prove"}};
  bool finding = false;

  if (o.all || !identities.empty() || !accompanying) {
    std::vector<const IdentityId*> selected;
    for (const auto& id : identity_catalog()) {
      const bool fam_ok = o.families.empty() || std::find(o.families.begin(), o.families.end(),
                                                          std::string{family_name(id.family)}) != o.families.end();
      const bool id_ok = o.all || identities.empty() ||
                         std::any_of(identities.begin(), identities.end(), [&](const std::string& s) {
                           return s == kind_name(id.kind) || s == id.name();
                         });
      if (fam_ok && id_ok) selected.push_back(&id);
    }
    if (selected.empty()) throw std::invalid_argument("prove: no catalog identity matches the selection");
    json reports = json::array();
    std::size_t proved = 0;
    std::size_t failed = 0;
    for (const auto* id : selected) {
      const IdentityReport r = prove(*id, binding);
      out << std::left << std::setw(34) << r.identity << std::setw(8) << status_name(r.status);
      if (r.failed()) {
        const FreeElement residual = residual_symbolic(*id, binding);
        out << residual.term_count() << "\n  residual: " << r.residual << "\n";
        ++failed;
      } else {
        out << 0 << "\n";
        ++proved;
      }
      reports.push_back(to_json(r, g.timings));
    }
    out << proved << " proved, " << failed << " failed\n";
    doc["reports"] = reports;
    doc["summary"] = {{"proved", proved}, {"failed", failed}};
    finding = finding || failed > 0;
  }

  if (accompanying) {
    std::vector<Family> dots;
    for (const auto& fam : o.families) {
      const Family family = family_from_name(fam);
      if (family != Family::prelie && family != Family::lsa) {
        throw std::invalid_argument("accompanying brackets exist only for prelie and lsa dots");
      }
      dots.push_back(family);
    }
    json rows = json::array();
    std::size_t confirmed = 0;
    std::size_t discrepancies = 0;
    for (const auto& row : audit_accompanying_brackets()) {
      if (!dots.empty() && std::find(dots.begin(), dots.end(), row.family) == dots.end()) continue;
      print_accompanying(out, row);
      for (const auto& a : row.claims) (a.confirmed ? confirmed : discrepancies)++;
      rows.push_back(to_json(row));
    }
    out << confirmed << " claims confirmed, " << discrepancies << " discrepancies\n";
    doc["accompanying"] = rows;
    doc["accompanying_summary"] = {{"confirmed", confirmed}, {"discrepancies", discrepancies}};
    finding = finding || discrepancies > 0;
  }

  if (!g.report.empty()) write_report(g.report, doc);
  return finding ? kExitFinding : kExitPass;
}

int run_algebra(const GlobalOptions& g, const AlgebraOptions& o, std::ostream& out) {
  const AlgebraFile file = read_algebra_file(o.file, field_override(g));
  const Field f = file.algebra.field();
  const InvariantAlgebra inv = invariant_subalgebra(file.algebra, file.q);
  json doc{{"command", "algebra"}, {"file", o.file}, {"field", f.to_string()}};
  bool finding = false;

  const bool any_action = o.annihilator || o.embedding || !o.checks.empty() || !o.write.empty();
  if (o.extract || !any_action) {
    print_subspace(out, "invariant subalgebra", inv.subspace());
    doc["invariant"] = to_json(inv.subspace());
  }
  if (o.annihilator) {
    const AnnihilatorResult ann = annihilator(inv);
    print_subspace(out, "annihilator", ann.span);
    out << "  ideal: " << (ann.ideal ? "yes" : "no") << "\n"
        << "  contains xq - x and qx - xq: " << (ann.contains_side_differences ? "yes" : "no") << "\n";
    doc["annihilator"] = to_json(ann.span);
    doc["annihilator"]["ideal"] = ann.ideal;
    doc["annihilator"]["contains_side_differences"] = ann.contains_side_differences;
    finding = finding || !ann.ideal || !ann.contains_side_differences;
  }
  if (o.embedding) {
    const RegularEmbedding emb = left_regular_embedding(inv);
    out << "left-regular embedding into End(A,q), target dim " << emb.target.dim() << "\n";
    print_verdict(out, emb.verdict);
    doc["embedding"] = to_json(emb.verdict);
    doc["embedding"]["target_dim"] = emb.target.dim();
    finding = finding || !emb.verdict.passed();
  }
  if (!o.checks.empty()) {
    CheckMode mode;
    if (o.mode == "exhaustive") {
      mode = CheckMode::exhaustive;
    } else if (o.mode == "random") {
      mode = CheckMode::random;
    } else {
      throw std::invalid_argument("--mode must be exhaustive or random");
    }
    ConcreteOptions opts{mode, g.budget.value_or(mode == CheckMode::exhaustive ? 1'000'000 : 1000), g.seed};
    std::vector<const IdentityId*> ids;
    for (const auto& name : o.checks) {
      bool matched = false;
      for (const auto& id : identity_catalog()) {
        if (name == id.name() || name == kind_name(id.kind)) {
          ids.push_back(&id);
          matched = true;
        }
      }
      if (!matched) throw std::invalid_argument("unknown identity '" + name + "'");
    }
    const FieldElem zero = FieldElem::zero(f);
    json checks = json::array();
    for (const auto* id : ids) {
      const auto ks = id->slots == ParamSlots::none ? std::vector<FieldElem>{zero} : parameter_values(f, o.k, "k");
      const auto hs = id->slots == ParamSlots::kh ? parameter_values(f, o.h, "h") : std::vector<FieldElem>{zero};
      for (const auto& k : ks) {
        for (const auto& h : hs) {
          const IdentityReport r = check_concrete(*id, k, h, inv, opts);
          out << std::left << std::setw(34) << r.identity;
          if (id->slots != ParamSlots::none) out << " k=" << k.to_plain_string();
          if (id->slots == ParamSlots::kh) out << " h=" << h.to_plain_string();
          out << "  " << status_name(r.status) << "  " << r.cases << " cases\n";
          if (r.failed()) out << "  " << r.witness << "\n";
          json entry = to_json(r, g.timings);
          entry["k"] = k.to_plain_string();
          entry["h"] = h.to_plain_string();
          checks.push_back(std::move(entry));
          finding = finding || r.failed();
        }
      }
    }
    doc["checks"] = checks;
  }
  if (!o.write.empty()) {
    std::ofstream w(o.write, std::ios::binary | std::ios::trunc);
    if (!w) throw InputError("cannot write " + o.write);
    w << write_algebra(file.algebra, file.q);
  }
  if (!g.report.empty()) write_report(g.report, doc);
  return finding ? kExitFinding : kExitPass;
}

int run_module(const GlobalOptions& g, const ModuleOptions& o, std::ostream& out) {
  const ModuleData m = read_module_file(o.file, field_override(g));
  const Field f = m.field();
  json doc{{"command", "module"}, {"file", o.file}, {"field", f.to_string()}};
  bool finding = false;
  if (o.restrict && !o.quotient.empty() && !o.write.empty()) {
    throw std::invalid_argument("--write takes the result of only one of --restrict and --quotient");
  }
  std::optional<ModuleData> result;

  const bool any_action = o.classify || o.restrict || !o.quotient.empty() || !o.hom.empty() || !o.write.empty();
  if (o.verify || !any_action) {
    const Verdict v = check_module_axioms(m);
    out << "module axioms: " << (v.passed() ? "pass" : "FAIL") << "\n";
    print_verdict(out, v);
    doc["axioms"] = to_json(v);
    finding = finding || !v.passed();
  }
  if (o.classify) {
    const auto budget = g.budget.value_or(kEnumerationBudget);
    const Classification c = classify_irreducibility(m, budget);
    out << "classification: " << irreducibility_name(c.kind) << "\n";
    out << "submodules (" << c.inventory.size() << "):\n";
    for (const auto& s : c.inventory) {
      std::string name;
      if (s.dim() == 0) name = "0";
      else if (s == m.w) name = "W";
      else if (s.dim() == m.v_dim) name = "V";
      out << "  " << (name.empty() ? s.to_string() : name + " " + s.to_string()) << "\n";
    }
    print_verdict(out, c.cross_checks);
    doc["classification"] = to_json(c);
    finding = finding || !c.cross_checks.passed();
  }
  const auto report_derived = [&](const char* key, const ModuleData& d) {
    const Verdict v = check_module_axioms(d);
    out << key << ": dim " << d.v_dim << ", c' = " << cvector_to_string(d.c) << ", axioms "
        << (v.passed() ? "pass" : "FAIL") << "\n";
    print_verdict(out, v);
    doc[key] = {{"vdim", d.v_dim}, {"c", json::array()}, {"axioms", to_json(v)}, {"W", to_json(d.w)}};
    for (const auto& c : d.c) doc[key]["c"].push_back(c.to_plain_string());
    finding = finding || !v.passed();
  };
  if (o.restrict) {
    result = restrict_to_w(m);
    report_derived("restriction", *result);
  }
  if (!o.quotient.empty()) {
    Subspace u;
    if (o.quotient == "W") u = m.w;
    else if (o.quotient == "0") u = Subspace::zero(f, m.v_dim);
    else if (o.quotient == "V") u = Subspace::whole(f, m.v_dim);
    else u = read_subspace_file(o.quotient, f, m.v_dim);
    const auto check = is_submodule(m, u);
    if (!check.is_submodule) {
      out << "quotient: U is not a submodule  [" << check.witness << "]\n";
      doc["quotient"] = {{"submodule", false}, {"witness", check.witness}};
      finding = true;
    } else {
      result = quotient_module(m, u);
      report_derived("quotient", *result);
    }
  }
  if (!o.hom.empty()) {
    const ModuleData target = o.target.empty() ? m : read_module_file(o.target, field_override(g));
    const Matrix phi = read_map_file(o.hom, f, target.v_dim, m.v_dim);
    const HomAnalysis h = hom_tools(phi, m, target);
    out << "homomorphism: " << (h.is_homomorphism() ? "yes" : "no") << "\n";
    print_verdict(out, h.homomorphism);
    json hj{{"homomorphism", to_json(h.homomorphism)}};
    if (h.kernel) {
      print_subspace(out, "kernel", *h.kernel);
      print_subspace(out, "image", *h.image);
      out << "first isomorphism: " << (h.first_isomorphism.passed() ? "pass" : "FAIL") << "\n";
      print_verdict(out, h.first_isomorphism);
      hj["kernel"] = to_json(*h.kernel);
      hj["image"] = to_json(*h.image);
      hj["first_isomorphism"] = to_json(h.first_isomorphism);
      if (h.induced) hj["induced"] = to_json(*h.induced);
    }
    doc["hom"] = hj;
    finding = finding || !h.is_homomorphism() || !h.first_isomorphism.passed();
  }
  if (!o.write.empty()) {
    std::ofstream w(o.write, std::ios::binary | std::ios::trunc);
    if (!w) throw InputError("cannot write " + o.write);
    w << write_module(result.value_or(m));
  }
  if (!g.report.empty()) write_report(g.report, doc);
  return finding ? kExitFinding : kExitPass;
}

}  // namespace invalg::cli
