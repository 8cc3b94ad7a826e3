// Copyright 2026 The kacgalois Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "kacgalois/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "kacgalois/coideal.hpp"
#include "kacgalois/corep.hpp"
#include "kacgalois/duality.hpp"
#include "kacgalois/heisenberg.hpp"
#include "kacgalois/jones.hpp"

namespace kacgalois {

const char* const kVersion = "0.1.0";

namespace {

const std::pair<Command, const char*> kCommands[] = {
    {Command::validate, "validate"}, {Command::dual, "dual"},       {Command::check_duality, "check-duality"},
    {Command::coreps, "coreps"},     {Command::coideals, "coideals"}, {Command::galois, "galois"},
    {Command::jones, "jones"},       {Command::selftest, "selftest"}};

class Checks {
 public:
  explicit Checks(double tol) : tol_(tol) {}

  void residual(const std::string& name, double value, double threshold = 0) {
    double t = threshold > 0 ? threshold : tol_;
    bool ok = std::isfinite(value) && value < t;
    json e;
    e["value"] = value;
    e["threshold"] = t;
    e["passed"] = ok;
    add(name, std::move(e), ok, value);
  }
  void flag(const std::string& name, bool ok) {
    json e;
    e["passed"] = ok;
    add(name, std::move(e), ok, 0);
  }
  double tol() const { return tol_; }
  bool passed() const { return failed_.empty(); }
  const json& doc() const { return doc_; }
  json summary() const {
    json s;
    s["passed"] = passed();
    s["checks"] = count_;
    s["failed"] = failed_;
    s["worst_residual"] = worst_;
    return s;
  }

 private:
  void add(const std::string& name, json e, bool ok, double value) {
    doc_[name] = std::move(e);
    ++count_;
    if (!ok) failed_.push_back(name);
    if (std::isfinite(value)) worst_ = std::max(worst_, value);
  }

  double tol_;
  json doc_ = json::object();
  std::vector<std::string> failed_;
  int count_ = 0;
  double worst_ = 0;
};

struct Section {
  json result = json::object();
  Checks checks;
  explicit Section(double tol) : checks(tol) {}
};

// Failures while reading or validating the input.
class InputError : public Error {
 public:
  InputError(const std::string& type, const std::string& what, json detail = json())
      : Error(what), type_(type), detail_(std::move(detail)) {}
  const std::string& type() const { return type_; }
  const json& detail() const { return detail_; }

 private:
  std::string type_;
  json detail_;
};

json axiom_json(const AxiomReport& r) {
  json out = json::array();
  for (const AxiomEntry& e : r.entries) {
    json a;
    a["name"] = e.name;
    a["residual"] = e.residual;
    a["passed"] = e.passed;
    out.push_back(a);
  }
  return out;
}

json residuals_json(const ExpectationResiduals& r) {
  json out;
  out["unital"] = r.unital;
  out["range"] = r.range;
  out["idempotent"] = r.idempotent;
  out["bimodule"] = r.bimodule;
  out["positivity"] = r.positivity;
  return out;
}

template <typename F>
auto guard_input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const AxiomError& e) {
    json detail;
    detail["axioms"] = axiom_json(e.report());
    throw InputError("AxiomError", e.what(), detail);
  } catch (const InvalidExpectationError& e) {
    json detail;
    detail["residuals"] = residuals_json(e.residuals());
    throw InputError("InvalidExpectationError", e.what(), detail);
  } catch (const NonFaithfulError& e) {
    throw InputError("NonFaithfulError", e.what());
  } catch (const ParseError& e) {
    throw InputError("ParseError", e.what());
  } catch (const DimensionError& e) {
    throw InputError("DimensionError", e.what());
  } catch (const json::exception& e) {
    throw InputError("ParseError", e.what());
  }
}

KacAlgebra kac_input(const json& j, const Tolerance& tol) {
  return guard_input([&] { return load_kac(j, tol); });
}

Inclusion inclusion_input(const json& j, const Tolerance& tol) {
  return guard_input([&] { return inclusion_from_document(inclusion_from_json(j), tol); });
}

bool is_inclusion_document(const json& j) { return j.is_object() && j.contains("M_basis"); }

Section do_validate(const json& j, const Tolerance& tol) {
  Section s(tol.tau);
  Checks& c = s.checks;
  if (is_inclusion_document(j)) {
    InclusionDocument doc = guard_input([&] { return inclusion_from_json(j); });
    s.result["kind"] = "inclusion";
    s.result["ambient_dim"] = doc.ambient_dim;
    MMAlgebra m = guard_input([&] { return MMAlgebra::from_span(doc.m_basis, doc.ambient_dim, tol); });
    MMAlgebra n = guard_input([&] { return MMAlgebra::from_span(doc.n_basis, doc.ambient_dim, tol); });
    s.result["m_dim"] = m.dim();
    s.result["n_dim"] = n.dim();
    c.residual("m_closure", m.closure_residual());
    c.residual("n_closure", n.closure_residual());
    c.residual("n_inside_m", n.excess_over(m));
    if (!c.passed()) return s;
    CondExpectation e;
    e.d = doc.ambient_dim;
    e.map = doc.e_matrix;
    ExpectationResiduals r = expectation_residuals(m, n, e);
    c.residual("expectation_unital", r.unital);
    c.residual("expectation_range", r.range);
    c.residual("expectation_idempotent", r.idempotent);
    c.residual("expectation_bimodule", r.bimodule);
    c.residual("expectation_positivity", r.positivity);
    if (!c.passed()) return s;
    try {
      make_inclusion(m, n, e, doc.omega_density, tol);
      c.flag("faithful", true);
    } catch (const NonFaithfulError& err) {
      c.flag("faithful", false);
      s.result["faithfulness_error"] = err.what();
    }
    return s;
  }
  KacStructure st = guard_input([&] { return kac_structure_from_json(j); });
  s.result["kind"] = "kac_algebra";
  s.result["dim"] = st.n;
  auto origin = guard_input([&] { return kac_origin_from_json(j); });
  if (origin) s.result["origin"] = origin->family + "(" + origin->group.name() + ")";
  AxiomReport r = validate_structure(st, tol);
  for (const AxiomEntry& e : r.entries) c.residual(e.name, e.residual);
  s.result["commutative"] = is_commutative(st);
  s.result["cocommutative"] = is_cocommutative(st);
  if (c.passed()) {
    try {
      KacAlgebra::from_structure(st, origin, tol);
      c.flag("representation", true);
    } catch (const AxiomError&) {
      c.flag("representation", false);
    }
  }
  return s;
}

Section do_dual(const KacAlgebra& k, const Tolerance& tol, std::uint64_t seed) {
  Section s(tol.tau);
  Checks& c = s.checks;
  MultiplicativeUnitary mu = multiplicative_unitary(k);
  c.residual("v_isometry", mu.isometry);
  c.residual("v_pentagon", mu.pentagon);
  c.residual("v_action", mu.action);
  DualKac d = dual_kac(k, tol);
  HatUnitaryReport h = hat_unitary_report(k, d, seed);
  c.residual("u_unitary", h.u_unitary);
  c.residual("u_involution", h.u_involution);
  c.residual("v_hat_unitary", h.v_hat_unitary);
  c.residual("v_tilde_unitary", h.v_tilde_unitary);
  c.residual("v_hat_pentagon", h.pentagon_v_hat);
  c.residual("v_tilde_pentagon", h.pentagon_v_tilde);
  c.residual("v_hat_membership", h.v_hat_membership);
  c.residual("v_tilde_membership", h.v_tilde_membership);
  c.residual("v_hat_action", h.v_hat_action);
  c.residual("v_tilde_coproduct", h.v_tilde_coproduct);
  IntegralReport ir = integral_report(k, d);
  c.residual("integral_counit", ir.counit_a);
  c.residual("integral_counit_hat", ir.counit_hat);
  c.residual("integral_projections", ir.projections);
  c.residual("integral_vectors", std::max(ir.omega_h, ir.omega_hhat));
  c.residual("haar_of_integral", ir.haar_e);
  c.residual("dual_haar_trace", ir.hhat_state);
  HatAntipodeReport ha = hat_antipode_report(d);
  c.residual("dual_antipode", ha.max());
  AxiomReport dv = validate_kac(d.hat(), tol);
  for (const AxiomEntry& e : dv.entries) c.residual("dual_" + e.name, e.residual);
  s.result["dim"] = k.n();
  json blocks = json::array();
  for (const HatBlock& b : d.blocks()) blocks.push_back(b.d);
  s.result["dual_blocks"] = blocks;
  s.result["dual_commutative"] = is_commutative(d.hat().structure());
  s.result["dual_cocommutative"] = is_cocommutative(d.hat().structure());
  s.result["dual"] = to_json(d.hat().structure());
  return s;
}

Section do_check_duality(const KacAlgebra& k, const Tolerance& tol, std::uint64_t seed) {
  Section s(tol.tau);
  Checks& c = s.checks;
  DualKac d = dual_kac(k, tol);
  PairingReport p = pairing_report(k, d, 50, seed);
  c.residual("pairing_product_law", p.product_law);
  c.residual("pairing_coproduct_law", p.coproduct_law);
  c.residual("pairing_unit_counit", p.unit_counit);
  c.residual("pairing_counit_unit", p.counit_unit);
  c.flag("pairing_nondegenerate", p.rank == k.n());
  c.residual("biduality", biduality_residual(k, tol), 10 * tol.tau);
  HeisenbergReport hr = heisenberg_identities(k, d, irreducible_coreps(k, d));
  c.residual("heisenberg_expansion", hr.expansion);
  c.residual("heisenberg_matrix_units", hr.matrix_unit_action);
  c.residual("heisenberg_integral", hr.delta_e_kappa);
  s.result["dim"] = k.n();
  s.result["pairing_rank"] = p.rank;
  s.result["dual_commutative"] = is_commutative(d.hat().structure());
  s.result["dual_cocommutative"] = is_cocommutative(d.hat().structure());
  if (k.origin()) {
    const GroupOrigin& o = *k.origin();
    bool group_side = o.family == "group_algebra";
    KacAlgebra other = group_side ? function_algebra(o.group) : group_algebra(o.group);
    s.result["origin"] = o.family + "(" + o.group.name() + ")";
    s.result["dual_matches"] = std::string(group_side ? "function_algebra" : "group_algebra") + "(" +
                               o.group.name() + ")";
    c.residual("pairing_isomorphism",
               isomorphism_residual(d.hat().structure(), other.structure(), pairing_matrix(k, d)));
    c.flag(group_side ? "dual_commutative" : "dual_cocommutative",
           group_side ? is_commutative(d.hat().structure()) : is_cocommutative(d.hat().structure()));
  }
  return s;
}

Section do_coreps(const KacAlgebra& k, const Tolerance& tol, std::uint64_t seed) {
  Section s(tol.tau);
  Checks& c = s.checks;
  DualKac d = dual_kac(k, tol);
  std::vector<Corepresentation> xi = irreducible_coreps(k, d);
  json dims = json::array();
  double axioms = 0;
  for (const Corepresentation& u : xi) {
    dims.push_back(u.d);
    axioms = std::max(axioms, corep_residuals(k, u).max());
  }
  s.result["dim"] = k.n();
  s.result["dims"] = dims;
  s.result["dimension_sum"] = dimension_sum(xi);
  c.residual("corepresentation_axioms", axioms);
  c.flag("dimension_sum", dimension_sum(xi) == k.n());
  bool distinct = true;
  for (size_t i = 0; i < xi.size(); ++i)
    for (size_t j = i + 1; j < xi.size(); ++j) distinct = distinct && !equivalent(k, xi[i], xi[j], tol);
  c.flag("pairwise_inequivalent", distinct);
  c.residual("orthogonality", orthogonality_check(k, xi));
  c.residual("peter_weyl", peter_weyl_resolution(k, xi));
  Rng rng(seed);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    Vec x = random_matrix(k.n(), 1, rng);
    Vec back = reconstruct(k, xi, fourier(k, xi, x));
    worst = std::max(worst, (x - back).norm() / std::max(1.0, x.norm()));
  }
  c.residual("fourier_round_trip", worst);
  std::vector<int> conj = conjugation_involution(k, xi, tol);
  s.result["conjugation"] = conj;
  return s;
}

json coideal_rows(const GaloisReport& g) {
  json rows = json::array();
  for (const GaloisRow& r : g.rows) {
    json row;
    row["dim"] = r.dim;
    row["projector_fingerprint"] = r.fingerprint;
    if (!r.subgroup.empty()) row["subgroup"] = r.subgroup;
    row["certificate"] = r.certificate;
    rows.push_back(row);
  }
  return rows;
}

Section do_coideals(const KacAlgebra& k, const Tolerance& tol, std::uint64_t seed) {
  Section s(tol.tau);
  Checks& c = s.checks;
  GaloisReport g = galois_lattice_report(k, seed, tol);
  s.result["dim"] = k.n();
  s.result["enumeration"] = g.enumeration;
  s.result["complete_certified"] = g.complete_certified;
  s.result["coideals"] = coideal_rows(g);
  double cert = 0;
  for (const GaloisRow& r : g.rows) cert = std::max(cert, r.certificate);
  c.residual("coideal_certificate", cert);
  if (g.enumeration == "subgroups") c.flag("complete", g.complete_certified);
  return s;
}

Section do_galois(const KacAlgebra& k, const Tolerance& tol, std::uint64_t seed) {
  Section s(tol.tau);
  Checks& c = s.checks;
  GaloisReport g = galois_lattice_report(k, seed, tol);
  s.result["dim"] = k.n();
  s.result["enumeration"] = g.enumeration;
  s.result["complete_certified"] = g.complete_certified;
  s.result["coideals"] = coideal_rows(g);
  json pairs = json::array();
  bool dims = true;
  double worst[11] = {0};
  const char* names[11] = {"coideal_certificate", "tilde_certificate", "tilde_involution", "tilde_commutant",
                           "bicommutant",         "bicommutant_dual",  "system_round_trip", "system_to_coideal_round_trip",
                           "system_closure",      "dimension_bookkeeping", "jones_projection"};
  for (size_t i = 0; i < g.rows.size(); ++i) {
    const GaloisRow& r = g.rows[i];
    json p;
    p["coideal"] = i;
    p["tilde"] = r.tilde_index;
    p["dim"] = r.dim;
    p["tilde_dim"] = r.tilde_dim;
    p["jones"] = {{"hhat_trace", r.jones.hhat_trace},
                  {"counit_value", r.jones.counit_value},
                  {"formula", r.jones.formula}};
    pairs.push_back(p);
    dims = dims && r.dim_product && r.tilde_index >= 0;
    double v[11] = {r.certificate, r.tilde_certificate, r.involution, r.commutant_agreement, r.bicommutant,
                    r.bicommutant_hat, r.round_trip, r.system_round_trip, r.system_closure, r.dim_bookkeeping,
                    r.jones.max()};
    for (int t = 0; t < 11; ++t) worst[t] = std::max(worst[t], v[t]);
  }
  s.result["tilde_pairs"] = pairs;
  s.result["inclusion"] = g.inclusion;
  s.result["dual_inclusion"] = g.hat_inclusion;
  c.flag("dimension_product", dims);
  for (int t = 0; t < 11; ++t) c.residual(names[t], worst[t]);
  c.flag("order_reversing", g.order_reversing);
  c.flag("bijective", g.bijective);
  if (g.enumeration == "subgroups") c.flag("complete", g.complete_certified);
  c.flag("report", g.passed());
  return s;
}

json vector_json(const std::vector<double>& v) { return json(v); }

Section do_jones(const Inclusion& inc, const Tolerance& tol, std::uint64_t seed) {
  Section s(tol.tau);
  Checks& c = s.checks;
  double loose = 10 * tol.tau;
  c.residual("expectation", std::max({inc.residuals.unital, inc.residuals.range, inc.residuals.idempotent,
                                      inc.residuals.bimodule, inc.residuals.positivity}));
  BasicExtension ext = basic_extension(inc, tol);
  const ExtensionResiduals& r = ext.residuals;
  c.residual("e_n_projection", r.projection);
  c.residual("e_n_lambda", r.lambda);
  c.residual("e_n_compression", r.compression);
  c.residual("three_way", r.three_way, loose);
  c.residual("unit_in_span", r.unit);
  c.residual("dual_weight_consistency", r.consistency);
  c.residual("dual_weight_cross_check", r.cross_check);
  c.residual("dual_weight_of_e_n", r.ehat_unit);
  c.residual("dual_weight_bimodule", r.bimodule);
  c.residual("dual_weight_positivity", r.positivity);
  c.residual("push_down", push_down_residual(ext));
  IndexReport ix = index(inc, ext, tol);
  c.residual("index_central", ix.centrality);
  RelCommReport rc = relcomm_decomposition(inc, ext, tol);
  c.residual("j_antiautomorphism", rc.j_antiautomorphism);
  c.residual("j_flow", rc.j_flow, loose);
  c.residual("scalarization", rc.scalarization);
  c.residual("spectrum_inversion", rc.spectrum_inversion, loose);
  c.residual("flow", rc.flow, loose);
  c.residual("flow_invariance", rc.flow_invariance, loose);
  Extremality x = extremality(rc, tol);
  c.flag("extremality_criteria_agree", x.agree);
  Rng rng(seed);
  int d = inc.m.ambient_dim();
  Mat omega2 = hermitian_part(inc.n.project(random_positive(d, rng)));
  OmegaIndependence oi = omega_independence(inc, ext, rc, omega2, tol);
  c.residual("omega_independence_e_n", oi.e_n);
  c.residual("omega_independence_m1", oi.m1);
  c.residual("omega_independence_dual_weight", oi.ehat);
  c.residual("omega_independence_flow", oi.flow, loose);
  c.residual("omega_independence_spectra", oi.a_spectra, loose);

  s.result["ambient_dim"] = d;
  s.result["m_dim"] = inc.m.dim();
  s.result["n_dim"] = inc.n.dim();
  s.result["basic_extension"] = {{"space_dim", ext.space_dim}, {"m1_dim", ext.m1.dim()}};
  s.result["index"] = {{"coefficients", vector_json(ix.coefficients)}, {"total", ix.total}};
  json summands = json::array();
  for (const SummandReport& sr : rc.summands) {
    json j;
    j["block_size"] = sr.block_size;
    j["multiplicity"] = sr.multiplicity;
    j["j_partner"] = sr.partner;
    j["n_block"] = sr.n_block;
    j["a_squared"] = vector_json(sr.a_squared);
    j["a"] = vector_json(sr.a);
    j["trace_a"] = sr.trace_a;
    j["trace_a_inverse"] = sr.trace_a_inverse;
    summands.push_back(j);
  }
  json rel;
  rel["dim"] = rc.dim;
  rel["slots"] = {{"A", rc.slot_a}, {"B1", rc.slot_b1}, {"B2", rc.slot_b2}, {"C", rc.slot_c}};
  rel["summands"] = summands;
  rel["extremal"] = x.extremal;
  rel["a_deviation"] = x.a_deviation;
  rel["direct_defect"] = x.direct_defect;
  rel["dual_weight_j_defect"] = rc.ehat_j_defect;
  s.result["relative_commutant"] = rel;
  return s;
}

json envelope(const std::string& command, const RunConfig& cfg, const std::string& hash) {
  json rep;
  rep["tool"] = "kacgalois";
  rep["version"] = kVersion;
  rep["command"] = command;
  rep["tolerance"] = cfg.tolerance;
  rep["seed"] = cfg.seed;
  rep["input_fnv1a64"] = hash;
  return rep;
}

const char* const kGroups[] = {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "Q8"};
const char* const kInclusions[] = {"inclusion_c_in_m2_trace",
                                   "inclusion_c_in_m2_weighted",
                                   "inclusion_c_in_c2_e13",
                                   "inclusion_c_in_c2_e12",
                                   "inclusion_diag_in_m2_trace",
                                   "inclusion_c_plus_m2_in_m3_markov",
                                   "inclusion_c_in_m3_markov",
                                   "inclusion_golden_markov"};

json selftest(const RunConfig& cfg, const Tolerance& tol, std::string* hash_input, bool* passed) {
  json suites = json::array();
  *passed = true;
  auto add = [&](const std::string& name, std::vector<std::pair<std::string, Section>> sections) {
    json entry;
    entry["name"] = name;
    bool ok = true;
    json cmds;
    for (auto& [cmd, sec] : sections) {
      cmds[cmd] = sec.checks.summary();
      ok = ok && sec.checks.passed();
    }
    entry["passed"] = ok;
    entry["commands"] = cmds;
    suites.push_back(entry);
    *passed = *passed && ok;
  };
  std::string dir = cfg.fixture_dir.empty() ? std::string(".") : cfg.fixture_dir;
  std::vector<std::string> kac_files;
  for (const char* g : kGroups) {
    kac_files.push_back(std::string("group_algebra_") + g);
    kac_files.push_back(std::string("function_algebra_") + g);
  }
  std::vector<std::pair<std::string, json>> kac_docs, inc_docs;
  for (const std::string& name : kac_files) {
    std::string text = guard_input([&] { return read_file(dir + "/" + name + ".json"); });
    *hash_input += text;
    kac_docs.emplace_back(name, guard_input([&] { return parse_json_text(text); }));
  }
  for (const char* name : kInclusions) {
    std::string text = guard_input([&] { return read_file(dir + "/" + name + ".json"); });
    *hash_input += text;
    inc_docs.emplace_back(name, guard_input([&] { return parse_json_text(text); }));
  }
  *hash_input += "random:" + std::to_string(cfg.random_inclusions);

  for (auto& [name, doc] : kac_docs) {
    KacAlgebra k = kac_input(doc, tol);
    std::vector<std::pair<std::string, Section>> secs;
    secs.emplace_back("validate", do_validate(doc, tol));
    secs.emplace_back("dual", do_dual(k, tol, cfg.seed));
    secs.emplace_back("check-duality", do_check_duality(k, tol, cfg.seed));
    secs.emplace_back("coreps", do_coreps(k, tol, cfg.seed));
    secs.emplace_back("galois", do_galois(k, tol, cfg.seed));
    add(name, std::move(secs));
  }
  {
    KacAlgebra t = tensor_kac(group_algebra(group_by_name("Z2")), function_algebra(group_by_name("S3")));
    std::vector<std::pair<std::string, Section>> secs;
    Section v(tol.tau);
    AxiomReport r = validate_kac(t, tol);
    for (const AxiomEntry& e : r.entries) v.checks.residual(e.name, e.residual);
    secs.emplace_back("validate", std::move(v));
    secs.emplace_back("dual", do_dual(t, tol, cfg.seed));
    secs.emplace_back("check-duality", do_check_duality(t, tol, cfg.seed));
    secs.emplace_back("coreps", do_coreps(t, tol, cfg.seed));
    add("tensor_group_algebra_Z2_function_algebra_S3", std::move(secs));
  }
  for (auto& [name, doc] : inc_docs) {
    Inclusion inc = inclusion_input(doc, tol);
    std::vector<std::pair<std::string, Section>> secs;
    secs.emplace_back("validate", do_validate(doc, tol));
    secs.emplace_back("jones", do_jones(inc, tol, cfg.seed));
    add(name, std::move(secs));
  }
  for (int i = 0; i < cfg.random_inclusions; ++i) {
    std::uint64_t s = cfg.seed * 1000 + static_cast<std::uint64_t>(i);
    Inclusion inc = inclusion_from_document(random_inclusion(s), tol);
    std::vector<std::pair<std::string, Section>> secs;
    secs.emplace_back("jones", do_jones(inc, tol, s));
    add("random_inclusion_" + std::to_string(s), std::move(secs));
  }
  return suites;
}

void render_text(const json& j, int indent, const std::string& key, std::ostringstream& out) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  std::string head = key.empty() ? pad : pad + key + ":";
  auto scalar_array = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& e) { return !e.is_structured(); });
  };
  if (j.is_object()) {
    if (!key.empty()) out << head << "\n";
    for (auto it = j.begin(); it != j.end(); ++it) render_text(it.value(), key.empty() ? indent : indent + 1, it.key(), out);
  } else if (j.is_array() && scalar_array(j)) {
    out << head << (key.empty() ? "" : " ") << j.dump() << "\n";
  } else if (j.is_array()) {
    out << head << "\n";
    for (const json& e : j) {
      out << pad << "  -\n";
      render_text(e, indent + 2, "", out);
    }
  } else {
    out << head << (key.empty() ? "" : " ") << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (auto [c, n] : kCommands)
    if (name == n) return c;
  return std::nullopt;
}

const char* command_name(Command c) {
  for (auto [cc, n] : kCommands)
    if (cc == c) return n;
  return "unknown";
}

json error_document(const std::string& command, const std::string& type, const std::string& message) {
  json rep;
  rep["tool"] = "kacgalois";
  rep["version"] = kVersion;
  rep["command"] = command;
  rep["passed"] = false;
  rep["error"] = {{"type", type}, {"message", message}};
  return rep;
}

RunResult run(const RunConfig& cfg) {
  std::string name = command_name(cfg.command);
  if (!(cfg.tolerance > 0) || !std::isfinite(cfg.tolerance))
    return {2, error_document(name, "ConfigError", "tolerance must be positive")};
  Tolerance tol;
  tol.tau = cfg.tolerance;
  RunResult out;
  try {
    if (cfg.command == Command::selftest) {
      std::string hash_input;
      bool passed = false;
      json suites = selftest(cfg, tol, &hash_input, &passed);
      out.report = envelope(name, cfg, hex64(fnv1a64(hash_input)));
      out.report["passed"] = passed;
      out.report["result"] = {{"suites", suites}};
      out.exit_code = passed ? 0 : 1;
      return out;
    }
    if (cfg.input_path.empty()) return {2, error_document(name, "ConfigError", "an input file is required")};
    std::string text = guard_input([&] { return read_file(cfg.input_path); });
    json doc = guard_input([&] { return parse_json_text(text); });
    json rep = envelope(name, cfg, hex64(fnv1a64(text)));
    Section sec(tol.tau);
    switch (cfg.command) {
      case Command::validate:
        sec = do_validate(doc, tol);
        break;
      case Command::jones: {
        Inclusion inc = inclusion_input(doc, tol);
        sec = do_jones(inc, tol, cfg.seed);
        break;
      }
      default: {
        KacAlgebra k = kac_input(doc, tol);
        if (cfg.command == Command::dual) sec = do_dual(k, tol, cfg.seed);
        if (cfg.command == Command::check_duality) sec = do_check_duality(k, tol, cfg.seed);
        if (cfg.command == Command::coreps) sec = do_coreps(k, tol, cfg.seed);
        if (cfg.command == Command::coideals) sec = do_coideals(k, tol, cfg.seed);
        if (cfg.command == Command::galois) sec = do_galois(k, tol, cfg.seed);
        break;
      }
    }
    rep["passed"] = sec.checks.passed();
    rep["result"] = sec.result;
    rep["checks"] = sec.checks.doc();
    out.report = rep;
    out.exit_code = sec.checks.passed() ? 0 : 1;
  } catch (const InputError& e) {
    out.report = error_document(name, e.type(), e.what());
    if (!e.detail().is_null()) out.report["error"]["detail"] = e.detail();
    out.exit_code = 2;
  } catch (const std::exception& e) {
    out.report = error_document(name, "ComputationError", e.what());
    out.exit_code = 1;
  }
  return out;
}

std::string render(const json& report, Format format) {
  if (format == Format::json) return report.dump(2) + "\n";
  std::ostringstream out;
  render_text(report, 0, "", out);
  return out.str();
}

}  // namespace kacgalois
