#include "germnf/cli/job.hpp"

#include "germnf/classify/classify.hpp"
#include "germnf/cli/render.hpp"
#include "germnf/normalform/integrable.hpp"
#include "germnf/normalform/normalize.hpp"
#include "germnf/normalform/realcase.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace germnf {

const char* const kToolVersion = "0.1.0";

namespace {

const std::vector<std::pair<Command, std::string>>& command_table() {
  static const std::vector<std::pair<Command, std::string>> table{
      {Command::Analyze, "analyze"},   {Command::Normalize, "normalize"},
      {Command::Lattice, "lattice"},   {Command::FirstIntegrals, "first-integrals"},
      {Command::Verify, "verify"},     {Command::Generate, "generate"},
      {Command::Realcase, "realcase"}};
  return table;
}

Json index_json(const MultiIndex& a) { return Json(a); }

Json index_list(const std::vector<MultiIndex>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(a);
  return out;
}

Json sigma_json(const std::vector<int>& sigma) {
  Json out = Json::array();
  for (int s : sigma) out.push_back(s + 1);
  return out;
}

Json defect_json(const std::optional<FamilyDefect>& d) {
  if (!d) return nullptr;
  return {{"maps", {d->i + 1, d->j + 1}},
          {"degree", d->defect.degree},
          {"component", d->defect.component + 1},
          {"monomial", d->defect.monomial},
          {"coefficient", d->defect.coefficient.to_string()}};
}

Json offence_json(const std::optional<PdnfOffence>& o) {
  if (!o) return nullptr;
  return {{"map", o->germ + 1}, {"component", o->component + 1}, {"monomial", o->monomial}};
}

Json division_json(const std::vector<DivisionVerdict>& v) {
  Json out = Json::array();
  for (const auto& d : v) {
    out.push_back({{"map", d.germ + 1},
                   {"component", d.component + 1},
                   {"passes", d.passes},
                   {"offending", d.offending ? index_json(*d.offending) : Json()}});
  }
  return out;
}

Json certificate_json(const IntegrableNFCertificate& c) {
  Json phi = Json::array();
  for (const auto& row : c.phi) {
    Json r = Json::array();
    for (const auto& s : row) r.push_back(series_to_json(s));
    phi.push_back(r);
  }
  Json support = Json::array();
  for (const auto& s : c.support_violations) {
    support.push_back({{"map", s.germ + 1}, {"component", s.component + 1}, {"monomial", s.monomial}});
  }
  Json residuals = Json::array();
  for (const auto& r : c.residuals) {
    Json term = nullptr;
    if (r.term) term = {{"monomial", r.term->first}, {"coefficient", r.term->second.to_string()}};
    residuals.push_back({{"map", r.germ + 1}, {"generator", r.generator}, {"first_term", term}});
  }
  return {{"phi", phi},
          {"omega_generators", index_list(c.omega_generators)},
          {"support_violations", support},
          {"residuals", residuals},
          {"all_zero", c.all_zero()}};
}

Json log_json(const std::vector<EliminationStep>& log) {
  Json out = Json::array();
  for (const auto& s : log) {
    out.push_back({{"degree", s.degree},
                   {"component", s.component + 1},
                   {"monomial", s.monomial},
                   {"coefficient", s.coefficient.to_string()},
                   {"divisor", s.divisor.to_string()},
                   {"chosen_map", s.chosen_germ + 1},
                   {"h", s.h.to_string()}});
  }
  return out;
}

// Pairs each coordinate with one whose eigenvalues are the conjugates in
// every map; real coordinates are fixed.
std::vector<int> conjugate_pairing(const EigenData& e) {
  std::vector<int> sigma(static_cast<std::size_t>(e.n), -1);
  for (int m = 0; m < e.n; ++m) {
    if (sigma[static_cast<std::size_t>(m)] >= 0) continue;
    bool real = true;
    for (int i = 0; i < e.p; ++i) real = real && e.at(i, m).is_real();
    if (real) {
      sigma[static_cast<std::size_t>(m)] = m;
      continue;
    }
    for (int k = m + 1; k < e.n; ++k) {
      if (sigma[static_cast<std::size_t>(k)] >= 0) continue;
      bool match = true;
      for (int i = 0; i < e.p; ++i) match = match && e.at(i, k) == e.at(i, m).conj();
      if (match) {
        sigma[static_cast<std::size_t>(m)] = k;
        sigma[static_cast<std::size_t>(k)] = m;
        break;
      }
    }
    if (sigma[static_cast<std::size_t>(m)] < 0) {
      throw InputError("coordinate " + std::to_string(m + 1) + " has no conjugate partner for the real structure");
    }
  }
  return sigma;
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Family parse_family(const std::string& bytes, const std::string& path) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return family_from_json(j);
}

Family at_degree(const Family& fam, const JobConfig& c) {
  if (!c.degree) return fam;
  if (*c.degree > fam.degree_bound()) {
    throw InputError("--degree " + std::to_string(*c.degree) + " exceeds the family's degree " +
                     std::to_string(fam.degree_bound()));
  }
  return fam.truncated(*c.degree);
}

void require_diagonal(const Family& fam) {
  for (int i = 0; i < fam.p(); ++i) {
    if (!fam.germ(i).has_diagonal_linear_part()) {
      throw InputError("family.maps[" + std::to_string(i) + "]: linear part must be diagonal for this command");
    }
  }
}

void text_verdict(std::vector<std::string>& text, const std::string& name, const Verdict& v) {
  std::string line = name + ": " + truth_name(v.value);
  if (!v.reason.empty()) line += " (" + v.reason + ")";
  text.push_back(line);
}

int analyze(const Family& fam, const JobConfig& c, Report& r) {
  require_diagonal(fam);
  ClassifyOptions opt;
  opt.omega_bound = c.omega_bound;
  opt.branch_bound = c.branch_bound;
  opt.torsion_bound = c.torsion_bound;
  const ClassificationReport rep = classify_family(fam, opt);
  r.payload = rep.to_json();
  r.payload["commutativity_defect"] = defect_json(family_commutativity_defect(fam));
  r.text = render_family(fam);
  text_verdict(r.text, "nondegenerate", rep.nondegenerate);
  text_verdict(r.text, "projectively hyperbolic", rep.projectively_hyperbolic);
  text_verdict(r.text, "weakly resonant", rep.weakly_resonant);
  r.text.push_back("infinitesimal generators: " + r.payload["infinitesimal_generators"]["status"].get<std::string>());
  r.text.push_back("weakly non-resonant generators: " +
                   r.payload["weakly_nonresonant_generators"]["status"].get<std::string>());
  text_verdict(r.text, "hyperbolic", rep.hyperbolic);
  text_verdict(r.text, "weakly hyperbolic", rep.weakly_hyperbolic);
  if (rep.poincare) text_verdict(r.text, "Poincare type", rep.poincare->verdict);
  r.text.push_back("normal form hypothesis: " + truth_name(rep.normal_form_hypothesis()));
  return rep.any_indeterminate() ? 2 : 0;
}

int normalize(const Family& fam, const JobConfig& c, Report& r) {
  require_diagonal(fam);
  NormalizeOptions opt;
  if (c.rho_equivariant) {
    opt.rho_equivariant = true;
    opt.sigma = conjugate_pairing(EigenData::from_family(fam));
  }
  const NormalizationResult res = poincare_dulac_normalize(fam, opt);
  r.payload = {{"normalized", family_to_json(res.normalized)},
               {"psi", germ_to_json(res.psi)},
               {"elimination_log", log_json(res.elimination_log)}};
  if (opt.rho_equivariant) {
    r.payload["pairing"] = sigma_json(opt.sigma);
    r.payload["psi_rho_equivariant"] = !rho_violation(res.psi, opt.sigma).has_value();
  }
  const auto failure = first_division_failure(res.normalized);
  if (failure) {
    r.payload["certificate"] = nullptr;
    r.payload["division_failure"] = division_json({*failure})[0];
  } else {
    const auto cert = extract_integrable_certificate(res.normalized, relation_lattice(EigenData::from_family(fam)));
    r.payload["certificate"] = certificate_json(cert);
    r.payload["division_failure"] = nullptr;
  }
  r.text = render_family(res.normalized);
  r.text.push_back(render_germ(res.psi, "ψ"));
  r.text.push_back("eliminated terms: " + std::to_string(res.elimination_log.size()));
  if (failure) {
    r.text.push_back("division: fails at map " + std::to_string(failure->germ + 1) + ", component " +
                     std::to_string(failure->component + 1) + ", monomial " + monomial_string(*failure->offending));
  } else {
    r.text.push_back(std::string("integrable certificate: ") +
                     (r.payload["certificate"]["all_zero"].get<bool>() ? "all residuals zero" : "nonzero residuals"));
  }
  return 0;
}

int lattice(const Family& fam, const JobConfig& c, Report& r) {
  require_diagonal(fam);
  const EigenData e = EigenData::from_family(fam);
  const RelationLattice lat = relation_lattice(e);
  const int bound = c.omega_bound > 0 ? c.omega_bound : 2 * fam.degree_bound();
  const auto omega = omega_from_lattice(lat, bound);
  const auto rank = vect_omega_rank(lat, bound);
  Json resonant = Json::array();
  r.text.push_back("relation lattice basis: " + Json(index_list(lat.basis)).dump());
  r.text.push_back("Omega up to degree " + std::to_string(bound) + ": " + Json(index_list(omega.points)).dump());
  for (int m = 0; m < e.n; ++m) {
    const auto rs = resonant_set(e, lat, m, bound);
    resonant.push_back({{"component", m + 1}, {"points", index_list(rs.points)}});
    r.text.push_back("R_" + std::to_string(m + 1) + ": " + Json(index_list(rs.points)).dump());
  }
  r.payload = {{"relation_lattice", index_list(lat.basis)},
               {"bound", bound},
               {"omega", index_list(omega.points)},
               {"resonant_sets", resonant},
               {"vect_omega_rank", {rank.first, rank.second}}};
  r.text.push_back("rank of Vect Omega: " + std::to_string(rank.first) + " of " + std::to_string(rank.second));
  return 0;
}

int first_integral_job(const Family& fam, const JobConfig& c, Report& r) {
  const int D = fam.degree_bound();
  const auto basis = first_integrals(fam, D);
  Json b = Json::array();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    b.push_back(series_to_json(basis[k]));
    r.text.push_back(subscripted("F", static_cast<int>(k + 1)) + " = " + basis[k].to_string());
  }
  if (basis.empty()) r.text.push_back("no polynomial first integrals up to degree " + std::to_string(D));
  (void)c;
  r.payload = {{"degree", D}, {"basis", b}};
  return 0;
}

int verify(const Family& fam, const JobConfig&, Report& r) {
  require_diagonal(fam);
  const auto defect = family_commutativity_defect(fam);
  const auto off = verify_pd_nf(fam);
  const auto division = division_check(fam);
  r.payload = {{"commutativity_defect", defect_json(defect)},
               {"pd_nf_offence", offence_json(off)},
               {"division", division_json(division)}};
  r.text.push_back(std::string("commutativity: ") + (defect ? "fail" : "pass"));
  r.text.push_back(std::string("PD-NF: ") + (off ? "fail at " + r.payload["pd_nf_offence"].dump() : "pass"));
  const auto failure = first_division_failure(fam);
  if (failure) {
    r.text.push_back("division: fail at (" + subscripted("Φ", failure->germ + 1) + ", component " +
                     std::to_string(failure->component + 1) + ", " + monomial_string(*failure->offending) + ")");
    r.payload["certificate"] = nullptr;
  } else {
    r.text.push_back("division: pass");
    const auto cert = extract_integrable_certificate(fam, relation_lattice(EigenData::from_family(fam)));
    r.payload["certificate"] = certificate_json(cert);
    r.text.push_back(std::string("integrable certificate: ") + (cert.all_zero() ? "all residuals zero" : "nonzero residuals"));
  }
  return 0;
}

int generate(const Family& fam, const JobConfig& c, Report& r) {
  require_diagonal(fam);
  const EigenData e = EigenData::from_family(fam);
  const RelationLattice lat = relation_lattice(e);
  const int D = c.degree.value_or(fam.degree_bound());
  std::vector<int> sigma;
  if (c.rho_equivariant) sigma = conjugate_pairing(e);
  const Family out = generate_integrable_nf(e, lat, D, c.seed, sigma);
  const auto cert = extract_integrable_certificate(out, lat);
  r.payload = {{"family", family_to_json(out)},
               {"seed", c.seed},
               {"commutativity_defect", defect_json(family_commutativity_defect(out))},
               {"certificate_all_zero", cert.all_zero()}};
  r.text = render_family(out);
  return 0;
}

int realcase(const Family& fam, const JobConfig&, Report& r) {
  const ComplexifiedFamily cx = complexify_real_family(fam);
  NormalizeOptions opt;
  opt.rho_equivariant = true;
  opt.sigma = cx.sigma;
  const NormalizationResult res = poincare_dulac_normalize(cx.family, opt);
  const Family real_nf = realify_normal_form(res.normalized, cx.sigma);
  const Germ real_psi = realify_germ(res.psi, cx.sigma);
  const bool conjugacy = conjugate(fam, real_psi) == real_nf;
  r.payload = {{"pairing", sigma_json(cx.sigma)},
               {"complexified", family_to_json(cx.family)},
               {"normalized", family_to_json(res.normalized)},
               {"psi", germ_to_json(res.psi)},
               {"realified", family_to_json(real_nf)},
               {"real_conjugator", germ_to_json(real_psi)},
               {"conjugacy_verified", conjugacy}};
  r.text = render_family(cx.family, "Φ̃");
  for (const auto& line : render_family(real_nf)) r.text.push_back("real normal form: " + line);
  r.text.push_back(render_germ(real_psi, "real conjugator"));
  r.text.push_back(std::string("conjugacy verified: ") + (conjugacy ? "yes" : "no"));
  return 0;
}

}  // namespace

std::string command_name(Command c) {
  for (const auto& [cmd, name] : command_table()) {
    if (cmd == c) return name;
  }
  throw std::logic_error("unnamed command");
}

Command parse_command(const std::string& name) {
  for (const auto& [cmd, n] : command_table()) {
    if (n == name) return cmd;
  }
  throw InputError("unknown command '" + name + "'");
}

void JobConfig::validate() const {
  if (input.empty()) throw InputError("input: a family file is required");
  if (degree && *degree < 2) throw InputError("degree: must be at least 2");
  if (omega_bound < 0) throw InputError("bound-omega: must be positive");
  if (branch_bound < 1) throw InputError("bound-branch: must be positive");
  if (torsion_bound < 1) throw InputError("bound-torsion: must be positive");
  if (format != "json" && format != "text") throw InputError("format: must be 'json' or 'text'");
}

JobConfig JobConfig::from_json(const Json& j) {
  static const std::set<std::string> allowed{"command",      "input",       "degree", "bound_omega",
                                             "bound_branch", "bound_torsion", "rho_equivariant", "seed",
                                             "format",       "output"};
  if (!j.is_object()) throw InputError("config: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (allowed.count(key) == 0) throw InputError("config." + key + ": unknown field");
  }
  JobConfig c;
  try {
    c.command = parse_command(j.at("command").get<std::string>());
    c.input = j.at("input").get<std::string>();
    if (j.contains("degree")) c.degree = j["degree"].get<int>();
    if (j.contains("bound_omega")) c.omega_bound = j["bound_omega"].get<int>();
    if (j.contains("bound_branch")) c.branch_bound = j["bound_branch"].get<int>();
    if (j.contains("bound_torsion")) c.torsion_bound = j["bound_torsion"].get<int>();
    if (j.contains("rho_equivariant")) c.rho_equivariant = j["rho_equivariant"].get<bool>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("output")) c.output = j["output"].get<std::string>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

Json Report::to_json(bool with_timing) const {
  Json out{{"tool", "germnf"},
           {"version", version},
           {"command", command},
           {"input_sha256", input_digest},
           {"payload", payload}};
  if (with_timing) out["timing_ms"] = elapsed_ms;
  return out;
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return canonical_dump(to_json());
  std::string out = "germnf " + version + " " + command + " (sha256 " + input_digest.substr(0, 16) + ")\n";
  for (const auto& line : text) out += line + "\n";
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
  return os.str();
}

JobOutcome run(const JobConfig& config) {
  JobOutcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    config.validate();
    const std::string bytes = read_bytes(config.input);
    Family fam = parse_family(bytes, config.input);
    if (config.command != Command::Generate) fam = at_degree(fam, config);
    Report r;
    r.version = kToolVersion;
    r.command = command_name(config.command);
    r.input_digest = sha256_hex(bytes);
    switch (config.command) {
      case Command::Analyze: outcome.exit_code = analyze(fam, config, r); break;
      case Command::Normalize: outcome.exit_code = normalize(fam, config, r); break;
      case Command::Lattice: outcome.exit_code = lattice(fam, config, r); break;
      case Command::FirstIntegrals: outcome.exit_code = first_integral_job(fam, config, r); break;
      case Command::Verify: outcome.exit_code = verify(fam, config, r); break;
      case Command::Generate: outcome.exit_code = generate(fam, config, r); break;
      case Command::Realcase: outcome.exit_code = realcase(fam, config, r); break;
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    outcome.report = std::move(r);
  } catch (const std::exception& e) {
    outcome.exit_code = 1;
    outcome.report.reset();
    outcome.error = e.what();
  }
  return outcome;
}

}  // namespace germnf
