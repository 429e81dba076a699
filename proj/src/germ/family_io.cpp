#include "germnf/germ/family_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace germnf {

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (allowed.count(key) == 0) throw InputError(where + ": unknown field '" + key + "'");
  }
}

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

int require_int(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) throw InputError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

GaussianRational parse_coeff(const Json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": coefficient must be a string like \"1/2\" or \"0+1*i\"");
  try {
    return GaussianRational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

MultiIndex parse_exponents(const Json& v, int n, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) {
    throw InputError(where + ".exponents: expected an array of " + std::to_string(n) + " integers");
  }
  MultiIndex a;
  for (const auto& e : v) {
    if (!e.is_number_integer() || e.get<int>() < 0) {
      throw InputError(where + ".exponents: entries must be non-negative integers");
    }
    a.push_back(e.get<int>());
  }
  return a;
}

}  // namespace

Json series_to_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& [a, c] : s.terms()) out.push_back({{"exponents", a}, {"coeff", c.to_string()}});
  return out;
}

TruncatedSeries series_from_json(const Json& j, int n, int D, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of terms");
  TruncatedSeries s(n, D);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    reject_unknown(j[k], {"exponents", "coeff"}, at);
    const MultiIndex a = parse_exponents(require(j[k], "exponents", at), n, at);
    if (degree(a) > D) throw InputError(at + ": term degree exceeds the declared degree");
    s.add_term(a, parse_coeff(require(j[k], "coeff", at), at + ".coeff"));
  }
  return s;
}

Json germ_to_json(const Germ& g) {
  Json out;
  const GaussianMatrix A = g.linear_matrix();
  if (A.is_diagonal()) {
    Json diag = Json::array();
    for (const auto& mu : g.linear_diag()) diag.push_back(mu.to_string());
    out["linear_diag"] = diag;
  } else {
    Json rows = Json::array();
    for (std::size_t r = 0; r < A.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < A.cols(); ++c) row.push_back(A(r, c).to_string());
      rows.push_back(row);
    }
    out["linear"] = rows;
  }
  Json terms = Json::array();
  const auto N = g.nonlinear_part();
  for (std::size_t m = 0; m < N.size(); ++m) {
    for (const auto& [a, c] : N[m].terms()) {
      terms.push_back({{"component", m + 1}, {"exponents", a}, {"coeff", c.to_string()}});
    }
  }
  out["terms"] = terms;
  return out;
}

Germ germ_from_json(const Json& j, int n, int D, const std::string& where) {
  reject_unknown(j, {"linear_diag", "linear", "terms"}, where);
  const bool has_diag = j.contains("linear_diag");
  const bool has_full = j.contains("linear");
  if (has_diag == has_full) throw InputError(where + ": exactly one of 'linear_diag' or 'linear' is required");
  std::vector<TruncatedSeries> comps;
  for (int m = 0; m < n; ++m) comps.emplace_back(n, D);
  if (has_diag) {
    const Json& diag = j["linear_diag"];
    if (!diag.is_array() || static_cast<int>(diag.size()) != n) {
      throw InputError(where + ".linear_diag: expected " + std::to_string(n) + " entries");
    }
    for (int m = 0; m < n; ++m) {
      const auto mu = parse_coeff(diag[m], where + ".linear_diag[" + std::to_string(m) + "]");
      if (mu.is_zero()) throw InputError(where + ".linear_diag[" + std::to_string(m) + "]: eigenvalue must be nonzero");
      comps[m].add_term(unit_index(n, m), mu);
    }
  } else {
    const Json& rows = j["linear"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw InputError(where + ".linear: expected " + std::to_string(n) + " rows");
    }
    for (int r = 0; r < n; ++r) {
      const std::string at = where + ".linear[" + std::to_string(r) + "]";
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n) {
        throw InputError(at + ": expected " + std::to_string(n) + " entries");
      }
      for (int c = 0; c < n; ++c) comps[r].add_term(unit_index(n, c), parse_coeff(rows[r][c], at));
    }
  }
  if (j.contains("terms")) {
    const Json& terms = j["terms"];
    if (!terms.is_array()) throw InputError(where + ".terms: expected an array");
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string at = where + ".terms[" + std::to_string(k) + "]";
      reject_unknown(terms[k], {"component", "exponents", "coeff"}, at);
      const int comp = require_int(terms[k], "component", at);
      if (comp < 1 || comp > n) throw InputError(at + ".component: must lie in 1.." + std::to_string(n));
      const MultiIndex a = parse_exponents(require(terms[k], "exponents", at), n, at);
      if (degree(a) < 2) throw InputError(at + ": terms must have degree >= 2 (linear part is given separately)");
      if (degree(a) > D) throw InputError(at + ": term degree exceeds the declared degree " + std::to_string(D));
      comps[comp - 1].add_term(a, parse_coeff(require(terms[k], "coeff", at), at + ".coeff"));
    }
  }
  try {
    return Germ(std::move(comps));
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

Json family_to_json(const Family& fam) {
  Json maps = Json::array();
  for (const auto& g : fam.germs()) maps.push_back(germ_to_json(g));
  return {{"schema", 1}, {"n", fam.n()}, {"p", fam.p()}, {"degree", fam.degree_bound()}, {"maps", maps}};
}

Family family_from_json(const Json& j) {
  reject_unknown(j, {"schema", "n", "p", "degree", "maps"}, "family");
  if (require_int(j, "schema", "family") != 1) throw InputError("family.schema: only schema 1 is supported");
  const int n = require_int(j, "n", "family");
  const int p = require_int(j, "p", "family");
  const int D = require_int(j, "degree", "family");
  if (n < 1) throw InputError("family.n: must be positive");
  if (p < 1 || p > n) throw InputError("family.p: must satisfy 1 <= p <= n");
  if (D < 2) throw InputError("family.degree: must be at least 2");
  const Json& maps = require(j, "maps", "family");
  if (!maps.is_array() || static_cast<int>(maps.size()) != p) {
    throw InputError("family.maps: expected " + std::to_string(p) + " maps");
  }
  std::vector<Germ> germs;
  for (int i = 0; i < p; ++i) germs.push_back(germ_from_json(maps[i], n, D, "family.maps[" + std::to_string(i) + "]"));
  return Family(std::move(germs));
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return family_from_json(j);
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace germnf
