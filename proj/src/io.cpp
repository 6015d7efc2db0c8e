#include "orbikit/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "orbikit/error.hpp"

namespace orbikit {

namespace {

[[noreturn]] void parse_fail(const std::string& why) { throw Error(ErrorCode::ParseError, why); }

void require_keys(const nlohmann::json& j, std::initializer_list<const char*> keys,
                  const std::string& where) {
  if (!j.is_object()) parse_fail(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known |= k == key;
    if (!known) parse_fail("unknown field '" + k + "' in " + where);
  }
  for (const char* key : keys) {
    if (!j.contains(key)) parse_fail("missing field '" + std::string(key) + "' in " + where);
  }
}

ojson weight_json(const Weight& w) {
  if (w.is_infinite()) return "inf";
  return w.value();
}

ojson matrix_json(const IntMatrix2& m) { return ojson::array({m.m[0], m.m[1], m.m[2], m.m[3]}); }

}  // namespace

PortraitData portrait_from_json(const nlohmann::json& j) {
  require_keys(j, {"degree", "points"}, "portrait");
  if (!j["degree"].is_number_integer()) parse_fail("'degree' must be an integer");
  if (!j["points"].is_array()) parse_fail("'points' must be an array");
  PortraitData data;
  data.degree = j["degree"].get<int>();
  for (const auto& p : j["points"]) {
    require_keys(p, {"id", "deg", "image"}, "point");
    if (!p["id"].is_string() || !p["image"].is_string() || !p["deg"].is_number_integer()) {
      parse_fail("point fields have the wrong type");
    }
    data.points.push_back(
        {p["id"].get<std::string>(), p["deg"].get<int>(), p["image"].get<std::string>()});
  }
  return data;
}

PortraitData read_portrait_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    parse_fail("'" + path + "': " + e.what());
  }
  return portrait_from_json(j);
}

ojson portrait_to_json(const PortraitData& data) {
  ojson points = ojson::array();
  for (const auto& p : data.points) {
    points.push_back({{"id", p.id}, {"deg", p.local_degree}, {"image", p.image}});
  }
  return {{"degree", data.degree}, {"points", points}};
}

IntMatrix2 parse_matrix(std::string_view text) {
  IntMatrix2 m;
  std::stringstream ss{std::string(text)};
  std::string field;
  int k = 0;
  while (std::getline(ss, field, ',')) {
    if (k == 4) parse_fail("matrix needs exactly 4 entries");
    std::size_t used = 0;
    try {
      m.m[static_cast<std::size_t>(k)] = std::stoll(field, &used);
    } catch (const std::exception&) {
      parse_fail("bad matrix entry '" + field + "'");
    }
    if (used != field.size()) parse_fail("bad matrix entry '" + field + "'");
    ++k;
  }
  if (k != 4) parse_fail("matrix needs exactly 4 entries, got " + std::to_string(k));
  return m;
}

std::string rational_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

ClassifyReport classify_report(const CriticalPortrait& portrait) {
  ClassifyReport r;
  const RamificationMap nu = ramification_function(portrait);
  r.orbifold = classify_signature(signature_of(nu));
  r.exact = check_exactness(portrait, nu);
  if (r.orbifold.kind == OrbifoldKind::NonHyperbolic) {
    const DichotomyReport d = dichotomy_report(portrait);
    r.verdict = d.verdict;
    r.mechanism = d.mechanism;
  }
  return r;
}

ojson to_json(const ClassifyReport& r) {
  ojson sig = ojson::array();
  for (const auto& w : r.orbifold.signature) sig.push_back(weight_json(w));
  ojson out;
  out["signature"] = sig;
  out["chi"] = rational_string(r.orbifold.chi);
  out["kind"] = to_string(r.orbifold.kind);
  out["case"] = r.orbifold.orbifold_case ? ojson(case_name(*r.orbifold.orbifold_case)) : ojson();
  out["verdict"] = to_string(r.verdict);
  out["mechanism"] = r.mechanism.empty() ? ojson() : ojson(r.mechanism);
  out["exact"] = r.exact;
  return out;
}

void write_text(std::ostream& os, const ClassifyReport& r) {
  os << "signature " << signature_string(r.orbifold.signature) << "; "
     << to_string(r.orbifold.kind) << "; verdict " << to_string(r.verdict) << "\n";
  os << "chi " << rational_string(r.orbifold.chi) << "; exactness "
     << (r.exact ? "holds" : "fails") << "\n";
  if (!r.mechanism.empty()) os << "mechanism: " << r.mechanism << "\n";
}

ojson to_json(const RateCertificate& cert) {
  ojson rows = ojson::array();
  for (const auto& row : cert.rows) {
    ojson o;
    o["n"] = row.n;
    o["degenerate"] = row.degenerate;
    o["torus_count"] = row.degenerate ? ojson() : ojson(row.torus_count.get_str());
    o["sphere_bound"] = row.degenerate ? ojson() : ojson(row.sphere_bound.get_str());
    o["exponent"] = row.degenerate ? ojson() : ojson(row.exponent);
    rows.push_back(o);
  }
  ojson out;
  out["case"] = case_name(cert.lift.orbifold_case);
  out["matrix"] = matrix_json(cert.lift.matrix);
  out["degree"] = cert.lift.degree;
  out["sheets"] = cert.lift.sheets;
  out["certified_matrix"] = matrix_json(cert.certified_matrix);
  out["composed_with_deck"] = cert.composed;
  out["epsilon"] = cert.epsilon;
  out["target"] = cert.target;
  out["verdict_n"] = cert.verdict_n;
  out["verdict_exponent"] = cert.verdict_exponent;
  out["pass"] = cert.pass;
  out["rows"] = rows;
  return out;
}

void write_text(std::ostream& os, const RateCertificate& cert) {
  os << "case " << case_name(cert.lift.orbifold_case) << ", A = " << cert.lift.matrix.str()
     << ", d = " << cert.lift.degree << ", sheets = " << cert.lift.sheets << "\n";
  os << "certified matrix " << cert.certified_matrix.str()
     << (cert.composed ? " (A has eigenvalue 1; composed with the deck rotation)" : "") << "\n";
  os << std::setw(4) << "n" << "  " << std::setw(28) << "|det(A^n - I)|" << "  "
     << std::setw(28) << "sphere bound" << "  " << std::setw(10) << "exponent" << "\n";
  for (const auto& row : cert.rows) {
    os << std::setw(4) << row.n << "  ";
    if (row.degenerate) {
      os << std::setw(28) << "degenerate" << "  " << std::setw(28) << "-" << "  "
         << std::setw(10) << "-" << "\n";
      continue;
    }
    os << std::setw(28) << row.torus_count.get_str() << "  " << std::setw(28)
       << row.sphere_bound.get_str() << "  " << std::setw(10) << std::fixed
       << std::setprecision(6) << row.exponent << "\n";
  }
  os << std::fixed << std::setprecision(6) << "n = " << cert.verdict_n << ": exponent "
     << cert.verdict_exponent << " vs ln|d| - eps = " << cert.target - cert.epsilon << " -> "
     << (cert.pass ? "PASS" : "FAIL") << "\n";
  os.unsetf(std::ios::floatfield);
}

ojson to_json(const SimulationReport& sim) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < sim.rows.size(); ++i) {
    const auto& row = sim.rows[i];
    const auto& rep = sim.per_n[i];
    ojson twists = ojson::array();
    for (const auto& t : rep.twists) {
      twists.push_back({{"j", t.j}, {"det", t.det}, {"singular", t.singular},
                        {"solutions", t.solutions}});
    }
    ojson o;
    o["n"] = row.n;
    o["twists"] = twists;
    o["distinct_points"] = rep.distinct_points;
    o["exact_count"] = row.exact;
    o["sphere_bound"] = row.bound ? ojson(row.bound->get_str()) : ojson();
    o["dominates"] = row.dominates;
    o["exact_exponent"] = row.exact_exponent;
    o["bound_exponent"] = row.bound ? ojson(row.bound_exponent) : ojson();
    o["warnings"] = rep.warnings;
    rows.push_back(o);
  }
  ojson out;
  out["case"] = case_name(sim.lift.orbifold_case);
  out["matrix"] = matrix_json(sim.lift.matrix);
  out["degree"] = sim.lift.degree;
  out["sheets"] = sim.lift.sheets;
  out["rows"] = rows;
  return out;
}

void write_text(std::ostream& os, const SimulationReport& sim) {
  os << "case " << case_name(sim.lift.orbifold_case) << ", A = " << sim.lift.matrix.str()
     << ", d = " << sim.lift.degree << "\n";
  os << std::setw(4) << "n" << "  " << std::setw(12) << "torus pts" << "  " << std::setw(12)
     << "exact N_n" << "  " << std::setw(14) << "sphere bound" << "  " << "ok" << "\n";
  for (std::size_t i = 0; i < sim.rows.size(); ++i) {
    const auto& row = sim.rows[i];
    os << std::setw(4) << row.n << "  " << std::setw(12) << sim.per_n[i].distinct_points << "  "
       << std::setw(12) << row.exact << "  " << std::setw(14)
       << (row.bound ? row.bound->get_str() : std::string("degenerate")) << "  "
       << (row.dominates ? "yes" : "NO") << "\n";
    for (const auto& w : sim.per_n[i].warnings) os << "      warning: " << w << "\n";
  }
}

}  // namespace orbikit
