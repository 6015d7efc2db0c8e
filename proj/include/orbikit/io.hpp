#pragma once

// JSON and text renderings shared by the CLI and the tests. JSON objects use
// insertion-ordered keys so output bytes are canonical.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "orbikit/orbifold.hpp"
#include "orbikit/portrait.hpp"
#include "orbikit/quotient_sim.hpp"
#include "orbikit/toruslift.hpp"

namespace orbikit {

using ojson = nlohmann::ordered_json;

// {"degree": int, "points": [{"id": str, "deg": int, "image": str}]}.
// Unknown or missing fields throw ParseError.
PortraitData portrait_from_json(const nlohmann::json& j);
PortraitData read_portrait_file(const std::string& path);
ojson portrait_to_json(const PortraitData& data);

// Row-major "a,b,c,d". Throws ParseError.
IntMatrix2 parse_matrix(std::string_view text);

std::string rational_string(const Rational& q);  // always "p/q"

struct ClassifyReport {
  OrbifoldClass orbifold;
  Verdict verdict = Verdict::OutOfScope;
  std::string mechanism;
  bool exact = false;
};

ClassifyReport classify_report(const CriticalPortrait& portrait);
ojson to_json(const ClassifyReport& r);
void write_text(std::ostream& os, const ClassifyReport& r);

ojson to_json(const RateCertificate& cert);
void write_text(std::ostream& os, const RateCertificate& cert);

struct SimulationReport {
  TorusLift lift;
  std::vector<QuotientFixReport> per_n;
  std::vector<OracleRow> rows;
};
ojson to_json(const SimulationReport& sim);
void write_text(std::ostream& os, const SimulationReport& sim);

}  // namespace orbikit
