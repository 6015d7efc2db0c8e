#pragma once

// The six non-hyperbolic orbifold signatures and their fixed per-case data.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbikit {

enum class OrbifoldCase {
  InfInf,           // (inf, inf)
  TwoTwoInf,        // (2, 2, inf)
  TwoTwoTwoTwo,     // (2, 2, 2, 2)
  TwoFourFour,      // (2, 4, 4)
  TwoThreeSix,      // (2, 3, 6)
  ThreeThreeThree,  // (3, 3, 3)
};

inline constexpr std::array<OrbifoldCase, 6> kAllCases = {
    OrbifoldCase::InfInf,      OrbifoldCase::TwoTwoInf,
    OrbifoldCase::TwoTwoTwoTwo, OrbifoldCase::TwoFourFour,
    OrbifoldCase::TwoThreeSix, OrbifoldCase::ThreeThreeThree};

// Cases with a covering-graph description (all but (inf, inf)).
inline constexpr std::array<OrbifoldCase, 5> kSubgroupCases = {
    OrbifoldCase::TwoTwoInf, OrbifoldCase::TwoTwoTwoTwo,
    OrbifoldCase::TwoFourFour, OrbifoldCase::TwoThreeSix,
    OrbifoldCase::ThreeThreeThree};

inline constexpr std::array<OrbifoldCase, 4> kTorusCases = {
    OrbifoldCase::TwoTwoTwoTwo, OrbifoldCase::TwoFourFour,
    OrbifoldCase::TwoThreeSix, OrbifoldCase::ThreeThreeThree};

// Compact CLI tags: ii, 22i, 2222, 244, 236, 333.
std::string_view case_tag(OrbifoldCase c);
std::optional<OrbifoldCase> parse_case_tag(std::string_view tag);
// Human-readable signature, e.g. "(2,4,4)" or "(inf,inf)".
std::string case_name(OrbifoldCase c);

bool is_torus_case(OrbifoldCase c);

// Linear congruence sum(weights[i] * v[i]) = 0 mod modulus on X-homology.
struct Congruence {
  std::vector<std::int64_t> weights;
  std::int64_t modulus = 1;
};

struct CaseData {
  int x_rank = 0;  // rank of pi_1(X): punctured sphere minus one puncture
  int sheets = 0;  // index of G, number of sheets of the cover
  Congruence congruence;
};

// Throws UnknownCase for (inf, inf).
const CaseData& case_data(OrbifoldCase c);

}  // namespace orbikit
