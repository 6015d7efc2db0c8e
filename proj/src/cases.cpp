#include "orbikit/cases.hpp"

#include "orbikit/error.hpp"

namespace orbikit {

std::string_view case_tag(OrbifoldCase c) {
  switch (c) {
    case OrbifoldCase::InfInf: return "ii";
    case OrbifoldCase::TwoTwoInf: return "22i";
    case OrbifoldCase::TwoTwoTwoTwo: return "2222";
    case OrbifoldCase::TwoFourFour: return "244";
    case OrbifoldCase::TwoThreeSix: return "236";
    case OrbifoldCase::ThreeThreeThree: return "333";
  }
  return "";
}

std::optional<OrbifoldCase> parse_case_tag(std::string_view tag) {
  for (auto c : kAllCases) {
    if (case_tag(c) == tag) return c;
  }
  return std::nullopt;
}

std::string case_name(OrbifoldCase c) {
  switch (c) {
    case OrbifoldCase::InfInf: return "(inf,inf)";
    case OrbifoldCase::TwoTwoInf: return "(2,2,inf)";
    case OrbifoldCase::TwoTwoTwoTwo: return "(2,2,2,2)";
    case OrbifoldCase::TwoFourFour: return "(2,4,4)";
    case OrbifoldCase::TwoThreeSix: return "(2,3,6)";
    case OrbifoldCase::ThreeThreeThree: return "(3,3,3)";
  }
  return "";
}

bool is_torus_case(OrbifoldCase c) {
  return c != OrbifoldCase::InfInf && c != OrbifoldCase::TwoTwoInf;
}

const CaseData& case_data(OrbifoldCase c) {
  static const CaseData two_two_inf{2, 2, {{1, 1}, 2}};
  static const CaseData two_two_two_two{3, 2, {{1, 1, 1}, 2}};
  static const CaseData two_four_four{2, 4, {{1, 1}, 4}};
  static const CaseData two_three_six{2, 6, {{3, 2}, 6}};
  static const CaseData three_three_three{2, 3, {{1, 1}, 3}};
  switch (c) {
    case OrbifoldCase::TwoTwoInf: return two_two_inf;
    case OrbifoldCase::TwoTwoTwoTwo: return two_two_two_two;
    case OrbifoldCase::TwoFourFour: return two_four_four;
    case OrbifoldCase::TwoThreeSix: return two_three_six;
    case OrbifoldCase::ThreeThreeThree: return three_three_three;
    case OrbifoldCase::InfInf: break;
  }
  throw Error(ErrorCode::UnknownCase,
              "no covering-graph data for " + case_name(c));
}

}  // namespace orbikit
