#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "orbikit/covergraph.hpp"
#include "orbikit/error.hpp"

using namespace orbikit;

namespace {

constexpr OrbifoldCase kCases[] = {OrbifoldCase::TwoTwoInf, OrbifoldCase::TwoTwoTwoTwo,
                                   OrbifoldCase::TwoFourFour, OrbifoldCase::TwoThreeSix,
                                   OrbifoldCase::ThreeThreeThree};

Word random_reduced_word(std::mt19937_64& rng, int rank, int max_len) {
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  std::vector<int> letters;
  while (static_cast<int>(letters.size()) < len) {
    int l = static_cast<int>(rng() % static_cast<unsigned>(rank)) + 1;
    if (rng() & 1) l = -l;
    if (!letters.empty() && letters.back() == -l) continue;
    letters.push_back(l);
  }
  return Word(letters);
}

// Congruence membership tested directly from exponent sums.
bool by_hand(OrbifoldCase c, const Word& w) {
  const auto v = abelianize(w, case_data(c).x_rank);
  switch (c) {
    case OrbifoldCase::TwoTwoInf: return (v[0] + v[1]) % 2 == 0;
    case OrbifoldCase::TwoTwoTwoTwo: return (v[0] + v[1] + v[2]) % 2 == 0;
    case OrbifoldCase::TwoFourFour: return (v[0] + v[1]) % 4 == 0;
    case OrbifoldCase::TwoThreeSix: return (3 * v[0] + 2 * v[1]) % 6 == 0;
    case OrbifoldCase::ThreeThreeThree: return (v[0] + v[1]) % 3 == 0;
    default: return false;
  }
}

}  // namespace

TEST_CASE("word parsing and formatting") {
  const Alphabet x{2, 0};
  CHECK(parse_word("a2b2", x) == Word({1, 1, 2, 2}));
  CHECK(parse_word("(ab)2", x) == Word({1, 2, 1, 2}));
  CHECK(parse_word("(ab)^-1", x) == Word({-2, -1}));
  CHECK(parse_word("aA", x).empty());
  CHECK(parse_word("ABab", x) == Word({-1, -2, 1, 2}));
  CHECK(format_word(parse_word("a3B", x), x) == "a3B");
  const Alphabet y{2, 2};
  CHECK(parse_word("ag2A", y) == Word({1, 4, -1}));
  CHECK(parse_word("g1^2", y) == Word({3, 3}));
  CHECK(format_word(parse_word("ag1A", y), y) == "ag1A");
  CHECK_THROWS_AS(parse_word("e", x), Error);
  CHECK_THROWS_AS(parse_word("g3", y), Error);
  CHECK_THROWS_AS(parse_word("(ab", x), Error);
  CHECK_THROWS_AS(parse_word("a?", x), Error);
}

TEST_CASE("reduction is idempotent and inverse works") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> raw;
    for (int k = 0; k < 10; ++k) {
      int l = static_cast<int>(rng() % 3) + 1;
      raw.push_back(rng() & 1 ? l : -l);
    }
    const Word w(raw);
    CHECK(reduce(reduce(w)) == reduce(w));
    CHECK((reduce(w) * reduce(w).inverse()).empty());
    CHECK(abelianize(w, 3) == abelianize(reduce(w), 3));
  }
  CHECK_THROWS_AS(abelianize(Word({3}), 2), Error);
}

TEST_CASE("congruence examples") {
  CHECK(congruence_member(OrbifoldCase::TwoTwoInf, {1, 1}));
  CHECK_FALSE(congruence_member(OrbifoldCase::TwoTwoInf, {1, 0}));
  CHECK(congruence_member(OrbifoldCase::TwoFourFour, {2, 2}));
  CHECK_FALSE(congruence_member(OrbifoldCase::TwoThreeSix, {1, 1}));  // 3+2 = 5
  CHECK(congruence_member(OrbifoldCase::TwoThreeSix, {2, 3}));
  CHECK(congruence_member(OrbifoldCase::ThreeThreeThree, {2, 1}));
  CHECK_THROWS_AS(congruence_member(OrbifoldCase::TwoTwoInf, {1, 1, 1}), Error);
  CHECK(congruence_member_y(OrbifoldCase::TwoTwoInf, {1, 1, 7}));
}

TEST_CASE("folded G graphs: vertices, ranks, full covers") {
  const int vertices[] = {2, 2, 4, 6, 3};
  const int ranks[] = {3, 5, 5, 7, 4};
  for (std::size_t i = 0; i < std::size(kCases); ++i) {
    const auto c = kCases[i];
    CAPTURE(case_name(c));
    const auto g = fold(subgroup_G(c), case_data(c).x_rank);
    CHECK(g.is_full_cover());
    const auto sr = sheets_and_rank(g);
    CHECK(sr.sheets == vertices[i]);
    CHECK(sr.sheets == case_data(c).sheets);
    CHECK(sr.rank == ranks[i]);
    CHECK(sr.rank == static_cast<int>(subgroup_G(c).size()));
    for (const auto& gen : subgroup_G(c)) CHECK(graph_member(g, gen));
  }
  CHECK_THROWS_AS(subgroup_G(OrbifoldCase::InfInf), Error);
}

TEST_CASE("congruence agrees with folding on random words") {
  std::mt19937_64 rng(2024);
  for (auto c : kCases) {
    CAPTURE(case_name(c));
    const int r = case_data(c).x_rank;
    const auto g = fold(subgroup_G(c), r);
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
      const Word w = random_reduced_word(rng, r, 12);
      const bool cong = congruence_member(c, abelianize(w, r));
      if (cong != graph_member(g, w)) ++disagreements;
      CHECK(cong == by_hand(c, w));
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("folding is independent of generator order") {
  std::mt19937_64 rng(5);
  for (auto c : kCases) {
    auto gens = subgroup_H(c, 2);
    const auto base = fold(gens, case_data(c).x_rank + 2);
    for (int k = 0; k < 10; ++k) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(fold(gens, case_data(c).x_rank + 2) == base);
    }
    // Inverting generators does not change the subgroup.
    std::vector<Word> inverted;
    for (const auto& w : gens) inverted.push_back(w.inverse());
    CHECK(fold(inverted, case_data(c).x_rank + 2) == base);
  }
}

TEST_CASE("folded H graphs are l-sheeted covers of Y") {
  std::mt19937_64 rng(11);
  for (auto c : kCases) {
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(case_name(c));
      CAPTURE(n);
      const int rank = case_data(c).x_rank + n;
      const int l = case_data(c).sheets;
      const auto h = fold(subgroup_H(c, n), rank);
      const auto sr = sheets_and_rank(h);
      CHECK(sr.sheets == l);
      CHECK(sr.rank == l * (rank - 1) + 1);
      // H membership is the same congruence with puncture loops weightless.
      for (int i = 0; i < 200; ++i) {
        const Word w = random_reduced_word(rng, rank, 10);
        CHECK(graph_member(h, w) == congruence_member_y(c, abelianize(w, rank)));
      }
    }
  }
}

TEST_CASE("non-full graphs are rejected") {
  const auto g = fold({parse_word("a2", {2, 0})}, 2);
  CHECK_FALSE(g.is_full_cover());
  CHECK_THROWS_AS(sheets_and_rank(g), Error);
  CHECK(fold({}, 2).vertex_count() == 1);
  CHECK_THROWS_AS(fold({Word({3})}, 2), Error);
}

TEST_CASE("dot export") {
  const auto c = OrbifoldCase::TwoFourFour;
  std::ostringstream os;
  write_dot(os, fold(subgroup_G(c), 2), x_alphabet(c), "G_244");
  const std::string dot = os.str();
  CHECK(dot.rfind("digraph G_244 {", 0) == 0);
  CHECK(dot.find("v0 [shape=doublecircle]") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 8);
}

TEST_CASE("lift check accepts sampled legal assignments") {
  std::mt19937_64 rng(99);
  for (auto c : kCases) {
    CAPTURE(case_name(c));
    const int r = case_data(c).x_rank;
    const auto targets = legal_puncture_targets(c);
    for (int s = 0; s < 500; ++s) {
      const int n = static_cast<int>(rng() % 5);
      Assignment a;
      for (int g = 0; g < r; ++g) {
        const auto legal = legal_regular_images(c, g);
        a.push_back(legal[rng() % legal.size()]);
      }
      PunctureTargets pt;
      for (int i = 0; i < n; ++i) {
        pt.push_back(targets[rng() % targets.size()]);
        a.push_back(puncture_image(c, pt.back()));
      }
      CHECK(lift_check(c, a, pt));

      // Monotone: one more legal puncture keeps the verdict.
      Assignment more = a;
      PunctureTargets more_pt = pt;
      more_pt.push_back(targets[rng() % targets.size()]);
      more.push_back(puncture_image(c, more_pt.back()));
      CHECK(lift_check(c, more, more_pt));
    }
  }
}

TEST_CASE("mutated puncture images break the criterion") {
  std::mt19937_64 rng(3);
  for (auto c : kCases) {
    CAPTURE(case_name(c));
    const int r = case_data(c).x_rank;
    const auto targets = legal_puncture_targets(c);
    int flipped = 0;
    const int samples = 500;
    for (int s = 0; s < samples; ++s) {
      const int n = 1 + static_cast<int>(rng() % 4);
      Assignment a;
      for (int g = 0; g < r; ++g) {
        const auto legal = legal_regular_images(c, g);
        a.push_back(legal[rng() % legal.size()]);
      }
      for (int i = 0; i < n; ++i) {
        a.push_back(puncture_image(c, targets[rng() % targets.size()]));
      }
      REQUIRE(lift_criterion(c, a));
      auto& victim = a[static_cast<std::size_t>(r) + rng() % static_cast<unsigned>(n)];
      victim[rng() % victim.size()] += (rng() & 1) ? 1 : -1;
      if (!lift_criterion(c, a)) ++flipped;
    }
    CHECK(flipped * 100 >= 95 * samples);
  }
}

TEST_CASE("lift check rejects illegal assignments") {
  const auto c = OrbifoldCase::TwoFourFour;
  CHECK_THROWS_AS(lift_check(c, {{1, 0}}, {}), Error);
  CHECK_THROWS_AS(lift_check(c, {{1, 0}, {0, 2}}, {}), Error);
  CHECK_THROWS_AS(lift_check(c, {{1, 0}, {0, 1}, {4, 0}}, {3}), Error);
  CHECK_THROWS_AS(lift_check(c, {{1, 0}, {0, 1}, {3, 0}}, {0}), Error);
  CHECK(lift_check(c, {{0, 1}, {1, 0}, {-2, -2}}, {2}));
  CHECK_THROWS_AS(legal_regular_images(OrbifoldCase::InfInf, 0), Error);
  // Swapping the two weight-2 punctures of (2,2,inf) with a sign still lifts.
  CHECK(lift_check(OrbifoldCase::TwoTwoInf, {{-1, 0}, {0, 1}, {0, 2}}, {1}));
  // (2,3,6): the weight-2 generator cannot go to the weight-3 puncture.
  CHECK_THROWS_AS(lift_check(OrbifoldCase::TwoThreeSix, {{0, 1}, {0, 1}}, {}), Error);
  CHECK(lift_check(OrbifoldCase::TwoThreeSix, {{-3, -3}, {-2, -2}}, {}));
}

TEST_CASE("the literal (ab)^3 family for (3,3,3) is not the congruence subgroup") {
  const Alphabet x{2, 0};
  std::vector<Word> literal;
  for (const char* t : {"a3", "b3", "(ab)3", "aba"}) literal.push_back(parse_word(t, x));
  const auto g = fold(literal, 2);
  CHECK_FALSE(g.is_full_cover());
  // aB satisfies m+n = 0 mod 3 but is not reached by that family.
  CHECK(congruence_member(OrbifoldCase::ThreeThreeThree, {1, -1}));
  CHECK_FALSE(graph_member(g, parse_word("aB", x)));
  CHECK(graph_member(fold(subgroup_G(OrbifoldCase::ThreeThreeThree), 2), parse_word("(ab)3", x)));
}
