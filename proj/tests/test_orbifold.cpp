#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "orbikit/error.hpp"
#include "orbikit/orbifold.hpp"

using namespace orbikit;

namespace {

const char* kAllFixtures[] = {"z2",       "z2_minus_2", "lattes_2222",     "case_244",
                              "case_236", "case_333",   "hyperbolic_five", "z2_plus_i",
                              "swapped_ends"};

Weight W(std::uint64_t v) { return Weight::finite(v); }
const Weight kInf = Weight::infinity();

oracle::Nu as_oracle(const CriticalPortrait& p, const RamificationMap& nu) {
  oracle::Nu out;
  for (const auto& pt : p.points()) {
    const Weight w = nu.at(pt.id);
    out[pt.id] = w.is_infinite() ? std::nullopt : std::optional<std::uint64_t>(w.value());
  }
  return out;
}

}  // namespace

TEST_CASE("weight arithmetic") {
  CHECK(W(3).times(2) == W(6));
  CHECK(kInf.times(2) == kInf);
  CHECK(W(4).lcm(W(6)) == W(12));
  CHECK(W(4).lcm(kInf) == kInf);
  CHECK(W(2).divides(W(6)));
  CHECK_FALSE(W(4).divides(W(6)));
  CHECK(W(7).divides(kInf));
  CHECK(kInf.divides(kInf));
  CHECK_FALSE(kInf.divides(W(8)));
  CHECK(W(2) < W(3));
  CHECK(W(1000) < kInf);
  CHECK(kInf.str() == "inf");
  CHECK_THROWS_AS(W(std::uint64_t{1} << 63).times(4), Error);
}

TEST_CASE("ramification examples") {
  const auto z2 = ramification_function(oracle::load("z2"));
  CHECK(z2.at("p") == kInf);
  CHECK(z2.at("q") == kInf);

  const auto q = ramification_function(oracle::load("z2_minus_2"));
  CHECK(q.at("m2") == W(2));
  CHECK(q.at("p2") == W(2));
  CHECK(q.at("cinf") == kInf);
  CHECK(q.at("c0") == W(1));

  const auto lattes = oracle::load("lattes_2222");
  const auto nu = ramification_function(lattes);
  for (const auto& id : postcritical_set(lattes)) CHECK(nu.at(id) == W(2));

  const auto h = ramification_function(oracle::load("case_236"));
  CHECK(h.at("p") == W(2));
  CHECK(h.at("q") == W(3));
  CHECK(h.at("r") == W(6));
}

TEST_CASE("ramification matches the sweep oracle and is minimal") {
  for (const char* name : kAllFixtures) {
    CAPTURE(name);
    const auto p = oracle::load(name);
    const auto nu = ramification_function(p);
    const auto mine = as_oracle(p, nu);
    CHECK(mine == oracle::sweep_nu(p));
    CHECK(oracle::nu_valid(p, mine));
    CHECK(oracle::smaller_valid_divisor_maps(p, mine, 64).empty());
    // Divisibility stated through the library's own convention.
    for (std::size_t y = 0; y < p.size(); ++y) {
      const auto& x = p.point(p.image_index(y)).id;
      CHECK(nu.at(p.point(y).id)
                .times(static_cast<std::uint64_t>(p.point(y).local_degree))
                .divides(nu.at(x)));
    }
  }
}

TEST_CASE("z^2-2 against the bounded exhaustive search") {
  const auto p = oracle::load("z2_minus_2");
  const auto mine = as_oracle(p, ramification_function(p));
  CHECK(oracle::exhaustive_minimal_nu(p, mine, 16) == mine);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic({kInf, kInf}) == Rational(0));
  CHECK(euler_characteristic({W(2), W(4), W(4)}) == Rational(0));
  CHECK(euler_characteristic({W(2), W(3), W(7)}) == Rational(-1, 42));
  CHECK(euler_characteristic({W(2), W(2), W(2)}) == Rational(1, 2));
  CHECK(euler_characteristic({}) == Rational(2));
}

TEST_CASE("the six zero-characteristic signatures") {
  const std::vector<std::pair<Signature, OrbifoldCase>> six = {
      {{kInf, kInf}, OrbifoldCase::InfInf},
      {{W(2), W(2), kInf}, OrbifoldCase::TwoTwoInf},
      {{W(2), W(2), W(2), W(2)}, OrbifoldCase::TwoTwoTwoTwo},
      {{W(2), W(4), W(4)}, OrbifoldCase::TwoFourFour},
      {{W(2), W(3), W(6)}, OrbifoldCase::TwoThreeSix},
      {{W(3), W(3), W(3)}, OrbifoldCase::ThreeThreeThree}};
  for (const auto& [sig, c] : six) {
    CAPTURE(signature_string(sig));
    const auto cls = classify_signature(sig);
    CHECK(cls.kind == OrbifoldKind::NonHyperbolic);
    CHECK(cls.orbifold_case == c);
    CHECK(cls.chi == Rational(0));
  }
  // Every signature with entries in {2..12, inf} and length <= 5 that has
  // chi = 0 is one of the six.
  const std::vector<Weight> alphabet = {W(2), W(3), W(4),  W(5),  W(6),  W(7), W(8),
                                        W(9), W(10), W(11), W(12), kInf};
  int zero = 0;
  std::function<void(Signature, std::size_t)> rec = [&](Signature s, std::size_t from) {
    if (!s.empty() && euler_characteristic(s) == Rational(0)) {
      ++zero;
      CHECK(match_case(s).has_value());
    }
    if (s.size() == 5) return;
    for (std::size_t k = from; k < alphabet.size(); ++k) {
      s.push_back(alphabet[k]);
      rec(s, k);
      s.pop_back();
    }
  };
  rec({}, 0);
  CHECK(zero == 6);

  const auto sph = classify_signature({W(2), W(2), W(2)});
  CHECK(sph.kind == OrbifoldKind::Spherical);
  CHECK_FALSE(sph.orbifold_case.has_value());
  CHECK(classify_signature({W(2), W(3), W(7)}).kind == OrbifoldKind::Hyperbolic);
}

TEST_CASE("classification and exactness agree on the corpus") {
  for (const char* name : kAllFixtures) {
    CAPTURE(name);
    const auto p = oracle::load(name);
    const auto cls = classify(p);
    const bool zero = cls.chi == Rational(0);
    CHECK(zero == (cls.kind == OrbifoldKind::NonHyperbolic));
    CHECK(zero == match_case(cls.signature).has_value());
    CHECK(cls.orbifold_case.has_value() == zero);
    CHECK(check_exactness(p, ramification_function(p)) == zero);
    if (detect_exceptional(p)) CHECK(cls.orbifold_case == OrbifoldCase::InfInf);
  }
  CHECK(classify(oracle::load("z2")).orbifold_case == OrbifoldCase::InfInf);
  CHECK(classify(oracle::load("z2_minus_2")).orbifold_case == OrbifoldCase::TwoTwoInf);
  CHECK(classify(oracle::load("case_333")).orbifold_case == OrbifoldCase::ThreeThreeThree);
  CHECK(classify(oracle::load("hyperbolic_five")).kind == OrbifoldKind::Hyperbolic);
  CHECK(classify(oracle::load("hyperbolic_five")).chi == Rational(-1, 2));
  CHECK(signature_string(classify(oracle::load("z2_minus_2")).signature) == "(2,2,∞)");
}

TEST_CASE("exceptional detection and dichotomy") {
  CHECK(detect_exceptional(oracle::load("z2")));
  CHECK_FALSE(detect_exceptional(oracle::load("z2_minus_2")));
  CHECK_FALSE(detect_exceptional(oracle::load("swapped_ends")));

  CHECK(dichotomy_report(oracle::load("z2")).verdict == Verdict::Exceptional);
  CHECK(dichotomy_report(oracle::load("z2")).mechanism.empty());
  const auto q = dichotomy_report(oracle::load("z2_minus_2"));
  CHECK(q.verdict == Verdict::RateCertified);
  CHECK(q.mechanism == "annulus two-fold lift");
  const auto sw = dichotomy_report(oracle::load("swapped_ends"));
  CHECK(sw.verdict == Verdict::RateCertified);
  CHECK(sw.mechanism == "end-exchange annulus theorem");
  const auto l = dichotomy_report(oracle::load("lattes_2222"));
  CHECK(l.verdict == Verdict::RateCertified);
  CHECK(l.mechanism.find("torus lift") != std::string::npos);

  try {
    dichotomy_report(oracle::load("hyperbolic_five"));
    FAIL("expected NotNonHyperbolic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNonHyperbolic);
  }
  CHECK(std::string(to_string(Verdict::OutOfScope)) == "OUT_OF_SCOPE");
}

TEST_CASE("ramification agrees with the sweep on random portraits") {
  // Random forward-closed portraits with a valid branch budget. Validation
  // filters the ones that break the fiber bound.
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 300; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const int n = 2 + static_cast<int>(rng() % 5);
    PortraitData raw{d, {}};
    for (int i = 0; i < n; ++i) {
      raw.points.push_back({"x" + std::to_string(i), 1,
                            "x" + std::to_string(rng() % static_cast<unsigned>(n))});
    }
    int budget = 2 * d - 2;
    while (budget > 0) {
      auto& pt = raw.points[rng() % static_cast<unsigned>(n)];
      if (pt.local_degree < d) {
        ++pt.local_degree;
        --budget;
      }
    }
    CriticalPortrait p = [&] {
      try {
        return validate_portrait(raw);
      } catch (const Error&) {
        return validate_portrait({2, {{"p", 2, "p"}, {"q", 2, "q"}}});
      }
    }();
    if (p.size() == 2 && p.point(0).id == "p") continue;
    ++checked;
    const auto nu = ramification_function(p);
    CHECK(as_oracle(p, nu) == oracle::sweep_nu(p));
    const auto cls = classify(p);
    CHECK(cls.kind != OrbifoldKind::Spherical);
    CHECK(check_exactness(p, nu) == (cls.kind == OrbifoldKind::NonHyperbolic));
  }
  CHECK(checked >= 100);
}
