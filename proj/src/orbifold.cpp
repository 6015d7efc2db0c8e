#include "orbikit/orbifold.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "orbikit/error.hpp"

namespace orbikit {

Weight Weight::times(std::uint64_t factor) const {
  if (infinite_) return *this;
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(value_, factor, &out)) {
    throw Error(ErrorCode::Overflow, "ramification weight overflow");
  }
  return finite(out);
}

Weight Weight::lcm(const Weight& other) const {
  if (infinite_ || other.infinite_) return infinity();
  const std::uint64_t g = std::gcd(value_, other.value_);
  return finite(value_ / g).times(other.value_);
}

bool Weight::divides(const Weight& other) const {
  if (other.infinite_) return true;
  if (infinite_) return false;
  return other.value_ % value_ == 0;
}

std::string Weight::str() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

const char* to_string(OrbifoldKind kind) {
  switch (kind) {
    case OrbifoldKind::Spherical: return "Spherical";
    case OrbifoldKind::NonHyperbolic: return "NonHyperbolic";
    case OrbifoldKind::Hyperbolic: return "Hyperbolic";
  }
  return "";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Exceptional: return "EXCEPTIONAL";
    case Verdict::RateCertified: return "RATE CERTIFIED";
    case Verdict::OutOfScope: return "OUT_OF_SCOPE";
  }
  return "";
}

RamificationMap ramification_function(const CriticalPortrait& portrait) {
  const std::size_t n = portrait.size();
  const PointSet post = postcritical_set(portrait);
  std::vector<char> in_post(n, 0);
  for (const auto& id : post) in_post[portrait.index_of(id)] = 1;

  // Cycles of the functional graph. cycle_id[x] >= 0 iff x is periodic.
  std::vector<int> cycle_id(n, -1);
  std::vector<std::uint64_t> cycle_degree;
  {
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    for (std::size_t start = 0; start < n; ++start) {
      if (state[start]) continue;
      std::vector<std::size_t> path;
      std::size_t x = start;
      while (state[x] == 0) {
        state[x] = 1;
        path.push_back(x);
        x = portrait.image_index(x);
      }
      if (state[x] == 1) {
        const int id = static_cast<int>(cycle_degree.size());
        std::uint64_t composed = 1;
        std::size_t y = x;
        do {
          cycle_id[y] = id;
          composed *= static_cast<std::uint64_t>(portrait.point(y).local_degree);
          if (composed > 1) composed = 2;  // only "> 1" matters
          y = portrait.image_index(y);
        } while (y != x);
        cycle_degree.push_back(composed);
      }
      for (auto p : path) state[p] = 2;
    }
  }

  std::vector<char> infinite(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (cycle_id[x] >= 0 && cycle_degree[cycle_id[x]] > 1) infinite[x] = 1;
  }

  // Components of the finite postcritical part: a non-critical cycle is one
  // component (all members share a value), every other point its own.
  std::vector<std::size_t> comp(n);
  for (std::size_t x = 0; x < n; ++x) {
    comp[x] = cycle_id[x] >= 0 ? n + static_cast<std::size_t>(cycle_id[x]) : x;
  }
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t x = 0; x < n; ++x) {
    if (in_post[x] && !infinite[x]) members[comp[x]].push_back(x);
  }

  std::map<std::size_t, Weight> memo;
  std::function<Weight(std::size_t)> value = [&](std::size_t c) -> Weight {
    if (auto it = memo.find(c); it != memo.end()) return it->second;
    Weight w = Weight::finite(1);
    for (auto x : members.at(c)) {
      for (auto y : portrait.preimages(x)) {
        if (in_post[y] && comp[y] == c) continue;  // deg-1 cycle edge
        const auto deg = static_cast<std::uint64_t>(portrait.point(y).local_degree);
        Weight from = Weight::finite(1);
        if (in_post[y]) {
          if (infinite[y]) {
            throw Error(ErrorCode::InternalInconsistency,
                        "finite point with an infinite preimage");
          }
          from = value(comp[y]);
        }
        w = w.lcm(from.times(deg));
      }
    }
    memo.emplace(c, w);
    return w;
  };

  RamificationMap nu;
  for (std::size_t x = 0; x < n; ++x) {
    if (!in_post[x]) continue;
    Weight w = infinite[x] ? Weight::infinity() : value(comp[x]);
    if (!w.is_infinite() && w.value() < 2) {
      throw Error(ErrorCode::InternalInconsistency,
                  "postcritical point '" + portrait.point(x).id + "' has weight 1");
    }
    nu.values.emplace(portrait.point(x).id, w);
  }
  return nu;
}

Signature signature_of(const RamificationMap& nu) {
  Signature sig;
  for (const auto& [id, w] : nu.values) sig.push_back(w);
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::string signature_string(const Signature& sig) {
  std::string out = "(";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out += ",";
    out += sig[i].is_infinite() ? "∞" : std::to_string(sig[i].value());
  }
  return out + ")";
}

Rational euler_characteristic(const Signature& sig) {
  Rational chi(2);
  for (const auto& w : sig) {
    if (w.is_infinite()) {
      chi -= 1;
    } else {
      chi -= Rational(1) - Rational(1, static_cast<std::int64_t>(w.value()));
    }
  }
  return chi;
}

std::optional<OrbifoldCase> match_case(const Signature& sig) {
  const auto inf = Weight::infinity();
  auto f = [](std::uint64_t v) { return Weight::finite(v); };
  const std::pair<OrbifoldCase, Signature> table[] = {
      {OrbifoldCase::InfInf, {inf, inf}},
      {OrbifoldCase::TwoTwoInf, {f(2), f(2), inf}},
      {OrbifoldCase::TwoFourFour, {f(2), f(4), f(4)}},
      {OrbifoldCase::TwoThreeSix, {f(2), f(3), f(6)}},
      {OrbifoldCase::ThreeThreeThree, {f(3), f(3), f(3)}},
      {OrbifoldCase::TwoTwoTwoTwo, {f(2), f(2), f(2), f(2)}},
  };
  for (const auto& [c, s] : table) {
    if (s == sig) return c;
  }
  return std::nullopt;
}

OrbifoldClass classify_signature(const Signature& sig) {
  OrbifoldClass out;
  out.signature = sig;
  out.chi = euler_characteristic(sig);
  if (out.chi > 0) {
    out.kind = OrbifoldKind::Spherical;
  } else if (out.chi < 0) {
    out.kind = OrbifoldKind::Hyperbolic;
  } else {
    out.kind = OrbifoldKind::NonHyperbolic;
    out.orbifold_case = match_case(sig);
    if (!out.orbifold_case) {
      throw Error(ErrorCode::InternalInconsistency,
                  "chi = 0 but signature " + signature_string(sig) +
                      " is not one of the six Euclidean signatures");
    }
  }
  return out;
}

OrbifoldClass classify(const CriticalPortrait& portrait) {
  return classify_signature(signature_of(ramification_function(portrait)));
}

bool check_exactness(const CriticalPortrait& portrait,
                     const RamificationMap& nu) {
  for (std::size_t p = 0; p < portrait.size(); ++p) {
    const auto& pt = portrait.point(p);
    const Weight lhs =
        nu.at(pt.id).times(static_cast<std::uint64_t>(pt.local_degree));
    const Weight rhs = nu.at(portrait.point(portrait.image_index(p)).id);
    if (lhs != rhs) return false;
  }
  for (const auto& [id, w] : nu.values) {
    if (portrait.fiber_sum(portrait.index_of(id)) < portrait.degree()) {
      return false;
    }
  }
  return true;
}

bool detect_exceptional(const CriticalPortrait& portrait) {
  const PointSet crit = critical_set(portrait);
  if (crit.size() != 2) return false;
  for (const auto& id : crit) {
    const auto i = portrait.index_of(id);
    if (portrait.image_index(i) != i) return false;
  }
  return is_totally_invariant(portrait, crit);
}

std::string mechanism_for(OrbifoldCase c) {
  switch (c) {
    case OrbifoldCase::InfInf:
      return "end-exchange annulus theorem";
    case OrbifoldCase::TwoTwoInf:
      return "annulus two-fold lift";
    default:
      return "torus lift certificate (" + std::to_string(case_data(c).sheets) +
             "-sheeted, toruslift)";
  }
}

DichotomyReport dichotomy_report(const CriticalPortrait& portrait) {
  DichotomyReport r;
  r.orbifold = classify(portrait);
  if (r.orbifold.kind != OrbifoldKind::NonHyperbolic) {
    throw Error(ErrorCode::NotNonHyperbolic,
                std::string("orbifold is ") + to_string(r.orbifold.kind));
  }
  if (detect_exceptional(portrait)) {
    r.verdict = Verdict::Exceptional;
  } else {
    r.verdict = Verdict::RateCertified;
    r.mechanism = mechanism_for(*r.orbifold.orbifold_case);
  }
  return r;
}

}  // namespace orbikit
