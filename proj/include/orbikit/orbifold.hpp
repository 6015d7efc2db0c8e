#pragma once

// Ramification function, signature, orbifold Euler characteristic and the
// classification of Thurston-map portraits; detection of the exceptional
// (two fixed, totally invariant critical points) family.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "orbikit/cases.hpp"
#include "orbikit/portrait.hpp"

namespace orbikit {

using Rational = boost::rational<std::int64_t>;

// Element of N* u {inf}. Infinity is a distinguished state, not a large int.
class Weight {
 public:
  constexpr Weight() = default;
  static constexpr Weight finite(std::uint64_t v) { return Weight(false, v); }
  static constexpr Weight infinity() { return Weight(true, 0); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  // Only meaningful for finite weights.
  constexpr std::uint64_t value() const noexcept { return value_; }

  // n * inf = inf. Throws Overflow on finite overflow.
  Weight times(std::uint64_t factor) const;
  // lcm(w, inf) = inf.
  Weight lcm(const Weight& other) const;
  // True iff this divides other: inf | inf only, n | inf for all finite n.
  bool divides(const Weight& other) const;

  // Finite values in numeric order, infinity greatest.
  friend constexpr std::strong_ordering operator<=>(const Weight& a,
                                                    const Weight& b) {
    if (a.infinite_ != b.infinite_) {
      return a.infinite_ ? std::strong_ordering::greater
                         : std::strong_ordering::less;
    }
    if (a.infinite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const Weight& a, const Weight& b) {
    return (a <=> b) == 0;
  }

  std::string str() const;

 private:
  constexpr Weight(bool inf, std::uint64_t v) : infinite_(inf), value_(v) {}
  bool infinite_ = false;
  std::uint64_t value_ = 1;
};

// nu restricted to P_f; every other point has weight 1.
struct RamificationMap {
  std::map<std::string, Weight> values;

  Weight at(const std::string& id) const {
    auto it = values.find(id);
    return it == values.end() ? Weight::finite(1) : it->second;
  }
};

// Nondecreasing tuple, infinity last.
using Signature = std::vector<Weight>;

enum class OrbifoldKind { Spherical, NonHyperbolic, Hyperbolic };

struct OrbifoldClass {
  OrbifoldKind kind = OrbifoldKind::Hyperbolic;
  std::optional<OrbifoldCase> orbifold_case;  // set iff NonHyperbolic
  Rational chi;
  Signature signature;
};

const char* to_string(OrbifoldKind kind);

// Minimal nu. Points on a critical cycle of the portrait's functional graph
// get infinity; the remaining values are lcm-closed over the acyclic
// condensation of the preimage relation.
RamificationMap ramification_function(const CriticalPortrait& portrait);

Signature signature_of(const RamificationMap& nu);
std::string signature_string(const Signature& sig);

// chi = 2 - sum(1 - 1/nu); an infinite entry contributes 1.
Rational euler_characteristic(const Signature& sig);

// The non-hyperbolic case a signature names, if any.
std::optional<OrbifoldCase> match_case(const Signature& sig);

// Classification from the signature alone. Throws InternalInconsistency if
// chi == 0 but the signature is not one of the six cases.
OrbifoldClass classify_signature(const Signature& sig);
OrbifoldClass classify(const CriticalPortrait& portrait);

// deg_p f * nu(p) == nu(f(p)) at every point. Unlisted preimages of a
// postcritical point (fiber sum < d) are regular with nu = 1 and therefore
// break equality.
bool check_exactness(const CriticalPortrait& portrait,
                     const RamificationMap& nu);

// S_f = {p, q}, both fixed, and {p, q} totally invariant.
bool detect_exceptional(const CriticalPortrait& portrait);

enum class Verdict { Exceptional, RateCertified, OutOfScope };
const char* to_string(Verdict v);

struct DichotomyReport {
  OrbifoldClass orbifold;
  Verdict verdict = Verdict::OutOfScope;
  std::string mechanism;  // empty unless RateCertified
};

// Throws NotNonHyperbolic.
DichotomyReport dichotomy_report(const CriticalPortrait& portrait);

std::string mechanism_for(OrbifoldCase c);

}  // namespace orbikit
