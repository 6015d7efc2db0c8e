#pragma once

// Finite critical-portrait model of a degree-d branched self-cover of the
// sphere: a forward-closed list of marked points with local degrees and
// images. Unlisted points are implicitly regular.

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbikit {

struct MarkedPoint {
  std::string id;
  int local_degree = 1;
  std::string image;
};

// Unvalidated input, as read from JSON or built in code.
struct PortraitData {
  int degree = 0;
  std::vector<MarkedPoint> points;
};

using PointSet = std::set<std::string>;

class CriticalPortrait {
 public:
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<MarkedPoint>& points() const noexcept { return points_; }

  const MarkedPoint& point(std::size_t i) const { return points_.at(i); }
  // Index of the image of point i.
  std::size_t image_index(std::size_t i) const { return image_.at(i); }
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  // Throws UnknownPoint.
  std::size_t index_of(const std::string& id) const;

  // Listed preimages of point i.
  const std::vector<std::size_t>& preimages(std::size_t i) const {
    return preimages_.at(i);
  }
  // Sum of local degrees over listed preimages of point i.
  int fiber_sum(std::size_t i) const;

  bool is_critical(std::size_t i) const { return points_[i].local_degree > 1; }

  PortraitData data() const { return {degree_, points_}; }

 private:
  friend CriticalPortrait validate_portrait(const PortraitData& raw);
  CriticalPortrait() = default;

  int degree_ = 0;
  std::vector<MarkedPoint> points_;
  std::vector<std::size_t> image_;
  std::vector<std::vector<std::size_t>> preimages_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Checks degree, local degrees, forward closure, Riemann-Hurwitz and fiber
// bounds. Throws orbikit::Error on the first violation found.
CriticalPortrait validate_portrait(const PortraitData& raw);

// S_f: listed points with local degree > 1.
PointSet critical_set(const CriticalPortrait& portrait);

// P_f: union of the strict forward orbits of the critical points.
PointSet postcritical_set(const CriticalPortrait& portrait);

// True iff f(S) is contained in S and the full preimage of S is S.
// Throws UnknownPoint.
bool is_totally_invariant(const CriticalPortrait& portrait,
                          const PointSet& subset);

}  // namespace orbikit
