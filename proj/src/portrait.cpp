#include "orbikit/portrait.hpp"

#include <vector>

#include "orbikit/error.hpp"

namespace orbikit {

std::size_t CriticalPortrait::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownPoint, "point '" + id + "' is not listed");
  }
  return it->second;
}

int CriticalPortrait::fiber_sum(std::size_t i) const {
  int sum = 0;
  for (auto y : preimages_.at(i)) sum += points_[y].local_degree;
  return sum;
}

CriticalPortrait validate_portrait(const PortraitData& raw) {
  if (raw.degree < 2) {
    throw Error(ErrorCode::InvalidDegree,
                "degree must be >= 2, got " + std::to_string(raw.degree));
  }
  CriticalPortrait p;
  p.degree_ = raw.degree;
  p.points_ = raw.points;

  const std::size_t n = p.points_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& pt = p.points_[i];
    if (pt.id.empty()) {
      throw Error(ErrorCode::UnknownPoint, "empty point identifier");
    }
    if (!p.index_.emplace(pt.id, i).second) {
      throw Error(ErrorCode::DuplicatePoint, "point '" + pt.id + "' listed twice");
    }
    if (pt.local_degree < 1 || pt.local_degree > raw.degree) {
      throw Error(ErrorCode::InvalidLocalDegree,
                  "point '" + pt.id + "' has local degree " +
                      std::to_string(pt.local_degree));
    }
  }

  // Unlisted images. Classified by whether a critical orbit runs into them.
  std::vector<char> dangling(n, 0);
  bool any_dangling = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.index_.count(p.points_[i].image)) {
      dangling[i] = 1;
      any_dangling = true;
    }
  }
  if (any_dangling) {
    for (std::size_t c = 0; c < n; ++c) {
      if (p.points_[c].local_degree == 1) continue;
      std::vector<char> seen(n, 0);
      std::size_t x = c;
      while (!seen[x]) {
        seen[x] = 1;
        if (dangling[x]) {
          throw Error(ErrorCode::NotForwardClosed,
                      "forward orbit of critical point '" + p.points_[c].id +
                          "' leaves the portrait at '" + p.points_[x].image + "'");
        }
        x = p.index_.at(p.points_[x].image);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (dangling[i]) {
        throw Error(ErrorCode::DanglingImage,
                    "image '" + p.points_[i].image + "' of '" + p.points_[i].id +
                        "' is not listed");
      }
    }
  }

  p.image_.resize(n);
  p.preimages_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    p.image_[i] = p.index_.at(p.points_[i].image);
    p.preimages_[p.image_[i]].push_back(i);
  }

  int excess = 0;
  for (const auto& pt : p.points_) excess += pt.local_degree - 1;
  if (excess != 2 * raw.degree - 2) {
    throw Error(ErrorCode::RiemannHurwitzViolation,
                "sum of (deg - 1) over critical points is " + std::to_string(excess) +
                    ", expected 2d - 2 = " + std::to_string(2 * raw.degree - 2));
  }

  for (std::size_t i = 0; i < n; ++i) {
    int sum = p.fiber_sum(i);
    if (sum > raw.degree) {
      throw Error(ErrorCode::FiberOverflow,
                  "fiber over '" + p.points_[i].id + "' has degree sum " +
                      std::to_string(sum) + " > d = " + std::to_string(raw.degree));
    }
  }
  return p;
}

PointSet critical_set(const CriticalPortrait& portrait) {
  PointSet out;
  for (const auto& pt : portrait.points()) {
    if (pt.local_degree > 1) out.insert(pt.id);
  }
  return out;
}

PointSet postcritical_set(const CriticalPortrait& portrait) {
  const std::size_t n = portrait.size();
  std::vector<char> in_post(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (!portrait.is_critical(c)) continue;
    std::size_t x = portrait.image_index(c);
    while (!in_post[x]) {
      in_post[x] = 1;
      x = portrait.image_index(x);
    }
  }
  PointSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_post[i]) out.insert(portrait.point(i).id);
  }
  return out;
}

bool is_totally_invariant(const CriticalPortrait& portrait,
                          const PointSet& subset) {
  std::vector<char> member(portrait.size(), 0);
  for (const auto& id : subset) member[portrait.index_of(id)] = 1;

  for (std::size_t x = 0; x < portrait.size(); ++x) {
    const bool maps_in = member[portrait.image_index(x)] != 0;
    if (member[x] && !maps_in) return false;
    if (!member[x] && maps_in) return false;
  }
  for (std::size_t y = 0; y < portrait.size(); ++y) {
    if (member[y] && portrait.fiber_sum(y) != portrait.degree()) return false;
  }
  return true;
}

}  // namespace orbikit
