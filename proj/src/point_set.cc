#include "bspoly/point_set.h"

#include <algorithm>
#include <stdexcept>

#include "bspoly/errors.h"

namespace bspoly {

void Canonicalize(std::vector<IntPoint>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

PointSet::PointSet(std::size_t dim, std::vector<IntPoint> points)
    : dim_(dim), points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("point set must be nonempty");
  if (dim_ == 0) throw std::invalid_argument("dimension must be positive");
  for (const auto& p : points_) RequireSameDim(dim_, p.dim());
  Canonicalize(points_);
}

PointSet::PointSet(std::vector<IntPoint> points)
    : PointSet(points.empty() ? 0 : points.front().dim(), std::move(points)) {}

bool PointSet::contains(const IntPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::optional<std::size_t> PointSet::index_of(const IntPoint& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

IntPoint PointSet::lower_corner() const {
  IntPoint lo = points_.front();
  for (const auto& p : points_) {
    for (Coord u = 0; u < dim_; ++u) {
      if (p[u] < lo[u]) lo[u] = p[u];
    }
  }
  return lo;
}

IntPoint PointSet::upper_corner() const {
  IntPoint hi = points_.front();
  for (const auto& p : points_) {
    for (Coord u = 0; u < dim_; ++u) {
      if (p[u] > hi[u]) hi[u] = p[u];
    }
  }
  return hi;
}

}  // namespace bspoly
