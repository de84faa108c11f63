#ifndef BSPOLY_POINT_SET_H_
#define BSPOLY_POINT_SET_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "bspoly/core.h"

namespace bspoly {

// A nonempty finite set of integer points of a common dimension, kept
// deduplicated and in lexicographic order.
class PointSet {
 public:
  PointSet(std::size_t dim, std::vector<IntPoint> points);
  explicit PointSet(std::vector<IntPoint> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<IntPoint>& points() const { return points_; }
  const IntPoint& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const IntPoint& p) const;
  std::optional<std::size_t> index_of(const IntPoint& p) const;

  // Componentwise minimum and maximum over the members.
  IntPoint lower_corner() const;
  IntPoint upper_corner() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_;
  std::vector<IntPoint> points_;
};

// Sorts and deduplicates in place.
void Canonicalize(std::vector<IntPoint>& points);

}  // namespace bspoly

#endif  // BSPOLY_POINT_SET_H_
