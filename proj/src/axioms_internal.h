#ifndef BSPOLY_SRC_AXIOMS_INTERNAL_H_
#define BSPOLY_SRC_AXIOMS_INTERNAL_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "bspoly/core.h"
#include "bspoly/point_set.h"

namespace bspoly::internal {

// First u in supp(q - p) not covered by PhiB(p, q); with jump_system the
// two-step escape also counts as coverage.
std::optional<Coord> FirstUncovered(const PointSet& set, const IntPoint& p,
                                    const IntPoint& q, bool jump_system);

// Lattice points of the bounding box of the set, addressed by their rank in
// lexicographic order.
class BoxGrid {
 public:
  explicit BoxGrid(const PointSet& set);
  std::size_t size() const { return size_; }
  IntPoint At(std::size_t index) const;

 private:
  IntPoint lower_;
  std::vector<std::size_t> extent_;
  std::size_t size_ = 1;
};

}  // namespace bspoly::internal

#endif  // BSPOLY_SRC_AXIOMS_INTERNAL_H_
