#include "pcetd/grid.hpp"

#include "pcetd/errors.hpp"

namespace pcetd {

PeriodicGrid::PeriodicGrid(int dim, int p) : dim_(dim), p_(p) {
  if (dim != 1 && dim != 2)
    throw InvalidArgument("PeriodicGrid: dim must be 1 or 2");
  if (p < 3) throw InvalidArgument("PeriodicGrid: p must be >= 3");
  nodes_.resize(p);
  for (int i = 0; i < p; ++i) nodes_[i] = -1.0 + 2.0 * i / p;
}

std::size_t PeriodicGrid::size() const {
  const auto n = static_cast<std::size_t>(p_);
  return dim_ == 1 ? n : n * n;
}

} // namespace pcetd
