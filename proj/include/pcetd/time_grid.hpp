#pragma once

#include "pcetd/errors.hpp"

namespace pcetd {

/// Uniform time grid: M steps of size k = T/M over [0, T].
struct TimeGrid {
  double T;
  int M;

  TimeGrid(double final_time, int steps) : T(final_time), M(steps) {
    if (steps < 1) throw InvalidArgument("TimeGrid: M must be >= 1");
    if (!(final_time > 0.0)) throw InvalidArgument("TimeGrid: T must be > 0");
  }

  double k() const { return T / M; }
  double t(int n) const { return (n * T) / M; }
};

} // namespace pcetd
