#pragma once

//==============================================================================
// Parameter-space point sets for non-intrusive PCE: seeded pseudo-random
// Monte Carlo, base-2 radical-inverse low-discrepancy sequences (the
// one-dimensional Sobol and Halton constructions coincide there), and
// Gauss-Legendre nodes. Weights always sum to one.
//==============================================================================

#include <cstdint>
#include <string>
#include <vector>

namespace pcetd {

enum class SamplerKind { MonteCarlo, QmcSobol, QmcHalton, GaussQuadrature };

SamplerKind sampler_kind_from_string(const std::string& name);
const char* to_string(SamplerKind kind);

struct SampleSet {
  SamplerKind kind;
  std::vector<double> points;  // all in [a,b]
  std::vector<double> weights; // sum to 1; 1/q for MC/QMC
  std::uint64_t seed = 0;      // meaningful for MC only
};

/// Base-2 radical inverse (van der Corput) of index i >= 1.
double radical_inverse_base2(std::uint64_t i);

SampleSet make_samples(SamplerKind kind, int q, double a, double b,
                       std::uint64_t seed = 0);

} // namespace pcetd
