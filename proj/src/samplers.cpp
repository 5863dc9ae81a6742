#include "pcetd/samplers.hpp"

#include "pcetd/errors.hpp"
#include "pcetd/legendre.hpp"

#include <random>

namespace pcetd {

SamplerKind sampler_kind_from_string(const std::string& name) {
  if (name == "mc") return SamplerKind::MonteCarlo;
  if (name == "sobol") return SamplerKind::QmcSobol;
  if (name == "halton") return SamplerKind::QmcHalton;
  if (name == "gq") return SamplerKind::GaussQuadrature;
  throw InvalidArgument("unknown sampler kind: " + name);
}

const char* to_string(SamplerKind kind) {
  switch (kind) {
  case SamplerKind::MonteCarlo: return "mc";
  case SamplerKind::QmcSobol: return "sobol";
  case SamplerKind::QmcHalton: return "halton";
  case SamplerKind::GaussQuadrature: return "gq";
  }
  return "?";
}

double radical_inverse_base2(std::uint64_t i) {
  double v = 0.0, base = 0.5;
  while (i) {
    if (i & 1u) v += base;
    base *= 0.5;
    i >>= 1u;
  }
  return v;
}

SampleSet make_samples(SamplerKind kind, int q, double a, double b,
                       std::uint64_t seed) {
  if (q < 1) throw InvalidArgument("make_samples: q must be >= 1");
  if (!(b > a)) throw InvalidArgument("make_samples: requires b > a");
  SampleSet set;
  set.kind = kind;
  set.seed = seed;
  switch (kind) {
  case SamplerKind::MonteCarlo: {
    // 53-bit mantissa draws from a seeded engine; portable and reproducible.
    std::mt19937_64 rng(seed);
    set.points.resize(q);
    for (int j = 0; j < q; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      set.points[j] = a + (b - a) * u;
    }
    set.weights.assign(q, 1.0 / q);
    break;
  }
  case SamplerKind::QmcSobol:
  case SamplerKind::QmcHalton: {
    // Index starts at 1 so the sequence never lands on the endpoint a.
    set.points.resize(q);
    for (int j = 0; j < q; ++j)
      set.points[j] = a + (b - a) * radical_inverse_base2(j + 1);
    set.weights.assign(q, 1.0 / q);
    break;
  }
  case SamplerKind::GaussQuadrature: {
    const auto rule = gauss_legendre(q, a, b);
    set.points = rule.nodes;
    set.weights = rule.weights;
    break;
  }
  }
  return set;
}

} // namespace pcetd
