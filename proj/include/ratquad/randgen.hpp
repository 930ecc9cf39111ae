#pragma once

#include <cstdint>
#include <random>

#include "ratquad/ratfun.hpp"

namespace ratquad {

/// Seeded random source for the verification suites. Every instance draws
/// from its own engine keyed by (base seed, stream id), so suites are
/// reproducible regardless of scheduling.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  static Rng stream(uint64_t base_seed, uint64_t stream_id) {
    return Rng(base_seed * 0x9E3779B97F4A7C15ull + stream_id * 0xBF58476D1CE4E5B9ull + 1ull);
  }

  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(eng_);
  }
  int uniform_int(int a, int b) { return std::uniform_int_distribution<int>(a, b)(eng_); }
  bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }
  Complex box(double half) { return {uniform(-half, half), uniform(-half, half)}; }

 private:
  std::mt19937_64 eng_;
};

struct RandomSpec {
  int max_degree = 6;
  int max_mult = 3;
  double min_contour_dist = 0.05;
  bool require_proper = false;  // forced anyway for axis/semiaxis domains
  int min_gap = 1;              // numerator degree <= pole degree - min_gap when proper
};

/// Random rational function valid for the given domain's engines: poles keep
/// min_contour_dist from the contour, total degree <= max_degree.
RationalFunction random_rational(Rng& rng, Domain d, const RandomSpec& spec = {});

SimplePartialFraction random_spf_one_sided(Rng& rng, int max_n, bool upper);
SimplePartialFraction random_spf_two_sided(Rng& rng, int max_n);
/// Poles inside the beam of half-angle alpha around the negative semiaxis.
SimplePartialFraction random_spf_beam(Rng& rng, int max_n, double alpha);

}  // namespace ratquad
