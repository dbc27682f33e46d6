#pragma once

#include <cstdint>
#include <string>

#include "kpspan/geometry.hpp"

namespace kpspan {

enum class Distribution { UniformCube, Clustered, LowerBound };

struct GeneratorSpec {
  std::size_t n = 0;
  int k = 1;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::UniformCube;
  double epsilon = 0.5;  // lower-bound instances only
};

/// Throws InputError describing the first violated constraint.
void validate(const GeneratorSpec& spec);

/// Seeded random instance. Colours are dealt round-robin and then shuffled,
/// so class sizes differ by at most one.
ColoredPointSet gen_random(const GeneratorSpec& spec);

/// Three disks of radius eps/12 centred at (0,0), (1+eps/6,0), (2+eps/3,0):
/// ceil((n-k+2)/2) red points (colour 1) in the first, floor((n-k+2)/2) blue
/// points (colour 2) in the second and k-2 singleton colours in the third.
/// Coordinates beyond the first two are zero.
ColoredPointSet gen_lower_bound(std::size_t n, int k, double epsilon, std::size_t d = 2);

ColoredPointSet generate(const GeneratorSpec& spec);

}  // namespace kpspan
