#include "kpspan/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace kpspan {

void validate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw InputError("n must be >= 1");
  if (spec.d < 1) throw InputError("d must be >= 1");
  if (spec.k < 1) throw InputError("k must be >= 1");
  if (static_cast<std::size_t>(spec.k) > spec.n)
    throw InputError("k=" + std::to_string(spec.k) + " exceeds n=" + std::to_string(spec.n));
  if (spec.distribution == Distribution::LowerBound) {
    if (spec.d < 2) throw InputError("lower-bound instances need d >= 2");
    if (spec.k < 2) throw InputError("lower-bound instances need k >= 2");
    if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0))
      throw InputError("epsilon must lie in (0, 1)");
  }
}

ColoredPointSet gen_random(const GeneratorSpec& spec) {
  validate(spec);
  if (spec.distribution == Distribution::LowerBound)
    return gen_lower_bound(spec.n, spec.k, spec.epsilon, spec.d);

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> blob(0.0, 0.05);

  std::vector<std::vector<double>> centers;
  if (spec.distribution == Distribution::Clustered)
    for (int c = 0; c < spec.k; ++c) {
      std::vector<double> center(spec.d);
      for (double& x : center) x = unit(rng);
      centers.push_back(std::move(center));
    }

  std::set<std::vector<double>> seen;
  std::vector<std::vector<double>> coords;
  coords.reserve(spec.n);
  while (coords.size() < spec.n) {
    std::vector<double> p(spec.d);
    if (centers.empty()) {
      for (double& x : p) x = unit(rng);
    } else {
      const auto& center = centers[coords.size() % centers.size()];
      for (std::size_t i = 0; i < spec.d; ++i) p[i] = center[i] + blob(rng);
    }
    if (seen.insert(p).second) coords.push_back(std::move(p));
  }

  std::vector<Color> colors(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) colors[i] = static_cast<Color>(i % static_cast<std::size_t>(spec.k)) + 1;
  std::shuffle(colors.begin(), colors.end(), rng);
  return ColoredPointSet(std::move(coords), std::move(colors));
}

namespace {

// Sunflower layout of m points strictly inside a disk of the given radius.
void fill_disk(std::vector<std::vector<double>>& coords, std::size_t m, double cx, double radius,
               std::size_t d) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < m; ++i) {
    const double r = 0.9 * radius * std::sqrt((static_cast<double>(i) + 0.5) / static_cast<double>(m));
    const double theta = golden * static_cast<double>(i);
    std::vector<double> p(d, 0.0);
    p[0] = cx + r * std::cos(theta);
    p[1] = r * std::sin(theta);
    coords.push_back(std::move(p));
  }
}

}  // namespace

ColoredPointSet gen_lower_bound(std::size_t n, int k, double epsilon, std::size_t d) {
  validate({n, k, d, 0, Distribution::LowerBound, epsilon});
  const std::size_t side = n - static_cast<std::size_t>(k) + 2;
  const std::size_t red = (side + 1) / 2;
  const std::size_t blue = side / 2;
  const double radius = epsilon / 12.0;

  std::vector<std::vector<double>> coords;
  std::vector<Color> colors;
  fill_disk(coords, red, 0.0, radius, d);
  colors.insert(colors.end(), red, 1);
  fill_disk(coords, blue, 1.0 + epsilon / 6.0, radius, d);
  colors.insert(colors.end(), blue, 2);
  fill_disk(coords, static_cast<std::size_t>(k - 2), 2.0 + epsilon / 3.0, radius, d);
  for (int c = 3; c <= k; ++c) colors.push_back(c);
  return ColoredPointSet(std::move(coords), std::move(colors));
}

ColoredPointSet generate(const GeneratorSpec& spec) {
  if (spec.distribution == Distribution::LowerBound)
    return gen_lower_bound(spec.n, spec.k, spec.epsilon, spec.d);
  return gen_random(spec);
}

}  // namespace kpspan
