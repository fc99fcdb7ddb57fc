#include "rose/sampler.h"

namespace rose {

PetalAddress random_address(RandomSource& rng, int word_length) {
  std::string word;
  word.reserve(word_length);
  for (int i = 0; i < word_length; ++i)
    word.push_back(rng.chance(0.5) ? 'L' : 'R');
  return PetalAddress(std::move(word));
}

RosePoint random_point(const RadiiTable& table, RandomSource& rng,
                       const PointOptions& opt) {
  const int level = rng.uniform_int(1, opt.max_level);
  PetalAddress addr = random_address(rng, level - 1);
  const Side side = rng.chance(0.5) ? Side::L : Side::R;
  const Sheet sheet = rng.chance(0.5) ? Sheet::Upper : Sheet::Lower;
  const double theta = table.theta(level);

  double alpha, rho;
  if (rng.chance(opt.corner_prob)) {
    alpha = theta;
    rho = boundary_radius(table.curvature(), table.radius(level), alpha);
  } else {
    alpha = theta * rng.uniform01_open_low();
    const double bound = boundary_radius(table.curvature(), table.radius(level), alpha);
    rho = rng.chance(opt.boundary_prob) ? bound : bound * rng.uniform01_open_low();
  }
  return canonicalize(table, TriangleId{std::move(addr), side, sheet}, rho, alpha);
}

}  // namespace rose
