#pragma once

#include <cstdint>
#include <random>

#include "thetaq/projective.hpp"

namespace thetaq {

/// Seeded generator with platform-independent draws (mt19937_64 bits mapped
/// by hand; std distributions are implementation defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform();  // [0, 1)
  double normal();
  Complex complex_normal();  // E|z|^2 = 1
  Vec3 complex_vector();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Mat3 random_unitary(Rng& rng);
Mat3 random_matrix(Rng& rng);

}  // namespace thetaq
