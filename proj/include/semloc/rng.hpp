#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cmath>
#include <cstdint>
#include <random>

namespace semloc {

/// Deterministic random source. Samplers are implemented directly on top of
/// the mt19937_64 stream so that draws do not depend on the standard
/// library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniformInt(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  /// Standard normal via Box-Muller. Consumes two uniforms per draw.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  Eigen::Vector3d normal3() {
    Eigen::Vector3d v;
    for (int i = 0; i < 3; ++i) v[i] = normal();
    return v;
  }

  Eigen::Vector3d uniformInBox(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi) {
    Eigen::Vector3d v;
    for (int i = 0; i < 3; ++i) v[i] = uniform(lo[i], hi[i]);
    return v;
  }

  /// Uniformly distributed unit vector.
  Eigen::Vector3d unitVector() {
    Eigen::Vector3d v;
    double n2;
    do {
      v = normal3();
      n2 = v.squaredNorm();
    } while (n2 < 1e-12);
    return v / std::sqrt(n2);
  }

  /// Uniformly distributed unit quaternion (rotation).
  Eigen::Quaterniond unitQuaternion() {
    Eigen::Vector4d q;
    double n2;
    do {
      for (int i = 0; i < 4; ++i) q[i] = normal();
      n2 = q.squaredNorm();
    } while (n2 < 1e-12);
    q /= std::sqrt(n2);
    return Eigen::Quaterniond(q[0], q[1], q[2], q[3]);
  }

  /// Derive an independent stream; mixes the seed so streams do not collide.
  Rng fork(std::uint64_t stream) {
    const std::uint64_t mixed = eng_() ^ (0x9E3779B97F4A7C15ull * (stream + 1));
    return Rng(mixed);
  }

  template <typename Iter>
  void shuffle(Iter first, Iter last) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      const std::uint64_t j = eng_() % i;
      std::swap(first[i - 1], first[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace semloc
