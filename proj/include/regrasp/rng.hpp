#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace regrasp {

// splitmix64. All randomness in the project flows from one master seed
// through mix_seed, so any run is reproducible from (master, stream ids).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0, std::uint64_t d = 0) {
  std::uint64_t h = splitmix64(a);
  h = splitmix64(h ^ splitmix64(b + 0x632be59bd9b4e019ull));
  h = splitmix64(h ^ splitmix64(c + 0x9e6c63d0876a9a47ull));
  h = splitmix64(h ^ splitmix64(d + 0xd1b54a32d192ed03ull));
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }

  double normal(double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(eng_);
  }

  // Uniform in [0, n).
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_);
  }

  Eigen::Vector3d unit_vector() {
    // Marsaglia-free: draw gaussians and normalize; retry on the null draw.
    for (;;) {
      Eigen::Vector3d v(normal(0, 1), normal(0, 1), normal(0, 1));
      const double n = v.norm();
      if (n > 1e-12) return v / n;
    }
  }

  // Uniform random rotation (quaternion method).
  Eigen::Matrix3d rotation() {
    const double u1 = uniform(0, 1), u2 = uniform(0, 1), u3 = uniform(0, 1);
    const double a = std::sqrt(1 - u1), b = std::sqrt(u1);
    const double t2 = 2 * 3.14159265358979323846 * u2;
    const double t3 = 2 * 3.14159265358979323846 * u3;
    Eigen::Quaterniond q(a * std::sin(t2), a * std::cos(t2), b * std::sin(t3),
                         b * std::cos(t3));
    return q.toRotationMatrix();
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace regrasp
