#pragma once

#include <random>

#include "darboux/homog.hpp"

namespace darboux::testing {

// Fixed seeds keep every run identical.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Quaternion random_quaternion(double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng()), g(rng()), g(rng()), g(rng())};
}

inline Quaternion random_imaginary(double scale = 1.0) {
  Quaternion q = random_quaternion(scale);
  q.w = 0.0;
  return q;
}

inline Complex random_complex() {
  std::normal_distribution<double> g;
  return {g(rng()), g(rng())};
}

inline HVec2 random_hvec() { return {random_quaternion(), random_quaternion()}; }

inline HMat2 random_hmat() {
  return HMat2::of(random_quaternion(), random_quaternion(), random_quaternion(), random_quaternion());
}

inline double dist(const Quaternion& a, const Quaternion& b) { return abs(a - b); }
inline double dist(const HVec2& a, const HVec2& b) { return norm(a - b); }
inline double dist(const HMat2& a, const HMat2& b) { return norm(a - b); }

}  // namespace darboux::testing
