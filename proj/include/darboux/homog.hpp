#pragma once

#include <array>
#include <complex>
#include <optional>

#include "darboux/quat.hpp"

namespace darboux {

/// Element of the quaternionic right vector space H^2. Projectively
/// (top, bottom) and (top h, bottom h) are the same point for h != 0.
struct HVec2 {
  Quaternion top;
  Quaternion bottom;

  friend constexpr bool operator==(const HVec2&, const HVec2&) = default;
};

constexpr HVec2 operator+(const HVec2& a, const HVec2& b) { return {a.top + b.top, a.bottom + b.bottom}; }
constexpr HVec2 operator-(const HVec2& a, const HVec2& b) { return {a.top - b.top, a.bottom - b.bottom}; }
// Right scaling by a quaternion.
constexpr HVec2 operator*(const HVec2& v, const Quaternion& h) { return {v.top * h, v.bottom * h}; }
double norm_sq(const HVec2& v);
double norm(const HVec2& v);

/// 2x2 quaternionic matrix, row-major, acting on HVec2 from the left.
struct HMat2 {
  std::array<Quaternion, 4> e{};

  constexpr Quaternion& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
  constexpr const Quaternion& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

  static constexpr HMat2 identity() { return {{kOne, Quaternion{}, Quaternion{}, kOne}}; }
  static constexpr HMat2 of(const Quaternion& a, const Quaternion& b, const Quaternion& c, const Quaternion& d) {
    return {{a, b, c, d}};
  }

  friend constexpr bool operator==(const HMat2&, const HMat2&) = default;
};

constexpr HVec2 operator*(const HMat2& A, const HVec2& v) {
  return {A(0, 0) * v.top + A(0, 1) * v.bottom, A(1, 0) * v.top + A(1, 1) * v.bottom};
}

constexpr HMat2 operator*(const HMat2& A, const HMat2& B) {
  HMat2 C;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) C(r, c) = A(r, 0) * B(0, c) + A(r, 1) * B(1, c);
  return C;
}

constexpr HMat2 operator+(const HMat2& A, const HMat2& B) {
  HMat2 C;
  for (std::size_t i = 0; i < 4; ++i) C.e[i] = A.e[i] + B.e[i];
  return C;
}
constexpr HMat2 operator-(const HMat2& A, const HMat2& B) {
  HMat2 C;
  for (std::size_t i = 0; i < 4; ++i) C.e[i] = A.e[i] - B.e[i];
  return C;
}
constexpr HMat2 operator*(double s, const HMat2& A) {
  HMat2 C;
  for (std::size_t i = 0; i < 4; ++i) C.e[i] = s * A.e[i];
  return C;
}

// Frobenius norm.
double norm(const HMat2& A);

/// A point of HP^1 in the affine chart, or the point at infinity.
struct ProjPoint {
  std::optional<Quaternion> affine;

  bool at_infinity() const { return !affine.has_value(); }
};

constexpr HVec2 affine_lift(const Quaternion& x) { return {x, kOne}; }

/// top * bottom^-1, or infinity when |bottom|^2 <= zero_epsilon().
ProjPoint project(const HVec2& v);

/// (u, v) = conj(a) d + conj(b) c for u = (a, b), v = (c, d).
constexpr Quaternion herm_form(const HVec2& u, const HVec2& v) {
  return conj(u.top) * v.bottom + conj(u.bottom) * v.top;
}

// ---------------------------------------------------------------------------
// Complex representation. H^2 is a right C-module through the {1, i} slot;
// with q = z0 + j z1 a vector (a, b) in H^2 maps to (a0, a1, b0, b1) in C^4 and
// left multiplication by w = w0 + j w1 becomes the block [[w0, -conj(w1)],
// [w1, conj(w0)]].

using CVec4 = std::array<Complex, 4>;

struct CMat4 {
  std::array<Complex, 16> e{};

  constexpr Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
  constexpr const Complex& operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

  static CMat4 identity();
};

CMat4 operator*(const CMat4& A, const CMat4& B);
CVec4 operator*(const CMat4& A, const CVec4& v);
double norm(const CMat4& A);
double norm(const CVec4& v);

CMat4 complexify(const HMat2& A);
CVec4 complexify_vector(const HVec2& v);
HVec2 decomplexify_vector(const CVec4& v);

}  // namespace darboux
