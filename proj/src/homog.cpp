#include "darboux/homog.hpp"

#include <cmath>

namespace darboux {

double norm_sq(const HVec2& v) { return norm_sq(v.top) + norm_sq(v.bottom); }
double norm(const HVec2& v) { return std::sqrt(norm_sq(v)); }

double norm(const HMat2& A) {
  double s = 0.0;
  for (const auto& q : A.e) s += norm_sq(q);
  return std::sqrt(s);
}

ProjPoint project(const HVec2& v) {
  const double b = norm_sq(v.bottom);
  if (b <= zero_epsilon() || b == 0.0) return {};
  return {v.top * inverse(v.bottom)};
}

CMat4 CMat4::identity() {
  CMat4 I;
  for (int i = 0; i < 4; ++i) I(i, i) = 1.0;
  return I;
}

CMat4 operator*(const CMat4& A, const CMat4& B) {
  CMat4 C;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Complex s = 0.0;
      for (int k = 0; k < 4; ++k) s += A(r, k) * B(k, c);
      C(r, c) = s;
    }
  return C;
}

CVec4 operator*(const CMat4& A, const CVec4& v) {
  CVec4 out{};
  for (int r = 0; r < 4; ++r) {
    Complex s = 0.0;
    for (int k = 0; k < 4; ++k) s += A(r, k) * v[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

double norm(const CMat4& A) {
  double s = 0.0;
  for (const auto& c : A.e) s += std::norm(c);
  return std::sqrt(s);
}

double norm(const CVec4& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

CMat4 complexify(const HMat2& A) {
  CMat4 C;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const auto [w0, w1] = split(A(r, c));
      C(2 * r, 2 * c) = w0;
      C(2 * r, 2 * c + 1) = -std::conj(w1);
      C(2 * r + 1, 2 * c) = w1;
      C(2 * r + 1, 2 * c + 1) = std::conj(w0);
    }
  return C;
}

CVec4 complexify_vector(const HVec2& v) {
  const auto a = split(v.top);
  const auto b = split(v.bottom);
  return {a.z0, a.z1, b.z0, b.z1};
}

HVec2 decomplexify_vector(const CVec4& v) { return {join(v[0], v[1]), join(v[2], v[3])}; }

}  // namespace darboux
