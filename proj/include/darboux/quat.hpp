#pragma once

#include <complex>
#include <iosfwd>

namespace darboux {

using Complex = std::complex<double>;

/// Real quaternion w + x i + y j + z k.
///
/// Multiplication table (fixed for the whole library):
///
///        |  i    j    k
///     ---+---------------
///      i | -1    k   -j
///      j | -k   -1    i
///      k |  j   -i   -1
///
/// i.e. ij = k, jk = i, ki = j and the reversed products change sign.
/// Complex numbers are embedded as span{1, i}; moving j across a complex
/// number conjugates it: j z = conj(z) j.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  // Implicit on purpose: real scalars are quaternions.
  constexpr Quaternion(double real) : w(real) {}  // NOLINT(google-explicit-constructor)

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) { return *this *= (1.0 / s); }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm_sq(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
double abs(const Quaternion& q);

// Euclidean inner product of the coefficient 4-vectors, equal to Re(a conj(b)).
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Threshold on |q|^2 below which a quaternion is treated as non-invertible.
/// Defaults to 1e-13; shared by every invertibility check in the library.
double zero_epsilon();
void set_zero_epsilon(double eps);

/// conj(q) / |q|^2. Throws DegenerateError when |q|^2 < zero_epsilon().
Quaternion inverse(const Quaternion& q);

// a * inverse(b) and inverse(b) * a.
Quaternion right_div(const Quaternion& a, const Quaternion& b);
Quaternion left_div(const Quaternion& b, const Quaternion& a);

/// q = z0 + j z1 with z0 = w + i x and z1 = y - i z.
struct ComplexPair {
  Complex z0;
  Complex z1;
};

ComplexPair split(const Quaternion& q);
Quaternion join(const Complex& z0, const Complex& z1);
inline Quaternion join(const ComplexPair& p) { return join(p.z0, p.z1); }

constexpr Quaternion from_complex(const Complex& c) { return {c.real(), c.imag(), 0.0, 0.0}; }

/// |Re q| <= tol.
bool is_imaginary(const Quaternion& q, double tol);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace darboux
