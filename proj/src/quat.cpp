#include "darboux/quat.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <sstream>

#include "darboux/errors.hpp"

namespace darboux {

namespace {
std::atomic<double> g_zero_epsilon{1e-13};
}  // namespace

double zero_epsilon() { return g_zero_epsilon.load(std::memory_order_relaxed); }

void set_zero_epsilon(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw ParameterError("zero epsilon must be finite and >= 0");
  g_zero_epsilon.store(eps, std::memory_order_relaxed);
}

double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

Quaternion inverse(const Quaternion& q) {
  const double n = norm_sq(q);
  if (!(n >= zero_epsilon()) || n == 0.0) {
    std::ostringstream msg;
    msg << "cannot invert quaternion " << q << " (|q|^2 = " << n << ")";
    throw DegenerateError(msg.str());
  }
  return conj(q) / n;
}

Quaternion right_div(const Quaternion& a, const Quaternion& b) { return a * inverse(b); }
Quaternion left_div(const Quaternion& b, const Quaternion& a) { return inverse(b) * a; }

ComplexPair split(const Quaternion& q) { return {Complex(q.w, q.x), Complex(q.y, -q.z)}; }

Quaternion join(const Complex& z0, const Complex& z1) {
  // j (a + i b) = a j + b k
  return {z0.real(), z0.imag(), z1.real(), -z1.imag()};
}

bool is_imaginary(const Quaternion& q, double tol) { return std::abs(q.w) <= tol; }

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << "i, " << q.y << "j, " << q.z << "k)";
}

}  // namespace darboux
