#include "darboux/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

Complex unit(double phi) { return std::polar(1.0, phi); }

double theta_of(int M) {
  if (M < 3) throw ParameterError("discrete circle needs M >= 3");
  return 2.0 * std::numbers::pi / M;
}

Complex ipow(Complex base, long n) {
  // std::pow(complex, int) goes through exp/log; repeated squaring keeps the
  // phase exact for unit bases.
  Complex result = 1.0;
  bool neg = n < 0;
  unsigned long e = static_cast<unsigned long>(neg ? -n : n);
  while (e) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1UL;
  }
  return neg ? 1.0 / result : result;
}

struct Bases {
  Complex a0m, a0p, a1m, a1p;
};

Bases circle_bases(double theta, Complex s) {
  const Complex em = unit(-theta);
  const Complex ep = unit(theta);
  return {0.5 * (em * (1.0 + s) + (1.0 - s)), 0.5 * (em * (1.0 - s) + (1.0 + s)),
          0.5 * (ep * (1.0 - s) + (1.0 + s)), 0.5 * (ep * (1.0 + s) + (1.0 - s))};
}

// Section with every power divided by scale^n (a real right factor).
HVec2 section(int M, double mu, const CircleConstants& c, long n, bool rescale) {
  const double theta = theta_of(M);
  const Complex s = spectral_root(mu);
  Bases b = circle_bases(theta, s);
  if (rescale) {
    const double scale = std::max({std::abs(b.a0m), std::abs(b.a0p), std::abs(b.a1m), std::abs(b.a1p)});
    if (scale > 0.0) {
      b.a0m /= scale; b.a0p /= scale; b.a1m /= scale; b.a1p /= scale;
    }
  }
  const Complex p0m = ipow(b.a0m, n), p0p = ipow(b.a0p, n);
  const Complex p1m = ipow(b.a1m, n), p1p = ipow(b.a1p, n);

  const Complex a0 = c.c0m * p0m + c.c0p * p0p;
  const Complex a1 = c.c1m * p1m + c.c1p * p1p;
  const double phase = theta * static_cast<double>(n);
  const Complex b0 = -0.5 * unit(-phase) * (c.c1m * (1.0 - s) * p1m + c.c1p * (1.0 + s) * p1p);
  const Complex b1 = 0.5 * unit(phase) * (c.c0m * (1.0 + s) * p0m + c.c0p * (1.0 - s) * p0p);
  return {join(a0, a1), join(b0, b1)};
}

Quaternion circle_vertex(double theta, long n) { return kJ * from_complex(unit(theta * static_cast<double>(n))); }

}  // namespace

Complex spectral_root(double mu) { return std::sqrt(Complex(1.0 - 4.0 * mu, 0.0)); }

double circle_resonance_mu(int M, int k, int l) {
  if (M < 3) throw ParameterError("circle_resonance_mu needs M >= 3");
  if (l < 1) throw ParameterError("circle_resonance_mu needs l >= 1");
  const long denom = static_cast<long>(l) * M;
  const long twice = 2L * k;
  if (twice % denom == 0 && ((twice / denom) % 2 != 0)) {
    std::ostringstream msg;
    msg << "k pi/(l M) is an odd multiple of pi/2 for k=" << k << ", l=" << l << ", M=" << M;
    throw ParameterError(msg.str());
  }
  const double cot = 1.0 / std::tan(std::numbers::pi / M);
  const double tan = std::tan(k * std::numbers::pi / static_cast<double>(denom));
  return 0.25 * (1.0 - cot * cot * tan * tan);
}

HVec2 circle_closed_section(int M, double mu, const CircleConstants& c, long n) {
  return section(M, mu, c, n, false);
}

Quaternion circle_closed_form_general(int M, double mu, const CircleConstants& c, long n) {
  const HVec2 phi = section(M, mu, c, n, true);
  if (norm_sq(phi.bottom) <= zero_epsilon() * std::max(1.0, norm_sq(phi.top))) {
    throw TransformAtInfinityError(static_cast<std::size_t>(n), "b_n vanishes: transform at infinity");
  }
  return circle_vertex(theta_of(M), n) + phi.top * inverse(phi.bottom);
}

Quaternion circle_closed_form(int M, double mu, Complex c1m, Complex c1p, long n) {
  const double theta = theta_of(M);
  const Complex s = spectral_root(mu);
  const Complex bp = unit(theta) * (1.0 + s) + (1.0 - s);
  const Complex bm = unit(theta) * (1.0 - s) + (1.0 + s);
  // Divide through by the larger base to keep the powers bounded.
  Complex wp = 1.0, wm = 1.0;
  if (std::abs(bp) >= std::abs(bm)) {
    wm = ipow(bm / bp, n);
  } else {
    wp = ipow(bp / bm, n);
  }
  const Complex num = c1p * (1.0 - s) * wp + c1m * (1.0 + s) * wm;
  const Complex den = c1p * (1.0 + s) * wp + c1m * (1.0 - s) * wm;
  if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num))) {
    throw TransformAtInfinityError(static_cast<std::size_t>(n), "closed-form denominator vanishes");
  }
  const Complex z = -unit(theta * static_cast<double>(n)) * num / den;
  return kJ * from_complex(z);
}

Complex circleton_chi(double mu, double tau) {
  if (!(mu > 0.0)) throw ParameterError("circleton parameter needs mu > 0");
  const Complex s = spectral_root(mu);
  const double r = 2.0 * std::sqrt(mu);
  const Complex e = unit(tau);
  const Complex den = r - e * (1.0 + s);
  if (std::abs(den) <= 1e-12) throw ParameterError("chi is undefined for mu = 1/(4 cos^2 tau); use the c- = 0 branch");
  return (-r + e * (1.0 - s)) / den;
}

bool circleton_chi_singular(double mu, double tau) {
  if (!(mu > 0.0)) return false;
  const Complex s = spectral_root(mu);
  return std::abs(2.0 * std::sqrt(mu) - unit(tau) * (1.0 + s)) <= 1e-12;
}

Complex circleton_closed_form(int M, double mu, double tau, CircletonBranch branch, long n) {
  const double theta = theta_of(M);
  const Complex s = spectral_root(mu);
  const Complex rot = unit(theta * static_cast<double>(n));
  if (branch == CircletonBranch::c_minus_zero) {
    return -rot * (1.0 - s) / (1.0 + s);
  }
  const Complex chi = circleton_chi(mu, tau);
  const Complex bp = unit(theta) * (1.0 + s) + (1.0 - s);
  const Complex bm = unit(theta) * (1.0 - s) + (1.0 + s);
  Complex wp = 1.0, wm = 1.0;
  if (std::abs(bp) >= std::abs(bm)) {
    wm = ipow(bm / bp, n);
  } else {
    wp = ipow(bp / bm, n);
  }
  const Complex num = chi * (1.0 - s) * wp + (1.0 + s) * wm;
  const Complex den = chi * (1.0 + s) * wp + (1.0 - s) * wm;
  if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num))) {
    throw TransformAtInfinityError(static_cast<std::size_t>(n), "circleton denominator vanishes");
  }
  return -rot * num / den;
}

}  // namespace darboux
