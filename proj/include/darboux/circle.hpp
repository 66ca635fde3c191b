#pragma once

#include "darboux/homog.hpp"
#include "darboux/quat.hpp"

namespace darboux {

// Closed forms for Darboux transforms of the discrete circle
// x_n = j e^{i theta n}, theta = 2 pi / M, and for bicycle correspondences of
// the planar circle x_n = e^{i theta n}; both carry m = |1 - e^{i theta}|^-2.

/// s = sqrt(1 - 4 mu), principal branch (i sqrt(4 mu - 1) for mu > 1/4).
Complex spectral_root(double mu);

/// mu = (1 - cot^2(pi/M) tan^2(k pi/(l M))) / 4: the spectral values where the
/// monodromy over the l-fold cover of the discrete circle is a real multiple of
/// the identity. Throws ParameterError for M < 3, l < 1 or when k pi/(l M) is
/// an odd multiple of pi/2.
double circle_resonance_mu(int M, int k, int l = 1);

/// Complex constants of integration for the section a = (c0m a0m + c0p a0p) + j (c1m a1m + c1p a1p).
struct CircleConstants {
  Complex c0m;
  Complex c0p;
  Complex c1m;
  Complex c1p;
};

/// Parallel section (a_n, b_n) of the ambient connection on the discrete
/// circle, assembled from the explicit solutions of the linear recurrence.
HVec2 circle_closed_section(int M, double mu, const CircleConstants& c, long n);

/// xhat_n = x_n + a_n b_n^-1 for the section above. Throws
/// TransformAtInfinityError when b_n vanishes.
Quaternion circle_closed_form_general(int M, double mu, const CircleConstants& c, long n);

/// The jk-plane transforms (c0 = 0) in their reduced form
/// xhat_n = j (-e^{i theta n} (c1p (1-s) B+^n + c1m (1+s) B-^n) / (c1p (1+s) B+^n + c1m (1-s) B-^n))
/// with B+- = e^{i theta}(1 +- s) + (1 -+ s).
Quaternion circle_closed_form(int M, double mu, Complex c1m, Complex c1p, long n);

enum class CircletonBranch {
  chi,           // c+ = chi c-
  c_minus_zero,  // c- = 0, required when mu = 1/(4 cos^2 tau)
};

/// chi = (-2 sqrt(mu) + e^{i tau}(1 - s)) / (2 sqrt(mu) - e^{i tau}(1 + s)); requires mu > 0.
Complex circleton_chi(double mu, double tau);

/// True when 2 sqrt(mu) - e^{i tau}(1 + s) vanishes, i.e. chi is undefined.
bool circleton_chi_singular(double mu, double tau);

/// Arc-length polarised (bicycle) transform of the planar discrete circle,
/// as a complex number: -e^{i theta n}(chi (1-s) B+^n + (1+s) B-^n) / (chi (1+s) B+^n + (1-s) B-^n).
Complex circleton_closed_form(int M, double mu, double tau, CircletonBranch branch, long n);

}  // namespace darboux
