#include "darboux/small_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

constexpr int kN = 4;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Reflector P = I - 2 v v^H / |v|^2 applied as H <- P H P, Z <- Z P.
void reduce_to_hessenberg(CMat4& H, CMat4& Z) {
  for (int k = 0; k < kN - 2; ++k) {
    double tail = 0.0;
    for (int i = k + 2; i < kN; ++i) tail += std::norm(H(i, k));
    if (tail == 0.0) continue;

    const Complex x0 = H(k + 1, k);
    const double xnorm = std::sqrt(tail + std::norm(x0));
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    const Complex alpha = -phase * xnorm;

    std::array<Complex, kN> v{};
    v[static_cast<std::size_t>(k + 1)] = x0 - alpha;
    for (int i = k + 2; i < kN; ++i) v[static_cast<std::size_t>(i)] = H(i, k);
    double vnorm2 = 0.0;
    for (const auto& c : v) vnorm2 += std::norm(c);
    const double beta = 2.0 / vnorm2;

    for (int c = 0; c < kN; ++c) {
      Complex s = 0.0;
      for (int i = k + 1; i < kN; ++i) s += std::conj(v[static_cast<std::size_t>(i)]) * H(i, c);
      for (int i = k + 1; i < kN; ++i) H(i, c) -= beta * v[static_cast<std::size_t>(i)] * s;
    }
    for (int r = 0; r < kN; ++r) {
      Complex s = 0.0;
      Complex sz = 0.0;
      for (int i = k + 1; i < kN; ++i) {
        s += H(r, i) * v[static_cast<std::size_t>(i)];
        sz += Z(r, i) * v[static_cast<std::size_t>(i)];
      }
      for (int i = k + 1; i < kN; ++i) {
        H(r, i) -= beta * s * std::conj(v[static_cast<std::size_t>(i)]);
        Z(r, i) -= beta * sz * std::conj(v[static_cast<std::size_t>(i)]);
      }
    }
    for (int i = k + 2; i < kN; ++i) H(i, k) = 0.0;
  }
}

// Eigenvalue of the trailing 2x2 block closer to its last diagonal entry.
Complex wilkinson_shift(const CMat4& H, int hi) {
  const Complex a = H(hi - 1, hi - 1);
  const Complex b = H(hi - 1, hi);
  const Complex c = H(hi, hi - 1);
  const Complex d = H(hi, hi);
  const Complex half = 0.5 * (a - d);
  const Complex disc = std::sqrt(half * half + b * c);
  const Complex mid = 0.5 * (a + d);
  const Complex e1 = mid + disc;
  const Complex e2 = mid - disc;
  return std::abs(e1 - d) <= std::abs(e2 - d) ? e1 : e2;
}

struct Rotation {
  Complex c;
  Complex s;
};

// Shifted QR sweep on the active block [lo, hi]; keeps the full Schur form.
void qr_sweep(CMat4& H, CMat4& Z, int lo, int hi, Complex shift) {
  std::array<Rotation, kN> rot{};
  for (int k = lo; k <= hi; ++k) H(k, k) -= shift;
  for (int k = lo; k < hi; ++k) {
    const Complex a = H(k, k);
    const Complex b = H(k + 1, k);
    const double r = std::hypot(std::abs(a), std::abs(b));
    Rotation g{1.0, 0.0};
    if (r > 0.0) g = {a / r, b / r};
    rot[static_cast<std::size_t>(k)] = g;
    for (int c = k; c < kN; ++c) {
      const Complex top = H(k, c);
      const Complex bot = H(k + 1, c);
      H(k, c) = std::conj(g.c) * top + std::conj(g.s) * bot;
      H(k + 1, c) = -g.s * top + g.c * bot;
    }
    H(k + 1, k) = 0.0;
  }
  for (int k = lo; k < hi; ++k) {
    const Rotation g = rot[static_cast<std::size_t>(k)];
    for (int r = 0; r <= std::min(k + 1, kN - 1); ++r) {
      const Complex left = H(r, k);
      const Complex right = H(r, k + 1);
      H(r, k) = left * g.c + right * g.s;
      H(r, k + 1) = -left * std::conj(g.s) + right * std::conj(g.c);
    }
    for (int r = 0; r < kN; ++r) {
      const Complex left = Z(r, k);
      const Complex right = Z(r, k + 1);
      Z(r, k) = left * g.c + right * g.s;
      Z(r, k + 1) = -left * std::conj(g.s) + right * std::conj(g.c);
    }
  }
  for (int k = lo; k <= hi; ++k) H(k, k) += shift;
}

double residual_of(const CMat4& C, const CVec4& v, Complex lambda) {
  const CVec4 Cv = C * v;
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += std::norm(Cv[i] - lambda * v[i]);
  return std::sqrt(s);
}

// One step of inverse iteration with (C - lambda I) solved by partial pivoting.
CVec4 inverse_iteration(const CMat4& C, const CVec4& v, Complex lambda, double scale) {
  CMat4 A = C;
  for (int i = 0; i < kN; ++i) A(i, i) -= lambda;
  CVec4 b = v;
  const double floor = std::max(scale, 1.0) * kEps;
  for (int col = 0; col < kN; ++col) {
    int piv = col;
    for (int r = col + 1; r < kN; ++r)
      if (std::abs(A(r, col)) > std::abs(A(piv, col))) piv = r;
    if (piv != col) {
      for (int c = 0; c < kN; ++c) std::swap(A(col, c), A(piv, c));
      std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(piv)]);
    }
    if (std::abs(A(col, col)) < floor) A(col, col) = floor;
    for (int r = col + 1; r < kN; ++r) {
      const Complex f = A(r, col) / A(col, col);
      for (int c = col; c < kN; ++c) A(r, c) -= f * A(col, c);
      b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
    }
  }
  CVec4 x{};
  for (int r = kN - 1; r >= 0; --r) {
    Complex s = b[static_cast<std::size_t>(r)];
    for (int c = r + 1; c < kN; ++c) s -= A(r, c) * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(r)] = s / A(r, r);
  }
  const double n = norm(x);
  if (!(n > 0.0) || !std::isfinite(n)) return v;
  for (auto& c : x) c /= n;
  return x;
}

}  // namespace

std::vector<EigenPair> eig_small(const CMat4& C, double tol, int max_iter) {
  const double cnorm = norm(C);
  CMat4 H = C;
  CMat4 Z = CMat4::identity();
  reduce_to_hessenberg(H, Z);

  int hi = kN - 1;
  int total = 0;
  int since_deflation = 0;
  while (hi > 0) {
    int l = hi;
    while (l > 0) {
      double scale = std::abs(H(l - 1, l - 1)) + std::abs(H(l, l));
      if (scale == 0.0) scale = cnorm;
      if (std::abs(H(l, l - 1)) <= kEps * scale) {
        H(l, l - 1) = 0.0;
        break;
      }
      --l;
    }
    if (l == hi) {
      --hi;
      since_deflation = 0;
      continue;
    }
    if (total >= max_iter) {
      std::ostringstream msg;
      msg << "eig_small: QR iteration did not converge in " << max_iter << " iterations";
      throw NumericalError(msg.str(), std::abs(H(hi, hi - 1)));
    }
    ++total;
    ++since_deflation;
    Complex shift = wilkinson_shift(H, hi);
    if (since_deflation % 10 == 0) {
      // Exceptional shift to break cycles.
      shift = H(hi, hi) + 0.75 * std::abs(H(hi, hi - 1)) * Complex(1.0, 1.0);
    }
    qr_sweep(H, Z, l, hi, shift);
  }

  // H is now upper triangular: C Z = Z H.
  double tnorm = 0.0;
  for (const auto& c : H.e) tnorm += std::norm(c);
  tnorm = std::sqrt(tnorm);
  const double small = std::max(tnorm, std::numeric_limits<double>::min()) * kEps;

  std::vector<EigenPair> out;
  out.reserve(kN);
  for (int k = 0; k < kN; ++k) {
    const Complex lambda = H(k, k);
    CVec4 y{};
    y[static_cast<std::size_t>(k)] = 1.0;
    for (int i = k - 1; i >= 0; --i) {
      Complex s = H(i, k);
      for (int j = i + 1; j < k; ++j) s += H(i, j) * y[static_cast<std::size_t>(j)];
      Complex d = H(i, i) - lambda;
      if (std::abs(d) < small) d = small;
      y[static_cast<std::size_t>(i)] = -s / d;
    }
    CVec4 v = Z * y;
    const double n = norm(v);
    for (auto& c : v) c /= n;

    double res = residual_of(C, v, lambda);
    const double bound = tol * cnorm;
    if (res > bound) {
      const CVec4 refined = inverse_iteration(C, v, lambda, cnorm);
      const double res2 = residual_of(C, refined, lambda);
      if (res2 < res) {
        v = refined;
        res = res2;
      }
    }
    if (res > bound) {
      std::ostringstream msg;
      msg << "eig_small: eigenpair residual " << res << " exceeds " << bound;
      throw NumericalError(msg.str(), res);
    }
    out.push_back({lambda, v, res});
  }
  return out;
}

}  // namespace darboux
