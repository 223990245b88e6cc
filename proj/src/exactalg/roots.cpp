#include "heisenkep/exactalg/roots.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace heisenkep {

namespace {

using cld = std::complex<long double>;

std::vector<std::complex<double>> companion_roots(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return {};
  if (n == 1) return {(-f[0] / f[1]).to_complex()};
  const Scalar inv = f.leading().inverse();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -(f[i] * inv).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  std::vector<std::complex<double>> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return out;
}

cld newton_polish(const Poly& f, const Poly& df, cld z) {
  for (int it = 0; it < 50; ++it) {
    cld d = df.eval_ld(z);
    if (std::abs(d) == 0) break;
    cld step = f.eval_ld(z) / d;
    z -= step;
    if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(z))) break;
  }
  return z;
}

// Continued-fraction convergents of x, returning those with denominator below max_den.
std::vector<mpq_class> convergents(long double x, long max_den) {
  std::vector<mpq_class> out;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double r = x;
  for (int it = 0; it < 40; ++it) {
    long double a = std::floor(r);
    if (!std::isfinite(a) || std::fabs(a) > 1e18L) break;
    mpz_class ai(static_cast<long>(a));
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    out.emplace_back(h2, k2);
    out.back().canonicalize();
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    long double frac = r - a;
    if (frac < 1e-18L) break;
    r = 1 / frac;
  }
  return out;
}

}  // namespace

double scaled_residual(const Poly& p, cld r) {
  long double scale = 0, ar = std::abs(r), pw = 1;
  for (int k = 0; k <= p.degree(); ++k) {
    scale += std::abs(p[k].to_complex_ld()) * pw;
    pw *= ar;
  }
  if (scale == 0) return 0;
  return static_cast<double>(std::abs(p.eval_ld(r)) / scale);
}

std::vector<std::complex<double>> poly_roots_numeric(const Poly& p, double tol) {
  if (p.is_zero()) throw std::invalid_argument("poly_roots_numeric: zero polynomial");
  std::vector<std::complex<double>> out;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    Poly df = f.derivative();
    for (auto z : companion_roots(f)) {
      cld r = newton_polish(f, df, cld(z.real(), z.imag()));
      if (scaled_residual(f, r) > tol) throw std::runtime_error("poly_roots_numeric: residual check failed");
      for (int m = 0; m < mult; ++m) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
  }
  return out;
}

std::vector<ExactRoot> gaussian_rational_roots(const Poly& p) {
  std::vector<ExactRoot> out;
  if (p.degree() < 1) return out;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    Poly g = f.cleared();
    Poly dg = g.derivative();
    const Scalar lead = g.leading();
    // a_n * r is integral over Z[i] for any root r in Q(i), hence lies in Z[i].
    for (auto z : companion_roots(g)) {
      cld r = newton_polish(g, dg, cld(z.real(), z.imag()));
      std::vector<Scalar> candidates;
      cld scaled = r * lead.to_complex_ld();
      if (std::abs(scaled) < 1e15L) candidates.push_back(round_gaussian(scaled) / lead);
      for (const auto& re : convergents(r.real(), 1000000000L))
        for (const auto& im : convergents(r.imag(), 1000000000L)) {
          if (std::fabs(re.get_d() - static_cast<double>(r.real())) > 1e-6) continue;
          if (std::fabs(im.get_d() - static_cast<double>(r.imag())) > 1e-6) continue;
          candidates.emplace_back(re, im);
        }
      if (std::fabs(r.imag()) < 1e-12L)
        for (const auto& re : convergents(r.real(), 1000000000L)) candidates.emplace_back(re);
      for (const auto& c : candidates) {
        if (!g(c).is_zero()) continue;
        bool seen = false;
        for (const auto& e : out) seen = seen || e.value == c;
        if (!seen) out.push_back({c, mult});
        break;
      }
    }
  }
  return out;
}

}  // namespace heisenkep
