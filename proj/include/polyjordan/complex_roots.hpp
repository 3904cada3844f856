#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "polyjordan/error.hpp"
#include "polyjordan/poly.hpp"
#include "polyjordan/rational.hpp"

namespace polyjordan {

/// Quadrature parameters for contour zero counting.
struct ContourConfig {
  std::size_t initial_samples = 256;
  std::size_t max_samples = std::size_t{1} << 20;
  double snap_tolerance = 0.25;
  double min_modulus = 1e-12;

  void validate() const {
    if (!(snap_tolerance > 0.0 && snap_tolerance < 0.5)) {
      throw Error(ErrorKind::InvalidArgument, "snap_tolerance must lie in (0, 0.5)");
    }
    if (initial_samples < 16) throw Error(ErrorKind::InvalidArgument, "initial_samples must be at least 16");
    if (max_samples < initial_samples) {
      throw Error(ErrorKind::InvalidArgument, "max_samples must be at least initial_samples");
    }
    if (!(min_modulus >= 0.0)) throw Error(ErrorKind::InvalidArgument, "min_modulus must be nonnegative");
  }
};

struct AnnulusQuery {
  double inner_radius = 0.0;
  double outer_radius = 1.0;

  void validate() const {
    if (!(inner_radius >= 0.0) || !std::isfinite(outer_radius) || !(inner_radius < outer_radius)) {
      throw Error(ErrorKind::InvalidArgument, "annulus needs 0 <= inner_radius < outer_radius");
    }
  }
};

/// 1 + max |a_i| / |a_n|; every complex root is strictly inside this radius.
inline Rational cauchy_bound(const Poly& f) {
  if (f.is_constant()) throw Error(ErrorKind::ConstantPolynomial, "Cauchy bound needs a nonconstant polynomial");
  auto c = f.coefficients();
  Rational largest = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) largest = std::max(largest, Rational(abs(c[i])));
  return 1 + largest / abs(c.back());
}

namespace detail {

inline std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

inline std::vector<double> to_doubles(const Poly& f) {
  std::vector<double> out;
  for (const auto& c : f.coefficients()) out.push_back(c.get_d());
  return out;
}

}  // namespace detail

/// Zeros of f inside |z| < radius, counted with multiplicity, from the
/// trapezoidal rule applied to (1/2 pi i) \oint f'/f dz on a uniform grid.
/// The grid doubles until the value snaps to an integer that survives one
/// more doubling.
inline std::size_t disk_count(const Poly& f, double radius, const ContourConfig& cfg = {}) {
  cfg.validate();
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::InvalidArgument, "disk radius must be positive and finite");
  }
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no isolated zeros");

  const auto fc = detail::to_doubles(f);
  const auto dc = detail::to_doubles(derivative(f));

  // On z = r e^{i theta}: dz = i z dtheta, so the integrand reduces to
  // Re(z f'(z) / f(z)) / (2 pi) per unit angle.
  auto sample = [&](std::size_t j, std::size_t n) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const std::complex<double> z = std::polar(radius, theta);
    const std::complex<double> fz = detail::horner(fc, z);
    if (std::abs(fz) < cfg.min_modulus) {
      throw Error(ErrorKind::RootNearContour,
                  "|f| fell below " + std::to_string(cfg.min_modulus) + " on the circle of radius " +
                      std::to_string(radius));
    }
    return (z * detail::horner(dc, z) / fz).real();
  };

  std::size_t n = cfg.initial_samples;
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) sum += sample(j, n);

  std::optional<long long> previous;
  for (;;) {
    const double value = sum / static_cast<double>(n);
    const double nearest = std::round(value);
    const bool snapped = std::isfinite(value) && std::abs(value - nearest) <= cfg.snap_tolerance;
    if (snapped && previous && *previous == static_cast<long long>(nearest)) {
      if (nearest < 0) break;
      return static_cast<std::size_t>(nearest);
    }
    previous = snapped ? std::optional<long long>(static_cast<long long>(nearest)) : std::nullopt;
    if (n > cfg.max_samples / 2) break;
    double refinement = 0.0;
    for (std::size_t j = 0; j < n; ++j) refinement += sample(2 * j + 1, 2 * n);
    sum += refinement;
    n *= 2;
  }
  throw Error(ErrorKind::NoConvergence,
              "winding number on the circle of radius " + std::to_string(radius) +
                  " did not settle within " + std::to_string(cfg.max_samples) + " samples");
}

/// Zeros with inner < |z| < outer, counted with multiplicity. An inner
/// radius of zero means the full disk.
inline std::size_t annulus_count(const Poly& f, const AnnulusQuery& q, const ContourConfig& cfg = {}) {
  q.validate();
  auto on_circle = [&](double r, const char* which) -> std::size_t {
    try {
      return disk_count(f, r, cfg);
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(which) + " circle: " + e.what());
    }
  };
  const std::size_t outer = on_circle(q.outer_radius, "outer");
  const std::size_t inner = q.inner_radius == 0.0 ? 0 : on_circle(q.inner_radius, "inner");
  if (inner > outer) {
    throw Error(ErrorKind::NoConvergence, "inner disk count exceeds outer disk count");
  }
  return outer - inner;
}

/// Exact Rouche test against a dominant monomial at a rational radius.
/// Returns k when |a_k| r^k > sum_{i != k} |a_i| r^i, in which case f has
/// exactly k zeros (with multiplicity) in |z| < r. nullopt means the test
/// is inconclusive, not that the count differs.
inline std::optional<std::size_t> rouche_dominant_check(const Poly& f, const Rational& radius) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Rouche check of the zero polynomial");
  if (sign(radius) <= 0) throw Error(ErrorKind::InvalidArgument, "Rouche radius must be positive");
  auto c = f.coefficients();
  std::vector<Rational> magnitude(c.size());
  Rational power = 1;
  Rational total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    magnitude[i] = abs(c[i]) * power;
    total += magnitude[i];
    power *= radius;
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (2 * magnitude[k] > total) return k;
  }
  return std::nullopt;
}

}  // namespace polyjordan
