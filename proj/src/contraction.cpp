#include "galdual/contraction.hpp"

#include <cmath>

namespace galdual {

std::string to_string(ContractionMode m) {
  return m == ContractionMode::temporal ? "temporal" : "spatial";
}

ContractionMode contraction_mode_from_string(const std::string& s) {
  if (s == "temporal") return ContractionMode::temporal;
  if (s == "spatial") return ContractionMode::spatial;
  throw Error("unknown contraction mode '" + s + "'");
}

double scaled_gamma(double alpha, double beta) {
  if (!(alpha >= 1.0)) throw DomainError("alpha must be at least 1");
  const double r = beta / alpha;
  if (!(std::abs(r) < 1.0)) throw DomainError("|beta| must be below alpha");
  return 1.0 / std::sqrt(1.0 - r * r);
}

Eigen::Matrix3d family_matrix(const ContractedFamilyElement& e) {
  const double gm = scaled_gamma(e.alpha, e.beta);
  const double big = gm * e.beta;
  const double small = gm * e.beta / (e.alpha * e.alpha);
  Eigen::Matrix3d m;
  if (e.mode == ContractionMode::temporal)
    m << gm, big, e.a, small, gm, e.c * e.b, 0, 0, 1;
  else
    m << gm, small, e.a, big, gm, e.c * e.b, 0, 0, 1;
  return m;
}

Eigen::Matrix3d temporal_limit(double beta, double a, double b, double c) {
  Eigen::Matrix3d m;
  m << 1, beta, a, 0, 1, c * b, 0, 0, 1;
  return m;
}

Eigen::Matrix3d spatial_limit(double beta, double a, double b, double c) {
  Eigen::Matrix3d m;
  m << 1, 0, a, beta, 1, c * b, 0, 0, 1;
  return m;
}

Eigen::Matrix3d contraction_limit(ContractionMode mode, double beta, double a, double b,
                                  double c) {
  return mode == ContractionMode::temporal ? temporal_limit(beta, a, b, c)
                                           : spatial_limit(beta, a, b, c);
}

ContractedFamilyElement recover_family_parameters(const Eigen::Matrix3d& m, double alpha,
                                                  ContractionMode mode, double c) {
  ContractedFamilyElement e;
  e.alpha = alpha;
  e.mode = mode;
  e.c = c;
  const double big = mode == ContractionMode::temporal ? m(0, 1) : m(1, 0);
  e.beta = big / m(0, 0);
  e.a = m(0, 2);
  e.b = m(1, 2) / c;
  return e;
}

Eigen::Matrix3d swap_space_time(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d p;
  p << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  return p * m * p;
}

std::vector<double> default_alpha_schedule() {
  std::vector<double> s;
  for (int k = 0; k <= 8; ++k) s.push_back(std::pow(10.0, k));
  return s;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

ConvergenceReport convergence_report(ContractionMode mode, double beta, double a, double b,
                                     std::span<const double> alphas, double c,
                                     std::size_t discard) {
  for (std::size_t i = 1; i < alphas.size(); ++i)
    if (!(alphas[i] > alphas[i - 1])) throw Error("alpha schedule must be increasing");
  ConvergenceReport rep;
  rep.mode = mode;
  rep.limit = contraction_limit(mode, beta, a, b, c);
  std::vector<double> xs, ys;
  bool zero = false;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const Eigen::Matrix3d m = family_matrix({alphas[i], mode, beta, a, b, c});
    const double d = (m - rep.limit).cwiseAbs().maxCoeff();
    rep.rows.push_back({alphas[i], d});
    if (i < discard) continue;
    if (d == 0.0) zero = true;
    xs.push_back(alphas[i]);
    ys.push_back(d);
  }
  if (!zero && xs.size() >= 2) rep.rate = loglog_slope(xs, ys);
  return rep;
}

}  // namespace galdual
