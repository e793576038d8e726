#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galdual/types.hpp"

namespace galdual {

/// Temporal contraction yields the Galilei group, spatial the dual group.
enum class ContractionMode { temporal, spatial };

std::string to_string(ContractionMode m);
ContractionMode contraction_mode_from_string(const std::string& s);

/// Member of the scaled 1+1 family G(alpha); acts on (x, ct, 1).
struct ContractedFamilyElement {
  double alpha = 1.0;
  ContractionMode mode = ContractionMode::temporal;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
};

/// (1 - (beta/alpha)^2)^(-1/2); throws when |beta| >= alpha.
double scaled_gamma(double alpha, double beta);

Eigen::Matrix3d family_matrix(const ContractedFamilyElement& e);
Eigen::Matrix3d temporal_limit(double beta, double a, double b, double c = 1.0);
Eigen::Matrix3d spatial_limit(double beta, double a, double b, double c = 1.0);
Eigen::Matrix3d contraction_limit(ContractionMode mode, double beta, double a, double b,
                                  double c = 1.0);

/// Reads (beta, a, b) back from a family matrix of known alpha and mode.
ContractedFamilyElement recover_family_parameters(const Eigen::Matrix3d& m, double alpha,
                                                  ContractionMode mode, double c = 1.0);

/// Exchanges the x and ct rows and columns.
Eigen::Matrix3d swap_space_time(const Eigen::Matrix3d& m);

struct ConvergenceRow {
  double alpha;
  double distance;
};

struct ConvergenceReport {
  ContractionMode mode;
  std::vector<ConvergenceRow> rows;
  /// Least-squares log-log slope of distance against alpha; empty when any
  /// fitted distance is zero.
  std::optional<double> rate;
  Eigen::Matrix3d limit;
};

/// alpha = 10^k for k = 0..8.
std::vector<double> default_alpha_schedule();

ConvergenceReport convergence_report(ContractionMode mode, double beta, double a, double b,
                                     std::span<const double> alphas, double c = 1.0,
                                     std::size_t discard = 2);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace galdual
