#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "galdual/groups.hpp"

namespace galdual {

enum class AlgebraFlavor { galilei, dual, extended };

std::string to_string(AlgebraFlavor f);
AlgebraFlavor algebra_flavor_from_string(const std::string& s);

/// Basis ordering: chi_b, chi_a1..3, chi_v1..3, chi_theta1..3, then the central
/// charge M for the extended algebra.
namespace basis {
inline constexpr int b = 0;
inline constexpr int a(int i) { return 1 + i; }
inline constexpr int v(int i) { return 4 + i; }
inline constexpr int theta(int i) { return 7 + i; }
inline constexpr int M = 10;
inline constexpr int kMaxDim = 11;
}  // namespace basis

int algebra_dim(AlgebraFlavor f);
std::string basis_name(int k);

/// Sign conventions. Translations and rotations generate g -> g(s) with the
/// parameter increasing. The dual boost generator is oriented along the
/// contraction parameter, i.e. it differentiates along v = -s c e_i; the
/// Galilei boost differentiates along v = s e_i. The central generator is
/// M = -d/d(alpha).

struct StructureTerm {
  int k;
  double coef;
};

class StructureConstantTable {
 public:
  StructureConstantTable(AlgebraFlavor f, double c);

  AlgebraFlavor flavor() const { return flavor_; }
  double c() const { return c_; }
  int dim() const { return dim_; }

  const std::vector<StructureTerm>& at(int i, int j) const { return t_[i][j]; }
  double coefficient(int i, int j, int k) const;
  /// Sets [e_i, e_j] and the antisymmetric partner [e_j, e_i].
  void set(int i, int j, std::vector<StructureTerm> terms);

  double max_difference(const StructureConstantTable& other) const;
  double antisymmetry_defect() const;

 private:
  AlgebraFlavor flavor_;
  double c_;
  int dim_;
  std::vector<std::vector<std::vector<StructureTerm>>> t_;
};

/// The closed-form commutator tables.
StructureConstantTable hardcoded_table(AlgebraFlavor f, double c = 1.0);

struct AlgebraVector {
  AlgebraFlavor flavor = AlgebraFlavor::dual;
  double c = 1.0;
  std::array<double, basis::kMaxDim> coeffs{};

  static AlgebraVector unit(AlgebraFlavor f, int k, double c = 1.0);
  AlgebraVector operator+(const AlgebraVector& o) const;
  AlgebraVector operator*(double s) const;
  double max_abs() const;
};

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y);
double jacobi_residual(const AlgebraVector& x, const AlgebraVector& y, const AlgebraVector& z);

/// Generator matrices obtained by differentiating the affine realization
/// along each one-parameter subgroup (5x5, or 6x6 for the extended algebra).
std::vector<MatX> generators_from_realization(AlgebraFlavor f, double c = 1.0);

/// Fits every matrix commutator back onto the generator basis.
struct ExtractedTable {
  StructureConstantTable table;
  double fit_residual;
};
ExtractedTable extract_structure_constants(const std::vector<MatX>& gens, AlgebraFlavor f,
                                           double c);

/// Polynomial in a fixed number of variables, keyed by exponent tuple.
class Polynomial {
 public:
  using Exponents = std::array<int, 5>;
  explicit Polynomial(int nvars = 4) : nvars_(nvars) {}

  static Polynomial constant(int nvars, double v);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(int nvars, const Exponents& e, double coef = 1.0);

  int nvars() const { return nvars_; }
  Polynomial derivative(int i) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(double s) const;
  double max_abs_coef() const;
  const std::map<Exponents, double>& terms() const { return terms_; }

 private:
  int nvars_;
  std::map<Exponents, double> terms_;
};

/// First-order differential operator sum_r coef_r * d/dvar_r.
struct DiffOperator {
  std::vector<std::pair<Polynomial, int>> parts;
  Polynomial apply(const Polynomial& f) const;
};

/// Variables: galilei and dual use (x1, x2, x3, t); the extended algebra uses
/// (s, x1, x2, x3, t) where s is the coordinate the central charge shifts.
std::vector<DiffOperator> differential_realization(AlgebraFlavor f, double c = 1.0);

/// All monomials up to the given degree.
std::vector<Polynomial> test_polynomials(int nvars, int max_degree);

/// Max over all basis pairs and test functions of
/// |[chi_i, chi_j] f - sum_k f_ij^k chi_k f|.
double differential_realization_check(AlgebraFlavor f, const std::vector<Polynomial>& tests,
                                      double c = 1.0);

struct CocycleValue {
  double gamma;
  double omega;
  GroupElement g2;
  GroupElement g1;
};

/// gamma = 1/2 (a2 . R2 v1 - v2 . R2 a1 + b1 v2 . R2 v1), omega = m gamma.
CocycleValue cocycle_gamma(const GroupElement& g2, const GroupElement& g1, double mass);

struct ExtendedGroupElement {
  double alpha = 0.0;
  GroupElement g = GroupElement::identity(Flavor::galilei);
  double mass = 1.0;
  double kappa = 1.0;

  static ExtendedGroupElement make(double alpha, const GroupElement& g, double mass);
};

ExtendedGroupElement extended_compose(const ExtendedGroupElement& x2,
                                      const ExtendedGroupElement& x1);
ExtendedGroupElement extended_inverse(const ExtendedGroupElement& x);

/// Faithful 6x6 realization on (s, x1, x2, x3, t, 1):
/// [[1, v^T R, v^2/2, a.v/2 - (kappa/m) alpha], [0, R, v, a], [0,0,1,b], [0,0,0,1]].
Mat6 extended_to_matrix(const ExtendedGroupElement& x);

}  // namespace galdual
