#include "galdual/algebra.hpp"

#include <cmath>

namespace galdual {

namespace {

int levi(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

void check_flavors(const AlgebraVector& x, const AlgebraVector& y) {
  if (x.flavor != y.flavor) throw MismatchError("algebra vectors of different flavors");
  if (x.c != y.c) throw MismatchError("algebra vectors carry different c");
}

}  // namespace

std::string to_string(AlgebraFlavor f) {
  switch (f) {
    case AlgebraFlavor::galilei: return "galilei";
    case AlgebraFlavor::dual: return "dual";
    case AlgebraFlavor::extended: return "extended";
  }
  return "?";
}

AlgebraFlavor algebra_flavor_from_string(const std::string& s) {
  if (s == "galilei") return AlgebraFlavor::galilei;
  if (s == "dual" || s == "dual-galilei") return AlgebraFlavor::dual;
  if (s == "extended" || s == "extended-galilei") return AlgebraFlavor::extended;
  throw Error("unknown algebra flavor '" + s + "'");
}

int algebra_dim(AlgebraFlavor f) { return f == AlgebraFlavor::extended ? 11 : 10; }

std::string basis_name(int k) {
  static const char* names[] = {"chi_b",  "chi_a1", "chi_a2", "chi_a3",     "chi_v1",    "chi_v2",
                                "chi_v3", "chi_theta1", "chi_theta2", "chi_theta3", "M"};
  return names[k];
}

// ---------------------------------------------------------------------------

StructureConstantTable::StructureConstantTable(AlgebraFlavor f, double c)
    : flavor_(f), c_(c), dim_(algebra_dim(f)),
      t_(dim_, std::vector<std::vector<StructureTerm>>(dim_)) {}

double StructureConstantTable::coefficient(int i, int j, int k) const {
  double s = 0;
  for (const auto& t : t_[i][j])
    if (t.k == k) s += t.coef;
  return s;
}

void StructureConstantTable::set(int i, int j, std::vector<StructureTerm> terms) {
  std::vector<StructureTerm> neg;
  for (const auto& t : terms) neg.push_back({t.k, -t.coef});
  t_[i][j] = std::move(terms);
  t_[j][i] = std::move(neg);
}

double StructureConstantTable::max_difference(const StructureConstantTable& o) const {
  if (o.dim_ != dim_) throw MismatchError("tables of different dimension");
  double d = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        d = std::max(d, std::abs(coefficient(i, j, k) - o.coefficient(i, j, k)));
  return d;
}

double StructureConstantTable::antisymmetry_defect() const {
  double d = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        d = std::max(d, std::abs(coefficient(i, j, k) + coefficient(j, i, k)));
  return d;
}

StructureConstantTable hardcoded_table(AlgebraFlavor f, double c) {
  using namespace basis;
  StructureConstantTable t(f, c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i >= j) continue;
      for (int k = 0; k < 3; ++k) {
        const int e = levi(i, j, k);
        if (e == 0) continue;
        t.set(theta(i), theta(j), {{theta(k), double(e)}});
      }
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = levi(i, j, k);
        if (e == 0) continue;
        t.set(theta(i), a(j), {{a(k), double(e)}});
        t.set(theta(i), v(j), {{v(k), double(e)}});
      }
  for (int i = 0; i < 3; ++i) {
    switch (f) {
      case AlgebraFlavor::dual:
        t.set(v(i), a(i), {{b, 1.0 / c}});
        break;
      case AlgebraFlavor::galilei:
        t.set(v(i), b, {{a(i), 1.0}});
        break;
      case AlgebraFlavor::extended:
        t.set(v(i), b, {{a(i), 1.0}});
        t.set(v(i), a(i), {{M, 1.0}});
        break;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

AlgebraVector AlgebraVector::unit(AlgebraFlavor f, int k, double c) {
  if (k < 0 || k >= algebra_dim(f)) throw Error("basis index out of range");
  AlgebraVector x;
  x.flavor = f;
  x.c = c;
  x.coeffs[k] = 1.0;
  return x;
}

AlgebraVector AlgebraVector::operator+(const AlgebraVector& o) const {
  check_flavors(*this, o);
  AlgebraVector r = *this;
  for (int k = 0; k < basis::kMaxDim; ++k) r.coeffs[k] += o.coeffs[k];
  return r;
}

AlgebraVector AlgebraVector::operator*(double s) const {
  AlgebraVector r = *this;
  for (auto& x : r.coeffs) x *= s;
  return r;
}

double AlgebraVector::max_abs() const {
  double m = 0;
  for (double x : coeffs) m = std::max(m, std::abs(x));
  return m;
}

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y) {
  check_flavors(x, y);
  const StructureConstantTable t = hardcoded_table(x.flavor, x.c);
  AlgebraVector r;
  r.flavor = x.flavor;
  r.c = x.c;
  for (int i = 0; i < t.dim(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (int j = 0; j < t.dim(); ++j) {
      if (y.coeffs[j] == 0) continue;
      for (const auto& term : t.at(i, j)) r.coeffs[term.k] += x.coeffs[i] * y.coeffs[j] * term.coef;
    }
  }
  return r;
}

double jacobi_residual(const AlgebraVector& x, const AlgebraVector& y, const AlgebraVector& z) {
  return (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).max_abs();
}

// ---------------------------------------------------------------------------

namespace {

MatX subgroup_matrix(AlgebraFlavor f, int k, double s, double c) {
  using namespace basis;
  const Flavor gf = f == AlgebraFlavor::dual ? Flavor::dual : Flavor::galilei;
  GroupElement g = GroupElement::identity(gf, c);
  double alpha = 0.0;
  if (k == b) {
    g.b = s;
  } else if (k >= a(0) && k <= a(2)) {
    g.a[k - a(0)] = s;
  } else if (k >= v(0) && k <= v(2)) {
    g.v[k - v(0)] = f == AlgebraFlavor::dual ? -s * c : s;
  } else if (k >= theta(0) && k <= theta(2)) {
    g.R = Rotation::about_axis(k - theta(0), s);
  } else {
    alpha = -s;
  }
  if (f == AlgebraFlavor::extended) return extended_to_matrix(ExtendedGroupElement::make(alpha, g, 1.0));
  return to_affine(g);
}

}  // namespace

std::vector<MatX> generators_from_realization(AlgebraFlavor f, double c) {
  constexpr double h = 1e-6;
  std::vector<MatX> gens;
  for (int k = 0; k < algebra_dim(f); ++k) {
    auto central = [&](double step) {
      return MatX((subgroup_matrix(f, k, step, c) - subgroup_matrix(f, k, -step, c)) / (2 * step));
    };
    MatX g = (4.0 * central(h / 2) - central(h)) / 3.0;
    g = g.unaryExpr([](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; });
    gens.push_back(g);
  }
  return gens;
}

ExtractedTable extract_structure_constants(const std::vector<MatX>& gens, AlgebraFlavor f,
                                           double c) {
  const int dim = algebra_dim(f);
  if (static_cast<int>(gens.size()) != dim) throw MismatchError("generator count does not match flavor");
  const auto n = gens[0].size();
  MatX basis_mat(n, dim);
  for (int k = 0; k < dim; ++k) basis_mat.col(k) = gens[k].reshaped();
  Eigen::ColPivHouseholderQR<MatX> qr(basis_mat);
  ExtractedTable out{StructureConstantTable(f, c), 0.0};
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const MatX comm = gens[i] * gens[j] - gens[j] * gens[i];
      const Eigen::VectorXd rhs = comm.reshaped();
      const Eigen::VectorXd coef = qr.solve(rhs);
      out.fit_residual = std::max(out.fit_residual, (basis_mat * coef - rhs).cwiseAbs().maxCoeff());
      std::vector<StructureTerm> terms;
      for (int k = 0; k < dim; ++k)
        if (std::abs(coef[k]) > 1e-12) terms.push_back({k, coef[k]});
      out.table.set(i, j, std::move(terms));
    }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(int nvars, double v) {
  Polynomial p(nvars);
  if (v != 0) p.terms_[Exponents{}] = v;
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Exponents e{};
  e[i] = 1;
  return monomial(nvars, e);
}

Polynomial Polynomial::monomial(int nvars, const Exponents& e, double coef) {
  Polynomial p(nvars);
  if (coef != 0) p.terms_[e] = coef;
  return p;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    p.terms_[d] += c * e[i];
  }
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial p(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
      p.terms_[e] += c1 * c2;
    }
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p = *this;
  for (const auto& [e, c] : o.terms_) p.terms_[e] += c;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::operator*(double s) const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c *= s;
  return p;
}

double Polynomial::max_abs_coef() const {
  double m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial DiffOperator::apply(const Polynomial& f) const {
  Polynomial out(f.nvars());
  for (const auto& [coef, var] : parts) out = out + coef * f.derivative(var);
  return out;
}

std::vector<DiffOperator> differential_realization(AlgebraFlavor f, double c) {
  using P = Polynomial;
  std::vector<DiffOperator> ops;
  if (f == AlgebraFlavor::extended) {
    // Induced by the 6x6 realization: chi_k = -(G_k y) . grad over (s, x, t).
    const auto gens = generators_from_realization(f, c);
    for (const auto& g : gens) {
      DiffOperator op;
      for (int r = 0; r < 5; ++r) {
        P coef = P::constant(5, -g(r, 5));
        for (int q = 0; q < 5; ++q)
          if (g(r, q) != 0) coef = coef + P::variable(5, q) * (-g(r, q));
        if (coef.max_abs_coef() != 0) op.parts.push_back({coef, r});
      }
      ops.push_back(op);
    }
    return ops;
  }
  constexpr int n = 4, T = 3;
  DiffOperator chib;
  chib.parts.push_back({P::constant(n, -1.0), T});
  ops.push_back(chib);
  for (int i = 0; i < 3; ++i) {
    DiffOperator op;
    op.parts.push_back({P::constant(n, -1.0), i});
    ops.push_back(op);
  }
  for (int i = 0; i < 3; ++i) {
    DiffOperator op;
    if (f == AlgebraFlavor::dual)
      op.parts.push_back({P::variable(n, i) * (-1.0 / c), T});
    else
      op.parts.push_back({P::variable(n, T) * -1.0, i});
    ops.push_back(op);
  }
  for (int i = 0; i < 3; ++i) {
    DiffOperator op;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = levi(i, j, k);
        if (e != 0) op.parts.push_back({P::variable(n, j) * double(-e), k});
      }
    ops.push_back(op);
  }
  return ops;
}

std::vector<Polynomial> test_polynomials(int nvars, int max_degree) {
  std::vector<Polynomial> out;
  Polynomial::Exponents e{};
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars) {
      out.push_back(Polynomial::monomial(nvars, e));
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[var] = d;
      self(self, var + 1, left - d);
    }
    e[var] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

double differential_realization_check(AlgebraFlavor f, const std::vector<Polynomial>& tests,
                                      double c) {
  const auto ops = differential_realization(f, c);
  const auto table = hardcoded_table(f, c);
  double worst = 0;
  for (int i = 0; i < table.dim(); ++i)
    for (int j = 0; j < table.dim(); ++j)
      for (const auto& p : tests) {
        Polynomial lhs = ops[i].apply(ops[j].apply(p)) - ops[j].apply(ops[i].apply(p));
        for (const auto& t : table.at(i, j)) lhs = lhs - ops[t.k].apply(p) * t.coef;
        worst = std::max(worst, lhs.max_abs_coef());
      }
  return worst;
}

// ---------------------------------------------------------------------------

CocycleValue cocycle_gamma(const GroupElement& g2, const GroupElement& g1, double mass) {
  if (g2.flavor != Flavor::galilei || g1.flavor != Flavor::galilei)
    throw MismatchError("the dual group carries no algebraic cocycle; cocycle_gamma needs galilei elements");
  const Vec3 Rv1 = g2.R * g1.v;
  const Vec3 Ra1 = g2.R * g1.a;
  const double gamma = 0.5 * (g2.a.dot(Rv1) - g2.v.dot(Ra1) + g1.b * g2.v.dot(Rv1));
  return {gamma, mass * gamma, g2, g1};
}

ExtendedGroupElement ExtendedGroupElement::make(double alpha, const GroupElement& g, double mass) {
  if (g.flavor != Flavor::galilei) throw MismatchError("extended elements wrap galilei elements");
  if (!(mass != 0)) throw DomainError("mass must be nonzero");
  ExtendedGroupElement x;
  x.alpha = alpha;
  x.g = g;
  x.mass = mass;
  x.kappa = mass;
  return x;
}

ExtendedGroupElement extended_compose(const ExtendedGroupElement& x2,
                                      const ExtendedGroupElement& x1) {
  if (x2.mass != x1.mass || x2.kappa != x1.kappa)
    throw MismatchError("extended elements with different mass scales");
  ExtendedGroupElement r = x2;
  r.g = compose(x2.g, x1.g);
  r.alpha = x2.alpha + x1.alpha + cocycle_gamma(x2.g, x1.g, x2.mass).omega / x2.kappa;
  return r;
}

ExtendedGroupElement extended_inverse(const ExtendedGroupElement& x) {
  ExtendedGroupElement r = x;
  r.g = inverse(x.g);
  r.alpha = -x.alpha - cocycle_gamma(r.g, x.g, x.mass).omega / x.kappa;
  return r;
}

Mat6 extended_to_matrix(const ExtendedGroupElement& x) {
  const GroupElement& g = x.g;
  Mat6 m = Mat6::Identity();
  m.block<1, 3>(0, 1) = g.v.transpose() * g.R.matrix();
  m(0, 4) = 0.5 * g.v.squaredNorm();
  m(0, 5) = 0.5 * g.a.dot(g.v) - (x.kappa / x.mass) * x.alpha;
  m.block<3, 3>(1, 1) = g.R.matrix();
  m.block<3, 1>(1, 4) = g.v;
  m.block<3, 1>(1, 5) = g.a;
  m(4, 5) = g.b;
  return m;
}

}  // namespace galdual
