#pragma once

#include <complex>
#include <map>
#include <vector>

namespace unipoint {

using Cplx = std::complex<double>;

/// Point of projective space given by affine coordinates in C^{num_vars}.
struct ComplexPoint {
  std::vector<Cplx> coords;

  ComplexPoint() = default;
  explicit ComplexPoint(std::vector<Cplx> c) : coords(std::move(c)) {}

  size_t dim() const { return coords.size(); }

  /// Divides by the coordinate of largest modulus, making it exactly 1.
  /// Throws Error(input) for the zero vector.
  ComplexPoint max_normalized() const;

  double max_abs() const;
};

/// Degree-d form in num_vars variables, sparse map from exponent vectors
/// (entries sum to the degree) to nonzero complex coefficients. Exponent
/// vectors compare lexicographically, which fixes every iteration order.
class HomogeneousPoly {
public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Cplx>;

  HomogeneousPoly(int num_vars, int degree);
  HomogeneousPoly(int num_vars, int degree, TermMap terms);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Inserts or overwrites one term; a coefficient of exactly zero erases it.
  void set_term(const Exponents& exponents, Cplx coeff);
  Cplx coeff(const Exponents& exponents) const;

  double max_coeff() const;
  /// Scaled so the largest coefficient modulus is 1.
  HomogeneousPoly unit_scaled() const;
  HomogeneousPoly scaled(Cplx factor) const;

  /// d/dx_var, homogeneous of degree-1 lower (degree >= 1 required).
  HomogeneousPoly partial(int var) const;

  HomogeneousPoly operator*(const HomogeneousPoly& other) const;
  HomogeneousPoly operator+(const HomogeneousPoly& other) const;

  /// All exponent vectors of the full degree-d monomial basis, lex order.
  static std::vector<Exponents> monomial_basis(int num_vars, int degree);

private:
  int num_vars_;
  int degree_;
  TermMap terms_;

  void validate_exponents(const Exponents& exponents) const;
};

/// Value of the form at x; per-monomial powers accumulated in the map's
/// lexicographic term order so the summation order is reproducible.
Cplx eval(const HomogeneousPoly& f, const ComplexPoint& x);

/// The num_vars partial derivatives, each homogeneous of degree d-1.
std::vector<HomogeneousPoly> gradient(const HomogeneousPoly& f);

/// alpha*f + beta*g for forms of identical shape.
HomogeneousPoly linear_combination(Cplx alpha, const HomogeneousPoly& f,
                                   Cplx beta, const HomogeneousPoly& g);

/// Dense univariate polynomial, coefficients ascending. Trailing coefficients
/// below zero_threshold * max|coeff| are trimmed at construction, so degree()
/// is the index of the last coefficient that counts.
class UnivariatePoly {
public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Cplx> coeffs, double zero_threshold = 1e-12);

  static UnivariatePoly constant(Cplx value);
  /// prod (t - r_i) scaled by lead.
  static UnivariatePoly from_roots(const std::vector<Cplx>& roots, Cplx lead = 1.0);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Cplx>& coeffs() const { return coeffs_; }
  Cplx coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<size_t>(k)] : Cplx(0.0);
  }
  Cplx leading() const { return coeffs_.empty() ? Cplx(0.0) : coeffs_.back(); }
  double max_coeff() const;

  Cplx operator()(Cplx t) const;  // Horner
  UnivariatePoly derivative() const;
  /// Scaled so the largest coefficient modulus is 1.
  UnivariatePoly unit_scaled() const;

  UnivariatePoly operator+(const UnivariatePoly& other) const;
  UnivariatePoly operator-(const UnivariatePoly& other) const;
  UnivariatePoly operator*(const UnivariatePoly& other) const;
  UnivariatePoly scaled(Cplx factor) const;

private:
  std::vector<Cplx> coeffs_;
};

}  // namespace unipoint
