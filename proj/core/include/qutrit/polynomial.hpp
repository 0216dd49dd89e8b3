#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qutrit {

/// Sparse real polynomial in a fixed number of variables.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int variables = 0) : variables_(variables) {}

  static Polynomial constant(int variables, double value);
  /// coefficient * x_index.
  static Polynomial linear(int variables, int index, double coefficient = 1.0);

  int variables() const { return variables_; }
  int degree() const;
  bool is_zero(double tolerance = 0.0) const;

  void add_term(const Exponents& exponents, double coefficient);
  double coefficient(const Exponents& exponents) const;
  const std::map<Exponents, double>& terms() const { return terms_; }

  /// Part of exactly the given total degree.
  Polynomial homogeneous_part(int degree) const;
  double max_abs_coefficient() const;

  double operator()(const Eigen::VectorXd& x) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(double scale) const;

  /// Drops coefficients with magnitude <= tolerance.
  Polynomial pruned(double tolerance) const;

  /// Human readable, e.g. "3*n1^2 - 6*n1^2*n8 + 1", highest degree first.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int variables_;
  std::map<Exponents, double> terms_;
};

/// All exponent vectors of total degree <= max_degree, graded order.
std::vector<Polynomial::Exponents> monomials_up_to(int variables, int max_degree);

}  // namespace qutrit
