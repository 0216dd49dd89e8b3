#include "qutrit/polynomial.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qutrit {

namespace {

int total(const Polynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Polynomial Polynomial::constant(int variables, double value) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), value);
  return p;
}

Polynomial Polynomial::linear(int variables, int index, double coefficient) {
  Exponents e(variables, 0);
  e.at(index) = 1;
  Polynomial p(variables);
  p.add_term(e, coefficient);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    if (c != 0.0) d = std::max(d, total(e));
  return d;
}

bool Polynomial::is_zero(double tolerance) const { return max_abs_coefficient() <= tolerance; }

void Polynomial::add_term(const Exponents& exponents, double coefficient) {
  if (static_cast<int>(exponents.size()) != variables_) {
    throw std::invalid_argument("Polynomial: exponent vector has wrong length");
  }
  if (coefficient == 0.0) return;
  double& slot = terms_[exponents];
  slot += coefficient;
  if (slot == 0.0) terms_.erase(exponents);
}

double Polynomial::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? 0.0 : it->second;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial p(variables_);
  for (const auto& [e, c] : terms_)
    if (total(e) == degree) p.add_term(e, c);
  return p;
}

double Polynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::operator()(const Eigen::VectorXd& x) const {
  if (x.size() != variables_) throw std::invalid_argument("Polynomial: point has wrong dimension");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c;
    for (int a = 0; a < variables_; ++a) term *= std::pow(x[a], e[a]);
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.variables_ != variables_) throw std::invalid_argument("Polynomial: variable count mismatch");
  Polynomial p = *this;
  for (const auto& [e, c] : other.terms_) p.add_term(e, c);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other * -1.0; }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.variables_ != variables_) throw std::invalid_argument("Polynomial: variable count mismatch");
  Polynomial p(variables_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      Exponents e(variables_);
      for (int a = 0; a < variables_; ++a) e[a] = e1[a] + e2[a];
      p.add_term(e, c1 * c2);
    }
  }
  return p;
}

Polynomial Polynomial::operator*(double scale) const {
  Polynomial p(variables_);
  for (const auto& [e, c] : terms_) p.add_term(e, c * scale);
  return p;
}

Polynomial Polynomial::pruned(double tolerance) const {
  Polynomial p(variables_);
  for (const auto& [e, c] : terms_)
    if (std::abs(c) > tolerance) p.add_term(e, c);
  return p;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != variables_) {
    throw std::invalid_argument("Polynomial: need one name per variable");
  }
  if (terms_.empty()) return "0";

  // Highest degree first, then by exponent order.
  std::vector<std::pair<Exponents, double>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int ta = total(a.first);
    const int tb = total(b.first);
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });

  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0.0;
    const double mag = std::abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (int a = 0; a < variables_; ++a) {
      if (e[a] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[a];
      if (e[a] > 1) mono += "^" + std::to_string(e[a]);
    }
    if (mono.empty()) {
      out += format_number(mag);
    } else if (std::abs(mag - 1.0) <= 1e-12) {
      out += mono;
    } else {
      out += format_number(mag) + "*" + mono;
    }
  }
  return out;
}

std::vector<Polynomial::Exponents> monomials_up_to(int variables, int max_degree) {
  std::vector<Polynomial::Exponents> out;
  Polynomial::Exponents e(variables, 0);
  for (int d = 0; d <= max_degree; ++d) {
    // Enumerate compositions of d into `variables` parts.
    std::vector<Polynomial::Exponents> level;
    std::function<void(int, int)> rec;
    rec = [&](int pos, int left) {
      if (pos == variables - 1) {
        e[pos] = left;
        level.push_back(e);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    if (variables > 0) rec(0, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace qutrit
