#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "starmap/arith.hpp"
#include "starmap/oracle.hpp"
#include "starmap/partition.hpp"

namespace starmap {

enum class Basis { Monomial, PowerSum };
std::string basis_name(Basis b);

/// Homogeneous symmetric function of a fixed degree, stored densely over the
/// partitions of that degree (in decreasing lexicographic order).
class SymPoly {
 public:
  SymPoly(int degree, Basis basis);
  static SymPoly basis_element(Basis basis, const Partition& lambda);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::vector<Partition>& index() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  const Rational& coeff(const Partition& lambda) const;
  void set(const Partition& lambda, const Rational& value);
  void add(const Partition& lambda, const Rational& value);
  /// Nonzero terms in index order.
  std::vector<std::pair<Partition, Rational>> terms() const;

  /// Value at a point; the number of variables is point.size().
  Rational evaluate(std::span<const Rational> point) const;

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly& operator*=(const Rational& scalar);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }
  friend SymPoly operator*(const Rational& s, SymPoly a) { return a *= s; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.degree_ == b.degree_ && a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t slot(const Partition& lambda) const;
  void require_compatible(const SymPoly& other) const;

  int degree_;
  Basis basis_;
  std::vector<Rational> coeffs_;
};

/// Explicit polynomial in a fixed number of variables: exponent vector -> coefficient.
class Polynomial {
 public:
  explicit Polynomial(int variables) : variables_(variables) {}
  static Polynomial constant(int variables, const Rational& c);
  /// x_1^k + ... + x_v^k
  static Polynomial power_sum(int variables, int k);

  int variables() const { return variables_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  Rational coefficient(const std::vector<int>& exponents) const;
  void add_term(const std::vector<int>& exponents, const Rational& c);

  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial operator*(const Rational& scalar) const;
  /// sum_i x_i^2 d/dx_i
  Polynomial apply_delta() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int variables_;
  std::map<std::vector<int>, Rational> terms_;  // zero coefficients are never stored
};

/// Expands a symmetric function into `variables` variables.
Polynomial expand(const SymPoly& f, int variables);

/// Coefficient of m_lambda in p_nu, for all nu, lambda |- degree, computed by
/// multiplying out power sums in l(lambda) variables. Row nu, column lambda.
const std::vector<std::vector<Rational>>& powersum_to_monomial_matrix(int degree);
/// Its exact inverse.
const std::vector<std::vector<Rational>>& monomial_to_powersum_matrix(int degree);

SymPoly p_to_m(const SymPoly& f);
SymPoly m_to_p(const SymPoly& f);
SymPoly to_basis(const SymPoly& f, Basis target);

/// Delta(p_pi) = sum over distinct parts i of i m_i(pi) p_{pi^{up(i)}};
/// input must be in the power-sum basis.
SymPoly delta(const SymPoly& f);
/// Delta(m_lambda) = sum over distinct parts i of i m_{i+1}(mu) m_mu with
/// mu = lambda^{up(i)}; input must be in the monomial basis.
SymPoly delta_monomial(const SymPoly& f);

/// p_a * p_b = p_{a u b} on power-sum vectors.
SymPoly multiply_powersum(const SymPoly& a, const SymPoly& b);

/// e_n = sum_{nu |- n} (-1)^{n - l(nu)} p_nu / z_nu.
SymPoly elementary_in_p(int n);

/// One compared quantity of an identity report.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct IdentityReport {
  std::string name;
  int n = 0;
  std::vector<Check> checks;
  bool pass() const;
};

/// Where the counts feeding an identity come from.
enum class CountSource { Formula, Oracle };

/// sum_mu C(mu) Aut(mu) m_mu == sum_nu A(nu) p_nu at degree n, coefficient-wise
/// in the monomial basis.
IdentityReport verify_C2A(int n, CountSource source = CountSource::Formula, const Budget& budget = {});
/// sum_lambda D(lambda) Aut(lambda) m_lambda == sum_pi B(pi) p_pi at degree n.
IdentityReport verify_D2B(int n, CountSource source = CountSource::Formula, const Budget& budget = {});

/// At degree n+1:
///   sum_mu C(mu) Aut(mu) m_mu - (n+1)! m_{1^{n+1}} == (n+1) Delta(sum_lambda Aut(lambda) D(lambda) m_lambda),
/// checked through both Delta routes. Coefficient extraction then gives the
/// main identity at each mu, compared against solve_B and count_A.
IdentityReport verify_reduction(int n);

}  // namespace starmap
