#include "starmap/symfun.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>

#include "starmap/counting.hpp"
#include "starmap/error.hpp"

namespace starmap {
namespace {

constexpr int kMaxDegree = 12;

struct DegreeIndex {
  std::vector<Partition> partitions;
  std::map<Partition, std::size_t> position;
};

struct DegreeData {
  std::once_flag index_once;
  DegreeIndex index;
  std::once_flag matrix_once;
  std::vector<std::vector<Rational>> p_to_m;
  std::vector<std::vector<Rational>> m_to_p;
};

DegreeData& degree_data(int degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw InvalidInput("symmetric functions are supported up to degree " + std::to_string(kMaxDegree));
  }
  static std::array<DegreeData, kMaxDegree + 1> data;
  return data[static_cast<std::size_t>(degree)];
}

const DegreeIndex& degree_index(int degree) {
  DegreeData& d = degree_data(degree);
  std::call_once(d.index_once, [&] {
    d.index.partitions = partitions_of(degree);
    for (std::size_t i = 0; i < d.index.partitions.size(); ++i) d.index.position[d.index.partitions[i]] = i;
  });
  return d.index;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Inconsistency("power-sum transition matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

// Coefficient of x_1^{l_1} ... x_k^{l_k} in p_nu, multiplying the power sums
// one at a time in k variables and dropping every monomial that already
// exceeds lambda in some variable.
BigInt monomial_coefficient(const Partition& nu, const Partition& lambda) {
  std::map<std::vector<int>, BigInt> states{{lambda.parts(), BigInt(1)}};  // remaining exponents
  for (int part : nu.parts()) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [rest, count] : states) {
      for (std::size_t v = 0; v < rest.size(); ++v) {
        if (rest[v] < part) continue;
        std::vector<int> r = rest;
        r[v] -= part;
        next[r] += count;
      }
    }
    states = std::move(next);
  }
  auto it = states.find(std::vector<int>(static_cast<std::size_t>(lambda.length()), 0));
  return it == states.end() ? BigInt(0) : it->second;
}

void build_matrices(int degree, DegreeData& d) {
  const auto& parts = degree_index(degree).partitions;
  d.p_to_m.assign(parts.size(), std::vector<Rational>(parts.size(), Rational(0)));
  for (std::size_t row = 0; row < parts.size(); ++row) {
    for (std::size_t col = 0; col < parts.size(); ++col) {
      d.p_to_m[row][col] = Rational(monomial_coefficient(parts[row], parts[col]));
    }
  }
  d.m_to_p = invert(d.p_to_m);
}

DegreeData& matrices(int degree) {
  DegreeData& d = degree_data(degree);
  std::call_once(d.matrix_once, [&] { build_matrices(degree, d); });
  return d;
}

Rational power(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

SymPoly change_basis(const SymPoly& f, const std::vector<std::vector<Rational>>& matrix, Basis target) {
  SymPoly out(f.degree(), target);
  const auto& parts = f.index();
  for (std::size_t row = 0; row < parts.size(); ++row) {
    const Rational& c = f.coefficients()[row];
    if (c == 0) continue;
    for (std::size_t col = 0; col < parts.size(); ++col) {
      if (matrix[row][col] != 0) out.add(parts[col], c * matrix[row][col]);
    }
  }
  return out;
}

void compare(IdentityReport& report, const std::string& prefix, const SymPoly& lhs, const SymPoly& rhs) {
  const auto& parts = lhs.index();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Rational& l = lhs.coefficients()[i];
    const Rational& r = rhs.coefficients()[i];
    report.checks.push_back({prefix + "[" + parts[i].exponential() + "]", to_string(l), to_string(r), l == r});
  }
}

struct FamilyValues {
  std::map<Partition, BigInt> first;   // C or D
  std::map<Partition, BigInt> second;  // A or B
};

}  // namespace

std::string basis_name(Basis b) { return b == Basis::Monomial ? "monomial" : "powersum"; }

SymPoly::SymPoly(int degree, Basis basis) : degree_(degree), basis_(basis) {
  coeffs_.assign(degree_index(degree).partitions.size(), Rational(0));
}

SymPoly SymPoly::basis_element(Basis basis, const Partition& lambda) {
  SymPoly f(lambda.size(), basis);
  f.set(lambda, 1);
  return f;
}

const std::vector<Partition>& SymPoly::index() const { return degree_index(degree_).partitions; }

std::size_t SymPoly::slot(const Partition& lambda) const {
  const auto& pos = degree_index(degree_).position;
  auto it = pos.find(lambda);
  if (it == pos.end()) {
    throw InvalidInput("partition " + lambda.to_string() + " is not of degree " + std::to_string(degree_));
  }
  return it->second;
}

const Rational& SymPoly::coeff(const Partition& lambda) const { return coeffs_[slot(lambda)]; }
// Callers may hand in unreduced fractions; equality needs canonical form.
void SymPoly::set(const Partition& lambda, const Rational& value) {
  Rational& c = coeffs_[slot(lambda)];
  c = value;
  c.canonicalize();
}
void SymPoly::add(const Partition& lambda, const Rational& value) {
  Rational v = value;
  v.canonicalize();
  coeffs_[slot(lambda)] += v;
}

std::vector<std::pair<Partition, Rational>> SymPoly::terms() const {
  std::vector<std::pair<Partition, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(index()[i], coeffs_[i]);
  }
  return out;
}

Rational SymPoly::evaluate(std::span<const Rational> raw) const {
  std::vector<Rational> point(raw.begin(), raw.end());
  for (Rational& x : point) x.canonicalize();
  const int vars = static_cast<int>(point.size());
  Rational total = 0;
  for (const auto& [lambda, c] : terms()) {
    Rational value = 0;
    if (basis_ == Basis::PowerSum) {
      value = 1;
      for (int part : lambda.parts()) {
        Rational sum = 0;
        for (const auto& x : point) sum += power(x, part);
        value *= sum;
      }
    } else if (lambda.length() <= vars) {
      std::vector<int> exponents(lambda.parts());
      exponents.resize(static_cast<std::size_t>(vars), 0);
      std::sort(exponents.begin(), exponents.end());
      do {
        Rational term = 1;
        for (int t = 0; t < vars; ++t) term *= power(point[static_cast<std::size_t>(t)], exponents[static_cast<std::size_t>(t)]);
        value += term;
      } while (std::next_permutation(exponents.begin(), exponents.end()));
    }
    total += c * value;
  }
  return total;
}

void SymPoly::require_compatible(const SymPoly& other) const {
  if (degree_ != other.degree_ || basis_ != other.basis_) {
    throw InvalidInput("symmetric functions differ in degree or basis");
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial Polynomial::constant(int variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(std::vector<int>(static_cast<std::size_t>(variables), 0), c);
  return p;
}

Polynomial Polynomial::power_sum(int variables, int k) {
  Polynomial p(variables);
  for (int t = 0; t < variables; ++t) {
    std::vector<int> e(static_cast<std::size_t>(variables), 0);
    e[static_cast<std::size_t>(t)] = k;
    p.add_term(e, 1);
  }
  return p;
}

Rational Polynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const std::vector<int>& exponents, const Rational& c) {
  if (static_cast<int>(exponents.size()) != variables_) throw InvalidInput("polynomial: wrong exponent length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (variables_ != other.variables_) throw InvalidInput("polynomial: variable count mismatch");
  Polynomial out(variables_);
  std::vector<int> e(static_cast<std::size_t>(variables_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t t = 0; t < e.size(); ++t) e[t] = ea[t] + eb[t];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (variables_ != other.variables_) throw InvalidInput("polynomial: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * scalar);
  return out;
}

Polynomial Polynomial::apply_delta() const {
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e[t] == 0) continue;
      std::vector<int> shifted = e;
      ++shifted[t];
      out.add_term(shifted, c * e[t]);
    }
  }
  return out;
}

Polynomial expand(const SymPoly& f, int variables) {
  Polynomial out(variables);
  for (const auto& [lambda, c] : f.terms()) {
    if (f.basis() == Basis::PowerSum) {
      Polynomial prod = Polynomial::constant(variables, c);
      for (int part : lambda.parts()) prod = prod * Polynomial::power_sum(variables, part);
      out += prod;
    } else if (lambda.length() <= variables) {
      std::vector<int> exponents(lambda.parts());
      exponents.resize(static_cast<std::size_t>(variables), 0);
      std::sort(exponents.begin(), exponents.end());
      do {
        out.add_term(exponents, c);
      } while (std::next_permutation(exponents.begin(), exponents.end()));
    }
  }
  return out;
}

const std::vector<std::vector<Rational>>& powersum_to_monomial_matrix(int degree) { return matrices(degree).p_to_m; }
const std::vector<std::vector<Rational>>& monomial_to_powersum_matrix(int degree) { return matrices(degree).m_to_p; }

SymPoly p_to_m(const SymPoly& f) {
  if (f.basis() != Basis::PowerSum) throw InvalidInput("p_to_m: input is not in the power-sum basis");
  return change_basis(f, powersum_to_monomial_matrix(f.degree()), Basis::Monomial);
}

SymPoly m_to_p(const SymPoly& f) {
  if (f.basis() != Basis::Monomial) throw InvalidInput("m_to_p: input is not in the monomial basis");
  return change_basis(f, monomial_to_powersum_matrix(f.degree()), Basis::PowerSum);
}

SymPoly to_basis(const SymPoly& f, Basis target) {
  if (f.basis() == target) return f;
  return target == Basis::Monomial ? p_to_m(f) : m_to_p(f);
}

SymPoly delta(const SymPoly& f) {
  if (f.basis() != Basis::PowerSum) throw InvalidInput("delta: convert to the power-sum basis first");
  SymPoly out(f.degree() + 1, Basis::PowerSum);
  for (const auto& [pi, c] : f.terms()) {
    for (int i : pi.distinct_parts()) out.add(partition_up(pi, i), c * i * pi.multiplicity(i));
  }
  return out;
}

SymPoly delta_monomial(const SymPoly& f) {
  if (f.basis() != Basis::Monomial) throw InvalidInput("delta_monomial: input is not in the monomial basis");
  SymPoly out(f.degree() + 1, Basis::Monomial);
  for (const auto& [lambda, c] : f.terms()) {
    for (int i : lambda.distinct_parts()) {
      const Partition mu = partition_up(lambda, i);
      out.add(mu, c * i * mu.multiplicity(i + 1));
    }
  }
  return out;
}

SymPoly multiply_powersum(const SymPoly& a, const SymPoly& b) {
  if (a.basis() != Basis::PowerSum || b.basis() != Basis::PowerSum) {
    throw InvalidInput("multiply_powersum: inputs must be in the power-sum basis");
  }
  SymPoly out(a.degree() + b.degree(), Basis::PowerSum);
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      std::vector<int> parts = la.parts();
      parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
      out.add(Partition(std::move(parts)), ca * cb);
    }
  }
  return out;
}

SymPoly elementary_in_p(int n) {
  if (n < 1) throw InvalidInput("elementary_in_p: n must be >= 1");
  SymPoly e(n, Basis::PowerSum);
  for (const auto& nu : e.index()) {
    Rational c(1, 1);
    c /= Rational(z_of(nu));
    if ((n - nu.length()) % 2 != 0) c = -c;
    e.set(nu, c);
  }
  return e;
}

bool IdentityReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

SymPoly weighted_monomials(int n, const std::map<Partition, BigInt>& counts) {
  SymPoly f(n, Basis::Monomial);
  for (const auto& [lambda, value] : counts) f.set(lambda, Rational(value * aut_of(lambda)));
  return f;
}

SymPoly powersums(int n, const std::map<Partition, BigInt>& counts) {
  SymPoly f(n, Basis::PowerSum);
  for (const auto& [lambda, value] : counts) f.set(lambda, Rational(value));
  return f;
}

FamilyValues gather(int n, bool star, CountSource source, const Budget& budget) {
  FamilyValues v;
  const CountTable b_table = star && source == CountSource::Formula ? solve_B(n) : CountTable{};
  for (const auto& lambda : partitions_of(n)) {
    if (source == CountSource::Formula) {
      v.first[lambda] = star ? count_D(lambda) : count_C(lambda);
      v.second[lambda] = star ? b_table.at(lambda) : count_A(lambda);
    } else {
      const CDCount cd = enumerate_CD(lambda, budget);
      v.first[lambda] = star ? cd.d : cd.c;
      v.second[lambda] = star ? enumerate_B(lambda, budget) : enumerate_A(lambda, budget);
    }
  }
  return v;
}

IdentityReport verify_series(const char* name, int n, bool star, CountSource source, const Budget& budget) {
  if (n < 1) throw InvalidInput(std::string(name) + ": n must be >= 1");
  const FamilyValues v = gather(n, star, source, budget);
  IdentityReport report{name, n, {}};
  const SymPoly lhs = weighted_monomials(n, v.first);
  const SymPoly rhs = p_to_m(powersums(n, v.second));
  compare(report, "m", lhs, rhs);
  return report;
}

}  // namespace

IdentityReport verify_C2A(int n, CountSource source, const Budget& budget) {
  return verify_series("C2A", n, false, source, budget);
}

IdentityReport verify_D2B(int n, CountSource source, const Budget& budget) {
  return verify_series("D2B", n, true, source, budget);
}

IdentityReport verify_reduction(int n) {
  if (n < 1) throw InvalidInput("verify_reduction: n must be >= 1");
  const int top = n + 1;
  IdentityReport report{"reduction", n, {}};

  std::map<Partition, BigInt> c_values;
  for (const auto& mu : partitions_of(top)) c_values[mu] = count_C(mu);
  std::map<Partition, BigInt> d_values;
  for (const auto& lambda : partitions_of(n)) d_values[lambda] = count_D(lambda);

  const Partition ones(std::vector<int>(static_cast<std::size_t>(top), 1));
  const Rational top_factorial(factorial(static_cast<unsigned>(top)));

  SymPoly lhs = weighted_monomials(top, c_values);
  lhs.add(ones, -top_factorial);
  const SymPoly d_series = weighted_monomials(n, d_values);

  // Two routes for Delta: the monomial formula, and conversion through power sums.
  const SymPoly delta_m = delta_monomial(d_series) * Rational(top);
  const SymPoly delta_p = delta(m_to_p(d_series)) * Rational(top);
  compare(report, "monomial-identity", lhs, delta_m);
  compare(report, "delta-routes", m_to_p(delta_m), delta_p);

  // (n+1)! m_{1^{n+1}} = (n+1)! e_{n+1}
  compare(report, "elementary", m_to_p(SymPoly::basis_element(Basis::Monomial, ones) * top_factorial),
          elementary_in_p(top) * top_factorial);

  // Coefficient extraction in the power-sum basis.
  const SymPoly lhs_p = m_to_p(lhs);
  const CountTable b_table = solve_B(n);
  for (const auto& mu : partitions_of(top)) {
    const bool parity = (mu.length() - n) % 2 == 0;
    const BigInt expected_lhs = parity ? BigInt(2 * count_A(mu)) : BigInt(0);
    report.checks.push_back({"extract-lhs[" + mu.exponential() + "]", expected_lhs.get_str(),
                             to_string(lhs_p.coeff(mu)), lhs_p.coeff(mu) == Rational(expected_lhs)});
    const BigInt from_b = main_identity_lhs_doubled(mu, b_table);
    report.checks.push_back({"extract-rhs[" + mu.exponential() + "]", from_b.get_str(),
                             to_string(delta_p.coeff(mu)), delta_p.coeff(mu) == Rational(from_b)});
    if (parity) {
      report.checks.push_back({"main-identity[" + mu.exponential() + "]", BigInt(2 * count_A(mu)).get_str(),
                               from_b.get_str(), from_b == 2 * count_A(mu)});
    }
  }
  return report;
}

}  // namespace starmap
