#include <gtest/gtest.h>

#include "starmap/error.hpp"
#include "starmap/symfun.hpp"
#include "support/generators.hpp"

namespace starmap {
namespace {

SymPoly p(const Partition& lambda) { return SymPoly::basis_element(Basis::PowerSum, lambda); }
SymPoly m(const Partition& lambda) { return SymPoly::basis_element(Basis::Monomial, lambda); }

SymPoly random_poly(gen::Engine& rng, int degree, Basis basis) {
  SymPoly f(degree, basis);
  for (const Partition& lambda : f.index()) f.set(lambda, Rational(gen::uniform(rng, -9, 9), gen::uniform(rng, 1, 5)));
  return f;
}

TEST(Basis, DegreeOne) { EXPECT_EQ(p_to_m(p(Partition{1})), m(Partition{1})); }

TEST(Basis, DegreeTwo) {
  const SymPoly p2 = p_to_m(p(Partition{2}));
  EXPECT_EQ(p2.coeff(Partition{2}), 1);
  EXPECT_EQ(p2.coeff(Partition{1, 1}), 0);
  const SymPoly p11 = p_to_m(p(Partition{1, 1}));
  EXPECT_EQ(p11.coeff(Partition{2}), 1);
  EXPECT_EQ(p11.coeff(Partition{1, 1}), 2);
  // Evaluation at (1,1) and (1,2).
  for (const std::vector<Rational>& point : {std::vector<Rational>{1, 1}, std::vector<Rational>{1, 2}}) {
    EXPECT_EQ(p(Partition{2}).evaluate(point), p2.evaluate(point));
    EXPECT_EQ(p(Partition{1, 1}).evaluate(point), p11.evaluate(point));
  }
  EXPECT_EQ(p(Partition{1, 1}).evaluate(std::vector<Rational>{1, 2}), 9);
}

// Independent route: expand the power sums in `degree` variables.
TEST(Basis, MatrixMatchesFullExpansion) {
  for (int degree = 1; degree <= 6; ++degree) {
    const auto& matrix = powersum_to_monomial_matrix(degree);
    const auto parts = partitions_of(degree);
    for (std::size_t row = 0; row < parts.size(); ++row) {
      const Polynomial full = expand(p(parts[row]), degree);
      for (std::size_t col = 0; col < parts.size(); ++col) {
        std::vector<int> exponents = parts[col].parts();
        exponents.resize(static_cast<std::size_t>(degree), 0);
        EXPECT_EQ(matrix[row][col], full.coefficient(exponents)) << parts[row].to_string() << " " << parts[col].to_string();
      }
    }
  }
}

TEST(Basis, InverseMatrix) {
  for (int degree = 1; degree <= 8; ++degree) {
    const auto& a = powersum_to_monomial_matrix(degree);
    const auto& b = monomial_to_powersum_matrix(degree);
    const std::size_t size = a.size();
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        Rational sum = 0;
        for (std::size_t k = 0; k < size; ++k) sum += a[i][k] * b[k][j];
        EXPECT_EQ(sum, i == j ? 1 : 0);
      }
    }
  }
}

TEST(Basis, RoundTrip) {
  gen::Engine rng(1234);
  for (int degree = 1; degree <= 7; ++degree) {
    for (int trial = 0; trial < 5; ++trial) {
      const SymPoly f = random_poly(rng, degree, Basis::Monomial);
      EXPECT_EQ(p_to_m(m_to_p(f)), f);
      const SymPoly g = random_poly(rng, degree, Basis::PowerSum);
      EXPECT_EQ(m_to_p(p_to_m(g)), g);
      EXPECT_EQ(to_basis(g, Basis::PowerSum), g);
    }
  }
}

TEST(Basis, EvaluationIsBasisIndependent) {
  gen::Engine rng(555);
  for (int degree = 1; degree <= 6; ++degree) {
    const SymPoly f = random_poly(rng, degree, Basis::PowerSum);
    const SymPoly g = p_to_m(f);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Rational> point(static_cast<std::size_t>(gen::uniform(rng, 1, degree)));
      for (Rational& x : point) {
        x = Rational(gen::uniform(rng, -4, 4), gen::uniform(rng, 1, 3));
        x.canonicalize();
      }
      EXPECT_EQ(f.evaluate(point), g.evaluate(point));
      EXPECT_EQ(f.evaluate(point), [&] {
        // Direct evaluation of the explicit polynomial.
        const Polynomial e = expand(f, static_cast<int>(point.size()));
        Rational total = 0;
        for (const auto& [exps, c] : e.terms()) {
          Rational term = c;
          for (std::size_t v = 0; v < exps.size(); ++v) {
            for (int k = 0; k < exps[v]; ++k) term *= point[v];
          }
          total += term;
        }
        return total;
      }());
    }
  }
}

TEST(Basis, DegreeBounds) {
  EXPECT_NO_THROW(powersum_to_monomial_matrix(12));
  EXPECT_THROW(SymPoly(13, Basis::Monomial), InvalidInput);
  EXPECT_THROW(p_to_m(m(Partition{2})), InvalidInput);
  EXPECT_THROW(m_to_p(p(Partition{2})), InvalidInput);
  EXPECT_THROW(m(Partition{2}) + m(Partition{1, 1, 1}), InvalidInput);
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(p(Partition{1})), p(Partition{2}));
  EXPECT_EQ(delta(p(Partition{2, 2})), p(Partition{3, 2}) * Rational(4));
  EXPECT_THROW(delta(m(Partition{2})), InvalidInput);
}

TEST(Delta, MatchesDifferentialOperator) {
  const Polynomial lhs = expand(p(Partition{2, 2}), 5).apply_delta();
  EXPECT_EQ(lhs, expand(p(Partition{3, 2}) * Rational(4), 5));
  gen::Engine rng(77);
  for (int degree = 1; degree <= 5; ++degree) {
    const SymPoly f = random_poly(rng, degree, Basis::PowerSum);
    EXPECT_EQ(expand(f, degree + 1).apply_delta(), expand(delta(f), degree + 1));
  }
}

TEST(Delta, DerivationLaw) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (const Partition& pa : partitions_of(a)) {
        for (const Partition& pb : partitions_of(b)) {
          const SymPoly product = multiply_powersum(p(pa), p(pb));
          const SymPoly want = multiply_powersum(delta(p(pa)), p(pb)) + multiply_powersum(p(pa), delta(p(pb)));
          EXPECT_EQ(delta(product), want) << pa.to_string() << " " << pb.to_string();
        }
      }
    }
  }
}

TEST(Delta, Linearity) {
  gen::Engine rng(3);
  for (int degree = 1; degree <= 6; ++degree) {
    const SymPoly f = random_poly(rng, degree, Basis::PowerSum);
    const SymPoly g = random_poly(rng, degree, Basis::PowerSum);
    EXPECT_EQ(delta(f * Rational(3) + g), delta(f) * Rational(3) + delta(g));
  }
}

TEST(Delta, MonomialFormulaAgrees) {
  gen::Engine rng(11);
  for (int degree = 1; degree <= 7; ++degree) {
    const SymPoly f = random_poly(rng, degree, Basis::Monomial);
    EXPECT_EQ(delta_monomial(f), p_to_m(delta(m_to_p(f))));
  }
}

TEST(Elementary, Examples) {
  EXPECT_EQ(elementary_in_p(1), p(Partition{1}));
  const SymPoly e2 = elementary_in_p(2);
  EXPECT_EQ(e2.coeff(Partition{1, 1}), Rational(1, 2));
  EXPECT_EQ(e2.coeff(Partition{2}), Rational(-1, 2));
  EXPECT_EQ(expand(e2, 3).coefficient({1, 1, 0}), 1);
  EXPECT_EQ(expand(e2, 3).coefficient({2, 0, 0}), 0);
}

TEST(Elementary, IsTheSquarefreeMonomial) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(p_to_m(elementary_in_p(n)), m(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));
  }
}

TEST(Identities, GeneratingSeries) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_TRUE(verify_C2A(n).pass()) << n;
    EXPECT_TRUE(verify_D2B(n).pass()) << n;
  }
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(verify_C2A(n, CountSource::Oracle).pass()) << n;
    EXPECT_TRUE(verify_D2B(n, CountSource::Oracle).pass()) << n;
  }
  const IdentityReport one = verify_D2B(1);
  ASSERT_EQ(one.checks.size(), 1u);
  EXPECT_EQ(one.checks[0].expected, "1");
}

TEST(Identities, Reduction) {
  for (int n = 1; n <= 9; ++n) {
    const IdentityReport r = verify_reduction(n);
    EXPECT_TRUE(r.pass()) << n;
    int main_identity = 0;
    for (const Check& c : r.checks) main_identity += c.name.rfind("main-identity", 0) == 0 ? 1 : 0;
    EXPECT_EQ(main_identity, static_cast<int>(partitions_of(n + 1, n % 2).size()));
  }
}

}  // namespace
}  // namespace starmap
