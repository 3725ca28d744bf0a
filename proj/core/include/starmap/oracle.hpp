#pragma once

#include "starmap/arith.hpp"
#include "starmap/partition.hpp"

namespace starmap {

/// Size limits for exhaustive sweeps; exceeding one raises BudgetExceeded.
struct Budget {
  int permutation_sweep = 8;  ///< S_n sweeps (8! = 40320 permutations)
  int pair_sweep = 6;         ///< (beta, pi) pairs and permuted thorn trees
};

/// Always in lowest terms with a positive denominator (GMP canonical form).
using ExactRational = Rational;

/// Permutations of {1..n} with cycle type lambda, by a full S_n sweep.
BigInt enumerate_A(const Partition& lambda, const Budget& budget = {});
/// As enumerate_A, additionally requiring (1 2 ... n) beta^{-1} to be a long cycle.
BigInt enumerate_B(const Partition& lambda, const Budget& budget = {});
/// Permutations beta of {1..n} with m cycles and (1 2 ... n) beta^{-1} long.
BigInt enumerate_Bprime(int n, int m, const Budget& budget = {});
/// Permutations of {1..n} with k cycles.
BigInt enumerate_stirling1(int n, int k, const Budget& budget = {});

struct CDCount {
  BigInt c;  ///< all pairs (beta, pi) with pi of type lambda and beta inside pi
  BigInt d;  ///< those whose complement (1 2 ... n) beta^{-1} is a long cycle
};

CDCount enumerate_CD(const Partition& lambda, const Budget& budget = {});

/// Builds every white-slot pattern and every black degree assignment of a star
/// thorn tree of size |mu| and counts those of type mu.
BigInt enumerate_ST(const Partition& mu, const Budget& budget = {});

/// D(lambda)/C(lambda) by exact counting.
ExactRational reformulation_probability(const Partition& lambda, const Budget& budget = {});

/// |permutations_in(pi)| for every pi of type lambda; true when all equal.
bool block_group_size_is_constant(const Partition& lambda, const Budget& budget = {});

}  // namespace starmap
