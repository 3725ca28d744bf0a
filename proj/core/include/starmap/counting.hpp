#pragma once

#include <map>
#include <string>
#include <vector>

#include "starmap/arith.hpp"
#include "starmap/partition.hpp"

namespace starmap {

enum class Family { A, B, C, D, ST };
std::string family_name(Family f);

/// One exact value per partition of n.
struct CountTable {
  Family family = Family::A;
  int n = 0;
  std::map<Partition, BigInt, std::greater<>> entries;  // decreasing lexicographic

  const BigInt& at(const Partition& lambda) const;
  BigInt total() const;
};

/// Unsigned Stirling numbers of the first kind; 0 when k > n.
BigInt stirling1_unsigned(int n, int k);
/// Rows 0..n of the triangle, row i holding s(i,0..i).
std::vector<std::vector<BigInt>> stirling1_triangle(int n);

/// n!/z_mu: permutations of cycle type mu.
BigInt count_A(const Partition& mu);
/// Star thorn trees of type mu: binomial(N,p) p!/prod m_i!.
BigInt count_ST(const Partition& mu);
/// (N-p)! ST(mu): black-partitioned maps of type mu.
BigInt count_C(const Partition& mu);
/// (N-p)! ST(lambda)/(N-p+1): black-partitioned star maps of type lambda.
BigInt count_D(const Partition& lambda);

CountTable table_of(Family family, int n);

/// Solves for every B(lambda), lambda |- n, from the instances of
///   (n+1)/2 * sum_{i>0} i m_i(mu^{down(i+1)}) B(mu^{down(i+1)}) = A(mu)
/// at mu = lambda^{up(lambda_1)}, visiting partitions in decreasing
/// lexicographic order so that every other unknown is already known.
/// Entries of length not congruent to n mod 2 are 0.
CountTable solve_B(int n);

/// B'(n,m): sum of B(lambda) over lambda |- n with m parts.
BigInt count_Bprime(const CountTable& b_table, int m);
BigInt count_Bprime(int n, int m);

struct ZagierRow {
  int m = 0;
  BigInt bprime;
  BigInt lhs;       // n(n+1)/2 * B'(n,m)
  BigInt stirling;  // s(n+1,m)
  bool parity_match = false;
  bool pass = false;
};

struct ZagierReport {
  int n = 0;
  std::vector<ZagierRow> rows;
  bool pass() const;
};

/// Checks n(n+1)/2 B'(n,m) = s(n+1,m) for m = n mod 2 and B'(n,m) = 0
/// otherwise, for m = 1..n. B' values come from `b_table`.
ZagierReport verify_zagier(const CountTable& b_table);
ZagierReport verify_zagier(int n);

/// ST(mu)(N+1-p)! i m_{i+1}(mu) == (N+1) i m_i(lambda) ST(lambda) (N-p)!
/// with mu = lambda^{up(i)}.
bool check_lift_recurrence(const Partition& lambda, int part);

/// Instance of the main identity at mu |- n+1 (requires length(mu) = n mod 2):
/// returns (n+1) * sum_{i>0} i m_i(lambda) B(lambda) over lambda = mu^{down(i+1)}
/// using the given table for |lambda| = n. Equals 2 A(mu) when the table is right.
BigInt main_identity_lhs_doubled(const Partition& mu, const CountTable& b_table);

}  // namespace starmap
