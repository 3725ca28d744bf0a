#include "starmap/counting.hpp"

#include "starmap/error.hpp"

namespace starmap {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::ST: return "ST";
  }
  return "?";
}

const BigInt& CountTable::at(const Partition& lambda) const {
  auto it = entries.find(lambda);
  if (it == entries.end()) {
    throw InvalidInput("no entry for " + lambda.to_string() + " in table " + family_name(family));
  }
  return it->second;
}

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& [lambda, value] : entries) sum += value;
  return sum;
}

std::vector<std::vector<BigInt>> stirling1_triangle(int n) {
  if (n < 0) throw InvalidInput("stirling1: negative n");
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n + 1));
  rows[0] = {BigInt(1)};
  for (int i = 1; i <= n; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    const auto& prev = rows[static_cast<std::size_t>(i - 1)];
    row.assign(static_cast<std::size_t>(i + 1), BigInt(0));
    for (int k = 1; k <= i; ++k) {
      BigInt v = prev[static_cast<std::size_t>(k - 1)];
      if (k <= i - 1) v += BigInt(i - 1) * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = v;
    }
  }
  return rows;
}

BigInt stirling1_unsigned(int n, int k) {
  if (n < 0 || k < 0) throw InvalidInput("stirling1: negative argument");
  if (k > n) return 0;
  return stirling1_triangle(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt count_A(const Partition& mu) {
  return exact_div(factorial(static_cast<unsigned>(mu.size())), z_of(mu), "count_A");
}

BigInt count_ST(const Partition& mu) {
  const auto n = static_cast<unsigned>(mu.size());
  const auto p = static_cast<unsigned>(mu.length());
  return exact_div(binomial(n, p) * factorial(p), aut_of(mu), "count_ST");
}

BigInt count_C(const Partition& mu) {
  return factorial(static_cast<unsigned>(mu.size() - mu.length())) * count_ST(mu);
}

BigInt count_D(const Partition& lambda) {
  return exact_div(count_C(lambda), BigInt(lambda.size() - lambda.length() + 1), "count_D");
}

CountTable table_of(Family family, int n) {
  if (family == Family::B) return solve_B(n);
  CountTable t{family, n, {}};
  for (const auto& lambda : partitions_of(n)) {
    switch (family) {
      case Family::A: t.entries.emplace(lambda, count_A(lambda)); break;
      case Family::C: t.entries.emplace(lambda, count_C(lambda)); break;
      case Family::D: t.entries.emplace(lambda, count_D(lambda)); break;
      case Family::ST: t.entries.emplace(lambda, count_ST(lambda)); break;
      case Family::B: break;
    }
  }
  return t;
}

CountTable solve_B(int n) {
  if (n < 1) throw InvalidInput("solve_B: n must be >= 1");
  CountTable t{Family::B, n, {}};
  for (const auto& lambda : partitions_of(n)) {
    if ((lambda.length() - n) % 2 != 0) {
      t.entries.emplace(lambda, 0);
      continue;
    }
    const int top = lambda.largest();
    const Partition mu = partition_up(lambda, top);
    // (n+1) * sum_i i m_i(lambda') B(lambda') = 2 A(mu); isolate the lambda' = lambda term.
    BigInt rest = 0;
    for (int part : mu.distinct_parts()) {
      const int i = part - 1;
      if (i < 1 || part == top + 1) continue;
      const Partition other = partition_down(mu, part);
      rest += BigInt(i) * other.multiplicity(i) * t.at(other);
    }
    const BigInt target = exact_div(2 * count_A(mu), BigInt(n + 1), "solve_B rhs") - rest;
    t.entries.emplace(lambda,
                      exact_div(target, BigInt(top) * lambda.multiplicity(top), "solve_B pivot"));
  }
  return t;
}

BigInt count_Bprime(const CountTable& b_table, int m) {
  BigInt sum = 0;
  for (const auto& [lambda, value] : b_table.entries) {
    if (lambda.length() == m) sum += value;
  }
  return sum;
}

BigInt count_Bprime(int n, int m) {
  if (m < 1 || m > n) throw InvalidInput("count_Bprime: need 1 <= m <= n");
  return count_Bprime(solve_B(n), m);
}

bool ZagierReport::pass() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return !rows.empty();
}

ZagierReport verify_zagier(const CountTable& b_table) {
  const int n = b_table.n;
  ZagierReport report{n, {}};
  const auto stirling = stirling1_triangle(n + 1);
  for (int m = 1; m <= n; ++m) {
    ZagierRow row;
    row.m = m;
    row.bprime = count_Bprime(b_table, m);
    row.lhs = BigInt(n) * (n + 1) / 2 * row.bprime;
    row.stirling = stirling[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(m)];
    row.parity_match = (m - n) % 2 == 0;
    row.pass = row.parity_match ? row.lhs == row.stirling : row.bprime == 0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

ZagierReport verify_zagier(int n) { return verify_zagier(solve_B(n)); }

bool check_lift_recurrence(const Partition& lambda, int part) {
  const Partition mu = partition_up(lambda, part);
  const int n = lambda.size();
  const int p = lambda.length();
  const BigInt lhs = count_ST(mu) * factorial(static_cast<unsigned>(n + 1 - p)) * part *
                     mu.multiplicity(part + 1);
  const BigInt rhs = BigInt(n + 1) * part * lambda.multiplicity(part) * count_ST(lambda) *
                     factorial(static_cast<unsigned>(n - p));
  return lhs == rhs;
}

BigInt main_identity_lhs_doubled(const Partition& mu, const CountTable& b_table) {
  BigInt sum = 0;
  for (int part : mu.distinct_parts()) {
    const int i = part - 1;
    if (i < 1) continue;
    const Partition lambda = partition_down(mu, part);
    sum += BigInt(i) * lambda.multiplicity(i) * b_table.at(lambda);
  }
  return BigInt(b_table.n + 1) * sum;
}

}  // namespace starmap
