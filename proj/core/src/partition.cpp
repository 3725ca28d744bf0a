#include "starmap/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "starmap/error.hpp"

namespace starmap {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidInput("partition parts must be positive, got " + std::to_string(p));
    size_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_exponents(std::initializer_list<std::pair<int, int>> powers) {
  std::vector<int> parts;
  for (auto [part, mult] : powers) parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<int> Partition::distinct_parts() const {
  std::vector<int> out;
  for (int p : parts_) {
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return out;
}

std::string Partition::exponential() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = parts_.rbegin(); it != parts_.rend();) {
    const int part = *it;
    int mult = 0;
    while (it != parts_.rend() && *it == part) ++mult, ++it;
    os << (first ? "" : " ") << part << '^' << mult;
    first = false;
  }
  return os.str();
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

namespace {

std::vector<int> replace_one(const Partition& p, int from, int to) {
  std::vector<int> parts = p.parts();
  auto it = std::find(parts.begin(), parts.end(), from);
  if (it == parts.end()) {
    throw InvalidInput("partition " + p.to_string() + " has no part " + std::to_string(from));
  }
  *it = to;
  return parts;
}

}  // namespace

Partition partition_up(const Partition& lambda, int part) {
  return Partition(replace_one(lambda, part, part + 1));
}

Partition partition_down(const Partition& mu, int part) {
  if (part < 2) throw InvalidInput("partition_down needs a part >= 2");
  return Partition(replace_one(mu, part, part - 1));
}

Partition partition_remove(const Partition& mu, int part) {
  std::vector<int> parts = mu.parts();
  auto it = std::find(parts.begin(), parts.end(), part);
  if (it == parts.end()) {
    throw InvalidInput("partition " + mu.to_string() + " has no part " + std::to_string(part));
  }
  parts.erase(it);
  return Partition(std::move(parts));
}

Partition partition_merge(const Partition& mu, int j, int k) {
  std::vector<int> parts = partition_remove(partition_remove(mu, j), k).parts();
  parts.push_back(j + k - 1);
  return Partition(std::move(parts));
}

BigInt z_of(const Partition& lambda) {
  BigInt z = 1;
  for (int part : lambda.distinct_parts()) {
    const int m = lambda.multiplicity(part);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= power * factorial(static_cast<unsigned>(m));
  }
  return z;
}

BigInt aut_of(const Partition& lambda) {
  BigInt a = 1;
  for (int part : lambda.distinct_parts()) a *= factorial(static_cast<unsigned>(lambda.multiplicity(part)));
  return a;
}

std::vector<Partition> partitions_of(int n, std::optional<int> parity) {
  if (n < 0) throw InvalidInput("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest-first recursion yields decreasing lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      if (!parity || (static_cast<int>(current.size()) - *parity) % 2 == 0) out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::vector<int>> distinct_arrangements(const Partition& lambda) {
  std::vector<int> seq(lambda.parts().rbegin(), lambda.parts().rend());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

}  // namespace starmap
