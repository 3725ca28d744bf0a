#include "starmap/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "starmap/error.hpp"

namespace starmap {

Permutation::Permutation(int n) {
  if (n < 1) throw InvalidInput("permutation size must be positive");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  Permutation p(n);
  std::vector<char> seen(images.size(), 0);
  for (int k = 0; k < n; ++k) {
    const int v = images[static_cast<std::size_t>(k)];
    if (v < 1 || v > n) {
      throw InvalidInput("permutation image " + std::to_string(v) + " outside 1.." +
                         std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidInput("permutation image " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
    p.images_[static_cast<std::size_t>(k)] = v - 1;
  }
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<Cycle>& cycles) {
  Permutation p(n);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const int a = cycle[t];
      if (a < 1 || a > n) throw InvalidInput("cycle element " + std::to_string(a) + " out of range");
      if (used[static_cast<std::size_t>(a - 1)]) {
        throw InvalidInput("element " + std::to_string(a) + " appears in two cycles");
      }
      used[static_cast<std::size_t>(a - 1)] = 1;
      const int b = cycle[(t + 1) % cycle.size()];
      p.images_[static_cast<std::size_t>(a - 1)] = b - 1;
    }
  }
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

std::vector<Permutation::Cycle> Permutation::cycles() const {
  const int n = size();
  std::vector<Cycle> out;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  // Scanning from the top, the first unseen element of a cycle is its maximum.
  for (int top = n; top >= 1; --top) {
    if (seen[static_cast<std::size_t>(top - 1)]) continue;
    Cycle c;
    int k = (*this)(top);
    while (true) {
      seen[static_cast<std::size_t>(k - 1)] = 1;
      c.push_back(k);
      if (k == top) break;
      k = (*this)(k);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

int Permutation::cycle_count() const {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int count = 0;
  for (int k = 0; k < n; ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    ++count;
    for (int j = k; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
    }
  }
  return count;
}

bool Permutation::is_long_cycle() const {
  int len = 1;
  for (int j = images_[0]; j != 0; j = images_[static_cast<std::size_t>(j)]) ++len;
  return len == size();
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k)) return false;
  }
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::vector<Cycle> cs = cycles();
  for (auto& c : cs) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(cs.begin(), cs.end(), [](const Cycle& a, const Cycle& b) { return a[0] < b[0]; });
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t t = 0; t < c.size(); ++t) os << (t ? " " : "") << c[t];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) {
    throw InvalidInput("compose: size mismatch " + std::to_string(f.size()) + " vs " +
                       std::to_string(g.size()));
  }
  Permutation r(f.size());
  for (std::size_t k = 0; k < r.images_.size(); ++k) {
    r.images_[k] = f.images_[static_cast<std::size_t>(g.images_[k])];
  }
  return r;
}

Permutation inverse(const Permutation& f) {
  Permutation r(f.size());
  for (std::size_t k = 0; k < r.images_.size(); ++k) {
    r.images_[static_cast<std::size_t>(f.images_[k])] = static_cast<int>(k);
  }
  return r;
}

Permutation canonical_long_cycle(int n) {
  if (n < 1) throw InvalidInput("canonical_long_cycle: n must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) images[static_cast<std::size_t>(k - 1)] = k % n + 1;
  return Permutation::from_images(images);
}

}  // namespace starmap
