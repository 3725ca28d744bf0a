// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are
// exact (integers and reduced rationals), so the tolerance is zero.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starmap/bijection.hpp"
#include "starmap/counting.hpp"
#include "starmap/oracle.hpp"
#include "starmap/symfun.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace starmap;

constexpr int kTolerance = 0;  // exact equality everywhere

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Outcome zagier() {
  Outcome out;
  for (int n = 1; n <= 7; ++n) {
    const BigInt factor = BigInt(n) * (n + 1) / 2;
    for (int m = 1; m <= n; ++m) {
      const BigInt brute = enumerate_Bprime(n, m);
      const BigInt s = stirling1_unsigned(n + 1, m);
      const std::string tag = "N=" + std::to_string(n) + " m=" + std::to_string(m);
      if ((n - m) % 2 == 0) {
        out.expect(factor * brute == s, tag + ": N(N+1)/2 B'=" + to_string(BigInt(factor * brute)) + " vs s=" + to_string(s));
      } else {
        out.expect(brute == 0, tag + ": off-parity B'=" + to_string(brute));
      }
    }
  }
  for (int n = 1; n <= 20; ++n) {
    const ZagierReport report = verify_zagier(n);
    out.expect(report.pass(), "solver B' fails at N=" + std::to_string(n));
  }
  return out;
}

Outcome refined_identity() {
  Outcome out;
  for (int n = 1; n <= 7; ++n) {
    const CountTable table = solve_B(n);
    for (const Partition& lambda : partitions_of(n)) {
      const BigInt solved = table.at(lambda);
      const BigInt brute = enumerate_B(lambda);
      out.expect(solved == brute, lambda.to_string() + ": solver " + to_string(solved) + " vs oracle " + to_string(brute));
      if ((n - lambda.length()) % 2 != 0) out.expect(solved == 0, lambda.to_string() + ": off-parity entry nonzero");
    }
  }
  return out;
}

Outcome probability() {
  Outcome out;
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const Rational got = reformulation_probability(lambda);
      const Rational want(1, n - lambda.length() + 1);
      out.expect(got == want, lambda.to_string() + ": " + to_string(got) + " vs " + to_string(want));
    }
  }
  return out;
}

Outcome bijection() {
  Outcome out;
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const std::string tag = lambda.to_string();
      std::set<PermutedThornTree> images;
      BigInt maps = 0;
      for_each_map(lambda, true, [&](const BlackPartitionedMap& m) {
        ++maps;
        const PermutedThornTree t = psi(m);
        out.expect(images.insert(t).second, tag + ": psi not injective");
        const InverseOutcome back = psi_inverse(t);
        const auto* ok = std::get_if<InverseSuccess>(&back);
        out.expect(ok != nullptr && ok->map == m, tag + ": psi_inverse(psi(m)) != m");
      });
      BigInt in_image = 0;
      for_each_permuted_tree(lambda, [&](const PermutedThornTree& t) {
        const bool image = is_image(classify(t));
        const InverseOutcome back = psi_inverse(t);
        const auto* ok = std::get_if<InverseSuccess>(&back);
        out.expect(image == (ok != nullptr), tag + ": classify and psi_inverse disagree");
        if (ok != nullptr) out.expect(psi(ok->map) == t, tag + ": psi(psi_inverse(t)) != t");
        out.expect(image == (images.count(t) == 1), tag + ": image set differs from classify");
        if (image) ++in_image;
      });
      const int p = lambda.length();
      const BigInt formula = exact_div(factorial(static_cast<unsigned>(n - p)) * count_ST(lambda), BigInt(n - p + 1), "D");
      out.expect(in_image == count_D(lambda) && in_image == formula && maps == in_image,
                 tag + ": |image|=" + to_string(in_image) + " maps=" + to_string(maps) + " D=" + to_string(count_D(lambda)));
    }
  }
  return out;
}

Outcome proportions() {
  Outcome out;
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const int p = lambda.length();
      const ProportionStats s = proportion_stats(lambda);
      const std::string tag = lambda.to_string();
      out.expect(s.p == Rational(1, n - p + 1), tag + ": P=" + to_string(s.p));
      Rational want_prime(n, p * (n - p + 1));
      want_prime.canonicalize();
      out.expect(s.p_prime == want_prime, tag + ": P'=" + to_string(s.p_prime));
      Rational p1(s.with_p1, s.total);
      p1.canonicalize();
      Rational want_p1(p, n);
      want_p1.canonicalize();
      out.expect(p1 == want_p1, tag + ": P1 incidence " + to_string(p1));
    }
  }
  return out;
}

Outcome phi() {
  Outcome out;
  for (int n = 2; n <= 5; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      if (mu.length() < 2) continue;
      const std::string tag = mu.to_string();
      std::map<std::pair<int, int>, BigInt> left;
      std::map<std::pair<int, int>, std::set<std::pair<PermutedThornTree, BlackElement>>> images;
      for_each_permuted_tree(mu, [&](const PermutedThornTree& t) {
        if (!t.has_p1()) return;
        const AuxGraph g = aux_graph(t);
        const bool p2 = g.is_tree();
        for (int v = 0; v < g.vertex_count; ++v) {
          if (v == g.root || g.successor[static_cast<std::size_t>(v)] == v) continue;
          const int k = t.tree().degree(v);
          const int j = t.tree().degree(g.successor[static_cast<std::size_t>(v)]);
          ++left[{j, k}];
          const ContractResult c = contract(t, v);
          out.expect(c.j == j && c.k == k, tag + ": contract reports wrong (j,k)");
          out.expect(c.tree.type() == partition_merge(mu, j, k), tag + ": contracted type");
          out.expect(c.tree.has_p1(), tag + ": contracted tree lost P1");
          out.expect(is_image(classify(c.tree)) == p2, tag + ": P2 status changed by contract");
          out.expect(images[{j, k}].insert({c.tree, c.marked}).second, tag + ": contract not injective");
          const ExpandResult e = expand(c.tree, c.marked, k);
          out.expect(e.tree == t && e.marked_vertex == v, tag + ": expand(contract(x)) != x");
        }
      });
      // Right-hand sides, built from the smaller type.
      std::set<std::pair<int, int>> pairs;
      for (int k : mu.distinct_parts()) {
        for (int j : mu.distinct_parts()) {
          if (j == k && mu.multiplicity(j) < 2) continue;
          pairs.insert({j, k});
        }
      }
      for (auto [j, k] : pairs) {
        const Partition small = partition_merge(mu, j, k);
        BigInt right = 0;
        BigInt p1_trees = 0;
        for_each_permuted_tree(small, [&](const PermutedThornTree& t) {
          if (!t.has_p1()) return;
          ++p1_trees;
          const bool p2 = is_image(classify(t));
          for (int u = 0; u < t.tree().black_count(); ++u) {
            if (t.tree().degree(u) != j + k - 1) continue;
            std::vector<BlackElement> marks{{u, BlackElement::kEdge}};
            for (int c = k - 1; c < t.tree().thorns_of(u); ++c) marks.push_back({u, c});
            for (const BlackElement& mark : marks) {
              ++right;
              const ExpandResult e = expand(t, mark, k);
              out.expect(e.tree.type() == mu && e.tree.has_p1(), tag + ": expanded type or P1");
              out.expect(is_image(classify(e.tree)) == p2, tag + ": P2 status changed by expand");
              const ContractResult c = contract(e.tree, e.marked_vertex);
              out.expect(c.tree == t && c.marked == mark && c.j == j && c.k == k, tag + ": contract(expand(y)) != y");
            }
          }
        });
        const BigInt stated = p1_trees * j * small.multiplicity(j + k - 1);
        const std::string jk = "(j,k)=(" + std::to_string(j) + "," + std::to_string(k) + ")";
        out.expect(right == stated, tag + " " + jk + ": right side " + to_string(right) + " vs " + to_string(stated));
        out.expect(left[{j, k}] == stated, tag + " " + jk + ": left side " + to_string(left[{j, k}]) + " vs " + to_string(stated));
      }
    }
  }
  return out;
}

Outcome counting_consistency() {
  Outcome out;
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      out.expect(enumerate_ST(mu) == count_ST(mu), mu.to_string() + ": ST oracle vs formula");
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const CDCount cd = enumerate_CD(lambda);
      out.expect(cd.c == count_C(lambda) && cd.d == count_D(lambda), lambda.to_string() + ": C/D oracle vs formula");
    }
  }
  for (int n = 1; n <= 7; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (int i : lambda.distinct_parts()) {
        out.expect(check_lift_recurrence(lambda, i), lambda.to_string() + " i=" + std::to_string(i) + ": lift recurrence");
      }
    }
  }
  return out;
}

Outcome symmetric_functions() {
  Outcome out;
  auto record = [&](const IdentityReport& r) {
    for (const Check& c : r.checks) {
      out.expect(c.pass, r.name + " n=" + std::to_string(r.n) + " " + c.name + ": expected " + c.expected + ", got " + c.actual);
    }
    out.expect(!r.checks.empty(), r.name + " n=" + std::to_string(r.n) + ": no checks ran");
  };
  for (int n = 1; n <= 5; ++n) {
    record(verify_C2A(n));
    record(verify_D2B(n));
  }
  for (int n = 1; n <= 4; ++n) record(verify_reduction(n));
  return out;
}

Outcome paper_fixtures() {
  Outcome out;
  const BlackPartitionedMap m = fixtures::example21_map();
  out.expect(m.alpha().to_cycle_string() == "(1 2 6 7 4 5 3)", "alpha = " + m.alpha().to_cycle_string());
  out.expect(m.type() == Partition{4, 2, 1}, "type of Example 2.1");
  const LabeledThornTree labeled = psi_label(m);
  out.expect(labeled.right_to_left() == std::vector<int>{1, 2, 6, 7, 4, 5, 3}, "white labels right to left");
  const int triangle = labeled.tree().vertex_at(0);
  out.expect(labeled.clockwise_labels(triangle) == std::vector<int>{1, 6, 7, 3}, "clockwise reading around the 4-block");
  const InverseOutcome back = psi_inverse(psi(m));
  const auto* ok = std::get_if<InverseSuccess>(&back);
  out.expect(ok != nullptr && ok->map == m && ok->labeled == labeled, "Example 2.1 round trip");

  const InverseOutcome ex1 = psi_inverse(fixtures::ex1_tree());
  const auto* inv = std::get_if<InverseSuccess>(&ex1);
  out.expect(inv != nullptr, "ex1 inversion failed");
  if (inv != nullptr) {
    out.expect(inv->map.alpha().to_cycle_string() == "(1 3 2 4 5)", "ex1 alpha = " + inv->map.alpha().to_cycle_string());
    out.expect(inv->map.beta().to_cycle_string() == "(1 3 2)(4)(5)", "ex1 beta = " + inv->map.beta().to_cycle_string());
    out.expect(inv->map.pi() == SetPartition(5, {{1, 2, 3}, {4, 5}}), "ex1 pi = " + inv->map.pi().to_string());
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "N(N+1)/2 B'(N,m) == s(N+1,m), N<=7 (oracle), N<=20 (solver)", zagier},
      {2, "type-refined identity: solve_B == enumerate_B, N<=7", refined_identity},
      {3, "reformulation probability 1/(N-p+1), N<=6", probability},
      {4, "bijection: injective, round trips, image == P1 and P2, N<=6", bijection},
      {5, "proportions P, P', P1 incidence, N<=6", proportions},
      {6, "contraction bijection and set cardinalities, N<=5", phi},
      {7, "counting consistency ST/C/D/lift recurrence", counting_consistency},
      {8, "symmetric-function identities", symmetric_functions},
      {9, "worked examples", paper_fixtures},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%d checks, tolerance %d, %.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", c.id,
                c.name, out.checks, kTolerance, secs, out.pass ? "" : " -- ", out.detail.c_str());
    if (!out.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
