#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "starmap/bijection.hpp"
#include "starmap/counting.hpp"
#include "starmap/dot.hpp"
#include "starmap/error.hpp"
#include "starmap/symfun.hpp"

namespace starmap::cli {
namespace {

void require_range(const char* what, int n, int lo, int hi) {
  if (n < lo) throw InvalidInput(std::string(what) + ": n must be at least " + std::to_string(lo));
  if (n > hi) throw BudgetExceeded(what, n, hi);
}

bool parity_ok(const Partition& lambda, const Options& options) {
  return !options.parity || (lambda.length() - *options.parity) % 2 == 0;
}

std::string provenance_of(const Options& options, const char* formula = "formula") {
  return options.source == Source::Oracle ? "oracle" : formula;
}

struct Row {
  std::string key;  // partition in exponential notation, or m
  Json parts;       // part list, or null
  BigInt value;
};

void emit_rows(const std::string& family, int n, const std::string& key_name, const std::string& provenance,
               const std::vector<Row>& rows, const Options& options, std::ostream& out) {
  if (options.format == Format::Csv) {
    out << key_name << ",value,provenance\n";
    for (const Row& r : rows) out << r.key << ',' << r.value.get_str() << ',' << provenance << '\n';
    return;
  }
  Json j;
  j["family"] = family;
  j["n"] = n;
  j["provenance"] = provenance;
  Json entries = Json::array();
  for (const Row& r : rows) {
    Json e;
    e[key_name] = r.key;
    if (!r.parts.is_null()) e["parts"] = r.parts;
    e["value"] = r.value.get_str();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  out << j.dump() << '\n';
}

void write_stirling(int n, const Options& options, std::ostream& out) {
  const bool oracle = options.source == Source::Oracle;
  require_range("table stirling", n, 1, oracle ? options.budget.permutation_sweep : kStirlingLimit);
  const auto triangle = stirling1_triangle(n);
  auto value = [&](int i, int k) { return oracle ? enumerate_stirling1(i, k, options.budget) : triangle[i][k]; };
  const std::string provenance = provenance_of(options);
  if (options.format == Format::Csv) {
    out << "n,s(n;1..n)," << "provenance\n";
    for (int i = 1; i <= n; ++i) {
      out << i;
      for (int k = 1; k <= i; ++k) out << ',' << value(i, k).get_str();
      out << ',' << provenance << '\n';
    }
    return;
  }
  Json j;
  j["family"] = "stirling";
  j["n"] = n;
  j["provenance"] = provenance;
  Json rows = Json::array();
  for (int i = 1; i <= n; ++i) {
    Json values = Json::array();
    for (int k = 1; k <= i; ++k) values.push_back(value(i, k).get_str());
    rows.push_back(Json{{"n", i}, {"values", std::move(values)}});
  }
  j["rows"] = std::move(rows);
  out << j.dump() << '\n';
}

}  // namespace

void RunReport::finish() {
  if (status == "refused") return;
  status = "pass";
  for (const Item& item : items) {
    if (!item.pass()) status = "fail";
  }
}

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["status"] = status;
  if (!message.empty()) j["message"] = message;
  Json list = Json::array();
  for (const Item& item : items) {
    list.push_back(Json{{"check", item.check},
                        {"expected", item.expected},
                        {"actual", item.actual},
                        {"provenance", item.provenance},
                        {"pass", item.pass()}});
  }
  j["items"] = std::move(list);
  return j;
}

void write_table(const std::string& family, int n, const Options& options, std::ostream& out) {
  if (family == "stirling") {
    write_stirling(n, options, out);
    return;
  }
  const bool oracle = options.source == Source::Oracle;
  const int limit = oracle ? (family == "C" || family == "D" ? options.budget.pair_sweep : options.budget.permutation_sweep)
                           : kFormulaLimit;
  require_range(("table " + family).c_str(), n, 1, limit);

  if (family == "Bprime") {
    std::vector<Row> rows;
    const CountTable b = oracle ? CountTable{} : solve_B(n);
    for (int m = 1; m <= n; ++m) {
      rows.push_back({std::to_string(m), Json(), oracle ? enumerate_Bprime(n, m, options.budget) : count_Bprime(b, m)});
    }
    emit_rows("Bprime", n, "m", provenance_of(options, "solver"), rows, options, out);
    return;
  }

  std::function<BigInt(const Partition&)> value;
  std::string provenance = provenance_of(options);
  CountTable solved;
  if (family == "A") {
    value = [&](const Partition& l) { return oracle ? enumerate_A(l, options.budget) : count_A(l); };
  } else if (family == "B") {
    if (!oracle) solved = solve_B(n);
    provenance = provenance_of(options, "solver");
    value = [&](const Partition& l) { return oracle ? enumerate_B(l, options.budget) : solved.at(l); };
  } else if (family == "C") {
    value = [&](const Partition& l) { return oracle ? enumerate_CD(l, options.budget).c : count_C(l); };
  } else if (family == "D") {
    value = [&](const Partition& l) { return oracle ? enumerate_CD(l, options.budget).d : count_D(l); };
  } else if (family == "ST") {
    value = [&](const Partition& l) { return oracle ? enumerate_ST(l, options.budget) : count_ST(l); };
  } else {
    throw InvalidInput("unknown family '" + family + "' (A, B, Bprime, C, D, ST, stirling)");
  }
  std::vector<Row> rows;
  for (const Partition& lambda : partitions_of(n)) {
    if (!parity_ok(lambda, options)) continue;
    rows.push_back({lambda.exponential(), to_json(lambda), value(lambda)});
  }
  emit_rows(family, n, "partition", provenance, rows, options, out);
}

namespace {

void add(RunReport& r, std::string check, const std::string& expected, const std::string& actual,
         const std::string& provenance) {
  r.items.push_back({std::move(check), expected, actual, provenance});
}

std::string str(const BigInt& x) { return x.get_str(); }

void suite_zagier(RunReport& r, int n, const Options& options) {
  const bool oracle = options.source == Source::Oracle;
  require_range("verify zagier", n, 1, oracle ? options.budget.permutation_sweep : kFormulaLimit);
  const std::string provenance = provenance_of(options, "solver");
  for (int size = 1; size <= n; ++size) {
    const CountTable b = oracle ? CountTable{} : solve_B(size);
    for (int m = 1; m <= size; ++m) {
      const BigInt bprime = oracle ? enumerate_Bprime(size, m, options.budget) : count_Bprime(b, m);
      const std::string tag = "N=" + std::to_string(size) + ",m=" + std::to_string(m);
      if ((size - m) % 2 == 0) {
        const BigInt lhs = bprime * size * (size + 1) / 2;
        add(r, "N(N+1)/2*B'(" + tag + ")", str(stirling1_unsigned(size + 1, m)), str(lhs), provenance);
      } else {
        add(r, "B'(" + tag + ")", "0", str(bprime), provenance);
      }
    }
  }
}

void suite_reformulation(RunReport& r, int n, const Options& options) {
  require_range("verify reformulation", n, 1, options.budget.pair_sweep);
  for (const Partition& lambda : partitions_of(n)) {
    if (!parity_ok(lambda, options)) continue;
    const Rational want(1, n - lambda.length() + 1);
    add(r, "P" + lambda.to_string(), to_string(want), to_string(reformulation_probability(lambda, options.budget)), "oracle");
  }
}

void suite_identities(RunReport& r, int n, const Options& options) {
  const bool oracle = options.source == Source::Oracle;
  require_range("verify identities", n, 1, oracle ? options.budget.pair_sweep : kIdentityLimit);
  const CountSource source = oracle ? CountSource::Oracle : CountSource::Formula;
  const std::string provenance = provenance_of(options);
  for (const IdentityReport& report :
       {verify_C2A(n, source, options.budget), verify_D2B(n, source, options.budget), verify_reduction(n)}) {
    for (const Check& c : report.checks) {
      add(r, report.name + " " + c.name, c.expected, c.actual, report.name == "reduction" ? "formula" : provenance);
    }
  }
}

void suite_bijection(RunReport& r, int n, const Options& options) {
  require_range("verify bijection", n, 1, options.budget.pair_sweep);
  for (const Partition& lambda : partitions_of(n)) {
    if (!parity_ok(lambda, options)) continue;
    const std::string tag = "[" + lambda.exponential() + "]";
    std::set<PermutedThornTree> images;
    BigInt maps = 0;
    BigInt round_trips = 0;
    for_each_map(
        lambda, true,
        [&](const BlackPartitionedMap& m) {
          ++maps;
          const PermutedThornTree t = psi(m);
          images.insert(t);
          const InverseOutcome back = psi_inverse(t);
          const auto* ok = std::get_if<InverseSuccess>(&back);
          if (ok != nullptr && ok->map == m) ++round_trips;
        },
        options.budget);
    BigInt trees = 0;
    BigInt agree = 0;
    BigInt in_image = 0;
    for_each_permuted_tree(
        lambda,
        [&](const PermutedThornTree& t) {
          ++trees;
          const bool image = is_image(classify(t));
          const InverseOutcome back = psi_inverse(t);
          const auto* ok = std::get_if<InverseSuccess>(&back);
          const bool success = ok != nullptr && psi(ok->map) == t;
          if (image == success && image == (images.count(t) == 1)) ++agree;
          if (image) ++in_image;
        },
        options.budget);
    add(r, "distinct psi images" + tag, str(maps), std::to_string(images.size()), "oracle");
    add(r, "psi_inverse(psi(m)) == m" + tag, str(maps), str(round_trips), "oracle");
    add(r, "classify agrees with psi_inverse" + tag, str(trees), str(agree), "oracle");
    add(r, "image size == D" + tag, str(count_D(lambda)), str(in_image), "oracle");
  }
}

void suite_proportions(RunReport& r, int n, const Options& options) {
  require_range("verify proportions", n, 1, options.budget.pair_sweep);
  for (const Partition& lambda : partitions_of(n)) {
    if (!parity_ok(lambda, options)) continue;
    const int p = lambda.length();
    const ProportionStats s = proportion_stats(lambda, options.budget);
    const std::string tag = lambda.to_string();
    Rational want_prime(n, p * (n - p + 1));
    want_prime.canonicalize();
    Rational p1(s.with_p1, s.total);
    p1.canonicalize();
    Rational want_p1(p, n);
    want_p1.canonicalize();
    add(r, "P" + tag, to_string(Rational(1, n - p + 1)), to_string(s.p), "oracle");
    add(r, "P'" + tag, to_string(want_prime), to_string(s.p_prime), "oracle");
    add(r, "P1 incidence" + tag, to_string(want_p1), to_string(p1), "oracle");
  }
}

void suite_counting(RunReport& r, int n, const Options& options) {
  require_range("verify counting", n, 1, options.budget.pair_sweep);
  for (const Partition& lambda : partitions_of(n)) {
    if (!parity_ok(lambda, options)) continue;
    const std::string tag = "[" + lambda.exponential() + "]";
    const CDCount cd = enumerate_CD(lambda, options.budget);
    add(r, "ST" + tag, str(count_ST(lambda)), str(enumerate_ST(lambda, options.budget)), "oracle");
    add(r, "C" + tag, str(count_C(lambda)), str(cd.c), "oracle");
    add(r, "D" + tag, str(count_D(lambda)), str(cd.d), "oracle");
    for (int i : lambda.distinct_parts()) {
      add(r, "lift recurrence" + tag + " i=" + std::to_string(i), "true",
          check_lift_recurrence(lambda, i) ? "true" : "false", "formula");
    }
  }
}

void suite_contraction(RunReport& r, int n, const Options& options) {
  require_range("verify contraction", n, 2, options.budget.pair_sweep);
  for (const Partition& mu : partitions_of(n)) {
    if (mu.length() < 2 || !parity_ok(mu, options)) continue;
    std::map<std::pair<int, int>, BigInt> left;
    std::map<std::pair<int, int>, BigInt> left_ok;
    for_each_permuted_tree(
        mu,
        [&](const PermutedThornTree& t) {
          if (!t.has_p1()) return;
          const AuxGraph g = aux_graph(t);
          for (int v = 0; v < g.vertex_count; ++v) {
            const int succ = g.successor[static_cast<std::size_t>(v)];
            if (v == g.root || succ == v) continue;
            const std::pair<int, int> jk{t.tree().degree(succ), t.tree().degree(v)};
            ++left[jk];
            const ContractResult c = contract(t, v);
            const ExpandResult e = expand(c.tree, c.marked, jk.second);
            if (e.tree == t && e.marked_vertex == v && is_image(classify(c.tree)) == g.is_tree()) ++left_ok[jk];
          }
        },
        options.budget);
    for (const auto& [jk, count] : left) {
      const auto [j, k] = jk;
      const Partition small = partition_merge(mu, j, k);
      BigInt p1_trees = 0;
      BigInt right = 0;
      BigInt right_ok = 0;
      for_each_permuted_tree(
          small,
          [&](const PermutedThornTree& t) {
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
                const ContractResult c = contract(e.tree, e.marked_vertex);
                if (c.tree == t && c.marked == mark && is_image(classify(e.tree)) == p2) ++right_ok;
              }
            }
          },
          options.budget);
      const BigInt stated = p1_trees * j * small.multiplicity(j + k - 1);
      const std::string tag = mu.to_string() + " j=" + std::to_string(j) + " k=" + std::to_string(k);
      add(r, "marked trees " + tag, str(stated), str(count), "oracle");
      add(r, "marked contractions " + tag, str(stated), str(right), "oracle");
      add(r, "contract round trips " + tag, str(count), str(left_ok[jk]), "oracle");
      add(r, "expand round trips " + tag, str(right), str(right_ok), "oracle");
    }
  }
}

}  // namespace

RunReport verify(const std::string& suite, int n, const Options& options) {
  RunReport r;
  r.command = "verify " + suite + " " + std::to_string(n);
  if (suite == "zagier") {
    suite_zagier(r, n, options);
  } else if (suite == "reformulation") {
    suite_reformulation(r, n, options);
  } else if (suite == "identities") {
    suite_identities(r, n, options);
  } else if (suite == "bijection") {
    suite_bijection(r, n, options);
  } else if (suite == "proportions") {
    suite_proportions(r, n, options);
  } else if (suite == "counting") {
    suite_counting(r, n, options);
  } else if (suite == "contraction") {
    suite_contraction(r, n, options);
  } else {
    throw InvalidInput("unknown suite '" + suite +
                       "' (zagier, reformulation, identities, bijection, proportions, counting, contraction)");
  }
  r.finish();
  return r;
}

Json transform(const std::string& direction, std::string_view input) {
  const Json j = parse_json(input);
  if (direction == "psi") return to_json(psi(map_from_json(j)));
  if (direction == "invert") return to_json(psi_inverse(tree_from_json(j)));
  if (direction == "classify") return to_json(classify(tree_from_json(j)));
  if (direction == "contract") {
    if (!j.is_object() || !j.contains("tree") || !j.contains("vertex")) {
      throw ParseError("contract expects {\"tree\":...,\"vertex\":v}", "/");
    }
    if (!j["vertex"].is_number_integer()) throw ParseError("expected an integer", "/vertex");
    const ContractResult c = contract(tree_from_json(j["tree"]), j["vertex"].get<int>());
    Json out;
    out["tree"] = to_json(c.tree);
    out["marked"] = to_json(c.marked);
    out["j"] = c.j;
    out["k"] = c.k;
    return out;
  }
  if (direction == "expand") {
    if (!j.is_object() || !j.contains("tree") || !j.contains("marked") || !j.contains("k")) {
      throw ParseError("expand expects {\"tree\":...,\"marked\":{...},\"k\":k}", "/");
    }
    if (!j["k"].is_number_integer()) throw ParseError("expected an integer", "/k");
    const ExpandResult e = expand(tree_from_json(j["tree"]), element_from_json(j["marked"], "/marked"), j["k"].get<int>());
    Json out;
    out["tree"] = to_json(e.tree);
    out["vertex"] = e.marked_vertex;
    return out;
  }
  throw InvalidInput("unknown transform '" + direction + "' (psi, invert, classify, contract, expand)");
}

std::string export_dot(std::string_view input, const std::string& view) {
  const Json j = parse_json(input);
  if (detect_kind(j) == ObjectKind::Map) {
    const BlackPartitionedMap m = map_from_json(j);
    if (view == "auto" || view == "map") return to_dot(m);
    if (view == "labeled") return to_dot(psi_label(m));
    if (view == "tree") return to_dot(psi(m));
    if (view == "aux") return to_dot(aux_graph(psi(m)));
  } else {
    const PermutedThornTree t = tree_from_json(j);
    if (view == "auto" || view == "tree") return to_dot(t);
    if (view == "aux") return to_dot(aux_graph(t));
    if (view == "map" || view == "labeled") {
      const InverseOutcome back = psi_inverse(t);
      const auto* ok = std::get_if<InverseSuccess>(&back);
      if (ok == nullptr) throw InvalidInput("tree is not in the image of psi; no map to draw");
      return view == "map" ? to_dot(ok->map) : to_dot(ok->labeled);
    }
  }
  throw InvalidInput("unknown view '" + view + "' (auto, map, labeled, tree, aux)");
}

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write " + path);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, verification suites and the star-map/thorn-tree bijection", "starmap"};
  app.require_subcommand(1);

  Options options;
  std::string format = "csv";
  std::string source = "formula";
  std::optional<int> parity;
  int budget = options.budget.pair_sweep;
  int perm_budget = options.budget.permutation_sweep;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "Largest n for (beta, pi) pair and thorn-tree sweeps")->capture_default_str();
    sub->add_option("--perm-budget", perm_budget, "Largest n for full S_n sweeps")->capture_default_str();
    sub->add_option("--parity", parity, "Keep partitions whose length has this parity (0 or 1)")
        ->check(CLI::IsMember({0, 1}));
  };

  std::string family;
  int n = 0;
  auto* table = app.add_subcommand("table", "Count table for one family");
  table->add_option("family", family, "A | B | Bprime | C | D | ST | stirling")
      ->required()
      ->check(CLI::IsMember({"A", "B", "Bprime", "C", "D", "ST", "stirling"}));
  table->add_option("n", n, "Size")->required();
  table->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  table->add_option("--source", source, "formula (closed forms, solver) | oracle (exhaustive)")
      ->check(CLI::IsMember({"formula", "oracle"}))
      ->capture_default_str();
  add_common(table);

  std::string suite;
  std::string verify_source = "oracle";
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify_cmd->add_option("suite", suite, "zagier | reformulation | identities | bijection | proportions | counting | contraction")
      ->required()
      ->check(CLI::IsMember(
          {"zagier", "reformulation", "identities", "bijection", "proportions", "counting", "contraction"}));
  verify_cmd->add_option("n", n, "Size")->required();
  verify_cmd->add_option("--source", verify_source, "Where zagier and identities take their counts from")
      ->check(CLI::IsMember({"formula", "oracle"}))
      ->capture_default_str();
  add_common(verify_cmd);

  std::string direction;
  std::string input;
  std::string output;
  auto* transform_cmd = app.add_subcommand("transform", "Apply a bijection step to a JSON object");
  transform_cmd->add_option("direction", direction, "psi | invert | classify | contract | expand")
      ->required()
      ->check(CLI::IsMember({"psi", "invert", "classify", "contract", "expand"}));
  transform_cmd->add_option("input", input, "JSON file, or - for stdin")->required();
  transform_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string view = "auto";
  auto* dot_cmd = app.add_subcommand("export-dot", "Render a map or tree as Graphviz DOT");
  dot_cmd->add_option("input", input, "JSON file, or - for stdin")->required();
  dot_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  dot_cmd->add_option("--view", view, "auto | map | labeled | tree | aux")
      ->check(CLI::IsMember({"auto", "map", "labeled", "tree", "aux"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kRefused;
  }

  options.format = format == "json" ? Format::Json : Format::Csv;
  options.parity = parity;
  options.budget.pair_sweep = budget;
  options.budget.permutation_sweep = perm_budget;

  try {
    if (table->parsed()) {
      options.source = source == "oracle" ? Source::Oracle : Source::Formula;
      write_table(family, n, options, out);
      return kPass;
    }
    if (verify_cmd->parsed()) {
      options.source = verify_source == "oracle" ? Source::Oracle : Source::Formula;
      const auto start = std::chrono::steady_clock::now();
      RunReport report;
      try {
        report = verify(suite, n, options);
      } catch (const BudgetExceeded& e) {
        report.command = "verify " + suite + " " + std::to_string(n);
        report.status = "refused";
        report.message = e.what();
      }
      out << report.to_json().dump(2) << '\n';
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      err << "wall time " << secs << " s\n";
      if (report.status == "refused") return kRefused;
      return report.status == "pass" ? kPass : kFail;
    }
    if (transform_cmd->parsed()) {
      write_output(output, transform(direction, read_input(input)).dump() + "\n", out);
      return kPass;
    }
    if (dot_cmd->parsed()) {
      write_output(output, export_dot(read_input(input), view), out);
      return kPass;
    }
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kRefused;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kRefused;
  } catch (const Inconsistency& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kFail;
  }
  return kRefused;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"starmap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace starmap::cli
