// Command-line front end: exact poly-Bernoulli values and tables, family
// enumeration, verification suites, and Gamma-code emission.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polybernoulli/checks.hpp"
#include "polybernoulli/exactmath.hpp"
#include "polybernoulli/families.hpp"
#include "polybernoulli/text_io.hpp"

namespace pb = polybernoulli;

namespace {

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void redirect_to(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    stream = &file;
  }
  std::ostream& out() { return *stream; }
};

pb::FamilyId family_or_throw(const std::string& name) {
  if (auto f = pb::parse_family(name)) return *f;
  throw std::invalid_argument("unknown family: " + name);
}

int run_compute(int n, int k, const std::string& method,
                const pb::EnumerationGuards& guards, int threads, OutputTarget& target) {
  pb::BigNat value;
  if (method == "formula") {
    value = pb::polybernoulli_formula(n, k);
  } else if (method == "recursion") {
    value = pb::polybernoulli_recursion(n, k);
  } else if (method.rfind("enumerate:", 0) == 0) {
    value = pb::count_family(family_or_throw(method.substr(10)), n, k, guards, threads);
  } else {
    throw std::invalid_argument("unknown method: " + method +
                                " (expected formula, recursion, or enumerate:<family>)");
  }
  target.out() << pb::to_decimal(value) << "\n";
  return 0;
}

int run_table(int max_n, int max_k, const std::string& format, OutputTarget& target) {
  auto value = [](int n, int k) { return pb::to_decimal(pb::polybernoulli_formula(n, k)); };
  std::ostream& out = target.out();
  if (format == "csv") {
    out << "n\\k";
    for (int k = 0; k <= max_k; ++k) out << "," << k;
    out << "\n";
    for (int n = 0; n <= max_n; ++n) {
      out << n;
      for (int k = 0; k <= max_k; ++k) out << "," << value(n, k);
      out << "\n";
    }
  } else if (format == "json") {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (int n = 0; n <= max_n; ++n)
      for (int k = 0; k <= max_k; ++k)
        table.push_back({{"n", n}, {"k", k}, {"value", value(n, k)}});
    out << table.dump(2) << "\n";
  } else if (format == "bfile") {
    // Anti-diagonal linearization: diagonal N = n+k ascending, n ascending
    // within a diagonal; index counts from 0.
    long long index = 0;
    for (int weight = 0; weight <= max_n + max_k; ++weight)
      for (int n = std::max(0, weight - max_k); n <= std::min(weight, max_n); ++n)
        out << index++ << " " << value(n, weight - n) << "\n";
  } else {
    throw std::invalid_argument("unknown format: " + format + " (expected csv, json, or bfile)");
  }
  return 0;
}

int run_enumerate(const std::string& family, int n, int k, bool count_only,
                  const pb::EnumerationGuards& guards, int threads, OutputTarget& target) {
  const pb::FamilyId f = family_or_throw(family);
  std::ostream& out = target.out();
  if (count_only) {
    out << pb::to_decimal(pb::count_family(f, n, k, guards, threads)) << "\n";
    return 0;
  }
  bool first = true;
  pb::enumerate_family(f, n, k, [&](const pb::FamilyMember& member) {
    std::visit([&]<typename T>(const T& value) {
      if constexpr (std::is_same_v<T, pb::Matrix01>) {
        if (!first) out << "\n";
        out << pb::to_text(value);
      } else {
        out << pb::to_text(value) << "\n";
      }
      first = false;
    }, member);
  }, guards);
  return 0;
}

int run_verify(const std::string& check, int max_size,
               const pb::EnumerationGuards& guards, int threads, OutputTarget& target) {
  pb::CheckOptions options;
  options.max_size = max_size;
  options.guards = guards;
  options.threads = threads;
  const auto reports = pb::run_verify(check, options);
  std::ostream& out = target.out();
  bool all_passed = true;
  for (const auto& report : reports) {
    out << (report.passed ? "PASS " : "FAIL ") << report.name << " (" << report.range << ")\n";
    for (const auto& line : report.details) out << "  " << line << "\n";
    if (!report.passed) {
      out << "  witness: " << report.witness << "\n";
      all_passed = false;
    }
    std::cerr << "# " << report.name << ": " << report.seconds << "s\n";
  }
  return all_passed ? 0 : 1;
}

int run_codes(int n, int k, const pb::EnumerationGuards& guards, OutputTarget& target) {
  std::ostream& out = target.out();
  pb::enumerate_family(pb::FamilyId::GammaFree, n, k, [&](const pb::FamilyMember& member) {
    out << pb::to_text(pb::gamma_encode(std::get<pb::Matrix01>(member)));
  }, guards);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact poly-Bernoulli numbers, their combinatorial families, and bijections"};
  app.require_subcommand(1);

  int n = 0, k = 0, max_n = 0, max_k = 0;
  int threads = 1, max_size = -1;
  pb::EnumerationGuards guards{5, 8};  // CLI defaults; raising them costs time
  std::string method = "formula", format = "csv", family, check = "all", output_path;
  bool count_only = false;

  auto add_guard_options = [&](CLI::App* cmd) {
    cmd->add_option("--max-matrix", guards.max_matrix_dim,
                    "Size guard for matrix families and partition pairs (n,k <= G)");
    cmd->add_option("--max-perm", guards.max_perm_total,
                    "Size guard for permutation families (n+k <= G)");
    cmd->add_option("--threads", threads, "Partitioned enumeration thread count");
    cmd->add_option("--output", output_path, "Redirect standard output to a file");
  };

  CLI::App* compute = app.add_subcommand("compute", "Print B_n^(-k) exactly");
  compute->add_option("--n", n, "Row parameter")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("--k", k, "Column parameter")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("--method", method, "formula | recursion | enumerate:<family>");
  add_guard_options(compute);

  CLI::App* table = app.add_subcommand("table", "Print the B_n^(-k) table");
  table->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--max-k", max_k, "Largest k")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", format,
                    "csv | json | bfile (bfile reads anti-diagonals n+k=N, n ascending)");
  table->add_option("--output", output_path, "Redirect standard output to a file");

  CLI::App* enumerate = app.add_subcommand("enumerate", "List one family exhaustively");
  enumerate->add_option("--family", family,
                        "lonesum | gammafree | callan | maxascending | vesztergombi | "
                        "acyclicorientation | orderedpartitionpairs")->required();
  enumerate->add_option("--n", n, "Row parameter")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--k", k, "Column parameter")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--count-only", count_only, "Print only the member count");
  add_guard_options(enumerate);

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--check", check,
                     "all | symmetry | recursion | altsum | families | lonesum-equiv | "
                     "gamma-roundtrip | phi | split");
  verify->add_option("--max", max_size, "Override the check's default size bound");
  add_guard_options(verify);

  CLI::App* codes = app.add_subcommand("codes", "Emit the Gamma code of every Gamma-free matrix");
  codes->add_option("--n", n, "Row parameter")->required()->check(CLI::NonNegativeNumber);
  codes->add_option("--k", k, "Column parameter")->required()->check(CLI::NonNegativeNumber);
  add_guard_options(codes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    OutputTarget target;
    target.redirect_to(output_path);
    if (compute->parsed()) return run_compute(n, k, method, guards, threads, target);
    if (table->parsed()) return run_table(max_n, max_k, format, target);
    if (enumerate->parsed())
      return run_enumerate(family, n, k, count_only, guards, threads, target);
    if (verify->parsed()) return run_verify(check, max_size, guards, threads, target);
    if (codes->parsed()) return run_codes(n, k, guards, target);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
