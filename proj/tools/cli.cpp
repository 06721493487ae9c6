#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "asrt/complexity.hpp"
#include "asrt/errors.hpp"
#include "asrt/io.hpp"
#include "asrt/trees.hpp"
#include "asrt/vectors.hpp"
#include "asrt/verify.hpp"

namespace asrt::cli {

namespace {

struct Options {
  std::uint64_t n = 0;
  std::uint64_t max = 0;
  std::uint64_t deep_max = 0;
  std::size_t limit = kDefaultItemLimit;
  std::string cache;
  std::string out_file;
  std::string method = "diff";
  std::string format;
  bool count_only = false;
  bool oracle_check = false;
  bool json = false;
};

void require_n_max(std::uint64_t n) {
  if (n > kMaxN) {
    throw RangeError("n=" + std::to_string(n) + " exceeds the CLI limit of " +
                     std::to_string(kMaxN));
  }
}

DivisorSieve sieve_for(std::uint64_t n) { return DivisorSieve(std::max<std::uint64_t>(n, 2)); }

ComplexityTable table_for(std::uint64_t n, const DivisorSieve& sieve, const std::string& cache) {
  if (cache.empty()) return build_table(n, sieve);
  return io::load_or_build(cache, n, sieve);
}

int cmd_value(const Options& o, std::ostream& out) {
  require_n_max(o.n);
  const DivisorSieve sieve = sieve_for(o.n);
  const ComplexityTable table = table_for(o.n, sieve, o.cache);
  out << t_value(table, o.n) << '\n';
  return kExitOk;
}

int cmd_star(const Options& o, std::ostream& out) {
  require_n_max(o.n);
  const DivisorSieve sieve = sieve_for(o.n);
  const ComplexityTable table = table_for(o.n, sieve, o.cache);
  if (o.method == "ie") {
    out << t_star_inclusion_exclusion(table, sieve, o.n) << '\n';
  } else {
    out << t_star(table, o.n) << '\n';
  }
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  require_n_max(o.max);
  const DivisorSieve sieve = sieve_for(o.max);
  const ComplexityTable table = table_for(o.max, sieve, o.cache);
  std::ostringstream buffer;
  if (o.format == "json") {
    io::write_json(table, o.max, buffer);
  } else {
    io::write_csv(table, o.max, buffer);
  }
  if (o.out_file.empty()) {
    out << buffer.str();
  } else {
    io::write_file_atomic(o.out_file, buffer.str());
  }
  return kExitOk;
}

void print_components(std::span<const std::uint64_t> c, std::ostream& out) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << ',';
    out << c[i];
  }
  out << '\n';
}

int cmd_vectors(const Options& o, std::ostream& out) {
  require_n_max(o.n);
  const DivisorSieve sieve = sieve_for(o.n);
  if (o.count_only) {
    out << count_vectors(o.n, sieve) << '\n';
    return kExitOk;
  }
  for (const CompositionVector& a : enumerate_vectors(o.n, sieve, o.limit)) {
    print_components(a.components(), out);
  }
  return kExitOk;
}

int cmd_trees(const Options& o, std::ostream& out) {
  require_n_max(o.n);
  const DivisorSieve sieve = sieve_for(o.n);
  const std::vector<AsrtTree> trees = enumerate_trees(o.n, sieve, o.limit);
  std::ostringstream buffer;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (o.format == "levels") {
      buffer << to_levels_string(trees[i]) << '\n';
    } else if (o.format == "paren") {
      buffer << to_paren(trees[i]) << '\n';
    } else {
      buffer << to_dot(trees[i], "t" + std::to_string(i));
    }
  }
  out << buffer.str();
  return kExitOk;
}

int cmd_is_prime(const Options& o, std::ostream& out, std::ostream& err) {
  require_n_max(o.n);
  const DivisorSieve sieve = sieve_for(o.n);
  const ComplexityTable table = table_for(o.n, sieve, o.cache);
  const bool prime = is_prime_by_complexity(table, o.n);
  out << (prime ? "prime" : "composite") << '\n';
  if (o.oracle_check && prime != trial_division_is_prime(o.n)) {
    err << "oracle disagreement: trial division says "
        << (prime ? "composite" : "prime") << " for " << o.n << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_n_max(o.max);
  const std::uint64_t deep = std::min(o.deep_max, o.max);
  const DivisorSieve sieve = sieve_for(o.max);
  const ComplexityTable table = table_for(o.max, sieve, o.cache);
  VerificationReport report = verify_theorem1(deep, table, sieve);
  report.merge(verify_theorem2(o.max, table, sieve));
  report.merge(verify_theorem3(o.max, table, sieve));
  report.merge(verify_bounds(o.max, table, sieve));
  out << (o.json ? io::report_to_json(report) + "\n" : render_text(report));
  return report.all_passed() ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complexity of natural numbers and absolutely symmetric rooted trees", "asrt"};
  app.require_subcommand(1);
  Options o;

  auto* value = app.add_subcommand("value", "Print T(n)");
  value->add_option("n", o.n, "Argument n")->required();
  value->add_option("--cache", o.cache, "Table cache file, created or extended as needed");

  auto* star = app.add_subcommand("star", "Print T*(n) = T(n) - T(n-1)");
  star->add_option("n", o.n, "Argument n (>= 1, >= 2 for --method ie)")
      ->required()
      ->check(CLI::PositiveNumber);
  star->add_option("--method", o.method, "diff (subtraction) or ie (inclusion-exclusion)")
      ->check(CLI::IsMember({"diff", "ie"}));
  star->add_option("--cache", o.cache, "Table cache file");

  auto* table = app.add_subcommand("table", "Export T and T* for 0..N");
  table->add_option("--max", o.max, "Largest n")->required();
  o.format = "csv";
  table->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", o.out_file, "Write to FILE instead of stdout");
  table->add_option("--cache", o.cache, "Table cache file");

  auto* vectors = app.add_subcommand("vectors", "List vectors A with f(A) = n");
  vectors->add_option("n", o.n, "Argument n")->required()->check(CLI::PositiveNumber);
  vectors->add_flag("--count-only", o.count_only, "Print only the number of vectors");
  vectors->add_option("--limit", o.limit, "Maximum number of vectors to list");

  auto* trees = app.add_subcommand("trees", "List absolutely symmetric rooted trees with n edges");
  trees->add_option("n", o.n, "Number of edges")->required()->check(CLI::PositiveNumber);
  trees->add_option("--format", o.format, "levels, paren or dot")
      ->required()
      ->check(CLI::IsMember({"levels", "paren", "dot"}));
  trees->add_option("--limit", o.limit, "Maximum number of trees to list");

  auto* is_prime = app.add_subcommand("is-prime", "Primality from T*(n) == 1");
  is_prime->add_option("n", o.n, "Argument n (>= 2)")->required();
  is_prime->add_flag("--oracle-check", o.oracle_check, "Cross-check with trial division");
  is_prime->add_option("--cache", o.cache, "Table cache file");

  auto* verify = app.add_subcommand("verify", "Check every claim against independent oracles");
  verify->add_option("--max", o.max, "Range for formula checks")->required();
  o.deep_max = 40;
  verify->add_option("--deep-max", o.deep_max, "Range for enumeration checks (default 40)");
  verify->add_flag("--json", o.json, "Emit the report as JSON");
  verify->add_option("--cache", o.cache, "Table cache file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "asrt: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (value->parsed()) return cmd_value(o, out);
    if (star->parsed()) return cmd_star(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (vectors->parsed()) return cmd_vectors(o, out);
    if (trees->parsed()) return cmd_trees(o, out);
    if (is_prime->parsed()) return cmd_is_prime(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "asrt: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "asrt: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace asrt::cli
