#include "asrt/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "asrt/errors.hpp"

namespace asrt::io {

namespace {

bool is_decimal(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

void require_limit(const ComplexityTable& table, std::uint64_t limit) {
  if (limit > table.limit()) {
    throw RangeError("export limit " + std::to_string(limit) + " exceeds table limit " +
                     std::to_string(table.limit()));
  }
}

}  // namespace

void write_cache(const ComplexityTable& table, std::ostream& out) {
  out << kCacheHeader << '\n';
  const auto values = table.values();
  for (std::size_t n = 0; n < values.size(); ++n) out << n << '\t' << values[n] << '\n';
}

ComplexityTable read_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) {
    throw FormatError("cache header must be \"" + std::string(kCacheHeader) + "\"");
  }
  std::vector<BigInt> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError("cache line " + std::to_string(values.size() + 2) + " has no tab");
    }
    const std::string_view index(line.data(), tab);
    const std::string_view value(line.data() + tab + 1, line.size() - tab - 1);
    if (!is_decimal(index) || !is_decimal(value)) {
      throw FormatError("cache line " + std::to_string(values.size() + 2) +
                        " is not \"<n>\\t<decimal>\"");
    }
    if (index != std::to_string(values.size())) {
      throw FormatError("cache index " + std::string(index) + " out of sequence, expected " +
                        std::to_string(values.size()));
    }
    values.emplace_back(std::string(value));
  }
  return ComplexityTable::from_values(std::move(values));
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw UsageError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_cache_file(const ComplexityTable& table, const std::filesystem::path& path) {
  std::ostringstream out;
  write_cache(table, out);
  write_file_atomic(path, out.str());
}

ComplexityTable read_cache_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open cache " + path.string());
  return read_cache(in);
}

ComplexityTable load_or_build(const std::filesystem::path& path, std::uint64_t limit,
                              const DivisorSieve& sieve) {
  if (!std::filesystem::exists(path)) {
    ComplexityTable table = build_table(limit, sieve);
    write_cache_file(table, path);
    return table;
  }
  ComplexityTable table = read_cache_file(path);
  if (table.limit() >= limit) return table;
  table = extend_table(std::move(table), limit, sieve);
  write_cache_file(table, path);
  return table;
}

void write_csv(const ComplexityTable& table, std::uint64_t limit, std::ostream& out) {
  require_limit(table, limit);
  out << "n,T,Tstar\n";
  for (std::uint64_t n = 0; n <= limit; ++n) {
    out << n << ',' << table[n] << ',';
    if (n > 0) out << (table[n] - table[n - 1]);
    out << '\n';
  }
}

void write_json(const ComplexityTable& table, std::uint64_t limit, std::ostream& out) {
  require_limit(table, limit);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::uint64_t n = 0; n <= limit; ++n) {
    nlohmann::ordered_json row;
    row["n"] = n;
    row["T"] = table[n].str();
    row["Tstar"] = n > 0 ? nlohmann::ordered_json(BigInt(table[n] - table[n - 1]).str())
                         : nlohmann::ordered_json(nullptr);
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["lo"] = report.lo;
  j["hi"] = report.hi;
  j["all_passed"] = report.all_passed();
  j["claims"] = nlohmann::ordered_json::array();
  for (const ClaimResult& c : report.claims) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["description"] = c.description;
    cj["lo"] = c.lo;
    cj["hi"] = c.hi;
    cj["passed"] = c.passed();
    cj["checked"] = c.checked;
    cj["failures"] = c.failures;
    cj["first_counterexample"] =
        c.first_counterexample ? nlohmann::ordered_json(*c.first_counterexample) : nullptr;
    cj["detail"] = c.detail;
    j["claims"].push_back(std::move(cj));
  }
  return j.dump(2);
}

}  // namespace asrt::io
