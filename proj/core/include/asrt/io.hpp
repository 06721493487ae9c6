#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "asrt/complexity.hpp"
#include "asrt/verify.hpp"

namespace asrt::io {

inline constexpr std::string_view kCacheHeader = "ASRT-TABLE v1";

/// Cache text: the header line, then "<n>\t<T(n)>" for n = 0, 1, ... .
void write_cache(const ComplexityTable& table, std::ostream& out);

/// Throws FormatError on a wrong header, a non-contiguous index, a
/// malformed decimal, or a first entry other than "0\t1".
ComplexityTable read_cache(std::istream& in);

/// Writes through a sibling temporary file and renames it into place.
void write_cache_file(const ComplexityTable& table, const std::filesystem::path& path);
ComplexityTable read_cache_file(const std::filesystem::path& path);

/// Loads path if it exists, extends the table to at least limit with the
/// recurrence, and rewrites the file only when it grew. The returned table
/// covers max(limit, cached limit).
ComplexityTable load_or_build(const std::filesystem::path& path, std::uint64_t limit,
                              const DivisorSieve& sieve);

/// "n,T,Tstar" rows for 0..limit; Tstar is empty for n = 0.
void write_csv(const ComplexityTable& table, std::uint64_t limit, std::ostream& out);

/// JSON array of {"n": n, "T": "<decimal>", "Tstar": "<decimal>" | null}.
void write_json(const ComplexityTable& table, std::uint64_t limit, std::ostream& out);

std::string report_to_json(const VerificationReport& report);

/// Replaces path with contents atomically (temporary file + rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace asrt::io
