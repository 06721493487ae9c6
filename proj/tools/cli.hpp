#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace asrt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Largest n accepted by commands that build a sieve and table.
inline constexpr std::uint64_t kMaxN = 10'000'000;

/// Default cap on enumerated vectors or trees (--limit).
inline constexpr std::size_t kDefaultItemLimit = 1'000'000;

/// args excludes the program name. Data goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asrt::cli
