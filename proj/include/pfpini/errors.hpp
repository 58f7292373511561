#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfpini {

// Raised when a width-scoped map is requested with q > 2^s: the
// algebraic/hardware correspondence that certifies the map does not hold,
// so the caller gets a refusal instead of an uncertified result.
class ScopeViolation : public std::runtime_error {
public:
  ScopeViolation(std::uint64_t q, std::uint32_t s)
      : std::runtime_error("scope violation: q = " + std::to_string(q) +
                           " exceeds 2^" + std::to_string(s)),
        q(q), s(s) {}
  std::uint64_t q;
  std::uint32_t s;
};

// Raised before an enumeration starts when its tuple space exceeds the
// configured cap. Exact-count semantics: we refuse rather than sample.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::string what_space, std::uint64_t required,
                 std::uint64_t cap)
      : std::runtime_error("budget exceeded: " + what_space + " needs " +
                           std::to_string(required) + " evaluations, cap is " +
                           std::to_string(cap)),
        space(std::move(what_space)), required(required), cap(cap) {}
  BudgetExceeded(std::string what_space, std::uint64_t cap)
      : std::runtime_error("budget exceeded: " + what_space +
                           " overflows the evaluation counter, cap is " +
                           std::to_string(cap)),
        space(std::move(what_space)), required(UINT64_MAX), cap(cap) {}
  std::string space;
  std::uint64_t required;
  std::uint64_t cap;
};

// Raised when a custom gadget table has an entry outside [0, q).
class InvalidTable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed run configuration (bad flags, bad files, bad sizes).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised by the bound-transfer check when the algebraic and hardware maps
// disagree on a per-cell multiplicity count. Signals an implementation bug.
class CountMismatch : public std::runtime_error {
public:
  CountMismatch(std::uint32_t x, std::uint32_t v, std::uint64_t lhs,
                std::uint64_t rhs)
      : std::runtime_error("count mismatch at (x=" + std::to_string(x) +
                           ", v=" + std::to_string(v) + "): " +
                           std::to_string(lhs) + " vs " + std::to_string(rhs)),
        x(x), v(v), lhs(lhs), rhs(rhs) {}
  std::uint32_t x;
  std::uint32_t v;
  std::uint64_t lhs;
  std::uint64_t rhs;
};

} // namespace pfpini
