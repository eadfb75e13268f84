#ifndef INJSPEC_COMMON_HPP
#define INJSPEC_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace injspec {

// Thrown when an exhaustive enumeration would exceed its configured cap.
// Callers get a loud refusal, never a silently truncated answer.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when input data violates a structural invariant (bad shapes,
// non-commuting squares, non-acyclic quivers, ...).
struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the plain-text readers; carries a 1-based line number.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Default cap on vector-space enumerations (counted in vectors visited).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 16;

// Default cap on whole-algebra element enumerations (radical, idempotents).
inline constexpr std::uint64_t kDefaultElementBudget = 4096;

} // namespace injspec

#endif
