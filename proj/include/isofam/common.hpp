#pragma once

#include <stdexcept>
#include <string>

namespace isofam {

// Bad arguments from the caller (flags, parameters out of range).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A precondition of an operation does not hold for these inputs.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A mathematical assertion that the library relies on failed; the message
// carries a witness. Reaching this means the data contradicts a proved
// statement (or exposes a bug), so it is never swallowed.
struct VerifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parity of the triangular number g(g+1)/2, valid for negative g as well:
// 1 for g = 1,2 mod 4, else 0.
inline bool triangular_parity(long long g) {
  long long r = ((g % 4) + 4) % 4;
  return r == 1 || r == 2;
}

}  // namespace isofam
