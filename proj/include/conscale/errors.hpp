#pragma once

#include <stdexcept>
#include <string>

namespace conscale {

/// An element name that does not belong to the ground set it was looked up in.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's precondition (non-closed input, foreign family, ...).
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An oracle-only brute-force operation refused an input above its size bound.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace conscale
