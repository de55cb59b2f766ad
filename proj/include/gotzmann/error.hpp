#ifndef GOTZMANN_ERROR_HPP
#define GOTZMANN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gotzmann {

/// Malformed text or file input.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (wrong ring, ideal not
/// Borel-fixed, index out of range, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The ideal contains 1, so its variety is empty.
class EmptyVarietyError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A consistency check that can only fail through a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

} // namespace gotzmann

#endif
