#pragma once

#include <stdexcept>
#include <string>

namespace perfloc {

/// A letter index of 0 or above the declared alphabet rank.
class AlphabetError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Operands live over alphabets (or matrix dimensions) that do not agree.
class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was applied outside its domain (empty word, n = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A checked identity did not hold. The message names the offending object.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word or syllable text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace perfloc
