#pragma once

#include <stdexcept>
#include <string>

namespace chorefair {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A valuation entry was positive (chores must be valued <= 0).
class PositiveValueError : public Error {
 public:
  PositiveValueError(int agent, int chore)
      : Error("positive value at agent " + std::to_string(agent) + ", chore " +
              std::to_string(chore)),
        agent(agent),
        chore(chore) {}
  int agent;
  int chore;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class NonIntegerResultError : public Error {
 public:
  using Error::Error;
};

/// Lifting requires a complete allocation of the ordered instance.
class IncompleteSourceError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

class InvalidQueryError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds the configured exhaustive-search budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class TooFewAgentsError : public Error {
 public:
  using Error::Error;
};

class ItemTooLargeError : public Error {
 public:
  explicit ItemTooLargeError(int item)
      : Error("item " + std::to_string(item) + " exceeds bin capacity"), item(item) {}
  int item;
};

class IncompleteAllocationError : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

class InvalidEpsilonError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance/allocation document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace chorefair
