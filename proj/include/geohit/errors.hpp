#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geohit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class UnreachablePair : public Error {
 public:
  UnreachablePair(int u, int v)
      : Error("terminal pair {" + std::to_string(u) + "," + std::to_string(v) +
              "} is disconnected"),
        u_(u),
        v_(v) {}
  int u() const { return u_; }
  int v() const { return v_; }

 private:
  int u_;
  int v_;
};

/// Text-format diagnostic carrying a 1-based line and column.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
      : Error((kind == Kind::Syntax ? "syntax error" : "semantic error") + std::string(" at ") +
              std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

class InfeasibleEmptySet : public Error {
 public:
  InfeasibleEmptySet() : Error("family contains an empty set; no hitting set exists") {}
};

class MaxSizeExceeded : public Error {
 public:
  using Error::Error;
};

class FamilyTooLarge : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotATree : public Error {
 public:
  NotATree() : Error("graph is not a tree") {}
};

class Disconnected : public Error {
 public:
  Disconnected() : Error("graph is disconnected") {}
};

class VariantUnsupported : public Error {
 public:
  using Error::Error;
};

class WeightedUnsupported : public Error {
 public:
  WeightedUnsupported()
      : Error("WeightedUnsupported: the modular-width algorithm requires unit edge weights") {}
};

class SeparatorInvalid : public Error {
 public:
  using Error::Error;
};

class TerminalAdjacent : public Error {
 public:
  using Error::Error;
};

class PairAdjacent : public Error {
 public:
  using Error::Error;
};

class NotAColoringGadget : public Error {
 public:
  using Error::Error;
};

class NotAHittingSetGadget : public Error {
 public:
  using Error::Error;
};

class ExtractionFailed : public Error {
 public:
  using Error::Error;
};

class TimedOut : public Error {
 public:
  TimedOut() : Error("time limit reached") {}
};

/// Violated internal invariant. Raised only when invariant checks are compiled in.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace geohit

#ifdef GEOHIT_INVARIANT_CHECKS
#define GEOHIT_CHECK(cond, msg)                                   \
  do {                                                            \
    if (!(cond)) throw ::geohit::InvariantViolation(msg);         \
  } while (false)
#else
#define GEOHIT_CHECK(cond, msg) \
  do {                          \
  } while (false)
#endif
