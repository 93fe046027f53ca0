#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace og4 {

// Operational failures. Refutations of mathematical hypotheses are values
// (see Clause / Checked below), never exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EnumerationOverflow : public Error {
 public:
  using Error::Error;
};

// An internal invariant that the theory guarantees was found violated.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"
                   : what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// One verified hypothesis. `tag` is a stable machine-readable name such as
// "cayley:ab_ne_1"; `detail` is free text for humans.
struct Clause {
  std::string tag;
  bool holds = false;
  std::string detail;
};

class ClauseLog {
 public:
  bool check(std::string tag, bool holds, std::string detail = {}) {
    clauses_.push_back({std::move(tag), holds, std::move(detail)});
    return holds;
  }
  void append(const std::vector<Clause>& more) {
    clauses_.insert(clauses_.end(), more.begin(), more.end());
  }

  bool all_hold() const {
    for (const auto& c : clauses_)
      if (!c.holds) return false;
    return true;
  }
  const Clause* first_failure() const {
    for (const auto& c : clauses_)
      if (!c.holds) return &c;
    return nullptr;
  }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::vector<Clause> take() && { return std::move(clauses_); }

 private:
  std::vector<Clause> clauses_;
};

// Either a value whose hypotheses all held, or a refutation naming the first
// clause that failed. The full clause log is kept either way.
template <class T>
class Checked {
 public:
  static Checked success(T value, std::vector<Clause> clauses) {
    Checked c;
    c.value_.emplace(std::move(value));
    c.clauses_ = std::move(clauses);
    return c;
  }
  static Checked refuted(std::vector<Clause> clauses) {
    Checked c;
    c.clauses_ = std::move(clauses);
    bool any = false;
    for (const auto& cl : c.clauses_) any = any || !cl.holds;
    if (!any) throw InvariantViolation("refutation without a failed clause");
    return c;
  }
  static Checked from_log(ClauseLog log) {
    return refuted(std::move(log).take());
  }

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    if (!value_) throw Error("refuted: " + refutation().tag + " (" + refutation().detail + ")");
    return *value_;
  }
  const T* operator->() const { return &value(); }
  const T& operator*() const { return value(); }

  const Clause& refutation() const {
    for (const auto& c : clauses_)
      if (!c.holds) return c;
    throw Error("no refutation: value was certified");
  }
  const std::vector<Clause>& clauses() const { return clauses_; }

 private:
  Checked() = default;
  std::optional<T> value_;
  std::vector<Clause> clauses_;
};

}  // namespace og4
