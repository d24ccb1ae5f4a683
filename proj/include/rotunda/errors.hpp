#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotunda {

/// Malformed input: bad grammar, inconsistent declarations, missing files.
/// Carries an optional source location for parser diagnostics.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg, int line = 0, int column = 0)
      : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    return msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }
  int line_;
  int column_;
};

/// Violated operation precondition (improper subgroup, point off variety, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured degree/size budget was exceeded mid-computation. Carries the
/// statistics gathered up to the point of failure so reports can show them.
class BudgetError : public std::runtime_error {
 public:
  struct Stats {
    std::size_t pairs_processed = 0;
    std::size_t basis_size = 0;
    long max_degree_seen = 0;
    std::size_t max_terms_seen = 0;
  };

  BudgetError(const std::string& msg, Stats stats)
      : std::runtime_error(msg), stats_(stats) {}

  const Stats& stats() const { return stats_; }

 private:
  Stats stats_;
};

/// Monte Carlo genericity failed after the configured number of retries.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rotunda
