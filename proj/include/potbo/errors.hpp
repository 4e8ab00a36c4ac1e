#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace potbo {

//! Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Invalid argument or configuration (CLI exit code 1).
class DomainError : public Error {
public:
  using Error::Error;
};

//! Unusable input data (CLI exit code 2).
class DataError : public Error {
public:
  using Error::Error;
};

//! A file could not be parsed; carries the offending line number.
class FormatError : public DataError {
public:
  FormatError(const std::string& msg, std::size_t line)
    : DataError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

//! No usable values after parsing and filtering.
class EmptyDataError : public DataError {
public:
  using DataError::DataError;
};

//! No observation exceeds the requested threshold.
class EmptyExcessError : public DataError {
public:
  using DataError::DataError;
};

//! Fewer excesses than an operation's minimum.
class InsufficientDataError : public DataError {
public:
  using DataError::DataError;
};

//! All data points coincide; scale estimates are undefined.
class DegenerateDataError : public DataError {
public:
  using DataError::DataError;
};

//! Numerical failure (CLI exit code 3).
class NumericError : public Error {
public:
  using Error::Error;
};

//! Normalizing integral vanished; the density estimate is unusable.
class DegenerateDensityError : public NumericError {
public:
  using NumericError::NumericError;
};

//! Optimizer exhausted its budget; carries the best iterate found.
class ConvergenceError : public NumericError {
public:
  ConvergenceError(const std::string& msg, double xi, double sigma, double loglik)
    : NumericError(msg), xi_(xi), sigma_(sigma), loglik_(loglik) {}
  double best_xi() const { return xi_; }
  double best_sigma() const { return sigma_; }
  double best_loglik() const { return loglik_; }

private:
  double xi_;
  double sigma_;
  double loglik_;
};

//! Two regression inputs coincide within tolerance.
class DuplicatePointError : public DomainError {
public:
  using DomainError::DomainError;
};

//! Filesystem failure while reading or writing results.
class IoError : public DataError {
public:
  using DataError::DataError;
};

}  // namespace potbo
