#pragma once

#include <stdexcept>
#include <string>

namespace wavederiv {

// Base of every error raised by the library. Callers that only care about
// "computation failed" catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Abscissa or grid outside a model's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Regularization or transform parameter out of range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Too few samples for the requested operation.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Wavelet fails zero-mean, decay or admissibility checks.
class InvalidWavelet : public Error {
 public:
  using Error::Error;
};

// Malformed MethodSpec or sweep configuration.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Error metric undefined (all-zero reference derivative).
class MetricError : public Error {
 public:
  using Error::Error;
};

// A sweep cell failed. what() names the swept value and the noise stream.
class SweepCellError : public Error {
 public:
  SweepCellError(const std::string& message, double value, unsigned long long seed,
                 unsigned long long realization)
      : Error(message), value_(value), seed_(seed), realization_(realization) {}

  double value() const { return value_; }
  unsigned long long seed() const { return seed_; }
  unsigned long long realization() const { return realization_; }

 private:
  double value_;
  unsigned long long seed_;
  unsigned long long realization_;
};

}  // namespace wavederiv
