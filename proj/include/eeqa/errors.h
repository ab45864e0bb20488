#ifndef EEQA_ERRORS_H_
#define EEQA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace eeqa {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Malformed input text (ontology, corpus, probability or threshold files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a data invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A lookup key (event type, role, probability record) that does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// Numeric failure, e.g. the log of a zero probability.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace eeqa

#endif  // EEQA_ERRORS_H_
