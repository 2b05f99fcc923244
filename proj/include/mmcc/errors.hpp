#pragma once

#include <stdexcept>
#include <string>

#include "mmcc/report.hpp"
#include "mmcc/types.hpp"

namespace mmcc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input. `locus` names the line or JSON field at fault.
class ParseError : public Error {
 public:
  ParseError(std::string locus, const std::string& what)
      : Error(locus.empty() ? what : locus + ": " + what), locus_(std::move(locus)) {}
  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string locus_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("invalid instance:\n" + report.to_string()), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph(Vertex from, Vertex to)
      : Error("graph is disconnected: no path from " + std::to_string(from) + " to " +
              std::to_string(to)),
        from_(from),
        to_(to) {}
  Vertex from() const noexcept { return from_; }
  Vertex to() const noexcept { return to_; }

 private:
  Vertex from_;
  Vertex to_;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class NoFeasibleSolution : public Error {
 public:
  using Error::Error;
};

}  // namespace mmcc
