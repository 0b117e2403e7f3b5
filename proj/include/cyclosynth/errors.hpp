#pragma once

#include <stdexcept>
#include <string>

namespace cyclosynth {

// Base class for every error raised by the library. `kind()` is a stable
// machine-readable tag used by the CLI error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class InvalidRing : public Error {
 public:
  explicit InvalidRing(const std::string& what) : Error("InvalidRing", what) {}
};

class SpecMismatch : public Error {
 public:
  explicit SpecMismatch(const std::string& what) : Error("SpecMismatch", what) {}
};

class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what) : Error("NotDivisible", what) {}
};

class ZeroInput : public Error {
 public:
  explicit ZeroInput(const std::string& what) : Error("ZeroInput", what) {}
};

class NotReal : public Error {
 public:
  explicit NotReal(const std::string& what) : Error("NotReal", what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("SyntaxError", what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotMonomial : public Error {
 public:
  explicit NotMonomial(const std::string& what) : Error("NotMonomial", what) {}
};

class TableIncomplete : public Error {
 public:
  TableIncomplete(const std::string& what, int depth)
      : Error("TableIncomplete", what + " (depth cap " + std::to_string(depth) + ")"),
        depth_(depth) {}
  int depth() const noexcept { return depth_; }

 private:
  int depth_;
};

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& what)
      : Error("PreconditionViolation", what) {}
};

class NoSuchK : public Error {
 public:
  NoSuchK(const std::string& what, int s) : Error("NoSuchK", what), s_(s) {}
  int requested_change() const noexcept { return s_; }

 private:
  int s_;
};

class NotSde3Form : public Error {
 public:
  explicit NotSde3Form(const std::string& what) : Error("NotSde3Form", what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

}  // namespace cyclosynth
