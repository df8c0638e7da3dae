#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unitri {

/// Base class for every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public AlgebraError {
 public:
  RankMismatch(int lhs, int rhs)
      : AlgebraError("rank mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}
  int lhs() const { return lhs_; }
  int rhs() const { return rhs_; }

 private:
  int lhs_;
  int rhs_;
};

class ParseError : public AlgebraError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : AlgebraError(what + " at position " + std::to_string(position)), detail_(what), position_(position) {}
  std::size_t position() const { return position_; }
  /// Message without the position suffix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// Offset f_i of a unitriangular automorphism mentions a variable x_j with j <= i.
class VariableLeak : public AlgebraError {
 public:
  explicit VariableLeak(int index)
      : AlgebraError("offset " + std::to_string(index) + " uses a variable of index <= " +
                     std::to_string(index)),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class NonConstantLast : public AlgebraError {
 public:
  NonConstantLast() : AlgebraError("last offset must be a constant") {}
};

class CapExceeded : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace unitri
