#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specialred {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Rows handed to a saturation test are linearly dependent over Q.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class RankCapExceeded : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

/// An action that is not a unimodular homomorphism, a bad permutation, etc.
class InvalidAction : public Error {
 public:
  using Error::Error;
};

/// A factor list that is not a product of SL_1(A) and Sp_{2n} pieces.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// m_j does not divide a_{i,j} * n_i.
class Indivisible : public Error {
 public:
  using Error::Error;
};

/// The center embedding is not diagonal along the factor decomposition.
class NotDecomposed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  ValidationError(const std::string& path, const std::string& message)
      : Error(path + ": " + message), path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace specialred
