#pragma once

#include <stdexcept>
#include <string>

namespace ga {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SignatureError : Error { using Error::Error; };
struct GradeError : Error { using Error::Error; };
struct RingError : Error { using Error::Error; };
struct IsoError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct DimError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };

// Parser diagnostics carry a 1-based line:col position in the message,
// formatted as "line:col: message".
struct ParseError : Error {
  ParseError(int line_, int col_, const std::string& msg)
      : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
  int line;
  int col;
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
  ValidationError(int line_, int col_, const std::string& msg)
      : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
  int line = 0;
  int col = 0;
};

}  // namespace ga
