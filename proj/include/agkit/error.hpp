#ifndef AGKIT_ERROR_HPP
#define AGKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace agkit {

enum class ErrorKind {
  NotFound,
  Parse,
  LatticeAxiom,
  OutOfRange,
  CapExceeded,
  UnboundVariable,
  NotInAG,
  NotInVariety,
  InvalidArgument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::LatticeAxiom: return "LatticeAxiomViolation";
    case ErrorKind::OutOfRange: return "TableOutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NotInAG: return "NotInAG";
    case ErrorKind::NotInVariety: return "NotInVariety";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error in a sentence or an algebra document. `offset` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(ErrorKind::Parse, what), offset_(offset), expected_(std::move(expected)) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace agkit

#endif
