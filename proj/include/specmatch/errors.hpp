#ifndef SPECMATCH_ERRORS_HPP
#define SPECMATCH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specmatch {

/// Malformed serialized input; `offset` is the byte position of the defect.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(std::move(message)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Operation requires a connected graph but the input is not.
class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specmatch

#endif
