#ifndef SUMSETLAB_ERRORS_HPP
#define SUMSETLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sumsetlab {

// Malformed on-disk data; carries the byte offset where parsing failed.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

private:
  std::size_t byte_offset_;
};

// Request exceeds the configured memory budget (SUMSETLAB_MAX_MEM).
class ResourceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pattern value fell outside the materialized range of the host set.
class RangeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sumsetlab

#endif
