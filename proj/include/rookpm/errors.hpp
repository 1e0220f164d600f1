#ifndef ROOKPM_ERRORS_HPP_
#define ROOKPM_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rookpm {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagram construction / parsing.
struct OverlappingBlocks : Error {
  explicit OverlappingBlocks(const std::string& msg) : Error("OverlappingBlocks: " + msg) {}
};
struct VertexOutOfRange : Error {
  explicit VertexOutOfRange(const std::string& msg) : Error("VertexOutOfRange: " + msg) {}
};
struct EmptyBlock : Error {
  explicit EmptyBlock(const std::string& msg) : Error("EmptyBlock: " + msg) {}
};
struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& msg) : Error("DegreeMismatch: " + msg) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("ParseError: " + msg) {}
};

// Words / generators.
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error("IndexOutOfRange: " + msg) {}
};
struct UnsupportedDegree : Error {
  explicit UnsupportedDegree(const std::string& msg) : Error("UnsupportedDegree: " + msg) {}
};

// Enumeration / search / congruence resource limits.
struct CapExceeded : Error {
  CapExceeded(const std::string& msg, std::uint64_t live_count, std::uint64_t peak_count)
      : Error("CapExceeded: " + msg), live(live_count), peak(peak_count) {}
  std::uint64_t live;  // live classes / elements when the cap was hit
  std::uint64_t peak;  // peak live count seen before the cap
};
struct SearchTooLarge : Error {
  explicit SearchTooLarge(const std::string& msg) : Error("SearchTooLarge: " + msg) {}
};
struct TooLarge : Error {
  explicit TooLarge(const std::string& msg) : Error("TooLarge: " + msg) {}
};

// Normal forms.
struct NotInPn : Error {
  explicit NotInPn(const std::string& msg) : Error("NotInPn: " + msg) {}
};
struct NotSymmetricJn : Error {
  explicit NotSymmetricJn(const std::string& msg) : Error("NotSymmetricJn: " + msg) {}
};
struct NotSingularIn : Error {
  explicit NotSingularIn(const std::string& msg) : Error("NotSingularIn: " + msg) {}
};

// CLI / IO.
struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("UsageError: " + msg) {}
};
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("IoError: " + msg) {}
};

}  // namespace rookpm

#endif  // ROOKPM_ERRORS_HPP_
