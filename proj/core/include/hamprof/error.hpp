#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hamprof {

/// Base class for all hamprof errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Rejected pattern: empty, or longer than Pattern::kMaxLength.
class PatternError : public Error {
public:
  using Error::Error;
};

/// Misuse of a consumed scanner (feed or finish after finish).
class StateError : public Error {
public:
  using Error::Error;
};

/// I/O failure. Carries the offending path (may be empty) and the number of
/// bytes successfully delivered before the failure.
class IoError : public Error {
public:
  explicit IoError(const std::string& message, std::string path = {},
                   std::uint64_t bytes_delivered = 0)
      : Error(path.empty() ? message : message + ": " + path),
        path_(std::move(path)),
        bytes_delivered_(bytes_delivered) {}

  const std::string& path() const noexcept { return path_; }
  std::uint64_t bytes_delivered() const noexcept { return bytes_delivered_; }

private:
  std::string path_;
  std::uint64_t bytes_delivered_;
};

}  // namespace hamprof
