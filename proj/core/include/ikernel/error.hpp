#pragma once

#include <stdexcept>
#include <string>

namespace ikernel {

/// Base class for every domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two kernels (or bit strings) that cannot be compared.
///
/// Kept distinct from a low similarity score: comparing fingerprints built
/// with different parameters is meaningless, not merely dissimilar.
class IncomparableError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A file or byte stream could not be parsed.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure (open, read, write).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ikernel
