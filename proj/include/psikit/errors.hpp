#pragma once

#include <stdexcept>
#include <string>

namespace psikit {

// Base class for all toolkit errors. The CLI maps any Error to exit code 1;
// argument parsing problems map to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed trail fields (digit strings, timestamp width).
class EncodingError : public Error {
 public:
  using Error::Error;
};

// Unsupported parameter combinations (digest width, missing key material).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Value outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied parameter violates a precondition (e.g. r not coprime).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Prime or key generation did not converge within the retry budget.
class KeyGenError : public Error {
 public:
  using Error::Error;
};

// Ciphertext rejected during decryption (malformed / tampered).
class DecryptionError : public Error {
 public:
  using Error::Error;
};

// Violation of a PSI session contract: bad payload, wrong message order,
// failed group membership, element counts out of bounds.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Input file could not be parsed; message carries the line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Socket-level failures (connect, read, write, listen).
class NetError : public Error {
 public:
  using Error::Error;
};

}  // namespace psikit
