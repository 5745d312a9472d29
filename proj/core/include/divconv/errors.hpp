#pragma once

#include <stdexcept>
#include <string>

namespace divconv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the operation's domain (d = 0, n = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Ligozat condition (i) fails, so the q-prefactor exponent is fractional.
class NonIntegralExponentError : public Error {
 public:
  using Error::Error;
};

/// Candidate generators ran out before a full cusp basis was selected.
class BasisIncompleteError : public Error {
 public:
  using Error::Error;
};

/// The sampled linear system never reached full column rank.
class UnderdeterminedError : public Error {
 public:
  using Error::Error;
};

/// The sampled system is inconsistent, or the solved identity fails on
/// verification: the basis does not span the squared-difference series.
class BasisNotSpanningError : public Error {
 public:
  using Error::Error;
};

/// A closed form produced a non-integral or negative convolution value.
class FormulaCorruptError : public Error {
 public:
  using Error::Error;
};

/// The level is outside 2^nu * (odd squarefree), nu <= 3, and no basis is
/// available for it.
class UnsupportedLevelError : public Error {
 public:
  using Error::Error;
};

/// A lattice-count oracle was asked for a value above its ceiling.
class OracleCeilingError : public Error {
 public:
  using Error::Error;
};

/// No embedded fixture basis exists for the requested level.
class UnknownFixtureError : public Error {
 public:
  using Error::Error;
};

/// Cache record is malformed or its checksum does not match.
class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace divconv
