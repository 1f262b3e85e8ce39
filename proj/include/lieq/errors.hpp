#pragma once

#include <stdexcept>
#include <string>

namespace lieq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

/// An operator's minimal polynomial has an irreducible factor of degree > 2
/// over the rationals; the real/imaginary split is not attempted.
class UnsupportedEigenvalueField : public Error {
public:
  using Error::Error;
};

class NotSemisimple : public Error {
public:
  using Error::Error;
};

class InvalidAlgebra : public Error {
public:
  using Error::Error;
};

class InvalidStructure : public Error {
public:
  using Error::Error;
};

class DegenerateHStructure : public Error {
public:
  using Error::Error;
};

class InvalidLeviData : public Error {
public:
  using Error::Error;
};

class UnknownEntry : public Error {
public:
  using Error::Error;
};

class BadParameters : public Error {
public:
  using Error::Error;
};

class GenerationFailed : public Error {
public:
  using Error::Error;
};

class UnknownTheorem : public Error {
public:
  using Error::Error;
};

} // namespace lieq
