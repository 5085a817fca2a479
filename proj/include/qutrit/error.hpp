#pragma once

#include <stdexcept>
#include <string>

namespace qutrit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter value is NaN or infinite.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Which structural check a matrix failed.
enum class MatrixCheck { Hermitian, UnitTrace, Finite };

class InvalidMatrix : public Error {
public:
    InvalidMatrix(MatrixCheck check, const std::string& what) : Error(what), check_(check) {}
    MatrixCheck check() const noexcept { return check_; }

private:
    MatrixCheck check_;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// No closed form is printed for the requested (case, inequality, normalization).
class NoPrintedForm : public Error {
public:
    using Error::Error;
};

class InvalidRange : public Error {
public:
    using Error::Error;
};

class SamplerStall : public Error {
public:
    using Error::Error;
};

class UnknownCase : public Error {
public:
    using Error::Error;
};

}  // namespace qutrit
