#pragma once

#include <stdexcept>
#include <string>

namespace dirdepth {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Geometry / input validation.
class DimMismatch : public Error {
public:
    DimMismatch(int a, int b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DimensionTooSmall : public Error {
public:
    explicit DimensionTooSmall(int q)
        : Error("dimension must be >= 2, got " + std::to_string(q)) {}
};

class ZeroNorm : public Error {
public:
    ZeroNorm() : Error("cannot normalize a (near-)zero vector") {}
};

class EmptySample : public Error {
public:
    EmptySample() : Error("sample must contain at least one point") {}
};

class SampleTooSmall : public Error {
public:
    explicit SampleTooSmall(const std::string& what) : Error(what) {}
};

class NotCircle : public Error {
public:
    explicit NotCircle(int q)
        : Error("operation requires points on the circle (q=2), got q=" + std::to_string(q)) {}
};

class NullResultant : public Error {
public:
    NullResultant() : Error("sample resultant is (near-)zero; spherical mean undefined") {}
};

class ConstantDepth : public Error {
public:
    explicit ConstantDepth(const std::string& what) : Error(what) {}
};

class BadKernel : public Error {
public:
    explicit BadKernel(const std::string& what) : Error(what) {}
};

// Numerics.
class QuadratureFailure : public Error {
public:
    explicit QuadratureFailure(const std::string& what) : Error(what) {}
};

// Configuration / orchestration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// File ingestion; all carry a 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }
private:
    int line_;
};

class NormError : public Error {
public:
    explicit NormError(int line)
        : Error("line " + std::to_string(line) + ": row is not unit-norm (pass --normalize to rescale)"),
          line_(line) {}
    int line() const { return line_; }
private:
    int line_;
};

class DimInconsistent : public Error {
public:
    DimInconsistent(int line, int expected, int got)
        : Error("line " + std::to_string(line) + ": expected " + std::to_string(expected) +
                " columns, got " + std::to_string(got)),
          line_(line) {}
    int line() const { return line_; }
private:
    int line_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace dirdepth
