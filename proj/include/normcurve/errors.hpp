#ifndef NORMCURVE_ERRORS_HPP
#define NORMCURVE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace normcurve {

// Base for every recoverable domain error; CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
    DomainError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code(std::move(code)) {}
    std::string code;
};

struct VariableMismatch : DomainError {
    explicit VariableMismatch(const std::string& msg) : DomainError("VariableMismatch", msg) {}
};

struct ZeroDivision : DomainError {
    explicit ZeroDivision(const std::string& msg) : DomainError("ZeroDivision", msg) {}
};

struct Reducible : DomainError {
    explicit Reducible(const std::string& msg) : DomainError("Reducible", msg) {}
};

struct ZeroElement : DomainError {
    explicit ZeroElement(const std::string& msg) : DomainError("ZeroElement", msg) {}
};

struct TrivialPoint : DomainError {
    explicit TrivialPoint(const std::string& msg) : DomainError("TrivialPoint", msg) {}
};

struct InvalidPoint : DomainError {
    explicit InvalidPoint(const std::string& msg) : DomainError("InvalidPoint", msg) {}
};

struct ConditionFailed : DomainError {
    explicit ConditionFailed(const std::string& msg) : DomainError("ConditionFailed", msg) {}
};

struct ExceptionalForm : DomainError {
    explicit ExceptionalForm(const std::string& msg) : DomainError("ExceptionalForm", msg) {}
};

struct ZeroA1 : DomainError {
    explicit ZeroA1(const std::string& msg) : DomainError("ZeroA1", msg) {}
};

struct ZeroCoefficient : DomainError {
    explicit ZeroCoefficient(const std::string& msg) : DomainError("ZeroCoefficient", msg) {}
};

struct UsePureCubicMethod : DomainError {
    explicit UsePureCubicMethod(const std::string& msg) : DomainError("UsePureCubicMethod", msg) {}
};

struct ZeroParameter : DomainError {
    explicit ZeroParameter(const std::string& msg) : DomainError("ZeroParameter", msg) {}
};

struct ResidualDegreeError : DomainError {
    explicit ResidualDegreeError(const std::string& msg) : DomainError("ResidualDegreeError", msg) {}
};

struct DegenerateDenominator : DomainError {
    explicit DegenerateDenominator(const std::string& msg) : DomainError("DegenerateDenominator", msg) {}
};

struct IdentityFailed : DomainError {
    explicit IdentityFailed(const std::string& msg) : DomainError("IdentityFailed", msg) {}
};

struct PoleExhaustion : DomainError {
    explicit PoleExhaustion(const std::string& msg) : DomainError("PoleExhaustion", msg) {}
};

// Parse errors carry a byte offset and the tokens that would have been
// accepted there; CLI maps these to exit code 3.
struct SyntaxError : std::runtime_error {
    SyntaxError(std::size_t offset, std::string expected, const std::string& msg)
        : std::runtime_error(msg), offset(offset), expected(std::move(expected)) {}
    std::size_t offset;
    std::string expected;
};

}  // namespace normcurve

#endif
