#pragma once

#include <stdexcept>
#include <string>

namespace geolift {

// Base class for all typed errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyWordError : Error {
    explicit EmptyWordError(const std::string& m = "word reduces to the identity") : Error(m) {}
};
struct NotInHnnFormError : Error {
    explicit NotInHnnFormError(const std::string& m) : Error(m) {}
};
struct NotArcFormError : Error {
    explicit NotArcFormError(const std::string& m) : Error(m) {}
};
struct NotPositiveError : Error {
    explicit NotPositiveError(const std::string& m) : Error(m) {}
};
struct MissingSymbolError : Error {
    explicit MissingSymbolError(const std::string& m) : Error(m) {}
};
struct NotInSubgroupError : Error {
    explicit NotInSubgroupError(const std::string& m) : Error(m) {}
};
struct ParabolicError : Error {
    explicit ParabolicError(const std::string& m = "matrix is parabolic (|trace| = 2)") : Error(m) {}
};
struct EllipticError : Error {
    explicit EllipticError(const std::string& m = "matrix is elliptic (|trace| < 2)") : Error(m) {}
};
struct UnstableError : Error {
    long partial_count;
    explicit UnstableError(long count, const std::string& m)
        : Error(m), partial_count(count) {}
};
struct ConjugateInputsError : Error {
    explicit ConjugateInputsError(const std::string& m) : Error(m) {}
};
struct DegenerateError : Error {
    explicit DegenerateError(const std::string& m) : Error(m) {}
};
struct BadSuffixError : Error {
    explicit BadSuffixError(const std::string& m) : Error(m) {}
};
struct TrivialFactorError : Error {
    explicit TrivialFactorError(const std::string& m) : Error(m) {}
};
struct CapacityExceededError : Error {
    long capacity;
    long needed;
    CapacityExceededError(long cap, long need, const std::string& m)
        : Error(m), capacity(cap), needed(need) {}
};
struct RangeTooLargeError : Error {
    explicit RangeTooLargeError(const std::string& m) : Error(m) {}
};
struct EmptyTableError : Error {
    explicit EmptyTableError(const std::string& m = "table has no rows") : Error(m) {}
};
struct NoRootError : Error {
    explicit NoRootError(const std::string& m) : Error(m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(m) {}
};

}  // namespace geolift
