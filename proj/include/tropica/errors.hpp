#pragma once

#include <stdexcept>
#include <string>

namespace tropica {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_)
        : Error("parse: " + msg + " (line " + std::to_string(line_) +
                ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

struct SemiringMismatch : Error {
    explicit SemiringMismatch(const std::string& msg) : Error("parse: " + msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error("matrices: " + msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("systems: " + msg) {}
};

struct SizeGuard : Error {
    explicit SizeGuard(const std::string& msg) : Error("guard: " + msg) {}
};

struct SearchGuard : Error {
    explicit SearchGuard(const std::string& msg) : Error("guard: " + msg) {}
};

struct MonomialOverlap : Error {
    explicit MonomialOverlap(const std::string& msg) : Error("polyid: " + msg) {}
};

struct NotAnIdentity : Error {
    explicit NotAnIdentity(const std::string& msg) : Error("polyid: " + msg) {}
};

struct SymmetryUnavailable : Error {
    explicit SymmetryUnavailable(const std::string& msg) : Error("polyid: " + msg) {}
};

struct PreconditionUnmet : Error {
    explicit PreconditionUnmet(const std::string& msg) : Error("systems: " + msg) {}
};

struct ZeroPermanent : Error {
    explicit ZeroPermanent(const std::string& msg) : Error("matrices: " + msg) {}
};

struct UnknownFixture : Error {
    explicit UnknownFixture(const std::string& msg) : Error("fixtures: " + msg) {}
};

}  // namespace tropica
