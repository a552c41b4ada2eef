#pragma once

#include <stdexcept>
#include <string>

namespace teich {

enum class ErrorKind {
    Elliptic,            // |trace| < 2, no translation length
    Parabolic,           // |trace| = 2 where a hyperbolic element was required
    Degenerate,          // coincident geodesics, impossible pants, arccosh argument < 1
    Domain,              // non-positive length or other out-of-range scalar
    CuspArc,             // arc requested on a surface with a cusp boundary
    EmptyFamily,         // estimator called with no curves or arcs
    Assembly,            // glued holonomy failed a trace or relation check
    PeriodicOrReducible, // operation requires a pseudo-Anosov class
    SearchDomain,        // empty or inverted optimizer bounds
    BadInput,            // unparsable word, slope, or config
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace teich
