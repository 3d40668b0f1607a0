#ifndef YOSHIGRIP_ERRORS_HPP
#define YOSHIGRIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace yoshigrip {

// Base class for all toolkit errors. User-facing code catches this and maps
// it onto CLI exit codes; nothing here carries a stack trace.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- parameter / configuration errors (CLI exit code 1) ---

struct InvalidParams : Error {
    std::string field;
    InvalidParams(std::string field_, const std::string& msg)
        : Error("invalid parameter '" + field_ + "': " + msg), field(std::move(field_)) {}
};

struct IncompatibleRows : Error {
    explicit IncompatibleRows(const std::string& msg) : Error("incompatible rows: " + msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct ValidationError : Error {
    std::string field;
    ValidationError(std::string field_, const std::string& value, const std::string& constraint)
        : Error("validation error: field '" + field_ + "' = " + value + " violates: " + constraint),
          field(std::move(field_)) {}
};

// --- geometric / kinematic errors (CLI exit code 2) ---

struct CollinearAnchors : Error {
    CollinearAnchors() : Error("trilateration anchors are collinear") {}
};

struct NoIntersection : Error {
    explicit NoIntersection(const std::string& msg) : Error("no intersection: " + msg) {}
};

struct UnreachableState : Error {
    explicit UnreachableState(const std::string& msg) : Error("unreachable fold state: " + msg) {}
};

struct RootNotBracketed : Error {
    explicit RootNotBracketed(const std::string& msg) : Error("root not bracketed: " + msg) {}
};

struct ModelMismatch : Error {
    explicit ModelMismatch(const std::string& msg) : Error("model mismatch: " + msg) {}
};

struct DegenerateTransmission : Error {
    explicit DegenerateTransmission(const std::string& msg)
        : Error("degenerate transmission: " + msg) {}
};

struct OpenChamber : Error {
    explicit OpenChamber(const std::string& msg) : Error("open chamber: " + msg) {}
};

struct NoWrap : Error {
    explicit NoWrap(const std::string& msg) : Error("wrap grasp infeasible: " + msg) {}
};

struct NotUnimodal : Error {
    explicit NotUnimodal(const std::string& msg) : Error("objective not unimodal: " + msg) {}
};

struct AllInfeasible : Error {
    AllInfeasible() : Error("all sweep grid cells are kinematically infeasible") {}
};

}  // namespace yoshigrip

#endif  // YOSHIGRIP_ERRORS_HPP
