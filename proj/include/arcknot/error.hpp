#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arcknot {

enum class ErrorKind {
    Parse,
    Io,
    PointOnLine,
    TooFewVertices,
    RepeatedVertex,
    SelfIntersection,
    ClosedPath,
    CollinearArc,
    CollinearDegenerate,
    OnTraceSet,
    NotGeneric,
    InvalidGroup,
    GroupTooLarge,
    Internal,
};

std::string_view to_string(ErrorKind kind);

/// Structured failure carried by every fallible operation in the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace arcknot
