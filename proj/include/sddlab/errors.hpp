#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sddlab {

// Error categories surfaced by the library. The CLI maps these onto
// process exit codes (parse -> 2, precondition -> 3).
enum class Errc {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    EmptyGraph,
    BadParameter,
    MalformedGraph6,
    NoEdges,
    TooSmall,
    ZeroDegreeNegativeExponent,
    IsolatedVertex,
    HypothesisNotMet,
    NotMinimalEdge,
    TooLarge,
    Infeasible,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace sddlab
