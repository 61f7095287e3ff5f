#include "sddlab/errors.hpp"

namespace sddlab {

std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::BadParameter: return "BadParameter";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::NoEdges: return "NoEdges";
    case Errc::TooSmall: return "TooSmall";
    case Errc::ZeroDegreeNegativeExponent: return "ZeroDegreeNegativeExponent";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::NotMinimalEdge: return "NotMinimalEdge";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Infeasible: return "Infeasible";
    }
    return "Unknown";
}

} // namespace sddlab
