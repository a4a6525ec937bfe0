#include "flexcolor/errors.hpp"

namespace flexcolor {

const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::asymmetric_rotation: return "AsymmetricRotation";
    case ErrorCode::duplicate_neighbor: return "DuplicateNeighbor";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::disconnected: return "Disconnected";
    case ErrorCode::not_triangle_free: return "NotTriangleFree";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::face_bound_violation: return "FaceBoundViolation";
    case ErrorCode::no_rich_vertex_on_negative_face: return "NoRichVertexOnNegativeFace";
    case ErrorCode::internal_no_coloring: return "InternalNoColoring";
    case ErrorCode::theorem_violation: return "TheoremViolation";
    }
    return "UnknownError";
}

int Error::exit_status() const {
    switch (code_) {
    case ErrorCode::no_rich_vertex_on_negative_face:
    case ErrorCode::internal_no_coloring:
    case ErrorCode::theorem_violation:
        return 3;
    default:
        return 2;
    }
}

} // namespace flexcolor
