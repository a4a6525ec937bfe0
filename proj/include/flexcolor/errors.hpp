#pragma once

#include <stdexcept>
#include <string>

namespace flexcolor {

// Machine-readable error codes, also used to pick CLI exit status.
enum class ErrorCode {
    parse_error,
    asymmetric_rotation,
    duplicate_neighbor,
    precondition_violated,
    disconnected,
    not_triangle_free,
    cap_exceeded,
    face_bound_violation,
    no_rich_vertex_on_negative_face,
    internal_no_coloring,
    theorem_violation,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

    // 2 for bad input, 3 for internal/theorem diagnostics.
    int exit_status() const;

private:
    ErrorCode code_;
};

} // namespace flexcolor
