#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gconv {

enum class ErrorCode {
    parse_error,
    invalid_vertex,
    loop_edge,
    disconnected,
    empty_graph,
    empty_input,
    not_pointed_maximal_clique,
    mode_requires_s3,
    precondition_violated,
    too_large,
    strategy_inapplicable,
    hereditary_dismantling_failed,
    bad_params,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gconv
