#include "gconv/error.hpp"

namespace gconv {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_vertex: return "InvalidVertex";
    case ErrorCode::loop_edge: return "LoopEdge";
    case ErrorCode::disconnected: return "Disconnected";
    case ErrorCode::empty_graph: return "EmptyGraph";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::not_pointed_maximal_clique: return "NotPointedMaximalClique";
    case ErrorCode::mode_requires_s3: return "ModeRequiresS3";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::strategy_inapplicable: return "StrategyInapplicable";
    case ErrorCode::hereditary_dismantling_failed: return "HereditaryDismantlingFailed";
    case ErrorCode::bad_params: return "BadParams";
    }
    return "Error";
}

}  // namespace gconv
