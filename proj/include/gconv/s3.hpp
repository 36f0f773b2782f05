#pragma once

#include "gconv/graph.hpp"
#include "gconv/oracles.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gconv {

enum class S3Method { automatic, bruteforce, tc_shadows, meshed_forbidden, bipartite_partial_cube };

std::string_view to_string(S3Method method);
std::optional<S3Method> parse_s3_method(std::string_view name);

enum class VerdictStatus { holds, fails, unknown };

std::string_view to_string(VerdictStatus status);

// What a failing verdict points at:
//   pointed_clique       tuple = {x0}, set = K
//   forbidden_embedding  tuple = images of the pattern vertices, pattern = 1..5
//   semispace            tuple = attaching vertices, set = members
//   edge                 tuple = {u, v} whose W-pair is not a halfspace pair
//   pair                 tuple = {p, q} not separated by any halfspace pair
//   tuple                an axiom or metric-condition violation
struct Witness {
    std::string kind;
    std::vector<Vertex> tuple;
    std::optional<VertexSet> set;
    int pattern = 0;
};

struct Verdict {
    std::string property;
    VerdictStatus status = VerdictStatus::unknown;
    std::string method;
    std::optional<Witness> witness;
    std::string reason;

    [[nodiscard]] bool holds() const { return status == VerdictStatus::holds; }
    [[nodiscard]] bool fails() const { return status == VerdictStatus::fails; }
};

// A forced method that does not apply throws Error{strategy_inapplicable}.
// The brute force degrades to an unknown verdict above max_n.
[[nodiscard]] Verdict check_s3(const Graph& g, S3Method method = S3Method::automatic,
                               std::size_t max_n = default_semispace_max_n);
[[nodiscard]] bool s3_method_applies(const Graph& g, S3Method method);

// Throws Error{too_large} above max_n.
[[nodiscard]] Verdict check_s2(const Graph& g, std::size_t max_n = default_oracle_max_n);
[[nodiscard]] Verdict check_s4(const Graph& g);
[[nodiscard]] Verdict check_convex_clique_shadows(const Graph& g);
[[nodiscard]] Verdict check_partial_cube(const Graph& g);

// True when the witness of a failing verdict reproduces the failure.
[[nodiscard]] bool witness_confirms_failure(const Graph& g, const Verdict& verdict);

}  // namespace gconv
