#include "gconv/s3.hpp"

#include "gconv/convexity.hpp"
#include "gconv/error.hpp"
#include "gconv/generators.hpp"
#include "gconv/metric.hpp"
#include "gconv/proximal.hpp"
#include "gconv/separation.hpp"

namespace gconv {

std::string_view to_string(S3Method method) {
    switch (method) {
    case S3Method::automatic: return "auto";
    case S3Method::bruteforce: return "bruteforce";
    case S3Method::tc_shadows: return "tc_shadows";
    case S3Method::meshed_forbidden: return "meshed_forbidden";
    case S3Method::bipartite_partial_cube: return "bipartite_partial_cube";
    }
    return "?";
}

std::optional<S3Method> parse_s3_method(std::string_view name) {
    for (auto m : {S3Method::automatic, S3Method::bruteforce, S3Method::tc_shadows, S3Method::meshed_forbidden,
                   S3Method::bipartite_partial_cube})
        if (name == to_string(m)) return m;
    if (name == "automatic") return S3Method::automatic;
    return std::nullopt;
}

std::string_view to_string(VerdictStatus status) {
    switch (status) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::fails: return "fails";
    case VerdictStatus::unknown: return "unknown";
    }
    return "?";
}

namespace {

Verdict verdict(std::string property, std::string_view method, bool ok) {
    Verdict v;
    v.property = std::move(property);
    v.method = std::string(method);
    v.status = ok ? VerdictStatus::holds : VerdictStatus::fails;
    return v;
}

Verdict failing(std::string property, std::string_view method, Witness w, std::string reason) {
    Verdict v = verdict(std::move(property), method, false);
    v.witness = std::move(w);
    v.reason = std::move(reason);
    return v;
}

// The first edge whose W-pair is not a pair of complementary convex sets.
std::optional<Edge> djokovic_violation(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        auto w = w_partition(g, u, v);
        if (!w.equidistant.empty() || !is_convex(g, w.closer_to_u) || !is_convex(g, w.closer_to_v)) return Edge{u, v};
    }
    return std::nullopt;
}

Verdict s3_partial_cube(const Graph& g) {
    if (auto e = djokovic_violation(g))
        return failing("s3", to_string(S3Method::bipartite_partial_cube), {"edge", {e->first, e->second}, {}, 0},
                       "edge W-pair is not a halfspace pair");
    return verdict("s3", to_string(S3Method::bipartite_partial_cube), true);
}

Verdict s3_forbidden(const Graph& g) {
    for (int i = 1; i <= 5; ++i)
        if (auto emb = find_induced(g, gen::forbidden(i)))
            return failing("s3", to_string(S3Method::meshed_forbidden), {"forbidden_embedding", *emb, {}, i},
                           "contains forbidden pattern " + std::to_string(i));
    return verdict("s3", to_string(S3Method::meshed_forbidden), true);
}

Verdict s3_tc_shadows(const Graph& g) {
    for (const auto& pc : pointed_maximal_cliques(g)) {
        const auto split = clique_split(g, pc.x0, pc.k);
        if (!is_convex(g, split.toward_k))
            return failing("s3", to_string(S3Method::tc_shadows), {"pointed_clique", {pc.x0}, pc.k, 0},
                           "clique shadow is not convex");
        if (!is_convex(g, split.toward_x0))
            return failing("s3", to_string(S3Method::tc_shadows), {"pointed_clique", {pc.x0}, pc.k, 0},
                           "extended shadow is not convex");
    }
    return verdict("s3", to_string(S3Method::tc_shadows), true);
}

Verdict s3_bruteforce(const Graph& g, std::size_t max_n) {
    if (g.order() > max_n) {
        Verdict v;
        v.property = "s3";
        v.method = std::string(to_string(S3Method::bruteforce));
        v.reason = "TooLargeForBruteforce: n=" + std::to_string(g.order()) + " exceeds " + std::to_string(max_n);
        return v;
    }
    for (const auto& s : enumerate_semispaces_bruteforce(g, ConvexityKind::geodesic, max_n))
        if (!is_convex(g, s.members.complement()))
            return failing("s3", to_string(S3Method::bruteforce), {"semispace", s.attaching, s.members, 0},
                           "semispace complement is not convex");
    return verdict("s3", to_string(S3Method::bruteforce), true);
}

}  // namespace

bool s3_method_applies(const Graph& g, S3Method method) {
    switch (method) {
    case S3Method::automatic:
    case S3Method::bruteforce: return true;
    case S3Method::bipartite_partial_cube: return is_bipartite(g);
    case S3Method::meshed_forbidden: return is_meshed(g).holds;
    case S3Method::tc_shadows: return check_metric_condition(g, MetricCondition::tc).holds;
    }
    return false;
}

Verdict check_s3(const Graph& g, S3Method method, std::size_t max_n) {
    if (method == S3Method::automatic) {
        if (is_bipartite(g)) return s3_partial_cube(g);
        if (is_meshed(g).holds) return s3_forbidden(g);
        if (check_metric_condition(g, MetricCondition::tc).holds) return s3_tc_shadows(g);
        return s3_bruteforce(g, max_n);
    }
    if (!s3_method_applies(g, method))
        throw Error(ErrorCode::strategy_inapplicable, std::string(to_string(method)) + " does not apply to this graph");
    switch (method) {
    case S3Method::bipartite_partial_cube: return s3_partial_cube(g);
    case S3Method::meshed_forbidden: return s3_forbidden(g);
    case S3Method::tc_shadows: return s3_tc_shadows(g);
    default: return s3_bruteforce(g, max_n);
    }
}

Verdict check_s2(const Graph& g, std::size_t max_n) {
    const auto pairs = enumerate_halfspaces(g, ConvexityKind::geodesic, HalfspaceStrategy::bruteforce, max_n);
    // separated[p] collects every q split from p by some pair.
    std::vector<VertexSet> separated(g.order(), g.empty_set());
    for (const auto& h : pairs) {
        for (Vertex p : h.h1) separated[p] |= h.h2;
        for (Vertex p : h.h2) separated[p] |= h.h1;
    }
    for (Vertex p = 0; p < g.order(); ++p) {
        VertexSet missing = separated[p].complement();
        missing.erase(p);
        for (Vertex q : missing)
            if (q > p) return failing("s2", "bruteforce", {"pair", {p, q}, {}, 0}, "no halfspace pair separates the vertices");
    }
    return verdict("s2", "bruteforce", true);
}

Verdict check_s4(const Graph& g) {
    auto w = check_pasch(g);
    if (!w.holds) return failing("s4", "pasch", {"tuple", w.tuple, {}, 0}, "Pasch axiom fails");
    return verdict("s4", "pasch", true);
}

Verdict check_convex_clique_shadows(const Graph& g) {
    for (const auto& pc : pointed_maximal_cliques(g))
        if (!is_convex(g, clique_split(g, pc.x0, pc.k).toward_k))
            return failing("clique-shadows", "shadows", {"pointed_clique", {pc.x0}, pc.k, 0},
                           "clique shadow is not convex");
    return verdict("clique-shadows", "shadows", true);
}

Verdict check_partial_cube(const Graph& g) {
    auto v = s3_partial_cube(g);
    v.property = "partial-cube";
    v.method = "djokovic";
    return v;
}

bool witness_confirms_failure(const Graph& g, const Verdict& v) {
    if (!v.fails() || !v.witness) return false;
    const Witness& w = *v.witness;
    auto members = [&](const std::vector<Vertex>& t) {
        for (Vertex x : t)
            if (x >= g.order()) return false;
        return true;
    };
    if (!members(w.tuple)) return false;
    if (w.kind == "pointed_clique") {
        if (w.tuple.size() != 1 || !w.set || !is_pointed_maximal_clique(g, w.tuple[0], *w.set)) return false;
        const auto split = clique_split(g, w.tuple[0], *w.set);
        return !is_convex(g, split.toward_k) || (v.property == "s3" && !is_convex(g, split.toward_x0));
    }
    if (w.kind == "forbidden_embedding") {
        if (w.pattern < 1 || w.pattern > 5) return false;
        const Graph pattern = gen::forbidden(w.pattern);
        if (w.tuple.size() != pattern.order()) return false;
        for (Vertex i = 0; i < pattern.order(); ++i)
            for (Vertex j = i + 1; j < pattern.order(); ++j)
                if (w.tuple[i] == w.tuple[j] || pattern.adjacent(i, j) != g.adjacent(w.tuple[i], w.tuple[j]))
                    return false;
        return true;
    }
    if (w.kind == "semispace") {
        if (!w.set || w.tuple.empty()) return false;
        for (Vertex x0 : w.tuple)
            if (!is_semispace(g, *w.set, x0)) return false;
        return !is_convex(g, w.set->complement());
    }
    if (w.kind == "edge") {
        if (w.tuple.size() != 2 || !g.adjacent(w.tuple[0], w.tuple[1])) return false;
        auto p = w_partition(g, w.tuple[0], w.tuple[1]);
        return !p.equidistant.empty() || !is_convex(g, p.closer_to_u) || !is_convex(g, p.closer_to_v);
    }
    if (w.kind == "pair") {
        if (w.tuple.size() != 2 || w.tuple[0] == w.tuple[1]) return false;
        for (const auto& h : enumerate_halfspaces(g, ConvexityKind::geodesic, HalfspaceStrategy::bruteforce, g.order()))
            if (h.h1.contains(w.tuple[0]) != h.h1.contains(w.tuple[1])) return false;
        return true;
    }
    if (w.kind == "tuple" && v.property == "s4") {
        auto replay = check_pasch(g);
        return !replay.holds && replay.tuple == w.tuple;
    }
    return false;
}

}  // namespace gconv
