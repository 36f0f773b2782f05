#include "gconv/oracles.hpp"

#include "gconv/error.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace gconv {
namespace {

void guard(const Graph& g, std::size_t max_n, const char* what) {
    if (g.order() > max_n)
        throw Error(ErrorCode::too_large, std::string(what) + " is limited to n <= " + std::to_string(max_n) +
                                              " (graph has " + std::to_string(g.order()) + ")");
}

// Hulls memoized by seed for the subset searches below.
class HullCache {
public:
    HullCache(const Graph& g, ConvexityKind kind) : g_(g), kind_(kind) {}

    const VertexSet& operator()(const VertexSet& seed) {
        auto it = memo_.find(seed);
        if (it != memo_.end()) return it->second;
        VertexSet h = seed.empty() ? seed : hull(g_, seed, kind_);
        return memo_.emplace(seed, std::move(h)).first->second;
    }

private:
    const Graph& g_;
    ConvexityKind kind_;
    std::unordered_map<VertexSet, VertexSet, VertexSetHash> memo_;
};

}  // namespace

std::vector<VertexSet> enumerate_convex_sets(const Graph& g, ConvexityKind kind, std::size_t max_n) {
    guard(g, max_n, "convex-set enumeration");
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> frontier{g.empty_set()};
    seen.insert(g.empty_set());
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (const auto& c : frontier)
            for (Vertex v = 0; v < g.order(); ++v) {
                if (c.contains(v)) continue;
                VertexSet grown = c.empty() ? hull(g, VertexSet::singleton(g.order(), v), kind)
                                            : extend_hull(g, c, VertexSet::singleton(g.order(), v), kind);
                if (seen.insert(grown).second) next.push_back(std::move(grown));
            }
        frontier = std::move(next);
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SemispaceClass> enumerate_semispaces_bruteforce(const Graph& g, ConvexityKind kind,
                                                            std::size_t max_n) {
    guard(g, max_n, "brute-force semispace enumeration");
    std::vector<SemispaceClass> out;
    for (const auto& c : enumerate_convex_sets(g, kind, max_n)) {
        if (c.empty() || c.count() == g.order()) continue;
        // x0 is attached iff x0 lies in hull(C ∪ {y}) for every other outside y.
        VertexSet attach = c.complement();
        for (Vertex y : c.complement()) {
            VertexSet reach = extend_hull(g, c, VertexSet::singleton(g.order(), y), kind);
            attach &= reach;
            if (attach.empty()) break;
        }
        if (!attach.empty()) out.push_back({c, attach.to_vector()});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.members < b.members; });
    return out;
}

std::size_t helly_number(const Graph& g, ConvexityKind kind, std::size_t max_n) {
    guard(g, max_n, "Helly number");
    HullCache conv(g, kind);
    auto independent = [&](const VertexSet& a) {
        VertexSet meet = g.all();
        for (Vertex x : a) {
            VertexSet rest = a;
            rest.erase(x);
            meet &= conv(rest);
            if (meet.empty()) return true;
        }
        return meet.empty();
    };
    // h-independence is hereditary, so extending independent sets suffices.
    std::size_t best = 0;
    VertexSet current = g.empty_set();
    std::function<void(Vertex)> grow = [&](Vertex from) {
        best = std::max(best, current.count());
        for (Vertex v = from; v < g.order(); ++v) {
            current.insert(v);
            if (independent(current)) grow(v + 1);
            current.erase(v);
        }
    };
    grow(0);
    return best;
}

std::size_t radon_number(const Graph& g, ConvexityKind kind, std::size_t max_n) {
    guard(g, max_n, "Radon number");
    HullCache conv(g, kind);
    auto has_partition = [&](const VertexSet& a) {
        const auto members = a.to_vector();
        const std::size_t k = members.size();
        if (k < 2) return false;
        // First member fixed on the left side to skip mirrored partitions.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
            VertexSet left = g.empty_set(), right = g.empty_set();
            left.insert(members[0]);
            for (std::size_t i = 1; i < k; ++i)
                ((mask >> (i - 1)) & 1U ? right : left).insert(members[i]);
            if (right.empty()) continue;
            if (conv(left).intersects(conv(right))) return true;
        }
        return false;
    };
    // Radon-dependence is inherited by supersets.
    std::size_t best = 0;
    VertexSet current = g.empty_set();
    std::function<void(Vertex)> grow = [&](Vertex from) {
        best = std::max(best, current.count());
        for (Vertex v = from; v < g.order(); ++v) {
            current.insert(v);
            if (!has_partition(current)) grow(v + 1);
            current.erase(v);
        }
    };
    grow(0);
    return best;
}

std::size_t caratheodory_number(const Graph& g, ConvexityKind kind, std::size_t max_n) {
    guard(g, max_n, "Caratheodory number");
    HullCache conv(g, kind);
    const std::size_t n = g.order();
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        VertexSet a = g.empty_set();
        for (Vertex v = 0; v < n; ++v)
            if ((mask >> v) & 1U) a.insert(v);
        VertexSet left = conv(a);
        for (Vertex x : a) {
            VertexSet rest = a;
            rest.erase(x);
            left -= conv(rest);
            if (left.empty()) break;
        }
        if (!left.empty()) best = size;
    }
    return best;
}

}  // namespace gconv
