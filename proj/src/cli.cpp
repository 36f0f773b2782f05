#include "gconv/cli.hpp"

#include "gconv/convexity.hpp"
#include "gconv/error.hpp"
#include "gconv/generators.hpp"
#include "gconv/metric.hpp"
#include "gconv/oracles.hpp"
#include "gconv/proximal.hpp"
#include "gconv/s3.hpp"
#include "gconv/separation.hpp"
#include "gconv/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace gconv::cli {
namespace {

using io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph_file;
    std::string convexity = "geodesic";
    std::string strategy;
    std::optional<std::string> set_a;
    std::optional<std::string> set_b;
    std::optional<long long> vertex;
    std::optional<std::size_t> max_n;
    bool json = false;
    std::string output;
    std::vector<std::string> args;
};

struct Outcome {
    Json records = Json::array();
    int code = ok;
    std::string raw;  // gen writes the edge list verbatim
};

class Context {
public:
    Context(const Options& opt, std::istream& in) : opt_(opt), in_(in) {}

    const Graph& graph() {
        if (!graph_) {
            if (opt_.graph_file.empty() || opt_.graph_file == "-") {
                graph_ = read_edge_list(in_);
            } else {
                std::ifstream file(opt_.graph_file);
                if (!file) throw UsageError("cannot open graph file '" + opt_.graph_file + "'");
                graph_ = read_edge_list(file);
            }
        }
        return *graph_;
    }

    ConvexityKind kind() const {
        auto k = parse_convexity_kind(opt_.convexity);
        if (!k) throw UsageError("unknown convexity '" + opt_.convexity + "'");
        return *k;
    }

    std::size_t guard(std::size_t fallback) const {
        if (opt_.max_n) return *opt_.max_n;
        if (const char* env = std::getenv("GCONV_MAX_N")) {
            std::size_t value = 0;
            const std::string_view text(env);
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec == std::errc{} && ptr == text.data() + text.size()) return value;
            throw UsageError("GCONV_MAX_N must be a non-negative integer");
        }
        return fallback;
    }

    VertexSet set(const std::optional<std::string>& text, const char* flag) {
        if (!text) throw UsageError(std::string(flag) + " is required");
        const Graph& g = graph();
        VertexSet out = g.empty_set();
        std::string token;
        auto flush = [&] {
            if (token.empty()) return;
            out.insert(vertex_id(token, flag));
            token.clear();
        };
        for (char c : *text) {
            if (c == ',' || c == ' ' || c == '\t') flush();
            else token += c;
        }
        flush();
        return out;
    }

    Vertex vertex() {
        if (!opt_.vertex) throw UsageError("--vertex is required");
        return vertex_id(std::to_string(*opt_.vertex), "--vertex");
    }

    const Options& options() const { return opt_; }

private:
    Vertex vertex_id(const std::string& token, const char* flag) {
        long long v = -1;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw UsageError(std::string(flag) + ": '" + token + "' is not a vertex id");
        if (v < 0 || static_cast<std::size_t>(v) >= graph().order())
            throw UsageError(std::string(flag) + ": vertex " + token + " is out of range");
        return static_cast<Vertex>(v);
    }

    const Options& opt_;
    std::istream& in_;
    std::optional<Graph> graph_;
};

std::vector<long long> numeric_params(std::span<const std::string> words) {
    std::vector<long long> out;
    for (const auto& w : words) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
        if (ec != std::errc{} || ptr != w.data() + w.size()) throw UsageError("'" + w + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

std::string normalized(std::string s) {
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
}

Outcome cmd_gen(Context& ctx) {
    const auto& args = ctx.options().args;
    if (args.empty()) throw UsageError("gen needs a family name");
    Graph g = [&] {
        if (normalized(args[0]) == "basis_graph_graphic") {
            if (args.size() < 2) throw UsageError("basis_graph_graphic needs a base family");
            const auto params = numeric_params(std::span(args).subspan(2));
            return gen::basis_graph_graphic(gen::by_name(args[1], params));
        }
        const auto params = numeric_params(std::span(args).subspan(1));
        return gen::by_name(args[0], params);
    }();
    Outcome o;
    if (ctx.options().json) {
        Json edges = Json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        o.records.push_back(Json{{"n", g.order()}, {"m", g.size()}, {"edges", std::move(edges)}});
    } else {
        std::ostringstream text;
        write_edge_list(text, g);
        o.raw = text.str();
    }
    return o;
}

Outcome cmd_hull(Context& ctx) {
    const VertexSet s = ctx.set(ctx.options().set_a, "--set");
    const auto kind = ctx.kind();
    Outcome o;
    o.records.push_back(Json{{"convexity", to_string(kind)},
                             {"set", io::to_json(s)},
                             {"hull", io::to_json(hull(ctx.graph(), s, kind))}});
    return o;
}

Outcome cmd_shadow(Context& ctx) {
    const auto& opt = ctx.options();
    std::string variant = opt.args.empty() ? (opt.vertex ? "vertex" : "set") : opt.args[0];
    const Graph& g = ctx.graph();
    const VertexSet a = ctx.set(opt.set_a, "--set");
    Json rec{{"variant", variant}, {"base", io::to_json(a)}};
    VertexSet result;
    if (variant == "set") {
        const VertexSet b = ctx.set(opt.set_b, "--set-b");
        const auto kind = ctx.kind();
        rec["convexity"] = to_string(kind);
        rec["pole"] = io::to_json(b);
        result = shadow(g, a, b, kind);
    } else {
        const Vertex x0 = ctx.vertex();
        rec["pole"] = Json::array({x0});
        if (variant == "vertex") result = vertex_shadow(g, a, x0);
        else if (variant == "union") result = union_shadow(g, x0, a);
        else if (variant == "extended") result = extended_shadow(g, x0, a);
        else throw UsageError("unknown shadow variant '" + variant + "' (set|vertex|union|extended)");
    }
    rec["shadow"] = io::to_json(result);
    Outcome o;
    o.records.push_back(std::move(rec));
    return o;
}

Outcome cmd_semispaces(Context& ctx) {
    const Graph& g = ctx.graph();
    const auto kind = ctx.kind();
    std::string strategy = ctx.options().strategy.empty() ? "auto" : ctx.options().strategy;
    if (strategy != "auto" && strategy != "tc" && strategy != "bruteforce")
        throw UsageError("unknown semispace strategy '" + strategy + "' (auto|tc|bruteforce)");
    if (strategy == "tc" && kind != ConvexityKind::geodesic)
        throw UsageError("the tc strategy needs geodesic convexity");
    Outcome o;
    if (strategy != "bruteforce" && kind == ConvexityKind::geodesic) {
        const bool try_tc = strategy == "tc" || check_metric_condition(g, MetricCondition::tc).holds;
        if (try_tc) {
            try {
                for (const auto& r : enumerate_semispaces_tc(g)) o.records.push_back(io::to_json(r));
                return o;
            } catch (const Error& e) {
                if (strategy == "tc" || e.code() != ErrorCode::precondition_violated) throw;
            }
        }
    }
    for (const auto& c : enumerate_semispaces_bruteforce(g, kind, ctx.guard(default_semispace_max_n)))
        o.records.push_back(io::to_json(c));
    return o;
}

Outcome cmd_halfspaces(Context& ctx) {
    const std::string name = ctx.options().strategy.empty() ? "bruteforce" : ctx.options().strategy;
    auto strategy = parse_halfspace_strategy(name);
    if (!strategy) throw UsageError("unknown halfspace strategy '" + name + "'");
    Outcome o;
    for (const auto& p : enumerate_halfspaces(ctx.graph(), ctx.kind(), *strategy, ctx.guard(default_oracle_max_n)))
        o.records.push_back(io::to_json(p));
    return o;
}

int verdict_code(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::holds: return ok;
    case VerdictStatus::fails: return negative;
    case VerdictStatus::unknown: return guard;
    }
    return guard;
}

Outcome cmd_check(Context& ctx) {
    const auto& args = ctx.options().args;
    if (args.size() != 1) throw UsageError("check needs exactly one property");
    const std::string property = normalized(args[0]);
    const Graph& g = ctx.graph();
    Outcome o;
    auto condition = [&](const ConditionWitness& w) {
        o.records.push_back(io::to_json(w));
        o.code = w.holds ? ok : negative;
    };
    auto verdict = [&](const Verdict& v) {
        o.records.push_back(io::to_json(v));
        o.code = verdict_code(v.status);
    };
    if (property == "s2") verdict(check_s2(g, ctx.guard(default_oracle_max_n)));
    else if (property == "s3") {
        const std::string name = ctx.options().strategy.empty() ? "auto" : ctx.options().strategy;
        auto method = parse_s3_method(name);
        if (!method) throw UsageError("unknown s3 method '" + name + "'");
        verdict(check_s3(g, *method, ctx.guard(default_semispace_max_n)));
    } else if (property == "s4") verdict(check_s4(g));
    else if (property == "tc") condition(check_metric_condition(g, MetricCondition::tc));
    else if (property == "qc") condition(check_metric_condition(g, MetricCondition::qc));
    else if (property == "meshed") condition(check_metric_condition(g, MetricCondition::qc_minus));
    else if (property == "pc") condition(check_metric_condition(g, MetricCondition::pc));
    else if (property == "partial_cube") verdict(check_partial_cube(g));
    else if (property == "clique_shadows") verdict(check_convex_clique_shadows(g));
    else if (property == "peano") condition(check_peano(g));
    else if (property == "sandglass") condition(check_sandglass(g));
    else throw UsageError("unknown property '" + args[0] + "'");
    return o;
}

Outcome cmd_separate(Context& ctx) {
    const Graph& g = ctx.graph();
    const VertexSet a = ctx.set(ctx.options().set_a, "--set");
    const VertexSet b = ctx.set(ctx.options().set_b, "--set-b");
    const auto kind = ctx.kind();
    const std::string strategy = ctx.options().strategy.empty() ? "three-step" : ctx.options().strategy;
    SeparationResult r;
    if (strategy == "three-step") r = three_step_separation(g, kind, a, b, ctx.guard(default_oracle_max_n));
    else if (strategy == "greedy") r = greedy_separation(g, kind, a, b);
    else throw UsageError("unknown separation strategy '" + strategy + "' (three-step|greedy)");
    Outcome o;
    o.records.push_back(io::to_json(r));
    switch (r.status) {
    case SeparationStatus::separable: o.code = ok; break;
    case SeparationStatus::not_separable: o.code = negative; break;
    case SeparationStatus::unknown: o.code = guard; break;
    }
    return o;
}

Outcome cmd_numbers(Context& ctx) {
    const Graph& g = ctx.graph();
    const auto kind = ctx.kind();
    const std::size_t max_n = ctx.guard(default_oracle_max_n);
    Outcome o;
    o.records.push_back(Json{{"convexity", to_string(kind)},
                             {"helly", helly_number(g, kind, max_n)},
                             {"radon", radon_number(g, kind, max_n)},
                             {"caratheodory", caratheodory_number(g, kind, max_n)},
                             {"clique_number", clique_number(g)}});
    return o;
}

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("--graph", opt.graph_file, "edge-list file (default: stdin)");
    sub->add_option("--convexity", opt.convexity, "geodesic|monophonic|gated");
    sub->add_option("--strategy", opt.strategy, "algorithm choice");
    sub->add_option("--set", opt.set_a, "vertex list, e.g. \"0,1,2\"");
    sub->add_option("--set-b", opt.set_b, "second vertex list");
    sub->add_option("--vertex", opt.vertex, "vertex id");
    sub->add_option("--max-n", opt.max_n, "guard override for exhaustive searches");
    sub->add_flag("--json", opt.json, "emit a JSON document");
    sub->add_option("-o,--output", opt.output, "write to a file instead of stdout");
    sub->add_option("args", opt.args, "positional arguments");
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph convexity toolkit", "gconv"};
    app.require_subcommand(1);
    Options opt;
    using Handler = std::function<Outcome(Context&)>;
    const std::vector<std::tuple<const char*, const char*, Handler>> commands{
        {"gen", "generate a graph family as an edge list", cmd_gen},
        {"hull", "convex hull of --set", cmd_hull},
        {"shadow", "shadow [set|vertex|union|extended]", cmd_shadow},
        {"semispaces", "enumerate semispaces", cmd_semispaces},
        {"halfspaces", "enumerate complementary halfspace pairs", cmd_halfspaces},
        {"check", "check s2|s3|s4|tc|qc|meshed|pc|partial-cube|clique-shadows|peano|sandglass", cmd_check},
        {"separate", "separate --set from --set-b by complementary halfspaces", cmd_separate},
        {"numbers", "Helly, Radon and Caratheodory numbers", cmd_numbers},
    };
    std::map<const CLI::App*, Handler> handlers;
    for (const auto& [name, help, handler] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, opt);
        handlers[sub] = handler;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    const auto* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    try {
        Context ctx(opt, in);
        Outcome o = handlers.at(chosen)(ctx);
        std::ofstream file;
        if (!opt.output.empty()) {
            file.open(opt.output);
            if (!file) throw UsageError("cannot write '" + opt.output + "'");
        }
        std::ostream& sink = opt.output.empty() ? out : file;
        if (opt.json) sink << io::document(command, std::move(o.records)).dump(2) << '\n';
        else if (!o.raw.empty()) sink << o.raw;
        else io::write_records(sink, o.records);
        return o.code;
    } catch (const UsageError& e) {
        err << "gconv " << command << ": " << e.what() << '\n';
        return usage;
    } catch (const Error& e) {
        err << "gconv " << command << ": " << e.what() << '\n';
        return e.code() == ErrorCode::too_large ? guard : usage;
    }
}

}  // namespace gconv::cli
