#include "gconv/serialize.hpp"

#include <ostream>

namespace gconv::io {

Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

Json to_json(const PointedClique& pc) { return Json{{"x0", pc.x0}, {"k", to_json(pc.k)}}; }

Json to_json(const Verdict& v) {
    Json out{{"property", v.property}, {"status", to_string(v.status)}, {"holds", v.holds()}, {"method", v.method}};
    if (v.witness) {
        Json w{{"kind", v.witness->kind}, {"tuple", v.witness->tuple}};
        if (v.witness->set) w["set"] = to_json(*v.witness->set);
        if (v.witness->pattern) w["pattern"] = v.witness->pattern;
        out["witness"] = std::move(w);
    }
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

Json to_json(const ConditionWitness& w) {
    Json out{{"property", w.condition}, {"status", w.holds ? "holds" : "fails"}, {"holds", w.holds}};
    if (!w.holds) out["witness"] = Json{{"kind", "tuple"}, {"tuple", w.tuple}};
    return out;
}

Json to_json(const SeparationResult& r) {
    Json out{{"status", to_string(r.status)}};
    if (r.pair) {
        out["h1"] = to_json(r.pair->h1);
        out["h2"] = to_json(r.pair->h2);
    }
    if (!r.reason.empty()) out["reason"] = r.reason;
    return out;
}

Json to_json(const HalfspacePair& p) {
    return Json{{"kind", to_string(p.kind)}, {"h1", to_json(p.h1)}, {"h2", to_json(p.h2)}};
}

Json to_json(const SemispaceRecord& r) {
    Json gens = Json::array();
    for (const auto& pc : r.generators) gens.push_back(to_json(pc));
    return Json{{"attaching_vertex", r.semispace.attaching_vertex},
                {"members", to_json(r.semispace.members)},
                {"generator_cliques", std::move(gens)}};
}

Json to_json(const SemispaceClass& c) {
    return Json{{"attaching_vertex", c.attaching.empty() ? Json(nullptr) : Json(c.attaching.front())},
                {"members", to_json(c.members)},
                {"generator_cliques", Json::array()},
                {"attaching", c.attaching}};
}

Json document(std::string_view command, Json records) {
    return Json{{"version", schema_version}, {"command", command}, {"records", std::move(records)}};
}

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        return s.find_first_of(" \t\"") == std::string::npos ? s : Json(s).dump();
    }
    if (v.is_null()) return "-";
    return v.dump();
}

std::string flat(const Json& v) {
    if (v.is_object()) {
        std::string out;
        for (const auto& [key, inner] : v.items()) {
            if (!out.empty()) out += ':';
            out += flat(inner);
        }
        return out;
    }
    if (v.is_array()) {
        bool nested = false;
        for (const auto& inner : v) nested = nested || inner.is_structured();
        std::string out;
        for (const auto& inner : v) {
            if (!out.empty()) out += nested ? ';' : ',';
            out += flat(inner);
        }
        return out;
    }
    return scalar_text(v);
}

void append_fields(std::string& out, const std::string& prefix, const Json& record) {
    for (const auto& [key, v] : record.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (v.is_object()) {
            append_fields(out, name, v);
            continue;
        }
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += flat(v);
    }
}

}  // namespace

std::string record_line(const Json& record) {
    if (!record.is_object()) return flat(record);
    std::string out;
    append_fields(out, "", record);
    return out;
}

void write_records(std::ostream& out, const Json& records) {
    for (const auto& r : records) out << record_line(r) << '\n';
}

}  // namespace gconv::io
