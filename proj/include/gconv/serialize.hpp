#pragma once

#include "gconv/metric.hpp"
#include "gconv/oracles.hpp"
#include "gconv/proximal.hpp"
#include "gconv/s3.hpp"
#include "gconv/separation.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string_view>

namespace gconv::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view schema_version = "1";

Json to_json(const VertexSet& s);
Json to_json(const PointedClique& pc);
Json to_json(const Verdict& v);
Json to_json(const ConditionWitness& w);
Json to_json(const SeparationResult& r);
Json to_json(const HalfspacePair& p);
Json to_json(const SemispaceRecord& r);
// One record per class, keyed on its smallest attaching vertex.
Json to_json(const SemispaceClass& c);

// {"version": "1", "command": ..., "records": [...]}
Json document(std::string_view command, Json records);

// One line per record: space-separated key=value fields, nested objects as
// dotted keys. Vertex lists are comma-joined, lists of records ';'-joined
// with ':' between a record's fields.
void write_records(std::ostream& out, const Json& records);
std::string record_line(const Json& record);

}  // namespace gconv::io
