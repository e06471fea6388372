#pragma once

#include <string>

#include "json.hpp"

#include "coordmech/instance.hpp"

namespace coordmech {

using Json = nlohmann::json;

/// Rationals on the wire are an integer (denominator 1, fits in 64 bits)
/// or a "num/den" string; "inf" marks a forbidden processing cell.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& value, const std::string& where);

/// Instance schema, dense form:
///   {"weights":[rat...], "proc":[[rat|"inf"...]...], "ids":[int...]?}
/// with proc indexed [machine][job]. Large sparse instances use
///   {"weights":[...], "num_machines":m, "proc_sparse":[[[machine,rat]...]...]}
/// with one entry list per job. load_instance accepts either form.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& doc);
Instance load_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

/// Assignment schema: {"machine_of":[int...]}, 0-based.
Json assignment_to_json(const Assignment& asg);
Assignment assignment_from_json(const Json& doc);

Json cost_report_to_json(const CostReport& report);

Json bundle_to_json(const LowerBoundBundle& bundle);
LowerBoundBundle bundle_from_json(const Json& doc);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

}  // namespace coordmech
