#include "coordmech/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace coordmech {

Json rat_to_json(const Rat& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
        return Json(static_cast<long long>(q.get_num().get_si()));
    }
    return Json(rat_to_string(q));
}

Rat rat_from_json(const Json& value, const std::string& where) {
    if (value.is_number_integer()) {
        return make_rat(value.get<long long>());
    }
    if (value.is_string()) {
        try {
            return parse_rat(value.get<std::string>());
        } catch (const std::invalid_argument& err) {
            throw std::invalid_argument(where + ": " + err.what());
        }
    }
    if (value.is_number_float()) {
        throw std::invalid_argument(where +
                                    ": non-integer numbers are not exact; use a \"num/den\" string");
    }
    throw std::invalid_argument(where + ": expected integer or \"num/den\" string");
}

namespace {

// A job list is emitted sparsely once the dense matrix would waste most of
// its cells on forbidden entries.
bool prefer_sparse(const Instance& inst) {
    size_t cells = 0;
    for (const auto& row : inst.feasible) cells += row.size();
    const size_t dense = static_cast<size_t>(inst.num_jobs) *
                         static_cast<size_t>(inst.num_machines);
    return dense > 4096 && cells * 4 < dense;
}

}  // namespace

Json instance_to_json(const Instance& inst) {
    Json doc;
    Json weights = Json::array();
    for (const Rat& w : inst.weight) weights.push_back(rat_to_json(w));
    doc["weights"] = std::move(weights);

    Json ids = Json::array();
    for (long long id : inst.job_id) ids.push_back(id);
    doc["ids"] = std::move(ids);

    if (prefer_sparse(inst)) {
        doc["num_machines"] = inst.num_machines;
        Json rows = Json::array();
        for (const auto& row : inst.feasible) {
            Json cells = Json::array();
            for (const ProcEntry& e : row) {
                cells.push_back(Json::array({e.machine, rat_to_json(e.p)}));
            }
            rows.push_back(std::move(cells));
        }
        doc["proc_sparse"] = std::move(rows);
        return doc;
    }

    Json proc = Json::array();
    for (int i = 0; i < inst.num_machines; ++i) {
        Json row = Json::array();
        for (int j = 0; j < inst.num_jobs; ++j) {
            const ProcEntry* e = inst.entry(i, j);
            row.push_back(e == nullptr ? Json("inf") : rat_to_json(e->p));
        }
        proc.push_back(std::move(row));
    }
    doc["proc"] = std::move(proc);
    return doc;
}

Instance instance_from_json(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("instance: expected a JSON object");
    if (!doc.contains("weights") || !doc["weights"].is_array()) {
        throw std::invalid_argument("instance: missing \"weights\" array");
    }
    std::vector<Rat> weights;
    weights.reserve(doc["weights"].size());
    for (size_t j = 0; j < doc["weights"].size(); ++j) {
        weights.push_back(rat_from_json(doc["weights"][j], "weights[" + std::to_string(j) + "]"));
    }

    std::vector<long long> ids;
    if (doc.contains("ids")) {
        if (!doc["ids"].is_array()) throw std::invalid_argument("instance: \"ids\" must be an array");
        for (const auto& v : doc["ids"]) {
            if (!v.is_number_integer()) {
                throw std::invalid_argument("instance: job ids must be integers");
            }
            ids.push_back(v.get<long long>());
        }
    }

    if (doc.contains("proc_sparse")) {
        if (!doc.contains("num_machines") || !doc["num_machines"].is_number_integer()) {
            throw std::invalid_argument("instance: sparse form requires \"num_machines\"");
        }
        const int m = doc["num_machines"].get<int>();
        const auto& rows = doc["proc_sparse"];
        if (!rows.is_array() || rows.size() != weights.size()) {
            throw std::invalid_argument("instance: \"proc_sparse\" must list one entry set per job");
        }
        std::vector<std::vector<std::pair<int, Rat>>> by_job(weights.size());
        for (size_t j = 0; j < rows.size(); ++j) {
            for (const auto& cell : rows[j]) {
                if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer()) {
                    throw std::invalid_argument("instance: proc_sparse entries are [machine, rat] pairs");
                }
                by_job[j].emplace_back(cell[0].get<int>(),
                                       rat_from_json(cell[1], "proc_sparse job " + std::to_string(j)));
            }
        }
        return make_instance_sparse(std::move(weights), m, std::move(by_job), std::move(ids));
    }

    if (!doc.contains("proc") || !doc["proc"].is_array() || doc["proc"].empty()) {
        throw std::invalid_argument("instance: missing \"proc\" matrix");
    }
    const auto& proc = doc["proc"];
    ProcMatrix matrix(proc.size());
    for (size_t i = 0; i < proc.size(); ++i) {
        if (!proc[i].is_array() || proc[i].size() != weights.size()) {
            throw std::invalid_argument("instance: proc row " + std::to_string(i) +
                                        " does not match number of jobs");
        }
        matrix[i].resize(weights.size());
        for (size_t j = 0; j < weights.size(); ++j) {
            const auto& cell = proc[i][j];
            if (cell.is_string() && cell.get<std::string>() == "inf") {
                matrix[i][j] = std::nullopt;
            } else {
                matrix[i][j] = rat_from_json(cell, "proc[" + std::to_string(i) + "][" +
                                                       std::to_string(j) + "]");
            }
        }
    }
    return make_instance(std::move(weights), matrix, std::move(ids));
}

Instance load_instance(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw std::invalid_argument(std::string("instance: JSON parse failure: ") + err.what());
    }
    return instance_from_json(doc);
}

std::string serialize_instance(const Instance& inst) {
    return instance_to_json(inst).dump();
}

Json assignment_to_json(const Assignment& asg) {
    Json doc;
    doc["machine_of"] = asg.machine_of;
    return doc;
}

Assignment assignment_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("machine_of") || !doc["machine_of"].is_array()) {
        throw std::invalid_argument("assignment: expected {\"machine_of\":[int...]}");
    }
    Assignment asg;
    for (const auto& v : doc["machine_of"]) {
        if (!v.is_number_integer()) {
            throw std::invalid_argument("assignment: machine indices must be integers");
        }
        asg.machine_of.push_back(v.get<int>());
    }
    return asg;
}

Json cost_report_to_json(const CostReport& report) {
    Json doc;
    Json completion = Json::array();
    for (const Rat& c : report.completion) completion.push_back(rat_to_json(c));
    doc["completion"] = std::move(completion);
    doc["weighted_total"] = rat_to_json(report.weighted_total);
    doc["lambda"] = rat_to_json(report.lambda_term);
    return doc;
}

Json bundle_to_json(const LowerBoundBundle& bundle) {
    Json doc;
    doc["instance"] = instance_to_json(bundle.instance);
    doc["opt_assignment"] = assignment_to_json(bundle.opt_assignment);
    doc["nash_assignment"] = assignment_to_json(bundle.nash_assignment);
    doc["target_ratio"] = rat_to_json(bundle.target_ratio);
    return doc;
}

LowerBoundBundle bundle_from_json(const Json& doc) {
    LowerBoundBundle bundle;
    bundle.instance = instance_from_json(doc.at("instance"));
    bundle.opt_assignment = assignment_from_json(doc.at("opt_assignment"));
    bundle.nash_assignment = assignment_from_json(doc.at("nash_assignment"));
    bundle.target_ratio = rat_from_json(doc.at("target_ratio"), "target_ratio");
    check_feasible(bundle.instance, bundle.opt_assignment);
    check_feasible(bundle.instance, bundle.nash_assignment);
    return bundle;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Json doc;
    in >> doc;
    return doc;
}

void write_json_file(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
}

}  // namespace coordmech
