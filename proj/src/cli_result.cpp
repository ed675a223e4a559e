#include "jnum/cli_result.hpp"

#include "jnum/errors.hpp"

namespace jnum {

using json = nlohmann::ordered_json;

std::string to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::violation: return "violation";
        case Status::error: return "error";
    }
    return "error";
}

Status status_from_string(const std::string& s) {
    if (s == "ok") return Status::ok;
    if (s == "violation") return Status::violation;
    if (s == "error") return Status::error;
    throw UsageError("unknown status '" + s + "'");
}

int exit_code(Status s) { return s == Status::ok ? 0 : 1; }

json tolerances_json(const Tolerances& t) {
    return {{"eps_cx", t.eps_cx}, {"eps_mat", t.eps_mat}, {"eps_j", t.eps_j},
            {"eps_det", t.eps_det}, {"eps_fix", t.eps_fix}, {"order_cap", t.order_cap}};
}

Tolerances tolerances_from_json(const json& j, Tolerances base) {
    if (!j.is_object()) throw UsageError("tolerances must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& k = it.key();
        if (k == "order_cap") {
            if (!it->is_number_integer() || it->get<int>() < 2) throw UsageError("bad order_cap");
            base.order_cap = it->get<int>();
            continue;
        }
        if (!it->is_number()) throw UsageError("tolerance '" + k + "' must be a number");
        double v = it->get<double>();
        if (!(v > 0 && v < 1)) throw UsageError("tolerance '" + k + "' must lie in (0, 1)");
        if (k == "eps_cx") base.eps_cx = v;
        else if (k == "eps_mat") base.eps_mat = v;
        else if (k == "eps_j") base.eps_j = v;
        else if (k == "eps_det") base.eps_det = v;
        else if (k == "eps_fix") base.eps_fix = v;
        else throw UsageError("unknown tolerance key '" + k + "'");
    }
    return base;
}

json cx_json(Cx z) { return json::array({z.real(), z.imag()}); }

Cx cx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw UsageError("complex value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

void to_json(json& j, const CliResult& r) {
    j = json{{"command", r.command},
             {"inputs", r.inputs},
             {"results", r.results},
             {"tolerances", tolerances_json(r.tolerances)},
             {"status", to_string(r.status)}};
    if (!r.message.empty()) j["message"] = r.message;
}

void from_json(const json& j, CliResult& r) {
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    r.tolerances = tolerances_from_json(j.at("tolerances"));
    r.status = status_from_string(j.at("status").get<std::string>());
    r.message = j.value("message", std::string{});
}

}  // namespace jnum
