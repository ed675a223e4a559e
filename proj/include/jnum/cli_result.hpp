#pragma once

#include <string>

#include <json.hpp>

#include "jnum/mat2.hpp"
#include "jnum/tolerance.hpp"

namespace jnum {

enum class Status { ok, violation, error };
std::string to_string(Status s);
Status status_from_string(const std::string& s);
int exit_code(Status s);

struct CliResult {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    Tolerances tolerances;
    Status status = Status::ok;
    std::string message;
};

void to_json(nlohmann::ordered_json& j, const CliResult& r);
void from_json(const nlohmann::ordered_json& j, CliResult& r);
nlohmann::ordered_json tolerances_json(const Tolerances& t);
Tolerances tolerances_from_json(const nlohmann::ordered_json& j, Tolerances base = {});

nlohmann::ordered_json cx_json(Cx z);  // [re, im]
Cx cx_from_json(const nlohmann::ordered_json& j);

}  // namespace jnum
