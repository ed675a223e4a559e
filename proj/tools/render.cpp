#include "render.hpp"

#include <algorithm>
#include <vector>

#include <fmt/core.h>

using json = nlohmann::ordered_json;

namespace {

bool is_cx(const json& v) { return v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(); }

std::string scalar(const json& v) {
    if (v.is_null()) return "-";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return fmt::format("{:.10g}", v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    if (is_cx(v)) {
        double re = v[0].get<double>(), im = v[1].get<double>();
        return fmt::format("{:.10g}{}{:.10g}i", re, im < 0 ? "-" : "+", std::abs(im));
    }
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
        return s + "]";
    }
    return v.dump();
}

bool flat(const json& rec) {
    if (!rec.is_object()) return false;
    for (auto& [k, v] : rec.items())
        if (v.is_object() || (v.is_array() && !is_cx(v))) return false;
    return true;
}

std::vector<std::string> columns(const json& results) {
    std::vector<std::string> cols;
    for (const auto& rec : results)
        for (auto& [k, v] : rec.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    return cols;
}

void print_tree(const json& v, int indent) {
    std::string pad(indent, ' ');
    for (auto& [k, x] : v.items()) {
        if (x.is_object()) {
            fmt::print("{}{}:\n", pad, k);
            print_tree(x, indent + 2);
        } else if (x.is_array() && !x.empty() && x[0].is_object()) {
            fmt::print("{}{}:\n", pad, k);
            for (const auto& e : x) {
                std::string line;
                for (auto& [kk, vv] : e.items()) line += fmt::format("{}{}={}", line.empty() ? "" : "  ", kk, scalar(vv));
                fmt::print("{}  - {}\n", pad, line);
            }
        } else {
            fmt::print("{}{}: {}\n", pad, k, scalar(x));
        }
    }
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : scalar(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void print_table(const std::vector<json>& recs) {
    json arr = recs;
    auto cols = columns(arr);
    std::vector<std::size_t> width(cols.size());
    std::vector<std::vector<std::string>> rows;
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto& rec : recs) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            row.push_back(rec.contains(cols[c]) ? scalar(rec[cols[c]]) : "");
            width[c] = std::max(width[c], row.back().size());
        }
        rows.push_back(std::move(row));
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c)
            s += fmt::format("{:<{}}{}", cells[c], width[c], c + 1 < cells.size() ? "  " : "");
        while (!s.empty() && s.back() == ' ') s.pop_back();
        fmt::print("{}\n", s);
    };
    line(cols);
    for (const auto& row : rows) line(row);
}

std::vector<std::string> keys(const json& rec) {
    std::vector<std::string> k;
    for (auto& [key, v] : rec.items()) k.push_back(key);
    return k;
}

}  // namespace

void print_human(const jnum::CliResult& r) {
    std::string inputs;
    for (auto& [k, v] : r.inputs.items()) inputs += fmt::format(" {}={}", k, scalar(v));
    fmt::print("{}{}\n", r.command, inputs);
    // consecutive records with the same keys form one table
    std::size_t i = 0;
    bool first = true;
    while (i < r.results.size()) {
        std::size_t j = i + 1;
        while (j < r.results.size() && keys(r.results[j]) == keys(r.results[i])) ++j;
        std::vector<json> run(r.results.begin() + i, r.results.begin() + j);
        if (!first) fmt::print("\n");
        first = false;
        if (run.size() > 1 && std::all_of(run.begin(), run.end(), flat)) print_table(run);
        else
            for (const auto& rec : run) print_tree(rec, 2);
        i = j;
    }
    if (!r.message.empty()) fmt::print("{}\n", r.message);
    fmt::print("status: {}\n", jnum::to_string(r.status));
}

void print_csv(const jnum::CliResult& r) {
    auto cols = columns(r.results);
    std::string head;
    for (std::size_t c = 0; c < cols.size(); ++c) head += (c ? "," : "") + cols[c];
    fmt::print("{}\n", head);
    for (const auto& rec : r.results) {
        std::string row;
        for (std::size_t c = 0; c < cols.size(); ++c)
            row += (c ? "," : "") + (rec.contains(cols[c]) ? csv_cell(rec[cols[c]]) : std::string());
        fmt::print("{}\n", row);
    }
}
