#include "jnum/tolerance.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "jnum/errors.hpp"

namespace jnum {

namespace {

Tolerances g_tol;

double parse_double(std::string_view s) {
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size() || !(v > 0.0) || v >= 1.0)
        throw UsageError("bad tolerance value '" + buf + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

const Tolerances& tol() { return g_tol; }

void set_tolerances(const Tolerances& t) { g_tol = t; }

Tolerances parse_tolerances(std::string_view text, Tolerances base) {
    text = trim(text);
    if (text.empty()) throw UsageError("empty tolerance string");
    if (text.find('=') == std::string_view::npos) {
        double v = parse_double(text);
        base.eps_cx = base.eps_mat = base.eps_j = base.eps_det = base.eps_fix = v;
        return base;
    }
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw UsageError("expected key=value in tolerance string");
        auto key = trim(item.substr(0, eq));
        auto val = trim(item.substr(eq + 1));
        if (key == "order_cap") {
            int cap = 0;
            auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), cap);
            if (ec != std::errc{} || p != val.data() + val.size() || cap < 2)
                throw UsageError("bad order_cap");
            base.order_cap = cap;
            continue;
        }
        double v = parse_double(val);
        if (key == "eps_cx") base.eps_cx = v;
        else if (key == "eps_mat") base.eps_mat = v;
        else if (key == "eps_j") base.eps_j = v;
        else if (key == "eps_det") base.eps_det = v;
        else if (key == "eps_fix") base.eps_fix = v;
        else throw UsageError("unknown tolerance key '" + std::string(key) + "'");
    }
    return base;
}

bool apply_env_tolerances() {
    const char* env = std::getenv("JNUM_TOL");
    if (!env) return false;
    set_tolerances(parse_tolerances(env, tol()));
    return true;
}

}  // namespace jnum
