#pragma once

#include <string>
#include <string_view>

namespace jnum {

struct Tolerances {
    double eps_cx = 1e-9;
    double eps_mat = 1e-9;
    double eps_j = 1e-9;
    double eps_det = 1e-9;
    double eps_fix = 1e-6;
    int order_cap = 256;
};

// Process-wide tolerances. Set once at startup (CLI flags, JNUM_TOL, config
// file) before any computation; everything else only reads them.
const Tolerances& tol();
void set_tolerances(const Tolerances& t);

// "1e-8" sets every epsilon; "eps_cx=1e-8,eps_fix=1e-5" sets named ones.
Tolerances parse_tolerances(std::string_view text, Tolerances base = {});

// Applies JNUM_TOL if present. Returns false if the variable was unset.
bool apply_env_tolerances();

}  // namespace jnum
