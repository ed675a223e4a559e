#pragma once

#include <vector>

#include "jnum/poly.hpp"

namespace jnum {

struct Root {
    Cx z;
    double error_bound = 0;  // Newton-step estimate
};

struct RootSet {
    std::vector<Root> roots;  // conjugate pairs adjacent, Im >= 0 first
    IntPoly source;

    double max_residual() const;
    std::vector<Cx> values() const;
};

// Aberth iteration on the monic-normalized polynomial. Zero roots are split
// off exactly. Throws NumericFailureError (with partial roots) if the
// residual bound 1e-9*(1+max|coeff|) is not met after 500 sweeps.
RootSet solve_roots(const IntPoly& p);

// Smallest-degree integer factor of p vanishing at `root` (primitive,
// positive leading coefficient).
IntPoly minimal_polynomial(const IntPoly& p, Cx root);

// Factorization into irreducible integer factors (each primitive with
// positive leading coefficient), together with the leftover integer content
// carrying the sign.
struct Factorization {
    IntPoly::Coeff unit = 1;
    std::vector<IntPoly> factors;
};
Factorization factor_over_z(const IntPoly& p);

}  // namespace jnum
