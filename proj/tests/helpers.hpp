#pragma once

#include <cmath>
#include <random>

#include "jnum/mat2.hpp"

namespace testing {

using jnum::Cx;
using jnum::Mat2;

inline const Mat2 A(1, 1, 0, 1);
inline const Mat2 S(0, -1, 1, 0);
inline const Cx w3(0.5, std::sqrt(3.0) / 2);
inline const Mat2 fig8B(1, 0, w3, 1);

// random SL2 element with entries bounded by roughly `scale`
inline Mat2 random_sl2(std::mt19937_64& rng, double scale = 10) {
    std::uniform_real_distribution<double> u(-scale, scale);
    for (;;) {
        Cx a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
        if (std::abs(a) < 0.5) continue;
        Cx d = (1.0 + b * c) / a;
        if (std::abs(d) > scale) continue;
        return Mat2(a, b, c, d);
    }
}

}  // namespace testing
