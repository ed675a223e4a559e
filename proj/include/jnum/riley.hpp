#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jnum/mat2.hpp"
#include "jnum/poly.hpp"
#include "jnum/roots.hpp"

namespace jnum {

enum class BridgeKind { knot, link };
const char* to_string(BridgeKind k);

struct TwoBridge {
    int p = 0;
    int q = 0;
    BridgeKind kind = BridgeKind::knot;
    std::vector<int> eps;  // eps[i-1] = e_i, i = 1..p-1
    int input_q = 0;       // q as given; differs when an even q of a knot was mirrored to p-q

    int e(int i) const { return eps.at(i - 1); }
    std::string label() const;
};

// p >= 2, 1 <= q < p, gcd = 1. For odd p an even q is replaced by p - q
// (mirror image, same group up to complex conjugation).
TwoBridge normalize(int p, int q);

IntPoly knot_poly(const TwoBridge& tb);  // d_n

struct LinkPoly {
    IntPoly raw;         // c_n as defined, coefficients for z^1..z^n
    IntPoly normalized;  // z-valuation stripped, leading coefficient positive
};
LinkPoly link_poly(const TwoBridge& tb);

// Brute force over index subsets, p <= 13. Raw form for links.
IntPoly subset_oracle_poly(const TwoBridge& tb);
inline constexpr int kOracleMaxP = 13;

PolyMat2 poly_A();
PolyMat2 poly_B();  // [[1,0],[z,1]]
PolyMat2 word_matrix(const TwoBridge& tb);

Mat2 riley_A();
Mat2 riley_B(Cx z);

struct RootDiagnostic {
    Cx z;
    bool real = false;
    bool rejected = false;
    std::string reason;
    std::optional<double> violating_j;
};

struct GeometricRoot {
    Cx z;                      // upper half-plane representative
    bool ambiguous = false;
    bool overridden = false;   // chosen by root index
    int sample_len = 0;
    std::vector<RootDiagnostic> diagnostics;  // one per root in rs order
};

struct RootSelectOptions {
    int sample_len = 6;
    std::optional<int> root_index;
};

// Rejects real roots and roots whose (A, B(z)) admits a non-elementary pair
// with J < 1 - 1e-6 among words up to sample_len; merges conjugates.
GeometricRoot select_geometric_root(const TwoBridge& tb, const RootSet& rs,
                                    const RootSelectOptions& opt = {});

struct KnotReport {
    TwoBridge tb;
    IntPoly d;
    IntPoly min_poly;
    RootSet roots;
    GeometricRoot root;
    Mat2 W;
    JReport j;  // J(A, W)
    double abs_z = 0;
    bool z_below_4 = false;
    double waist_bound = 0;  // sqrt|z|
    double relation_residual = 0;  // |AW - WB|
};

struct LinkReport {
    TwoBridge tb;
    LinkPoly c;
    IntPoly min_poly;
    RootSet roots;
    GeometricRoot root;
    Mat2 W;
    JReport j;  // J(A, B)
    double abs_z = 0;
    bool z_below_4 = false;
    double waist_bound = 0;  // |z|
    double relation_residual = 0;  // |AW - WA|
};

KnotReport knot_jreport(const TwoBridge& tb, const RootSelectOptions& opt = {});
LinkReport link_jreport(const TwoBridge& tb, const RootSelectOptions& opt = {});

}  // namespace jnum
