#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jnum/mat2.hpp"
#include "jnum/poly.hpp"

namespace jnum {

class QuadImagField {
public:
    explicit QuadImagField(int d);  // d squarefree, positive
    int d() const { return d_; }
    bool half_integral() const { return d_ % 4 == 3; }
    std::string ring_label() const;
    const std::vector<Cx>& units() const { return units_; }

private:
    int d_;
    std::vector<Cx> units_;
};

bool is_squarefree(long long n);
long long squarefree_part(long long n);

std::vector<Cx> trace_field_generators(const Mat2& x, const Mat2& y);
// [tr^2 x, tr^2 y, tr x tr y tr xy], or [tr^2 x, tr[x,y]] when tr y = 0.
// x and y are swapped if tr x = 0.
std::vector<Cx> invariant_trace_field_generators(const Mat2& x, const Mat2& y);

inline constexpr long long kDefaultCoeffBound = 1000000;

// d for Q(x) = Q(sqrt(-d)) when x is a non-real root of a monic integer
// quadratic with coefficients bounded by coeff_bound.
std::optional<int> recognize_quad_imaginary(Cx x, long long coeff_bound = kDefaultCoeffBound);

// All generators integral (real ones) or quadratic imaginary with one common d.
// Returns absent when some generator is unrecognized or the d's disagree,
// or when every generator is real.
std::optional<int> recognize_invariant_field(const std::vector<Cx>& gens,
                                             long long coeff_bound = kDefaultCoeffBound);

bool is_algebraic_unit(const IntPoly& p);

bool unit_multiple_check(Cx u, Cx v, const QuadImagField& field);

Cx delta_discriminant(const Mat2& x, const Mat2& y);
// Same quantity with tr[x,y] rebuilt from tr x, tr y, tr xy.
Cx delta_via_trace_relation(const Mat2& x, const Mat2& y);

bool hilbert_real_ramified(const std::vector<double>& a_embeds, const std::vector<double>& b_embeds);

inline const std::vector<int> kEllipticOrders = {7, 8, 9, 10, 11, 12, 14, 16, 18, 24, 30};

// k in 2..n/2 with gcd(k,n) = 1: the non-identity real embeddings of Q(cos 2pi/n)
std::vector<int> nonidentity_embeddings(int n);

struct EllipticCandidate {
    int n = 7;
    double tr2B = 0;
    // one value per non-identity embedding k, or two (one per real place above it)
    std::vector<double> tr2B_conjugates;
    std::optional<double> trAB_commutator;  // checked against 2cos(2pi/n)+1 if supplied
    bool trAB_integral = true;
    bool trB_integral = true;
};

enum class CondStatus { pass, fail, unchecked };
const char* to_string(CondStatus s);

struct ConditionReport {
    struct Item {
        CondStatus status = CondStatus::unchecked;
        std::string detail;
    };
    Item cond[6];
    bool overall() const;
};

ConditionReport elliptic_type_check(const EllipticCandidate& cand);
double elliptic_j_value(int n);

// max | |tr[X',Y'] - 2| - |tr[X,Y] - 2| | over the moves Y -> Y X^m (|m| <= 3),
// Y -> Y^-1, (X, Y) -> (X, XY)
double nielsen_modulus_deviation(const Mat2& x, const Mat2& y);

}  // namespace jnum
