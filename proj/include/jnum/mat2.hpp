#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "jnum/tolerance.hpp"

namespace jnum {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline Cx expi(double t) { return {std::cos(t), std::sin(t)}; }
inline bool approx(Cx a, Cx b, double eps) { return std::abs(a - b) <= eps; }
inline bool approx(Cx a, Cx b) { return approx(a, b, tol().eps_cx); }

// Throws NumericRangeError on NaN/inf.
Cx finite_or_throw(Cx z, const char* where);
std::string cx_str(Cx z, int prec = 10);

// SL(2,C) lift. Constructors check |det - 1|; products only check finiteness
// and a relative determinant drift bound.
class Mat2 {
public:
    Mat2() : a_(1), b_(0), c_(0), d_(1) {}
    Mat2(Cx a, Cx b, Cx c, Cx d);

    // Divides by sqrt(det); rejects det ~ 0.
    static Mat2 normalized(Cx a, Cx b, Cx c, Cx d);
    static Mat2 identity() { return {}; }

    Cx a() const { return a_; }
    Cx b() const { return b_; }
    Cx c() const { return c_; }
    Cx d() const { return d_; }
    Cx trace() const { return a_ + d_; }
    Cx det() const { return a_ * d_ - b_ * c_; }

    Mat2 inverse() const { return raw(d_, -b_, -c_, a_); }
    Mat2 operator-() const { return raw(-a_, -b_, -c_, -d_); }
    Mat2 operator*(const Mat2& o) const;
    Mat2& operator*=(const Mat2& o) { return *this = *this * o; }
    Mat2 pow(int e) const;

    double norm_inf() const;
    // max-entry distance, not projective
    double dist(const Mat2& o) const;

    std::string str(int prec = 10) const;

private:
    static Mat2 raw(Cx a, Cx b, Cx c, Cx d) {
        Mat2 m;
        m.a_ = a; m.b_ = b; m.c_ = c; m.d_ = d;
        return m;
    }
    Cx a_, b_, c_, d_;
};

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) { return x * y; }

// min(|M-N|, |M+N|) in the max-entry norm
double proj_dist(const Mat2& m, const Mat2& n);
inline bool proj_equal(const Mat2& m, const Mat2& n, double eps) { return proj_dist(m, n) <= eps; }
inline bool proj_equal(const Mat2& m, const Mat2& n) { return proj_equal(m, n, tol().eps_mat); }
inline bool is_pm_identity(const Mat2& m) { return proj_equal(m, Mat2::identity()); }

Mat2 commutator(const Mat2& x, const Mat2& y);

enum class MobiusKind { identity, parabolic, elliptic, hyperbolic, loxodromic };
const char* to_string(MobiusKind k);

struct MobiusClass {
    MobiusKind kind;
    std::optional<int> rotation_order;
    Cx trace;
};

MobiusClass classify(const Mat2& m);

// Loxodromic or hyperbolic, with a magnitude-aware guard against parabolics
// whose trace has drifted off +-2 in long products.
bool is_loxodromic_like(const Mat2& m);

struct JReport {
    double value = 0;
    Mat2 x, y;
    MobiusClass kind_x{MobiusKind::identity, {}, {}}, kind_y{MobiusKind::identity, {}, {}};
    Cx commutator_trace;
};

JReport jorgensen_pair(const Mat2& x, const Mat2& y);
double jorgensen_value(const Mat2& x, const Mat2& y);
bool jorgensen_inequality_holds(const Mat2& x, const Mat2& y);

struct SpherePoint {
    bool infinite = false;
    Cx z;
};

double chordal_dist(const SpherePoint& p, const SpherePoint& q);
std::vector<SpherePoint> fixed_points(const Mat2& m);

// Heuristic: disjoint fixed sets and tr[x,y] != 2. Not a full classifier.
bool is_nonelementary(const Mat2& x, const Mat2& y);
bool fixed_sets_disjoint(const std::vector<SpherePoint>& p, const std::vector<SpherePoint>& q);

}  // namespace jnum
