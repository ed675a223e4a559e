#include "jnum/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "jnum/errors.hpp"

namespace jnum {

namespace {

bool finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double det_scale(Cx a, Cx b, Cx c, Cx d) {
    return std::max(1.0, std::abs(a * d) + std::abs(b * c));
}

// trace tolerance grows with entry size: roundoff in a*d is ~u*|M|^2
double trace_eps(const Mat2& m) {
    double n = m.norm_inf();
    return std::max(tol().eps_cx, 4e-15 * n * n);
}

}  // namespace

Cx finite_or_throw(Cx z, const char* where) {
    if (!finite(z)) throw NumericRangeError(std::string("non-finite value in ") + where);
    return z;
}

std::string cx_str(Cx z, int prec) {
    double re = z.real(), im = z.imag();
    if (std::abs(re) < 0.5 * std::pow(10.0, -prec)) re = 0;
    if (std::abs(im) < 0.5 * std::pow(10.0, -prec)) im = 0;
    if (im == 0) return fmt::format("{:.{}g}", re, prec);
    if (re == 0) return fmt::format("{:.{}g}i", im, prec);
    return fmt::format("{:.{}g}{}{:.{}g}i", re, prec, im < 0 ? "-" : "+", std::abs(im), prec);
}

Mat2::Mat2(Cx a, Cx b, Cx c, Cx d) : a_(a), b_(b), c_(c), d_(d) {
    for (Cx z : {a, b, c, d}) finite_or_throw(z, "Mat2");
    if (std::abs(det() - 1.0) > tol().eps_det * det_scale(a, b, c, d))
        throw NumericRangeError("Mat2: determinant " + cx_str(det()) + " is not 1");
}

Mat2 Mat2::normalized(Cx a, Cx b, Cx c, Cx d) {
    for (Cx z : {a, b, c, d}) finite_or_throw(z, "Mat2::normalized");
    Cx det = a * d - b * c;
    if (std::abs(det) <= tol().eps_det * det_scale(a, b, c, d))
        throw DegenerateInputError("Mat2::normalized: singular matrix");
    Cx s = 1.0 / std::sqrt(det);
    return Mat2(a * s, b * s, c * s, d * s);
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r = raw(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                 c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
    if (!finite(r.a_) || !finite(r.b_) || !finite(r.c_) || !finite(r.d_))
        throw NumericRangeError("mat_mul: overflow");
    Cx ad = r.a_ * r.d_, bc = r.b_ * r.c_;
    if (std::abs(ad - bc - 1.0) > 1e-6 * std::max(1.0, std::abs(ad) + std::abs(bc)))
        throw NumericRangeError("mat_mul: determinant drift");
    return r;
}

Mat2 Mat2::pow(int e) const {
    Mat2 base = e < 0 ? inverse() : *this;
    Mat2 r;
    for (int k = std::abs(e); k > 0; --k) r = r * base;
    return r;
}

double Mat2::norm_inf() const {
    return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
}

double Mat2::dist(const Mat2& o) const {
    return std::max({std::abs(a_ - o.a_), std::abs(b_ - o.b_), std::abs(c_ - o.c_),
                     std::abs(d_ - o.d_)});
}

std::string Mat2::str(int prec) const {
    return fmt::format("[[{}, {}], [{}, {}]]", cx_str(a_, prec), cx_str(b_, prec),
                       cx_str(c_, prec), cx_str(d_, prec));
}

double proj_dist(const Mat2& m, const Mat2& n) { return std::min(m.dist(n), m.dist(-n)); }

Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y * x.inverse() * y.inverse(); }

const char* to_string(MobiusKind k) {
    switch (k) {
        case MobiusKind::identity: return "identity";
        case MobiusKind::parabolic: return "parabolic";
        case MobiusKind::elliptic: return "elliptic";
        case MobiusKind::hyperbolic: return "hyperbolic";
        case MobiusKind::loxodromic: return "loxodromic";
    }
    return "?";
}

MobiusClass classify(const Mat2& m) {
    Cx t = m.trace();
    if (is_pm_identity(m)) return {MobiusKind::identity, {}, t};
    double eps = trace_eps(m);
    if (std::abs(t - 2.0) <= eps || std::abs(t + 2.0) <= eps) return {MobiusKind::parabolic, {}, t};
    if (std::abs(t.imag()) > eps) return {MobiusKind::loxodromic, {}, t};
    double r = std::abs(t.real());
    if (r > 2.0) return {MobiusKind::hyperbolic, {}, t};
    MobiusClass out{MobiusKind::elliptic, {}, t};
    double phi = std::acos(std::min(1.0, r / 2.0));
    for (int n = 2; n <= tol().order_cap; ++n) {
        int k = static_cast<int>(std::lround(n * phi / kPi));
        if (k < 1 || std::gcd(k, n) != 1) continue;
        if (std::abs(2.0 * std::cos(kPi * k / n) - r) <= eps) {
            out.rotation_order = n;
            break;
        }
    }
    return out;
}

bool is_loxodromic_like(const Mat2& m) {
    Cx t = m.trace();
    double n = m.norm_inf();
    if (std::abs(t * t - 4.0) <= std::max(tol().eps_cx, 1e-10 * std::max(1.0, n * n))) return false;
    auto k = classify(m).kind;
    return k == MobiusKind::loxodromic || k == MobiusKind::hyperbolic;
}

double jorgensen_value(const Mat2& x, const Mat2& y) {
    Cx tx = x.trace();
    Cx tc = commutator(x, y).trace();
    return std::abs(tx * tx - 4.0) + std::abs(tc - 2.0);
}

JReport jorgensen_pair(const Mat2& x, const Mat2& y) {
    JReport r;
    r.x = x;
    r.y = y;
    r.kind_x = classify(x);
    r.kind_y = classify(y);
    r.commutator_trace = commutator(x, y).trace();
    Cx tx = x.trace();
    r.value = std::abs(tx * tx - 4.0) + std::abs(r.commutator_trace - 2.0);
    return r;
}

bool jorgensen_inequality_holds(const Mat2& x, const Mat2& y) {
    return jorgensen_value(x, y) >= 1.0 - tol().eps_j;
}

double chordal_dist(const SpherePoint& p, const SpherePoint& q) {
    if (p.infinite && q.infinite) return 0.0;
    if (p.infinite) return 2.0 / std::sqrt(1.0 + std::norm(q.z));
    if (q.infinite) return 2.0 / std::sqrt(1.0 + std::norm(p.z));
    return 2.0 * std::abs(p.z - q.z) / std::sqrt((1.0 + std::norm(p.z)) * (1.0 + std::norm(q.z)));
}

std::vector<SpherePoint> fixed_points(const Mat2& m) {
    if (is_pm_identity(m)) throw DegenerateInputError("fixed_points: matrix is +-I");
    Cx a = m.a(), b = m.b(), c = m.c(), d = m.d();
    double scale = std::max(1.0, m.norm_inf());
    double eps = tol().eps_cx * scale;
    if (std::abs(c) <= eps) {
        std::vector<SpherePoint> out{{true, {}}};
        if (std::abs(d - a) > eps) out.push_back({false, b / (d - a)});
        return out;
    }
    Cx disc = (a - d) * (a - d) + 4.0 * b * c;
    if (std::abs(disc) <= eps * scale) return {{false, (a - d) / (2.0 * c)}};
    Cx s = std::sqrt(disc);
    Cx q = (a - d) + s;
    if (std::abs((a - d) - s) > std::abs(q)) q = (a - d) - s;
    return {{false, q / (2.0 * c)}, {false, -2.0 * b / q}};
}

bool fixed_sets_disjoint(const std::vector<SpherePoint>& p, const std::vector<SpherePoint>& q) {
    for (const auto& u : p)
        for (const auto& v : q)
            if (chordal_dist(u, v) <= tol().eps_fix) return false;
    return true;
}

bool is_nonelementary(const Mat2& x, const Mat2& y) {
    if (is_pm_identity(x) || is_pm_identity(y)) return false;
    if (!fixed_sets_disjoint(fixed_points(x), fixed_points(y))) return false;
    // two involutions generate a dihedral group
    if (std::abs(x.trace()) <= tol().eps_cx && std::abs(y.trace()) <= tol().eps_cx) return false;
    return std::abs(commutator(x, y).trace() - 2.0) > tol().eps_cx;
}

}  // namespace jnum
