#include "jnum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "jnum/errors.hpp"

namespace jnum {

namespace {

bool near_integer(double v, long long& out) {
    double r = std::round(v);
    if (std::abs(v - r) > 1e-8 * std::max(1.0, std::abs(v))) return false;
    if (std::abs(r) > 9e15) return false;
    out = static_cast<long long>(r);
    return true;
}

}  // namespace

bool is_squarefree(long long n) {
    if (n <= 0) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

long long squarefree_part(long long n) {
    if (n <= 0) throw UsageError("squarefree_part: need n > 0");
    long long out = 1;
    for (long long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    return out * n;
}

QuadImagField::QuadImagField(int d) : d_(d) {
    if (!is_squarefree(d)) throw UsageError(fmt::format("QuadImagField: d = {} is not squarefree positive", d));
    if (d == 1) {
        units_ = {1, Cx(0, 1), -1, Cx(0, -1)};
    } else if (d == 3) {
        for (int k = 0; k < 6; ++k) units_.push_back(expi(kPi * k / 3.0));
    } else {
        units_ = {1, -1};
    }
}

std::string QuadImagField::ring_label() const { return fmt::format("O_{}", d_); }

std::vector<Cx> trace_field_generators(const Mat2& x, const Mat2& y) {
    return {x.trace(), y.trace(), (x * y).trace()};
}

std::vector<Cx> invariant_trace_field_generators(const Mat2& x, const Mat2& y) {
    const double eps = tol().eps_cx;
    const Mat2* a = &x;
    const Mat2* b = &y;
    if (std::abs(a->trace()) <= eps) std::swap(a, b);
    if (std::abs(a->trace()) <= eps)
        throw UnsupportedBranchError("invariant_trace_field_generators: both traces vanish");
    Cx ta = a->trace(), tb = b->trace();
    if (std::abs(tb) <= eps) return {ta * ta, commutator(*a, *b).trace()};
    return {ta * ta, tb * tb, ta * tb * (*a * *b).trace()};
}

std::optional<int> recognize_quad_imaginary(Cx x, long long coeff_bound) {
    if (coeff_bound < 1 || coeff_bound > 1000000)
        throw UsageError("recognize_quad_imaginary: coeff_bound must be in 1..1e6");
    if (std::abs(x.imag()) <= tol().eps_cx * std::max(1.0, std::abs(x))) return std::nullopt;
    long long b = 0, c = 0;
    if (!near_integer(2.0 * x.real(), b) || !near_integer(std::norm(x), c)) return std::nullopt;
    if (std::llabs(b) > coeff_bound || std::llabs(c) > coeff_bound) return std::nullopt;
    long long disc = 4 * c - b * b;
    if (disc <= 0) return std::nullopt;
    return static_cast<int>(squarefree_part(disc));
}

std::optional<int> recognize_invariant_field(const std::vector<Cx>& gens, long long coeff_bound) {
    std::optional<int> d;
    for (Cx g : gens) {
        if (std::abs(g.imag()) <= tol().eps_cx * std::max(1.0, std::abs(g))) {
            long long r = 0;
            if (!near_integer(g.real(), r)) return std::nullopt;
            continue;
        }
        auto dg = recognize_quad_imaginary(g, coeff_bound);
        if (!dg || (d && *d != *dg)) return std::nullopt;
        d = dg;
    }
    return d;
}

bool is_algebraic_unit(const IntPoly& p) {
    if (p.is_zero()) return false;
    auto unit = [](IntPoly::Coeff c) { return c == 1 || c == -1; };
    return unit(p.leading()) && unit(p.constant());
}

bool unit_multiple_check(Cx u, Cx v, const QuadImagField& field) {
    if (std::abs(v) <= tol().eps_cx) throw DegenerateInputError("unit_multiple_check: division by ~0");
    Cx r = u / v;
    for (Cx e : field.units())
        if (std::abs(r - e) <= tol().eps_cx) return true;
    return false;
}

Cx delta_discriminant(const Mat2& x, const Mat2& y) {
    Cx a2 = x.trace() * x.trace(), b2 = y.trace() * y.trace();
    Cx c = commutator(x, y).trace();
    return a2 * b2 * ((a2 - 4.0) * (b2 - 4.0) + 4.0 * (c - 2.0));
}

Cx delta_via_trace_relation(const Mat2& x, const Mat2& y) {
    Cx ta = x.trace(), tb = y.trace(), tab = (x * y).trace();
    Cx a2 = ta * ta, b2 = tb * tb;
    Cx c = a2 + b2 + tab * tab - ta * tb * tab - 2.0;
    return a2 * b2 * ((a2 - 4.0) * (b2 - 4.0) + 4.0 * (c - 2.0));
}

bool hilbert_real_ramified(const std::vector<double>& a_embeds, const std::vector<double>& b_embeds) {
    if (a_embeds.size() != b_embeds.size()) throw UsageError("hilbert_real_ramified: length mismatch");
    for (std::size_t k = 0; k < a_embeds.size(); ++k)
        if (!(a_embeds[k] < 0 && b_embeds[k] < 0)) return false;
    return true;
}

std::vector<int> nonidentity_embeddings(int n) {
    std::vector<int> ks;
    for (int k = 2; 2 * k <= n; ++k)
        if (std::gcd(k, n) == 1) ks.push_back(k);
    return ks;
}

const char* to_string(CondStatus s) {
    switch (s) {
        case CondStatus::pass: return "pass";
        case CondStatus::fail: return "fail";
        case CondStatus::unchecked: return "unchecked";
    }
    return "?";
}

bool ConditionReport::overall() const {
    for (const auto& c : cond)
        if (c.status != CondStatus::pass) return false;
    return true;
}

ConditionReport elliptic_type_check(const EllipticCandidate& cand) {
    const int n = cand.n;
    if (n < 3) throw UsageError("elliptic_type_check: n must be >= 3");
    ConditionReport r;
    auto set = [&](int i, bool ok, std::string detail) {
        r.cond[i] = {ok ? CondStatus::pass : CondStatus::fail, std::move(detail)};
    };
    const double c1 = std::cos(2 * kPi / n);

    bool listed = std::find(kEllipticOrders.begin(), kEllipticOrders.end(), n) != kEllipticOrders.end();
    set(0, listed, fmt::format("n = {}", n));

    double bound = 2.0 / (1.0 - c1);
    set(1, cand.tr2B > bound && bound > 4.0, fmt::format("tr^2 B = {:.10g}, bound {:.10g}", cand.tr2B, bound));

    double want = 2 * c1 + 1;
    if (cand.trAB_commutator)
        set(2, std::abs(*cand.trAB_commutator - want) <= 1e-9,
            fmt::format("tr[A,B] = {:.12g}, expected {:.12g}", *cand.trAB_commutator, want));
    else
        set(2, true, fmt::format("by construction: tr[A,B] = {:.12g}", want));

    auto ks = nonidentity_embeddings(n);
    const auto& conj = cand.tr2B_conjugates;
    if (conj.empty()) {
        r.cond[3] = {CondStatus::unchecked, "no conjugates of tr^2 B supplied"};
        r.cond[4] = {CondStatus::unchecked, "no conjugates of tr^2 B supplied"};
    } else {
        std::size_t per = 0;
        if (conj.size() == ks.size()) per = 1;
        else if (conj.size() == 2 * ks.size()) per = 2;
        else
            throw UsageError(fmt::format("elliptic_type_check: expected {} or {} conjugates for n = {}, got {}",
                                         ks.size(), 2 * ks.size(), n, conj.size()));
        bool ok4 = true;
        std::string d4;
        std::vector<double> a_slots, b_slots;
        for (std::size_t i = 0; i < conj.size(); ++i) {
            int k = ks[i / per];
            double ck = std::cos(2 * kPi * k / n);
            double tau = conj[i];
            double ub = 2.0 / (1.0 - ck);
            bool ok = -1 < ck && ck < 0.5 && 0 < tau && tau < ub;
            ok4 = ok4 && ok;
            d4 += fmt::format("{}k={}: tau={:.6g} in (0, {:.6g}){}", d4.empty() ? "" : "; ", k, tau, ub,
                              ok ? "" : " FAILS");
            a_slots.push_back(-1);
            b_slots.push_back(2 * ck - 1);
            a_slots.push_back(-1);
            b_slots.push_back(2 * (std::cos(4 * kPi * k / n) + ck) * tau);
        }
        set(3, ok4, d4);
        set(4, hilbert_real_ramified(a_slots, b_slots), "real-place signs only");
    }
    set(5, cand.trAB_integral && cand.trB_integral, "caller-supplied integrality flags");
    return r;
}

double elliptic_j_value(int n) {
    if (n < 3) throw UsageError("elliptic_j_value: n must be >= 3");
    double c = 2 * std::cos(2 * kPi / n);
    return std::abs(c - 2) + std::abs(c - 1);
}

double nielsen_modulus_deviation(const Mat2& x, const Mat2& y) {
    const double base = std::abs(commutator(x, y).trace() - 2.0);
    double dev = 0;
    auto check = [&](const Mat2& u, const Mat2& v) {
        dev = std::max(dev, std::abs(std::abs(commutator(u, v).trace() - 2.0) - base));
    };
    for (int m = -3; m <= 3; ++m) check(x, y * x.pow(m));
    check(x, y.inverse());
    check(x, x * y);
    return dev;
}

}  // namespace jnum
