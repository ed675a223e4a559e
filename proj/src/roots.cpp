#include "jnum/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jnum/errors.hpp"

namespace jnum {

namespace {

constexpr int kMaxSweeps = 500;
constexpr int kMaxFactorDegree = 24;

double residual_scale(const IntPoly& p) { return 1.0 + static_cast<double>(p.max_abs_coeff()); }

std::pair<Cx, Cx> eval_with_derivative(const std::vector<Cx>& c, Cx z) {
    Cx v = 0, dv = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dv = dv * z + v;
        v = v * z + *it;
    }
    return {v, dv};
}

std::vector<Cx> aberth(const std::vector<Cx>& monic, bool& converged) {
    const int n = static_cast<int>(monic.size()) - 1;
    double radius = 1.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, 1.0 + std::abs(monic[k]));
    std::vector<Cx> z(n);
    for (int k = 0; k < n; ++k) z[k] = radius * expi(2.0 * kPi * k / n + 0.4);
    converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (int k = 0; k < n; ++k) {
            auto [v, dv] = eval_with_derivative(monic, z[k]);
            if (v == Cx(0)) continue;
            Cx s = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) s += 1.0 / (z[k] - z[j]);
            Cx ratio = dv == Cx(0) ? Cx(1e-3) : v / dv;
            Cx corr = ratio / (1.0 - ratio * s);
            if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = ratio;
            z[k] -= corr;
            if (std::abs(corr) > 1e-15 * (1.0 + std::abs(z[k]))) converged = false;
        }
    }
    return z;
}

void polish(const std::vector<Cx>& c, Cx& z) {
    for (int it = 0; it < 3; ++it) {
        auto [v, dv] = eval_with_derivative(c, z);
        if (dv == Cx(0)) return;
        Cx nz = z - v / dv;
        if (std::abs(eval_with_derivative(c, nz).first) >= std::abs(v)) return;
        z = nz;
    }
}

// Real roots snapped to the axis; complex roots paired with their conjugates.
void enforce_conjugates(std::vector<Cx>& z) {
    std::vector<Cx> real, upper, lower;
    for (Cx r : z) {
        if (std::abs(r.imag()) <= 1e-8 * std::max(1.0, std::abs(r))) real.push_back({r.real(), 0});
        else (r.imag() > 0 ? upper : lower).push_back(r);
    }
    if (upper.size() != lower.size()) return;
    std::vector<bool> used(lower.size(), false);
    std::vector<Cx> paired;
    for (Cx u : upper) {
        std::size_t best = lower.size();
        for (std::size_t j = 0; j < lower.size(); ++j)
            if (!used[j] && (best == lower.size() ||
                             std::abs(lower[j] - std::conj(u)) < std::abs(lower[best] - std::conj(u))))
                best = j;
        used[best] = true;
        paired.push_back(0.5 * (u + std::conj(lower[best])));
    }
    std::sort(real.begin(), real.end(), [](Cx a, Cx b) { return a.real() < b.real(); });
    std::sort(paired.begin(), paired.end(), [](Cx a, Cx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    z = real;
    for (Cx u : paired) {
        z.push_back(u);
        z.push_back(std::conj(u));
    }
}

std::vector<IntPoly::Coeff> divisors(IntPoly::Coeff n) {
    n = n < 0 ? -n : n;
    std::vector<IntPoly::Coeff> d;
    for (IntPoly::Coeff k = 1; k * k <= n; ++k)
        if (n % k == 0) {
            d.push_back(k);
            if (k != n / k) d.push_back(n / k);
        }
    std::sort(d.begin(), d.end());
    return d;
}

IntPoly primitive_positive(const IntPoly& p) {
    IntPoly::Coeff g = 0;
    for (auto c : p.coeffs()) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) return p;
    std::vector<IntPoly::Coeff> v;
    for (auto c : p.coeffs()) v.push_back(c / g);
    if (v.back() < 0)
        for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

// integer polynomial lead * prod (z - r), if it rounds cleanly
std::optional<IntPoly> integer_product(const std::vector<Cx>& roots, IntPoly::Coeff lead) {
    std::vector<Cx> c{Cx(static_cast<double>(lead))};
    for (Cx r : roots) {
        std::vector<Cx> n(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            n[k + 1] += c[k];
            n[k] -= r * c[k];
        }
        c = std::move(n);
    }
    std::vector<IntPoly::Coeff> out;
    for (Cx x : c) {
        double mag = std::max(1.0, std::abs(x));
        if (std::abs(x.imag()) > 1e-6 * mag) return std::nullopt;
        double rr = std::round(x.real());
        if (std::abs(x.real() - rr) > 1e-6 * mag || std::abs(rr) > 9e15) return std::nullopt;
        out.push_back(static_cast<IntPoly::Coeff>(rr));
    }
    return IntPoly(std::move(out));
}

}  // namespace

double RootSet::max_residual() const {
    double m = 0;
    for (const auto& r : roots) m = std::max(m, std::abs(source.eval(r.z)));
    return m;
}

std::vector<Cx> RootSet::values() const {
    std::vector<Cx> v;
    for (const auto& r : roots) v.push_back(r.z);
    return v;
}

RootSet solve_roots(const IntPoly& p) {
    if (p.degree() < 1) throw UsageError("solve_roots: degree must be >= 1");
    RootSet rs;
    rs.source = p;
    int v = p.valuation();
    IntPoly q = p.shift_down(v);
    std::vector<Cx> z;
    std::vector<Cx> cq;
    for (auto c : q.coeffs()) cq.push_back(static_cast<double>(c));
    if (q.degree() == 1) {
        z.push_back(-cq[0] / cq[1]);
    } else if (q.degree() > 1) {
        std::vector<Cx> monic = cq;
        for (auto& c : monic) c /= cq.back();
        bool converged = false;
        z = aberth(monic, converged);
        for (auto& r : z) polish(cq, r);
        enforce_conjugates(z);
    }
    const double bound = 1e-9 * residual_scale(p);
    std::vector<Cx> all(v, Cx(0));
    all.insert(all.end(), z.begin(), z.end());
    for (Cx r : all) {
        auto [val, dval] = eval_with_derivative(cq, r);
        double err = dval == Cx(0) ? 0.0 : q.degree() * std::abs(val / dval);
        rs.roots.push_back({r, std::abs(r) == 0 ? 0.0 : err});
    }
    for (Cx r : all)
        if (!(std::abs(p.eval(r)) <= bound))
            throw NumericFailureError("solve_roots: residual bound not met for " + p.text(), all);
    return rs;
}

IntPoly minimal_polynomial(const IntPoly& p, Cx root) {
    if (p.degree() < 1) throw UsageError("minimal_polynomial: degree must be >= 1");
    if (std::abs(p.eval(root)) > 1e-6 * residual_scale(p))
        throw UsageError("minimal_polynomial: value is not a root");
    if (p.degree() > kMaxFactorDegree) throw SizeLimitError("minimal_polynomial: degree too large");
    auto rs = solve_roots(p).values();
    std::size_t anchor = 0;
    for (std::size_t k = 1; k < rs.size(); ++k)
        if (std::abs(rs[k] - root) < std::abs(rs[anchor] - root)) anchor = k;
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < rs.size(); ++k)
        if (k != anchor) others.push_back(k);
    const auto leads = divisors(p.leading());
    const int m = static_cast<int>(others.size());
    for (int size = 0; size <= m; ++size) {
        // subsets of `others` of the given size, lexicographic
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<Cx> sel{rs[anchor]};
            for (int i : idx) sel.push_back(rs[others[i]]);
            for (auto lead : leads) {
                auto cand = integer_product(sel, lead);
                if (cand && p.divide_exact(*cand)) return primitive_positive(*cand);
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == m - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return primitive_positive(p);
}

Factorization factor_over_z(const IntPoly& p) {
    if (p.is_zero()) throw UsageError("factor_over_z: zero polynomial");
    Factorization f;
    IntPoly rest = p;
    while (rest.degree() >= 1) {
        Cx r = solve_roots(rest).roots.front().z;
        IntPoly m = minimal_polynomial(rest, r);
        f.factors.push_back(m);
        rest = *rest.divide_exact(m);
    }
    f.unit = rest.constant();
    std::sort(f.factors.begin(), f.factors.end(), [](const IntPoly& a, const IntPoly& b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : a.coeffs() < b.coeffs();
    });
    return f;
}

}  // namespace jnum
