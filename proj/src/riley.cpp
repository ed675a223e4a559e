#include "jnum/riley.hpp"

#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "jnum/errors.hpp"
#include "jnum/words.hpp"

namespace jnum {

namespace {

constexpr double kSampleThreshold = 1.0 - 1e-6;

// f[t] = sum over alternating-parity index tuples of length t (first index odd)
// of the product of e_i.
std::vector<IntPoly::Coeff> parity_sums(const TwoBridge& tb) {
    std::vector<IntPoly::Coeff> f(tb.p, 0);
    f[0] = 1;
    for (int i = 1; i <= tb.p - 1; ++i)
        for (int t = i; t >= 1; --t)
            if ((t & 1) == (i & 1)) f[t] = checked_add(f[t], checked_mul(tb.e(i), f[t - 1]));
    return f;
}

bool is_real_root(Cx z) { return std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z)); }

Cx upper(Cx z) { return z.imag() < 0 ? std::conj(z) : z; }

}  // namespace

const char* to_string(BridgeKind k) { return k == BridgeKind::knot ? "knot" : "link"; }

std::string TwoBridge::label() const { return fmt::format("{}/{}", p, q); }

TwoBridge normalize(int p, int q) {
    if (p < 2 || q < 1 || q >= p)
        throw UsageError(fmt::format("two-bridge pair {}/{}: need p >= 2 and 1 <= q < p", p, q));
    if (std::gcd(p, q) != 1)
        throw InvalidPairError(fmt::format("two-bridge pair {}/{}: gcd(p,q) != 1", p, q));
    TwoBridge tb;
    tb.p = p;
    tb.input_q = q;
    tb.q = (p % 2 == 1 && q % 2 == 0) ? p - q : q;
    tb.kind = p % 2 == 1 ? BridgeKind::knot : BridgeKind::link;
    for (int i = 1; i <= p - 1; ++i) {
        long fl = static_cast<long>(i) * tb.q / p;
        tb.eps.push_back(fl % 2 == 0 ? 1 : -1);
    }
    return tb;
}

IntPoly knot_poly(const TwoBridge& tb) {
    if (tb.kind != BridgeKind::knot) throw UsageError("knot_poly: " + tb.label() + " is a link");
    auto f = parity_sums(tb);
    std::vector<IntPoly::Coeff> c;
    for (int k = 0; 2 * k <= tb.p - 1; ++k) c.push_back(f[2 * k]);
    return IntPoly(std::move(c));
}

LinkPoly link_poly(const TwoBridge& tb) {
    if (tb.kind != BridgeKind::link) throw UsageError("link_poly: " + tb.label() + " is a knot");
    auto f = parity_sums(tb);
    std::vector<IntPoly::Coeff> c{0};
    for (int k = 1; 2 * k - 1 <= tb.p - 1; ++k) c.push_back(f[2 * k - 1]);
    LinkPoly lp;
    lp.raw = IntPoly(std::move(c));
    if (lp.raw.is_zero()) throw DegenerateLinkError("link_poly: c_n vanishes for " + tb.label());
    lp.normalized = lp.raw.shift_down(lp.raw.valuation());
    if (lp.normalized.leading() < 0) lp.normalized = -lp.normalized;
    return lp;
}

IntPoly subset_oracle_poly(const TwoBridge& tb) {
    if (tb.p > kOracleMaxP)
        throw SizeLimitError(fmt::format("subset_oracle_poly: p = {} exceeds {}", tb.p, kOracleMaxP));
    const int n = tb.p - 1;
    std::vector<IntPoly::Coeff> c(tb.p / 2 + 2, 0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = 0;
        int prod = 1;
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            if (!(mask & (1u << (i - 1)))) continue;
            ++size;
            ok = (i & 1) == (size & 1);
            prod *= tb.e(i);
        }
        if (!ok) continue;
        if (tb.kind == BridgeKind::knot && size % 2 == 0) c[size / 2] += prod;
        if (tb.kind == BridgeKind::link && size % 2 == 1) c[(size + 1) / 2] += prod;
    }
    return IntPoly(std::move(c));
}

PolyMat2 poly_A() { return {IntPoly{1}, IntPoly{1}, IntPoly{}, IntPoly{1}}; }
PolyMat2 poly_B() { return {IntPoly{1}, IntPoly{}, IntPoly{0, 1}, IntPoly{1}}; }

PolyMat2 word_matrix(const TwoBridge& tb) {
    const PolyMat2 a = poly_A(), b = poly_B();
    const PolyMat2 ai{IntPoly{1}, IntPoly{-1}, IntPoly{}, IntPoly{1}};
    const PolyMat2 bi{IntPoly{1}, IntPoly{}, IntPoly{0, -1}, IntPoly{1}};
    PolyMat2 w{IntPoly{1}, IntPoly{}, IntPoly{}, IntPoly{1}};
    for (int i = 1; i <= tb.p - 1; ++i) {
        bool pos = tb.e(i) > 0;
        w = w * (i % 2 == 1 ? (pos ? b : bi) : (pos ? a : ai));
    }
    return w;
}

Mat2 riley_A() { return Mat2(1, 1, 0, 1); }
Mat2 riley_B(Cx z) { return Mat2(1, 0, z, 1); }

GeometricRoot select_geometric_root(const TwoBridge& tb, const RootSet& rs,
                                    const RootSelectOptions& opt) {
    if (rs.roots.empty()) throw UsageError("select_geometric_root: empty root set");
    if (opt.sample_len < 1 || opt.sample_len > kMaxWordLen)
        throw UsageError("select_geometric_root: bad sample length");
    GeometricRoot out;
    out.sample_len = opt.sample_len;
    struct Sampled {
        Cx z;
        std::optional<double> violation;
    };
    std::vector<Sampled> cache;
    std::vector<Cx> survivors;
    for (const auto& r : rs.roots) {
        RootDiagnostic d;
        d.z = r.z;
        d.real = is_real_root(r.z);
        if (std::abs(r.z) <= tol().eps_cx) {
            d.rejected = true;
            d.reason = "zero root";
        } else if (d.real) {
            d.rejected = true;
            d.reason = "real root";
        } else {
            Cx u = upper(r.z);
            const Sampled* hit = nullptr;
            for (const auto& s : cache)
                if (std::abs(s.z - u) <= 1e-9 * std::max(1.0, std::abs(u))) hit = &s;
            if (!hit) {
                GeneratorSet g({"A", "B"}, {riley_A(), riley_B(u)});
                auto v = find_jorgensen_violation(g, opt.sample_len, kSampleThreshold);
                cache.push_back({u, v ? std::optional<double>(v->report.value) : std::nullopt});
                hit = &cache.back();
                if (!v) survivors.push_back(u);
            }
            if (hit->violation) {
                d.rejected = true;
                d.violating_j = hit->violation;
                d.reason = fmt::format("Jorgensen sampling found J = {:.6g} < 1", *hit->violation);
            }
        }
        out.diagnostics.push_back(std::move(d));
    }
    if (opt.root_index) {
        int k = *opt.root_index;
        if (k < 0 || k >= static_cast<int>(rs.roots.size()))
            throw UsageError(fmt::format("root index {} out of range 0..{}", k, rs.roots.size() - 1));
        out.z = upper(rs.roots[k].z);
        out.overridden = true;
        return out;
    }
    if (survivors.empty())
        throw NoGeometricRootError("no geometric root for " + tb.label() +
                                   " (all roots real or rejected by Jorgensen sampling)");
    out.z = survivors.front();
    for (Cx s : survivors)
        if (std::abs(s) < std::abs(out.z)) out.z = s;
    out.ambiguous = survivors.size() > 1;
    return out;
}

KnotReport knot_jreport(const TwoBridge& tb, const RootSelectOptions& opt) {
    if (tb.kind != BridgeKind::knot) throw UsageError("knot_jreport: " + tb.label() + " is a link");
    KnotReport r;
    r.tb = tb;
    r.d = knot_poly(tb);
    r.roots = solve_roots(r.d);
    r.root = select_geometric_root(tb, r.roots, opt);
    const Cx z = r.root.z;
    r.min_poly = minimal_polynomial(r.d, z);
    r.W = word_matrix(tb).eval(z);
    const Mat2 a = riley_A();
    r.j = jorgensen_pair(a, r.W);
    r.abs_z = std::abs(z);
    r.z_below_4 = r.abs_z < 4.0;
    r.waist_bound = std::sqrt(r.abs_z);
    r.relation_residual = (a * r.W).dist(r.W * riley_B(z));
    return r;
}

LinkReport link_jreport(const TwoBridge& tb, const RootSelectOptions& opt) {
    if (tb.kind != BridgeKind::link) throw UsageError("link_jreport: " + tb.label() + " is a knot");
    LinkReport r;
    r.tb = tb;
    r.c = link_poly(tb);
    if (r.c.normalized.degree() < 1)
        throw NoGeometricRootError("no geometric root for " + tb.label() + " (c_n has no nonzero roots)");
    r.roots = solve_roots(r.c.normalized);
    r.root = select_geometric_root(tb, r.roots, opt);
    const Cx z = r.root.z;
    r.min_poly = minimal_polynomial(r.c.normalized, z);
    r.W = word_matrix(tb).eval(z);
    const Mat2 a = riley_A();
    r.j = jorgensen_pair(a, riley_B(z));
    r.abs_z = std::abs(z);
    r.z_below_4 = r.abs_z < 4.0;
    r.waist_bound = r.abs_z;
    r.relation_residual = (a * r.W).dist(r.W * a);
    return r;
}

}  // namespace jnum
