#include "suites.hpp"

#include <cmath>
#include <functional>
#include <map>

#include <fmt/core.h>

#include "jnum/arith.hpp"
#include "jnum/catalog.hpp"
#include "jnum/errors.hpp"

using namespace jnum;
using json = nlohmann::ordered_json;

namespace {

constexpr double kTableTol = 1e-6;
constexpr double kExactTol = 1e-9;
constexpr double kRelationTol = 1e-6;
constexpr int kSweepLen = 5;
constexpr int kAlphaLen = 12;
constexpr int kAlphaEscalateLen = 14;

CliResult start(std::string command, json inputs) {
    CliResult r;
    r.command = std::move(command);
    r.inputs = std::move(inputs);
    r.tolerances = tol();
    return r;
}

json roots_json(const RootSet& rs) {
    json out = json::array();
    for (const auto& r : rs.roots) out.push_back(cx_json(r.z));
    return out;
}

json diagnostics_json(const GeometricRoot& g) {
    json out = json::array();
    for (const auto& d : g.diagnostics) {
        json e = {{"z", cx_json(d.z)}, {"real", d.real}, {"rejected", d.rejected}, {"reason", d.reason}};
        e["violating_J"] = d.violating_j ? json(*d.violating_j) : json(nullptr);
        out.push_back(e);
    }
    return out;
}

RootSelectOptions select_options(const RunOptions& o) {
    RootSelectOptions s;
    if (o.max_len) s.sample_len = *o.max_len;
    s.root_index = o.root_index;
    return s;
}

json pair_inputs(int p, int q) { return {{"p", p}, {"q", q}}; }

// one verification line
struct Suite {
    CliResult& r;
    void check(const std::string& name, const json& value, const json& expected, double deviation, double tol) {
        bool pass = deviation <= tol;
        r.results.push_back({{"check", name}, {"value", value}, {"expected", expected},
                             {"deviation", deviation}, {"tolerance", tol}, {"pass", pass}});
        if (!pass) r.status = Status::violation;
    }
    void flag(const std::string& name, const json& value, const json& expected, bool pass) {
        r.results.push_back({{"check", name}, {"value", value}, {"expected", expected},
                             {"deviation", nullptr}, {"tolerance", nullptr}, {"pass", pass}});
        if (!pass) r.status = Status::violation;
    }
};

void identity_rows(Suite& s, const IdentityReport& rep) {
    for (const auto& e : rep.entries) {
        std::string name = e.group + ": " + e.label + (e.as_stated ? "" : " [corrected form]");
        s.check(name, e.deviation, 0.0, e.deviation, kExactTol);
    }
}

void suite_bianchi(Suite& s, const RunOptions&) {
    for (int d : kBianchiDs) {
        auto rep = verify_relations(d);
        for (const auto& e : rep.entries) s.check(e.group + ": " + e.label, e.deviation, 0.0, e.deviation, kExactTol);
    }
}

void suite_losid(Suite& s, const RunOptions&) { identity_rows(s, losid_identity_suite()); }
void suite_sigma(Suite& s, const RunOptions&) { identity_rows(s, sigma_lambda_identity_suite()); }

void suite_arithcomp(Suite& s, const RunOptions&) {
    for (const auto& e : arithcomp_table()) {
        auto g = e.generators();
        double j = jorgensen_value(g[0], g[1]);
        double c2 = std::norm(e.c);
        s.check(e.label + ": J = |c|^2", j, c2, std::abs(j - c2), kTableTol);
        s.check(e.label + ": J listed", j, e.expected_J, std::abs(j - e.expected_J), kTableTol);
    }
}

void suite_knot_table(Suite& s, const RunOptions&) {
    for (const auto& e : knot_table()) {
        auto r = knot_jreport(normalize(e.p, e.q));
        bool poly = r.min_poly == e.min_poly || r.min_poly == -e.min_poly;
        s.flag(e.label + ": minimal polynomial", r.min_poly.text(), e.min_poly.text(), poly);
        s.flag(e.label + ": d_n constant and leading +-1", r.d.text(), "unit", is_algebraic_unit(r.d));
        double dz = std::min(std::abs(r.root.z - e.z), std::abs(r.root.z - std::conj(e.z)));
        s.check(e.label + ": z (up to conjugation)", cx_json(r.root.z), cx_json(e.z), dz, kTableTol);
        s.check(e.label + ": J", r.j.value, e.J, std::abs(r.j.value - e.J), kTableTol);
        GeneratorSet g({"A", "B"}, {riley_A(), riley_B(r.root.z)});
        auto a = min_loxodromic_defect(g, kAlphaLen);
        int len = kAlphaLen;
        if (std::abs(a.value - e.alpha) > kTableTol) {
            a = min_loxodromic_defect(g, kAlphaEscalateLen);
            len = kAlphaEscalateLen;
        }
        s.check(fmt::format("{}: alpha (primitive, length {}, {})", e.label, len, a.witness.str({"A", "B"})),
                a.value, e.alpha, std::abs(a.value - e.alpha), kTableTol);
    }
}

void suite_elliptic(Suite& s, const RunOptions&) {
    for (int n : kEllipticOrders) {
        double j = elliptic_j_value(n);
        s.check(fmt::format("J for n = {}", n), j, 1.0, std::abs(j - 1.0), 1e-12);
        auto g = elliptic_type_pair(n, elliptic_tr2B_default(n));
        auto d = jorgensen_dichotomy(g[0], g[1]);
        s.check(fmt::format("pair n = {}: tr X Y X Y^-1", n), cx_json(d.tr_xyxy), 1.0,
                std::abs(d.tr_xyxy - 1.0), kExactTol);
    }
    auto r6 = elliptic_type_check({6, 10.0, {}, std::nullopt});
    s.flag("n = 6: condition (1) fails", to_string(r6.cond[0].status), "fail",
           r6.cond[0].status == CondStatus::fail);
    auto r7 = elliptic_type_check({7, 5.0, {5.0, 0.8}, std::nullopt});
    s.flag("n = 7, tr^2 B = 5: condition (2) fails", to_string(r7.cond[1].status), "fail",
           r7.cond[1].status == CondStatus::fail);
    s.flag("n = 7, tr^2 B = 5: condition (4) fails", to_string(r7.cond[3].status), "fail",
           r7.cond[3].status == CondStatus::fail);
    auto ok = elliptic_type_check({7, 5.4, {1.2, 0.8}, std::nullopt});
    s.flag("n = 7, tr^2 B = 5.4, conjugates 1.2, 0.8: conditions (1) (2) (4)",
           fmt::format("{} {} {}", to_string(ok.cond[0].status), to_string(ok.cond[1].status),
                       to_string(ok.cond[3].status)),
           "pass pass pass",
           ok.cond[0].status == CondStatus::pass && ok.cond[1].status == CondStatus::pass &&
               ok.cond[3].status == CondStatus::pass);
}

void suite_gtk(Suite& s, const RunOptions&) {
    const auto& fams = gtk_families();
    for (std::size_t i = 0; i < fams.size(); ++i) {
        const auto& f = fams[i];
        for (int n : f.integer_multiple ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{1}) {
            GtkParams p{f.theta_num, f.theta_den, f.integer_multiple ? n * f.k : f.k};
            std::string label = f.integer_multiple ? fmt::format("{} n={}", f.label, n) : f.label;
            auto g = gtk_generators(p);
            double j = jorgensen_value(g[0], g[1]);
            s.check(label + ": J", j, 1.0, std::abs(j - 1.0), 1e-12);
            auto d = recognize_invariant_field(invariant_trace_field_generators(g[0], g[1]));
            s.flag(label + ": invariant trace field", d ? json(*d) : json(nullptr),
                   f.field_d ? json(*f.field_d) : json(nullptr), d == f.field_d);
            auto m = match_gtk_family(p);
            s.flag(label + ": " + gtk_identification(static_cast<int>(i), n), m.family, static_cast<int>(i),
                   m.listed && m.family == static_cast<int>(i));
            GtkParams shifted{p.theta_num + p.theta_den, p.theta_den, p.k};
            auto h = gtk_generators(shifted);
            double dev = std::max(proj_dist(g[0], h[0]), proj_dist(g[1], h[1]));
            s.check(label + ": G(pi+theta,k) = G(theta,k)", dev, 0.0, dev, kExactTol);
        }
    }
}

void suite_sweep(Suite& s, const RunOptions& o) {
    int len = o.max_len.value_or(kSweepLen);
    std::vector<std::pair<std::string, GeneratorSet>> sets;
    sets.emplace_back("figure-eight", GeneratorSet({"A", "B"}, {riley_A(), riley_B(Cx(0.5, std::sqrt(3.0) / 2))}));
    for (int d : kBianchiDs) sets.emplace_back(fmt::format("PSL2(O{})", d), bianchi_generators(d));
    for (const auto& [name, g] : sets) {
        auto r = inequality_sweep(g, len);
        json row = {{"check", fmt::format("{} at length {}", name, len)},
                    {"elements", r.elements},
                    {"pairs", r.pairs_checked},
                    {"violations", r.violations},
                    {"min_J", r.min_pair ? json(r.min_pair->report.value) : json(nullptr)},
                    {"witness", r.min_pair ? r.min_pair->wx.str(g.names()) + " ; " + r.min_pair->wy.str(g.names())
                                           : std::string()},
                    {"pass", r.violations == 0}};
        s.r.results.push_back(row);
        if (r.violations) s.r.status = Status::violation;
    }
}

const std::map<std::string, std::function<void(Suite&, const RunOptions&)>>& suites() {
    static const std::map<std::string, std::function<void(Suite&, const RunOptions&)>> m = {
        {"bianchi", suite_bianchi},     {"losid", suite_losid},
        {"sigma-lambda", suite_sigma},  {"arithcomp", suite_arithcomp},
        {"knot-table", suite_knot_table}, {"elliptic", suite_elliptic},
        {"gtk-families", suite_gtk},    {"inequality-sweep", suite_sweep},
    };
    return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto& [k, f] : suites()) v.push_back(k);
        return v;
    }();
    return names;
}

CliResult cmd_verify(const std::string& suite, const RunOptions& o) {
    auto it = suites().find(suite);
    if (it == suites().end()) throw UsageError("unknown suite '" + suite + "'");
    json in = {{"suite", suite}};
    if (o.max_len) in["max_len"] = *o.max_len;
    auto r = start("verify", in);
    Suite s{r};
    it->second(s, o);
    std::size_t failed = 0;
    for (const auto& row : r.results) failed += !row.value("pass", true);
    r.message = fmt::format("{} checks, {} failed", r.results.size(), failed);
    return r;
}

CliResult cmd_knot(int p, int q, const RunOptions& o) {
    auto r = start("knot", pair_inputs(p, q));
    auto tb = normalize(p, q);
    if (tb.kind != BridgeKind::knot) throw UsageError(fmt::format("{}/{} is a link (p even); use 'link'", p, q));
    json rec = {{"label", tb.label()}, {"mirrored", tb.q != tb.input_q}};
    auto d = knot_poly(tb);
    rec["d_n"] = d.text();
    auto rs = solve_roots(d);
    rec["roots"] = roots_json(rs);
    rec["root_residual"] = rs.max_residual();
    try {
        auto k = knot_jreport(tb, select_options(o));
        rec["min_poly"] = k.min_poly.text();
        rec["z"] = cx_json(k.root.z);
        rec["ambiguous"] = k.root.ambiguous;
        rec["overridden"] = k.root.overridden;
        rec["sample_len"] = k.root.sample_len;
        rec["J"] = k.j.value;
        rec["abs_z"] = k.abs_z;
        rec["z_below_4"] = k.z_below_4;
        rec["waist_bound"] = k.waist_bound;
        rec["relation_residual"] = k.relation_residual;
        rec["algebraic_unit"] = is_algebraic_unit(k.min_poly);
        rec["root_diagnostics"] = diagnostics_json(k.root);
        if (!k.z_below_4 || k.relation_residual > kRelationTol) r.status = Status::violation;
    } catch (const NoGeometricRootError& e) {
        rec["non_hyperbolic"] = true;
        r.status = Status::error;
        r.message = e.what();
    }
    r.results.push_back(rec);
    return r;
}

CliResult cmd_link(int p, int q, const RunOptions& o) {
    auto r = start("link", pair_inputs(p, q));
    auto tb = normalize(p, q);
    if (tb.kind != BridgeKind::link) throw UsageError(fmt::format("{}/{} is a knot (p odd); use 'knot'", p, q));
    json rec = {{"label", tb.label()}};
    try {
        auto c = link_poly(tb);
        rec["c_n_raw"] = c.raw.text();
        rec["c_n"] = c.normalized.text();
        if (c.normalized.degree() >= 1) rec["roots"] = roots_json(solve_roots(c.normalized));
        auto l = link_jreport(tb, select_options(o));
        rec["min_poly"] = l.min_poly.text();
        rec["z"] = cx_json(l.root.z);
        rec["ambiguous"] = l.root.ambiguous;
        rec["overridden"] = l.root.overridden;
        rec["sample_len"] = l.root.sample_len;
        rec["J"] = l.j.value;
        rec["abs_z"] = l.abs_z;
        rec["z_below_4"] = l.z_below_4;
        rec["waist_bound"] = l.waist_bound;
        rec["relation_residual"] = l.relation_residual;
        rec["root_diagnostics"] = diagnostics_json(l.root);
        if (l.relation_residual > kRelationTol) r.status = Status::violation;
    } catch (const NoGeometricRootError& e) {
        rec["non_hyperbolic"] = true;
        r.status = Status::error;
        r.message = e.what();
    } catch (const DegenerateLinkError& e) {
        rec["non_hyperbolic"] = true;
        r.status = Status::error;
        r.message = e.what();
    }
    r.results.push_back(rec);
    return r;
}

CliResult cmd_bianchi(int d, bool verify) {
    auto r = start("bianchi", {{"d", d}, {"verify", verify}});
    auto g = bianchi_generators(d);
    for (int i = 0; i < g.arity(); ++i)
        r.results.push_back({{"generator", g.names()[i]}, {"matrix", g[i].str()}, {"kind", to_string(classify(g[i]).kind)}});
    if (verify) {
        auto rep = verify_relations(d);
        for (const auto& e : rep.entries) {
            bool pass = e.deviation <= kExactTol;
            r.results.push_back({{"relator", e.label}, {"deviation", e.deviation}, {"pass", pass}});
            if (!pass) r.status = Status::violation;
        }
    }
    return r;
}

CliResult cmd_gtk(int num, int den, double k, const std::string& k_text) {
    GtkParams p{num, den, k};
    auto r = start("gtk", {{"theta_num", num}, {"theta_den", den}, {"k", k_text}});
    auto g = gtk_generators(p);
    auto jr = jorgensen_pair(g[0], g[1]);
    auto m = match_gtk_family(p);
    std::optional<int> d;
    try {
        d = recognize_invariant_field(invariant_trace_field_generators(g[0], g[1]));
    } catch (const UnsupportedBranchError&) {
    }
    json rec = {{"theta", fmt::format("pi*{}/{}", num, den)},
                {"k", k},
                {"A", g[0].str()},
                {"B", g[1].str()},
                {"J", jr.value},
                {"invariant_field_d", d ? json(*d) : json(nullptr)},
                {"listed", m.listed},
                {"family", m.listed ? json(gtk_families()[m.family].label) : json(nullptr)},
                {"n", m.n ? json(*m.n) : json(nullptr)},
                {"exact", m.exact},
                {"symmetry", m.symmetry},
                {"identification", m.identification}};
    if (m.listed) {
        const auto& f = gtk_families()[m.family];
        rec["arithmetic"] = f.arithmetic;
        if (f.field_d != d) r.status = Status::violation;
    }
    if (std::abs(jr.value - 1.0) > kExactTol) r.status = Status::violation;
    r.results.push_back(rec);
    return r;
}

CliResult cmd_roots(const std::string& text) {
    auto p = IntPoly::parse(text);
    auto r = start("roots", {{"poly", p.text()}});
    auto rs = solve_roots(p);
    json factors = json::array();
    auto fac = factor_over_z(p);
    for (const auto& f : fac.factors) factors.push_back(f.text());
    for (const auto& x : rs.roots)
        r.results.push_back({{"z", cx_json(x.z)}, {"error_bound", x.error_bound},
                             {"min_poly", minimal_polynomial(p, x.z).text()}});
    r.message = fmt::format("content {}, irreducible factors: {}", fac.unit, factors.dump());
    return r;
}
