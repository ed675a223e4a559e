#include "jnum/catalog.hpp"

#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "jnum/errors.hpp"

namespace jnum {

namespace {

const Cx I1(0, 1);
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);

Mat2 mA() { return Mat2(1, 1, 0, 1); }
Mat2 lower(Cx c) { return Mat2(1, 0, c, 1); }
Mat2 upper(Cx b) { return Mat2(1, b, 0, 1); }

class Checker {
public:
    explicit Checker(IdentityReport& r) : r_(r) {}

    void equal(const std::string& group, const std::string& label, const Mat2& lhs, const Mat2& rhs,
               bool as_stated = true) {
        double dev = proj_dist(lhs, rhs);
        r_.entries.push_back({group, label, dev, dev <= tol().eps_mat, as_stated});
    }
    void identity(const std::string& group, const std::string& label, const Mat2& m) {
        equal(group, label + " = 1", m, Mat2::identity());
    }
    void order(const std::string& group, const std::string& label, const Mat2& m, int n) {
        auto cls = classify(m);
        double want = 2 * std::cos(kPi / n);
        double dev = std::abs(std::abs(m.trace()) - want);
        bool ok = cls.kind == MobiusKind::elliptic && cls.rotation_order == n;
        r_.entries.push_back({group, fmt::format("{} elliptic of order {}", label, n), dev, ok, true});
    }

private:
    IdentityReport& r_;
};

// evaluates a word over named matrices
struct Named {
    GeneratorSet g;
    Named(std::vector<std::string> names, std::vector<Mat2> mats) : g(std::move(names), std::move(mats)) {}
    Mat2 operator()(const char* w) const { return evaluate(g, parse_word(w, g)); }
};

}  // namespace

void validate(const GtkParams& p) {
    if (p.theta_den < 1) throw UsageError("gtk: theta denominator must be >= 1");
    if (p.theta_num < 0 || p.theta_num > 2 * p.theta_den)
        throw UsageError("gtk: theta = pi*num/den must lie in [0, 2pi]");
    if (!std::isfinite(p.k)) throw UsageError("gtk: k must be finite");
}

Mat2 gtk_B(double theta, double k) {
    Cx e = expi(theta);
    return Mat2(0, -I1 / e, -I1 * e, 2 * k * e);
}

GeneratorSet gtk_generators(const GtkParams& p) {
    validate(p);
    return GeneratorSet({"A", "B"}, {mA(), gtk_B(p.theta(), p.k)});
}

GeneratorSet sigma_lambda_generators(Cx sigma, Cx lambda) {
    if (std::abs(sigma) <= tol().eps_cx) throw UsageError("sigma_lambda_generators: sigma must be nonzero");
    return GeneratorSet({"A", "B"}, {mA(), Mat2(0, -1.0 / sigma, sigma, lambda)});
}

GeneratorSet bianchi_generators(int d) {
    Cx alpha;
    switch (d) {
        case 1: case 2: alpha = Cx(0, std::sqrt(double(d))); break;
        case 3: case 7: case 11: alpha = Cx(0.5, std::sqrt(double(d)) / 2); break;
        default: throw UsageError(fmt::format("bianchi: unsupported d = {} (use 1, 2, 3, 7, 11)", d));
    }
    return GeneratorSet({"A", "S", "T"}, {mA(), Mat2(0, -1, 1, 0), upper(alpha)});
}

std::vector<Relator> bianchi_relations(int d) {
    std::vector<std::string> rel{"S^2", "(A S)^3", "A T A^-1 T^-1"};
    switch (d) {
        case 1:
            rel.insert(rel.end(), {"(T^2 S T^-1 S)^2", "(T S T^-1 S T S)^2", "(A T S T^-1 S T S)^2"});
            break;
        case 2: rel.push_back("(S T S^-1 T^-1)^2"); break;
        case 3:
            rel.insert(rel.end(), {"(T S T^-1 A T^-1 A S)^2", "(T S T^-1 A S)^3",
                                   "A^-1 T^-1 S A^-1 T S A T^-1 S A T^-1 S A^-1 T S"});
            break;
        case 7: rel.push_back("(S A T^-1 S T)^2"); break;
        case 11: rel.push_back("(S A T^-1 S T)^3"); break;
        default: throw UsageError(fmt::format("bianchi: unsupported d = {} (use 1, 2, 3, 7, 11)", d));
    }
    std::vector<Relator> out;
    for (auto& r : rel) out.push_back({r, parse_word(r, std::vector<std::string>{"A", "S", "T"})});
    return out;
}

bool IdentityReport::all_hold() const {
    for (const auto& e : entries)
        if (!e.holds) return false;
    return !entries.empty();
}

double IdentityReport::max_deviation() const {
    double m = 0;
    for (const auto& e : entries) m = std::max(m, e.deviation);
    return m;
}

IdentityReport verify_relations(int d) {
    auto g = bianchi_generators(d);
    IdentityReport r;
    Checker ck(r);
    for (const auto& rel : bianchi_relations(d))
        ck.identity(fmt::format("PSL2(O{})", d), rel.text, evaluate(g, rel.word));
    return r;
}

IdentityReport losid_identity_suite() {
    IdentityReport r;
    Checker ck(r);
    const Mat2 A = mA();

    for (int n = 1; n <= 4; ++n) {
        std::string grp = fmt::format("(pi/6, {}*sqrt3/2)", n);
        Mat2 B = gtk_B(kPi / 6, kSqrt3 / 2 * n);
        Named w({"A", "B"}, {A, B});
        Mat2 C = w("B A B^-1");
        ck.equal(grp, "C = B A B^-1 = [[1,0],[e^{i pi/3},1]]", C, lower(expi(kPi / 3)));
        Named wc({"A", "B", "C"}, {A, B, C});
        Mat2 T = wc("C^-1 A C A^-2 C A C^-1");
        ck.equal(grp, "T = C^-1 A C A^-2 C A C^-1 = [[1,2sqrt3 i],[0,1]]", T, upper(Cx(0, 2 * kSqrt3)));
        if (n % 2 == 0) {
            Mat2 D = B * T.pow(-n / 2);
            ck.equal(grp, "D = B T^(-n/2) = [[0,-e^{i pi/3}],[e^{-i pi/3},0]]", D,
                     Mat2(0, -expi(kPi / 3), expi(-kPi / 3), 0));
            ck.equal(grp, "D A D^-1 = C", D * A * D.inverse(), C);
            ck.identity(grp, "D^2", D * D);
        } else {
            Named wt({"A", "B", "C", "T"}, {A, B, C, T});
            ck.identity(grp, "B^-1 A^-1 C A C^-1 T^((n-1)/2)",
                        wt("B^-1 A^-1 C A C^-1") * T.pow((n - 1) / 2));
        }
    }

    {
        std::string grp = "(pi/4, 1/2)";
        Mat2 BA = gtk_B(kPi / 4, 0.5) * A;
        ck.order(grp, "B A", BA, 4);
        ck.identity(grp, "(B A)^4", BA.pow(4));
    }

    {
        Mat2 B = gtk_B(kPi / 4, 0.5);
        Named w({"A", "B"}, {A, B});
        Mat2 S = w("A B^2 A B^-1"), T = w("A^2 B^2 A B^-1"), U = w("A B^2 A^-1 B^-2 A^-1 B");
        Named st({"S", "T", "U"}, {S, T, U});
        std::string grp = "(pi/4, 1/2) presentation";
        for (const char* rel : {"U^2", "S^4", "T^4", "(U S)^2", "(U^-1 T)^3", "(T S)^2"})
            ck.identity(grp, rel, st(rel));
        ck.equal(grp, "A = T S^-1", A, st("T S^-1"));
        ck.equal("(pi/4, 1)", "B_{pi/4,1} = S U T S^2 T^-1 S^-1", gtk_B(kPi / 4, 1.0),
                 st("S U T S^2 T^-1 S^-1"));
        ck.equal("(pi/4, 3/2)", "B_{pi/4,3/2} = S U T S^2 T^-1 S T^-1 S^-1", gtk_B(kPi / 4, 1.5),
                 st("S U T S^2 T^-1 S T^-1 S^-1"));
    }

    for (int n = 1; n <= 4; ++n) {
        std::string grp = fmt::format("(pi/3, {}*sqrt3/2)", n);
        Mat2 B = gtk_B(kPi / 3, kSqrt3 / 2 * n);
        Named w({"A", "B"}, {A, B});
        Mat2 C = w("B A^-1 B^-1");
        ck.equal(grp, "C = B A^-1 B^-1 = [[1,0],[e^{-i pi/3},1]]", C, lower(expi(-kPi / 3)));
        Named wc({"A", "B", "C"}, {A, B, C});
        Mat2 T = wc("C A^-1 C^-1 A^2 C^-1 A^-1 C");
        ck.equal(grp, "T = C A^-1 C^-1 A^2 C^-1 A^-1 C = [[1,2sqrt3 i],[0,1]]", T, upper(Cx(0, 2 * kSqrt3)));
        if (n % 2 == 0) {
            Mat2 D = B * T.pow(-n / 2);
            ck.equal(grp, "D = B T^(-n/2) = [[0,-e^{i pi/6}],[e^{-i pi/6},0]]", D,
                     Mat2(0, -expi(kPi / 6), expi(-kPi / 6), 0));
            ck.equal(grp, "D A D^-1 = C", D * A * D.inverse(), C);
            ck.equal(grp, "D A^-1 D^-1 = C", D * A.inverse() * D.inverse(), C, false);
        } else {
            Named wt({"A", "B", "C"}, {A, B, C});
            Mat2 D = wt("B^-1 A^-1 C A C^-1") * T.pow(-(n - 1) / 2);
            ck.equal(grp, "D = B^-1 A^-1 C A C^-1 T^(-(n-1)/2) = diag(i,-i)", D, Mat2(I1, 0, 0, -I1));
            ck.equal(grp, "D A D^-1 = A^-1", D * A * D.inverse(), A.inverse());
            ck.equal(grp, "D C D^-1 = C^-1", D * C * D.inverse(), C.inverse());
        }
    }

    struct Sq {
        const char* grp;
        double k;
        Cx alpha;
    };
    for (const auto& s : {Sq{"(pi/2, 1/2)", 0.5, I1}, Sq{"(pi/2, sqrt2/2)", kSqrt2 / 2, Cx(0, kSqrt2)},
                          Sq{"(pi/2, sqrt3/2)", kSqrt3 / 2, Cx(0, kSqrt3)}}) {
        Mat2 B = gtk_B(kPi / 2, s.k);
        Named w({"A", "B"}, {A, B});
        Mat2 S = w("A^-1 B A^-1 B^-1 A^-1");
        Mat2 T = w("A B A B^-1 A B");
        ck.equal(s.grp, "S = A^-1 B A^-1 B^-1 A^-1 = [[0,-1],[1,0]]", S, Mat2(0, -1, 1, 0));
        ck.equal(s.grp, "T = A B A B^-1 A B = [[1,alpha],[0,1]]", T, upper(s.alpha));
        ck.equal(s.grp, "S T = B", S * T, B);
    }
    return r;
}

IdentityReport sigma_lambda_identity_suite() {
    IdentityReport r;
    Checker ck(r);
    const Mat2 A = mA();
    auto gen_B = [](Cx s, Cx l) { return Mat2(0, -1.0 / s, s, l); };

    for (int d : {3, 7, 11}) {
        std::string grp = fmt::format("sigma=1, lambda=(1+sqrt(-{}))/2", d);
        Cx l(0.5, std::sqrt(double(d)) / 2);
        Mat2 B = gen_B(1, l);
        Named w({"A", "B"}, {A, B});
        Mat2 S = w("A^-1 B A^-1 B^-1 A^-1");
        Mat2 T = S.inverse() * B;
        Mat2 U = T * A.inverse();
        ck.equal(grp, "S = A^-1 B A^-1 B^-1 A^-1 = [[0,-1],[1,0]]", S, Mat2(0, -1, 1, 0));
        ck.equal(grp, "T = S^-1 B = [[1,lambda],[0,1]]", T, upper(l));
        ck.equal(grp, "U = T A^-1 = [[1,lambda-1],[0,1]]", U, upper(l - 1.0));
        ck.equal(grp, "S T = B", S * T, B);
        ck.equal(grp, "U A = T", U * A, T);
    }
    for (int d : {3, 7, 11}) {
        std::string grp = fmt::format("sigma=i, lambda=(sqrt{}+i)/2", d);
        Cx l(std::sqrt(double(d)) / 2, 0.5);
        Mat2 B = gen_B(I1, l);
        Named w({"A", "B"}, {A, B});
        Mat2 S = w("A^-1 B A B^-1 A^-1");
        Mat2 T = S.inverse() * B;
        Mat2 U = T * A.inverse();
        ck.equal(grp, "S = A^-1 B A B^-1 A^-1 = [[0,-1],[1,0]]", S, Mat2(0, -1, 1, 0));
        ck.equal(grp, "T = S^-1 B = [[i,lambda],[0,-i]]", T, Mat2(I1, l, 0, -I1));
        ck.equal(grp, "U = T A^-1 = [[i,(sqrt d - i)/2],[0,-i]]", U,
                 Mat2(I1, Cx(std::sqrt(double(d)) / 2, -0.5), 0, -I1));
        ck.equal(grp, "S T = B", S * T, B);
    }
    for (int m : {1, 5, -3}) {
        std::string grp = fmt::format("sigma=e^(-i pi/6), lambda={}i", m);
        Mat2 B = gen_B(expi(-kPi / 6), Cx(0, m));
        Named w({"A", "B"}, {A, B});
        Mat2 C = w("B A^-1 B^-1");
        Named wc({"A", "B", "C"}, {A, B, C});
        Mat2 T = wc("C^-1 A C A^-2 C A C^-1");
        Mat2 D = B * A.pow((m + 3) / 2) * T.pow((m - 1) / 4);
        ck.equal(grp, "C = B A^-1 B^-1 = [[1,0],[e^{-i pi/3},1]]", C, lower(expi(-kPi / 3)));
        ck.equal(grp, "T = C^-1 A C A^-2 C A C^-1 = [[1,-2sqrt(-3)],[0,1]]", T, upper(Cx(0, -2 * kSqrt3)));
        ck.equal(grp, "D = B A^((m+3)/2) T^((m-1)/4) = [[0,-e^{i pi/6}],[e^{-i pi/6},sqrt3]]", D,
                 Mat2(0, -expi(kPi / 6), expi(-kPi / 6), kSqrt3));
        ck.order(grp, "D", D, 6);
        ck.equal(grp, "C = D A D^-1", C, D * A * D.inverse());
        ck.equal(grp, "C = D A^-1 D^-1", C, D * A.inverse() * D.inverse(), false);
    }
    for (int m : {1, 5, -3}) {
        std::string grp = fmt::format("sigma=e^(-i pi/3), lambda={}", m);
        Mat2 B = gen_B(expi(-kPi / 3), m);
        Named w({"A", "B"}, {A, B});
        Mat2 C = w("B A B^-1");
        Named wc({"A", "B", "C"}, {A, B, C});
        Mat2 T = wc("C^-1 A C A^-2 C A C^-1");
        Mat2 D = wc("A^-1 C A C^-1 B^-1 A^-1 C A C^-1") * A.pow((m - 1) / 2) * T.pow((m - 5) / 4);
        ck.equal(grp, "C = B A B^-1 = [[1,0],[e^{i pi/3},1]]", C, lower(expi(kPi / 3)));
        ck.equal(grp, "T = C^-1 A C A^-2 C A C^-1 = [[1,2sqrt(-3)],[0,1]]", T, upper(Cx(0, 2 * kSqrt3)));
        ck.equal(grp, "D = [[0,-e^{i pi/3}],[e^{-i pi/3},-1]]", D, Mat2(0, -expi(kPi / 3), expi(-kPi / 3), -1));
        ck.order(grp, "D", D, 3);
        ck.equal(grp, "C = D A D^-1", C, D * A * D.inverse());
    }
    return r;
}

const std::vector<GtkFamily>& gtk_families() {
    static const std::vector<GtkFamily> f = {
        {"(pi/6, n*sqrt3/2)", 1, 6, kSqrt3 / 2, true, true, 3},
        {"(pi/4, 1/2)", 1, 4, 0.5, false, true, 1},
        {"(pi/4, 1)", 1, 4, 1.0, false, true, 1},
        {"(pi/4, 3/2)", 1, 4, 1.5, false, true, 1},
        {"(pi/4, 1+sqrt2/2)", 1, 4, 1 + kSqrt2 / 2, false, false, std::nullopt},
        {"(pi/4, (5+sqrt5)/4)", 1, 4, (5 + kSqrt5) / 4, false, false, std::nullopt},
        {"(pi/4, 1+sqrt3/2)", 1, 4, 1 + kSqrt3 / 2, false, false, std::nullopt},
        {"(pi/3, n*sqrt3/2)", 1, 3, kSqrt3 / 2, true, true, 3},
        {"(pi/2, 1/2)", 1, 2, 0.5, false, true, 1},
        {"(pi/2, sqrt2/2)", 1, 2, kSqrt2 / 2, false, true, 2},
        {"(pi/2, (1+sqrt5)/4)", 1, 2, (1 + kSqrt5) / 4, false, false, std::nullopt},
        {"(pi/2, sqrt3/2)", 1, 2, kSqrt3 / 2, false, true, 3},
    };
    return f;
}

std::string gtk_identification(int family, std::optional<int> n) {
    const auto& f = gtk_families().at(family);
    if (!f.arithmetic) return "listed family, not arithmetic";
    const std::string fig8x = "Z2-extension of the figure-eight knot group";
    switch (family) {
        case 0:
            return n && *n % 2 != 0 ? "figure-eight knot group"
                                    : fig8x + " (involution swapping the parabolic generators)";
        case 1: return "PGL2(O1)";
        case 2: return "index-8 subgroup of PGL2(O1)";
        case 3: return "index-6 subgroup of PGL2(O1)";
        case 7:
            return n && *n % 2 != 0 ? fig8x + " (involution inverting each parabolic generator)"
                                    : fig8x + " (involution swapping the parabolic generators)";
        case 8: return "PSL2(O1)";
        case 9: return "PSL2(O2)";
        case 11: return "index-10 subgroup of PSL2(O3)";
    }
    return "";
}

GtkMatch match_gtk_family(const GtkParams& p) {
    validate(p);
    GtkMatch m;
    long num = p.theta_num, den = p.theta_den;
    long g = std::gcd(num, den);
    if (g) {
        num /= g;
        den /= g;
    }
    double k = p.k;
    std::vector<std::string> sym;
    if (num > den) {
        num -= den;
        sym.push_back("G_{pi+theta,k} = G_{theta,k}");
    }
    if (2 * num > den) {
        num = den - num;
        m.exact = false;
        sym.push_back("theta -> pi - theta (Jorgensen property preserved)");
    }
    if (k < 0) {
        k = -k;
        m.exact = false;
        sym.push_back("k -> -k (Jorgensen property preserved)");
    }
    for (std::size_t i = 0; i < sym.size(); ++i) m.symmetry += (i ? "; " : "") + sym[i];
    const auto& fams = gtk_families();
    for (std::size_t i = 0; i < fams.size(); ++i) {
        const auto& f = fams[i];
        if (num * f.theta_den != f.theta_num * den) continue;
        if (f.integer_multiple) {
            double nn = std::round(k / f.k);
            if (std::abs(k - nn * f.k) > 1e-9) continue;
            m.n = static_cast<int>(nn);
        } else if (std::abs(k - f.k) > 1e-9) {
            continue;
        }
        m.listed = true;
        m.family = static_cast<int>(i);
        m.identification = gtk_identification(m.family, m.n);
        return m;
    }
    m.identification = "not a listed finite-covolume Jorgensen family";
    return m;
}

GeneratorSet ArithcompEntry::generators() const {
    Mat2 B = b_order == 0 ? lower(c) : Mat2(0, -1.0 / c, c, 2 * std::cos(kPi / b_order));
    return GeneratorSet({"A", "B"}, {mA(), B});
}

const std::vector<ArithcompEntry>& arithcomp_table() {
    const std::string src = "J-list of two-generator arithmetic groups with A parabolic, B parabolic or elliptic";
    const Cx w3(0.5, kSqrt3 / 2), w7(0.5, std::sqrt(7.0) / 2), c62(1.5, kSqrt3 / 2);
    static const std::vector<ArithcompEntry> t = {
        {"figure-eight knot group", w3, 0, 1.0, 3, src},
        {"Whitehead link group", Cx(1, 1), 0, 2.0, 1, src},
        {"6^2_2 link group", c62, 0, 3.0, 3, src},
        {"6^2_3 link group", w7, 0, 2.0, 7, src},
        {"Z2-extension of the figure-eight knot group", std::sqrt(w3), 2, 1.0, 3, src},
        {"Z2-extension of the Whitehead link group", std::sqrt(Cx(1, 1)), 2, kSqrt2, 1, src},
        {"Z2-extension of the 6^2_2 link group", std::sqrt(c62), 2, kSqrt3, 3, src},
        {"Z2-extension of the 6^2_3 link group", std::sqrt(w7), 2, kSqrt2, 7, src},
        {"index 8 in PSL2(O1)", Cx(1, 1), 3, 2.0, 1, src},
        {"PSL2(O3)", w3, 3, 1.0, 3, src},
        {"index 2 in PSL2(O7)", w7, 3, 2.0, 7, src},
        {"PGL2(O1)", Cx(1, 1) / kSqrt2, 4, 1.0, 1, src},
        {"index 24 in PSL2(O2)", Cx(kSqrt2, 1), 4, 3.0, 2, src},
        {"index 30 in PSL2(O3)", Cx(1, kSqrt3) / kSqrt2, 4, 2.0, 3, src},
        {"PGL2(O3)", Cx(kSqrt3, 1) / 2.0, 6, 1.0, 3, src},
        {"index 6 in PSL2(O15)", Cx(kSqrt3, kSqrt5) / 2.0, 6, 2.0, 15, src},
    };
    return t;
}

const std::vector<KnotTableEntry>& knot_table() {
    const std::string src = "two-bridge knot table: minimum polynomial, z, J(K), alpha";
    static const std::vector<KnotTableEntry> t = {
        {"5_2", 7, 3, IntPoly{1, 2, 1, 1}, Cx(-0.21507985, 1.307141279), 1.32471796, 4.219276205, src},
        {"6_1", 9, 5, IntPoly{1, -2, 3, -1, 1}, Cx(0.104876618, -1.552491820), 1.55603019, 3.955211258, src},
        {"7_4", 15, 11, IntPoly{1, 4, -4, 1}, Cx(2.10278472, 0.665456952), 2.20556943, 4.434378815, src},
        {"7_7", 21, 13, IntPoly{1, -1, 3, -2, 1}, Cx(0.95668457, -1.227185638), 1.55603019, 5.105997169, src},
    };
    return t;
}

double elliptic_tr2B_default(int n) { return 2.0 / (1.0 - std::cos(2 * kPi / n)) + 1.0; }

GeneratorSet elliptic_type_pair(int n, double tr2B) {
    if (n < 3) throw UsageError("elliptic_type_pair: n must be >= 3");
    if (!(tr2B > 0)) throw UsageError("elliptic_type_pair: tr^2 B must be positive");
    double s = std::sin(kPi / n);
    double c = (2 * std::cos(2 * kPi / n) - 1) / (4 * s * s);
    double t = std::sqrt(tr2B);
    Cx disc = std::sqrt(Cx(t * t - 4 * (1 + c)));
    Cx a = (t + disc) / 2.0, d = (t - disc) / 2.0;
    Mat2 X(expi(kPi / n), 0, 0, expi(-kPi / n));
    return GeneratorSet({"X", "Y"}, {X, Mat2(a, 1, c, d)});
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    out.push_back({"figure-eight (A, B) with c = e^{i pi/3}",
                   GeneratorSet({"A", "B"}, {mA(), lower(expi(kPi / 3))}), 1.0, 3,
                   "figure-eight knot group, J = J-tilde = 1", true});
    const auto& fams = gtk_families();
    for (std::size_t i = 0; i < fams.size(); ++i) {
        const auto& f = fams[i];
        for (int n : f.integer_multiple ? std::vector<int>{1, 2} : std::vector<int>{1}) {
            GtkParams p{f.theta_num, f.theta_den, f.integer_multiple ? n * f.k : f.k};
            std::string label = f.integer_multiple ? fmt::format("G(theta,k) {} with n={}", f.label, n)
                                                   : fmt::format("G(theta,k) {}", f.label);
            out.push_back({label, gtk_generators(p), 1.0, f.field_d,
                           "parabolic-type finite-covolume Jorgensen family; " +
                               gtk_identification(static_cast<int>(i), n),
                           f.arithmetic});
        }
    }
    for (const auto& e : arithcomp_table())
        out.push_back({e.label, e.generators(), e.expected_J, e.field_d, e.provenance, true});
    struct SL {
        const char* label;
        Cx sigma, lambda;
        int d;
    };
    for (const auto& s : {SL{"PSL2(O3) via sigma=1, lambda=(1+sqrt(-3))/2", 1, Cx(0.5, kSqrt3 / 2), 3},
                          SL{"PSL2(O7) via sigma=1, lambda=(1+sqrt(-7))/2", 1, Cx(0.5, std::sqrt(7.0) / 2), 7},
                          SL{"PSL2(O11) via sigma=1, lambda=(1+sqrt(-11))/2", 1, Cx(0.5, std::sqrt(11.0) / 2), 11},
                          SL{"PGL2(O3) via sigma=e^(-i pi/6), lambda=i", expi(-kPi / 6), I1, 3}})
        out.push_back({s.label, sigma_lambda_generators(s.sigma, s.lambda), 1.0, s.d,
                       "sigma-lambda normal form of a parabolic-type Jorgensen group", true});
    for (int n : kEllipticOrders)
        out.push_back({fmt::format("elliptic-type pair n={}", n), elliptic_type_pair(n, elliptic_tr2B_default(n)),
                       1.0, std::nullopt, "constructed pair with tr X Y X Y^-1 = 1 (not a claimed lattice)", false});
    return out;
}

std::vector<CatalogEntry> jorgensen_catalog() {
    std::vector<CatalogEntry> out;
    for (auto& e : catalog_entries())
        if (e.expected_J && std::abs(*e.expected_J - 1.0) < 1e-12) out.push_back(std::move(e));
    return out;
}

std::vector<CatalogEntry> arithmetic_catalog() {
    std::vector<CatalogEntry> out;
    for (auto& e : catalog_entries())
        if (e.arithmetic && e.expected_field_d) out.push_back(std::move(e));
    return out;
}

DichotomyResult jorgensen_dichotomy(const Mat2& x, const Mat2& y) {
    DichotomyResult r;
    Mat2 conj = y * x * y.inverse();
    r.j_conj = jorgensen_value(x, conj);
    auto k = classify(x).kind;
    r.x_parabolic = k == MobiusKind::parabolic;
    r.x_elliptic = k == MobiusKind::elliptic;
    r.tr_xyxy = (x * y * x * y.inverse()).trace();
    r.holds = std::abs(r.j_conj - 1.0) <= 1e-9 &&
              (r.x_parabolic || (r.x_elliptic && std::abs(r.tr_xyxy - 1.0) <= 1e-9));
    return r;
}

}  // namespace jnum
