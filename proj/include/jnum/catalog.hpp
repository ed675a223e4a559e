#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jnum/arith.hpp"
#include "jnum/mat2.hpp"
#include "jnum/poly.hpp"
#include "jnum/words.hpp"

namespace jnum {

struct GtkParams {
    int theta_num = 0;
    int theta_den = 1;
    double k = 0;
    double theta() const { return kPi * theta_num / theta_den; }
};

void validate(const GtkParams& p);  // UsageError
Mat2 gtk_B(double theta, double k);  // [[0, -i e^{-i th}], [-i e^{i th}, 2k e^{i th}]]
GeneratorSet gtk_generators(const GtkParams& p);

GeneratorSet sigma_lambda_generators(Cx sigma, Cx lambda);  // {A, [[0,-1/s],[s,l]]}

inline const std::vector<int> kBianchiDs = {1, 2, 3, 7, 11};
GeneratorSet bianchi_generators(int d);  // {A, S, T}

struct Relator {
    std::string text;
    Word word;
};
std::vector<Relator> bianchi_relations(int d);

struct IdentityCheck {
    std::string group;
    std::string label;
    double deviation = 0;
    bool holds = false;
    bool as_stated = true;  // false for our corrected form of a stated identity
};

struct IdentityReport {
    std::vector<IdentityCheck> entries;
    bool all_hold() const;
    double max_deviation() const;
};

IdentityReport verify_relations(int d);
IdentityReport losid_identity_suite();
IdentityReport sigma_lambda_identity_suite();

// Parabolic-type families with J = 1 (0 <= theta <= pi/2, k >= 0).
struct GtkFamily {
    std::string label;
    int theta_num, theta_den;
    double k;              // k itself, or the unit multiplied by n
    bool integer_multiple; // k = n * k_unit for n in Z
    bool arithmetic;
    std::optional<int> field_d;
};
const std::vector<GtkFamily>& gtk_families();

struct GtkMatch {
    bool listed = false;
    int family = -1;
    std::optional<int> n;
    bool exact = true;  // false when only a Jorgensen-equivalence symmetry was used
    std::string symmetry;
    std::string identification;
};
GtkMatch match_gtk_family(const GtkParams& p);
std::string gtk_identification(int family, std::optional<int> n);

struct CatalogEntry {
    std::string label;
    GeneratorSet generators;
    std::optional<double> expected_J;
    std::optional<int> expected_field_d;
    std::string provenance;
    bool arithmetic = false;
};

struct ArithcompEntry {
    std::string label;
    Cx c;
    int b_order = 0;  // 0 for parabolic B
    double expected_J;
    int field_d;
    std::string provenance;
    GeneratorSet generators() const;
};
const std::vector<ArithcompEntry>& arithcomp_table();

struct KnotTableEntry {
    std::string label;
    int p, q;
    IntPoly min_poly;
    Cx z;
    double J;
    double alpha;
    std::string provenance;
};
const std::vector<KnotTableEntry>& knot_table();
inline constexpr double kGeodesicTraceBound = 4.704819230;  // 2 cosh(3/2)
inline constexpr double kGeodesicTraceBoundSq = 22.13532399;
inline constexpr double kGeodesicDefectBound = 18.13532399;

// X elliptic of order n (tr X = 2cos(pi/n)), Y with tr^2 Y = tr2B and
// tr X Y X Y^-1 = 1, so tr[X,Y] = 2cos(2pi/n) + 1.
GeneratorSet elliptic_type_pair(int n, double tr2B);
double elliptic_tr2B_default(int n);

std::vector<CatalogEntry> catalog_entries();
std::vector<CatalogEntry> jorgensen_catalog();  // expected_J == 1
std::vector<CatalogEntry> arithmetic_catalog();  // expected_field_d present

struct DichotomyResult {
    double j_conj = 0;    // J(X, Y X Y^-1)
    bool x_parabolic = false;
    bool x_elliptic = false;
    Cx tr_xyxy;           // tr X Y X Y^-1
    bool holds = false;
};
DichotomyResult jorgensen_dichotomy(const Mat2& x, const Mat2& y);

}  // namespace jnum
