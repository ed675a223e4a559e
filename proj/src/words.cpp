#include "jnum/words.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <unordered_set>

#include <fmt/core.h>

namespace jnum {

Word::Word(std::vector<Letter> letters) {
    for (const auto& l : letters) {
        if (l.gen < 0) throw UsageError("Word: negative generator index");
        if (l.exp == 0) continue;
        if (!letters_.empty() && letters_.back().gen == l.gen) {
            letters_.back().exp += l.exp;
            if (letters_.back().exp == 0) letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }
}

Word Word::from_codes(std::span<const int> codes) {
    std::vector<Letter> v;
    v.reserve(codes.size());
    for (int c : codes) v.push_back({c / 2, (c & 1) ? -1 : 1});
    return Word(std::move(v));
}

int Word::length() const {
    int n = 0;
    for (const auto& l : letters_) n += std::abs(l.exp);
    return n;
}

Word Word::inverse() const {
    std::vector<Letter> v(letters_.rbegin(), letters_.rend());
    for (auto& l : v) l.exp = -l.exp;
    return Word(std::move(v));
}

Word Word::operator*(const Word& o) const {
    std::vector<Letter> v = letters_;
    v.insert(v.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(v));
}

Word Word::pow(int e) const {
    Word base = e < 0 ? inverse() : *this;
    Word r;
    for (int k = std::abs(e); k > 0; --k) r = r * base;
    return r;
}

std::vector<int> Word::codes() const {
    std::vector<int> out;
    for (const auto& l : letters_)
        for (int k = 0; k < std::abs(l.exp); ++k) out.push_back(letter_code(l.gen, l.exp < 0));
    return out;
}

std::string Word::str(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += ' ';
        s += l.gen < static_cast<int>(names.size()) ? names[l.gen] : fmt::format("g{}", l.gen);
        if (l.exp != 1) s += fmt::format("^{}", l.exp);
    }
    return s;
}

GeneratorSet::GeneratorSet(std::vector<std::string> names, std::vector<Mat2> mats)
    : names_(std::move(names)), mats_(std::move(mats)) {
    if (mats_.empty() || static_cast<int>(mats_.size()) > kMaxArity)
        throw UsageError(fmt::format("generator set arity must be 1..{}", kMaxArity));
    if (names_.size() != mats_.size()) throw UsageError("generator names/matrices size mismatch");
    for (const auto& m : mats_) {
        letters_.push_back(m);
        letters_.push_back(m.inverse());
    }
}

int GeneratorSet::index_of(std::string_view name) const {
    for (int i = 0; i < arity(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

Mat2 evaluate(const GeneratorSet& gens, const Word& w) {
    Mat2 r;
    for (const auto& l : w.letters()) {
        if (l.gen >= gens.arity())
            throw UsageError(fmt::format("evaluate: generator index {} out of range", l.gen));
        const Mat2& m = gens.by_code(letter_code(l.gen, l.exp < 0));
        for (int k = std::abs(l.exp); k > 0; --k) r = r * m;
    }
    return r;
}

namespace {

struct WordParser {
    std::string_view s;
    const std::vector<std::string>& names;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw UsageError(fmt::format("word parse error at {}: {}", pos, msg));
    }

    int exponent() {
        skip();
        if (pos >= s.size() || s[pos] != '^') return 1;
        ++pos;
        skip();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos++] - '0');
            if (v > 1000) fail("exponent too large");
        }
        return static_cast<int>(neg ? -v : v);
    }

    Word word() {
        Word w;
        for (;;) {
            skip();
            if (pos >= s.size() || s[pos] == ')') return w;
            Word f;
            if (s[pos] == '(') {
                ++pos;
                f = word();
                skip();
                if (pos >= s.size() || s[pos] != ')') fail("missing ')'");
                ++pos;
            } else {
                int best = -1;
                std::size_t best_len = 0;
                for (std::size_t g = 0; g < names.size(); ++g) {
                    const auto& n = names[g];
                    if (n.size() > best_len && s.substr(pos, n.size()) == n) {
                        best = static_cast<int>(g);
                        best_len = n.size();
                    }
                }
                if (best < 0) fail(fmt::format("unknown generator near '{}'", s.substr(pos, 8)));
                pos += best_len;
                f = Word::gen(best);
            }
            w = w * f.pow(exponent());
        }
    }
};

struct QKey {
    std::array<std::int64_t, 8> v;
    bool operator==(const QKey&) const = default;
};

struct QKeyHash {
    std::size_t operator()(const QKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : k.v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

std::int64_t quant(double x, double grid) {
    double q = std::round(x / grid);
    if (std::abs(q) > 9e18) throw NumericRangeError("dedup: entry too large to quantize");
    return static_cast<std::int64_t>(q);
}

// sign fixed by the first entry that is clearly nonzero
QKey projective_key(const Mat2& m, double grid) {
    std::array<Cx, 4> e{m.a(), m.b(), m.c(), m.d()};
    double sign = 1;
    for (Cx z : e) {
        if (std::abs(z.real()) > 10 * grid) {
            sign = z.real() > 0 ? 1 : -1;
            break;
        }
        if (std::abs(z.imag()) > 10 * grid) {
            sign = z.imag() > 0 ? 1 : -1;
            break;
        }
    }
    QKey k;
    for (int i = 0; i < 4; ++i) {
        k.v[2 * i] = quant(sign * e[i].real(), grid);
        k.v[2 * i + 1] = quant(sign * e[i].imag(), grid);
    }
    return k;
}

// trace-squared lookup with a one-cell neighbourhood
class TraceSet {
public:
    explicit TraceSet(double grid) : grid_(grid) {}
    void insert(Cx t2) { cells_.insert(key(t2.real(), t2.imag())); }
    bool contains(Cx t2) const {
        auto [r, i] = cell(t2);
        for (std::int64_t dr = -1; dr <= 1; ++dr)
            for (std::int64_t di = -1; di <= 1; ++di)
                if (cells_.count(pack(r + dr, i + di))) return true;
        return false;
    }

private:
    std::pair<std::int64_t, std::int64_t> cell(Cx z) const {
        return {static_cast<std::int64_t>(std::floor(z.real() / grid_)),
                static_cast<std::int64_t>(std::floor(z.imag() / grid_))};
    }
    static std::uint64_t pack(std::int64_t r, std::int64_t i) {
        return (static_cast<std::uint64_t>(r) * 0x9e3779b97f4a7c15ull) ^ static_cast<std::uint64_t>(i);
    }
    std::uint64_t key(double re, double im) const {
        auto [r, i] = cell({re, im});
        return pack(r, i);
    }
    double grid_;
    std::unordered_set<std::uint64_t> cells_;
};

struct PoolEntry {
    Mat2 m;
    Word w;
    double defect;
    std::vector<SpherePoint> fix;
};

std::vector<PoolEntry> pool_by_defect(const GeneratorSet& gens, int max_len) {
    std::vector<PoolEntry> pool;
    for (auto& e : distinct_elements(gens, max_len)) {
        Cx t = e.m.trace();
        pool.push_back({e.m, std::move(e.word), std::abs(t * t - 4.0), fixed_points(e.m)});
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const PoolEntry& x, const PoolEntry& y) { return x.defect < y.defect; });
    return pool;
}

double commutator_defect(const Mat2& x, const Mat2& y) {
    return std::abs(commutator(x, y).trace() - 2.0);
}

bool nonelementary_pair(const PoolEntry& x, const PoolEntry& y, double comm_defect) {
    return comm_defect > tol().eps_cx && fixed_sets_disjoint(x.fix, y.fix);
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
    WordParser p{text, names};
    Word w = p.word();
    p.skip();
    if (p.pos != text.size()) p.fail("unbalanced ')'");
    return w;
}

std::uint64_t reduced_word_count(int arity, int max_len) {
    if (arity < 1 || max_len < 0) throw UsageError("reduced_word_count: bad arguments");
    std::uint64_t total = 1, layer = 2ull * arity;
    for (int l = 1; l <= max_len; ++l) {
        total += layer;
        layer *= 2ull * arity - 1;
    }
    return total;
}

void check_enumeration_args(const GeneratorSet& gens, int max_len) {
    if (max_len < 0 || max_len > kMaxWordLen)
        throw UsageError(fmt::format("max_len must be in 0..{}", kMaxWordLen));
    if (gens.arity() < 1 || gens.arity() > kMaxArity) throw UsageError("bad generator arity");
}

std::vector<WordElement> enumerate(const GeneratorSet& gens, int max_len) {
    std::vector<WordElement> out;
    for_each_word(gens, max_len, [&](std::span<const int> c, const Mat2& m) {
        out.push_back({Word::from_codes(c), m});
    });
    return out;
}

std::uint64_t count_words(const GeneratorSet& gens, int max_len) {
    std::uint64_t n = 0;
    for_each_word(gens, max_len, [&](std::span<const int>, const Mat2&) { ++n; });
    return n;
}

std::vector<WordElement> distinct_elements(const GeneratorSet& gens, int max_len,
                                           bool keep_identity, double grid) {
    std::unordered_set<QKey, QKeyHash> seen;
    std::vector<WordElement> out;
    for_each_word(gens, max_len, [&](std::span<const int> c, const Mat2& m) {
        if (!keep_identity && is_pm_identity(m)) return;
        if (seen.insert(projective_key(m, grid)).second) out.push_back({Word::from_codes(c), m});
    });
    return out;
}

ScalarBound min_c_entry(const GeneratorSet& gens, int max_len) {
    const Mat2 a(1, 1, 0, 1);
    bool has_a = std::any_of(gens.mats().begin(), gens.mats().end(),
                             [&](const Mat2& m) { return proj_equal(m, a); });
    if (!has_a) throw UsageError("min_c_entry: generators must contain [[1,1],[0,1]]");
    std::optional<ScalarBound> best;
    for_each_word(gens, max_len, [&](std::span<const int> c, const Mat2& m) {
        double v = std::abs(m.c());
        if (v > tol().eps_cx && (!best || v < best->value - 1e-15))
            best = ScalarBound{v, Word::from_codes(c), m};
    });
    if (!best) throw EmptySearchError("min_c_entry: no element with nonzero c");
    return *best;
}

ScalarBound min_loxodromic_defect(const GeneratorSet& gens, int max_len, DefectMode mode) {
    check_enumeration_args(gens, max_len);
    constexpr double kPowerCap = 1e6;
    TraceSet powers(1e-6);
    if (mode == DefectMode::primitive && max_len >= 2) {
        for_each_word(gens, max_len / 2, [&](std::span<const int> c, const Mat2& m) {
            if (c.empty() || !is_loxodromic_like(m)) return;
            Cx t = m.trace();
            Cx prev = 2.0, cur = t;
            int kmax = max_len / static_cast<int>(c.size());
            for (int k = 2; k <= kmax; ++k) {
                Cx next = t * cur - prev;
                prev = cur;
                cur = next;
                Cx t2 = cur * cur;
                if (std::abs(t2) > kPowerCap) break;
                powers.insert(t2);
            }
        });
    }
    std::optional<ScalarBound> best;
    for_each_word(gens, max_len, [&](std::span<const int> c, const Mat2& m) {
        if (c.empty()) return;
        Cx t = m.trace();
        double v = std::abs(t * t - 4.0);
        if (best && v >= best->value - 1e-15) return;
        if (!is_loxodromic_like(m)) return;
        if (mode == DefectMode::primitive && powers.contains(t * t)) return;
        best = ScalarBound{v, Word::from_codes(c), m};
    });
    if (!best) throw EmptySearchError("min_loxodromic_defect: no loxodromic element found");
    return *best;
}

PairWitness jtilde_upper_bound(const GeneratorSet& gens, int max_len) {
    auto pool = pool_by_defect(gens, max_len);
    std::optional<PairWitness> best;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& x = pool[i];
        if (best && x.defect >= best->report.value) break;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (i == j) continue;
            const auto& y = pool[j];
            double cd = commutator_defect(x.m, y.m);
            double v = x.defect + cd;
            if (best && v >= best->report.value - 1e-15) continue;
            if (!nonelementary_pair(x, y, cd)) continue;
            best = PairWitness{jorgensen_pair(x.m, y.m), x.w, y.w};
        }
    }
    if (!best) throw EmptySearchError("jtilde_upper_bound: no non-elementary pair found");
    return *best;
}

std::optional<PairWitness> find_jorgensen_violation(const GeneratorSet& gens, int max_len,
                                                    double threshold) {
    auto pool = pool_by_defect(gens, max_len);
    for (const auto& x : pool) {
        if (x.defect >= threshold) break;
        for (const auto& y : pool) {
            if (&x == &y) continue;
            double cd = commutator_defect(x.m, y.m);
            if (x.defect + cd >= threshold) continue;
            if (nonelementary_pair(x, y, cd)) return PairWitness{jorgensen_pair(x.m, y.m), x.w, y.w};
        }
    }
    return std::nullopt;
}

SweepReport inequality_sweep(const GeneratorSet& gens, int max_len) {
    auto pool = pool_by_defect(gens, max_len);
    SweepReport rep;
    rep.elements = pool.size();
    const double bound = 1.0 - tol().eps_j;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& x = pool[i];
        if (x.defect >= bound && x.defect >= best) break;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (i == j) continue;
            const auto& y = pool[j];
            ++rep.pairs_checked;
            double cd = commutator_defect(x.m, y.m);
            double v = x.defect + cd;
            if (v >= bound && v >= best) continue;
            if (!nonelementary_pair(x, y, cd)) continue;
            if (v < bound) ++rep.violations;
            if (v < best) {
                best = v;
                rep.min_pair = PairWitness{jorgensen_pair(x.m, y.m), x.w, y.w};
            }
        }
    }
    return rep;
}

}  // namespace jnum
