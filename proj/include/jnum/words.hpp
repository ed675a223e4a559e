#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jnum/errors.hpp"
#include "jnum/mat2.hpp"

namespace jnum {

inline constexpr int kMaxWordLen = 16;
inline constexpr int kMaxArity = 8;

// Letter codes used by the enumerator: 2*g for generator g, 2*g+1 for its inverse.
inline int letter_code(int gen, bool inv) { return 2 * gen + (inv ? 1 : 0); }

class Word {
public:
    struct Letter {
        int gen;
        int exp;
        bool operator==(const Letter&) const = default;
    };

    Word() = default;
    explicit Word(std::vector<Letter> letters);  // freely reduces
    static Word gen(int g, int exp = 1) { return Word({{g, exp}}); }
    static Word from_codes(std::span<const int> codes);

    const std::vector<Letter>& letters() const { return letters_; }
    int length() const;
    bool empty() const { return letters_.empty(); }
    Word inverse() const;
    Word operator*(const Word& o) const;
    Word pow(int e) const;
    std::vector<int> codes() const;
    std::string str(const std::vector<std::string>& names) const;
    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

class GeneratorSet {
public:
    GeneratorSet() = default;
    GeneratorSet(std::vector<std::string> names, std::vector<Mat2> mats);

    int arity() const { return static_cast<int>(mats_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Mat2>& mats() const { return mats_; }
    const Mat2& operator[](int g) const { return mats_.at(g); }
    const Mat2& by_code(int code) const { return letters_[code]; }
    int index_of(std::string_view name) const;  // -1 if absent

private:
    std::vector<std::string> names_;
    std::vector<Mat2> mats_;
    std::vector<Mat2> letters_;
};

Mat2 evaluate(const GeneratorSet& gens, const Word& w);

// Grammar: factor* where factor = (NAME | '(' word ')') ['^' int].
// Names are matched longest-first; whitespace is ignored.
Word parse_word(std::string_view text, const std::vector<std::string>& names);
inline Word parse_word(std::string_view text, const GeneratorSet& gens) {
    return parse_word(text, gens.names());
}

// 1 + sum_{l=1..L} 2g(2g-1)^(l-1)
std::uint64_t reduced_word_count(int arity, int max_len);

void check_enumeration_args(const GeneratorSet& gens, int max_len);

// Calls f(codes, matrix) for every freely reduced word of length <= max_len,
// shortest first, each exactly once, starting with the empty word.
template <class F>
void for_each_word(const GeneratorSet& gens, int max_len, F&& f) {
    check_enumeration_args(gens, max_len);
    const int nl = 2 * gens.arity();
    int codes[kMaxWordLen];
    Mat2 prod[kMaxWordLen + 1];
    f(std::span<const int>(codes, 0), prod[0]);
    for (int len = 1; len <= max_len; ++len) {
        int depth = 0;
        codes[0] = -1;
        while (depth >= 0) {
            int next = codes[depth] + 1;
            if (depth > 0 && next == (codes[depth - 1] ^ 1)) ++next;
            if (next >= nl) {
                --depth;
                continue;
            }
            codes[depth] = next;
            prod[depth + 1] = prod[depth] * gens.by_code(next);
            if (depth + 1 == len) {
                f(std::span<const int>(codes, len), prod[len]);
            } else {
                ++depth;
                codes[depth] = -1;
            }
        }
    }
}

struct WordElement {
    Word word;
    Mat2 m;
};

std::vector<WordElement> enumerate(const GeneratorSet& gens, int max_len);
std::uint64_t count_words(const GeneratorSet& gens, int max_len);

// One representative per projective class (entries quantized to `grid`),
// shortest word first. +-I is dropped unless keep_identity.
std::vector<WordElement> distinct_elements(const GeneratorSet& gens, int max_len,
                                           bool keep_identity = false, double grid = 1e-6);

struct ScalarBound {
    double value = 0;
    Word witness;
    Mat2 element;
};

ScalarBound min_c_entry(const GeneratorSet& gens, int max_len);

enum class DefectMode {
    primitive,       // skip elements whose trace is that of a proper power
    all_loxodromic,  // literal minimum over every loxodromic/hyperbolic element
};

ScalarBound min_loxodromic_defect(const GeneratorSet& gens, int max_len,
                                  DefectMode mode = DefectMode::primitive);

struct PairWitness {
    JReport report;
    Word wx, wy;
};

PairWitness jtilde_upper_bound(const GeneratorSet& gens, int max_len);

// First non-elementary pair with J < threshold, if any.
std::optional<PairWitness> find_jorgensen_violation(const GeneratorSet& gens, int max_len,
                                                    double threshold);

struct SweepReport {
    std::size_t elements = 0;
    std::size_t pairs_checked = 0;
    std::size_t violations = 0;
    std::optional<PairWitness> min_pair;  // smallest J among non-elementary pairs
};

// Checks J >= 1 - eps_j for every non-elementary pair that could violate it.
SweepReport inequality_sweep(const GeneratorSet& gens, int max_len);

}  // namespace jnum
