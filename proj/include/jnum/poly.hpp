#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jnum/mat2.hpp"

namespace jnum {

// Integer polynomial in z, ascending coefficients, no trailing zeros.
// Arithmetic is overflow-checked (NumericRangeError).
class IntPoly {
public:
    using Coeff = std::int64_t;

    IntPoly() = default;
    IntPoly(std::initializer_list<Coeff> c) : IntPoly(std::vector<Coeff>(c)) {}
    explicit IntPoly(std::vector<Coeff> c);
    static IntPoly monomial(Coeff c, int deg);

    const std::vector<Coeff>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Coeff coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }
    Coeff leading() const { return c_.empty() ? 0 : c_.back(); }
    Coeff constant() const { return coeff(0); }
    int valuation() const;  // -1 for zero
    Coeff max_abs_coeff() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly&) const = default;

    IntPoly shift_down(int v) const;  // divide by z^v (requires valuation >= v)
    // Exact division over Z; nullopt if o does not divide *this.
    std::optional<IntPoly> divide_exact(const IntPoly& o) const;

    Cx eval(Cx z) const;

    std::string text() const;                          // "1,2,1,1"
    static IntPoly parse(std::string_view text);       // inverse of text()
    std::string pretty(const char* var = "z") const;   // "z^3 + z^2 + 2z + 1"

private:
    std::vector<Coeff> c_;
};

struct PolyMat2 {
    IntPoly a, b, c, d;
    PolyMat2 operator*(const PolyMat2& o) const;
    IntPoly det() const { return a * d - b * c; }
    Mat2 eval(Cx z) const;
};

IntPoly::Coeff checked_add(IntPoly::Coeff x, IntPoly::Coeff y);
IntPoly::Coeff checked_mul(IntPoly::Coeff x, IntPoly::Coeff y);

}  // namespace jnum
