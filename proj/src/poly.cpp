#include "jnum/poly.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include <fmt/core.h>

#include "jnum/errors.hpp"

namespace jnum {

IntPoly::Coeff checked_add(IntPoly::Coeff x, IntPoly::Coeff y) {
    IntPoly::Coeff r;
    if (__builtin_add_overflow(x, y, &r)) throw NumericRangeError("integer polynomial overflow");
    return r;
}

IntPoly::Coeff checked_mul(IntPoly::Coeff x, IntPoly::Coeff y) {
    IntPoly::Coeff r;
    if (__builtin_mul_overflow(x, y, &r)) throw NumericRangeError("integer polynomial overflow");
    return r;
}

IntPoly::IntPoly(std::vector<Coeff> c) : c_(std::move(c)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Coeff c, int deg) {
    if (deg < 0) throw UsageError("monomial: negative degree");
    std::vector<Coeff> v(deg + 1, 0);
    v[deg] = c;
    return IntPoly(std::move(v));
}

int IntPoly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

IntPoly::Coeff IntPoly::max_abs_coeff() const {
    Coeff m = 0;
    for (Coeff x : c_) {
        if (x == INT64_MIN) throw NumericRangeError("coefficient out of range");
        m = std::max(m, x < 0 ? -x : x);
    }
    return m;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = checked_add(coeff(k), o.coeff(k));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Coeff> r(c_.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = checked_mul(c_[k], -1);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Coeff> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shift_down(int v) const {
    if (v < 0 || (v > 0 && valuation() < v && !is_zero()))
        throw UsageError("shift_down: valuation too small");
    if (is_zero()) return {};
    return IntPoly(std::vector<Coeff>(c_.begin() + v, c_.end()));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& o) const {
    if (o.is_zero()) throw DegenerateInputError("divide_exact: division by zero polynomial");
    if (is_zero()) return IntPoly{};
    if (degree() < o.degree()) return std::nullopt;
    std::vector<Coeff> rem = c_;
    std::vector<Coeff> q(degree() - o.degree() + 1, 0);
    const Coeff lead = o.leading();
    for (int k = degree() - o.degree(); k >= 0; --k) {
        Coeff top = rem[k + o.degree()];
        if (top % lead != 0) return std::nullopt;
        Coeff f = top / lead;
        q[k] = f;
        for (int j = 0; j <= o.degree(); ++j)
            rem[k + j] = checked_add(rem[k + j], checked_mul(-f, o.c_[j]));
    }
    if (std::any_of(rem.begin(), rem.end(), [](Coeff x) { return x != 0; })) return std::nullopt;
    return IntPoly(std::move(q));
}

Cx IntPoly::eval(Cx z) const {
    Cx r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + static_cast<double>(*it);
    return r;
}

std::string IntPoly::text() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(c_[k]);
    }
    return s;
}

IntPoly IntPoly::parse(std::string_view text) {
    std::vector<Coeff> v;
    while (true) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty() && item.front() == '+') item.remove_prefix(1);
        Coeff x = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (item.empty() || ec != std::errc{} || p != item.data() + item.size())
            throw UsageError(fmt::format("bad polynomial coefficient '{}'", item));
        v.push_back(x);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return IntPoly(std::move(v));
}

std::string IntPoly::pretty(const char* var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        Coeff x = c_[k];
        if (x == 0) continue;
        Coeff ax = x < 0 ? -x : x;
        if (s.empty()) s += x < 0 ? "-" : "";
        else s += x < 0 ? " - " : " + ";
        if (ax != 1 || k == 0) s += std::to_string(ax);
        if (k >= 1) s += var;
        if (k >= 2) s += fmt::format("^{}", k);
    }
    return s;
}

PolyMat2 PolyMat2::operator*(const PolyMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 PolyMat2::eval(Cx z) const { return Mat2(a.eval(z), b.eval(z), c.eval(z), d.eval(z)); }

}  // namespace jnum
