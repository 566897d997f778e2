#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qgl2/rational.hpp"

namespace qgl2 {

// Identifies the quadratic extension Q(sqrt(D)) a Scalar lives in. When D
// is a perfect square the extension is trivial and `root` holds its exact
// square root; Scalars under a trivial tag are stored with zero radical
// part (collapsed on construction).
struct ExtensionTag {
    Rational D{0};
    std::optional<Rational> root{Rational(0)};

    bool trivial() const { return root.has_value(); }

    static ExtensionTag rationals() { return {}; }

    static ExtensionTag radical(const Rational& d) {
        ExtensionTag tag;
        tag.D = d;
        tag.root = sqrt_exact(d);
        return tag;
    }

    friend bool operator==(const ExtensionTag& lhs, const ExtensionTag& rhs) {
        return lhs.D == rhs.D && lhs.root == rhs.root;
    }
};

// Exact field element a + b*sqrt(D). Immutable value type; all operations
// are pure. Mixing Scalars whose radical parts are both nonzero requires
// matching radicands; Scalars with zero radical part combine with anything.
class Scalar {
public:
    Scalar() = default;

    Scalar(const Rational& r) : a_(r) {}
    Scalar(long long n) : a_(n) {}

    Scalar(Rational a, Rational b, ExtensionTag ext) : ext_(std::move(ext)) {
        if (ext_.trivial()) {
            a += b * *ext_.root;
            b = 0;
        }
        a_ = std::move(a);
        b_ = std::move(b);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const ExtensionTag& extension() const { return ext_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Scalar conjugate() const { return Scalar(a_, -b_, ext_); }

    friend Scalar operator-(const Scalar& x) { return Scalar(-x.a_, -x.b_, x.ext_); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        const ExtensionTag& tag = join(x, y);
        return Scalar(x.a_ + y.a_, x.b_ + y.b_, tag);
    }

    friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        const ExtensionTag& tag = join(x, y);
        return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * tag.D,
                      x.a_ * y.b_ + x.b_ * y.a_, tag);
    }

    // Conjugate inverse: 1/(a + b*sqrt(D)) = (a - b*sqrt(D)) / (a^2 - b^2 D).
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        const Rational norm = a_ * a_ - b_ * b_ * ext_.D;
        // norm == 0 with x != 0 would force sqrt(D) rational, and those
        // tags collapse at construction.
        assert(norm != 0);
        return Scalar(a_ / norm, -b_ / norm, ext_);
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        if (x.b_ == 0) return true;
        return x.ext_.D == y.ext_.D;
    }

private:
    static const ExtensionTag& join(const Scalar& x, const Scalar& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.ext_.D != y.ext_.D)
            throw std::invalid_argument("Scalar: mismatched extension tags");
        if (x.b_ != 0) return x.ext_;
        if (y.b_ != 0) return y.ext_;
        return x.ext_.trivial() && !y.ext_.trivial() ? y.ext_ : x.ext_;
    }

    Rational a_{0};
    Rational b_{0};
    ExtensionTag ext_{};
};

// Rewrites a + b*sqrt(D) as the rational a + b*s when D = s^2 is a perfect
// square. Scalars constructed through the Scalar ctor are already in this
// form; collapse is idempotent.
inline Scalar collapse(const Scalar& x) {
    auto root = sqrt_exact(x.extension().D);
    if (!root) return x;
    ExtensionTag tag = x.extension();
    tag.root = root;
    return Scalar(x.rational_part(), x.radical_part(), tag);
}

inline std::string to_string(const Scalar& x) {
    if (x.is_rational()) return to_string(x.rational_part());
    return to_string(x.rational_part()) + " + " + to_string(x.radical_part()) +
           "*sqrt(" + to_string(x.extension().D) + ")";
}

// Inverse of to_string: `n`, `n/d`, or `a + b*sqrt(D)`.
inline std::optional<Scalar> parse_scalar(std::string_view text) {
    const auto sep = text.find(" + ");
    if (sep == std::string_view::npos) {
        auto r = parse_rational(text);
        if (!r) return std::nullopt;
        return Scalar(*r);
    }
    auto a = parse_rational(text.substr(0, sep));
    if (!a) return std::nullopt;
    std::string_view rest = text.substr(sep + 3);
    const auto star = rest.find("*sqrt(");
    if (star == std::string_view::npos || rest.back() != ')') return std::nullopt;
    auto b = parse_rational(rest.substr(0, star));
    auto d = parse_rational(rest.substr(star + 6, rest.size() - star - 7));
    if (!b || !d) return std::nullopt;
    return Scalar(*a, *b, ExtensionTag::radical(*d));
}

}  // namespace qgl2
