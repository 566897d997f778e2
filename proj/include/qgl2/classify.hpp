#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qgl2/plane.hpp"

namespace qgl2 {

// Point [a : b] on the projective line with F(a, b) = 0, where
// F(a, b) = h0*a^2 + (1 - p0)*a*b + r0*b^2. Normalized so the first
// nonzero coordinate is 1; [0 : 1] is the root at infinity (r0 = 0).
struct ProjectiveRoot {
    Scalar a, b;

    bool at_infinity() const { return a.is_zero(); }
};

struct RootPair {
    ProjectiveRoot first, second;
    ExtensionTag extension;
};

enum class CaseTag { DrinfeldJimbo, Jordanian, Classical, Degenerate };

inline const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::DrinfeldJimbo: return "DrinfeldJimbo";
        case CaseTag::Jordanian: return "Jordanian";
        case CaseTag::Classical: return "Classical";
        case CaseTag::Degenerate: return "Degenerate";
    }
    return "?";
}

struct Classification {
    CaseTag tag{};
    Scalar q{1};               // always 1 for Drinfeld-Jimbo outputs
    std::optional<Scalar> p;   // Drinfeld-Jimbo parameter
    Scalar h{0};               // always 0 for Jordanian outputs
    std::optional<Scalar> h_prime;
    Scalar discriminant;
    ExtensionTag extension;
    std::optional<Transform2> transform;
    bool verified = false;
    std::string note;
};

inline Rational discriminant(const Rational& h0, const Rational& r0,
                             const Rational& p0) {
    return (p0 - 1) * (p0 - 1) - 4 * h0 * r0;
}

namespace detail {

// Component-wise order used only to pick a deterministic root ordering:
// finite roots before infinity, then the +sqrt(D) root first (descending
// by rational part, then radical part). On the distinct-root quadratic
// this puts t = ((p0-1)+sqrt(D))/(2 r0) in the first row.
inline bool scalar_less(const Scalar& x, const Scalar& y) {
    if (x.rational_part() != y.rational_part())
        return x.rational_part() > y.rational_part();
    return x.radical_part() > y.radical_part();
}

inline bool root_less(const ProjectiveRoot& x, const ProjectiveRoot& y) {
    if (x.at_infinity() != y.at_infinity()) return y.at_infinity();
    if (scalar_less(x.a, y.a)) return true;
    if (scalar_less(y.a, x.a)) return false;
    return scalar_less(x.b, y.b);
}

}  // namespace detail

// The two roots of F(a, b) over Q or Q(sqrt(D)), D = (p0-1)^2 - 4*h0*r0,
// ordered by the deterministic rule above. Distinct iff D != 0.
inline RootPair projective_roots(const Rational& h0, const Rational& r0,
                                 const Rational& p0) {
    if (h0 == 0 && r0 == 0 && p0 == 1)
        throw std::domain_error("projective_roots: form identically zero");
    const Scalar one(1), zero(0);
    ProjectiveRoot r1, r2;
    ExtensionTag tag = ExtensionTag::rationals();
    if (r0 != 0) {
        const Rational d = discriminant(h0, r0, p0);
        tag = ExtensionTag::radical(d);
        const Scalar sqrt_d = tag.trivial() ? Scalar(*tag.root)
                                            : Scalar(Rational(0), Rational(1), tag);
        const Scalar half_inv_r0 = Scalar(Rational(1, 2) / r0);
        const Scalar shift = Scalar(p0 - 1);
        r1 = {one, (shift + sqrt_d) * half_inv_r0};
        r2 = {one, (shift - sqrt_d) * half_inv_r0};
    } else {
        // F = a*(h0*a + (1-p0)*b): root at infinity plus a finite root.
        r1 = {zero, one};
        if (h0 == 0)
            r2 = {one, zero};
        else if (p0 != 1)
            r2 = {one, Scalar(h0 / (p0 - 1))};
        else
            r2 = {zero, one};  // double root at infinity (D = 0)
        tag = ExtensionTag::rationals();
    }
    if (detail::root_less(r2, r1)) std::swap(r1, r2);
    return {r1, r2, tag};
}

// Eq-style closed form for the Drinfeld-Jimbo parameter from the two roots
// (r0 != 0 case, rows (1, t1), (1, t2)). The caller must ensure the
// denominator h0 + t2 - p0*t1 + r0*t1*t2 is nonzero, swapping t1 and t2
// first if needed.
inline Scalar case1_p(const Scalar& h0, const Scalar& r0, const Scalar& p0,
                      const Scalar& t1, const Scalar& t2) {
    const Scalar den = h0 + t2 - p0 * t1 + r0 * t1 * t2;
    if (den.is_zero()) throw std::domain_error("case1_p: zero denominator");
    const Scalar num = h0 + t1 - p0 * t2 + r0 * t1 * t2;
    return -(num / den);
}

// Double root t = (p0-1)/(2 r0) of the dehomogenized form; also equals
// 2 h0/(p0-1) when p0 != 1.
inline Scalar case2_t(const Rational& h0, const Rational& r0, const Rational& p0) {
    if (r0 == 0) throw std::domain_error("case2_t: r0 must be nonzero");
    const Rational t = (p0 - 1) / (2 * r0);
    if (p0 != 1) assert(t == 2 * h0 / (p0 - 1));
    return Scalar(t);
}

inline Scalar case2_hprime(const Scalar& h0, const Scalar& t) {
    const Scalar den = h0 + t;
    if (den.is_zero())
        throw std::domain_error("case2_hprime: zero denominator (degenerate orbit)");
    return h0 / den;
}

inline Transform2 transform_from_roots(const RootPair& roots) {
    return {roots.first.a, roots.first.b, roots.second.a, roots.second.b};
}

inline Plane canonical_plane(const Classification& c) {
    switch (c.tag) {
        case CaseTag::DrinfeldJimbo: return dj_plane(c.q, *c.p);
        case CaseTag::Jordanian: return jordanian_plane(c.h, *c.h_prime);
        case CaseTag::Classical: return dj_plane(Scalar(1), Scalar(1));
        case CaseTag::Degenerate: break;
    }
    throw std::logic_error("canonical_plane: degenerate classification");
}

inline Classification classify(const Rational& h0, const Rational& r0,
                               const Rational& p0) {
    Classification out;
    const Rational d = discriminant(h0, r0, p0);
    out.discriminant = Scalar(d);
    out.extension = ExtensionTag::rationals();
    const Plane input = input_plane(Scalar(h0), Scalar(r0), Scalar(p0));

    auto verify_against = [&](const Transform2& s, const Plane& target) {
        const auto transformed = transform_diff(input, s);
        return transformed.ok() && plane_equal(*transformed, target);
    };

    if (d != 0) {
        // Case I: two distinct projective roots give the rows of S.
        const RootPair roots = projective_roots(h0, r0, p0);
        out.extension = roots.extension;
        Transform2 s = transform_from_roots(roots);
        DiffCoeffs c = diff_transform_coeffs(input, s);
        if (c.xieta.is_zero()) {
            s = s.swapped_rows();
            c = diff_transform_coeffs(input, s);
        }
        assert(!c.xieta.is_zero());  // the two coefficients cannot both vanish
        out.tag = CaseTag::DrinfeldJimbo;
        out.q = Scalar(1);
        out.p = -(c.etaxi / c.xieta);
        out.transform = s;
        out.verified = verify_against(s, dj_plane(out.q, *out.p));
        if (out.p->is_zero())
            out.note = "p = 0: one barred word reduces to zero; whether this "
                       "parameter value yields a well-defined GL quantum group "
                       "is not settled";
        return out;
    }

    // Case II: double root.
    if (r0 == 0) {
        // (p0-1)^2 = 0 here, so p0 = 1 and the plane is already canonical.
        if (h0 == 0) {
            out.tag = CaseTag::Classical;
            out.transform = Transform2::identity();
            out.verified = verify_against(*out.transform, dj_plane(Scalar(1), Scalar(1)));
        } else {
            out.tag = CaseTag::Jordanian;
            out.h_prime = Scalar(h0);
            out.transform = Transform2::identity();
            out.verified = verify_against(*out.transform, jordanian_plane(out.h, *out.h_prime));
        }
        return out;
    }

    const Scalar t = case2_t(h0, r0, p0);
    if (h0 == 0) {
        // p0 = 1 and t = 0: the standard rows (1,0),(1,t) are singular.
        // Swapping the generators presents the plane as Jordanian directly.
        out.tag = CaseTag::Jordanian;
        out.h_prime = Scalar(-r0);
        out.transform = Transform2::swap();
        out.verified = verify_against(*out.transform, jordanian_plane(out.h, *out.h_prime));
        return out;
    }

    if ((Scalar(h0) + t).is_zero()) {
        // p0 = -1 and h0*r0 = 1: eta*xi = +xi*eta makes the commutator of
        // the barred differentials vanish under every linear S, so neither
        // canonical family is reachable.
        out.tag = CaseTag::Degenerate;
        out.note = "degenerate orbit (p0 = -1, h0*r0 = 1): eta*xi = +xi*eta "
                   "forces xibar*etabar = etabar*xibar for every linear "
                   "transformation, so neither canonical family is reachable";
        return out;
    }

    out.tag = CaseTag::Jordanian;
    out.h_prime = case2_hprime(Scalar(h0), t);
    out.transform = Transform2{Scalar(1), Scalar(0), Scalar(1), t};
    out.verified = verify_against(*out.transform, jordanian_plane(out.h, *out.h_prime));
    return out;
}

}  // namespace qgl2
