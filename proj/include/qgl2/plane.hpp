#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "qgl2/scalar.hpp"

namespace qgl2 {

// Degree-2 element in the differentials, as coefficients on the ordered
// words xi*xi, xi*eta, eta*xi, eta*eta.
struct DiffQuadratic {
    Scalar xixi, xieta, etaxi, etaeta;
};

// Degree-2 element in the coordinates, words xx, xy, yx, yy.
struct CoordQuadratic {
    Scalar xx, xy, yx, yy;
};

// Invertible change of generators; row i gives barred generator i as a
// combination of the unbarred ones.
struct Transform2 {
    Scalar m11, m12, m21, m22;

    Scalar det() const { return m11 * m22 - m12 * m21; }

    Transform2 inverse() const {
        const Scalar d = det();
        if (d.is_zero()) throw std::domain_error("Transform2: singular matrix");
        const Scalar di = d.inverse();
        return {m22 * di, -m12 * di, -m21 * di, m11 * di};
    }

    Transform2 swapped_rows() const { return {m21, m22, m11, m12}; }

    friend Transform2 operator*(const Transform2& s, const Transform2& t) {
        return {s.m11 * t.m11 + s.m12 * t.m21, s.m11 * t.m12 + s.m12 * t.m22,
                s.m21 * t.m11 + s.m22 * t.m21, s.m21 * t.m12 + s.m22 * t.m22};
    }

    static Transform2 identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }
    static Transform2 swap() { return {Scalar(0), Scalar(1), Scalar(1), Scalar(0)}; }
};

// A quantum plane given by its five relation coefficients:
//   xy = alpha*yx + beta*y^2,  xi^2 = A*xi*eta,  eta^2 = B*xi*eta,
//   eta*xi = C*xi*eta.
// alpha must be nonzero so yx reduces to the ordered coordinate basis.
struct Plane {
    Scalar alpha, beta, A, B, C;
};

inline Plane dj_plane(const Scalar& q, const Scalar& p) {
    if (q.is_zero()) throw std::invalid_argument("dj_plane: q must be nonzero");
    return {q, Scalar(0), Scalar(0), Scalar(0), -p};
}

inline Plane jordanian_plane(const Scalar& h, const Scalar& hp) {
    return {Scalar(1), h, hp, Scalar(0), Scalar(-1)};
}

inline Plane input_plane(const Scalar& h0, const Scalar& r0, const Scalar& p0) {
    return {Scalar(1), Scalar(0), h0, r0, -p0};
}

// Literal coefficient equality, not equality up to isomorphism.
inline bool plane_equal(const Plane& p1, const Plane& p2) {
    return p1.alpha == p2.alpha && p1.beta == p2.beta && p1.A == p2.A &&
           p1.B == p2.B && p1.C == p2.C;
}

// Unique coefficient c with q == c * xi*eta modulo the relations.
inline Scalar reduce_diff(const DiffQuadratic& q, const Plane& p) {
    return q.xixi * p.A + q.xieta + q.etaxi * p.C + q.etaeta * p.B;
}

// Coefficients on the ordered basis {x^2, xy, y^2} after rewriting
// yx = (1/alpha)(xy - beta*y^2).
inline std::array<Scalar, 3> reduce_coord(const CoordQuadratic& q, const Plane& p) {
    const Scalar ai = p.alpha.inverse();
    return {q.xx, q.xy + q.yx * ai, q.yy - q.yx * ai * p.beta};
}

// The four xi*eta multiples obtained by expanding the barred degree-2 words.
struct DiffCoeffs {
    Scalar xixi, xieta, etaxi, etaeta;
};

inline DiffCoeffs diff_transform_coeffs(const Plane& p, const Transform2& s) {
    auto word = [&](const Scalar& u1, const Scalar& u2, const Scalar& v1,
                    const Scalar& v2) {
        // (u1 xi + u2 eta)(v1 xi + v2 eta)
        return reduce_diff({u1 * v1, u1 * v2, u2 * v1, u2 * v2}, p);
    };
    return {word(s.m11, s.m12, s.m11, s.m12), word(s.m11, s.m12, s.m21, s.m22),
            word(s.m21, s.m22, s.m11, s.m12), word(s.m21, s.m22, s.m21, s.m22)};
}

enum class TransformError { DegenerateTop, NotTemplate };

template <typename T>
struct TransformResult {
    std::optional<T> value;
    std::optional<TransformError> error;

    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }

    static TransformResult good(T v) { return {std::move(v), std::nullopt}; }
    static TransformResult bad(TransformError e) { return {std::nullopt, e}; }
};

// Finds (alpha', beta') with xbar*ybar = alpha'*ybar*xbar + beta'*ybar^2 as
// an identity modulo the original coordinate relation. NotTemplate when the
// transformed coordinate algebra leaves the two-parameter shape.
inline TransformResult<std::pair<Scalar, Scalar>> transform_coord(
    const Scalar& alpha, const Scalar& beta, const Transform2& s) {
    const Plane p{alpha, beta, Scalar(0), Scalar(0), Scalar(0)};
    auto word = [&](const Scalar& u1, const Scalar& u2, const Scalar& v1,
                    const Scalar& v2) {
        // (u1 x + u2 y)(v1 x + v2 y)
        return reduce_coord({u1 * v1, u1 * v2, u2 * v1, u2 * v2}, p);
    };
    const auto lhs = word(s.m11, s.m12, s.m21, s.m22);   // xbar*ybar
    const auto col1 = word(s.m21, s.m22, s.m11, s.m12);  // ybar*xbar
    const auto col2 = word(s.m21, s.m22, s.m21, s.m22);  // ybar^2

    // Solve lhs = a'*col1 + b'*col2 over the three basis coefficients by
    // two-unknown Gaussian elimination, pivoting on col1 first so the
    // commutative case yields (1, 0) rather than an equivalent solution.
    std::optional<Scalar> ap, bp;
    struct Row { Scalar c1, c2, rhs; };
    std::array<Row, 3> rows = {Row{col1[0], col2[0], lhs[0]},
                               Row{col1[1], col2[1], lhs[1]},
                               Row{col1[2], col2[2], lhs[2]}};
    int p1 = -1;
    for (int i = 0; i < 3; ++i)
        if (!rows[i].c1.is_zero()) { p1 = i; break; }
    if (p1 >= 0) {
        const Scalar inv = rows[p1].c1.inverse();
        rows[p1] = {Scalar(1), rows[p1].c2 * inv, rows[p1].rhs * inv};
        for (int i = 0; i < 3; ++i) {
            if (i == p1) continue;
            rows[i] = {Scalar(0), rows[i].c2 - rows[i].c1 * rows[p1].c2,
                       rows[i].rhs - rows[i].c1 * rows[p1].rhs};
        }
    }
    int p2 = -1;
    for (int i = 0; i < 3; ++i)
        if (i != p1 && !rows[i].c2.is_zero()) { p2 = i; break; }
    if (p2 >= 0) {
        const Scalar inv = rows[p2].c2.inverse();
        rows[p2] = {Scalar(0), Scalar(1), rows[p2].rhs * inv};
        bp = rows[p2].rhs;
    } else {
        bp = Scalar(0);
    }
    if (p1 >= 0)
        ap = rows[p1].rhs - rows[p1].c2 * *bp;
    else
        ap = Scalar(1);  // ybar*xbar reduced to zero; any alpha' works
    // Consistency check across all three equations.
    for (int i = 0; i < 3; ++i) {
        const Scalar residual = lhs[i] - *ap * col1[i] - *bp * col2[i];
        if (!residual.is_zero())
            return TransformResult<std::pair<Scalar, Scalar>>::bad(
                TransformError::NotTemplate);
    }
    return TransformResult<std::pair<Scalar, Scalar>>::good(std::pair{*ap, *bp});
}

// Recomputes all five relation coefficients after the change of generators
// S (acting the same way on (x, y) and on (xi, eta)). DegenerateTop when
// the barred word xibar*etabar reduces to zero, so S cannot present the
// algebra in template form.
inline TransformResult<Plane> transform_diff(const Plane& p, const Transform2& s) {
    const DiffCoeffs c = diff_transform_coeffs(p, s);
    if (c.xieta.is_zero())
        return TransformResult<Plane>::bad(TransformError::DegenerateTop);
    const Scalar inv = c.xieta.inverse();
    const auto coord = transform_coord(p.alpha, p.beta, s);
    if (!coord.ok()) return TransformResult<Plane>::bad(*coord.error);
    return TransformResult<Plane>::good(Plane{(*coord).first, (*coord).second,
                                              c.xixi * inv, c.etaeta * inv,
                                              c.etaxi * inv});
}

inline std::string to_string(const Plane& p) {
    return "plane(alpha=" + to_string(p.alpha) + ", beta=" + to_string(p.beta) +
           ", A=" + to_string(p.A) + ", B=" + to_string(p.B) +
           ", C=" + to_string(p.C) + ")";
}

}  // namespace qgl2
