#pragma once

#include <array>
#include <string>
#include <vector>

#include "qgl2/plane.hpp"

namespace qgl2 {

// Length-2 words over the quantum-matrix entries {a, b, c, d}, ordered
// lexicographically with a < b < c < d: aa, ab, ac, ad, ba, ..., dd.
// Word (i, j) sits at index 4*i + j.
inline constexpr int kNumWords = 16;

inline constexpr int word_index(int first, int second) { return 4 * first + second; }

inline std::string word_name(int index) {
    static const char letters[] = {'a', 'b', 'c', 'd'};
    return std::string{letters[index / 4], letters[index % 4]};
}

// One quadratic relation among the entries: a vector of coefficients over
// the 16 ordered words.
using QuadraticRelation = std::array<Scalar, kNumWords>;

inline bool relation_is_zero(const QuadraticRelation& r) {
    for (const Scalar& c : r)
        if (!c.is_zero()) return false;
    return true;
}

// Reduced row echelon form in place: leading coefficients 1, strictly
// increasing leading positions, zero rows dropped.
inline void rref(std::vector<QuadraticRelation>& rows) {
    std::size_t pivot_row = 0;
    for (int col = 0; col < kNumWords && pivot_row < rows.size(); ++col) {
        std::size_t found = pivot_row;
        while (found < rows.size() && rows[found][col].is_zero()) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        const Scalar inv = rows[pivot_row][col].inverse();
        for (int j = col; j < kNumWords; ++j) rows[pivot_row][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col].is_zero()) continue;
            const Scalar factor = rows[i][col];
            for (int j = col; j < kNumWords; ++j)
                rows[i][j] -= factor * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    while (!rows.empty() && relation_is_zero(rows.back())) rows.pop_back();
}

// Reduces r against an RREF basis; the remainder is zero iff r lies in the
// row space.
inline QuadraticRelation reduce_against(QuadraticRelation r,
                                        const std::vector<QuadraticRelation>& basis) {
    for (const QuadraticRelation& row : basis) {
        int lead = 0;
        while (lead < kNumWords && row[lead].is_zero()) ++lead;
        if (lead == kNumWords || r[lead].is_zero()) continue;
        const Scalar factor = r[lead];
        for (int j = lead; j < kNumWords; ++j) r[j] -= factor * row[j];
    }
    return r;
}

// Canonical basis of the quadratic relation space among the entries of the
// quantum matrix T coacting on the plane.
struct ManinRelationSet {
    std::vector<QuadraticRelation> relations;  // RREF rows
    Plane plane;
};

// Derives the relations forced on T = [[a, b], [c, d]] by requiring
// x' = a x + b y, y' = c x + d y (and the same action on xi, eta) to
// satisfy the plane's relations, with entries commuting with the plane
// generators. Each residual's basis coefficients live in the 16-dim word
// space; the span is returned in RREF.
inline ManinRelationSet manin_relations(const Plane& p) {
    enum { A = 0, B = 1, C = 2, D = 3 };
    const Scalar zero(0);
    auto unit = [&](int i, int j, const Scalar& coeff) {
        QuadraticRelation r;
        r.fill(zero);
        r[word_index(i, j)] = coeff;
        return r;
    };
    auto add = [&](QuadraticRelation& into, const QuadraticRelation& from,
                   const Scalar& factor) {
        for (int k = 0; k < kNumWords; ++k) into[k] += factor * from[k];
    };

    // Row u of the entry matrix: generator u' = row[0]*x + row[1]*y.
    const std::array<std::array<int, 2>, 2> entry_rows = {{{A, B}, {C, D}}};

    // Product of two primed generators expanded over {words} x {plane
    // monomials}: coeffs[m] is the 16-vector multiplying plane word m in
    // the order xx, xy, yx, yy (coordinates) or the matching diff words.
    auto product = [&](int u, int v) {
        std::array<QuadraticRelation, 4> coeffs;
        for (auto& q : coeffs) q.fill(zero);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                coeffs[2 * i + j][word_index(entry_rows[u][i], entry_rows[v][j])] = Scalar(1);
        return coeffs;
    };

    std::vector<QuadraticRelation> rows;

    // Coordinate residual x'y' - alpha y'x' - beta y'^2, reduced on
    // {x^2, xy, y^2}; each basis coefficient must vanish.
    {
        const auto xy = product(0, 1);
        const auto yx = product(1, 0);
        const auto yy = product(1, 1);
        std::array<QuadraticRelation, 4> residual;
        for (int m = 0; m < 4; ++m) {
            residual[m] = xy[m];
            add(residual[m], yx[m], -p.alpha);
            add(residual[m], yy[m], -p.beta);
        }
        // fold yx -> (1/alpha)(xy - beta y^2)
        const Scalar ai = p.alpha.inverse();
        QuadraticRelation cxx = residual[0];
        QuadraticRelation cxy = residual[1];
        add(cxy, residual[2], ai);
        QuadraticRelation cyy = residual[3];
        add(cyy, residual[2], -ai * p.beta);
        rows.push_back(cxx);
        rows.push_back(cxy);
        rows.push_back(cyy);
    }

    // Differential residuals, each a single xi*eta coefficient.
    {
        auto reduced = [&](int u, int v) {
            const auto w = product(u, v);
            QuadraticRelation r = w[1];  // xi*eta
            add(r, w[0], p.A);
            add(r, w[2], p.C);
            add(r, w[3], p.B);
            return r;
        };
        const QuadraticRelation xx = reduced(0, 0);
        const QuadraticRelation xh = reduced(0, 1);
        const QuadraticRelation hx = reduced(1, 0);
        const QuadraticRelation hh = reduced(1, 1);
        QuadraticRelation r4 = xx;
        add(r4, xh, -p.A);
        QuadraticRelation r5 = hh;
        add(r5, xh, -p.B);
        QuadraticRelation r6 = hx;
        add(r6, xh, -p.C);
        rows.push_back(r4);
        rows.push_back(r5);
        rows.push_back(r6);
    }

    rref(rows);
    return {std::move(rows), p};
}

// 16x16 matrix of the substitution induced on length-2 entry words by the
// similarity T -> S T S^{-1}; row w is the expansion of barred word w over
// unbarred words.
using SubstitutionMatrix = std::array<QuadraticRelation, kNumWords>;

inline SubstitutionMatrix entry_substitution(const Transform2& s) {
    const Transform2 si = s.inverse();
    const std::array<std::array<Scalar, 2>, 2> m = {{{s.m11, s.m12}, {s.m21, s.m22}}};
    const std::array<std::array<Scalar, 2>, 2> mi = {{{si.m11, si.m12}, {si.m21, si.m22}}};

    // barred entry (i, j) as a 4-vector over (a, b, c, d):
    // Tbar_ij = sum_{k,l} S_ik T_kl Sinv_lj
    std::array<std::array<Scalar, 4>, 4> barred;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto& vec = barred[2 * i + j];
            vec.fill(Scalar(0));
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    vec[2 * k + l] += m[i][k] * mi[l][j];
        }

    SubstitutionMatrix out;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            auto& row = out[word_index(u, v)];
            row.fill(Scalar(0));
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    row[word_index(k, l)] = barred[u][k] * barred[v][l];
        }
    return out;
}

inline QuadraticRelation apply_substitution(const SubstitutionMatrix& m,
                                            const QuadraticRelation& r) {
    QuadraticRelation out;
    out.fill(Scalar(0));
    for (int w = 0; w < kNumWords; ++w) {
        if (r[w].is_zero()) continue;
        for (int k = 0; k < kNumWords; ++k) out[k] += r[w] * m[w][k];
    }
    return out;
}

inline std::string to_string(const QuadraticRelation& r) {
    std::string out;
    for (int w = 0; w < kNumWords; ++w) {
        if (r[w].is_zero()) continue;
        const Scalar& c = r[w];
        if (out.empty()) {
            if (c == Scalar(1))
                out += word_name(w);
            else if (c == Scalar(-1))
                out += "-" + word_name(w);
            else if (c.is_rational() && c.radical_part() == 0 && denominator(c.rational_part()) == 1)
                out += to_string(c) + "*" + word_name(w);
            else
                out += "(" + to_string(c) + ")*" + word_name(w);
        } else {
            if (c == Scalar(1))
                out += " + " + word_name(w);
            else if (c == Scalar(-1))
                out += " - " + word_name(w);
            else if (c.is_rational() && denominator(c.rational_part()) == 1 &&
                     c.rational_part() < 0)
                out += " - " + to_string(-c) + "*" + word_name(w);
            else if (c.is_rational() && denominator(c.rational_part()) == 1)
                out += " + " + to_string(c) + "*" + word_name(w);
            else
                out += " + (" + to_string(c) + ")*" + word_name(w);
        }
    }
    return out.empty() ? "0" : out;
}

struct SimilarityReport {
    bool ok = true;
    std::vector<std::string> failures;  // pretty-printed failing relations
};

// Checks that every relation of the target quantum matrix, rewritten
// through Tbar = S T S^{-1}, is a consequence of the source relations.
inline SimilarityReport check_similarity(const Plane& source, const Plane& target,
                                         const Transform2& s) {
    SimilarityReport report;
    const ManinRelationSet src = manin_relations(source);
    const ManinRelationSet tgt = manin_relations(target);
    const SubstitutionMatrix m = entry_substitution(s);
    for (const QuadraticRelation& r : tgt.relations) {
        const QuadraticRelation image = apply_substitution(m, r);
        const QuadraticRelation remainder = reduce_against(image, src.relations);
        if (!relation_is_zero(remainder)) {
            report.ok = false;
            report.failures.push_back(to_string(r));
        }
    }
    return report;
}

}  // namespace qgl2
