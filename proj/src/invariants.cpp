#include "braidforge/invariants.hpp"

#include <cstdlib>
#include <utility>

#include "braidforge/errors.hpp"

namespace braidforge {

BurauMatrix identity_burau(int dim) {
    BurauMatrix r;
    r.m.assign(dim, std::vector<LaurentPoly>(dim));
    for (int i = 0; i < dim; ++i) r.m[i][i] = LaurentPoly(1);
    return r;
}

BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
    if (a.dim() != b.dim()) throw DomainError("Burau dimension mismatch");
    int n = a.dim();
    BurauMatrix r;
    r.m.assign(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a.m[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b.m[k][j].is_zero()) r.m[i][j] += a.m[i][k] * b.m[k][j];
        }
    return r;
}

BurauMatrix burau_generator(int letter, int strands) {
    int dim = strands - 1;
    int i = std::abs(letter);
    if (i < 1 || i > dim) throw DomainError("Burau generator out of range");
    BurauMatrix g = identity_burau(dim);
    int r = i - 1;
    if (letter > 0) {
        if (r > 0) g.m[r][r - 1] = LaurentPoly::monomial(1, 1);
        g.m[r][r] = LaurentPoly::monomial(-1, 1);
        if (r + 1 < dim) g.m[r][r + 1] = LaurentPoly(1);
    } else {
        if (r > 0) g.m[r][r - 1] = LaurentPoly(1);
        g.m[r][r] = LaurentPoly::monomial(-1, -1);
        if (r + 1 < dim) g.m[r][r + 1] = LaurentPoly::monomial(1, -1);
    }
    return g;
}

BurauMatrix burau_reduced(const BraidWord& w) {
    validate(w);
    if (w.strands < 2) throw DomainError("burau_reduced needs at least 2 strands");
    const int dim = w.strands - 1;
    BurauMatrix acc = identity_burau(dim);
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly ti = LaurentPoly::monomial(1, -1);
    // right-multiply by each generator; only column operations are needed
    for (int x : w.letters) {
        int c = std::abs(x) - 1;
        for (int row = 0; row < dim; ++row) {
            LaurentPoly old = acc.m[row][c];
            if (old.is_zero()) continue;
            if (x > 0) {
                if (c > 0) acc.m[row][c - 1] += t * old;
                acc.m[row][c] = -(t * old);
                if (c + 1 < dim) acc.m[row][c + 1] += old;
            } else {
                if (c > 0) acc.m[row][c - 1] += old;
                acc.m[row][c] = -(ti * old);
                if (c + 1 < dim) acc.m[row][c + 1] += ti * old;
            }
        }
    }
    return acc;
}

LaurentPoly determinant(PolyMatrix m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly(1);
    int sign = 1;
    LaurentPoly prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return LaurentPoly();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = v.divide_exact(prev);
            }
            m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
    }
    LaurentPoly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

LaurentPoly alexander_from_braid(const BraidWord& w) {
    validate(w);
    int comps = closure_components(w);
    if (comps != 1) throw NotAKnot("closure of " + to_string(w) + " has " + std::to_string(comps) + " components");
    if (w.strands == 1) return LaurentPoly(1);
    BurauMatrix b = burau_reduced(w);
    PolyMatrix a = b.m;
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) a[i][j] = (i == j ? LaurentPoly(1) : LaurentPoly()) - b.m[i][j];
    LaurentPoly d = determinant(a);
    LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::monomial(1, 1);
    LaurentPoly one_minus_tn = LaurentPoly(1) - LaurentPoly::monomial(1, w.strands);
    LaurentPoly res = (d * one_minus_t).divide_exact(one_minus_tn);
    return res.normalized();
}

EvidenceReport same_closure_evidence(const BraidWord& u, const BraidWord& v) {
    EvidenceReport r;
    r.components_u = closure_components(u);
    r.components_v = closure_components(v);
    if (r.components_u != r.components_v) {
        r.verdict = "inconsistent";
        r.note = "component counts differ";
        return r;
    }
    if (r.components_u == 1) {
        r.alexander_u = alexander_from_braid(u);
        r.alexander_v = alexander_from_braid(v);
        r.verdict = *r.alexander_u == *r.alexander_v ? "consistent" : "inconsistent";
        r.note = r.verdict == "consistent"
                     ? "equal component counts and Alexander polynomials; necessary, not sufficient, for equal closures"
                     : "Alexander polynomials differ";
    } else {
        r.verdict = "consistent";
        r.note = "equal component counts only (links: Alexander comparison not performed); necessary, not sufficient";
    }
    return r;
}

nlohmann::json to_json(const EvidenceReport& r) {
    nlohmann::json j;
    j["components"] = {r.components_u, r.components_v};
    if (r.alexander_u) j["alexander"] = {r.alexander_u->to_string(), r.alexander_v->to_string()};
    j["verdict"] = r.verdict;
    j["note"] = r.note;
    return j;
}

}  // namespace braidforge
