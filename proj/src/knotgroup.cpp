#include "braidforge/knotgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "braidforge/braid.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/invariants.hpp"

namespace braidforge {

GroupWord GammaData::suffix(int start) const {
    GroupWord w;
    w.letters.assign(g0.letters.begin() + start, g0.letters.end());
    return w;
}

GroupWord GammaData::g(int i) const {
    if (i == 0) return g0;
    if (i < 0 || i > t) throw DomainError("g index out of range");
    return suffix(longitude_marks[static_cast<std::size_t>(i - 1)]);
}

GroupWord GammaData::h(int j) const {
    if (j < 1 || j > omega) throw DomainError("h index out of range");
    return suffix(meridian_marks[static_cast<std::size_t>(j - 1)]);
}

GroupWord GammaData::mu() const { return x() * inverse(y()); }

GroupWord GammaData::r_mu() const {
    GroupWord r, m = mu();
    for (int j = 1; j <= omega; ++j) r = r * conjugate(h(j), m);
    return r;
}

GroupWord GammaData::r_lambda() const {
    GroupWord r = y(), mi = inverse(mu());
    for (int i = t; i >= 1; --i) r = r * conjugate(g(i), mi);
    return r;
}

GroupWord GammaData::lambda() const { return y() * g0 * power(mu(), -(omega * t + b)); }

GammaData gamma_word(int omega, int t, int b) { return gamma_word(omega, t, b, "x", "y"); }

GammaData gamma_word(int omega, int t, int b, const std::string& x_name, const std::string& y_name) {
    BraidWord br = one_bridge_braid(omega, t, b);
    if (closure_components(br) != 1)
        throw NotAKnot("closure of B(" + std::to_string(omega) + "," + std::to_string(t) + "," +
                       std::to_string(b) + ") has " + std::to_string(closure_components(br)) + " components");
    GammaData d;
    d.omega = omega;
    d.t = t;
    d.b = b;
    d.x_name = x_name;
    d.y_name = y_name;
    int xl = make_letter(intern(x_name), 1), yl = make_letter(intern(y_name), 1);

    std::vector<int> letters;
    std::vector<int> pass_start(static_cast<std::size_t>(omega) + 1, -1);
    d.longitude_marks.assign(static_cast<std::size_t>(t), -1);
    int pos = 1;
    for (int guard = 0;; ++guard) {
        if (guard > omega) throw InternalInvariantViolation("gamma walk does not terminate");
        int j = static_cast<int>(letters.size());
        if (pass_start[static_cast<std::size_t>(pos)] != -1)
            throw InternalInvariantViolation("gamma walk revisits a start position");
        pass_start[static_cast<std::size_t>(pos)] = j;
        for (int k = 1; k <= t; ++k) {
            if (pos == omega) d.longitude_marks[static_cast<std::size_t>(t - k)] = j;
            pos = pos == omega ? 1 : pos + 1;
        }
        if (pos <= b) {
            letters.push_back(xl);
            ++pos;
        } else if (pos >= b + 2) {
            letters.push_back(yl);
        } else {
            break;
        }
    }
    d.g0.letters = letters;
    for (int jj = 1; jj <= omega; ++jj) {
        int p = ((jj - t - 1) % omega + omega) % omega + 1;
        d.meridian_marks.push_back(pass_start[static_cast<std::size_t>(p)]);
    }

    int nx = 0, ny = 0;
    for (int a : letters) (a == xl ? nx : ny)++;
    if (static_cast<int>(letters.size()) != omega - 1 || nx != b || ny != omega - b - 1)
        throw InternalInvariantViolation("gamma letter counts");
    for (int m : d.longitude_marks)
        if (m < 0) throw InternalInvariantViolation("missing longitude mark");
    for (int m : d.meridian_marks)
        if (m < 0) throw InternalInvariantViolation("missing meridian mark");
    for (int i = 1; i <= t; ++i)
        if (d.g(i) != d.h((i - 1) % omega + 1))
            throw InternalInvariantViolation("g_i differs from h_j for i = j mod omega");
    return d;
}

static Presentation pattern_presentation(const GammaData& d) {
    Presentation p;
    p.generators = {d.x_name, d.y_name};
    p.relators = {d.r_lambda()};
    p.peripherals["mu"] = d.mu();
    p.peripherals["lambda"] = d.lambda();
    p.peripherals["r_mu"] = d.r_mu();
    p.peripherals["r_lambda"] = d.r_lambda();
    return p;
}

Presentation one_bridge_presentation(int omega, int t, int b) {
    return pattern_presentation(gamma_word(omega, t, b));
}

std::map<std::string, std::string> satellite_renaming(const Presentation& companion) {
    std::set<std::string> used(companion.generators.begin(), companion.generators.end());
    used.insert("x");
    used.insert("y");
    std::map<std::string, std::string> out;
    for (const auto& g : companion.generators) {
        if (g != "x" && g != "y") continue;
        for (int k = 1;; ++k) {
            std::string cand = g + "_" + std::to_string(k);
            if (!used.count(cand)) {
                used.insert(cand);
                out[g] = cand;
                break;
            }
        }
    }
    return out;
}

Presentation satellite_presentation(const Presentation& companion, int omega, int t, int b) {
    validate(companion);
    const GroupWord& muK = companion.peripheral("mu");
    const GroupWord& laK = companion.peripheral("lambda");
    GammaData d = gamma_word(omega, t, b);

    std::map<int, int> ids;
    for (const auto& [from, to] : satellite_renaming(companion)) ids[intern(from)] = intern(to);
    auto ren = [&](const GroupWord& w) { return rename(w, ids); };

    Presentation p;
    for (const auto& g : companion.generators) {
        auto it = ids.find(intern(g));
        p.generators.push_back(it == ids.end() ? g : symbol_name(it->second));
    }
    p.generators.push_back("x");
    p.generators.push_back("y");
    for (const auto& r : companion.relators) p.relators.push_back(ren(r));
    p.relators.push_back(inverse(ren(muK)) * d.r_mu());
    p.relators.push_back(inverse(ren(laK)) * d.r_lambda());
    p.peripherals["mu"] = d.mu();
    p.peripherals["lambda"] = d.lambda();
    p.peripherals["r_mu"] = d.r_mu();
    p.peripherals["r_lambda"] = d.r_lambda();
    validate(p);
    return p;
}

Presentation dehn_fill(const Presentation& pres, int p, int q) {
    if (std::gcd(std::abs(p), std::abs(q)) != 1)
        throw DomainError("filling slope needs gcd(p,q) = 1");
    Presentation out = pres;
    out.relators.push_back(power(pres.peripheral("mu"), p) * power(pres.peripheral("lambda"), q));
    return out;
}

namespace {

using Mat = std::vector<std::vector<long long>>;

long long mul_checked(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in Smith form");
    return r;
}

long long sub_checked(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in Smith form");
    return r;
}

// col_j -= f * col_i, on A and V
void col_op(Mat& A, Mat& V, std::size_t j, std::size_t i, long long f) {
    for (auto& row : A) row[j] = sub_checked(row[j], mul_checked(f, row[i]));
    for (auto& row : V) row[j] = sub_checked(row[j], mul_checked(f, row[i]));
}

void row_op(Mat& A, std::size_t j, std::size_t i, long long f) {
    for (std::size_t c = 0; c < A[j].size(); ++c) A[j][c] = sub_checked(A[j][c], mul_checked(f, A[i][c]));
}

void swap_cols(Mat& A, Mat& V, std::size_t a, std::size_t b) {
    for (auto& row : A) std::swap(row[a], row[b]);
    for (auto& row : V) std::swap(row[a], row[b]);
}

// Diagonalizes A in place with divisibility d_1 | d_2 | ...; V collects column operations.
void smith(Mat& A, Mat& V) {
    std::size_t m = A.size(), n = V.size();
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        for (;;) {
            std::size_t pr = m, pc = n;
            long long best = 0;
            for (std::size_t r = k; r < m; ++r)
                for (std::size_t c = k; c < n; ++c)
                    if (A[r][c] != 0 && (best == 0 || std::llabs(A[r][c]) < best)) {
                        best = std::llabs(A[r][c]);
                        pr = r;
                        pc = c;
                    }
            if (best == 0) return;
            std::swap(A[k], A[pr]);
            swap_cols(A, V, k, pc);
            bool clean = true;
            for (std::size_t r = k + 1; r < m; ++r) {
                row_op(A, r, k, A[r][k] / A[k][k]);
                if (A[r][k] != 0) clean = false;
            }
            for (std::size_t c = k + 1; c < n; ++c) {
                col_op(A, V, c, k, A[k][c] / A[k][k]);
                if (A[k][c] != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t r = k + 1; r < m && divides; ++r)
                for (std::size_t c = k + 1; c < n; ++c)
                    if (A[r][c] % A[k][k] != 0) {
                        for (std::size_t cc = 0; cc < n; ++cc)
                            A[k][cc] = A[k][cc] + A[r][cc];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
}

}  // namespace

Abelianization abelianization(const Presentation& pres, const std::vector<GroupWord>& probe) {
    validate(pres);
    std::size_t n = pres.generators.size();
    std::vector<int> ids;
    for (const auto& g : pres.generators) ids.push_back(intern(g));
    auto exps = [&](const GroupWord& w) {
        validate_word(pres, w.letters);
        std::vector<long long> v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = exponent_sum(w, ids[c]);
        return v;
    };
    Mat A;
    for (const auto& r : pres.relators) A.push_back(exps(r));
    Mat V(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) V[i][i] = 1;
    smith(A, V);

    std::vector<long long> d(n, 0);
    for (std::size_t k = 0; k < std::min(A.size(), n); ++k) d[k] = std::llabs(A[k][k]);

    Abelianization out;
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k)
        if (d[k] != 1) {
            keep.push_back(k);
            out.invariant_factors.push_back(d[k]);
        }
    for (const auto& w : probe) {
        auto v = exps(w);
        std::vector<long long> img;
        for (std::size_t k : keep) {
            long long s = 0;
            for (std::size_t i = 0; i < n; ++i) s += mul_checked(v[i], V[i][k]);
            if (d[k] != 0) s = ((s % d[k]) + d[k]) % d[k];
            img.push_back(s);
        }
        out.probe_images.push_back(img);
    }
    return out;
}

std::vector<long long> infinite_cyclic_images(const Presentation& pres) {
    std::vector<GroupWord> gens;
    for (const auto& g : pres.generators) gens.push_back(GroupWord::gen(g));
    if (pres.peripherals.count("mu")) gens.push_back(pres.peripherals.at("mu"));
    Abelianization ab = abelianization(pres, gens);
    if (ab.invariant_factors != std::vector<long long>{0})
        throw UnsupportedPresentation("abelianization is not infinite cyclic");
    std::vector<long long> out;
    for (std::size_t i = 0; i < pres.generators.size(); ++i) out.push_back(ab.probe_images[i][0]);
    if (gens.size() > pres.generators.size() && ab.probe_images.back()[0] < 0)
        for (auto& e : out) e = -e;
    return out;
}

LaurentPoly fox_alexander(const Presentation& pres) {
    std::size_t n = pres.generators.size();
    if (n != pres.relators.size() + 1) throw UnsupportedPresentation("deficiency is not 1");
    std::vector<long long> e = infinite_cyclic_images(pres);
    std::map<int, std::size_t> col;
    for (std::size_t c = 0; c < n; ++c) col[intern(pres.generators[c])] = c;

    PolyMatrix M;
    for (const auto& r : pres.relators) {
        std::vector<LaurentPoly> row(n);
        long long pre = 0;
        for (int a : r.letters) {
            std::size_t c = col.at(letter_id(a));
            if (a > 0) {
                row[c] += LaurentPoly::monomial(1, static_cast<int>(pre));
                pre += e[c];
            } else {
                pre -= e[c];
                row[c] -= LaurentPoly::monomial(1, static_cast<int>(pre));
            }
        }
        M.push_back(row);
    }
    std::size_t drop = n;
    for (std::size_t c = 0; c < n; ++c)
        if (e[c] != 0 && (drop == n || std::llabs(e[c]) < std::llabs(e[drop]))) drop = c;
    if (drop == n) throw UnsupportedPresentation("no generator maps nontrivially");
    PolyMatrix minor;
    for (const auto& row : M) {
        std::vector<LaurentPoly> r;
        for (std::size_t c = 0; c < n; ++c)
            if (c != drop) r.push_back(row[c]);
        minor.push_back(r);
    }
    LaurentPoly det = minor.empty() ? LaurentPoly(1) : determinant(minor);
    LaurentPoly num = det * (LaurentPoly::monomial(1, 1) - LaurentPoly(1));
    LaurentPoly den = LaurentPoly::monomial(1, static_cast<int>(e[drop])) - LaurentPoly(1);
    return num.divide_exact(den).normalized();
}

}  // namespace braidforge
