#include <functional>

#include "braidforge/braid.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/knotgroup.hpp"
#include "braidforge/ordercert.hpp"
#include "certbuild.hpp"

namespace braidforge {

using detail::CertBuilder;
using detail::Deriv;
using detail::Ineq;

namespace {

GroupWord product(const std::vector<GroupWord>& ws) {
    GroupWord r;
    for (const auto& w : ws) r = r * w;
    return r;
}

// Forward derivation of μ^e >=_k 1 over S' = {μ, Λ^-1}.
class Forward {
public:
    Forward(const GammaData& d, CertBuilder& b, int rel)
        : d_(d), D_(b), b_(b), rel_(rel), mu_(d.mu()), x_(d.x()), y_(d.y()) {
        omega_ = d.omega;
        t_ = d.t;
        ygw_ = y_ * d.g0;
        for (int i = 1; i <= t_; ++i) g_.push_back(d.g(i));
        bcount_.assign(static_cast<std::size_t>(omega_), 0);
        for (const auto& gi : g_) bcount_[gi.size()]++;
        l_ = static_cast<int>(g_[0].size());
    }

    GroupWord tg(int i) const {
        GroupWord w;
        w.letters.assign(ygw_.letters.end() - i, ygw_.letters.end());
        return w;
    }
    GroupWord c(const GroupWord& w) const { return conjugate(w, mu_); }
    GroupWord mup(int k) const { return power(mu_, k); }

    Ineq mu_pos() { return {mu_, GroupWord(), b_.axiom(0)}; }
    Ineq c_pos(const GroupWord& w) { return D_.sandwich(w, mu_pos(), inverse(w)); }

    // x >= y
    Ineq F1() { return D_.sandwich(GroupWord(), mu_pos(), y_); }

    // g~_{i+1} >= y g~_i
    Ineq F2(int i) {
        int letter = ygw_.letters[static_cast<std::size_t>(omega_ - 1 - i)];
        if (letter == x_.letters[0]) return D_.sandwich(GroupWord(), F1(), tg(i));
        return D_.refl(y_ * tg(i));
    }

    // prod c(g_k) · tail >= prod_{kept} c(g_k) · tail
    Ineq drop(const std::vector<bool>& keep, const GroupWord& tail) {
        std::vector<GroupWord> f;
        for (const auto& gk : g_) f.push_back(c(gk));
        Ineq cur = D_.refl(product(f) * tail);
        std::vector<GroupWord> kept;
        for (int k = 0; k < t_; ++k) {
            if (keep[static_cast<std::size_t>(k)]) {
                kept.push_back(f[static_cast<std::size_t>(k)]);
                continue;
            }
            std::vector<GroupWord> after(f.begin() + k + 1, f.end());
            cur = D_.trans(cur, D_.sandwich(product(kept), c_pos(g_[static_cast<std::size_t>(k)]), product(after) * tail));
        }
        return cur;
    }

    // y at the front of lo becomes prod c(g_k)
    Ineq lo_front_to_star(const Ineq& I) { return D_.subst_lo(I, GroupWord(), rel_, true); }

    // g~_{i+1} >= C1 g~_i μ^{b_i}, i != l
    Ineq I(int i) {
        auto it = I_cache_.find(i);
        if (it != I_cache_.end()) return it->second;
        Ineq a = lo_front_to_star(F2(i));
        std::vector<bool> keep(static_cast<std::size_t>(t_));
        for (int k = 0; k < t_; ++k) keep[static_cast<std::size_t>(k)] = k == 0 || static_cast<int>(g_[static_cast<std::size_t>(k)].size()) == i;
        Ineq r = D_.trans(a, drop(keep, tg(i)));
        I_cache_[i] = r;
        return r;
    }

    int bsum(int from, int to) const {
        int s = 0;
        for (int i = from; i < to; ++i) s += bcount_[static_cast<std::size_t>(i)];
        return s;
    }

    Ineq derive() {
        const GroupWord& g1 = g_[0];
        GroupWord C1 = c(g1);
        int Bless = bsum(0, l_), Bmore = bsum(l_ + 1, omega_), bl = bcount_[static_cast<std::size_t>(l_)];

        // g_1 >= μ^{l + B<}
        Ineq cur = D_.refl(g1);
        for (int i = l_ - 1; i >= 0; --i)
            cur = D_.trans(cur, D_.sandwich(power(C1, l_ - 1 - i), I(i), mup(bsum(i + 1, l_))));
        Ineq J = D_.relabel(b_.conj(mup(-l_), cur.node), g1, mup(l_ + Bless));
        if (l_ == 0) J = D_.refl(GroupWord());

        // y g0 >= μ^{ω-1+B<} g_1^-1 y g_1 μ^{B>}
        Ineq H = D_.refl(ygw_);
        for (int i = omega_ - 1; i >= l_ + 1; --i)
            H = D_.trans(H, D_.sandwich(power(C1, omega_ - 1 - i), I(i), mup(bsum(i + 1, omega_))));
        H = D_.trans(H, D_.sandwich(power(C1, omega_ - 1 - l_), F2(l_), mup(Bmore)));
        H = D_.trans(H, D_.sandwich(GroupWord(), J, mup(omega_ - l_ - 1) * inverse(g1) * y_ * g1 * mup(Bmore)));

        // μ^{t+ω} >= y g0
        int twog1 = omega_ * t_ + d_.b - t_ - omega_;
        int lnode = b_.conj(mup(-twog1), b_.axiom(1));
        Ineq lam = D_.relabel(lnode, GroupWord(), inverse(b_.word(lnode)));
        Ineq U = D_.sandwich(GroupWord(), lam, mup(t_ + omega_));
        if (U.lo != ygw_) throw CertGenError("peripheral identity for y g0 failed");

        // g_1 μ^{b_l+1} >= y g_1
        Ineq V = D_.trans(U, H);
        V = D_.sandwich(g1 * mup(-(omega_ - 1 + Bless)), V, mup(-Bmore));

        if (t_ == 1) return case_t1(U, V);
        return case_loop(U, V, bl);
    }

    Ineq case_loop(const Ineq& U, const Ineq& V, int bl) {
        const GroupWord& g1 = g_[0];
        GroupWord C1 = c(g1);
        int lp = l_;
        if (t_ > bl) {
            lp = -1;
            for (int i = 0; i < omega_; ++i) {
                int bi = bcount_[static_cast<std::size_t>(i)];
                if (i != l_ && bi > 0 && (omega_ - 1) * bi >= t_ - bl) {
                    lp = i;
                    break;
                }
            }
            if (lp < 0) throw CertGenError("no index l' with b_l' >= (t - b_l)/(ω - 1)");
        }
        GroupWord gp = tg(lp);
        GroupWord cp = c(gp);
        int m = bl + (lp == l_ ? 0 : bcount_[static_cast<std::size_t>(lp)]);

        Ineq W;
        if (lp != l_) {
            Ineq a = lo_front_to_star(V);
            std::vector<bool> keep(static_cast<std::size_t>(t_));
            bool first = true;
            int j = 0;
            for (int k = 0; k < t_; ++k) {
                int len = static_cast<int>(g_[static_cast<std::size_t>(k)].size());
                if (len == l_) {
                    keep[static_cast<std::size_t>(k)] = true;
                    if (first) ++j;
                } else if (len == lp && first) {
                    keep[static_cast<std::size_t>(k)] = true;
                    first = false;
                }
            }
            Ineq w0 = D_.trans(a, drop(keep, g1));
            W = D_.sandwich(g1 * mup(-j) * inverse(g1), w0, mup(-(bl - j)) * inverse(g1));
            if (W.hi != C1 || W.lo != cp) throw CertGenError("comparison of conjugates failed");
        }

        // y g~' >= g~' μ^m
        Ineq X = lo_front_to_star(D_.refl(y_ * gp));
        std::vector<bool> keep(static_cast<std::size_t>(t_));
        std::vector<GroupWord> kept;
        for (int k = 0; k < t_; ++k) {
            int len = static_cast<int>(g_[static_cast<std::size_t>(k)].size());
            keep[static_cast<std::size_t>(k)] = len == l_ || len == lp;
            if (keep[static_cast<std::size_t>(k)]) kept.push_back(c(g_[static_cast<std::size_t>(k)]));
        }
        X = D_.trans(X, drop(keep, gp));
        if (lp != l_) {
            for (std::size_t p = 0; p < kept.size(); ++p) {
                if (kept[p] != C1) continue;
                std::vector<GroupWord> before(kept.begin(), kept.begin() + static_cast<long>(p));
                std::vector<GroupWord> after(kept.begin() + static_cast<long>(p) + 1, kept.end());
                X = D_.trans(X, D_.sandwich(product(before), W, product(after) * gp));
                kept[p] = cp;
            }
        }
        if (X.lo != gp * mup(m)) throw CertGenError("conjugate product did not collapse");

        // g~' μ^{t+ω} >= g~' y g0 >= y^ω g~' >= g~' μ^{ωm}
        Ineq L = D_.sandwich(gp, U, GroupWord());
        GroupWord z = gp * ygw_;
        std::vector<int> zl = z.letters;
        for (int p = 0; p < omega_; ++p) {
            if (zl[static_cast<std::size_t>(p)] != x_.letters[0]) continue;
            GroupWord pre, post;
            pre.letters.assign(zl.begin(), zl.begin() + p);
            post.letters.assign(zl.begin() + p + 1, zl.end());
            L = D_.trans(L, D_.sandwich(pre, F1(), post));
            zl[static_cast<std::size_t>(p)] = y_.letters[0];
        }
        for (int k = omega_; k >= 1; --k)
            L = D_.trans(L, D_.sandwich(power(y_, k - 1), X, mup((omega_ - k) * m)));
        Ineq fin = D_.sandwich(inverse(gp), L, GroupWord());
        e_ = t_ + omega_ - omega_ * m;
        return fin;
    }

    Ineq case_t1(const Ineq& U, const Ineq& V) {
        (void)V;
        const GroupWord& g1 = g_[0];
        Ineq L = D_.sandwich(g1, U, GroupWord());
        GroupWord z = g1 * ygw_;
        std::vector<int> zl = z.letters;
        int j = -1;
        for (int p = 0; p < omega_; ++p) {
            if (zl[static_cast<std::size_t>(p)] != x_.letters[0]) continue;
            if (j < 0) {
                j = p;
                continue;
            }
            GroupWord pre, post;
            pre.letters.assign(zl.begin(), zl.begin() + p);
            post.letters.assign(zl.begin() + p + 1, zl.end());
            L = D_.trans(L, D_.sandwich(pre, F1(), post));
            zl[static_cast<std::size_t>(p)] = y_.letters[0];
        }
        if (j < 0) throw CertGenError("t = 1 needs an x in the prefix");
        // every y of the prefix, and the one inside x = μ y, becomes c(g_1)
        for (int p = omega_ - 1; p >= 0; --p) {
            GroupWord pre;
            pre.letters.assign(zl.begin(), zl.begin() + p);
            if (p == j) pre = pre * mu_;
            L = D_.subst_lo(L, pre, rel_, true);
        }
        Ineq Y = D_.sandwich(g1 * mup(-j) * inverse(g1), L, mup(-(omega_ - j)) * inverse(g1));
        if (Y.lo != mu_) throw CertGenError("t = 1 comparison failed");
        Y = D_.subst_hi(Y, GroupWord(), rel_, false);
        if (Y.hi != y_) throw CertGenError("t = 1 substitution failed");
        Ineq X = D_.sandwich(mu_, Y, GroupWord());

        Ineq P = D_.refl(ygw_);
        int s = 0;
        for (std::size_t p = 0; p < ygw_.size(); ++p) {
            GroupWord post;
            post.letters.assign(ygw_.letters.begin() + static_cast<long>(p) + 1, ygw_.letters.end());
            bool isx = ygw_.letters[p] == x_.letters[0];
            P = D_.trans(P, D_.sandwich(mup(s), isx ? X : Y, post));
            s += isx ? 2 : 1;
        }
        Ineq fin = D_.trans(U, P);
        e_ = t_ + omega_ - s;
        return fin;
    }

    int exponent() const { return e_; }

private:
    const GammaData& d_;
    Deriv D_;
    CertBuilder& b_;
    int rel_;
    GroupWord mu_, x_, y_, ygw_;
    int omega_ = 0, t_ = 0, l_ = 0;
    std::vector<GroupWord> g_;
    std::vector<int> bcount_;
    std::map<int, Ineq> I_cache_;
    int e_ = 1;
};

}  // namespace

namespace detail {

// μ ∈ M({μ^-1, Λ}) from a forward derivation of μ^e >= 1, e <= 0.
int mirror_conclusion(const CertBuilder& fwd, int fwd_root, int e, CertBuilder& out) {
    if (e > 0) throw CertGenError("loop exponent is positive");
    int start = e == 0 ? out.identity() : out.power_of(out.axiom(0), -e);
    return extract_leaf(fwd, fwd_root, out, start, 0);
}

}  // namespace detail

Certificate property_d_certificate(int omega, int t, int b) {
    BraidWord br = one_bridge_braid(omega, t, b);
    if (closure_components(br) != 1) throw NotAKnot("closure is not a knot");
    GenusInfo gi = positive_closure_genus(br);
    if (gi.genus == 0) throw DomainError("closure of B(" + std::to_string(omega) + "," + std::to_string(t) + "," +
                                         std::to_string(b) + ") is the trivial knot");
    Presentation pres = one_bridge_presentation(omega, t, b);
    GammaData d = gamma_word(omega, t, b);
    GroupWord mu = pres.peripheral("mu");
    GroupWord Lam = power(mu, 2 * gi.genus - 1) * pres.peripheral("lambda");

    CertBuilder fwd(pres, {mu, inverse(Lam)});
    Forward F(d, fwd, 0);
    Ineq fin;
    try {
        fin = F.derive();
    } catch (const CertGenError& e) {
        throw CertGenError(std::string(e.what()) + " (partial derivation has " + std::to_string(fwd.size()) + " nodes)");
    }
    if (fwd.word(fin.node) != power(mu, F.exponent())) throw CertGenError("derivation does not end at a power of μ");

    CertBuilder out(pres, {inverse(mu), Lam});
    int root = detail::mirror_conclusion(fwd, fin.node, F.exponent(), out);
    Certificate cert = out.finish(root, mu);
    try {
        check_certificate(pres, cert.S, mu, cert);
    } catch (const CertError& e) {
        throw CertGenError(std::string("self-check failed: ") + e.what());
    }
    return cert;
}

}  // namespace braidforge
