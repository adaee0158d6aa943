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

CertNode renamed(const CertNode& n, const std::map<int, int>& ids, const std::vector<int>& remap) {
    CertNode o = n;
    auto idx = [&](int c) { return c < 0 ? c : remap.at(static_cast<std::size_t>(c)); };
    o.left = idx(n.left);
    o.right = idx(n.right);
    o.child = idx(n.child);
    o.by = rename(n.by, ids);
    o.claimed = rename(n.claimed, ids);
    o.target = rename(n.target, ids);
    for (auto& s : o.witness)
        if (s.op == WitnessOp::FreeInsert) {
            auto it = ids.find(letter_id(s.letter));
            if (it != ids.end()) s.letter = make_letter(it->second, s.letter > 0 ? 1 : -1);
        }
    return o;
}

// Copies src into dst under the renaming; Axiom i becomes axiom_nodes[i].
int embed(const CertBuilder& src, int src_root, CertBuilder& dst, const std::map<int, int>& ids,
          const std::vector<int>& axiom_nodes) {
    std::vector<int> remap(static_cast<std::size_t>(src.size()), -1);
    for (int i = 0; i <= src_root; ++i) {
        const CertNode& n = src.node(i);
        if (n.kind == NodeKind::Axiom)
            remap[static_cast<std::size_t>(i)] = axiom_nodes.at(static_cast<std::size_t>(n.index));
        else
            remap[static_cast<std::size_t>(i)] = dst.add(renamed(n, ids, remap));
    }
    return remap[static_cast<std::size_t>(src_root)];
}

}  // namespace

Certificate satellite_certificate(const Certificate& companion_cert, const Presentation& companion, int companion_genus,
                                  int omega, int t, int b) {
    if (companion_genus < 1) throw DomainError("companion genus must be positive");
    int h = 2 * companion_genus - 1;
    if (t < omega * h)
        throw DomainError("slope hypothesis t/ω >= 2g(K) - 1 fails for t = " + std::to_string(t) +
                          ", ω = " + std::to_string(omega) + ", g(K) = " + std::to_string(companion_genus));
    GroupWord muK0 = companion.peripheral("mu");
    GroupWord LamK0 = power(muK0, h) * companion.peripheral("lambda");
    check_certificate(companion, {inverse(muK0), LamK0}, muK0, companion_cert);

    BraidWord br = one_bridge_braid(omega, t, b);
    GenusInfo gP = positive_closure_genus(br);
    Presentation pres = satellite_presentation(companion, omega, t, b);
    GammaData d = gamma_word(omega, t, b);
    std::map<int, int> ids;
    for (const auto& [from, to] : satellite_renaming(companion)) ids[intern(from)] = intern(to);
    int relMu = static_cast<int>(companion.relators.size()), relLa = relMu + 1;

    GroupWord mu = d.mu(), y = d.y();
    GroupWord lambda = pres.peripheral("lambda");
    int N = 2 * gP.genus + 2 * omega * companion_genus - 1;
    GroupWord Lam = power(mu, N) * lambda;
    GroupWord muK = rename(muK0, ids), laK = rename(companion.peripheral("lambda"), ids);
    GroupWord rmu = d.r_mu();

    CertBuilder fwd(pres, {mu, inverse(Lam)});
    Deriv D(fwd);
    auto mup = [&](int k) { return power(mu, k); };
    auto c = [&](const GroupWord& w) { return conjugate(w, mu); };
    Ineq mu_pos{mu, GroupWord(), fwd.axiom(0)};
    auto c_pos = [&](const GroupWord& w) { return D.sandwich(w, mu_pos, inverse(w)); };

    GroupWord ygw = y * d.g0;
    auto tg = [&](int i) {
        GroupWord w;
        w.letters.assign(ygw.letters.end() - i, ygw.letters.end());
        return w;
    };
    std::vector<GroupWord> gs;
    for (int k = omega * h + 1; k <= t; ++k) gs.push_back(d.g(k));
    std::vector<GroupWord> fs;
    for (const auto& g : gs) fs.push_back(c(g));
    GroupWord Jstar = y * inverse(product(fs));
    if (Jstar != d.r_lambda() * power(rmu, h)) throw CertGenError("tail of r_lambda is not r_lambda r_mu^h");

    // g~_{i+1} >= y g~_i >= Jstar g~_i μ^{b_i}
    std::vector<int> bcount(static_cast<std::size_t>(omega), 0);
    for (const auto& g : gs) bcount[g.size()]++;
    auto Itilde = [&](int i) {
        int letter = ygw.letters[static_cast<std::size_t>(omega - 1 - i)];
        Ineq a = letter == d.x().letters[0] ? D.sandwich(GroupWord(), D.sandwich(GroupWord(), mu_pos, y), tg(i))
                                            : D.refl(y * tg(i));
        Ineq cur = D.refl(Jstar * product(fs) * tg(i));
        std::vector<GroupWord> kept;
        for (std::size_t k = 0; k < fs.size(); ++k) {
            if (gs[k].size() == static_cast<std::size_t>(i)) {
                kept.push_back(fs[k]);
                continue;
            }
            std::vector<GroupWord> after(fs.begin() + static_cast<long>(k) + 1, fs.end());
            cur = D.trans(cur, D.sandwich(Jstar * product(kept), c_pos(gs[k]), product(after) * tg(i)));
        }
        return D.trans(a, cur);
    };
    Ineq chain = D.refl(ygw);
    int s = 0;
    for (int i = omega - 1; i >= 0; --i) {
        chain = D.trans(chain, D.sandwich(power(Jstar, omega - 1 - i), Itilde(i), mup(s)));
        s += bcount[static_cast<std::size_t>(i)];
    }
    if (s != t - omega * h) throw CertGenError("multiplicities do not sum to t - ω(2g(K)-1)");

    // μ^s >= y g0 via Λ^-1 conjugated to λ μ^N
    int lnode = fwd.conj(mup(-N), fwd.axiom(1));
    Ineq lam = D.relabel(lnode, GroupWord(), inverse(fwd.word(lnode)));
    Ineq U = D.sandwich(GroupWord(), lam, mup(s));
    if (U.lo != ygw) throw CertGenError("peripheral identity for y g0 failed");
    Ineq loop = D.sandwich(GroupWord(), D.trans(U, chain), mup(-s));
    if (!loop.hi.empty() || loop.lo != power(Jstar, omega)) throw CertGenError("satellite loop did not close");

    // Jstar^-1, then Λ_K^-1
    int jn = fwd.root(loop.node, omega, inverse(Jstar), {});
    for (int k = h; k >= 0; --k)
        jn = fwd.prepend_relator(jn, power(inverse(rmu), k), k == h ? relLa : relMu, false);
    if (fwd.word(jn) != power(muK, -h) * inverse(laK)) throw CertGenError("companion peripheral rewrite failed");
    int LamKinv = fwd.conj(inverse(laK), jn);

    // μ_K from r_μ
    int rn = -1;
    for (int j = 1; j <= omega; ++j) {
        int cj = fwd.conj(d.h(j), fwd.axiom(0));
        rn = rn < 0 ? cj : fwd.mul(rn, cj);
    }
    int muKn = fwd.prepend_relator(rn, rmu, relMu, true);
    if (fwd.word(muKn) != muK) throw CertGenError("meridian rewrite failed");

    // companion certificate, mirrored, with its axioms replaced
    CertBuilder comp_src(companion, companion_cert.S);
    for (const auto& n : companion_cert.nodes) comp_src.add(n);
    CertBuilder comp_m(companion, {muK0, inverse(LamK0)});
    std::map<int, int> memo;
    int cm = detail::mirror(comp_src, companion_cert.root, comp_m, memo);
    int muKinv = embed(comp_m, cm, fwd, ids, {muKn, LamKinv});
    if (fwd.word(muKinv) != inverse(muK)) throw CertGenError("companion certificate transplant failed");

    // r_μ^-1, then μ^-1
    int r1 = fwd.prepend_relator(muKinv, GroupWord(), relMu, true);
    if (fwd.word(r1) != inverse(rmu)) throw CertGenError("inverse meridian rewrite failed");
    int acc = r1;
    for (int j = 1; j < omega; ++j) acc = fwd.mul(acc, fwd.conj(d.h(j), fwd.axiom(0)));
    int muinv = fwd.conj(inverse(d.h(omega)), acc);
    if (fwd.word(muinv) != inverse(mu)) throw CertGenError("meridian extraction failed");

    CertBuilder out(pres, {inverse(mu), Lam});
    std::map<int, int> memo2;
    int root = detail::mirror(fwd, muinv, out, memo2);
    Certificate cert = out.finish(root, mu);
    try {
        check_certificate(pres, cert.S, mu, cert);
    } catch (const CertError& e) {
        throw CertGenError(std::string("self-check failed: ") + e.what());
    }
    return cert;
}

}  // namespace braidforge
