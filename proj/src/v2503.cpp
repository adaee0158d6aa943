#include "braidforge/errors.hpp"
#include "braidforge/knotgroup.hpp"
#include "braidforge/ordercert.hpp"
#include "certbuild.hpp"

namespace braidforge {

using detail::CertBuilder;
using detail::Deriv;
using detail::Ineq;

namespace {

GroupWord W(const char* s) { return GroupWord::parse(s); }

template <class F>
NamedCheck run_check(const std::string& name, F&& f) {
    NamedCheck c;
    c.name = name;
    try {
        c.detail = f();
        c.ok = true;
    } catch (const std::exception& e) {
        c.detail = e.what();
    }
    return c;
}

Certificate sub_certificate(CertBuilder b, int node, const GroupWord& target) { return b.finish(node, target); }

}  // namespace

V2503Bundle v2503_bundle() {
    V2503Bundle out;
    Presentation& p = out.presentation;
    p.generators = {"a", "b"};
    p.relators = {W("a^2 b^-2 a b^-2 a^2 b a^2 b a b a^2 b")};
    GroupWord mu = W("b^-2 a b^-2 a b^-1"), lambda = W("a^-2 b^-1 a^-2 b");
    p.peripherals["mu"] = mu;
    p.peripherals["lambda"] = lambda;
    validate(p);
    const GroupWord& r = p.relators[0];

    // μ^-1 = b a b a^2 b a b a^2 b a^2
    out.mu_inverse_word = W("b a b a^2 b a b a^2 b a^2");
    out.mu_inverse_witness = prepend_relator_witness(p, inverse(mu), inverse(mu) * W("a^-2"), 0, false);
    out.checks.push_back(run_check("mu_inverse_word", [&] {
        check_equality_witness(p, inverse(mu), out.mu_inverse_word, out.mu_inverse_witness);
        return "mu^-1 = " + to_string(out.mu_inverse_word);
    }));
    out.checks.push_back(run_check("fixed_point_b", [&] {
        if (!fixed_point_hypotheses(out.mu_inverse_word, mu, "b", "a")) throw CertError("hypotheses fail");
        return std::string("g1=b, g2=a, g3=mu^-1, g4=mu");
    }));
    out.checks.push_back(run_check("fixed_point_a", [&] {
        if (!fixed_point_hypotheses(out.mu_inverse_word, inverse(mu), "a", "b")) throw CertError("hypotheses fail");
        return std::string("g1=a, g2=b, g3=mu^-1, g4=mu^-1 (as b a^-1 b^2 a^-1 b^2)");
    }));

    // forward over {λ}, mirrored to λ ∈ M({λ^-1})
    CertBuilder fwd(p, {lambda});
    Deriv D(fwd);
    GroupWord q = W("a^2 b a^2");
    Ineq lam{lambda, GroupWord(), fwd.axiom(0)};
    Ineq Q = D.sandwich(q, lam, GroupWord());  // b >= a^2 b a^2
    GroupWord X = W("a^2 b^-2 a b^-2"), Y = W("b a b");
    Ineq first = D.sandwich(X, Q, Y * q * W("a^-2"));
    Ineq second = D.sandwich(X * W("b") * Y, Q, W("a^-2"));
    Ineq R = D.trans(second, first);
    if (R.lo != r) throw CertGenError("relator comparison failed");
    R = D.subst_lo(R, GroupWord(), 0, true);
    Ineq A2 = D.relabel(fwd.conj(W("b^2 a^-2"), R.node), W("a^2"), GroupWord());
    Ineq N = D.sandwich(W("a^-2"), A2, GroupWord());  // 1 >= a^-2
    Ineq L = D.trans(D.sandwich(W("b^-1"), N, W("b")), D.sandwich(GroupWord(), N, W("b^-1 a^-2 b")));
    if (!L.hi.empty() || L.lo != lambda) throw CertGenError("lambda comparison failed");

    out.checks.push_back(run_check("a2ba2_le_b", [&] {
        GroupWord tgt = inverse(q) * W("b");
        check_certificate(p, {lambda}, tgt, sub_certificate(fwd, Q.node, tgt));
        return std::string("a^2 b a^2 <=_k b over S = {lambda}");
    }));
    out.checks.push_back(run_check("a2_ge_1", [&] {
        GroupWord tgt = W("a^2");
        check_certificate(p, {lambda}, tgt, sub_certificate(fwd, A2.node, tgt));
        return std::string("a^2 >=_k 1 over S = {lambda}");
    }));

    CertBuilder mir(p, {inverse(lambda)});
    std::map<int, int> memo;
    int root = detail::mirror(fwd, L.node, mir, memo);
    out.lambda_certificate = mir.finish(root, lambda);
    out.checks.push_back(run_check("lambda_certificate", [&] {
        check_certificate(p, {inverse(lambda)}, lambda, out.lambda_certificate);
        return "lambda in M({lambda^-1}), " + std::to_string(out.lambda_certificate.nodes.size()) + " nodes";
    }));

    // (0,1) filling: λ = 1
    out.filled = dehn_fill(p, 0, 1);
    const Presentation& f = out.filled;
    {
        EqualityWitness w{WitnessStep::rel_insert(1, false, static_cast<int>(q.size()))};
        std::vector<int> word = q.letters;
        apply_witness_step(f, word, w[0]);
        auto red = reduce_witness(word);
        w.insert(w.end(), red.begin(), red.end());
        out.fill_b_witness = w;
    }
    {
        int a = W("a").letters[0];
        EqualityWitness w;
        std::vector<int> word;
        auto push = [&](WitnessStep s) {
            apply_witness_step(f, word, s);
            w.push_back(s);
        };
        GroupWord c = W("b^2 a^-2");
        for (std::size_t k = 0; k < c.size(); ++k) push(WitnessStep::insert(static_cast<int>(k), c.letters[k]));
        int o = static_cast<int>(c.size());
        push(WitnessStep::rel_insert(0, false, o));
        push(WitnessStep::rel_insert(1, false, o + static_cast<int>(X.size() + q.size())));
        int end = o + static_cast<int>(r.size() + lambda.size());
        push(WitnessStep::insert(end, a));
        push(WitnessStep::insert(end + 1, a));
        push(WitnessStep::rel_insert(1, false, end + 2));
        for (const auto& s : reduce_witness(word)) push(s);
        out.fill_a2_witness = reverse_witness(f, GroupWord(), w);
    }
    out.checks.push_back(run_check("fill_0_1_a2ba2_eq_b", [&] {
        check_equality_witness(f, q, W("b"), out.fill_b_witness);
        return std::string("a^2 b a^2 = b after lambda = 1");
    }));
    out.checks.push_back(run_check("fill_0_1_a2_eq_1", [&] {
        check_equality_witness(f, W("a^2"), GroupWord(), out.fill_a2_witness);
        return std::string("a^2 = 1 after lambda = 1");
    }));
    out.checks.push_back(run_check("fill_0_1_torsion", [&] {
        auto ab = abelianization(f, {W("a")});
        bool two = false, free = false;
        for (std::size_t i = 0; i < ab.invariant_factors.size(); ++i) {
            if (ab.invariant_factors[i] == 2 && ab.probe_images[0][i] == 1) two = true;
            if (ab.invariant_factors[i] == 0) free = true;
        }
        if (ab.invariant_factors.size() != 2 || !two || !free)
            throw CertError("H1 of the filling is not Z + Z/2 with a of order 2");
        return std::string("H1 = Z + Z/2, a maps to the element of order 2");
    }));
    return out;
}

}  // namespace braidforge
