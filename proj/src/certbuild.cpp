#include "certbuild.hpp"

#include <functional>

#include "braidforge/errors.hpp"

namespace braidforge::detail {

CertBuilder::CertBuilder(const Presentation& pres, std::vector<GroupWord> S) : pres_(&pres) {
    cert_.S = std::move(S);
}

int CertBuilder::add(CertNode n) {
    int i = size();
    auto child = [&](int c) -> const GroupWord& {
        if (c < 0 || c >= i) throw CertGenError("builder: bad child index");
        return words_[static_cast<std::size_t>(c)];
    };
    GroupWord w;
    switch (n.kind) {
        case NodeKind::Axiom: w = cert_.S.at(static_cast<std::size_t>(n.index)); break;
        case NodeKind::Identity: break;
        case NodeKind::Mul: w = child(n.left) * child(n.right); break;
        case NodeKind::Conj: w = conjugate(n.by, child(n.child)); break;
        case NodeKind::Root:
            check_equality_witness(*pres_, power(n.claimed, n.n), child(n.child), n.witness);
            w = n.claimed;
            break;
        case NodeKind::Rewrite:
            check_equality_witness(*pres_, child(n.child), n.target, n.witness);
            w = n.target;
            break;
    }
    cert_.nodes.push_back(std::move(n));
    words_.push_back(std::move(w));
    return i;
}

int CertBuilder::axiom(int i) {
    auto it = axioms_.find(i);
    if (it != axioms_.end()) return it->second;
    int k = add(CertNode::axiom(i));
    axioms_[i] = k;
    return k;
}

int CertBuilder::identity() {
    if (identity_ < 0) identity_ = add(CertNode::identity());
    return identity_;
}

int CertBuilder::mul(int a, int b) { return add(CertNode::mul(a, b)); }

int CertBuilder::conj(const GroupWord& g, int c) {
    if (g.empty()) return c;
    return add(CertNode::conj(c, g));
}

int CertBuilder::rewrite(int c, const GroupWord& target, EqualityWitness w) {
    if (w.empty() && word(c) == target) return c;
    return add(CertNode::rewrite(c, target, std::move(w)));
}

int CertBuilder::root(int c, int n, const GroupWord& claimed, EqualityWitness w) {
    return add(CertNode::root(c, n, claimed, std::move(w)));
}

int CertBuilder::power_of(int c, int n) {
    if (n < 1) throw CertGenError("power_of needs n >= 1");
    int acc = c;
    for (int k = 1; k < n; ++k) acc = mul(acc, c);
    return acc;
}

int CertBuilder::prepend_relator(int node, const GroupWord& c, int rel, bool inv) {
    auto w = prepend_relator_witness(*pres_, word(node), c, rel, inv);
    GroupWord target = c * (inv ? inverse(pres_->relators.at(static_cast<std::size_t>(rel)))
                                : pres_->relators.at(static_cast<std::size_t>(rel))) *
                       inverse(c) * word(node);
    return rewrite(node, target, std::move(w));
}

Certificate CertBuilder::finish(int root, const GroupWord& target) {
    cert_.root = root;
    cert_.target = target;
    return cert_;
}

bool Deriv::is_refl(const Ineq& I) const {
    return I.hi == I.lo && b_.node(I.node).kind == NodeKind::Identity;
}

Ineq Deriv::relabel(int node, const GroupWord& hi, const GroupWord& lo) {
    if (inverse(lo) * hi != b_.word(node))
        throw CertGenError("relabel mismatch: " + to_string(inverse(lo) * hi) + " vs " + to_string(b_.word(node)));
    return {hi, lo, node};
}

Ineq Deriv::refl(const GroupWord& w) { return {w, w, b_.identity()}; }

Ineq Deriv::sandwich(const GroupWord& L, const Ineq& I, const GroupWord& R) {
    if (is_refl(I)) return refl(L * I.hi * R);
    return {L * I.hi * R, L * I.lo * R, b_.conj(inverse(R), I.node)};
}

Ineq Deriv::trans(const Ineq& a, const Ineq& b) {
    if (a.lo != b.hi)
        throw CertGenError("transitivity mismatch: " + to_string(a.lo) + " vs " + to_string(b.hi));
    if (is_refl(a)) return b;
    if (is_refl(b)) return a;
    return {a.hi, b.lo, b_.mul(b.node, a.node)};
}

Ineq Deriv::subst_hi(const Ineq& I, const GroupWord& U, int rel, bool inv) {
    const GroupWord& r = b_.pres().relators.at(static_cast<std::size_t>(rel));
    GroupWord hi = U * (inv ? inverse(r) : r) * inverse(U) * I.hi;
    int node = b_.prepend_relator(I.node, inverse(I.lo) * U, rel, inv);
    return relabel(node, hi, I.lo);
}

Ineq Deriv::subst_lo(const Ineq& I, const GroupWord& U, int rel, bool inv) {
    const GroupWord& r = b_.pres().relators.at(static_cast<std::size_t>(rel));
    GroupWord lo = U * (inv ? inverse(r) : r) * inverse(U) * I.lo;
    int node = b_.prepend_relator(I.node, inverse(I.lo) * U, rel, !inv);
    return relabel(node, I.hi, lo);
}

int mirror(const CertBuilder& src, int s, CertBuilder& dst, std::map<int, int>& memo) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    const CertNode& n = src.node(s);
    int out = -1;
    switch (n.kind) {
        case NodeKind::Axiom: out = dst.axiom(n.index); break;
        case NodeKind::Identity: out = dst.identity(); break;
        case NodeKind::Mul: {
            int r = mirror(src, n.right, dst, memo);
            int l = mirror(src, n.left, dst, memo);
            out = dst.mul(r, l);
            break;
        }
        case NodeKind::Conj: out = dst.conj(n.by, mirror(src, n.child, dst, memo)); break;
        case NodeKind::Root: {
            int c = mirror(src, n.child, dst, memo);
            out = dst.root(c, n.n, inverse(n.claimed),
                           invert_witness(src.pres(), power(n.claimed, n.n), n.witness));
            break;
        }
        case NodeKind::Rewrite: {
            int c = mirror(src, n.child, dst, memo);
            out = dst.rewrite(c, inverse(n.target), invert_witness(src.pres(), src.word(n.child), n.witness));
            break;
        }
    }
    memo[s] = out;
    return out;
}

int extract_leaf(const CertBuilder& src, int src_root, CertBuilder& dst, int dst_start, int leaf_axiom) {
    std::map<int, bool> reach;
    std::function<bool(int)> reaches = [&](int s) -> bool {
        auto it = reach.find(s);
        if (it != reach.end()) return it->second;
        const CertNode& n = src.node(s);
        bool r = false;
        switch (n.kind) {
            case NodeKind::Axiom: r = n.index == leaf_axiom; break;
            case NodeKind::Identity: r = false; break;
            case NodeKind::Mul: r = reaches(n.left) || reaches(n.right); break;
            default: r = reaches(n.child); break;
        }
        reach[s] = r;
        return r;
    };
    if (!reaches(src_root)) throw CertGenError("no leaf with the requested axiom");
    std::map<int, int> memo;
    int s = src_root, d = dst_start;
    for (;;) {
        if (src.word(s) != dst.word(d)) throw CertGenError("extraction lost track of the node word");
        const CertNode& n = src.node(s);
        switch (n.kind) {
            case NodeKind::Axiom: return d;
            case NodeKind::Identity: throw CertGenError("extraction reached an identity leaf");
            case NodeKind::Mul:
                if (reaches(n.left)) {
                    d = dst.mul(d, mirror(src, n.right, dst, memo));
                    s = n.left;
                } else {
                    d = dst.mul(mirror(src, n.left, dst, memo), d);
                    s = n.right;
                }
                break;
            case NodeKind::Conj:
                d = dst.conj(inverse(n.by), d);
                s = n.child;
                break;
            case NodeKind::Root: {
                d = dst.power_of(d, n.n);
                d = dst.rewrite(d, src.word(n.child), n.witness);
                s = n.child;
                break;
            }
            case NodeKind::Rewrite:
                d = dst.rewrite(d, src.word(n.child), reverse_witness(src.pres(), src.word(n.child), n.witness));
                s = n.child;
                break;
        }
    }
}

}  // namespace braidforge::detail
