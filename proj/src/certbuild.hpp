#pragma once

#include <map>
#include <vector>

#include "braidforge/ordercert.hpp"

namespace braidforge::detail {

// Appends nodes and keeps their words.
class CertBuilder {
public:
    CertBuilder(const Presentation& pres, std::vector<GroupWord> S);

    const Presentation& pres() const { return *pres_; }
    Certificate& cert() { return cert_; }
    const GroupWord& word(int node) const { return words_[static_cast<std::size_t>(node)]; }
    const CertNode& node(int i) const { return cert_.nodes[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(cert_.nodes.size()); }

    int add(CertNode n);
    int axiom(int i);
    int identity();
    int mul(int a, int b);
    int conj(const GroupWord& g, int c);
    int rewrite(int c, const GroupWord& target, EqualityWitness w);
    int root(int c, int n, const GroupWord& claimed, EqualityWitness w);
    int power_of(int c, int n);  // n >= 1 copies multiplied
    // Node with word reduce(c r^±1 c^-1 word(node)).
    int prepend_relator(int node, const GroupWord& c, int rel, bool inv);

    Certificate finish(int root, const GroupWord& target);

private:
    const Presentation* pres_;
    Certificate cert_;
    std::vector<GroupWord> words_;
    int identity_ = -1;
    std::map<int, int> axioms_;
};

// hi >=_k lo, i.e. the node proves lo^-1 hi.
struct Ineq {
    GroupWord hi;
    GroupWord lo;
    int node = -1;
};

class Deriv {
public:
    explicit Deriv(CertBuilder& b) : b_(b) {}
    CertBuilder& builder() { return b_; }

    Ineq relabel(int node, const GroupWord& hi, const GroupWord& lo);
    Ineq refl(const GroupWord& w);
    Ineq sandwich(const GroupWord& L, const Ineq& I, const GroupWord& R);
    Ineq trans(const Ineq& a, const Ineq& b);  // a.lo == b.hi
    // Insert r^±1 into hi (resp. lo) after the prefix U.
    Ineq subst_hi(const Ineq& I, const GroupWord& U, int rel, bool inv);
    Ineq subst_lo(const Ineq& I, const GroupWord& U, int rel, bool inv);

private:
    bool is_refl(const Ineq& I) const;
    CertBuilder& b_;
};

// Copies the subtree at src_node into dst with every word inverted; axioms keep their index.
int mirror(const CertBuilder& src, int src_node, CertBuilder& dst, std::map<int, int>& memo);

// dst_start proves word(src_root) in dst. Follows a path from src_root to an Axiom(leaf_axiom)
// node and returns a dst node proving that axiom's word in src.
int extract_leaf(const CertBuilder& src, int src_root, CertBuilder& dst, int dst_start, int leaf_axiom);

// mu ∈ M({mu^-1, ...}) in out, given fwd_root proving mu^e (e <= 0) over the mirrored axioms.
int mirror_conclusion(const CertBuilder& fwd, int fwd_root, int e, CertBuilder& out);

}  // namespace braidforge::detail
