#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "braidforge/group.hpp"

namespace braidforge {

enum class WitnessOp { FreeCancel, FreeInsert, RelatorInsert, RelatorDelete };

struct WitnessStep {
    WitnessOp op = WitnessOp::FreeCancel;
    int pos = 0;
    int letter = 0;        // FreeInsert: inserts letter, letter^-1
    int relator = 0;
    bool inverse = false;  // relator steps use r^-1

    static WitnessStep cancel(int pos);
    static WitnessStep insert(int pos, int letter);
    static WitnessStep rel_insert(int relator, bool inverse, int pos);
    static WitnessStep rel_delete(int relator, bool inverse, int pos);
    bool operator==(const WitnessStep&) const = default;
};

using EqualityWitness = std::vector<WitnessStep>;

// Applies one step; throws WitnessError describing the problem.
void apply_witness_step(const Presentation& pres, std::vector<int>& word, const WitnessStep& s);
// WitnessError("step i: ... word: ...") on failure.
void check_equality_witness(const Presentation& pres, const GroupWord& from, const GroupWord& to,
                            const EqualityWitness& w);

// Witness for the inverse words: from^-1 -> to^-1.
EqualityWitness invert_witness(const Presentation& pres, const GroupWord& from, const EqualityWitness& w);
// Witness for to -> from.
EqualityWitness reverse_witness(const Presentation& pres, const GroupWord& from, const EqualityWitness& w);
// Steps turning the reduced word `from` into reduce(c r^±1 c^-1 from).
EqualityWitness prepend_relator_witness(const Presentation& pres, const GroupWord& from, const GroupWord& c,
                                        int relator, bool inverse);
// Leftmost cancellations until the word is reduced.
EqualityWitness reduce_witness(std::vector<int> word);

nlohmann::json to_json(const WitnessStep& s);
nlohmann::json witness_to_json(const EqualityWitness& w);
EqualityWitness witness_from_json(const nlohmann::json& j);

enum class NodeKind { Axiom, Identity, Mul, Conj, Root, Rewrite };

struct CertNode {
    NodeKind kind = NodeKind::Identity;
    int index = 0;                   // Axiom
    int left = -1;                   // Mul
    int right = -1;                  // Mul
    int child = -1;                  // Conj, Root, Rewrite
    GroupWord by;                    // Conj: by child by^-1
    int n = 1;                       // Root
    GroupWord claimed;               // Root
    GroupWord target;                // Rewrite
    EqualityWitness witness;         // Root: claimed^n -> child; Rewrite: child -> target

    static CertNode axiom(int i);
    static CertNode identity();
    static CertNode mul(int l, int r);
    static CertNode conj(int c, GroupWord g);
    static CertNode root(int c, int n, GroupWord claimed, EqualityWitness w);
    static CertNode rewrite(int c, GroupWord target, EqualityWitness w);
};

struct Certificate {
    std::vector<GroupWord> S;
    GroupWord target;
    std::vector<CertNode> nodes;
    int root = -1;
};

// Words of every node; CertError("node i: ...") on the first invalid node.
std::vector<GroupWord> certificate_words(const Presentation& pres, const Certificate& cert);
void check_certificate(const Presentation& pres, const std::vector<GroupWord>& S, const GroupWord& target,
                       const Certificate& cert);

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

bool fixed_point_hypotheses(const GroupWord& g3, const GroupWord& g4, const std::string& g1, const std::string& g2);

// μ ∈ M({μ^-1, μ^(2g-1) λ}) over one_bridge_presentation(ω,t,b).
Certificate property_d_certificate(int omega, int t, int b);

// Satellite P(K). companion_cert proves mu ∈ M({mu^-1, mu^(2g-1) lambda}) over companion.
Certificate satellite_certificate(const Certificate& companion_cert, const Presentation& companion,
                                  int companion_genus, int omega, int t, int b);

struct NamedCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct V2503Bundle {
    Presentation presentation;
    Presentation filled;  // (0,1) filling
    GroupWord mu_inverse_word;
    EqualityWitness mu_inverse_witness;
    Certificate lambda_certificate;
    EqualityWitness fill_b_witness;   // a^2 b a^2 -> b
    EqualityWitness fill_a2_witness;  // a^2 -> 1
    std::vector<NamedCheck> checks;
};
V2503Bundle v2503_bundle();

}  // namespace braidforge
