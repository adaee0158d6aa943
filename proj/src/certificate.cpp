#include <map>

#include "braidforge/errors.hpp"
#include "braidforge/ordercert.hpp"

namespace braidforge {

CertNode CertNode::axiom(int i) {
    CertNode n;
    n.kind = NodeKind::Axiom;
    n.index = i;
    return n;
}

CertNode CertNode::identity() { return CertNode{}; }

CertNode CertNode::mul(int l, int r) {
    CertNode n;
    n.kind = NodeKind::Mul;
    n.left = l;
    n.right = r;
    return n;
}

CertNode CertNode::conj(int c, GroupWord g) {
    CertNode n;
    n.kind = NodeKind::Conj;
    n.child = c;
    n.by = std::move(g);
    return n;
}

CertNode CertNode::root(int c, int k, GroupWord claimed, EqualityWitness w) {
    CertNode n;
    n.kind = NodeKind::Root;
    n.child = c;
    n.n = k;
    n.claimed = std::move(claimed);
    n.witness = std::move(w);
    return n;
}

CertNode CertNode::rewrite(int c, GroupWord target, EqualityWitness w) {
    CertNode n;
    n.kind = NodeKind::Rewrite;
    n.child = c;
    n.target = std::move(target);
    n.witness = std::move(w);
    return n;
}

std::vector<GroupWord> certificate_words(const Presentation& pres, const Certificate& cert) {
    std::vector<GroupWord> words;
    words.reserve(cert.nodes.size());
    for (std::size_t i = 0; i < cert.nodes.size(); ++i) {
        const CertNode& n = cert.nodes[i];
        auto fail = [&](const std::string& why) -> CertError {
            return CertError("node " + std::to_string(i) + ": " + why);
        };
        auto earlier = [&](int c) -> const GroupWord& {
            if (c < 0 || c >= static_cast<int>(i)) throw fail("child index " + std::to_string(c) + " is not an earlier node");
            return words[static_cast<std::size_t>(c)];
        };
        auto check_word = [&](const GroupWord& w) {
            try {
                validate_word(pres, w.letters);
            } catch (const DomainError& e) {
                throw fail(e.what());
            }
        };
        switch (n.kind) {
            case NodeKind::Axiom:
                if (n.index < 0 || n.index >= static_cast<int>(cert.S.size())) throw fail("axiom index out of range");
                words.push_back(cert.S[static_cast<std::size_t>(n.index)]);
                break;
            case NodeKind::Identity: words.push_back(GroupWord()); break;
            case NodeKind::Mul: {
                const GroupWord& l = earlier(n.left);
                const GroupWord& r = earlier(n.right);
                words.push_back(l * r);
                break;
            }
            case NodeKind::Conj: {
                const GroupWord& c = earlier(n.child);
                check_word(n.by);
                words.push_back(conjugate(n.by, c));
                break;
            }
            case NodeKind::Root: {
                const GroupWord& c = earlier(n.child);
                if (n.n < 1) throw fail("root exponent must be positive");
                check_word(n.claimed);
                try {
                    check_equality_witness(pres, power(n.claimed, n.n), c, n.witness);
                } catch (const WitnessError& e) {
                    throw fail(e.what());
                }
                words.push_back(n.claimed);
                break;
            }
            case NodeKind::Rewrite: {
                const GroupWord& c = earlier(n.child);
                check_word(n.target);
                try {
                    check_equality_witness(pres, c, n.target, n.witness);
                } catch (const WitnessError& e) {
                    throw fail(e.what());
                }
                words.push_back(n.target);
                break;
            }
        }
    }
    return words;
}

void check_certificate(const Presentation& pres, const std::vector<GroupWord>& S, const GroupWord& target,
                       const Certificate& cert) {
    if (cert.S != S) throw CertError("certificate axioms differ from S");
    if (cert.target != target) throw CertError("certificate target differs from the requested target");
    for (const auto& s : S) {
        try {
            validate_word(pres, s.letters);
        } catch (const DomainError& e) {
            throw CertError(std::string("axiom: ") + e.what());
        }
    }
    if (cert.root < 0 || cert.root >= static_cast<int>(cert.nodes.size())) throw CertError("root index out of range");
    auto words = certificate_words(pres, cert);
    if (words[static_cast<std::size_t>(cert.root)] != target)
        throw CertError("root word " + to_string(words[static_cast<std::size_t>(cert.root)]) + " is not the target " +
                        to_string(target));
}

namespace {

const std::map<NodeKind, std::string>& kind_names() {
    static const std::map<NodeKind, std::string> m = {{NodeKind::Axiom, "Axiom"}, {NodeKind::Identity, "Identity"},
                                                      {NodeKind::Mul, "Mul"},     {NodeKind::Conj, "Conj"},
                                                      {NodeKind::Root, "Root"},   {NodeKind::Rewrite, "Rewrite"}};
    return m;
}

int get_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw DomainError(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

const nlohmann::json& get(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
    return j[key];
}

}  // namespace

nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["S"] = nlohmann::json::array();
    for (const auto& s : c.S) j["S"].push_back(to_json(s));
    j["target"] = to_json(c.target);
    j["root"] = c.root;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : c.nodes) {
        nlohmann::json e;
        e["kind"] = kind_names().at(n.kind);
        switch (n.kind) {
            case NodeKind::Axiom: e["index"] = n.index; break;
            case NodeKind::Identity: break;
            case NodeKind::Mul: e["args"] = {n.left, n.right}; break;
            case NodeKind::Conj:
                e["child"] = n.child;
                e["by"] = to_json(n.by);
                break;
            case NodeKind::Root:
                e["child"] = n.child;
                e["n"] = n.n;
                e["claimed"] = to_json(n.claimed);
                e["witness"] = witness_to_json(n.witness);
                break;
            case NodeKind::Rewrite:
                e["child"] = n.child;
                e["target"] = to_json(n.target);
                e["witness"] = witness_to_json(n.witness);
                break;
        }
        j["nodes"].push_back(e);
    }
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DomainError("certificate must be an object");
    Certificate c;
    for (const auto& s : get(j, "S")) c.S.push_back(word_from_json(s));
    c.target = word_from_json(get(j, "target"));
    c.root = get_int(j, "root");
    const auto& nodes = get(j, "nodes");
    if (!nodes.is_array()) throw DomainError("nodes must be an array");
    for (const auto& e : nodes) {
        if (!e.is_object() || !e.contains("kind") || !e["kind"].is_string()) throw DomainError("node needs kind");
        std::string k = e["kind"].get<std::string>();
        CertNode n;
        bool found = false;
        for (const auto& [kind, name] : kind_names())
            if (name == k) {
                n.kind = kind;
                found = true;
            }
        if (!found) throw DomainError("unknown node kind '" + k + "'");
        switch (n.kind) {
            case NodeKind::Axiom: n.index = get_int(e, "index"); break;
            case NodeKind::Identity: break;
            case NodeKind::Mul: {
                const auto& a = get(e, "args");
                if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
                    throw DomainError("Mul needs two integer args");
                n.left = a[0].get<int>();
                n.right = a[1].get<int>();
                break;
            }
            case NodeKind::Conj:
                n.child = get_int(e, "child");
                n.by = word_from_json(get(e, "by"));
                break;
            case NodeKind::Root:
                n.child = get_int(e, "child");
                n.n = get_int(e, "n");
                n.claimed = word_from_json(get(e, "claimed"));
                n.witness = witness_from_json(get(e, "witness"));
                break;
            case NodeKind::Rewrite:
                n.child = get_int(e, "child");
                n.target = word_from_json(get(e, "target"));
                n.witness = witness_from_json(get(e, "witness"));
                break;
        }
        c.nodes.push_back(std::move(n));
    }
    return c;
}

bool fixed_point_hypotheses(const GroupWord& g3, const GroupWord& g4, const std::string& g1, const std::string& g2) {
    int a = make_letter(intern(g1), 1), b = make_letter(intern(g2), 1);
    bool has = false;
    for (int l : g3.letters) {
        if (l != a && l != b) return false;
        has = has || l == a;
    }
    if (!has) return false;
    has = false;
    for (int l : g4.letters) {
        if (l != -a && l != b) return false;
        has = has || l == -a;
    }
    return has;
}

}  // namespace braidforge
