#pragma once

#include <optional>
#include <random>

#include "braidforge/errors.hpp"
#include "braidforge/markov.hpp"
#include "braidforge/ordercert.hpp"

namespace braidforge::fuzz {

inline bool mutate_raw(Certificate& c, const Presentation& pres, std::mt19937& rng);

// Single random corruption of a certificate. Returns false when nothing changed, or when every
// node is still valid with the same word as before (e.g. conjugating a power of a by a).
inline bool mutate(Certificate& c, const Presentation& pres, std::mt19937& rng) {
    const Certificate orig = c;
    if (!mutate_raw(c, pres, rng)) return false;
    if (c.root != orig.root || c.target != orig.target || c.S != orig.S) return true;
    try {
        return certificate_words(pres, c) != certificate_words(pres, orig);
    } catch (const Error&) {
        return true;
    }
}

inline bool mutate_raw(Certificate& c, const Presentation& pres, std::mt19937& rng) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    auto rand_letter = [&] {
        int g = intern(pres.generators[static_cast<std::size_t>(pick(static_cast<int>(pres.generators.size())))]);
        return make_letter(g, pick(2) ? 1 : -1);
    };
    auto poke = [&](GroupWord& w) {
        GroupWord l;
        l.letters = {rand_letter()};
        w = pick(2) ? w * l : l * w;
    };
    if (c.nodes.empty()) return false;
    int choice = pick(10);
    if (choice == 0) {
        int r = pick(static_cast<int>(c.nodes.size()));
        if (r == c.root) return false;
        c.root = r;
        return true;
    }
    if (choice == 1) {
        poke(c.target);
        return true;
    }
    CertNode& n = c.nodes[static_cast<std::size_t>(pick(static_cast<int>(c.nodes.size())))];
    int i = static_cast<int>(&n - c.nodes.data());
    auto rechild = [&](int& ch) {
        if (i == 0) return false;
        int v = pick(i);
        if (v == ch) return false;
        ch = v;
        return true;
    };
    switch (n.kind) {
        case NodeKind::Axiom:
            if (c.S.size() < 2) return false;
            n.index = (n.index + 1 + pick(static_cast<int>(c.S.size()) - 1)) % static_cast<int>(c.S.size());
            return true;
        case NodeKind::Identity: return false;
        case NodeKind::Mul:
            if (pick(3) == 0) {
                if (n.left == n.right) return false;
                std::swap(n.left, n.right);
                return true;
            }
            return rechild(pick(2) ? n.left : n.right);
        case NodeKind::Conj:
            if (pick(2)) return rechild(n.child);
            poke(n.by);
            return true;
        case NodeKind::Root:
        case NodeKind::Rewrite: break;
    }
    int sub = pick(4);
    if (sub == 0) return rechild(n.child);
    if (sub == 1) {
        if (n.kind == NodeKind::Root) {
            if (pick(2)) {
                n.n += pick(2) ? 1 : -1;
                return true;
            }
            poke(n.claimed);
        } else {
            poke(n.target);
        }
        return true;
    }
    if (n.witness.empty()) {
        n.witness.push_back(WitnessStep::insert(0, rand_letter()));
        return true;
    }
    WitnessStep& s = n.witness[static_cast<std::size_t>(pick(static_cast<int>(n.witness.size())))];
    switch (pick(5)) {
        case 0: s.pos += pick(2) ? 1 : -1; break;
        case 1:
            if (s.op == WitnessOp::FreeInsert) {
                int l = rand_letter();
                if (l == s.letter) return false;
                s.letter = l;
            } else if (s.op == WitnessOp::FreeCancel) {
                s.pos += 2;
            } else {
                s.inverse = !s.inverse;
            }
            break;
        case 2: {
            WitnessOp ops[] = {WitnessOp::FreeCancel, WitnessOp::FreeInsert, WitnessOp::RelatorInsert,
                               WitnessOp::RelatorDelete};
            WitnessOp o = ops[pick(4)];
            if (o == s.op) return false;
            s.op = o;
            if (o == WitnessOp::FreeInsert && s.letter == 0) s.letter = rand_letter();
            break;
        }
        case 3: n.witness.erase(n.witness.begin() + (&s - n.witness.data())); break;
        default: n.witness.insert(n.witness.begin() + (&s - n.witness.data()), s); break;
    }
    return true;
}

// Braid after each step; nullopt once a step fails.
inline std::vector<std::optional<BraidWord>> states(const MoveTrace& tr) {
    std::vector<std::optional<BraidWord>> out{tr.start};
    for (const auto& m : tr.steps) {
        std::optional<BraidWord> next;
        if (out.back()) {
            try {
                next = apply_move(*out.back(), m);
            } catch (const Error&) {
            }
        }
        out.push_back(next);
    }
    return out;
}

inline bool same_element(const std::optional<BraidWord>& a, const std::optional<BraidWord>& b) {
    return a && b && a->strands == b->strands && word_equal(*a, *b);
}

// Single random corruption of a move trace. Returns false when nothing changed or when the
// change keeps every intermediate braid equal to the original one.
inline bool mutate(MoveTrace& tr, std::mt19937& rng) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    auto rand_letter = [&](int strands) { return (strands < 2 ? 1 : pick(strands - 1) + 1) * (pick(2) ? 1 : -1); };
    if (tr.steps.empty() || pick(8) == 0) {
        BraidWord& w = pick(2) ? tr.end : tr.start;
        w.letters.insert(w.letters.begin() + pick(static_cast<int>(w.size()) + 1), rand_letter(w.strands));
        return true;
    }
    const MoveTrace orig = tr;
    auto before = states(orig);
    std::size_t k = static_cast<std::size_t>(pick(static_cast<int>(tr.steps.size())));
    Move& m = tr.steps[k];
    switch (pick(4)) {
        case 0:
            if (m.kind == MoveKind::CoarseEquality) {
                m.target.letters.insert(m.target.letters.begin() + pick(static_cast<int>(m.target.letters.size()) + 1),
                                        rand_letter(m.target.strands));
            } else if (m.kind == MoveKind::ConjugateBy) {
                m.word.push_back(rand_letter(before[k] ? before[k]->strands : 2));
            } else {
                m.pos += pick(2) ? 1 : -1;
            }
            break;
        case 1: {
            MoveKind kind = static_cast<MoveKind>(pick(9));
            if (kind == m.kind) return false;
            m.kind = kind;
            if (kind == MoveKind::FreeInsertAt && m.letter == 0) m.letter = rand_letter(before[k] ? before[k]->strands : 2);
            break;
        }
        case 2:
            tr.steps.erase(tr.steps.begin() + static_cast<long>(k));
            return !same_element(before[k], before[k + 1]);
        default: {
            tr.steps.insert(tr.steps.begin() + static_cast<long>(k), m);
            auto after = states(tr);
            return !same_element(after[k + 1], after[k + 2]);
        }
    }
    if (tr == orig) return false;
    auto after = states(tr);
    return !same_element(before[k + 1], after[k + 1]);
}

}  // namespace braidforge::fuzz
