#include <cstdlib>
#include <numeric>
#include <optional>

#include "braidforge/errors.hpp"
#include "braidforge/markov.hpp"

namespace braidforge {

namespace {

using Letters = std::vector<int>;

// π_m^s with π_0 the empty word
Letters pw(int m, int s) {
    Letters r;
    for (int k = 0; k < s; ++k)
        for (int i = m; i >= 1; --i) r.push_back(i);
    return r;
}

Letters big(int m) {
    Letters r;
    for (int j = 1; j <= m; ++j)
        for (int i = j; i >= 1; --i) r.push_back(i);
    return r;
}

Letters ascending(int lo, int hi) {
    Letters r;
    for (int i = lo; i <= hi; ++i) r.push_back(i);
    return r;
}

Letters inv(const Letters& w) {
    Letters r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
    return r;
}

Letters rep(const Letters& w, int k) {
    Letters r;
    for (int i = 0; i < k; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

Letters cat(std::initializer_list<Letters> parts) {
    Letters r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

BraidWord bw(int n, Letters l) {
    BraidWord w;
    w.strands = n;
    w.letters = std::move(l);
    validate(w);
    return w;
}

class Builder {
public:
    explicit Builder(BraidWord start) : start_(start), cur_(std::move(start)) {}

    const BraidWord& current() const { return cur_; }
    int strands() const { return cur_.strands; }

    void coarse(const BraidWord& target) {
        if (target == cur_) return;
        push(Move::coarse(target));
    }
    void coarse(Letters l) { coarse(bw(cur_.strands, std::move(l))); }

    void conj(const Letters& g) {
        if (g.empty()) return;
        push(Move::conjugate(g));
    }

    void push(const Move& m) {
        try {
            cur_ = apply_move(cur_, m);
        } catch (const MoveError& e) {
            throw InternalInvariantViolation(std::string("converter produced an invalid step: ") + e.what());
        }
        steps_.push_back(m);
    }

    // current = X σ_m Y with X, Y free of σ_m, on m+1 strands; ends at target on m strands
    void delete_top(const Letters& x, const Letters& y, const Letters& target) {
        const int m = cur_.strands - 1;
        coarse(cat({x, Letters{m}, y}));
        conj(y);
        push(Move::destabilize());
        conj(inv(y));
        coarse(target);
    }

    void append(const MoveTrace& tr) {
        if (!(tr.start == cur_)) throw InternalInvariantViolation("trace splice mismatch");
        for (const auto& m : tr.steps) push(m);
    }

    MoveTrace trace() const { return MoveTrace{start_, steps_, cur_}; }

private:
    BraidWord start_;
    BraidWord cur_;
    std::vector<Move> steps_;
};

MoveTrace reversed(const MoveTrace& tr) {
    std::vector<BraidWord> states{tr.start};
    for (const auto& m : tr.steps) states.push_back(apply_move(states.back(), m));
    Builder b(tr.end);
    for (std::size_t k = tr.steps.size(); k-- > 0;) {
        const Move& m = tr.steps[k];
        const BraidWord& before = states[k];
        switch (m.kind) {
            case MoveKind::CoarseEquality: b.coarse(before); break;
            case MoveKind::ConjugateBy:
                b.conj(inv(m.word));
                b.coarse(before);
                break;
            case MoveKind::StabilizePos:
            case MoveKind::StabilizeNeg: b.push(Move::destabilize()); break;
            case MoveKind::Destabilize:
                b.push(states[k].letters.back() > 0 ? Move::stabilize_pos() : Move::stabilize_neg());
                break;
            default: b.coarse(before); break;
        }
    }
    return b.trace();
}

// A π_m^s C^j T  ->  A π_{m-1}^s C^{j+1} T, for m from m_hi down to m_lo (inclusive), C = σ_1..σ_{s-1}
int descend(Builder& b, const Letters& a, int s, const Letters& tail, int j, int m_hi, int m_lo) {
    const Letters c = ascending(1, s - 1);
    for (int m = m_hi; m >= m_lo; --m) {
        if (s > m) throw InternalInvariantViolation("descent needs s <= m");
        Letters x = cat({a, pw(m - 1, s - 1)});
        Letters y = cat({pw(m - 1, 1), rep(c, j + 1), tail});
        Letters target = cat({a, pw(m - 1, s), rep(c, j + 1), tail});
        b.delete_top(x, y, target);
        ++j;
    }
    return j;
}

// B(ω,t,b) -> π_{t-1}^{ω-b-1} π_t^{b+1}, valid for t <= b <= ω-1
MoveTrace twist_chain(int omega, int t, int bb) {
    if (!(t <= bb && bb <= omega - 1)) throw InternalInvariantViolation("twist chain outside t <= b <= ω-1");
    Builder b(bw(omega, cat({pw(bb, 1), pw(omega - 1, t)})));
    const Letters c_small = ascending(1, t - 1);
    int j = 0;
    if (omega - 1 >= bb + 1) j = descend(b, pw(bb, 1), t, {}, 0, omega - 1, bb + 1);
    b.coarse(cat({pw(bb, t + 1), rep(c_small, j)}));
    // second stage with s = t + 1
    const Letters tail = rep(c_small, omega - bb - 1);
    if (bb >= t + 1) descend(b, {}, t + 1, tail, 0, bb, t + 1);
    const Letters c_big = ascending(1, t);
    b.coarse(cat({pw(t, t + 1), rep(c_big, bb - t), tail}));
    const Letters want = cat({pw(t, bb), pw(t - 1, omega - bb - 1), pw(t, 1)});
    bool done = false;
    for (const Letters& g : {big(t), inv(big(t))}) {
        BraidWord trial = conjugate_reduced(b.current(), g);
        if (word_equal(trial, bw(t + 1, want))) {
            b.conj(g);
            b.coarse(want);
            done = true;
            break;
        }
    }
    if (!done) throw InternalInvariantViolation("twist chain: half-twist conjugation failed");
    b.conj(inv(pw(t, bb)));
    b.coarse(cat({pw(t - 1, omega - bb - 1), pw(t, bb + 1)}));
    return b.trace();
}

// π_{l-1}^n π_{P-1}^Q (P strands) -> π_{l-1}^n π_{Q-1}^P (Q strands), Q < P, l <= Q, l | n
MoveTrace torus_swap_down(int l, int n, int P, int Q) {
    if (!(Q < P && l <= Q && Q >= 2 && n % l == 0)) throw InternalInvariantViolation("torus swap outside its range");
    const Letters a = pw(l - 1, n);
    Builder b(bw(P, cat({a, pw(P - 1, Q)})));
    int j = descend(b, a, Q, {}, 0, P - 1, Q);
    b.coarse(cat({a, pw(Q - 1, Q), rep(ascending(1, Q - 1), j)}));
    const BraidWord want = bw(Q, cat({a, pw(Q - 1, P)}));
    for (int sgn : {-1, 1}) {
        for (int e = -Q; e <= Q; ++e) {
            Letters g = e >= 0 ? pw(Q - 1, e) : inv(pw(Q - 1, -e));
            Letters h = sgn > 0 ? big(Q - 1) : inv(big(Q - 1));
            g.insert(g.end(), h.begin(), h.end());
            if (word_equal(conjugate_reduced(b.current(), g), want)) {
                b.conj(g);
                b.coarse(want);
                return b.trace();
            }
        }
    }
    throw InternalInvariantViolation("torus swap: no conjugator found");
}

MoveTrace torus_swap(int l, int n, int P, int Q) {
    if (Q < P) return torus_swap_down(l, n, P, Q);
    return reversed(torus_swap_down(l, n, Q, P));
}

struct Target {
    int omega, t, b;
};

Target normalize(int omega, int t, int b) {
    if (b == omega - 1) return {omega, t + 1, 0};
    return {omega, t, b};
}

ConversionResult finish(Builder& b, Target tg, const std::string& cond) {
    BraidWord want = one_bridge_braid(tg.omega, tg.t, tg.b);
    if (b.strands() != want.strands) throw InternalInvariantViolation("converter ended on the wrong strand count");
    b.coarse(want);
    ConversionResult r;
    r.omega = tg.omega;
    r.t = tg.t;
    r.b = tg.b;
    r.condition = cond;
    r.trace = b.trace();
    verify_trace(r.trace);
    return r;
}

// condition (a): π_{p-2}^n π_{p-1}^q with q >= p
void chain_a(Builder& b, int p, int q, int n, Target& tg) {
    b.append(reversed(twist_chain(n + q, p - 1, q - 1)));
    tg = normalize(n + q, p - 1, q - 1);
}

// σ_1^2 π_{P-1}^Q, P >= 3, using y = Q^{-1} mod P
void chain_c_inverse(Builder& b, int P, int Q, int y, Target& tg) {
    const Letters tw = pw(P - 1, Q);
    int i_prev = 1;
    for (int s = 1; s <= y; ++s) {
        int i = static_cast<int>((1 + static_cast<long>(s) * Q) % P);
        if (i == 0 || (s < y && i < 3) || (s == y && i != 2))
            throw InternalInvariantViolation("condition (c) index sequence leaves its range");
        b.coarse(cat({Letters{1, i_prev}, tw}));
        b.coarse(cat({Letters{1}, tw, Letters{i}}));
        b.conj({i});
        if (s < y) b.coarse(cat({Letters{1, i}, tw}));
        i_prev = i;
    }
    tg = normalize(P, Q, 2);
}

void chain_c(Builder& b, int p, int q, Target& tg) {
    if (p == 2) {
        tg = {2, q + 2, 0};
        return;
    }
    if (q == 1) {
        descend(b, {1, 1}, 1, {}, 0, p - 1, 2);
        tg = {2, 3, 0};
        return;
    }
    if (q == 2) {
        int j = descend(b, {1, 1}, 2, {}, 0, p - 1, 2);
        b.coarse(rep({1}, 4 + j));
        tg = {2, p + 2, 0};
        return;
    }
    auto ci = coprime_inverses(p, q);
    if (2 * ci.y < p) {
        chain_c_inverse(b, p, q, ci.y, tg);
        return;
    }
    b.append(torus_swap(2, 2, p, q));
    chain_c_inverse(b, q, p, ci.x, tg);
}

}  // namespace

ConversionResult ttk_to_one_bridge(int p, int q, int l, int n) {
    if (p < 1 || q < 1 || l < 1 || n < 1) throw DomainError("ttk_to_one_bridge: parameters must be positive");
    if (l >= p && !(l == 2 && p == 2)) throw DomainError("ttk_to_one_bridge: need l < p (l = p = 2 is the only exception)");
    const BraidWord start = bw(p, cat({pw(l - 1, n), pw(p - 1, q)}));
    Builder b(start);
    Target tg{0, 0, 0};

    if (q >= l + 1 && l + 1 == p) {
        if (p == 2) return finish(b, {2, q, 0}, "a");
        chain_a(b, p, q, n, tg);
        return finish(b, tg, "a");
    }
    if (q == l && n % l == 0) {
        if (std::gcd(p, q) != 1) throw DomainError("condition (b) needs gcd(p,q) = 1");
        if (q == 1) {
            descend(b, {}, 1, {}, 0, p - 1, 2);
            return finish(b, {2, 1, 0}, "b");
        }
        int j = descend(b, pw(q - 1, n), q, {}, 0, p - 1, q);
        b.coarse(cat({pw(q - 1, n + q), rep(ascending(1, q - 1), j)}));
        const BraidWord want = one_bridge_braid(q, p + n, 0);
        for (int sgn : {-1, 1}) {
            Letters g = sgn > 0 ? big(q - 1) : inv(big(q - 1));
            if (word_equal(conjugate_reduced(b.current(), g), want)) {
                b.conj(g);
                return finish(b, {q, p + n, 0}, "b");
            }
        }
        throw InternalInvariantViolation("condition (b): half-twist conjugation failed");
    }
    if (l == 2 && n == 2) {
        if (std::gcd(p, q) != 1) throw DomainError("condition (c) needs gcd(p,q) = 1");
        chain_c(b, p, q, tg);
        return finish(b, tg, "c");
    }
    if (l == p - 2 && n == p - 2) {
        int k = 0, sign = 0;
        if ((q - 1) % p == 0 && q - 1 >= p) {
            k = (q - 1) / p;
            sign = 1;
        } else if ((q + 1) % p == 0) {
            k = (q + 1) / p;
            sign = -1;
        }
        if (sign != 0) {
            if (p == 3) return finish(b, {3, q, 0}, "d");
            if (p == 4) {
                chain_c(b, p, q, tg);
                return finish(b, tg, "d");
            }
            if (sign > 0) {
                // move π_{p-3} blocks through the torus part, one round per block
                const Letters tw = pw(p - 1, q);
                for (int r = 0; r <= p - 4; ++r) {
                    Letters w = cat({pw(p - 2, r), pw(p - 3, p - 3 - r)});
                    Letters e = pw(p - 2 - r, 1);
                    e.pop_back();  // σ_{p-2-r} ... σ_2
                    b.coarse(cat({w, pw(p - 3 - r, 1), tw}));
                    b.coarse(cat({w, tw, e}));
                    b.conj(e);
                    b.coarse(cat({pw(p - 2, r + 1), pw(p - 3, p - 4 - r), pw(p - 4 - r, 1), tw}));
                }
                chain_a(b, p, q, p - 3, tg);
                return finish(b, tg, "d");
            }
            if (k == 1) {
                b.append(torus_swap(p - 2, p - 2, p, p - 1));
                chain_a(b, p - 1, p, p - 2, tg);
                return finish(b, tg, "d");
            }
            // q = kp - 1, k >= 2
            const int P = k * p - 1;
            b.append(torus_swap(p - 2, p - 2, p, P));
            const Letters tw = pw(P - 1, p);
            for (int r = 0; r <= p - 4; ++r) {
                Letters w = cat({pw(p - 2, r), pw(p - 3, p - 3 - r)});
                int top = p - 3 - r;  // block σ_top .. σ_1
                for (int hop = 1; hop <= k; ++hop) {
                    Letters before, after;
                    for (int i = top; i >= 1; --i) {
                        int from = i + (hop - 1) * p;
                        int to = i + hop * p;
                        if (to >= P) to -= P;
                        before.push_back(from);
                        after.push_back(to);
                    }
                    b.coarse(cat({w, before, tw}));
                    b.coarse(cat({w, tw, after}));
                    b.conj(after);
                    if (hop < k) b.coarse(cat({w, after, tw}));
                }
                b.coarse(cat({pw(p - 2, r + 1), pw(p - 3, p - 4 - r), pw(p - 4 - r, 1), tw}));
            }
            const Letters a = pw(p - 2, p - 3);
            int j = descend(b, a, p, {}, 0, P - 1, p);
            b.coarse(cat({a, pw(p - 1, p), rep(ascending(1, p - 1), j)}));
            b.coarse(cat({pw(p - 2, 2 * p - 4), pw(p - 1, (k - 1) * p + 1)}));
            chain_a(b, p, (k - 1) * p + 1, 2 * p - 4, tg);
            return finish(b, tg, "d");
        }
    }
    throw UnsupportedCase("(p,q,l,n) = (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(l) + "," +
                          std::to_string(n) + ") matches none of the conditions (a)-(d)");
}

}  // namespace braidforge
