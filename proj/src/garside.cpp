#include "braidforge/garside.hpp"

#include <cstdlib>
#include <utility>

#include "braidforge/errors.hpp"

namespace braidforge {

namespace {

using Perm = std::vector<int>;

Perm ident(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

bool is_ident(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

bool is_delta(const Perm& p) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        if (p[i] != n - 1 - i) return false;
    return true;
}

// conjugation by Δ
Perm tau(const Perm& p) {
    const int n = static_cast<int>(p.size());
    Perm r(n);
    for (int i = 0; i < n; ++i) r[i] = n - 1 - p[n - 1 - i];
    return r;
}

// A ends with σ_{i+1}: strands at positions i, i+1 already crossed
bool finishes_with(const Perm& a, int i) { return a[i] > a[i + 1]; }

// B starts with σ_{i+1}: strands starting at i, i+1 cross in B
bool starts_with(const Perm& b, const std::vector<int>& binv, int i) {
    (void)b;
    return binv[i] > binv[i + 1];
}

std::vector<int> inverse_of(const Perm& p) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

// Make (a, b) left-weighted. Returns true if anything changed.
bool left_weight(Perm& a, Perm& b) {
    bool changed = false;
    const int n = static_cast<int>(a.size());
    for (;;) {
        auto binv = inverse_of(b);
        int found = -1;
        for (int i = 0; i + 1 < n; ++i)
            if (starts_with(b, binv, i) && !finishes_with(a, i)) {
                found = i;
                break;
            }
        if (found < 0) return changed;
        std::swap(a[found], a[found + 1]);
        // remove σ from the front of b: swap values found, found+1
        for (int& v : b) {
            if (v == found)
                v = found + 1;
            else if (v == found + 1)
                v = found;
        }
        changed = true;
    }
}

void strip(GarsideNormalForm& nf) {
    std::vector<Perm> kept;
    for (auto& f : nf.factors)
        if (!is_ident(f)) kept.push_back(std::move(f));
    std::size_t lead = 0;
    while (lead < kept.size() && is_delta(kept[lead])) ++lead;
    nf.delta_power += static_cast<int>(lead);
    nf.factors.assign(kept.begin() + static_cast<long>(lead), kept.end());
}

}  // namespace

GarsideNormalForm garside_normal_form(const BraidWord& w) {
    validate(w);
    const int n = w.strands;
    GarsideNormalForm nf;
    nf.strands = n;
    if (n < 2) return nf;
    Perm delta(n);
    for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;

    for (int x : w.letters) {
        int i = std::abs(x) - 1;
        Perm f;
        if (x > 0) {
            f = ident(n);
            std::swap(f[i], f[i + 1]);
        } else {
            // σ^{-1} = Δ^{-1} (Δ σ^{-1}); Δ^{-1} moves to the front through τ
            f = delta;
            std::swap(f[i], f[i + 1]);
            nf.delta_power -= 1;
            for (auto& g : nf.factors) g = tau(g);
        }
        nf.factors.push_back(std::move(f));
        for (std::size_t j = nf.factors.size() - 1; j > 0; --j)
            if (!left_weight(nf.factors[j - 1], nf.factors[j])) break;
        // keep the sequence short: drop trailing identities
        while (!nf.factors.empty() && is_ident(nf.factors.back())) nf.factors.pop_back();
    }
    // final sweep until stable
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t j = 1; j < nf.factors.size(); ++j)
            if (left_weight(nf.factors[j - 1], nf.factors[j])) again = true;
    }
    strip(nf);
    return nf;
}

BraidWord normal_form_word(const GarsideNormalForm& nf) {
    BraidWord w;
    w.strands = nf.strands;
    auto emit = [&](Perm p) {
        // bubble sort the array back to identity; each swap is a positive crossing
        std::vector<int> letters;
        const int n = static_cast<int>(p.size());
        for (bool sw = true; sw;) {
            sw = false;
            for (int i = 0; i + 1 < n; ++i)
                if (p[i] > p[i + 1]) {
                    std::swap(p[i], p[i + 1]);
                    letters.push_back(i + 1);
                    sw = true;
                }
        }
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(*it);
    };
    Perm delta(nf.strands);
    for (int i = 0; i < nf.strands; ++i) delta[i] = nf.strands - 1 - i;
    if (nf.delta_power < 0) throw DomainError("normal_form_word: negative Δ power has no positive word");
    for (int k = 0; k < nf.delta_power; ++k) emit(delta);
    for (const auto& f : nf.factors) emit(f);
    return w;
}

}  // namespace braidforge
