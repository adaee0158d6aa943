#include "braidforge/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "braidforge/errors.hpp"

namespace braidforge {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    validate(*this);
}

bool BraidWord::is_positive() const {
    return std::all_of(letters.begin(), letters.end(), [](int x) { return x > 0; });
}

void validate(const BraidWord& w) {
    if (w.strands < 1) throw DomainError("strand count must be positive, got " + std::to_string(w.strands));
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        int a = std::abs(w.letters[i]);
        if (a < 1 || a > w.strands - 1)
            throw DomainError("letter " + std::to_string(w.letters[i]) + " at index " + std::to_string(i) +
                              " out of range for " + std::to_string(w.strands) + " strands");
    }
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands) throw DomainError("strand count mismatch in concat");
    BraidWord r = u;
    r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
    return r;
}

BraidWord inverse(const BraidWord& w) {
    BraidWord r;
    r.strands = w.strands;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

BraidWord power(const BraidWord& w, int e) {
    BraidWord base = e < 0 ? inverse(w) : w;
    BraidWord r;
    r.strands = w.strands;
    for (int k = 0; k < std::abs(e); ++k) r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
    return r;
}

std::string to_string(const BraidWord& w) {
    std::ostringstream os;
    os << "B" << w.strands << "[";
    for (std::size_t i = 0; i < w.letters.size(); ++i) os << (i ? "," : "") << w.letters[i];
    os << "]";
    return os.str();
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(n);
    for (int i = 0; i < n; ++i) p.images[i] = i + 1;
    return p;
}

Permutation Permutation::then(const Permutation& next) const {
    Permutation r;
    r.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) r.images[i] = next.images[images[i] - 1];
    return r;
}

int Permutation::cycles() const {
    std::vector<bool> seen(images.size(), false);
    int c = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = images[j] - 1) seen[j] = true;
    }
    return c;
}

Permutation braid_permutation(const BraidWord& w) {
    // pos_of[s] = current position of strand s
    std::vector<int> at(w.strands);  // at[position] = strand
    for (int i = 0; i < w.strands; ++i) at[i] = i;
    for (int x : w.letters) {
        int i = std::abs(x);
        std::swap(at[i - 1], at[i]);
    }
    Permutation p;
    p.images.resize(w.strands);
    for (int pos = 0; pos < w.strands; ++pos) p.images[at[pos]] = pos + 1;
    return p;
}

BraidWord pi_power(int m, int s, int n) {
    if (m < 1 || m > n - 1) throw DomainError("pi_power: need 1 <= m <= n-1, got m=" + std::to_string(m) + " n=" + std::to_string(n));
    if (s < 0) throw DomainError("pi_power: need s >= 0");
    BraidWord w;
    w.strands = n;
    for (int k = 0; k < s; ++k)
        for (int i = m; i >= 1; --i) w.letters.push_back(i);
    return w;
}

BraidWord big_pi(int m, int n) {
    if (m < 1 || m > n - 1) throw DomainError("big_pi: need 1 <= m <= n-1, got m=" + std::to_string(m) + " n=" + std::to_string(n));
    BraidWord w;
    w.strands = n;
    for (int j = 1; j <= m; ++j)
        for (int i = j; i >= 1; --i) w.letters.push_back(i);
    return w;
}

BraidWord one_bridge_braid(int omega, int t, int b) {
    if (omega < 2) throw DomainError("one_bridge_braid: need omega >= 2");
    if (t < 1) throw DomainError("one_bridge_braid: need t >= 1");
    if (b < 0) throw DomainError("one_bridge_braid: need b >= 0");
    if (b > omega - 2) throw DomainError("one_bridge_braid: need b <= omega-2");
    BraidWord w;
    w.strands = omega;
    for (int i = b; i >= 1; --i) w.letters.push_back(i);
    auto tw = pi_power(omega - 1, t, omega);
    w.letters.insert(w.letters.end(), tw.letters.begin(), tw.letters.end());
    return w;
}

BraidWord twisted_torus_braid(int p, int q, int l, int m) {
    if (p < 2 || q < 1 || m < 1 || l < 1) throw DomainError("twisted_torus_braid: parameters must be positive (p >= 2)");
    if (l >= p && !(l == 2 && p == 2)) throw DomainError("twisted_torus_braid: need l < p (l = p = 2 is the only exception)");
    BraidWord w;
    w.strands = p;
    if (l >= 2) w = pi_power(l - 1, l * m, p);
    auto tw = pi_power(p - 1, q, p);
    w.letters.insert(w.letters.end(), tw.letters.begin(), tw.letters.end());
    return w;
}

int closure_components(const BraidWord& w) { return braid_permutation(w).cycles(); }

GenusInfo positive_closure_genus(const BraidWord& w) {
    validate(w);
    if (!w.is_positive()) throw NotPositiveBraid("word " + to_string(w) + " has a negative letter");
    int c = closure_components(w);
    if (c != 1) throw NotAKnot("closure has " + std::to_string(c) + " components");
    long num = static_cast<long>(w.letters.size()) - w.strands + 1;
    if (num % 2 != 0) throw InternalInvariantViolation("odd genus numerator for a knot closure");
    GenusInfo g;
    g.genus = static_cast<int>(num / 2);
    g.slope_threshold = 2 * g.genus - 1;
    return g;
}

bool lspace_ttk_condition(int p, int k, int l, int m) {
    if (p < 1 || k < 1 || l < 1 || m < 1) throw DomainError("lspace_ttk_condition: parameters must be positive");
    if (l >= p) throw DomainError("lspace_ttk_condition: need 0 < l < p");
    return l == p - 1 || (m == 1 && l == 2) || (m == 1 && l == p - 2);
}

nlohmann::json to_json(const BraidWord& w) { return {{"strands", w.strands}, {"word", w.letters}}; }

BraidWord braid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("strands") || !j.contains("word"))
        throw DomainError("braid JSON needs 'strands' and 'word'");
    if (!j["strands"].is_number_integer() || !j["word"].is_array()) throw DomainError("braid JSON has wrong field types");
    BraidWord w;
    w.strands = j["strands"].get<int>();
    for (const auto& x : j["word"]) {
        if (!x.is_number_integer()) throw DomainError("braid letters must be integers");
        w.letters.push_back(x.get<int>());
    }
    validate(w);
    return w;
}

}  // namespace braidforge
