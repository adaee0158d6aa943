#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace braidforge {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls);

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    bool is_positive() const;
    bool operator==(const BraidWord&) const = default;
};

// Throws DomainError if a letter is out of range.
void validate(const BraidWord& w);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, int e);
std::string to_string(const BraidWord& w);

// images[k-1] = final position of the strand entering at position k.
// Letters are read left to right, bottom to top; σ_i exchanges positions i and i+1.
// With this convention π_{ω-1} sends k to k+1 and ω to 1.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    Permutation then(const Permutation& next) const;
    int cycles() const;
    bool operator==(const Permutation&) const = default;
};

Permutation braid_permutation(const BraidWord& w);

BraidWord pi_power(int m, int s, int n);
BraidWord big_pi(int m, int n);
BraidWord one_bridge_braid(int omega, int t, int b);
BraidWord twisted_torus_braid(int p, int q, int l, int m);

int closure_components(const BraidWord& w);

struct GenusInfo {
    int genus = 0;
    int slope_threshold = 0;
};
GenusInfo positive_closure_genus(const BraidWord& w);

bool lspace_ttk_condition(int p, int k, int l, int m);

nlohmann::json to_json(const BraidWord& w);
BraidWord braid_from_json(const nlohmann::json& j);

}  // namespace braidforge
