#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/laurent.hpp"

namespace braidforge {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

struct BurauMatrix {
    PolyMatrix m;  // (n-1) x (n-1)
    int dim() const { return static_cast<int>(m.size()); }
    bool operator==(const BurauMatrix&) const = default;
};

BurauMatrix identity_burau(int dim);
BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);

// σ_i acts as the identity except row i (1-based):
//   (i,i-1) = t, (i,i) = -t, (i,i+1) = 1.
// So σ_1 on 2 strands is the 1x1 matrix [-t].
BurauMatrix burau_generator(int letter, int strands);
BurauMatrix burau_reduced(const BraidWord& w);

// Fraction-free Gaussian elimination; all divisions are exact.
LaurentPoly determinant(PolyMatrix m);

LaurentPoly alexander_from_braid(const BraidWord& w);

struct EvidenceReport {
    int components_u = 0;
    int components_v = 0;
    std::optional<LaurentPoly> alexander_u;
    std::optional<LaurentPoly> alexander_v;
    std::string verdict;  // consistent | inconsistent
    std::string note;
};

EvidenceReport same_closure_evidence(const BraidWord& u, const BraidWord& v);
nlohmann::json to_json(const EvidenceReport& r);

}  // namespace braidforge
