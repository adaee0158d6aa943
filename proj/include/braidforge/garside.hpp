#pragma once

#include <vector>

#include "braidforge/braid.hpp"

namespace braidforge {

// Left normal form Δ^k A_1 ... A_r of a braid. Each A_j is a permutation braid
// stored as the array at[pos] = strand occupying pos (0-based) after the factor.
struct GarsideNormalForm {
    int strands = 1;
    int delta_power = 0;
    std::vector<std::vector<int>> factors;
    bool operator==(const GarsideNormalForm&) const = default;
};

GarsideNormalForm garside_normal_form(const BraidWord& w);
BraidWord normal_form_word(const GarsideNormalForm& nf);  // positive factors, Δ^k expanded

}  // namespace braidforge
