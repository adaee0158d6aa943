#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidforge/group.hpp"
#include "braidforge/laurent.hpp"

namespace braidforge {

// The arc γ for B(ω,t,b). Marks are start indices into g0; the word g_i is the suffix from
// longitude_marks[i-1], h_j the suffix from meridian_marks[j-1].
struct GammaData {
    int omega = 0;
    int t = 0;
    int b = 0;
    std::string x_name = "x";
    std::string y_name = "y";
    GroupWord g0;
    std::vector<int> longitude_marks;
    std::vector<int> meridian_marks;

    GroupWord suffix(int start) const;
    GroupWord g(int i) const;  // 0 <= i <= t, g_0 = g0
    GroupWord h(int j) const;  // 1 <= j <= ω
    GroupWord x() const { return GroupWord::gen(x_name); }
    GroupWord y() const { return GroupWord::gen(y_name); }
    GroupWord mu() const;      // x y^-1
    GroupWord r_mu() const;
    GroupWord r_lambda() const;
    GroupWord lambda() const;  // y g0 μ^(-ωt-b)
};

GammaData gamma_word(int omega, int t, int b);
GammaData gamma_word(int omega, int t, int b, const std::string& x_name, const std::string& y_name);

Presentation one_bridge_presentation(int omega, int t, int b);

// Companion generators that clash with x or y become name_k for the least free k >= 1.
std::map<std::string, std::string> satellite_renaming(const Presentation& companion);
Presentation satellite_presentation(const Presentation& companion, int omega, int t, int b);

Presentation dehn_fill(const Presentation& pres, int p, int q);

struct Abelianization {
    // Non-unit invariant factors; 0 marks a free summand.
    std::vector<long long> invariant_factors;
    // One row per probe, coordinates aligned with invariant_factors (reduced mod the factor when nonzero).
    std::vector<std::vector<long long>> probe_images;
};
Abelianization abelianization(const Presentation& pres, const std::vector<GroupWord>& probe);

// Generator exponents under the map onto Z, when H_1 = Z. UnsupportedPresentation otherwise.
std::vector<long long> infinite_cyclic_images(const Presentation& pres);

LaurentPoly fox_alexander(const Presentation& pres);

}  // namespace braidforge
