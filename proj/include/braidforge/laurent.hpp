#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace braidforge {

// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    LaurentPoly(Coeff c);  // constant
    static LaurentPoly monomial(Coeff c, int exponent);
    static LaurentPoly from_map(const std::map<int, Coeff>& m);

    const std::map<int, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;
    Coeff coeff(int e) const;
    Coeff leading() const;
    int span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly shifted(int k) const;       // times t^k
    LaurentPoly substitute(int k) const;    // t -> t^k
    LaurentPoly mirrored() const { return substitute(-1); }
    Coeff at_one() const;

    // Exact division; throws if b does not divide *this in Z[t, t^-1].
    LaurentPoly divide_exact(const LaurentPoly& b) const;
    bool divides_into(const LaurentPoly& b, LaurentPoly* quotient) const;

    // Multiply by a unit ±t^k so that the minimum exponent is 0 and the top coefficient is positive.
    LaurentPoly normalized() const;

    std::string to_string() const;
    static LaurentPoly parse(const std::string& s);

private:
    void add_term(int e, Coeff c);
    std::map<int, Coeff> terms_;
};

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace braidforge
