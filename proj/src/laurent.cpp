#include "braidforge/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "braidforge/errors.hpp"

namespace braidforge {

namespace {

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
    LaurentPoly::Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
    return r;
}

LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
    LaurentPoly::Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
    return r;
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_[exponent] = c;
    return p;
}

LaurentPoly LaurentPoly::from_map(const std::map<int, Coeff>& m) {
    LaurentPoly p;
    for (auto [e, c] : m) p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(int e, Coeff c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw DomainError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw DomainError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly::Coeff LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

LaurentPoly::Coeff LaurentPoly::leading() const { return is_zero() ? 0 : terms_.rbegin()->second; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.terms_[e] = checked_mul(c, -1);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [e1, c1] : a.terms_)
        for (auto [e2, c2] : b.terms_) r.add_term(e1 + e2, checked_mul(c1, c2));
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::substitute(int k) const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.add_term(e * k, c);
    return r;
}

LaurentPoly::Coeff LaurentPoly::at_one() const {
    Coeff s = 0;
    for (auto [e, c] : terms_) s = checked_add(s, c);
    return s;
}

bool LaurentPoly::divides_into(const LaurentPoly& b, LaurentPoly* quotient) const {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly q;
    const int bmax = b.max_exp();
    const int bmin = b.min_exp();
    const Coeff blead = b.leading();
    while (!rem.is_zero()) {
        int rmax = rem.max_exp();
        if (rmax - bmax < rem.min_exp() - bmin) return false;
        Coeff rl = rem.leading();
        if (rl % blead != 0) return false;
        LaurentPoly term = monomial(rl / blead, rmax - bmax);
        q += term;
        rem -= term * b;
    }
    if (quotient) *quotient = q;
    return true;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& b) const {
    LaurentPoly q;
    if (!divides_into(b, &q))
        throw InternalInvariantViolation("inexact division of " + to_string() + " by " + b.to_string());
    return q;
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero()) return *this;
    LaurentPoly r = shifted(-min_exp());
    if (r.leading() < 0) r = -r;
    return r;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms_) {
        Coeff a = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << "t";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
    std::string z;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) z += ch;
    if (z.empty()) throw DomainError("empty polynomial text");
    LaurentPoly p;
    std::size_t i = 0;
    bool any = false;
    while (i < z.size()) {
        int sign = 1;
        if (z[i] == '+' || z[i] == '-') {
            sign = z[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw DomainError("expected sign in polynomial text at " + std::to_string(i));
        }
        Coeff c = 1;
        bool have_c = false;
        std::size_t j = i;
        while (j < z.size() && std::isdigit(static_cast<unsigned char>(z[j]))) ++j;
        if (j > i) {
            c = std::stoll(z.substr(i, j - i));
            have_c = true;
            i = j;
        }
        int e = 0;
        if (i < z.size() && (z[i] == '*' || z[i] == 't')) {
            if (z[i] == '*') {
                if (!have_c) throw DomainError("dangling '*' in polynomial text");
                ++i;
            }
            if (i >= z.size() || z[i] != 't') throw DomainError("expected 't' in polynomial text");
            ++i;
            e = 1;
            if (i < z.size() && z[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < z.size() && z[k] == '-') ++k;
                std::size_t st = k;
                while (k < z.size() && std::isdigit(static_cast<unsigned char>(z[k]))) ++k;
                if (k == st) throw DomainError("bad exponent in polynomial text");
                e = std::stoi(z.substr(i, k - i));
                i = k;
            }
        } else if (!have_c) {
            throw DomainError("expected term in polynomial text at " + std::to_string(i));
        }
        p.add_term(e, sign * c);
        any = true;
    }
    return p;
}

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json j = nlohmann::json::object();
    for (auto [e, c] : p.terms()) j[std::to_string(e)] = c;
    return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DomainError("polynomial JSON must be an object");
    std::map<int, LaurentPoly::Coeff> m;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number_integer()) throw DomainError("polynomial coefficients must be integers");
        m[std::stoi(it.key())] += it.value().get<LaurentPoly::Coeff>();
    }
    return LaurentPoly::from_map(m);
}

}  // namespace braidforge
