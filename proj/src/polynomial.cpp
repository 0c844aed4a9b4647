#include "ribbon/polynomial.hpp"

#include "json.hpp"

namespace ribbon {

SpinPolynomial SpinPolynomial::monomial(int exponent2, BigInt coeff) {
    SpinPolynomial p;
    p.add_term(exponent2, coeff);
    return p;
}

void SpinPolynomial::add_term(int exponent2, const BigInt& coeff) {
    if (coeff == 0) return;
    if (coeff < 0) throw std::invalid_argument("coefficients are nonnegative");
    if (exponent2 < 0) throw NegativeExponent("exponent " + std::to_string(exponent2) + "/2");
    terms_[exponent2] += coeff;
}

SpinPolynomial& SpinPolynomial::operator+=(const SpinPolynomial& rhs) {
    for (const auto& [e2, c] : rhs.terms_) terms_[e2] += c;
    return *this;
}

SpinPolynomial SpinPolynomial::shifted(int by2) const {
    SpinPolynomial out;
    for (const auto& [e2, c] : terms_) {
        if (e2 + by2 < 0)
            throw NegativeExponent("shift by " + std::to_string(by2) +
                                   "/2 drops exponent below zero");
        out.terms_.emplace(e2 + by2, c);
    }
    return out;
}

SpinPolynomial SpinPolynomial::mirrored(int pivot2) const {
    SpinPolynomial out;
    for (const auto& [e2, c] : terms_) {
        if (e2 > pivot2)
            throw PivotTooSmall("pivot " + std::to_string(pivot2) +
                                "/2 is below exponent " + std::to_string(e2) + "/2");
        out.terms_.emplace(pivot2 - e2, c);
    }
    return out;
}

BigInt SpinPolynomial::eval_one() const {
    BigInt sum = 0;
    for (const auto& [e2, c] : terms_) sum += c;
    return sum;
}

int SpinPolynomial::min_exponent2() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int SpinPolynomial::max_exponent2() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

namespace {

std::string plain_term(int e2, const BigInt& c) {
    std::string coeff = c.str();
    if (e2 == 0) return coeff;
    std::string power;
    if (e2 % 2 == 0)
        power = e2 == 2 ? "q" : "q^" + std::to_string(e2 / 2);
    else
        power = "q^(" + std::to_string(e2) + "/2)";
    return coeff == "1" ? power : coeff + "*" + power;
}

std::string latex_term(int e2, const BigInt& c) {
    std::string coeff = c.str();
    if (e2 == 0) return coeff;
    std::string power;
    if (e2 % 2 == 0)
        power = e2 == 2 ? "q" : "q^{" + std::to_string(e2 / 2) + "}";
    else
        power = "q^{" + std::to_string(e2) + "/2}";
    return coeff == "1" ? power : coeff + power;
}

}  // namespace

std::string SpinPolynomial::format(PolyStyle style) const {
    if (style == PolyStyle::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [e2, c] : terms_) arr.push_back({e2, c.str()});
        return arr.dump();
    }
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e2, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += style == PolyStyle::plain ? plain_term(e2, c) : latex_term(e2, c);
    }
    return out;
}

}  // namespace ribbon
