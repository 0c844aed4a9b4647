#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ribbon {

using BigInt = boost::multiprecision::cpp_int;

struct NegativeExponent : std::runtime_error {
    explicit NegativeExponent(const std::string& msg) : std::runtime_error(msg) {}
};

struct PivotTooSmall : std::runtime_error {
    explicit PivotTooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

enum class PolyStyle { plain, latex, json };

// Polynomial in q with nonnegative arbitrary-precision coefficients and
// half-integer exponents stored doubled (exponent2 = 2 * exponent). Zero
// coefficients are never stored.
class SpinPolynomial {
public:
    SpinPolynomial() = default;

    static SpinPolynomial one() { return monomial(0); }
    static SpinPolynomial monomial(int exponent2, BigInt coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }

    void add_term(int exponent2, const BigInt& coeff);
    SpinPolynomial& operator+=(const SpinPolynomial& rhs);
    friend SpinPolynomial operator+(SpinPolynomial lhs, const SpinPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }

    // Multiplies by q^(by2/2); throws NegativeExponent if any exponent drops
    // below zero.
    SpinPolynomial shifted(int by2) const;
    // Maps exponent2 e to pivot2 - e; pivot2 must dominate every exponent.
    SpinPolynomial mirrored(int pivot2) const;

    BigInt eval_one() const;  // sum of coefficients

    // Smallest/largest exponent2; undefined on the zero polynomial.
    int min_exponent2() const;
    int max_exponent2() const;

    std::string format(PolyStyle style) const;

    bool operator==(const SpinPolynomial&) const = default;

private:
    std::map<int, BigInt> terms_;
};

}  // namespace ribbon
