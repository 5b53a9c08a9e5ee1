#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace matcharr {

using BigInt = mpz_class;
using Rational = mpq_class;

// Polynomial in t with arbitrary-precision integer coefficients, stored in
// ascending degree order. The highest stored coefficient is never zero; the
// zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);
    IntPolynomial(std::initializer_list<long> ascending);

    static IntPolynomial monomial(std::size_t degree, const BigInt& coefficient = 1);
    // prod (t - r) over the given roots
    static IntPolynomial from_roots(const std::vector<long>& roots);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coefficient(std::size_t degree) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    // Integer roots with multiplicity when the polynomial is monic and splits into
    // linear factors (t - k) with 0 <= k <= degree; nullopt otherwise.
    std::optional<std::vector<long>> integer_roots() const;

    // "t^3 - 6*t^2 + 11*t - 6"
    std::string to_string() const;
    // "t(t - 1)(t - 2)" when integer_roots() succeeds, to_string() otherwise
    std::string to_factored_string() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

Rational poly_eval(const IntPolynomial& p, const Rational& x);

} // namespace matcharr
