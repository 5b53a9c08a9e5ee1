#include "matcharr/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace matcharr {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending))
{
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending)
{
    coeffs_.reserve(ascending.size());
    for (long c : ascending)
        coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& coefficient)
{
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = coefficient;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_roots(const std::vector<long>& roots)
{
    IntPolynomial p{1};
    for (long r : roots)
        p = p * IntPolynomial{-r, 1};
    return p;
}

BigInt IntPolynomial::coefficient(std::size_t degree) const
{
    return degree < coeffs_.size() ? coeffs_[degree] : BigInt(0);
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::optional<std::vector<long>> IntPolynomial::integer_roots() const
{
    if (is_zero() || coeffs_.back() != 1)
        return std::nullopt;
    std::vector<long> roots;
    std::vector<BigInt> rest = coeffs_;
    const long n = degree();
    // trial division by (t - k), k = 0..n
    for (long k = 0; k <= n && rest.size() > 1;) {
        // synthetic division
        std::vector<BigInt> q(rest.size() - 1);
        BigInt carry = 0;
        for (std::size_t i = rest.size(); i-- > 1;) {
            carry = rest[i] + carry * k;
            q[i - 1] = carry;
        }
        const BigInt remainder = rest[0] + carry * k;
        if (remainder == 0) {
            roots.push_back(k);
            rest = std::move(q);
        } else {
            ++k;
        }
    }
    if (rest.size() != 1)
        return std::nullopt;
    return roots;
}

namespace {

std::string term(const BigInt& magnitude, std::size_t degree)
{
    std::string s;
    if (degree == 0 || magnitude != 1)
        s = magnitude.get_str();
    if (degree > 0) {
        if (!s.empty())
            s += "*";
        s += "t";
        if (degree > 1)
            s += "^" + std::to_string(degree);
    }
    return s;
}

} // namespace

std::string IntPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        const BigInt& c = coeffs_[d];
        if (c == 0)
            continue;
        const BigInt mag = abs(c);
        if (out.empty())
            out = (c < 0 ? "-" : "") + term(mag, d);
        else
            out += (c < 0 ? " - " : " + ") + term(mag, d);
    }
    return out;
}

std::string IntPolynomial::to_factored_string() const
{
    auto roots = integer_roots();
    if (!roots)
        return to_string();
    if (roots->empty())
        return "1";
    std::ostringstream os;
    const auto zeros = std::count(roots->begin(), roots->end(), 0L);
    if (zeros > 0)
        os << "t" << (zeros > 1 ? "^" + std::to_string(zeros) : "");
    for (std::size_t i = 0; i < roots->size();) {
        const long r = (*roots)[i];
        std::size_t j = i;
        while (j < roots->size() && (*roots)[j] == r)
            ++j;
        if (r != 0) {
            os << "(t - " << r << ")";
            if (j - i > 1)
                os << "^" << j - i;
        }
        i = j;
    }
    return os.str();
}

Rational poly_eval(const IntPolynomial& p, const Rational& x)
{
    Rational acc = 0;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + Rational(c[i]);
    acc.canonicalize();
    return acc;
}

} // namespace matcharr
