#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace altind {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with exact integer coefficients; index k holds
/// the coefficient of x^k. Trailing zeros are never stored, so the zero
/// polynomial has no coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long long> coeffs);
    explicit Polynomial(std::vector<BigInt> coeffs);

    static Polynomial one() { return Polynomial{1}; }
    /// (1 + x)^m
    static Polynomial one_plus_x_pow(int m);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coefficient(int k) const;
    BigInt evaluate(const BigInt& x) const;

    /// Multiply by x.
    Polynomial shifted() const;

    Polynomial& operator+=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const;

  private:
    void trim();

    std::vector<BigInt> coeffs_;
};

}  // namespace altind
