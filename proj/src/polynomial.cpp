#include "altind/polynomial.hpp"

#include <algorithm>

namespace altind {

Polynomial::Polynomial(std::initializer_list<long long> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { trim(); }

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::one_plus_x_pow(int m) {
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
    row[0] = 1;
    for (int k = 1; k <= m; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1] * (m - k + 1) / k;
    return Polynomial(std::move(row));
}

BigInt Polynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

BigInt Polynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::shifted() const {
    if (coeffs_.empty()) return {};
    std::vector<BigInt> out;
    out.reserve(coeffs_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return {};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) s += ", ";
        s += coeffs_[k].str();
    }
    return s + "]";
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace altind
