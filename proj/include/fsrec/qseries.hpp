#ifndef FSREC_QSERIES_HPP
#define FSREC_QSERIES_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fsrec/types.hpp"

namespace fsrec {

/// Integer polynomial in q, exact through q^M. Arithmetic clips to the
/// smaller truncation order of its operands and throws OverflowError
/// instead of wrapping.
class QPolynomial {
public:
    explicit QPolynomial(int truncation_order = 0);
    QPolynomial(int truncation_order, std::vector<std::int64_t> coeffs);

    static QPolynomial constant(int truncation_order, std::int64_t c);
    static QPolynomial monomial(int truncation_order, int power, std::int64_t c = 1);

    int truncation_order() const { return truncation_order_; }
    std::span<const std::int64_t> coefficients() const { return coeffs_; }
    // coefficient of q^d; zero past the truncation order
    std::int64_t operator[](int d) const;

    bool is_zero() const;
    // lowest power with a nonzero coefficient; M+1 for the zero polynomial
    int valuation() const;

    QPolynomial truncated(int truncation_order) const;
    // multiplication by q^power, power >= 0
    QPolynomial shifted(int power) const;

    std::string to_string() const;

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial& operator+=(const QPolynomial& b) { return *this = *this + b; }

    bool operator==(const QPolynomial&) const = default;

private:
    int truncation_order_;
    std::vector<std::int64_t> coeffs_;
};

/// q^n + q^{2n} + ... through q^M, i.e. q^n / (1 - q^n).
QPolynomial geometric_factor(int n, int truncation_order);

/// Truncated multivariate series Σ_n A^n(q) z^n for one composition.
/// Only weights with a nonzero polynomial are stored.
class Character {
public:
    Character(LevelComposition K, int truncation_order);

    const LevelComposition& composition() const { return composition_; }
    int rank() const { return composition_.rank(); }
    int truncation_order() const { return truncation_order_; }
    const std::map<WeightVector, QPolynomial>& table() const { return table_; }

    // zero polynomial for absent or out-of-support weights
    QPolynomial at(const WeightVector& n) const;
    void set(const WeightVector& n, const QPolynomial& poly);
    void add(const WeightVector& n, const QPolynomial& poly);
    // coefficient of z^n q^degree += 1
    void add_count(const WeightVector& n, int degree);

    bool operator==(const Character& other) const = default;

private:
    void check_weight(const WeightVector& n) const;

    LevelComposition composition_;
    int truncation_order_;
    std::map<WeightVector, QPolynomial> table_;
};

/// Coefficient map of (z_1 q)^{k_0} ... (z_ℓ q)^{k_{ℓ-1}} ch(z_1 q, ..., z_ℓ q; q):
/// result(n) = q^{|n|} ch(n - (k_0, ..., k_{ℓ-1})). `ch` is expected to be
/// the character of cyclic_shift(K); the result is labeled with K.
Character shift_substitute(const Character& ch, const LevelComposition& K);

} // namespace fsrec

#endif
