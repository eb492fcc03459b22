#include "fsrec/qseries.hpp"

#include <algorithm>

#include "fsrec/errors.hpp"

namespace fsrec {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coefficient overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in product");
    return r;
}

} // namespace

QPolynomial::QPolynomial(int truncation_order)
    : truncation_order_(truncation_order), coeffs_(truncation_order + 1, 0) {
    if (truncation_order < 0) throw DomainError("truncation order must be >= 0");
}

QPolynomial::QPolynomial(int truncation_order, std::vector<std::int64_t> coeffs)
    : QPolynomial(truncation_order) {
    const auto n = std::min<std::size_t>(coeffs.size(), coeffs_.size());
    std::copy_n(coeffs.begin(), n, coeffs_.begin());
}

QPolynomial QPolynomial::constant(int truncation_order, std::int64_t c) {
    return monomial(truncation_order, 0, c);
}

QPolynomial QPolynomial::monomial(int truncation_order, int power, std::int64_t c) {
    if (power < 0) throw DomainError("negative power of q");
    QPolynomial p(truncation_order);
    if (power <= truncation_order) p.coeffs_[power] = c;
    return p;
}

std::int64_t QPolynomial::operator[](int d) const {
    return d >= 0 && d <= truncation_order_ ? coeffs_[d] : 0;
}

bool QPolynomial::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

int QPolynomial::valuation() const {
    const auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
    return static_cast<int>(it - coeffs_.begin());
}

QPolynomial QPolynomial::truncated(int truncation_order) const {
    return QPolynomial(std::min(truncation_order, truncation_order_), coeffs_);
}

QPolynomial QPolynomial::shifted(int power) const {
    if (power < 0) throw DomainError("negative shift of q");
    QPolynomial p(truncation_order_);
    for (int d = 0; d + power <= truncation_order_; ++d) p.coeffs_[d + power] = coeffs_[d];
    return p;
}

std::string QPolynomial::to_string() const {
    std::string out;
    for (int d = 0; d <= truncation_order_; ++d) {
        const auto c = coeffs_[d];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const auto mag = c < 0 ? -c : c;
        if (mag != 1 || d == 0) out += std::to_string(mag);
        if (d > 0) out += d == 1 ? "q" : "q^" + std::to_string(d);
    }
    if (out.empty()) out = "0";
    return out + " + O(q^" + std::to_string(truncation_order_ + 1) + ")";
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r(std::min(a.truncation_order_, b.truncation_order_));
    for (int d = 0; d <= r.truncation_order_; ++d) r.coeffs_[d] = checked_add(a.coeffs_[d], b.coeffs_[d]);
    return r;
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r(std::min(a.truncation_order_, b.truncation_order_));
    for (int d = 0; d <= r.truncation_order_; ++d) r.coeffs_[d] = checked_sub(a.coeffs_[d], b.coeffs_[d]);
    return r;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r(std::min(a.truncation_order_, b.truncation_order_));
    const int M = r.truncation_order_;
    for (int i = 0; i <= M; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= M; ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return r;
}

QPolynomial geometric_factor(int n, int truncation_order) {
    if (n <= 0) throw DomainError("geometric factor q^n/(1-q^n) needs n >= 1");
    std::vector<std::int64_t> c(truncation_order + 1, 0);
    for (int d = n; d <= truncation_order; d += n) c[d] = 1;
    return QPolynomial(truncation_order, std::move(c));
}

Character::Character(LevelComposition K, int truncation_order)
    : composition_(std::move(K)), truncation_order_(truncation_order) {
    if (truncation_order < 0) throw DomainError("truncation order must be >= 0");
}

void Character::check_weight(const WeightVector& n) const {
    if (n.size() != rank()) throw RankMismatchError("weight rank does not match character");
}

QPolynomial Character::at(const WeightVector& n) const {
    check_weight(n);
    const auto it = table_.find(n);
    return it == table_.end() ? QPolynomial(truncation_order_) : it->second.truncated(truncation_order_);
}

void Character::set(const WeightVector& n, const QPolynomial& poly) {
    check_weight(n);
    if (!n.is_nonnegative() || n.total() > truncation_order_) {
        if (!poly.truncated(truncation_order_).is_zero())
            throw DomainError("weight " + n.to_string() + " cannot carry coefficients below q^" +
                              std::to_string(truncation_order_ + 1));
        return;
    }
    auto p = poly.truncated(truncation_order_);
    if (p.truncation_order() < truncation_order_)
        throw DomainError("polynomial truncation order is below the character's");
    if (p.is_zero()) table_.erase(n);
    else table_.insert_or_assign(n, std::move(p));
}

void Character::add(const WeightVector& n, const QPolynomial& poly) { set(n, at(n) + poly); }

void Character::add_count(const WeightVector& n, int degree) {
    if (degree > truncation_order_) return;
    add(n, QPolynomial::monomial(truncation_order_, degree));
}

Character shift_substitute(const Character& ch, const LevelComposition& K) {
    if (ch.rank() != K.rank()) throw RankMismatchError("character rank does not match composition");
    const int M = ch.truncation_order();
    std::vector<int> shift(K.parts().begin(), K.parts().end() - 1);
    const WeightVector offset(std::move(shift));

    Character out(K, M);
    for (const auto& [n_src, poly] : ch.table()) {
        const auto n = n_src + offset;
        if (n.total() > M) continue;
        out.set(n, poly.shifted(n.total()));
    }
    return out;
}

} // namespace fsrec
