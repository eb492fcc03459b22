#include "fsrec/exact_rank.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "fsrec/errors.hpp"

namespace fsrec {

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw RankMismatchError("matrix product with incompatible shapes");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                std::int64_t term, sum;
                if (__builtin_mul_overflow(aik, b(k, j), &term) ||
                    __builtin_add_overflow(c(i, j), term, &sum))
                    throw OverflowError("matrix product overflow");
                c(i, j) = sum;
            }
        }
    }
    return c;
}

std::size_t exact_rank(const IntMatrix& m) {
    using boost::multiprecision::cpp_int;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);

    std::size_t rank = 0;
    cpp_int previous = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // exact division: every entry stays a minor of the input
                a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / previous;
            }
            a[r][c] = 0;
        }
        previous = a[rank][c];
        ++rank;
    }
    return rank;
}

} // namespace fsrec
