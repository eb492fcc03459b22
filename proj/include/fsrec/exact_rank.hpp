#ifndef FSREC_EXACT_RANK_HPP
#define FSREC_EXACT_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fsrec {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// a * b with overflow checks.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Rank over Q by fraction-free (Bareiss) elimination on arbitrary-precision
/// integers.
std::size_t exact_rank(const IntMatrix& m);

} // namespace fsrec

#endif
