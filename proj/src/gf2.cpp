#include "apnext/gf2.hpp"

#include <stdexcept>

namespace apnext {

Gf2System::Gf2System(unsigned cols) : cols_(cols), words_((cols + 1 + 63) / 64) {}

bool Gf2System::add(const std::uint64_t* row_bits, bool rhs) {
    if (!feasible_) return false;
    std::vector<std::uint64_t> row(row_bits, row_bits + (cols_ + 63) / 64);
    row.resize(words_, 0);
    if (rhs) row[cols_ >> 6] |= 1ull << (cols_ & 63);

    // reduce against existing pivots
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
        if (get_bit(row.data(), pivot_cols_[i])) {
            const std::uint64_t* other = &rows_[i * words_];
            for (unsigned w = 0; w < words_; ++w) row[w] ^= other[w];
        }
    }
    // find pivot (highest set column)
    int pivot = -1;
    for (int c = static_cast<int>(cols_) - 1; c >= 0; --c) {
        if (get_bit(row.data(), static_cast<unsigned>(c))) { pivot = c; break; }
    }
    if (pivot < 0) {
        if (get_bit(row.data(), cols_)) feasible_ = false;  // 0 = 1
        return feasible_;
    }
    // back-eliminate the new pivot column from stored rows
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
        std::uint64_t* other = &rows_[i * words_];
        if (get_bit(other, static_cast<unsigned>(pivot))) {
            for (unsigned w = 0; w < words_; ++w) other[w] ^= row[w];
        }
    }
    pivot_cols_.push_back(static_cast<unsigned>(pivot));
    rows_.insert(rows_.end(), row.begin(), row.end());
    return true;
}

bool Gf2System::add(std::uint64_t row_bits, bool rhs) {
    if (cols_ > 64) throw std::logic_error("row wider than one word");
    return add(&row_bits, rhs);
}

std::vector<std::uint8_t> Gf2System::solve() const {
    if (!feasible_) throw std::logic_error("system is infeasible");
    std::vector<std::uint8_t> x(cols_, 0);
    // rows are in RREF: each pivot variable equals its row's rhs when all
    // free variables are zero
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i)
        x[pivot_cols_[i]] = get_bit(&rows_[i * words_], cols_) ? 1 : 0;
    return x;
}

}  // namespace apnext
