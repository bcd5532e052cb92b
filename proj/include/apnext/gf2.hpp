#pragma once

#include <cstdint>
#include <vector>

namespace apnext {

/// Incremental affine system over GF(2) with bit-packed rows.
///
/// Rows are inserted one at a time and kept in reduced row echelon form,
/// so infeasibility (a row collapsing to 0 = 1) is detected on insertion.
/// Column count is fixed up front; the right-hand side rides along as an
/// extra bit past the last column.
class Gf2System {
public:
    explicit Gf2System(unsigned cols);

    unsigned cols() const { return cols_; }
    unsigned rank() const { return static_cast<unsigned>(pivot_cols_.size()); }
    bool feasible() const { return feasible_; }

    /// Inserts the equation <row_bits, x> = rhs. row_bits holds `cols` bits
    /// packed little-endian into 64-bit words. Returns feasible().
    bool add(const std::uint64_t* row_bits, bool rhs);

    /// Convenience for cols <= 64.
    bool add(std::uint64_t row_bits, bool rhs);

    /// A solution with every free variable set to zero.
    /// Only valid while feasible().
    std::vector<std::uint8_t> solve() const;

private:
    unsigned cols_;
    unsigned words_;  // words per row, rhs bit included
    bool feasible_ = true;
    std::vector<std::uint64_t> rows_;   // rank() rows, each words_ wide
    std::vector<unsigned> pivot_cols_;  // pivot column of each stored row

    bool get_bit(const std::uint64_t* row, unsigned c) const {
        return row[c >> 6] >> (c & 63) & 1;
    }
};

}  // namespace apnext
