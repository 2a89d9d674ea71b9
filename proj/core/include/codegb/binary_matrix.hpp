#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "codegb/bitvec.hpp"

namespace codegb {

/// Row-major matrix over GF(2). Rows are bit-packed, so elimination works
/// a machine word at a time.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVec(cols)) {}

    /// Builds a matrix from equal-length rows. Throws std::invalid_argument
    /// on ragged input. An empty row list gives a 0 x cols matrix.
    static BinaryMatrix from_rows(std::vector<BitVec> rows, std::size_t cols);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_; }

    bool at(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value) { rows_[r].set(c, value); }

    const BitVec& row(std::size_t r) const { return rows_[r]; }
    BitVec& row(std::size_t r) { return rows_[r]; }
    const std::vector<BitVec>& rows() const { return rows_; }

    BinaryMatrix transposed() const;

    /// One '0'/'1' line per row, each line newline-terminated.
    std::string str() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BinaryMatrix matrix;  // zero rows dropped
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form over GF(2); deterministic.
RrefResult rref(const BinaryMatrix& m);

/// Rows form a basis of the right kernel { v : m * v^T = 0 }.
/// Row count equals col_count(m) - rank(m).
BinaryMatrix kernel_basis(const BinaryMatrix& m);

/// v * m for a row vector v of length row_count(m); result has length
/// col_count(m).
BitVec row_times_matrix(const BitVec& v, const BinaryMatrix& m);

}  // namespace codegb
