#include "codegb/binary_matrix.hpp"

#include <stdexcept>

namespace codegb {

BinaryMatrix BinaryMatrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
    for (const BitVec& r : rows)
        if (r.size() != cols)
            throw std::invalid_argument("from_rows: ragged row lengths");
    BinaryMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        rows_[r].for_each_set([&](std::size_t c) { t.rows_[c].set(r, true); });
    return t;
}

std::string BinaryMatrix::str() const {
    std::string out;
    out.reserve(rows_.size() * (cols_ + 1));
    for (const BitVec& r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

RrefResult rref(const BinaryMatrix& m) {
    std::vector<BitVec> rows = m.rows();
    const std::size_t cols = m.col_count();
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols && next_row < rows.size(); ++c) {
        std::size_t pivot = next_row;
        while (pivot < rows.size() && !rows[pivot].get(c)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next_row], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next_row && rows[r].get(c)) rows[r] ^= rows[next_row];
        pivots.push_back(c);
        ++next_row;
    }
    rows.resize(next_row, BitVec(cols));
    RrefResult out;
    out.matrix = BinaryMatrix::from_rows(std::move(rows), cols);
    out.rank = next_row;
    out.pivot_cols = std::move(pivots);
    return out;
}

BinaryMatrix kernel_basis(const BinaryMatrix& m) {
    const std::size_t cols = m.col_count();
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : red.pivot_cols) is_pivot[p] = true;
    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(cols);
        v.set(f, true);
        for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
            if (red.matrix.at(r, f)) v.set(red.pivot_cols[r], true);
        basis.push_back(std::move(v));
    }
    return BinaryMatrix::from_rows(std::move(basis), cols);
}

BitVec row_times_matrix(const BitVec& v, const BinaryMatrix& m) {
    if (v.size() != m.row_count())
        throw std::invalid_argument("row_times_matrix: vector length " +
                                    std::to_string(v.size()) + " != row count " +
                                    std::to_string(m.row_count()));
    BitVec acc(m.col_count());
    v.for_each_set([&](std::size_t i) { acc ^= m.row(i); });
    return acc;
}

}  // namespace codegb
