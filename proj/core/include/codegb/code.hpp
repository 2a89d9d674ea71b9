#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "codegb/binary_matrix.hpp"
#include "codegb/bitvec.hpp"
#include "codegb/word.hpp"

namespace codegb {

/// A binary linear [n, k] code. The generator is kept as a reduced
/// row-echelon basis; the check matrix is stored n x s with syndromes as
/// length-s row vectors, so syndrome(v) = v * check. The user-supplied
/// check matrix is retained verbatim (its columns may be dependent, as for
/// graph incidence matrices).
class BinaryCode {
public:
    /// Code spanned by the rows of `rows` (dependent or zero rows are
    /// fine). Throws std::invalid_argument when `rows` has no columns.
    static BinaryCode from_generator(const BinaryMatrix& rows);

    /// Code { v : v * h = 0 } for an n x s matrix h, kept verbatim as the
    /// check matrix.
    static BinaryCode from_check(const BinaryMatrix& h);

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return generator_.row_count(); }

    const BinaryMatrix& generator() const { return generator_; }

    /// The spanning rows the code was built from, kept verbatim; equals
    /// generator() for codes built from a check matrix.
    const BinaryMatrix& spanning_rows() const { return spanning_rows_; }

    const BinaryMatrix& check() const { return check_; }
    std::size_t syndrome_length() const { return check_.col_count(); }

    /// v * check. Throws std::invalid_argument on length mismatch.
    BitVec syndrome(const BitVec& v) const;

    bool is_codeword(const BitVec& v) const { return syndrome(v).is_zero(); }

    /// All 2^k codewords. Guarded at k <= 20 (ResourceError).
    std::vector<BitVec> codewords() const;

private:
    BinaryCode(std::size_t n, BinaryMatrix generator, BinaryMatrix spanning, BinaryMatrix check);

    std::size_t n_ = 0;
    BinaryMatrix generator_;      // k x n, RREF
    BinaryMatrix spanning_rows_;  // as supplied
    BinaryMatrix check_;          // n x s
};

using CosetLeaderMap = std::unordered_map<BitVec, Word, BitVecHash>;

/// Brute force over all 2^n words: for every syndrome, the
/// degrevlex-minimal standard word attaining it. Verification oracle,
/// independent of the Groebner machinery. Guarded at n <= 20.
CosetLeaderMap oracle_coset_leaders(const BinaryCode& code);

/// Exact minimum nonzero codeword weight by exhaustive enumeration.
/// Guarded at k <= 20; throws std::invalid_argument for k = 0, where the
/// minimum distance is undefined.
std::size_t oracle_min_distance(const BinaryCode& code);

struct OracleDecodeResult {
    BitVec codeword;
    std::size_t distance = 0;
};

/// Exact nearest codeword by exhaustive enumeration; equidistant
/// candidates are resolved toward the degrevlex-minimal error word.
/// Guarded at k <= 20.
OracleDecodeResult oracle_decode(const BinaryCode& code, const BitVec& received);

}  // namespace codegb
