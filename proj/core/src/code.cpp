#include "codegb/code.hpp"

#include <stdexcept>
#include <string>

#include "codegb/errors.hpp"

namespace codegb {

namespace {

constexpr std::size_t kOracleDimensionLimit = 20;
constexpr std::size_t kOracleLengthLimit = 20;

void require_dimension_guard(const BinaryCode& code, const char* what) {
    if (code.dimension() > kOracleDimensionLimit)
        throw ResourceError(std::string(what) + ": dimension " +
                            std::to_string(code.dimension()) + " exceeds the exhaustive limit " +
                            std::to_string(kOracleDimensionLimit));
}

}  // namespace

BinaryCode::BinaryCode(std::size_t n, BinaryMatrix generator, BinaryMatrix spanning,
                       BinaryMatrix check)
    : n_(n),
      generator_(std::move(generator)),
      spanning_rows_(std::move(spanning)),
      check_(std::move(check)) {}

BinaryCode BinaryCode::from_generator(const BinaryMatrix& rows) {
    if (rows.col_count() == 0)
        throw std::invalid_argument("from_generator: matrix has no columns");
    const std::size_t n = rows.col_count();
    BinaryMatrix basis = rref(rows).matrix;                  // k x n
    BinaryMatrix check = kernel_basis(basis).transposed();  // n x (n-k)
    return BinaryCode(n, std::move(basis), rows, std::move(check));
}

BinaryCode BinaryCode::from_check(const BinaryMatrix& h) {
    const std::size_t n = h.row_count();
    // {v : v*h = 0} is the kernel of h^T.
    BinaryMatrix basis = rref(kernel_basis(h.transposed())).matrix;
    BinaryMatrix spanning = basis;
    return BinaryCode(n, std::move(basis), std::move(spanning), h);
}

BitVec BinaryCode::syndrome(const BitVec& v) const {
    if (v.size() != n_)
        throw std::invalid_argument("syndrome: vector length " + std::to_string(v.size()) +
                                    " != code length " + std::to_string(n_));
    return row_times_matrix(v, check_);
}

std::vector<BitVec> BinaryCode::codewords() const {
    require_dimension_guard(*this, "codewords");
    const std::size_t k = dimension();
    std::vector<BitVec> out;
    out.reserve(std::size_t{1} << k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        BitVec v(n_);
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1u) v ^= generator_.row(i);
        out.push_back(std::move(v));
    }
    return out;
}

CosetLeaderMap oracle_coset_leaders(const BinaryCode& code) {
    const std::size_t n = code.length();
    if (n > kOracleLengthLimit)
        throw ResourceError("oracle_coset_leaders: length " + std::to_string(n) +
                            " exceeds the exhaustive limit " + std::to_string(kOracleLengthLimit));
    CosetLeaderMap leaders;
    leaders.reserve(std::size_t{1} << (n - code.dimension()));
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        BitVec v(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) v.set(i, true);
        Word w = Word::from_bits(v);
        BitVec s = code.syndrome(v);
        auto [it, fresh] = leaders.try_emplace(std::move(s), w);
        if (!fresh && degrevlex_order(w, it->second) == std::strong_ordering::less)
            it->second = std::move(w);
    }
    return leaders;
}

std::size_t oracle_min_distance(const BinaryCode& code) {
    if (code.dimension() == 0)
        throw std::invalid_argument(
            "oracle_min_distance: undefined for a zero-dimensional code");
    require_dimension_guard(code, "oracle_min_distance");
    std::size_t best = code.length() + 1;
    for (const BitVec& c : code.codewords()) {
        const std::size_t w = c.count();
        if (w > 0 && w < best) best = w;
    }
    return best;
}

OracleDecodeResult oracle_decode(const BinaryCode& code, const BitVec& received) {
    if (received.size() != code.length())
        throw std::invalid_argument("oracle_decode: received word length mismatch");
    require_dimension_guard(code, "oracle_decode");
    bool have = false;
    OracleDecodeResult best;
    Word best_error;
    for (const BitVec& c : code.codewords()) {
        BitVec err = received ^ c;
        const std::size_t dist = err.count();
        if (have && dist > best.distance) continue;
        Word err_word = Word::from_bits(err);
        if (!have || dist < best.distance ||
            degrevlex_order(err_word, best_error) == std::strong_ordering::less) {
            best.codeword = c;
            best.distance = dist;
            best_error = std::move(err_word);
            have = true;
        }
    }
    return best;
}

}  // namespace codegb
