#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "codegb/bitvec.hpp"
#include "codegb/code.hpp"
#include "codegb/word.hpp"

namespace codegb {

/// head - tail with head > tail under degrevlex. Both sides of a basis
/// binomial share a syndrome, i.e. the difference lies in the code ideal.
struct Binomial {
    Word head;
    Word tail;

    bool operator==(const Binomial&) const = default;
};

/// True when the head is exactly some x_i^2.
bool is_square(const Binomial& b);

/// psi(head) + psi(tail); always a codeword for basis binomials.
BitVec binomial_codeword(const Binomial& b);

/// Resource envelope for the term enumeration: the staircase holds
/// 2^(n-k) words, so the cost is Theta(n * 2^(n-k)).
struct GbLimits {
    std::size_t max_coset_log2 = 16;
    bool unbounded = false;
};

/// The reduced Groebner basis of the binomial ideal of a binary code,
/// with respect to degrevlex (x1 < ... < xn). Immutable once built;
/// reductions on a shared basis are pure and thread-safe.
class GroebnerBasis {
public:
    /// Reassembles a basis from parsed binomials; the staircase is
    /// rebuilt from the given heads. Intended for round-tripping
    /// serialized output; verify_reduced_basis tells whether the parts
    /// actually form a reduced basis.
    static GroebnerBasis from_parts(BinaryCode code, std::vector<Binomial> binomials);

    const BinaryCode& code() const { return code_; }

    /// Every emitted binomial in emission order (squares interleaved).
    const std::vector<Binomial>& emitted() const { return emitted_; }

    /// The x_i^2 - 1 binomials present in the reduced basis.
    const std::vector<Binomial>& squares() const { return squares_; }

    /// Non-square basis binomials, ascending by head under degrevlex.
    const std::vector<Binomial>& elements() const { return elements_; }

    /// Support masks of the element heads, parallel to elements().
    const std::vector<BitVec>& element_head_bits() const { return element_head_bits_; }

    /// |N|: number of words irreducible modulo the basis.
    std::size_t staircase_size() const { return canon_.size(); }

    /// The canonical (irreducible) word for a syndrome, or nullptr when
    /// the syndrome is unknown to the staircase.
    const Word* canonical_for_syndrome(const BitVec& syndrome) const;

    /// False when rebuilding the staircase hit a contradiction (syndrome
    /// collision, non-standard staircase word, or size overflow).
    bool staircase_consistent() const { return staircase_consistent_; }

private:
    friend GroebnerBasis compute_groebner_basis(const BinaryCode&, const GbLimits&);

    explicit GroebnerBasis(BinaryCode code) : code_(std::move(code)) {}
    void index_emitted();

    BinaryCode code_;
    std::vector<Binomial> emitted_;
    std::vector<Binomial> squares_;
    std::vector<Binomial> elements_;
    std::vector<BitVec> element_head_bits_;
    std::unordered_map<BitVec, Word, BitVecHash> canon_;
    bool staircase_consistent_ = true;
};

/// The defining generators of the code's binomial ideal: w - 1 for the
/// standard word w of every spanning row, plus x_i^2 - 1 for every
/// variable.
std::vector<Binomial> ideal_generators(const BinaryCode& code);

/// Computes the reduced Groebner basis by enumerating terms in ascending
/// degrevlex order and matching syndromes against the staircase (the
/// linear-algebra / FGLM route; no S-polynomials). Throws ResourceError
/// when n - k exceeds limits.max_coset_log2 and limits.unbounded is off.
GroebnerBasis compute_groebner_basis(const BinaryCode& code, const GbLimits& limits = {});

/// One reduction step: take the standard form, then rewrite by the basis
/// element whose head is the degrevlex-smallest divisor. Irreducible
/// input comes back as its standard form.
Word one_step_reduce(const Word& w, const GroebnerBasis& gb);

/// Iterates one_step_reduce to its fixpoint: the degrevlex-minimal
/// standard word sharing the input's syndrome.
Word canonical_form(const Word& w, const GroebnerBasis& gb);

struct DecodeResult {
    BitVec error;
    BitVec codeword;
    /// True when the error weight is within the code's correction radius,
    /// i.e. the returned codeword is the unique nearest one. The codeword
    /// is a nearest codeword either way.
    bool within_capability = false;
};

/// Syndrome decoding by reduction to canonical form.
DecodeResult decode(const GroebnerBasis& gb, const BitVec& received);

/// t = (minimum head degree over non-square elements) - 1. Throws
/// std::invalid_argument for zero-dimensional codes.
std::size_t error_capability(const GroebnerBasis& gb);

/// Same value as error_capability, but stops the term enumeration at the
/// first emitted binomial whose head is standard instead of finishing the
/// basis.
std::size_t error_capability_early(const BinaryCode& code, const GbLimits& limits = {});

struct CodewordReduction {
    Binomial used;
    Word next;  // standard form of the reduced word
};

/// One weight-bounded reduction step on a standard codeword word: picks
/// a basis element with head degree at most floor((weight-1)/2)+1
/// dividing the word, and rewrites. The used binomial's codeword plus
/// the image of `next` recomposes the input. Throws
/// std::invalid_argument unless the input is standard with a nonzero
/// codeword image.
CodewordReduction reduce_codeword_step(const Word& word, const GroebnerBasis& gb);

/// Repeated reduce_codeword_step until the empty word: the binomial
/// codewords of the returned elements sum to `codeword`, each with weight
/// at most weight(codeword) and head degree at most
/// floor((weight(codeword)-1)/2)+1.
std::vector<Binomial> decompose(const BitVec& codeword, const GroebnerBasis& gb);

struct MinWeightCodewords {
    std::size_t min_weight = 0;
    std::vector<BitVec> codewords;  // deduplicated, ascending by bit string
};

/// All minimum-weight codewords, read off the minimal-head-degree slice
/// of the basis (single binomials plus shared-tail head pairs).
MinWeightCodewords min_weight_codewords(const GroebnerBasis& gb);

/// Structural self-check: reducedness, tails canonical, staircase
/// cardinality 2^(n-k), generator rows reducing to 1, and syndrome-equal
/// binomial sides.
bool verify_reduced_basis(const GroebnerBasis& gb);

/// One binomial per line, "head - tail"; squares first, then the
/// non-square elements in emission order. Deterministic.
std::string serialize(const GroebnerBasis& gb);

/// Parses serialize() output lines. Throws ParseError with the offending
/// line on malformed input.
std::vector<Binomial> parse_binomials(std::string_view text, std::size_t var_count);

}  // namespace codegb
