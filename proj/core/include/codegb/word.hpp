#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codegb/bitvec.hpp"

namespace codegb {

/// Commutative monomial in variables x1..xn. Exponents never exceed 2 in
/// any context this library produces; the word is *standard* when every
/// exponent is at most 1, in which case it corresponds one-to-one with a
/// vector of GF(2)^n through its mod-2 exponent image.
///
/// Words are immutable values. Alongside the exponents a packed mod-2 view
/// is maintained, so the vector image of a word costs nothing to read.
class Word {
public:
    Word() = default;

    /// The empty word (monoid identity) on `var_count` variables.
    explicit Word(std::size_t var_count)
        : exps_(var_count, 0), bits_(var_count) {}

    static Word variable(std::size_t var_count, std::size_t index);
    static Word from_exponents(std::vector<std::uint8_t> exps);

    /// The unique standard word whose mod-2 image equals `v`.
    static Word from_bits(const BitVec& v);

    std::size_t var_count() const { return exps_.size(); }
    unsigned exponent(std::size_t i) const { return exps_[i]; }

    unsigned total_degree() const;
    bool is_standard() const;
    bool is_identity() const { return total_degree() == 0; }

    /// Packed mod-2 exponent image (for standard words: the support mask).
    const BitVec& bits() const { return bits_; }

    /// Applies x_i^2 -> 1 everywhere; preserves the mod-2 image.
    Word standard_form() const { return from_bits(bits_); }

    std::vector<std::size_t> support() const;
    std::size_t support_size() const;

    Word operator*(const Word& other) const;

    /// True when this word divides `multiple` (exponent-wise <=).
    bool divides(const Word& multiple) const;

    /// this / divisor. Throws std::invalid_argument unless divisor divides
    /// this word.
    Word quotient_by(const Word& divisor) const;

    /// `1` for the empty word, otherwise factors in ascending variable
    /// order joined by '*', squares rendered with '^2' (e.g. "x1^2*x3").
    std::string str() const;

    /// Parses the str() grammar. Throws ParseError on malformed input or
    /// variable indices outside 1..var_count.
    static Word parse(std::string_view text, std::size_t var_count);

    bool operator==(const Word& other) const { return exps_ == other.exps_; }

private:
    std::vector<std::uint8_t> exps_;
    BitVec bits_;
};

/// Degree-compatible degrevlex with x1 < x2 < ... < xn: total degree
/// decides first; on ties the word owning the smallest-index variable
/// where the exponents differ is the *smaller* word. Throws
/// std::invalid_argument when the operands live on different variable
/// counts.
std::strong_ordering degrevlex_order(const Word& a, const Word& b);

struct DegrevlexLess {
    bool operator()(const Word& a, const Word& b) const {
        return degrevlex_order(a, b) == std::strong_ordering::less;
    }
};

}  // namespace codegb
