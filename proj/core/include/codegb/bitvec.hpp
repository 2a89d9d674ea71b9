#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace codegb {

/// Fixed-length vector over GF(2), packed 64 bits per machine word.
/// Unused high bits of the last word are kept zero so that equality and
/// hashing can work word-wise.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        assert(i < size_);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    BitVec& operator^=(const BitVec& other) {
        assert(size_ == other.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    /// Number of set bits (the Hamming weight).
    std::size_t count() const {
        std::size_t total = 0;
        for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w != 0) return true;
        return false;
    }

    bool is_zero() const { return !any(); }

    /// True when every set bit of this vector is also set in `other`.
    bool subset_of(const BitVec& other) const {
        assert(size_ == other.size_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }

    /// Calls fn(i) for every set bit, in increasing position order.
    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                fn(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const BitVec&) const = default;

    /// Orders vectors like their `str()` rendering: first differing
    /// position decides, 0 before 1. Shorter vectors sort first.
    std::strong_ordering operator<=>(const BitVec& other) const {
        if (auto c = size_ <=> other.size_; c != 0) return c;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t diff = words_[w] ^ other.words_[w];
            if (diff) {
                const int b = std::countr_zero(diff);
                return ((words_[w] >> b) & 1u) ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
            }
        }
        return std::strong_ordering::equal;
    }

    std::string str() const {
        std::string out(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if (get(i)) out[i] = '1';
        return out;
    }

    std::size_t hash_value() const {
        std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash_value(); }
};

inline std::size_t weight(const BitVec& v) { return v.count(); }

}  // namespace codegb
