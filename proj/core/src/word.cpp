#include "codegb/word.hpp"

#include <cassert>
#include <charconv>
#include <stdexcept>

#include "codegb/errors.hpp"

namespace codegb {

Word Word::variable(std::size_t var_count, std::size_t index) {
    assert(index < var_count);
    Word w(var_count);
    w.exps_[index] = 1;
    w.bits_.set(index, true);
    return w;
}

Word Word::from_exponents(std::vector<std::uint8_t> exps) {
    Word w;
    w.bits_ = BitVec(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        assert(exps[i] <= 2);
        w.bits_.set(i, exps[i] & 1u);
    }
    w.exps_ = std::move(exps);
    return w;
}

Word Word::from_bits(const BitVec& v) {
    Word w(v.size());
    v.for_each_set([&](std::size_t i) {
        w.exps_[i] = 1;
        w.bits_.set(i, true);
    });
    return w;
}

unsigned Word::total_degree() const {
    unsigned d = 0;
    for (std::uint8_t e : exps_) d += e;
    return d;
}

bool Word::is_standard() const {
    for (std::uint8_t e : exps_)
        if (e > 1) return false;
    return true;
}

std::vector<std::size_t> Word::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) out.push_back(i);
    return out;
}

std::size_t Word::support_size() const {
    std::size_t count = 0;
    for (std::uint8_t e : exps_)
        if (e > 0) ++count;
    return count;
}

Word Word::operator*(const Word& other) const {
    assert(var_count() == other.var_count());
    Word out;
    out.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        out.exps_[i] = static_cast<std::uint8_t>(exps_[i] + other.exps_[i]);
        assert(out.exps_[i] <= 2);  // no context multiplies past x_i^2
    }
    out.bits_ = bits_ ^ other.bits_;
    return out;
}

bool Word::divides(const Word& multiple) const {
    assert(var_count() == multiple.var_count());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > multiple.exps_[i]) return false;
    return true;
}

Word Word::quotient_by(const Word& divisor) const {
    if (divisor.var_count() != var_count() || !divisor.divides(*this))
        throw std::invalid_argument("quotient_by: divisor " + divisor.str() +
                                    " does not divide " + str());
    Word out;
    out.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
    out.bits_ = bits_ ^ divisor.bits_;
    return out;
}

std::string Word::str() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (exps_[i] == 2) out += "^2";
    }
    return out.empty() ? "1" : out;
}

Word Word::parse(std::string_view text, std::size_t var_count) {
    auto fail = [&](const std::string& why) -> Word {
        throw ParseError("bad word '" + std::string(text) + "': " + why);
    };
    // trim
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) return fail("empty");
    if (text == "1") return Word(var_count);

    std::vector<std::uint8_t> exps(var_count, 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'x') return fail("expected 'x'");
        ++pos;
        std::size_t digits_end = pos;
        while (digits_end < text.size() && std::isdigit(static_cast<unsigned char>(text[digits_end])))
            ++digits_end;
        std::size_t index = 0;
        auto conv = std::from_chars(text.data() + pos, text.data() + digits_end, index);
        if (conv.ec != std::errc{} || digits_end == pos) return fail("missing variable index");
        if (index < 1 || index > var_count)
            return fail("variable index " + std::to_string(index) + " outside 1.." +
                        std::to_string(var_count));
        pos = digits_end;
        unsigned exp = 1;
        if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == '2') {
            exp = 2;
            pos += 2;
        }
        if (exps[index - 1] + exp > 2)
            return fail("exponent of x" + std::to_string(index) + " exceeds 2");
        exps[index - 1] = static_cast<std::uint8_t>(exps[index - 1] + exp);
        if (pos < text.size()) {
            if (text[pos] != '*') return fail("expected '*'");
            ++pos;
            if (pos == text.size()) return fail("trailing '*'");
        }
    }
    return from_exponents(std::move(exps));
}

std::strong_ordering degrevlex_order(const Word& a, const Word& b) {
    if (a.var_count() != b.var_count())
        throw std::invalid_argument("degrevlex_order: mismatched variable counts");
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    // Equal degree: the side holding the smallest-index differing variable
    // with the larger exponent is the smaller word.
    for (std::size_t i = 0; i < a.var_count(); ++i) {
        const unsigned ea = a.exponent(i);
        const unsigned eb = b.exponent(i);
        if (ea != eb)
            return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace codegb
