#include "codegb/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "codegb/errors.hpp"

namespace codegb {

bool is_square(const Binomial& b) {
    return b.head.total_degree() == 2 && b.head.support_size() == 1;
}

BitVec binomial_codeword(const Binomial& b) { return b.head.bits() ^ b.tail.bits(); }

namespace {

struct PendingTerm {
    std::size_t insert_count = 0;
    BitVec syndrome;
};

using TermQueue = std::map<Word, PendingTerm, DegrevlexLess>;
using Staircase = std::unordered_map<BitVec, Word, BitVecHash>;

void insert_successors(const BinaryCode& code, const Word& w, const BitVec& syndrome,
                       TermQueue& queue) {
    const std::size_t n = code.length();
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] =
            queue.try_emplace(w * Word::variable(n, i), PendingTerm{0, BitVec{}});
        if (fresh) it->second.syndrome = syndrome ^ code.check().row(i);
        it->second.insert_count += 1;
    }
}

// Runs the term enumeration: terms are visited in ascending degrevlex
// order; a term is processed only once its insertion count matches its
// support size (so every facet lies in the staircase). A processed term
// whose syndrome is already represented yields a basis binomial; a fresh
// syndrome extends the staircase. emit returns false to stop early.
template <typename EmitFn>
void enumerate_basis(const BinaryCode& code, Staircase& canon, EmitFn&& emit) {
    canon.clear();
    const Word one(code.length());
    const BitVec zero_syndrome(code.syndrome_length());
    canon.emplace(zero_syndrome, one);
    TermQueue queue;
    insert_successors(code, one, zero_syndrome, queue);
    while (!queue.empty()) {
        auto first = queue.begin();
        Word w = first->first;
        PendingTerm pending = std::move(first->second);
        queue.erase(first);
        if (pending.insert_count != w.support_size()) continue;  // beyond the border
        auto hit = canon.find(pending.syndrome);
        if (hit != canon.end()) {
            if (!emit(Binomial{std::move(w), hit->second})) return;
        } else {
            insert_successors(code, w, pending.syndrome, queue);
            canon.emplace(std::move(pending.syndrome), std::move(w));
        }
    }
}

void check_coset_guard(const BinaryCode& code, const GbLimits& limits) {
    if (limits.unbounded) return;
    const std::size_t redundancy = code.length() - code.dimension();
    if (redundancy > limits.max_coset_log2)
        throw ResourceError("staircase would hold 2^" + std::to_string(redundancy) +
                            " words (guard: 2^" + std::to_string(limits.max_coset_log2) +
                            "); pass the override to proceed");
}

// Degrevlex-smallest divisor of `word` among the element heads, or npos.
// Heads are standard, so for a standard word divisibility is a subset
// test on support masks; elements are sorted ascending, so the first hit
// wins and the scan can stop once heads outgrow the word's degree.
std::size_t find_divisor(const Word& word, const GroebnerBasis& gb) {
    const auto& elements = gb.elements();
    const auto& masks = gb.element_head_bits();
    const unsigned degree = word.total_degree();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].head.total_degree() > degree) break;
        if (masks[i].subset_of(word.bits())) return i;
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

void GroebnerBasis::index_emitted() {
    squares_.clear();
    elements_.clear();
    element_head_bits_.clear();
    for (const Binomial& b : emitted_) {
        if (is_square(b))
            squares_.push_back(b);
        else
            elements_.push_back(b);
    }
    std::sort(elements_.begin(), elements_.end(), [](const Binomial& a, const Binomial& b) {
        return degrevlex_order(a.head, b.head) == std::strong_ordering::less;
    });
    element_head_bits_.reserve(elements_.size());
    for (const Binomial& b : elements_) element_head_bits_.push_back(b.head.bits());
}

const Word* GroebnerBasis::canonical_for_syndrome(const BitVec& syndrome) const {
    auto it = canon_.find(syndrome);
    return it == canon_.end() ? nullptr : &it->second;
}

std::vector<Binomial> ideal_generators(const BinaryCode& code) {
    const std::size_t n = code.length();
    std::vector<Binomial> out;
    out.reserve(code.spanning_rows().row_count() + n);
    for (const BitVec& row : code.spanning_rows().rows()) {
        Word head = Word::from_bits(row);
        if (head.is_identity()) continue;  // a zero row contributes 1 - 1 = 0
        out.push_back(Binomial{std::move(head), Word(n)});
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Word x = Word::variable(n, i);
        out.push_back(Binomial{x * x, Word(n)});
    }
    return out;
}

GroebnerBasis compute_groebner_basis(const BinaryCode& code, const GbLimits& limits) {
    check_coset_guard(code, limits);
    GroebnerBasis gb(code);
    enumerate_basis(code, gb.canon_, [&](Binomial&& b) {
        gb.emitted_.push_back(std::move(b));
        return true;
    });
    gb.index_emitted();
    return gb;
}

GroebnerBasis GroebnerBasis::from_parts(BinaryCode code, std::vector<Binomial> binomials) {
    GroebnerBasis gb(std::move(code));
    gb.emitted_ = std::move(binomials);
    gb.index_emitted();

    // Rebuild the staircase from the given heads: enumerate terms as in
    // the basis computation, but stop expanding below any claimed head.
    // The walk is bounded so that a defective head set cannot run away;
    // hitting a bound marks the staircase inconsistent.
    const std::size_t n = gb.code_.length();
    const std::size_t redundancy = n - gb.code_.dimension();
    const std::size_t expected =
        redundancy < 63 ? (std::size_t{1} << redundancy) : static_cast<std::size_t>(-1);

    auto divisible_by_head = [&](const Word& w) {
        for (const Binomial& b : gb.emitted_)
            if (b.head.divides(w)) return true;
        return false;
    };

    const Word one(n);
    const BitVec zero_syndrome(gb.code_.syndrome_length());
    gb.canon_.emplace(zero_syndrome, one);
    TermQueue queue;
    insert_successors(gb.code_, one, zero_syndrome, queue);
    while (!queue.empty()) {
        auto first = queue.begin();
        Word w = first->first;
        PendingTerm pending = std::move(first->second);
        queue.erase(first);
        if (pending.insert_count != w.support_size()) continue;
        if (divisible_by_head(w)) continue;
        if (!w.is_standard() || gb.canon_.size() > expected) {
            gb.staircase_consistent_ = false;
            break;
        }
        auto hit = gb.canon_.find(pending.syndrome);
        if (hit != gb.canon_.end()) {
            // Two irreducible words share a syndrome: not a Groebner basis.
            gb.staircase_consistent_ = false;
            continue;
        }
        insert_successors(gb.code_, w, pending.syndrome, queue);
        gb.canon_.emplace(std::move(pending.syndrome), std::move(w));
    }
    return gb;
}

Word one_step_reduce(const Word& w, const GroebnerBasis& gb) {
    Word current = w.is_standard() ? w : w.standard_form();
    const std::size_t i = find_divisor(current, gb);
    if (i == static_cast<std::size_t>(-1)) return current;
    const Binomial& g = gb.elements()[i];
    return current.quotient_by(g.head) * g.tail;
}

Word canonical_form(const Word& w, const GroebnerBasis& gb) {
    Word current = w.standard_form();
    for (;;) {
        Word next = one_step_reduce(current, gb);
        if (next == current) return current;
        current = next.standard_form();
    }
}

DecodeResult decode(const GroebnerBasis& gb, const BitVec& received) {
    if (received.size() != gb.code().length())
        throw std::invalid_argument("decode: received word length " +
                                    std::to_string(received.size()) + " != code length " +
                                    std::to_string(gb.code().length()));
    DecodeResult out;
    out.error = canonical_form(Word::from_bits(received), gb).bits();
    out.codeword = received ^ out.error;
    // A zero-dimensional code has the single codeword 0, so the unique
    // nearest codeword is always returned.
    out.within_capability =
        gb.elements().empty() || out.error.count() <= error_capability(gb);
    return out;
}

std::size_t error_capability(const GroebnerBasis& gb) {
    if (gb.elements().empty())
        throw std::invalid_argument("error_capability: code has no nonzero codeword");
    return gb.elements().front().head.total_degree() - 1;
}

std::size_t error_capability_early(const BinaryCode& code, const GbLimits& limits) {
    check_coset_guard(code, limits);
    Staircase canon;
    std::size_t head_degree = 0;
    bool found = false;
    enumerate_basis(code, canon, [&](Binomial&& b) {
        if (b.head.is_standard()) {
            head_degree = b.head.total_degree();
            found = true;
            return false;
        }
        return true;
    });
    if (!found)
        throw std::invalid_argument("error_capability_early: code has no nonzero codeword");
    return head_degree - 1;
}

CodewordReduction reduce_codeword_step(const Word& word, const GroebnerBasis& gb) {
    if (!word.is_standard())
        throw std::invalid_argument("reduce_codeword_step: word is not standard");
    if (word.is_identity() || !gb.code().syndrome(word.bits()).is_zero())
        throw std::invalid_argument("reduce_codeword_step: " + word.str() +
                                    " is not a nonzero codeword");
    const std::size_t d = word.total_degree();
    const std::size_t t = (d - 1) / 2 + 1;
    // Split off the degrevlex-smallest degree-t divisor that beats its
    // cofactor: the t lowest-index variables when d is odd; when d is
    // even the lowest index must go to the cofactor, so take the next t.
    const std::vector<std::size_t> supp = word.support();
    const std::size_t offset = (d % 2 == 0) ? 1 : 0;
    std::vector<std::uint8_t> exps(word.var_count(), 0);
    for (std::size_t j = 0; j < t; ++j) exps[supp[offset + j]] = 1;
    const Word prefix = Word::from_exponents(std::move(exps));

    const std::size_t i = find_divisor(prefix, gb);
    if (i == static_cast<std::size_t>(-1))
        throw std::invalid_argument("reduce_codeword_step: basis does not reduce " +
                                    prefix.str());
    const Binomial& used = gb.elements()[i];
    CodewordReduction out;
    out.used = used;
    out.next = (word.quotient_by(used.head) * used.tail).standard_form();
    return out;
}

std::vector<Binomial> decompose(const BitVec& codeword, const GroebnerBasis& gb) {
    if (codeword.size() != gb.code().length())
        throw std::invalid_argument("decompose: word length mismatch");
    if (!gb.code().syndrome(codeword).is_zero())
        throw std::invalid_argument("decompose: " + codeword.str() + " is not a codeword");
    std::vector<Binomial> parts;
    Word w = Word::from_bits(codeword);
    while (!w.is_identity()) {
        CodewordReduction step = reduce_codeword_step(w, gb);
        parts.push_back(std::move(step.used));
        w = std::move(step.next);
    }
    return parts;
}

MinWeightCodewords min_weight_codewords(const GroebnerBasis& gb) {
    if (gb.elements().empty())
        throw std::invalid_argument("min_weight_codewords: code has no nonzero codeword");
    const unsigned degree = gb.elements().front().head.total_degree();
    std::vector<const Binomial*> slice;
    for (const Binomial& b : gb.elements()) {
        if (b.head.total_degree() != degree) break;
        slice.push_back(&b);
    }
    std::set<BitVec> candidates;
    for (const Binomial* b : slice) candidates.insert(binomial_codeword(*b));
    // Shared-tail pairs cover the even-distance case.
    std::map<Word, std::vector<const Binomial*>, DegrevlexLess> by_tail;
    for (const Binomial* b : slice) by_tail[b->tail].push_back(b);
    for (const auto& [tail, group] : by_tail)
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                candidates.insert(group[a]->head.bits() ^ group[b]->head.bits());

    MinWeightCodewords out;
    out.min_weight = gb.code().length() + 1;
    for (const BitVec& c : candidates) out.min_weight = std::min(out.min_weight, c.count());
    for (const BitVec& c : candidates)
        if (c.count() == out.min_weight) out.codewords.push_back(c);
    return out;
}

bool verify_reduced_basis(const GroebnerBasis& gb) {
    const BinaryCode& code = gb.code();
    if (!gb.staircase_consistent()) return false;

    const std::size_t redundancy = code.length() - code.dimension();
    if (redundancy >= 63) return false;
    if (gb.staircase_size() != (std::size_t{1} << redundancy)) return false;

    const auto& all = gb.emitted();
    for (const Binomial& b : all) {
        if (degrevlex_order(b.head, b.tail) != std::strong_ordering::greater) return false;
        const BitVec head_syndrome = code.syndrome(b.head.bits());
        if (head_syndrome != code.syndrome(b.tail.bits())) return false;
        const Word* canon = gb.canonical_for_syndrome(head_syndrome);
        if (canon == nullptr || !(*canon == b.tail)) return false;
    }
    // Reducedness: no head divides another head or any tail.
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i != j && all[i].head.divides(all[j].head)) return false;
            if (all[i].head.divides(all[j].tail)) return false;
        }
    }
    // The defining congruences must collapse: every generator row reduces
    // to the empty word.
    for (const BitVec& row : code.generator().rows())
        if (!canonical_form(Word::from_bits(row), gb).is_identity()) return false;
    return true;
}

std::string serialize(const GroebnerBasis& gb) {
    std::string out;
    auto append = [&out](const Binomial& b) {
        out += b.head.str();
        out += " - ";
        out += b.tail.str();
        out += '\n';
    };
    for (const Binomial& b : gb.squares()) append(b);
    for (const Binomial& b : gb.emitted())
        if (!is_square(b)) append(b);
    return out;
}

std::vector<Binomial> parse_binomials(std::string_view text, std::size_t var_count) {
    std::vector<Binomial> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::size_t sep = line.find(" - ");
        if (sep == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'head - tail' in '" + line + "'");
        out.push_back(Binomial{Word::parse(line.substr(0, sep), var_count),
                               Word::parse(line.substr(sep + 3), var_count)});
    }
    return out;
}

}  // namespace codegb
