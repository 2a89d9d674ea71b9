#include <random>
#include <set>

#include "doctest.h"

#include "codegb/code.hpp"
#include "codegb/errors.hpp"
#include "testutil.hpp"

using codegb::BinaryCode;
using codegb::BinaryMatrix;
using codegb::BitVec;
using codegb::Word;
using testutil::bits;
using testutil::matrix_rows;

namespace {

BinaryMatrix identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

std::set<BitVec> codeword_set(const BinaryCode& code) {
    const auto words = code.codewords();
    return {words.begin(), words.end()};
}

}  // namespace

TEST_SUITE_BEGIN("code");

TEST_CASE("rref") {
    SUBCASE("the worked 3x6 generator has dependent rows") {
        const auto red = rref(testutil::example1_generator());
        CHECK(red.rank == 2);
        CHECK(red.matrix.row_count() == 2);
    }
    SUBCASE("identity is its own reduced form") {
        const auto red = rref(identity(4));
        CHECK(red.matrix == identity(4));
        CHECK(red.rank == 4);
        CHECK(red.pivot_cols == std::vector<std::size_t>{0, 1, 2, 3});
    }
    SUBCASE("zero matrix") {
        const auto red = rref(BinaryMatrix(3, 5));
        CHECK(red.rank == 0);
        CHECK(red.matrix.row_count() == 0);
    }
}

TEST_CASE("kernel basis") {
    SUBCASE("dimension counts") {
        CHECK(kernel_basis(testutil::example1_generator()).row_count() == 4);
        CHECK(kernel_basis(identity(5)).row_count() == 0);
    }
    SUBCASE("kernel rows annihilate the matrix") {
        const BinaryMatrix m = matrix_rows({"101"});
        const BinaryMatrix ker = kernel_basis(m);
        REQUIRE(ker.row_count() == 2);
        for (const BitVec& row : ker.rows())
            CHECK(row_times_matrix(row, m.transposed()).is_zero());
    }
}

TEST_CASE("from_generator") {
    SUBCASE("worked [6,2,3] code") {
        const BinaryCode code = BinaryCode::from_generator(testutil::example1_generator());
        CHECK(code.length() == 6);
        CHECK(code.dimension() == 2);
        CHECK(codeword_set(code) ==
              std::set<BitVec>{bits("000000"), bits("110110"), bits("011001"), bits("101111")});
        // every basis row has zero syndrome
        for (const BitVec& row : code.generator().rows()) CHECK(code.syndrome(row).is_zero());
    }
    SUBCASE("toy [3,2] code") {
        const BinaryCode code = BinaryCode::from_generator(testutil::toy_generator());
        CHECK(code.length() == 3);
        CHECK(code.dimension() == 2);
    }
    SUBCASE("empty row set still defines the zero code") {
        const BinaryCode code =
            BinaryCode::from_generator(BinaryMatrix::from_rows({}, 4));
        CHECK(code.length() == 4);
        CHECK(code.dimension() == 0);
        CHECK(codeword_set(code) == std::set<BitVec>{bits("0000")});
    }
    SUBCASE("no columns is a usage error") {
        CHECK_THROWS_AS(BinaryCode::from_generator(BinaryMatrix::from_rows({}, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("from_check") {
    SUBCASE("graph incidence with dependent columns") {
        const BinaryMatrix h = matrix_rows({"11000", "10010", "10001", "01100", "00110", "00011"});
        const BinaryCode code = BinaryCode::from_check(h);
        CHECK(code.dimension() == 2);
        CHECK(code.check() == h);  // kept verbatim
        CHECK(codeword_set(code) ==
              codeword_set(BinaryCode::from_generator(testutil::example1_generator())));
    }
    SUBCASE("identity check matrix gives the zero code") {
        const BinaryCode code = BinaryCode::from_check(identity(4));
        CHECK(code.dimension() == 0);
    }
    SUBCASE("a zero column does not constrain the nullspace") {
        const BinaryCode with_zero = BinaryCode::from_check(matrix_rows({"10", "10", "00"}));
        const BinaryCode without = BinaryCode::from_check(matrix_rows({"1", "1", "0"}));
        CHECK(codeword_set(with_zero) == codeword_set(without));
    }
}

TEST_CASE("syndrome") {
    const BinaryCode code = BinaryCode::from_generator(testutil::example1_generator());
    CHECK(code.syndrome(bits("110110")).is_zero());
    CHECK(code.syndrome(bits("000000")).is_zero());
    CHECK(code.syndrome(bits("111110")) == code.syndrome(bits("001000")));
    CHECK_THROWS_AS(code.syndrome(bits("1101")), std::invalid_argument);
}

TEST_CASE("weight") {
    CHECK(codegb::weight(bits("110110")) == 4);
    CHECK(codegb::weight(bits("000000")) == 0);
    CHECK(codegb::weight(bits("011001")) == 3);
}

TEST_CASE("coset leader oracle") {
    const BinaryCode code = BinaryCode::from_generator(testutil::example1_generator());
    const codegb::CosetLeaderMap leaders = oracle_coset_leaders(code);
    CHECK(leaders.size() == 16);
    CHECK(leaders.at(code.syndrome(bits("111110"))) == Word::parse("x3", 6));
    CHECK(leaders.at(code.syndrome(bits("000000"))) == Word(6));

    SUBCASE("no smaller word shares a leader's syndrome") {
        std::mt19937_64 rng(23);
        for (int i = 0; i < 200; ++i) {
            BitVec v(6);
            for (std::size_t b = 0; b < 6; ++b)
                if (rng() & 1u) v.set(b, true);
            const Word& leader = leaders.at(code.syndrome(v));
            CHECK(degrevlex_order(Word::from_bits(v), leader) != std::strong_ordering::less);
        }
    }
    SUBCASE("length guard") {
        const BinaryCode wide =
            BinaryCode::from_generator(BinaryMatrix(1, 21));
        CHECK_THROWS_AS(oracle_coset_leaders(wide), codegb::ResourceError);
    }
}

TEST_CASE("min-distance and decode oracles") {
    const BinaryCode code = BinaryCode::from_generator(testutil::example1_generator());
    CHECK(oracle_min_distance(code) == 3);

    const codegb::OracleDecodeResult r = oracle_decode(code, bits("111110"));
    CHECK(r.codeword == bits("110110"));
    CHECK(r.distance == 1);

    CHECK(oracle_min_distance(BinaryCode::from_generator(matrix_rows({"111"}))) == 3);
    CHECK_THROWS_AS(oracle_min_distance(BinaryCode::from_generator(BinaryMatrix(1, 3))),
                    std::invalid_argument);

    SUBCASE("equidistant candidates resolve to the degrevlex-minimal error") {
        const BinaryCode tiny = BinaryCode::from_generator(matrix_rows({"11"}));
        const codegb::OracleDecodeResult tie = oracle_decode(tiny, bits("10"));
        CHECK(tie.distance == 1);
        CHECK(tie.codeword == bits("00"));  // error x1 beats error x2
    }
}

TEST_CASE("membership is syndrome-zero is row-space membership") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const BinaryCode code = testutil::random_code(rng, 10);
        const std::set<BitVec> words = codeword_set(code);
        const std::size_t n = code.length();
        std::size_t zero_syndrome_count = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            BitVec v(n);
            for (std::size_t b = 0; b < n; ++b)
                if ((mask >> b) & 1u) v.set(b, true);
            const bool member = code.is_codeword(v);
            CHECK(member == (words.count(v) > 0));
            if (member) ++zero_syndrome_count;
        }
        CHECK(zero_syndrome_count == (std::size_t{1} << code.dimension()));
    }
}

TEST_CASE("coset leaders cover every syndrome exactly once") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const BinaryCode code = testutil::random_code(rng, 9);
        const codegb::CosetLeaderMap leaders = oracle_coset_leaders(code);
        CHECK(leaders.size() ==
              (std::size_t{1} << (code.length() - code.dimension())));
        CHECK(leaders.at(BitVec(code.syndrome_length())) == Word(code.length()));
        for (const auto& [syndrome, leader] : leaders)
            CHECK(code.syndrome(leader.bits()) == syndrome);
    }
}

TEST_SUITE_END();
