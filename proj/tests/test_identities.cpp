#include "doctest.h"

#include <random>

#include "palwidth/identities.hpp"
#include "support/oracles.hpp"

using namespace palwidth;
using palwidth::testing::freely_equal;
using palwidth::testing::random_palindrome;

namespace {
const GroupSpec kFree3{3, 2, false};
const GroupSpec kQuot3{3, 2, true};

Word cword(const Word& a, const Word& b, const GroupSpec& spec) {
    return concat(concat(inverse_word(a, spec), inverse_word(b, spec)), concat(a, b));
}
}  // namespace

TEST_CASE("conjugate_factor") {
    Word v = parse("x1", kFree3);
    Word p = parse("x2", kFree3);
    auto fs = conjugate_factor(v, p, kFree3);
    CHECK(fs[0] == parse("x1^-1 x2 x1^-1", kFree3));
    CHECK(fs[1] == parse("x1 x1", kFree3));
    CHECK(free_reduce(concat(fs[0], fs[1]), kFree3) == parse("x1^-1 x2 x1", kFree3));

    auto fs_empty = conjugate_factor(Word{}, p, kFree3);
    CHECK(fs_empty[0] == p);
    CHECK(fs_empty[1].empty());

    CHECK_THROWS_AS(conjugate_factor(v, parse("x1 x2", kFree3), kFree3), std::invalid_argument);

    std::mt19937_64 rng(1);
    for (int t = 0; t < 10000; ++t) {
        Word v2 = random_word(kFree3, rng() % 12, rng());
        Word p2 = random_palindrome(kFree3, rng() % 6, rng(), (rng() & 1u) != 0);
        auto out = conjugate_factor(v2, p2, kFree3);
        CHECK(is_palindrome(out[0]));
        CHECK(is_palindrome(out[1]));
        Word expect = concat(concat(inverse_word(v2, kFree3), p2), v2);
        CHECK(freely_equal(concat(out[0], out[1]), expect, kFree3));
    }
}

TEST_CASE("commutator_factor_3") {
    Word u = parse("x1", kFree3);
    Word p = parse("x2", kFree3);
    auto fs = commutator_factor_3(u, p, kFree3);
    CHECK(fs[0] == parse("x1^-1 x2^-1 x1^-1", kFree3));
    CHECK(fs[1] == parse("x1 x1", kFree3));
    CHECK(fs[2] == parse("x2", kFree3));
    CHECK(free_reduce(concat(concat(fs[0], fs[1]), fs[2]), kFree3) ==
          parse("x1^-1 x2^-1 x1 x2", kFree3));

    auto fs_empty = commutator_factor_3(Word{}, p, kFree3);
    CHECK(free_reduce(concat(concat(fs_empty[0], fs_empty[1]), fs_empty[2]), kFree3).empty());

    std::mt19937_64 rng(2);
    for (int t = 0; t < 10000; ++t) {
        Word u2 = random_word(kFree3, rng() % 12, rng());
        Word p2 = random_palindrome(kFree3, rng() % 6, rng(), (rng() & 1u) != 0);
        auto out = commutator_factor_3(u2, p2, kFree3);
        for (const Word& f : out)
            CHECK(is_palindrome(f));
        Word got = concat(concat(out[0], out[1]), out[2]);
        CHECK(freely_equal(got, cword(u2, p2, kFree3), kFree3));
    }
}

TEST_CASE("commutator_factor_4") {
    Word u = parse("x1", kFree3);
    Word p = parse("x2", kFree3);
    Word q = parse("x1", kFree3);
    auto fs = commutator_factor_4(u, p, q, kFree3);
    for (const Word& f : fs)
        CHECK(is_palindrome(f));
    Word got;
    for (const Word& f : fs)
        got = concat(got, f);
    CHECK(freely_equal(got, cword(u, concat(p, q), kFree3), kFree3));

    // empty q degenerates to a 3-factor commutator plus an empty factor
    auto fs3 = commutator_factor_4(u, p, Word{}, kFree3);
    CHECK(fs3[3].empty());
    Word got3;
    for (const Word& f : fs3)
        got3 = concat(got3, f);
    CHECK(freely_equal(got3, cword(u, p, kFree3), kFree3));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 10000; ++t) {
        Word u2 = random_word(kFree3, rng() % 12, rng());
        Word p2 = random_palindrome(kFree3, rng() % 5, rng(), (rng() & 1u) != 0);
        Word q2 = random_palindrome(kFree3, rng() % 5, rng(), (rng() & 1u) != 0);
        auto out = commutator_factor_4(u2, p2, q2, kFree3);
        Word prod;
        for (const Word& f : out) {
            CHECK(is_palindrome(f));
            prod = concat(prod, f);
        }
        CHECK(freely_equal(prod, cword(u2, concat(p2, q2), kFree3), kFree3));
    }
}

TEST_CASE("involutive_commutator_factor") {
    Word g = parse("y1 y2", kQuot3);
    Word p = parse("y3", kQuot3);
    auto fs = involutive_commutator_factor(g, p, kQuot3);
    CHECK(fs[0] == parse("y2 y1 y3 y1 y2", kQuot3));
    CHECK(fs[1] == parse("y3", kQuot3));
    CHECK(freely_equal(concat(fs[0], fs[1]), cword(g, p, kQuot3), kQuot3));

    auto fs_empty = involutive_commutator_factor(Word{}, p, kQuot3);
    CHECK(free_reduce(concat(fs_empty[0], fs_empty[1]), kQuot3).empty());

    CHECK_THROWS_AS(involutive_commutator_factor(g, p, kFree3), std::invalid_argument);

    std::mt19937_64 rng(4);
    for (int t = 0; t < 10000; ++t) {
        Word g2 = random_word(kQuot3, rng() % 12, rng());
        Word p2 = random_palindrome(kQuot3, rng() % 6, rng(), (rng() & 1u) != 0);
        auto out = involutive_commutator_factor(g2, p2, kQuot3);
        CHECK(is_palindrome(out[0]));
        CHECK(is_palindrome(out[1]));
        CHECK(freely_equal(concat(out[0], out[1]), cword(g2, p2, kQuot3), kQuot3));
    }
}

TEST_CASE("involutive_commutator_y") {
    auto one = involutive_commutator_y(parse("y2", kQuot3), 1, 1, kQuot3);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == parse("y2 y1 y2", kQuot3));

    auto two = involutive_commutator_y(parse("y2", kQuot3), 1, 0, kQuot3);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == parse("y2 y1 y2", kQuot3));
    CHECK(two[1] == parse("y1", kQuot3));

    CHECK_THROWS_AS(involutive_commutator_y(parse("y2", kQuot3), 1, 0, kFree3),
                    std::invalid_argument);

    // exhaustive over words of length <= 4, n = 3
    for (int len = 0; len <= 4; ++len) {
        std::vector<int> digits(static_cast<std::size_t>(len), 0);
        while (true) {
            Word g;
            for (int d : digits)
                g.letters.push_back(make_letter(kQuot3, d + 1, 1));
            for (int i = 1; i <= 3; ++i)
                for (int a = 0; a <= 1; ++a) {
                    auto fs = involutive_commutator_y(g, i, a, kQuot3);
                    Word yi;
                    yi.letters.push_back(make_letter(kQuot3, i, 1));
                    Word expect = cword(g, yi, kQuot3);
                    for (int k = 0; k < a; ++k)
                        expect = concat(expect, yi);
                    Word prod;
                    for (const Word& f : fs) {
                        CHECK(is_palindrome(f));
                        prod = concat(prod, f);
                    }
                    CHECK(freely_equal(prod, expect, kQuot3));
                    CHECK(fs.size() == (a == 1 ? 1u : 2u));
                }
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == 3) {
                digits[k] = 0;
                ++k;
            }
            if (k == digits.size())
                break;
        }
    }
}

TEST_CASE("conjugated_commutator_factor") {
    auto fs = conjugated_commutator_factor(parse("y2", kQuot3), 1, parse("y3", kQuot3), kQuot3);
    CHECK(fs[0] == parse("y3 y2 y1 y2 y3", kQuot3));
    CHECK(fs[1] == parse("y3 y1 y3", kQuot3));

    // empty conjugator reduces to the plain commutator split
    auto plain = conjugated_commutator_factor(parse("y2", kQuot3), 1, Word{}, kQuot3);
    CHECK(plain[0] == parse("y2 y1 y2", kQuot3));
    CHECK(plain[1] == parse("y1", kQuot3));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 10000; ++t) {
        Word g = random_word(kQuot3, rng() % 12, rng());
        Word h = random_word(kQuot3, rng() % 12, rng());
        int i = 1 + static_cast<int>(rng() % 3);
        auto out = conjugated_commutator_factor(g, i, h, kQuot3);
        CHECK(is_palindrome(out[0]));
        CHECK(is_palindrome(out[1]));
        Word yi;
        yi.letters.push_back(make_letter(kQuot3, i, 1));
        Word expect = concat(concat(inverse_word(h, kQuot3), cword(g, yi, kQuot3)), h);
        CHECK(freely_equal(concat(out[0], out[1]), expect, kQuot3));
    }
}

TEST_CASE("run_suite is clean and deterministic") {
    auto reports = run_suite(2000, 0);
    CHECK(reports.size() == 7);
    for (const auto& rep : reports) {
        CHECK(rep.trials == 2000);
        CHECK(rep.failures.empty());
    }
    auto again = run_suite(50, 123);
    auto again2 = run_suite(50, 123);
    REQUIRE(again.size() == again2.size());
    for (std::size_t k = 0; k < again.size(); ++k) {
        CHECK(again[k].name == again2[k].name);
        CHECK(again[k].failures == again2[k].failures);
    }
    CHECK(run_suite(1, 9).size() == 7);
    CHECK_THROWS_AS(run_suite(0, 0), std::invalid_argument);
}
