#include "doctest.h"

#include <random>

#include "palwidth/words.hpp"
#include "support/oracles.hpp"

using namespace palwidth;

namespace {
const GroupSpec kFree2{2, 2, false};
const GroupSpec kFree3{3, 2, false};
const GroupSpec kQuot3{3, 2, true};

Word w_of(std::initializer_list<std::pair<int, int>> ls) {
    Word w;
    for (auto [g, s] : ls)
        w.letters.push_back(Letter{g, s});
    return w;
}
}  // namespace

TEST_CASE("group spec validation") {
    CHECK_THROWS_AS(GroupSpec(0, 2, false), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec(3, 3, false), std::invalid_argument);
    CHECK(GroupSpec(1, 1, true).rank == 1);
}

TEST_CASE("parse expands powers and commutator macros") {
    CHECK(parse("x1 x2^-1", kFree2) == w_of({{1, 1}, {2, -1}}));
    CHECK(parse("z2.1", kFree2) == w_of({{2, -1}, {1, -1}, {2, 1}, {1, 1}}));
    CHECK(parse("y3 y2 y3", kQuot3) == w_of({{3, 1}, {2, 1}, {3, 1}}));
    CHECK(parse("z2.1", kQuot3) == w_of({{2, 1}, {1, 1}, {2, 1}, {1, 1}}));
    CHECK(parse("x1^3", kFree2) == w_of({{1, 1}, {1, 1}, {1, 1}}));
    CHECK(parse("x1^-2", kFree2) == w_of({{1, -1}, {1, -1}}));
    CHECK(parse("e", kFree2).empty());
    CHECK(parse("  x1   e  x2  ", kFree2).size() == 2);
    // z^-1 expands to the inverse commutator word
    CHECK(parse("z2.1^-1", kFree2) == w_of({{1, -1}, {2, -1}, {1, 1}, {2, 1}}));
}

TEST_CASE("parse reports errors with positions") {
    CHECK_THROWS_AS(parse("x1 x5", kFree2), ParseError);
    CHECK_THROWS_AS(parse("y1", kFree2), ParseError);   // wrong alphabet
    CHECK_THROWS_AS(parse("x1", kQuot3), ParseError);   // wrong alphabet
    CHECK_THROWS_AS(parse("z1.2", kFree2), ParseError); // needs i > j
    CHECK_THROWS_AS(parse("x1^", kFree2), ParseError);
    CHECK_THROWS_AS(parse("q7", kFree2), ParseError);
    try {
        parse("x1 x0", kFree2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("render compresses runs and inverts parse") {
    CHECK(render(Word{}, kFree2) == "e");
    CHECK(render(parse("x1 x1 x1 x2^-1 x2^-1 x1", kFree2), kFree2) == "x1^3 x2^-2 x1");
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        GroupSpec spec = (t % 2 != 0) ? kQuot3 : kFree3;
        Word w = random_word(spec, rng() % 40, rng());
        CHECK(parse(render(w, spec), spec) == w);
        Word r = free_reduce(w, spec);
        CHECK(parse(render(r, spec), spec) == r);
    }
}

TEST_CASE("reverse and palindrome basics") {
    CHECK(reverse(w_of({{1, 1}, {2, -1}})) == w_of({{2, -1}, {1, 1}}));
    CHECK(reverse(Word{}) == Word{});
    Word pal = w_of({{2, 1}, {1, 1}, {2, 1}});
    CHECK(reverse(pal) == pal);
    CHECK(is_palindrome(w_of({{1, 1}, {2, 1}, {1, 1}})));
    CHECK(is_palindrome(w_of({{1, -1}, {2, -1}, {1, -1}})));
    CHECK(!is_palindrome(w_of({{1, 1}, {2, 1}})));
    CHECK(!is_palindrome(w_of({{1, 1}, {1, -1}})));  // signs compared too
    CHECK(is_palindrome(Word{}));
}

TEST_CASE("palindrome test agrees with brute-force reverse comparison") {
    // every word of length <= 4 over two generators, both signs
    std::vector<Letter> alphabet;
    for (int g = 1; g <= 2; ++g)
        for (int s : {1, -1})
            alphabet.push_back(Letter{g, s});
    for (std::size_t len = 0; len <= 4; ++len) {
        std::vector<std::size_t> digits(len, 0);
        while (true) {
            Word w;
            for (std::size_t d : digits)
                w.letters.push_back(alphabet[d]);
            CHECK(is_palindrome(w) == (w == reverse(w)));
            std::size_t k = 0;
            while (k < len && ++digits[k] == alphabet.size()) {
                digits[k] = 0;
                ++k;
            }
            if (k == len)
                break;
        }
    }
}

TEST_CASE("free reduction") {
    CHECK(free_reduce(w_of({{1, 1}, {1, -1}, {2, 1}}), kFree2) == w_of({{2, 1}}));
    CHECK(free_reduce(parse("y1 y1", kQuot3), kQuot3).empty());
    CHECK(free_reduce(parse("x1 x2 x2^-1 x1^-1", kFree2), kFree2).empty());
    std::mt19937_64 rng(23);
    for (int t = 0; t < 1000; ++t) {
        GroupSpec spec = (t % 2 != 0) ? kQuot3 : kFree3;
        Word w = random_word(spec, rng() % 60, rng());
        Word r = free_reduce(w, spec);
        CHECK(free_reduce(r, spec) == r);  // idempotent
        // reduced: no adjacent cancelling pair survives
        for (std::size_t p = 0; p + 1 < r.letters.size(); ++p) {
            bool cancels = spec.quotient
                               ? r.letters[p].generator == r.letters[p + 1].generator
                               : r.letters[p].generator == r.letters[p + 1].generator &&
                                     r.letters[p].sign == -r.letters[p + 1].sign;
            CHECK(!cancels);
        }
    }
}

TEST_CASE("concat and power") {
    Word p = w_of({{1, 1}, {2, 1}, {1, 1}});
    CHECK(power(p, 2, kFree2) == concat(p, p));
    CHECK(power(p, 0, kFree2).empty());
    CHECK(power(p, 1, kFree2) == p);
    CHECK(power(p, -1, kFree2) == w_of({{1, -1}, {2, -1}, {1, -1}}));
    // involutive inverse keeps signs
    CHECK(power(parse("y1 y2", kQuot3), -1, kQuot3) == parse("y2 y1", kQuot3));
}

TEST_CASE("word invariants hold on random samples") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 2000; ++t) {
        GroupSpec spec = (t % 2 != 0) ? kQuot3 : kFree3;
        Word a = random_word(spec, rng() % 30, rng());
        Word b = random_word(spec, rng() % 30, rng());
        CHECK(reverse(reverse(a)) == a);
        CHECK(reverse(concat(a, b)) == concat(reverse(b), reverse(a)));
        CHECK(is_palindrome(a) == (a == reverse(a)));
        if (spec.quotient)
            CHECK(free_reduce(concat(a, reverse(a)), spec).empty());
        else
            CHECK(free_reduce(concat(a, inverse_word(a, spec)), spec).empty());
    }
}

TEST_CASE("powers of palindromes are palindromes") {
    // exhaustive over palindromic words of length <= 5, n = 2, free mode
    std::vector<Letter> alphabet;
    for (int g = 1; g <= 2; ++g)
        for (int s : {1, -1})
            alphabet.push_back(Letter{g, s});
    long long checked = 0;
    for (std::size_t len = 0; len <= 5; ++len) {
        std::vector<std::size_t> digits(len, 0);
        while (true) {
            Word w;
            for (std::size_t d : digits)
                w.letters.push_back(alphabet[d]);
            if (is_palindrome(w)) {
                for (long long m : {-3, -1, 0, 2, 3, 5})
                    CHECK(is_palindrome(power(w, m, kFree2)));
                ++checked;
            }
            std::size_t k = 0;
            while (k < len && ++digits[k] == alphabet.size()) {
                digits[k] = 0;
                ++k;
            }
            if (k == len)
                break;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("random words are deterministic and in range") {
    GroupSpec spec{3, 2, false};
    CHECK(random_word(spec, 0, 99).empty());
    CHECK(random_word(spec, 17, 42) == random_word(spec, 17, 42));
    CHECK(random_word(spec, 17, 42) != random_word(spec, 17, 43));
    Word w = random_word(spec, 10000, 5);
    CHECK(w.size() == 10000);
    for (const Letter& l : w.letters) {
        CHECK(l.generator >= 1);
        CHECK(l.generator <= 3);
        CHECK((l.sign == 1 || l.sign == -1));
    }
    Word q = random_word(kQuot3, 1000, 5);
    for (const Letter& l : q.letters)
        CHECK(l.sign == 1);
}
