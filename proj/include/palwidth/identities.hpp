// identities.hpp -- constructive palindrome factorization identities
//
// Each function returns unreduced words that are syntactically palindromic;
// reduction is the caller's choice. Products are equal to the stated element
// in the free group (or in the involutive free product when the construction
// requires involutive generators), which the randomized suite checks by
// reduce-and-compare.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "palwidth/words.hpp"

namespace palwidth {

namespace detail {

inline void require_palindrome(const Word& p, const char* who) {
    if (!is_palindrome(p))
        throw std::invalid_argument(std::string(who) + ": factor is not palindromic");
}

inline void require_involutive(const GroupSpec& spec, const char* who) {
    if (!spec.quotient)
        throw std::invalid_argument(std::string(who) + ": requires involutive generators");
}

}  // namespace detail

/// v^{-1} p v as two palindromes: (v^{-1} p rev(v)^{-1}, rev(v) v).
inline std::array<Word, 2> conjugate_factor(const Word& v, const Word& p,
                                            const GroupSpec& spec) {
    detail::require_palindrome(p, "conjugate_factor");
    Word f1 = concat(concat(inverse_word(v, spec), p), inverse_word(reverse(v), spec));
    Word f2 = concat(reverse(v), v);
    return {f1, f2};
}

/// [u, p] = u^{-1} p^{-1} u p as three palindromes: conjugate_factor applied
/// to (u, p^{-1}) followed by the factor p itself.
inline std::array<Word, 3> commutator_factor_3(const Word& u, const Word& p,
                                               const GroupSpec& spec) {
    detail::require_palindrome(p, "commutator_factor_3");
    auto conj = conjugate_factor(u, inverse_word(p, spec), spec);
    return {conj[0], conj[1], p};
}

/// [u, pq] as four palindromes: conjugate the pair (q^{-1}, p^{-1}) through u,
/// then close with p and q. Splitting the conjugation as
///   u^{-1} q^{-1} rev(u)^{-1} . rev(u) p^{-1} u
/// keeps both pieces syntactically palindromic.
inline std::array<Word, 4> commutator_factor_4(const Word& u, const Word& p, const Word& q,
                                               const GroupSpec& spec) {
    detail::require_palindrome(p, "commutator_factor_4");
    detail::require_palindrome(q, "commutator_factor_4");
    Word f1 = concat(concat(inverse_word(u, spec), inverse_word(q, spec)),
                     inverse_word(reverse(u), spec));
    Word f2 = concat(concat(reverse(u), inverse_word(p, spec)), u);
    return {f1, f2, p, q};
}

/// Involutive generators: [g, p] = rev(g) rev(p) g . p, two palindromes.
inline std::array<Word, 2> involutive_commutator_factor(const Word& g, const Word& p,
                                                        const GroupSpec& spec) {
    detail::require_involutive(spec, "involutive_commutator_factor");
    detail::require_palindrome(p, "involutive_commutator_factor");
    Word f1 = concat(concat(reverse(g), reverse(p)), g);
    return {f1, p};
}

/// [g, y_i] y_i^a = rev(g) y_i g y_i^{1+a}: a single palindrome when a = 1
/// (the trailing square cancels), two palindromes when a = 0.
inline std::vector<Word> involutive_commutator_y(const Word& g, int i, int a,
                                                 const GroupSpec& spec) {
    detail::require_involutive(spec, "involutive_commutator_y");
    if (a != 0 && a != 1)
        throw std::invalid_argument("involutive_commutator_y: exponent must be 0 or 1");
    Word yi;
    yi.letters.push_back(make_letter(spec, i, 1));
    Word core = concat(concat(reverse(g), yi), g);
    if (a == 1)
        return {core};
    return {core, yi};
}

/// h^{-1} [g, y_i] h = (rev(h) rev(g) y_i g h) . (rev(h) y_i h).
inline std::array<Word, 2> conjugated_commutator_factor(const Word& g, int i, const Word& h,
                                                        const GroupSpec& spec) {
    detail::require_involutive(spec, "conjugated_commutator_factor");
    Word yi;
    yi.letters.push_back(make_letter(spec, i, 1));
    Word f1 = concat(concat(reverse(h), reverse(g)), concat(concat(yi, g), h));
    Word f2 = concat(concat(reverse(h), yi), h);
    return {f1, f2};
}

struct IdentityReport {
    std::string name;
    int trials = 0;
    std::vector<std::string> failures;  // reproducer inputs, empty when correct
};

namespace detail {

inline Word suite_random_palindrome(const GroupSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Word u = random_word(spec, rng() % 7, rng());
    Word w = u;
    if ((rng() & 1u) != 0)
        w = concat(w, random_word(spec, 1, rng()));
    return concat(w, reverse(u));
}

inline bool reduces_equal(const Word& a, const Word& b, const GroupSpec& spec) {
    return free_reduce(a, spec) == free_reduce(b, spec);
}

template <typename Range>
inline Word concat_all(const Range& factors) {
    Word w;
    for (const Word& f : factors)
        w = concat(w, f);
    return w;
}

inline Word commutator_word(const Word& a, const Word& b, const GroupSpec& spec) {
    return concat(concat(inverse_word(a, spec), inverse_word(b, spec)), concat(a, b));
}

}  // namespace detail

/// Runs every identity check with deterministic per-trial seeds; failed trials
/// record their inputs in the word grammar.
inline std::vector<IdentityReport> run_suite(int trials, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("run_suite: trials must be >= 1");
    const GroupSpec free3{3, 2, false};
    const GroupSpec quot3{3, 2, true};

    std::vector<IdentityReport> reports;
    auto run = [&](const char* name, auto&& check) {
        IdentityReport rep;
        rep.name = name;
        rep.trials = trials;
        for (int t = 0; t < trials; ++t) {
            std::uint64_t trial_seed = seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(t);
            if (auto failure = check(trial_seed))
                rep.failures.push_back(*failure);
        }
        reports.push_back(std::move(rep));
    };

    run("conjugate_factor", [&](std::uint64_t s) -> std::optional<std::string> {
        std::mt19937_64 rng(s);
        Word v = random_word(free3, rng() % 13, rng());
        Word p = detail::suite_random_palindrome(free3, rng());
        auto fs = conjugate_factor(v, p, free3);
        Word expect = concat(concat(inverse_word(v, free3), p), v);
        bool ok = is_palindrome(fs[0]) && is_palindrome(fs[1]) &&
                  detail::reduces_equal(detail::concat_all(fs), expect, free3);
        if (ok)
            return std::nullopt;
        return "v=" + render(v, free3) + " p=" + render(p, free3);
    });

    run("commutator_factor_3", [&](std::uint64_t s) -> std::optional<std::string> {
        std::mt19937_64 rng(s);
        Word u = random_word(free3, rng() % 13, rng());
        Word p = detail::suite_random_palindrome(free3, rng());
        auto fs = commutator_factor_3(u, p, free3);
        Word expect = detail::commutator_word(u, p, free3);
        bool ok = is_palindrome(fs[0]) && is_palindrome(fs[1]) && is_palindrome(fs[2]) &&
                  detail::reduces_equal(detail::concat_all(fs), expect, free3);
        if (ok)
            return std::nullopt;
        return "u=" + render(u, free3) + " p=" + render(p, free3);
    });

    run("commutator_factor_4", [&](std::uint64_t s) -> std::optional<std::string> {
        std::mt19937_64 rng(s);
        Word u = random_word(free3, rng() % 13, rng());
        Word p = detail::suite_random_palindrome(free3, rng());
        Word q = detail::suite_random_palindrome(free3, rng());
        auto fs = commutator_factor_4(u, p, q, free3);
        Word expect = detail::commutator_word(u, concat(p, q), free3);
        bool ok = detail::reduces_equal(detail::concat_all(fs), expect, free3);
        for (const Word& f : fs)
            ok = ok && is_palindrome(f);
        if (ok)
            return std::nullopt;
        return "u=" + render(u, free3) + " p=" + render(p, free3) + " q=" + render(q, free3);
    });

    run("involutive_commutator_factor", [&](std::uint64_t s) -> std::optional<std::string> {
        std::mt19937_64 rng(s);
        Word g = random_word(quot3, rng() % 13, rng());
        Word p = detail::suite_random_palindrome(quot3, rng());
        auto fs = involutive_commutator_factor(g, p, quot3);
        Word expect = detail::commutator_word(g, p, quot3);
        bool ok = is_palindrome(fs[0]) && is_palindrome(fs[1]) &&
                  detail::reduces_equal(detail::concat_all(fs), expect, quot3);
        if (ok)
            return std::nullopt;
        return "g=" + render(g, quot3) + " p=" + render(p, quot3);
    });

    run("involutive_commutator_y", [&](std::uint64_t s) -> std::optional<std::string> {
        std::mt19937_64 rng(s);
        Word g = random_word(quot3, rng() % 13, rng());
        int i = 1 + static_cast<int>(rng() % 3);
        int a = static_cast<int>(rng() & 1u);
        auto fs = involutive_commutator_y(g, i, a, quot3);
        Word yi;
        yi.letters.push_back(make_letter(quot3, i, 1));
        Word expect = detail::commutator_word(g, yi, quot3);
        if (a == 1)
            expect = concat(expect, yi);
        bool ok = fs.size() == (a == 1 ? 1u : 2u) &&
                  detail::reduces_equal(detail::concat_all(fs), expect, quot3);
        for (const Word& f : fs)
            ok = ok && is_palindrome(f);
        if (ok)
            return std::nullopt;
        return "g=" + render(g, quot3) + " i=" + std::to_string(i) + " a=" + std::to_string(a);
    });

    run("conjugated_commutator_factor", [&](std::uint64_t s) -> std::optional<std::string> {
        std::mt19937_64 rng(s);
        Word g = random_word(quot3, rng() % 13, rng());
        Word h = random_word(quot3, rng() % 13, rng());
        int i = 1 + static_cast<int>(rng() % 3);
        auto fs = conjugated_commutator_factor(g, i, h, quot3);
        Word yi;
        yi.letters.push_back(make_letter(quot3, i, 1));
        Word expect = concat(concat(inverse_word(h, quot3), detail::commutator_word(g, yi, quot3)), h);
        bool ok = is_palindrome(fs[0]) && is_palindrome(fs[1]) &&
                  detail::reduces_equal(detail::concat_all(fs), expect, quot3);
        if (ok)
            return std::nullopt;
        return "g=" + render(g, quot3) + " i=" + std::to_string(i) + " h=" + render(h, quot3);
    });

    run("palindrome_power", [&](std::uint64_t s) -> std::optional<std::string> {
        std::mt19937_64 rng(s);
        GroupSpec spec = (rng() & 1u) != 0 ? quot3 : free3;
        Word p = detail::suite_random_palindrome(spec, rng());
        long long m = static_cast<long long>(rng() % 11) - 5;
        Word pm = power(p, m, spec);
        bool ok = is_palindrome(pm);
        // p^m . p^-m reduces to the empty word
        ok = ok && free_reduce(concat(pm, power(p, -m, spec)), spec).empty();
        if (ok)
            return std::nullopt;
        return "p=" + render(p, spec) + " m=" + std::to_string(m);
    });

    return reports;
}

}  // namespace palwidth
