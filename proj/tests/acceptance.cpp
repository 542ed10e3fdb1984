// acceptance.cpp -- end-to-end acceptance suite
//
// Runs every acceptance criterion at its stated tolerance (all exact, zero
// tolerance) and prints one pass/fail line per criterion. Exits nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "palwidth/identities.hpp"
#include "palwidth/nilpotent.hpp"
#include "palwidth/palindromes.hpp"
#include "palwidth/width.hpp"
#include "palwidth/words.hpp"
#include "support/oracles.hpp"

using namespace palwidth;
using palwidth::testing::collect_by_exchange;
using palwidth::testing::to_collected;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), secs, error.empty() ? "" : " error: ", error.c_str());
    if (!ok)
        ++failures;
}

NormalForm product_of(const Factorization& fact, const GroupSpec& spec) {
    Word all;
    for (const Word& f : fact.factors)
        all = concat(all, f);
    return eval(all, spec);
}

bool factorization_valid(const Factorization& fact, const NormalForm& g) {
    for (const Word& f : fact.factors)
        if (!is_palindrome(f))
            return false;
    return product_of(fact, g.spec) == g;
}

}  // namespace

int main() {
    std::vector<LengthTable> class2_tables;  // index 0 -> rank 2, ..., index 3 -> rank 5
    for (int n = 2; n <= 5; ++n)
        class2_tables.push_back(build_length_table(GroupSpec{n, 2, true}));

    criterion(1, "exact widths: pw of the class-2 quotient is 2(n-1) for n = 2..5", [&] {
        for (int n = 2; n <= 5; ++n)
            if (palindromic_width(class2_tables[static_cast<std::size_t>(n - 2)]) != 2 * (n - 1))
                return false;
        return true;
    });

    criterion(2, "sandwich bound: widths in [n, 2n]; decompose_2n stays within 2n factors", [&] {
        for (int n = 2; n <= 5; ++n) {
            int w = palindromic_width(class2_tables[static_cast<std::size_t>(n - 2)]);
            if (w < n || w > 2 * n)
                return false;
        }
        // exhaustive over ranks 2..4
        for (int n = 2; n <= 4; ++n) {
            GroupSpec spec{n, 2, true};
            const LengthTable& table = class2_tables[static_cast<std::size_t>(n - 2)];
            for (std::uint64_t c = 0; c < group_order(spec); ++c) {
                NormalForm g = unpack_code(c, spec);
                Factorization fact = decompose_2n(g);
                if (fact.factors.size() > 2 * static_cast<std::size_t>(n))
                    return false;
                if (static_cast<int>(fact.factors.size()) < palindromic_length(g, table))
                    return false;
                if (!factorization_valid(fact, g))
                    return false;
            }
        }
        // 10^4 random elements in ranks 5 and 6
        std::mt19937_64 rng(1);
        for (int t = 0; t < 10000; ++t) {
            GroupSpec spec{5 + (t % 2), 2, true};
            NormalForm g = eval(random_word(spec, rng() % 50, rng()), spec);
            Factorization fact = decompose_2n(g);
            if (fact.factors.size() > 2 * static_cast<std::size_t>(spec.rank))
                return false;
            if (!factorization_valid(fact, g))
                return false;
        }
        return true;
    });

    criterion(3, "unique extremal element of the rank-3 quotient: z2.1 z3.1 z3.2 at length 4", [&] {
        const GroupSpec spec{3, 2, true};
        const LengthTable& table = class2_tables[1];
        std::uint64_t extremal_code = pack_code(eval(parse("z2.1 z3.1 z3.2", spec), spec));
        int fours = 0;
        for (std::uint64_t c = 0; c < 64; ++c) {
            if (table.lengths[c] == 4) {
                ++fours;
                if (c != extremal_code)
                    return false;
            } else if (table.lengths[c] > 4) {
                return false;
            }
        }
        return fours == 1;
    });

    criterion(4, "abelian quotient widths: pw = n for n = 1..12", [&] {
        for (int n = 1; n <= 12; ++n)
            if (palindromic_width(GroupSpec{n, 1, true}) != n)
                return false;
        return true;
    });

    criterion(5, "case rows: factor rows evaluate exactly, the flagged row meets its bound", [&] {
        const LengthTable& table = class2_tables[1];
        int bound_only = 0;
        for (const RowCheck& check : validate_rank3_case_rows(table)) {
            if (!check.ok)
                return false;
            if (check.status == RowStatus::bound_only)
                ++bound_only;
        }
        return bound_only == 1;
    });

    criterion(6, "commutator-support certificate passes for every rank 2..50", [&] {
        for (int n = 2; n <= 50; ++n)
            if (!commutator_support_certificate(n).all_pass())
                return false;
        return true;
    });

    criterion(7, "lower bound: the all-commutators element needs 2(n-1) palindromes, n = 3..5", [&] {
        for (int n = 3; n <= 5; ++n) {
            GroupSpec spec{n, 2, true};
            if (!verify_minimum(all_commutators_element(spec), 2 * (n - 1),
                                class2_tables[static_cast<std::size_t>(n - 2)]))
                return false;
        }
        return true;
    });

    criterion(8, "oracle equivalence: mul/inv/eval vs letter-exchange collection, 10^4 words", [&] {
        std::mt19937_64 rng(2);
        for (int t = 0; t < 10000; ++t) {
            int n = 2 + static_cast<int>(rng() % 4);  // ranks 2..5
            GroupSpec spec{n, (rng() & 1u) != 0 ? 2 : 1, (rng() & 2u) != 0};
            Word w = random_word(spec, rng() % 61, rng());
            NormalForm g = eval(w, spec);
            if (to_collected(g) != collect_by_exchange(w, spec))
                return false;
            // inv against the word-level inverse
            if (to_collected(inv(g)) != collect_by_exchange(inverse_word(w, spec), spec))
                return false;
            // mul against concatenation
            Word w2 = random_word(spec, rng() % 61, rng());
            if (to_collected(mul(g, eval(w2, spec))) !=
                collect_by_exchange(concat(w, w2), spec))
                return false;
        }
        return true;
    });

    criterion(9, "identity suite: 10^4 randomized trials per construction, zero failures", [&] {
        for (const IdentityReport& rep : run_suite(10000, 0))
            if (!rep.failures.empty())
                return false;
        return true;
    });

    criterion(10, "epimorphism monotonicity: projected length never exceeds a constructed "
                  "free factorization",
              [&] {
                  std::mt19937_64 rng(3);
                  for (int t = 0; t < 1000; ++t) {
                      int n = 2 + static_cast<int>(rng() % 4);
                      GroupSpec spec{n, 2, false};
                      const LengthTable& table = class2_tables[static_cast<std::size_t>(n - 2)];
                      NormalForm g = eval(random_word(spec, rng() % 40, rng()), spec);
                      Factorization fact = free_palindromic_factorization(g);
                      if (!factorization_valid(fact, g))
                          return false;
                      int k = static_cast<int>(fact.factors.size());
                      if (palindromic_length(project_mod2(g), table) > k)
                          return false;
                  }
                  return true;
              });

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
