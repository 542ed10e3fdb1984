// width.hpp -- exact palindromic lengths and widths in the finite quotients
//
// The length table is a single-source shortest-path computation from the
// identity in the Cayley-type graph whose edges right-multiply by a
// non-identity palindrome. Elements are packed codes, palindrome generators
// carry precomputed correction tables indexed by the left factor's alpha
// bits, so one edge is a table lookup and an xor.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "palwidth/identities.hpp"
#include "palwidth/nilpotent.hpp"
#include "palwidth/palindromes.hpp"
#include "palwidth/words.hpp"

namespace palwidth {

inline constexpr int kDefaultMaxRankClass1 = 20;
inline constexpr int kDefaultMaxRankClass2 = 6;

inline int rank_cap(const GroupSpec& spec, int max_rank_override) {
    if (max_rank_override > 0)
        return max_rank_override;
    return spec.nilpotency_class == 2 ? kDefaultMaxRankClass2 : kDefaultMaxRankClass1;
}

/// Exact palindromic length of every element of a finite quotient, with
/// parent pointers for witness extraction. lengths[identity] = 0 and every
/// entry is finite because the palindromes generate the group.
struct LengthTable {
    GroupSpec spec;
    std::vector<std::uint8_t> lengths;      // indexed by packed code
    std::vector<std::uint64_t> parent_code; // predecessor, per non-identity code
    std::vector<std::uint64_t> parent_pal;  // palindrome used, per non-identity code
    std::vector<std::pair<std::uint64_t, PalindromeForm>> generators;  // sorted by code

    std::uint64_t size() const { return lengths.size(); }
};

/// An ordered list of syntactically palindromic words whose product evaluates
/// to the target element.
struct Factorization {
    std::vector<Word> factors;
    NormalForm target;
};

namespace detail {

// Per-generator edge tables: applying generator g to element e is
// e ^ delta[e & alpha_mask].
struct EdgeTables {
    std::uint64_t alpha_mask = 0;
    std::vector<std::vector<std::uint64_t>> delta;

    static EdgeTables build(const GroupSpec& spec,
                            const std::vector<std::uint64_t>& gen_codes) {
        EdgeTables t;
        if (spec.nilpotency_class == 1) {
            // abelian: multiplication is a plain xor, one entry suffices
            t.alpha_mask = 0;
            for (std::uint64_t g : gen_codes)
                t.delta.push_back({g});
            return t;
        }
        const int n = spec.rank;
        t.alpha_mask = (std::uint64_t(1) << n) - 1;
        const std::uint64_t alpha_states = std::uint64_t(1) << n;
        t.delta.reserve(gen_codes.size());
        for (std::uint64_t g : gen_codes) {
            std::vector<std::uint64_t> d(alpha_states);
            for (std::uint64_t a = 0; a < alpha_states; ++a)
                d[a] = code_mul(a, g, spec) ^ a;
            t.delta.push_back(std::move(d));
        }
        return t;
    }

    std::uint64_t apply(std::size_t gen, std::uint64_t e) const {
        return e ^ delta[gen][e & alpha_mask];
    }
};

}  // namespace detail

inline LengthTable build_length_table(const GroupSpec& spec, int max_rank_override = 0) {
    if (!spec.quotient)
        throw std::invalid_argument("build_length_table: requires the finite quotient");
    const int cap = rank_cap(spec, max_rank_override);
    if (spec.rank > cap)
        throw std::invalid_argument(
            "build_length_table: rank " + std::to_string(spec.rank) + " exceeds the limit " +
            std::to_string(cap) + " (about 2^" + std::to_string(code_bits(spec)) +
            " elements * 17 bytes; raise the limit explicitly to proceed)");

    LengthTable table;
    table.spec = spec;
    const std::uint64_t size = group_order(spec);

    for (auto& entry : enumerate_coded(spec))
        if (entry.first != 0)
            table.generators.push_back(std::move(entry));

    std::vector<std::uint64_t> gen_codes;
    gen_codes.reserve(table.generators.size());
    for (const auto& [code, form] : table.generators)
        gen_codes.push_back(code);
    auto edges = detail::EdgeTables::build(spec, gen_codes);

    table.lengths.assign(size, 0xFF);
    table.lengths[0] = 0;
    std::vector<std::uint64_t> frontier{0};
    std::uint8_t level = 0;
    while (!frontier.empty()) {
        ++level;
        if (level == 0xFF)
            throw std::runtime_error("build_length_table: distance overflow");
        std::vector<std::uint64_t> next;
        for (std::uint64_t e : frontier)
            for (std::size_t g = 0; g < gen_codes.size(); ++g) {
                std::uint64_t ne = edges.apply(g, e);
                if (table.lengths[ne] == 0xFF) {
                    table.lengths[ne] = level;
                    next.push_back(ne);
                }
            }
        frontier = std::move(next);
    }
    for (std::uint8_t d : table.lengths)
        if (d == 0xFF)
            throw std::logic_error("build_length_table: palindromes failed to generate the group");

    // Canonical parents: smallest palindrome code wins (the predecessor is a
    // function of the palindrome under right multiplication). Independent of
    // BFS visiting order, so any construction schedule yields the same table.
    std::vector<std::uint64_t> inv_codes(gen_codes.size());
    for (std::size_t g = 0; g < gen_codes.size(); ++g)
        inv_codes[g] = code_inv(gen_codes[g], spec);
    auto inv_edges = detail::EdgeTables::build(spec, inv_codes);
    table.parent_code.assign(size, 0);
    table.parent_pal.assign(size, 0);
    for (std::uint64_t e = 1; e < size; ++e) {
        const std::uint8_t d = table.lengths[e];
        for (std::size_t g = 0; g < gen_codes.size(); ++g) {
            std::uint64_t h = inv_edges.apply(g, e);
            if (table.lengths[h] + 1 == d) {
                table.parent_code[e] = h;
                table.parent_pal[e] = gen_codes[g];
                break;
            }
        }
    }
    return table;
}

inline int palindromic_length(const NormalForm& g, const LengthTable& table) {
    if (g.spec != table.spec)
        throw std::invalid_argument("palindromic_length: group spec mismatch");
    return table.lengths[pack_code(g)];
}

inline int palindromic_width(const LengthTable& table) {
    int w = 0;
    for (std::uint8_t d : table.lengths)
        w = std::max(w, static_cast<int>(d));
    return w;
}

inline int palindromic_width(const GroupSpec& spec, int max_rank_override = 0) {
    return palindromic_width(build_length_table(spec, max_rank_override));
}

namespace detail {

inline const PalindromeForm& form_for_code(const LengthTable& table, std::uint64_t code) {
    auto it = std::lower_bound(table.generators.begin(), table.generators.end(), code,
                               [](const auto& entry, std::uint64_t c) { return entry.first < c; });
    if (it == table.generators.end() || it->first != code)
        throw std::logic_error("length table: unknown palindrome code");
    return it->second;
}

}  // namespace detail

/// Shortest factorization of g into lifted palindromic words, following the
/// table's deterministic parent pointers.
inline Factorization witness(const NormalForm& g, const LengthTable& table) {
    if (g.spec != table.spec)
        throw std::invalid_argument("witness: group spec mismatch");
    Factorization fact;
    fact.target = g;
    std::uint64_t code = pack_code(g);
    while (code != 0) {
        fact.factors.push_back(lift(detail::form_for_code(table, table.parent_pal[code])));
        code = table.parent_code[code];
    }
    std::reverse(fact.factors.begin(), fact.factors.end());
    return fact;
}

/// Histogram of exact lengths; counts sum to the group order.
inline std::vector<std::uint64_t> spectrum(const LengthTable& table) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(palindromic_width(table)) + 1, 0);
    for (std::uint8_t d : table.lengths)
        ++counts[d];
    return counts;
}

inline std::vector<std::uint64_t> spectrum(const GroupSpec& spec, int max_rank_override = 0) {
    return spectrum(build_length_table(spec, max_rank_override));
}

/// Search-free factorization with at most 2n factors: write g as
/// prod_j y_j^{a_j} times a central part, decompose the central part as
/// prod_j [u_j, y_j], and render each [u_j, y_j] y_j^{a_j} as one or two
/// palindromes via the involutive commutator identity.
inline Factorization decompose_2n(const NormalForm& g) {
    if (!g.spec.quotient || g.spec.nilpotency_class != 2)
        throw std::invalid_argument("decompose_2n: requires the class-2 quotient");
    const GroupSpec& spec = g.spec;
    const int n = spec.rank;

    Word gens_word;
    for (int j = 1; j <= n; ++j)
        if (g.alpha_at(j).is_odd())
            gens_word.letters.push_back(make_letter(spec, j, 1));
    NormalForm central = mul(inv(eval(gens_word, spec)), g);
    std::vector<Word> us = central_decompose(central);

    Factorization fact;
    fact.target = g;
    for (int j = 1; j <= n; ++j) {
        const Word& u = us[static_cast<std::size_t>(j - 1)];
        const int aj = g.alpha_at(j).mod2();
        if (u.empty()) {
            if (aj == 1) {
                Word yj;
                yj.letters.push_back(make_letter(spec, j, 1));
                fact.factors.push_back(std::move(yj));
            }
            continue;
        }
        for (Word& f : involutive_commutator_y(u, j, aj, spec))
            fact.factors.push_back(std::move(f));
    }
    return fact;
}

/// Constructive palindromic factorization in the free class-2 group: one
/// single-generator factor per nonzero alpha entry, then three factors per
/// nonvanishing commutator block [u_j, x_j] of the central part. Used to
/// exercise the width transfer inequality: projecting the element into the
/// quotient can only shorten its palindromic length.
inline Factorization free_palindromic_factorization(const NormalForm& g) {
    if (g.spec.quotient || g.spec.nilpotency_class != 2)
        throw std::invalid_argument(
            "free_palindromic_factorization: requires the free class-2 group");
    const GroupSpec& spec = g.spec;
    Factorization fact;
    fact.target = g;
    Word gens_word;
    for (int i = 1; i <= spec.rank; ++i) {
        const BigInt& a = g.alpha_at(i);
        if (a.is_zero())
            continue;
        auto v = a.to_int64();
        if (!v)
            throw std::overflow_error("free_palindromic_factorization: exponent too large");
        Word run;
        int sign = *v >= 0 ? 1 : -1;
        for (long long k = 0; k < (*v >= 0 ? *v : -*v); ++k)
            run.letters.push_back(make_letter(spec, i, sign));
        gens_word = concat(gens_word, run);
        fact.factors.push_back(std::move(run));
    }
    NormalForm central = mul(inv(eval(gens_word, spec)), g);
    std::vector<Word> us = central_decompose(central);
    for (int j = 1; j <= spec.rank; ++j) {
        const Word& u = us[static_cast<std::size_t>(j - 1)];
        if (u.empty())
            continue;
        Word xj;
        xj.letters.push_back(make_letter(spec, j, 1));
        for (Word& f : commutator_factor_3(u, xj, spec))
            fact.factors.push_back(std::move(f));
    }
    return fact;
}

// ---------------------------------------------------------------------------
// Lower-bound certificate machinery
// ---------------------------------------------------------------------------

/// Machine-checked record of the commutator-support statements behind the
/// 2(n-1) lower bound, with concrete witnesses for the failing unions.
struct Certificate {
    struct OmittedPair {
        int i = 0;
        int j = 0;                                // omitted pivots, i < j
        bool pass = false;                        // union without them misses something
        std::vector<std::pair<int, int>> missing; // expected exactly {(j, i)}
    };

    int rank = 0;
    bool statement1 = false;                      // union of all b(p_j) covers every pair
    std::vector<std::pair<int, bool>> statement2; // union without any single pivot still covers
    std::vector<OmittedPair> statement3;
    bool min_pivot_types = false;  // covering every pair needs at least n-1 pivot types
    bool pivot_parity = false;     // a maximal p_j has alpha = e_j, so a type used
                                   // exactly once leaves an odd generator exponent

    bool all_pass() const {
        bool ok = statement1 && min_pivot_types && pivot_parity;
        for (const auto& [i, pass] : statement2)
            ok = ok && pass;
        for (const auto& rec : statement3)
            ok = ok && rec.pass;
        return ok;
    }
};

inline Certificate commutator_support_certificate(int n) {
    if (n < 2)
        throw std::invalid_argument("commutator_support_certificate: requires rank >= 2");
    if (n > 63)
        throw std::invalid_argument("commutator_support_certificate: rank exceeds the pivot bitmask width");
    const GroupSpec spec{n, 2, true};

    // b(p_j) for the maximal-support forms: pivot exponent 1, all outers 1.
    std::vector<BSet> supports;
    std::vector<bool> pivot_alpha_ok;
    for (int j = 1; j <= n; ++j) {
        PalindromeForm f = make_form(spec, j);
        f.pivot_exponent = BigInt(1);
        for (auto& o : f.outer)
            o = BigInt(1);
        NormalForm nf = palindrome_nf(f);
        supports.push_back(bset(nf));
        bool alpha_is_ej = true;
        for (int t = 1; t <= n; ++t)
            alpha_is_ej = alpha_is_ej && (nf.alpha_at(t).is_odd() == (t == j));
        pivot_alpha_ok.push_back(alpha_is_ej);
    }

    Certificate cert;
    cert.rank = n;

    // per-commutator pivot covers: which p_t contain z_kl (bit t-1)
    const int pairs = pair_count(n);
    std::vector<std::uint64_t> cover(static_cast<std::size_t>(pairs), 0);
    for (int t = 1; t <= n; ++t) {
        const BSet& s = supports[static_cast<std::size_t>(t - 1)];
        for (int p = 0; p < pairs; ++p)
            if (s.bits[static_cast<std::size_t>(p)])
                cover[static_cast<std::size_t>(p)] |= std::uint64_t(1) << (t - 1);
    }
    auto pair_of_index = [n](int idx) {
        for (int i = 2; i <= n; ++i)
            if (idx < pair_index(i + 1, 1))
                return std::make_pair(i, idx - pair_index(i, 1) + 1);
        return std::make_pair(0, 0);
    };

    cert.statement1 = true;
    for (std::uint64_t c : cover)
        cert.statement1 = cert.statement1 && c != 0;

    for (int i = 1; i <= n; ++i) {
        bool pass = true;
        for (std::uint64_t c : cover)
            pass = pass && (c & ~(std::uint64_t(1) << (i - 1))) != 0;
        cert.statement2.emplace_back(i, pass);
    }

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const std::uint64_t omitted =
                (std::uint64_t(1) << (i - 1)) | (std::uint64_t(1) << (j - 1));
            Certificate::OmittedPair rec;
            rec.i = i;
            rec.j = j;
            for (int p = 0; p < pairs; ++p)
                if ((cover[static_cast<std::size_t>(p)] & ~omitted) == 0)
                    rec.missing.push_back(pair_of_index(p));
            // the proof's witness: exactly z_ji goes missing
            rec.pass = rec.missing.size() == 1 && rec.missing[0] == std::make_pair(j, i);
            cert.statement3.push_back(std::move(rec));
        }

    cert.min_pivot_types = true;
    for (const auto& rec : cert.statement3)
        cert.min_pivot_types = cert.min_pivot_types && !rec.missing.empty();

    cert.pivot_parity = true;
    for (bool ok : pivot_alpha_ok)
        cert.pivot_parity = cert.pivot_parity && ok;

    return cert;
}

/// True iff no product of fewer than `bound` palindromes equals g, decided by
/// the exact table.
inline bool verify_minimum(const NormalForm& g, int bound, const LengthTable& table) {
    return palindromic_length(g, table) >= bound;
}

inline bool verify_minimum(const NormalForm& g, int bound, int max_rank_override = 0) {
    return verify_minimum(g, bound, build_length_table(g.spec, max_rank_override));
}

/// The target of the lower-bound lemma: the product of every basic commutator.
inline NormalForm all_commutators_element(const GroupSpec& spec) {
    NormalForm g = identity(spec);
    for (auto& b : g.beta)
        b = BigInt(1);
    return g;
}

// ---------------------------------------------------------------------------
// The rank-3 case table
// ---------------------------------------------------------------------------

struct Rank3CaseRecord {
    std::uint64_t code = 0;
    std::string element;  // normal form in the word grammar
    int length = 0;
    Factorization witness;
};

/// One record per 6-bit code a1 a2 a3 b21 b31 b32: the element
/// y1^a1 y2^a2 y3^a3 z21^b21 z31^b31 z32^b32, its exact length and a witness.
inline std::vector<Rank3CaseRecord> rank3_case_table(const LengthTable& table) {
    if (table.spec != GroupSpec{3, 2, true})
        throw std::invalid_argument("rank3_case_table: requires the rank-3 class-2 quotient");
    std::vector<Rank3CaseRecord> out;
    out.reserve(64);
    for (std::uint64_t code = 0; code < 64; ++code) {
        Rank3CaseRecord rec;
        rec.code = code;
        NormalForm g = unpack_code(code, table.spec);
        rec.element = render(g);
        rec.length = palindromic_length(g, table);
        rec.witness = witness(g, table);
        out.push_back(std::move(rec));
    }
    return out;
}

inline std::vector<Rank3CaseRecord> rank3_case_table() {
    return rank3_case_table(build_length_table(GroupSpec{3, 2, true}));
}

/// Provenance of a shipped case row.
enum class RowStatus {
    verbatim,    // factorization transcribed exactly from the source tabulation
    emended,     // the source tabulation has an evident slip; factors carry the fix
    bound_only,  // no usable transcription; only the claimed bound is checked
};

/// A case row shipped as test data: the element's code in the table layout,
/// its palindromic factorization, and the claimed factor-count bound.
struct CaseRow {
    const char* code_bits;
    const char* factors;  // ';'-separated words, empty for bound_only
    int claimed_bound;
    RowStatus status;
};

/// Hand-tabulated factorizations for the rank-3 quotient, one row per worked
/// case. Emended rows fix evident transcription slips (000110 carried a
/// spurious trailing generator, 110010 a wrong middle letter, 011110 a
/// conjugation in place of a factor list, and the 100111 row was mislabeled
/// 011011); the one bound_only row asserts just its factor-count bound.
/// Exact lengths for all 64 elements come from the length table itself,
/// independently of these rows.
inline const std::vector<CaseRow>& rank3_case_rows() {
    static const std::vector<CaseRow> rows = {
        // weight 2
        {"000110", "y2 y1 y2; y3 y1 y3", 2, RowStatus::emended},
        {"000101", "y3 y2 y3; y1 y2 y1", 2, RowStatus::verbatim},
        {"000011", "y3 y1 y3 y1 y3; y2 y3 y2", 2, RowStatus::verbatim},
        // weight 3
        {"110010", "y3 y1 y3; y2", 2, RowStatus::emended},
        {"110001", "y1; y3 y2 y3", 2, RowStatus::verbatim},
        {"101100", "y2 y1 y2; y3", 2, RowStatus::verbatim},
        {"101010", "y3; y1", 2, RowStatus::verbatim},
        {"101001", "y1; y2 y3 y2", 2, RowStatus::verbatim},
        {"100110", "y2 y1 y2; y3 y1 y3; y1", 3, RowStatus::verbatim},
        {"100101", "y3 y2 y3; y1; y2", 3, RowStatus::verbatim},
        {"100011", "y3; y1; y2 y3 y2", 3, RowStatus::verbatim},
        {"010110", "y1 y2 y1; y3 y1 y3; y1", 3, RowStatus::verbatim},
        {"010101", "y1 y2 y1; y3 y2 y3; y2", 3, RowStatus::verbatim},
        {"010011", "y3 y1 y3; y1; y3 y2 y3", 3, RowStatus::verbatim},
        {"001110", "y2 y1 y2; y3; y1", 3, RowStatus::verbatim},
        {"001101", "y2 y1 y2; y1; y2 y3 y2", 3, RowStatus::verbatim},
        {"001011", "y1 y3 y1; y3 y2 y3; y2", 3, RowStatus::verbatim},
        {"000111", "y2; y3 y2 y3; y2 y1 y2; y3 y1 y3", 4, RowStatus::verbatim},
        // weight 4
        {"111100", "y2; y1; y3", 3, RowStatus::verbatim},
        {"110110", "y3 y1 y3; y1 y2 y1", 2, RowStatus::verbatim},
        {"101110", "y2 y1 y2; y1 y3 y1", 2, RowStatus::verbatim},
        {"011110", "y1 y2 y1; y1 y3 y1", 2, RowStatus::emended},
        {"111001", "y1; y3; y2", 3, RowStatus::verbatim},
        {"110101", "y2 y1 y2; y2 y3 y2 y3 y2", 2, RowStatus::verbatim},
        {"101101", "y2 y1 y2; y2 y3 y2", 2, RowStatus::verbatim},
        {"011101", "y1 y2 y1; y2 y3 y2", 2, RowStatus::verbatim},
        {"110011", "y3 y1 y3; y3 y2 y3", 2, RowStatus::verbatim},
        {"101011", "y3 y1 y3; y2 y3 y2", 2, RowStatus::verbatim},
        {"100111", "y3 y1 y3; y3 y2 y3; y1 y2 y1", 3, RowStatus::emended},
        {"010111", "y1 y2 y1; y3 y1 y3 y1 y3; y2 y3 y2", 3, RowStatus::verbatim},
        {"001111", "y2 y1 y2; y3 y1 y3; y2 y3 y2", 3, RowStatus::verbatim},
        // weight 5
        {"111110", "y2; y3; y1", 3, RowStatus::verbatim},
        {"111101", "y2 y1 y2; y3; y2", 3, RowStatus::verbatim},
        {"111011", "y1 y3 y1; y3 y1 y3; y2", 3, RowStatus::verbatim},
        {"110111", "y3 y2 y3; y1 y3 y1 y3 y1", 2, RowStatus::verbatim},
        {"101111", "y2 y3 y2; y2 y1 y2", 2, RowStatus::verbatim},
        {"011111", "", 3, RowStatus::bound_only},
        // weight 6
        {"111111", "y2; y3 y1 y3; y2 y3 y2", 3, RowStatus::verbatim},
    };
    return rows;
}

struct RowCheck {
    std::uint64_t code = 0;
    RowStatus status = RowStatus::verbatim;
    bool ok = false;
    std::string message;
};

/// Validates every shipped case row against the exact table: factor rows must
/// multiply to their element with every factor palindromic; bound-only rows
/// must satisfy their claimed bound.
inline std::vector<RowCheck> validate_rank3_case_rows(const LengthTable& table) {
    if (table.spec != GroupSpec{3, 2, true})
        throw std::invalid_argument("validate_rank3_case_rows: requires the rank-3 quotient");
    const GroupSpec& spec = table.spec;
    std::vector<RowCheck> checks;
    for (const CaseRow& row : rank3_case_rows()) {
        RowCheck check;
        check.code = code_from_bits_string(row.code_bits, spec);
        check.status = row.status;
        const NormalForm target = unpack_code(check.code, spec);
        const int exact = palindromic_length(target, table);
        if (row.status == RowStatus::bound_only) {
            check.ok = exact <= row.claimed_bound;
            if (!check.ok)
                check.message = "exact length " + std::to_string(exact) + " exceeds bound " +
                                std::to_string(row.claimed_bound);
            checks.push_back(std::move(check));
            continue;
        }
        std::vector<Word> factors;
        std::string text(row.factors);
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t sep = text.find(';', start);
            std::string piece = text.substr(start, sep == std::string::npos ? sep : sep - start);
            factors.push_back(parse(piece, spec));
            if (sep == std::string::npos)
                break;
            start = sep + 1;
        }
        bool all_palindromic = true;
        Word product;
        for (const Word& f : factors) {
            all_palindromic = all_palindromic && is_palindrome(f);
            product = concat(product, f);
        }
        const bool product_ok = eval(product, spec) == target;
        const bool count_ok = static_cast<int>(factors.size()) == row.claimed_bound;
        const bool bound_ok = exact <= row.claimed_bound;
        check.ok = all_palindromic && product_ok && count_ok && bound_ok;
        if (!all_palindromic)
            check.message += "non-palindromic factor; ";
        if (!product_ok)
            check.message += "product does not evaluate to the element; ";
        if (!count_ok)
            check.message += "factor count differs from the claimed bound; ";
        if (!bound_ok)
            check.message += "table length exceeds the claimed bound; ";
        checks.push_back(std::move(check));
    }
    return checks;
}

// ---------------------------------------------------------------------------
// Cache file: magic PWT1, u32 rank, u8 class, u64 element count, length bytes
// by packed code, then (pred, palindrome) u64 pairs for codes 1..count-1.
// All integers little-endian.
// ---------------------------------------------------------------------------

inline constexpr char kCacheMagic[4] = {'P', 'W', 'T', '1'};

namespace detail {

template <typename T>
void write_le(std::ostream& os, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
        os.put(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff));
}

template <typename T>
T read_le(std::istream& is) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        int c = is.get();
        if (c == EOF)
            throw std::runtime_error("length table cache: truncated file");
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return static_cast<T>(v);
}

}  // namespace detail

inline void save_length_table(const LengthTable& table, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("cannot open cache file for writing: " + path);
    os.write(kCacheMagic, 4);
    detail::write_le<std::uint32_t>(os, static_cast<std::uint32_t>(table.spec.rank));
    detail::write_le<std::uint8_t>(os, static_cast<std::uint8_t>(table.spec.nilpotency_class));
    detail::write_le<std::uint64_t>(os, table.size());
    os.write(reinterpret_cast<const char*>(table.lengths.data()),
             static_cast<std::streamsize>(table.lengths.size()));
    for (std::uint64_t e = 1; e < table.size(); ++e) {
        detail::write_le<std::uint64_t>(os, table.parent_code[e]);
        detail::write_le<std::uint64_t>(os, table.parent_pal[e]);
    }
    if (!os)
        throw std::runtime_error("failed writing cache file: " + path);
}

inline LengthTable load_length_table(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("cannot open cache file: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kCacheMagic, 4) != 0)
        throw std::runtime_error("length table cache: bad magic");
    const auto rank = detail::read_le<std::uint32_t>(is);
    const auto cls = detail::read_le<std::uint8_t>(is);
    LengthTable table;
    table.spec = GroupSpec(static_cast<int>(rank), cls, true);
    const auto count = detail::read_le<std::uint64_t>(is);
    if (count != group_order(table.spec))
        throw std::runtime_error("length table cache: element count mismatch");
    table.lengths.resize(count);
    is.read(reinterpret_cast<char*>(table.lengths.data()), static_cast<std::streamsize>(count));
    if (!is)
        throw std::runtime_error("length table cache: truncated lengths");
    table.parent_code.assign(count, 0);
    table.parent_pal.assign(count, 0);
    for (std::uint64_t e = 1; e < count; ++e) {
        table.parent_code[e] = detail::read_le<std::uint64_t>(is);
        table.parent_pal[e] = detail::read_le<std::uint64_t>(is);
    }
    for (auto& entry : enumerate_coded(table.spec))
        if (entry.first != 0)
            table.generators.push_back(std::move(entry));
    return table;
}

}  // namespace palwidth
