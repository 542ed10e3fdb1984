// nilpotent.hpp -- exact normal-form arithmetic for free nilpotent groups of
// class <= 2 and their quotients by generator squares
//
// An element is  prod_i x_i^{alpha_i} . prod_{j<i} z_ij^{beta_ij}  with
// z_ij = [x_i, x_j] central. Multiplication collects the right factor's
// generators through the left factor's, picking up one commutator per
// inverted pair:
//
//   alpha = a.alpha + b.alpha
//   beta_ij = a.beta_ij + b.beta_ij + a.alpha_i * b.alpha_j   (i > j)
//
// all mod 2 in quotient mode. The closed form is validated against a
// word-level letter-exchange collector in the test suite before anything
// else relies on it.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "palwidth/bigint.hpp"
#include "palwidth/words.hpp"

namespace palwidth {

/// Number of weight-2 basic commutators z_ij, 1 <= j < i <= n.
inline int pair_count(int rank) { return rank * (rank - 1) / 2; }

/// Index of the pair (i, j), i > j, in lexicographic order of (i, j):
/// (2,1) (3,1) (3,2) (4,1) ... starting at 0.
inline int pair_index(int i, int j) { return (i - 1) * (i - 2) / 2 + (j - 1); }

struct NormalForm {
    GroupSpec spec;
    std::vector<BigInt> alpha;  // rank entries
    std::vector<BigInt> beta;   // pair_count(rank) entries, empty in class 1

    const BigInt& alpha_at(int i) const { return alpha[static_cast<std::size_t>(i - 1)]; }
    BigInt& alpha_at(int i) { return alpha[static_cast<std::size_t>(i - 1)]; }
    const BigInt& beta_at(int i, int j) const {
        return beta[static_cast<std::size_t>(pair_index(i, j))];
    }
    BigInt& beta_at(int i, int j) { return beta[static_cast<std::size_t>(pair_index(i, j))]; }

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

inline NormalForm identity(const GroupSpec& spec) {
    NormalForm g;
    g.spec = spec;
    g.alpha.assign(static_cast<std::size_t>(spec.rank), BigInt());
    if (spec.nilpotency_class == 2)
        g.beta.assign(static_cast<std::size_t>(pair_count(spec.rank)), BigInt());
    return g;
}

inline bool is_identity(const NormalForm& g) {
    for (const auto& a : g.alpha)
        if (!a.is_zero())
            return false;
    for (const auto& b : g.beta)
        if (!b.is_zero())
            return false;
    return true;
}

namespace detail {

inline BigInt reduce_exponent(const BigInt& v, const GroupSpec& spec) {
    return spec.quotient ? BigInt(v.mod2()) : v;
}

inline void reduce_all(NormalForm& g) {
    if (!g.spec.quotient)
        return;
    for (auto& a : g.alpha)
        a = BigInt(a.mod2());
    for (auto& b : g.beta)
        b = BigInt(b.mod2());
}

}  // namespace detail

inline NormalForm mul(const NormalForm& a, const NormalForm& b) {
    if (a.spec != b.spec)
        throw std::invalid_argument("mul: group spec mismatch");
    NormalForm r = identity(a.spec);
    const int n = a.spec.rank;
    for (int i = 1; i <= n; ++i)
        r.alpha_at(i) = a.alpha_at(i) + b.alpha_at(i);
    if (a.spec.nilpotency_class == 2)
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                r.beta_at(i, j) = a.beta_at(i, j) + b.beta_at(i, j) + a.alpha_at(i) * b.alpha_at(j);
    detail::reduce_all(r);
    return r;
}

/// Solves mul(g, h) = identity for h: alpha negates, and the collection
/// correction alpha_i * (-alpha_j) must be cancelled in beta.
inline NormalForm inv(const NormalForm& g) {
    NormalForm r = identity(g.spec);
    const int n = g.spec.rank;
    for (int i = 1; i <= n; ++i)
        r.alpha_at(i) = -g.alpha_at(i);
    if (g.spec.nilpotency_class == 2)
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                r.beta_at(i, j) = -g.beta_at(i, j) + g.alpha_at(i) * g.alpha_at(j);
    detail::reduce_all(r);
    return r;
}

inline NormalForm letter_nf(const Letter& l, const GroupSpec& spec) {
    NormalForm g = identity(spec);
    if (l.generator < 1 || l.generator > spec.rank)
        throw std::invalid_argument("eval: generator index out of range");
    g.alpha_at(l.generator) = BigInt(spec.quotient ? 1 : l.sign);
    return g;
}

/// Left-fold of mul over single-letter normal forms.
inline NormalForm eval(const Word& w, const GroupSpec& spec) {
    NormalForm g = identity(spec);
    for (const Letter& l : w.letters)
        g = mul(g, letter_nf(l, spec));
    return g;
}

/// Subset of the weight-2 basic commutator pairs {(i, j) : 1 <= j < i <= n}.
struct BSet {
    int rank = 1;
    std::vector<bool> bits;  // indexed by pair_index

    static BSet empty_set(int rank) {
        BSet s;
        s.rank = rank;
        s.bits.assign(static_cast<std::size_t>(pair_count(rank)), false);
        return s;
    }

    static BSet full_set(int rank) {
        BSet s = empty_set(rank);
        s.bits.assign(s.bits.size(), true);
        return s;
    }

    bool contains(int i, int j) const { return bits[static_cast<std::size_t>(pair_index(i, j))]; }
    void insert(int i, int j) { bits[static_cast<std::size_t>(pair_index(i, j))] = true; }

    std::size_t size() const {
        std::size_t c = 0;
        for (bool b : bits)
            c += b ? 1 : 0;
        return c;
    }

    BSet united(const BSet& o) const {
        BSet r = *this;
        for (std::size_t k = 0; k < bits.size(); ++k)
            r.bits[k] = r.bits[k] || o.bits[k];
        return r;
    }

    BSet minus(const BSet& o) const {
        BSet r = *this;
        for (std::size_t k = 0; k < bits.size(); ++k)
            r.bits[k] = r.bits[k] && !o.bits[k];
        return r;
    }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 2; i <= rank; ++i)
            for (int j = 1; j < i; ++j)
                if (contains(i, j))
                    out.emplace_back(i, j);
        return out;
    }

    friend bool operator==(const BSet&, const BSet&) = default;
};

/// b(g): the basic commutators with nonzero exponent in g's normal form.
inline BSet bset(const NormalForm& g) {
    if (g.spec.nilpotency_class != 2)
        throw std::invalid_argument("bset: requires class 2");
    BSet s = BSet::empty_set(g.spec.rank);
    for (int i = 2; i <= g.spec.rank; ++i)
        for (int j = 1; j < i; ++j)
            if (!g.beta_at(i, j).is_zero())
                s.insert(i, j);
    return s;
}

/// Reduces every exponent mod 2; the result lives in the quotient group.
inline NormalForm project_mod2(const NormalForm& g) {
    if (g.spec.quotient)
        throw std::invalid_argument("project_mod2: element already in quotient mode");
    NormalForm r = g;
    r.spec.quotient = true;
    detail::reduce_all(r);
    return r;
}

/// Number of nonzero exponents in the normal form (quotient mode).
inline int weight(const NormalForm& g) {
    if (!g.spec.quotient)
        throw std::invalid_argument("weight: requires quotient mode");
    int c = 0;
    for (const auto& a : g.alpha)
        c += a.is_zero() ? 0 : 1;
    for (const auto& b : g.beta)
        c += b.is_zero() ? 0 : 1;
    return c;
}

/// Writes a central element c (alpha = 0, class 2) as prod_j [u_j, x_j] with
/// u_j = prod_{i>j} x_i^{beta_ij}; valid because weight-2 commutators are
/// central and bilinear, so [u_j, x_j] = prod_{i>j} z_ij^{beta_ij}.
inline std::vector<Word> central_decompose(const NormalForm& c) {
    if (c.spec.nilpotency_class != 2)
        throw std::invalid_argument("central_decompose: requires class 2");
    for (const auto& a : c.alpha)
        if (!a.is_zero())
            throw std::invalid_argument("central_decompose: alpha must vanish");
    const int n = c.spec.rank;
    std::vector<Word> us;
    us.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        Word u;
        for (int i = j + 1; i <= n; ++i) {
            auto e = c.beta_at(i, j).to_int64();
            if (!e)
                throw std::overflow_error("central_decompose: exponent too large to expand");
            long long exp = *e;
            int sign = exp >= 0 ? 1 : -1;
            for (long long k = 0; k < (exp >= 0 ? exp : -exp); ++k)
                u.letters.push_back(make_letter(c.spec, i, sign));
        }
        us.push_back(std::move(u));
    }
    return us;
}

/// Renders the normal form in the word grammar with z-tokens,
/// e.g. "x1^2 x2 z2.1^-3"; the identity renders as "e".
inline std::string render(const NormalForm& g) {
    std::string out;
    auto emit = [&out](const std::string& tok) {
        if (!out.empty())
            out += ' ';
        out += tok;
    };
    const char sym = g.spec.letter_symbol();
    for (int i = 1; i <= g.spec.rank; ++i) {
        const BigInt& a = g.alpha_at(i);
        if (a.is_zero())
            continue;
        std::string tok = std::string(1, sym) + std::to_string(i);
        if (a != BigInt(1))
            tok += "^" + a.to_string();
        emit(tok);
    }
    if (g.spec.nilpotency_class == 2)
        for (int i = 2; i <= g.spec.rank; ++i)
            for (int j = 1; j < i; ++j) {
                const BigInt& b = g.beta_at(i, j);
                if (b.is_zero())
                    continue;
                std::string tok = "z" + std::to_string(i) + "." + std::to_string(j);
                if (b != BigInt(1))
                    tok += "^" + b.to_string();
                emit(tok);
            }
    return out.empty() ? "e" : out;
}

// ---------------------------------------------------------------------------
// Packed element codes (quotient mode): bit i-1 holds alpha_i, bit
// n + pair_index(i, j) holds beta_ij. This is the interchange format with the
// length-table machinery and the cache file.
// ---------------------------------------------------------------------------

inline int code_bits(const GroupSpec& spec) {
    return spec.rank + (spec.nilpotency_class == 2 ? pair_count(spec.rank) : 0);
}

inline std::uint64_t group_order(const GroupSpec& spec) {
    if (!spec.quotient)
        throw std::invalid_argument("group_order: free groups are infinite");
    if (code_bits(spec) > 63)
        throw std::invalid_argument("group_order: rank too large for packed codes");
    return std::uint64_t(1) << code_bits(spec);
}

inline std::uint64_t pack_code(const NormalForm& g) {
    if (!g.spec.quotient)
        throw std::invalid_argument("pack_code: requires quotient mode");
    std::uint64_t code = 0;
    const int n = g.spec.rank;
    for (int i = 1; i <= n; ++i)
        if (g.alpha_at(i).is_odd())
            code |= std::uint64_t(1) << (i - 1);
    if (g.spec.nilpotency_class == 2)
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                if (g.beta_at(i, j).is_odd())
                    code |= std::uint64_t(1) << (n + pair_index(i, j));
    return code;
}

inline NormalForm unpack_code(std::uint64_t code, const GroupSpec& spec) {
    if (!spec.quotient)
        throw std::invalid_argument("unpack_code: requires quotient mode");
    NormalForm g = identity(spec);
    const int n = spec.rank;
    for (int i = 1; i <= n; ++i)
        if ((code >> (i - 1)) & 1u)
            g.alpha_at(i) = BigInt(1);
    if (spec.nilpotency_class == 2)
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                if ((code >> (n + pair_index(i, j))) & 1u)
                    g.beta_at(i, j) = BigInt(1);
    return g;
}

/// mul on packed codes; mirrors the NormalForm law mod 2.
inline std::uint64_t code_mul(std::uint64_t a, std::uint64_t b, const GroupSpec& spec) {
    const int n = spec.rank;
    std::uint64_t r = a ^ b;
    if (spec.nilpotency_class == 2) {
        std::uint64_t aa = a & ((std::uint64_t(1) << n) - 1);
        std::uint64_t bb = b & ((std::uint64_t(1) << n) - 1);
        for (int i = 2; i <= n; ++i)
            if ((aa >> (i - 1)) & 1u)
                for (int j = 1; j < i; ++j)
                    if ((bb >> (j - 1)) & 1u)
                        r ^= std::uint64_t(1) << (n + pair_index(i, j));
    }
    return r;
}

inline std::uint64_t code_inv(std::uint64_t a, const GroupSpec& spec) {
    const int n = spec.rank;
    std::uint64_t r = a;
    if (spec.nilpotency_class == 2) {
        std::uint64_t aa = a & ((std::uint64_t(1) << n) - 1);
        for (int i = 2; i <= n; ++i)
            if ((aa >> (i - 1)) & 1u)
                for (int j = 1; j < i; ++j)
                    if ((aa >> (j - 1)) & 1u)
                        r ^= std::uint64_t(1) << (n + pair_index(i, j));
    }
    return r;
}

/// The code written out bitwise, one character per bit,
/// alpha_1 .. alpha_n then beta in pair_index order (e.g. "000111").
inline std::string code_bits_string(std::uint64_t code, const GroupSpec& spec) {
    const int bits = code_bits(spec);
    std::string s(static_cast<std::size_t>(bits), '0');
    for (int k = 0; k < bits; ++k)
        if ((code >> k) & 1u)
            s[static_cast<std::size_t>(k)] = '1';
    return s;
}

inline std::uint64_t code_from_bits_string(std::string_view s, const GroupSpec& spec) {
    if (static_cast<int>(s.size()) != code_bits(spec))
        throw std::invalid_argument("code_from_bits_string: wrong length");
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '1')
            code |= std::uint64_t(1) << k;
        else if (s[k] != '0')
            throw std::invalid_argument("code_from_bits_string: bad character");
    }
    return code;
}

}  // namespace palwidth
