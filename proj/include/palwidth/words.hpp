// words.hpp -- alphabet, group words, parsing/printing, reduction, palindromes
//
// Words are flat sequences of signed unit letters; powers in the input are
// expanded on parse so the palindrome test only ever compares letters.
// Palindromicity is purely syntactic: no reduction is applied first, callers
// decide whether to reduce.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace palwidth {

/// Ambient group: free nilpotent N_{n,c} or its quotient by generator squares.
/// In quotient mode the generators are involutions and exponents live mod 2.
struct GroupSpec {
    int rank = 1;                 // number of generators n >= 1
    int nilpotency_class = 1;     // c in {1, 2}
    bool quotient = false;        // true: generators are involutions

    GroupSpec() = default;
    GroupSpec(int rank_, int class_, bool quotient_)
        : rank(rank_), nilpotency_class(class_), quotient(quotient_) {
        if (rank < 1)
            throw std::invalid_argument("GroupSpec: rank must be >= 1");
        if (nilpotency_class != 1 && nilpotency_class != 2)
            throw std::invalid_argument("GroupSpec: class must be 1 or 2");
    }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

    /// Generator symbol used by the word grammar: x free, y involutive.
    char letter_symbol() const { return quotient ? 'y' : 'x'; }
};

/// One signed generator occurrence. Involutive letters carry sign +1.
struct Letter {
    int generator = 1;  // 1-based index
    int sign = 1;       // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter make_letter(const GroupSpec& spec, int generator, int sign) {
    if (generator < 1 || generator > spec.rank)
        throw std::invalid_argument("letter: generator index out of range");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("letter: sign must be +1 or -1");
    return Letter{generator, spec.quotient ? 1 : sign};
}

/// A word over the generators; the empty word is the identity.
struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    friend bool operator==(const Word&, const Word&) = default;
};

inline Word reverse(const Word& w) {
    Word r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

inline bool is_palindrome(const Word& w) {
    std::size_t n = w.letters.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (!(w.letters[i] == w.letters[n - 1 - i]))
            return false;
    return true;
}

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

/// The word representing w^{-1}: reversal with signs flipped, except that
/// involutive letters have no sign, so in quotient mode inverse = reverse.
inline Word inverse_word(const Word& w, const GroupSpec& spec) {
    Word r = reverse(w);
    if (!spec.quotient)
        for (auto& l : r.letters)
            l.sign = -l.sign;
    return r;
}

inline Word power(const Word& w, long long m, const GroupSpec& spec) {
    Word base = m >= 0 ? w : inverse_word(w, spec);
    unsigned long long count = m >= 0 ? static_cast<unsigned long long>(m)
                                      : ~static_cast<unsigned long long>(m) + 1;
    Word r;
    r.letters.reserve(w.letters.size() * count);
    for (unsigned long long i = 0; i < count; ++i)
        r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
    return r;
}

/// Deletes adjacent inverse pairs (x x^{-1} free, y y involutive) until none
/// remain; the result is the unique reduced form.
inline Word free_reduce(const Word& w, const GroupSpec& spec) {
    Word r;
    r.letters.reserve(w.letters.size());
    for (const Letter& l : w.letters) {
        if (!r.letters.empty()) {
            const Letter& top = r.letters.back();
            bool cancels = spec.quotient ? top.generator == l.generator
                                         : top.generator == l.generator && top.sign == -l.sign;
            if (cancels) {
                r.letters.pop_back();
                continue;
            }
        }
        r.letters.push_back(l);
    }
    return r;
}

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what_)
        : std::runtime_error("parse error at position " + std::to_string(position + 1) + ": " +
                             what_),
          position_(position) {}

    /// 0-based offset of the offending token in the input text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

inline constexpr std::size_t kMaxParsedLetters = std::size_t(1) << 24;

inline long long parse_int(std::string_view s, std::size_t pos) {
    if (s.empty())
        throw ParseError(pos, "expected integer");
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size())
        throw ParseError(pos, "expected digits after '-'");
    long long v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw ParseError(pos, "bad integer '" + std::string(s) + "'");
        if (v > (std::numeric_limits<long long>::max() - 9) / 10)
            throw ParseError(pos, "integer too large");
        v = v * 10 + (s[i] - '0');
    }
    return s[0] == '-' ? -v : v;
}

inline void append_power(Word& out, const Word& base, long long exp, const GroupSpec& spec,
                         std::size_t pos) {
    unsigned long long count = exp >= 0 ? static_cast<unsigned long long>(exp)
                                        : ~static_cast<unsigned long long>(exp) + 1;
    if (out.letters.size() + count * base.letters.size() > kMaxParsedLetters)
        throw ParseError(pos, "expanded word too long");
    Word rep = exp >= 0 ? base : inverse_word(base, spec);
    for (unsigned long long i = 0; i < count; ++i)
        out.letters.insert(out.letters.end(), rep.letters.begin(), rep.letters.end());
}

}  // namespace detail

/// The word grammar: whitespace-separated tokens
///   e | <g><k> | <g><k>^<int> | z<i>.<j> | z<i>.<j>^<int>
/// with <g> = 'x' in free mode, 'y' in quotient mode, and i > j for z-tokens.
/// z<i>.<j> expands to the commutator word x_i^{-1} x_j^{-1} x_i x_j
/// (y_i y_j y_i y_j for involutive letters); exponents expand to unit letters.
inline Word parse(std::string_view text, const GroupSpec& spec) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::string_view tok = text.substr(start, i - start);

        if (tok == "e")
            continue;

        std::string_view body = tok;
        long long exp = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            body = tok.substr(0, caret);
            exp = detail::parse_int(tok.substr(caret + 1), start);
        }

        if (body.empty())
            throw ParseError(start, "empty token");

        if (body[0] == 'z') {
            auto dot = body.find('.');
            if (dot == std::string_view::npos)
                throw ParseError(start, "z-token needs '.': '" + std::string(tok) + "'");
            long long gi = detail::parse_int(body.substr(1, dot - 1), start);
            long long gj = detail::parse_int(body.substr(dot + 1), start);
            if (gi <= gj)
                throw ParseError(start, "z-token requires i > j");
            if (gj < 1 || gi > spec.rank)
                throw ParseError(start, "generator index out of range for rank " +
                                            std::to_string(spec.rank));
            Word comm;
            comm.letters = {make_letter(spec, static_cast<int>(gi), -1),
                            make_letter(spec, static_cast<int>(gj), -1),
                            make_letter(spec, static_cast<int>(gi), 1),
                            make_letter(spec, static_cast<int>(gj), 1)};
            detail::append_power(out, comm, exp, spec, start);
        } else if (body[0] == spec.letter_symbol()) {
            long long k = detail::parse_int(body.substr(1), start);
            if (k < 1 || k > spec.rank)
                throw ParseError(start, "generator index out of range for rank " +
                                            std::to_string(spec.rank));
            Word single;
            single.letters = {make_letter(spec, static_cast<int>(k), 1)};
            detail::append_power(out, single, exp, spec, start);
        } else {
            throw ParseError(start, std::string("unknown token '") + std::string(tok) +
                                        "' (expected generator '" + spec.letter_symbol() + "')");
        }
    }
    return out;
}

/// Inverse printer of parse: emits the grammar with runs of one letter
/// re-compressed into exponents. The empty word renders as "e".
inline std::string render(const Word& w, const GroupSpec& spec) {
    if (w.empty())
        return "e";
    std::string out;
    std::size_t i = 0;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i])
            ++j;
        long long run = static_cast<long long>(j - i);
        long long exp = w.letters[i].sign < 0 ? -run : run;
        if (!out.empty())
            out += ' ';
        out += spec.letter_symbol();
        out += std::to_string(w.letters[i].generator);
        if (exp != 1)
            out += "^" + std::to_string(exp);
        i = j;
    }
    return out;
}

/// Deterministic pseudo-random word: uniform independent letters.
inline Word random_word(const GroupSpec& spec, std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Word w;
    w.letters.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        int gen = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.rank));
        int sign = spec.quotient ? 1 : ((rng() & 1u) != 0 ? 1 : -1);
        w.letters.push_back(Letter{gen, sign});
    }
    return w;
}

}  // namespace palwidth
