// palindromes.hpp -- palindrome normal forms: generation, recognition, and
// exhaustive enumeration in the finite quotients
//
// Every palindromic element of the class-2 group is u x_j^{a0} u-reversed for
// some j, so it is determined by a pivot index, a pivot exponent and one outer
// exponent per remaining generator:
//
//   alpha_t = 2 a_t (t != j),  alpha_j = a0,
//   beta_kl = 2 a_k a_l (k, l != j),
//   beta_jt = a0 a_t (t < j),  beta_sj = a_s a0 (s > j).
//
// In the quotient every doubled exponent vanishes, leaving
// p_j = y_j^{a0} . prod_{t<j} z_jt^{a0 a_t} . prod_{s>j} z_sj^{a_s a0}.

#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "palwidth/bigint.hpp"
#include "palwidth/nilpotent.hpp"
#include "palwidth/words.hpp"

namespace palwidth {

/// A solved palindrome normal form: pivot generator j with exponent a0 and
/// one outer parameter per generator t != j.
struct PalindromeForm {
    GroupSpec spec;
    int pivot = 1;
    BigInt pivot_exponent;
    std::vector<BigInt> outer;  // rank-1 entries, increasing t skipping pivot

    const BigInt& outer_at(int t) const {
        return outer[static_cast<std::size_t>(t < pivot ? t - 1 : t - 2)];
    }
    BigInt& outer_at(int t) {
        return outer[static_cast<std::size_t>(t < pivot ? t - 1 : t - 2)];
    }

    friend bool operator==(const PalindromeForm&, const PalindromeForm&) = default;
};

inline PalindromeForm make_form(const GroupSpec& spec, int pivot) {
    if (pivot < 1 || pivot > spec.rank)
        throw std::invalid_argument("palindrome form: pivot out of range");
    PalindromeForm f;
    f.spec = spec;
    f.pivot = pivot;
    f.outer.assign(static_cast<std::size_t>(spec.rank - 1), BigInt());
    return f;
}

/// Identity forms (pivot exponent 0) collapse to pivot 1 with zero outers so
/// that equal elements compare equal.
inline PalindromeForm canonicalize(const PalindromeForm& f) {
    if (!f.pivot_exponent.is_zero())
        return f;
    return make_form(f.spec, 1);
}

/// Closed-form normal form of the palindrome described by f.
inline NormalForm palindrome_nf(const PalindromeForm& f) {
    const GroupSpec& spec = f.spec;
    const int n = spec.rank;
    const int j = f.pivot;
    NormalForm g = identity(spec);
    g.alpha_at(j) = f.pivot_exponent;
    for (int t = 1; t <= n; ++t)
        if (t != j)
            g.alpha_at(t) = BigInt(2) * f.outer_at(t);
    if (spec.nilpotency_class == 2) {
        for (int k = 2; k <= n; ++k)
            for (int l = 1; l < k; ++l) {
                if (k == j || l == j)
                    continue;
                g.beta_at(k, l) = BigInt(2) * f.outer_at(k) * f.outer_at(l);
            }
        for (int t = 1; t < j; ++t)
            g.beta_at(j, t) = f.pivot_exponent * f.outer_at(t);
        for (int s = j + 1; s <= n; ++s)
            g.beta_at(s, j) = f.outer_at(s) * f.pivot_exponent;
    }
    detail::reduce_all(g);
    return g;
}

/// The explicitly palindromic word u x_j^{a0} u-reversed with
/// u = prod_{t != j} x_t^{a_t} in increasing index order.
inline Word lift(const PalindromeForm& f) {
    const GroupSpec& spec = f.spec;
    auto append_power_of = [&spec](Word& w, int gen, const BigInt& e) {
        auto v = e.to_int64();
        if (!v)
            throw std::overflow_error("lift: exponent too large to expand");
        int sign = *v >= 0 ? 1 : -1;
        for (long long k = 0; k < (*v >= 0 ? *v : -*v); ++k)
            w.letters.push_back(make_letter(spec, gen, sign));
    };
    Word u;
    for (int t = 1; t <= spec.rank; ++t)
        if (t != f.pivot)
            append_power_of(u, t, f.outer_at(t));
    Word w = u;
    append_power_of(w, f.pivot, f.pivot_exponent);
    return concat(w, reverse(u));
}

/// All parameter solutions with palindrome_nf(solution) = g, across pivots.
/// Empty when g is not a palindromic element.
inline std::vector<PalindromeForm> recognize(const NormalForm& g) {
    const GroupSpec& spec = g.spec;
    const int n = spec.rank;
    std::vector<PalindromeForm> out;
    for (int j = 1; j <= n; ++j) {
        PalindromeForm f = make_form(spec, j);
        if (spec.quotient) {
            // alpha must be supported on the pivot alone
            bool ok = true;
            for (int t = 1; t <= n && ok; ++t)
                if (t != j && !g.alpha_at(t).is_zero())
                    ok = false;
            if (!ok)
                continue;
            f.pivot_exponent = g.alpha_at(j);
            if (spec.nilpotency_class == 2 && f.pivot_exponent.is_zero()) {
                for (const auto& b : g.beta)
                    if (!b.is_zero())
                        ok = false;
                if (!ok)
                    continue;
            } else if (spec.nilpotency_class == 2) {
                for (int t = 1; t < j; ++t)
                    f.outer_at(t) = g.beta_at(j, t);
                for (int s = j + 1; s <= n; ++s)
                    f.outer_at(s) = g.beta_at(s, j);
            }
        } else {
            bool ok = true;
            for (int t = 1; t <= n && ok; ++t)
                if (t != j && g.alpha_at(t).is_odd())
                    ok = false;
            if (!ok)
                continue;
            f.pivot_exponent = g.alpha_at(j);
            for (int t = 1; t <= n; ++t)
                if (t != j)
                    f.outer_at(t) = g.alpha_at(t).half();
        }
        if (palindrome_nf(f) == g)
            out.push_back(std::move(f));
    }
    return out;
}

/// The exact palindrome set of a finite quotient. Class 2: the identity plus
/// every pivot with unit pivot exponent and outer parameters in {0,1}^(n-1),
/// 1 + n 2^(n-1) elements. Class 1: the identity and the generators.
inline std::vector<PalindromeForm> enumerate_forms(const GroupSpec& spec) {
    if (!spec.quotient)
        throw std::invalid_argument("enumerate: palindrome set is infinite in free mode");
    std::vector<PalindromeForm> forms;
    forms.push_back(make_form(spec, 1));  // identity
    const int n = spec.rank;
    if (spec.nilpotency_class == 1) {
        for (int j = 1; j <= n; ++j) {
            PalindromeForm f = make_form(spec, j);
            f.pivot_exponent = BigInt(1);
            forms.push_back(std::move(f));
        }
        return forms;
    }
    for (int j = 1; j <= n; ++j) {
        const std::uint64_t outer_count = std::uint64_t(1) << (n - 1);
        for (std::uint64_t bits = 0; bits < outer_count; ++bits) {
            PalindromeForm f = make_form(spec, j);
            f.pivot_exponent = BigInt(1);
            for (int k = 0; k < n - 1; ++k)
                if ((bits >> k) & 1u)
                    f.outer[static_cast<std::size_t>(k)] = BigInt(1);
            forms.push_back(std::move(f));
        }
    }
    return forms;
}

inline std::vector<NormalForm> enumerate(const GroupSpec& spec) {
    std::vector<NormalForm> out;
    for (const auto& f : enumerate_forms(spec))
        out.push_back(palindrome_nf(f));
    std::sort(out.begin(), out.end(), [](const NormalForm& a, const NormalForm& b) {
        return pack_code(a) < pack_code(b);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Palindrome element codes paired with a lifting form, sorted by code.
inline std::vector<std::pair<std::uint64_t, PalindromeForm>> enumerate_coded(
    const GroupSpec& spec) {
    std::vector<std::pair<std::uint64_t, PalindromeForm>> out;
    for (auto& f : enumerate_forms(spec))
        out.emplace_back(pack_code(palindrome_nf(f)), std::move(f));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              out.end());
    return out;
}

/// CSV export consumed by the length-table tooling: header `code`, one packed
/// element code per line, ascending.
inline void write_palindrome_codes_csv(const GroupSpec& spec, std::ostream& os) {
    os << "code\n";
    for (const auto& [code, form] : enumerate_coded(spec))
        os << code << "\n";
}

}  // namespace palwidth
