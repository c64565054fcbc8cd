#pragma once

// Word evaluation, the two surgery operations, and sign-tracking rewrites.

#include "matrix.hpp"
#include "word.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2comb {

/// M(a_n) ... M(a_1) with M(x) = [[x, -1], [1, 0]]. The empty word gives Id.
template <class Int = BigInt>
BasicMatrix<Int> eval_word(const Word& w) {
    auto acc = BasicMatrix<Int>::identity();
    for (Entry e : w) acc = acc.times_letter_on_left(detail::from_entry<Int>(e));
    return acc;
}

enum class GapMode { linear, cyclic };

/// Operation (a): (.., a_i, a_{i+1}, ..) -> (.., a_i + 1, 1, a_{i+1} + 1, ..).
///
/// In linear mode 1 <= gap <= n-1 and the evaluated matrix is unchanged.
/// Cyclic mode also accepts gap = n, which increments a_n and a_1 and
/// appends the new 1 after a_n; the result evaluates to a conjugate.
inline Word apply_op_a(const Word& w, std::size_t gap, GapMode mode = GapMode::linear) {
    require_positive(w, "apply_op_a");
    const std::size_t n = w.size();
    if (n < 2) throw std::out_of_range("apply_op_a needs a word of length at least 2");
    if (gap == n && mode == GapMode::linear)
        throw std::out_of_range("apply_op_a: gap " + std::to_string(gap) + " wraps around; use cyclic mode");
    if (gap < 1 || gap > n) throw std::out_of_range("apply_op_a: gap " + std::to_string(gap) + " out of range");

    std::vector<Entry> out(w.begin(), w.end());
    if (gap < n) {
        out[gap - 1] = detail::checked_add(out[gap - 1], 1);
        out[gap] = detail::checked_add(out[gap], 1);
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(gap), 1);
    } else {
        out[n - 1] = detail::checked_add(out[n - 1], 1);
        out[0] = detail::checked_add(out[0], 1);
        out.push_back(1);
    }
    return Word(std::move(out));
}

/// Operation (b): a_pos -> (a', 1, 1, a'') with a' + a'' = a_pos + 1.
/// The evaluated matrix changes sign.
inline Word apply_op_b(const Word& w, std::size_t pos, Entry a_prime) {
    require_positive(w, "apply_op_b");
    const std::size_t n = w.size();
    if (pos < 1 || pos > n) throw std::out_of_range("apply_op_b: position " + std::to_string(pos) + " out of range");
    const Entry a = w[pos - 1];
    if (a_prime < 1 || a_prime > a)
        throw std::out_of_range("apply_op_b: a' = " + std::to_string(a_prime) + " outside 1.." + std::to_string(a));
    const Entry a_second = a - a_prime + 1;

    std::vector<Entry> out;
    out.reserve(n + 3);
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos - 1));
    out.insert(out.end(), {a_prime, 1, 1, a_second});
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
    return Word(std::move(out));
}

// ---------------------------------------------------------------------------
// Rewriting

enum class RewriteRule {
    collapse_one,     // (x, 1, y) -> (x-1, y-1), sign unchanged
    collapse_zero,    // (x, 0, y) -> (x+y), sign negated
    splice_negative,  // c <= 0 -> S-word then |c| copies of the T^-1 word, sign (-1)^(|c|+1)
};

inline const char* to_string(RewriteRule r) {
    switch (r) {
        case RewriteRule::collapse_one: return "collapse-one";
        case RewriteRule::collapse_zero: return "collapse-zero";
        case RewriteRule::splice_negative: return "splice-negative";
    }
    return "?";
}

struct RewriteStep {
    RewriteRule rule;
    std::size_t position;  // 1-based, in the word the step is applied to
    Sign sign;             // factor contributed by this step

    friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

using RewriteTrace = std::vector<RewriteStep>;

/// Result of a rewrite: sign * eval_word(word) == eval_word(input).
struct RewriteResult {
    Word word;
    Sign sign = Sign::plus;
    RewriteTrace trace;
};

namespace detail {

inline const Word& s_word() {
    static const Word w{1, 1, 2, 1, 1};  // S = -M(1,1,2,1,1)
    return w;
}

inline const Word& t_inverse_word() {
    static const Word w{1, 2, 1, 1};  // T^-1 = -M(1,2,1,1)
    return w;
}

/// Applies one rewrite step to a mutable entry vector, returning the sign it
/// contributes. Throws std::logic_error if the rule does not apply there.
inline Sign apply_step(std::vector<Entry>& e, RewriteRule rule, std::size_t position) {
    const std::size_t n = e.size();
    const std::size_t i = position - 1;
    switch (rule) {
        case RewriteRule::collapse_one:
        case RewriteRule::collapse_zero: {
            if (position < 2 || position + 1 > n)
                throw std::logic_error("rewrite step at non-interior position " + std::to_string(position));
            const Entry want = rule == RewriteRule::collapse_one ? 1 : 0;
            if (e[i] != want) throw std::logic_error("rewrite step does not match entry at " + std::to_string(position));
            if (rule == RewriteRule::collapse_one) {
                e[i - 1] = checked_sub(e[i - 1], 1);
                e[i + 1] = checked_sub(e[i + 1], 1);
                e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
                return Sign::plus;
            }
            e[i - 1] = checked_add(e[i - 1], e[i + 1]);
            e.erase(e.begin() + static_cast<std::ptrdiff_t>(i), e.begin() + static_cast<std::ptrdiff_t>(i + 2));
            return Sign::minus;
        }
        case RewriteRule::splice_negative: {
            if (position < 1 || position > n) throw std::logic_error("splice outside the word");
            const Entry c = e[i];
            if (c > 0) throw std::logic_error("splice applied to a positive entry");
            const Entry copies = -c;
            std::vector<Entry> repl(s_word().begin(), s_word().end());
            for (Entry k = 0; k < copies; ++k) repl.insert(repl.end(), t_inverse_word().begin(), t_inverse_word().end());
            e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
            e.insert(e.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
            return sign_of_parity(static_cast<std::size_t>(copies) + 1);
        }
    }
    throw std::logic_error("unknown rewrite rule");
}

inline void record(std::vector<Entry>& e, RewriteResult& r, RewriteRule rule, std::size_t position) {
    const Sign s = apply_step(e, rule, position);
    r.sign = r.sign * s;
    r.trace.push_back({rule, position, s});
}

/// Lowest interior position holding 0 or 1, or 0 if none.
inline std::size_t first_interior_zero_or_one(const std::vector<Entry>& e) {
    for (std::size_t p = 2; p + 1 <= e.size(); ++p)
        if (e[p - 1] == 0 || e[p - 1] == 1) return p;
    return 0;
}

/// Shortens a positive word while keeping it positive:
/// (x, 1, y) with x, y >= 2 collapses; (x, 1, 1, y) collapses to x + y - 1
/// through a collapse-one followed by a collapse-zero.
inline void shorten_positive(std::vector<Entry>& e, RewriteResult& r) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 2; p + 1 <= e.size(); ++p) {
            if (e[p - 1] != 1) continue;
            if (e[p - 2] >= 2 && e[p] >= 2) {
                record(e, r, RewriteRule::collapse_one, p);
                changed = true;
                break;
            }
            if (e[p] == 1 && p + 2 <= e.size()) {
                // (x, 1, 1, y) -> (x-1, 0, y) -> (x+y-1)
                record(e, r, RewriteRule::collapse_one, p);
                record(e, r, RewriteRule::collapse_zero, p);
                changed = true;
                break;
            }
        }
    }
}

}  // namespace detail

/// Rewrites with the interior rules (x,1,y) -> (x-1,y-1) and
/// (x,0,y) -> -(x+y) at the lowest applicable position until neither
/// applies. Boundary entries are never touched.
inline RewriteResult reduce_word(const Word& w) {
    RewriteResult r;
    std::vector<Entry> e(w.begin(), w.end());
    while (const std::size_t p = detail::first_interior_zero_or_one(e)) {
        detail::record(e, r, e[p - 1] == 0 ? RewriteRule::collapse_zero : RewriteRule::collapse_one, p);
    }
    r.word = Word(std::move(e));
    return r;
}

/// Replays a trace on `input`; returns the resulting word and accumulated
/// sign. Throws std::logic_error if a step does not apply.
inline std::pair<Word, Sign> replay(const Word& input, const RewriteTrace& trace) {
    std::vector<Entry> e(input.begin(), input.end());
    Sign sign = Sign::plus;
    for (const auto& step : trace) {
        const Sign s = detail::apply_step(e, step.rule, step.position);
        if (s != step.sign) throw std::logic_error("trace step records the wrong sign");
        sign = sign * s;
    }
    return {Word(std::move(e)), sign};
}

/// Rewrites an arbitrary integer word into a positive one.
///
/// Interior zeros are collapsed first; any remaining entry c <= 0 is
/// spliced as T^c S, i.e. the S word followed by |c| copies of the T^-1
/// word. The positive result is then shortened without leaving positivity.
inline RewriteResult normalize_to_positive(const Word& w) {
    RewriteResult r;
    std::vector<Entry> e(w.begin(), w.end());
    while (true) {
        std::size_t zero = 0, nonpositive = 0;
        for (std::size_t p = 1; p <= e.size(); ++p) {
            if (e[p - 1] == 0 && p >= 2 && p + 1 <= e.size() && !zero) zero = p;
            if (e[p - 1] <= 0 && !nonpositive) nonpositive = p;
        }
        if (zero)
            detail::record(e, r, RewriteRule::collapse_zero, zero);
        else if (nonpositive)
            detail::record(e, r, RewriteRule::splice_negative, nonpositive);
        else
            break;
    }
    detail::shorten_positive(e, r);
    r.word = Word(std::move(e));
    return r;
}

/// Cyclic rotation by k: (a_{k+1}, .., a_n, a_1, .., a_k), together with
/// C = M(a_1, .., a_k) so that eval(rotated) = C eval(w) C^-1.
struct Rotation {
    Word rotated;
    Matrix conjugator;
};

inline Rotation rotate_word(const Word& w, std::size_t k) {
    if (k > w.size()) throw std::out_of_range("rotate_word: shift " + std::to_string(k) + " exceeds word length");
    std::vector<Entry> prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Entry> out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    out.insert(out.end(), prefix.begin(), prefix.end());
    return {Word(std::move(out)), eval_word(Word(std::move(prefix)))};
}

/// (a_n, .., a_1). Satisfies eval(reverse) = K eval(w)^-1 K.
inline Word reverse_word(const Word& w) { return Word(std::vector<Entry>(w.entries().rbegin(), w.entries().rend())); }

}  // namespace sl2comb
