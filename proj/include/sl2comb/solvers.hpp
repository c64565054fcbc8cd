#pragma once

// Equations M_n(a_1, ..., a_n) = ±M: checking, brute-force enumeration,
// generation by operations (a)/(b), and presentations of matrices as
// positive words.

#include "matrix.hpp"
#include "word.hpp"
#include "words.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sl2comb {

/// Raised when a construction that a theorem guarantees fails to verify.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised when a word is not a solution of the equation a caller asked about.
struct NotASolution : std::domain_error {
    using std::domain_error::domain_error;
};

enum class TargetName { Id, S, T, custom };

class EquationTarget {
public:
    static EquationTarget Id() { return {Matrix::identity(), TargetName::Id}; }
    static EquationTarget S() { return {Matrix::S(), TargetName::S}; }
    static EquationTarget T() { return {Matrix::T(), TargetName::T}; }
    static EquationTarget custom(Matrix m) { return {std::move(m), TargetName::custom}; }

    const Matrix& matrix() const { return matrix_; }
    TargetName name() const { return name_; }

    /// True for targets ±Id, whose solution sets are rotation invariant.
    bool is_central() const { return matrix_ == Matrix::identity() || matrix_ == -Matrix::identity(); }

    /// `Id`, `S`, `T` or `custom:a,b;c,d`.
    std::string to_string() const {
        switch (name_) {
            case TargetName::Id: return "Id";
            case TargetName::S: return "S";
            case TargetName::T: return "T";
            case TargetName::custom: return "custom:" + matrix_.to_string();
        }
        return "?";
    }

    friend bool operator==(const EquationTarget&, const EquationTarget&) = default;

private:
    EquationTarget(Matrix m, TargetName name) : matrix_(std::move(m)), name_(name) {}

    Matrix matrix_;
    TargetName name_;
};

inline EquationTarget parse_target(std::string_view text) {
    text = detail::trim(text);
    if (text == "Id") return EquationTarget::Id();
    if (text == "S") return EquationTarget::S();
    if (text == "T") return EquationTarget::T();
    if (text.starts_with("custom:")) return EquationTarget::custom(parse_matrix(text.substr(7)));
    throw std::invalid_argument("unknown target '" + std::string(text) + "' (expected Id, S, T or custom:a,b;c,d)");
}

/// Returns +1 if eval(w) = target, -1 if eval(w) = -target, nothing otherwise.
inline std::optional<Sign> check_equation(const Word& w, const EquationTarget& target) {
    if (w.empty()) throw std::invalid_argument("check_equation: empty word");
    require_positive(w, "check_equation");
    const Matrix m = eval_word(w);
    if (m == target.matrix()) return Sign::plus;
    if (m == -target.matrix()) return Sign::minus;
    return std::nullopt;
}

/// A positive word with M_n(word) = sign * target.
class Solution {
public:
    /// Throws NotASolution unless the word solves the target equation.
    static Solution verified(Word word, const EquationTarget& target) {
        const auto sign = check_equation(word, target);
        if (!sign) throw NotASolution(word.to_string() + " is not a solution of E_" + target.to_string());
        return Solution(std::move(word), *sign);
    }

    const Word& word() const { return word_; }
    Sign sign() const { return sign_; }

    /// Number of op-(b) applications on the generation path, when the
    /// solution came out of generate_closure.
    std::optional<std::size_t> op_b_count;

    friend bool operator==(const Solution& x, const Solution& y) { return x.word_ == y.word_ && x.sign_ == y.sign_; }
    friend auto operator<=>(const Solution& x, const Solution& y) { return x.word_ <=> y.word_; }

private:
    Solution(Word w, Sign s) : word_(std::move(w)), sign_(s) {}

    Word word_;
    Sign sign_;
};

/// Solutions ordered lexicographically by word, without duplicates.
struct SolutionSet {
    EquationTarget target = EquationTarget::Id();
    /// Word length for enumerations; maximum length for closures.
    std::size_t n = 0;
    /// Entry bound of a brute-force search. When set, completeness only
    /// holds for words with entries in [1, bound].
    std::optional<Entry> bound;
    std::vector<Solution> solutions;

    std::size_t size() const { return solutions.size(); }
    bool empty() const { return solutions.empty(); }

    std::set<Word> words() const {
        std::set<Word> out;
        for (const auto& s : solutions) out.insert(s.word());
        return out;
    }

    bool contains(const Word& w) const {
        return std::binary_search(solutions.begin(), solutions.end(), w,
                                  [](const auto& x, const auto& y) { return key(x) < key(y); });
    }

private:
    static const Word& key(const Solution& s) { return s.word(); }
    static const Word& key(const Word& w) { return w; }
};

namespace detail {

template <class Int>
void enumerate_dfs(std::vector<Entry>& prefix, const BasicMatrix<Int>& partial, std::size_t n, Entry bound,
                   const BasicMatrix<Int>& target, const BasicMatrix<Int>& neg_target, std::vector<Word>& out) {
    if (prefix.size() == n) {
        if (partial == target || partial == neg_target) out.emplace_back(prefix);
        return;
    }
    for (Entry x = 1; x <= bound; ++x) {
        prefix.push_back(x);
        enumerate_dfs(prefix, partial.times_letter_on_left(Int(x)), n, bound, target, neg_target, out);
        prefix.pop_back();
    }
}

template <class Int>
std::vector<Word> enumerate_words(std::size_t n, const Matrix& target, Entry bound) {
    const auto t = matrix_cast<Int>(target);
    std::vector<Entry> prefix;
    std::vector<Word> out;
    enumerate_dfs(prefix, BasicMatrix<Int>::identity(), n, bound, t, -t, out);
    return out;
}

}  // namespace detail

/// Exhaustive search over [1, bound]^n, depth first over prefixes with
/// partial products. The result is in lexicographic order and records the
/// bound it is complete relative to.
inline SolutionSet enumerate_solutions(std::size_t n, const EquationTarget& target, Entry bound) {
    if (n < 1) throw std::invalid_argument("enumerate_solutions: n must be at least 1");
    if (bound < 1) throw std::invalid_argument("enumerate_solutions: bound must be at least 1");

    std::vector<Word> words;
    try {
        words = detail::enumerate_words<CheckedInt>(n, target.matrix(), bound);
    } catch (const std::overflow_error&) {
        words = detail::enumerate_words<BigInt>(n, target.matrix(), bound);
    }

    SolutionSet set{target, n, bound, {}};
    set.solutions.reserve(words.size());
    for (auto& w : words) set.solutions.push_back(Solution::verified(std::move(w), target));
    return set;
}

/// Default entry bound: entries of an n-gon quiddity count faces, of which
/// there are at most n - 2.
inline SolutionSet enumerate_solutions(std::size_t n, const EquationTarget& target) {
    return enumerate_solutions(n, target, static_cast<Entry>(n));
}

/// Breadth-first closure of `seed` under operations (a) and (b) at every
/// position, keeping words of length <= max_n that solve the target.
/// Cyclic (a) gaps are used only for central targets. Each kept solution
/// records how many (b) steps produced it; its sign must equal
/// seed.sign * (-1)^count, otherwise InternalError is thrown.
inline SolutionSet generate_closure(const Solution& seed, std::size_t max_n, const EquationTarget& target) {
    const auto seed_sign = check_equation(seed.word(), target);
    if (!seed_sign || *seed_sign != seed.sign())
        throw NotASolution("seed " + seed.word().to_string() + " does not solve E_" + target.to_string());
    if (max_n < seed.word().size()) throw std::invalid_argument("generate_closure: max_n shorter than the seed");

    std::map<Word, Solution> found;
    std::deque<Word> queue;

    auto visit = [&](Word w, std::size_t b_count) {
        if (w.size() > max_n || found.contains(w)) return;
        const auto sign = check_equation(w, target);
        if (!sign) return;
        if (*sign != seed.sign() * sign_of_parity(b_count))
            throw InternalError("sign of " + w.to_string() + " contradicts its op-(b) parity");
        auto sol = Solution::verified(w, target);
        sol.op_b_count = b_count;
        found.emplace(w, std::move(sol));
        queue.push_back(std::move(w));
    };

    visit(seed.word(), 0);
    while (!queue.empty()) {
        const Word w = std::move(queue.front());
        queue.pop_front();
        const std::size_t n = w.size();
        const std::size_t b_count = *found.at(w).op_b_count;

        if (n + 1 <= max_n && n >= 2) {
            for (std::size_t gap = 1; gap < n; ++gap) visit(apply_op_a(w, gap), b_count);
            if (target.is_central()) visit(apply_op_a(w, n, GapMode::cyclic), b_count);
        }
        if (n + 3 <= max_n) {
            for (std::size_t pos = 1; pos <= n; ++pos)
                for (Entry a1 = 1; a1 <= w[pos - 1]; ++a1) visit(apply_op_b(w, pos, a1), b_count + 1);
        }
    }

    SolutionSet set{target, max_n, std::nullopt, {}};
    for (auto& [w, sol] : found) set.solutions.push_back(std::move(sol));
    return set;
}

/// Lexicographically least rotation of `w`.
inline Word canonical_rotation(const Word& w) {
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) best = std::min(best, rotate_word(w, k).rotated);
    return best;
}

/// E_Id solutions up to rotation, one canonical representative per class.
/// Rotation does not preserve E_S or E_T, so other targets are rejected.
inline std::set<Word> rotation_classes(const SolutionSet& s) {
    if (!s.target.is_central()) throw std::invalid_argument("rotation_classes only applies to E_Id");
    std::set<Word> out;
    for (const auto& sol : s.solutions) out.insert(canonical_rotation(sol.word()));
    return out;
}

/// Smallest k in [1, cap] with M^k = Id.
inline std::optional<std::size_t> matrix_order(const Matrix& m, std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("matrix_order: cap must be at least 1");
    Matrix power = m;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (power == Matrix::identity()) return k;
        power = power * m;
    }
    return std::nullopt;
}

/// A positive word and sign with sign * eval_word(word) = m.
struct Presentation {
    Word word;
    Sign sign = Sign::plus;
};

/// Writes `m` as ε M(c_1) ... M(c_k) with integer c_i by Euclidean division
/// on the first column, then normalizes to a positive word.
///
/// Each step peels M(c) off the left with the quotient c chosen so the new
/// remainder c*r - p lies in [0, |r|). When the lower-left entry reaches 0
/// the rest is ±T^b = ∓M(b)M(0).
inline Presentation positive_word_of_matrix(const Matrix& m) {
    if (m.det() != 1) throw std::invalid_argument("positive_word_of_matrix: determinant is not 1");

    std::vector<Entry> peeled;  // c_1, c_2, ... in left-to-right product order
    BigInt p = m.a(), q = m.b(), r = m.c(), s = m.d();
    while (r != 0) {
        BigInt c;
        if (r > 0) {
            c = p / r;  // truncates toward zero
            if (c * r < p) c += 1;
        } else {
            c = p / r;
            if (c * r < p) c -= 1;
        }
        // M(c)^-1 M = [[r, s], [c r - p, c s - q]]
        BigInt np = r, nq = s, nr = c * r - p, ns = c * s - q;
        p = std::move(np);
        q = std::move(nq);
        r = std::move(nr);
        s = std::move(ns);
        peeled.push_back(detail::narrow<CheckedInt>(c).value());
    }
    // Remainder [[e, x], [0, e]] = e T^(e x) = -e M(e x) M(0).
    const bool e_positive = p > 0;
    const BigInt b = e_positive ? q : BigInt(-q);
    const Sign sign = e_positive ? Sign::minus : Sign::plus;

    std::vector<Entry> integer_word{0, detail::narrow<CheckedInt>(b).value()};
    integer_word.insert(integer_word.end(), peeled.rbegin(), peeled.rend());

    const RewriteResult normal = normalize_to_positive(Word(std::move(integer_word)));
    Presentation out{normal.word, sign * normal.sign};
    if (out.sign * eval_word(out.word) != m)
        throw InternalError("positive_word_of_matrix failed to reproduce " + m.to_string());
    return out;
}

/// Entries are >= 2 except possibly c_1 (or c_1 and c_2) and c_k (or
/// c_{k-1} and c_k).
inline bool satisfies_minimality_criterion(const Word& w) {
    const std::size_t k = w.size();
    for (std::size_t i = 1; i <= k; ++i) {
        if (w.at(i) >= 2) continue;
        if (w.at(i) < 1) return false;
        const bool head = i == 1 || (i == 2 && w.at(1) == 1);
        const bool tail = i == k || (i + 1 == k && w.at(k) == 1);
        if (!head && !tail) return false;
    }
    return true;
}

namespace detail {

// PSL_2(Z) is the free product <S> * <U> with S = M(0) of order 2 and
// U = M(1) of order 3. M(c) = U (S U)^(c-1) in PSL_2(Z), so a positive word
// is a string of S and U letters; reducing that string gives the unique
// normal form, which decodes back to the shortest positive word.
struct Syllable {
    bool is_s;
    int exponent;  // 1 for S, 1 or 2 for U (3 only while decoding)
};

inline void push_letter(std::vector<Syllable>& stack, bool is_s) {
    if (!stack.empty() && stack.back().is_s == is_s) {
        if (is_s) {
            stack.pop_back();
        } else {
            const int e = (stack.back().exponent + 1) % 3;
            if (e == 0)
                stack.pop_back();
            else
                stack.back().exponent = e;
        }
        return;
    }
    stack.push_back({is_s, 1});
}

inline std::vector<Syllable> psl_normal_form(const Word& positive) {
    std::vector<Syllable> stack;
    // Product order is M(a_n) ... M(a_1): emit blocks from a_n down to a_1.
    for (std::size_t i = positive.size(); i-- > 0;) {
        const Entry c = positive[i];
        push_letter(stack, false);
        for (Entry t = 1; t < c; ++t) {
            push_letter(stack, true);
            push_letter(stack, false);
        }
    }
    return stack;
}

inline Word decode_normal_form(std::vector<Syllable> syllables) {
    if (syllables.front().is_s) syllables.insert(syllables.begin(), Syllable{false, 3});
    if (syllables.back().is_s) syllables.push_back(Syllable{false, 3});
    std::vector<Entry> blocks;  // product order a_n, ..., a_1
    Entry current = 0;
    for (const auto& syl : syllables) {
        if (syl.is_s) continue;
        for (int t = 0; t < syl.exponent; ++t) {
            if (t > 0) {
                blocks.push_back(current);
                current = 0;
            }
            ++current;
        }
    }
    blocks.push_back(current);
    return Word(std::vector<Entry>(blocks.rbegin(), blocks.rend()));
}

}  // namespace detail

/// The shortest positive word w with eval_word(w) = ±m, i.e. the minimal
/// presentation of m in PSL_2(Z). ±Id is presented by the empty word.
inline Presentation minimal_presentation(const Matrix& m) {
    if (m == Matrix::identity()) return {Word{}, Sign::plus};
    if (m == -Matrix::identity()) return {Word{}, Sign::minus};

    const Presentation start = positive_word_of_matrix(m);
    const auto normal_form = detail::psl_normal_form(start.word);
    if (normal_form.empty()) throw InternalError("non-central matrix reduced to the identity");

    Word word = detail::decode_normal_form(normal_form);
    const Matrix value = eval_word(word);
    Presentation out{std::move(word), value == m ? Sign::plus : Sign::minus};
    if (out.sign * value != m) throw InternalError("minimal presentation does not evaluate to " + m.to_string());
    if (!satisfies_minimality_criterion(out.word))
        throw InternalError("minimal presentation " + out.word.to_string() + " fails the interior criterion");
    return out;
}

}  // namespace sl2comb
