#pragma once

// One-shot consistency suite over small n, used by `sl2comb verify`.

#include "dissection.hpp"
#include "render.hpp"
#include "solvers.hpp"
#include "words.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace sl2comb {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline CheckResult run_check(std::string name, const std::function<std::string()>& body) {
    try {
        std::string failure = body();
        return {std::move(name), failure.empty(), failure.empty() ? "ok" : failure};
    } catch (const std::exception& e) {
        return {std::move(name), false, std::string("exception: ") + e.what()};
    }
}

inline std::vector<EquationTarget> standard_targets() {
    return {EquationTarget::Id(), EquationTarget::S(), EquationTarget::T()};
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_len, Entry lo, Entry hi, std::size_t min_len = 0) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<Entry> entry(lo, hi);
    std::vector<Entry> e(len(rng));
    for (auto& x : e) x = entry(rng);
    return Word(std::move(e));
}

}  // namespace detail

struct VerifyOptions {
    std::size_t max_n = 6;
    std::size_t random_cases = 1000;
    std::uint64_t seed = 20240229;
};

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    const std::size_t max_n = opt.max_n;
    if (max_n < 5 || max_n > 9) throw std::out_of_range("verify: --max-n must be in 5..9");
    std::vector<CheckResult> out;

    out.push_back(detail::run_check("generator identities", [] {
        const std::pair<Word, Matrix> table[] = {
            {{1, 1, 1}, -Matrix::identity()}, {{1, 1, 2, 1, 1}, -Matrix::S()},   {{1, 1, 2}, -Matrix::T()},
            {{1, 2, 1, 1}, -Matrix::T_inverse()}, {{1, 2, 1, 2}, -Matrix::identity()},
        };
        for (const auto& [w, m] : table)
            if (eval_word(w) != m) return "M" + w.to_string() + " = " + eval_word(w).to_string();
        if (check_equation(Word{2, 1, 1}, EquationTarget::T())) return std::string("(2,1,1) solves E_T");
        return std::string();
    }));

    out.push_back(detail::run_check("E_S has only (1,1,2,1,1) up to n = 5", [] {
        for (std::size_t n = 1; n <= 4; ++n)
            if (!enumerate_solutions(n, EquationTarget::S(), static_cast<Entry>(n + 2)).empty())
                return "solutions at n = " + std::to_string(n);
        const auto five = enumerate_solutions(5, EquationTarget::S(), 7);
        if (five.size() != 1 || five.solutions[0].word() != Word{1, 1, 2, 1, 1} ||
            five.solutions[0].sign() != Sign::minus)
            return std::string("unexpected n = 5 solutions");
        return std::string();
    }));

    out.push_back(detail::run_check("E_T solutions up to n = 4", [] {
        const auto t = EquationTarget::T();
        for (std::size_t n = 1; n <= 2; ++n)
            if (!enumerate_solutions(n, t, static_cast<Entry>(n + 2)).empty()) return "solutions at n = " + std::to_string(n);
        const auto three = enumerate_solutions(3, t, 5);
        const auto four = enumerate_solutions(4, t, 6);
        if (three.words() != std::set<Word>{{1, 1, 2}}) return std::string("unexpected n = 3 solutions");
        if (four.words() != std::set<Word>{{1, 2, 1, 3}, {2, 1, 2, 2}}) return std::string("unexpected n = 4 solutions");
        for (const auto* s : {&three, &four})
            for (const auto& sol : s->solutions)
                if (sol.sign() != Sign::minus) return "M = +T solved by " + sol.word().to_string();
        return std::string();
    }));

    out.push_back(detail::run_check("closure under (a), (b) is complete", [&] {
        const std::pair<EquationTarget, Word> seeds[] = {
            {EquationTarget::Id(), {1, 1, 1}}, {EquationTarget::S(), {1, 1, 2, 1, 1}}, {EquationTarget::T(), {1, 1, 2}}};
        for (const auto& [target, seed] : seeds) {
            const auto closure = generate_closure(Solution::verified(seed, target), max_n, target);
            std::set<Word> brute;
            for (std::size_t n = 1; n <= max_n; ++n) {
                const auto words = enumerate_solutions(n, target).words();
                brute.insert(words.begin(), words.end());
            }
            if (closure.words() != brute) return "closure differs for E_" + target.to_string();
        }
        return std::string();
    }));

    out.push_back(detail::run_check("solutions contain a 1", [&] {
        for (const auto& target : detail::standard_targets())
            for (std::size_t n = 1; n <= max_n; ++n)
                for (const auto& s : enumerate_solutions(n, target).solutions) {
                    const auto& w = s.word();
                    bool ok = false;
                    const bool interior_only = target.name() == TargetName::S;
                    for (std::size_t i = interior_only ? 2 : 1; i <= (interior_only ? n - 1 : n); ++i)
                        ok = ok || w.at(i) == 1;
                    if (!ok) return w.to_string() + " has no suitable 1";
                }
        return std::string();
    }));

    out.push_back(detail::run_check("reversal", [&] {
        for (std::size_t n = 1; n <= max_n; ++n) {
            const auto s = enumerate_solutions(n, EquationTarget::S());
            for (const auto& w : s.words())
                if (!s.contains(reverse_word(w))) return "reverse of " + w.to_string() + " missing";
        }
        if (!check_equation(Word{1, 1, 2}, EquationTarget::T()) || check_equation(Word{2, 1, 1}, EquationTarget::T()))
            return std::string("E_T reversal counterexample failed");
        return std::string();
    }));

    out.push_back(detail::run_check("rotation conjugation", [&] {
        std::mt19937_64 rng(opt.seed);
        for (std::size_t c = 0; c < opt.random_cases; ++c) {
            const Word w = detail::random_word(rng, 10, 1, 9);
            const Matrix m = eval_word(w);
            for (std::size_t k = 0; k <= w.size(); ++k) {
                const auto r = rotate_word(w, k);
                if (eval_word(r.rotated) != r.conjugator * m * r.conjugator.inverse())
                    return w.to_string() + " rotated by " + std::to_string(k);
            }
        }
        return std::string();
    }));

    out.push_back(detail::run_check("minimal presentations", [] {
        const auto s = minimal_presentation(Matrix::S());
        const auto t = minimal_presentation(Matrix::T());
        if (s.word != Word{1, 1, 2, 1, 1} || s.sign != Sign::minus) return std::string("S: ") + s.word.to_string();
        if (t.word != Word{1, 1, 2} || t.sign != Sign::minus) return std::string("T: ") + t.word.to_string();
        for (std::size_t n = 1; n < 5; ++n)
            if (!enumerate_solutions(n, EquationTarget::S(), 6).empty()) return std::string("shorter word for S");
        for (std::size_t n = 1; n < 3; ++n)
            if (!enumerate_solutions(n, EquationTarget::T(), 6).empty()) return std::string("shorter word for T");
        return std::string();
    }));

    out.push_back(detail::run_check("dissection bijections", [&] {
        for (std::size_t n = 3; n <= max_n; ++n) {
            for (const auto& w : enumerate_solutions(n, EquationTarget::Id()).words())
                if (quiddity_of(dissection_from_id_solution(w)).entries != w) return "plain " + w.to_string();
            for (const auto& w : enumerate_solutions(n, EquationTarget::S()).words())
                if (quiddity_of(echancree_from_s_solution(w)).entries != w) return "echancree " + w.to_string();
            for (const auto& w : enumerate_solutions(n, EquationTarget::T()).words())
                if (w.at(n) >= 2 && quiddity_of(coiffee_from_t_solution(w)).entries != w) return "coiffee " + w.to_string();
        }
        const auto kinds = {DissectionKind::plain, DissectionKind::echancree, DissectionKind::coiffee};
        for (auto kind : kinds)
            for (int v = 3; v <= static_cast<int>(max_n) + 1; ++v)
                for (const auto& d : enumerate_dissections(v, kind)) solution_from_dissection(d);
        return std::string();
    }));

    out.push_back(detail::run_check("counts and triangulations", [&] {
        const std::size_t id_counts[] = {1, 2, 5, 15};
        for (std::size_t n = 3; n <= 6; ++n)
            if (enumerate_solutions(n, EquationTarget::Id()).size() != id_counts[n - 3])
                return "E_Id count at n = " + std::to_string(n);
        if (enumerate_solutions(6, EquationTarget::S()).size() != 4) return std::string("E_S count at n = 6");
        std::size_t catalan = 1;  // Catalan(n - 2), starting at n = 3
        for (std::size_t n = 3; n <= max_n; ++n) {
            std::set<Word> tri;
            std::size_t triangulations = 0;
            for (const auto& d : enumerate_dissections(static_cast<int>(n), DissectionKind::plain)) {
                const auto r = cc_triangulation_check(d);
                if (!r.consistent()) return std::string("sum rule broken");
                if (r.is_triangulation) {
                    ++triangulations;
                    tri.insert(r.face_counts);
                }
            }
            std::set<Word> by_sum;
            for (const auto& w : enumerate_solutions(n, EquationTarget::Id()).words())
                if (w.sum() == static_cast<Entry>(3 * n - 6)) by_sum.insert(w);
            if (tri != by_sum) return "sum filter differs at n = " + std::to_string(n);
            if (triangulations != catalan) return "triangulation count at n = " + std::to_string(n);
            catalan = catalan * 2 * (2 * (n - 2) + 1) / (n - 2 + 2);
        }
        return std::string();
    }));

    out.push_back(detail::run_check("rewriting soundness", [&] {
        std::mt19937_64 rng(opt.seed + 1);
        for (std::size_t c = 0; c < opt.random_cases; ++c) {
            const Word w = detail::random_word(rng, 12, -10, 10);
            const Matrix m = eval_word(w);
            const auto r = reduce_word(w);
            if (r.sign * eval_word(r.word) != m) return "reduce " + w.to_string();
            for (std::size_t p = 2; p + 1 <= r.word.size(); ++p)
                if (r.word.at(p) == 0 || r.word.at(p) == 1) return "interior 0/1 left in " + r.word.to_string();
            const auto p = normalize_to_positive(w);
            if (p.sign * eval_word(p.word) != m || !p.word.is_positive()) return "normalize " + w.to_string();
        }
        return std::string();
    }));

    out.push_back(detail::run_check("deterministic rendering", [] {
        const Dissection samples[] = {
            Dissection(5, {{0, 2}, {0, 3}}, DissectionKind::plain),
            echancree_from_s_solution(Word{1, 1, 2, 1, 1}),
            coiffee_from_t_solution(Word{1, 1, 2}),
        };
        for (const auto& d : samples)
            for (auto f : {RenderFormat::svg, RenderFormat::ascii})
                if (render(d, f) != render(d, f)) return std::string("render output differs between runs");
        return std::string();
    }));

    return out;
}

}  // namespace sl2comb
