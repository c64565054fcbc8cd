#include "oracle.hpp"
#include "sl2comb/solvers.hpp"

#include <catch_amalgamated.hpp>

using namespace sl2comb;

namespace {

const oracle::Mat& oracle_matrix(const EquationTarget& t) {
    switch (t.name()) {
        case TargetName::S: return oracle::S;
        case TargetName::T: return oracle::T;
        default: return oracle::id;
    }
}

std::vector<EquationTarget> targets() { return {EquationTarget::Id(), EquationTarget::S(), EquationTarget::T()}; }

Word seed_of(const EquationTarget& t) {
    switch (t.name()) {
        case TargetName::S: return {1, 1, 2, 1, 1};
        case TargetName::T: return {1, 1, 2};
        default: return {1, 1, 1};
    }
}

}  // namespace

TEST_CASE("targets") {
    CHECK(parse_target("S") == EquationTarget::S());
    CHECK(parse_target("custom:2,1;1,1").matrix() == Matrix(2, 1, 1, 1));
    CHECK(parse_target("custom:2,1;1,1").to_string() == "custom:2,1;1,1");
    CHECK_THROWS_AS(parse_target("U"), std::invalid_argument);
    CHECK_THROWS_AS(parse_target("custom:1,1;1,1"), std::invalid_argument);
    CHECK(EquationTarget::Id().is_central());
    CHECK_FALSE(EquationTarget::T().is_central());
}

TEST_CASE("check_equation examples") {
    CHECK(check_equation(Word{1, 1, 2, 1, 1}, EquationTarget::S()) == Sign::minus);
    CHECK(check_equation(Word{1, 2, 1, 3}, EquationTarget::T()) == Sign::minus);
    CHECK(check_equation(Word{2, 1, 2, 2}, EquationTarget::T()) == Sign::minus);
    CHECK(check_equation(Word{1, 2, 1, 2}, EquationTarget::Id()) == Sign::minus);
    CHECK_FALSE(check_equation(Word{2, 1, 1}, EquationTarget::T()));
    CHECK_FALSE(check_equation(Word{1, 2, 1, 1, 1}, EquationTarget::S()));
    CHECK_THROWS_AS(check_equation(Word{1, 0, 1}, EquationTarget::Id()), std::invalid_argument);
    CHECK_THROWS_AS(check_equation(Word{}, EquationTarget::Id()), std::invalid_argument);
    CHECK_THROWS_AS(Solution::verified(Word{2, 1, 1}, EquationTarget::T()), NotASolution);
}

TEST_CASE("enumerate_solutions examples") {
    auto s = enumerate_solutions(5, EquationTarget::S(), 5);
    REQUIRE(s.size() == 1);
    CHECK(s.solutions[0].word() == Word{1, 1, 2, 1, 1});
    CHECK(s.solutions[0].sign() == Sign::minus);
    CHECK(s.bound == 5);
    CHECK(enumerate_solutions(4, EquationTarget::S(), 5).empty());
    s = enumerate_solutions(3, EquationTarget::T(), 5);
    REQUIRE(s.size() == 1);
    CHECK(s.solutions[0].word() == Word{1, 1, 2});
    CHECK(enumerate_solutions(6, EquationTarget::Id(), 6).size() == 15);
    CHECK(enumerate_solutions(6, EquationTarget::Id()).bound == 6);
    CHECK_THROWS_AS(enumerate_solutions(0, EquationTarget::Id(), 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_solutions(3, EquationTarget::Id(), 0), std::invalid_argument);
}

TEST_CASE("enumeration matches the odometer oracle") {
    for (const auto& t : targets())
        for (std::size_t n = 1; n <= 6; ++n) {
            const Entry bound = static_cast<Entry>(n) + 2;
            const auto got = enumerate_solutions(n, t, bound);
            const auto want = oracle::brute_force(n, bound, oracle_matrix(t));
            REQUIRE(got.size() == want.size());
            for (const auto& sol : got.solutions) {
                REQUIRE(want.contains(sol.word()));
                REQUIRE(to_int(sol.sign()) == want.at(sol.word()));
            }
            REQUIRE(std::is_sorted(got.solutions.begin(), got.solutions.end()));
        }
}

TEST_CASE("custom targets") {
    const auto t = EquationTarget::custom(Matrix(2, 1, 1, 1));
    const auto got = enumerate_solutions(4, t, 6);
    const auto want = oracle::brute_force(4, 6, oracle::Mat{2, 1, 1, 1});
    CHECK(got.size() == want.size());
    for (const auto& sol : got.solutions) CHECK(want.at(sol.word()) == to_int(sol.sign()));
}

TEST_CASE("generate_closure examples") {
    const auto t = EquationTarget::T();
    const auto four = generate_closure(Solution::verified(Word{1, 1, 2}, t), 4, t);
    CHECK(four.words() == std::set<Word>{{1, 1, 2}, {1, 2, 1, 3}, {2, 1, 2, 2}});
    const auto s = EquationTarget::S();
    CHECK(generate_closure(Solution::verified(Word{1, 1, 2, 1, 1}, s), 5, s).size() == 1);
    const auto six = generate_closure(Solution::verified(Word{1, 1, 2, 1, 1}, s), 6, s);
    std::set<Word> sixes;
    for (const auto& w : six.words())
        if (w.size() == 6) sixes.insert(w);
    CHECK(sixes == enumerate_solutions(6, s, 6).words());
    CHECK(sixes.size() == 4);
    CHECK_THROWS_AS(generate_closure(Solution::verified(Word{1, 1, 2}, t), 2, t), std::invalid_argument);
}

TEST_CASE("closure equals brute force, with the parity law") {
    for (const auto& t : targets()) {
        const auto seed = Solution::verified(seed_of(t), t);
        const auto closure = generate_closure(seed, 7, t);
        std::set<Word> brute;
        for (std::size_t n = 1; n <= 7; ++n) {
            const auto words = enumerate_solutions(n, t, static_cast<Entry>(n) + 2).words();
            brute.insert(words.begin(), words.end());
        }
        CHECK(closure.words() == brute);
        for (const auto& sol : closure.solutions) {
            REQUIRE(sol.op_b_count);
            CHECK(sol.sign() == seed.sign() * sign_of_parity(*sol.op_b_count));
            CHECK(oracle::solves(sol.word(), oracle_matrix(t)) == to_int(sol.sign()));
        }
    }
}

TEST_CASE("solutions contain a 1") {
    for (const auto& t : targets())
        for (std::size_t n = 1; n <= 7; ++n)
            for (const auto& w : enumerate_solutions(n, t).words()) {
                const auto first = w.begin() + (t.name() == TargetName::S ? 1 : 0);
                const auto last = w.end() - (t.name() == TargetName::S ? 1 : 0);
                CHECK(std::find(first, last, 1) != last);
            }
}

TEST_CASE("E_S is closed under reversal, E_T is not") {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto s = enumerate_solutions(n, EquationTarget::S());
        for (const auto& w : s.words()) CHECK(s.contains(reverse_word(w)));
    }
    CHECK(enumerate_solutions(3, EquationTarget::T()).contains(Word{1, 1, 2}));
    CHECK_FALSE(enumerate_solutions(3, EquationTarget::T()).contains(Word{2, 1, 1}));
}

TEST_CASE("E_Id rotation classes") {
    const auto six = enumerate_solutions(6, EquationTarget::Id());
    const auto classes = rotation_classes(six);
    for (const auto& w : six.words()) CHECK(classes.contains(canonical_rotation(w)));
    CHECK(classes.size() < six.size());
    for (const auto& w : six.words())
        for (std::size_t k = 0; k < w.size(); ++k) CHECK(six.contains(rotate_word(w, k).rotated));
    CHECK_THROWS_AS(rotation_classes(enumerate_solutions(5, EquationTarget::S())), std::invalid_argument);
}

TEST_CASE("matrix_order") {
    CHECK(matrix_order(Matrix::S(), 12) == 4u);
    CHECK(matrix_order(-Matrix::identity(), 12) == 2u);
    CHECK_FALSE(matrix_order(Matrix::T(), 1000));
    CHECK(matrix_order(eval_word(Word{1}), 12) == 6u);
    CHECK_FALSE(matrix_order(eval_word(Word{1}), 5));
}

TEST_CASE("finite order targets force a 1") {
    const auto s = EquationTarget::S();
    REQUIRE(matrix_order(s.matrix(), 12));
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& w : enumerate_solutions(n, s).words()) CHECK(w.contains(1));
}

TEST_CASE("positive_word_of_matrix") {
    const Matrix samples[] = {Matrix::identity(), -Matrix::identity(), Matrix::S(), Matrix::T(),
                              Matrix(2, 1, 1, 1),  Matrix(1, 0, 5, 1),  Matrix(-7, 3, 2, -1)};
    for (const auto& m : samples) {
        const auto p = positive_word_of_matrix(m);
        CHECK(p.word.is_positive());
        CHECK(p.sign * eval_word(p.word) == m);
    }
    auto g = oracle::rng(9);
    for (int i = 0; i < 2000; ++i) {
        const Word w = oracle::random_word(g, 0, 10, -6, 6);
        const Matrix m = eval_word(w);
        const auto p = positive_word_of_matrix(m);
        REQUIRE(p.word.is_positive());
        REQUIRE(p.sign * eval_word(p.word) == m);
    }
}

TEST_CASE("minimal presentation examples") {
    auto p = minimal_presentation(Matrix::S());
    CHECK(p.word == Word{1, 1, 2, 1, 1});
    CHECK(p.sign == Sign::minus);
    p = minimal_presentation(Matrix::T());
    CHECK(p.word == Word{1, 1, 2});
    CHECK(p.sign == Sign::minus);
    p = minimal_presentation(Matrix::identity());
    CHECK(p.word.empty());
    CHECK(p.sign == Sign::plus);
    p = minimal_presentation(-Matrix::identity());
    CHECK(p.word.empty());
    CHECK(p.sign == Sign::minus);
}

TEST_CASE("minimality criterion") {
    CHECK(satisfies_minimality_criterion(Word{1, 1, 2, 1, 1}));
    CHECK(satisfies_minimality_criterion(Word{1, 1, 2}));
    CHECK(satisfies_minimality_criterion(Word{3, 4, 5}));
    CHECK_FALSE(satisfies_minimality_criterion(Word{3, 1, 5}));
    CHECK_FALSE(satisfies_minimality_criterion(Word{3, 4, 1, 4, 5}));
}

TEST_CASE("minimal presentation is never beaten by brute force") {
    // Shortest positive word for ±M among entries up to 8 and lengths up to 6.
    auto shortest = [](const Matrix& m) -> std::optional<std::size_t> {
        const oracle::Mat target{m.a(), m.b(), m.c(), m.d()};
        for (std::size_t n = 1; n <= 6; ++n)
            if (!oracle::brute_force(n, 8, target).empty()) return n;
        return std::nullopt;
    };
    for (const auto& m : {Matrix::S(), Matrix::T(), Matrix::T_inverse(), Matrix(2, 1, 1, 1), Matrix(1, 0, 3, 1)}) {
        const auto p = minimal_presentation(m);
        CHECK(p.sign * eval_word(p.word) == m);
        CHECK(satisfies_minimality_criterion(p.word));
        const auto best = shortest(m);
        REQUIRE(best);
        CHECK(p.word.size() == *best);
    }
}

TEST_CASE("property: minimal presentations of random matrices") {
    auto g = oracle::rng(10);
    for (int i = 0; i < 3000; ++i) {
        const Word w = oracle::random_word(g, 0, 12, -8, 8);
        const Matrix m = eval_word(w);
        const auto p = minimal_presentation(m);
        REQUIRE(p.word.is_positive());
        REQUIRE(p.sign * eval_word(p.word) == m);
        REQUIRE(satisfies_minimality_criterion(p.word));
        // Idempotent: the minimal word of its own matrix is itself.
        REQUIRE(minimal_presentation(eval_word(p.word)).word == p.word);
    }
}
