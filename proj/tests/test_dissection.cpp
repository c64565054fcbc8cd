#include "oracle.hpp"
#include "sl2comb/dissection.hpp"

#include <catch_amalgamated.hpp>

using namespace sl2comb;

namespace {

std::set<std::vector<int>> oracle_faces(const Dissection& d) {
    std::vector<std::pair<int, int>> diags;
    for (const auto& x : d.diagonals()) diags.emplace_back(x.u, x.v);
    return oracle::trace_faces(d.vertex_count(), diags);
}

std::set<std::vector<int>> library_faces(const Dissection& d) {
    std::set<std::vector<int>> out;
    for (const auto& f : faces_of(d)) out.insert(f.vertices);
    return out;
}

/// Faces at each vertex, from the traced faces.
std::vector<int> oracle_face_counts(const Dissection& d) {
    std::vector<int> count(static_cast<std::size_t>(d.vertex_count()), 0);
    for (const auto& f : oracle_faces(d))
        for (int v : f) ++count[static_cast<std::size_t>(v)];
    return count;
}

bool has_code(const std::vector<Violation>& v, const std::string& code) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.code == code; });
}

const Dissection pentagon_fan(5, {{0, 2}, {0, 3}}, DissectionKind::plain);
const Dissection echancree_hexagon(6, {{1, 3}, {3, 5}}, DissectionKind::echancree);

}  // namespace

TEST_CASE("faces_of examples") {
    auto faces = faces_of(Dissection(6, {}, DissectionKind::plain));
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].size() == 6);

    faces = faces_of(pentagon_fan);
    REQUIRE(faces.size() == 3);
    for (const auto& f : faces) CHECK(f.size() == 3);

    faces = faces_of(Dissection(8, {{0, 4}}, DissectionKind::plain));
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].size() == 5);
    CHECK(faces[1].size() == 5);
    CHECK(validate(Dissection(8, {{0, 4}}, DissectionKind::plain)).front().code == "face_size");

    faces = faces_of(Dissection(10, {{0, 5}}, DissectionKind::plain));
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].size() == 6);
    CHECK(faces[1].size() == 6);
}

TEST_CASE("faces_of rejects malformed diagonals") {
    CHECK_THROWS_AS(faces_of(Dissection(6, {{0, 3}, {1, 4}}, DissectionKind::plain)), InvalidDissection);
    CHECK_THROWS_AS(faces_of(Dissection(6, {{0, 1}}, DissectionKind::plain)), InvalidDissection);
    CHECK_THROWS_AS(faces_of(Dissection(6, {{0, 5}}, DissectionKind::plain)), InvalidDissection);
    CHECK_THROWS_AS(faces_of(Dissection(6, {{0, 6}}, DissectionKind::plain)), InvalidDissection);
    CHECK_THROWS_AS(faces_of(Dissection(6, {{0, 2}, {2, 0}}, DissectionKind::plain)), InvalidDissection);
    CHECK_THROWS_AS(faces_of(Dissection(2, {}, DissectionKind::plain)), InvalidDissection);
}

TEST_CASE("faces agree with planar face tracing, Euler count holds") {
    for (int v = 3; v <= 9; ++v)
        for (const auto& d : enumerate_dissections(v, DissectionKind::plain)) {
            REQUIRE(library_faces(d) == oracle_faces(d));
            const auto faces = faces_of(d);
            REQUIRE(faces.size() == d.diagonals().size() + 1);
            // Each diagonal borders exactly two faces and each side exactly one.
            std::map<std::pair<int, int>, int> edge_use;
            for (const auto& f : faces)
                for (std::size_t i = 0; i < f.size(); ++i) {
                    int a = f.vertices[i], b = f.vertices[(i + 1) % f.size()];
                    ++edge_use[{std::min(a, b), std::max(a, b)}];
                }
            for (const auto& x : d.diagonals()) REQUIRE(edge_use[{x.u, x.v}] == 2);
            for (int k = 0; k < v; ++k) REQUIRE(edge_use[{std::min(k, (k + 1) % v), std::max(k, (k + 1) % v)}] == 1);
        }
}

TEST_CASE("all non-crossing diagonal sets are traced consistently") {
    // Includes face sizes that are not multiples of 3.
    for (const auto& d : enumerate_dissections(7, DissectionKind::plain)) CHECK(library_faces(d) == oracle_faces(d));
    const Dissection odd(7, {{0, 3}, {3, 5}}, DissectionKind::plain);
    CHECK(library_faces(odd) == oracle_faces(odd));
}

TEST_CASE("validate examples") {
    CHECK(validate(pentagon_fan).empty());
    const auto v = validate(Dissection(5, {{0, 2}}, DissectionKind::plain));
    REQUIRE(v.size() == 1);
    CHECK(v[0].code == "face_size");
    CHECK(validate(echancree_hexagon).empty());
    CHECK(has_code(validate(Dissection(6, {{0, 3}, {1, 4}}, DissectionKind::plain)), "diagonal_crossing"));
}

TEST_CASE("echancree validation") {
    // Quadrilateral not at vertex 0.
    CHECK(has_code(validate(Dissection(6, {{0, 2}, {2, 5}}, DissectionKind::echancree)), "quadrilateral_boundary"));
    // Two quadrilaterals.
    CHECK(has_code(validate(Dissection(6, {{0, 3}}, DissectionKind::echancree)), "quadrilateral_count"));
    // Too small.
    CHECK(has_code(validate(Dissection(5, {{1, 3}}, DissectionKind::echancree)), "vertex_count"));
    // Weights are reserved for coiffee.
    CHECK(has_code(validate(Dissection(6, {{1, 3}, {3, 5}}, DissectionKind::echancree, {1, 1, 1})),
                   "weights_unexpected"));
}

TEST_CASE("coiffee validation") {
    const Dissection good(5, {{1, 3}, {1, 4}}, DissectionKind::coiffee, {-1, 1, 1});
    CHECK(validate(good).empty());
    CHECK(has_code(validate(Dissection(5, {{1, 3}, {1, 4}}, DissectionKind::coiffee, {1, -1, 1})), "negative_triangle"));
    CHECK(has_code(validate(Dissection(5, {{1, 3}, {1, 4}}, DissectionKind::coiffee, {1, 1, 1})),
                   "negative_weight_count"));
    CHECK(has_code(validate(Dissection(5, {{1, 3}, {1, 4}}, DissectionKind::coiffee, {-1, 1})), "weights_count"));
    CHECK(has_code(validate(Dissection(5, {{1, 3}, {1, 4}}, DissectionKind::coiffee, {-1, 2, 1})), "weight_value"));
    // No +1 triangle {1, 3, 4} next to the ear.
    CHECK(has_code(validate(Dissection(5, {{1, 4}, {2, 4}}, DissectionKind::coiffee, {-1, 1, 1})),
                   "companion_triangle"));
}

TEST_CASE("quiddity_of examples") {
    CHECK(quiddity_of(pentagon_fan).entries == Word{3, 1, 2, 2, 1});
    CHECK(quiddity_of(Dissection(6, {}, DissectionKind::plain)).entries == Word{1, 1, 1, 1, 1, 1});
    CHECK(quiddity_of(echancree_hexagon).entries == Word{1, 1, 2, 1, 1});
    CHECK(quiddity_of(coiffee_from_t_solution(Word{1, 1, 1, 1, 1, 2})).entries == Word{1, 1, 1, 1, 1, 2});
    CHECK(quiddity_of(Dissection(10, {{0, 5}}, DissectionKind::plain)).entries == Word{2, 1, 1, 1, 1, 2, 1, 1, 1, 1});
    CHECK_THROWS_AS(quiddity_of(Dissection(5, {{0, 2}}, DissectionKind::plain)), InvalidDissection);
}

TEST_CASE("labels follow each kind's convention") {
    CHECK(pentagon_fan.label(0) == 1);
    CHECK(echancree_hexagon.label(0) == 0);
    CHECK(echancree_hexagon.is_excluded(0));
    const auto c = coiffee_from_t_solution(Word{1, 1, 2});
    CHECK(c.label(4) == -1);
    CHECK(c.label(3) == 3);
    CHECK(c.is_excluded(0));
    CHECK(c.is_excluded(4));
}

TEST_CASE("dissection_from_id_solution examples") {
    auto d = dissection_from_id_solution(Word{1, 1, 1});
    CHECK(d.vertex_count() == 3);
    CHECK(d.diagonals().empty());
    d = dissection_from_id_solution(Word{1, 2, 1, 2});
    CHECK(d.diagonals() == std::vector<Diagonal>{{1, 3}});
    CHECK(quiddity_of(d).entries == Word{1, 2, 1, 2});
    d = dissection_from_id_solution(Word{1, 1, 1, 1, 1, 1});
    CHECK(d.diagonals().empty());
    CHECK_THROWS_AS(dissection_from_id_solution(Word{1, 1, 2}), NotASolution);
}

TEST_CASE("plain round trip for every E_Id solution up to n = 8") {
    for (std::size_t n = 3; n <= 8; ++n)
        for (const auto& w : enumerate_solutions(n, EquationTarget::Id()).words()) {
            const auto d = dissection_from_id_solution(w);
            REQUIRE(validate(d).empty());
            std::vector<Entry> counts;
            for (int c : oracle_face_counts(d)) counts.push_back(c);
            REQUIRE(Word(counts) == w);
        }
}

TEST_CASE("echancree_from_s_solution examples") {
    CHECK(echancree_from_s_solution(Word{1, 1, 2, 1, 1}) == echancree_hexagon);
    for (const Word& w : {Word{2, 1, 2, 2, 1, 1}, Word{1, 2, 1, 3, 1, 1}}) {
        const auto d = echancree_from_s_solution(w);
        CHECK(d.vertex_count() == 7);
        CHECK(validate(d).empty());
        CHECK(quiddity_of(d).entries == w);
        CHECK(check_equation(quiddity_of(d).entries, EquationTarget::S()));
    }
    CHECK_THROWS_AS(echancree_from_s_solution(Word{1, 1, 2}), NotASolution);
}

TEST_CASE("coiffee_from_t_solution examples") {
    auto d = coiffee_from_t_solution(Word{1, 1, 2});
    CHECK(d.vertex_count() == 5);
    CHECK(validate(d).empty());
    CHECK(quiddity_of(d).entries == Word{1, 1, 2});
    d = coiffee_from_t_solution(Word{1, 1, 1, 1, 1, 2});
    CHECK(d.vertex_count() == 8);
    const auto faces = faces_of(d);
    CHECK(std::any_of(faces.begin(), faces.end(), [](const Face& f) { return f.size() == 6; }));
    CHECK_THROWS_AS(coiffee_from_t_solution(Word{1, 1, 2, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(coiffee_from_t_solution(Word{2, 1, 1}), NotASolution);
}

TEST_CASE("echancree and coiffee round trips up to n = 7") {
    for (std::size_t n = 5; n <= 7; ++n)
        for (const auto& w : enumerate_solutions(n, EquationTarget::S()).words()) {
            const auto d = echancree_from_s_solution(w);
            REQUIRE(validate(d).empty());
            REQUIRE(quiddity_of(d).entries == w);
        }
    for (std::size_t n = 3; n <= 7; ++n)
        for (const auto& w : enumerate_solutions(n, EquationTarget::T()).words()) {
            if (w.at(n) >= 2) {
                const auto d = coiffee_from_t_solution(w);
                REQUIRE(validate(d).empty());
                REQUIRE(quiddity_of(d).entries == w);
            } else {
                const Word prefix(std::vector<Entry>(w.begin(), w.end() - 1));
                REQUIRE(check_equation(prefix, EquationTarget::S()));
            }
        }
}

TEST_CASE("coiffee weight law") {
    for (std::size_t n = 3; n <= 7; ++n)
        for (const auto& w : enumerate_solutions(n, EquationTarget::T()).words()) {
            if (w.at(n) < 2) continue;
            const auto d = coiffee_from_t_solution(w);
            // Drop the cap vertex: the remaining faces form the plain core
            // plus the +1 triangle, so face counts at 1..n are the core
            // quiddity with an extra 1 at vertex n.
            const int cap = d.vertex_count() - 1;
            std::vector<Diagonal> core;
            for (const auto& x : d.diagonals())
                if (x.v != cap && !(x.u == 1 && x.v == static_cast<int>(n))) core.push_back({x.u - 1, x.v - 1});
            const Dissection plain(static_cast<int>(n), core, DissectionKind::plain);
            const auto base = quiddity_of(plain).entries;
            for (std::size_t i = 1; i < n; ++i) CHECK(w.at(i) == base.at(i));
            CHECK(w.at(n) == base.at(n) + 1);
        }
}

TEST_CASE("solution_from_dissection examples") {
    auto s = solution_from_dissection(Dissection(6, {}, DissectionKind::plain));
    CHECK(s.word == Word{1, 1, 1, 1, 1, 1});
    CHECK(s.target == EquationTarget::Id());
    CHECK(s.sign == Sign::plus);
    s = solution_from_dissection(echancree_hexagon);
    CHECK(s.word == Word{1, 1, 2, 1, 1});
    CHECK(s.target == EquationTarget::S());
    CHECK(s.sign == Sign::minus);
    s = solution_from_dissection(coiffee_from_t_solution(Word{1, 1, 2}));
    CHECK(s.word == Word{1, 1, 2});
    CHECK(s.target == EquationTarget::T());
    CHECK(s.sign == Sign::minus);
}

TEST_CASE("enumerate_dissections examples") {
    CHECK(enumerate_dissections(5, DissectionKind::plain).size() == 5);
    CHECK(enumerate_dissections(6, DissectionKind::plain).size() == 15);
    const auto e6 = enumerate_dissections(6, DissectionKind::echancree);
    CHECK_FALSE(e6.empty());
    for (const auto& d : e6) CHECK(quiddity_of(d).entries == Word{1, 1, 2, 1, 1});
    CHECK(enumerate_dissections(5, DissectionKind::echancree).empty());
    CHECK_THROWS_AS(enumerate_dissections(13, DissectionKind::plain), std::out_of_range);
    CHECK_THROWS_AS(enumerate_dissections(2, DissectionKind::plain), std::out_of_range);
}

TEST_CASE("enumerated dissections solve their equations") {
    for (int v = 3; v <= 9; ++v)
        for (auto kind : {DissectionKind::plain, DissectionKind::echancree, DissectionKind::coiffee})
            for (const auto& d : enumerate_dissections(v, kind)) {
                const auto q = quiddity_of(d).entries;
                const oracle::Mat& m = kind == DissectionKind::plain       ? oracle::id
                                       : kind == DissectionKind::echancree ? oracle::S
                                                                           : oracle::T;
                REQUIRE(oracle::solves(q, m) != 0);
            }
}

TEST_CASE("quiddity sets of plain dissections equal E_Id solution sets") {
    for (std::size_t n = 3; n <= 8; ++n) {
        std::set<Word> quiddities;
        for (const auto& d : enumerate_dissections(static_cast<int>(n), DissectionKind::plain))
            quiddities.insert(quiddity_of(d).entries);
        CHECK(quiddities == enumerate_solutions(n, EquationTarget::Id()).words());
    }
}

TEST_CASE("echancree and coiffee quiddity sets match E_S and E_T") {
    for (std::size_t n = 5; n <= 7; ++n) {
        std::set<Word> quiddities;
        for (const auto& d : enumerate_dissections(static_cast<int>(n) + 1, DissectionKind::echancree))
            quiddities.insert(quiddity_of(d).entries);
        CHECK(quiddities == enumerate_solutions(n, EquationTarget::S()).words());
    }
    for (std::size_t n = 3; n <= 7; ++n) {
        std::set<Word> quiddities;
        for (const auto& d : enumerate_dissections(static_cast<int>(n) + 2, DissectionKind::coiffee))
            quiddities.insert(quiddity_of(d).entries);
        std::set<Word> expected;
        for (const auto& w : enumerate_solutions(n, EquationTarget::T()).words())
            if (w.at(n) >= 2) expected.insert(w);
        CHECK(quiddities == expected);
    }
}

TEST_CASE("Conway-Coxeter triangulations") {
    auto r = cc_triangulation_check(pentagon_fan);
    CHECK(r.is_triangulation);
    CHECK(r.quiddity_sum == 9);
    CHECK(r.sum_matches);
    r = cc_triangulation_check(Dissection(6, {}, DissectionKind::plain));
    CHECK_FALSE(r.is_triangulation);
    CHECK(r.quiddity_sum == 6);
    CHECK_FALSE(r.sum_matches);
    r = cc_triangulation_check(Dissection(8, {{0, 4}}, DissectionKind::plain));
    CHECK_FALSE(r.is_triangulation);
    CHECK(r.face_counts == Word{2, 1, 1, 1, 2, 1, 1, 1});
    CHECK(r.quiddity_sum == 10);
    CHECK_THROWS_AS(cc_triangulation_check(echancree_hexagon), std::invalid_argument);

    for (int n = 3; n <= 8; ++n) {
        std::set<Word> tri;
        long long count = 0;
        for (const auto& d : enumerate_dissections(n, DissectionKind::plain)) {
            const auto rep = cc_triangulation_check(d);
            CHECK(rep.consistent());
            if (rep.is_triangulation) {
                ++count;
                tri.insert(rep.face_counts);
            }
        }
        CHECK(count == oracle::catalan(n - 2));
        std::set<Word> by_sum;
        for (const auto& w : enumerate_solutions(static_cast<std::size_t>(n), EquationTarget::Id()).words())
            if (w.sum() == 3 * n - 6) by_sum.insert(w);
        CHECK(tri == by_sum);
    }
}

TEST_CASE("rotation-insensitive comparison") {
    CHECK(equal_up_to_rotation(Word{3, 1, 2, 2, 1}, Word{1, 3, 1, 2, 2}));
    CHECK_FALSE(equal_up_to_rotation(Word{3, 1, 2, 2, 1}, Word{1, 2, 2, 1, 3, 1}));
    CHECK_FALSE(equal_up_to_rotation(Word{1, 2, 3}, Word{3, 2, 1}));
    CHECK(equal_up_to_rotation(Word{}, Word{}));
}
