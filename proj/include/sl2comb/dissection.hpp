#pragma once

// Dissections of convex polygons by non-crossing diagonals, in three
// flavours:
//
//   plain      every face has a multiple of 3 vertices; solutions of ±Id.
//   echancree  one extra quadrilateral face whose two polygon sides meet at
//              vertex 0; vertices 1..n carry a solution of ±S.
//   coiffee    a capped dissection: the ear {-1, 0, 1} has weight -1 and
//              sits on the weight +1 triangle {1, n, -1}; solutions of ±T
//              with last entry >= 2.
//
// Vertices are stored as 0..V-1 counterclockwise. Conventional labels:
// plain vertex k is labelled k+1, echancree vertex k is labelled k, and
// coiffee vertex k is labelled k except the last one (V-1), labelled -1.

#include "solvers.hpp"
#include "word.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2comb {

enum class DissectionKind { plain, echancree, coiffee };

inline const char* to_string(DissectionKind k) {
    switch (k) {
        case DissectionKind::plain: return "plain";
        case DissectionKind::echancree: return "echancree";
        case DissectionKind::coiffee: return "coiffee";
    }
    return "?";
}

inline DissectionKind parse_kind(std::string_view s) {
    if (s == "plain") return DissectionKind::plain;
    if (s == "echancree") return DissectionKind::echancree;
    if (s == "coiffee") return DissectionKind::coiffee;
    throw std::invalid_argument("unknown dissection kind '" + std::string(s) + "'");
}

struct Diagonal {
    int u = 0;
    int v = 0;

    Diagonal() = default;
    Diagonal(int x, int y) : u(std::min(x, y)), v(std::max(x, y)) {}

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Vertices of a face in counterclockwise order, starting from the smallest.
struct Face {
    std::vector<int> vertices;

    std::size_t size() const { return vertices.size(); }
    bool contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face&, const Face&) = default;
};

class Dissection {
public:
    /// Diagonals are normalized and sorted; nothing else is checked here.
    /// For coiffee dissections `weights[i]` is the weight of faces_of()[i].
    Dissection(int vertex_count, std::vector<Diagonal> diagonals, DissectionKind kind, std::vector<int> weights = {})
        : vertex_count_(vertex_count), diagonals_(std::move(diagonals)), kind_(kind), weights_(std::move(weights)) {
        std::sort(diagonals_.begin(), diagonals_.end());
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    DissectionKind kind() const { return kind_; }
    const std::vector<int>& weights() const { return weights_; }

    /// Conventional label of stored vertex `v`.
    int label(int v) const {
        switch (kind_) {
            case DissectionKind::plain: return v + 1;
            case DissectionKind::echancree: return v;
            case DissectionKind::coiffee: return v == vertex_count_ - 1 ? -1 : v;
        }
        return v;
    }

    /// True for vertices that carry no quiddity entry.
    bool is_excluded(int v) const {
        switch (kind_) {
            case DissectionKind::plain: return false;
            case DissectionKind::echancree: return v == 0;
            case DissectionKind::coiffee: return v == 0 || v == vertex_count_ - 1;
        }
        return false;
    }

    bool is_side(int x, int y) const {
        const int d = std::abs(x - y);
        return d == 1 || d == vertex_count_ - 1;
    }

    friend bool operator==(const Dissection&, const Dissection&) = default;

private:
    int vertex_count_;
    std::vector<Diagonal> diagonals_;
    DissectionKind kind_;
    std::vector<int> weights_;
};

struct Violation {
    std::string code;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct InvalidDissection : std::domain_error {
    explicit InvalidDissection(std::vector<Violation> v)
        : std::domain_error(describe(v)), violations(std::move(v)) {}

    std::vector<Violation> violations;

private:
    static std::string describe(const std::vector<Violation>& v) {
        std::string s = "invalid dissection:";
        for (const auto& x : v) s += " [" + x.code + "] " + x.detail + ";";
        return s;
    }
};

namespace detail {

inline bool crosses(const Diagonal& x, const Diagonal& y) {
    return (x.u < y.u && y.u < x.v && x.v < y.v) || (y.u < x.u && x.u < y.v && y.v < x.v);
}

inline std::string pair_text(const Diagonal& d) { return "{" + std::to_string(d.u) + "," + std::to_string(d.v) + "}"; }

inline std::vector<Violation> structural_violations(const Dissection& d) {
    std::vector<Violation> out;
    const int n = d.vertex_count();
    if (n < 3) {
        out.push_back({"vertex_count", "a polygon needs at least 3 vertices, got " + std::to_string(n)});
        return out;
    }
    const auto& diags = d.diagonals();
    for (std::size_t i = 0; i < diags.size(); ++i) {
        const auto& x = diags[i];
        if (x.u < 0 || x.v >= n)
            out.push_back({"diagonal_range", pair_text(x) + " has an endpoint outside 0.." + std::to_string(n - 1)});
        else if (x.u == x.v || d.is_side(x.u, x.v))
            out.push_back({"diagonal_side", pair_text(x) + " joins adjacent vertices"});
        if (i > 0 && diags[i - 1] == x) out.push_back({"diagonal_duplicate", pair_text(x) + " appears twice"});
    }
    for (std::size_t i = 0; i < diags.size(); ++i)
        for (std::size_t j = i + 1; j < diags.size(); ++j)
            if (crosses(diags[i], diags[j]))
                out.push_back({"diagonal_crossing", pair_text(diags[i]) + " crosses " + pair_text(diags[j])});
    return out;
}

inline void split_faces(const std::vector<int>& polygon, std::vector<Diagonal> diags, std::vector<Face>& out) {
    if (diags.empty()) {
        out.push_back({polygon});
        return;
    }
    const Diagonal cut = diags.back();
    diags.pop_back();
    std::vector<int> left, right;
    for (int v : polygon) {
        if (v >= cut.u && v <= cut.v) left.push_back(v);
        if (v <= cut.u || v >= cut.v) right.push_back(v);
    }
    std::vector<Diagonal> left_diags, right_diags;
    for (const auto& x : diags) {
        if (x.u >= cut.u && x.v <= cut.v)
            left_diags.push_back(x);
        else
            right_diags.push_back(x);
    }
    split_faces(left, std::move(left_diags), out);
    split_faces(right, std::move(right_diags), out);
}

}  // namespace detail

/// Faces of the subdivision, sorted lexicographically. Face indices used by
/// coiffee weights refer to this order. Throws InvalidDissection on
/// malformed or crossing diagonals.
inline std::vector<Face> faces_of(const Dissection& d) {
    auto bad = detail::structural_violations(d);
    if (!bad.empty()) throw InvalidDissection(std::move(bad));
    std::vector<int> polygon(static_cast<std::size_t>(d.vertex_count()));
    for (int v = 0; v < d.vertex_count(); ++v) polygon[static_cast<std::size_t>(v)] = v;
    std::vector<Face> faces;
    detail::split_faces(polygon, d.diagonals(), faces);
    std::sort(faces.begin(), faces.end());
    return faces;
}

namespace detail {

inline std::string face_text(const Face& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.vertices.size(); ++i) s += (i ? " " : "") + std::to_string(f.vertices[i]);
    return s + "]";
}

/// Number of polygon sides among the edges of `f`.
inline int polygon_side_count(const Dissection& d, const Face& f) {
    int count = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (d.is_side(f.vertices[i], f.vertices[(i + 1) % f.size()])) ++count;
    return count;
}

}  // namespace detail

/// Kind-specific validity check. An empty result means valid.
inline std::vector<Violation> validate(const Dissection& d) {
    auto out = detail::structural_violations(d);
    if (!out.empty()) return out;

    const int n = d.vertex_count();
    const auto faces = faces_of(d);

    if (d.kind() != DissectionKind::coiffee && !d.weights().empty())
        out.push_back({"weights_unexpected", "only coiffee dissections carry face weights"});

    switch (d.kind()) {
        case DissectionKind::plain:
            for (const auto& f : faces)
                if (f.size() % 3 != 0)
                    out.push_back({"face_size", "face " + detail::face_text(f) + " has " + std::to_string(f.size()) +
                                                    " vertices, not a multiple of 3"});
            break;

        case DissectionKind::echancree: {
            if (n < 6) out.push_back({"vertex_count", "an echancree dissection needs at least 6 vertices"});
            std::vector<const Face*> quads;
            for (const auto& f : faces) {
                if (f.size() == 4)
                    quads.push_back(&f);
                else if (f.size() % 3 != 0)
                    out.push_back({"face_size", "face " + detail::face_text(f) + " has " + std::to_string(f.size()) +
                                                    " vertices"});
            }
            if (quads.size() != 1) {
                out.push_back({"quadrilateral_count", "expected exactly one quadrilateral, found " +
                                                          std::to_string(quads.size())});
                break;
            }
            const Face& q = *quads.front();
            const bool at_zero = q.contains(0) && q.contains(1) && q.contains(n - 1);
            if (detail::polygon_side_count(d, q) != 2 || !at_zero)
                out.push_back({"quadrilateral_boundary", "quadrilateral " + detail::face_text(q) +
                                                             " must have exactly two polygon sides, meeting at vertex 0"});
            break;
        }

        case DissectionKind::coiffee: {
            if (n < 5) out.push_back({"vertex_count", "a coiffee dissection needs at least 5 vertices"});
            for (const auto& f : faces)
                if (f.size() % 3 != 0)
                    out.push_back({"face_size", "face " + detail::face_text(f) + " has " + std::to_string(f.size()) +
                                                    " vertices, not a multiple of 3"});
            const auto& w = d.weights();
            if (w.size() != faces.size()) {
                out.push_back({"weights_count", "expected " + std::to_string(faces.size()) + " face weights, got " +
                                                    std::to_string(w.size())});
                break;
            }
            std::vector<std::size_t> negative;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] == -1)
                    negative.push_back(i);
                else if (w[i] != 1)
                    out.push_back({"weight_value", "face weights must be +1 or -1"});
            }
            if (negative.size() != 1) {
                out.push_back({"negative_weight_count",
                               "expected exactly one face of weight -1, found " + std::to_string(negative.size())});
                break;
            }
            const Face cap{{0, 1, n - 1}};
            const Face& t = faces[negative.front()];
            if (t != cap)
                out.push_back({"negative_triangle", "the weight -1 face must be the ear [0 1 " + std::to_string(n - 1) +
                                                        "], got " + detail::face_text(t)});
            const Face companion{{1, n - 2, n - 1}};
            const auto it = std::find(faces.begin(), faces.end(), companion);
            if (it == faces.end() || w[static_cast<std::size_t>(it - faces.begin())] != 1)
                out.push_back({"companion_triangle", "expected a weight +1 triangle " + detail::face_text(companion) +
                                                         " next to the weight -1 ear"});
            const auto on_last = std::count_if(faces.begin(), faces.end(), [&](const Face& f) { return f.contains(n - 1); });
            if (on_last != 2)
                out.push_back({"cap_vertex", "vertex -1 must lie only on the two distinguished triangles"});
            break;
        }
    }
    return out;
}

inline void require_valid(const Dissection& d) {
    auto v = validate(d);
    if (!v.empty()) throw InvalidDissection(std::move(v));
}

/// Quiddity entries together with the reading convention they come from.
struct Quiddity {
    Word entries;
    DissectionKind convention;
};

/// plain: faces at each vertex 0..V-1. echancree: faces with a multiple of 3
/// vertices at 1..V-1. coiffee: sum of face weights at 1..V-2.
inline Quiddity quiddity_of(const Dissection& d) {
    require_valid(d);
    const auto faces = faces_of(d);
    const int n = d.vertex_count();
    std::vector<Entry> q;
    for (int v = 0; v < n; ++v) {
        if (d.is_excluded(v)) continue;
        Entry count = 0;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (!faces[i].contains(v)) continue;
            if (d.kind() == DissectionKind::coiffee)
                count += d.weights()[i];
            else if (faces[i].size() % 3 == 0)
                count += 1;
        }
        q.push_back(count);
    }
    return {Word(std::move(q)), d.kind()};
}

namespace detail {

/// Builds a dissection from faces given as vertex sets over 0..n-1.
inline Dissection from_faces(int n, const std::vector<std::vector<int>>& faces, DissectionKind kind) {
    std::set<Diagonal> diags;
    for (auto f : faces) {
        std::sort(f.begin(), f.end());
        for (std::size_t i = 0; i < f.size(); ++i) {
            const int x = f[i], y = f[(i + 1) % f.size()];
            const int gap = std::abs(x - y);
            if (gap != 1 && gap != n - 1) diags.insert(Diagonal(x, y));
        }
    }
    return Dissection(n, std::vector<Diagonal>(diags.begin(), diags.end()), kind);
}

/// Work structure for the recursive plain construction: vertex ids in
/// counterclockwise order (aligned with word positions) and faces as id sets.
struct Assembly {
    std::vector<int> order;
    std::vector<std::vector<int>> faces;
    int next_id = 0;
};

inline Assembly assemble_plain(const std::vector<Entry>& w) {
    const std::size_t n = w.size();
    if (n == 3 && w[0] == 1 && w[1] == 1 && w[2] == 1) return {{0, 1, 2}, {{0, 1, 2}}, 3};
    if (n < 3) throw InternalError("E_Id reduction reached a word shorter than 3");

    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] != 1) continue;
        const std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;

        if (w[prev] >= 2 && w[next] >= 2) {
            // Inverse of (a): remove the ear at i, then glue it back.
            std::vector<Entry> reduced(w);
            reduced[prev] -= 1;
            reduced[next] -= 1;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
            Assembly a = assemble_plain(reduced);
            const int v = a.next_id++;
            a.order.insert(a.order.begin() + static_cast<std::ptrdiff_t>(i), v);
            a.faces.push_back({a.order[prev], v, a.order[next]});
            return a;
        }

        if (n < 6) break;
        // Inverse of (b) on the cyclic window s, s+1, s+2, s+3 whose middle
        // entries are both 1.
        const std::size_t s = w[next] == 1 ? prev : (prev + n - 1) % n;
        const Entry a_first = w[s], a_second = w[(s + 3) % n];
        std::vector<Entry> reduced{a_first + a_second - 1};
        for (std::size_t k = 4; k < n; ++k) reduced.push_back(w[(s + k) % n]);
        Assembly a = assemble_plain(reduced);

        const int u = a.order.front();
        const std::size_t m = a.order.size();
        std::vector<std::size_t> pos_of(static_cast<std::size_t>(a.next_id));
        for (std::size_t k = 0; k < m; ++k) pos_of[static_cast<std::size_t>(a.order[k])] = k;

        // Faces at u, nearest the predecessor side first.
        std::vector<std::size_t> at_u;
        std::vector<std::size_t> reach(a.faces.size(), 0);
        for (std::size_t f = 0; f < a.faces.size(); ++f) {
            if (std::find(a.faces[f].begin(), a.faces[f].end(), u) == a.faces[f].end()) continue;
            at_u.push_back(f);
            for (int x : a.faces[f])
                if (x != u) reach[f] = std::max(reach[f], pos_of[static_cast<std::size_t>(x)]);
        }
        std::sort(at_u.begin(), at_u.end(), [&](std::size_t x, std::size_t y) { return reach[x] > reach[y]; });
        if (at_u.size() != static_cast<std::size_t>(a_first + a_second - 1))
            throw InternalError("vertex face count disagrees with its quiddity entry");

        const int first = u, x1 = a.next_id++, x2 = a.next_id++, last = a.next_id++;
        const auto split = static_cast<std::size_t>(a_first - 1);
        for (std::size_t k = 0; k < at_u.size(); ++k) {
            auto& face = a.faces[at_u[k]];
            if (k < split) continue;  // keeps `first`
            if (k == split) {
                face.insert(face.end(), {x1, x2, last});
            } else {
                std::replace(face.begin(), face.end(), u, last);
            }
        }
        std::vector<int> cyclic{first, x1, x2, last};
        cyclic.insert(cyclic.end(), a.order.begin() + 1, a.order.end());
        a.order.assign(n, 0);
        for (std::size_t k = 0; k < n; ++k) a.order[(s + k) % n] = cyclic[k];
        return a;
    }
    throw InternalError("E_Id solution admits no inverse operation");
}

inline Dissection plain_from_word(const Word& w) {
    const Assembly a = assemble_plain(std::vector<Entry>(w.begin(), w.end()));
    std::vector<int> label(static_cast<std::size_t>(a.next_id), -1);
    for (std::size_t k = 0; k < a.order.size(); ++k) label[static_cast<std::size_t>(a.order[k])] = static_cast<int>(k);
    std::vector<std::vector<int>> faces;
    for (const auto& f : a.faces) {
        std::vector<int> g;
        for (int x : f) g.push_back(label[static_cast<std::size_t>(x)]);
        faces.push_back(std::move(g));
    }
    return from_faces(static_cast<int>(w.size()), faces, DissectionKind::plain);
}

inline std::vector<std::vector<int>> face_sets(const Dissection& d) {
    std::vector<std::vector<int>> out;
    for (auto& f : faces_of(d)) out.push_back(std::move(f.vertices));
    return out;
}

inline void require_round_trip(const Dissection& d, const Word& w) {
    if (quiddity_of(d).entries != w)
        throw InternalError("constructed dissection does not have quiddity " + w.to_string());
}

}  // namespace detail

/// A plain dissection with quiddity exactly `w`, read from vertex 0.
///
/// `w` is reduced to (1,1,1) by inverse operations at the lowest cyclic
/// position, then replayed: (a) glues a triangle on a side, (b) splits a
/// vertex into two copies with two new vertices between them.
inline Dissection dissection_from_id_solution(const Word& w) {
    Solution::verified(w, EquationTarget::Id());
    Dissection d = detail::plain_from_word(w);
    detail::require_round_trip(d, w);
    return d;
}

/// Echancree dissection of an (n+1)-gon with quiddity `w`, from the plain
/// dissection of (a_1 + a_n, a_2, .., a_{n-1}): its first vertex is split so
/// that the first a_1 faces (counterclockwise from its first side) stay on
/// vertex 1 and the rest move to vertex n, and the quadrilateral
/// {0, 1, j, n} fills the gap.
inline Dissection echancree_from_s_solution(const Word& w) {
    Solution::verified(w, EquationTarget::S());
    const std::size_t n = w.size();
    if (n < 5) throw InternalError("E_S solution shorter than 5");

    std::vector<Entry> core_entries(w.begin(), w.end() - 1);
    core_entries[0] = detail::checked_add(w[0], w[n - 1]);
    const Word core(std::move(core_entries));
    if (!check_equation(core, EquationTarget::Id())) throw InternalError("folded E_S solution does not solve E_Id");
    const Dissection base = detail::plain_from_word(core);

    // Faces at vertex 0 come first in sorted order, already arranged
    // counterclockwise from side (0, 1).
    auto faces = detail::face_sets(base);
    const auto at_zero = static_cast<std::size_t>(
        std::count_if(faces.begin(), faces.end(), [](const std::vector<int>& f) { return f.front() == 0; }));
    const auto a1 = static_cast<std::size_t>(w[0]);
    if (at_zero != static_cast<std::size_t>(core[0]) || a1 >= at_zero)
        throw InternalError("vertex 1 of the folded dissection has the wrong face count");
    const int j = faces[a1 - 1].back();

    const int last = static_cast<int>(n);
    std::vector<std::vector<int>> out;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const bool keeps_first = f < a1;
        std::vector<int> g;
        for (int x : faces[f]) g.push_back(x == 0 ? (keeps_first ? 1 : last) : x + 1);
        out.push_back(std::move(g));
    }
    out.push_back({0, 1, j + 1, last});
    Dissection d = detail::from_faces(static_cast<int>(n) + 1, out, DissectionKind::echancree);
    detail::require_round_trip(d, w);
    return d;
}

/// Coiffee dissection of an (n+2)-gon with quiddity `w` (last entry >= 2):
/// the plain dissection of (a_1, .., a_n - 1) with a quadrilateral glued on
/// side (1, n), cut into the ear {0, 1, -1} of weight -1 and the triangle
/// {1, n, -1} of weight +1.
inline Dissection coiffee_from_t_solution(const Word& w) {
    Solution::verified(w, EquationTarget::T());
    const std::size_t n = w.size();
    if (n < 3) throw std::invalid_argument("coiffee_from_t_solution: word shorter than 3");
    if (w[n - 1] < 2)
        throw std::invalid_argument("coiffee_from_t_solution: last entry must be at least 2; words ending in 1 "
                                    "correspond to echancree dissections of the prefix");

    std::vector<Entry> core_entries(w.begin(), w.end());
    core_entries[n - 1] -= 1;
    const Word core(std::move(core_entries));
    if (!check_equation(core, EquationTarget::Id())) throw InternalError("E_T solution minus T does not solve E_Id");
    const Dissection base = detail::plain_from_word(core);

    const int cap = static_cast<int>(n) + 1;
    auto faces = detail::face_sets(base);
    for (auto& f : faces)
        for (int& x : f) x += 1;
    faces.push_back({0, 1, cap});
    faces.push_back({1, static_cast<int>(n), cap});
    Dissection shape = detail::from_faces(cap + 1, faces, DissectionKind::coiffee);

    std::vector<int> weights;
    for (const auto& f : faces_of(shape)) weights.push_back(f == Face{{0, 1, cap}} ? -1 : 1);
    Dissection d(shape.vertex_count(), shape.diagonals(), DissectionKind::coiffee, std::move(weights));
    detail::require_round_trip(d, w);
    return d;
}

/// The quiddity of a valid dissection with the equation it solves.
struct DissectionSolution {
    Word word;
    EquationTarget target;
    Sign sign;
};

inline EquationTarget target_for(DissectionKind k) {
    switch (k) {
        case DissectionKind::plain: return EquationTarget::Id();
        case DissectionKind::echancree: return EquationTarget::S();
        case DissectionKind::coiffee: return EquationTarget::T();
    }
    return EquationTarget::Id();
}

inline DissectionSolution solution_from_dissection(const Dissection& d) {
    Quiddity q = quiddity_of(d);
    EquationTarget target = target_for(d.kind());
    const auto sign = check_equation(q.entries, target);
    if (!sign)
        throw InternalError("quiddity " + q.entries.to_string() + " of a valid " + to_string(d.kind()) +
                            " dissection does not solve E_" + target.to_string());
    return {std::move(q.entries), std::move(target), *sign};
}

inline constexpr int max_enumerated_vertices = 12;

namespace detail {

inline void enumerate_diagonal_sets(const std::vector<Diagonal>& all, std::size_t next, std::vector<Diagonal>& chosen,
                                    std::vector<std::vector<Diagonal>>& out) {
    if (next == all.size()) {
        out.push_back(chosen);
        return;
    }
    enumerate_diagonal_sets(all, next + 1, chosen, out);
    const Diagonal& d = all[next];
    if (std::none_of(chosen.begin(), chosen.end(), [&](const Diagonal& c) { return crosses(c, d); })) {
        chosen.push_back(d);
        enumerate_diagonal_sets(all, next + 1, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace detail

/// Every valid dissection of the given kind on `vertex_count` vertices,
/// found by exhaustive search over non-crossing diagonal sets (and over the
/// placement of the weight -1 face for coiffee). Sorted by diagonals, then
/// weights.
inline std::vector<Dissection> enumerate_dissections(int vertex_count, DissectionKind kind) {
    if (vertex_count < 3 || vertex_count > max_enumerated_vertices)
        throw std::out_of_range("enumerate_dissections: vertex count must be in 3.." +
                                std::to_string(max_enumerated_vertices));
    std::vector<Diagonal> all;
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 2; v < vertex_count; ++v)
            if (!(u == 0 && v == vertex_count - 1)) all.emplace_back(u, v);

    std::vector<std::vector<Diagonal>> sets;
    std::vector<Diagonal> chosen;
    detail::enumerate_diagonal_sets(all, 0, chosen, sets);

    std::vector<Dissection> out;
    for (auto& diags : sets) {
        Dissection shape(vertex_count, std::move(diags), kind);
        if (kind != DissectionKind::coiffee) {
            if (validate(shape).empty()) out.push_back(std::move(shape));
            continue;
        }
        const auto faces = faces_of(shape);
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (faces[f].size() != 3) continue;
            std::vector<int> weights(faces.size(), 1);
            weights[f] = -1;
            Dissection candidate(vertex_count, shape.diagonals(), kind, std::move(weights));
            if (validate(candidate).empty()) out.push_back(std::move(candidate));
        }
    }
    std::sort(out.begin(), out.end(), [](const Dissection& x, const Dissection& y) {
        return std::tie(x.diagonals(), x.weights()) < std::tie(y.diagonals(), y.weights());
    });
    return out;
}

struct TriangulationReport {
    bool is_triangulation = false;
    Word face_counts;  // faces at each vertex
    Entry quiddity_sum = 0;
    Entry expected_sum = 0;  // 3n - 6
    bool sum_matches = false;

    /// For triangulations both conditions must hold together.
    bool consistent() const { return !is_triangulation || sum_matches; }
};

/// Checks the triangulation sum rule a_1 + ... + a_n = 3n - 6 on a plain
/// dissection. Face counts are computed even when some face sizes are not
/// multiples of 3.
inline TriangulationReport cc_triangulation_check(const Dissection& d) {
    if (d.kind() != DissectionKind::plain) throw std::invalid_argument("cc_triangulation_check needs a plain dissection");
    const auto faces = faces_of(d);
    TriangulationReport r;
    r.is_triangulation = std::all_of(faces.begin(), faces.end(), [](const Face& f) { return f.size() == 3; });
    std::vector<Entry> counts;
    for (int v = 0; v < d.vertex_count(); ++v)
        counts.push_back(std::count_if(faces.begin(), faces.end(), [&](const Face& f) { return f.contains(v); }));
    r.face_counts = Word(std::move(counts));
    r.quiddity_sum = r.face_counts.sum();
    r.expected_sum = 3 * static_cast<Entry>(d.vertex_count()) - 6;
    r.sum_matches = r.quiddity_sum == r.expected_sum;
    return r;
}

/// True if `x` is a cyclic rotation of `y`.
inline bool equal_up_to_rotation(const Word& x, const Word& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k <= x.size(); ++k)
        if (rotate_word(x, k % std::max<std::size_t>(x.size(), 1)).rotated == y) return true;
    return x.empty();
}

}  // namespace sl2comb
