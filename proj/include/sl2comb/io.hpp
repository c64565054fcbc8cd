#pragma once

// JSON file formats for dissections and solution sets.
//
// Dissection file:
//   {
//     "kind": "coiffee",
//     "vertex_count": 5,
//     "diagonals": [[1, 3], [1, 4]],
//     "weights": [{"face": 0, "weight": -1}, ...],   (coiffee only)
//     "labels": [0, 1, 2, 3, -1]                     (conventional label of each stored vertex)
//   }
//
// Serialization is canonical (fixed key order, two-space indent, trailing
// newline), so a parsed canonical file re-serializes to the same bytes.

#include "dissection.hpp"
#include "solvers.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace sl2comb {

using Json = nlohmann::ordered_json;

struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Json to_json(const Word& w) {
    Json out = Json::array();
    for (Entry e : w) out.push_back(e);
    return out;
}

inline Json to_json(const Dissection& d) {
    Json out;
    out["kind"] = to_string(d.kind());
    out["vertex_count"] = d.vertex_count();
    Json diags = Json::array();
    for (const auto& x : d.diagonals()) diags.push_back(Json::array({x.u, x.v}));
    out["diagonals"] = std::move(diags);
    if (d.kind() == DissectionKind::coiffee) {
        Json weights = Json::array();
        for (std::size_t i = 0; i < d.weights().size(); ++i)
            weights.push_back(Json{{"face", i}, {"weight", d.weights()[i]}});
        out["weights"] = std::move(weights);
    }
    Json labels = Json::array();
    for (int v = 0; v < d.vertex_count(); ++v) labels.push_back(d.label(v));
    out["labels"] = std::move(labels);
    return out;
}

namespace detail {

inline bool is_flat(const Json& j) {
    if (!j.is_structured()) return true;
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

/// Containers of scalars go on one line; anything deeper is indented.
inline void write_json(std::string& out, const Json& j, int depth) {
    if (is_flat(j)) {
        if (j.is_structured()) {
            const bool object = j.is_object();
            out += object ? "{" : "[";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ", ";
                first = false;
                if (object) out += Json(key).dump() + ": ";
                out += value.dump();
            }
            out += object ? "}" : "]";
        } else {
            out += j.dump();
        }
        return;
    }
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const bool object = j.is_object();
    out += object ? "{\n" : "[\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        if (object) out += Json(key).dump() + ": ";
        write_json(out, value, depth + 1);
    }
    out += "\n" + std::string(static_cast<std::size_t>(2 * depth), ' ') + (object ? "}" : "]");
}

}  // namespace detail

/// Canonical text: fixed key order, one line per nested container.
inline std::string serialize(const Json& j) {
    std::string out;
    detail::write_json(out, j, 0);
    return out + "\n";
}

inline std::string serialize(const Dissection& d) { return serialize(to_json(d)); }

namespace detail {

inline const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw FormatError(std::string("field '") + what + "' has the wrong type");
    }
}

}  // namespace detail

/// Reads a dissection. Faces are not validated here; use validate().
inline Dissection dissection_from_json(const Json& j) {
    static const std::set<std::string> known{"kind", "vertex_count", "diagonals", "weights", "labels"};
    if (!j.is_object()) throw FormatError("dissection must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (!known.contains(key)) throw FormatError("unknown field '" + key + "'");

    DissectionKind kind;
    try {
        kind = parse_kind(detail::as<std::string>(detail::require_field(j, "kind"), "kind"));
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    const int n = detail::as<int>(detail::require_field(j, "vertex_count"), "vertex_count");

    std::vector<Diagonal> diags;
    for (const auto& pair : detail::require_field(j, "diagonals")) {
        const auto uv = detail::as<std::vector<int>>(pair, "diagonals");
        if (uv.size() != 2) throw FormatError("each diagonal must be a pair of vertices");
        diags.emplace_back(uv[0], uv[1]);
    }

    std::vector<int> weights;
    if (j.contains("weights")) {
        if (kind != DissectionKind::coiffee) throw FormatError("only coiffee dissections carry weights");
        const auto& list = j.at("weights");
        if (!list.is_array()) throw FormatError("field 'weights' must be a list");
        weights.assign(list.size(), 0);
        std::vector<bool> seen(list.size(), false);
        for (const auto& item : list) {
            const auto face = detail::as<std::size_t>(detail::require_field(item, "face"), "face");
            if (face >= list.size() || seen[face]) throw FormatError("weights must list each face index once");
            seen[face] = true;
            weights[face] = detail::as<int>(detail::require_field(item, "weight"), "weight");
        }
    } else if (kind == DissectionKind::coiffee) {
        throw FormatError("coiffee dissections need a 'weights' field");
    }

    Dissection d(n, std::move(diags), kind, std::move(weights));
    if (j.contains("labels")) {
        const auto labels = detail::as<std::vector<int>>(j.at("labels"), "labels");
        bool ok = labels.size() == static_cast<std::size_t>(std::max(n, 0));
        for (int v = 0; ok && v < n; ++v) ok = labels[static_cast<std::size_t>(v)] == d.label(v);
        if (!ok) throw FormatError(std::string("labels do not follow the ") + to_string(kind) + " convention");
    }
    return d;
}

inline Dissection parse_dissection(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("not valid JSON: ") + e.what());
    }
    return dissection_from_json(j);
}

inline Json to_json(const SolutionSet& s) {
    Json out;
    out["target"] = s.target.to_string();
    out["n"] = s.n;
    if (s.bound)
        out["bound"] = *s.bound;
    else
        out["bound"] = nullptr;
    Json list = Json::array();
    for (const auto& sol : s.solutions) {
        Json item;
        item["word"] = to_json(sol.word());
        item["sign"] = to_int(sol.sign());
        if (sol.op_b_count) item["op_b_count"] = *sol.op_b_count;
        list.push_back(std::move(item));
    }
    out["solutions"] = std::move(list);
    return out;
}

/// Reads a solution set, re-verifying every word against its target.
inline SolutionSet solution_set_from_json(const Json& j) {
    SolutionSet s;
    try {
        s.target = parse_target(detail::as<std::string>(detail::require_field(j, "target"), "target"));
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    s.n = detail::as<std::size_t>(detail::require_field(j, "n"), "n");
    const auto& bound = detail::require_field(j, "bound");
    if (!bound.is_null()) s.bound = detail::as<Entry>(bound, "bound");
    for (const auto& item : detail::require_field(j, "solutions")) {
        Word w(detail::as<std::vector<Entry>>(detail::require_field(item, "word"), "word"));
        auto sol = Solution::verified(std::move(w), s.target);
        if (to_int(sol.sign()) != detail::as<int>(detail::require_field(item, "sign"), "sign"))
            throw FormatError("recorded sign of " + sol.word().to_string() + " is wrong");
        if (item.contains("op_b_count")) sol.op_b_count = detail::as<std::size_t>(item.at("op_b_count"), "op_b_count");
        s.solutions.push_back(std::move(sol));
    }
    if (!std::is_sorted(s.solutions.begin(), s.solutions.end()))
        throw FormatError("solutions must be listed in lexicographic order");
    return s;
}

inline SolutionSet parse_solution_set(std::string_view text) {
    try {
        return solution_set_from_json(Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("not valid JSON: ") + e.what());
    }
}

}  // namespace sl2comb
