#pragma once

#include "integer.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sl2comb {

/// The sign ε in M_n(a) = ε M.
enum class Sign : int { plus = 1, minus = -1 };

constexpr Sign operator*(Sign x, Sign y) {
    return static_cast<int>(x) == static_cast<int>(y) ? Sign::plus : Sign::minus;
}
constexpr Sign operator-(Sign x) { return x == Sign::plus ? Sign::minus : Sign::plus; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign sign_of_parity(std::size_t odd_count) { return odd_count % 2 == 0 ? Sign::plus : Sign::minus; }

inline std::string to_string(Sign s) { return s == Sign::plus ? "+1" : "-1"; }

inline Sign sign_from_int(int v) {
    if (v == 1) return Sign::plus;
    if (v == -1) return Sign::minus;
    throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(v));
}

template <class Int>
BasicMatrix<Int> operator*(Sign s, const BasicMatrix<Int>& m) {
    return s == Sign::plus ? m : -m;
}

/// Finite integer sequence (a_1, ..., a_n). Public positions are 1-based.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Entry> entries) : entries_(entries) {}
    explicit Word(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// 1-based access.
    Entry at(std::size_t position) const {
        if (position < 1 || position > entries_.size())
            throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                                    std::to_string(entries_.size()));
        return entries_[position - 1];
    }

    /// 0-based access, for internal loops.
    Entry operator[](std::size_t i) const { return entries_[i]; }

    std::span<const Entry> entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_positive() const {
        return std::all_of(entries_.begin(), entries_.end(), [](Entry e) { return e >= 1; });
    }

    Entry sum() const {
        Entry s = 0;
        for (Entry e : entries_) s = detail::checked_add(s, e);
        return s;
    }

    bool contains(Entry value) const { return std::find(entries_.begin(), entries_.end(), value) != entries_.end(); }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[i]);
        }
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Entry> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '(' << w.to_string() << ')'; }

/// Parses `1,1,2,1,1`. The empty string is the empty word.
inline Word parse_word(std::string_view text) {
    text = detail::trim(text);
    std::vector<Entry> entries;
    if (text.empty()) return Word{};
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = detail::trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        Entry value{};
        const char* first = token.data();
        const char* last = token.data() + token.size();
        if (!token.empty() && *first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc{} || ptr != last)
            throw std::invalid_argument("malformed word entry '" + std::string(token) + "'");
        entries.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Word(std::move(entries));
}

inline void require_positive(const Word& w, const char* what) {
    if (!w.is_positive())
        throw std::invalid_argument(std::string(what) + ": word " + w.to_string() + " has a non-positive entry");
}

}  // namespace sl2comb
