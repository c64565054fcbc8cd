#pragma once

#include "integer.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2comb {

struct UncheckedTag {};
inline constexpr UncheckedTag unchecked{};

/// 2x2 integer matrix [[a, b], [c, d]] of determinant 1.
///
/// The determinant is checked by the public constructor. Products, inverses
/// and negations of unimodular matrices stay unimodular, so they use the
/// unchecked path. The swap matrix K (det -1) is the only value built
/// without the check; see `swap()`.
template <class Int>
class BasicMatrix {
public:
    BasicMatrix() : a_(1), b_(0), c_(0), d_(1) {}

    BasicMatrix(Int a, Int b, Int c, Int d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (det() != Int(1))
            throw std::invalid_argument("matrix " + to_string() + " does not have determinant 1");
    }

    BasicMatrix(UncheckedTag, Int a, Int b, Int c, Int d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static BasicMatrix identity() { return {}; }
    static BasicMatrix S() { return {unchecked, Int(0), Int(-1), Int(1), Int(0)}; }
    static BasicMatrix T() { return {unchecked, Int(1), Int(1), Int(0), Int(1)}; }
    static BasicMatrix T_inverse() { return {unchecked, Int(1), Int(-1), Int(0), Int(1)}; }
    /// K = [[0,1],[1,0]], determinant -1. Only meaningful as a conjugator.
    static BasicMatrix swap() { return {unchecked, Int(0), Int(1), Int(1), Int(0)}; }

    /// The word letter M(x) = [[x, -1], [1, 0]].
    static BasicMatrix letter(const Int& x) { return {unchecked, x, Int(-1), Int(1), Int(0)}; }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int det() const { return a_ * d_ - b_ * c_; }
    Int trace() const { return a_ + d_; }

    /// Inverse of a determinant-1 matrix.
    BasicMatrix inverse() const { return {unchecked, d_, -b_, -c_, a_}; }

    /// K M K, i.e. swap both rows and columns.
    BasicMatrix swap_conjugate() const { return {unchecked, d_, c_, b_, a_}; }

    BasicMatrix operator-() const { return {unchecked, -a_, -b_, -c_, -d_}; }

    friend BasicMatrix operator*(const BasicMatrix& x, const BasicMatrix& y) {
        return {unchecked, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
    }

    /// Left-multiplies by the letter M(x); cheaper than a full product.
    BasicMatrix times_letter_on_left(const Int& x) const {
        return {unchecked, x * a_ - c_, x * b_ - d_, a_, b_};
    }

    friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

    /// `a,b;c,d`
    std::string to_string() const {
        std::ostringstream os;
        os << a_ << ',' << b_ << ';' << c_ << ',' << d_;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicMatrix& m) { return os << m.to_string(); }

private:
    Int a_, b_, c_, d_;
};

using Matrix = BasicMatrix<BigInt>;
using FastMatrix = BasicMatrix<CheckedInt>;

template <class To, class From>
BasicMatrix<To> matrix_cast(const BasicMatrix<From>& m) {
    return {unchecked, detail::narrow<To>(detail::widen(m.a())), detail::narrow<To>(detail::widen(m.b())),
            detail::narrow<To>(detail::widen(m.c())), detail::narrow<To>(detail::widen(m.d()))};
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline BigInt parse_bigint(std::string_view s) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    for (char ch : digits)
        if (ch < '0' || ch > '9') throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
}

}  // namespace detail

/// Parses `a,b;c,d`. Throws std::invalid_argument on malformed text or a
/// determinant other than 1.
inline Matrix parse_matrix(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
        throw std::invalid_argument("matrix must look like 'a,b;c,d'");
    auto row = [](std::string_view r) {
        const auto comma = r.find(',');
        if (comma == std::string_view::npos || r.find(',', comma + 1) != std::string_view::npos)
            throw std::invalid_argument("matrix row must look like 'x,y'");
        return std::pair{detail::parse_bigint(r.substr(0, comma)), detail::parse_bigint(r.substr(comma + 1))};
    };
    auto [a, b] = row(text.substr(0, semi));
    auto [c, d] = row(text.substr(semi + 1));
    return Matrix(std::move(a), std::move(b), std::move(c), std::move(d));
}

/// Names used when printing evaluation results: ±Id, ±S, ±T, ±T⁻¹.
inline std::optional<std::string> recognize(const Matrix& m) {
    struct Named {
        const char* name;
        Matrix value;
    };
    const Named table[] = {
        {"Id", Matrix::identity()}, {"S", Matrix::S()}, {"T", Matrix::T()}, {"T^-1", Matrix::T_inverse()}};
    for (const auto& [name, value] : table) {
        if (m == value) return std::string(name);
        if (m == -value) return "-" + std::string(name);
    }
    return std::nullopt;
}

}  // namespace sl2comb
