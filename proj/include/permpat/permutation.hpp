#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permpat/errors.hpp"

namespace permpat {

namespace detail {

/// True iff values is a rearrangement of 1..values.size().
inline bool is_rearrangement(std::span<const int> values) {
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

inline std::vector<int> parse_comma_values(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        // trim spaces
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty())
            throw Error("empty entry in value list '" + std::string(text) + "'");
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw Error("bad integer '" + std::string(token) + "' in value list");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::string format_comma_values(std::span<const int> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace detail

/// A permutation of 1..n in one-line notation. The empty permutation (n = 0)
/// is allowed.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        if (!detail::is_rearrangement(values_))
            throw Error("permutation values must be a rearrangement of 1..n");
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    /// Parses comma-separated one-line notation, e.g. "2,3,1,4".
    /// An empty string parses as the empty permutation.
    static Permutation parse(std::string_view text) {
        if (text.empty()) return Permutation();
        return Permutation(detail::parse_comma_values(text));
    }

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    std::span<const int> span() const { return values_; }

    /// Value at 1-based position.
    int at(int pos) const { return values_.at(static_cast<std::size_t>(pos) - 1); }

    /// Maps every value v to n+1-v.
    Permutation complement() const {
        std::vector<int> v(values_.size());
        const int n = size();
        for (std::size_t i = 0; i < values_.size(); ++i) v[i] = n + 1 - values_[i];
        Permutation out;
        out.values_ = std::move(v); // complement of a permutation is a permutation
        return out;
    }

    std::string str() const { return detail::format_comma_values(values_); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(),
                                                      b.values_.begin(), b.values_.end());
    }

private:
    std::vector<int> values_;
};

/// A short permutation used as a containment template; k >= 1.
class Pattern {
public:
    explicit Pattern(std::vector<int> values) : values_(std::move(values)) {
        if (values_.empty()) throw Error("pattern must have length >= 1");
        if (!detail::is_rearrangement(values_))
            throw Error("pattern values must be a rearrangement of 1..k");
    }

    /// Accepts compact digit form ("132", length <= 9) or comma form ("1,3,2").
    static Pattern parse(std::string_view text) {
        if (text.empty()) throw Error("pattern must have length >= 1");
        const bool compact = text.find(',') == std::string_view::npos &&
                             text.size() <= 9 &&
                             std::all_of(text.begin(), text.end(),
                                         [](char c) { return c >= '1' && c <= '9'; });
        if (compact) {
            std::vector<int> v;
            v.reserve(text.size());
            for (char c : text) v.push_back(c - '0');
            return Pattern(std::move(v));
        }
        return Pattern(detail::parse_comma_values(text));
    }

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    std::span<const int> span() const { return values_; }
    int at(int pos) const { return values_.at(static_cast<std::size_t>(pos) - 1); }

    Pattern complement() const {
        std::vector<int> v(values_.size());
        const int k = size();
        for (std::size_t i = 0; i < values_.size(); ++i) v[i] = k + 1 - values_[i];
        return Pattern(std::move(v));
    }

    /// Compact digit form when k <= 9, comma form otherwise.
    std::string str() const {
        if (size() <= 9) {
            std::string out;
            for (int v : values_) out += static_cast<char>('0' + v);
            return out;
        }
        return detail::format_comma_values(values_);
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern& a, const Pattern& b) {
        return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(),
                                                      b.values_.begin(), b.values_.end());
    }

private:
    std::vector<int> values_;
};

/// Positions (1-based, strictly increasing) of one pattern occurrence.
struct Occurrence {
    std::vector<int> positions;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

} // namespace permpat
