#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightmaps {

namespace detail {

// all words with the given letter multiplicities avoiding the factor (first, second)
inline void words_avoiding(const std::string& letters, std::vector<long long> counts, char first, char second,
                           std::string& cur, std::vector<std::string>& out) {
    bool done = true;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (counts[i] == 0) continue;
        done = false;
        char c = letters[i];
        if (!cur.empty() && cur.back() == first && c == second) continue;
        --counts[i];
        cur.push_back(c);
        words_avoiding(letters, counts, first, second, cur, out);
        cur.pop_back();
        ++counts[i];
    }
    if (done) out.push_back(cur);
}

inline std::vector<std::string> words_avoiding(const std::string& letters, const std::vector<long long>& counts,
                                               char first, char second) {
    for (auto c : counts)
        if (c < 0) return {};
    std::vector<std::string> out;
    std::string cur;
    words_avoiding(letters, counts, first, second, cur, out);
    return out;
}

}  // namespace detail

// Decorations of a blossoming vertex of half-degree m read clockwise from its root:
// A attaching point, L leaflet, T twig. m == b is the special vertex (all leaflets).
// With tight == false the TL pattern is allowed.
inline std::vector<std::string> blossom_words(long long b, long long m, long long k, bool tight = true) {
    if (b < 0 || k < 0) throw std::invalid_argument("blossom_words: need b, k >= 0");
    if (m < 1) return {};
    if (m == b) return k == 0 ? std::vector<std::string>{std::string(static_cast<std::size_t>(2 * b - 1), 'L')}
                              : std::vector<std::string>{};
    if (m < b + 1) return {};
    return detail::words_avoiding("ALT", {k, m + b - k, m - b - 1}, tight ? 'T' : 0, tight ? 'L' : 0);
}

inline std::uint64_t enumerate_blossom_words(long long b, long long m, long long k) {
    return blossom_words(b, m, k).size();
}

// M marked down, D down, U up; k M's, m-c-1-k D's, m+c U's, no UD
inline std::vector<std::string> mdu_words(long long c, long long m, long long k) {
    if (c < 0 || k < 0) throw std::invalid_argument("mdu_words: need c, k >= 0");
    if (m < c + 1) return {};
    return detail::words_avoiding("MDU", {k, m - c - 1 - k, m + c}, 'U', 'D');
}

inline std::uint64_t enumerate_mdu_words(long long c, long long m, long long k) { return mdu_words(c, m, k).size(); }

}  // namespace tightmaps
