#pragma once

#include "tightmaps/maps/comb_map.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tightmaps {

// Header [2E, has_marks, has_frame], then per half-edge in BFS order:
// alpha image, sigma image, face label, vertex mark, frame flags (1 apex vertex, 2 base).
struct CanonicalCode {
    std::vector<std::int32_t> words;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

    std::string bytes() const {
        std::string s;
        s.reserve(words.size() * 4);
        for (auto w : words)
            for (int i = 3; i >= 0; --i) s.push_back(static_cast<char>((static_cast<std::uint32_t>(w) >> (8 * i)) & 0xff));
        return s;
    }
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto w : c.words) h = (h ^ static_cast<std::uint32_t>(w)) * 1099511628211ull;
        return h;
    }
};

namespace detail {

constexpr int code_header = 3;
constexpr int code_stride = 5;

inline void encode_from_root(const CombMap& m, int root, std::vector<int>& num, std::vector<int>& order,
                             std::vector<std::int32_t>& out) {
    const int n = m.num_half_edges();
    num.assign(n, -1);
    order.clear();
    num[root] = 0;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int h = order[i];
        for (int x : {m.alpha(h), m.sigma(h)})
            if (num[x] < 0) {
                num[x] = static_cast<int>(order.size());
                order.push_back(x);
            }
    }
    const auto& fr = m.frame();
    out.clear();
    out.push_back(n);
    out.push_back(m.has_marks() ? 1 : 0);
    out.push_back(fr ? 1 : 0);
    for (int h : order) {
        out.push_back(num[m.alpha(h)]);
        out.push_back(num[m.sigma(h)]);
        out.push_back(m.face_label(m.face_of(h)));
        out.push_back(static_cast<std::int32_t>(m.mark(m.vertex_of(h))));
        int flags = 0;
        if (fr && m.vertex_of(h) == fr->apex) flags |= 1;
        if (fr && h == fr->base) flags |= 2;
        out.push_back(flags);
    }
}

}  // namespace detail

// Minimum encoding over all roots; invariant under label/mark/frame-preserving
// orientation-preserving isomorphism.
inline CanonicalCode canonical_code(const CombMap& m) {
    CanonicalCode best;
    std::vector<int> num, order;
    std::vector<std::int32_t> cur;
    for (int r = 0; r < m.num_half_edges(); ++r) {
        detail::encode_from_root(m, r, num, order, cur);
        if (best.words.empty() || cur < best.words) best.words = cur;
    }
    return best;
}

// Rebuild the canonical representative (half-edges numbered in BFS order).
inline CombMap decode_canonical(const CanonicalCode& code) {
    const auto& w = code.words;
    if (w.size() < static_cast<std::size_t>(detail::code_header)) throw MalformedMap("code too short");
    const int n = w[0];
    if (n <= 0 || w.size() != static_cast<std::size_t>(detail::code_header + detail::code_stride * n))
        throw MalformedMap("code length mismatch");
    const bool has_marks = w[1] != 0, has_frame = w[2] != 0;
    std::vector<int> alpha(n), sigma(n), label(n), mark(n), flags(n);
    for (int h = 0; h < n; ++h) {
        const auto* p = &w[detail::code_header + detail::code_stride * h];
        alpha[h] = p[0];
        sigma[h] = p[1];
        label[h] = p[2];
        mark[h] = p[3];
        flags[h] = p[4];
    }
    CombMap m(alpha, sigma);
    std::vector<int> labels(static_cast<std::size_t>(m.num_faces()));
    for (int f = 0; f < m.num_faces(); ++f) labels[f] = label[m.face_cycle(f).front()];
    m.set_face_labels(std::move(labels));
    if (has_marks) {
        std::vector<Mark> marks(static_cast<std::size_t>(m.num_vertices()));
        for (int v = 0; v < m.num_vertices(); ++v) marks[v] = static_cast<Mark>(mark[m.vertex_cycle(v).front()]);
        m.set_marks(std::move(marks));
    }
    if (has_frame) {
        SliceFrame fr;
        for (int h = 0; h < n; ++h) {
            if (flags[h] & 1) fr.apex = m.vertex_of(h);
            if (flags[h] & 2) fr.base = h;
        }
        m.set_frame(fr);
    }
    return m;
}

inline CombMap canonical_form(const CombMap& m) { return decode_canonical(canonical_code(m)); }

}  // namespace tightmaps
