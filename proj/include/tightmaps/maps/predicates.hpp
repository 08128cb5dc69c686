#pragma once

#include "tightmaps/maps/comb_map.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tightmaps {

namespace detail {

// BFS distances from src, optionally ignoring one edge
inline std::vector<int> bfs_distances(const CombMap& m, int src, int skip_edge = -1) {
    std::vector<int> dist(static_cast<std::size_t>(m.num_vertices()), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int h : m.vertex_cycle(v)) {
            if (m.edge_of(h) == skip_edge) continue;
            int w = m.head(h);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

inline std::vector<int> face_edge_set(const CombMap& m, int f) {
    std::vector<int> es;
    for (int h : m.face_cycle(f)) es.push_back(m.edge_of(h));
    std::sort(es.begin(), es.end());
    return es;
}

}  // namespace detail

// Shortest cycle length; nullopt for trees.
inline std::optional<int> girth(const CombMap& m) {
    std::optional<int> best;
    for (int h = 0; h < m.num_half_edges(); ++h) {
        if (h > m.alpha(h)) continue;
        int u = m.tail(h), v = m.head(h);
        int len;
        if (u == v) {
            len = 1;
        } else {
            auto dist = detail::bfs_distances(m, u, m.edge_of(h));
            if (dist[v] < 0) continue;  // bridge
            len = dist[v] + 1;
        }
        if (!best || len < *best) best = len;
    }
    return best;
}

inline bool is_tight(const CombMap& m) {
    for (int v = 0; v < m.num_vertices(); ++v)
        if (m.degree(v) == 1 && m.mark(v) == Mark::None) return false;
    return true;
}

// Simple cycles with at most max_len edges, each reported once as its edge sequence.
// Representative: starts at its smallest vertex, first edge id below last edge id.
inline std::vector<std::vector<int>> simple_cycles(const CombMap& m, int max_len) {
    std::vector<std::vector<int>> out;
    if (max_len < 1) return out;
    std::vector<char> on_path(static_cast<std::size_t>(m.num_vertices()), 0);
    std::vector<char> edge_used(static_cast<std::size_t>(m.num_edges()), 0);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int h : m.vertex_cycle(v)) {
            int e = m.edge_of(h);
            if (edge_used[e]) continue;
            int w = m.head(h);
            if (w == start) {
                if (path.empty() ? h < m.alpha(h) : path.front() < e) {
                    path.push_back(e);
                    out.push_back(path);
                    path.pop_back();
                }
            } else if (w > start && !on_path[w] && static_cast<int>(path.size()) + 1 < max_len) {
                on_path[w] = 1;
                edge_used[e] = 1;
                path.push_back(e);
                self(self, start, w);
                path.pop_back();
                edge_used[e] = 0;
                on_path[w] = 0;
            }
        }
    };
    for (int s = 0; s < m.num_vertices(); ++s) {
        on_path[s] = 1;
        dfs(dfs, s, s);
        on_path[s] = 0;
    }
    return out;
}

// Girth >= 2b and every 2b-cycle bounds a face. excluded_face, if set, does not count as a contour.
inline bool is_irreducible(const CombMap& m, long long b, int excluded_face = -1) {
    if (b < 1) throw std::invalid_argument("is_irreducible: b must be at least 1");
    const int d = static_cast<int>(2 * b);
    auto g = girth(m);
    if (g && *g < d) return false;
    std::vector<std::vector<int>> contours;
    for (int f = 0; f < m.num_faces(); ++f)
        if (f != excluded_face && m.face_degree(f) == d) contours.push_back(detail::face_edge_set(m, f));
    for (auto c : simple_cycles(m, d)) {
        if (static_cast<int>(c.size()) != d) continue;
        std::sort(c.begin(), c.end());
        if (std::find(contours.begin(), contours.end(), c) == contours.end()) return false;
    }
    return true;
}

// Whether the given edge set separates faces f1 and f2 (dual connectivity without those edges).
inline bool separates(const CombMap& m, const std::vector<int>& cycle_edges, int f1, int f2) {
    std::vector<char> cut(static_cast<std::size_t>(m.num_edges()), 0);
    for (int e : cycle_edges) cut[e] = 1;
    std::vector<int> parent(static_cast<std::size_t>(m.num_faces()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int h = 0; h < m.num_half_edges(); ++h) {
        if (cut[m.edge_of(h)]) continue;
        parent[find(m.face_of(h))] = find(m.face_of(m.alpha(h)));
    }
    return find(f1) != find(f2);
}

inline int face_index_for_label(const CombMap& m, int label) {
    int f = m.face_with_label(label);
    if (f < 0) throw std::invalid_argument("no face with label " + std::to_string(label));
    return f;
}

// Minimal length of a cycle separating the faces with the two labels.
inline int separating_girth(const CombMap& m, int label1, int label2) {
    if (label1 == label2) throw std::invalid_argument("separating_girth: faces must differ");
    int f1 = face_index_for_label(m, label1), f2 = face_index_for_label(m, label2);
    std::optional<int> best;
    for (const auto& c : simple_cycles(m, m.num_edges())) {
        int len = static_cast<int>(c.size());
        if (best && len >= *best) continue;
        if (separates(m, c, f1, f2)) best = len;
    }
    if (!best) throw std::domain_error("separating_girth: no separating cycle");
    return *best;
}

// 2b-irreducibility imposed on cycles not separating the two labeled faces
inline bool is_essentially_irreducible(const CombMap& m, long long b, int label1, int label2) {
    const int d = static_cast<int>(2 * b);
    int f1 = face_index_for_label(m, label1), f2 = face_index_for_label(m, label2);
    std::vector<std::vector<int>> contours;
    for (int f = 0; f < m.num_faces(); ++f)
        if (m.face_degree(f) == d) contours.push_back(detail::face_edge_set(m, f));
    for (auto c : simple_cycles(m, d)) {
        if (separates(m, c, f1, f2)) continue;
        if (static_cast<int>(c.size()) < d) return false;
        std::sort(c.begin(), c.end());
        if (std::find(contours.begin(), contours.end(), c) == contours.end()) return false;
    }
    return true;
}

}  // namespace tightmaps
