#pragma once

#include "tightmaps/maps/canonical.hpp"
#include "tightmaps/maps/comb_map.hpp"
#include "tightmaps/maps/enumerate.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

namespace tightmaps {

struct PlaneTree {
    std::vector<PlaneTree> kids;  // counterclockwise
};

// all plane forests with the given number of edges
inline const std::vector<std::vector<PlaneTree>>& plane_forests(int edges) {
    // deque: references handed out stay valid while other callers extend the memo
    static std::deque<std::vector<std::vector<PlaneTree>>> memo{{{}}};
    static std::mutex mu;
    std::lock_guard lock(mu);
    while (static_cast<int>(memo.size()) <= edges) {
        const int j = static_cast<int>(memo.size());
        std::vector<std::vector<PlaneTree>> all;
        for (int s = 1; s <= j; ++s)
            for (const auto& inner : memo[s - 1])
                for (const auto& rest : memo[j - s]) {
                    std::vector<PlaneTree> f{PlaneTree{inner}};
                    f.insert(f.end(), rest.begin(), rest.end());
                    all.push_back(std::move(f));
                }
        memo.push_back(std::move(all));
    }
    return memo[edges];
}

namespace detail {

struct RotationBuilder {
    std::vector<std::vector<int>> rot;
    std::vector<int> alpha;

    int vertex() {
        rot.emplace_back();
        return static_cast<int>(rot.size()) - 1;
    }
    // returns the two half-edges; neither is placed in a rotation yet
    std::pair<int, int> edge() {
        int h = static_cast<int>(alpha.size());
        alpha.push_back(h + 1);
        alpha.push_back(h);
        return {h, h + 1};
    }
    void hang(int v, const std::vector<PlaneTree>& forest) {
        for (const auto& t : forest) {
            int u = vertex();
            auto [hv, hu] = edge();
            rot[v].push_back(hv);
            rot[u].push_back(hu);
            hang(u, t.kids);
        }
    }
    CombMap build() const {
        std::vector<int> sigma(alpha.size());
        for (const auto& r : rot)
            for (std::size_t j = 0; j < r.size(); ++j) sigma[r[j]] = r[(j + 1) % r.size()];
        return CombMap(alpha, sigma);
    }
};

template <class F>
void weak_compositions(int total, int parts, std::vector<int>& cur, F&& f) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        f(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= total; ++x) {
        cur.push_back(x);
        weak_compositions(total - x, parts, cur, f);
        cur.pop_back();
    }
}

}  // namespace detail

// Unmarked two-face maps with a cycle of length 2d; face 1 inside, face 2 outside.
inline std::vector<CombMap> two_face_maps(long long m1, long long m2, long long d) {
    if (d < 1 || d > std::min(m1, m2)) return {};
    const int n_corners = static_cast<int>(2 * d);
    std::map<CanonicalCode, CombMap> classes;
    std::vector<int> in_c, out_c;
    detail::weak_compositions(static_cast<int>(m1 - d), n_corners, in_c, [&](const std::vector<int>& in_sizes) {
        detail::weak_compositions(static_cast<int>(m2 - d), n_corners, out_c, [&](const std::vector<int>& out_sizes) {
            // iterate over forest choices for every corner (odometer)
            std::vector<std::size_t> idx(2 * n_corners, 0);
            auto forests = [&](int slot) -> const std::vector<std::vector<PlaneTree>>& {
                return plane_forests(slot < n_corners ? in_sizes[slot] : out_sizes[slot - n_corners]);
            };
            while (true) {
                detail::RotationBuilder rb;
                std::vector<int> vs;
                for (int i = 0; i < n_corners; ++i) vs.push_back(rb.vertex());
                std::vector<int> fwd(n_corners), bwd(n_corners);
                for (int i = 0; i < n_corners; ++i) {
                    auto [a, b] = rb.edge();
                    fwd[i] = a;
                    bwd[(i + 1) % n_corners] = b;
                }
                for (int i = 0; i < n_corners; ++i) {
                    rb.rot[vs[i]].push_back(fwd[i]);
                    rb.hang(vs[i], forests(i)[idx[i]]);
                    rb.rot[vs[i]].push_back(bwd[i]);
                    rb.hang(vs[i], forests(n_corners + i)[idx[n_corners + i]]);
                }
                CombMap m = rb.build();
                if (m.num_faces() != 2 || genus(m) != 0) throw std::logic_error("two_face_maps: bad construction");
                int outer = m.face_of(fwd[0]);
                std::vector<int> labels(2);
                labels[outer] = 2;
                labels[1 - outer] = 1;
                m.set_face_labels(labels);
                if (m.face_degree(1 - outer) != 2 * m1 || m.face_degree(outer) != 2 * m2)
                    throw std::logic_error("two_face_maps: face degrees do not match");
                classes.try_emplace(canonical_code(m), std::move(m));
                int s = 0;
                while (s < 2 * n_corners && ++idx[s] == forests(s).size()) idx[s++] = 0;
                if (s == 2 * n_corners) break;
            }
        });
    });
    std::vector<CombMap> out;
    for (auto& [c, m] : classes) out.push_back(std::move(m));
    return out;
}

// d -> number of two-face maps with k+1 marked vertices (one distinguished), all leaves marked
inline std::map<long long, std::uint64_t> enumerate_two_face_marked(long long m1, long long m2, long long k,
                                                                    long long max_half_sum = 10) {
    if (m1 < 1 || m2 < 1 || k < 0) throw std::invalid_argument("enumerate_two_face_marked: need m1, m2 >= 1, k >= 0");
    detail::check_edge_limit(m1 + m2, static_cast<int>(max_half_sum), "enumerate_two_face_marked");
    std::map<long long, std::uint64_t> table;
    for (long long d = 1; d <= std::min(m1, m2); ++d) {
        std::set<CanonicalCode> seen;
        for (const auto& base : two_face_maps(m1, m2, d)) {
            const int V = base.num_vertices();
            if (k + 1 > V) continue;
            unsigned leaves = 0;
            for (int v = 0; v < V; ++v)
                if (base.degree(v) == 1) leaves |= 1u << v;
            for (unsigned set = 0; set < (1u << V); ++set) {
                if ((set & leaves) != leaves || std::popcount(set) != k + 1) continue;
                for (int dist = 0; dist < V; ++dist) {
                    if (!(set >> dist & 1u)) continue;
                    CombMap m = base;
                    std::vector<Mark> marks(static_cast<std::size_t>(V), Mark::None);
                    for (int v = 0; v < V; ++v)
                        if (set >> v & 1u) marks[v] = v == dist ? Mark::Distinguished : Mark::Marked;
                    m.set_marks(std::move(marks));
                    seen.insert(canonical_code(m));
                }
            }
        }
        table[d] = seen.size();
    }
    return table;
}

}  // namespace tightmaps
