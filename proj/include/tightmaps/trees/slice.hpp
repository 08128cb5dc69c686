#pragma once

#include "tightmaps/maps/canonical.hpp"
#include "tightmaps/maps/comb_map.hpp"
#include "tightmaps/maps/enumerate.hpp"
#include "tightmaps/maps/predicates.hpp"

#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

namespace tightmaps {

struct SliceCheck {
    bool ok = false;
    bool empty = false;  // the empty slice, accepted but flagged
    int red = -1, blue = -1;
    std::string reason;
};

namespace detail {

// distances and number of shortest paths (capped at 2) from src
inline std::pair<std::vector<int>, std::vector<int>> bfs_with_counts(const CombMap& m, int src) {
    std::vector<int> dist(static_cast<std::size_t>(m.num_vertices()), -1), ways(dist.size(), 0);
    std::deque<int> q{src};
    dist[src] = 0;
    ways[src] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int h : m.vertex_cycle(v)) {
            int w = m.head(h);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
            if (dist[w] == dist[v] + 1) ways[w] = std::min(2, ways[w] + ways[v]);
        }
    }
    return {std::move(dist), std::move(ways)};
}

}  // namespace detail

// 0-slice axioms for the map's frame: the outer face is the face to the right of the base
// B->C; its contour reads base, red boundary C..A, blue boundary A..B.
inline SliceCheck validate_slice(const CombMap& m, long long b) {
    SliceCheck r;
    auto fail = [&](std::string why) {
        r.ok = false;
        r.reason = std::move(why);
        return r;
    };
    if (!m.frame()) return fail("no apex/base frame");
    if (genus(m) != 0) return fail("not planar");
    const int base = m.frame()->base, apex = m.frame()->apex;
    const int outer = m.face_of(base);
    const auto& fc = m.face_cycle(outer);
    const int L = static_cast<int>(fc.size());
    std::vector<int> walk{base};
    for (int i = 1; i <= L; ++i) walk.push_back(m.phi(walk.back()));
    const int B = m.tail(base), C = m.head(base);
    int j = -1;
    for (int i = 1; i <= L; ++i)
        if (m.tail(walk[i]) == apex) {
            j = i;
            break;
        }
    if (j < 0) return fail("apex not on the outer contour after the base");
    r.red = j - 1;
    r.blue = L - j;
    if (r.blue - r.red == -1) return fail("trivial slice");
    if (r.blue - r.red != 1) return fail("boundary lengths differ by " + std::to_string(r.blue - r.red));
    if (m.num_edges() == 1) {
        r.empty = true;
        r.ok = true;
        return r;
    }
    if (m.num_faces() == 1) return fail("no inner face");
    auto [dA, waysA] = detail::bfs_with_counts(m, apex);
    if (dA[B] != r.blue) return fail("blue boundary is not a geodesic");
    if (dA[C] != r.red) return fail("red boundary is not a geodesic");
    if (waysA[C] != 1) return fail("red boundary is not the unique geodesic");
    std::set<int> red_vertices, blue_vertices;
    for (int i = 1; i <= r.red; ++i) red_vertices.insert(m.tail(walk[i]));
    red_vertices.insert(apex);
    for (int i = j; i < L; ++i) blue_vertices.insert(m.tail(walk[i]));
    blue_vertices.insert(B);
    for (int v : red_vertices)
        if (v != apex && blue_vertices.count(v)) return fail("blue and red boundaries meet away from the apex");
    if (static_cast<int>(red_vertices.size()) != r.red + 1 || static_cast<int>(blue_vertices.size()) != r.blue + 1)
        return fail("boundary is not a simple path");
    if (!is_irreducible(m, b, outer)) return fail("not 2b-irreducible with respect to inner faces");
    if (!is_tight(m)) return fail("has a leaf");
    r.ok = true;
    return r;
}

// Tight 2b-irreducible 0-slices with inner faces labeled 1..n of half-degrees ms, by
// exhaustive map enumeration (outer face labeled 0 of degree 2l+2).
inline std::uint64_t count_slices_by_maps(long long b, const std::vector<long long>& ms, int max_edges = 8) {
    long long total = 0;
    for (auto m : ms) total += m;
    std::set<CanonicalCode> seen;
    // the blue boundary has length l+1 <= number of inner-face edges
    for (long long l = 0; l <= std::max<long long>(0, total - 1); ++l) {
        std::vector<long long> faces{l + 1};
        faces.insert(faces.end(), ms.begin(), ms.end());
        EnumOptions opt;
        opt.max_edges = max_edges;
        opt.labels.push_back(0);
        for (std::size_t i = 0; i < ms.size(); ++i) opt.labels.push_back(static_cast<int>(i) + 1);
        for (const auto& map : enumerate_maps(faces, opt)) {
            const int outer = map.face_with_label(0);
            for (int h : map.face_cycle(outer)) {
                int apex = h;
                for (long long s = 0; s <= l; ++s) apex = map.phi(apex);
                CombMap framed = map;
                framed.set_frame(SliceFrame{map.tail(apex), h});
                auto chk = validate_slice(framed, b);
                if (chk.ok && !chk.empty) seen.insert(canonical_code(framed));
            }
        }
    }
    return seen.size();
}

}  // namespace tightmaps
