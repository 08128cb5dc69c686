#pragma once

#include "tightmaps/counts/formulas.hpp"
#include "tightmaps/maps/canonical.hpp"
#include "tightmaps/maps/comb_map.hpp"
#include "tightmaps/maps/predicates.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tightmaps {

struct LimitError : std::length_error {
    using std::length_error::length_error;
};

struct EnumOptions {
    int max_edges = 8;
    unsigned threads = 1;
    std::vector<int> labels;  // per polygon; default 1..n
};

struct EnumStats {
    std::uint64_t matchings = 0;       // leaves of the matching search
    std::uint64_t planar_gluings = 0;  // connected genus-0 leaves
};

namespace detail {

inline void check_edge_limit(long long edges, int limit, const char* what) {
    if (edges > limit)
        throw LimitError(std::string(what) + ": " + std::to_string(edges) + " edges exceeds the exhaustive limit of " +
                         std::to_string(limit) + " (raise max_edges to override)");
}

class GluingSearch {
public:
    explicit GluingSearch(const std::vector<long long>& half_degrees) {
        int h = 0;
        for (std::size_t i = 0; i < half_degrees.size(); ++i) {
            if (half_degrees[i] < 1) throw std::invalid_argument("enumerate_maps: half-degrees must be positive");
            int start = h;
            int len = static_cast<int>(2 * half_degrees[i]);
            for (int j = 0; j < len; ++j) {
                phi_.push_back(start + (j + 1) % len);
                polygon_.push_back(static_cast<int>(i));
            }
            h += len;
        }
        n_ = h;
        faces_ = static_cast<int>(half_degrees.size());
        alpha_.assign(n_, -1);
    }

    int num_half_edges() const { return n_; }

    // visit(alpha, sigma) for every connected genus-0 gluing; first_partner restricts side 0
    template <class Visit>
    void run(int first_partner, EnumStats& stats, Visit&& visit) {
        if (first_partner >= 0) {
            alpha_[0] = first_partner;
            alpha_[first_partner] = 0;
            recurse(stats, visit);
            alpha_[0] = alpha_[first_partner] = -1;
        } else {
            recurse(stats, visit);
        }
    }

private:
    template <class Visit>
    void recurse(EnumStats& stats, Visit& visit) {
        int s = 0;
        while (s < n_ && alpha_[s] >= 0) ++s;
        if (s == n_) {
            leaf(stats, visit);
            return;
        }
        for (int t = s + 1; t < n_; ++t) {
            if (alpha_[t] >= 0) continue;
            alpha_[s] = t;
            alpha_[t] = s;
            recurse(stats, visit);
            alpha_[s] = alpha_[t] = -1;
        }
    }

    template <class Visit>
    void leaf(EnumStats& stats, Visit& visit) {
        ++stats.matchings;
        // connectivity over polygons
        std::vector<int> parent(static_cast<std::size_t>(faces_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int comps = faces_;
        for (int h = 0; h < n_; ++h) {
            int a = find(polygon_[h]), b = find(polygon_[alpha_[h]]);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        if (comps != 1) return;
        sigma_.resize(n_);
        for (int h = 0; h < n_; ++h) sigma_[h] = phi_[alpha_[h]];
        seen_.assign(n_, 0);
        int v = 0;
        for (int h = 0; h < n_; ++h) {
            if (seen_[h]) continue;
            ++v;
            for (int x = h; !seen_[x]; x = sigma_[x]) seen_[x] = 1;
        }
        if (v - n_ / 2 + faces_ != 2) return;
        ++stats.planar_gluings;
        visit(alpha_, sigma_);
    }

    int n_ = 0, faces_ = 0;
    std::vector<int> phi_, polygon_, alpha_, sigma_;
    std::vector<char> seen_;
};

inline std::vector<int> default_labels(const std::vector<long long>& half_degrees, const EnumOptions& opt) {
    if (!opt.labels.empty()) {
        if (opt.labels.size() != half_degrees.size()) throw std::invalid_argument("enumerate_maps: label count mismatch");
        return opt.labels;
    }
    std::vector<int> l(half_degrees.size());
    std::iota(l.begin(), l.end(), 1);
    return l;
}

}  // namespace detail

// One representative per isomorphism class, sorted by canonical code.
inline std::vector<CombMap> enumerate_maps(const std::vector<long long>& half_degrees, const EnumOptions& opt = {},
                                           EnumStats* stats_out = nullptr) {
    if (half_degrees.empty()) throw std::invalid_argument("enumerate_maps: need at least one face");
    long long edges = 0;
    for (auto m : half_degrees) edges += m;
    detail::check_edge_limit(edges, opt.max_edges, "enumerate_maps");
    const auto labels = detail::default_labels(half_degrees, opt);

    using Table = std::map<CanonicalCode, CombMap>;
    auto collect = [&](Table& table, EnumStats& st, int first_partner) {
        detail::GluingSearch search(half_degrees);
        search.run(first_partner, st, [&](const std::vector<int>& alpha, const std::vector<int>& sigma) {
            CombMap m(alpha, sigma);
            m.set_face_labels(labels);  // polygon i is face i
            auto code = canonical_code(m);
            table.try_emplace(std::move(code), std::move(m));
        });
    };

    const int n = static_cast<int>(2 * edges);
    Table merged;
    EnumStats total;
    const unsigned threads = std::max(1u, opt.threads);
    if (threads == 1 || n <= 2) {
        collect(merged, total, -1);
    } else {
        std::vector<Table> tables(threads);
        std::vector<EnumStats> st(threads);
        std::atomic<int> next{1};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (int t = next++; t < n; t = next++) collect(tables[w], st[w], t);
            });
        for (auto& th : pool) th.join();
        for (unsigned w = 0; w < threads; ++w) {
            total.matchings += st[w].matchings;
            total.planar_gluings += st[w].planar_gluings;
            for (auto& [code, m] : tables[w]) merged.try_emplace(code, std::move(m));
        }
    }
    if (stats_out) *stats_out = total;
    std::vector<CombMap> out;
    out.reserve(merged.size());
    for (auto& [code, m] : merged) {
        if (m.face_degrees_by_label().size() != half_degrees.size() || genus(m) != 0)
            throw std::logic_error("enumerate_maps: generated map violates invariants");
        out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<CombMap> enumerate_maps(const FaceSpec& spec, const EnumOptions& opt = {}) {
    return enumerate_maps(spec.half_degrees, opt);
}

inline std::uint64_t count_tight_irreducible(const std::vector<CombMap>& maps, long long b) {
    std::uint64_t c = 0;
    for (const auto& m : maps)
        if (is_tight(m) && is_irreducible(m, b)) ++c;
    return c;
}

inline std::uint64_t count_tight_irreducible(const FaceSpec& spec, const EnumOptions& opt = {}) {
    if (spec.b < 1) throw std::invalid_argument("count_tight_irreducible: b must be at least 1");
    return count_tight_irreducible(enumerate_maps(spec.half_degrees, opt), spec.b);
}

}  // namespace tightmaps
