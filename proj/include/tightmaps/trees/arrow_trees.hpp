#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tightmaps {

// Simplified b-arrow trees of excess p with n attaching points, as text:
//   tree  := '@' | 'P(' child (',' child)* ')'
//   child := arrows ':' tree
// '@' is an attaching point (b-1 arrows next to it); 'P(..)' below a child is reached
// through a bioriented edge-vertex. The root edge-vertex (b-p arrows) is implicit.
class ArrowTreeGenerator {
public:
    explicit ArrowTreeGenerator(long long b) : b_(b) {
        if (b < 2) throw std::invalid_argument("arrow trees need b >= 2");
    }

    // excess p, n attaching points; the degenerate '@' only when p == b-1 and n == 1
    const std::vector<std::string>& trees(long long p, long long n) {
        auto key = std::make_pair(p, n);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<std::string> out;
        if (p == b_ - 1 && n == 1) out.push_back("@");
        for (auto& seq : children(p + 1, n)) out.push_back("P(" + seq + ")");
        return memo_[key] = std::move(out);
    }

private:
    // ordered child sequences with arrows summing to s and n attaching points in total
    std::vector<std::string> children(long long s, long long n) {
        std::vector<std::string> out;
        if (s == 0 || n <= 0) return out;
        for (long long a = 1; a <= std::min(s, b_ - 1); ++a)
            for (long long n1 = 1; n1 <= n; ++n1) {
                std::vector<std::string> rests;
                if (s == a) {
                    if (n1 != n) continue;
                    rests.emplace_back();
                } else {
                    rests = children(s - a, n - n1);
                    if (rests.empty()) continue;
                }
                const auto& firsts = trees(a, n1);
                for (const auto& f : firsts)
                    for (const auto& r : rests) out.push_back(std::to_string(a) + ":" + f + (r.empty() ? "" : "," + r));
            }
        return out;
    }

    long long b_;
    std::map<std::pair<long long, long long>, std::vector<std::string>> memo_;
};

inline std::vector<std::string> arrow_trees(long long b, long long p, long long n) {
    if (b < 2 || p < 0 || p > b - 1 || n < 1) throw std::invalid_argument("arrow_trees: need b >= 2, 0 <= p <= b-1, n >= 1");
    ArrowTreeGenerator g(b);
    return g.trees(p, n);
}

inline std::uint64_t enumerate_arrow_trees(long long b, long long p, long long n) { return arrow_trees(b, p, n).size(); }

}  // namespace tightmaps
