#pragma once

#include "tightmaps/trees/words.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tightmaps {

struct MalformedTree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class NodeKind { Edge, Primal, Dual };
enum class ItemKind { Leaflet, Twig, Link };

// Children of a node are stored clockwise, starting after the parent half-edge.
struct TreeItem {
    ItemKind kind = ItemKind::Link;
    int arrows = 0;  // on the primal half-edge of a link, 0 for dual half-edges
    int child = -1;
};

struct TreeNode {
    NodeKind kind = NodeKind::Edge;
    int half_degree = 0;  // dual vertices
    int label = 0;        // dual vertices
    int parent = -1;
    int parent_arrows = 0;
    std::vector<TreeItem> items;
};

// Text form:
//   node  := 'E(' link ')' | 'P(' link (',' link)* ')' | 'D' m ['#' label] '(' deco (',' deco)* ')'
//   link  := [arrows ':'] node
//   deco  := 'L' | 'T' | link
// Arrows count the arrows on the primal half-edge joining the two nodes.
struct DecoratedTree {
    long long b = 1;
    std::vector<TreeNode> nodes;  // nodes[0] is the root edge-vertex

    int root() const { return 0; }
    int size() const { return static_cast<int>(nodes.size()); }
    bool is_special(int v) const { return nodes[v].kind == NodeKind::Dual && nodes[v].half_degree == b; }
    bool is_labeled_dual(int v) const { return nodes[v].kind == NodeKind::Dual && nodes[v].half_degree > b; }

    std::vector<int> dual_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (nodes[v].kind == NodeKind::Dual) out.push_back(v);
        return out;
    }
};

namespace detail {

class TreeParser {
public:
    TreeParser(const std::string& s, DecoratedTree& t) : s_(s), t_(t) {}

    void parse() {
        skip();
        int r = node(-1, 0);
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
        if (r != 0) fail("internal");
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw MalformedTree("tree parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    int number() {
        if (!digit()) fail("expected number");
        int v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000000) fail("number too large");
        }
        return v;
    }
    TreeItem link(int parent) {
        TreeItem it;
        if (digit()) {
            it.arrows = number();
            expect(':');
        }
        it.child = node(parent, it.arrows);
        return it;
    }
    int node(int parent, int parent_arrows) {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_++];
        int id = static_cast<int>(t_.nodes.size());
        t_.nodes.emplace_back();
        t_.nodes[id].parent = parent;
        t_.nodes[id].parent_arrows = parent_arrows;
        std::vector<TreeItem> items;
        if (c == 'E') {
            t_.nodes[id].kind = NodeKind::Edge;
            expect('(');
            items.push_back(link(id));
            expect(')');
        } else if (c == 'P') {
            t_.nodes[id].kind = NodeKind::Primal;
            expect('(');
            items.push_back(link(id));
            while (peek(',')) {
                ++pos_;
                items.push_back(link(id));
            }
            expect(')');
        } else if (c == 'D') {
            t_.nodes[id].kind = NodeKind::Dual;
            t_.nodes[id].half_degree = number();
            if (peek('#')) {
                ++pos_;
                t_.nodes[id].label = number();
            }
            expect('(');
            do {
                if (!items.empty()) ++pos_;
                if (peek('L')) {
                    ++pos_;
                    items.push_back({ItemKind::Leaflet, 0, -1});
                } else if (peek('T')) {
                    ++pos_;
                    items.push_back({ItemKind::Twig, 0, -1});
                } else {
                    items.push_back(link(id));
                }
            } while (peek(','));
            expect(')');
        } else {
            --pos_;
            fail(std::string("unknown node tag '") + c + "'");
        }
        t_.nodes[id].items = std::move(items);
        return id;
    }

    const std::string& s_;
    DecoratedTree& t_;
    std::size_t pos_ = 0;
};

inline void serialize_node(const DecoratedTree& t, int v, std::string& out) {
    const auto& n = t.nodes[v];
    auto link = [&](const TreeItem& it) {
        if (it.arrows > 0) out += std::to_string(it.arrows) + ":";
        serialize_node(t, it.child, out);
    };
    switch (n.kind) {
        case NodeKind::Edge:
            out += "E(";
            link(n.items.at(0));
            out += ")";
            break;
        case NodeKind::Primal:
            out += "P(";
            for (std::size_t i = 0; i < n.items.size(); ++i) {
                if (i) out += ",";
                link(n.items[i]);
            }
            out += ")";
            break;
        case NodeKind::Dual:
            out += "D" + std::to_string(n.half_degree);
            if (n.label) out += "#" + std::to_string(n.label);
            out += "(";
            for (std::size_t i = 0; i < n.items.size(); ++i) {
                if (i) out += ",";
                const auto& it = n.items[i];
                if (it.kind == ItemKind::Leaflet)
                    out += "L";
                else if (it.kind == ItemKind::Twig)
                    out += "T";
                else
                    link(it);
            }
            out += ")";
            break;
    }
}

}  // namespace detail

inline DecoratedTree parse_tree(const std::string& text, long long b) {
    if (b < 1) throw MalformedTree("b must be at least 1");
    DecoratedTree t;
    t.b = b;
    detail::TreeParser(text, t).parse();
    return t;
}

inline std::string serialize_tree(const DecoratedTree& t) {
    std::string out;
    detail::serialize_node(t, t.root(), out);
    return out;
}

// Checks the b-decorated tree characterization for a tree coding a 0-slice.
inline void validate_tree(const DecoratedTree& t) {
    const long long b = t.b;
    auto fail = [](const std::string& m) { throw MalformedTree("invalid decorated tree: " + m); };
    if (t.nodes.empty() || t.nodes[0].kind != NodeKind::Edge) fail("root must be an edge-vertex");
    std::set<int> labels;
    for (int v = 0; v < t.size(); ++v) {
        const auto& n = t.nodes[v];
        for (const auto& it : n.items) {
            if (it.kind != ItemKind::Link) continue;
            const auto& c = t.nodes.at(it.child);
            bool primal = n.kind == NodeKind::Primal || c.kind == NodeKind::Primal;
            if ((n.kind == NodeKind::Edge) == (c.kind == NodeKind::Edge)) fail("edge-vertices must alternate");
            if (primal && (it.arrows < 1 || it.arrows > b)) fail("primal half-edge needs 1..b arrows");
            if (!primal && it.arrows != 0) fail("dual half-edge cannot carry arrows");
        }
        switch (n.kind) {
            case NodeKind::Edge: {
                if (n.items.size() != 1 || n.items[0].kind != ItemKind::Link) fail("edge-vertex needs exactly one child");
                const int c = n.items[0].child;
                const auto& ck = t.nodes[c].kind;
                const int a_child = n.items[0].arrows;
                if (n.parent < 0) {
                    bool ok = (ck == NodeKind::Primal && a_child == b) || (b == 1 && t.is_special(c));
                    if (!ok) fail("root must carry b arrows towards a primal vertex (or a special vertex when b=1)");
                    break;
                }
                const auto& pk = t.nodes[n.parent].kind;
                const int a_par = n.parent_arrows;
                if (pk == NodeKind::Primal && ck == NodeKind::Primal) {
                    if (a_par + a_child != b) fail("bioriented edge-vertex must carry b arrows");
                } else if (pk == NodeKind::Primal && ck == NodeKind::Dual) {
                    bool ok = (a_par == b - 1 && t.is_special(c)) || (a_par == b && t.is_labeled_dual(c));
                    if (!ok) fail("bent edge-vertex arrows do not match its dual vertex");
                } else if (pk == NodeKind::Dual && ck == NodeKind::Primal) {
                    if (!(a_child == b && t.is_labeled_dual(n.parent))) fail("bent edge-vertex below a dual vertex must be regular");
                } else {
                    if (!(b == 1 && t.is_labeled_dual(n.parent) && t.is_special(c))) fail("dual/dual edge-vertex only for b=1 towards a special vertex");
                }
                break;
            }
            case NodeKind::Primal: {
                if (n.items.empty()) fail("primal vertex of degree one outside a twig");
                long long sum = n.parent_arrows;
                for (const auto& it : n.items) sum += it.arrows;
                if (sum != b + 1) fail("arrows around a primal vertex must sum to b+1");
                break;
            }
            case NodeKind::Dual: {
                const long long m = n.half_degree;
                if (m < b) fail("dual vertex degree below 2b");
                if (n.label < 1) fail("dual vertex without label");
                if (!labels.insert(n.label).second) fail("duplicate label");
                if (static_cast<long long>(n.items.size()) != 2 * m - 1) fail("dual vertex degree does not match its decorations");
                long long twigs = 0;
                for (const auto& it : n.items) {
                    if (it.kind == ItemKind::Twig) ++twigs;
                    if (m == b && it.kind != ItemKind::Leaflet) fail("special vertex carries only leaflets");
                }
                if (m > b && twigs != m - b - 1) fail("labeled dual vertex needs m-b-1 twigs");
                break;
            }
        }
    }
}

// Tightness: no twig immediately followed (clockwise) by a leaflet.
inline bool check_tight(const DecoratedTree& t) {
    for (const auto& n : t.nodes) {
        if (n.kind != NodeKind::Dual) continue;
        for (std::size_t i = 0; i + 1 < n.items.size(); ++i)
            if (n.items[i].kind == ItemKind::Twig && n.items[i + 1].kind == ItemKind::Leaflet) return false;
    }
    return true;
}

inline std::string decoration_word(const DecoratedTree& t, int v) {
    std::string w;
    for (const auto& it : t.nodes.at(v).items)
        w += it.kind == ItemKind::Leaflet ? 'L' : it.kind == ItemKind::Twig ? 'T' : 'A';
    return w;
}

// Leaflets minus buds in the subtree below (and including) edge-vertex v.
inline long long charge(const DecoratedTree& t, int v) {
    long long c = 0;
    const auto& n = t.nodes[v];
    if (n.kind == NodeKind::Edge) {
        const auto& ck = t.nodes[n.items[0].child].kind;
        NodeKind pk = n.parent < 0 ? NodeKind::Dual : t.nodes[n.parent].kind;  // root joins the outer dual vertex
        int primal_sides = (pk == NodeKind::Primal) + (ck == NodeKind::Primal);
        c -= primal_sides;  // 2 bioriented, 1 bent, 0 dual/dual
    }
    for (const auto& it : n.items) {
        if (it.kind == ItemKind::Leaflet) ++c;
        if (it.kind == ItemKind::Twig) --c;  // its bent edge-vertex carries one bud
        if (it.kind == ItemKind::Link) c += charge(t, it.child);
    }
    return c;
}

// Expected charge of the subtree rooted at a non-twig edge-vertex.
inline long long expected_charge(const DecoratedTree& t, int v) {
    const auto& n = t.nodes[v];
    long long p = (n.parent >= 0 && t.nodes[n.parent].kind == NodeKind::Primal) ? n.parent_arrows : 0;
    return p >= 1 ? 2 * p : 1;
}

// Generates b-decorated trees coding 0-slices with labeled dual vertices of prescribed degrees.
class DecoratedTreeGenerator {
public:
    DecoratedTreeGenerator(long long b, std::vector<long long> half_degrees, bool tight = true)
        : b_(b), ms_(std::move(half_degrees)), tight_(tight) {
        if (b < 1) throw std::invalid_argument("decorated trees need b >= 1");
        if (ms_.size() > 20) throw std::invalid_argument("too many dual vertices");
        for (auto m : ms_)
            if (m < b) throw std::invalid_argument("half-degrees must be at least b");
    }

    unsigned full_mask() const { return (1u << ms_.size()) - 1; }

    // trees containing exactly the labels in mask (label i+1 for bit i)
    const std::vector<std::string>& trees(unsigned mask) { return from_dual(mask); }

    // ordered tuples of trees: first block contains label 1, all blocks non-empty
    std::uint64_t count_tuples(long long k) {
        if (ms_.empty() || k < 0) return 0;
        std::uint64_t total = 0;
        const unsigned full = full_mask();
        for (unsigned first = full; first; first = (first - 1) & full) {
            if (!(first & 1u)) continue;
            std::uint64_t a = trees(first).size();
            if (a) total += a * count_sequences(full & ~first, k);
        }
        return total;
    }

private:
    using Key = std::tuple<int, long long, unsigned>;

    std::uint64_t count_sequences(unsigned mask, long long parts) {
        if (parts == 0) return mask == 0 ? 1 : 0;
        if (mask == 0) return 0;
        std::uint64_t total = 0;
        for (unsigned s = mask; s; s = (s - 1) & mask) {
            std::uint64_t a = trees(s).size();
            if (a) total += a * count_sequences(mask & ~s, parts - 1);
        }
        return total;
    }

    static std::vector<unsigned> submasks(unsigned mask) {
        std::vector<unsigned> out;
        for (unsigned s = mask; s; s = (s - 1) & mask) out.push_back(s);
        return out;
    }

    int single_label(unsigned mask) const { return std::popcount(mask) == 1 ? std::countr_zero(mask) : -1; }

    std::string special(int i) const {
        std::string s = "D" + std::to_string(b_) + "#" + std::to_string(i + 1) + "(";
        for (long long j = 0; j < 2 * b_ - 1; ++j) s += j ? ",L" : "L";
        return s + ")";
    }

    // edge-vertex hanging below a dual vertex (also the root of a whole tree)
    const std::vector<std::string>& from_dual(unsigned mask) {
        Key key{0, 0, mask};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<std::string> out;
        if (mask) {
            for (const auto& s : from_primal(1, mask)) out.push_back("E(" + std::to_string(b_) + ":P(1:" + s + "))");
            int i = single_label(mask);
            if (b_ == 1 && i >= 0 && ms_[i] == b_) out.push_back("E(" + special(i) + ")");
        }
        return memo_[key] = std::move(out);
    }

    // edge-vertex reached from a primal vertex through a arrows
    const std::vector<std::string>& from_primal(long long a, unsigned mask) {
        Key key{1, a, mask};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<std::string> out;
        if (mask) {
            if (a <= b_ - 1)
                for (const auto& c : primal_children(a + 1, mask))
                    out.push_back("E(" + std::to_string(b_ - a) + ":P(" + c + "))");
            int i = single_label(mask);
            if (a == b_ - 1 && i >= 0 && ms_[i] == b_) out.push_back("E(" + special(i) + ")");
            if (a == b_)
                for (const auto& d : labeled_dual(mask)) out.push_back("E(" + d + ")");
        }
        return memo_[key] = std::move(out);
    }

    // ordered children of a primal vertex with arrows summing to s
    const std::vector<std::string>& primal_children(long long s, unsigned mask) {
        Key key{2, s, mask};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<std::string> out;
        for (long long a = 1; a <= std::min(s, b_); ++a)
            for (unsigned sub : submasks(mask)) {
                unsigned rest = mask & ~sub;
                if ((a == s) != (rest == 0)) continue;
                const auto& firsts = from_primal(a, sub);
                if (firsts.empty()) continue;
                if (a == s) {
                    for (const auto& f : firsts) out.push_back(std::to_string(a) + ":" + f);
                } else {
                    const auto& rests = primal_children(s - a, rest);
                    for (const auto& f : firsts)
                        for (const auto& r : rests) out.push_back(std::to_string(a) + ":" + f + "," + r);
                }
            }
        return memo_[key] = std::move(out);
    }

    // ordered sequences of k edge-vertex subtrees below a dual vertex covering mask
    const std::vector<std::vector<std::string>>& dual_children(long long k, unsigned mask) {
        auto key = std::make_pair(k, mask);
        if (auto it = seq_memo_.find(key); it != seq_memo_.end()) return it->second;
        std::vector<std::vector<std::string>> out;
        if (k == 0) {
            if (mask == 0) out.emplace_back();
        } else {
            for (unsigned sub : submasks(mask)) {
                const auto& firsts = from_dual(sub);
                if (firsts.empty()) continue;
                const auto& rests = dual_children(k - 1, mask & ~sub);
                for (const auto& f : firsts)
                    for (const auto& r : rests) {
                        std::vector<std::string> v{f};
                        v.insert(v.end(), r.begin(), r.end());
                        out.push_back(std::move(v));
                    }
            }
        }
        return seq_memo_[key] = std::move(out);
    }

    std::vector<std::string> labeled_dual(unsigned mask) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < ms_.size(); ++i) {
            if (!(mask >> i & 1u) || ms_[i] <= b_) continue;
            const long long m = ms_[i];
            const unsigned rest = mask & ~(1u << i);
            for (long long k = 0; k <= m + b_; ++k) {
                if (k > std::popcount(rest) || (k == 0) != (rest == 0)) continue;
                const auto& seqs = dual_children(k, rest);
                if (seqs.empty()) continue;
                for (const auto& w : blossom_words(b_, m, k, tight_))
                    for (const auto& seq : seqs) {
                        std::string s = "D" + std::to_string(m) + "#" + std::to_string(i + 1) + "(";
                        std::size_t next = 0;
                        for (std::size_t j = 0; j < w.size(); ++j) {
                            if (j) s += ",";
                            if (w[j] == 'A')
                                s += seq[next++];
                            else
                                s += w[j];
                        }
                        out.push_back(s + ")");
                    }
            }
        }
        return out;
    }

    long long b_;
    std::vector<long long> ms_;
    bool tight_;
    std::map<Key, std::vector<std::string>> memo_;
    std::map<std::pair<long long, unsigned>, std::vector<std::vector<std::string>>> seq_memo_;
};

inline std::uint64_t enumerate_decorated_tuples(long long b, long long k, const std::vector<long long>& half_degrees,
                                                long long max_half_sum = 8) {
    long long total = 0;
    for (auto m : half_degrees) total += m;
    if (total > max_half_sum)
        throw std::length_error("enumerate_decorated_tuples: total half-degree " + std::to_string(total) +
                                " exceeds the limit " + std::to_string(max_half_sum) + " (raise the limit to override)");
    DecoratedTreeGenerator g(b, half_degrees, true);
    return g.count_tuples(k);
}

}  // namespace tightmaps
