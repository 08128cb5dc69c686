#pragma once

#include "tightmaps/maps/comb_map.hpp"
#include "tightmaps/trees/decorated.hpp"

#include <stdexcept>
#include <vector>

namespace tightmaps {

struct Closure {
    CombMap slice;   // framed: apex vertex and base half-edge, outer face labeled 0
    CombMap dual;    // dual map of the slice
    int outer = -1;  // vertex of `dual` standing for the outer face
    int completion = 0;  // number l of leaflets added at the outer vertex
};

namespace detail {

class Closer {
public:
    explicit Closer(const DecoratedTree& t) : t_(t), n_(t.size()) {}

    Closure run() {
        // dual ports of every tree dual vertex, counterclockwise from the parent
        node_ports_.assign(n_, {});
        next_ev_ = n_ + 1;  // ids 0..n_-1 are tree nodes; extra twig edge-vertices follow
        for (int v = 0; v < n_; ++v) {
            const auto& node = t_.nodes[v];
            if (node.kind != NodeKind::Dual) continue;
            node_ports_[v].push_back(new_port(node.parent, v));
            for (auto it = node.items.rbegin(); it != node.items.rend(); ++it) {
                int ev = it->kind == ItemKind::Link ? it->child : it->kind == ItemKind::Twig ? next_ev_++ : -1;
                node_ports_[v].push_back(new_port(ev, v));
            }
        }
        // contour of the tree, counterclockwise, entering the root from the outer vertex
        walk_edge(t_.root());
        long long h = 0, low = 0;
        for (const auto& r : seq_) {
            h += r.leaflet ? 1 : -1;
            low = std::min(low, h);
        }
        if (h != 1) throw MalformedTree("closure: tree charge is not +1");
        const int l = static_cast<int>(-low);

        std::vector<int> outer_ports;
        std::vector<Rec> full;
        for (int i = 0; i < l; ++i) {
            int p = new_port(-1, n_);
            outer_ports.push_back(p);
            full.push_back({true, p});
        }
        const int root_port = new_port(t_.root(), n_);
        outer_ports.push_back(root_port);
        full.insert(full.end(), seq_.begin(), seq_.end());
        for (int i = 0; i <= l; ++i) {
            int ev = next_ev_++;
            outer_ports.push_back(new_port(ev, n_));
            full.push_back({false, ev});
        }
        std::vector<int> stack;
        for (const auto& r : full) {
            if (r.leaflet) {
                stack.push_back(r.id);
            } else {
                if (stack.empty()) throw std::logic_error("closure: unmatched bud");
                port_ev_[stack.back()] = r.id;
                stack.pop_back();
            }
        }
        if (!stack.empty()) throw std::logic_error("closure: unmatched leaflet");

        const int P = static_cast<int>(port_ev_.size());
        std::vector<int> alpha(P, -1), sigma(P, -1);
        std::vector<int> first_port(next_ev_, -1);
        for (int p = 0; p < P; ++p) {
            int ev = port_ev_[p];
            if (first_port[ev] < 0) {
                first_port[ev] = p;
            } else {
                if (alpha[first_port[ev]] >= 0) throw std::logic_error("closure: edge with more than two dual ends");
                alpha[p] = first_port[ev];
                alpha[first_port[ev]] = p;
            }
        }
        for (int p = 0; p < P; ++p)
            if (alpha[p] < 0) throw std::logic_error("closure: edge with a single dual end");
        auto cycle = [&](const std::vector<int>& ports) {
            for (std::size_t i = 0; i < ports.size(); ++i) sigma[ports[i]] = ports[(i + 1) % ports.size()];
        };
        for (int v = 0; v < n_; ++v)
            if (!node_ports_[v].empty()) cycle(node_ports_[v]);
        cycle(outer_ports);

        Closure out;
        out.completion = l;
        out.dual = CombMap(alpha, sigma);
        out.outer = out.dual.vertex_of(root_port);
        std::vector<int> dual_labels(static_cast<std::size_t>(out.dual.num_faces()), 0);
        out.dual.set_face_labels(dual_labels);

        // primal half-edge alpha(p) has the dual vertex owning p on its right
        out.slice = dual_map(out.dual);
        std::vector<int> labels(static_cast<std::size_t>(out.slice.num_faces()), 0);
        for (int f = 0; f < out.slice.num_faces(); ++f) {
            int owner = port_owner_[alpha[out.slice.face_cycle(f).front()]];
            labels[f] = owner == n_ ? 0 : t_.nodes[owner].label;
        }
        out.slice.set_face_labels(labels);
        // apex: corner of the outer vertex between the last twig and the first leaflet
        out.slice.set_frame(SliceFrame{out.slice.vertex_of(alpha[outer_ports.back()]), alpha[root_port]});
        return out;
    }

private:
    struct Rec {
        bool leaflet;
        int id;  // port for a leaflet, edge-vertex for a bud
    };

    int new_port(int ev, int owner) {
        port_ev_.push_back(ev);
        port_owner_.push_back(owner);
        return static_cast<int>(port_ev_.size()) - 1;
    }

    // edge-vertex v entered from its parent
    void walk_edge(int v) {
        const auto& node = t_.nodes[v];
        const int child = node.items.at(0).child;
        const bool parent_primal = node.parent >= 0 && t_.nodes[node.parent].kind == NodeKind::Primal;
        const bool child_primal = t_.nodes[child].kind == NodeKind::Primal;
        if (parent_primal && child_primal) {
            seq_.push_back({false, v});
            walk_node(child);
            seq_.push_back({false, v});
        } else if (parent_primal) {
            seq_.push_back({false, v});
            walk_node(child);
        } else if (child_primal) {
            walk_node(child);
            seq_.push_back({false, v});
        } else {
            walk_node(child);
        }
    }

    void walk_node(int v) {
        const auto& node = t_.nodes[v];
        if (node.kind == NodeKind::Primal) {
            for (auto it = node.items.rbegin(); it != node.items.rend(); ++it) walk_edge(it->child);
            return;
        }
        // dual vertex: ports after the parent, counterclockwise
        const auto& ports = node_ports_[v];
        std::size_t k = 1;
        for (auto it = node.items.rbegin(); it != node.items.rend(); ++it, ++k) {
            if (it->kind == ItemKind::Link)
                walk_edge(it->child);
            else if (it->kind == ItemKind::Twig)
                seq_.push_back({false, port_ev_[ports[k]]});
            else
                seq_.push_back({true, ports[k]});
        }
    }

    const DecoratedTree& t_;
    const int n_;
    int next_ev_ = 0;
    std::vector<int> port_ev_, port_owner_;
    std::vector<std::vector<int>> node_ports_;
    std::vector<Rec> seq_;
};

}  // namespace detail

// Rebuilds the 0-slice coded by a b-decorated tree (leaflets matched to buds).
inline Closure close_tree(const DecoratedTree& t) {
    validate_tree(t);
    return detail::Closer(t).run();
}

}  // namespace tightmaps
