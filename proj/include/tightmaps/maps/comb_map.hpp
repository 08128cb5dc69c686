#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightmaps {

struct MalformedMap : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Mark : std::uint8_t { None = 0, Marked = 1, Distinguished = 2 };

// apex vertex and base half-edge oriented from B to C
struct SliceFrame {
    int apex = -1;
    int base = -1;
    friend bool operator==(const SliceFrame&, const SliceFrame&) = default;
};

// Rotation system: sigma turns counterclockwise around a vertex, phi = sigma o alpha
// walks the face lying to the right of each half-edge. Vertices, faces and edges
// are numbered by their smallest half-edge.
class CombMap {
public:
    CombMap() = default;
    CombMap(std::vector<int> alpha, std::vector<int> sigma) : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
        validate_and_index();
        face_labels_.assign(static_cast<std::size_t>(num_faces()), 0);
    }

    int num_half_edges() const { return static_cast<int>(alpha_.size()); }
    int num_edges() const { return num_half_edges() / 2; }
    int num_vertices() const { return static_cast<int>(vertex_cycles_.size()); }
    int num_faces() const { return static_cast<int>(face_cycles_.size()); }

    int alpha(int h) const { return alpha_[h]; }
    int sigma(int h) const { return sigma_[h]; }
    int phi(int h) const { return sigma_[alpha_[h]]; }
    const std::vector<int>& alpha_perm() const { return alpha_; }
    const std::vector<int>& sigma_perm() const { return sigma_; }

    int vertex_of(int h) const { return vertex_of_[h]; }
    int face_of(int h) const { return face_of_[h]; }
    int edge_of(int h) const { return edge_of_[h]; }
    int tail(int h) const { return vertex_of_[h]; }
    int head(int h) const { return vertex_of_[alpha_[h]]; }

    const std::vector<int>& vertex_cycle(int v) const { return vertex_cycles_.at(v); }
    const std::vector<int>& face_cycle(int f) const { return face_cycles_.at(f); }
    int degree(int v) const { return static_cast<int>(vertex_cycles_.at(v).size()); }
    int face_degree(int f) const { return static_cast<int>(face_cycles_.at(f).size()); }

    int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }

    const std::vector<int>& face_labels() const { return face_labels_; }
    int face_label(int f) const { return face_labels_.at(f); }
    void set_face_labels(std::vector<int> labels) {
        if (static_cast<int>(labels.size()) != num_faces())
            throw MalformedMap("face label count does not match number of faces");
        face_labels_ = std::move(labels);
    }
    int face_with_label(int label) const {
        for (int f = 0; f < num_faces(); ++f)
            if (face_labels_[f] == label) return f;
        return -1;
    }

    bool has_marks() const { return !marks_.empty(); }
    Mark mark(int v) const { return marks_.empty() ? Mark::None : marks_.at(v); }
    const std::vector<Mark>& marks() const { return marks_; }
    void set_marks(std::vector<Mark> marks) {
        if (!marks.empty() && static_cast<int>(marks.size()) != num_vertices())
            throw MalformedMap("mark count does not match number of vertices");
        marks_ = std::move(marks);
    }

    const std::optional<SliceFrame>& frame() const { return frame_; }
    void set_frame(std::optional<SliceFrame> f) {
        if (f && (f->apex < 0 || f->apex >= num_vertices() || f->base < 0 || f->base >= num_half_edges()))
            throw MalformedMap("slice frame out of range");
        frame_ = f;
    }

    std::vector<int> face_degrees_by_label() const {
        std::vector<std::pair<int, int>> v;
        for (int f = 0; f < num_faces(); ++f) v.emplace_back(face_labels_[f], face_degree(f));
        std::sort(v.begin(), v.end());
        std::vector<int> out;
        for (auto& [l, d] : v) out.push_back(d);
        return out;
    }

    friend bool operator==(const CombMap& a, const CombMap& b) {
        return a.alpha_ == b.alpha_ && a.sigma_ == b.sigma_ && a.face_labels_ == b.face_labels_ &&
               a.marks_ == b.marks_ && a.frame_ == b.frame_;
    }

private:
    static std::vector<std::vector<int>> orbits(const std::vector<int>& perm, std::vector<int>& owner) {
        std::vector<std::vector<int>> cycles;
        owner.assign(perm.size(), -1);
        for (int h = 0; h < static_cast<int>(perm.size()); ++h) {
            if (owner[h] >= 0) continue;
            std::vector<int> c;
            for (int x = h; owner[x] < 0; x = perm[x]) {
                owner[x] = static_cast<int>(cycles.size());
                c.push_back(x);
            }
            cycles.push_back(std::move(c));
        }
        return cycles;
    }

    void validate_and_index() {
        const int n = static_cast<int>(alpha_.size());
        if (n == 0 || n % 2 != 0) throw MalformedMap("need a positive even number of half-edges");
        if (static_cast<int>(sigma_.size()) != n) throw MalformedMap("alpha and sigma sizes differ");
        std::vector<char> seen(n, 0);
        for (int h = 0; h < n; ++h) {
            int s = sigma_[h];
            if (s < 0 || s >= n || seen[s]) throw MalformedMap("sigma is not a permutation");
            seen[s] = 1;
            int a = alpha_[h];
            if (a < 0 || a >= n || a == h || alpha_[a] != h) throw MalformedMap("alpha is not a fixed-point-free involution");
        }
        std::vector<int> phi(n);
        for (int h = 0; h < n; ++h) phi[h] = sigma_[alpha_[h]];
        vertex_cycles_ = orbits(sigma_, vertex_of_);
        face_cycles_ = orbits(phi, face_of_);
        edge_of_.assign(n, -1);
        int e = 0;
        for (int h = 0; h < n; ++h)
            if (edge_of_[h] < 0) edge_of_[h] = edge_of_[alpha_[h]] = e++;
        // transitivity of <alpha, sigma>
        std::vector<char> reach(n, 0);
        std::vector<int> stack{0};
        reach[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int h = stack.back();
            stack.pop_back();
            for (int x : {alpha_[h], sigma_[h]})
                if (!reach[x]) {
                    reach[x] = 1;
                    ++count;
                    stack.push_back(x);
                }
        }
        if (count != n) throw MalformedMap("map is not connected");
    }

    std::vector<int> alpha_, sigma_;
    std::vector<int> vertex_of_, face_of_, edge_of_;
    std::vector<std::vector<int>> vertex_cycles_, face_cycles_;
    std::vector<int> face_labels_;
    std::vector<Mark> marks_;
    std::optional<SliceFrame> frame_;
};

inline int genus(const CombMap& m) {
    int defect = 2 - m.euler_characteristic();
    if (defect < 0 || defect % 2 != 0) throw MalformedMap("odd or negative Euler defect");
    return defect / 2;
}

// Text form:
//   E=<edges>
//   <alpha images>
//   <sigma images>
//   <face labels, one per face in canonical order>
//   [marks: <vertex>... with '*' after the distinguished one]
//   [slice: <apex vertex> <base half-edge>]
inline std::string serialize_map(const CombMap& m) {
    std::ostringstream os;
    auto word = [&](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
        os << "\n";
    };
    os << "E=" << m.num_edges() << "\n";
    word(m.alpha_perm());
    word(m.sigma_perm());
    word(m.face_labels());
    if (m.has_marks()) {
        os << "marks:";
        for (int v = 0; v < m.num_vertices(); ++v) {
            if (m.mark(v) == Mark::None) continue;
            os << " " << v << (m.mark(v) == Mark::Distinguished ? "*" : "");
        }
        os << "\n";
    }
    if (m.frame()) os << "slice: " << m.frame()->apex << " " << m.frame()->base << "\n";
    return os.str();
}

inline CombMap parse_map(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](const char* what) {
        while (std::getline(in, line))
            if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) return;
        throw MalformedMap(std::string("missing ") + what + " line");
    };
    auto ints = [](const std::string& s) {
        std::istringstream ls(s);
        std::vector<int> v;
        int x;
        while (ls >> x) v.push_back(x);
        if (!ls.eof()) throw MalformedMap("bad integer list: " + s);
        return v;
    };
    next_line("edge count");
    if (line.rfind("E=", 0) != 0) throw MalformedMap("first line must be E=<edges>");
    int edges = std::stoi(line.substr(2));
    next_line("alpha");
    auto alpha = ints(line);
    next_line("sigma");
    auto sigma = ints(line);
    if (static_cast<int>(alpha.size()) != 2 * edges) throw MalformedMap("alpha length does not match E");
    CombMap m(std::move(alpha), std::move(sigma));
    next_line("face label");
    m.set_face_labels(ints(line));
    while (std::getline(in, line)) {
        if (line.rfind("marks:", 0) == 0) {
            std::vector<Mark> marks(static_cast<std::size_t>(m.num_vertices()), Mark::None);
            std::istringstream ls(line.substr(6));
            std::string tok;
            while (ls >> tok) {
                bool star = tok.back() == '*';
                if (star) tok.pop_back();
                int v = std::stoi(tok);
                if (v < 0 || v >= m.num_vertices()) throw MalformedMap("marked vertex out of range");
                marks[v] = star ? Mark::Distinguished : Mark::Marked;
            }
            m.set_marks(std::move(marks));
        } else if (line.rfind("slice:", 0) == 0) {
            auto v = ints(line.substr(6));
            if (v.size() != 2) throw MalformedMap("slice line needs apex and base");
            m.set_frame(SliceFrame{v[0], v[1]});
        } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw MalformedMap("unexpected line: " + line);
        }
    }
    return m;
}

// Dual map: same half-edges, vertices become faces and faces become vertices.
// sigma* = phi^-1 keeps the orientation (phi runs clockwise around inner faces).
inline CombMap dual_map(const CombMap& m) {
    std::vector<int> sigma(static_cast<std::size_t>(m.num_half_edges()));
    for (int h = 0; h < m.num_half_edges(); ++h) sigma[m.phi(h)] = h;
    return CombMap(m.alpha_perm(), std::move(sigma));
}

}  // namespace tightmaps
