// Face poset of the suspension of an (n-1)-simplex and its one-skeleton
// graph: two vertices p, q joined by n edges. Faces other than the vertices
// are intersections of facets and are encoded by their facet index sets.
#ifndef TORB_FACES_HPP
#define TORB_FACES_HPP

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace torb {

enum class Vertex { P, Q };

inline std::string to_string(Vertex v) { return v == Vertex::P ? "p" : "q"; }

struct Face {
    enum class Kind { Subset, VertexP, VertexQ };

    Kind kind = Kind::Subset;
    int n = 0;                  // ambient facet count
    std::set<int> facet_set;    // 1-based facet indices; meaningful for Subset

    static Face whole(int n) { return subset(n, {}); }

    static Face subset(int n, std::set<int> s) {
        if (n < 1) throw std::invalid_argument("Face: n must be >= 1");
        if (static_cast<int>(s.size()) >= n)
            throw std::invalid_argument("Face: facet set of size >= n is a vertex, not a subset face");
        for (int i : s)
            if (i < 1 || i > n) throw std::invalid_argument("Face: facet index out of range");
        Face f;
        f.kind = Kind::Subset;
        f.n = n;
        f.facet_set = std::move(s);
        return f;
    }

    static Face facet(int n, int i) { return subset(n, {i}); }

    static Face vertex_p(int n) {
        Face f;
        f.kind = Kind::VertexP;
        f.n = n;
        return f;
    }

    static Face vertex_q(int n) {
        Face f;
        f.kind = Kind::VertexQ;
        f.n = n;
        return f;
    }

    bool is_vertex() const { return kind != Kind::Subset; }
    bool is_whole() const { return kind == Kind::Subset && facet_set.empty(); }

    int codim() const { return is_vertex() ? n : static_cast<int>(facet_set.size()); }

    bool operator==(const Face& rhs) const {
        return kind == rhs.kind && n == rhs.n &&
               (is_vertex() || facet_set == rhs.facet_set);
    }
    bool operator!=(const Face& rhs) const { return !(*this == rhs); }

    std::string label() const {
        switch (kind) {
        case Kind::VertexP: return "p";
        case Kind::VertexQ: return "q";
        default: break;
        }
        if (facet_set.empty()) return "whole";
        std::string out = "F{";
        bool first = true;
        for (int i : facet_set) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
        return out + "}";
    }
};

// Partial order: a <= b iff the face a is contained in b. Subset faces are
// ordered by reverse inclusion of facet sets; each vertex lies below every
// subset face (all of which contain both vertices) and below itself only.
inline bool face_le(const Face& a, const Face& b) {
    if (a.n != b.n) throw std::invalid_argument("face_le: ambient mismatch");
    if (b.is_vertex()) return a == b;
    if (a.is_vertex()) return true;
    return std::includes(a.facet_set.begin(), a.facet_set.end(),
                         b.facet_set.begin(), b.facet_set.end());
}

// All faces: subset faces by ascending codimension (lexicographic within a
// codimension), then the two vertices. Count: sum_{k<n} C(n,k) + 2.
inline std::vector<Face> faces(int n) {
    if (n < 1) throw std::invalid_argument("faces: n must be >= 1");
    std::vector<std::set<int>> by_size;
    std::set<int> cur;
    auto rec = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            by_size.push_back(cur);
            return;
        }
        for (int i = next; i <= n; ++i) {
            cur.insert(i);
            self(self, i + 1, remaining - 1);
            cur.erase(i);
        }
    };
    std::vector<Face> out;
    for (int k = 0; k < n; ++k) {
        by_size.clear();
        rec(rec, 1, k);
        for (auto& s : by_size) out.push_back(Face::subset(n, s));
    }
    out.push_back(Face::vertex_p(n));
    out.push_back(Face::vertex_q(n));
    return out;
}

struct JoinMeet {
    Face join;                        // minimal face containing both
    std::vector<Face> meet_components; // connected components of the intersection
};

// For subset faces with facet sets S, S': join has facet set S∩S'; the
// intersection has facet set S∪S' — a single face when |S∪S'| < n, and the
// two vertices otherwise. Vertex inputs reduce to containment: the
// intersection of a vertex with any face containing it is the vertex itself.
inline JoinMeet join_and_meet(const Face& e, const Face& f) {
    if (e.n != f.n) throw std::invalid_argument("join_and_meet: ambient mismatch");
    const int n = e.n;
    if (e.is_vertex() || f.is_vertex()) {
        if (e == f) return JoinMeet{e, {e}};
        if (e.is_vertex() && f.is_vertex())
            throw std::invalid_argument("join_and_meet: distinct vertices have no join");
        const Face& vert = e.is_vertex() ? e : f;
        const Face& other = e.is_vertex() ? f : e;
        return JoinMeet{other, {vert}};
    }
    std::set<int> join_set, meet_set;
    std::set_intersection(e.facet_set.begin(), e.facet_set.end(),
                          f.facet_set.begin(), f.facet_set.end(),
                          std::inserter(join_set, join_set.end()));
    std::set_union(e.facet_set.begin(), e.facet_set.end(),
                   f.facet_set.begin(), f.facet_set.end(),
                   std::inserter(meet_set, meet_set.end()));
    JoinMeet out{Face::subset(n, join_set), {}};
    if (static_cast<int>(meet_set.size()) < n) {
        out.meet_components.push_back(Face::subset(n, meet_set));
    } else {
        out.meet_components.push_back(Face::vertex_p(n));
        out.meet_components.push_back(Face::vertex_q(n));
    }
    return out;
}

// Oriented edge of the one-skeleton: e_j runs p -> q, its reversal q -> p.
struct OrientedEdge {
    int index = 1;        // 1..n
    bool reversed = false;

    Vertex initial() const { return reversed ? Vertex::Q : Vertex::P; }
    Vertex terminal() const { return reversed ? Vertex::P : Vertex::Q; }

    OrientedEdge reverse() const { return OrientedEdge{index, !reversed}; }

    bool operator==(const OrientedEdge& rhs) const {
        return index == rhs.index && reversed == rhs.reversed;
    }

    std::string label() const {
        return (reversed ? "~e" : "e") + std::to_string(index);
    }
};

// One-skeleton of the suspension: vertices p, q and edges e_1..e_n, each
// facet F_j being the unique facet disjoint from the interior of e_j.
struct Graph {
    int n = 0;

    explicit Graph(int n_edges = 0) : n(n_edges) {
        if (n_edges < 1) throw std::invalid_argument("Graph: need at least one edge");
    }

    // The n oriented edges with initial vertex v.
    std::vector<OrientedEdge> edges_from(Vertex v) const {
        std::vector<OrientedEdge> out;
        out.reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) out.push_back(OrientedEdge{j, v == Vertex::Q});
        return out;
    }

    std::vector<OrientedEdge> oriented_edges() const {
        std::vector<OrientedEdge> out;
        for (int j = 1; j <= n; ++j) out.push_back(OrientedEdge{j, false});
        for (int j = 1; j <= n; ++j) out.push_back(OrientedEdge{j, true});
        return out;
    }
};

// Edge indices of the one-skeleton of F: edge e_j lies in facet F_i iff
// i != j, so a subset face with facet set S keeps the edges not indexed by S.
// Vertex faces keep no edges.
inline std::vector<int> face_subgraph(const Face& f) {
    std::vector<int> out;
    if (f.is_vertex()) return out;
    for (int j = 1; j <= f.n; ++j)
        if (!f.facet_set.count(j)) out.push_back(j);
    return out;
}

} // namespace torb

#endif
