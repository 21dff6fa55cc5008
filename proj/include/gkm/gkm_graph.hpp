#pragma once

#include "gkm/linalg.hpp"
#include "gkm/polynomial.hpp"
#include "gkm/report.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gkm {

struct Edge {
    int src = -1;
    int dst = -1;
    LinearForm label;
};

// Regular graph with oriented labeled edges and an explicit connection:
// connection(e)[k] is the image of out_edges(src(e))[k] in out_edges(dst(e)).
class GkmGraph {
public:
    explicit GkmGraph(int varcount = 0) : m_(varcount) {}

    int add_vertex(std::string name);
    int add_edge(int src, int dst, LinearForm label);
    // Adds (p,q) with label and (q,p) with -label; returns the id of (p,q).
    int add_edge_pair(int p, int q, const LinearForm& label);
    void set_connection(int e, std::vector<int> images);
    void set_connection_entry(int e, int pos, int target);
    void set_label(int e, LinearForm label);

    int varcount() const { return m_; }
    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& out_edges(int p) const { return out_[static_cast<std::size_t>(p)]; }
    int degree(int p) const { return static_cast<int>(out_edges(p).size()); }
    int position(int e) const { return pos_[static_cast<std::size_t>(e)]; }
    int find_edge(int p, int q) const;
    int reverse(int e) const;
    bool has_connection(int e) const { return !conn_[static_cast<std::size_t>(e)].empty(); }
    const std::vector<int>& connection(int e) const { return conn_[static_cast<std::size_t>(e)]; }
    // Image of e2 (an edge at src(e)) under the connection along e.
    int connect(int e, int e2) const;

    const std::string& name(int p) const { return names_[static_cast<std::size_t>(p)]; }
    const std::vector<std::string>& names() const { return names_; }
    int find_vertex(const std::string& name) const;
    std::string edge_str(int e) const;

    GkmGraph with_varcount(int m) const;
    bool is_connected(const std::vector<int>& vertices) const;
    bool operator==(const GkmGraph& o) const;

private:
    int m_;
    std::vector<std::string> names_;
    std::map<std::string, int> by_name_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<int> pos_;
    std::map<std::pair<int, int>, int> by_ends_;
    std::vector<std::vector<int>> conn_;
};

using GraphPtr = std::shared_ptr<const GkmGraph>;

struct GkmOptions {
    bool full_independence = false;  // stricter reading of condition (2)
};

Report verify_gkm(const GkmGraph& g, const GkmOptions& opt = {});

class CohClass {
public:
    CohClass() = default;
    CohClass(GraphPtr g, std::vector<Polynomial> values);
    static CohClass constant(GraphPtr g, const Rational& c);

    const GkmGraph& graph() const { return *g_; }
    const GraphPtr& graph_ptr() const { return g_; }
    int size() const { return static_cast<int>(v_.size()); }
    const Polynomial& operator[](int p) const { return v_[static_cast<std::size_t>(p)]; }
    const std::vector<Polynomial>& values() const { return v_; }

    bool operator==(const CohClass& o) const;
    bool operator!=(const CohClass& o) const { return !(*this == o); }

private:
    GraphPtr g_;
    std::vector<Polynomial> v_;
};

bool same_graph(const GkmGraph& a, const GkmGraph& b);

struct ClassCheck {
    bool ok = true;
    int edge = -1;
    std::string witness;
    explicit operator bool() const { return ok; }
};

ClassCheck is_coh_class(const CohClass& c);

// Re-verification of ring operations on small graphs (default on, |V| <= 50).
void set_class_verification(bool on);
bool class_verification();

CohClass class_add(const CohClass& c, const CohClass& d);
CohClass class_sub(const CohClass& c, const CohClass& d);
CohClass class_mul(const CohClass& c, const CohClass& d);
CohClass class_scale(const CohClass& c, const Polynomial& f);

struct ClassDegree {
    enum class Kind { Zero, Homogeneous, Inhomogeneous } kind = Kind::Zero;
    int degree = 0;  // cohomological degree 2k
    std::string str() const;
};

ClassDegree degree_of(const CohClass& c);

// Throws if the vertex set is disconnected.
Verdict check_subgraph(const GkmGraph& g, const std::vector<int>& vertices);

struct Subgraph {
    std::shared_ptr<GkmGraph> graph;
    std::vector<int> to_parent;
    std::vector<int> from_parent;  // -1 outside
};

Subgraph induced_subgraph(const GkmGraph& g, const std::vector<int>& vertices);

struct GkmIso {
    std::vector<int> phi;
    RationalMatrix psi;
};

GkmIso compose(const GkmIso& second, const GkmIso& first);
GkmIso inverse(const GkmIso& iso);

Verdict verify_iso(const GkmIso& iso, const GkmGraph& g1, const GkmGraph& g2);
CohClass pullback_class(const GkmIso& iso, GraphPtr g1, const CohClass& c2);

}  // namespace gkm
