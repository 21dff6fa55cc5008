#pragma once

#include "gkm/gkm_graph.hpp"
#include "gkm/rootsys.hpp"

#include <optional>
#include <unordered_map>

namespace gkm {

struct CosetOptions {
    unsigned long long cap = kDefaultGroupCap;
    // When set, each coset is represented by a random element instead of
    // the minimal one.
    std::optional<std::uint64_t> representative_seed;
};

// Graph of W2/W1 with labels w*beta, beta in <S2> \ <S1>.
struct CosetGraph {
    std::shared_ptr<const RootSystem> rs;
    std::vector<int> sigma1, sigma2;
    std::vector<WeylElement> min_reps;  // per vertex, canonical order
    std::vector<WeylElement> reps;      // representative used to build edges
    std::vector<int> roots;             // positive-root indices of <S2> \ <S1>
    std::vector<int> edge_root;         // per edge: beta with label = rep(src) * beta
    std::shared_ptr<GkmGraph> graph;
    std::unordered_map<WeylElement, int, WeylElementHash> by_min_rep;

    // Vertex of the coset w W1; throws if w is outside W2.
    int vertex_of(const WeylElement& w) const;
    GraphPtr graph_ptr() const { return graph; }
};

std::vector<WeylElement> minimal_representatives(const RootSystem& rs, const std::vector<int>& sigma,
                                                 unsigned long long cap = kDefaultGroupCap);

CosetGraph build_coset_graph(std::shared_ptr<const RootSystem> rs, std::vector<int> sigma1, std::vector<int> sigma2,
                             const CosetOptions& opt = {});

std::vector<int> all_simple(const RootSystem& rs);
std::vector<int> complement_of(const RootSystem& rs, const std::vector<int>& sigma);

struct Transition {
    int base_edge = -1;
    std::vector<int> phi;  // fiber position over src -> fiber position over dst
    RationalMatrix psi;
};

struct BundleMap {
    std::shared_ptr<const RootSystem> rs;  // null for abstract bundles
    std::vector<int> sigma1, sigma2;
    std::shared_ptr<GkmGraph> total, base;
    std::optional<CosetGraph> total_coset, base_coset, fiber_coset;
    std::vector<int> projection;            // total vertex -> base vertex
    std::vector<char> vertical;             // per total edge
    std::vector<std::vector<int>> fibers;   // base vertex -> total vertices
    std::vector<int> fiber_pos;             // total vertex -> position in its fiber
    std::vector<Transition> transitions;    // per base edge

    bool is_flag() const { return rs != nullptr && fiber_coset.has_value(); }
    const Transition& transition(int p, int q) const;
    // Total edge lifting base edge be at total vertex start, or -1.
    int lift_edge(int be, int start) const;
    Subgraph fiber(int p) const;
    // Recompute fibers, vertical flags and lift-derived transitions.
    void refresh();
};

BundleMap build_bundle(std::shared_ptr<const RootSystem> rs, std::vector<int> sigma1, std::vector<int> sigma2,
                       const CosetOptions& opt = {});

// Bundle from user data; Psi is solved on the span of fiber labels and
// extended by the identity on a coordinate complement.
BundleMap make_bundle(std::shared_ptr<GkmGraph> total, std::shared_ptr<GkmGraph> base, std::vector<int> projection);

// Trivial bundle B x F -> B.
BundleMap product_bundle(const GkmGraph& base, const GkmGraph& fiber);

Report verify_fibration(const BundleMap& b);
Report verify_fiber_bundle(const BundleMap& b);
// verify_gkm on total and base, then fibration and bundle checks.
Report verify_bundle(const BundleMap& b);

std::vector<int> lift_path(const BundleMap& b, const std::vector<int>& base_path, int start);

// Fiber isomorphism (phi_w, psi_w) from the typical fiber onto the fiber over p.
GkmIso fiber_iso(const BundleMap& b, int p, const WeylElement& w);

/******** holonomy ********/

struct FiberAut {
    std::vector<int> phi;
    RationalMatrix psi;
    bool operator==(const FiberAut& o) const { return phi == o.phi && psi == o.psi; }
    bool operator<(const FiberAut& o) const
    {
        if (phi != o.phi)
            return phi < o.phi;
        return psi < o.psi;
    }
};

FiberAut compose(const FiberAut& second, const FiberAut& first);
FiberAut inverse(const FiberAut& a);
FiberAut identity_aut(int vertices, int varcount);

struct HolonomyLoop {
    std::vector<int> path;  // base vertices, first == last
    std::string origin;
    FiberAut rho;
};

struct HolonomyOptions {
    int base_point = -1;  // default: coset of the identity (vertex 0)
    bool exhaustive = false;
    int max_cycle_length = 6;
    int max_base_vertices = 8;
    std::size_t max_group = 100000;
};

struct HolonomyGroup {
    int base_point = 0;
    GraphPtr fiber;  // typical fiber F
    std::vector<HolonomyLoop> generators;
    std::vector<FiberAut> elements;  // sorted
    Report report;

    bool contains(const FiberAut& a) const;
    std::size_t order() const { return elements.size(); }
};

// rho for a base path: phi_end^-1 o Phi_path o phi_start (flag bundles), or
// the raw transport for loops in abstract bundles.
FiberAut transport(const BundleMap& b, const std::vector<int>& path);
std::vector<FiberAut> upsilon(const BundleMap& b);
std::vector<FiberAut> group_closure(const std::vector<FiberAut>& gens, const FiberAut& identity, std::size_t cap);
HolonomyGroup holonomy(const BundleMap& b, const HolonomyOptions& opt = {});

// w = u * s_b1 ... s_bm with u in W(sigma2), b_k in Delta+ \ <sigma2>.
struct PushLeft {
    WeylElement u;
    std::vector<LinearForm> betas;
};
PushLeft push_left(const RootSystem& rs, const WeylElement& w, const std::vector<int>& sigma2);

}  // namespace gkm
