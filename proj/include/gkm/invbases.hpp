#pragma once

#include "gkm/parabolic.hpp"
#include "gkm/rng.hpp"
#include "gkm/schubert.hpp"

namespace gkm {

using MultiIndex = std::vector<int>;

// Lexicographically sorted. Kind C returns the type B set; D uses the
// recursive rule with the four-element rank-2 base case.
std::vector<MultiIndex> index_set(RootKind kind, int n);
// Type D rank 3 by the closed description (product zero and box bounds,
// plus two extra triples).
std::vector<MultiIndex> index_set_d3_explicit();

// x^I, padded with zero exponents to the coordinate count.
Polynomial monomial_x(int varcount, const MultiIndex& I);

CohClass class_cI(const WeylGroup& g, GraphPtr graph, const MultiIndex& I);

struct BasisFamily {
    std::vector<MultiIndex> indices;
    std::vector<CohClass> classes;
};

BasisFamily basis_family(const WeylGroup& g, GraphPtr graph);

// Base classes for the quotient by S = {2..n}: tau(wW_S) = w*x1 and, in
// type D, eta = x1...xn / tau.
CohClass base_tau(const BundleMap& b);
CohClass base_eta(const BundleMap& b);
CohClass lift_to_total(const BundleMap& b, const CohClass& base_class);

// Spreads a fiber class (on the typical fiber for flag bundles, on the
// fiber over the base point otherwise) across the total space.
CohClass extend_invariant(const BundleMap& b, const HolonomyGroup& hol, const CohClass& f);
CohClass extend_invariant(const BundleMap& b, const CohClass& f, int base_point = -1);

// Literal iteration: fiber basis extended, times lifted powers of tau or eta.
// b must be the full flag bundle with sigma1 empty and sigma2 = {2..n}.
std::vector<CohClass> iterated_classes(const BundleMap& b, const std::vector<MultiIndex>& indices);

struct Expression {
    std::vector<CohClass> beta;  // classes on the base
    Report report;
};

// c = sum_k pi^*(beta_k) c_k; throws when the fiber restrictions are not a basis.
Expression express_in_basis(const BundleMap& b, const std::vector<CohClass>& globals, const CohClass& target);

struct BasisVerdict {
    bool independent = false;
    bool spanning = false;
    std::string witness;
    std::string json() const;
};

BasisVerdict verify_basis(const SchubertTable& t, const BasisFamily& family, std::uint64_t seed = 1);

// Coefficients of c in the Schubert basis, peeled in canonical order.
std::optional<std::vector<Polynomial>> schubert_coordinates(const SchubertTable& t, const CohClass& c);

std::vector<Polynomial> invariant_generators(const RootSystem& rs);
Report check_bases_over_invariants(const RootSystem& rs, const std::vector<MultiIndex>& indices, int max_degree = 6);

// Random point with distinct nonzero absolute values.
std::vector<Rational> random_point(int varcount, Rng& rng);
Polynomial random_polynomial(int varcount, int degree, Rng& rng, bool homogeneous);
CohClass random_class(const SchubertTable& t, int max_degree, Rng& rng);

}  // namespace gkm
