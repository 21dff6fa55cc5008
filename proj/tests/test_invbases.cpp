#include "gkm/invbases.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace gkm;

namespace {

std::shared_ptr<const RootSystem> R(RootKind k, int n)
{
    return std::make_shared<const RootSystem>(RootSystem::build(k, n));
}

std::shared_ptr<const WeylGroup> G(RootKind k, int n)
{
    return std::make_shared<const WeylGroup>(R(k, n));
}

std::vector<int> rest(int n)
{
    std::vector<int> s;
    for (int i = 2; i <= n; ++i)
        s.push_back(i);
    return s;
}

Polynomial P(const char* s, int m)
{
    return Polynomial::parse(s, m);
}

unsigned long long factorial(int n)
{
    unsigned long long f = 1;
    for (int k = 2; k <= n; ++k)
        f *= static_cast<unsigned long long>(k);
    return f;
}

}  // namespace

TEST_CASE("index sets")
{
    CHECK(index_set(RootKind::A, 2) == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
    for (int n = 1; n <= 5; ++n) {
        CHECK(index_set(RootKind::A, n).size() == factorial(n + 1));
        CHECK(index_set(RootKind::B, n).size() == (1ULL << n) * factorial(n));
        CHECK(index_set(RootKind::C, n) == index_set(RootKind::B, n));
        if (n >= 2)
            CHECK(index_set(RootKind::D, n).size() == (1ULL << (n - 1)) * factorial(n));
    }
    CHECK(index_set(RootKind::D, 2) == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {2, 0}});
    auto d3 = index_set(RootKind::D, 3);
    CHECK(d3 == index_set_d3_explicit());
    CHECK(std::set<MultiIndex>(d3.begin(), d3.end()).size() == d3.size());
}

TEST_CASE("basis classes are invariant classes")
{
    for (auto [k, n] : std::vector<std::pair<RootKind, int>>{
             {RootKind::A, 2}, {RootKind::B, 2}, {RootKind::C, 2}, {RootKind::A, 3}, {RootKind::D, 3}, {RootKind::B, 3}}) {
        auto g = G(k, n);
        auto graph = flag_graph(*g);
        BasisFamily fam = basis_family(*g, graph);
        CHECK(fam.classes.size() == static_cast<std::size_t>(g->size()));
        for (std::size_t c = 0; c < fam.classes.size(); ++c) {
            CHECK(is_coh_class(fam.classes[c]).ok);
            for (int w = 0; w < g->size(); ++w)
                CHECK(permuted_class(*g, fam.classes[c], w) == fam.classes[c]);
            CHECK(fam.classes[c].values() ==
                  oracle::invariant_values(*g, monomial_x(g->rs().varcount(), fam.indices[c])));
        }
    }
}

TEST_CASE("base classes")
{
    for (RootKind k : {RootKind::A, RootKind::B, RootKind::C, RootKind::D})
        for (int n = k == RootKind::D ? 3 : 2; n <= 3; ++n) {
            BundleMap b = build_bundle(R(k, n), {}, rest(n));
            CohClass tau = base_tau(b);
            CHECK(is_coh_class(tau).ok);
            std::vector<CohClass> gens{CohClass::constant(b.base, 1)};
            int top = k == RootKind::D ? 2 * n - 2 : b.base->vertex_count() - 1;
            for (int j = 1; j <= top; ++j)
                gens.push_back(class_mul(gens.back(), tau));
            if (k == RootKind::D) {
                CohClass eta = base_eta(b);
                CHECK(is_coh_class(eta).ok);
                gens.push_back(eta);
            }
            REQUIRE(gens.size() == static_cast<std::size_t>(b.base->vertex_count()));
            for (const auto& c : gens)
                CHECK(is_coh_class(c).ok);
            // evaluation determinant at a fixed point
            std::vector<Rational> pt;
            for (int i = 0; i < b.base->varcount(); ++i)
                pt.push_back(Rational(1 << i) + Rational(1, 3));
            std::vector<std::vector<Rational>> mat;
            for (int p = 0; p < b.base->vertex_count(); ++p) {
                std::vector<Rational> row;
                for (const auto& c : gens)
                    row.push_back(c[p].eval(pt));
                mat.push_back(row);
            }
            CHECK_MESSAGE(rational_det(mat) != 0, b.rs->name());
        }
}

TEST_CASE("extending the fiber class of S3 -> K3")
{
    BundleMap b = build_bundle(R(RootKind::A, 2), {}, {2});
    auto g = G(RootKind::A, 2);
    const GkmGraph& f = *b.fiber_coset->graph;
    std::vector<Polynomial> v;
    for (int p = 0; p < f.vertex_count(); ++p)
        v.push_back(Polynomial::variable(3, WeylElement::parse(f.name(p)).perm(1)));
    CohClass c1(b.fiber_coset->graph, v);
    CohClass ext = extend_invariant(b, c1);
    CHECK(ext.values() == class_cI(*g, b.total, {0, 1}).values());
    CHECK(extend_invariant(b, CohClass::constant(b.fiber_coset->graph, 1)) == CohClass::constant(b.total, 1));
}

TEST_CASE("iteration reproduces the closed form")
{
    for (auto [k, n] : std::vector<std::pair<RootKind, int>>{
             {RootKind::A, 2}, {RootKind::B, 2}, {RootKind::C, 2}, {RootKind::A, 3}, {RootKind::B, 3}, {RootKind::D, 3}}) {
        BundleMap b = build_bundle(R(k, n), {}, rest(n));
        auto g = std::make_shared<const WeylGroup>(b.rs);
        auto idx = index_set(k, n);
        auto it = iterated_classes(b, idx);
        REQUIRE(it.size() == idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c)
            CHECK_MESSAGE(it[c].values() == class_cI(*g, b.total, idx[c]).values(), b.rs->name() << " #" << c);
    }
}

TEST_CASE("expressing classes over the fiber basis")
{
    BundleMap b = build_bundle(R(RootKind::A, 2), {}, {2});
    auto g = std::make_shared<const WeylGroup>(b.rs);
    std::vector<CohClass> globals{class_cI(*g, b.total, {0, 0}), class_cI(*g, b.total, {0, 1})};

    Expression one = express_in_basis(b, globals, globals[0]);
    CHECK(one.report.ok());
    CHECK(one.beta[0] == CohClass::constant(b.base, 1));
    CHECK(degree_of(one.beta[1]).kind == ClassDegree::Kind::Zero);

    Expression e20 = express_in_basis(b, globals, class_cI(*g, b.total, {2, 0}));
    CHECK(e20.report.ok());
    CHECK(e20.beta[0] == class_mul(base_tau(b), base_tau(b)));
    CHECK(degree_of(e20.beta[1]).kind == ClassDegree::Kind::Zero);

    Expression e11 = express_in_basis(b, globals, class_cI(*g, b.total, {1, 1}));
    CHECK(e11.report.ok());
    CHECK(e11.beta[1] == base_tau(b));

    SchubertTable t(g);
    Rng rng(8);
    for (int s = 0; s < 10; ++s) {
        CohClass c = random_class(t, 6, rng);
        Expression ex = express_in_basis(b, globals, CohClass(b.total, c.values()));
        CHECK_MESSAGE(ex.report.ok(), ex.report.str());
        for (const auto& beta : ex.beta)
            CHECK(is_coh_class(beta).ok);
    }
    std::vector<CohClass> dup{globals[0], globals[0]};
    CHECK_THROWS_AS(express_in_basis(b, dup, globals[1]), Error);
}

TEST_CASE("basis verification")
{
    for (auto [k, n] : std::vector<std::pair<RootKind, int>>{{RootKind::A, 2}, {RootKind::B, 2}, {RootKind::C, 2}}) {
        auto g = G(k, n);
        SchubertTable t(g);
        BasisFamily fam = basis_family(*g, t.graph());
        BasisVerdict v = verify_basis(t, fam, 1);
        CHECK_MESSAGE(v.independent, v.witness);
        CHECK_MESSAGE(v.spanning, v.witness);
        CHECK(v.json().find("\"independent\":true") != std::string::npos);

        BasisFamily broken = fam;
        auto pos = std::find(broken.indices.begin(), broken.indices.end(), MultiIndex{0, 1}) - broken.indices.begin();
        broken.classes[static_cast<std::size_t>(pos)] = broken.classes[0];
        broken.indices[static_cast<std::size_t>(pos)] = broken.indices[0];
        BasisVerdict bad = verify_basis(t, broken, 1);
        CHECK_FALSE(bad.independent);
        CHECK_FALSE(bad.witness.empty());
    }
}

TEST_CASE("Schubert coordinates")
{
    auto g = G(RootKind::A, 2);
    SchubertTable t(g);
    auto c = schubert_coordinates(t, t.tau(g->simple(2)));
    REQUIRE(c.has_value());
    for (int u = 0; u < g->size(); ++u)
        CHECK((*c)[static_cast<std::size_t>(u)] == Polynomial(3, u == g->simple(2) ? 1 : 0));
    Rng rng(6);
    CohClass r = random_class(t, 3, rng);
    auto rc = schubert_coordinates(t, r);
    REQUIRE(rc.has_value());
    CHECK(reassemble(t, *rc) == r);
}

TEST_CASE("bases over the invariant ring")
{
    for (auto [k, n, d] : std::vector<std::tuple<RootKind, int, int>>{
             {RootKind::A, 2, 4}, {RootKind::B, 2, 5}, {RootKind::D, 3, 4}}) {
        auto rs = R(k, n);
        Report rep = check_bases_over_invariants(*rs, index_set(k, n), d);
        CHECK_MESSAGE(rep.ok(), rep.str());
        CHECK(rep.find("degree_0")->pass);
    }
    auto a2 = R(RootKind::A, 2);
    auto gens = invariant_generators(*a2);
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == P("x1 + x2 + x3", 3));
    auto d3 = invariant_generators(*R(RootKind::D, 3));
    CHECK(d3.back() == P("x1*x2*x3", 3));
}

TEST_CASE("random points have distinct nonzero absolute values")
{
    Rng rng(12);
    for (int s = 0; s < 50; ++s) {
        auto pt = random_point(4, rng);
        std::set<Rational> abs;
        for (const auto& x : pt) {
            CHECK(x != 0);
            abs.insert(x < 0 ? Rational(-x) : x);
        }
        CHECK(abs.size() == pt.size());
    }
}
