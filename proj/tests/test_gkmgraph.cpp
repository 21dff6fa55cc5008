#include "gkm/invbases.hpp"
#include "gkm/serialize.hpp"

#include <doctest.h>

#include <functional>
#include <tuple>

using namespace gkm;

namespace {

std::shared_ptr<const RootSystem> R(RootKind k, int n)
{
    return std::make_shared<const RootSystem>(RootSystem::build(k, n));
}

Polynomial P(const char* s, int m = 3)
{
    return Polynomial::parse(s, m);
}

// Complete graph on n vertices with alpha(i,j) = x_i - x_j; the connection
// along (i,j) sends (i,k) to (j,k) and (i,j) to (j,i).
std::shared_ptr<GkmGraph> complete_graph(int n)
{
    auto g = std::make_shared<GkmGraph>(n);
    for (int i = 0; i < n; ++i)
        g->add_vertex(std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g->add_edge_pair(i, j, LinearForm::basis(n, i) - LinearForm::basis(n, j));
    for (int e = 0; e < g->edge_count(); ++e) {
        int i = g->edge(e).src, j = g->edge(e).dst;
        std::vector<int> img;
        for (int e2 : g->out_edges(i)) {
            int k = g->edge(e2).dst;
            img.push_back(k == j ? g->reverse(e) : g->find_edge(j, k));
        }
        g->set_connection(e, img);
    }
    return g;
}

GraphPtr s3()
{
    WeylGroup g(R(RootKind::A, 2));
    return flag_graph(g);
}

std::vector<Polynomial> values_from(const GkmGraph& g, const std::function<Polynomial(const WeylElement&)>& f)
{
    std::vector<Polynomial> v;
    for (int p = 0; p < g.vertex_count(); ++p)
        v.push_back(f(WeylElement::parse(g.name(p))));
    return v;
}

}  // namespace

TEST_CASE("axioms on complete graphs")
{
    CHECK(verify_gkm(*complete_graph(2)).ok());
    auto k3 = complete_graph(3);
    Report rep = verify_gkm(*k3);
    CHECK_MESSAGE(rep.ok(), rep.str());

    auto bad = std::make_shared<GkmGraph>(*k3);
    int e = bad->find_edge(0, 1);
    bad->set_label(e, LinearForm::parse("x1 + x2", 3));
    bad->set_label(bad->reverse(e), LinearForm::parse("-x1 - x2", 3));
    Report r2 = verify_gkm(*bad);
    CHECK_FALSE(r2.ok());
    REQUIRE(r2.find("congruence") != nullptr);
    CHECK_FALSE(r2.find("congruence")->pass);
    CHECK(r2.find("antisymmetry")->pass);
}

TEST_CASE("flag graph of S3")
{
    auto g = s3();
    CHECK(g->vertex_count() == 6);
    int e = g->find_edge(g->find_vertex("1,2,3"), g->find_vertex("1,3,2"));
    REQUIRE(e >= 0);
    CHECK(g->edge(e).label == LinearForm::parse("x2 - x3", 3));
    e = g->find_edge(g->find_vertex("2,3,1"), g->find_vertex("3,2,1"));
    REQUIRE(e >= 0);
    CHECK(g->edge(e).label.canonical_orientation() == LinearForm::parse("x2 - x3", 3));
    CHECK(verify_gkm(*g).ok());

    GkmOptions full;
    full.full_independence = true;
    CHECK_FALSE(verify_gkm(*g, full).ok());
}

TEST_CASE("coset graphs satisfy the axioms")
{
    for (RootKind k : {RootKind::A, RootKind::B, RootKind::C, RootKind::D})
        for (int n = k == RootKind::D ? 3 : 2; n <= 3; ++n) {
            auto rs = R(k, n);
            int masks = 1 << n;
            for (int m2 = 0; m2 < masks; ++m2)
                for (int m1 = m2;; m1 = (m1 - 1) & m2) {
                    std::vector<int> s1, s2;
                    for (int i = 0; i < n; ++i) {
                        if (m1 & (1 << i))
                            s1.push_back(i + 1);
                        if (m2 & (1 << i))
                            s2.push_back(i + 1);
                    }
                    auto cg = build_coset_graph(rs, s1, s2);
                    Report rep = verify_gkm(*cg.graph);
                    CHECK_MESSAGE(rep.ok(), rs->name() << " " << m1 << "/" << m2 << "\n" << rep.str());
                    for (int e = 0; e < cg.graph->edge_count(); ++e)
                        CHECK((cg.graph->edge(e).label + cg.graph->edge(cg.graph->reverse(e)).label).is_zero());
                    if (m1 == 0)
                        break;
                }
        }
    auto j42 = build_coset_graph(R(RootKind::A, 3), {1, 3}, {1, 2, 3});
    CHECK(j42.graph->vertex_count() == 6);
    CHECK(verify_gkm(*j42.graph).ok());
}

TEST_CASE("class condition")
{
    auto g = s3();
    CHECK(is_coh_class(CohClass::constant(g, 1)).ok);
    CohClass c10(g, values_from(*g, [](const WeylElement& u) { return Polynomial::variable(3, u.perm(0)); }));
    CHECK(is_coh_class(c10).ok);

    std::vector<Polynomial> v(6, Polynomial(3));
    v[static_cast<std::size_t>(g->find_vertex("1,2,3"))] = P("x1");
    auto bad = is_coh_class(CohClass(g, v));
    CHECK_FALSE(bad.ok);
    CHECK(bad.edge >= 0);
    const Edge& ed = g->edge(bad.edge);
    CHECK((g->name(ed.src) == "1,2,3" || g->name(ed.dst) == "1,2,3"));
}

TEST_CASE("class ring operations and degrees")
{
    auto g = s3();
    auto cx = [&](std::vector<unsigned> I) {
        return CohClass(g, values_from(*g, [&](const WeylElement& u) {
                            return Polynomial::monomial(Monomial(std::vector<unsigned>{I[0], I[1], 0})).permute_signed(
                                {u.perm(0), u.perm(1), u.perm(2)}, {1, 1, 1});
                        }));
    };
    CohClass c10 = cx({1, 0}), c01 = cx({0, 1}), c11 = cx({1, 1});
    CHECK(class_mul(c10, c01) == c11);
    CohClass zero(g, std::vector<Polynomial>(6, Polynomial(3)));
    CHECK(class_add(c10, zero) == c10);
    CHECK(degree_of(CohClass::constant(g, 1)).degree == 0);
    CHECK(degree_of(c11).kind == ClassDegree::Kind::Homogeneous);
    CHECK(degree_of(c11).degree == 4);
    CHECK(degree_of(class_add(CohClass::constant(g, 1), c10)).kind == ClassDegree::Kind::Inhomogeneous);
    CHECK(degree_of(zero).kind == ClassDegree::Kind::Zero);
}

TEST_CASE("sums and products of classes are classes")
{
    for (auto [k, n, count] : std::vector<std::tuple<RootKind, int, int>>{
             {RootKind::A, 2, 30}, {RootKind::B, 2, 30}, {RootKind::A, 3, 100}, {RootKind::B, 3, 100}}) {
        auto g = std::make_shared<const WeylGroup>(R(k, n));
        SchubertTable t(g);
        Rng rng(static_cast<std::uint64_t>(count + n));
        for (int s = 0; s < count; ++s) {
            CohClass c = random_class(t, 2, rng), d = random_class(t, 2, rng);
            REQUIRE(is_coh_class(c).ok);
            REQUIRE(is_coh_class(d).ok);
            CHECK(is_coh_class(class_add(c, d)).ok);
            CHECK(is_coh_class(class_mul(c, d)).ok);
        }
    }
}

TEST_CASE("subgraphs")
{
    auto g = s3();
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(check_subgraph(*g, all).ok);
    std::vector<int> fiber{g->find_vertex("1,2,3"), g->find_vertex("1,3,2")};
    CHECK(check_subgraph(*g, fiber).ok);

    std::vector<int> longedge{g->find_vertex("1,2,3"), g->find_vertex("3,2,1")};
    bool expect = true;
    for (int e : g->out_edges(longedge[0]))
        if (g->edge(e).dst == longedge[1])
            for (int e2 : g->out_edges(longedge[0]))
                if (g->edge(e2).dst == longedge[1] && g->edge(g->connect(e, e2)).dst != longedge[0])
                    expect = false;
    CHECK(check_subgraph(*g, longedge).ok == expect);
    CHECK_THROWS_AS(check_subgraph(*g, std::vector<int>{g->find_vertex("1,2,3"), g->find_vertex("2,3,1")}), Error);

    auto sub = induced_subgraph(*g, fiber);
    CHECK(sub.graph->vertex_count() == 2);
    CHECK(verify_gkm(*sub.graph).ok());
}

TEST_CASE("isomorphisms and pullbacks")
{
    auto g = s3();
    GkmIso id{{0, 1, 2, 3, 4, 5}, RationalMatrix::identity(3)};
    CHECK(verify_iso(id, *g, *g).ok);

    // left multiplication by 231 with its coordinate action
    WeylElement w = WeylElement::parse("2,3,1");
    GkmIso lw;
    for (int p = 0; p < 6; ++p)
        lw.phi.push_back(g->find_vertex((w * WeylElement::parse(g->name(p))).str()));
    lw.psi = w.matrix();
    Verdict v = verify_iso(lw, *g, *g);
    CHECK_MESSAGE(v.ok, v.witness);
    GkmIso twisted = lw;
    twisted.psi = RationalMatrix::identity(3);
    CHECK_FALSE(verify_iso(twisted, *g, *g).ok);

    auto t = SchubertTable(std::make_shared<const WeylGroup>(R(RootKind::A, 2)));
    Rng rng(9);
    for (int s = 0; s < 20; ++s) {
        CohClass c = random_class(t, 2, rng), d = random_class(t, 2, rng);
        CHECK(pullback_class(id, g, c) == c);
        CohClass pc = pullback_class(lw, g, c);
        CHECK(is_coh_class(pc).ok);
        CHECK(pullback_class(lw, g, class_mul(c, d)) == class_mul(pc, pullback_class(lw, g, d)));
        CHECK(pullback_class(inverse(lw), g, pc) == c);
        CHECK(pullback_class(compose(inverse(lw), lw), g, c) == c);
    }
}

TEST_CASE("JSON and DOT export")
{
    auto k3 = complete_graph(3);
    std::string dot = graph_to_dot(*k3);
    CHECK(dot.find("x1 - x2") != std::string::npos);
    CHECK(dot.find("x1 - x3") != std::string::npos);
    CHECK(dot.find("x2 - x3") != std::string::npos);
    int k3edges = 0;
    for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1))
        ++k3edges;
    CHECK(k3edges == 3);

    auto g = s3();
    std::string d6 = graph_to_dot(*g);
    int edges = 0;
    for (std::size_t pos = d6.find(" -- "); pos != std::string::npos; pos = d6.find(" -- ", pos + 1))
        ++edges;
    CHECK(edges == 9);

    auto back = graph_from_json(Json::parse(graph_to_json(*g).dump()));
    CHECK(*back == *g);
    CHECK(graph_hash(*back) == graph_hash(*g));

    CohClass c(g, values_from(*g, [](const WeylElement& u) { return Polynomial::variable(3, u.perm(0)).pow(2); }));
    CohClass c2 = class_from_json(class_to_json(c), back);
    CHECK(c2.values() == c.values());
    CHECK_THROWS_AS(class_from_json(class_to_json(c), k3), Error);
}
