#include "gkm/parabolic.hpp"
#include "gkm/rng.hpp"
#include "gkm/rootsys.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gkm;

namespace {

std::shared_ptr<const RootSystem> R(RootKind k, int n)
{
    return std::make_shared<const RootSystem>(RootSystem::build(k, n));
}

LinearForm L(const char* s, int m)
{
    return LinearForm::parse(s, m);
}

std::set<LinearForm> as_set(const std::vector<LinearForm>& v)
{
    return {v.begin(), v.end()};
}

unsigned long long factorial(int n)
{
    unsigned long long f = 1;
    for (int k = 2; k <= n; ++k)
        f *= static_cast<unsigned long long>(k);
    return f;
}

int min_rank(RootKind k)
{
    return k == RootKind::A ? 1 : k == RootKind::D ? 3 : 2;
}

}  // namespace

TEST_CASE("positive roots")
{
    auto a2 = R(RootKind::A, 2);
    CHECK(as_set(a2->positive_roots()) == std::set<LinearForm>{L("x1 - x2", 3), L("x1 - x3", 3), L("x2 - x3", 3)});
    auto b2 = R(RootKind::B, 2);
    CHECK(as_set(b2->positive_roots()) ==
          std::set<LinearForm>{L("x1", 2), L("x2", 2), L("x1 - x2", 2), L("x1 + x2", 2)});
    CHECK(R(RootKind::C, 2)->is_positive(L("2*x1", 2)));
    CHECK(R(RootKind::D, 3)->positive_roots().size() == 6);
    for (int n = 1; n <= 4; ++n) {
        CHECK(R(RootKind::A, n)->positive_roots().size() == static_cast<std::size_t>(n * (n + 1) / 2));
        if (n >= 2) {
            CHECK(R(RootKind::B, n)->positive_roots().size() == static_cast<std::size_t>(n * n));
            CHECK(R(RootKind::C, n)->positive_roots().size() == static_cast<std::size_t>(n * n));
        }
        if (n >= 3)
            CHECK(R(RootKind::D, n)->positive_roots().size() == static_cast<std::size_t>(n * (n - 1)));
    }
    CHECK_THROWS_AS(R(RootKind::A, 0), Error);
    CHECK_THROWS_AS(R(RootKind::B, 1), Error);
    CHECK_THROWS_AS(R(RootKind::C, 1), Error);
    CHECK_THROWS_AS(R(RootKind::D, 2), Error);
    CHECK(R(RootKind::A, 2)->varcount() == 3);
    CHECK(R(RootKind::D, 3)->varcount() == 3);
}

TEST_CASE("reflections")
{
    auto a2 = R(RootKind::A, 2);
    CHECK(a2->reflection(L("x1 - x2", 3)) == WeylElement::parse("2,1,3"));
    auto b2 = R(RootKind::B, 2);
    CHECK(b2->reflection(L("x1", 2)) == WeylElement::parse("-1,2"));
    auto d3 = R(RootKind::D, 3);
    CHECK(d3->reflection(L("x1 + x3", 3)) == WeylElement::parse("-3,2,-1"));
    CHECK(R(RootKind::C, 2)->reflection(L("2*x1", 2)) == WeylElement::parse("-1,2"));
}

TEST_CASE("action on linear forms")
{
    auto a2 = R(RootKind::A, 2);
    CHECK(WeylElement::identity(3).act(L("x1 - x3", 3)) == L("x1 - x3", 3));
    CHECK(WeylElement::parse("2,3,1").act(L("x1 - x2", 3)) == L("x2 - x3", 3));
    CHECK(WeylElement::parse("-2,1").act(L("x1", 2)) == L("-x2", 2));
    CHECK(WeylElement::parse("-2,1").display() != "");
    CHECK(WeylElement::parse("2,-1").str() == "2,-1");
}

TEST_CASE("reduced words")
{
    auto a2 = R(RootKind::A, 2);
    CHECK(a2->reduced_word(WeylElement::identity(3)).empty());
    CHECK(a2->reduced_word(WeylElement::parse("3,2,1")) == std::vector<int>{1, 2, 1});
    auto b2 = R(RootKind::B, 2);
    CHECK(b2->length(b2->longest()) == 4);
    CHECK(b2->reduced_word(b2->longest()).size() == 4);
    CHECK(b2->longest() == WeylElement::parse("-1,-2"));
}

TEST_CASE("group orders")
{
    for (int n = 1; n <= 4; ++n) {
        CHECK(WeylGroup(R(RootKind::A, n)).size() == static_cast<int>(factorial(n + 1)));
        if (n >= 2) {
            CHECK(WeylGroup(R(RootKind::B, n)).size() == static_cast<int>((1ULL << n) * factorial(n)));
            CHECK(WeylGroup(R(RootKind::C, n)).size() == static_cast<int>((1ULL << n) * factorial(n)));
        }
        if (n >= 3)
            CHECK(WeylGroup(R(RootKind::D, n)).size() == static_cast<int>((1ULL << (n - 1)) * factorial(n)));
    }
    CHECK_THROWS_AS(R(RootKind::A, 4)->all_elements(100), CapExceeded);
}

TEST_CASE("group axioms, words and lengths")
{
    for (auto [k, n] : std::vector<std::pair<RootKind, int>>{
             {RootKind::A, 3}, {RootKind::B, 3}, {RootKind::C, 3}, {RootKind::D, 4}, {RootKind::B, 4}}) {
        auto rs = R(k, n);
        WeylGroup g(rs);
        int m = rs->varcount();
        std::string bad;
        for (int i = 0; i < g.size() && bad.empty(); ++i) {
            const WeylElement& w = g.element(i);
            auto word = rs->reduced_word(w);
            if (static_cast<int>(word.size()) != rs->length(w) || rs->from_word(word) != w)
                bad = "word " + w.str();
            if (rs->from_word(rs->reduced_word_alt(w)) != w)
                bad = "alt word " + w.str();
            if (w * w.inverse() != WeylElement::identity(m))
                bad = "inverse " + w.str();
            for (int s = 1; s <= n; ++s)
                if (std::abs(rs->length(w * rs->simple_reflection(s)) - rs->length(w)) != 1)
                    bad = "length step " + w.str();
            if (g.index(w) != i)
                bad = "index " + w.str();
        }
        CHECK_MESSAGE(bad.empty(), rs->name() << ": " << bad);
        for (int i = 1; i < g.size(); ++i)
            CHECK(rs->canonical_less(g.element(i - 1), g.element(i)));
    }
}

TEST_CASE("associativity sampled")
{
    auto rs = R(RootKind::B, 3);
    WeylGroup g(rs);
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        int a = static_cast<int>(rng.uniform(0, g.size() - 1)), b = static_cast<int>(rng.uniform(0, g.size() - 1)),
            c = static_cast<int>(rng.uniform(0, g.size() - 1));
        CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
    }
}

TEST_CASE("reflection conjugation identity")
{
    auto check = [](const RootSystem& rs, const WeylElement& w, const LinearForm& beta) {
        return w * rs.reflection(beta) == rs.reflection(w.act(beta)) * w;
    };
    for (RootKind k : {RootKind::A, RootKind::B, RootKind::C}) {
        auto rs = R(k, 2);
        for (const auto& w : rs->all_elements())
            for (const auto& beta : rs->positive_roots())
                CHECK(check(*rs, w, beta));
    }
    Rng rng(17);
    for (RootKind k : {RootKind::A, RootKind::B, RootKind::C, RootKind::D}) {
        auto rs = R(k, 3);
        auto all = rs->all_elements();
        const auto& pos = rs->positive_roots();
        for (int t = 0; t < 100; ++t) {
            const auto& w = all[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(all.size()) - 1))];
            const auto& beta = pos[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pos.size()) - 1))];
            CHECK(check(*rs, w, beta));
        }
    }
}

TEST_CASE("weak left order")
{
    auto rs = R(RootKind::A, 2);
    auto s1 = rs->simple_reflection(1), s2 = rs->simple_reflection(2);
    CHECK(rs->weak_left_leq(s1, s2 * s1));
    CHECK_FALSE(rs->weak_left_leq(s1, s1 * s2));
    WeylGroup g(R(RootKind::B, 2));
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v) {
            bool def = g.rs().length(g.element(u) * g.element(v).inverse()) == g.length(u) - g.length(v);
            CHECK(g.weak_left_leq(v, u) == def);
            if (def)
                CHECK(g.bruhat_leq(v, u));
        }
}

TEST_CASE("Bruhat order")
{
    WeylGroup g(R(RootKind::A, 2));
    int id = g.identity(), w0 = g.longest();
    for (int u = 0; u < g.size(); ++u) {
        CHECK(g.bruhat_leq(id, u));
        CHECK(g.bruhat_leq(u, w0));
    }
    int s1 = g.simple(1), s2 = g.simple(2);
    CHECK_FALSE(g.bruhat_leq(s1, s2));
    CHECK(g.bruhat_leq(s1, g.mul(s2, s1)));
    CHECK(g.bruhat_leq(s1, g.mul(s1, s2)));
}

TEST_CASE("root closures and parabolic subgroups")
{
    auto rs = R(RootKind::A, 3);
    CHECK(rs->closure({}).roots.empty());
    CHECK(rs->parabolic_elements({}).size() == 1);
    CHECK(rs->closure({1, 2}).roots.size() == 3);
    CHECK(rs->parabolic_elements({1, 3}).size() == 4);
    CHECK(rs->parabolic_elements({1, 2, 3}).size() == 24);
}

TEST_CASE("parabolic subgroups permute the relative roots")
{
    for (RootKind k : {RootKind::A, RootKind::B, RootKind::C, RootKind::D}) {
        for (int n = std::max(2, min_rank(k)); n <= 3; ++n) {
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
                    std::set<LinearForm> rel;
                    for (int r : rs->closure(s2).roots)
                        if (!rs->in_closure(r, s1))
                            rel.insert(rs->positive_roots()[static_cast<std::size_t>(r)]);
                    for (const auto& w : rs->parabolic_elements(s1)) {
                        std::set<LinearForm> img;
                        for (const auto& b : rel)
                            img.insert(w.act(b));
                        CHECK(img == rel);
                    }
                    if (m1 == 0)
                        break;
                }
        }
    }
}

TEST_CASE("minimal coset representatives")
{
    auto rs = R(RootKind::B, 3);
    std::vector<int> sigma{2, 3};
    auto reps = minimal_representatives(*rs, sigma);
    CHECK(reps.size() == 6);
    for (const auto& w : rs->all_elements()) {
        WeylElement r = rs->min_coset_rep(w, sigma);
        for (const auto& u : rs->parabolic_elements(sigma))
            CHECK(rs->length(r) <= rs->length(w * u));
    }
    CHECK(minimal_representatives(*rs, {1, 2, 3}).size() == 1);
    CHECK(minimal_representatives(*rs, {1, 2, 3}).front() == WeylElement::identity(3));
}

TEST_CASE("parsing")
{
    CHECK(parse_kind("a") == RootKind::A);
    CHECK_THROWS_AS(parse_kind("E"), Error);
    CHECK_THROWS_AS(RootSystem::build(RootKind::D, 1), Error);
    CHECK_THROWS_AS(WeylElement::parse("1,1"), Error);
}
