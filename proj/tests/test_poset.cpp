#include <catch2/catch_amalgamated.hpp>

#include "latkit/catalog.hpp"
#include "latkit/poset.hpp"
#include "latkit/simplicial.hpp"

using namespace latkit;

namespace {

FinitePoset two_chain() { return FinitePoset::from_covers({"0", "1"}, {{"0", "1"}}); }

FinitePoset b2_poset() {
    return FinitePoset::from_covers({"0", "a", "b", "1"},
                                    {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

} // namespace

TEST_CASE("from_covers builds and validates", "[poset]") {
    auto c2 = two_chain();
    REQUIRE(c2.size() == 2);
    REQUIRE(c2.leq(0, 1));
    REQUIRE_FALSE(c2.leq(1, 0));

    auto b2 = b2_poset();
    REQUIRE(b2.cover_pairs().size() == 4);
    REQUIRE(b2.leq(b2.index_of("0"), b2.index_of("1")));

    SECTION("transitively implied cover is rejected") {
        REQUIRE_THROWS_AS(FinitePoset::from_covers({"0", "1", "2"},
                                                   {{"0", "1"}, {"1", "2"}, {"0", "2"}}),
                          NonHasseCover);
    }
    SECTION("cycles are rejected") {
        REQUIRE_THROWS_AS(FinitePoset::from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}}),
                          CycleDetected);
    }
    SECTION("unknown elements are rejected") {
        REQUIRE_THROWS_AS(FinitePoset::from_covers({"x"}, {{"x", "z"}}), UnknownElement);
    }
    SECTION("duplicate names are rejected") {
        REQUIRE_THROWS_AS(FinitePoset::from_covers({"x", "x"}, {}), InvalidInput);
    }
}

TEST_CASE("dual and bounds", "[poset]") {
    auto n5 = catalog::n5().poset();
    REQUIRE(isomorphic(n5.dual(), n5));
    REQUIRE(n5.dual().dual().same_relation(n5));

    auto antichain = FinitePoset::from_covers({"x", "y"}, {});
    REQUIRE_FALSE(antichain.bounds().has_value());

    auto b = n5.bounds();
    REQUIRE(b.has_value());
    REQUIRE(n5.name(b->first) == "0");
    REQUIRE(n5.name(b->second) == "1");
}

TEST_CASE("intervals", "[poset]") {
    auto b3 = catalog::boolean_lattice(3).poset();
    int bot = b3.index_of("0"), a = b3.index_of("a");
    REQUIRE(isomorphic(b3.closed_interval(bot, a), two_chain()));
    auto whole = b3.closed_interval(bot, b3.index_of("abc"));
    REQUIRE(whole.same_relation(b3));

    auto n5 = catalog::n5().poset();
    auto sub = n5.closed_interval(n5.index_of("0"), n5.index_of("c"));
    REQUIRE(sub.names() == std::vector<std::string>{"0", "b", "c"});
    REQUIRE(isomorphic(sub, catalog::chain(3).poset()));

    REQUIRE_THROWS_AS(n5.closed_interval(n5.index_of("a"), n5.index_of("c")), NotComparable);
    REQUIRE(n5.open_interval(n5.index_of("0"), n5.index_of("1")) ==
            std::vector<int>{n5.index_of("a"), n5.index_of("b"), n5.index_of("c")});
}

TEST_CASE("order-convex sets and filters", "[poset]") {
    auto n5 = catalog::n5().poset();
    for (int x = 0; x < n5.size(); ++x) REQUIRE(n5.is_order_convex({x}));
    REQUIRE_FALSE(n5.is_order_convex({n5.index_of("0"), n5.index_of("c")}));
    REQUIRE(n5.is_order_convex({n5.index_of("b"), n5.index_of("c")}));

    auto b2 = b2_poset();
    REQUIRE(b2.is_order_filter({b2.index_of("a"), b2.index_of("1")}));
    REQUIRE_FALSE(b2.is_order_filter({b2.index_of("a")}));
    REQUIRE(b2.is_order_ideal({b2.index_of("0"), b2.index_of("a")}));
}

TEST_CASE("mobius values", "[poset]") {
    auto c3 = catalog::chain(3).poset();
    REQUIRE(c3.mobius(c3.index_of("0"), c3.index_of("2")) == 0);

    auto b3 = catalog::boolean_lattice(3).poset();
    REQUIRE(b3.mobius(b3.index_of("0"), b3.index_of("abc")) == -1);

    // unrolling the recursion on the diamond of three atoms: 1 - 3 = -2
    auto m3 = catalog::m3().poset();
    REQUIRE(m3.mobius(m3.index_of("0"), m3.index_of("1")) == 2);

    auto f1r = catalog::fig1_right().poset();
    REQUIRE(f1r.mobius(f1r.index_of("0"), f1r.index_of("1")) == 0);

    REQUIRE_THROWS_AS(m3.mobius(m3.index_of("a"), m3.index_of("b")), NotComparable);
}

TEST_CASE("mobius table matches pointwise evaluation", "[poset]") {
    for (const auto& p : {catalog::n5().poset(), catalog::fig1_left().poset(),
                          catalog::hexagon().poset()}) {
        auto table = p.mobius_table();
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y)
                if (p.leq(x, y))
                    REQUIRE(table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
                            p.mobius(x, y));
    }
}

TEST_CASE("order complex and chain counting", "[poset]") {
    auto antichain = FinitePoset::from_covers({"x", "y"}, {});
    auto oc = order_complex(antichain);
    REQUIRE(oc.vertex_count() == 2);
    REQUIRE(oc.f_vector() == std::vector<long long>{2});

    // proper part of the hexagon: two disjoint edges
    auto hex = catalog::hexagon().poset();
    auto proper = hex.open_interval(hex.index_of("0"), hex.index_of("1"));
    auto pc = order_complex(hex, proper);
    REQUIRE(pc.vertex_count() == 4);
    REQUIRE(pc.f_vector() == std::vector<long long>{4, 2});
    REQUIRE(pc.reduced_euler() == 1);

    // chain-count route agrees with the materialised complex
    for (const auto& p : {catalog::n5().poset(), hex, catalog::fig1_right().poset()}) {
        auto counts = p.chain_count_by_dim();
        auto f = order_complex(p).f_vector();
        REQUIRE(counts.size() == f.size());
        for (std::size_t i = 0; i < f.size(); ++i) REQUIRE(counts[i] == f[i]);
        REQUIRE(p.order_complex_reduced_euler() == order_complex(p).reduced_euler());
    }
}

TEST_CASE("saturated chains", "[poset]") {
    auto n5 = catalog::n5().poset();
    auto chains = n5.saturated_chains(n5.index_of("0"), n5.index_of("1"));
    REQUIRE(chains.size() == 2);
    auto name_chain = [&](const Chain& c) {
        std::vector<std::string> out;
        for (int e : c) out.push_back(n5.name(e));
        return out;
    };
    REQUIRE(name_chain(chains[0]) == std::vector<std::string>{"0", "a", "1"});
    REQUIRE(name_chain(chains[1]) == std::vector<std::string>{"0", "b", "c", "1"});

    // early stop visits only the first chain
    int visited = 0;
    n5.for_each_saturated_chain(n5.index_of("0"), n5.index_of("1"), [&](const Chain&) {
        ++visited;
        return false;
    });
    REQUIRE(visited == 1);
}

TEST_CASE("mobius equals reduced euler of the proper part", "[poset][property]") {
    std::vector<FinitePoset> subjects;
    for (const auto& name : {"M3", "N5", "hexagon", "fig1_left", "fig1_right"})
        subjects.push_back(std::get<Lattice>(catalog::named(name)).poset());
    subjects.push_back(catalog::boolean_lattice(3).poset());
    subjects.push_back(catalog::chain(4).poset());
    for (const auto& p : subjects) {
        auto b = p.bounds();
        REQUIRE(b.has_value());
        auto proper = p.open_interval(b->first, b->second);
        long long chi = proper.empty() ? -1 : p.induced(proper).order_complex_reduced_euler();
        REQUIRE(p.mobius(b->first, b->second) == chi);
    }
}

TEST_CASE("mobius dual involution", "[poset][property]") {
    for (const auto& p : {catalog::n5().poset(), catalog::fig1_left().poset()}) {
        auto d = p.dual();
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y)
                if (p.leq(x, y)) REQUIRE(p.mobius(x, y) == d.mobius(y, x));
    }
}

TEST_CASE("order relation is recoverable from the covers", "[poset][property]") {
    for (const auto& p : {catalog::n5().poset(), catalog::weak_order(3).poset(),
                          catalog::tamari(4).poset()}) {
        std::vector<std::pair<std::string, std::string>> covers;
        for (auto& [lo, hi] : p.cover_pairs()) covers.emplace_back(p.name(lo), p.name(hi));
        auto rebuilt = FinitePoset::from_covers(p.names(), covers);
        REQUIRE(rebuilt.same_relation(p));
    }
}
