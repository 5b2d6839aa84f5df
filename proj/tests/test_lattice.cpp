#include <catch2/catch_amalgamated.hpp>

#include "latkit/catalog.hpp"
#include "latkit/lattice.hpp"

using namespace latkit;

TEST_CASE("lattice construction and join tables", "[lattice]") {
    auto b2 = catalog::boolean_lattice(2);
    REQUIRE(b2.join(b2.poset().index_of("a"), b2.poset().index_of("b")) == b2.top());
    REQUIRE(b2.meet(b2.poset().index_of("a"), b2.poset().index_of("b")) == b2.bottom());

    // two incomparable minimal upper bounds
    auto bad = FinitePoset::from_covers(
        {"0", "a", "b", "c", "d", "1"},
        {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
         {"c", "1"}, {"d", "1"}});
    auto r = try_lattice(bad);
    REQUIRE_FALSE(r.lattice.has_value());
    REQUIRE(bad.name(r.witness->x) == "a");
    REQUIRE(bad.name(r.witness->y) == "b");
    std::vector<std::string> mub;
    for (int z : r.witness->minimal_upper_bounds) mub.push_back(bad.name(z));
    REQUIRE(mub == std::vector<std::string>{"c", "d"});
    REQUIRE_THROWS_AS(Lattice::from_poset(bad), NotALattice);

    auto antichain = FinitePoset::from_covers({"x", "y"}, {});
    REQUIRE_THROWS_AS(try_lattice(antichain), NotBounded);
}

TEST_CASE("cover-join criterion agrees with the full test", "[lattice][property]") {
    // the criterion checks joins only for pairs covering a common element
    for (const auto& name : {"M3", "N5", "hexagon", "fig1_left", "fig1_right"}) {
        auto lat = std::get<Lattice>(catalog::named(name));
        REQUIRE(is_lattice_by_cover_joins(lat.poset()) == true);
    }
    int checked = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : catalog::enumerate_bounded_posets(n)) {
            REQUIRE(is_lattice_by_cover_joins(p) == try_lattice(p).lattice.has_value());
            ++checked;
        }
    REQUIRE(checked > 200);
}

TEST_CASE("joins and meets of sets", "[lattice]") {
    auto n5 = catalog::n5();
    REQUIRE(n5.join_all(std::vector<int>{}) == n5.bottom());
    REQUIRE(n5.meet_all(std::vector<int>{}) == n5.top());
    std::vector<int> ab{n5.poset().index_of("a"), n5.poset().index_of("b")};
    REQUIRE(n5.join_all(ab) == n5.top());
}

TEST_CASE("atoms and atomic intervals", "[lattice]") {
    auto b3 = catalog::boolean_lattice(3);
    auto atoms = b3.atoms();
    REQUIRE(atoms.size() == 3);
    REQUIRE(b3.join_all(atoms) == b3.top());
    REQUIRE(b3.is_atomic(b3.bottom(), b3.top()));

    auto n5 = catalog::n5();
    auto n5_atoms = n5.atoms();
    REQUIRE(n5_atoms == std::vector<int>{n5.poset().index_of("a"), n5.poset().index_of("b")});
    REQUIRE(n5.is_atomic(n5.bottom(), n5.top()));

    auto left = catalog::fig1_left();
    auto la = left.atoms();
    REQUIRE(la.size() == 2);
    REQUIRE(left.name(left.join_all(la)) == "m");
    REQUIRE_FALSE(left.is_atomic(left.bottom(), left.top()));
}

TEST_CASE("crosscut complexes of named intervals", "[lattice]") {
    auto left = catalog::fig1_left();
    auto gl = left.crosscut_complex(left.bottom(), left.top());
    REQUIRE(gl.is_full_simplex());
    REQUIRE(gl.vertex_count() == 2);

    auto right = catalog::fig1_right();
    auto gr = right.crosscut_complex(right.bottom(), right.top());
    auto path = SimplicialComplex::from_facets({"a", "m", "b"}, {{"a", "m"}, {"m", "b"}});
    REQUIRE(isomorphic(gr, path));

    auto m3 = catalog::m3();
    auto gm = m3.crosscut_complex(m3.bottom(), m3.top());
    REQUIRE(gm.vertex_count() == 3);
    REQUIRE(gm.f_vector() == std::vector<long long>{3});

    REQUIRE_THROWS_AS(m3.crosscut_complex(m3.bottom(), m3.bottom()), TrivialInterval);
}

TEST_CASE("crosscut-simplicial verdicts", "[lattice]") {
    REQUIRE(catalog::fig1_left().is_crosscut_simplicial());
    REQUIRE(catalog::n5().is_crosscut_simplicial());

    auto right = catalog::fig1_right();
    auto w = right.crosscut_violation();
    REQUIRE(w.has_value());
    REQUIRE(right.name(w->x) == "0");
    REQUIRE(right.name(w->y) == "1");
    std::vector<std::string> sub;
    for (int e : w->subset) sub.push_back(right.name(e));
    REQUIRE(sub == std::vector<std::string>{"a", "b"});
}

TEST_CASE("semidistributivity", "[lattice]") {
    auto m3 = catalog::m3();
    auto w = m3.meet_sd_violation();
    REQUIRE(w.has_value());
    REQUIRE(m3.name(w->x) == "a");
    REQUIRE(m3.name(w->y) == "b");
    REQUIRE(m3.name(w->z) == "c");

    REQUIRE(catalog::n5().is_semidistributive());

    auto right = catalog::fig1_right();
    REQUIRE(right.is_join_semidistributive());
    auto mw = right.meet_sd_violation();
    REQUIRE(mw.has_value());
    REQUIRE(right.name(mw->x) == "a");
    REQUIRE(right.name(mw->y) == "b");
    REQUIRE(right.name(mw->z) == "m");

    REQUIRE(catalog::boolean_lattice(3).is_distributive());
    REQUIRE_FALSE(catalog::n5().is_distributive());
}

TEST_CASE("irreducibles", "[lattice]") {
    auto c4 = catalog::chain(4);
    auto irr = c4.irreducibles();
    REQUIRE(irr.join_irreducible.size() == 3);
    REQUIRE(irr.meet_irreducible.size() == 3);

    auto n5 = catalog::n5();
    auto n5irr = n5.irreducibles();
    std::vector<std::string> joins, meets;
    for (auto [x, low] : n5irr.join_irreducible) joins.push_back(n5.name(x));
    for (auto [x, up] : n5irr.meet_irreducible) meets.push_back(n5.name(x));
    REQUIRE(joins == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(meets == std::vector<std::string>{"a", "b", "c"});

    auto b2 = catalog::boolean_lattice(2);
    auto b2irr = b2.irreducibles();
    REQUIRE(b2irr.join_irreducible.size() == 2); // the atoms
    for (auto [x, low] : b2irr.join_irreducible) REQUIRE(low == b2.bottom());
}

TEST_CASE("crosscut shape matches the witness characterisation", "[lattice][property]") {
    // an interval's crosscut complex is a simplex or its boundary exactly
    // when no proper atom subset joins to the top of the interval
    for (int n = 1; n <= 5; ++n)
        for (const auto& lat : catalog::enumerate_lattices(n)) {
            bool via_witness = lat.is_crosscut_simplicial();
            bool via_shape = true;
            for (int x = 0; x < lat.size() && via_shape; ++x)
                for (int y = 0; y < lat.size(); ++y) {
                    if (x == y || !lat.poset().leq(x, y)) continue;
                    auto g = lat.crosscut_complex(x, y);
                    if (!g.is_full_simplex() && !g.is_simplex_boundary()) {
                        via_shape = false;
                        break;
                    }
                }
            REQUIRE(via_witness == via_shape);
        }
}
