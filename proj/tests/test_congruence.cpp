#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "latkit/catalog.hpp"
#include "latkit/congruence.hpp"

using namespace latkit;

namespace {

std::vector<std::vector<std::string>> block_names(const Lattice& lat, const Congruence& c) {
    std::vector<std::vector<std::string>> out;
    for (const auto& b : c.blocks()) {
        std::vector<std::string> blk;
        for (int e : b) blk.push_back(lat.name(e));
        out.push_back(blk);
    }
    return out;
}

/// Reference congruence test written directly against the definition,
/// independent of the Congruence class internals.
bool reference_is_congruence(const Lattice& lat, const std::vector<int>& block_of) {
    for (int x = 0; x < lat.size(); ++x)
        for (int y = 0; y < lat.size(); ++y) {
            if (block_of[static_cast<std::size_t>(x)] != block_of[static_cast<std::size_t>(y)])
                continue;
            for (int z = 0; z < lat.size(); ++z) {
                if (block_of[static_cast<std::size_t>(lat.join(x, z))] !=
                    block_of[static_cast<std::size_t>(lat.join(y, z))])
                    return false;
                if (block_of[static_cast<std::size_t>(lat.meet(x, z))] !=
                    block_of[static_cast<std::size_t>(lat.meet(y, z))])
                    return false;
            }
        }
    return true;
}

/// All set partitions of {0..n-1} as block-id vectors, in restricted
/// growth order.
void all_partitions(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> code(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int max_used) -> void {
        if (i == n) {
            out.push_back(code);
            return;
        }
        for (int b = 0; b <= max_used + 1; ++b) {
            code[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(max_used, b));
        }
    };
    rec(rec, 1, 0);
}

} // namespace

TEST_CASE("principal congruences of the pentagon", "[congruence]") {
    auto n5 = catalog::n5();
    auto idx = [&](const char* s) { return n5.poset().index_of(s); };

    auto cg_bc = principal_congruence(n5, idx("b"), idx("c"));
    REQUIRE(block_names(n5, cg_bc) ==
            std::vector<std::vector<std::string>>{{"0"}, {"a"}, {"b", "c"}, {"1"}});

    auto cg_a1 = principal_congruence(n5, idx("a"), idx("1"));
    REQUIRE(block_names(n5, cg_a1) ==
            std::vector<std::vector<std::string>>{{"0", "b", "c"}, {"a", "1"}});

    auto hex = catalog::hexagon();
    auto cg = principal_congruence(hex, hex.poset().index_of("a"), hex.poset().index_of("A"));
    REQUIRE(cg.block_count() == 5);
    REQUIRE(cg.same_block(hex.poset().index_of("a"), hex.poset().index_of("A")));
}

TEST_CASE("congruence validation", "[congruence]") {
    auto n5 = catalog::n5();
    REQUIRE_THROWS_AS(Congruence::from_blocks(n5, {{0, 1}, {1, 2, 3, 4}}), NotAPartition);
    REQUIRE_THROWS_AS(Congruence::from_blocks(n5, {{0, 1, 2, 3}}), NotAPartition);
    // merging only the two atoms of the diamond is not compatible
    auto b2 = catalog::boolean_lattice(2);
    REQUIRE_FALSE(is_lattice_congruence(
        b2, {{b2.poset().index_of("a"), b2.poset().index_of("b")},
             {b2.poset().index_of("0")},
             {b2.poset().index_of("ab")}}));
}

TEST_CASE("congruence counts and closure completeness", "[congruence][property]") {
    REQUIRE(all_congruences(catalog::chain(2)).size() == 2);
    REQUIRE(all_congruences(catalog::boolean_lattice(2)).size() == 4);
    REQUIRE(all_congruences(catalog::n5()).size() == 5);

    // the congruence lattice of the diamond is the diamond
    auto b2 = catalog::boolean_lattice(2);
    auto con_b2 = congruence_refinement_poset(all_congruences(b2));
    REQUIRE(isomorphic(con_b2, b2.poset()));

    // closure output matches a brute-force filter of all partitions
    for (int n = 2; n <= 5; ++n) {
        for (const auto& lat : catalog::enumerate_lattices(n)) {
            std::vector<std::vector<int>> partitions;
            all_partitions(lat.size(), partitions);
            int reference_count = 0;
            for (const auto& code : partitions)
                if (reference_is_congruence(lat, code)) ++reference_count;
            auto computed = all_congruences(lat);
            REQUIRE(static_cast<int>(computed.size()) == reference_count);
            for (const auto& c : computed) {
                std::vector<int> code(static_cast<std::size_t>(lat.size()));
                for (int e = 0; e < lat.size(); ++e)
                    code[static_cast<std::size_t>(e)] = c.block_of(e);
                REQUIRE(reference_is_congruence(lat, code));
            }
        }
    }
}

TEST_CASE("projections", "[congruence]") {
    auto n5 = catalog::n5();
    auto idx = [&](const char* s) { return n5.poset().index_of(s); };

    auto id = Congruence::identity(n5);
    for (int x = 0; x < n5.size(); ++x) {
        REQUIRE(project_up(n5, id, x) == x);
        REQUIRE(project_down(n5, id, x) == x);
    }

    auto cg_a1 = principal_congruence(n5, idx("a"), idx("1"));
    REQUIRE(project_up(n5, cg_a1, idx("0")) == idx("c"));
    REQUIRE(project_down(n5, cg_a1, idx("1")) == idx("a"));

    auto full = Congruence::full(n5);
    for (int x = 0; x < n5.size(); ++x) REQUIRE(project_up(n5, full, x) == n5.top());
}

TEST_CASE("quotients", "[congruence]") {
    auto hex = catalog::hexagon();
    auto q_id = quotient(hex, Congruence::identity(hex));
    REQUIRE(isomorphic(q_id.lattice.poset(), hex.poset()));

    auto q_full = quotient(hex, Congruence::full(hex));
    REQUIRE(q_full.lattice.size() == 1);

    auto cg = principal_congruence(hex, hex.poset().index_of("a"), hex.poset().index_of("A"));
    auto q = quotient(hex, cg);
    REQUIRE(q.lattice.size() == 5);
    REQUIRE(isomorphic(q.lattice.poset(), catalog::n5().poset()));
}

TEST_CASE("congruence-normality", "[congruence]") {
    REQUIRE(is_congruence_normal(catalog::n5()));
    REQUIRE(is_congruence_normal(catalog::chain(4)));
    REQUIRE(is_congruence_normal(catalog::chain(6)));

    auto m3 = catalog::m3();
    auto w = congruence_normal_violation(m3);
    REQUIRE(w.has_value());
    // every principal congruence of the diamond of three atoms collapses
    // everything, so an atom witnesses against itself
    REQUIRE(w->meet_irr == w->join_irr);
    auto cg_up = principal_congruence(m3, w->meet_irr, m3.poset().upper_covers(w->meet_irr)[0]);
    REQUIRE(cg_up.is_full());
}
