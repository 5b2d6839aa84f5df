#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "latkit/catalog.hpp"
#include "latkit/congruence.hpp"
#include "latkit/simplicial.hpp"

using namespace latkit;

TEST_CASE("named fixtures", "[catalog]") {
    REQUIRE(isomorphic(catalog::tamari(3).poset(), catalog::n5().poset()));
    REQUIRE(isomorphic(catalog::weak_order(3).poset(), catalog::hexagon().poset()));

    auto left = catalog::fig1_left();
    REQUIRE(left.size() == 7);
    std::set<std::pair<std::string, std::string>> left_covers;
    for (auto& [lo, hi] : left.poset().cover_pairs())
        left_covers.emplace(left.name(lo), left.name(hi));
    const std::set<std::pair<std::string, std::string>> expected{
        {"0", "a"}, {"0", "b"}, {"a", "l"}, {"a", "m"}, {"b", "m"},
        {"b", "r"}, {"l", "1"}, {"m", "1"}, {"r", "1"}};
    REQUIRE(left_covers == expected);
    auto right = catalog::fig1_right();
    REQUIRE(right.size() == 7);
    REQUIRE(right.poset().cover_pairs().size() == 9);

    // catalan and factorial sizes
    REQUIRE(catalog::tamari(4).size() == 14);
    REQUIRE(catalog::tamari(5).size() == 42);
    REQUIRE(catalog::weak_order(4).size() == 24);

    REQUIRE_THROWS_AS(catalog::named("nonesuch"), UnknownName);
    REQUIRE_THROWS_AS(catalog::weak_order(5), ParamOutOfRange);
    REQUIRE_THROWS_AS(catalog::tamari(6), ParamOutOfRange);
    REQUIRE_THROWS_AS(catalog::named("braid", {5}), ParamOutOfRange);
    REQUIRE_THROWS_AS(catalog::named("boolean"), ParamOutOfRange);
}

TEST_CASE("weak order and rotation lattices are semidistributive", "[catalog][property]") {
    for (int n = 2; n <= 4; ++n) {
        auto w = catalog::weak_order(n);
        REQUIRE(w.is_semidistributive());
        REQUIRE(w.is_crosscut_simplicial());
    }
    for (int n = 2; n <= 5; ++n) {
        auto t = catalog::tamari(n);
        REQUIRE(t.is_semidistributive());
        REQUIRE(t.is_crosscut_simplicial());
    }
}

TEST_CASE("weak order and rotation lattices are congruence-normal", "[catalog][property]") {
    for (int n = 2; n <= 4; ++n) {
        REQUIRE(is_congruence_normal(catalog::weak_order(n)));
        REQUIRE(is_congruence_normal(catalog::tamari(n)));
    }
}

TEST_CASE("lattice enumeration counts", "[catalog]") {
    const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15};
    for (int n = 1; n <= 6; ++n)
        REQUIRE(catalog::enumerate_lattices(n).size() == expected[static_cast<std::size_t>(n) - 1]);
    REQUIRE_THROWS_AS(catalog::enumerate_lattices(0), ParamOutOfRange);
    REQUIRE_THROWS_AS(catalog::enumerate_lattices(8), ParamOutOfRange);
}

TEST_CASE("five-element classes include the pentagon and the diamond", "[catalog]") {
    auto ls = catalog::enumerate_lattices(5);
    bool has_n5 = false, has_m3 = false;
    for (const auto& lat : ls) {
        if (isomorphic(lat.poset(), catalog::n5().poset())) has_n5 = true;
        if (isomorphic(lat.poset(), catalog::m3().poset())) has_m3 = true;
    }
    REQUIRE(has_n5);
    REQUIRE(has_m3);
}

namespace {

/// Brute-force count of five-element lattices up to isomorphism, written
/// directly against the definitions: all orientations of element pairs,
/// transitivity filter, unique lub/glb for every pair, permutation
/// deduplication.
int reference_lattice_count_n5() {
    const int n = 5;
    std::vector<std::array<std::array<bool, 5>, 5>> lattices;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::array<std::array<bool, 5>, 5> leq{};
    auto is_lattice = [&]() {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int lubs = 0, glbs = 0;
                for (int u = 0; u < n; ++u) {
                    if (!(leq[i][u] && leq[j][u])) continue;
                    bool minimal = true;
                    for (int v = 0; v < n; ++v)
                        if (v != u && leq[i][v] && leq[j][v] && leq[v][u]) minimal = false;
                    if (minimal) ++lubs;
                }
                for (int u = 0; u < n; ++u) {
                    if (!(leq[u][i] && leq[u][j])) continue;
                    bool maximal = true;
                    for (int v = 0; v < n; ++v)
                        if (v != u && leq[v][i] && leq[v][j] && leq[u][v]) maximal = false;
                    if (maximal) ++glbs;
                }
                if (lubs != 1 || glbs != 1) return false;
            }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == pairs.size()) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && leq[i][j])
                        for (int l = 0; l < n; ++l)
                            if (leq[j][l] && !leq[i][l]) return; // not transitive
            if (is_lattice()) lattices.push_back(leq);
            return;
        }
        auto [i, j] = pairs[k];
        leq[i][j] = false;
        leq[j][i] = false;
        self(self, k + 1);
        leq[i][j] = true;
        self(self, k + 1);
        leq[i][j] = false;
        leq[j][i] = true;
        self(self, k + 1);
        leq[j][i] = false;
    };
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    rec(rec, 0);

    // deduplicate up to isomorphism by trying all permutations
    std::vector<std::array<std::array<bool, 5>, 5>> classes;
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    for (const auto& cand : lattices) {
        bool fresh = true;
        for (const auto& rep : classes) {
            std::array<int, 5> p = perm;
            do {
                bool match = true;
                for (int i = 0; i < n && match; ++i)
                    for (int j = 0; j < n; ++j)
                        if (cand[i][j] != rep[p[static_cast<std::size_t>(i)]]
                                             [p[static_cast<std::size_t>(j)]]) {
                            match = false;
                            break;
                        }
                if (match) {
                    fresh = false;
                    break;
                }
            } while (std::next_permutation(p.begin(), p.end()));
            if (!fresh) break;
        }
        if (fresh) classes.push_back(cand);
    }
    return static_cast<int>(classes.size());
}

} // namespace

TEST_CASE("five-element count matches an independent brute force", "[catalog][oracle]") {
    REQUIRE(reference_lattice_count_n5() == 5);
    REQUIRE(catalog::enumerate_lattices(5).size() == 5);
}

TEST_CASE("generated objects validate themselves", "[catalog][property]") {
    // generators go through the lattice constructor, so joins and meets
    // exist; spot-check absorption and idempotence on a midsize fixture
    auto t4 = catalog::tamari(4);
    for (int x = 0; x < t4.size(); ++x) {
        REQUIRE(t4.join(x, x) == x);
        for (int y = 0; y < t4.size(); ++y) {
            REQUIRE(t4.join(x, y) == t4.join(y, x));
            REQUIRE(t4.meet(x, t4.join(x, y)) == x);
            REQUIRE(t4.join(x, t4.meet(x, y)) == x);
            for (int z = 0; z < t4.size(); ++z)
                REQUIRE(t4.join(x, t4.join(y, z)) == t4.join(t4.join(x, y), z));
        }
    }
}
