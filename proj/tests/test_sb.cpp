#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "latkit/catalog.hpp"
#include "latkit/lattice.hpp"

using namespace latkit;

namespace {

/// Chain-enumerating reference checker: materialises every saturated
/// chain and tests the label conditions literally. Used as the oracle
/// for the reachability-based implementation.
bool naive_check_sb(const Lattice& lat, const EdgeLabelling& lab, SbVariant variant) {
    const FinitePoset& p = lat.poset();
    for (int x = 0; x < p.size(); ++x) {
        const auto& covers = p.upper_covers(x);
        for (std::size_t i = 0; i < covers.size(); ++i)
            for (std::size_t j = i + 1; j < covers.size(); ++j)
                if (lab.at(x, covers[i]) == lab.at(x, covers[j])) return false;
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << covers.size()); ++b) {
            std::vector<int> subset;
            std::set<std::string> b_labels, other_labels;
            for (std::size_t i = 0; i < covers.size(); ++i) {
                if (b >> i & 1) {
                    subset.push_back(covers[i]);
                    b_labels.insert(lab.at(x, covers[i]));
                } else {
                    other_labels.insert(lab.at(x, covers[i]));
                }
            }
            int join = lat.join_all(subset);
            for (const auto& chain : p.saturated_chains(x, join)) {
                std::set<std::string> seen;
                for (std::size_t k = 0; k + 1 < chain.size(); ++k)
                    seen.insert(lab.at(chain[k], chain[k + 1]));
                if (variant == SbVariant::sb) {
                    if (seen != b_labels) return false;
                } else {
                    for (const auto& l : b_labels)
                        if (!seen.count(l)) return false;
                    for (const auto& l : seen)
                        if (other_labels.count(l)) return false;
                }
            }
        }
    }
    return true;
}

EdgeLabelling b2_crossed() {
    auto b2 = catalog::boolean_lattice(2);
    EdgeLabelling lab;
    auto e = [&](const char* lo, const char* hi) {
        return std::make_pair(b2.poset().index_of(lo), b2.poset().index_of(hi));
    };
    lab.labels[e("0", "a")] = "1";
    lab.labels[e("0", "b")] = "2";
    lab.labels[e("a", "ab")] = "2";
    lab.labels[e("b", "ab")] = "1";
    return lab;
}

} // namespace

TEST_CASE("named labellings", "[sb]") {
    auto c2 = catalog::chain(2);
    EdgeLabelling single;
    single.labels[{0, 1}] = "1";
    REQUIRE_FALSE(check_sb(c2, single, SbVariant::sb).has_value());

    auto b2 = catalog::boolean_lattice(2);
    REQUIRE_FALSE(check_sb(b2, b2_crossed(), SbVariant::sb).has_value());
    REQUIRE_FALSE(check_sb(b2, b2_crossed(), SbVariant::sb_prime).has_value());

    // the same label on both bottom covers breaks distinctness
    EdgeLabelling clash = b2_crossed();
    clash.labels[{b2.poset().index_of("0"), b2.poset().index_of("b")}] = "1";
    auto w = check_sb(b2, clash, SbVariant::sb);
    REQUIRE(w.has_value());

    EdgeLabelling incomplete;
    incomplete.labels[{b2.poset().index_of("0"), b2.poset().index_of("a")}] = "1";
    REQUIRE_THROWS_AS(check_sb(b2, incomplete, SbVariant::sb), IncompleteLabelling);
}

TEST_CASE("search exhausts the diamond of three atoms", "[sb]") {
    auto m3 = catalog::m3();
    for (int k = 1; k <= 3; ++k) {
        auto found = search_sb(m3, {k, SbVariant::sb, 10'000'000});
        REQUIRE_FALSE(found.has_value());
    }
    REQUIRE_FALSE(m3.is_crosscut_simplicial());
}

TEST_CASE("search finds labellings where they exist", "[sb]") {
    auto b2 = catalog::boolean_lattice(2);
    auto found = search_sb(b2, {2, SbVariant::sb, 10'000'000});
    REQUIRE(found.has_value());
    REQUIRE_FALSE(check_sb(b2, *found, SbVariant::sb).has_value());

    auto n5 = catalog::n5();
    auto found5 = search_sb(n5, {3, SbVariant::sb, 10'000'000});
    REQUIRE(found5.has_value());
    REQUIRE_FALSE(check_sb(n5, *found5, SbVariant::sb).has_value());
}

TEST_CASE("search budget guard", "[sb]") {
    REQUIRE_THROWS_AS(search_sb(catalog::boolean_lattice(2), {2, SbVariant::sb, 1}),
                      SearchBudgetExceeded);
}

TEST_CASE("reachability checker agrees with chain enumeration", "[sb][property]") {
    std::mt19937 gen(2024);
    for (int n = 2; n <= 5; ++n) {
        for (const auto& lat : catalog::enumerate_lattices(n)) {
            const auto& edges = lat.poset().cover_pairs();
            for (int trial = 0; trial < 30; ++trial) {
                EdgeLabelling lab;
                const int alphabet = 1 + static_cast<int>(gen() % 3);
                for (const auto& e : edges)
                    lab.labels[e] = std::to_string(gen() % static_cast<unsigned>(alphabet));
                for (auto variant : {SbVariant::sb, SbVariant::sb_prime}) {
                    bool fast = !check_sb(lat, lab, variant).has_value();
                    bool slow = naive_check_sb(lat, lab, variant);
                    REQUIRE(fast == slow);
                }
            }
        }
    }
}

TEST_CASE("relaxed labellings also force the simplicial property", "[sb][property]") {
    // probe of the relaxed variant: whenever the search finds a labelling
    // satisfying the prime condition, the lattice is crosscut-simplicial;
    // whether the converse can fail stays open at this scale
    int found_count = 0;
    for (int n = 2; n <= 5; ++n)
        for (const auto& lat : catalog::enumerate_lattices(n)) {
            const int max_labels =
                std::min<int>(static_cast<int>(lat.poset().cover_pairs().size()), 5);
            auto found = search_sb(lat, {max_labels, SbVariant::sb_prime, 10'000'000});
            if (!found) continue;
            ++found_count;
            REQUIRE_FALSE(check_sb(lat, *found, SbVariant::sb_prime).has_value());
            REQUIRE(lat.is_crosscut_simplicial());
        }
    REQUIRE(found_count > 0);
}

TEST_CASE("witness chains are genuine violations", "[sb]") {
    // a labelling of the pentagon that reuses one label across ranks
    auto n5 = catalog::n5();
    EdgeLabelling lab;
    auto e = [&](const char* lo, const char* hi) {
        return std::make_pair(n5.poset().index_of(lo), n5.poset().index_of(hi));
    };
    lab.labels[e("0", "a")] = "1";
    lab.labels[e("0", "b")] = "2";
    lab.labels[e("b", "c")] = "3";
    lab.labels[e("c", "1")] = "3";
    lab.labels[e("a", "1")] = "2";
    auto w = check_sb(n5, lab, SbVariant::sb);
    REQUIRE(w.has_value());
    REQUIRE_FALSE(w->chain.empty());
    // the reported chain is saturated
    for (std::size_t k = 0; k + 1 < w->chain.size(); ++k) {
        const auto& ups = n5.poset().upper_covers(w->chain[k]);
        REQUIRE(std::find(ups.begin(), ups.end(), w->chain[k + 1]) != ups.end());
    }
}
