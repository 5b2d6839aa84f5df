#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "latkit/arrangement.hpp"
#include "latkit/errors.hpp"
#include "latkit/lattice.hpp"

namespace latkit::catalog {

inline Lattice chain(int n) {
    if (n < 1 || n > 64) throw ParamOutOfRange("chain length out of range");
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(names[static_cast<std::size_t>(i)],
                                                        names[static_cast<std::size_t>(i) + 1]);
    return Lattice::from_poset(FinitePoset::from_covers(names, covers));
}

/// Subsets of {1..n} ordered by inclusion.
inline Lattice boolean_lattice(int n) {
    if (n < 0 || n > 6) throw ParamOutOfRange("boolean rank out of range");
    const int m = 1 << n;
    std::vector<std::string> names;
    for (int s = 0; s < m; ++s) {
        std::string name;
        for (int i = 0; i < n; ++i)
            if (s >> i & 1) name += static_cast<char>('a' + i);
        names.push_back(name.empty() ? "0" : name);
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (int s = 0; s < m; ++s)
        for (int i = 0; i < n; ++i)
            if (!(s >> i & 1))
                covers.emplace_back(names[static_cast<std::size_t>(s)],
                                    names[static_cast<std::size_t>(s | (1 << i))]);
    return Lattice::from_poset(FinitePoset::from_covers(names, covers));
}

inline Lattice m3() {
    return Lattice::from_poset(FinitePoset::from_covers(
        {"0", "a", "b", "c", "1"},
        {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
}

inline Lattice n5() {
    return Lattice::from_poset(FinitePoset::from_covers(
        {"0", "a", "b", "c", "1"},
        {{"0", "a"}, {"0", "b"}, {"b", "c"}, {"c", "1"}, {"a", "1"}}));
}

inline Lattice hexagon() {
    return Lattice::from_poset(FinitePoset::from_covers(
        {"0", "a", "b", "A", "B", "1"},
        {{"0", "a"}, {"0", "b"}, {"a", "A"}, {"b", "B"}, {"A", "1"}, {"B", "1"}}));
}

/// Seven elements; both atom joins land on the middle element, so every
/// interval is atom-simplicial.
inline Lattice fig1_left() {
    return Lattice::from_poset(FinitePoset::from_covers(
        {"0", "a", "b", "l", "m", "r", "1"},
        {{"0", "a"}, {"0", "b"}, {"a", "l"}, {"a", "m"}, {"b", "m"}, {"b", "r"},
         {"l", "1"}, {"m", "1"}, {"r", "1"}}));
}

/// Seven elements; the two outer atoms join directly to the top, which
/// breaks atom-simpliciality at the full interval.
inline Lattice fig1_right() {
    return Lattice::from_poset(FinitePoset::from_covers(
        {"0", "a", "b", "m", "A", "B", "1"},
        {{"0", "a"}, {"0", "b"}, {"0", "m"}, {"a", "A"}, {"m", "A"}, {"m", "B"},
         {"b", "B"}, {"A", "1"}, {"B", "1"}}));
}

/// Permutations of 1..n ordered by inversions, covers swapping adjacent
/// ascents.
inline Lattice weak_order(int n) {
    if (n < 1 || n > 4) throw ParamOutOfRange("weak order rank out of range");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto name_of = [](const std::vector<int>& w) {
        std::string s;
        for (int v : w) s += std::to_string(v);
        return s;
    };
    std::vector<std::string> names;
    for (const auto& w : perms) names.push_back(name_of(w));
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& w : perms)
        for (int i = 0; i + 1 < n; ++i)
            if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i) + 1]) {
                auto u = w;
                std::swap(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i) + 1]);
                covers.emplace_back(name_of(w), name_of(u));
            }
    return Lattice::from_poset(FinitePoset::from_covers(names, covers));
}

namespace detail_tamari {

// binary trees live in a pool; value identity goes through the canonical
// paren string
struct TreePool {
    std::vector<std::pair<int, int>> nodes; // (left, right), -1 for leaf

    int leaf() { return -1; }
    int make(int l, int r) {
        nodes.emplace_back(l, r);
        return static_cast<int>(nodes.size()) - 1;
    }
    std::string str(int t) const {
        if (t < 0) return ".";
        const auto& [l, r] = nodes[static_cast<std::size_t>(t)];
        return "(" + str(l) + str(r) + ")";
    }
};

inline void all_trees(TreePool& pool, int n, std::vector<int>& out) {
    if (n == 0) {
        out.push_back(pool.leaf());
        return;
    }
    for (int k = 0; k < n; ++k) {
        std::vector<int> lefts, rights;
        all_trees(pool, k, lefts);
        all_trees(pool, n - 1 - k, rights);
        for (int l : lefts)
            for (int r : rights) out.push_back(pool.make(l, r));
    }
}

/// Single right-to-left rotations: (AB)C -> A(BC) at any node, read as a
/// step up the order.
inline void rotations(TreePool& pool, int t, std::vector<int>& out) {
    if (t < 0) return;
    auto [l, r] = pool.nodes[static_cast<std::size_t>(t)];
    if (l >= 0) {
        auto [a, b] = pool.nodes[static_cast<std::size_t>(l)];
        out.push_back(pool.make(a, pool.make(b, r)));
    }
    {
        std::vector<int> sub;
        rotations(pool, l, sub);
        for (int s : sub) out.push_back(pool.make(s, r));
    }
    {
        std::vector<int> sub;
        rotations(pool, r, sub);
        for (int s : sub) out.push_back(pool.make(l, s));
    }
}

} // namespace detail_tamari

/// Binary trees with n internal nodes under rotation.
inline Lattice tamari(int n) {
    if (n < 1 || n > 5) throw ParamOutOfRange("tamari size out of range");
    detail_tamari::TreePool pool;
    std::vector<int> trees;
    detail_tamari::all_trees(pool, n, trees);
    std::map<std::string, int> index;
    std::vector<std::string> names;
    for (int t : trees) {
        names.push_back(pool.str(t));
        index[names.back()] = static_cast<int>(names.size()) - 1;
    }
    std::set<std::pair<std::string, std::string>> cover_set;
    for (int t : trees) {
        std::vector<int> next;
        detail_tamari::rotations(pool, t, next);
        for (int u : next) cover_set.emplace(pool.str(t), pool.str(u));
    }
    std::vector<std::pair<std::string, std::string>> covers(cover_set.begin(), cover_set.end());
    return Lattice::from_poset(FinitePoset::from_covers(names, covers));
}

/// Normals x_i - x_j for 1 <= i < j <= n.
inline Arrangement braid(int n) {
    if (n < 2 || n > 4) throw ParamOutOfRange("braid rank out of range");
    std::vector<RationalVector> normals;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RationalVector v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(j)] = -1;
            normals.push_back(std::move(v));
        }
    return Arrangement::create(n, std::move(normals));
}

/// Four planes in R^3 whose all-plus chamber is a prism, not a simplex.
inline Arrangement prism4() {
    return Arrangement::create(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 1, -1}});
}

/// Three concurrent pairwise-independent lines in the plane.
inline Arrangement three_lines() {
    return Arrangement::create(2, {{1, 0}, {0, 1}, {1, 1}});
}

using CatalogObject = std::variant<Lattice, Arrangement>;

inline CatalogObject named(const std::string& name, const std::vector<int>& params = {}) {
    auto arg = [&](std::size_t i) -> int {
        if (params.size() <= i) throw ParamOutOfRange("missing parameter for " + name);
        return params[i];
    };
    if (name == "chain") return chain(arg(0));
    if (name == "boolean") return boolean_lattice(arg(0));
    if (name == "M3") return m3();
    if (name == "N5") return n5();
    if (name == "hexagon") return hexagon();
    if (name == "fig1_left") return fig1_left();
    if (name == "fig1_right") return fig1_right();
    if (name == "weak_order") return weak_order(arg(0));
    if (name == "tamari") return tamari(arg(0));
    if (name == "braid") return braid(arg(0));
    if (name == "prism4") return prism4();
    if (name == "three_lines") return three_lines();
    throw UnknownName(name);
}

inline std::vector<std::string> catalog_names() {
    return {"chain",      "boolean", "M3",    "N5",     "hexagon", "fig1_left",
            "fig1_right", "weak_order", "tamari", "braid", "prism4",  "three_lines"};
}

// ---------------------------------------------------------------------------
// exhaustive enumeration of small structures

/// All labeled posets on m elements: orientations of each unordered pair
/// filtered to transitive relations. Grows as 3^(m choose 2).
inline std::vector<std::vector<Bitset>> enumerate_labeled_posets(int m) {
    if (m < 0 || m > 6) throw ParamOutOfRange("labeled poset enumeration limited to 6 elements");
    std::vector<std::vector<Bitset>> out;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<int> choice(pairs.size(), 0); // 0 incomparable, 1 i<j, 2 j<i
    auto emit = [&]() {
        std::vector<Bitset> leq(static_cast<std::size_t>(m), Bitset(static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i) leq[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(i));
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (choice[k] == 1) leq[static_cast<std::size_t>(pairs[k].first)].set(static_cast<std::size_t>(pairs[k].second));
            if (choice[k] == 2) leq[static_cast<std::size_t>(pairs[k].second)].set(static_cast<std::size_t>(pairs[k].first));
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && leq[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)))
                    if (!leq[static_cast<std::size_t>(j)].is_subset_of(leq[static_cast<std::size_t>(i)]))
                        return; // not transitive
        out.push_back(std::move(leq));
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == pairs.size()) {
            emit();
            return;
        }
        for (int c = 0; c < 3; ++c) {
            choice[k] = c;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// All bounded posets on n labeled elements, as proper parts with fresh
/// bounds attached.
inline std::vector<FinitePoset> enumerate_bounded_posets(int n) {
    if (n < 1 || n > 8) throw ParamOutOfRange("bounded poset enumeration limited to 8 elements");
    std::vector<FinitePoset> out;
    if (n == 1) {
        out.push_back(FinitePoset::from_covers({"0"}, {}));
        return out;
    }
    const int m = n - 2;
    for (const auto& inner : enumerate_labeled_posets(m)) {
        std::vector<std::string> names;
        names.push_back("bot");
        for (int i = 0; i < m; ++i) names.push_back("x" + std::to_string(i));
        names.push_back("top");
        std::vector<Bitset> leq(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i) {
            leq[0].set(static_cast<std::size_t>(i));
            leq[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(i));
            leq[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(n) - 1);
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (inner[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)))
                    leq[static_cast<std::size_t>(i) + 1].set(static_cast<std::size_t>(j) + 1);
        out.push_back(FinitePoset::from_leq(std::move(names), leq));
    }
    return out;
}

/// All lattices with n elements up to isomorphism, deduplicated by the
/// canonical relation key.
inline std::vector<Lattice> enumerate_lattices(int n) {
    if (n < 1 || n > 7) throw ParamOutOfRange("lattice enumeration limited to 7 elements");
    std::vector<Lattice> out;
    std::set<std::string> seen;
    for (auto& p : enumerate_bounded_posets(n)) {
        auto r = try_lattice(std::move(p));
        if (!r.lattice) continue;
        auto key = r.lattice->poset().canonical_key();
        if (seen.insert(key).second) out.push_back(std::move(*r.lattice));
    }
    return out;
}

} // namespace latkit::catalog
