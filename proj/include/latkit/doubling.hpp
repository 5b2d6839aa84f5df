#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "latkit/congruence.hpp"
#include "latkit/errors.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

/**
 * The doubling of a lattice at an order-convex subset C: the induced
 * subposet of L x {0,1} on ((L - L>=C) ∪ C) x {0} ∪ L>=C x {1}, where
 * L>=C is the set of elements above some member of C. Element names are
 * suffixed ".0"/".1".
 */
struct DoubledLattice {
    Lattice lattice;                      // the doubled lattice
    Lattice base;                         // the original
    Bitset convex;                        // C as a subset of the base
    Bitset above_convex;                  // L>=C
    std::vector<std::pair<int, int>> tag; // doubled element -> (base element, eps)
    std::vector<std::array<int, 2>> copy; // base element -> doubled ids, -1 when absent

    int project(int doubled_elem) const { return tag[static_cast<std::size_t>(doubled_elem)].first; }
    int eps(int doubled_elem) const { return tag[static_cast<std::size_t>(doubled_elem)].second; }
    int id(int base_elem, int e) const { return copy[static_cast<std::size_t>(base_elem)][static_cast<std::size_t>(e)]; }
};

inline DoubledLattice double_at(const Lattice& lat, const std::vector<int>& convex_set) {
    const FinitePoset& p = lat.poset();
    if (!p.is_order_convex(convex_set))
        throw NotOrderConvex("doubling requires an order-convex subset");
    const int n = p.size();
    Bitset c = vector_to_bitset(static_cast<std::size_t>(n), convex_set);
    Bitset above(static_cast<std::size_t>(n));
    for (int e : convex_set) above |= p.up_set(e);

    std::vector<std::pair<int, int>> tag;
    std::vector<std::array<int, 2>> copy(static_cast<std::size_t>(n), {-1, -1});
    std::vector<std::string> names;
    for (int x = 0; x < n; ++x) {
        const bool up = above.test(static_cast<std::size_t>(x));
        const bool in_c = c.test(static_cast<std::size_t>(x));
        if (!up || in_c) {
            copy[static_cast<std::size_t>(x)][0] = static_cast<int>(tag.size());
            tag.emplace_back(x, 0);
            names.push_back(p.name(x) + ".0");
        }
        if (up) {
            copy[static_cast<std::size_t>(x)][1] = static_cast<int>(tag.size());
            tag.emplace_back(x, 1);
            names.push_back(p.name(x) + ".1");
        }
    }
    const std::size_t m = tag.size();
    std::vector<Bitset> leq(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (p.leq(tag[i].first, tag[j].first) && tag[i].second <= tag[j].second) leq[i].set(j);
    auto doubled = Lattice::from_poset(FinitePoset::from_leq(std::move(names), leq));
    return DoubledLattice{std::move(doubled), lat, std::move(c), std::move(above),
                          std::move(tag), std::move(copy)};
}

/// Join by the closed formula: (x∨y, max(eps)) when x∨y keeps a lower
/// copy, else (x∨y, 1).
inline int doubled_join_formula(const DoubledLattice& d, int i, int j) {
    auto [x, e] = d.tag[static_cast<std::size_t>(i)];
    auto [y, f] = d.tag[static_cast<std::size_t>(j)];
    int v = d.base.join(x, y);
    const bool lower_copy_exists = !d.above_convex.test(static_cast<std::size_t>(v)) ||
                                   d.convex.test(static_cast<std::size_t>(v));
    if (lower_copy_exists) return d.id(v, std::max(e, f));
    return d.id(v, 1);
}

/// The fibers of the projection to the base lattice.
inline Congruence fiber_congruence(const DoubledLattice& d) {
    std::vector<std::vector<int>> blocks;
    for (int x = 0; x < d.base.size(); ++x) {
        std::vector<int> b;
        for (int e = 0; e < 2; ++e)
            if (d.id(x, e) >= 0) b.push_back(d.id(x, e));
        blocks.push_back(std::move(b));
    }
    return Congruence::from_blocks(d.lattice, std::move(blocks));
}

struct DoublingClassification {
    int case_tag;                // 1..4, by the (eps, membership) split
    SimplicialComplex predicted; // predicted crosscut complex of the interval
};

namespace detail {

inline std::string fresh_apex(const std::vector<std::string>& taken) {
    std::string apex = "*";
    while (std::find(taken.begin(), taken.end(), apex) != taken.end()) apex += "*";
    return apex;
}

} // namespace detail

/**
 * Classifies the open interval ((x,e),(y,f)) of a doubled lattice into
 * the four structural cases and builds the predicted crosscut complex
 * from data of the base lattice only:
 *
 *   1. e = f, or neither endpoint is in C: the interval is a copy of
 *      (x,y), so the prediction is its crosscut complex.
 *   2. e < f, x not in C, y in C: every atom keeps a lower copy and the
 *      join of all of them stays below (y,0), so the prediction is the
 *      full simplex on the atoms of [x,y].
 *   3. e < f, x in C, y not in C: the atoms are (x,1) plus the lower
 *      copies of atoms in C; the prediction is the cone over the
 *      restriction of the crosscut complex to atoms in C.
 *   4. e < f, both in C: the lower copies of the atoms span a full
 *      simplex and (x,1) cones over the crosscut complex of (x,y).
 */
inline DoublingClassification classify_doubled_interval(const DoubledLattice& d, int i, int j) {
    if (!d.lattice.poset().leq(i, j))
        throw NotComparable(d.lattice.name(i), d.lattice.name(j));
    auto [x, e] = d.tag[static_cast<std::size_t>(i)];
    auto [y, f] = d.tag[static_cast<std::size_t>(j)];
    const bool xc = d.convex.test(static_cast<std::size_t>(x));
    const bool yc = d.convex.test(static_cast<std::size_t>(y));
    const Lattice& base = d.base;

    if (e == f || (!xc && !yc))
        return {1, base.crosscut_complex(x, y)};

    if (!xc && yc)
        return {2, SimplicialComplex::full_simplex([&] {
                    std::vector<std::string> g;
                    for (int a : base.atoms_of(x, y)) g.push_back(base.name(a));
                    return g;
                }())};

    auto atoms = base.atoms_of(x, y);
    if (xc && !yc) {
        std::vector<std::string> ground;
        std::vector<int> in_c;
        for (int a : atoms)
            if (d.convex.test(static_cast<std::size_t>(a))) {
                in_c.push_back(a);
                ground.push_back(base.name(a));
            }
        std::vector<SimplicialComplex::Face> gen{0};
        for (SimplicialComplex::Face b = 1; b < (SimplicialComplex::Face{1} << in_c.size()); ++b) {
            int v = x;
            for (std::size_t k = 0; k < in_c.size(); ++k)
                if (b >> k & 1) v = base.join(v, in_c[k]);
            if (v != y) gen.push_back(b);
        }
        auto restricted = SimplicialComplex::from_facet_masks(std::move(ground), std::move(gen));
        return {3, restricted.cone(detail::fresh_apex(restricted.vertex_names()))};
    }

    // case 4: full simplex on the lower copies, union a cone over the
    // subsets whose join stays below y. The apex stays in the ground set
    // even when no cone face exists, which happens exactly on the
    // degenerate interval with x = y.
    std::vector<std::string> ground;
    for (int a : atoms) ground.push_back(base.name(a) + ".0");
    std::string apex = detail::fresh_apex(ground);
    auto simplex_part = SimplicialComplex::full_simplex(ground);
    std::vector<std::string> cone_ground = ground;
    cone_ground.push_back(apex);
    std::vector<SimplicialComplex::Face> cone_gen;
    const SimplicialComplex::Face apex_bit = SimplicialComplex::Face{1} << atoms.size();
    for (SimplicialComplex::Face b = 0; b < (SimplicialComplex::Face{1} << atoms.size()); ++b) {
        int v = x;
        for (std::size_t k = 0; k < atoms.size(); ++k)
            if (b >> k & 1) v = base.join(v, atoms[k]);
        if (v != y) cone_gen.push_back(b | apex_bit);
    }
    auto cone_part = SimplicialComplex::from_facet_masks(std::move(cone_ground), std::move(cone_gen));
    return {4, SimplicialComplex::union_of(simplex_part, cone_part)};
}

} // namespace latkit
