#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latkit/errors.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

/// Closes a union-find under a ≡ b ⇒ a∨z ≡ b∨z and a∧z ≡ b∧z.
inline void congruence_closure(const Lattice& lat, UnionFind& uf,
                               std::deque<std::pair<int, int>> work) {
    const int n = lat.size();
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        for (int z = 0; z < n; ++z) {
            int ja = lat.join(a, z), jb = lat.join(b, z);
            if (uf.unite(ja, jb)) work.emplace_back(ja, jb);
            int ma = lat.meet(a, z), mb = lat.meet(b, z);
            if (uf.unite(ma, mb)) work.emplace_back(ma, mb);
        }
    }
}

} // namespace detail

/**
 * A partition of a lattice compatible with join and meet. Blocks are
 * stored in canonical form: each block sorted, blocks ordered by their
 * least element. Compatibility forces every block to be a closed
 * interval, which the constructor verifies.
 */
class Congruence {
  public:
    static Congruence from_blocks(const Lattice& lat, std::vector<std::vector<int>> blocks) {
        const int n = lat.size();
        std::vector<int> block_of(static_cast<std::size_t>(n), -1);
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].empty()) throw NotAPartition("empty block");
            for (int e : blocks[i]) {
                if (e < 0 || e >= n) throw NotAPartition("element out of range");
                if (block_of[static_cast<std::size_t>(e)] != -1)
                    throw NotAPartition("element in two blocks");
                block_of[static_cast<std::size_t>(e)] = static_cast<int>(i);
            }
        }
        for (int e = 0; e < n; ++e)
            if (block_of[static_cast<std::size_t>(e)] == -1)
                throw NotAPartition("element missing from partition");
        Congruence c;
        c.blocks_ = std::move(blocks);
        c.block_of_ = std::move(block_of);
        c.validate(lat);
        return c;
    }

    static Congruence identity(const Lattice& lat) {
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < lat.size(); ++i) blocks.push_back({i});
        return from_blocks(lat, std::move(blocks));
    }

    static Congruence full(const Lattice& lat) {
        std::vector<int> all(static_cast<std::size_t>(lat.size()));
        std::iota(all.begin(), all.end(), 0);
        return from_blocks(lat, {all});
    }

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int e) const { return block_of_[static_cast<std::size_t>(e)]; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

    bool is_identity() const { return blocks_.size() == block_of_.size(); }
    bool is_full() const { return blocks_.size() == 1; }

    /// True when every block of this partition sits inside a block of c.
    bool refines(const Congruence& c) const {
        for (const auto& b : blocks_) {
            int target = c.block_of(b[0]);
            for (int e : b)
                if (c.block_of(e) != target) return false;
        }
        return true;
    }

    bool operator==(const Congruence& other) const { return blocks_ == other.blocks_; }
    bool operator<(const Congruence& other) const { return blocks_ < other.blocks_; }

  private:
    void validate(const Lattice& lat) const {
        const int n = lat.size();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (!same_block(x, y)) continue;
                for (int z = 0; z < n; ++z) {
                    if (!same_block(lat.join(x, z), lat.join(y, z)) ||
                        !same_block(lat.meet(x, z), lat.meet(y, z)))
                        throw NotACongruence("partition does not respect join/meet");
                }
            }
        // blocks must be closed intervals
        for (const auto& b : blocks_) {
            int lo = b[0], hi = b[0];
            for (int e : b) {
                lo = lat.meet(lo, e);
                hi = lat.join(hi, e);
            }
            auto inside = lat.poset().elements_between(lo, hi);
            if (inside.size() != b.size())
                throw NotACongruence("a block is not a closed interval");
        }
    }

    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// Direct definitional test, usable as an oracle for arbitrary partitions.
inline bool is_lattice_congruence(const Lattice& lat,
                                  const std::vector<std::vector<int>>& partition) {
    try {
        Congruence::from_blocks(lat, partition);
        return true;
    } catch (const NotACongruence&) {
        return false;
    }
}

/// Least congruence identifying x and y, by worklist closure over a
/// union-find: every merge enqueues its join/meet consequences.
inline Congruence principal_congruence(const Lattice& lat, int x, int y) {
    detail::UnionFind uf(lat.size());
    std::deque<std::pair<int, int>> work;
    if (uf.unite(x, y)) work.emplace_back(x, y);
    detail::congruence_closure(lat, uf, std::move(work));
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(lat.size()));
    for (int e = 0; e < lat.size(); ++e) blocks[static_cast<std::size_t>(uf.find(e))].push_back(e);
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const auto& b) { return b.empty(); }),
                 blocks.end());
    return Congruence::from_blocks(lat, std::move(blocks));
}

/// Join of two congruences in the congruence lattice: common refinement
/// closure of the union of the two partitions.
inline Congruence congruence_join(const Lattice& lat, const Congruence& a, const Congruence& b) {
    detail::UnionFind uf(lat.size());
    std::deque<std::pair<int, int>> work;
    for (const auto& blk : a.blocks())
        for (std::size_t i = 1; i < blk.size(); ++i)
            if (uf.unite(blk[0], blk[i])) work.emplace_back(blk[0], blk[i]);
    for (const auto& blk : b.blocks())
        for (std::size_t i = 1; i < blk.size(); ++i)
            if (uf.unite(blk[0], blk[i])) work.emplace_back(blk[0], blk[i]);
    detail::congruence_closure(lat, uf, std::move(work));
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(lat.size()));
    for (int e = 0; e < lat.size(); ++e) blocks[static_cast<std::size_t>(uf.find(e))].push_back(e);
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const auto& b2) { return b2.empty(); }),
                 blocks.end());
    return Congruence::from_blocks(lat, std::move(blocks));
}

/// The full congruence set: principal congruences of all cover pairs,
/// closed under congruence join, plus the identity.
inline std::vector<Congruence> all_congruences(const Lattice& lat) {
    std::set<Congruence> out;
    out.insert(Congruence::identity(lat));
    std::vector<Congruence> frontier;
    for (const auto& [lo, hi] : lat.poset().cover_pairs()) {
        auto c = principal_congruence(lat, lo, hi);
        if (out.insert(c).second) frontier.push_back(c);
    }
    std::vector<Congruence> generators = frontier;
    while (!frontier.empty()) {
        std::vector<Congruence> next;
        for (const auto& f : frontier)
            for (const auto& g : generators) {
                auto j = congruence_join(lat, f, g);
                if (out.insert(j).second) next.push_back(j);
            }
        frontier = std::move(next);
    }
    return {out.begin(), out.end()};
}

/// Largest element of the block of x.
inline int project_up(const Lattice& lat, const Congruence& c, int x) {
    const auto& blk = c.blocks()[static_cast<std::size_t>(c.block_of(x))];
    int acc = blk[0];
    for (int e : blk) acc = lat.join(acc, e);
    return acc;
}

/// Smallest element of the block of x.
inline int project_down(const Lattice& lat, const Congruence& c, int x) {
    const auto& blk = c.blocks()[static_cast<std::size_t>(c.block_of(x))];
    int acc = blk[0];
    for (int e : blk) acc = lat.meet(acc, e);
    return acc;
}

struct QuotientLattice {
    Lattice lattice;           // elements follow the canonical block order
    std::vector<int> block_of; // base element -> quotient element
};

/// Quotient lattice: blocks ordered by existence of comparable
/// representatives. Quotients of lattices are lattices; a failure here
/// is an internal error.
inline QuotientLattice quotient(const Lattice& lat, const Congruence& c) {
    const auto& blocks = c.blocks();
    const std::size_t m = blocks.size();
    std::vector<std::string> names;
    names.reserve(m);
    for (const auto& b : blocks) {
        std::string s = "{";
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s += ",";
            s += lat.name(b[i]);
        }
        s += "}";
        names.push_back(std::move(s));
    }
    std::vector<Bitset> leq(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i) {
        Bitset up_of_block(static_cast<std::size_t>(lat.size()));
        for (int e : blocks[i]) up_of_block |= lat.poset().up_set(e);
        for (std::size_t j = 0; j < m; ++j) {
            bool rel = false;
            for (int e : blocks[j])
                if (up_of_block.test(static_cast<std::size_t>(e))) rel = true;
            if (rel) leq[i].set(j);
        }
    }
    auto poset = FinitePoset::from_leq(std::move(names), leq);
    auto result = try_lattice(std::move(poset));
    if (!result.lattice) throw InternalError("quotient of a lattice failed to be a lattice");
    std::vector<int> block_of(static_cast<std::size_t>(lat.size()));
    for (int e = 0; e < lat.size(); ++e) block_of[static_cast<std::size_t>(e)] = c.block_of(e);
    return {std::move(*result.lattice), std::move(block_of)};
}

/// Congruences ordered by refinement.
inline FinitePoset congruence_refinement_poset(const std::vector<Congruence>& congruences) {
    const std::size_t m = congruences.size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("theta" + std::to_string(i));
    std::vector<Bitset> leq(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (congruences[i].refines(congruences[j])) leq[i].set(j);
    return FinitePoset::from_leq(std::move(names), leq);
}

struct CongruenceNormalWitness {
    int meet_irr, join_irr; // x >= y with Cg(x, x*) = Cg(y_*, y)
};

/// Definitional congruence-normality test over all pairs of a
/// meet-irreducible and a join-irreducible element.
inline std::optional<CongruenceNormalWitness> congruence_normal_violation(const Lattice& lat) {
    auto irr = lat.irreducibles();
    std::vector<std::pair<int, Congruence>> meet_side, join_side;
    for (auto [x, xstar] : irr.meet_irreducible)
        meet_side.emplace_back(x, principal_congruence(lat, x, xstar));
    for (auto [y, ystar] : irr.join_irreducible)
        join_side.emplace_back(y, principal_congruence(lat, ystar, y));
    for (const auto& [x, cx] : meet_side)
        for (const auto& [y, cy] : join_side)
            if (cx == cy && lat.poset().leq(y, x)) return CongruenceNormalWitness{x, y};
    return std::nullopt;
}

inline bool is_congruence_normal(const Lattice& lat) {
    return !congruence_normal_violation(lat).has_value();
}

} // namespace latkit
