#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latkit/errors.hpp"
#include "latkit/poset.hpp"
#include "latkit/simplicial.hpp"

namespace latkit {

struct LatticeWitness {
    int x = -1, y = -1;
    std::vector<int> minimal_upper_bounds;
};

struct LatticeCheck;

/**
 * A bounded poset in which every pair of elements has a unique least
 * upper bound and greatest lower bound, with all-pairs join and meet
 * tables built at construction.
 */
class Lattice {
  public:
    /// Builds the tables by minimal-upper-bound search; throws NotBounded
    /// or NotALattice with a witness pair.
    static Lattice from_poset(FinitePoset p);

    const FinitePoset& poset() const { return poset_; }
    int size() const { return poset_.size(); }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const std::string& name(int i) const { return poset_.name(i); }

    int join(int x, int y) const { return join_[static_cast<std::size_t>(x) * size() + y]; }
    int meet(int x, int y) const { return meet_[static_cast<std::size_t>(x) * size() + y]; }

    /// Join of a set; the empty join is the bottom element.
    int join_all(std::span<const int> xs) const {
        int acc = bottom_;
        for (int x : xs) acc = join(acc, x);
        return acc;
    }
    /// Meet of a set; the empty meet is the top element.
    int meet_all(std::span<const int> xs) const {
        int acc = top_;
        for (int x : xs) acc = meet(acc, x);
        return acc;
    }

    /// Atoms of the closed interval [x,y]: elements covering x below y.
    std::vector<int> atoms_of(int x, int y) const {
        if (!poset_.leq(x, y)) throw NotComparable(name(x), name(y));
        std::vector<int> out;
        for (int z : poset_.upper_covers(x))
            if (poset_.leq(z, y)) out.push_back(z);
        return out;
    }

    std::vector<int> atoms() const { return atoms_of(bottom_, top_); }

    bool is_atomic(int x, int y) const {
        auto a = atoms_of(x, y);
        return join_all(a) == y;
    }

    /**
     * Crosscut complex of the interval [x,y] on its atom set. A nonempty
     * subset B is a face exactly when its join is strictly below y; the
     * meet of two or more distinct atoms is x, which lies outside the
     * open interval, so meets never contribute faces.
     */
    SimplicialComplex crosscut_complex(int x, int y) const {
        if (x == y) throw TrivialInterval("crosscut complex needs x < y");
        if (!poset_.leq(x, y)) throw NotComparable(name(x), name(y));
        auto a = atoms_of(x, y);
        std::vector<std::string> ground;
        for (int z : a) ground.push_back(name(z));
        std::vector<SimplicialComplex::Face> gen{0};
        const std::size_t k = a.size();
        for (SimplicialComplex::Face b = 1; b < (SimplicialComplex::Face{1} << k); ++b) {
            int j = x;
            for (std::size_t i = 0; i < k; ++i)
                if (b >> i & 1) j = join(j, a[i]);
            if (j != y) gen.push_back(b);
        }
        return SimplicialComplex::from_facet_masks(std::move(ground), std::move(gen));
    }

    struct CrosscutWitness {
        int x, y;
        std::vector<int> subset; // proper subset of atoms of [x,y] joining to y
    };

    /// Sweeps all intervals x < y; returns the first violation in
    /// lexicographic (x, y, subset-size, subset) order, or nothing.
    std::optional<CrosscutWitness> crosscut_violation() const {
        const int n = size();
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                if (x == y || !poset_.leq(x, y)) continue;
                auto a = atoms_of(x, y);
                const std::size_t k = a.size();
                if (k < 2) continue;
                // proper subsets only, by increasing size then mask order
                for (std::size_t sz = 2; sz < k; ++sz) {
                    for (SimplicialComplex::Face b = 1; b < (SimplicialComplex::Face{1} << k); ++b) {
                        if (static_cast<std::size_t>(detail::popcount64(b)) != sz) continue;
                        int j = x;
                        for (std::size_t i = 0; i < k; ++i)
                            if (b >> i & 1) j = join(j, a[i]);
                        if (j == y) {
                            std::vector<int> sub;
                            for (std::size_t i = 0; i < k; ++i)
                                if (b >> i & 1) sub.push_back(a[i]);
                            return CrosscutWitness{x, y, std::move(sub)};
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

    bool is_crosscut_simplicial() const { return !crosscut_violation().has_value(); }

    struct SdWitness {
        int x, y, z;
    };

    /// x ∧ z = y ∧ z must force (x ∨ y) ∧ z = x ∧ z.
    std::optional<SdWitness> meet_sd_violation() const {
        const int n = size();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (meet(x, z) == meet(y, z) && meet(join(x, y), z) != meet(x, z))
                        return SdWitness{x, y, z};
        return std::nullopt;
    }

    std::optional<SdWitness> join_sd_violation() const {
        const int n = size();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (join(x, z) == join(y, z) && join(meet(x, y), z) != join(x, z))
                        return SdWitness{x, y, z};
        return std::nullopt;
    }

    bool is_meet_semidistributive() const { return !meet_sd_violation().has_value(); }
    bool is_join_semidistributive() const { return !join_sd_violation().has_value(); }
    bool is_semidistributive() const {
        return is_meet_semidistributive() && is_join_semidistributive();
    }

    /// Exhaustive x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) test.
    bool is_distributive() const {
        const int n = size();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
        return true;
    }

    struct Irreducibles {
        std::vector<std::pair<int, int>> join_irreducible; // (x, unique lower cover)
        std::vector<std::pair<int, int>> meet_irreducible; // (x, unique upper cover)
    };

    Irreducibles irreducibles() const {
        Irreducibles out;
        for (int x = 0; x < size(); ++x) {
            if (poset_.lower_covers(x).size() == 1)
                out.join_irreducible.emplace_back(x, poset_.lower_covers(x)[0]);
            if (poset_.upper_covers(x).size() == 1)
                out.meet_irreducible.emplace_back(x, poset_.upper_covers(x)[0]);
        }
        return out;
    }

  private:
    friend LatticeCheck try_lattice(FinitePoset p);

    Lattice(FinitePoset p, std::vector<int> join, std::vector<int> meet, int bottom, int top)
        : poset_(std::move(p)), join_(std::move(join)), meet_(std::move(meet)), bottom_(bottom),
          top_(top) {}

    static std::vector<int> minimal_of(const FinitePoset& p, const Bitset& s) {
        std::vector<int> out;
        for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) {
            Bitset below = p.down_set(static_cast<int>(i)) & s;
            if (below.count() == 1) out.push_back(static_cast<int>(i));
        }
        return out;
    }
    static std::vector<int> maximal_of(const FinitePoset& p, const Bitset& s) {
        std::vector<int> out;
        for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) {
            Bitset above = p.up_set(static_cast<int>(i)) & s;
            if (above.count() == 1) out.push_back(static_cast<int>(i));
        }
        return out;
    }

    FinitePoset poset_;
    std::vector<int> join_, meet_;
    int bottom_ = -1, top_ = -1;
};

/// Outcome of the lattice test: either the lattice, or a witness pair
/// with its multiple minimal upper (or maximal lower) bounds.
struct LatticeCheck {
    std::optional<Lattice> lattice;
    std::optional<LatticeWitness> witness;
};

inline LatticeCheck try_lattice(FinitePoset p) {
    auto b = p.bounds();
    if (!b) throw NotBounded("poset has no bottom/top pair");
    const int n = p.size();
    std::vector<int> join(static_cast<std::size_t>(n) * n, -1),
        meet(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            Bitset ub = p.up_set(x) & p.up_set(y);
            auto mins = Lattice::minimal_of(p, ub);
            if (mins.size() != 1) return {std::nullopt, LatticeWitness{x, y, mins}};
            Bitset lb = p.down_set(x) & p.down_set(y);
            auto maxs = Lattice::maximal_of(p, lb);
            if (maxs.size() != 1) return {std::nullopt, LatticeWitness{x, y, maxs}};
            join[static_cast<std::size_t>(x) * n + y] = join[static_cast<std::size_t>(y) * n + x] = mins[0];
            meet[static_cast<std::size_t>(x) * n + y] = meet[static_cast<std::size_t>(y) * n + x] = maxs[0];
        }
    }
    return {Lattice(std::move(p), std::move(join), std::move(meet), b->first, b->second),
            std::nullopt};
}

inline Lattice Lattice::from_poset(FinitePoset p) {
    auto r = try_lattice(std::move(p));
    if (!r.lattice) {
        const auto& w = *r.witness;
        throw NotALattice("no unique join/meet for the pair at indices " + std::to_string(w.x) +
                          "," + std::to_string(w.y));
    }
    return std::move(*r.lattice);
}

/// Local-join criterion: a bounded poset is a lattice as soon as x ∨ y
/// exists whenever x and y cover a common element.
inline bool is_lattice_by_cover_joins(const FinitePoset& p) {
    if (!p.bounds()) throw NotBounded("criterion needs a bounded poset");
    const int n = p.size();
    for (int z = 0; z < n; ++z) {
        const auto& ups = p.upper_covers(z);
        for (std::size_t i = 0; i < ups.size(); ++i) {
            for (std::size_t j = i + 1; j < ups.size(); ++j) {
                Bitset ub = p.up_set(ups[i]) & p.up_set(ups[j]);
                int mins = 0;
                for (auto k = ub.find_first(); k != Bitset::npos; k = ub.find_next(k)) {
                    Bitset below = p.down_set(static_cast<int>(k)) & ub;
                    if (below.count() == 1) ++mins;
                }
                if (mins != 1) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// SB-labellings

enum class SbVariant { sb, sb_prime };

/// Labels on cover pairs, keyed by (lower, upper) element indices.
struct EdgeLabelling {
    std::map<std::pair<int, int>, std::string> labels;

    const std::string& at(int lo, int hi) const {
        auto it = labels.find({lo, hi});
        if (it == labels.end())
            throw IncompleteLabelling("missing label on a cover pair");
        return it->second;
    }
};

struct SbWitness {
    int x = -1;                  // base element
    std::vector<int> subset;     // covers of x forming the offending B
    std::vector<int> chain;      // a saturated chain from x to join(B)
    std::string reason;
};

namespace detail {

/// Finds a cover path from x to target inside the interval mask, avoiding
/// edges labelled `avoid` when avoid >= 0. Labels are interned ids.
inline std::optional<std::vector<int>> chain_avoiding(
    const FinitePoset& p, const Bitset& interval, int x, int target,
    const std::map<std::pair<int, int>, int>& label_ids, int avoid) {
    std::vector<int> parent(static_cast<std::size_t>(p.size()), -2);
    parent[static_cast<std::size_t>(x)] = -1;
    std::queue<int> q;
    q.push(x);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == target) break;
        for (int v : p.upper_covers(u)) {
            if (!interval.test(static_cast<std::size_t>(v))) continue;
            if (parent[static_cast<std::size_t>(v)] != -2) continue;
            if (avoid >= 0 && label_ids.at({u, v}) == avoid) continue;
            parent[static_cast<std::size_t>(v)] = u;
            q.push(v);
        }
    }
    if (parent[static_cast<std::size_t>(target)] == -2) return std::nullopt;
    std::vector<int> chain;
    for (int v = target; v != -1; v = parent[static_cast<std::size_t>(v)]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

/// Extends the cover edge (u,v) to a saturated chain from x to target.
inline std::vector<int> chain_through_edge(const FinitePoset& p, const Bitset& interval, int x,
                                           int target, int u, int v) {
    std::map<std::pair<int, int>, int> no_labels;
    auto down = chain_avoiding(p, interval, x, u, no_labels, -1);
    auto up = chain_avoiding(p, interval, v, target, no_labels, -1);
    std::vector<int> chain = *down;
    chain.insert(chain.end(), up->begin(), up->end());
    return chain;
}

} // namespace detail

/**
 * Verifies the two labelling axioms. Distinctness is checked on the
 * up-covers of every element. The chain axiom quantifies over every
 * saturated chain from x to the join of a cover subset B; that
 * quantification is decided exactly by edge scans and per-label
 * reachability inside the interval, which avoids materialising chains:
 * an interval edge lies on some saturated chain, and a label is forced
 * on every chain exactly when deleting its edges disconnects x from the
 * join.
 */
inline std::optional<SbWitness> check_sb(const Lattice& lat, const EdgeLabelling& lab,
                                         SbVariant variant) {
    const FinitePoset& p = lat.poset();
    for (const auto& c : p.cover_pairs())
        if (!lab.labels.count(c))
            throw IncompleteLabelling("label missing on cover (" + p.name(c.first) + "," +
                                      p.name(c.second) + ")");
    // intern labels
    std::map<std::pair<int, int>, int> ids;
    std::map<std::string, int> interned;
    for (const auto& [edge, s] : lab.labels) {
        auto it = interned.emplace(s, static_cast<int>(interned.size())).first;
        ids[edge] = it->second;
    }

    for (int x = 0; x < p.size(); ++x) {
        const auto& covers = p.upper_covers(x);
        // distinct labels on the up-covers of x
        for (std::size_t i = 0; i < covers.size(); ++i)
            for (std::size_t j = i + 1; j < covers.size(); ++j)
                if (ids.at({x, covers[i]}) == ids.at({x, covers[j]}))
                    return SbWitness{x,
                                     {covers[i], covers[j]},
                                     {},
                                     "equal labels on two covers of " + p.name(x)};
        const std::size_t k = covers.size();
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << k); ++b) {
            std::vector<int> subset;
            std::vector<int> b_labels;
            for (std::size_t i = 0; i < k; ++i)
                if (b >> i & 1) {
                    subset.push_back(covers[i]);
                    b_labels.push_back(ids.at({x, covers[i]}));
                }
            int j = lat.join_all(subset);
            Bitset interval = p.up_set(x) & p.down_set(j);
            // forbidden labels: outside B's labels (sb) or belonging to A-B (sb')
            for (int u = 0; u < p.size(); ++u) {
                if (!interval.test(static_cast<std::size_t>(u))) continue;
                for (int v : p.upper_covers(u)) {
                    if (!interval.test(static_cast<std::size_t>(v))) continue;
                    int l = ids.at({u, v});
                    bool bad;
                    if (variant == SbVariant::sb) {
                        bad = std::find(b_labels.begin(), b_labels.end(), l) == b_labels.end();
                    } else {
                        bad = false;
                        for (std::size_t i = 0; i < k; ++i)
                            if (!(b >> i & 1) && ids.at({x, covers[i]}) == l) bad = true;
                    }
                    if (bad)
                        return SbWitness{x, subset,
                                         detail::chain_through_edge(p, interval, x, j, u, v),
                                         "chain to the join carries a forbidden label"};
                }
            }
            // every label of B must appear on every chain
            for (int l : b_labels) {
                auto chain = detail::chain_avoiding(p, interval, x, j, ids, l);
                if (chain)
                    return SbWitness{x, subset, *chain,
                                     "chain to the join misses a required label"};
            }
        }
    }
    return std::nullopt;
}

struct SbSearchOptions {
    int max_labels = 3;
    SbVariant variant = SbVariant::sb;
    long long node_budget = 10'000'000;
};

/**
 * Backtracking search for a valid labelling with at most max_labels
 * symbols. Labels are canonicalised by first use, which removes the
 * label-permutation symmetry, so an empty result is an exhaustion proof.
 * Throws SearchBudgetExceeded when the node budget runs out.
 */
inline std::optional<EdgeLabelling> search_sb(const Lattice& lat, const SbSearchOptions& opt) {
    if (opt.max_labels < 1) throw ParamOutOfRange("max_labels must be positive");
    const FinitePoset& p = lat.poset();
    auto edges = p.cover_pairs();
    std::sort(edges.begin(), edges.end());
    std::vector<int> assign(edges.size(), -1);
    long long nodes = 0;

    auto violates_sb1 = [&](std::size_t e) {
        for (std::size_t f = 0; f < e; ++f)
            if (edges[f].first == edges[e].first && assign[f] == assign[e]) return true;
        return false;
    };

    std::optional<EdgeLabelling> found;
    auto rec = [&](auto&& self, std::size_t e, int used) -> bool {
        if (++nodes > opt.node_budget)
            throw SearchBudgetExceeded("sb search node budget exceeded");
        if (e == edges.size()) {
            EdgeLabelling lab;
            for (std::size_t i = 0; i < edges.size(); ++i)
                lab.labels[edges[i]] = std::to_string(assign[i] + 1);
            if (!check_sb(lat, lab, opt.variant)) {
                found = std::move(lab);
                return true;
            }
            return false;
        }
        const int limit = std::min(used + 1, opt.max_labels);
        for (int l = 0; l < limit; ++l) {
            assign[e] = l;
            if (violates_sb1(e)) continue;
            if (self(self, e + 1, std::max(used, l + 1))) return true;
        }
        assign[e] = -1;
        return false;
    };
    rec(rec, 0, 0);
    return found;
}

} // namespace latkit
