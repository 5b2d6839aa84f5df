#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latkit/errors.hpp"

namespace latkit {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<int> bitset_to_vector(const Bitset& b) {
    std::vector<int> out;
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

inline Bitset vector_to_bitset(std::size_t n, const std::vector<int>& v) {
    Bitset b(n);
    for (int i : v) b.set(static_cast<std::size_t>(i));
    return b;
}

/// A chain x0 < x1 < ... < xd, as element indices.
using Chain = std::vector<int>;

/**
 * A finite poset given by its Hasse diagram.
 *
 * Elements are dense indices 0..n-1 with display names. The full order
 * relation is stored as one up-set and one down-set bitset per element,
 * so order queries are O(1) and subset sweeps are word-parallel.
 * Instances are immutable after construction.
 */
class FinitePoset {
  public:
    FinitePoset() = default;

    /// Builds a poset from display names and cover pairs (lower, upper).
    /// Rejects unknown names, duplicate names, cycles, and cover pairs
    /// that are transitively implied by other covers.
    static FinitePoset from_covers(
        const std::vector<std::string>& names,
        const std::vector<std::pair<std::string, std::string>>& covers) {
        std::unordered_map<std::string, int> idx;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!idx.emplace(names[i], static_cast<int>(i)).second)
                throw InvalidInput("duplicate element name: " + names[i]);
        }
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(covers.size());
        for (const auto& [lo, hi] : covers) {
            auto it_lo = idx.find(lo);
            if (it_lo == idx.end()) throw UnknownElement(lo);
            auto it_hi = idx.find(hi);
            if (it_hi == idx.end()) throw UnknownElement(hi);
            pairs.emplace_back(it_lo->second, it_hi->second);
        }
        return from_cover_indices(names, pairs);
    }

    static FinitePoset from_cover_indices(std::vector<std::string> names,
                                          std::vector<std::pair<int, int>> covers) {
        const int n = static_cast<int>(names.size());
        if (n < 1) throw InvalidInput("poset needs at least one element");
        // drop duplicate cover pairs, keep first occurrence order
        {
            std::vector<std::pair<int, int>> uniq;
            for (auto& c : covers) {
                if (c.first == c.second)
                    throw CycleDetected("self-cover on element " + names[c.first]);
                if (std::find(uniq.begin(), uniq.end(), c) == uniq.end()) uniq.push_back(c);
            }
            covers = std::move(uniq);
        }
        std::vector<std::vector<int>> up_adj(n);
        std::vector<int> indeg(n, 0);
        for (auto& [lo, hi] : covers) {
            up_adj[lo].push_back(hi);
            ++indeg[hi];
        }
        // Kahn topological order; leftovers mean a cycle
        std::vector<int> topo;
        topo.reserve(n);
        std::vector<int> deg = indeg;
        for (int i = 0; i < n; ++i)
            if (deg[i] == 0) topo.push_back(i);
        for (std::size_t q = 0; q < topo.size(); ++q)
            for (int j : up_adj[topo[q]])
                if (--deg[j] == 0) topo.push_back(j);
        if (static_cast<int>(topo.size()) != n)
            throw CycleDetected("cover relation contains a cycle");

        std::vector<Bitset> up(n, Bitset(static_cast<std::size_t>(n)));
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            up[*it].set(static_cast<std::size_t>(*it));
            for (int j : up_adj[*it]) up[*it] |= up[j];
        }
        // Hasse property: a cover pair must not have intermediate elements
        for (auto& [lo, hi] : covers) {
            for (int z = 0; z < n; ++z) {
                if (z == lo || z == hi) continue;
                if (up[lo].test(static_cast<std::size_t>(z)) &&
                    up[z].test(static_cast<std::size_t>(hi)))
                    throw NonHasseCover("cover (" + names[lo] + "," + names[hi] +
                                        ") is implied transitively via " + names[z]);
            }
        }
        return FinitePoset(std::move(names), std::move(covers), std::move(up));
    }

    /// Builds a poset from a full reflexive order relation, deriving covers.
    static FinitePoset from_leq(std::vector<std::string> names,
                                const std::vector<Bitset>& leq) {
        const int n = static_cast<int>(names.size());
        if (n < 1) throw InvalidInput("poset needs at least one element");
        for (int i = 0; i < n; ++i) {
            if (!leq[i].test(static_cast<std::size_t>(i)))
                throw InvalidInput("relation is not reflexive");
            for (int j = 0; j < n; ++j) {
                const bool ij = leq[i].test(static_cast<std::size_t>(j));
                const bool ji = leq[j].test(static_cast<std::size_t>(i));
                if (i != j && ij && ji)
                    throw InvalidInput("relation is not antisymmetric");
                if (ij)
                    if (!leq[j].is_subset_of(leq[i]))
                        throw InvalidInput("relation is not transitive");
            }
        }
        // transitive reduction
        std::vector<std::pair<int, int>> covers;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j || !leq[i].test(static_cast<std::size_t>(j))) continue;
                bool is_cover = true;
                for (int z = 0; z < n && is_cover; ++z) {
                    if (z == i || z == j) continue;
                    if (leq[i].test(static_cast<std::size_t>(z)) &&
                        leq[z].test(static_cast<std::size_t>(j)))
                        is_cover = false;
                }
                if (is_cover) covers.emplace_back(i, j);
            }
        }
        std::sort(covers.begin(), covers.end());
        std::vector<Bitset> up = leq;
        return FinitePoset(std::move(names), std::move(covers), std::move(up));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw UnknownElement(name);
        return it->second;
    }

    bool leq(int x, int y) const { return up_[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y)); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }

    const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
    const std::vector<int>& upper_covers(int x) const { return up_adj_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& lower_covers(int x) const { return down_adj_[static_cast<std::size_t>(x)]; }

    /// {y : x <= y}, including x.
    const Bitset& up_set(int x) const { return up_[static_cast<std::size_t>(x)]; }
    /// {y : y <= x}, including x.
    const Bitset& down_set(int x) const { return down_[static_cast<std::size_t>(x)]; }

    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (down_adj_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
        return out;
    }
    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (up_adj_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
        return out;
    }

    /// The (bottom, top) pair when both exist.
    std::optional<std::pair<int, int>> bounds() const {
        auto mins = minimal_elements();
        auto maxs = maximal_elements();
        if (mins.size() != 1 || maxs.size() != 1) return std::nullopt;
        const int b = mins[0], t = maxs[0];
        if (up_[static_cast<std::size_t>(b)].count() != static_cast<std::size_t>(size()))
            return std::nullopt;
        if (down_[static_cast<std::size_t>(t)].count() != static_cast<std::size_t>(size()))
            return std::nullopt;
        return std::make_pair(b, t);
    }

    FinitePoset dual() const {
        std::vector<std::pair<int, int>> rev;
        rev.reserve(covers_.size());
        for (auto& [lo, hi] : covers_) rev.emplace_back(hi, lo);
        return FinitePoset(names_, std::move(rev), down_);
    }

    /// Induced subposet on the given elements; keeps display names.
    FinitePoset induced(const std::vector<int>& elems) const {
        std::vector<std::string> sub_names;
        sub_names.reserve(elems.size());
        for (int e : elems) sub_names.push_back(names_[static_cast<std::size_t>(e)]);
        std::vector<Bitset> sub_leq(elems.size(), Bitset(elems.size()));
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (leq(elems[i], elems[j])) sub_leq[i].set(j);
        return from_leq(std::move(sub_names), sub_leq);
    }

    std::vector<int> elements_between(int x, int y) const {
        require_leq(x, y);
        return bitset_to_vector(up_[static_cast<std::size_t>(x)] & down_[static_cast<std::size_t>(y)]);
    }

    FinitePoset closed_interval(int x, int y) const { return induced(elements_between(x, y)); }

    std::vector<int> open_interval(int x, int y) const {
        auto zs = elements_between(x, y);
        std::vector<int> out;
        out.reserve(zs.size());
        for (int z : zs)
            if (z != x && z != y) out.push_back(z);
        return out;
    }

    /// C is order-convex when x,y in C and x<=z<=y force z in C.
    bool is_order_convex(const std::vector<int>& c) const {
        Bitset in = vector_to_bitset(static_cast<std::size_t>(size()), c);
        for (int x : c)
            for (int y : c) {
                if (!leq(x, y)) continue;
                Bitset between = up_[static_cast<std::size_t>(x)] & down_[static_cast<std::size_t>(y)];
                if (!between.is_subset_of(in)) return false;
            }
        return true;
    }

    /// Order filters are upward closed.
    bool is_order_filter(const std::vector<int>& c) const {
        Bitset in = vector_to_bitset(static_cast<std::size_t>(size()), c);
        for (int x : c)
            if (!up_[static_cast<std::size_t>(x)].is_subset_of(in)) return false;
        return true;
    }

    bool is_order_ideal(const std::vector<int>& c) const {
        Bitset in = vector_to_bitset(static_cast<std::size_t>(size()), c);
        for (int x : c)
            if (!down_[static_cast<std::size_t>(x)].is_subset_of(in)) return false;
        return true;
    }

    /// Moebius value of the closed interval [x,y].
    long long mobius(int x, int y) const {
        require_leq(x, y);
        auto zs = elements_between(x, y);
        std::map<int, long long> mu;
        // evaluate bottom-up: w < z implies strictly fewer elements below w
        std::sort(zs.begin(), zs.end(), [&](int a, int b) {
            auto da = (up_[static_cast<std::size_t>(x)] & down_[static_cast<std::size_t>(a)]).count();
            auto db = (up_[static_cast<std::size_t>(x)] & down_[static_cast<std::size_t>(b)]).count();
            return da != db ? da < db : a < b;
        });
        for (int z : zs) {
            if (z == x) {
                mu[z] = 1;
                continue;
            }
            long long acc = 0;
            for (int w : zs)
                if (w != z && leq(x, w) && leq(w, z)) acc += mu[w];
            mu[z] = -acc;
        }
        return mu[y];
    }

    /// All-pairs Moebius values; entry (x,y) is meaningful only when x <= y.
    std::vector<std::vector<long long>> mobius_table() const {
        const int n = size();
        std::vector<std::vector<long long>> t(static_cast<std::size_t>(n),
                                              std::vector<long long>(static_cast<std::size_t>(n), 0));
        auto topo = topo_order();
        for (int x = 0; x < n; ++x) {
            for (int z : topo) {
                if (!leq(x, z)) continue;
                if (z == x) {
                    t[x][static_cast<std::size_t>(z)] = 1;
                    continue;
                }
                long long acc = 0;
                for (int w = 0; w < n; ++w)
                    if (w != z && leq(x, w) && leq(w, z)) acc += t[x][static_cast<std::size_t>(w)];
                t[x][static_cast<std::size_t>(z)] = -acc;
            }
        }
        return t;
    }

    /// Number of chains with k+1 elements, for k = 0..height.
    /// Counts faces of the order complex by dimension without building it.
    std::vector<long long> chain_count_by_dim() const {
        const int n = size();
        auto topo = topo_order();
        // g[v] = number of chains of the current size ending at v
        std::vector<long long> g(static_cast<std::size_t>(n), 1);
        std::vector<long long> counts;
        counts.push_back(n);
        while (true) {
            std::vector<long long> h(static_cast<std::size_t>(n), 0);
            long long total = 0;
            for (int v : topo) {
                long long acc = 0;
                for (int u = 0; u < n; ++u)
                    if (lt(u, v)) acc += g[static_cast<std::size_t>(u)];
                h[static_cast<std::size_t>(v)] = acc;
                total += acc;
            }
            if (total == 0) break;
            counts.push_back(total);
            g = std::move(h);
        }
        return counts;
    }

    /// Reduced Euler characteristic of the chain complex of this poset.
    long long order_complex_reduced_euler() const {
        auto counts = chain_count_by_dim();
        long long chi = -1;
        for (std::size_t d = 0; d < counts.size(); ++d)
            chi += (d % 2 == 0) ? counts[d] : -counts[d];
        return chi;
    }

    /// Every saturated chain from x to y, in lexicographic cover order.
    /// The visitor returns false to stop early.
    template <class F>
    bool for_each_saturated_chain(int x, int y, F&& visit) const {
        require_leq(x, y);
        Chain chain{x};
        return saturated_rec(x, y, chain, visit);
    }

    std::vector<Chain> saturated_chains(int x, int y) const {
        std::vector<Chain> out;
        for_each_saturated_chain(x, y, [&](const Chain& c) {
            out.push_back(c);
            return true;
        });
        return out;
    }

    int height() const { return static_cast<int>(chain_count_by_dim().size()) - 1; }

    std::vector<int> topo_order() const {
        std::vector<int> order(static_cast<std::size_t>(size()));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            auto da = down_[static_cast<std::size_t>(a)].count();
            auto db = down_[static_cast<std::size_t>(b)].count();
            return da != db ? da < db : a < b;
        });
        return order;
    }

    /// Rank = longest chain from a minimal element, per element.
    std::vector<int> ranks() const {
        std::vector<int> r(static_cast<std::size_t>(size()), 0);
        for (int v : topo_order())
            for (int u : down_adj_[static_cast<std::size_t>(v)])
                r[static_cast<std::size_t>(v)] =
                    std::max(r[static_cast<std::size_t>(v)], r[static_cast<std::size_t>(u)] + 1);
        return r;
    }

    /// Canonical certificate for isomorphism-class deduplication.
    /// Minimises the relation bitstring over all permutations; intended
    /// for small posets.
    std::string canonical_key() const {
        const int n = size();
        if (n > 9) throw TooLarge("canonical_key supports at most 9 elements");
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        do {
            std::string key(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), '0');
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (leq(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                        key[static_cast<std::size_t>(i * n + j)] = '1';
            if (best.empty() || key < best) best = std::move(key);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    bool same_relation(const FinitePoset& other) const {
        if (size() != other.size()) return false;
        for (int i = 0; i < size(); ++i)
            if (up_[static_cast<std::size_t>(i)] != other.up_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

  private:
    FinitePoset(std::vector<std::string> names, std::vector<std::pair<int, int>> covers,
                std::vector<Bitset> up)
        : names_(std::move(names)), covers_(std::move(covers)), up_(std::move(up)) {
        const int n = size();
        for (int i = 0; i < n; ++i) index_.emplace(names_[static_cast<std::size_t>(i)], i);
        down_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (up_[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)))
                    down_[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(i));
        up_adj_.assign(static_cast<std::size_t>(n), {});
        down_adj_.assign(static_cast<std::size_t>(n), {});
        for (auto& [lo, hi] : covers_) {
            up_adj_[static_cast<std::size_t>(lo)].push_back(hi);
            down_adj_[static_cast<std::size_t>(hi)].push_back(lo);
        }
        for (auto& v : up_adj_) std::sort(v.begin(), v.end());
        for (auto& v : down_adj_) std::sort(v.begin(), v.end());
    }

    void require_leq(int x, int y) const {
        if (!leq(x, y)) throw NotComparable(name(x), name(y));
    }

    template <class F>
    bool saturated_rec(int cur, int target, Chain& chain, F& visit) const {
        if (cur == target) return visit(static_cast<const Chain&>(chain));
        for (int next : up_adj_[static_cast<std::size_t>(cur)]) {
            if (!leq(next, target)) continue;
            chain.push_back(next);
            bool keep_going = saturated_rec(next, target, chain, visit);
            chain.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<std::vector<int>> up_adj_;
    std::vector<std::vector<int>> down_adj_;
    std::unordered_map<std::string, int> index_;
};

} // namespace latkit
