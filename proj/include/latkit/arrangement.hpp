#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latkit/errors.hpp"
#include "latkit/poset.hpp"

namespace latkit {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

namespace detail {

inline int rational_rank(std::vector<RationalVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rational factor = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Scales a row so its first nonzero entry is +-1; used to deduplicate
/// inequality rows during elimination.
inline void normalize_row(RationalVector& row) {
    for (const Rational& v : row) {
        if (v == 0) continue;
        Rational scale = abs(v);
        for (Rational& w : row) w /= scale;
        return;
    }
}

inline bool is_zero_row(const RationalVector& row) {
    return std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == 0; });
}

} // namespace detail

/**
 * Exact feasibility oracle for homogeneous systems: decides whether some
 * point satisfies every strict inequality <a,x> > 0 and every equality
 * <b,x> = 0. Equalities are eliminated by substitution, then variables
 * are removed one at a time by Fourier-Motzkin, pairing rows of opposite
 * sign. All arithmetic is exact rational.
 */
inline bool feasible(std::vector<RationalVector> strict, std::vector<RationalVector> equalities,
                     int dim) {
    for (const auto& r : strict)
        if (static_cast<int>(r.size()) != dim) throw DimensionMismatch("strict row length");
    for (const auto& r : equalities)
        if (static_cast<int>(r.size()) != dim) throw DimensionMismatch("equality row length");

    // substitute out the equalities
    std::size_t used = 0;
    for (std::size_t erow = 0; erow < equalities.size(); ++erow) {
        // find a pivot column in an unused row
        std::size_t pr = erow;
        int pc = -1;
        for (std::size_t i = erow; i < equalities.size() && pc < 0; ++i)
            for (int c = 0; c < dim; ++c)
                if (equalities[i][static_cast<std::size_t>(c)] != 0) {
                    pr = i;
                    pc = c;
                    break;
                }
        if (pc < 0) break;
        std::swap(equalities[erow], equalities[pr]);
        const RationalVector pivot_row = equalities[erow];
        auto eliminate = [&](RationalVector& row) {
            const Rational& coeff = row[static_cast<std::size_t>(pc)];
            if (coeff == 0) return;
            Rational factor = coeff / pivot_row[static_cast<std::size_t>(pc)];
            for (int c = 0; c < dim; ++c)
                row[static_cast<std::size_t>(c)] -= factor * pivot_row[static_cast<std::size_t>(c)];
        };
        for (std::size_t i = erow + 1; i < equalities.size(); ++i) eliminate(equalities[i]);
        for (auto& row : strict) eliminate(row);
        ++used;
    }
    (void)used;

    // Fourier-Motzkin on the remaining strict system
    std::vector<RationalVector> rows;
    for (auto& r : strict) {
        if (detail::is_zero_row(r)) return false; // 0 > 0
        detail::normalize_row(r);
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    std::vector<int> live_cols(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; ++c) live_cols[static_cast<std::size_t>(c)] = c;

    while (!rows.empty() && !live_cols.empty()) {
        // pick the column with the fewest positive*negative pairings
        int best_col = -1;
        long long best_cost = -1;
        for (int c : live_cols) {
            long long pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r[static_cast<std::size_t>(c)] > 0) ++pos;
                if (r[static_cast<std::size_t>(c)] < 0) ++neg;
            }
            long long cost = pos * neg;
            if (best_col < 0 || cost < best_cost) {
                best_col = c;
                best_cost = cost;
            }
        }
        const std::size_t col = static_cast<std::size_t>(best_col);
        std::vector<RationalVector> pos, neg, next;
        for (auto& r : rows) {
            if (r[col] > 0)
                pos.push_back(std::move(r));
            else if (r[col] < 0)
                neg.push_back(std::move(r));
            else
                next.push_back(std::move(r));
        }
        for (const auto& p : pos)
            for (const auto& m : neg) {
                RationalVector combo(static_cast<std::size_t>(dim));
                // p[col]*m - m[col]*p has a zero in col and positive scale
                for (int c = 0; c < dim; ++c)
                    combo[static_cast<std::size_t>(c)] =
                        p[col] * m[static_cast<std::size_t>(c)] - m[col] * p[static_cast<std::size_t>(c)];
                if (detail::is_zero_row(combo)) return false;
                detail::normalize_row(combo);
                next.push_back(std::move(combo));
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rows = std::move(next);
        live_cols.erase(std::find(live_cols.begin(), live_cols.end(), best_col));
    }
    // any remaining rows still have a free variable, hence satisfiable
    return true;
}

/**
 * A central arrangement: nonzero rational normals, pairwise
 * non-parallel, each defining a hyperplane through the origin.
 */
class Arrangement {
  public:
    static Arrangement create(int dim, std::vector<RationalVector> normals) {
        if (dim < 1) throw ParamOutOfRange("dimension must be positive");
        if (normals.size() > 64) throw TooLarge("at most 64 hyperplanes");
        for (const auto& h : normals) {
            if (static_cast<int>(h.size()) != dim) throw DimensionMismatch("normal length");
            if (detail::is_zero_row(h)) throw InvalidInput("zero normal vector");
        }
        for (std::size_t i = 0; i < normals.size(); ++i)
            for (std::size_t j = i + 1; j < normals.size(); ++j)
                if (detail::rational_rank({normals[i], normals[j]}) < 2)
                    throw InvalidInput("parallel normals at positions " + std::to_string(i) +
                                       " and " + std::to_string(j));
        Arrangement a;
        a.dim_ = dim;
        a.normals_ = std::move(normals);
        return a;
    }

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(normals_.size()); }
    const std::vector<RationalVector>& normals() const { return normals_; }
    const RationalVector& normal(int i) const { return normals_[static_cast<std::size_t>(i)]; }

    int rank() const { return detail::rational_rank(normals_); }

    std::string hyperplane_name(int i) const {
        std::string s = "[";
        const auto& h = normal(i);
        for (std::size_t c = 0; c < h.size(); ++c) {
            if (c) s += ",";
            s += h[c].str();
        }
        return s + "]";
    }

  private:
    int dim_ = 0;
    std::vector<RationalVector> normals_;
};

/// A chamber as its total sign vector, one sign per hyperplane.
struct Chamber {
    std::vector<signed char> signs; // +1 / -1

    std::string str() const {
        std::string s;
        for (signed char v : signs) s += (v > 0 ? '+' : '-');
        return s;
    }
    bool operator==(const Chamber& o) const { return signs == o.signs; }
    bool operator<(const Chamber& o) const { return signs < o.signs; }
};

inline Chamber negate(const Chamber& c) {
    Chamber out = c;
    for (auto& s : out.signs) s = static_cast<signed char>(-s);
    return out;
}

/// Hyperplane indices separating the two chambers.
inline std::vector<int> separation(const Chamber& a, const Chamber& b) {
    std::vector<int> out;
    for (std::size_t i = 0; i < a.signs.size(); ++i)
        if (a.signs[i] != b.signs[i]) out.push_back(static_cast<int>(i));
    return out;
}

/// The strict system carved out by a sign vector, minus the listed
/// hyperplanes.
inline std::vector<RationalVector> chamber_system(const Arrangement& a, const Chamber& c,
                                                  const std::vector<int>& omit = {}) {
    std::vector<RationalVector> rows;
    for (int i = 0; i < a.size(); ++i) {
        if (std::find(omit.begin(), omit.end(), i) != omit.end()) continue;
        RationalVector row = a.normal(i);
        if (c.signs[static_cast<std::size_t>(i)] < 0)
            for (auto& v : row) v = -v;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline bool chamber_realizable(const Arrangement& a, const Chamber& c) {
    return feasible(chamber_system(a, c), {}, a.dim());
}

/// Chamber containing the deterministic generic point (1, t, t^2, ...),
/// for the first integer t >= 1 giving no zero sign.
inline Chamber base_chamber_auto(const Arrangement& a) {
    for (int t = 1;; ++t) {
        RationalVector point(static_cast<std::size_t>(a.dim()));
        Rational pw = 1;
        for (int c = 0; c < a.dim(); ++c) {
            point[static_cast<std::size_t>(c)] = pw;
            pw *= t;
        }
        Chamber out;
        bool ok = true;
        for (int i = 0; i < a.size() && ok; ++i) {
            Rational dot = 0;
            for (int c = 0; c < a.dim(); ++c)
                dot += a.normal(i)[static_cast<std::size_t>(c)] * point[static_cast<std::size_t>(c)];
            if (dot == 0)
                ok = false;
            else
                out.signs.push_back(dot > 0 ? 1 : -1);
        }
        if (ok) return out;
    }
}

/// Hyperplanes supporting a facet of the chamber.
inline std::vector<int> walls(const Arrangement& a, const Chamber& c) {
    std::vector<int> out;
    for (int i = 0; i < a.size(); ++i) {
        if (feasible(chamber_system(a, c, {i}), {a.normal(i)}, a.dim())) out.push_back(i);
    }
    return out;
}

/// All chambers, found by breadth-first wall flips from the generic
/// chamber, returned sorted by sign string.
inline std::vector<Chamber> chambers(const Arrangement& a) {
    if (a.size() == 0) return {Chamber{}};
    Chamber start = base_chamber_auto(a);
    std::set<Chamber> seen{start};
    std::queue<Chamber> q;
    q.push(start);
    while (!q.empty()) {
        Chamber c = q.front();
        q.pop();
        for (int w : walls(a, c)) {
            Chamber next = c;
            next.signs[static_cast<std::size_t>(w)] =
                static_cast<signed char>(-next.signs[static_cast<std::size_t>(w)]);
            if (seen.insert(next).second) q.push(next);
        }
    }
    return {seen.begin(), seen.end()};
}

/// Walls of c not separating it from the base chamber.
inline std::vector<int> upper_walls(const Arrangement& a, const Chamber& base, const Chamber& c) {
    std::vector<int> out;
    for (int w : walls(a, c))
        if (base.signs[static_cast<std::size_t>(w)] == c.signs[static_cast<std::size_t>(w)])
            out.push_back(w);
    return out;
}

/// Localization: hyperplanes whose normal lies in the span of the given
/// ones.
inline std::vector<int> localization(const Arrangement& a, const std::vector<int>& subset) {
    std::vector<RationalVector> span_rows;
    for (int i : subset) span_rows.push_back(a.normal(i));
    const int base_rank = detail::rational_rank(span_rows);
    std::vector<int> out;
    for (int i = 0; i < a.size(); ++i) {
        auto rows = span_rows;
        rows.push_back(a.normal(i));
        if (detail::rational_rank(rows) == base_rank) out.push_back(i);
    }
    return out;
}

/// Whether the chamber touches the intersection subspace of the given
/// hyperplanes: the face with zero signs on the localization and the
/// chamber's signs elsewhere must be nonempty.
inline bool incident(const Arrangement& a, const Chamber& c, const std::vector<int>& subset) {
    auto ax = localization(a, subset);
    std::vector<RationalVector> eqs;
    for (int i : ax) eqs.push_back(a.normal(i));
    return feasible(chamber_system(a, c, ax), std::move(eqs), a.dim());
}

struct BineighborlyWitness {
    Chamber chamber;
    int h1, h2; // upper walls whose intersection misses the chamber
};

/// Every chamber must be incident to the intersection of any two of its
/// upper walls.
inline std::optional<BineighborlyWitness> bineighborly_violation(const Arrangement& a,
                                                                 const Chamber& base) {
    for (const Chamber& c : chambers(a)) {
        auto up = upper_walls(a, base, c);
        for (std::size_t i = 0; i < up.size(); ++i)
            for (std::size_t j = i + 1; j < up.size(); ++j)
                if (!incident(a, c, {up[i], up[j]}))
                    return BineighborlyWitness{c, up[i], up[j]};
    }
    return std::nullopt;
}

inline bool is_bineighborly(const Arrangement& a, const Chamber& base) {
    return !bineighborly_violation(a, base).has_value();
}

struct ChamberPoset {
    FinitePoset poset;             // element i corresponds to chambers[i]
    std::vector<Chamber> chamber;  // sorted by sign string
    int base_index;
};

/// Chambers ordered by inclusion of separation sets from the base, built
/// from an already-enumerated chamber list.
inline ChamberPoset chamber_poset(std::vector<Chamber> cs, const Chamber& base) {
    const std::size_t m = cs.size();
    std::vector<std::uint64_t> sep(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (int h : separation(base, cs[i])) sep[i] |= std::uint64_t{1} << h;
    std::vector<std::string> names;
    names.reserve(m);
    for (const auto& c : cs) names.push_back(c.signs.empty() ? "()" : c.str());
    std::vector<Bitset> leq(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if ((sep[i] & ~sep[j]) == 0) leq[i].set(j);
    auto poset = FinitePoset::from_leq(std::move(names), leq);
    int base_index = static_cast<int>(std::find(cs.begin(), cs.end(), base) - cs.begin());
    return {std::move(poset), std::move(cs), base_index};
}

inline ChamberPoset chamber_poset(const Arrangement& a, const Chamber& base) {
    return chamber_poset(chambers(a), base);
}

/**
 * Base-independent geometry of an arrangement, computed once and shared
 * across base-chamber sweeps: chambers, their walls, and incidence of
 * each chamber to the intersection of each pair of its walls.
 */
struct ChamberGeometry {
    std::vector<Chamber> chamber;                       // sorted by sign string
    std::vector<std::vector<int>> wall;                 // walls per chamber
    std::vector<std::map<std::pair<int, int>, bool>> pair_incident;
};

inline ChamberGeometry analyze(const Arrangement& a) {
    ChamberGeometry g;
    g.chamber = chambers(a);
    for (const auto& c : g.chamber) {
        g.wall.push_back(walls(a, c));
        std::map<std::pair<int, int>, bool> inc;
        const auto& w = g.wall.back();
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                inc[{w[i], w[j]}] = incident(a, c, {w[i], w[j]});
        g.pair_incident.push_back(std::move(inc));
    }
    return g;
}

/// Same verdict as bineighborly_violation, reusing precomputed geometry.
inline std::optional<BineighborlyWitness> bineighborly_violation(const ChamberGeometry& g,
                                                                 const Chamber& base) {
    for (std::size_t k = 0; k < g.chamber.size(); ++k) {
        const Chamber& c = g.chamber[k];
        std::vector<int> up;
        for (int w : g.wall[k])
            if (base.signs[static_cast<std::size_t>(w)] == c.signs[static_cast<std::size_t>(w)])
                up.push_back(w);
        for (std::size_t i = 0; i < up.size(); ++i)
            for (std::size_t j = i + 1; j < up.size(); ++j)
                if (!g.pair_incident[k].at({up[i], up[j]}))
                    return BineighborlyWitness{c, up[i], up[j]};
    }
    return std::nullopt;
}

/// Sub-arrangement on the listed hyperplane indices.
inline Arrangement subarrangement(const Arrangement& a, const std::vector<int>& idx) {
    std::vector<RationalVector> normals;
    for (int i : idx) normals.push_back(a.normal(i));
    return Arrangement::create(a.dim(), std::move(normals));
}

/// Restriction of a chamber to a sub-arrangement; normals are matched up
/// to a positive scalar.
inline Chamber restrict_chamber(const Arrangement& a, const Arrangement& sub, const Chamber& c) {
    Chamber out;
    for (int j = 0; j < sub.size(); ++j) {
        int found = -1;
        for (int i = 0; i < a.size() && found < 0; ++i) {
            if (detail::rational_rank({a.normal(i), sub.normal(j)}) >= 2) continue;
            // parallel; demand a positive ratio
            for (std::size_t k = 0; k < a.normal(i).size(); ++k)
                if (a.normal(i)[k] != 0) {
                    if (sub.normal(j)[k] / a.normal(i)[k] > 0) found = i;
                    break;
                }
        }
        if (found < 0) throw NotSubarrangement("hyperplane not present in the ambient arrangement");
        out.signs.push_back(c.signs[static_cast<std::size_t>(found)]);
    }
    return out;
}

/// A chamber is simplicial when its wall count equals the arrangement
/// rank and the wall normals are linearly independent.
inline bool is_simplicial_chamber(const Arrangement& a, const Chamber& c) {
    auto w = walls(a, c);
    if (static_cast<int>(w.size()) != a.rank()) return false;
    std::vector<RationalVector> rows;
    for (int i : w) rows.push_back(a.normal(i));
    return detail::rational_rank(rows) == static_cast<int>(w.size());
}

} // namespace latkit
