#pragma once

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "latkit/arrangement.hpp"
#include "latkit/catalog.hpp"
#include "latkit/congruence.hpp"
#include "latkit/doubling.hpp"
#include "latkit/json_io.hpp"
#include "latkit/lattice.hpp"
#include "latkit/report.hpp"

namespace latkit::verify {

namespace detail {

template <class F>
void parallel_for(int n, int threads, F&& fn) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const int k = std::min(threads, n);
    for (int t = 0; t < k; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

inline int effective_threads(const RunOptions& opt) {
    if (opt.threads > 0) return opt.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// shared universes

struct NamedLattice {
    std::string name;
    Lattice lattice;
};

/// Named fixtures used by the lattice-side theorem sweeps.
inline std::vector<NamedLattice> catalog_universe() {
    std::vector<NamedLattice> out;
    for (int n = 2; n <= 4; ++n) out.push_back({"chain" + std::to_string(n), catalog::chain(n)});
    for (int n = 2; n <= 4; ++n)
        out.push_back({"boolean" + std::to_string(n), catalog::boolean_lattice(n)});
    out.push_back({"M3", catalog::m3()});
    out.push_back({"N5", catalog::n5()});
    out.push_back({"hexagon", catalog::hexagon()});
    out.push_back({"fig1_left", catalog::fig1_left()});
    out.push_back({"fig1_right", catalog::fig1_right()});
    for (int n = 2; n <= 4; ++n)
        out.push_back({"weak_order" + std::to_string(n), catalog::weak_order(n)});
    for (int n = 2; n <= 5; ++n) out.push_back({"tamari" + std::to_string(n), catalog::tamari(n)});
    return out;
}

inline std::vector<NamedLattice> enumerated_universe(int max_n) {
    std::vector<NamedLattice> out;
    for (int n = 1; n <= max_n; ++n) {
        auto ls = catalog::enumerate_lattices(n);
        for (std::size_t i = 0; i < ls.size(); ++i)
            out.push_back({"lat" + std::to_string(n) + "_" + std::to_string(i), std::move(ls[i])});
    }
    return out;
}

inline std::vector<NamedLattice> full_universe(int max_n = 6) {
    auto out = catalog_universe();
    auto en = enumerated_universe(max_n);
    out.insert(out.end(), std::make_move_iterator(en.begin()), std::make_move_iterator(en.end()));
    return out;
}

// ---------------------------------------------------------------------------
// small helpers shared by suites

/// Reduced Euler characteristic of the order complex of the open
/// interval, via chain counting on the induced subposet.
inline long long open_interval_order_euler(const FinitePoset& p, int x, int y) {
    auto elems = p.open_interval(x, y);
    if (elems.empty()) return -1;
    return p.induced(elems).order_complex_reduced_euler();
}

inline long long max_abs_mobius(const Lattice& lat) {
    auto t = lat.poset().mobius_table();
    long long best = 0;
    for (int x = 0; x < lat.size(); ++x)
        for (int y = 0; y < lat.size(); ++y)
            if (lat.poset().leq(x, y))
                best = std::max(best, std::llabs(t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]));
    return best;
}

enum class HomotopyEvidence { contractible, sphere, other };

/// Euler/Betti necessary conditions for "contractible or a sphere".
inline HomotopyEvidence euler_betti_evidence(const SimplicialComplex& c) {
    if (c.is_void()) return HomotopyEvidence::other;
    if (c.dim() == -1) return HomotopyEvidence::sphere; // boundary of a point
    auto b = c.betti();
    long long chi = c.reduced_euler();
    int ones = 0, dim_of_one = -1;
    for (std::size_t d = 0; d < b.size(); ++d) {
        if (b[d] == 1 && ones == 0) {
            ones = 1;
            dim_of_one = static_cast<int>(d);
        } else if (b[d] != 0) {
            return HomotopyEvidence::other;
        }
    }
    if (ones == 0) return chi == 0 ? HomotopyEvidence::contractible : HomotopyEvidence::other;
    const long long expected = (dim_of_one % 2 == 0) ? 1 : -1;
    return chi == expected ? HomotopyEvidence::sphere : HomotopyEvidence::other;
}

inline bool all_intervals_sphere_or_contractible(const Lattice& lat) {
    for (int x = 0; x < lat.size(); ++x)
        for (int y = 0; y < lat.size(); ++y) {
            if (x == y || !lat.poset().leq(x, y)) continue;
            if (euler_betti_evidence(lat.crosscut_complex(x, y)) == HomotopyEvidence::other)
                return false;
        }
    return true;
}

inline std::vector<std::string> names_of(const Lattice& lat, const std::vector<int>& elems) {
    std::vector<std::string> out;
    for (int e : elems) out.push_back(lat.name(e));
    return out;
}

// ---------------------------------------------------------------------------
// suite: crosscut  (Euler consistency of crosscut complex, Moebius, order complex)

inline std::vector<PropertyReport> suite_crosscut(const RunOptions& opt) {
    auto subjects = full_universe();
    std::vector<PropertyReport> reports(subjects.size());
    detail::parallel_for(static_cast<int>(subjects.size()), detail::effective_threads(opt), [&](int i) {
        detail::Timer timer;
        const auto& [name, lat] = subjects[static_cast<std::size_t>(i)];
        PropertyReport r{name, "crosscut-euler-consistency", Verdict::holds, {}, {}};
        auto mob = lat.poset().mobius_table();
        for (int x = 0; x < lat.size() && r.verdict == Verdict::holds; ++x)
            for (int y = 0; y < lat.size(); ++y) {
                if (x == y || !lat.poset().leq(x, y)) continue;
                long long chi_cc = lat.crosscut_complex(x, y).reduced_euler();
                long long mu = mob[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                long long chi_oc = open_interval_order_euler(lat.poset(), x, y);
                if (chi_cc != mu || mu != chi_oc) {
                    r.verdict = Verdict::fails;
                    r.witness = {{"x", lat.name(x)},
                                 {"y", lat.name(y)},
                                 {"crosscut_euler", chi_cc},
                                 {"mobius", mu},
                                 {"order_complex_euler", chi_oc}};
                    break;
                }
            }
        r.seconds = timer.seconds();
        reports[static_cast<std::size_t>(i)] = std::move(r);
    });
    return reports;
}

// ---------------------------------------------------------------------------
// suite: semidistributive  (meet-SD forces the simplicial property, the
// join-SD shape law, and the Moebius range)

inline std::vector<PropertyReport> suite_semidistributive(const RunOptions& opt) {
    auto subjects = full_universe();
    std::vector<std::vector<PropertyReport>> rows(subjects.size());
    detail::parallel_for(static_cast<int>(subjects.size()), detail::effective_threads(opt), [&](int i) {
        const auto& [name, lat] = subjects[static_cast<std::size_t>(i)];
        std::vector<PropertyReport>& out = rows[static_cast<std::size_t>(i)];
        const bool meet_sd = lat.is_meet_semidistributive();
        const bool join_sd = lat.is_join_semidistributive();
        auto cc = lat.crosscut_violation();

        PropertyReport imp{name, "meet-sd-implies-crosscut-simplicial", Verdict::holds, {}, {}};
        if (meet_sd && cc) {
            imp.verdict = Verdict::fails;
            imp.witness = {{"x", lat.name(cc->x)},
                           {"y", lat.name(cc->y)},
                           {"subset", names_of(lat, cc->subset)}};
        }
        out.push_back(std::move(imp));

        PropertyReport shape{name, "join-sd-crosscut-shape", Verdict::holds, {}, {}};
        if (join_sd) {
            for (int x = 0; x < lat.size() && shape.verdict == Verdict::holds; ++x)
                for (int y = 0; y < lat.size(); ++y) {
                    if (x == y || !lat.poset().leq(x, y)) continue;
                    auto gamma = lat.crosscut_complex(x, y);
                    const int a = gamma.vertex_count();
                    if (!gamma.is_full_simplex() && !gamma.is_pure(a - 2)) {
                        shape.verdict = Verdict::fails;
                        shape.witness = {{"x", lat.name(x)}, {"y", lat.name(y)}, {"atoms", a}};
                        break;
                    }
                }
        }
        out.push_back(std::move(shape));

        PropertyReport range{name, "sd-mobius-range", Verdict::holds, {}, {}};
        if (meet_sd || join_sd) {
            long long m = max_abs_mobius(lat);
            if (m > 1) {
                range.verdict = Verdict::fails;
                range.witness = {{"max_abs_mobius", m}};
            }
        }
        out.push_back(std::move(range));
    });
    std::vector<PropertyReport> reports;
    for (auto& row : rows)
        for (auto& r : row) reports.push_back(std::move(r));

    // pinned shape fixtures
    {
        auto left = catalog::fig1_left();
        PropertyReport r{"fig1_left", "crosscut-simplicial", Verdict::holds, {}, {}};
        if (auto w = left.crosscut_violation()) {
            r.verdict = Verdict::fails;
            r.witness = {{"x", left.name(w->x)},
                         {"y", left.name(w->y)},
                         {"subset", names_of(left, w->subset)}};
        }
        reports.push_back(std::move(r));
    }
    {
        auto right = catalog::fig1_right();
        auto w = right.crosscut_violation();
        PropertyReport r{"fig1_right", "crosscut-simplicial-fails-with-witness", Verdict::holds, {}, {}};
        const bool expected = w && right.name(w->x) == "0" && right.name(w->y) == "1" &&
                              names_of(right, w->subset) == std::vector<std::string>{"a", "b"};
        if (!expected) {
            r.verdict = Verdict::fails;
            if (w)
                r.witness = {{"x", right.name(w->x)},
                             {"y", right.name(w->y)},
                             {"subset", names_of(right, w->subset)}};
        } else {
            r.witness = {{"x", "0"}, {"y", "1"}, {"subset", {"a", "b"}}};
        }
        reports.push_back(std::move(r));
    }
    {
        auto right = catalog::fig1_right();
        auto b = right.poset().bounds();
        auto gamma = right.crosscut_complex(b->first, b->second);
        PropertyReport r{"fig1_right", "top-interval-pure-path", Verdict::holds, {}, {}};
        SimplicialComplex path = SimplicialComplex::from_facets(
            {"a", "m", "b"}, {{"a", "m"}, {"m", "b"}});
        if (!(gamma.is_pure(1) && !gamma.is_full_simplex() && !gamma.is_simplex_boundary() &&
              isomorphic(gamma, path))) {
            r.verdict = Verdict::fails;
            r.witness = {{"facets", complex_to_json(gamma)["facets"]}};
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

// ---------------------------------------------------------------------------
// suite: arrangements  (chamber posets: equivalence of the three
// verdicts, structural chamber-poset properties, braid/weak-order match)

struct ArrangementInstance {
    std::string name;
    Arrangement arrangement;
};

inline std::vector<ArrangementInstance> arrangement_universe(unsigned seed) {
    std::vector<ArrangementInstance> out;
    auto braid4 = catalog::braid(4);
    // the empty sub-arrangement is skipped: its single chamber is fixed by
    // negation, so the involution properties are vacuously broken
    for (int mask = 1; mask < (1 << 6); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1) idx.push_back(i);
        out.push_back({"braid4_sub" + std::to_string(mask), subarrangement(braid4, idx)});
    }
    out.push_back({"three_lines", catalog::three_lines()});
    out.push_back({"prism4", catalog::prism4()});

    // seeded random rank-3 arrangements with up to 6 hyperplanes
    std::mt19937 gen(seed);
    int made = 0;
    while (made < 20) {
        const int m = 4 + static_cast<int>(gen() % 3);
        std::vector<RationalVector> normals;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            for (int attempt = 0;; ++attempt) {
                if (attempt > 200) {
                    ok = false;
                    break;
                }
                RationalVector v(3);
                bool zero = true;
                for (int c = 0; c < 3; ++c) {
                    int e = static_cast<int>(gen() % 5) - 2;
                    v[static_cast<std::size_t>(c)] = e;
                    if (e != 0) zero = false;
                }
                if (zero) continue;
                bool parallel = false;
                for (const auto& u : normals)
                    if (latkit::detail::rational_rank({u, v}) < 2) parallel = true;
                if (parallel) continue;
                normals.push_back(std::move(v));
                break;
            }
        }
        if (!ok || latkit::detail::rational_rank(normals) != 3) continue;
        out.push_back({"random3_" + std::to_string(made),
                       Arrangement::create(3, std::move(normals))});
        ++made;
    }
    return out;
}

inline std::vector<PropertyReport> suite_arrangements(const RunOptions& opt) {
    auto instances = arrangement_universe(opt.seed);
    std::vector<std::vector<PropertyReport>> rows(instances.size());

    detail::parallel_for(static_cast<int>(instances.size()), detail::effective_threads(opt), [&](int k) {
        const auto& [name, arr] = instances[static_cast<std::size_t>(k)];
        auto& out = rows[static_cast<std::size_t>(k)];
        auto geometry = analyze(arr);
        const auto& cs = geometry.chamber;
        const std::size_t m = cs.size();

        // sign masks make separation sets O(1) bit operations
        std::vector<std::uint64_t> sign_mask(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (int h = 0; h < arr.size(); ++h)
                if (cs[i].signs[static_cast<std::size_t>(h)] > 0)
                    sign_mask[i] |= std::uint64_t{1} << h;
        auto sep_mask = [&](std::size_t i, std::size_t j) { return sign_mask[i] ^ sign_mask[j]; };
        auto index_of_chamber = [&](const Chamber& c) {
            return static_cast<std::size_t>(std::lower_bound(cs.begin(), cs.end(), c) - cs.begin());
        };

        // base-independent structural checks -----------------------------
        PropertyReport inc{name, "chamber-incidence-separation", Verdict::holds, {}, {}};
        for (std::size_t ci = 0; ci < m && inc.verdict == Verdict::holds; ++ci) {
            std::vector<std::vector<int>> subsets;
            for (int h = 0; h < arr.size(); ++h) subsets.push_back({h});
            for (int h = 0; h < arr.size(); ++h)
                for (int g = h + 1; g < arr.size(); ++g) subsets.push_back({h, g});
            for (const auto& sub : subsets) {
                if (!incident(arr, cs[ci], sub)) continue;
                auto ax = localization(arr, sub);
                std::uint64_t ax_mask = 0;
                for (int h : ax) ax_mask |= std::uint64_t{1} << h;
                bool found = false;
                for (std::size_t other = 0; other < m; ++other)
                    if (sep_mask(ci, other) == ax_mask) found = true;
                if (!found) {
                    inc.verdict = Verdict::fails;
                    inc.witness = {{"chamber", cs[ci].str()}, {"subset", sub}};
                    break;
                }
            }
        }
        out.push_back(std::move(inc));

        PropertyReport opp{name, "chamber-opposite", Verdict::holds, {}, {}};
        for (std::size_t ci = 0; ci < m && opp.verdict == Verdict::holds; ++ci) {
            std::uint64_t wall_mask = 0;
            for (int h : geometry.wall[ci]) wall_mask |= std::uint64_t{1} << h;
            for (std::size_t other = 0; other < m; ++other) {
                if ((wall_mask & ~sep_mask(ci, other)) != 0) continue;
                if (!(cs[other] == negate(cs[ci]))) {
                    opp.verdict = Verdict::fails;
                    opp.witness = {{"chamber", cs[ci].str()}, {"other", cs[other].str()}};
                    break;
                }
            }
        }
        out.push_back(std::move(opp));

        // per-base checks -------------------------------------------------
        PropertyReport equiv{name, "chamber-equivalence", Verdict::holds, {}, {}};
        PropertyReport invol{name, "chamber-involution", Verdict::holds, {}, {}};
        PropertyReport graded{name, "chamber-grading", Verdict::holds, {}, {}};
        for (std::size_t bi = 0; bi < m; ++bi) {
            const Chamber& base = cs[bi];
            auto cp = chamber_poset(cs, base);
            if (equiv.verdict == Verdict::holds) {
                auto lattice_result = try_lattice(cp.poset);
                const bool is_lat = lattice_result.lattice.has_value();
                const bool cs_simpl = is_lat && lattice_result.lattice->is_crosscut_simplicial();
                const bool sd = is_lat && lattice_result.lattice->is_semidistributive();
                const bool bn = !bineighborly_violation(geometry, base).has_value();
                if ((bn != (is_lat && cs_simpl)) || (bn != (is_lat && sd))) {
                    equiv.verdict = Verdict::fails;
                    equiv.witness = {{"base", base.str()},
                                     {"lattice", is_lat},
                                     {"crosscut_simplicial", cs_simpl},
                                     {"semidistributive", sd},
                                     {"bineighborly", bn}};
                }
            }

            // involution: free, order-reversing, complementary separations
            if (invol.verdict == Verdict::holds) {
                for (std::size_t i = 0; i < m && invol.verdict == Verdict::holds; ++i) {
                    Chamber neg = negate(cs[i]);
                    std::size_t ni = index_of_chamber(neg);
                    if (neg == cs[i] || ni >= m || !(cs[ni] == neg)) {
                        invol.verdict = Verdict::fails;
                        invol.witness = {{"base", base.str()}, {"chamber", cs[i].str()}};
                        break;
                    }
                    if (latkit::detail::popcount64(sep_mask(bi, i)) + latkit::detail::popcount64(sep_mask(bi, ni)) !=
                        arr.size()) {
                        invol.verdict = Verdict::fails;
                        invol.witness = {{"base", base.str()}, {"chamber", cs[i].str()}};
                        break;
                    }
                    for (std::size_t j = 0; j < m; ++j) {
                        if ((sep_mask(bi, i) & ~sep_mask(bi, j)) != 0) continue; // i <= j
                        std::size_t nj = index_of_chamber(negate(cs[j]));
                        if ((sep_mask(bi, nj) & ~sep_mask(bi, ni)) != 0) {
                            invol.verdict = Verdict::fails;
                            invol.witness = {{"base", base.str()},
                                             {"pair", {cs[i].str(), cs[j].str()}}};
                            break;
                        }
                    }
                }
            }

            // grading: bounded, every cover raises the separation count by 1
            if (graded.verdict == Verdict::holds) {
                bool ok = cp.poset.bounds().has_value();
                if (ok)
                    for (const auto& [lo, hi] : cp.poset.cover_pairs())
                        if (latkit::detail::popcount64(sep_mask(bi, static_cast<std::size_t>(hi))) !=
                            latkit::detail::popcount64(sep_mask(bi, static_cast<std::size_t>(lo))) + 1)
                            ok = false;
                if (!ok) {
                    graded.verdict = Verdict::fails;
                    graded.witness = {{"base", base.str()}};
                }
            }
        }
        out.push_back(std::move(equiv));
        out.push_back(std::move(invol));
        out.push_back(std::move(graded));

        // restriction to a one-deleted sub-arrangement: chambers restrict
        // to chambers and the map preserves order for every base
        PropertyReport restr{name, "chamber-restriction-monotone", Verdict::holds, {}, {}};
        if (arr.size() > 1) {
            std::vector<int> keep;
            for (int h = 1; h < arr.size(); ++h) keep.push_back(h);
            auto sub = subarrangement(arr, keep);
            auto sub_cs = chambers(sub);
            std::vector<std::size_t> image(m);
            for (std::size_t i = 0; i < m && restr.verdict == Verdict::holds; ++i) {
                auto ri = restrict_chamber(arr, sub, cs[i]);
                auto it = std::lower_bound(sub_cs.begin(), sub_cs.end(), ri);
                if (it == sub_cs.end() || !(*it == ri)) {
                    restr.verdict = Verdict::fails;
                    restr.witness = {{"chamber", cs[i].str()}, {"note", "restriction unrealizable"}};
                    break;
                }
                image[i] = static_cast<std::size_t>(it - sub_cs.begin());
            }
            if (restr.verdict == Verdict::holds) {
                std::vector<std::uint64_t> sub_mask(sub_cs.size(), 0);
                for (std::size_t i = 0; i < sub_cs.size(); ++i)
                    for (int h = 0; h < sub.size(); ++h)
                        if (sub_cs[i].signs[static_cast<std::size_t>(h)] > 0)
                            sub_mask[i] |= std::uint64_t{1} << h;
                for (std::size_t bi = 0; bi < m && restr.verdict == Verdict::holds; ++bi)
                    for (std::size_t i = 0; i < m && restr.verdict == Verdict::holds; ++i)
                        for (std::size_t j = 0; j < m; ++j) {
                            if ((sep_mask(bi, i) & ~sep_mask(bi, j)) != 0) continue;
                            std::uint64_t si = sub_mask[image[bi]] ^ sub_mask[image[i]];
                            std::uint64_t sj = sub_mask[image[bi]] ^ sub_mask[image[j]];
                            if ((si & ~sj) != 0) {
                                restr.verdict = Verdict::fails;
                                restr.witness = {{"base", cs[bi].str()},
                                                 {"pair", {cs[i].str(), cs[j].str()}}};
                                break;
                            }
                        }
            }
        }
        out.push_back(std::move(restr));
    });

    std::vector<PropertyReport> reports;
    for (auto& row : rows)
        for (auto& r : row) reports.push_back(std::move(r));

    // pinned: the prism base chamber violates bineighborliness at the two
    // slanted planes
    {
        auto arr = catalog::prism4();
        Chamber prism{{1, 1, 1, 1}};
        auto violation = bineighborly_violation(arr, prism);
        const bool pinned_pair_fails = !incident(arr, prism, {2, 3});
        PropertyReport r{"prism4", "prism-base-witness", Verdict::holds, {}, {}};
        if (!(violation.has_value() && pinned_pair_fails && violation->chamber == prism)) {
            r.verdict = Verdict::fails;
            r.witness = {{"violation_found", violation.has_value()},
                         {"pinned_pair_nonincident", pinned_pair_fails}};
        } else {
            r.witness = {{"chamber", prism.str()},
                         {"pair", {arr.hyperplane_name(2), arr.hyperplane_name(3)}}};
        }
        reports.push_back(std::move(r));
    }

    // pinned: the braid chamber poset at the fundamental chamber is the
    // weak order
    {
        auto braid4 = catalog::braid(4);
        auto cp = chamber_poset(braid4, base_chamber_auto(braid4));
        auto weak = catalog::weak_order(4);
        PropertyReport r{"braid4", "braid-weak-order-isomorphism", Verdict::holds, {}, {}};
        if (!(cp.poset.size() == 24 && isomorphic(cp.poset, weak.poset()))) {
            r.verdict = Verdict::fails;
            r.witness = {{"chambers", cp.poset.size()}};
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

// ---------------------------------------------------------------------------
// suite: quotients  (crosscut complexes of quotient intervals, closure of
// the simplicial property, congruence lattice structure)

inline std::vector<PropertyReport> suite_quotients(const RunOptions& opt) {
    auto subjects = enumerated_universe(6);
    std::vector<std::vector<PropertyReport>> rows(subjects.size());
    detail::parallel_for(static_cast<int>(subjects.size()), detail::effective_threads(opt), [&](int k) {
        const auto& [name, lat] = subjects[static_cast<std::size_t>(k)];
        auto& out = rows[static_cast<std::size_t>(k)];
        auto congruences = all_congruences(lat);

        PropertyReport realized{name, "quotient-crosscut-realized", Verdict::holds, {}, {}};
        PropertyReport closed{name, "quotient-crosscut-simplicial-closed", Verdict::holds, {}, {}};
        PropertyReport restriction{name, "interval-congruence-restriction", Verdict::holds, {}, {}};
        PropertyReport atoms_bij{name, "quotient-atoms-bijection", Verdict::holds, {}, {}};
        const bool base_cs = lat.is_crosscut_simplicial();

        for (const auto& theta : congruences) {
            auto q = quotient(lat, theta);

            // crosscut complexes of quotient intervals appear in the base
            for (int qx = 0; qx < q.lattice.size() && realized.verdict == Verdict::holds; ++qx)
                for (int qy = 0; qy < q.lattice.size(); ++qy) {
                    if (qx == qy || !q.lattice.poset().leq(qx, qy)) continue;
                    auto gamma_q = q.lattice.crosscut_complex(qx, qy);
                    // candidate: lift the interval through the upward projection
                    int rep_x = theta.blocks()[static_cast<std::size_t>(qx)][0];
                    int rep_y = theta.blocks()[static_cast<std::size_t>(qy)][0];
                    int px = project_up(lat, theta, rep_x);
                    int py = project_up(lat, theta, rep_y);
                    bool matched = false;
                    if (lat.poset().lt(px, py)) {
                        auto atoms = lat.atoms_of(px, py);
                        int ja = px;
                        for (int a : atoms) ja = lat.join(ja, a);
                        std::optional<int> yprime;
                        for (int z : theta.blocks()[static_cast<std::size_t>(qy)])
                            if (lat.poset().leq(ja, z)) yprime = yprime ? lat.meet(*yprime, z) : z;
                        if (yprime && lat.poset().lt(px, *yprime))
                            matched = isomorphic(lat.crosscut_complex(px, *yprime), gamma_q);
                    }
                    if (!matched) {
                        for (int x = 0; x < lat.size() && !matched; ++x)
                            for (int y = 0; y < lat.size() && !matched; ++y) {
                                if (x == y || !lat.poset().leq(x, y)) continue;
                                matched = isomorphic(lat.crosscut_complex(x, y), gamma_q);
                            }
                    }
                    if (!matched) {
                        realized.verdict = Verdict::unverified; // would falsify the theorem
                        realized.witness = {{"quotient_interval",
                                             {q.lattice.name(qx), q.lattice.name(qy)}},
                                            {"note", "no base interval with isomorphic crosscut"}};
                        break;
                    }
                }

            if (base_cs && closed.verdict == Verdict::holds) {
                if (!q.lattice.is_crosscut_simplicial()) {
                    closed.verdict = Verdict::fails;
                    closed.witness = {{"blocks", congruence_to_json(lat, theta)["blocks"]}};
                }
            }

            // interval restriction stays a congruence; quotient intervals match
            if (restriction.verdict == Verdict::holds) {
                for (int x = 0; x < lat.size() && restriction.verdict == Verdict::holds; ++x)
                    for (int y = 0; y < lat.size(); ++y) {
                        if (!lat.poset().leq(x, y)) continue;
                        auto elems = lat.poset().elements_between(x, y);
                        auto ilat = Lattice::from_poset(lat.poset().closed_interval(x, y));
                        std::map<int, std::vector<int>> blocks_in;
                        for (std::size_t pos = 0; pos < elems.size(); ++pos)
                            blocks_in[theta.block_of(elems[pos])].push_back(static_cast<int>(pos));
                        std::vector<std::vector<int>> restricted;
                        for (auto& [_, blk] : blocks_in) restricted.push_back(blk);
                        if (!is_lattice_congruence(ilat, restricted)) {
                            restriction.verdict = Verdict::fails;
                            restriction.witness = {{"x", lat.name(x)}, {"y", lat.name(y)}};
                            break;
                        }
                        auto itheta = Congruence::from_blocks(ilat, std::move(restricted));
                        auto iq = quotient(ilat, itheta);
                        // the quotient interval [[x],[y]]
                        int qx2 = theta.block_of(x), qy2 = theta.block_of(y);
                        auto qelems = q.lattice.poset().elements_between(qx2, qy2);
                        auto qint = q.lattice.poset().induced(qelems);
                        if (!isomorphic(iq.lattice.poset(), qint)) {
                            restriction.verdict = Verdict::fails;
                            restriction.witness = {{"x", lat.name(x)}, {"y", lat.name(y)}};
                            break;
                        }
                    }
            }

            // atoms of the quotient match covers of the lifted bottom
            if (atoms_bij.verdict == Verdict::holds) {
                int lifted = project_up(lat, theta, lat.bottom());
                std::set<int> cover_blocks;
                for (int c : lat.poset().upper_covers(lifted))
                    cover_blocks.insert(theta.block_of(c));
                auto qatoms = q.lattice.atoms_of(q.lattice.bottom(), q.lattice.top());
                std::set<int> atom_blocks(qatoms.begin(), qatoms.end());
                const bool same_count =
                    cover_blocks == atom_blocks &&
                    cover_blocks.size() == lat.poset().upper_covers(lifted).size();
                if (!same_count) {
                    atoms_bij.verdict = Verdict::fails;
                    atoms_bij.witness = {{"lifted_bottom", lat.name(lifted)}};
                }
            }
        }
        out.push_back(std::move(realized));
        out.push_back(std::move(closed));
        out.push_back(std::move(restriction));
        out.push_back(std::move(atoms_bij));

        PropertyReport dist{name, "congruence-lattice-distributive", Verdict::holds, {}, {}};
        auto con_poset = congruence_refinement_poset(congruences);
        auto con_lat = try_lattice(con_poset);
        if (!con_lat.lattice || !con_lat.lattice->is_distributive()) {
            dist.verdict = Verdict::fails;
            dist.witness = {{"congruence_count", congruences.size()}};
        }
        out.push_back(std::move(dist));

        PropertyReport cn_range{name, "congruence-normal-mobius-range", Verdict::holds, {}, {}};
        if (is_congruence_normal(lat)) {
            long long m = max_abs_mobius(lat);
            if (m > 1) {
                cn_range.verdict = Verdict::fails;
                cn_range.witness = {{"max_abs_mobius", m}};
            }
        }
        out.push_back(std::move(cn_range));
    });

    std::vector<PropertyReport> reports;
    for (auto& row : rows)
        for (auto& r : row) reports.push_back(std::move(r));

    {
        PropertyReport r{"N5+B2", "congruence-counts", Verdict::holds, {}, {}};
        auto n5_count = all_congruences(catalog::n5()).size();
        auto b2_count = all_congruences(catalog::boolean_lattice(2)).size();
        if (n5_count != 5 || b2_count != 4) {
            r.verdict = Verdict::fails;
            r.witness = {{"con_n5", n5_count}, {"con_b2", b2_count}};
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

// ---------------------------------------------------------------------------
// suite: doubling  (interval classification, join formula, preservation
// statements, doubling chains)

inline std::vector<std::vector<int>> order_convex_subsets(const FinitePoset& p) {
    std::vector<std::vector<int>> out;
    const int n = p.size();
    if (n > 16) throw TooLarge("convex subset enumeration limited to 16 elements");
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> c;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) c.push_back(i);
        if (p.is_order_convex(c)) out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<PropertyReport> suite_doubling(const RunOptions& opt) {
    auto subjects = enumerated_universe(5);
    std::vector<std::vector<PropertyReport>> rows(subjects.size());
    detail::parallel_for(static_cast<int>(subjects.size()), detail::effective_threads(opt), [&](int k) {
        const auto& [name, lat] = subjects[static_cast<std::size_t>(k)];
        auto& out = rows[static_cast<std::size_t>(k)];
        PropertyReport classify{name, "doubling-crosscut-classification", Verdict::holds, {}, {}};
        PropertyReport formula{name, "doubling-join-formula", Verdict::holds, {}, {}};
        PropertyReport fibers{name, "doubling-projection-quotient", Verdict::holds, {}, {}};
        PropertyReport mob{name, "doubling-mobius-range", Verdict::holds, {}, {}};
        PropertyReport homotopy{name, "doubling-euler-betti", Verdict::holds, {}, {}};
        PropertyReport filter_cs{name, "doubling-filter-crosscut-simplicial", Verdict::holds, {}, {}};
        PropertyReport hypothesis_cs{name, "doubling-hypothesis-crosscut-simplicial", Verdict::holds, {}, {}};

        const bool base_small_mobius = max_abs_mobius(lat) <= 1;
        const bool base_evidence = all_intervals_sphere_or_contractible(lat);
        const bool base_cs = lat.is_crosscut_simplicial();

        for (const auto& convex : order_convex_subsets(lat.poset())) {
            auto d = double_at(lat, convex);

            if (formula.verdict == Verdict::holds)
                for (int i = 0; i < d.lattice.size(); ++i)
                    for (int j = 0; j < d.lattice.size(); ++j)
                        if (doubled_join_formula(d, i, j) != d.lattice.join(i, j)) {
                            formula.verdict = Verdict::fails;
                            formula.witness = {{"convex", names_of(lat, convex)},
                                               {"pair", {d.lattice.name(i), d.lattice.name(j)}}};
                        }

            if (classify.verdict == Verdict::holds)
                for (int i = 0; i < d.lattice.size() && classify.verdict == Verdict::holds; ++i)
                    for (int j = 0; j < d.lattice.size(); ++j) {
                        if (i == j || !d.lattice.poset().leq(i, j)) continue;
                        auto predicted = classify_doubled_interval(d, i, j);
                        auto actual = d.lattice.crosscut_complex(i, j);
                        if (!isomorphic(actual, predicted.predicted)) {
                            classify.verdict = Verdict::fails;
                            classify.witness = {{"convex", names_of(lat, convex)},
                                                {"interval",
                                                 {d.lattice.name(i), d.lattice.name(j)}},
                                                {"case", predicted.case_tag}};
                            break;
                        }
                    }

            if (fibers.verdict == Verdict::holds) {
                auto fib = fiber_congruence(d);
                auto q = quotient(d.lattice, fib);
                if (!isomorphic(q.lattice.poset(), lat.poset())) {
                    fibers.verdict = Verdict::fails;
                    fibers.witness = {{"convex", names_of(lat, convex)}};
                }
            }

            if (base_small_mobius && mob.verdict == Verdict::holds &&
                max_abs_mobius(d.lattice) > 1) {
                mob.verdict = Verdict::fails;
                mob.witness = {{"convex", names_of(lat, convex)}};
            }

            if (base_evidence && homotopy.verdict == Verdict::holds &&
                !all_intervals_sphere_or_contractible(d.lattice)) {
                homotopy.verdict = Verdict::fails;
                homotopy.witness = {{"convex", names_of(lat, convex)}};
            }

            if (base_cs && filter_cs.verdict == Verdict::holds &&
                lat.poset().is_order_filter(convex) && !d.lattice.is_crosscut_simplicial()) {
                filter_cs.verdict = Verdict::fails;
                filter_cs.witness = {{"filter", names_of(lat, convex)}};
            }

            // general hypothesis: every mixed interval [x,y] with x in C
            // and y outside keeps an atom outside C
            if (base_cs && hypothesis_cs.verdict == Verdict::holds) {
                Bitset in_c = vector_to_bitset(static_cast<std::size_t>(lat.size()), convex);
                bool hyp = true;
                for (int x : convex)
                    for (int y = 0; y < lat.size() && hyp; ++y) {
                        if (in_c.test(static_cast<std::size_t>(y)) || !lat.poset().leq(x, y))
                            continue;
                        bool outside_atom = false;
                        for (int a : lat.atoms_of(x, y))
                            if (!in_c.test(static_cast<std::size_t>(a))) outside_atom = true;
                        if (!outside_atom) hyp = false;
                    }
                if (hyp && !d.lattice.is_crosscut_simplicial()) {
                    hypothesis_cs.verdict = Verdict::fails;
                    hypothesis_cs.witness = {{"convex", names_of(lat, convex)}};
                }
            }
        }
        out.push_back(std::move(classify));
        out.push_back(std::move(formula));
        out.push_back(std::move(fibers));
        out.push_back(std::move(mob));
        out.push_back(std::move(homotopy));
        out.push_back(std::move(filter_cs));
        out.push_back(std::move(hypothesis_cs));
    });

    std::vector<PropertyReport> reports;
    for (auto& row : rows)
        for (auto& r : row) reports.push_back(std::move(r));

    // iterated doublings at principal order filters give distributive
    // lattices; arbitrary convex chains give congruence-normal ones
    {
        PropertyReport r{"doubling-chains", "principal-filter-doubling-distributive",
                         Verdict::holds, {}, {}};
        std::vector<Lattice> level{catalog::chain(1)};
        for (int depth = 0; depth < 4 && r.verdict == Verdict::holds; ++depth) {
            std::vector<Lattice> next;
            for (const auto& lat : level) {
                for (int g = 0; g < lat.size(); ++g) {
                    auto filter = bitset_to_vector(lat.poset().up_set(g));
                    auto d = double_at(lat, filter);
                    if (!d.lattice.is_distributive()) {
                        r.verdict = Verdict::fails;
                        r.witness = {{"depth", depth}, {"generator", lat.name(g)}};
                    }
                    next.push_back(d.lattice);
                }
            }
            level = std::move(next);
        }
        reports.push_back(std::move(r));
    }
    {
        PropertyReport r{"doubling-chains", "doubling-chain-congruence-normal", Verdict::holds, {}, {}};
        std::vector<Lattice> level{catalog::chain(1)};
        std::set<std::string> seen;
        for (int depth = 0; depth < 3 && r.verdict == Verdict::holds; ++depth) {
            std::vector<Lattice> next;
            for (const auto& lat : level) {
                for (const auto& convex : order_convex_subsets(lat.poset())) {
                    auto d = double_at(lat, convex);
                    if (d.lattice.size() <= 9) {
                        auto key = d.lattice.poset().canonical_key();
                        if (!seen.insert(key).second) continue;
                    }
                    if (!is_congruence_normal(d.lattice)) {
                        r.verdict = Verdict::fails;
                        r.witness = {{"depth", depth}, {"convex", names_of(lat, convex)}};
                        break;
                    }
                    next.push_back(d.lattice);
                }
            }
            level = std::move(next);
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

// ---------------------------------------------------------------------------
// suite: sb  (labelling checks and exhaustive searches)

inline std::vector<PropertyReport> suite_sb(const RunOptions& opt) {
    std::vector<PropertyReport> reports;
    {
        // the diamond with the crossed labelling passes
        auto b2 = catalog::boolean_lattice(2);
        EdgeLabelling lab;
        auto e = [&](const std::string& lo, const std::string& hi) {
            return std::make_pair(b2.poset().index_of(lo), b2.poset().index_of(hi));
        };
        lab.labels[e("0", "a")] = "1";
        lab.labels[e("0", "b")] = "2";
        lab.labels[e("a", "ab")] = "2";
        lab.labels[e("b", "ab")] = "1";
        PropertyReport r{"boolean2", "sb-b2-labelling", Verdict::holds, {}, {}};
        auto w = check_sb(b2, lab, SbVariant::sb);
        if (w) {
            r.verdict = Verdict::fails;
            r.witness = {{"reason", w->reason}};
        }
        reports.push_back(std::move(r));
    }
    {
        // exhaustion proof: no labelling with up to three symbols
        PropertyReport r{"M3", "sb-m3-exhaustion", Verdict::holds, {}, {}};
        auto found = search_sb(catalog::m3(), {3, SbVariant::sb, 10'000'000});
        if (found.has_value()) {
            r.verdict = Verdict::fails;
            r.witness = labelling_to_json(catalog::m3().poset(), *found);
        }
        reports.push_back(std::move(r));
    }
    {
        auto subjects = enumerated_universe(6);
        std::vector<PropertyReport> rows(subjects.size());
        detail::parallel_for(static_cast<int>(subjects.size()), detail::effective_threads(opt),
                             [&](int i) {
            const auto& [name, lat] = subjects[static_cast<std::size_t>(i)];
            PropertyReport r{name, "sb-search-implies-crosscut-simplicial", Verdict::holds, {}, {}};
            const int max_labels =
                std::min<int>(static_cast<int>(lat.poset().cover_pairs().size()), 6);
            std::optional<EdgeLabelling> found;
            if (max_labels >= 1)
                found = search_sb(lat, {max_labels, SbVariant::sb, 10'000'000});
            if (found) {
                if (check_sb(lat, *found, SbVariant::sb).has_value()) {
                    r.verdict = Verdict::fails;
                    r.witness = {{"note", "search returned an invalid labelling"}};
                } else if (!lat.is_crosscut_simplicial()) {
                    r.verdict = Verdict::fails;
                    r.witness = labelling_to_json(lat.poset(), *found);
                }
            }
            rows[static_cast<std::size_t>(i)] = std::move(r);
        });
        for (auto& r : rows) reports.push_back(std::move(r));
    }
    return reports;
}

// ---------------------------------------------------------------------------
// runner

struct SuiteResult {
    std::string suite;
    std::vector<PropertyReport> reports;
    bool ok = true;
};

inline std::vector<std::string> suite_names() {
    return {"crosscut", "semidistributive", "arrangements", "quotients", "doubling", "sb"};
}

inline SuiteResult run_suite(const std::string& name, const RunOptions& opt) {
    SuiteResult result;
    result.suite = name;
    auto append = [&](std::vector<PropertyReport> rs) {
        for (auto& r : rs) result.reports.push_back(std::move(r));
    };
    if (name == "crosscut")
        append(suite_crosscut(opt));
    else if (name == "semidistributive")
        append(suite_semidistributive(opt));
    else if (name == "arrangements")
        append(suite_arrangements(opt));
    else if (name == "quotients")
        append(suite_quotients(opt));
    else if (name == "doubling")
        append(suite_doubling(opt));
    else if (name == "sb")
        append(suite_sb(opt));
    else if (name == "all") {
        for (const auto& s : suite_names()) append(run_suite(s, opt).reports);
    } else {
        throw UnknownName(name);
    }
    for (const auto& r : result.reports)
        if (r.verdict != Verdict::holds) result.ok = false;
    return result;
}

inline Json render(const SuiteResult& result, const RunOptions& opt) {
    Json j;
    j["suite"] = result.suite;
    j["seed"] = opt.seed;
    Json rs = Json::array();
    for (const auto& r : result.reports) rs.push_back(r.to_json(opt.timings));
    j["reports"] = std::move(rs);
    j["ok"] = result.ok;
    return j;
}

} // namespace latkit::verify
