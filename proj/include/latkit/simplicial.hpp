#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latkit/errors.hpp"
#include "latkit/poset.hpp"

namespace latkit {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

/// Exact rank of an integer matrix by fraction-free Gaussian elimination.
inline int integer_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

} // namespace detail

/**
 * An abstract simplicial complex on a named ground set of at most 64
 * vertices, stored as its maximal faces. The void complex (no faces at
 * all) is distinct from the complex whose only face is the empty set.
 */
class SimplicialComplex {
  public:
    using Face = std::uint64_t;

    SimplicialComplex() = default;

    static SimplicialComplex void_complex() { return SimplicialComplex({}, {}); }

    /// The complex {∅} on an empty ground set.
    static SimplicialComplex empty_faced() { return SimplicialComplex({}, {0}); }

    static SimplicialComplex from_facets(std::vector<std::string> vertex_names,
                                         const std::vector<std::vector<std::string>>& facets) {
        check_ground(vertex_names);
        std::vector<Face> masks;
        for (const auto& f : facets) masks.push_back(to_mask(vertex_names, f));
        return from_facet_masks(std::move(vertex_names), std::move(masks));
    }

    /// Builds from an arbitrary generating family; maximal faces are kept.
    static SimplicialComplex from_facet_masks(std::vector<std::string> vertex_names,
                                              std::vector<Face> masks) {
        check_ground(vertex_names);
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
        std::vector<Face> maximal;
        for (Face f : masks) {
            bool dominated = false;
            for (Face g : masks)
                if (f != g && (f & ~g) == 0) {
                    dominated = true;
                    break;
                }
            if (!dominated) maximal.push_back(f);
        }
        return SimplicialComplex(std::move(vertex_names), std::move(maximal));
    }

    static SimplicialComplex full_simplex(std::vector<std::string> vertex_names) {
        check_ground(vertex_names);
        Face full = vertex_names.empty() ? 0 : ((vertex_names.size() == 64)
                                                    ? ~Face{0}
                                                    : ((Face{1} << vertex_names.size()) - 1));
        return SimplicialComplex(std::move(vertex_names), {full});
    }

    static SimplicialComplex discrete(std::vector<std::string> vertex_names) {
        check_ground(vertex_names);
        std::vector<Face> facets;
        if (vertex_names.empty())
            facets.push_back(0);
        else
            for (std::size_t i = 0; i < vertex_names.size(); ++i) facets.push_back(Face{1} << i);
        return SimplicialComplex(std::move(vertex_names), std::move(facets));
    }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    bool is_void() const { return facets_.empty(); }
    const std::vector<Face>& facets() const { return facets_; }

    Face full_mask() const {
        if (names_.empty()) return 0;
        return names_.size() == 64 ? ~Face{0} : (Face{1} << names_.size()) - 1;
    }

    Face mask_of(const std::vector<std::string>& face) const { return to_mask(names_, face); }

    std::vector<std::string> names_of(Face f) const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (f >> i & 1) out.push_back(names_[i]);
        return out;
    }

    bool contains(Face f) const {
        if (is_void()) return false;
        for (Face g : facets_)
            if ((f & ~g) == 0) return true;
        return false;
    }

    /// All faces, sorted by (dimension, mask); includes the empty face
    /// whenever the complex is nonvoid.
    std::vector<Face> all_faces() const {
        std::unordered_set<Face> seen;
        for (Face f : facets_) {
            // enumerate subsets of each facet
            if (detail::popcount64(f) > 25) throw TooLarge("facet too large to expand");
            Face sub = f;
            while (true) {
                seen.insert(sub);
                if (sub == 0) break;
                sub = (sub - 1) & f;
            }
        }
        std::vector<Face> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end(), [](Face a, Face b) {
            int da = detail::popcount64(a), db = detail::popcount64(b);
            return da != db ? da < db : a < b;
        });
        return out;
    }

    /// Face counts by dimension: f[d] = number of d-dimensional faces.
    std::vector<long long> f_vector() const {
        std::vector<long long> f;
        for (Face face : all_faces()) {
            int d = detail::popcount64(face) - 1;
            if (d < 0) continue;
            if (static_cast<int>(f.size()) <= d) f.resize(static_cast<std::size_t>(d) + 1, 0);
            ++f[static_cast<std::size_t>(d)];
        }
        return f;
    }

    int dim() const {
        int d = -2;
        for (Face f : facets_) d = std::max(d, detail::popcount64(f) - 1);
        return d; // -2 for void, -1 for {∅}
    }

    /// Subcomplex of faces disjoint from F. The vertices of F leave the
    /// ground set.
    SimplicialComplex deletion(Face f) const {
        require_face(f);
        auto [sub_names, compress] = drop_vertices(f);
        std::vector<Face> gen;
        for (Face face : all_faces())
            if ((face & f) == 0) gen.push_back(compress_mask(face, compress));
        return from_facet_masks(std::move(sub_names), std::move(gen));
    }

    /// Faces F' with F ∪ F' still a face; keeps the full ground set.
    SimplicialComplex star(Face f) const {
        require_face(f);
        std::vector<Face> gen;
        for (Face g : facets_)
            if ((f & ~g) == 0) gen.push_back(g);
        return from_facet_masks(names_, std::move(gen));
    }

    /// Faces of the star disjoint from F, on the ground set minus F.
    SimplicialComplex link(Face f) const {
        require_face(f);
        auto [sub_names, compress] = drop_vertices(f);
        std::vector<Face> gen;
        for (Face g : facets_)
            if ((f & ~g) == 0) gen.push_back(compress_mask(g & ~f, compress));
        return from_facet_masks(std::move(sub_names), std::move(gen));
    }

    /// Join of two complexes on disjoint ground sets.
    SimplicialComplex join(const SimplicialComplex& other) const {
        std::vector<std::string> ground = names_;
        for (const auto& n : other.names_) {
            if (std::find(names_.begin(), names_.end(), n) != names_.end())
                throw GroundSetOverlap("ground sets share vertex " + n);
            ground.push_back(n);
        }
        if (is_void() || other.is_void()) return SimplicialComplex(std::move(ground), {});
        std::vector<Face> gen;
        for (Face f : facets_)
            for (Face g : other.facets_) gen.push_back(f | (g << names_.size()));
        return from_facet_masks(std::move(ground), std::move(gen));
    }

    SimplicialComplex cone(const std::string& apex) const {
        return full_simplex({apex}).join(*this);
    }

    SimplicialComplex suspension(const std::string& v0, const std::string& v1) const {
        if (v0 == v1) throw GroundSetOverlap("suspension points must differ");
        return discrete({v0, v1}).join(*this);
    }

    /// Union of face families; grounds are merged by vertex name.
    static SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
        std::vector<std::string> ground = a.names_;
        for (const auto& n : b.names_)
            if (std::find(ground.begin(), ground.end(), n) == ground.end()) ground.push_back(n);
        std::vector<Face> gen;
        auto lift = [&](const SimplicialComplex& src, Face f) {
            Face out = 0;
            for (std::size_t i = 0; i < src.names_.size(); ++i)
                if (f >> i & 1) {
                    auto it = std::find(ground.begin(), ground.end(), src.names_[i]);
                    out |= Face{1} << static_cast<std::size_t>(it - ground.begin());
                }
            return out;
        };
        for (Face f : a.facets_) gen.push_back(lift(a, f));
        for (Face f : b.facets_) gen.push_back(lift(b, f));
        if (a.is_void() && b.is_void()) return SimplicialComplex(std::move(ground), {});
        return from_facet_masks(std::move(ground), std::move(gen));
    }

    bool is_full_simplex() const {
        return !is_void() && facets_.size() == 1 && facets_[0] == full_mask();
    }

    /// True when the faces are all subsets of the ground set except the
    /// full set itself.
    bool is_simplex_boundary() const {
        if (is_void() || names_.empty()) return false;
        if (contains(full_mask())) return false;
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (!contains(full_mask() & ~(Face{1} << i))) return false;
        return true;
    }

    bool is_pure(int d) const {
        if (is_void()) return false;
        for (Face f : facets_)
            if (detail::popcount64(f) - 1 != d) return false;
        return true;
    }

    /// Reduced Euler characteristic: -1 + sum over nonempty faces of
    /// (-1)^dim. The void complex contributes 0.
    long long reduced_euler() const {
        if (is_void()) return 0;
        long long chi = -1;
        for (Face f : all_faces()) {
            int c = detail::popcount64(f);
            if (c == 0) continue;
            chi += (c % 2 == 1) ? 1 : -1;
        }
        return chi;
    }

    /// Reduced Betti numbers over the rationals, for dimensions 0..dim.
    /// Exact integer elimination; no floating point.
    std::vector<long long> betti() const {
        if (is_void() || dim() < 0) return {};
        auto faces = all_faces();
        // bucket faces by dimension, skipping the empty face
        std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(dim()) + 1);
        for (Face f : faces) {
            int d = detail::popcount64(f) - 1;
            if (d >= 0) by_dim[static_cast<std::size_t>(d)].push_back(f);
        }
        // rank of the boundary map from dimension d to d-1; d = 0 is the
        // augmentation map to the empty face
        std::vector<int> ranks(by_dim.size() + 1, 0);
        for (std::size_t d = 0; d < by_dim.size(); ++d) {
            if (by_dim[d].empty()) continue;
            if (d == 0) {
                ranks[0] = 1;
                continue;
            }
            const auto& rows_faces = by_dim[d - 1];
            const auto& cols_faces = by_dim[d];
            std::vector<std::vector<BigInt>> m(rows_faces.size(),
                                               std::vector<BigInt>(cols_faces.size(), 0));
            for (std::size_t c = 0; c < cols_faces.size(); ++c) {
                Face face = cols_faces[c];
                int sign = 1;
                for (std::size_t i = 0; i < names_.size(); ++i) {
                    if (!(face >> i & 1)) continue;
                    Face sub = face & ~(Face{1} << i);
                    auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
                    m[static_cast<std::size_t>(it - rows_faces.begin())][c] = sign;
                    sign = -sign;
                }
            }
            ranks[d] = detail::integer_rank(std::move(m));
        }
        std::vector<long long> b(by_dim.size(), 0);
        for (std::size_t d = 0; d < by_dim.size(); ++d) {
            long long fd = static_cast<long long>(by_dim[d].size());
            long long up = (d + 1 < ranks.size()) ? ranks[d + 1] : 0;
            b[d] = fd - ranks[d] - up;
        }
        return b;
    }

    bool operator==(const SimplicialComplex& other) const {
        return names_ == other.names_ && facets_ == other.facets_;
    }

  private:
    SimplicialComplex(std::vector<std::string> names, std::vector<Face> facets)
        : names_(std::move(names)), facets_(std::move(facets)) {
        std::sort(facets_.begin(), facets_.end());
    }

    static void check_ground(const std::vector<std::string>& names) {
        if (names.size() > 64) throw TooLarge("ground set limited to 64 vertices");
        std::set<std::string> uniq(names.begin(), names.end());
        if (uniq.size() != names.size()) throw InvalidInput("duplicate vertex name");
    }

    static Face to_mask(const std::vector<std::string>& names, const std::vector<std::string>& face) {
        Face m = 0;
        for (const auto& v : face) {
            auto it = std::find(names.begin(), names.end(), v);
            if (it == names.end()) throw UnknownElement(v);
            m |= Face{1} << static_cast<std::size_t>(it - names.begin());
        }
        return m;
    }

    void require_face(Face f) const {
        if (!contains(f)) throw NotAFace("argument is not a face of the complex");
    }

    std::pair<std::vector<std::string>, std::vector<int>> drop_vertices(Face f) const {
        std::vector<std::string> kept;
        std::vector<int> compress(names_.size(), -1);
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (f >> i & 1) continue;
            compress[i] = static_cast<int>(kept.size());
            kept.push_back(names_[i]);
        }
        return {std::move(kept), std::move(compress)};
    }

    static Face compress_mask(Face f, const std::vector<int>& compress) {
        Face out = 0;
        for (std::size_t i = 0; i < compress.size(); ++i)
            if ((f >> i & 1) && compress[i] >= 0) out |= Face{1} << compress[i];
        return out;
    }

    std::vector<std::string> names_;
    std::vector<Face> facets_;
};

/// Order complex: one vertex per element, faces are the chains.
inline SimplicialComplex order_complex(const FinitePoset& p) {
    if (p.size() > 64) throw TooLarge("order complex limited to 64 elements");
    // maximal chains are the facets
    std::vector<SimplicialComplex::Face> facets;
    std::vector<int> chain;
    auto extend = [&](auto&& self, int v) -> void {
        chain.push_back(v);
        if (p.upper_covers(v).empty()) {
            SimplicialComplex::Face f = 0;
            for (int u : chain) f |= SimplicialComplex::Face{1} << u;
            facets.push_back(f);
        } else {
            for (int u : p.upper_covers(v)) self(self, u);
        }
        chain.pop_back();
    };
    for (int v : p.minimal_elements()) extend(extend, v);
    return SimplicialComplex::from_facet_masks(p.names(), std::move(facets));
}

/// Order complex of the induced subposet on the given elements.
inline SimplicialComplex order_complex(const FinitePoset& p, const std::vector<int>& elems) {
    if (elems.empty()) return SimplicialComplex::empty_faced();
    return order_complex(p.induced(elems));
}

/// True when some vertex bijection maps the face family of a onto that
/// of b. Backtracking with per-vertex face-degree pruning; intended for
/// small ground sets.
inline bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                       int max_vertices = 16) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.is_void() != b.is_void()) return false;
    if (a.vertex_count() > max_vertices) throw TooLarge("isomorphism bound exceeded");
    auto fa = a.all_faces(), fb = b.all_faces();
    if (fa.size() != fb.size()) return false;
    const int n = a.vertex_count();
    // signature: number of faces of each cardinality through the vertex
    auto signature = [n](const std::vector<SimplicialComplex::Face>& faces, int v) {
        std::vector<int> s(static_cast<std::size_t>(n) + 1, 0);
        for (auto f : faces)
            if (f >> v & 1) ++s[static_cast<std::size_t>(detail::popcount64(f))];
        return s;
    };
    std::vector<std::vector<int>> sig_a, sig_b;
    for (int v = 0; v < n; ++v) {
        sig_a.push_back(signature(fa, v));
        sig_b.push_back(signature(fb, v));
    }
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::set<SimplicialComplex::Face> faces_b(fb.begin(), fb.end());
    auto has_edge = [](const std::set<SimplicialComplex::Face>& faces, int u, int v) {
        return faces.count((SimplicialComplex::Face{1} << u) | (SimplicialComplex::Face{1} << v)) > 0;
    };
    std::set<SimplicialComplex::Face> faces_a(fa.begin(), fa.end());
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) {
            for (auto f : fa) {
                SimplicialComplex::Face g = 0;
                for (int i = 0; i < n; ++i)
                    if (f >> i & 1) g |= SimplicialComplex::Face{1} << map[static_cast<std::size_t>(i)];
                if (!faces_b.count(g)) return false;
            }
            return true;
        }
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] ||
                sig_a[static_cast<std::size_t>(v)] != sig_b[static_cast<std::size_t>(w)])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (has_edge(faces_a, u, v) != has_edge(faces_b, map[static_cast<std::size_t>(u)], w))
                    ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (self(self, v + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Poset isomorphism oracle: brute-force backtracking on the order
/// relation with degree and rank pruning.
inline bool isomorphic(const FinitePoset& a, const FinitePoset& b, int max_elements = 48) {
    if (a.size() != b.size()) return false;
    if (a.size() > max_elements) throw TooLarge("poset isomorphism bound exceeded");
    const int n = a.size();
    if (a.cover_pairs().size() != b.cover_pairs().size()) return false;
    auto profile = [](const FinitePoset& p) {
        auto r = p.ranks();
        std::vector<std::array<long long, 5>> prof;
        for (int v = 0; v < p.size(); ++v)
            prof.push_back({static_cast<long long>(p.upper_covers(v).size()),
                            static_cast<long long>(p.lower_covers(v).size()),
                            static_cast<long long>(p.up_set(v).count()),
                            static_cast<long long>(p.down_set(v).count()),
                            static_cast<long long>(r[static_cast<std::size_t>(v)])});
        return prof;
    };
    auto pa = profile(a), pb = profile(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // match elements in topological order so partial maps can be checked
    auto order = a.topo_order();
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, std::size_t k) -> bool {
        if (k == order.size()) return true;
        int v = order[k];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] ||
                pa[static_cast<std::size_t>(v)] != pb[static_cast<std::size_t>(w)])
                continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                int u = order[j], mu = map[static_cast<std::size_t>(u)];
                if (a.leq(u, v) != b.leq(mu, w) || a.leq(v, u) != b.leq(w, mu)) ok = false;
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (self(self, k + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace latkit
