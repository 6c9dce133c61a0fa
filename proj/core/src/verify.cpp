#include "gsup/verify.hpp"

#include <algorithm>
#include <deque>

#include "gsup/errors.hpp"

namespace gsup {

std::size_t SupportGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& [_, nbrs] : adj) twice += nbrs.size();
    return twice / 2;
}

Hypergraph extract_hypergraph(const GraphSystem& sys, SupportMode mode) {
    Hypergraph hg;
    switch (mode) {
    case SupportMode::primal: {
        if (!sys.has_coloring())
            throw StructuralError("primal hypergraph needs a coloring");
        for (VertexId v : sys.host.vertices())
            if (sys.color_of(v) == Color::blue) hg.ground.insert(sys.name_of(v));
        for (const auto& [name, members] : sys.H) {
            std::set<std::string> e;
            for (VertexId v : members)
                if (sys.color_of(v) == Color::blue) e.insert(sys.name_of(v));
            hg.edges[name] = std::move(e);
        }
        break;
    }
    case SupportMode::dual: {
        for (const auto& [name, _] : sys.H) hg.ground.insert(name);
        for (VertexId v : sys.host.vertices()) {
            std::set<std::string> e;
            for (const auto& [name, members] : sys.H)
                if (members.count(v)) e.insert(name);
            hg.edges[sys.name_of(v)] = std::move(e);
        }
        break;
    }
    case SupportMode::intersection: {
        if (sys.K.empty())
            throw StructuralError("intersection hypergraph needs the K family");
        for (const auto& [name, _] : sys.H) hg.ground.insert(name);
        for (const auto& [kname, kmembers] : sys.K) {
            std::set<std::string> e;
            for (const auto& [hname, hmembers] : sys.H) {
                const auto& members = hmembers;
                bool meets = std::any_of(kmembers.begin(), kmembers.end(),
                                         [&](VertexId v) { return members.count(v) != 0; });
                if (meets) e.insert(hname);
            }
            hg.edges[kname] = std::move(e);
        }
        break;
    }
    }
    return hg;
}

namespace {

bool connected_within(const SupportGraph& g, const std::set<std::string>& verts) {
    if (verts.size() <= 1) return true;
    std::set<std::string> seen{*verts.begin()};
    std::deque<std::string> q{*verts.begin()};
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        for (const auto& w : g.adj.at(v))
            if (verts.count(w) && seen.insert(w).second) q.push_back(w);
    }
    return seen.size() == verts.size();
}

} // namespace

std::optional<std::string> first_unsupported_edge(const SupportGraph& candidate,
                                                  const Hypergraph& hg) {
    for (const auto& [name, e] : hg.edges) {
        for (const auto& v : e)
            if (!candidate.has_vertex(v))
                throw StructuralError("candidate graph lacks vertex " + v + " of hyperedge " +
                                      name);
        if (!connected_within(candidate, e)) return name;
    }
    return std::nullopt;
}

bool is_support(const SupportGraph& candidate, const Hypergraph& hg) {
    return !first_unsupported_edge(candidate, hg).has_value();
}

bool is_weak_support(const SupportGraph& candidate, const Hypergraph& hg) {
    for (const auto& [name, e] : hg.edges) {
        for (const auto& v : e)
            if (!candidate.has_vertex(v))
                throw StructuralError("candidate graph lacks vertex " + v + " of hyperedge " +
                                      name);
        if (e.size() < 2) continue;
        bool any = false;
        for (const auto& u : e) {
            for (const auto& w : candidate.adj.at(u))
                if (w != u && e.count(w)) {
                    any = true;
                    break;
                }
            if (any) break;
        }
        if (!any) return false;
    }
    return true;
}

bool is_weak_bipartite_support(const SupportGraph& candidate, const Hypergraph& hg,
                               const std::map<std::string, Color>& coloring) {
    for (const auto& [name, e] : hg.edges) {
        bool has_red = false, has_blue = false;
        for (const auto& v : e) {
            auto it = coloring.find(v);
            if (it == coloring.end()) throw StructuralError("uncolored element " + v);
            (it->second == Color::red ? has_red : has_blue) = true;
        }
        if (!has_red || !has_blue) continue;
        bool any = false;
        for (const auto& u : e) {
            if (coloring.at(u) != Color::blue) continue;
            for (const auto& w : candidate.adj.at(u))
                if (e.count(w) && coloring.at(w) == Color::red) {
                    any = true;
                    break;
                }
            if (any) break;
        }
        if (!any) return false;
    }
    return true;
}

std::optional<std::string> find_monochromatic(const Hypergraph& hg,
                                              const std::map<std::string, int>& coloring) {
    for (const auto& [name, e] : hg.edges) {
        if (e.size() < 2) continue;
        std::set<int> colors;
        for (const auto& v : e) {
            auto it = coloring.find(v);
            if (it == coloring.end()) throw StructuralError("uncolored element " + v);
            colors.insert(it->second);
        }
        if (colors.size() < 2) return name;
    }
    return std::nullopt;
}

bool check_no_monochromatic(const Hypergraph& hg, const std::map<std::string, int>& coloring) {
    return !find_monochromatic(hg, coloring).has_value();
}

// ── exhaustive oracles ──────────────────────────────────────────────

namespace {

// faces of a rotation system given as per-vertex dart orders; darts are
// 2*edge and 2*edge+1
long count_faces(const std::vector<std::vector<int>>& rot_of, int ndarts,
                 const std::vector<int>& tw) {
    std::vector<int> nxt(ndarts, -1);
    for (const auto& rot : rot_of) {
        for (std::size_t i = 0; i < rot.size(); ++i)
            nxt[tw[rot[i]]] = rot[(i + 1) % rot.size()];
    }
    std::vector<bool> seen(ndarts, false);
    long faces = 0;
    for (int d = 0; d < ndarts; ++d) {
        if (seen[d]) continue;
        ++faces;
        for (int c = d; !seen[c]; c = nxt[c]) seen[c] = true;
    }
    return faces;
}

int min_genus_connected(const std::vector<std::vector<int>>& incident, int nverts, int nedges,
                        const std::vector<int>& tw, int stop_at) {
    // enumerate rotations: fix the first dart at each vertex, permute the rest
    double work = 1;
    for (const auto& inc : incident) {
        for (std::size_t i = 2; i < inc.size(); ++i) work *= static_cast<double>(i);
        if (work > 1e7) throw SizeGuard("min genus enumeration too large");
    }
    std::vector<std::vector<int>> rot = incident;
    int best = -1;
    // odometer over per-vertex permutations of positions 1..deg-1
    std::vector<std::vector<int>> perm(nverts);
    for (int v = 0; v < nverts; ++v) {
        perm[v].resize(incident[v].size());
        for (std::size_t i = 0; i < perm[v].size(); ++i) perm[v][i] = static_cast<int>(i);
    }
    auto apply = [&](int v) {
        for (std::size_t i = 0; i < perm[v].size(); ++i) rot[v][i] = incident[v][perm[v][i]];
    };
    for (int v = 0; v < nverts; ++v) apply(v);
    for (;;) {
        long f = count_faces(rot, 2 * nedges, tw);
        long g2 = 2 - nverts + nedges - f;
        if (g2 >= 0 && g2 % 2 == 0) {
            int g = static_cast<int>(g2 / 2);
            if (best < 0 || g < best) best = g;
            if (best <= stop_at) return best;
        }
        // advance: next_permutation of some vertex's tail (positions >= 1)
        int v = 0;
        for (; v < nverts; ++v) {
            if (perm[v].size() <= 2) continue; // at most one cyclic order
            if (std::next_permutation(perm[v].begin() + 1, perm[v].end())) {
                apply(v);
                break;
            }
            apply(v); // wrapped to identity
        }
        if (v == nverts) break;
    }
    return best;
}

} // namespace

int brute_force_min_genus(const SupportGraph& g) {
    // split into components, index vertices, sum component minima
    std::map<std::string, int> idx;
    std::vector<std::string> names;
    for (const auto& [v, _] : g.adj) {
        idx[v] = static_cast<int>(names.size());
        names.push_back(v);
    }
    std::vector<int> comp(names.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < names.size(); ++s) {
        if (comp[s] >= 0) continue;
        int c = ncomp++;
        std::deque<int> q{static_cast<int>(s)};
        comp[s] = c;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (const auto& w : g.adj.at(names[v]))
                if (comp[idx[w]] < 0) {
                    comp[idx[w]] = c;
                    q.push_back(idx[w]);
                }
        }
    }
    int total = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        std::map<int, int> local;
        for (std::size_t v = 0; v < names.size(); ++v)
            if (comp[v] == c) {
                local[static_cast<int>(v)] = static_cast<int>(verts.size());
                verts.push_back(static_cast<int>(v));
            }
        std::vector<std::pair<int, int>> edges;
        for (int v : verts)
            for (const auto& w : g.adj.at(names[v]))
                if (idx[w] > v && comp[idx[w]] == c) edges.emplace_back(local[v], local[idx[w]]);
        int nv = static_cast<int>(verts.size());
        int ne = static_cast<int>(edges.size());
        if (ne == 0) continue;
        std::vector<std::vector<int>> incident(nv);
        std::vector<int> tw(static_cast<std::size_t>(2 * ne));
        for (int e = 0; e < ne; ++e) {
            incident[edges[e].first].push_back(2 * e);
            incident[edges[e].second].push_back(2 * e + 1);
            tw[2 * e] = 2 * e + 1;
            tw[2 * e + 1] = 2 * e;
        }
        total += min_genus_connected(incident, nv, ne, tw, 0);
    }
    return total;
}

bool brute_force_support_exists(const Hypergraph& hg, int genus_budget) {
    if (hg.ground.size() > 8)
        throw SizeGuard("brute_force_support_exists is capped at 8 ground elements");

    std::vector<std::string> elems(hg.ground.begin(), hg.ground.end());
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);

    // candidate edges: pairs co-occurring in a hyperedge (edges outside
    // every hyperedge never help connectivity, and removing edges never
    // raises the minimum genus)
    std::set<std::pair<int, int>> cand;
    for (const auto& [_, e] : hg.edges) {
        std::vector<int> ids;
        for (const auto& v : e) ids.push_back(idx.at(v));
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                cand.insert({std::min(ids[i], ids[j]), std::max(ids[i], ids[j])});
    }
    std::vector<std::pair<int, int>> pairs(cand.begin(), cand.end());
    const int m = static_cast<int>(pairs.size());
    if (m > 20) throw SizeGuard("brute_force_support_exists: too many candidate edges");

    auto build = [&](unsigned mask) {
        SupportGraph g;
        for (const auto& v : elems) g.add_vertex(v);
        for (int b = 0; b < m; ++b)
            if (mask & (1u << b)) g.add_edge(elems[pairs[b].first], elems[pairs[b].second]);
        return g;
    };

    // smallest edge sets first; stop at the first one meeting the budget
    std::vector<unsigned> masks;
    for (unsigned mask = 0; mask < (1u << m); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (unsigned mask : masks) {
        SupportGraph g = build(mask);
        if (!is_support(g, hg)) continue;
        if (brute_force_min_genus(g) <= genus_budget) return true;
    }
    return false;
}

} // namespace gsup
