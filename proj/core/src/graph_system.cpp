#include "gsup/graph_system.hpp"

#include <algorithm>
#include <deque>

namespace gsup {

Color GraphSystem::color_of(VertexId v) const {
    auto it = coloring.find(v);
    if (it == coloring.end()) throw StructuralError("vertex " + std::to_string(v) + " uncolored");
    return it->second;
}

std::string GraphSystem::name_of(VertexId v) const {
    auto it = vertex_names.find(v);
    return it == vertex_names.end() ? std::to_string(v) : it->second;
}

std::vector<std::pair<std::string, const std::set<VertexId>*>>
GraphSystem::scoped(FamilyScope s) const {
    std::vector<std::pair<std::string, const std::set<VertexId>*>> out;
    if (s == FamilyScope::H || s == FamilyScope::Both)
        for (const auto& [n, m] : H) out.emplace_back(n, &m);
    if (s == FamilyScope::K || s == FamilyScope::Both)
        for (const auto& [n, m] : K) out.emplace_back(n, &m);
    return out;
}

void GraphSystem::validate() const {
    host.check_valid();
    if (!host.connected()) throw StructuralError("host graph is disconnected");
    for (const auto& [name, members] : scoped(FamilyScope::Both)) {
        for (VertexId v : *members)
            if (!host.has_vertex(v))
                throw StructuralError("family " + name + " references missing vertex " +
                                      std::to_string(v));
        if (!host.induces_connected(*members))
            throw StructuralError("family " + name + " does not induce a connected subgraph");
    }
    for (const auto& [v, _] : coloring)
        if (!host.has_vertex(v))
            throw StructuralError("coloring references missing vertex " + std::to_string(v));
}

// ── reduced graph ───────────────────────────────────────────────────

ReducedGraph reduced_graph(const GraphSystem& sys, const std::string& a, const std::string& b,
                           FamilyScope scope) {
    std::map<std::string, const std::set<VertexId>*> byname;
    for (auto& [n, m] : sys.scoped(scope)) byname[n] = m;
    if (!byname.count(a) || !byname.count(b))
        throw StructuralError("reduced_graph: unknown family name");
    const auto& A = *byname.at(a);
    const auto& B = *byname.at(b);
    std::set<VertexId> inter;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                          std::inserter(inter, inter.begin()));

    ReducedGraph out;
    out.graph = sys.host;
    for (VertexId v : sys.host.vertices()) {
        out.image[v] = v;
        out.origins[v] = {v};
    }

    // a reduced vertex is "inner" when all of its originals lie in A∩B
    auto inner = [&](VertexId rv) {
        for (VertexId o : out.origins.at(rv))
            if (!inter.count(o)) return false;
        return true;
    };

    for (;;) {
        DartId pick = -1;
        for (auto [d, t] : out.graph.edges()) {
            VertexId x = out.graph.dart_vertex(d);
            VertexId y = out.graph.dart_vertex(t);
            if (x != y && inner(x) && inner(y)) {
                pick = d;
                break;
            }
        }
        if (pick < 0) break;
        VertexId keep = out.graph.dart_vertex(pick);
        VertexId gone = out.graph.dart_head(pick);
        out.graph.contract_edge(pick);
        auto& ok = out.origins.at(keep);
        auto& og = out.origins.at(gone);
        ok.insert(ok.end(), og.begin(), og.end());
        out.origins.erase(gone);
        for (auto& [v, img] : out.image)
            if (img == gone) img = keep;
    }
    out.graph.drop_loops();
    return out;
}

// ── crossing tests ──────────────────────────────────────────────────

namespace {

// circular abab detection over labels 0 (ignore), 1, 2: returns four
// positions forming 1,2,1,2 (or 2,1,2,1) if the alternation count is >= 4
std::optional<std::array<std::size_t, 4>> circular_abab(const std::vector<int>& labels) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != 0) pos.push_back(i);
    if (pos.size() < 4) return std::nullopt;
    // block representatives: one position per maximal run of equal labels
    std::vector<std::size_t> reps;
    const std::size_t m = pos.size();
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t prev = pos[(i + m - 1) % m];
        if (labels[pos[i]] != labels[prev]) reps.push_back(pos[i]);
    }
    if (reps.size() < 4) return std::nullopt;
    return std::array<std::size_t, 4>{reps[0], reps[1], reps[2], reps[3]};
}

} // namespace

std::optional<CrossingWitness> crossing_at(const GraphSystem& sys, const std::string& a,
                                           const std::string& b, VertexId v, FamilyScope scope) {
    std::map<std::string, const std::set<VertexId>*> byname;
    for (auto& [n, m] : sys.scoped(scope)) byname[n] = m;
    const auto& A = *byname.at(a);
    const auto& B = *byname.at(b);
    if (!A.count(v) || !B.count(v)) return std::nullopt; // not shared: vacuously cross-free

    ReducedGraph red = reduced_graph(sys, a, b, scope);
    VertexId rv = red.image.at(v);

    const auto& rot = red.graph.rotation(rv);
    std::vector<int> labels(rot.size(), 0);
    for (std::size_t i = 0; i < rot.size(); ++i) {
        VertexId far = red.graph.dart_head(rot[i]);
        const auto& orig = red.origins.at(far);
        if (orig.size() != 1) continue; // merged intersection blob: in both
        VertexId o = orig.front();
        bool inA = A.count(o) != 0, inB = B.count(o) != 0;
        if (inA && !inB) labels[i] = 1;
        else if (inB && !inA) labels[i] = 2;
    }
    auto hit = circular_abab(labels);
    if (!hit) return std::nullopt;
    CrossingWitness w;
    w.family_a = a;
    w.family_b = b;
    w.at = v;
    for (int i = 0; i < 4; ++i) {
        w.darts[i] = rot[(*hit)[i]];
        w.reduced_neighbors[i] = red.graph.dart_head(rot[(*hit)[i]]);
    }
    w.essential_intersection = red.graph.total_genus() < sys.host.total_genus();
    return w;
}

namespace {

std::optional<CrossingWitness> scan_family(const GraphSystem& sys,
                                           const std::map<std::string, std::set<VertexId>>& fam,
                                           FamilyScope scope) {
    std::vector<std::string> names;
    for (const auto& [n, _] : fam) names.push_back(n);
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const auto& A = fam.at(names[i]);
            const auto& B = fam.at(names[j]);
            std::set<VertexId> shared;
            std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                                  std::inserter(shared, shared.begin()));
            if (shared.empty()) continue;
            // vertices in one reduced blob need only one check
            ReducedGraph red = reduced_graph(sys, names[i], names[j], scope);
            std::set<VertexId> done;
            for (VertexId v : shared) {
                if (!done.insert(red.image.at(v)).second) continue;
                if (auto w = crossing_at(sys, names[i], names[j], v, scope)) return w;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<CrossingWitness> find_crossing(const GraphSystem& sys) {
    if (auto w = scan_family(sys, sys.H, FamilyScope::H)) return w;
    if (!sys.K.empty())
        if (auto w = scan_family(sys, sys.K, FamilyScope::K)) return w;
    return std::nullopt;
}

bool is_cross_free(const GraphSystem& sys) { return !find_crossing(sys).has_value(); }

// ── non-piercing ────────────────────────────────────────────────────

namespace {

std::vector<std::set<VertexId>> induced_components(const EmbeddedGraph& g,
                                                   const std::set<VertexId>& verts) {
    std::vector<std::set<VertexId>> comps;
    std::set<VertexId> seen;
    for (VertexId s : verts) {
        if (seen.count(s)) continue;
        std::set<VertexId> comp{s};
        std::deque<VertexId> q{s};
        seen.insert(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop_front();
            for (VertexId w : g.neighbors(v))
                if (verts.count(w) && seen.insert(w).second) {
                    comp.insert(w);
                    q.push_back(w);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<PiercingWitness> scan_piercing(const EmbeddedGraph& host,
                                             const std::map<std::string, std::set<VertexId>>& fam) {
    for (const auto& [na, A] : fam) {
        for (const auto& [nb, B] : fam) {
            if (na == nb) continue;
            std::set<VertexId> diff;
            std::set_difference(A.begin(), A.end(), B.begin(), B.end(),
                                std::inserter(diff, diff.begin()));
            auto comps = induced_components(host, diff);
            if (comps.size() > 1) return PiercingWitness{na, nb, std::move(comps)};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<PiercingWitness> find_piercing(const GraphSystem& sys) {
    if (auto w = scan_piercing(sys.host, sys.H)) return w;
    if (!sys.K.empty())
        if (auto w = scan_piercing(sys.host, sys.K)) return w;
    return std::nullopt;
}

bool is_non_piercing(const GraphSystem& sys) { return !find_piercing(sys).has_value(); }

// ── depth, maximality, twins ────────────────────────────────────────

std::set<std::string> families_at(const GraphSystem& sys, VertexId v, FamilyScope scope) {
    std::set<std::string> out;
    for (const auto& [n, m] : sys.scoped(scope))
        if (m->count(v)) out.insert(n);
    return out;
}

std::set<std::string> families_at_edge(const GraphSystem& sys, DartId d, FamilyScope scope) {
    VertexId u = sys.host.dart_vertex(d);
    VertexId v = sys.host.dart_head(d);
    std::set<std::string> out;
    for (const auto& [n, m] : sys.scoped(scope))
        if (m->count(u) && m->count(v)) out.insert(n);
    return out;
}

DepthProfile depth_profile(const GraphSystem& sys, FamilyScope scope) {
    DepthProfile p;
    for (VertexId v : sys.host.vertices())
        p.vertex_depth[v] = static_cast<int>(families_at(sys, v, scope).size());
    for (auto [d, t] : sys.host.edges())
        p.edge_depth[d] = static_cast<int>(families_at_edge(sys, d, scope).size());
    return p;
}

bool is_maximal_vertex(const GraphSystem& sys, VertexId v, FamilyScope scope) {
    auto fv = families_at(sys, v, scope);
    if (fv.empty()) return false;
    for (DartId d : sys.host.rotation(v)) {
        if (sys.host.is_loop(d)) return false; // a loop carries the full vertex depth
        if (families_at_edge(sys, d, scope).size() >= fv.size()) return false;
    }
    return true;
}

std::vector<VertexId> maximal_vertices(const GraphSystem& sys, FamilyScope scope,
                                       std::optional<Color> restrict_to_color) {
    std::vector<VertexId> out;
    for (VertexId v : sys.host.vertices()) {
        if (restrict_to_color && sys.color_of(v) != *restrict_to_color) continue;
        if (is_maximal_vertex(sys, v, scope)) out.push_back(v);
    }
    return out;
}

bool are_twins(const GraphSystem& sys, VertexId u, VertexId v, FamilyScope scope) {
    return families_at(sys, u, scope) == families_at(sys, v, scope);
}

std::vector<std::pair<VertexId, VertexId>> adjacent_twins(const GraphSystem& sys,
                                                          FamilyScope scope,
                                                          std::optional<Color> restrict_to_color) {
    std::vector<std::pair<VertexId, VertexId>> out;
    auto verts = sys.host.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            VertexId u = verts[i], v = verts[j];
            if (restrict_to_color &&
                (sys.color_of(u) != *restrict_to_color || sys.color_of(v) != *restrict_to_color))
                continue;
            if (!sys.host.adjacent(u, v)) continue;
            if (are_twins(sys, u, v, scope)) out.emplace_back(u, v);
        }
    }
    return out;
}

} // namespace gsup
