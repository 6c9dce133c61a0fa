#include "gsup/bypass.hpp"

#include <algorithm>

namespace gsup {

namespace {

std::vector<std::string> scoped_names_at(const GraphSystem& sys, VertexId v, FamilyScope scope) {
    std::vector<std::string> names;
    for (const auto& [n, m] : sys.scoped(scope))
        if (m->count(v)) names.push_back(n);
    return names;
}

} // namespace

std::pair<GraphSystem, BypassRecord> vertex_bypass(const GraphSystem& sys, VertexId v,
                                                   FamilyScope scope) {
    if (!sys.host.has_vertex(v)) throw StructuralError("vertex_bypass: missing vertex");
    auto at_v = scoped_names_at(sys, v, scope);
    for (std::size_t i = 0; i < at_v.size(); ++i)
        for (std::size_t j = i + 1; j < at_v.size(); ++j)
            if (auto w = crossing_at(sys, at_v[i], at_v[j], v, scope))
                throw ContractViolation(
                    "vertex_bypass: " + w->family_a + " and " + w->family_b +
                    " cross at vertex " + std::to_string(w->at) +
                    (w->essential_intersection
                         ? " (their intersection wraps a handle; the pattern follows the "
                           "canonical reduction)"
                         : ""));

    GraphSystem out = sys;
    BypassRecord rec;
    rec.bypassed = v;

    // subdivide each incident edge, in rotation order
    const auto rot = out.host.rotation(v); // copy; subdivision keeps these darts at v
    const std::size_t k = rot.size();
    if (k == 0) throw ContractViolation("vertex_bypass: degree-0 vertex");
    for (DartId d : rot)
        if (out.host.is_loop(d))
            throw ContractViolation("vertex_bypass: vertex carries a loop; drop loops first");
    std::vector<std::set<std::string>> edge_families(k);
    for (std::size_t i = 0; i < k; ++i) {
        edge_families[i] = families_at_edge(out, rot[i], scope);
        rec.attachments.push_back(out.host.dart_head(rot[i]));
        VertexId u = out.host.subdivide_edge(rot[i]);
        rec.cycle.push_back(u);
    }

    // each scoped member drops v and gains the subdividers of its edges
    std::map<std::string, std::set<VertexId>>* groups[2] = {nullptr, nullptr};
    if (scope == FamilyScope::H || scope == FamilyScope::Both) groups[0] = &out.H;
    if (scope == FamilyScope::K || scope == FamilyScope::Both) groups[1] = &out.K;
    for (auto* group : groups) {
        if (!group) continue;
        for (auto& [name, members] : *group) {
            if (!members.count(v)) continue;
            members.erase(v);
            for (std::size_t i = 0; i < k; ++i)
                if (edge_families[i].count(name)) members.insert(rec.cycle[i]);
            rec.family_rewrites[name] = members;
        }
    }
    if (!out.coloring.empty()) out.coloring.erase(v);

    out.host.replace_vertex_with_cycle(v);

    if (k >= 3) {
        // chords reconnecting the members restricted to the cycle
        CycleSystem cs;
        cs.cycle = rec.cycle;
        std::set<VertexId> on(rec.cycle.begin(), rec.cycle.end());
        for (const auto& [name, members] : rec.family_rewrites) {
            std::set<VertexId> restricted;
            for (VertexId u : members)
                if (on.count(u)) restricted.insert(u);
            if (!restricted.empty()) cs.families[name] = std::move(restricted);
        }
        rec.chords = chord_set(cs);

        // embed cycle + chords as an outerplanar augmentation inside the
        // disk: at each cycle vertex the inward darts are ordered by the
        // ccw distance to the far endpoint
        std::map<VertexId, int> pos;
        for (std::size_t i = 0; i < k; ++i) pos[rec.cycle[i]] = static_cast<int>(i);
        std::map<VertexId, std::vector<std::pair<int, DartId>>> inward;
        for (const Chord& c : rec.chords.chords) {
            DartId d = out.host.add_edge(c.a, c.b);
            int pa = pos.at(c.a), pb = pos.at(c.b);
            int n = static_cast<int>(k);
            inward[c.a].emplace_back(((pb - pa) % n + n) % n, d);
            inward[c.b].emplace_back(((pa - pb) % n + n) % n, out.host.twin(d));
        }
        for (std::size_t i = 0; i < k; ++i) {
            VertexId u = rec.cycle[i];
            auto& extra = inward[u];
            for (DartId d : out.host.rotation(u)) {
                VertexId far = out.host.dart_head(d);
                auto it = pos.find(far);
                if (it == pos.end()) continue; // outward edge
                int dist = ((it->second - pos.at(u)) % static_cast<int>(k) +
                            static_cast<int>(k)) % static_cast<int>(k);
                bool already = false;
                for (auto& [_, dd] : extra)
                    if (dd == d) already = true;
                if (!already) extra.emplace_back(dist, d);
            }
            std::sort(extra.begin(), extra.end());
            std::vector<DartId> nr;
            for (DartId d : out.host.rotation(u)) {
                VertexId far = out.host.dart_head(d);
                if (!pos.count(far)) nr.push_back(d); // the outward dart
            }
            for (auto& [_, d] : extra) nr.push_back(d);
            out.host.set_rotation(u, std::move(nr));
        }
    }

    return {std::move(out), std::move(rec)};
}

BypassDepthReport depth_after_bypass(const GraphSystem& after, const BypassRecord& record,
                                     const DepthProfile& profile_before, FamilyScope scope) {
    BypassDepthReport rep;
    rep.bypassed_depth = profile_before.vertex_depth.at(record.bypassed);
    DepthProfile now = depth_profile(after, scope);
    for (VertexId u : record.cycle) {
        int d = now.vertex_depth.at(u);
        rep.subdivider_depth[u] = d;
        if (d >= rep.bypassed_depth) rep.all_strictly_shallower = false;
        if (is_maximal_vertex(after, u, scope)) rep.none_maximal = false;
    }
    return rep;
}

} // namespace gsup
