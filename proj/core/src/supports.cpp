#include "gsup/supports.hpp"

#include <algorithm>
#include <string>

#include "gsup/verify.hpp"

namespace gsup {

namespace {

// ── shared pipeline machinery ───────────────────────────────────────

struct Stepper {
    const PipelineOptions& opt;
    std::vector<RewriteStep>& log;
    std::size_t steps = 0;

    void tick(const std::string& kind, const std::string& detail) {
        if (++steps > opt.step_budget)
            throw BudgetExhausted("pipeline exceeded the step budget of " +
                                  std::to_string(opt.step_budget));
        log.push_back({kind, detail});
    }
};

/// Contract the edge of d; the owner of d survives, the head is merged
/// into it.  Families, coloring and names follow the quotient; loops are
/// dropped so depth/maximality queries stay well defined.
VertexId contract_and_rewrite(GraphSystem& sys, DartId d) {
    VertexId keep = sys.host.dart_vertex(d);
    VertexId gone = sys.host.dart_head(d);
    sys.host.contract_edge(d);
    for (auto* group : {&sys.H, &sys.K})
        for (auto& [_, members] : *group)
            if (members.erase(gone)) members.insert(keep);
    sys.coloring.erase(gone);
    sys.vertex_names.erase(gone);
    sys.host.drop_loops();
    return keep;
}

void audit_cross_free(const GraphSystem& sys, bool enabled, const char* phase) {
    if (!enabled) return;
    if (auto w = find_crossing(sys))
        throw StructuralError(std::string("audit: cross-freeness lost after ") + phase +
                              " between " + w->family_a + " and " + w->family_b);
}

// terminal contraction phases no longer rely on cross-freeness, only on
// member connectivity; audit that instead
void audit_connected(const GraphSystem& sys, bool enabled) {
    if (!enabled) return;
    for (const auto& [name, members] : sys.scoped(FamilyScope::Both))
        if (!sys.host.induces_connected(*members))
            throw StructuralError("audit: member " + name + " lost connectivity");
}

/// Contract host-adjacent same-color twins (equal member sets in scope) to
/// a fixpoint; the smaller id survives.
void contract_color_twins(GraphSystem& sys, FamilyScope scope, Color color, Stepper& st) {
    for (;;) {
        bool changed = false;
        for (VertexId u : sys.host.vertices()) {
            if (sys.color_of(u) != color) continue;
            auto fu = families_at(sys, u, scope);
            DartId pick = -1;
            for (DartId d : sys.host.rotation(u)) {
                VertexId w = sys.host.dart_head(d);
                if (w <= u || sys.color_of(w) != color) continue;
                if (families_at(sys, w, scope) == fu) {
                    pick = d;
                    break;
                }
            }
            if (pick >= 0) {
                st.tick("twin-contract", std::to_string(u) + " <- " +
                                             std::to_string(sys.host.dart_head(pick)));
                contract_and_rewrite(sys, pick);
                changed = true;
                break;
            }
        }
        if (!changed) return;
    }
}

/// Eliminate every red vertex by contracting it into a blue neighbor along
/// a full edge (edge families equal to the red vertex's families).
/// Requires: no red vertex maximal, no adjacent red twins.  Both are
/// preserved: merges only go red-into-blue, so red-red adjacency never
/// changes and fullness survives the quotient.
void red_eliminate(GraphSystem& sys, FamilyScope scope, Stepper& st, bool audit) {
    for (;;) {
        VertexId red = -1;
        DartId pick = -1;
        for (VertexId u : sys.host.vertices()) {
            if (sys.color_of(u) != Color::red) continue;
            if (red < 0) red = u;
            auto fu = families_at(sys, u, scope);
            for (DartId d : sys.host.rotation(u)) {
                if (sys.color_of(sys.host.dart_head(d)) != Color::blue) continue;
                if (families_at_edge(sys, d, scope) == fu) {
                    pick = sys.host.twin(d); // owner = the blue head; it survives
                    break;
                }
            }
            if (pick >= 0) {
                red = u;
                break;
            }
        }
        if (red < 0) return; // no red vertices left
        if (pick < 0)
            throw StructuralError("red elimination stuck: a red vertex has no full edge "
                                  "to a blue vertex");
        st.tick("contract", "red " + std::to_string(red) + " into blue " +
                                std::to_string(sys.host.dart_vertex(pick)));
        contract_and_rewrite(sys, pick);
        audit_connected(sys, audit);
    }
}

std::map<VertexId, std::string> surviving_names(const GraphSystem& original,
                                                const EmbeddedGraph& support) {
    std::map<VertexId, std::string> meaning;
    for (VertexId v : support.vertices()) meaning[v] = original.name_of(v);
    return meaning;
}

} // namespace

// ── primal ──────────────────────────────────────────────────────────

SupportResult primal_support(const GraphSystem& sys, const PipelineOptions& opt) {
    sys.validate();
    for (VertexId v : sys.host.vertices())
        if (!sys.coloring.count(v))
            throw StructuralError("primal_support: vertex " + std::to_string(v) + " uncolored");
    if (auto w = find_crossing(sys))
        throw ContractViolation("primal_support: " + w->family_a + " and " + w->family_b +
                                " cross at vertex " + std::to_string(w->at));

    SupportResult res;
    Stepper st{opt, res.log};

    bool any_blue = std::any_of(sys.coloring.begin(), sys.coloring.end(),
                                [](const auto& kv) { return kv.second == Color::blue; });
    if (!any_blue) {
        res.empty_warning = true;
        res.log.push_back({"warn", "no blue terminals; support is empty"});
        return res;
    }

    GraphSystem g = sys;
    g.K.clear();
    g.host.drop_loops();
    contract_color_twins(g, FamilyScope::H, Color::red, st);

    for (;;) {
        auto maxred = maximal_vertices(g, FamilyScope::H, Color::red);
        if (maxred.empty()) break;
        DepthProfile prof = depth_profile(g, FamilyScope::H);
        int dmax = 0;
        for (VertexId v : maxred) dmax = std::max(dmax, prof.vertex_depth.at(v));
        std::vector<VertexId> batch;
        for (VertexId v : maxred)
            if (prof.vertex_depth.at(v) == dmax) batch.push_back(v);
        if (!res.measure_trace.empty() && dmax >= res.measure_trace.back().first)
            throw StructuralError("primal pipeline: maximal red depth failed to decrease");
        res.measure_trace.emplace_back(dmax, static_cast<int>(batch.size()));

        for (VertexId v : batch) {
            st.tick("bypass", "red vertex " + std::to_string(v));
            auto [next, rec] = vertex_bypass(g, v, FamilyScope::H);
            g = std::move(next);
            for (VertexId u : rec.cycle) g.coloring[u] = Color::red;
            audit_cross_free(g, opt.audit, "primal bypass");
        }
        contract_color_twins(g, FamilyScope::H, Color::red, st);
        audit_cross_free(g, opt.audit, "primal twin contraction");
    }

    red_eliminate(g, FamilyScope::H, st, opt.audit);

    g.host.simplify();
    res.support = g.host;
    res.vertex_meaning = surviving_names(sys, g.host);
    res.certified_genus = g.host.total_genus();
    return res;
}

// ── dual ────────────────────────────────────────────────────────────

namespace {

struct StripResult {
    std::map<std::string, std::set<VertexId>> antichain;
    std::vector<std::pair<std::string, std::string>> stripped; // (member, successor), strip order
};

/// Remove duplicates and contained members until an antichain remains.
/// Each removal takes the minimum of a longest containment chain and
/// records its immediate successor (smallest by size then name).
StripResult strip_containments(const std::map<std::string, std::set<VertexId>>& fam) {
    StripResult out;
    std::map<std::set<VertexId>, std::string> rep;
    for (const auto& [name, m] : fam) {
        auto it = rep.find(m);
        if (it == rep.end()) {
            rep[m] = name;
            out.antichain[name] = m;
        } else {
            out.stripped.emplace_back(name, it->second);
        }
    }
    for (;;) {
        std::vector<std::string> names;
        for (const auto& [n, _] : out.antichain) names.push_back(n);
        const int n = static_cast<int>(names.size());
        // longest chain ending at each member, over strict containment
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return out.antichain.at(names[a]).size() < out.antichain.at(names[b]).size();
        });
        auto contains = [&](int big, int small) {
            const auto& B = out.antichain.at(names[big]);
            const auto& S = out.antichain.at(names[small]);
            return S.size() < B.size() && std::includes(B.begin(), B.end(), S.begin(), S.end());
        };
        std::vector<int> len(n, 1), below(n, -1);
        int best = -1;
        for (int oi = 0; oi < n; ++oi) {
            int i = order[oi];
            for (int oj = 0; oj < oi; ++oj) {
                int j = order[oj];
                if (contains(i, j) && len[j] + 1 > len[i]) {
                    len[i] = len[j] + 1;
                    below[i] = j;
                }
            }
            if (best < 0 || len[i] > len[best]) best = i;
        }
        if (best < 0 || len[best] <= 1) break; // antichain reached
        int bottom = best;
        while (below[bottom] >= 0) bottom = below[bottom];
        const std::string victim = names[bottom];
        // immediate successor: smallest strict superset by (size, name)
        std::string succ;
        for (const auto& [cand, m] : out.antichain) {
            if (cand == victim) continue;
            const auto& V = out.antichain.at(victim);
            if (V.size() < m.size() && std::includes(m.begin(), m.end(), V.begin(), V.end())) {
                if (succ.empty() || m.size() < out.antichain.at(succ).size() ||
                    (m.size() == out.antichain.at(succ).size() && cand < succ))
                    succ = cand;
            }
        }
        out.stripped.emplace_back(victim, succ);
        out.antichain.erase(victim);
    }
    return out;
}

} // namespace

std::pair<SupportResult, SpecialEdgeCertificate> dual_support(const GraphSystem& sys,
                                                              const PipelineOptions& opt) {
    sys.validate();
    {
        GraphSystem honly = sys;
        honly.K.clear();
        if (auto w = find_crossing(honly))
            throw ContractViolation("dual_support: " + w->family_a + " and " + w->family_b +
                                    " cross at vertex " + std::to_string(w->at));
    }

    SupportResult res;
    SpecialEdgeCertificate cert;
    Stepper st{opt, res.log};

    if (sys.H.empty()) {
        res.empty_warning = true;
        res.log.push_back({"warn", "no members; dual support is empty"});
        return {res, cert};
    }

    StripResult strip = strip_containments(sys.H);
    for (const auto& [victim, succ] : strip.stripped)
        res.log.push_back({"strip", victim + " contained in " + succ});

    GraphSystem g;
    g.host = sys.host;
    g.H = strip.antichain;
    g.vertex_names = sys.vertex_names;
    g.host.drop_loops();
    const EmbeddedGraph entry_host = g.host; // special edges & singleton adjacency live here
    const auto entry_members = g.H;

    // peel maximum-depth vertices: contract a full edge when one exists,
    // bypass the (then maximal) vertex otherwise
    for (;;) {
        DepthProfile prof = depth_profile(g, FamilyScope::H);
        int d = 0, nd = 0;
        VertexId pick = -1;
        for (const auto& [v, dep] : prof.vertex_depth) {
            if (dep > d) {
                d = dep;
                nd = 1;
                pick = v;
            } else if (dep == d && d > 0) {
                ++nd;
            }
        }
        if (!res.measure_trace.empty()) {
            auto prev = res.measure_trace.back();
            if (std::pair(d, nd) >= prev)
                throw StructuralError("dual pipeline: (depth, count) failed to decrease");
        }
        res.measure_trace.emplace_back(d, nd);
        if (d <= 1) break;

        auto fv = families_at(g, pick, FamilyScope::H);
        DartId full = -1;
        for (DartId dd : g.host.rotation(pick))
            if (families_at_edge(g, dd, FamilyScope::H) == fv) {
                full = dd;
                break;
            }
        if (full >= 0) {
            st.tick("contract", "full edge at " + std::to_string(pick));
            contract_and_rewrite(g, g.host.twin(full)); // pick merges into the neighbor
            audit_cross_free(g, opt.audit, "dual full-edge contraction");
            continue;
        }

        st.tick("bypass", "maximal vertex " + std::to_string(pick));
        auto [next, rec] = vertex_bypass(g, pick, FamilyScope::H);
        g = std::move(next);
        audit_cross_free(g, opt.audit, "dual bypass");

        // absorb subdividing vertices that carry no member into a cycle
        // successor
        const std::size_t k = rec.cycle.size();
        if (k == 1) {
            if (families_at(g, rec.cycle[0], FamilyScope::H).empty())
                throw StructuralError("dual pipeline: lone subdivider carries no member");
        } else {
            std::vector<VertexId> cur(rec.cycle);
            auto alive = [&](std::size_t i) {
                return std::find(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i),
                                 cur[i]) == cur.begin() + static_cast<std::ptrdiff_t>(i);
            };
            for (;;) {
                bool changed = false;
                bool any_empty = false;
                for (std::size_t i = 0; i < k; ++i) {
                    if (!alive(i)) continue;
                    if (!families_at(g, cur[i], FamilyScope::H).empty()) continue;
                    any_empty = true;
                    // merge into the representative of the next position
                    std::size_t j = (i + 1) % k;
                    while (cur[j] == cur[i]) j = (j + 1) % k;
                    auto d0 = g.host.find_edge(cur[j], cur[i]);
                    if (!d0) continue;
                    st.tick("contract", "empty subdivider " + std::to_string(cur[i]));
                    VertexId gone = cur[i];
                    contract_and_rewrite(g, *d0);
                    for (auto& c : cur)
                        if (c == gone) c = cur[j];
                    changed = true;
                    break;
                }
                if (!any_empty) break;
                if (!changed)
                    throw StructuralError("dual pipeline: empty subdivider is unreachable");
            }
            audit_cross_free(g, opt.audit, "dual empty-subdivider absorption");
        }
    }

    // depth <= 1: contract every edge whose end families are nested
    for (;;) {
        DartId pick = -1;
        for (auto [d, t] : g.host.edges()) {
            auto fu = families_at(g, g.host.dart_vertex(d), FamilyScope::H);
            auto fw = families_at(g, g.host.dart_vertex(t), FamilyScope::H);
            if (std::includes(fw.begin(), fw.end(), fu.begin(), fu.end())) {
                pick = t; // owner of t survives
                break;
            }
            if (std::includes(fu.begin(), fu.end(), fw.begin(), fw.end())) {
                pick = d;
                break;
            }
        }
        if (pick < 0) break;
        st.tick("contract", "nested families at edge of dart " + std::to_string(pick));
        contract_and_rewrite(g, pick);
        audit_connected(g, opt.audit);
    }
    g.host.simplify();

    // vertices now stand for members, one each
    std::map<std::string, VertexId> vertex_of;
    for (VertexId v : g.host.vertices()) {
        auto fv = families_at(g, v, FamilyScope::H);
        if (fv.size() != 1)
            throw StructuralError("dual pipeline: vertex does not map to exactly one member");
        if (!vertex_of.emplace(*fv.begin(), v).second)
            throw StructuralError("dual pipeline: member mapped to two vertices");
        res.vertex_meaning[v] = *fv.begin();
    }
    if (vertex_of.size() != g.H.size())
        throw StructuralError("dual pipeline: member without a vertex");

    // singleton members mirror host adjacency: drop support edges between
    // two singletons whose base vertices are not adjacent in the input
    std::map<std::string, VertexId> singleton_base;
    for (const auto& [name, m] : entry_members)
        if (m.size() == 1) singleton_base[name] = *m.begin();
    {
        std::vector<DartId> doomed;
        for (auto [d, t] : g.host.edges()) {
            auto a = res.vertex_meaning.at(g.host.dart_vertex(d));
            auto b = res.vertex_meaning.at(g.host.dart_vertex(t));
            auto ia = singleton_base.find(a);
            auto ib = singleton_base.find(b);
            if (ia == singleton_base.end() || ib == singleton_base.end()) continue;
            if (!entry_host.adjacent(ia->second, ib->second)) doomed.push_back(d);
        }
        for (DartId d : doomed) {
            st.tick("edge-removed", "singleton members not adjacent in the host");
            g.host.remove_edge(d);
        }
    }

    // reattach stripped members as pendants, latest strip first
    for (auto it = strip.stripped.rbegin(); it != strip.stripped.rend(); ++it) {
        const auto& [name, succ] = *it;
        VertexId p = g.host.add_vertex();
        g.host.add_edge(p, vertex_of.at(succ));
        vertex_of[name] = p;
        res.vertex_meaning[p] = name;
        st.tick("pendant", name + " -> " + succ);
    }

    // special edge certificate against the containment-stripped input
    {
        std::set<std::pair<VertexId, VertexId>> seen;
        for (auto [d, t] : entry_host.edges()) {
            VertexId u = entry_host.dart_vertex(d);
            VertexId w = entry_host.dart_vertex(t);
            if (u > w) std::swap(u, w);
            if (u == w || !seen.insert({u, w}).second) continue;
            std::set<std::string> fu, fw;
            for (const auto& [name, m] : entry_members) {
                if (m.count(u)) fu.insert(name);
                if (m.count(w)) fw.insert(name);
            }
            if (fu.empty() || fw.empty()) continue;
            bool disjoint = std::none_of(fu.begin(), fu.end(),
                                         [&](const std::string& x) { return fw.count(x) != 0; });
            if (!disjoint) continue;
            bool found = false;
            for (const auto& x : fu) {
                for (const auto& y : fw) {
                    if (g.host.adjacent(vertex_of.at(x), vertex_of.at(y))) {
                        cert.edges.push_back({u, w, x, y});
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found)
                throw StructuralError("dual pipeline: special edge property failed at {" +
                                      std::to_string(u) + "," + std::to_string(w) + "}");
        }
    }

    res.support = g.host;
    res.certified_genus = g.host.total_genus();
    return {res, cert};
}

// ── intersection ────────────────────────────────────────────────────

SupportResult intersection_support(const GraphSystem& sys, const PipelineOptions& opt) {
    sys.validate();
    if (sys.K.empty()) throw StructuralError("intersection_support: K family required");
    if (auto w = find_crossing(sys))
        throw ContractViolation("intersection_support: " + w->family_a + " and " + w->family_b +
                                " cross at vertex " + std::to_string(w->at));

    SupportResult res;
    Stepper st{opt, res.log};

    if (sys.H.empty()) {
        res.empty_warning = true;
        res.log.push_back({"warn", "no H members; intersection support is empty"});
        return res;
    }

    GraphSystem g = sys;
    g.coloring.clear();
    g.host.drop_loops();

    // K-members meeting no H-member constrain nothing
    for (auto it = g.K.begin(); it != g.K.end();) {
        bool meets = false;
        for (const auto& [_, hm] : g.H) {
            const auto& members = hm;
            if (std::any_of(it->second.begin(), it->second.end(),
                            [&](VertexId v) { return members.count(v) != 0; })) {
                meets = true;
                break;
            }
        }
        if (!meets) {
            res.log.push_back({"drop", "K member " + it->first + " meets no H member"});
            it = g.K.erase(it);
        } else {
            ++it;
        }
    }

    auto is_k_vertex = [&](VertexId v) {
        return families_at(g, v, FamilyScope::H).empty() &&
               !families_at(g, v, FamilyScope::K).empty();
    };

    // make every K-vertex non-maximal w.r.t. K
    for (;;) {
        // adjacent K-vertex twins first
        for (;;) {
            DartId pick = -1;
            for (VertexId u : g.host.vertices()) {
                if (!is_k_vertex(u)) continue;
                auto ku = families_at(g, u, FamilyScope::K);
                for (DartId d : g.host.rotation(u)) {
                    VertexId w = g.host.dart_head(d);
                    if (w <= u || !is_k_vertex(w)) continue;
                    if (families_at(g, w, FamilyScope::K) == ku) {
                        pick = d;
                        break;
                    }
                }
                if (pick >= 0) break;
            }
            if (pick < 0) break;
            st.tick("twin-contract", "adjacent K-vertex twins");
            contract_and_rewrite(g, pick);
            audit_cross_free(g, opt.audit, "intersection K-twin contraction");
        }

        std::vector<VertexId> maximal;
        DepthProfile prof = depth_profile(g, FamilyScope::K);
        for (VertexId v : g.host.vertices())
            if (is_k_vertex(v) && is_maximal_vertex(g, v, FamilyScope::K)) maximal.push_back(v);
        if (maximal.empty()) break;
        int dmax = 0;
        for (VertexId v : maximal) dmax = std::max(dmax, prof.vertex_depth.at(v));
        std::vector<VertexId> batch;
        for (VertexId v : maximal)
            if (prof.vertex_depth.at(v) == dmax) batch.push_back(v);
        if (!res.measure_trace.empty() && dmax >= res.measure_trace.back().first)
            throw StructuralError("intersection pipeline: maximal K-vertex depth failed "
                                  "to decrease");
        res.measure_trace.emplace_back(dmax, static_cast<int>(batch.size()));
        for (VertexId v : batch) {
            st.tick("bypass", "K-vertex " + std::to_string(v));
            auto [next, rec] = vertex_bypass(g, v, FamilyScope::K);
            g = std::move(next);
            audit_cross_free(g, opt.audit, "intersection K-bypass");
        }
    }

    // dummy singleton members at the remaining K-vertices
    std::set<std::string> dummies;
    for (VertexId v : g.host.vertices()) {
        if (!is_k_vertex(v)) continue;
        std::string name = "dummy:" + std::to_string(v);
        if (g.H.count(name))
            throw StructuralError("intersection_support: member name collision on " + name);
        g.H[name] = {v};
        dummies.insert(name);
        res.log.push_back({"dummy", name});
    }

    GraphSystem dual_in;
    dual_in.host = g.host;
    dual_in.H = g.H;
    dual_in.vertex_names = g.vertex_names;
    auto [dualres, cert] = dual_support(dual_in, opt);
    for (const auto& s : dualres.log) res.log.push_back(s);
    (void)cert;

    // lift each K-member onto the dual support and eliminate the dummies
    std::map<std::string, VertexId> vertex_of;
    for (const auto& [v, name] : dualres.vertex_meaning) vertex_of[name] = v;

    GraphSystem q;
    q.host = dualres.support;
    for (const auto& [kname, kset] : g.K) {
        std::set<VertexId> lifted;
        for (const auto& [hname, hset] : g.H) {
            const auto& members = hset;
            bool meets = std::any_of(kset.begin(), kset.end(),
                                     [&](VertexId v) { return members.count(v) != 0; });
            if (meets) lifted.insert(vertex_of.at(hname));
        }
        if (!q.host.induces_connected(lifted))
            throw StructuralError("intersection pipeline: lifted K member " + kname +
                                  " is not connected in the dual support");
        q.H[kname] = std::move(lifted);
    }
    for (const auto& [v, name] : dualres.vertex_meaning)
        q.coloring[v] = dummies.count(name) ? Color::red : Color::blue;

    // the dummies must be non-maximal and pairwise non-twin where adjacent
    for (VertexId v : q.host.vertices()) {
        if (q.coloring.at(v) != Color::red) continue;
        if (is_maximal_vertex(q, v, FamilyScope::H))
            throw StructuralError("intersection pipeline: dummy vertex is maximal");
        for (DartId d : q.host.rotation(v)) {
            VertexId w = q.host.dart_head(d);
            if (q.coloring.at(w) == Color::red && are_twins(q, v, w, FamilyScope::H))
                throw StructuralError("intersection pipeline: adjacent dummy twins");
        }
    }

    red_eliminate(q, FamilyScope::H, st, opt.audit);
    q.host.simplify();

    res.support = q.host;
    for (VertexId v : q.host.vertices()) res.vertex_meaning[v] = dualres.vertex_meaning.at(v);
    res.certified_genus = q.host.total_genus();
    return res;
}

} // namespace gsup
