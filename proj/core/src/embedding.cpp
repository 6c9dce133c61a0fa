#include "gsup/embedding.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace gsup {

namespace {

std::string dstr(DartId d) { return "dart " + std::to_string(d); }
std::string vstr(VertexId v) { return "vertex " + std::to_string(v); }

} // namespace

// ── construction ────────────────────────────────────────────────────

VertexId EmbeddedGraph::add_vertex() {
    VertexId v = next_vertex_++;
    rotation_[v];
    return v;
}

void EmbeddedGraph::add_vertex_with_id(VertexId v) {
    if (rotation_.count(v)) throw StructuralError("duplicate " + vstr(v));
    rotation_[v];
    next_vertex_ = std::max(next_vertex_, v + 1);
}

DartId EmbeddedGraph::new_dart(VertexId owner) {
    DartId d = next_dart_++;
    darts_[d] = DartRec{-1, owner};
    return d;
}

DartId EmbeddedGraph::add_edge(VertexId u, VertexId v) {
    if (!has_vertex(u) || !has_vertex(v))
        throw StructuralError("add_edge on missing vertex");
    DartId du = new_dart(u);
    DartId dv = new_dart(v);
    darts_[du].twin = dv;
    darts_[dv].twin = du;
    rotation_[u].push_back(du);
    rotation_[v].push_back(dv);
    return du;
}

void EmbeddedGraph::set_rotation(VertexId v, std::vector<DartId> darts) {
    auto& cur = rotation_.at(v);
    auto a = cur;
    auto b = darts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw StructuralError("set_rotation: not a permutation of the current darts");
    cur = std::move(darts);
}

// ── queries ─────────────────────────────────────────────────────────

std::vector<VertexId> EmbeddedGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(rotation_.size());
    for (const auto& [v, _] : rotation_) out.push_back(v);
    return out;
}

const std::vector<DartId>& EmbeddedGraph::rotation(VertexId v) const {
    auto it = rotation_.find(v);
    if (it == rotation_.end()) throw StructuralError("no " + vstr(v));
    return it->second;
}

int EmbeddedGraph::degree(VertexId v) const {
    return static_cast<int>(rotation(v).size());
}

DartId EmbeddedGraph::twin(DartId d) const {
    auto it = darts_.find(d);
    if (it == darts_.end() || it->second.twin < 0)
        throw StructuralError(dstr(d) + " missing a twin");
    return it->second.twin;
}

VertexId EmbeddedGraph::dart_vertex(DartId d) const {
    auto it = darts_.find(d);
    if (it == darts_.end()) throw StructuralError("no " + dstr(d));
    return it->second.owner;
}

VertexId EmbeddedGraph::dart_head(DartId d) const { return dart_vertex(twin(d)); }

bool EmbeddedGraph::is_loop(DartId d) const { return dart_vertex(d) == dart_head(d); }

std::vector<std::pair<DartId, DartId>> EmbeddedGraph::edges() const {
    std::vector<std::pair<DartId, DartId>> out;
    for (const auto& [d, rec] : darts_)
        if (d < rec.twin) out.emplace_back(d, rec.twin);
    return out;
}

std::optional<DartId> EmbeddedGraph::find_edge(VertexId u, VertexId v) const {
    for (DartId d : rotation(u))
        if (dart_head(d) == v) return d;
    return std::nullopt;
}

bool EmbeddedGraph::adjacent(VertexId u, VertexId v) const {
    return find_edge(u, v).has_value();
}

std::vector<VertexId> EmbeddedGraph::neighbors(VertexId v) const {
    std::set<VertexId> s;
    for (DartId d : rotation(v)) s.insert(dart_head(d));
    return {s.begin(), s.end()};
}

bool EmbeddedGraph::connected() const {
    if (rotation_.empty()) return true;
    std::set<VertexId> seen;
    std::deque<VertexId> q{rotation_.begin()->first};
    seen.insert(rotation_.begin()->first);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        for (DartId d : rotation_.at(v)) {
            VertexId w = dart_head(d);
            if (seen.insert(w).second) q.push_back(w);
        }
    }
    return seen.size() == rotation_.size();
}

bool EmbeddedGraph::induces_connected(const std::set<VertexId>& verts) const {
    if (verts.size() <= 1) return true;
    for (VertexId v : verts)
        if (!has_vertex(v)) throw StructuralError("induces_connected: missing " + vstr(v));
    std::set<VertexId> seen;
    std::deque<VertexId> q{*verts.begin()};
    seen.insert(*verts.begin());
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        for (DartId d : rotation_.at(v)) {
            VertexId w = dart_head(d);
            if (verts.count(w) && seen.insert(w).second) q.push_back(w);
        }
    }
    return seen.size() == verts.size();
}

// ── faces & genus ───────────────────────────────────────────────────

std::vector<std::vector<DartId>> EmbeddedGraph::face_trace() const {
    // next(d) = rotation successor of twin(d) at the twin's vertex
    std::map<DartId, DartId> next;
    for (const auto& [v, rot] : rotation_) {
        const std::size_t n = rot.size();
        for (std::size_t i = 0; i < n; ++i) {
            DartId t = twin(rot[i]); // validates pairing
            next[t] = rot[(i + 1) % n];
        }
    }
    std::vector<std::vector<DartId>> faces;
    std::set<DartId> visited;
    for (const auto& [d, _] : darts_) {
        if (visited.count(d)) continue;
        std::vector<DartId> face;
        DartId cur = d;
        do {
            face.push_back(cur);
            visited.insert(cur);
            cur = next.at(cur);
        } while (cur != d);
        faces.push_back(std::move(face));
    }
    return faces;
}

int EmbeddedGraph::genus() const {
    if (!connected()) throw StructuralError("genus: graph is disconnected");
    long v = static_cast<long>(vertex_count());
    long e = static_cast<long>(edge_count());
    long f = (e == 0) ? 1 : static_cast<long>(face_trace().size());
    long g2 = 2 - v + e - f;
    if (g2 < 0 || g2 % 2 != 0)
        throw StructuralError("genus: Euler count is not a valid rotation system");
    return static_cast<int>(g2 / 2);
}

int EmbeddedGraph::total_genus() const {
    // component decomposition, then per-component Euler count
    std::map<VertexId, int> comp;
    int ncomp = 0;
    for (const auto& [v0, _] : rotation_) {
        if (comp.count(v0)) continue;
        int c = ncomp++;
        std::deque<VertexId> q{v0};
        comp[v0] = c;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop_front();
            for (DartId d : rotation_.at(v)) {
                VertexId w = dart_head(d);
                if (!comp.count(w)) {
                    comp[w] = c;
                    q.push_back(w);
                }
            }
        }
    }
    std::vector<long> vcnt(ncomp, 0), ecnt(ncomp, 0), fcnt(ncomp, 0);
    for (const auto& [v, c] : comp) {
        vcnt[c]++;
        (void)v;
    }
    for (const auto& [d, rec] : darts_)
        if (d < rec.twin) ecnt[comp.at(rec.owner)]++;
    for (const auto& face : face_trace()) fcnt[comp.at(dart_vertex(face.front()))]++;
    int total = 0;
    for (int c = 0; c < ncomp; ++c) {
        long f = (ecnt[c] == 0) ? 1 : fcnt[c];
        long g2 = 2 - vcnt[c] + ecnt[c] - f;
        if (g2 < 0 || g2 % 2 != 0)
            throw StructuralError("total_genus: bad Euler count in a component");
        total += static_cast<int>(g2 / 2);
    }
    return total;
}

// ── edits ───────────────────────────────────────────────────────────

std::size_t EmbeddedGraph::rotation_index(VertexId v, DartId d) const {
    const auto& rot = rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == d) return i;
    throw StructuralError(dstr(d) + " not in the rotation of " + vstr(v));
}

void EmbeddedGraph::contract_edge(DartId d) {
    if (is_loop(d)) throw ContractViolation("contract_edge: loops cannot be contracted");
    DartId t = twin(d);
    VertexId keep = dart_vertex(d);
    VertexId gone = dart_vertex(t);

    auto& rk = rotation_.at(keep);
    auto& rg = rotation_.at(gone);
    std::size_t ik = rotation_index(keep, d);
    std::size_t ig = rotation_index(gone, t);

    // splice: keep's rotation after d, then gone's rotation after t
    std::vector<DartId> merged;
    merged.reserve(rk.size() + rg.size() - 2);
    for (std::size_t i = 1; i < rk.size(); ++i) merged.push_back(rk[(ik + i) % rk.size()]);
    for (std::size_t i = 1; i < rg.size(); ++i) merged.push_back(rg[(ig + i) % rg.size()]);

    for (DartId moved : rg)
        if (moved != t) darts_.at(moved).owner = keep;
    rotation_.erase(gone);
    rk = std::move(merged);
    darts_.erase(d);
    darts_.erase(t);
}

VertexId EmbeddedGraph::subdivide_edge(DartId d) {
    DartId t = twin(d);
    VertexId u = dart_vertex(d);
    VertexId v = dart_vertex(t);
    VertexId w = add_vertex();

    // u keeps dart d but it now ends at w; symmetric for v.
    DartId dw_u = new_dart(w); // twin of d
    DartId dw_v = new_dart(w); // twin of t
    darts_.at(d).twin = dw_u;
    darts_.at(dw_u).twin = d;
    darts_.at(t).twin = dw_v;
    darts_.at(dw_v).twin = t;
    rotation_.at(w) = {dw_u, dw_v};
    (void)u;
    (void)v;
    return w;
}

std::vector<VertexId> EmbeddedGraph::replace_vertex_with_cycle(VertexId v) {
    const auto rot = rotation(v); // copy
    const std::size_t k = rot.size();
    if (k == 0) throw ContractViolation("replace_vertex_with_cycle: degree-0 vertex");

    std::vector<VertexId> ring(k);
    std::vector<std::size_t> head_pos(k); // index of twin(rot[i]) at its vertex
    for (std::size_t i = 0; i < k; ++i) {
        DartId t = twin(rot[i]);
        ring[i] = dart_vertex(t);
        head_pos[i] = rotation_index(ring[i], t);
    }

    // remove v and its edges
    for (std::size_t i = 0; i < k; ++i) {
        DartId t = twin(rot[i]);
        auto& r = rotation_.at(ring[i]);
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(rotation_index(ring[i], t)));
        darts_.erase(rot[i]);
        darts_.erase(t);
    }
    rotation_.erase(v);

    if (k == 1) return ring;

    // cycle edges u_i -> u_{i+1}; ccw rotation at u_i becomes
    // (outward dart, dart to u_{i+1}, dart to u_{i-1}).  For k == 2 a
    // single edge joins the two vertices.
    std::size_t m = (k == 2) ? 1 : k;
    std::vector<DartId> fwd(m), bwd(m); // fwd[i] at ring[i], bwd[i] at ring[i+1]
    for (std::size_t i = 0; i < m; ++i) {
        VertexId a = ring[i];
        VertexId b = ring[(i + 1) % k];
        DartId da = new_dart(a);
        DartId db = new_dart(b);
        darts_.at(da).twin = db;
        darts_.at(db).twin = da;
        fwd[i] = da;
        bwd[i] = db;
    }
    for (std::size_t i = 0; i < k; ++i) {
        auto& r = rotation_.at(ring[i]);
        // outward darts stay; insert cycle darts right after the slot the
        // removed edge occupied.  The outward dart (single, since callers
        // subdivide first) anchors the order.
        std::vector<DartId> nr = r;
        std::vector<DartId> inward;
        if (k == 2) {
            if (i == 0) inward = {fwd[0]};
            else inward = {bwd[0]};
        } else {
            inward = {fwd[i], bwd[(i + k - 1) % k]};
        }
        nr.insert(nr.end(), inward.begin(), inward.end());
        r = std::move(nr);
    }
    return ring;
}

void EmbeddedGraph::remove_edge(DartId d) {
    DartId t = twin(d);
    VertexId u = dart_vertex(d);
    VertexId v = dart_vertex(t);
    auto& ru = rotation_.at(u);
    ru.erase(ru.begin() + static_cast<std::ptrdiff_t>(rotation_index(u, d)));
    auto& rv = rotation_.at(v);
    rv.erase(rv.begin() + static_cast<std::ptrdiff_t>(rotation_index(v, t)));
    darts_.erase(d);
    darts_.erase(t);
}

void EmbeddedGraph::remove_isolated_vertex(VertexId v) {
    if (!rotation(v).empty())
        throw StructuralError("remove_isolated_vertex: " + vstr(v) + " has darts");
    rotation_.erase(v);
}

void EmbeddedGraph::drop_loops() {
    for (;;) {
        DartId loop = -1;
        for (const auto& [d, rec] : darts_) {
            if (d < rec.twin && rec.owner == darts_.at(rec.twin).owner) {
                loop = d;
                break;
            }
        }
        if (loop < 0) return;
        remove_edge(loop);
    }
}

void EmbeddedGraph::simplify() {
    drop_loops();
    // scan edges in (smaller endpoint, rotation position) order; first pair
    // between two endpoints is the representative
    for (;;) {
        DartId dup = -1;
        for (const auto& [v, rot] : rotation_) {
            std::set<VertexId> seen;
            for (DartId d : rot) {
                VertexId w = dart_head(d);
                if (w < v) continue; // handled from the smaller endpoint
                if (!seen.insert(w).second) {
                    dup = d;
                    break;
                }
            }
            if (dup >= 0) break;
        }
        if (dup < 0) return;
        remove_edge(dup);
    }
}

void EmbeddedGraph::check_valid() const {
    std::set<DartId> seen;
    for (const auto& [v, rot] : rotation_) {
        for (DartId d : rot) {
            auto it = darts_.find(d);
            if (it == darts_.end()) throw StructuralError("rotation mentions unknown " + dstr(d));
            if (it->second.owner != v)
                throw StructuralError(dstr(d) + " owned by another vertex");
            if (!seen.insert(d).second)
                throw StructuralError(dstr(d) + " appears twice in rotations");
        }
    }
    if (seen.size() != darts_.size())
        throw StructuralError("dart missing from all rotations");
    for (const auto& [d, rec] : darts_) {
        if (rec.twin == d || !darts_.count(rec.twin) || darts_.at(rec.twin).twin != d)
            throw StructuralError(dstr(d) + " has a malformed twin");
    }
}

// ── pure wrappers & builders ────────────────────────────────────────

EmbeddedGraph contracted(const EmbeddedGraph& g, DartId d) {
    EmbeddedGraph out = g;
    out.contract_edge(d);
    return out;
}

std::pair<EmbeddedGraph, VertexId> subdivided(const EmbeddedGraph& g, DartId d) {
    EmbeddedGraph out = g;
    VertexId w = out.subdivide_edge(d);
    return {std::move(out), w};
}

EmbeddedGraph simplified(const EmbeddedGraph& g) {
    EmbeddedGraph out = g;
    out.simplify();
    return out;
}

bool rotation_equivalent(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    if (a.vertices() != b.vertices()) return false;
    for (VertexId v : a.vertices()) {
        const auto& ra = a.rotation(v);
        const auto& rb = b.rotation(v);
        if (ra.size() != rb.size()) return false;
        if (ra.empty()) continue;
        auto it = std::find(rb.begin(), rb.end(), ra.front());
        if (it == rb.end()) return false;
        std::size_t off = static_cast<std::size_t>(it - rb.begin());
        for (std::size_t i = 0; i < ra.size(); ++i)
            if (ra[i] != rb[(off + i) % rb.size()]) return false;
    }
    for (VertexId v : a.vertices())
        for (DartId d : a.rotation(v))
            if (!b.has_dart(d) || a.twin(d) != b.twin(d)) return false;
    return true;
}

EmbeddedGraph from_rotation_table(
    const std::map<VertexId, std::vector<VertexId>>& neighbor_rotations) {
    EmbeddedGraph g;
    for (const auto& [v, _] : neighbor_rotations) g.add_vertex_with_id(v);
    // create one edge per unordered pair; remember both darts
    std::map<std::pair<VertexId, VertexId>, DartId> side;
    for (const auto& [u, nbrs] : neighbor_rotations) {
        std::set<VertexId> dedup(nbrs.begin(), nbrs.end());
        if (dedup.size() != nbrs.size())
            throw StructuralError("rotation table mentions a neighbor twice");
        for (VertexId v : nbrs) {
            if (v == u) throw StructuralError("rotation table contains a loop");
            if (!neighbor_rotations.count(v))
                throw StructuralError("rotation table references unknown vertex " +
                                      std::to_string(v));
            const auto& back = neighbor_rotations.at(v);
            if (std::find(back.begin(), back.end(), u) == back.end())
                throw StructuralError("rotation table is asymmetric for edge {" +
                                      std::to_string(u) + "," + std::to_string(v) + "}");
            if (u < v) {
                DartId d = g.add_edge(u, v);
                side[{u, v}] = d;
                side[{v, u}] = g.twin(d);
            }
        }
    }
    for (const auto& [u, nbrs] : neighbor_rotations) {
        std::vector<DartId> rot;
        rot.reserve(nbrs.size());
        for (VertexId v : nbrs) rot.push_back(side.at({u, v}));
        g.set_rotation(u, std::move(rot));
    }
    return g;
}

} // namespace gsup
