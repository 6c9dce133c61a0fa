#include "gsup/chords.hpp"

#include <algorithm>

namespace gsup {

int CycleSystem::position_of(VertexId v) const {
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (cycle[i] == v) return static_cast<int>(i);
    throw StructuralError("vertex " + std::to_string(v) + " not on the cycle");
}

std::vector<std::vector<int>> runs(const std::vector<VertexId>& cycle,
                                   const std::set<VertexId>& family) {
    const int n = static_cast<int>(cycle.size());
    std::vector<bool> in(n, false);
    int count = 0;
    for (int i = 0; i < n; ++i)
        if (family.count(cycle[i])) {
            in[i] = true;
            ++count;
        }
    if (count == 0) return {};
    if (count == n) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return {all};
    }
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (!in[i] || in[(i + n - 1) % n]) continue; // not a run start
        std::vector<int> run;
        for (int j = i; in[j % n]; ++j) run.push_back(j % n);
        out.push_back(std::move(run));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::optional<std::array<int, 4>> abab_witness(const std::vector<VertexId>& cycle,
                                               const std::set<VertexId>& f1,
                                               const std::set<VertexId>& f2) {
    const int n = static_cast<int>(cycle.size());
    std::vector<int> pos;
    std::vector<int> lab;
    for (int i = 0; i < n; ++i) {
        bool a = f1.count(cycle[i]) != 0, b = f2.count(cycle[i]) != 0;
        if (a == b) continue; // in neither or in both
        pos.push_back(i);
        lab.push_back(a ? 1 : 2);
    }
    const int m = static_cast<int>(pos.size());
    if (m < 4) return std::nullopt;
    std::vector<int> reps; // first position of each maximal equal-label block
    for (int i = 0; i < m; ++i)
        if (lab[i] != lab[(i + m - 1) % m]) reps.push_back(pos[i]);
    if (static_cast<int>(reps.size()) < 4) return std::nullopt;
    return std::array<int, 4>{reps[0], reps[1], reps[2], reps[3]};
}

bool is_abab_free(const std::vector<VertexId>& cycle, const std::set<VertexId>& f1,
                  const std::set<VertexId>& f2) {
    return !abab_witness(cycle, f1, f2).has_value();
}

bool is_abab_free(const CycleSystem& cs) {
    std::vector<const std::set<VertexId>*> fams;
    for (const auto& [_, m] : cs.families) fams.push_back(&m);
    for (std::size_t i = 0; i < fams.size(); ++i)
        for (std::size_t j = i + 1; j < fams.size(); ++j)
            if (!is_abab_free(cs.cycle, *fams[i], *fams[j])) return false;
    return true;
}

bool chord_blocks(const std::vector<VertexId>& cycle, const std::set<VertexId>& family, int i,
                  int j) {
    const int n = static_cast<int>(cycle.size());
    if (family.count(cycle[i]) || family.count(cycle[j])) return false;
    bool left = false, right = false;
    for (int k = (i + 1) % n; k != j; k = (k + 1) % n)
        if (family.count(cycle[k])) {
            right = true;
            break;
        }
    for (int k = (j + 1) % n; k != i; k = (k + 1) % n)
        if (family.count(cycle[k])) {
            left = true;
            break;
        }
    return left && right;
}

int connection_cost(const CycleSystem& cs) {
    int cost = 0;
    for (const auto& [_, m] : cs.families) {
        auto r = runs(cs.cycle, m);
        if (!r.empty()) cost += static_cast<int>(r.size()) - 1;
    }
    return cost;
}

namespace {

// deduplicate by vertex set, drop empty restrictions
std::map<std::string, std::set<VertexId>> dedup_families(const CycleSystem& cs) {
    std::map<std::string, std::set<VertexId>> out;
    std::set<std::set<VertexId>> seen;
    for (const auto& [name, m] : cs.families) {
        if (m.empty()) continue;
        if (seen.insert(m).second) out[name] = m;
    }
    return out;
}

} // namespace

std::optional<Chord> find_non_blocking_chord(const CycleSystem& cs) {
    if (!is_abab_free(cs))
        throw ContractViolation("find_non_blocking_chord: cycle system is not abab-free");

    auto fams = dedup_families(cs);
    // subset-minimal disconnected family; the (size, name)-smallest
    // multi-run family cannot strictly contain another multi-run one
    std::string pick;
    std::size_t pick_size = 0;
    std::vector<std::vector<int>> pick_runs;
    for (const auto& [name, m] : fams) {
        auto r = runs(cs.cycle, m);
        if (r.size() < 2) continue;
        if (pick.empty() || m.size() < pick_size || (m.size() == pick_size && name < pick)) {
            pick = name;
            pick_size = m.size();
            pick_runs = std::move(r);
        }
    }
    if (pick.empty()) return std::nullopt; // every family already connected

    for (std::size_t ra = 0; ra < pick_runs.size(); ++ra) {
        for (std::size_t rb = ra + 1; rb < pick_runs.size(); ++rb) {
            for (int i : pick_runs[ra]) {
                for (int j : pick_runs[rb]) {
                    bool blocked = false;
                    for (const auto& [_, m] : fams)
                        if (chord_blocks(cs.cycle, m, i, j)) {
                            blocked = true;
                            break;
                        }
                    if (!blocked) return Chord{cs.cycle[i], cs.cycle[j], pick};
                }
            }
        }
    }
    // guaranteed to exist for abab-free systems
    throw StructuralError("find_non_blocking_chord: no candidate survived the scan");
}

namespace {

void chord_set_rec(const CycleSystem& cs, int parent_cost, std::vector<Chord>& out) {
    auto chord = find_non_blocking_chord(cs);
    if (!chord) return;
    out.push_back(*chord);

    int i = cs.position_of(chord->a);
    int j = cs.position_of(chord->b);
    const int n = static_cast<int>(cs.cycle.size());

    auto build_sub = [&](int from, int to) {
        CycleSystem sub;
        for (int k = from; ; k = (k + 1) % n) {
            sub.cycle.push_back(cs.cycle[k]);
            if (k == to) break;
        }
        std::set<VertexId> on(sub.cycle.begin(), sub.cycle.end());
        for (const auto& [name, m] : cs.families) {
            std::set<VertexId> restricted;
            for (VertexId v : m)
                if (on.count(v)) restricted.insert(v);
            if (!restricted.empty()) sub.families[name] = std::move(restricted);
        }
        return sub;
    };

    CycleSystem right = build_sub(i, j); // arc [i..j] closed by the chord
    CycleSystem left = build_sub(j, i);  // arc [j..i] closed by the chord
    int cost = connection_cost(cs);
    if (parent_cost >= 0 && cost >= parent_cost)
        throw StructuralError("chord_set: connection cost failed to decrease");
    for (const CycleSystem* sub : {&right, &left}) {
        if (connection_cost(*sub) >= cost)
            throw StructuralError("chord_set: sub-problem cost failed to decrease");
        chord_set_rec(*sub, cost, out);
    }
}

} // namespace

ChordSet chord_set(const CycleSystem& cs) {
    ChordSet out;
    chord_set_rec(cs, -1, out.chords);
    return out;
}

} // namespace gsup
