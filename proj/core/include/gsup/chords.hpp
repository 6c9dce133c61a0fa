#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsup/embedding.hpp"

namespace gsup {

/// A cycle (by vertex, in cyclic order) together with named vertex subsets
/// living on it.  The chord engine connects each subset inside the disk
/// bounded by the cycle without crossings, provided no two subsets
/// interleave in an abab pattern.
struct CycleSystem {
    std::vector<VertexId> cycle;
    std::map<std::string, std::set<VertexId>> families;

    std::size_t size() const { return cycle.size(); }
    int position_of(VertexId v) const;
};

struct Chord {
    VertexId a = -1, b = -1;
    std::string family; // the family whose runs the chord joins
};

struct ChordSet {
    std::vector<Chord> chords;
};

/// Maximal consecutive arcs of `family` on the cycle (wraparound merged),
/// as position lists ordered by starting position; each run lists its
/// positions in cycle order.
std::vector<std::vector<int>> runs(const std::vector<VertexId>& cycle,
                                   const std::set<VertexId>& family);

/// Positions witnessing the abab pattern of f1 vs f2 (f1-only, f2-only,
/// f1-only, f2-only in circular order), if any.  Shared vertices do not
/// participate in the pattern.
std::optional<std::array<int, 4>> abab_witness(const std::vector<VertexId>& cycle,
                                               const std::set<VertexId>& f1,
                                               const std::set<VertexId>& f2);

bool is_abab_free(const std::vector<VertexId>& cycle, const std::set<VertexId>& f1,
                  const std::set<VertexId>& f2);

/// Every pair of families abab-free?
bool is_abab_free(const CycleSystem& cs);

/// Does the chord between positions i and j block `family`: both open arcs
/// contain a vertex of it while neither endpoint belongs to it?
bool chord_blocks(const std::vector<VertexId>& cycle, const std::set<VertexId>& family, int i,
                  int j);

/// A chord joining two distinct runs of some disconnected family that
/// blocks no family, found by exhaustive scan over the runs of a
/// subset-minimal disconnected family.  nullopt when every family has a
/// single run.  Throws ContractViolation if the system is not abab-free.
std::optional<Chord> find_non_blocking_chord(const CycleSystem& cs);

/// Non-crossing chords making every family connected in cycle-plus-chords,
/// built by splitting on a non-blocking chord and recursing on the two
/// sub-cycles.  |chords| <= n-3 for n >= 3.
ChordSet chord_set(const CycleSystem& cs);

/// cost = sum over families of (runs - 1); zero iff no chords are needed.
int connection_cost(const CycleSystem& cs);

} // namespace gsup
