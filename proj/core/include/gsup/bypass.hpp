#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gsup/chords.hpp"
#include "gsup/graph_system.hpp"

namespace gsup {

/// What one vertex bypass did: the removed vertex, the subdividing
/// vertices in rotation order, the chords added inside the new cycle, and
/// the rewritten scoped members.  Each subdividing vertex inherits exactly
/// the families of its edge.
struct BypassRecord {
    VertexId bypassed = -1;
    std::vector<VertexId> cycle;               ///< subdividing vertices, ccw
    std::vector<VertexId> attachments;         ///< former neighbor behind each cycle vertex
    ChordSet chords;
    std::map<std::string, std::set<VertexId>> family_rewrites; ///< new vertex sets
};

/// Bypass v: subdivide its incident edges, replace it by a cycle over the
/// subdividing vertices, and reconnect every scoped member through a
/// non-crossing chord set.  Unscoped families are untouched as vertex
/// sets.  The input must be cross-free at v for the scoped families
/// (checked; ContractViolation otherwise).  Genus is unchanged.
std::pair<GraphSystem, BypassRecord> vertex_bypass(const GraphSystem& sys, VertexId v,
                                                   FamilyScope scope);

struct BypassDepthReport {
    std::map<VertexId, int> subdivider_depth;
    int bypassed_depth = 0;
    bool all_strictly_shallower = true;
    bool none_maximal = true;
};

/// Check the depth-decrease facts for a bypass of a maximal vertex:
/// every subdividing vertex is strictly shallower than the bypassed vertex
/// and non-maximal in the output system.
BypassDepthReport depth_after_bypass(const GraphSystem& after, const BypassRecord& record,
                                     const DepthProfile& profile_before, FamilyScope scope);

} // namespace gsup
