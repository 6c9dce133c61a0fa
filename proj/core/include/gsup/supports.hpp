#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gsup/bypass.hpp"
#include "gsup/graph_system.hpp"

namespace gsup {

struct RewriteStep {
    std::string kind;   // "bypass", "contract", "twin-contract", "pendant", ...
    std::string detail;
};

/// A constructed support: an embedded graph whose vertices stand for
/// terminals (primal) or family members (dual/intersection), with the full
/// rewrite history and the genus certified from the carried embedding.
struct SupportResult {
    EmbeddedGraph support; // simple
    std::map<VertexId, std::string> vertex_meaning;
    std::vector<RewriteStep> log;
    int certified_genus = 0;
    bool empty_warning = false; // no hyperedge has terminals (all-red input)

    /// pipeline progress measure per outer step, for monotonicity checks
    std::vector<std::pair<int, int>> measure_trace;
};

/// For every special edge {u,v} of the containment-stripped input (no
/// member covers the edge, both endpoints covered), a support edge joining
/// a member at u to a member at v.
struct SpecialEdgeCertificate {
    struct Entry {
        VertexId u = -1, v = -1;
        std::string member_u, member_v;
    };
    std::vector<Entry> edges;
};

struct PipelineOptions {
    std::size_t step_budget = 1'000'000;
    bool audit = false; // re-verify cross-freeness after every rewrite
};

/// Primal support: a genus-preserving graph on the blue terminals in which
/// every member's blue set induces a connected subgraph.  Requires a
/// coloring and a cross-free input (checked).
SupportResult primal_support(const GraphSystem& sys, const PipelineOptions& opt = {});

/// Dual support on the member names: every host vertex's member set
/// induces a connected subgraph; the certificate witnesses the special
/// edge property.  Requires a cross-free input (checked).
std::pair<SupportResult, SpecialEdgeCertificate> dual_support(const GraphSystem& sys,
                                                              const PipelineOptions& opt = {});

/// Intersection support on the H-member names: every K-member's set of
/// met H-members induces a connected subgraph.  Requires H and K each
/// cross-free (checked; H-vs-K crossings are allowed).
SupportResult intersection_support(const GraphSystem& sys, const PipelineOptions& opt = {});

} // namespace gsup
