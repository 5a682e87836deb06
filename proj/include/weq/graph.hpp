// Solution graphs: depth-first unfolding of narrowing steps with folding of
// nodes whose label textually equals the label of an ancestor.
//
// A folded node is a childless Internal node carrying one back edge to the
// equal-labelled node. Accepted labels become T-leaves; contradictions and
// equation lists without compatible narrowings become F-leaves.

#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weq/core.hpp"
#include "weq/rewrite.hpp"

namespace weq {

using NodeId = std::size_t;

enum class NodeKind { Internal, TLeaf, FLeaf };

struct Node {
    NodeId id;
    SystemState label;
    NodeKind kind;
    std::optional<NodeId> parent;
    std::size_t depth;
};

struct TreeEdge {
    NodeId parent;
    Narrowing narrowing;
    NodeId child;
};

struct BackEdge {
    NodeId from;
    NodeId to;
};

class SolutionGraph {
public:
    SolutionGraph(std::vector<Equation> system, Scheme scheme);

    // The input system, before the root simplification.
    const std::vector<Equation>& system() const { return system_; }
    Scheme scheme() const { return scheme_; }

    NodeId root() const { return 0; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(NodeId id) const { return nodes_.at(id); }
    const std::vector<TreeEdge>& tree_edges() const { return tree_edges_; }
    const std::vector<BackEdge>& back_edges() const { return back_edges_; }

    // Indices into tree_edges() of the edges leaving id, in narrowing order.
    const std::vector<std::size_t>& out_edges(NodeId id) const { return out_edges_.at(id); }
    std::optional<NodeId> fold_target(NodeId id) const { return fold_target_.at(id); }

    bool is_folded(NodeId id) const { return fold_target_.at(id).has_value(); }

    std::size_t count(NodeKind kind) const;
    // Internal nodes that were unfolded, i.e. excluding folded ones.
    std::size_t expanded_count() const;
    std::size_t max_depth() const;

    // Mutators used by build() and prune().
    NodeId add_node(SystemState label, NodeKind kind, std::optional<NodeId> parent);
    void add_tree_edge(NodeId parent, const Narrowing& n, NodeId child);
    void add_back_edge(NodeId from, NodeId to);

private:
    std::vector<Equation> system_;
    Scheme scheme_;
    std::vector<Node> nodes_;
    std::vector<TreeEdge> tree_edges_;
    std::vector<BackEdge> back_edges_;
    std::vector<std::vector<std::size_t>> out_edges_;
    std::vector<std::optional<NodeId>> fold_target_;
};

struct Budget {
    std::size_t max_nodes = 1'000'000;
    std::size_t max_depth = 10'000;
};

enum class FoldMode {
    Ancestor,  // fold only onto an equal-labelled ancestor
    Memo,      // fold onto any earlier node with the same label
};

struct BuildOptions {
    FoldMode fold = FoldMode::Ancestor;
    // Stop at the first T-leaf.
    bool early_stop = false;
    // Wall-clock limit, checked once per created node.
    std::optional<std::chrono::milliseconds> time_limit;
};

enum class BuildStatus { Complete, BudgetExhausted, EarlyStopped };

struct BuildOutcome {
    SolutionGraph graph;
    BuildStatus status;
    // "max_nodes", "max_depth" or "timeout" when the budget ran out.
    std::string reason;
};

/// Throws std::invalid_argument for an empty system, a zero budget, or a
/// Base build over more than one equation.
BuildOutcome build(const std::vector<Equation>& system, Scheme scheme, Budget budget = {},
                   BuildOptions options = {});

enum class Verdict { Sat, Unsat, Unknown };

std::string_view to_string(Verdict v);

Verdict verdict(const BuildOutcome& outcome);

/// Drops every node from which no T-leaf is reachable (following back edges).
/// The root is always kept. Node ids are renumbered in the original order.
SolutionGraph prune(const SolutionGraph& g);

/// Deterministic DOT rendering. Internal nodes are boxes labelled with their
/// equation lists, T-leaves double circles, F-leaves octagons; back edges are
/// dashed.
std::string to_dot(const SolutionGraph& g);

}  // namespace weq
