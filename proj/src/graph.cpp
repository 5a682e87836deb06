#include "weq/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "weq/narrow.hpp"
#include "weq/parse.hpp"

namespace weq {

SolutionGraph::SolutionGraph(std::vector<Equation> system, Scheme scheme)
    : system_(std::move(system)), scheme_(scheme) {}

NodeId SolutionGraph::add_node(SystemState label, NodeKind kind, std::optional<NodeId> parent) {
    const NodeId id = nodes_.size();
    const std::size_t depth = parent ? nodes_.at(*parent).depth + 1 : 0;
    nodes_.push_back(Node{id, std::move(label), kind, parent, depth});
    out_edges_.emplace_back();
    fold_target_.emplace_back();
    return id;
}

void SolutionGraph::add_tree_edge(NodeId parent, const Narrowing& n, NodeId child) {
    out_edges_.at(parent).push_back(tree_edges_.size());
    tree_edges_.push_back(TreeEdge{parent, n, child});
}

void SolutionGraph::add_back_edge(NodeId from, NodeId to) {
    fold_target_.at(from) = to;
    back_edges_.push_back(BackEdge{from, to});
}

std::size_t SolutionGraph::count(NodeKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [kind](const Node& n) { return n.kind == kind; }));
}

std::size_t SolutionGraph::expanded_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes_) {
        if (node.kind == NodeKind::Internal && !is_folded(node.id)) ++n;
    }
    return n;
}

std::size_t SolutionGraph::max_depth() const {
    std::size_t d = 0;
    for (const auto& node : nodes_) d = std::max(d, node.depth);
    return d;
}

namespace {

NodeKind kind_of(const SystemState& s) {
    if (s.is_accepted()) return NodeKind::TLeaf;
    if (s.is_contradiction()) return NodeKind::FLeaf;
    return compatible_narrowings(s).empty() ? NodeKind::FLeaf : NodeKind::Internal;
}

// Nodes indexed by label hash; equality is confirmed on the labels.
class LabelIndex {
public:
    explicit LabelIndex(const SolutionGraph& g) : g_(g) {}

    void insert(NodeId id) { index_[g_.node(id).label.hash()].push_back(id); }

    void erase(NodeId id) {
        auto it = index_.find(g_.node(id).label.hash());
        auto& ids = it->second;
        ids.erase(std::find(ids.begin(), ids.end(), id));
        if (ids.empty()) index_.erase(it);
    }

    std::optional<NodeId> find(const SystemState& label) const {
        auto it = index_.find(label.hash());
        if (it == index_.end()) return std::nullopt;
        for (NodeId id : it->second) {
            if (g_.node(id).label == label) return id;
        }
        return std::nullopt;
    }

private:
    const SolutionGraph& g_;
    std::unordered_map<std::size_t, std::vector<NodeId>> index_;
};

struct Frame {
    NodeId id;
    std::vector<Narrowing> pending;
    std::size_t next = 0;
};

}  // namespace

BuildOutcome build(const std::vector<Equation>& system, Scheme scheme, Budget budget, BuildOptions options) {
    if (system.empty()) throw std::invalid_argument("cannot build a graph for an empty system");
    if (budget.max_nodes == 0 || budget.max_depth == 0) {
        throw std::invalid_argument("budget limits must be positive");
    }
    if (scheme == Scheme::Base && system.size() != 1) {
        throw std::invalid_argument("the base scheme handles exactly one equation");
    }

    const auto started = std::chrono::steady_clock::now();
    BuildOutcome out{SolutionGraph(system, scheme), BuildStatus::Complete, {}};
    SolutionGraph& g = out.graph;

    SystemState root_label = simplify(scheme, SystemState::eqs(system));
    const NodeKind root_kind = kind_of(root_label);
    const NodeId root = g.add_node(std::move(root_label), root_kind, std::nullopt);
    if (root_kind == NodeKind::TLeaf && options.early_stop) {
        out.status = BuildStatus::EarlyStopped;
        return out;
    }
    if (root_kind != NodeKind::Internal) return out;

    LabelIndex on_path(g);
    LabelIndex seen(g);
    std::vector<Frame> stack;
    auto enter = [&](NodeId id) {
        on_path.insert(id);
        if (options.fold == FoldMode::Memo) seen.insert(id);
        stack.push_back(Frame{id, compatible_narrowings(g.node(id).label)});
    };
    auto exhausted = [&](const char* reason) {
        if (out.status == BuildStatus::Complete) {
            out.status = BuildStatus::BudgetExhausted;
            out.reason = reason;
        }
    };
    enter(root);

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == top.pending.size()) {
            on_path.erase(top.id);
            stack.pop_back();
            continue;
        }
        if (g.nodes().size() >= budget.max_nodes) {
            exhausted("max_nodes");
            break;
        }
        if (options.time_limit && std::chrono::steady_clock::now() - started > *options.time_limit) {
            exhausted("timeout");
            break;
        }

        const NodeId parent = top.id;
        const Narrowing n = top.pending[top.next++];
        SystemState label = simplify(scheme, apply_to_state(n, g.node(parent).label));
        const NodeKind kind = kind_of(label);
        const NodeId child = g.add_node(std::move(label), kind, parent);
        g.add_tree_edge(parent, n, child);

        if (kind == NodeKind::TLeaf && options.early_stop) {
            out.status = BuildStatus::EarlyStopped;
            break;
        }
        if (kind != NodeKind::Internal) continue;

        const SystemState& child_label = g.node(child).label;
        auto target = on_path.find(child_label);
        if (!target && options.fold == FoldMode::Memo) target = seen.find(child_label);
        if (target) {
            g.add_back_edge(child, *target);
            continue;
        }
        if (g.node(child).depth >= budget.max_depth) {
            exhausted("max_depth");
            continue;
        }
        enter(child);
    }
    return out;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Sat: return "SAT";
        case Verdict::Unsat: return "UNSAT";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

Verdict verdict(const BuildOutcome& outcome) {
    if (outcome.graph.count(NodeKind::TLeaf) > 0) return Verdict::Sat;
    return outcome.status == BuildStatus::Complete ? Verdict::Unsat : Verdict::Unknown;
}

SolutionGraph prune(const SolutionGraph& g) {
    const std::size_t n = g.nodes().size();
    // Reverse adjacency over tree and back edges.
    std::vector<std::vector<NodeId>> preds(n);
    for (const auto& e : g.tree_edges()) preds[e.child].push_back(e.parent);
    for (const auto& e : g.back_edges()) preds[e.to].push_back(e.from);

    std::vector<bool> keep(n, false);
    std::deque<NodeId> queue;
    for (const auto& node : g.nodes()) {
        if (node.kind == NodeKind::TLeaf) {
            keep[node.id] = true;
            queue.push_back(node.id);
        }
    }
    while (!queue.empty()) {
        const NodeId id = queue.front();
        queue.pop_front();
        for (NodeId p : preds[id]) {
            if (!keep[p]) {
                keep[p] = true;
                queue.push_back(p);
            }
        }
    }
    keep[g.root()] = true;

    SolutionGraph out(g.system(), g.scheme());
    std::vector<NodeId> remap(n);
    for (const auto& node : g.nodes()) {
        if (!keep[node.id]) continue;
        std::optional<NodeId> parent;
        if (node.parent) parent = remap[*node.parent];
        remap[node.id] = out.add_node(node.label, node.kind, parent);
    }
    for (const auto& e : g.tree_edges()) {
        if (keep[e.parent] && keep[e.child]) out.add_tree_edge(remap[e.parent], e.narrowing, remap[e.child]);
    }
    for (const auto& e : g.back_edges()) {
        if (keep[e.from] && keep[e.to]) out.add_back_edge(remap[e.from], remap[e.to]);
    }
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
        } else if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else {
            out += c;
        }
    }
    return out;
}

}  // namespace

std::string to_dot(const SolutionGraph& g) {
    std::ostringstream os;
    os << "digraph solution_graph {\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (const auto& node : g.nodes()) {
        os << "  n" << node.id << " [label=\"";
        switch (node.kind) {
            case NodeKind::TLeaf: os << "T\", shape=doublecircle"; break;
            case NodeKind::FLeaf: os << dot_escape(serialize_state(node.label)) << "\", shape=octagon"; break;
            case NodeKind::Internal: os << dot_escape(serialize_state(node.label)) << '"'; break;
        }
        os << "];\n";
    }
    for (const auto& e : g.tree_edges()) {
        os << "  n" << e.parent << " -> n" << e.child << " [label=\"" << dot_escape(serialize_narrowing(e.narrowing))
           << "\"];\n";
    }
    for (const auto& e : g.back_edges()) {
        os << "  n" << e.from << " -> n" << e.to << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace weq
