#include "qcw/cwtree.hpp"

#include <limits>
#include <sstream>

#include "child_rules.hpp"
#include "qcw/errors.hpp"

namespace qcw {

std::string to_string(RootMode mode) { return mode == RootMode::kDefinition ? "definition" : "theorem"; }

RootMode parse_root_mode(const std::string& text) {
  if (text == "definition") return RootMode::kDefinition;
  if (text == "theorem") return RootMode::kTheorem;
  throw InvalidArgument("root mode must be 'definition' or 'theorem' (got '" + text + "')");
}

namespace {

TreeFamily family_for(int m, int c) {
  if (c == m - 1) return TreeFamily::kLastOffset;
  if (c == 0) return TreeFamily::kZeroOffset;
  return TreeFamily::kMiddleOffset;
}

}  // namespace

TreeParams::TreeParams(int m, int c, RootMode root_mode)
    : hyper_(m, c), root_mode_(root_mode), family_(family_for(m, c)) {
  if (root_mode_ == RootMode::kTheorem && family_ != TreeFamily::kZeroOffset) {
    throw InvalidArgument("root mode 'theorem' only applies to c = 0");
  }
}

const TreeNode& Tree::at(std::uint64_t index) const {
  if (index >= nodes_.size()) {
    throw MissingAncestor("node " + std::to_string(index) + " not present (tree has " +
                          std::to_string(nodes_.size()) + " nodes)");
  }
  return nodes_[index];
}

std::uint64_t tree_size(int m, int depth) {
  const auto mm = static_cast<std::uint64_t>(m);
  std::uint64_t level = 1;
  std::uint64_t total = 1;
  for (int d = 1; d <= depth; ++d) {
    if (level > std::numeric_limits<std::uint64_t>::max() / mm) throw LimitExceeded("tree size overflows 64 bits");
    level *= mm;
    if (total > std::numeric_limits<std::uint64_t>::max() - level) throw LimitExceeded("tree size overflows 64 bits");
    total += level;
  }
  return total;
}

int depth_of_index(std::uint64_t n, int m) {
  int depth = 0;
  while (n > 0) {
    n = (n - 1) / static_cast<std::uint64_t>(m);
    ++depth;
  }
  return depth;
}

std::vector<int> path_to_index(const BigInt& n, int m) {
  if (n < 0) throw InvalidArgument("negative tree index");
  std::vector<int> steps;
  BigInt cur = n;
  while (cur > 0) {
    BigInt parent = (cur - 1) / m;
    steps.push_back(static_cast<int>(cur - parent * m));
    cur = std::move(parent);
  }
  return {steps.rbegin(), steps.rend()};
}

QRat root_label(const TreeParams& params) { return detail::root_in(detail::SymbolicAlgebra{}, params); }

QRat ratio_label(std::uint64_t n, const TreeParams& params) {
  const auto m = static_cast<std::int64_t>(params.m());
  const auto c = static_cast<std::int64_t>(params.c());
  if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / m - m)) {
    throw LimitExceeded("tree index too large for ratio_label");
  }
  const auto base = m * static_cast<std::int64_t>(n);
  std::int64_t top = 0;
  switch (params.family()) {
    case TreeFamily::kLastOffset:
      top = base + m - 2;
      break;
    case TreeFamily::kZeroOffset:
      top = base + m - 1;
      break;
    case TreeFamily::kMiddleOffset:
      top = base + c - 1;
      break;
  }
  return QRat(f_poly(top, params.hyper()), f_poly(top + 1, params.hyper()));
}

namespace {

// BFS table, possibly still being filled.
class TableContext {
 public:
  using NodeId = std::uint64_t;

  explicit TableContext(const std::vector<TreeNode>& nodes) : nodes_(nodes) {}

  const TreeNode& node(NodeId id) const {
    if (id >= nodes_.size()) throw MissingAncestor("node " + std::to_string(id) + " not yet generated");
    return nodes_[id];
  }
  const QRat& label(NodeId id) const { return node(id).label; }
  int position(NodeId id) const { return node(id).child_pos.value_or(0); }
  NodeId parent(NodeId id) const {
    const auto& p = node(id).parent;
    if (!p) throw MissingAncestor("root has no parent");
    return *p;
  }
  QRat successor_label(NodeId id) const { return label(id + 1); }

 private:
  const std::vector<TreeNode>& nodes_;
};

}  // namespace

QRat child_label(const Tree& tree, std::uint64_t index, int k) {
  TableContext ctx(tree.nodes());
  return detail::structural_child(detail::SymbolicAlgebra{}, ctx, index, k, tree.params());
}

Tree build_tree(const TreeParams& params, int depth, const TreeOptions& options) {
  if (depth < 0) throw InvalidArgument("depth must be non-negative");
  if (depth > options.depth_guard) {
    throw LimitExceeded("depth " + std::to_string(depth) + " exceeds the guard " + std::to_string(options.depth_guard));
  }
  const std::uint64_t total = tree_size(params.m(), depth);
  if (total > options.max_nodes) {
    throw LimitExceeded("tree would have " + std::to_string(total) + " nodes (limit " +
                        std::to_string(options.max_nodes) + ")");
  }
  const detail::SymbolicAlgebra alg;
  std::vector<TreeNode> nodes;
  nodes.reserve(total);
  nodes.push_back(TreeNode{0, root_label(params), std::nullopt, std::nullopt});
  const auto m = static_cast<std::uint64_t>(params.m());
  const std::uint64_t parents = depth == 0 ? 0 : tree_size(params.m(), depth - 1);
  TableContext ctx(nodes);
  for (std::uint64_t v = 0; v < parents; ++v) {
    for (int k = 1; k <= params.m(); ++k) {
      QRat label = detail::structural_child(alg, ctx, v, k, params);
      nodes.push_back(TreeNode{m * v + static_cast<std::uint64_t>(k), std::move(label), v, k});
    }
  }
  return Tree(params, std::move(nodes), depth);
}

VerifyReport verify_tree_vs_ratio(const TreeParams& params, int depth, const TreeOptions& options) {
  VerifyReport report;
  report.suite = "tree_vs_ratio";
  report.add_parameter("m", std::to_string(params.m()));
  report.add_parameter("c", std::to_string(params.c()));
  report.add_parameter("root_mode", to_string(params.root_mode()));
  report.add_parameter("depth", std::to_string(depth));
  if (params.family() == TreeFamily::kZeroOffset && params.root_mode() == RootMode::kDefinition) {
    report.note("root 1/1 differs from the ratio formula at n = 0, which gives 1/(1+q); mismatches are expected");
  }
  if (params.family() == TreeFamily::kLastOffset && params.m() == 2) {
    report.note("m = 2: the m-th child uses p = label(n'+1) when the chain head is node 2n'+2");
  }
  const Tree tree = build_tree(params, depth, options);
  const auto m = static_cast<std::uint64_t>(params.m());
  std::uint64_t mismatches = 0;
  std::uint64_t outside_mth_subtrees = 0;
  for (const auto& node : tree.nodes()) {
    if (node.parent) {
      report.check(node.index == m * *node.parent + static_cast<std::uint64_t>(*node.child_pos),
                   "index law at n=" + std::to_string(node.index), "m*parent+pos", "violated");
    }
    const QRat expected = ratio_label(node.index, params);
    const bool match = node.label == expected;
    report.check(match, "n=" + std::to_string(node.index), expected.to_string(), node.label.to_string());
    if (!match) {
      ++mismatches;
      bool below_mth = false;
      for (const auto step : path_to_index(node.index, params.m())) below_mth = below_mth || step == params.m();
      if (!below_mth) ++outside_mth_subtrees;
    }
  }
  if (mismatches > 0) {
    report.note(std::to_string(mismatches) + " label mismatches; " + std::to_string(outside_mth_subtrees) +
                " of them outside subtrees rooted at an m-th child");
  }
  return report;
}

QRat label_by_path(std::span<const int> path, const TreeParams& params) {
  return detail::replay(detail::SymbolicAlgebra{}, path, params);
}

Rational label_by_path_at(std::span<const int> path, const TreeParams& params, const Rational& q) {
  return detail::replay(detail::SpecializedAlgebra{q}, path, params);
}

std::string render_levels(const Tree& tree, const std::optional<Rational>& at_q) {
  std::ostringstream os;
  std::uint64_t next = 0;
  std::uint64_t width = 1;
  const auto m = static_cast<std::uint64_t>(tree.params().m());
  for (int level = 0; level <= tree.depth(); ++level) {
    for (std::uint64_t i = 0; i < width; ++i) {
      if (i > 0) os << ' ';
      const QRat& label = tree.at(next + i).label;
      os << (at_q ? label.eval(*at_q).to_string() : label.to_string());
    }
    os << '\n';
    next += width;
    width *= m;
  }
  return os.str();
}

}  // namespace qcw
