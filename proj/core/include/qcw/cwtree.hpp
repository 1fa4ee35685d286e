#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcw/bigint.hpp"
#include "qcw/expansions.hpp"
#include "qcw/qrat.hpp"
#include "qcw/rational.hpp"
#include "qcw/report.hpp"

namespace qcw {

/// Which structural child rule a tree uses.
enum class TreeFamily {
  kLastOffset,    // c = m-1
  kZeroOffset,    // c = 0
  kMiddleOffset,  // 1 <= c <= m-2
};

/// Root convention. Only the c = 0 family distinguishes the two: kDefinition
/// roots the tree at 1/1, kTheorem at 1/(1+q) = f(m-1)/f(m), which is what the
/// ratio formula gives at n = 0.
enum class RootMode { kDefinition, kTheorem };

std::string to_string(RootMode mode);
RootMode parse_root_mode(const std::string& text);

class TreeParams {
 public:
  TreeParams(int m, int c, RootMode root_mode = RootMode::kDefinition);

  int m() const { return hyper_.m(); }
  int c() const { return hyper_.c(); }
  RootMode root_mode() const { return root_mode_; }
  TreeFamily family() const { return family_; }
  const HyperParams& hyper() const { return hyper_; }

  TreeParams with_root_mode(RootMode mode) const { return TreeParams(m(), c(), mode); }

 private:
  HyperParams hyper_;
  RootMode root_mode_;
  TreeFamily family_;
};

struct TreeNode {
  std::uint64_t index = 0;
  QRat label;
  std::optional<std::uint64_t> parent;  // none for the root
  std::optional<int> child_pos;         // 1..m, none for the root
};

struct TreeOptions {
  int depth_guard = 8;
  std::uint64_t max_nodes = 5'000'000;
};

/// Levels 0..depth of a tree in BFS order; node i sits at nodes()[i].
class Tree {
 public:
  Tree(TreeParams params, std::vector<TreeNode> nodes, int depth)
      : params_(std::move(params)), nodes_(std::move(nodes)), depth_(depth) {}

  const TreeParams& params() const { return params_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  int depth() const { return depth_; }
  bool contains(std::uint64_t index) const { return index < nodes_.size(); }
  /// Throws MissingAncestor when the index was not generated.
  const TreeNode& at(std::uint64_t index) const;

 private:
  TreeParams params_;
  std::vector<TreeNode> nodes_;
  int depth_;
};

/// Number of nodes in levels 0..depth of an m-ary tree. Throws
/// LimitExceeded on 64-bit overflow.
std::uint64_t tree_size(int m, int depth);

/// Depth of BFS index n (root = 0).
int depth_of_index(std::uint64_t n, int m);

/// Child positions leading from the root to BFS index n.
std::vector<int> path_to_index(const BigInt& n, int m);

QRat root_label(const TreeParams& params);

/// The closed-form label of BFS index n as a ratio of two f-values:
///   c = m-1:         f(mn+m-2) / f(mn+m-1)
///   c = 0:           f(mn+m-1) / f(mn+m)
///   1 <= c <= m-2:   f(mn+c-1) / f(mn+c)
QRat ratio_label(std::uint64_t n, const TreeParams& params);

/// The k-th child (1-based) of node `index`, computed from the structural
/// rule of the tree's family by walking parent links.
QRat child_label(const Tree& tree, std::uint64_t index, int k);

/// Builds levels 0..depth using only child_label from the root.
Tree build_tree(const TreeParams& params, int depth, const TreeOptions& options = {});

/// Compares every structural label against ratio_label.
VerifyReport verify_tree_vs_ratio(const TreeParams& params, int depth, const TreeOptions& options = {});

/// Label reached by following `path` from the root, computed symbolically
/// from the ancestor chain alone (no BFS table).
QRat label_by_path(std::span<const int> path, const TreeParams& params);

/// Same walk with q specialized to a rational value; each label is reduced
/// as it is produced.
Rational label_by_path_at(std::span<const int> path, const TreeParams& params, const Rational& q);

/// One line per level, labels separated by a single space. With `at_q` each
/// label is evaluated and printed as a reduced fraction.
std::string render_levels(const Tree& tree, const std::optional<Rational>& at_q = std::nullopt);

}  // namespace qcw
