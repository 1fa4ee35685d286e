#pragma once

// Structural child rules shared by BFS generation and path replay. The rules
// are written once over an "algebra" (symbolic QRat labels, or labels
// specialized at a rational q) and a "context" that exposes parent links.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qcw/cwtree.hpp"
#include "qcw/errors.hpp"
#include "qcw/qpoly.hpp"
#include "qcw/qrat.hpp"
#include "qcw/rational.hpp"

namespace qcw::detail {

struct SymbolicAlgebra {
  using Scalar = QPoly;
  using Label = QRat;

  Scalar q = QPoly::q();

  static Label make(Scalar num, Scalar den) { return QRat(std::move(num), std::move(den)); }
  static const Scalar& num(const Label& l) { return l.num(); }
  static const Scalar& den(const Label& l) { return l.den(); }
};

// Labels collapse to a single reduced rational; den() is always 1.
struct SpecializedAlgebra {
  using Scalar = Rational;
  using Label = Rational;

  Scalar q;

  static Label make(const Scalar& num, const Scalar& den) {
    if (den.is_zero()) throw DivisionByZero("child label denominator vanishes at this q");
    return num / den;
  }
  static const Scalar& num(const Label& l) { return l; }
  static Scalar den(const Label&) { return Scalar(1); }
};

template <class Algebra>
typename Algebra::Label root_in(const Algebra& alg, const TreeParams& params) {
  using S = typename Algebra::Scalar;
  if (params.family() == TreeFamily::kZeroOffset && params.root_mode() == RootMode::kTheorem) {
    return Algebra::make(S(1), S(1) + alg.q);
  }
  return Algebra::make(S(1), S(1));
}

// Ctx requirements (NodeId = Ctx::NodeId):
//   const Label& label(NodeId)
//   int position(NodeId)           0 for the root, else 1..m
//   NodeId parent(NodeId)          only called on non-root nodes
//   Label successor_label(NodeId)  label of the node one BFS index later
template <class Algebra, class Ctx>
typename Algebra::Label last_offset_mth_child(const Algebra& alg, const Ctx& ctx, typename Ctx::NodeId v,
                                              int m) {
  using S = typename Algebra::Scalar;
  // Product of b_j/a_j over the maximal chain of consecutive (m-1)-st
  // children starting at v, kept as a numerator/denominator pair.
  S chain_num(1);
  S chain_den(1);
  auto head = v;
  while (true) {
    const auto& l = ctx.label(head);
    chain_num = chain_num * Algebra::den(l);
    chain_den = chain_den * Algebra::num(l);
    if (ctx.position(head) != m - 1) break;
    head = ctx.parent(head);
  }
  S p_num(1);
  S p_den(1);
  const int pos = ctx.position(head);
  if (pos != 0) {
    if (m >= 3 && pos == m - 2) {
      const auto& pl = ctx.label(ctx.parent(head));
      p_num = Algebra::num(pl);
      p_den = Algebra::den(pl);
    } else if (m == 2) {
      // Chain head is a 2nd child 2n'+2; p is the label of BFS index n'+1.
      const auto pl = ctx.successor_label(ctx.parent(head));
      p_num = Algebra::num(pl);
      p_den = Algebra::den(pl);
    }
  }
  S den = p_den * chain_den;
  S num = den;
  return Algebra::make(std::move(num), den + alg.q * p_num * chain_num);
}

template <class Algebra, class Ctx>
typename Algebra::Label zero_offset_mth_child(const Algebra& alg, const Ctx& ctx, typename Ctx::NodeId v, int m) {
  using S = typename Algebra::Scalar;
  auto head = v;
  int s = 1;
  while (ctx.position(head) == m) {
    head = ctx.parent(head);
    ++s;
  }
  S r_num(1);
  S r_den(1);
  if (ctx.position(head) == m - 1) {
    const auto& rl = ctx.label(ctx.parent(head));
    r_num = Algebra::num(rl);
    r_den = Algebra::den(rl);
  }
  // Geometric factor 1 + q + ... + q^(s-2) + q^(s-1) r = g_num / r_den.
  S prefix(0);
  S power(1);
  for (int i = 0; i < s - 1; ++i) {
    prefix = prefix + power;
    power = power * alg.q;
  }
  const S g_num = prefix * r_den + power * r_num;
  const auto& l = ctx.label(v);
  const S b_g = Algebra::den(l) * g_num;
  return Algebra::make(b_g, alg.q * b_g + Algebra::num(l) * r_den);
}

template <class Algebra, class Ctx>
typename Algebra::Label structural_child(const Algebra& alg, const Ctx& ctx, typename Ctx::NodeId v, int k,
                                         const TreeParams& params) {
  using S = typename Algebra::Scalar;
  const int m = params.m();
  const int c = params.c();
  if (k < 1 || k > m) {
    throw InvalidArgument("child position " + std::to_string(k) + " outside 1.." + std::to_string(m));
  }
  const auto& label = ctx.label(v);
  const S a = Algebra::num(label);
  const S b = Algebra::den(label);
  const S& q = alg.q;
  auto constant_child = [&] { return Algebra::make(S(1), S(1) + q); };

  switch (params.family()) {
    case TreeFamily::kMiddleOffset:
      if (k == c) return Algebra::make(b, b + q * a);
      if (k == c + 1) return Algebra::make(a, a + q * b);
      return constant_child();
    case TreeFamily::kLastOffset:
      if (k <= m - 2) return constant_child();
      if (k == m - 1) return Algebra::make(b, b + q * a);
      return last_offset_mth_child(alg, ctx, v, m);
    case TreeFamily::kZeroOffset:
      if (k <= m - 2) return constant_child();
      if (k == m - 1) return Algebra::make(a, b + q * a);
      return zero_offset_mth_child(alg, ctx, v, m);
  }
  throw UnsupportedCase("unknown tree family");
}

// Context over a single root-to-node path. Node ids are depths along the
// path. BFS indices are only materialized when the m = 2 rule asks for a
// non-ancestor label, which is then produced by a nested replay.
template <class Algebra>
class PathContext {
 public:
  using NodeId = std::size_t;
  using Label = typename Algebra::Label;

  PathContext(const Algebra& alg, const TreeParams& params) : alg_(alg), params_(params) {
    labels_.push_back(root_in(alg_, params_));
    positions_.push_back(0);
  }

  const Label& label(NodeId id) const { return labels_.at(id); }
  int position(NodeId id) const { return positions_.at(id); }
  NodeId parent(NodeId id) const { return id - 1; }
  NodeId last() const { return labels_.size() - 1; }

  Label successor_label(NodeId id) const {
    BigInt index = 0;
    for (NodeId i = 1; i <= id; ++i) index = index * params_.m() + positions_[i];
    index += 1;
    auto it = successor_cache_.find(index);
    if (it != successor_cache_.end()) return it->second;
    const auto steps = path_to_index(index, params_.m());
    PathContext nested(alg_, params_);
    for (int k : steps) nested.step(k);
    Label result = nested.label(nested.last());
    successor_cache_.emplace(index, result);
    return result;
  }

  void step(int k) {
    Label child = structural_child(alg_, *this, last(), k, params_);
    labels_.push_back(std::move(child));
    positions_.push_back(k);
  }

 private:
  const Algebra& alg_;
  const TreeParams& params_;
  std::vector<Label> labels_;
  std::vector<int> positions_;
  mutable std::map<BigInt, Label> successor_cache_;
};

template <class Algebra>
typename Algebra::Label replay(const Algebra& alg, std::span<const int> path, const TreeParams& params) {
  PathContext<Algebra> ctx(alg, params);
  for (int k : path) ctx.step(k);
  return ctx.label(ctx.last());
}

}  // namespace qcw::detail
