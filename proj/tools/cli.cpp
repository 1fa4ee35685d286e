#include "cli.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcw/branches.hpp"
#include "qcw/classic.hpp"
#include "qcw/cwtree.hpp"
#include "qcw/density.hpp"
#include "qcw/errors.hpp"
#include "qcw/expansions.hpp"
#include "qcw/json_io.hpp"

namespace qcw::cli {

namespace {

using nlohmann::json;

struct Settings {
  int m = 2;
  int c = 0;
  std::int64_t n = 0;
  bool list = false;
  std::string root_mode = "definition";
  int depth = 0;
  std::string at_q;
  std::string format = "text";
  std::uint64_t vertex = 0;
  int child = 1;
  std::size_t len = 1;
  std::string frac;
  bool replay = false;
  std::uint64_t stern_n = 1;
  std::size_t count = 1;
  std::int64_t n_max = 100;
  int j_max = 4;
  std::int64_t bound = 25;
  std::uint64_t classic_bound = 500;
  bool quick = false;
  int depth_guard = TreeOptions{}.depth_guard;
};

std::optional<Rational> parse_at_q(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Rational::parse(text);
}

bool json_format(const Settings& s) { return s.format == "json"; }

void add_mc(CLI::App* sub, Settings& s) {
  sub->add_option("--m", s.m, "Base m >= 2")->required();
  sub->add_option("--c", s.c, "Offset 0 <= c <= m-1")->required();
}

void add_format(CLI::App* sub, Settings& s) {
  sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

TreeOptions tree_options(const Settings& s) {
  TreeOptions options;
  options.depth_guard = s.depth_guard;
  return options;
}

int emit_report(const VerifyReport& report, const Settings& s, std::ostream& out) {
  if (json_format(s)) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.ok() ? kSuccess : kVerificationFailed;
}

int cmd_poly(const Settings& s, std::ostream& out) {
  if (s.n < 0) throw InvalidArgument("n must be non-negative");
  const QPoly f = f_poly(s.n, HyperParams(s.m, s.c));
  if (json_format(s)) {
    out << json(f).dump() << "\n";
  } else {
    out << f.to_string() << "\n";
  }
  return kSuccess;
}

int cmd_expand(const Settings& s, std::ostream& out) {
  if (s.n < 0) throw InvalidArgument("n must be non-negative");
  const HyperParams params(s.m, s.c);
  const auto expansions = enumerate_expansions(static_cast<std::uint64_t>(s.n), params);
  const QPoly g = g_poly(s.n, params);
  if (json_format(s)) {
    json doc = {{"m", s.m}, {"c", s.c}, {"n", s.n}, {"g", g}, {"count", expansions.size()}};
    if (s.list) {
      json items = json::array();
      for (const auto& x : expansions) {
        json parts = json::array();
        for (auto it = x.multiplicities().rbegin(); it != x.multiplicities().rend(); ++it) {
          parts.push_back({{"exponent", it->first}, {"multiplicity", it->second}});
        }
        items.push_back({{"parts", parts}, {"h", hyper_weight(x, params).h}});
      }
      doc["expansions"] = items;
    }
    out << doc.dump(2) << "\n";
    return kSuccess;
  }
  out << "g = " << g.to_string() << "\n";
  out << "expansions: " << expansions.size() << "\n";
  if (s.list) {
    for (const auto& x : expansions) out << "  " << x.to_string(s.m) << "  h=" << hyper_weight(x, params).h << "\n";
  }
  return kSuccess;
}

json node_json(const TreeNode& node, const std::optional<Rational>& at_q) {
  json j = {{"n", node.index},
            {"parent", node.parent ? json(*node.parent) : json(nullptr)},
            {"pos", node.child_pos ? json(*node.child_pos) : json(nullptr)},
            {"label", node.label}};
  if (at_q) j["value"] = node.label.eval(*at_q).to_string();
  return j;
}

int cmd_tree(const Settings& s, std::ostream& out) {
  const TreeParams params(s.m, s.c, parse_root_mode(s.root_mode));
  const auto at_q = parse_at_q(s.at_q);
  const Tree tree = build_tree(params, s.depth, tree_options(s));
  if (json_format(s)) {
    json doc = json::array();
    for (const auto& node : tree.nodes()) doc.push_back(node_json(node, at_q));
    out << doc.dump(2) << "\n";
  } else {
    out << render_levels(tree, at_q);
  }
  return kSuccess;
}

int cmd_branch(const Settings& s, std::ostream& out) {
  const TreeParams params(s.m, s.c, parse_root_mode(s.root_mode));
  if (s.len == 0) throw InvalidArgument("len must be at least 1");
  const auto at_q = parse_at_q(s.at_q);
  const int depth = depth_of_index(s.vertex, s.m) + static_cast<int>(s.len) - 1;
  const Tree tree = build_tree(params, depth, tree_options(s));
  const auto labels = extract_branch(tree, s.vertex, s.child, s.len);
  if (json_format(s)) {
    json doc = json::array();
    for (const auto& l : labels) {
      json item = {{"label", l}};
      if (at_q) item["value"] = l.eval(*at_q).to_string();
      doc.push_back(item);
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& l : labels) out << (at_q ? l.eval(*at_q).to_string() : l.to_string()) << "\n";
  }
  return kSuccess;
}

int cmd_find(const Settings& s, std::ostream& out) {
  const TreeParams params(s.m, s.c, parse_root_mode(s.root_mode));
  const Fraction target = Fraction::parse(s.frac);
  const Path path = find_path(target, params);
  std::optional<Fraction> reached;
  if (s.replay) reached = replay_path(path, params);
  if (json_format(s)) {
    json doc = {{"target", target.to_string()}, {"path", path.steps}};
    if (reached) doc["replay"] = reached->to_string();
    out << doc.dump() << "\n";
  } else {
    out << path.to_string() << "\n";
    if (reached) out << "replay: " << reached->to_string() << "\n";
  }
  if (reached && !(*reached == target)) return kVerificationFailed;
  return kSuccess;
}

int cmd_stern(const Settings& s, std::ostream& out) {
  const auto value = stern(s.stern_n);
  if (json_format(s)) {
    out << json{{"n", s.stern_n}, {"b", value}}.dump() << "\n";
  } else {
    out << value << "\n";
  }
  return kSuccess;
}

int cmd_newman(const Settings& s, std::ostream& out) {
  const auto terms = newman_seq(s.count);
  if (json_format(s)) {
    json doc = json::array();
    for (const auto& t : terms) doc.push_back(t.to_string());
    out << doc.dump() << "\n";
  } else {
    for (const auto& t : terms) out << t.to_string() << "\n";
  }
  return kSuccess;
}

// Grids for `verify all`. The full grid matches the acceptance bounds.
std::vector<VerifyReport> run_all(bool quick, const Settings& s) {
  std::vector<VerifyReport> reports;
  const std::int64_t n_max = quick ? 100 : 1000;
  for (int m = 2; m <= 5; ++m) {
    for (int c = 0; c < m; ++c) reports.push_back(verify_f_equals_g(HyperParams(m, c), n_max));
  }
  const TreeOptions topts = tree_options(s);
  const int tree_depth = quick ? 3 : 4;
  const std::array<std::pair<int, int>, 9> label_grid = {
      {{3, 2}, {4, 3}, {5, 4}, {2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 3}}};
  for (auto [m, c] : label_grid) reports.push_back(verify_tree_vs_ratio(TreeParams(m, c), tree_depth, topts));
  for (int m = 2; m <= 4; ++m) {
    reports.push_back(verify_tree_vs_ratio(TreeParams(m, 0, RootMode::kTheorem), 3, topts));
  }
  const std::array<long long, 3> rs = {1, 2, 3};
  reports.push_back(verify_chebyshev_identity(quick ? 10 : 25, rs));
  BranchOptions bopts;
  bopts.tree = topts;
  for (auto [m, c] : std::array<std::pair<int, int>, 3>{{{3, 2}, {4, 3}, {2, 1}}}) {
    reports.push_back(verify_branch_theorems(TreeParams(m, c), quick ? 3 : 4, bopts));
  }
  const std::array<std::pair<int, int>, 9> density_grid = {
      {{3, 2}, {4, 3}, {5, 4}, {2, 0}, {3, 0}, {4, 0}, {3, 1}, {4, 2}, {5, 2}}};
  for (auto [m, c] : density_grid) reports.push_back(verify_density(TreeParams(m, c), quick ? 12 : 25));
  reports.push_back(verify_classic(quick ? 100 : 500));
  return reports;
}

std::string summary_line(const VerifyReport& r) {
  std::string line = r.ok() ? "PASS " : "FAIL ";
  line += r.suite;
  for (const auto& [key, value] : r.parameters) line += " " + key + "=" + value;
  line += " checks=" + std::to_string(r.checks) + " failures=" + std::to_string(r.failures.size());
  return line;
}

int cmd_verify_all(const Settings& s, std::ostream& out) {
  const auto reports = run_all(s.quick, s);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.ok(); });
  if (json_format(s)) {
    json doc = json::array();
    for (const auto& r : reports) doc.push_back(r.to_json());
    out << json{{"ok", ok}, {"reports", doc}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << summary_line(r) << "\n";
      if (!r.ok()) {
        for (const auto& n : r.notes) out << "  note: " << n << "\n";
      }
    }
    out << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted m-ary expansion counts and the q-Calkin-Wilf trees built from them"};
  app.require_subcommand(1);
  Settings s;
  std::function<int()> action;

  auto* poly = app.add_subcommand("poly", "Print f_{m,c}(n;q) from the digit recurrence");
  add_mc(poly, s);
  poly->add_option("--n", s.n, "Index n >= 0")->required();
  add_format(poly, s);
  poly->callback([&] { action = [&] { return cmd_poly(s, out); }; });

  auto* expand = app.add_subcommand("expand", "Enumerate c-hyper m-expansions of n and their weight polynomial");
  add_mc(expand, s);
  expand->add_option("--n", s.n, "Integer n >= 0")->required();
  expand->add_flag("--list", s.list, "List each expansion with its statistic");
  add_format(expand, s);
  expand->callback([&] { action = [&] { return cmd_expand(s, out); }; });

  auto* tree = app.add_subcommand("tree", "Build a (q,c)-Calkin-Wilf tree of order m");
  add_mc(tree, s);
  tree->add_option("--root-mode", s.root_mode, "Root convention for c = 0")
      ->check(CLI::IsMember({"definition", "theorem"}));
  tree->add_option("--depth", s.depth, "Deepest level to generate")->required()->check(CLI::NonNegativeNumber);
  tree->add_option("--at-q", s.at_q, "Evaluate labels at an exact rational q (p/r or integer)");
  tree->add_option("--depth-guard", s.depth_guard, "Largest depth accepted");
  add_format(tree, s);
  tree->callback([&] { action = [&] { return cmd_tree(s, out); }; });

  auto* branch = app.add_subcommand("branch", "Follow k-th children from a vertex");
  add_mc(branch, s);
  branch->add_option("--root-mode", s.root_mode, "Root convention for c = 0")
      ->check(CLI::IsMember({"definition", "theorem"}));
  branch->add_option("--vertex", s.vertex, "BFS index of the starting vertex")->required();
  branch->add_option("--child", s.child, "Child position k in 1..m")->required();
  branch->add_option("--len", s.len, "Number of labels")->required();
  branch->add_option("--at-q", s.at_q, "Evaluate labels at an exact rational q");
  branch->add_option("--depth-guard", s.depth_guard, "Largest depth accepted");
  add_format(branch, s);
  branch->callback([&] { action = [&] { return cmd_branch(s, out); }; });

  auto* find = app.add_subcommand("find", "Find a root path to a fraction a/b in (0,1] at q = 1");
  add_mc(find, s);
  find->add_option("--frac", s.frac, "Target a/b in lowest terms")->required();
  find->add_flag("--replay", s.replay, "Replay the path and print the fraction reached");
  add_format(find, s);
  find->callback([&] { action = [&] { return cmd_find(s, out); }; });

  auto* stern_cmd = app.add_subcommand("stern", "Stern's diatomic sequence b_n");
  stern_cmd->add_option("--n", s.stern_n, "Index n >= 1")->required()->check(CLI::PositiveNumber);
  add_format(stern_cmd, s);
  stern_cmd->callback([&] { action = [&] { return cmd_stern(s, out); }; });

  auto* newman = app.add_subcommand("newman", "Calkin-Wilf sequence from Newman's recurrence");
  newman->add_option("--count", s.count, "Number of terms")->required()->check(CLI::PositiveNumber);
  add_format(newman, s);
  newman->callback([&] { action = [&] { return cmd_newman(s, out); }; });

  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->require_subcommand(1);

  auto* v_all = verify->add_subcommand("all", "Every sweep");
  v_all->add_flag("--quick", s.quick, "Smaller bounds");
  add_format(v_all, s);
  v_all->callback([&] { action = [&] { return cmd_verify_all(s, out); }; });

  auto* v_exp = verify->add_subcommand("expansions", "f_{m,c}(n) == g_{m,c}(n) for 0 <= n <= nmax");
  add_mc(v_exp, s);
  v_exp->add_option("--nmax", s.n_max, "Largest n")->check(CLI::NonNegativeNumber);
  add_format(v_exp, s);
  v_exp->callback([&] { action = [&] { return emit_report(verify_f_equals_g(HyperParams(s.m, s.c), s.n_max), s, out); }; });

  auto* v_tree = verify->add_subcommand("tree", "Structural labels against the f-ratio formula");
  add_mc(v_tree, s);
  v_tree->add_option("--depth", s.depth, "Deepest level")->required()->check(CLI::NonNegativeNumber);
  v_tree->add_option("--root-mode", s.root_mode, "Root convention for c = 0")
      ->check(CLI::IsMember({"definition", "theorem"}));
  v_tree->add_option("--depth-guard", s.depth_guard, "Largest depth accepted");
  add_format(v_tree, s);
  v_tree->callback([&] {
    action = [&] {
      return emit_report(
          verify_tree_vs_ratio(TreeParams(s.m, s.c, parse_root_mode(s.root_mode)), s.depth, tree_options(s)), s,
          out);
    };
  });

  auto* v_branch = verify->add_subcommand("branches", "Chebyshev branch identities (c = m-1)");
  add_mc(v_branch, s);
  v_branch->add_option("--jmax", s.j_max, "Largest branch index")->check(CLI::NonNegativeNumber);
  v_branch->add_option("--depth-guard", s.depth_guard, "Largest depth accepted");
  add_format(v_branch, s);
  v_branch->callback([&] {
    action = [&] {
      BranchOptions options;
      options.tree = tree_options(s);
      VerifyReport report = verify_branch_theorems(TreeParams(s.m, s.c), s.j_max, options);
      const std::array<long long, 3> rs = {1, 2, 3};
      report.merge(verify_chebyshev_identity(s.j_max, rs));
      return emit_report(report, s, out);
    };
  });

  auto* v_density = verify->add_subcommand("density", "Every reduced a/b <= 1 with b <= bound is reached at q = 1");
  add_mc(v_density, s);
  v_density->add_option("--bound", s.bound, "Largest denominator")->check(CLI::PositiveNumber);
  add_format(v_density, s);
  v_density->callback([&] { action = [&] { return emit_report(verify_density(TreeParams(s.m, s.c), s.bound), s, out); }; });

  auto* v_classic = verify->add_subcommand("classic", "Stern, Newman and Dilcher-Stolarsky cross-checks");
  v_classic->add_option("--bound", s.classic_bound, "Largest index")->check(CLI::PositiveNumber);
  add_format(v_classic, s);
  v_classic->callback([&] { action = [&] { return emit_report(verify_classic(s.classic_bound), s, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace qcw::cli
