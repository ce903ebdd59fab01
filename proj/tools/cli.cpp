#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tangle/breakpoint_dp.hpp"
#include "tangle/error.hpp"
#include "tangle/fpt.hpp"
#include "tangle/hardness.hpp"
#include "tangle/render.hpp"
#include "tangle/sbt.hpp"
#include "tangle/tree.hpp"
#include "tangle/witness.hpp"

namespace tangle::cli {

namespace {

// A missing input is a usage error, not a rejection.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

RootedTree load_tree(const std::string& path) {
  try {
    return parse_tree(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(e.code(), e.location(), path + ": " + e.what());
  }
}

Witness load_witness(const std::string& path) {
  try {
    return parse_witness(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(e.code(), e.location(), path + ": " + e.what());
  }
}

// A one-line permutation file, in the witness permutation format.
Permutation load_permutation(const std::string& path) {
  const auto w = load_witness(path);
  if (!w.sequence.empty()) throw ParseError(Errc::parse_error, 2, path + ": expected a single permutation line");
  return w.order;
}

struct Options {
  std::string tree;
  std::string witness;
  std::string input;
  std::string output;
  std::optional<int> k;
  std::string sorter = "greedy";
  std::string objective = "blocks";
  std::string engine = "auto";
  std::string mode = "exact";
  int cap = kDefaultExactCap;
  bool stats = false;
  std::string from_perm;
  std::string from_digraph;
  std::string from_tree;
  bool random = false;
  std::uint64_t seed = 1;
  int n = 8;
  std::string shape = "binary";
};

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t = load_tree(o.tree);
  const auto result = solve_with_stats(t, *o.k);
  if (o.stats) {
    err << "search nodes " << result.stats.nodes << ", pruned " << result.stats.pruned << ", sort calls "
        << result.stats.sort_calls << ", max depth " << result.stats.max_depth << ", contractions "
        << result.stats.rule1_steps << '\n';
  }
  if (!result.witness) {
    err << "UNSAT: no leaf order sorts within " << *o.k << " block crossings\n";
    return kRejected;
  }
  write_text(o.output, format_witness(*result.witness), out);
  return kOk;
}

int cmd_approx(const Options& o, std::ostream& out, std::ostream&) {
  const auto t = load_tree(o.tree);
  const auto sorter = o.sorter == "exact" ? exact_sorter(o.cap) : greedy_sorter();
  write_text(o.output, format_witness(approximate_otbcm(t, sorter)), out);
  return kOk;
}

int cmd_bpmin(const Options& o, std::ostream& out, std::ostream&) {
  const auto t = load_tree(o.tree);
  const auto objective = o.objective == "breakpoints" ? Objective::breakpoints : Objective::blocks;
  const bool complete = o.engine == "complete" || (o.engine == "auto" && t.is_complete_binary());
  const auto r = complete ? min_blocks_complete(t, objective) : min_blocks_binary(t, objective);
  write_text(o.output, o.objective + ' ' + std::to_string(r.value) + '\n' + format_witness({r.order, {}}), out);
  return kOk;
}

int cmd_sbt(const Options& o, std::ostream& out, std::ostream& err) {
  const auto pi = load_permutation(o.input);
  std::optional<SortResult> sorted;
  if (o.mode == "exact") {
    sorted = exact_distance(pi, o.cap);
  } else if (o.mode == "greedy") {
    sorted = greedy_sort(pi);
  } else {
    if (!o.k) throw CLI::ValidationError("--k", "--mode fpt needs --k");
    sorted = fpt_sort(pi, *o.k);
  }
  if (!sorted) {
    err << "UNSAT: " << pi.to_string() << " needs more than " << *o.k << " transpositions\n";
    return kRejected;
  }
  if (o.k && static_cast<int>(sorted->sequence.size()) > *o.k) {
    err << "UNSAT: the " << o.mode << " sequence has " << sorted->sequence.size() << " transpositions, more than "
        << *o.k << '\n';
    return kRejected;
  }
  write_text(o.output, format_witness({pi, sorted->sequence}), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t = load_tree(o.tree);
  const auto w = load_witness(o.witness);
  if (w.order.size() != t.leaf_count() || !is_consistent(t, w.order)) {
    err << "FAIL: " << w.order.to_string() << " is not a leaf order of the tree\n";
    return kRejected;
  }
  const int budget = o.k.value_or(w.length());
  bool sorts = false;
  try {
    sorts = verify_sequence(w.order, w.sequence, budget);
  } catch (const Error& e) {
    err << "FAIL: " << e.what() << '\n';
    return kRejected;
  }
  if (!sorts) {
    err << "FAIL: the sequence does not sort the order within " << budget << " block crossings\n";
    return kRejected;
  }
  out << "OK " << w.length() << " block crossings\n";
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  const int sources = !o.from_perm.empty() + !o.from_digraph.empty() + !o.from_tree.empty() + o.random;
  if (sources != 1) {
    throw CLI::ValidationError("gen", "give exactly one of --from-perm, --from-digraph, --from-tree, --random");
  }
  std::optional<HardnessInstance> inst;
  if (!o.from_perm.empty()) {
    inst = build_sbt_tree(pad_permutation(load_permutation(o.from_perm)));
  } else if (!o.from_digraph.empty()) {
    Digraph g;
    try {
      g = parse_digraph(read_text(o.from_digraph));
    } catch (const ParseError& e) {
      throw ParseError(e.code(), e.location(), o.from_digraph + ": " + e.what());
    }
    inst = build_hp_tree(g);
  } else if (!o.from_tree.empty()) {
    if (!o.k) throw CLI::ValidationError("--k", "--from-tree needs --k");
    inst = build_bp_tree(load_tree(o.from_tree), *o.k);
  } else {
    const auto t = random_instance(o.seed, o.n, parse_shape(o.shape));
    write_text(o.output, serialize(t) + '\n', out);
    return kOk;
  }
  err << "threshold " << inst->threshold << " (" << inst->provenance << ")\n";
  write_text(o.output, serialize(inst->tree) + '\n', out);
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream&) {
  const auto t = load_tree(o.tree);
  write_text(o.output, render_svg(t, load_witness(o.witness)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-sided block crossing minimization for tanglegrams", "tangle"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "exact bounded search: a witness with at most k block crossings");
  solve->add_option("tree", o.tree, "tree file")->required();
  solve->add_option("--k", o.k, "block crossing budget")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("-o,--output", o.output, "witness file");
  solve->add_flag("--stats", o.stats, "print search statistics");

  auto* approx = app.add_subcommand("approx", "breakpoint-optimal order followed by a transposition sorter");
  approx->add_option("tree", o.tree, "tree file")->required();
  approx->add_option("--sorter", o.sorter, "greedy or exact")->check(CLI::IsMember({"greedy", "exact"}));
  approx->add_option("--cap", o.cap, "largest glued length the exact sorter accepts");
  approx->add_option("-o,--output", o.output, "witness file");

  auto* bpmin = app.add_subcommand("bpmin", "minimum blocks or breakpoints over the leaf orders");
  bpmin->add_option("tree", o.tree, "tree file")->required();
  bpmin->add_option("--objective", o.objective, "blocks or breakpoints")
      ->check(CLI::IsMember({"blocks", "breakpoints"}));
  bpmin->add_option("--engine", o.engine, "binary, complete or auto")
      ->check(CLI::IsMember({"binary", "complete", "auto"}));
  bpmin->add_option("-o,--output", o.output, "output file");

  auto* sbt = app.add_subcommand("sbt", "sort a permutation by transpositions");
  sbt->add_option("permutation", o.input, "file with one permutation line")->required();
  sbt->add_option("--mode", o.mode, "exact, fpt or greedy")->check(CLI::IsMember({"exact", "fpt", "greedy"}));
  sbt->add_option("--k", o.k, "transposition budget")->check(CLI::NonNegativeNumber);
  sbt->add_option("--cap", o.cap, "largest glued length the exact mode accepts");
  sbt->add_option("-o,--output", o.output, "witness file");

  auto* verify = app.add_subcommand("verify", "check a witness against a tree");
  verify->add_option("tree", o.tree, "tree file")->required();
  verify->add_option("witness", o.witness, "witness file")->required();
  verify->add_option("--k", o.k, "block crossing budget")->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand("gen", "generate trees from the hardness reductions or at random");
  gen->add_option("--from-perm", o.from_perm, "permutation file: complete tree from the padded permutation");
  gen->add_option("--from-digraph", o.from_digraph, "arc list: Hamiltonian path instance");
  gen->add_option("--from-tree", o.from_tree, "tree file: breakpoint instance, needs --k");
  gen->add_option("--k", o.k, "block bound for --from-tree")->check(CLI::NonNegativeNumber);
  gen->add_flag("--random", o.random, "seeded random tree");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--n", o.n, "leaf count")->check(CLI::PositiveNumber);
  gen->add_option("--shape", o.shape, "binary, complete or arbitrary")
      ->check(CLI::IsMember({"binary", "complete", "arbitrary"}));
  gen->add_option("-o,--output", o.output, "tree file");

  auto* render = app.add_subcommand("render", "draw a witness as SVG");
  render->add_option("tree", o.tree, "tree file")->required();
  render->add_option("witness", o.witness, "witness file")->required();
  render->add_option("-o,--output", o.output, "SVG file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(o, out, err);
    if (*approx) return cmd_approx(o, out, err);
    if (*bpmin) return cmd_bpmin(o, out, err);
    if (*sbt) return cmd_sbt(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*gen) return cmd_gen(o, out, err);
    return cmd_render(o, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_witness) {
      err << "FAIL: " << e.what() << '\n';
      return kRejected;
    }
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace tangle::cli
