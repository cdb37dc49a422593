#include "cli.hpp"

#include "emit.hpp"
#include "verify.hpp"

#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"
#include "prelie/identities.hpp"
#include "prelie/json.hpp"
#include "prelie/monomial.hpp"
#include "prelie/products.hpp"
#include "prelie/projection.hpp"
#include "prelie/psi.hpp"
#include "prelie/statistics.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <optional>

namespace prelie::cli {

using nlohmann::json;

namespace {

struct Caps {
  std::optional<std::size_t> degree;
  std::optional<std::size_t> brute_force;
  std::optional<std::size_t> matrix;
  std::optional<std::size_t> multigen;
};

std::size_t parse_count(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6) {
    throw ParseError(std::string(what) + ": expected a positive integer, got '" + text + "'");
  }
  return std::stoul(text);
}

Limits resolve_limits(const Caps& caps) {
  Limits limits;
  if (const char* env = std::getenv("PRELIE_MAX_DEGREE"); env != nullptr && *env != '\0') {
    limits.max_degree = parse_count(env, "PRELIE_MAX_DEGREE");
  }
  if (caps.degree) limits.max_degree = *caps.degree;
  limits.brute_force_max = caps.brute_force.value_or(std::min(limits.brute_force_max, limits.max_degree));
  limits.matrix_max_degree = caps.matrix.value_or(std::min(limits.matrix_max_degree, limits.max_degree));
  limits.multigen_max = caps.multigen.value_or(std::min(limits.multigen_max, limits.max_degree));
  return limits;
}

VertexId parse_vertex(const std::string& text) {
  VertexId id;
  if (text == "r") return id;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t dot = std::min(text.find('.', start), text.size());
    id.path.push_back(parse_count(text.substr(start, dot - start), "vertex"));
    start = dot + 1;
  }
  return id;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

json string_array(const auto& items) {
  json out = json::array();
  for (const auto& item : items) out.push_back(item.serialize());
  return out;
}

void emit_section(Emitter& emit, const Section& section) {
  if (emit.format() == Format::Text) {
    emit.text_block("section", section.to_text());
    return;
  }
  json entries = json::array();
  for (const auto& [t, sigma] : section.entries()) {
    entries.push_back(json{{"tree", t.serialize()}, {"planar", sigma.serialize()}});
  }
  emit.record({{"size", section.size()}, {"entries", entries}});
}

// All flag values of one invocation.
struct State {
  std::string format = "text";
  Caps caps;

  std::size_t degree = 0;
  std::string tree, tree2, sigma, tau, sum, kind, method, vertex;
  std::string section_file, monomial_file, alphabet, columns = "basis", product, identity;
  std::vector<std::string> monomials;
  bool ag = false, list = false, nonplanar = false;
  std::string x, y, z;
  std::size_t default_degree = 0;
  VerifyOptions verify;
  std::optional<std::size_t> verify_degree;
};

class Runner {
 public:
  Runner(State& state, std::ostream& out) : s_(state), out_(out) {}

  Emitter emitter() const { return Emitter(out_, parse_format(s_.format)); }
  Limits limits() const { return resolve_limits(s_.caps); }

  std::vector<MonomialExpr> monomial_input() const {
    std::vector<MonomialExpr> out;
    if (!s_.monomial_file.empty()) out = load_monomial_list(s_.monomial_file);
    for (const auto& m : s_.monomials) out.push_back(MonomialExpr::parse(m));
    if (out.empty()) throw ParseError("no monomials given (--monomials-file or --monomial)");
    return out;
  }

  std::size_t degree_of(const std::vector<MonomialExpr>& ms) const {
    return s_.degree != 0 ? s_.degree : ms.front().degree();
  }

  int enumerate(const std::string& what) {
    Emitter emit = emitter();
    const Limits lim = limits();
    if (what == "planar") {
      emit.trees("planar", s_.degree, enumerate_planar(s_.degree, lim));
    } else if (what == "nonplanar") {
      std::vector<PlanarTree> trees;
      for (const auto& t : enumerate_nonplanar(s_.degree, lim)) trees.push_back(t.canonical());
      emit.trees("nonplanar", s_.degree, trees);
    } else {
      emit.binary_trees(s_.degree, enumerate_binary(s_.degree, lim));
    }
    return kOk;
  }

  int product() {
    const ProductKind k = parse_product_kind(s_.kind);
    const Flavor f = product_flavor(k);
    emitter().sum(bilinear_extend(k, TreeSum::parse(s_.tree, f), TreeSum::parse(s_.tree2, f)));
    return kOk;
  }

  int join() {
    const BinaryTree t = binary_join(BinaryTree::parse(s_.tree), BinaryTree::parse(s_.tree2));
    emitter().record({{"tree", t.serialize()}, {"rotation", rotation(t).serialize()}});
    return kOk;
  }

  int rotate() {
    const BinaryTree t = BinaryTree::parse(s_.tree);
    emitter().record({{"binary", t.serialize()}, {"rotation", rotation(t).serialize()}});
    return kOk;
  }

  TreeSum planar_input() const {
    if (!s_.sum.empty()) return TreeSum::parse(s_.sum, Flavor::Planar);
    if (s_.tree.empty()) throw ParseError("give --tree or --sum");
    return TreeSum(PlanarTree::parse(s_.tree));
  }

  int psi_op() {
    emitter().sum(psi(planar_input()));
    return kOk;
  }

  int psi_inverse_op() {
    emitter().sum(psi_inverse(planar_input()));
    return kOk;
  }

  int psi_bar_op() {
    emitter().sum(forget_planarity(psi(planar_input())));
    return kOk;
  }

  int decompose_op() {
    const PlanarTree t = PlanarTree::parse(s_.tree);
    const auto [branch, trunk] =
        s_.vertex.empty() ? decompose(t) : split_leftmost_branch(t, parse_vertex(s_.vertex));
    emitter().record({{"tree", t.serialize()},
                      {"vertex", s_.vertex.empty() ? "r" : s_.vertex},
                      {"branch", branch.serialize()},
                      {"trunk", trunk.serialize()},
                      {"left_butcher", left_butcher(branch, trunk).serialize()}});
    return kOk;
  }

  int coeff() {
    const PlanarTree sigma = PlanarTree::parse(s_.sigma);
    const PlanarTree tau = PlanarTree::parse(s_.tau);
    Record r{{"sigma", sigma.serialize()}, {"tau", tau.serialize()}};
    std::optional<Integer> rec, bij;
    if (s_.method != "bijections") rec = coeff_c_recursive(sigma, tau);
    if (s_.method != "recursive") bij = coeff_c_bijections(sigma, tau, limits());
    if (rec) r.emplace_back("recursive", integer_to_json(*rec));
    if (bij) r.emplace_back("bijections", integer_to_json(*bij));
    const bool match = !rec || !bij || *rec == *bij;
    if (rec && bij) r.emplace_back("match", match);
    emitter().record(r);
    return match ? kOk : kMethodDisagreement;
  }

  int alpha_op() {
    const Tree s = Tree::parse(s_.sigma);
    const PlanarTree tau = PlanarTree::parse(s_.tau);
    Record r{{"s", s.serialize()}, {"tau", tau.serialize()}};
    std::optional<Integer> fiber, normalized;
    if (s_.method != "bijections") {
      fiber = alpha(s, tau);
      r.emplace_back("alpha_fiber", integer_to_json(*fiber));
    }
    if (s_.method != "fiber") {
      const Integer b = count_tilde_b(s, tau, limits());
      const Integer sym = symmetry_factor(s);
      r.emplace_back("tilde_b", integer_to_json(b));
      r.emplace_back("sym", integer_to_json(sym));
      if (b % sym == 0) {
        normalized = b / sym;
        r.emplace_back("alpha_bijections", integer_to_json(*normalized));
      } else {
        r.emplace_back("alpha_bijections", to_string(b) + "/" + to_string(sym));
      }
    }
    const bool match = s_.method != "both" || (normalized && *normalized == *fiber);
    if (s_.method == "both") r.emplace_back("match", match);
    emitter().record(r);
    return match ? kOk : kMethodDisagreement;
  }

  int psi_matrix_op() {
    emitter().matrix(psi_matrix(s_.degree, limits()));
    return kOk;
  }

  int alpha_matrix_op() {
    emitter().matrix(alpha_matrix(s_.degree, limits()));
    return kOk;
  }

  Section section_input(std::size_t n) const {
    if (!s_.section_file.empty()) return Section::load(s_.section_file);
    return default_section(n, limits());
  }

  int beta() {
    if (!s_.tree.empty()) {
      const Tree t = Tree::parse(s_.tree);
      emitter().sum(psi_tilde(section_input(t.degree()), t));
      return kOk;
    }
    emitter().matrix(beta_matrix(section_input(s_.degree), s_.degree, limits()));
    return kOk;
  }

  int expand() {
    const Limits lim = limits();
    MonomialBasis basis;
    if (s_.ag) {
      basis = ag_basis(s_.degree, {}, lim);
    } else {
      basis.monomials = monomial_input();
      basis.degree = degree_of(basis.monomials);
      for (const auto& m : basis.monomials) basis.lower_terms.push_back(lower_energy_term(m));
    }
    ColumnOrder order = ColumnOrder::Basis;
    if (s_.columns == "lower-term") {
      order = ColumnOrder::LowerEnergyTerm;
    } else if (s_.columns != "basis") {
      throw ParseError("--columns takes basis or lower-term");
    }
    emitter().matrix(expand_basis(basis, order, lim));
    return kOk;
  }

  int evaluate_op() {
    emitter().sum(evaluate(MonomialExpr::parse(s_.tree), parse_product_kind(s_.product)));
    return kOk;
  }

  int lower_term() {
    const MonomialExpr m = MonomialExpr::parse(s_.tree);
    emitter().record({{"monomial", m.serialize()},
                      {"lower_energy_term", lower_energy_term(m).serialize()},
                      {"left_butcher_reading", evaluate(m, ProductKind::LeftButcher).to_text()}});
    return kOk;
  }

  int monomial_of() {
    const PlanarTree sigma = PlanarTree::parse(s_.tree);
    emitter().record({{"planar", sigma.serialize()}, {"monomial", planar_monomial(sigma).serialize()}});
    return kOk;
  }

  int basis() {
    const Limits lim = limits();
    const GeneratorOrder order = s_.alphabet.empty() ? GeneratorOrder() : GeneratorOrder(split_list(s_.alphabet));
    MonomialBasis b;
    if (order.size() == 1) {
      b = ag_basis(s_.degree, order, lim);
    } else {
      b.degree = s_.degree;
      b.order = order;
      b.monomials = ag_basis_multigen(s_.degree, order, lim);
    }
    Emitter emit = emitter();
    if (emit.format() == Format::Json) {
      out_ << to_json(b).dump(2) << '\n';
    } else if (emit.format() == Format::Csv) {
      out_ << "index,monomial,lower_energy_term\n";
      for (std::size_t i = 0; i < b.monomials.size(); ++i) {
        out_ << i << ',' << csv_field(b.monomials[i].serialize()) << ','
             << lower_energy_term(b.monomials[i]).serialize() << '\n';
      }
    } else {
      for (const auto& m : b.monomials) out_ << m.serialize() << '\n';
      out_ << "count " << b.monomials.size() << '\n';
    }
    return kOk;
  }

  int grounded() {
    const auto ms = monomial_input();
    const std::size_t n = degree_of(ms);
    const GroundingReport r = is_tree_grounded(ms, n, limits());
    emitter().record({{"degree", n},
                      {"grounded", r.grounded},
                      {"missing", string_array(r.missing)},
                      {"duplicated", string_array(r.duplicated)}});
    return kOk;
  }

  int stats() {
    const Limits lim = limits();
    if (s_.nonplanar) {
      const Tree t = Tree::parse(s_.tree);
      emitter().record({{"tree", t.serialize()},
                        {"degree", t.degree()},
                        {"potential_energy", potential_energy(t)},
                        {"symmetry_factor", integer_to_json(symmetry_factor(t))},
                        {"fiber_size", planar_embeddings(t).size()},
                        {"canonical_index", canonical_index(t, lim)}});
      return kOk;
    }
    const PlanarTree t = PlanarTree::parse(s_.tree);
    Record r{{"tree", t.serialize()},
             {"degree", t.degree()},
             {"potential_energy", potential_energy(t)},
             {"n_statistic", integer_to_json(n_statistic(t))},
             {"forget_planarity", forget_planarity(t).serialize()},
             {"symmetry_factor", integer_to_json(symmetry_factor(Tree(t)))}};
    if (!t.has_labels()) r.emplace_back("canonical_index", canonical_index(t, lim));
    emitter().record(r);
    return kOk;
  }

  int order() {
    const OrderKind k = parse_order_kind(s_.kind);
    const VertexOrder o = vertex_order(PlanarTree::parse(s_.tree), k);
    json vertices = json::array();
    for (const auto& v : o.vertices()) vertices.push_back(v.to_string());
    Record r{{"kind", std::string(order_kind_name(k))}, {"vertices", vertices}};
    if (k == OrderKind::Total) {
      json asc = json::array();
      for (const auto& v : o.ascending()) asc.push_back(v.to_string());
      r.emplace_back("ascending", asc);
    }
    json pairs = json::array();
    for (std::size_t a = 0; a < o.size(); ++a) {
      for (std::size_t b = 0; b < o.size(); ++b) {
        if (o.less(a, b)) pairs.push_back(o.vertices()[a].to_string() + "<" + o.vertices()[b].to_string());
      }
    }
    r.emplace_back("relation", pairs);
    emitter().record(r);
    return kOk;
  }

  int embeddings() {
    const Tree t = Tree::parse(s_.tree);
    emitter().trees("embeddings", t.degree(), planar_embeddings(t));
    return kOk;
  }

  int sections() {
    const auto all = all_sections(s_.degree, limits());
    if (!s_.list) {
      emitter().record({{"degree", s_.degree}, {"sections", all.size()}});
      return kOk;
    }
    Emitter emit = emitter();
    if (emit.format() == Format::Json) {
      json list = json::array();
      for (const auto& s : all) list.push_back(s.to_text());
      out_ << json{{"degree", s_.degree}, {"sections", list}}.dump(2) << '\n';
    } else {
      for (std::size_t i = 0; i < all.size(); ++i) out_ << "# section " << i << '\n' << all[i].to_text();
    }
    return kOk;
  }

  int identity_op() {
    const Tree x = Tree::parse(s_.x), y = Tree::parse(s_.y), z = Tree::parse(s_.z);
    if (s_.identity == "pre-lie" || s_.identity == "prelie") {
      const TreeSum defect = prelie_defect(x, y, z);
      emitter().record({{"identity", "pre-lie"}, {"holds", defect.empty()}, {"defect", defect.to_text()}});
    } else if (s_.identity == "nap") {
      emitter().record({{"identity", "nap"}, {"holds", nap_holds(x, y, z)}});
    } else {
      throw ParseError("--identity takes pre-lie or nap");
    }
    return kOk;
  }

  int sequence() {
    const SequenceReport r = verify_a088716(s_.degree, limits());
    json direct = json::array(), recursive = json::array();
    for (const auto& v : r.direct) direct.push_back(integer_to_json(v));
    for (const auto& v : r.recursive) recursive.push_back(integer_to_json(v));
    emitter().record({{"max_degree", r.max_degree},
                      {"direct", direct},
                      {"recursive", recursive},
                      {"recursion_matches", r.recursion_matches()},
                      {"ode_orders", r.ode.size()},
                      {"ode_satisfied", r.ode_satisfied()}});
    return r.passed() ? kOk : kVerifyFailed;
  }

  int verify(const std::string& suite) {
    VerifyOptions options = s_.verify;
    options.max_degree = s_.verify_degree;
    const Report report = run_verify_suite(suite, options, limits());
    emitter().report(report);
    return report.passed() ? kOk : kVerifyFailed;
  }

  int section_validate() {
    const Section section = Section::load(s_.section_file);
    Record r{{"file", s_.section_file}, {"entries", section.size()}, {"valid", true}};
    bool covered = true;
    if (s_.degree != 0) {
      covered = section.covers(s_.degree, limits());
      r.emplace_back("covers_degree", s_.degree);
      r.emplace_back("covered", covered);
    }
    emitter().record(r);
    return covered ? kOk : kVerifyFailed;
  }

  int section_show() {
    if (!s_.section_file.empty()) {
      emit_section_to_out(Section::load(s_.section_file));
    } else if (s_.default_degree != 0) {
      emit_section_to_out(default_section(s_.default_degree, limits()));
    } else {
      throw ParseError("give --file or --default");
    }
    return kOk;
  }

  int section_from_basis() {
    const Limits lim = limits();
    if (s_.ag) {
      emit_section_to_out(section_of_basis(ag_basis(s_.degree, {}, lim).monomials, s_.degree, lim));
    } else {
      const auto ms = monomial_input();
      emit_section_to_out(section_of_basis(ms, degree_of(ms), lim));
    }
    return kOk;
  }

  int section_to_basis() {
    const Section section = section_input(s_.degree);
    const MonomialBasis b = basis_of_section(section, s_.degree, limits());
    Emitter emit = emitter();
    if (emit.format() == Format::Json) {
      out_ << to_json(b).dump(2) << '\n';
    } else {
      for (const auto& m : b.monomials) out_ << m.serialize() << '\n';
    }
    return kOk;
  }

 private:
  void emit_section_to_out(const Section& section) {
    Emitter emit = emitter();
    emit_section(emit, section);
  }

  State& s_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  State state;
  Runner runner(state, out);
  std::function<int()> action;

  CLI::App app{"Free pre-Lie and magmatic algebras on rooted trees", "prelie"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", state.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--degree-cap", state.caps.degree, "Largest degree for enumeration");
  app.add_option("--brute-force-cap", state.caps.brute_force, "Largest degree for bijection counts");
  app.add_option("--matrix-cap", state.caps.matrix, "Largest degree for dense matrices");
  app.add_option("--multigen-cap", state.caps.multigen, "Largest degree for multi-generator bases");

  auto on = [&](CLI::App* cmd, std::function<int()> fn) {
    cmd->callback([&action, fn = std::move(fn)] { action = fn; });
    return cmd;
  };
  auto degree_opt = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--degree,-n", state.degree, "Degree (number of vertices)")
                    ->check(CLI::PositiveNumber);
    if (required) opt->required();
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List trees of one degree in canonical order");
  enumerate_cmd->require_subcommand(1);
  for (const char* kind : {"planar", "nonplanar", "binary"}) {
    auto* cmd = enumerate_cmd->add_subcommand(kind, std::string("Enumerate ") + kind + " trees");
    degree_opt(cmd);
    std::string k = kind;
    on(cmd, [&runner, k] { return runner.enumerate(k); });
  }

  auto* compute = app.add_subcommand("compute", "Evaluate one library operation");
  compute->require_subcommand(1);

  auto* product = compute->add_subcommand("product", "Bilinear product of two trees or sums");
  product->add_option("--kind", state.kind, "graft, butcher, left-butcher or left-graft")->required();
  product->add_option("--left", state.tree, "Left operand (tree or sum)")->required();
  product->add_option("--right", state.tree2, "Right operand (tree or sum)")->required();
  on(product, [&] { return runner.product(); });

  auto* join_cmd = compute->add_subcommand("join", "Binary tree t1 v t2");
  join_cmd->add_option("--left", state.tree, "Left binary tree")->required();
  join_cmd->add_option("--right", state.tree2, "Right binary tree")->required();
  on(join_cmd, [&] { return runner.join(); });

  auto* rotation_cmd = compute->add_subcommand("rotation", "Rotation correspondence of a binary tree");
  rotation_cmd->add_option("--binary", state.tree, "Binary tree, leaf '.' and node '[l,r]'")->required();
  on(rotation_cmd, [&] { return runner.rotate(); });

  auto planar_in = [&](CLI::App* cmd) {
    auto* t = cmd->add_option("--tree", state.tree, "Planar tree");
    auto* s = cmd->add_option("--sum", state.sum, "Planar tree sum");
    t->excludes(s);
  };
  auto* psi_cmd = compute->add_subcommand("psi", "Magmatic isomorphism Psi");
  planar_in(psi_cmd);
  on(psi_cmd, [&] { return runner.psi_op(); });
  auto* psi_inv = compute->add_subcommand("psi-inverse", "Inverse of Psi");
  planar_in(psi_inv);
  on(psi_inv, [&] { return runner.psi_inverse_op(); });
  auto* psi_bar_cmd = compute->add_subcommand("psi-bar", "Psi followed by forgetting planarity");
  planar_in(psi_bar_cmd);
  on(psi_bar_cmd, [&] { return runner.psi_bar_op(); });

  auto* decompose_cmd = compute->add_subcommand("decompose", "Leftmost branch and trunk");
  decompose_cmd->add_option("--tree", state.tree, "Planar tree")->required();
  decompose_cmd->add_option("--vertex", state.vertex, "Vertex id: r or dotted child indices");
  on(decompose_cmd, [&] { return runner.decompose_op(); });

  auto* coeff_cmd = compute->add_subcommand("coeff", "Coefficient of sigma in Psi(tau)");
  coeff_cmd->add_option("--sigma", state.sigma, "Planar tree")->required();
  coeff_cmd->add_option("--tau", state.tau, "Planar tree")->required();
  state.method = "both";
  coeff_cmd->add_option("--method", state.method, "recursive, bijections or both")
      ->check(CLI::IsMember({"recursive", "bijections", "both"}));
  on(coeff_cmd, [&] { return runner.coeff(); });

  auto* alpha_cmd = compute->add_subcommand("alpha", "Coefficient of s in Psi-bar(tau)");
  alpha_cmd->add_option("--s", state.sigma, "Non-planar tree")->required();
  alpha_cmd->add_option("--tau", state.tau, "Planar tree")->required();
  alpha_cmd->add_option("--method", state.method, "fiber, bijections or both")
      ->check(CLI::IsMember({"fiber", "bijections", "both"}));
  on(alpha_cmd, [&] { return runner.alpha_op(); });

  auto* psi_matrix_cmd = compute->add_subcommand("psi-matrix", "Matrix of Psi on one degree");
  degree_opt(psi_matrix_cmd);
  on(psi_matrix_cmd, [&] { return runner.psi_matrix_op(); });
  auto* alpha_matrix_cmd = compute->add_subcommand("alpha-matrix", "Matrix of alpha on one degree");
  degree_opt(alpha_matrix_cmd);
  on(alpha_matrix_cmd, [&] { return runner.alpha_matrix_op(); });

  auto* beta_cmd = compute->add_subcommand("beta", "Matrix of Psi-tilde for a section, or one column");
  degree_opt(beta_cmd, false);
  beta_cmd->add_option("--section", state.section_file, "Section file (default section otherwise)")
      ->check(CLI::ExistingFile);
  beta_cmd->add_option("--tree", state.tree, "Single non-planar tree: emit Psi-tilde of it");
  on(beta_cmd, [&] {
    if (state.tree.empty() && state.degree == 0) throw ParseError("give --degree or --tree");
    return runner.beta();
  });

  auto monomial_in = [&](CLI::App* cmd) {
    cmd->add_option("--monomials-file", state.monomial_file, "File with one monomial per line")
        ->check(CLI::ExistingFile);
    cmd->add_option("--monomial", state.monomials, "Monomial such as [g,[g,g]] (repeatable)")
        ->allow_extra_args(false);
  };
  auto* expand_cmd = compute->add_subcommand("expand", "Expand monomials over the tree basis");
  expand_cmd->add_flag("--ag", state.ag, "Use the Agrachev-Gamkrelidze basis of --degree");
  degree_opt(expand_cmd, false);
  monomial_in(expand_cmd);
  expand_cmd->add_option("--columns", state.columns, "basis or lower-term");
  on(expand_cmd, [&] {
    if (state.ag && state.degree == 0) throw ParseError("--ag needs --degree");
    return runner.expand();
  });

  auto* evaluate_cmd = compute->add_subcommand("evaluate", "Evaluate a monomial under a product");
  evaluate_cmd->add_option("--monomial", state.tree, "Monomial")->required();
  evaluate_cmd->add_option("--product", state.product, "graft, butcher, left-butcher or left-graft")
      ->required();
  on(evaluate_cmd, [&] { return runner.evaluate_op(); });

  auto* lower_cmd = compute->add_subcommand("lower-term", "Lower-energy term of a monomial");
  lower_cmd->add_option("--monomial", state.tree, "Monomial")->required();
  on(lower_cmd, [&] { return runner.lower_term(); });

  auto* monomial_cmd = compute->add_subcommand("monomial-of", "Monomial whose left Butcher reading is a tree");
  monomial_cmd->add_option("--tree", state.tree, "Planar tree")->required();
  on(monomial_cmd, [&] { return runner.monomial_of(); });

  auto* basis_cmd = compute->add_subcommand("basis", "Agrachev-Gamkrelidze monomial basis");
  degree_opt(basis_cmd);
  basis_cmd->add_option("--alphabet", state.alphabet, "Comma-separated generators, ascending");
  on(basis_cmd, [&] { return runner.basis(); });

  auto* grounded_cmd = compute->add_subcommand("grounded", "Tree-grounded test for a monomial list");
  monomial_in(grounded_cmd);
  degree_opt(grounded_cmd, false);
  on(grounded_cmd, [&] { return runner.grounded(); });

  auto* stats_cmd = compute->add_subcommand("stats", "Statistics of one tree");
  stats_cmd->add_option("--tree", state.tree, "Tree")->required();
  stats_cmd->add_flag("--nonplanar", state.nonplanar, "Read the tree as non-planar");
  on(stats_cmd, [&] { return runner.stats(); });

  auto* order_cmd = compute->add_subcommand("order", "Vertex order of a planar tree");
  order_cmd->add_option("--tree", state.tree, "Planar tree")->required();
  order_cmd->add_option("--kind", state.kind, "<, <<, <<< (or lt, ll, lll)")->required();
  on(order_cmd, [&] { return runner.order(); });

  auto* embeddings_cmd = compute->add_subcommand("embeddings", "Planar embeddings of a non-planar tree");
  embeddings_cmd->add_option("--tree", state.tree, "Non-planar tree")->required();
  on(embeddings_cmd, [&] { return runner.embeddings(); });

  auto* sections_cmd = compute->add_subcommand("sections", "All sections of one degree");
  degree_opt(sections_cmd);
  sections_cmd->add_flag("--list", state.list, "Print every section");
  on(sections_cmd, [&] { return runner.sections(); });

  auto* identity_cmd = compute->add_subcommand("identity", "Check one identity on a triple of trees");
  identity_cmd->add_option("--identity", state.identity, "pre-lie or nap")->required();
  identity_cmd->add_option("--x", state.x, "Tree")->required();
  identity_cmd->add_option("--y", state.y, "Tree")->required();
  identity_cmd->add_option("--z", state.z, "Tree")->required();
  on(identity_cmd, [&] { return runner.identity_op(); });

  auto* sequence_cmd = compute->add_subcommand("sequence", "Sums of N per degree with recursion and ODE");
  degree_opt(sequence_cmd);
  on(sequence_cmd, [&] { return runner.sequence(); });

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  for (std::string_view suite : verify_suite_names()) {
    auto* cmd = verify->add_subcommand(std::string(suite), "Verification suite " + std::string(suite));
    cmd->add_option("--max-degree", state.verify_degree, "Largest degree checked")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", state.verify.seed, "Seed for sampled checks");
    cmd->add_option("--samples", state.verify.samples, "Number of sampled checks");
    std::string name(suite);
    on(cmd, [&runner, name] { return runner.verify(name); });
  }

  auto* section = app.add_subcommand("section", "Section files");
  section->require_subcommand(1);
  auto* validate = section->add_subcommand("validate", "Check a section file");
  validate->add_option("--file", state.section_file, "Section file")->required()->check(CLI::ExistingFile);
  degree_opt(validate, false);
  on(validate, [&] { return runner.section_validate(); });
  auto* show = section->add_subcommand("show", "Print a section file or the default section");
  show->add_option("--file", state.section_file, "Section file")->check(CLI::ExistingFile);
  show->add_option("--default", state.default_degree, "Default section up to this degree");
  on(show, [&] { return runner.section_show(); });
  auto* from_basis = section->add_subcommand("from-basis", "Section of a tree-grounded basis");
  from_basis->add_flag("--ag", state.ag, "Use the Agrachev-Gamkrelidze basis of --degree");
  degree_opt(from_basis, false);
  monomial_in(from_basis);
  on(from_basis, [&] {
    if (state.ag && state.degree == 0) throw ParseError("--ag needs --degree");
    return runner.section_from_basis();
  });
  auto* to_basis = section->add_subcommand("to-basis", "Tree-grounded basis of a section");
  to_basis->add_option("--file", state.section_file, "Section file (default section otherwise)")
      ->check(CLI::ExistingFile);
  degree_opt(to_basis);
  on(to_basis, [&] { return runner.section_to_basis(); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadArguments;
  }
  try {
    return action ? action() : kBadArguments;
  } catch (const DegreeCapError& e) {
    err << "error: " << e.what() << '\n';
    return kDegreeCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }
}

const std::vector<OpEntry>& op_registry() {
  static const std::vector<OpEntry> registry = {
      {"parse", {"compute", "stats", "--tree", "(()(()))"}},
      {"serialize", {"compute", "stats", "--tree", "(()(()))"}},
      {"enumerate_planar", {"enumerate", "planar", "--degree", "4"}},
      {"enumerate_nonplanar", {"enumerate", "nonplanar", "--degree", "4"}},
      {"canonical_index", {"compute", "stats", "--tree", "((())())"}},
      {"potential_energy", {"compute", "stats", "--tree", "((())())"}},
      {"symmetry_factor", {"compute", "stats", "--nonplanar", "--tree", "(()())"}},
      {"vertex_order", {"compute", "order", "--tree", "(()(()))", "--kind", "<<"}},
      {"binary_join", {"compute", "join", "--left", ".", "--right", "[.,.]"}},
      {"rotation", {"compute", "rotation", "--binary", "[[.,.],.]"}},
      {"enumerate_binary", {"enumerate", "binary", "--degree", "4"}},
      {"left_butcher", {"compute", "product", "--kind", "left-butcher", "--left", "(())", "--right", "(())"}},
      {"butcher", {"compute", "product", "--kind", "butcher", "--left", "(())", "--right", "(())"}},
      {"left_graft", {"compute", "product", "--kind", "left-graft", "--left", "()", "--right", "(())"}},
      {"graft", {"compute", "product", "--kind", "graft", "--left", "()", "--right", "(())"}},
      {"bilinear_extend", {"compute", "product", "--kind", "graft", "--left", "() + (())", "--right", "(())"}},
      {"decompose", {"compute", "decompose", "--tree", "((())())"}},
      {"split_leftmost_branch", {"compute", "decompose", "--tree", "((())())", "--vertex", "0"}},
      {"psi", {"compute", "psi", "--tree", "(()()())"}},
      {"psi_inverse", {"compute", "psi-inverse", "--sum", "(()()()) + ((()()))"}},
      {"coeff_c_recursive", {"compute", "coeff", "--sigma", "(()(()))", "--tau", "(()()())", "--method", "recursive"}},
      {"coeff_c_bijections", {"compute", "coeff", "--sigma", "(()(()))", "--tau", "(()()())", "--method", "bijections"}},
      {"psi_matrix", {"compute", "psi-matrix", "--degree", "4"}},
      {"n_statistic", {"compute", "stats", "--tree", "(()()())"}},
      {"verify_a088716", {"compute", "sequence", "--degree", "5"}},
      {"forget_planarity", {"compute", "stats", "--tree", "(()(()))"}},
      {"planar_embeddings", {"compute", "embeddings", "--tree", "((())())"}},
      {"psi_bar", {"compute", "psi-bar", "--tree", "(()()())"}},
      {"count_tilde_b", {"compute", "alpha", "--s", "(()())", "--tau", "(()())", "--method", "bijections"}},
      {"alpha", {"compute", "alpha", "--s", "(()())", "--tau", "(()())", "--method", "fiber"}},
      {"alpha_matrix", {"compute", "alpha-matrix", "--degree", "4"}},
      {"default_section", {"section", "show", "--default", "4"}},
      {"all_sections", {"compute", "sections", "--degree", "4", "--list"}},
      {"section_parse", {"section", "validate", "--file", "@SECTION_FILE@", "--degree", "4"}},
      {"psi_tilde", {"compute", "beta", "--tree", "((())())"}},
      {"beta_matrix", {"compute", "beta", "--degree", "4", "--section", "@SECTION_FILE@"}},
      {"monomial_parse", {"compute", "lower-term", "--monomial", "[g,[g,g]]"}},
      {"load_monomial_list", {"compute", "grounded", "--monomials-file", "@MONOMIAL_FILE@"}},
      {"evaluate", {"compute", "evaluate", "--monomial", "[g,[g,g]]", "--product", "graft"}},
      {"lower_energy_term", {"compute", "lower-term", "--monomial", "[g,[g,g]]"}},
      {"planar_monomial", {"compute", "monomial-of", "--tree", "((())())"}},
      {"ag_basis", {"compute", "basis", "--degree", "5"}},
      {"ag_basis_multigen", {"compute", "basis", "--degree", "3", "--alphabet", "a,b"}},
      {"expand_basis", {"compute", "expand", "--ag", "--degree", "5"}},
      {"is_tree_grounded", {"compute", "grounded", "--monomial", "[g,[g,g]]", "--monomial", "[[g,g],g]"}},
      {"section_of_basis", {"section", "from-basis", "--ag", "--degree", "4"}},
      {"basis_of_section", {"section", "to-basis", "--degree", "4"}},
      {"prelie_defect", {"compute", "identity", "--identity", "pre-lie", "--x", "()", "--y", "(())", "--z", "(())"}},
      {"nap_holds", {"compute", "identity", "--identity", "nap", "--x", "()", "--y", "(())", "--z", "(())"}},
      {"check_identity_exhaustive", {"verify", "identities", "--max-degree", "5", "--samples", "0"}},
      {"check_identity_sampled", {"verify", "identities", "--max-degree", "4", "--samples", "8", "--seed", "3"}},
      {"tree_sum_parse", {"compute", "psi", "--sum", "2 (()()) - ((()))"}},
      {"to_json", {"--format", "json", "compute", "psi", "--tree", "(()())"}},
  };
  return registry;
}

}  // namespace prelie::cli
