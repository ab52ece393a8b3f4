// Command-line front end: expand / check / overlay / selection / sixj with
// deterministic JSON on stdout and a short human summary on stderr.

#include "gl6j/parse.hpp"
#include "gl6j/sixj.hpp"
#include "gl6j/weylreal.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace gl6j;
using json = nlohmann::ordered_json;

namespace {

int worker_threads() {
  const char *env = std::getenv("GL6J_THREADS");
  if (env == nullptr)
    return 1;
  int t = std::atoi(env);
  return t < 1 ? 1 : (t > 64 ? 64 : t);
}

json weight_json(const Weight &w) { return json(w); }

json letter_weights_json(const std::array<Weight, 3> &w) {
  json out;
  out["a"] = weight_json(w[0]);
  out["b"] = weight_json(w[1]);
  out["c"] = weight_json(w[2]);
  return out;
}

json registry_json(const Expansion &e) {
  json out = json::array();
  for (const ZVarInfo &info : e.registry) {
    json item;
    item["zvar"] = info.id;
    item["coeff"] = static_cast<long long>(info.z);
    out.push_back(item);
  }
  return out;
}

json poly_json(const SparsePoly &p) {
  json out = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json item;
    item["monomial"] = it->first.render();
    item["coeff"] = fraction_string(it->second);
    out.push_back(item);
  }
  return out;
}

Expansion expand_checked(const std::string &expr, int n) {
  BracketSpec spec = parse_bracket_expr(expr, n);
  std::vector<std::string> diag = validate(spec);
  if (!diag.empty())
    throw std::invalid_argument(diag.front());
  return expand(spec);
}

void emit(const json &doc, const std::string &outputPath) {
  std::string text = doc.dump(2) + "\n";
  if (outputPath.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(outputPath, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot open output file " + outputPath);
    out << text;
  }
}

json problem_weights_json(const SixJProblem &p) {
  json out;
  for (const auto &[name, w] : representation_weights(p.letter_weights))
    out[name] = weight_json(w);
  return out;
}

int run_expand(const std::string &expr, int n, const std::string &output) {
  Expansion e = expand_checked(expr, n);
  json doc;
  doc["command"] = "expand";
  doc["n"] = n;
  doc["expr"] = e.spec.render();
  doc["weights"] = letter_weights_json(infer_weights(e.spec));
  doc["poly"] = registry_json(e);
  doc["zpoly"] = poly_json(e.zpoly);
  if (!e.warnings.empty())
    doc["warning"] = e.warnings.back();
  emit(doc, output);
  std::cerr << "expanded " << e.spec.render() << ": " << e.registry.size()
            << " determinant monomials\n";
  return 0;
}

int run_check(const std::string &expr, int n, const std::string &output) {
  Expansion e = expand_checked(expr, n);
  if (e.zpoly.is_zero())
    throw std::invalid_argument("zero expansion has no weight to check");
  SemiInvariance si = check_semi_invariant(to_determinant_poly(e), n);
  json doc;
  doc["command"] = "check";
  doc["n"] = n;
  doc["expr"] = e.spec.render();
  doc["is_semi_invariant"] = si.is_semi_invariant;
  doc["weight"] = si.weight ? weight_json(*si.weight) : json(nullptr);
  emit(doc, output);
  std::cerr << "semi-invariant: " << (si.is_semi_invariant ? "yes" : "no")
            << "\n";
  return 0;
}

int run_overlay(const std::string &monomialText, const std::vector<int> &w,
                int n, const std::string &output) {
  Monomial m = parse_matrix_monomial(monomialText);
  Weight weight(w.begin(), w.end());
  if (static_cast<int>(weight.size()) != n)
    throw std::invalid_argument("weight length must equal n");
  SparsePoly overlaid = young_overlay(m, weight);
  json doc;
  doc["command"] = "overlay";
  doc["n"] = n;
  doc["monomial"] = m.render();
  doc["weight"] = weight_json(weight);
  doc["matrix_form"] = poly_json(overlaid);
  try {
    doc["det_form"] = poly_json(collect_determinants(overlaid));
  } catch (const CollectError &err) {
    doc["det_form_error"] = err.what();
  }
  emit(doc, output);
  std::cerr << "overlay has " << overlaid.term_count() << " matrix terms\n";
  return 0;
}

SixJProblem build_cli_problem(int n, const std::array<std::string, 4> &exprs) {
  std::array<BracketSpec, 4> specs;
  for (int i = 0; i < 4; ++i) {
    specs[i] = parse_bracket_expr(exprs[i], n);
    std::vector<std::string> diag = validate(specs[i]);
    if (!diag.empty())
      throw std::invalid_argument("f" + std::to_string(i + 1) + ": " +
                                  diag.front());
  }
  return build_problem(n, specs);
}

int run_selection(int n, const std::array<std::string, 4> &exprs,
                  const std::string &output) {
  SixJProblem p = build_cli_problem(n, exprs);
  SelectionSet sel = selection_set(p);
  json doc;
  doc["command"] = "selection";
  doc["n"] = n;
  for (int i = 0; i < 4; ++i)
    doc["f" + std::to_string(i + 1)] = p.specs[i].render();
  doc["selection_size"] = sel.quadruples.size();
  doc["weights"] = problem_weights_json(p);
  if (!p.warnings.empty())
    doc["warnings"] = json(p.warnings);
  json quads = json::array();
  for (const auto &q : sel.quadruples) {
    json item = json::array();
    for (int i = 0; i < 4; ++i)
      item.push_back(sel.supports[i][q[i]].zmono.render());
    quads.push_back(item);
  }
  doc["quadruples"] = quads;
  emit(doc, output);
  std::cerr << "selection set has " << sel.quadruples.size()
            << " quadruples\n";
  return 0;
}

int run_sixj(int n, const std::array<std::string, 4> &exprs, bool withOracle,
             const std::string &output) {
  SixJProblem p = build_cli_problem(n, exprs);
  SelectionSet sel = selection_set(p);
  Rat value = sixj_value(p, sel, worker_threads());
  json doc;
  doc["command"] = "sixj";
  doc["n"] = n;
  for (int i = 0; i < 4; ++i)
    doc["f" + std::to_string(i + 1)] = p.specs[i].render();
  doc["value"] = fraction_string(value);
  doc["selection_size"] = sel.quadruples.size();
  doc["weights"] = problem_weights_json(p);
  if (withOracle)
    doc["oracle"] = fraction_string(sixj_oracle(p));
  if (!p.warnings.empty())
    doc["warnings"] = json(p.warnings);
  emit(doc, output);
  std::cerr << "6j value = " << fraction_string(value) << " over "
            << sel.quadruples.size() << " quadruples\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact semi-invariants and 6j-symbols of gl(n) triple tensor "
               "products"};
  app.require_subcommand(1);

  int n = 2;
  std::string expr, output, monomialText;
  std::vector<int> weightArg;
  std::array<std::string, 4> exprs;
  bool withOracle = false;

  CLI::App *cmdExpand =
      app.add_subcommand("expand", "Expand a bracket expression into "
                                   "determinant monomials");
  cmdExpand->add_option("--n", n, "rank")->required();
  cmdExpand->add_option("--expr", expr, "bracket expression")->required();
  cmdExpand->add_option("--output", output, "write JSON here");

  CLI::App *cmdCheck =
      app.add_subcommand("check", "Expand and run the semi-invariance check");
  cmdCheck->add_option("--n", n, "rank")->required();
  cmdCheck->add_option("--expr", expr, "bracket expression")->required();
  cmdCheck->add_option("--output", output, "write JSON here");

  CLI::App *cmdOverlay =
      app.add_subcommand("overlay", "Apply the Young symmetrizer overlay to "
                                    "a matrix monomial");
  cmdOverlay->add_option("--n", n, "rank")->required();
  cmdOverlay->add_option("--monomial", monomialText, "e.g. \"a1^1 a2^1 a3^2\"")
      ->required();
  cmdOverlay->add_option("--weight", weightArg, "weight components")
      ->required()
      ->delimiter(',');
  cmdOverlay->add_option("--output", output, "write JSON here");

  CLI::App *cmdSelection = app.add_subcommand(
      "selection", "Enumerate the coherent support quadruples");
  CLI::App *cmdSixj =
      app.add_subcommand("sixj", "Evaluate the 6j contraction");
  for (CLI::App *cmd : {cmdSelection, cmdSixj}) {
    cmd->add_option("--n", n, "rank")->required();
    for (int i = 0; i < 4; ++i)
      cmd->add_option("--f" + std::to_string(i + 1), exprs[i],
                      "bracket expression")
          ->required();
    cmd->add_option("--output", output, "write JSON here");
  }
  cmdSixj->add_flag("--oracle", withOracle,
                    "also evaluate the contraction oracle");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmdExpand->parsed())
      return run_expand(expr, n, output);
    if (cmdCheck->parsed())
      return run_check(expr, n, output);
    if (cmdOverlay->parsed())
      return run_overlay(monomialText, weightArg, n, output);
    if (cmdSelection->parsed())
      return run_selection(n, exprs, output);
    if (cmdSixj->parsed())
      return run_sixj(n, exprs, withOracle, output);
  } catch (const ParseError &err) {
    json doc;
    doc["error"] = {{"message", err.what()},
                    {"position", static_cast<long long>(err.position)}};
    std::cout << doc.dump(2) << "\n";
    return 2;
  } catch (const std::exception &err) {
    json doc;
    doc["error"] = {{"message", err.what()}};
    std::cout << doc.dump(2) << "\n";
    return 2;
  }
  return 1;
}
