// finring: analyze finite rings given as table expressions, build and
// check semidirect products, and run the full verification catalogue.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "finring/catalogue.hpp"
#include "finring/construct.hpp"
#include "finring/expr.hpp"
#include "finring/io.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

finring::FiniteRing eval_expr(const std::string& text) {
  return finring::eval(*finring::parse(text));
}

std::string labels_of(const finring::FiniteRing& r,
                      const finring::IndexSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += r.label(s[i]);
  }
  return out + "}";
}

int cmd_analyze(const std::string& expr, bool as_json) {
  finring::FiniteRing r = eval_expr(expr);
  finring::AnalysisReport rep = finring::analyze(r);
  if (as_json)
    std::cout << finring::analysis_to_json(rep).dump(2) << '\n';
  else
    std::cout << finring::format_analysis(r, rep);
  return 0;
}

int cmd_star(const std::string& expr, bool as_json) {
  finring::FiniteRing r = eval_expr(expr);
  auto w = finring::check_star_decomposition(r);
  if (as_json) {
    finring::json doc;
    doc["ring"] = r.provenance;
    doc["star"] = w ? finring::star_to_json(r, *w) : finring::json(nullptr);
    std::cout << doc.dump(2) << '\n';
  } else if (w) {
    std::cout << "(*) holds for " << r.provenance << '\n';
    std::cout << "maximal ideal m = " << labels_of(r, w->m.members) << '\n';
    std::cout << "subfield kappa = " << labels_of(r, w->kappa) << '\n';
    std::cout << "section R/m -> R:";
    for (int q = 0; q < w->quo.quotient.order; ++q)
      std::cout << ' ' << w->quo.quotient.label(q) << "->"
                << r.label(w->section.map[q]);
    std::cout << '\n';
  } else {
    auto maxi = finring::maximal_ideals(r);
    auto fields = finring::subfields(r);
    std::cout << "(*) fails: ";
    if (fields.empty())
      std::cout << "no subfield exists";
    else if (maxi.empty())
      std::cout << "no maximal ideal exists";
    else
      std::cout << "no pair with |m|*|kappa| = " << r.order;
    std::cout << " (searched " << maxi.size() << " maximal ideals x "
              << fields.size() << " subfields)\n";
  }
  return w ? 0 : kExitCheckFailure;
}

int cmd_classify(const std::string& expr, bool as_json) {
  finring::FiniteRing r = eval_expr(expr);
  finring::Classification c = finring::classify(r);
  if (as_json) {
    std::cout << finring::classification_to_json(r, c).dump(2) << '\n';
    return 0;
  }
  std::cout << "ring: " << r.provenance << '\n';
  std::cout << "(*): " << (c.star ? "holds" : "fails") << '\n';
  std::cout << "class (A): " << (c.class_a ? "yes" : "no");
  if (c.a_witness)
    std::cout << "  [kappa = " << labels_of(r, c.a_witness->kappa) << "]";
  std::cout << '\n';
  std::cout << "class (B): " << (c.class_b ? "yes" : "no");
  if (c.b_witness)
    std::cout << "  [kappa = " << labels_of(r, c.b_witness->kappa)
              << ", m = " << labels_of(r, c.b_witness->m.members) << "]";
  std::cout << '\n';
  std::cout << "field: " << (c.field ? "yes" : "no") << '\n';
  return 0;
}

int cmd_cayley(const std::string& expr, bool as_json) {
  finring::FiniteRing r = eval_expr(expr);
  if (as_json) {  // the importable table document
    std::cout << finring::ring_to_json(r).dump(2) << '\n';
    return 0;
  }
  std::cout << "ring: " << r.provenance << "  (order " << r.order << ")\n\n";
  std::cout << finring::format_table(r, false) << '\n';
  std::cout << finring::format_table(r, true);
  return 0;
}

int cmd_search_actions(const std::string& b_expr, const std::string& s_expr,
                       bool as_json) {
  finring::FiniteRing b = eval_expr(b_expr);
  finring::FiniteRing s = eval_expr(s_expr);
  auto pairs = finring::enumerate_action_pairs(b, s);
  if (as_json) {
    finring::json doc;
    doc["B"] = b.provenance;
    doc["S"] = s.provenance;
    doc["count"] = pairs.size();
    finring::json arr = finring::json::array();
    for (const auto& spec : pairs) arr.push_back(finring::sdspec_to_json(spec));
    doc["pairs"] = std::move(arr);
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  std::cout << "B = " << b.provenance << ", S = " << s.provenance << ": "
            << pairs.size() << " action pair(s)\n";
  for (size_t i = 0; i < pairs.size(); ++i) {
    std::cout << "pair " << i + 1 << ":\n";
    for (int u = 0; u < s.order; ++u) {
      std::cout << "  lambda(" << s.label(u) << ") = [";
      for (int x = 0; x < b.order; ++x) {
        if (x) std::cout << ' ';
        std::cout << b.label(pairs[i].lambda[u][x]);
      }
      std::cout << "]  rho(" << s.label(u) << ") = [";
      for (int x = 0; x < b.order; ++x) {
        if (x) std::cout << ' ';
        std::cout << b.label(pairs[i].rho[u][x]);
      }
      std::cout << "]\n";
    }
  }
  return 0;
}

int cmd_verify_paper(bool as_json, const std::string& seedfile) {
  auto entries = finring::default_catalogue();
  if (!seedfile.empty()) {
    std::ifstream in(seedfile);
    if (!in) {
      std::cerr << "cannot open seed file: " << seedfile << '\n';
      return kExitInput;
    }
    std::string line;
    while (std::getline(in, line)) {
      size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      finring::FiniteRing r = eval_expr(line.substr(first));
      entries.push_back(
          finring::CatalogueEntry{r.provenance, std::move(r), std::nullopt});
    }
  }
  finring::CatalogueReport rep = finring::verify_catalogue(entries);
  if (as_json)
    std::cout << finring::matrix_to_json(rep).dump(2) << '\n';
  else
    std::cout << finring::format_matrix(rep);
  return rep.all_pass() ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-ring workbench: Cayley-table rings, structural "
               "analysis, semidirect products, splitting checks"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand name

  int cap = 0;
  app.add_option("--cap", cap, "override the global order cap");
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string expr, expr2, seedfile;
  auto* analyze = app.add_subcommand("analyze", "structure report");
  analyze->add_option("EXPR", expr, "ring expression")->required();
  auto* star = app.add_subcommand("star", "splitting witness or failure");
  star->add_option("EXPR", expr, "ring expression")->required();
  auto* classify = app.add_subcommand("classify", "class (A)/(B) report");
  classify->add_option("EXPR", expr, "ring expression")->required();
  auto* cayley = app.add_subcommand("cayley", "addition and multiplication tables");
  cayley->add_option("EXPR", expr, "ring expression")->required();
  auto* search = app.add_subcommand("search-actions",
                                    "enumerate action pairs for B and S");
  search->add_option("B_EXPR", expr, "first factor (rng)")->required();
  search->add_option("S_EXPR", expr2, "second factor (unital)")->required();
  auto* verify = app.add_subcommand("verify-paper",
                                    "run the full verification catalogue");
  verify->add_option("--seedfile", seedfile,
                     "file of extra ring expressions, one per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (const char* env = std::getenv("FINRING_CAP"); env && cap == 0)
    cap = std::atoi(env);
  if (cap != 0) {
    try {
      finring::set_order_cap(cap);
    } catch (const std::exception& e) {
      std::cerr << e.what() << '\n';
      return kExitUsage;
    }
  }

  try {
    if (analyze->parsed()) return cmd_analyze(expr, as_json);
    if (star->parsed()) return cmd_star(expr, as_json);
    if (classify->parsed()) return cmd_classify(expr, as_json);
    if (cayley->parsed()) return cmd_cayley(expr, as_json);
    if (search->parsed()) return cmd_search_actions(expr, expr2, as_json);
    if (verify->parsed()) return cmd_verify_paper(as_json, seedfile);
  } catch (const finring::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  } catch (const finring::EvalError& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitUsage;
}
