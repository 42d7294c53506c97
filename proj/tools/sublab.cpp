#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sublab/classes.hpp"
#include "sublab/corpus.hpp"
#include "sublab/errors.hpp"
#include "sublab/lattice.hpp"
#include "sublab/subnormal.hpp"
#include "sublab/suites.hpp"

namespace {

using namespace sublab;

PermGroup resolve_group(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) {
    return builtin_group(source.substr(8));
  }
  if (source.rfind("file:", 0) == 0) {
    return load_group_file(source.substr(5));
  }
  throw ArgumentError("group source must be builtin:<name> or file:<path>");
}

StepPolicy resolve_policy(const std::string& name, int t) {
  if (name == "subnormal") return StepPolicy::subnormal();
  if (name == "psub") return StepPolicy::p_sub();
  if (name == "kpsub") return StepPolicy::k_p_sub();
  if (name == "kpt") return StepPolicy::k_p_t(t);
  auto formation_arg = [](const std::string& spec) {
    if (spec.rfind("UK", 0) == 0) {
      return FormationSpec::u_k(std::stoi(spec.substr(2)));
    }
    if (spec == "N") return FormationSpec::nilpotent();
    if (spec == "U") return FormationSpec::supersoluble();
    if (spec == "S") return FormationSpec::soluble();
    throw ArgumentError("unknown formation: " + spec);
  };
  if (name.rfind("fsub:", 0) == 0) {
    return StepPolicy::f_sub(formation_arg(name.substr(5)));
  }
  if (name.rfind("kfsub:", 0) == 0) {
    return StepPolicy::k_f_sub(formation_arg(name.substr(6)));
  }
  throw ArgumentError("unknown policy: " + name);
}

// Comma- or whitespace-separated cycle words, e.g. "(1 2)(3 4), (1 3)(2 4)".
std::vector<Permutation> parse_generators(const std::string& text,
                                          int degree) {
  std::vector<Permutation> gens;
  std::string word;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (word.find_first_not_of(" \t") != std::string::npos) {
        gens.push_back(Permutation::from_cycles(word, degree));
      }
      word.clear();
    } else {
      word += c;
    }
  }
  if (word.find_first_not_of(" \t") != std::string::npos) {
    gens.push_back(Permutation::from_cycles(word, degree));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return gens;
}

int cmd_query(const std::string& group_src, const std::string& subgroup,
              const std::string& policy_name, int t, bool witness) {
  PermGroup G = resolve_group(group_src);
  StepPolicy policy = resolve_policy(policy_name, t);
  auto gens = parse_generators(subgroup, G.degree());
  for (const auto& g : gens) {
    if (!G.contains(g)) {
      throw MembershipError("generator " + g.cycles() +
                            " is not in the group");
    }
  }
  PermGroup H(G.degree(), gens);
  auto L = lattice_of(G);
  int h = L->node_of_group(H);
  auto verdict = is_subnormal_variant(*L, h, policy, witness);
  std::cout << (verdict.subnormal ? "true" : "false") << "\n";
  if (verdict.subnormal && witness && verdict.witness) {
    std::cout << verdict.witness->render(*L);
  }
  return verdict.subnormal ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& t_spec,
               const std::string& corpus_spec, const std::string& report_path,
               int jobs) {
  std::vector<int> t_values;
  std::stringstream ts(t_spec);
  std::string tok;
  while (std::getline(ts, tok, ',')) {
    if (!tok.empty()) t_values.push_back(std::stoi(tok));
  }
  if (t_values.empty()) throw ArgumentError("empty --t list");

  Corpus corpus;
  if (corpus_spec == "standard") {
    corpus = standard_corpus();
  } else {
    // Treat as a comma-separated list of group files.
    std::stringstream cs(corpus_spec);
    std::string path;
    while (std::getline(cs, path, ',')) {
      if (path.empty()) continue;
      corpus.entries.push_back({path, load_group_file(path), "file"});
    }
  }

  std::vector<SuiteId> ids;
  if (suite == "all") {
    ids = all_suites();
  } else {
    ids.push_back(suite_from_name(suite));
  }

  std::string combined;
  int total_fail = 0;
  for (SuiteId id : ids) {
    Report r = run_suite(id, corpus, t_values, jobs);
    total_fail += r.failed();
    combined += r.render();
    std::cout << r.render();
  }
  if (!report_path.empty()) {
    std::FILE* f = std::fopen(report_path.c_str(), "wb");
    if (!f) throw FormatError("cannot open report file: " + report_path);
    std::fwrite(combined.data(), 1, combined.size(), f);
    std::fclose(f);
  }
  return total_fail == 0 ? 0 : 1;
}

int cmd_lattice(const std::string& group_src, const std::string& dot_path) {
  PermGroup G = resolve_group(group_src);
  auto L = lattice_of(G);
  std::string text = L->dot();
  if (dot_path.empty()) {
    std::cout << text;
  } else {
    std::FILE* f = std::fopen(dot_path.c_str(), "wb");
    if (!f) throw FormatError("cannot open output file: " + dot_path);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subgroup chain analysis for finite permutation groups"};
  app.require_subcommand(1);

  std::string group_src, subgroup, policy = "subnormal";
  int t = 1;
  bool witness = false;
  auto* query = app.add_subcommand("query", "decide one subnormality query");
  query->add_option("--group", group_src, "builtin:<name> or file:<path>")
      ->required();
  query->add_option("--subgroup", subgroup, "generators in cycle notation")
      ->required();
  query->add_option("--policy", policy,
                    "subnormal|psub|kpsub|kpt|fsub:<F>|kfsub:<F>");
  query->add_option("--t", t, "parameter t for kpt");
  query->add_flag("--witness", witness, "print the chain witness");

  std::string suite = "all", t_spec = "1,2,3", corpus_spec = "standard";
  std::string report_path;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--t", t_spec, "comma-separated t values");
  verify->add_option("--corpus", corpus_spec,
                     "'standard' or comma-separated group files");
  verify->add_option("--report", report_path, "write the report here");
  verify->add_option("--jobs", jobs, "worker count");

  std::string lat_group, dot_path;
  auto* lattice = app.add_subcommand("lattice", "export a subgroup lattice");
  lattice->add_option("--group", lat_group, "builtin:<name> or file:<path>")
      ->required();
  lattice->add_option("--emit-lattice-dot", dot_path, "DOT output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (query->parsed()) {
      return cmd_query(group_src, subgroup, policy, t, witness);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, t_spec, corpus_spec, report_path, jobs);
    }
    if (lattice->parsed()) {
      return cmd_lattice(lat_group, dot_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
