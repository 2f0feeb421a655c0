// agkit command-line driver.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "agkit/agkit.hpp"

namespace {

using namespace agkit;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::NotFound, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A builtin name, a JSON file, or a comma-separated list of either (direct product).
FiniteAlgebra resolve_algebra(const std::string& arg, const Limits& limits) {
  if (arg.find(',') != std::string::npos) {
    std::vector<FiniteAlgebra> factors;
    std::stringstream ss(arg);
    std::string part;
    while (std::getline(ss, part, ',')) factors.push_back(resolve_algebra(part, limits));
    return direct_product(std::span<const FiniteAlgebra>(factors), limits);
  }
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return builtin(arg);
  if (std::filesystem::exists(arg)) return load_algebra(read_file(arg));
  throw Error(ErrorKind::NotFound, "'" + arg + "' is neither a builtin algebra nor a file");
}

Record info(std::string id, std::string label, bool verdict, Json detail) {
  return Record{std::move(id), std::move(label), verdict, std::nullopt, std::move(detail)};
}

std::string operation_tables(const FiniteAlgebra& A) {
  std::ostringstream out;
  const auto& l = A.labels();
  auto binary = [&](const char* op, auto&& f) {
    out << "\n| " << op << " |";
    for (const auto& y : l) out << " " << y << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < l.size(); ++i) out << "---|";
    out << "\n";
    for (Element x = 0; x < A.size(); ++x) {
      out << "| **" << l[x] << "** |";
      for (Element y = 0; y < A.size(); ++y) out << " " << l[f(x, y)] << " |";
      out << "\n";
    }
  };
  out << "## " << A.name() << " (" << A.size() << " elements)\n";
  binary("\\/", [&](Element x, Element y) { return A.join(x, y); });
  binary("/\\", [&](Element x, Element y) { return A.meet(x, y); });
  out << "\n| x | x* | x' |\n|---|---|---|\n";
  for (Element x = 0; x < A.size(); ++x) out << "| " << l[x] << " | " << l[A.star(x)] << " | " << l[A.quote(x)] << " |\n";
  return out.str();
}

Json partition_json(const FiniteAlgebra& A, const Partition& p) {
  std::vector<std::vector<std::string>> blocks(p.block_count());
  for (Element x = 0; x < A.size(); ++x) blocks[p.block(x)].push_back(A.labels()[x]);
  return Json(blocks);
}

Json hom_json(const FiniteAlgebra& A, const FiniteAlgebra& B, const Homomorphism& h) {
  Json m = Json::object();
  for (Element x = 0; x < A.size(); ++x) m[A.labels()[x]] = B.labels()[h.map[x]];
  return m;
}

struct Output {
  std::string format = "md";
  std::string preamble;  // extra markdown ahead of the record table

  int emit(const Report& report) const {
    if (format == "json") {
      std::cout << dump_report(report);
    } else {
      if (!preamble.empty()) std::cout << preamble << "\n";
      std::cout << render_markdown(report);
    }
    return report.exit_code();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finite Almost Gautama algebras and the amalgamation property of their subvarieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"md", "json"}));

  std::string a_arg, b_arg, variety_arg, sentence_arg, base_arg, left_arg, right_arg, out_path;
  std::size_t f_index = 0, g_index = 0, generators = 1, cap = 0;
  std::optional<bool> expect;
  bool all = false;

  auto* algebra_cmd = app.add_subcommand("algebra", "Inspect an algebra");
  algebra_cmd->require_subcommand(1);
  auto* show = algebra_cmd->add_subcommand("show", "Print an algebra's tables");
  show->add_option("algebra", a_arg, "Builtin name, JSON file, or comma-separated product")->required();

  auto* check = app.add_subcommand("check", "Decide a (quasi-)identity in a variety");
  check->add_option("--variety", variety_arg)->required();
  check->add_option("--sentence", sentence_arg)->required();
  check->add_option("--expect", expect, "Expected verdict; a mismatch exits 1");

  auto* homs = app.add_subcommand("homs", "Enumerate homomorphisms A -> B");
  homs->add_option("A", a_arg)->required();
  homs->add_option("B", b_arg)->required();

  auto* congruences = app.add_subcommand("congruences", "List the congruence lattice");
  congruences->add_option("algebra", a_arg)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Simple / SI / DI / (SC) and generated subvariety");
  classify_cmd->add_option("algebra", a_arg)->required();

  auto* amalgamate = app.add_subcommand("amalgamate", "Decide one diagram <base; left, right>");
  amalgamate->add_option("--variety", variety_arg)->required();
  amalgamate->add_option("--base", base_arg)->required();
  amalgamate->add_option("--left", left_arg)->required();
  amalgamate->add_option("--right", right_arg)->required();
  amalgamate->add_option("--f", f_index, "Index of the embedding base -> left");
  amalgamate->add_option("--g", g_index, "Index of the embedding base -> right");

  auto* classify_ap_cmd = app.add_subcommand("classify-ap", "Decide the amalgamation property");
  auto* ap_variety = classify_ap_cmd->add_option("--variety", variety_arg);
  auto* ap_all = classify_ap_cmd->add_flag("--all", all, "All eight subvarieties (default)");
  ap_variety->excludes(ap_all);

  auto* lemmas = app.add_subcommand("lemmas", "Check the lemma registry");
  lemmas->add_option("--variety", variety_arg);

  auto* apps = app.add_subcommand("applications", "TP, EI, joint embedding, model companion, 2 in Amal");
  apps->add_option("--variety", variety_arg)->required();

  auto* free = app.add_subcommand("free", "Build a finitely generated free algebra");
  free->add_option("--variety", variety_arg)->required();
  free->add_option("-n", generators, "Number of generators")->check(CLI::Range(0, 3));
  free->add_option("--cap", cap, "Element guard");

  auto* verify = app.add_subcommand("verify-paper", "Run every check against the expectation table");
  verify->add_option("--out", out_path, "Also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Limits limits = Limits::from_env();
    const Catalog& catalog = Catalog::standard();
    Report report;
    std::string command;
    for (const auto* sub : app.get_subcommands()) command = sub->get_name();
    report.command = command;

    if (show->parsed()) {
      const FiniteAlgebra A = resolve_algebra(a_arg, limits);
      report.command = "algebra show";
      report.records.push_back(info("algebra", A.name(), is_almost_gautama(A, limits), Json::parse(dump_algebra(A))));
      out.preamble = operation_tables(A);
    } else if (check->parsed()) {
      const VarietyDescriptor v = variety(variety_arg);
      const Sentence s = parse_sentence(sentence_arg);
      const VarietyVerdict r = quasi_identity_holds(v, s, catalog, limits);
      Json d = verdict_json(r, catalog);
      d["variety"] = to_string(v.name);
      d["sentence"] = to_string(s);
      report.records.push_back(Record{"check", "quasi-identity", r.holds, expect, d});
    } else if (homs->parsed()) {
      const FiniteAlgebra A = resolve_algebra(a_arg, limits);
      const FiniteAlgebra B = resolve_algebra(b_arg, limits);
      const auto hs = enumerate_homs(A, B);
      Json maps = Json::array();
      for (const auto& h : hs) maps.push_back({{"map", hom_json(A, B, h)}, {"injective", h.injective}, {"surjective", h.surjective}});
      report.records.push_back(info("homs", A.name() + " -> " + B.name(), !hs.empty(), {{"count", hs.size()}, {"homs", maps}}));
    } else if (congruences->parsed()) {
      const FiniteAlgebra A = resolve_algebra(a_arg, limits);
      const CongruenceLattice con = congruence_lattice(A, limits);
      Json list = Json::array();
      for (const auto& p : con.congruences) list.push_back(partition_json(A, p));
      report.records.push_back(info("congruences", A.name(), true, {{"count", con.size()}, {"congruences", list}}));
    } else if (classify_cmd->parsed()) {
      const FiniteAlgebra A = resolve_algebra(a_arg, limits);
      const Classification c = classify(A, limits);
      const SCReport sc = check_sc(A);
      Json d = Json::object();
      if (c.monolith) d["monolith"] = partition_json(A, *c.monolith);
      if (c.factor_pair) d["factor_pair"] = {partition_json(A, c.factor_pair->first), partition_json(A, c.factor_pair->second)};
      report.records.push_back(info("simple", A.name(), c.simple, Json::object()));
      report.records.push_back(info("subdirectly-irreducible", A.name(), c.subdirectly_irreducible, d));
      report.records.push_back(info("directly-indecomposable", A.name(), c.directly_indecomposable, Json::object()));
      report.records.push_back(info("sc", A.name(), sc.sc, Json::object()));
      const bool ag = is_almost_gautama(A, limits);
      report.records.push_back(info("almost-gautama", A.name(), ag, Json::object()));
      if (ag) {
        const GeneratedSubvariety g = generated_subvariety(A, catalog, limits);
        report.records.push_back(info("generated-subvariety", A.name(), g.agree(),
                                      {{"variety", to_string(g.variety.name)},
                                       {"by_base", g.by_base},
                                       {"by_images", g.by_images}}));
      }
    } else if (amalgamate->parsed()) {
      const VarietyDescriptor v = variety(variety_arg);
      const FiniteAlgebra A = resolve_algebra(base_arg, limits);
      const FiniteAlgebra B = resolve_algebra(left_arg, limits);
      const FiniteAlgebra C = resolve_algebra(right_arg, limits);
      const auto fs = enumerate_embeddings(A, B);
      const auto gs = enumerate_embeddings(A, C);
      if (f_index >= fs.size() || g_index >= gs.size()) {
        throw Error(ErrorKind::OutOfRange, "embedding index out of range (" + std::to_string(fs.size()) + " embeddings into " +
                                               B.name() + ", " + std::to_string(gs.size()) + " into " + C.name() + ")");
      }
      const Diagram d = Diagram::make(A, B, C, fs[f_index], gs[g_index]);
      const AmalgamationResult r = decide_amalgamation(v, d, catalog, limits);
      Json detail{{"variety", to_string(v.name)}, {"diagram", diagram_json(d)}, {"certificate", certificate_json(d, r, catalog)}};
      if (const auto* o = std::get_if<Obstruction>(&r)) detail["rechecked"] = recheck_obstruction(v, d, *o, catalog);
      report.records.push_back(info("amalgamate", d.describe(), is_amalgam(r), detail));
    } else if (classify_ap_cmd->parsed()) {
      Verifier p("classify-ap", catalog, limits);
      std::vector<APReport> reports;
      for (auto v : all_variety_names()) {
        if (!variety_arg.empty() && variety(variety_arg).name != v) continue;
        verify_ap(p, v);
        reports.push_back(p.ap(v));
      }
      report = std::move(p.report);
      out.preamble = render_ap_lattice(reports, catalog);
    } else if (lemmas->parsed()) {
      Verifier p("lemmas", catalog, limits);
      std::optional<VarietyName> only;
      if (!variety_arg.empty()) only = variety(variety_arg).name;
      verify_lemmas(p, only);
      report = std::move(p.report);
    } else if (apps->parsed()) {
      Verifier p("applications", catalog, limits);
      verify_applications(p, variety(variety_arg).name);
      report = std::move(p.report);
    } else if (free->parsed()) {
      if (cap != 0) limits.free_elements = cap;
      const VarietyDescriptor v = variety(variety_arg);
      const FreeAlgebra F = free_algebra(v, generators, catalog, limits);
      report.records.push_back(info("free", F.algebra.name(), true,
                                    {{"size", F.algebra.size()}, {"generators", F.generator_names}, {"elements", F.algebra.labels()}}));
    } else if (verify->parsed()) {
      report = verify_paper(catalog, limits);
      if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error(ErrorKind::NotFound, "cannot write '" + out_path + "'");
        file << dump_report(report);
      }
    }
    return out.emit(report);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return 2;
  }
}
