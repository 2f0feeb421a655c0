// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "agkit/agkit.hpp"
#include "oracles.hpp"

using namespace agkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::printf("%s %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  failures += !ok;
}

const std::set<VarietyName> kWithAP = {VarietyName::BA, VarietyName::RDBLST, VarietyName::RKLST, VarietyName::DMBA};

void criterion1() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& v : all_varieties()) ok = ok && classify_ap(v).has_ap == kWithAP.contains(v.name);
  const double s = seconds_since(t0);
  report(1, ok && s < 60, "AP verdicts for all eight varieties (" + std::to_string(s) + " s)");
}

void criterion2() {
  bool ok = true;
  std::size_t products = 0;
  const auto& names = builtin_names();
  for (const auto& n : names) {
    const Classification c = classify(builtin(n));
    ok = ok && c.simple && c.subdirectly_irreducible && c.directly_indecomposable && check_sc(builtin(n)).sc;
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const FiniteAlgebra P = direct_product({builtin(names[i]), builtin(names[j])});
      const Classification c = classify(P);
      ok = ok && !c.simple && !c.subdirectly_irreducible && !c.directly_indecomposable && !check_sc(P).sc;
      ++products;
    }
  }
  report(2, ok && products == 6, "SI classification of 4 builtins and 6 products");
}

void criterion3() {
  const BaseMatrix m = verify_bases();
  report(3, m.matches(), "base matrix " + std::to_string(m.matching_cells()) + "/32 cells");
}

void criterion4() {
  const std::vector<std::tuple<const char*, const char*, const char*>> cases = {
      {"G", "3_dblst", "3_klst"},
      {"V_DBLST_DMBA", "3_dblst", "4_dmba"},
      {"V_KLST_DMBA", "3_klst", "4_dmba"},
      {"AG", "3_dblst", "4_dmba"},
      {"AG", "3_klst", "4_dmba"},
  };
  bool ok = true;
  for (const auto& [v, b, c] : cases) {
    const Diagram d = Diagram::first(builtin("2"), builtin(b), builtin(c));
    const AmalgamationResult r = decide_amalgamation(variety(v), d);
    ok = ok && !is_amalgam(r) && recheck_obstruction(variety(v), d, std::get<Obstruction>(r));
  }
  report(4, ok, "obstructions for the five known diagrams, rechecked over all maps");
}

void criterion5() {
  const auto t0 = Clock::now();
  const LemmaSuiteReport r = lemma_suite();
  std::size_t contradictions = 0;
  for (const auto& res : r.results) contradictions += res.record.id.starts_with("T");
  const double s = seconds_since(t0);
  report(5, r.mismatches() == 0 && contradictions == 4 && s < 5,
         std::to_string(r.results.size()) + " registered sentences, " + std::to_string(r.mismatches()) +
             " mismatches (" + std::to_string(s) + " s)");
}

void criterion6() {
  bool ok = true;
  for (const auto& n : builtin_names()) {
    ok = ok && discriminator_is_term_op(builtin(n)).is_term_operation &&
         !discriminator_is_term_op(builtin(n), Ops::Lattice).is_term_operation;
  }
  report(6, ok, "discriminator on builtins and their lattice reducts");
}

void criterion7() {
  bool ok = true;
  std::size_t pairs = 0, principal = 0;
  for (const auto& a : builtin_names()) {
    for (const auto& b : builtin_names()) {
      ok = ok && enumerate_homs(builtin(a), builtin(b)).size() == oracle::all_homs(builtin(a), builtin(b)).size();
      ++pairs;
    }
  }
  for (const auto& A : oracle::small_algebras(6)) {
    for (Element x = 0; x < A.size(); ++x) {
      for (Element y = 0; y < A.size(); ++y) {
        ok = ok && principal_congruence(A, x, y) == Partition::from_labels(oracle::principal(A, x, y));
        ++principal;
      }
    }
  }
  report(7, ok && pairs == 16,
         std::to_string(pairs) + " hom counts and " + std::to_string(principal) + " principal congruences vs brute force");
}

void criterion8() {
  bool ok = true;
  for (const auto& v : all_varieties()) {
    const Applications a = applications(v);
    const bool ap = kWithAP.contains(v.name);
    ok = ok && a.tp == ap && a.ei == ap;
    ok = ok && refute_amal_base(v, builtin("2")).has_value() == !ap;
    if (v.name == VarietyName::G) {
      for (const auto& j : a.jep_on_si_pairs) {
        if (j.left == "3_dblst" && j.right == "3_klst") ok = ok && !j.embeddable;
      }
    }
  }
  report(8, ok, "transferability, injectives, joint embedding and 2 as amalgamation base");
}

std::vector<Sentence> registered_sentences() {
  std::vector<Sentence> out;
  for (const auto& r : lemma_registry()) out.push_back(r.sentence);
  for (auto name : all_axiom_systems()) {
    for (const auto& s : axiom_system(name).sentences) out.push_back(s.sentence);
  }
  for (const auto& v : all_varieties()) {
    for (const auto& s : v.base) out.push_back(s.sentence);
  }
  return out;
}

void criterion9() {
  std::mt19937 rng(0x5eed);
  const auto& si = Catalog::standard().si;
  const auto sentences = registered_sentences();
  std::size_t violations = 0, holding = 0;
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  for (int trial = 0; trial < 500; ++trial) {
    std::vector<FiniteAlgebra> factors;
    for (std::size_t k = 1 + pick(3); factors.size() < k;) factors.push_back(si[pick(si.size())]);
    const FiniteAlgebra P = direct_product(std::span<const FiniteAlgebra>(factors));
    Sentence s;
    do {
      s = sentences[pick(sentences.size())];
    } while (std::pow(static_cast<double>(P.size()), static_cast<double>(variables(s).size())) > 2e6);
    bool all = true;
    for (const auto& f : factors) all = all && holds_in(f, s).holds;
    if (!all) continue;
    ++holding;
    if (!holds_in(P, s).holds) ++violations;
    const auto subs = enumerate_subalgebras(P);
    if (!holds_in(induced_subalgebra(P, subs[pick(subs.size())]), s).holds) ++violations;
  }

  std::size_t diagrams = 0, amalgams = 0;
  const auto varieties = all_varieties();
  while (diagrams < 200) {
    const VarietyDescriptor& v = varieties[pick(varieties.size())];
    const auto idx = v.si_indices();
    auto member = [&] {
      if (pick(2) == 0) return si[idx[pick(idx.size())]];
      return direct_product({si[idx[pick(idx.size())]], si[idx[pick(idx.size())]]});
    };
    const FiniteAlgebra A = si[idx[pick(idx.size())]];
    const FiniteAlgebra B = member(), C = member();
    if (B.size() > 9 || C.size() > 9) continue;
    const auto fs = enumerate_embeddings(A, B);
    const auto gs = enumerate_embeddings(A, C);
    if (fs.empty() || gs.empty()) continue;
    const Diagram d = Diagram::make(A, B, C, fs[pick(fs.size())], gs[pick(gs.size())]);
    ++diagrams;
    const AmalgamationResult r = decide_amalgamation(v, d);
    if (const auto* a = std::get_if<Amalgam>(&r)) {
      ++amalgams;
      if (!verify_amalgam(d, *a) || !satisfies_base(a->D, v)) ++violations;
      for (const auto& w : varieties) {
        if (v.leq(w) && !is_amalgam(decide_amalgamation(w, d))) ++violations;
      }
    } else if (!recheck_obstruction(v, d, std::get<Obstruction>(r))) {
      ++violations;
    }
  }
  report(9, violations == 0 && holding > 0 && amalgams > 0,
         "500 preservation trials (" + std::to_string(holding) + " with all factors satisfying), " +
             std::to_string(diagrams) + " diagram trials (" + std::to_string(amalgams) + " amalgams), " +
             std::to_string(violations) + " violations");
}

}  // namespace

int main() {
  for (auto* c : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8,
                  criterion9}) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("FAIL: uncaught error: %s\n", e.what());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
