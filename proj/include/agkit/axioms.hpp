#ifndef AGKIT_AXIOMS_HPP
#define AGKIT_AXIOMS_HPP

// Named axiom systems over the fixed signature. The bounded distributive lattice
// axioms are enforced by FiniteAlgebra itself and are not repeated here.

#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "term.hpp"

namespace agkit {

enum class AxiomSystemName {
  P_ALGEBRA,
  STONE,
  DUAL_STONE,
  DE_MORGAN,
  KLEENE,
  DQD,
  RDBLST,
  RKLST,
  GAUTAMA,
  ALMOST_GAUTAMA,
};

struct LabeledSentence {
  std::string label;
  std::string text;
  Sentence sentence;
};

struct AxiomSystem {
  AxiomSystemName name;
  std::vector<LabeledSentence> sentences;
};

inline const char* to_string(AxiomSystemName n) {
  switch (n) {
    case AxiomSystemName::P_ALGEBRA: return "P_ALGEBRA";
    case AxiomSystemName::STONE: return "STONE";
    case AxiomSystemName::DUAL_STONE: return "DUAL_STONE";
    case AxiomSystemName::DE_MORGAN: return "DE_MORGAN";
    case AxiomSystemName::KLEENE: return "KLEENE";
    case AxiomSystemName::DQD: return "DQD";
    case AxiomSystemName::RDBLST: return "RDBLST";
    case AxiomSystemName::RKLST: return "RKLST";
    case AxiomSystemName::GAUTAMA: return "GAUTAMA";
    case AxiomSystemName::ALMOST_GAUTAMA: return "ALMOST_GAUTAMA";
  }
  return "?";
}

inline const std::vector<AxiomSystemName>& all_axiom_systems() {
  static const std::vector<AxiomSystemName> all = {
      AxiomSystemName::P_ALGEBRA, AxiomSystemName::STONE,  AxiomSystemName::DUAL_STONE,
      AxiomSystemName::DE_MORGAN, AxiomSystemName::KLEENE, AxiomSystemName::DQD,
      AxiomSystemName::RDBLST,    AxiomSystemName::RKLST,  AxiomSystemName::GAUTAMA,
      AxiomSystemName::ALMOST_GAUTAMA};
  return all;
}

inline AxiomSystemName parse_axiom_system_name(std::string_view s) {
  for (auto n : all_axiom_systems()) {
    if (s == to_string(n)) return n;
  }
  throw Error(ErrorKind::NotFound, "unknown axiom system '" + std::string(s) + "'");
}

namespace detail {

using Axioms = std::vector<std::pair<std::string, std::string>>;

inline Axioms p_algebra_axioms() {
  return {{"p(a)", "0* = 1"},
          {"p(b)", "1* = 0"},
          {"p(c)", "(x \\/ y)* = x* /\\ y*"},
          {"p(d)", "(x /\\ y)** = x** /\\ y**"},
          {"p(e)", "x <= x**"},
          {"p(f)", "x* /\\ x** = 0"}};
}

inline Axioms stone_axioms() {
  Axioms a = p_algebra_axioms();
  a.push_back({"St", "x* \\/ x** = 1"});
  return a;
}

// Order dual of STONE for the ' slot.
inline Axioms dual_stone_axioms() {
  return {{"dp(a)", "0' = 1"},
          {"dp(b)", "1' = 0"},
          {"dp(c)", "(x /\\ y)' = x' \\/ y'"},
          {"dp(d)", "(x \\/ y)'' = x'' \\/ y''"},
          {"dp(e)", "x'' <= x"},
          {"dp(f)", "x' \\/ x'' = 1"},
          {"dSt", "x' /\\ x'' = 0"}};
}

inline Axioms de_morgan_axioms() {
  return {{"DM(2a)", "0' = 1"}, {"DM(2b)", "1' = 0"}, {"DM(3)", "(x /\\ y)' = x' \\/ y'"}, {"DM(4)", "x'' = x"}};
}

inline Axioms kleene_axioms() {
  Axioms a = de_morgan_axioms();
  a.push_back({"K(5)", "x /\\ x' <= y \\/ y'"});
  return a;
}

inline Axioms dqd_axioms() {
  return {{"DQD(i)a", "0' = 1"},
          {"DQD(i)b", "1' = 0"},
          {"DQD(ii)", "(x /\\ y)' = x' \\/ y'"},
          {"DQD(iii)", "(x \\/ y)'' = x'' \\/ y''"},
          {"DQD(iv)", "x'' <= x"}};
}

inline void append(Axioms& to, const Axioms& from) { to.insert(to.end(), from.begin(), from.end()); }

inline const char* kRegularity = "x /\\ x'*' <= y \\/ y*";

inline Axioms axiom_texts(AxiomSystemName name) {
  Axioms a;
  switch (name) {
    case AxiomSystemName::P_ALGEBRA: return p_algebra_axioms();
    case AxiomSystemName::STONE: return stone_axioms();
    case AxiomSystemName::DUAL_STONE: return dual_stone_axioms();
    case AxiomSystemName::DE_MORGAN: return de_morgan_axioms();
    case AxiomSystemName::KLEENE: return kleene_axioms();
    case AxiomSystemName::DQD: return dqd_axioms();
    case AxiomSystemName::RDBLST:
      // ' is read as the dual pseudocomplement here.
      a = stone_axioms();
      append(a, dual_stone_axioms());
      a.push_back({"R", "x /\\ x' <= y \\/ y*"});
      a.push_back({"R1", "x /\\ x'*' <= y \\/ y*"});
      return a;
    case AxiomSystemName::RKLST:
      a = stone_axioms();
      append(a, kleene_axioms());
      a.push_back({"R1", kRegularity});
      return a;
    case AxiomSystemName::GAUTAMA:
      a = stone_axioms();
      append(a, dqd_axioms());
      a.push_back({"R1", kRegularity});
      a.push_back({"(*)", "x*' = x**"});
      return a;
    case AxiomSystemName::ALMOST_GAUTAMA:
      a = stone_axioms();
      append(a, dqd_axioms());
      a.push_back({"R1", kRegularity});
      a.push_back({"(*)w", "x*'' = x*"});
      a.push_back({"L1", "(x /\\ x'*)'* = x /\\ x'*"});
      return a;
  }
  return a;
}

}  // namespace detail

inline AxiomSystem axiom_system(AxiomSystemName name) {
  AxiomSystem sys{name, {}};
  for (auto& [label, text] : detail::axiom_texts(name)) {
    sys.sentences.push_back({label, text, parse_sentence(text)});
  }
  return sys;
}

struct AxiomCheck {
  std::string label;
  std::string text;
  Verdict verdict;
};

struct AxiomReport {
  AxiomSystemName system;
  std::vector<AxiomCheck> checks;
  bool passed() const {
    for (const auto& c : checks) {
      if (!c.verdict.holds) return false;
    }
    return true;
  }
  const AxiomCheck* first_failure() const {
    for (const auto& c : checks) {
      if (!c.verdict.holds) return &c;
    }
    return nullptr;
  }
};

inline AxiomReport satisfies_axiom_system(const FiniteAlgebra& A, const AxiomSystem& system,
                                          const Limits& limits = {}) {
  AxiomReport report{system.name, {}};
  for (const auto& s : system.sentences) report.checks.push_back({s.label, s.text, holds_in(A, s.sentence, limits)});
  return report;
}

inline AxiomReport satisfies_axiom_system(const FiniteAlgebra& A, AxiomSystemName name, const Limits& limits = {}) {
  return satisfies_axiom_system(A, axiom_system(name), limits);
}

inline bool is_almost_gautama(const FiniteAlgebra& A, const Limits& limits = {}) {
  return satisfies_axiom_system(A, AxiomSystemName::ALMOST_GAUTAMA, limits).passed();
}

}  // namespace agkit

#endif
