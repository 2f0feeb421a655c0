#ifndef AGKIT_VARIETY_HPP
#define AGKIT_VARIETY_HPP

// The eight nontrivial subvarieties of Almost Gautama algebras.
//
// Each subvariety is generated by its subdirectly irreducible members, which are
// among the four catalog algebras. Identities and quasi-identities are preserved
// by subalgebras and products, and every member is a subdirect product of SIs in
// the variety, so a (quasi-)identity is valid in the variety exactly when it holds
// in each of its SIs. All decisions below rest on that reduction.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"
#include "axioms.hpp"
#include "congruence.hpp"
#include "morphism.hpp"
#include "term.hpp"

namespace agkit {

/// The four subdirectly irreducible algebras, indexed 0..3 as 2, 3_dblst, 3_klst, 4_dmba.
/// Kept as a value so that checks can be rerun against modified tables.
struct Catalog {
  std::vector<FiniteAlgebra> si;

  static const Catalog& standard() {
    static const Catalog catalog = [] {
      Catalog c;
      for (const auto& name : builtin_names()) c.si.push_back(builtin(name));
      return c;
    }();
    return catalog;
  }

  const FiniteAlgebra& at(std::string_view name) const {
    for (const auto& a : si) {
      if (a.name() == name) return a;
    }
    throw Error(ErrorKind::NotFound, "no catalog algebra named '" + std::string(name) + "'");
  }

  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < si.size(); ++i) {
      if (si[i].name() == name) return i;
    }
    throw Error(ErrorKind::NotFound, "no catalog algebra named '" + std::string(name) + "'");
  }
};

enum class VarietyName { BA, RDBLST, RKLST, DMBA, G, V_DBLST_DMBA, V_KLST_DMBA, AG };

inline const std::array<VarietyName, 8>& all_variety_names() {
  static const std::array<VarietyName, 8> all = {VarietyName::BA,           VarietyName::RDBLST,
                                                 VarietyName::RKLST,        VarietyName::DMBA,
                                                 VarietyName::G,            VarietyName::V_DBLST_DMBA,
                                                 VarietyName::V_KLST_DMBA,  VarietyName::AG};
  return all;
}

inline const char* to_string(VarietyName v) {
  switch (v) {
    case VarietyName::BA: return "BA";
    case VarietyName::RDBLST: return "RDBLST";
    case VarietyName::RKLST: return "RKLST";
    case VarietyName::DMBA: return "DMBA";
    case VarietyName::G: return "G";
    case VarietyName::V_DBLST_DMBA: return "V_DBLST_DMBA";
    case VarietyName::V_KLST_DMBA: return "V_KLST_DMBA";
    case VarietyName::AG: return "AG";
  }
  return "?";
}

using SiMask = unsigned;  // bit i = catalog algebra i

struct VarietyDescriptor {
  VarietyName name;
  SiMask si_mask;
  std::vector<LabeledSentence> base;  // modulo the Almost Gautama axioms

  bool contains(std::size_t si_index) const { return (si_mask >> si_index & 1u) != 0; }
  std::vector<std::size_t> si_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 4; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }
  /// Subvariety order of the lattice of subvarieties (SI-set inclusion).
  bool leq(const VarietyDescriptor& other) const { return (si_mask & ~other.si_mask) == 0; }
  std::string display_name(const Catalog& catalog = Catalog::standard()) const {
    std::string out = "V(";
    bool first = true;
    for (std::size_t i : si_indices()) {
      out += (first ? "" : ",") + catalog.si[i].name();
      first = false;
    }
    return out + ")";
  }
};

namespace detail {

struct VarietyRow {
  VarietyName name;
  SiMask mask;
  std::vector<std::pair<std::string, std::string>> base;
};

inline const std::vector<VarietyRow>& variety_rows() {
  static const std::vector<VarietyRow> rows = {
      {VarietyName::BA, 0b0001, {{"base(BA)", "x* = x'"}}},
      {VarietyName::RDBLST, 0b0011, {{"base(RDBLST)", "x \\/ x' = 1"}}},
      {VarietyName::RKLST, 0b0101, {{"base(RKLST)", "x*' = x**"}, {"base(RKLST)", "x'' = x"}}},
      {VarietyName::DMBA, 0b1001, {{"base(DMBA)", "x \\/ x* = 1"}}},
      {VarietyName::G, 0b0111, {{"base(G)", "x*' = x**"}}},
      {VarietyName::V_DBLST_DMBA, 0b1011, {{"(J)", "x' \\/ y* \\/ z = (x' \\/ y)* \\/ (x' \\/ z)"}}},
      {VarietyName::V_KLST_DMBA, 0b1101, {{"base(V_KLST_DMBA)", "x'' = x"}}},
      {VarietyName::AG, 0b1111, {}},
  };
  return rows;
}

}  // namespace detail

inline VarietyDescriptor variety(VarietyName name) {
  for (const auto& row : detail::variety_rows()) {
    if (row.name != name) continue;
    VarietyDescriptor v{row.name, row.mask, {}};
    for (const auto& [label, text] : row.base) v.base.push_back({label, text, parse_sentence(text)});
    return v;
  }
  throw Error(ErrorKind::NotFound, "unknown variety");
}

inline VarietyDescriptor variety(std::string_view name) {
  for (auto v : all_variety_names()) {
    if (name == to_string(v)) return variety(v);
  }
  throw Error(ErrorKind::NotFound, "unknown variety '" + std::string(name) + "'");
}

inline VarietyDescriptor variety_by_mask(SiMask mask) {
  for (auto v : all_variety_names()) {
    if (variety(v).si_mask == mask) return variety(v);
  }
  throw Error(ErrorKind::NotFound, "no variety with SI mask " + std::to_string(mask));
}

inline std::vector<VarietyDescriptor> all_varieties() {
  std::vector<VarietyDescriptor> out;
  for (auto v : all_variety_names()) out.push_back(variety(v));
  return out;
}

// ---------------------------------------------------------------------------
// Validity

struct VarietyVerdict {
  bool holds = true;
  std::optional<std::string> countermodel;  // catalog algebra name
  std::optional<Assignment> witness;
  explicit operator bool() const { return holds; }
};

/// Quasi-identity (or identity) validity, decided on the SIs of the variety.
inline VarietyVerdict quasi_identity_holds(const VarietyDescriptor& v, const Sentence& s,
                                           const Catalog& catalog = Catalog::standard(), const Limits& limits = {}) {
  for (std::size_t i : v.si_indices()) {
    Verdict r = holds_in(catalog.si[i], s, limits);
    if (!r.holds) return VarietyVerdict{false, catalog.si[i].name(), r.witness};
  }
  return VarietyVerdict{};
}

inline VarietyVerdict identity_holds(const VarietyDescriptor& v, const Sentence& s,
                                     const Catalog& catalog = Catalog::standard(), const Limits& limits = {}) {
  if (s.kind() != Sentence::Kind::Identity) {
    throw Error(ErrorKind::InvalidArgument, "identity_holds needs a sentence without premises");
  }
  return quasi_identity_holds(v, s, catalog, limits);
}

/// Does the algebra satisfy the Almost Gautama axioms and the variety's base?
inline bool satisfies_base(const FiniteAlgebra& A, const VarietyDescriptor& v, const Limits& limits = {}) {
  if (!is_almost_gautama(A, limits)) return false;
  for (const auto& s : v.base) {
    if (!holds_in(A, s.sentence, limits)) return false;
  }
  return true;
}

struct BaseMatrix {
  // cell[si][variety], varieties in all_variety_names() order
  std::array<std::array<bool, 8>, 4> satisfied{};
  std::array<std::array<bool, 8>, 4> member{};
  bool matches() const { return satisfied == member; }
  std::size_t matching_cells() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 8; ++j) count += satisfied[i][j] == member[i][j];
    }
    return count;
  }
};

/// Base satisfaction of each catalog SI against each variety, next to the
/// membership read off the lattice of subvarieties.
inline BaseMatrix verify_bases(const Catalog& catalog = Catalog::standard(), const Limits& limits = {}) {
  BaseMatrix m;
  const auto varieties = all_varieties();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < varieties.size(); ++j) {
      m.satisfied[i][j] = satisfies_base(catalog.si[i], varieties[j], limits);
      m.member[i][j] = varieties[j].contains(i);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Generated subvariety

struct GeneratedSubvariety {
  VarietyDescriptor variety;
  SiMask by_base = 0;    // least variety whose base holds
  SiMask by_images = 0;  // catalog SIs that are homomorphic images of subalgebras
  bool agree() const { return by_base == by_images; }
};

/// Catalog SIs lying in HS(A). A catalog algebra generated by k elements lies
/// in HS(A) iff some k-generated subalgebra of A maps onto it.
inline SiMask si_images(const FiniteAlgebra& A, const Catalog& catalog = Catalog::standard()) {
  SiMask mask = 0;
  for (std::size_t i = 0; i < catalog.si.size(); ++i) {
    const FiniteAlgebra& S = catalog.si[i];
    const std::size_t k = detail::greedy_generators(S).size();
    std::vector<Element> seed(k, 0);
    bool found = false;
    std::set<ElementSet> tried;
    // Odometer over k-tuples of A.
    while (!found) {
      ElementSet sub = subuniverse_closure(A, seed);
      if (tried.insert(sub).second && sub.size() >= S.size()) {
        FiniteAlgebra B = induced_subalgebra(A, sub);
        for (const auto& h : enumerate_homs(B, S)) {
          if (h.surjective) {
            found = true;
            break;
          }
        }
      }
      std::size_t pos = 0;
      while (pos < k && ++seed[pos] == A.size()) seed[pos++] = 0;
      if (pos == k) break;
    }
    if (found) mask |= 1u << i;
  }
  return mask;
}

inline GeneratedSubvariety generated_subvariety(const FiniteAlgebra& A, const Catalog& catalog = Catalog::standard(),
                                                const Limits& limits = {}) {
  const AxiomReport ag = satisfies_axiom_system(A, AxiomSystemName::ALMOST_GAUTAMA, limits);
  if (const AxiomCheck* bad = ag.first_failure()) {
    throw Error(ErrorKind::NotInAG, A.name() + " is not an Almost Gautama algebra: " + bad->label + " (" + bad->text +
                                        ") fails at " + to_string(A, *bad->verdict.witness));
  }
  SiMask by_base = 0b1111;
  for (const auto& v : all_varieties()) {
    bool ok = true;
    for (const auto& s : v.base) ok = ok && holds_in(A, s.sentence, limits).holds;
    if (ok) by_base &= v.si_mask;
  }
  const SiMask by_images = si_images(A, catalog);
  return GeneratedSubvariety{variety_by_mask(by_base), by_base, by_images};
}

/// Throws NotInVariety unless A is an Almost Gautama algebra satisfying v's base.
inline void require_member(const FiniteAlgebra& A, const VarietyDescriptor& v, const Limits& limits = {}) {
  const AxiomReport ag = satisfies_axiom_system(A, AxiomSystemName::ALMOST_GAUTAMA, limits);
  if (const AxiomCheck* bad = ag.first_failure()) {
    throw Error(ErrorKind::NotInVariety, A.name() + " is not in " + to_string(v.name) + ": axiom " + bad->label +
                                             " fails at " + to_string(A, *bad->verdict.witness));
  }
  for (const auto& s : v.base) {
    Verdict r = holds_in(A, s.sentence, limits);
    if (!r.holds) {
      throw Error(ErrorKind::NotInVariety, A.name() + " is not in " + to_string(v.name) + ": base identity " +
                                               s.text + " fails at " + to_string(A, *r.witness));
    }
  }
}

// ---------------------------------------------------------------------------
// Discriminator

struct DiscriminatorResult {
  bool is_term_operation = true;
  std::size_t subuniverses_checked = 0;
  std::optional<ElementSet> violated;  // a subuniverse of A^2 not preserved
};

inline Element discriminator(Element x, Element y, Element z) { return x == y ? z : x; }

/// The lattice reduct already has the majority term (x/\y)\/(y/\z)\/(x/\z), so an
/// operation is a term operation iff it preserves every subuniverse of A^2.
inline DiscriminatorResult discriminator_is_term_op(const FiniteAlgebra& A, Ops ops = Ops::All,
                                                    const Limits& limits = {}) {
  check_cap(A.size(), limits.discriminator_universe, "discriminator check universe");
  const FiniteAlgebra square = direct_product({A, A}, limits);
  const std::size_t n = A.size();
  DiscriminatorResult result;
  for (const ElementSet& R : enumerate_subalgebras(square, ops, limits)) {
    ++result.subuniverses_checked;
    std::vector<char> in(square.size(), 0);
    for (Element e : R) in[e] = 1;
    bool ok = true;
    for (Element p : R) {
      for (Element q : R) {
        for (Element r : R) {
          const Element first = discriminator(p / n, q / n, r / n);
          const Element second = discriminator(p % n, q % n, r % n);
          if (!in[first * n + second]) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (!ok) {
      result.is_term_operation = false;
      result.violated = R;
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Free algebras

struct FreeAlgebra {
  FiniteAlgebra algebra;
  std::vector<std::string> generator_names;
  std::vector<Element> generators;
};

inline const std::vector<std::string>& free_generator_names() {
  static const std::vector<std::string> names = {"x", "y", "z"};
  return names;
}

/// Subalgebra of the product of S over all (S, assignment {x,y,z}|n -> S) generated by
/// the projection tuples. Element labels are the first term found for each element.
inline FreeAlgebra free_algebra(const VarietyDescriptor& v, std::size_t n, const Catalog& catalog = Catalog::standard(),
                                const Limits& limits = {}) {
  if (n > 3) throw Error(ErrorKind::InvalidArgument, "free_algebra supports at most 3 generators");
  struct Factor {
    const FiniteAlgebra* S;
    std::vector<Element> values;  // assignment of the generators
  };
  std::vector<Factor> factors;
  for (std::size_t i : v.si_indices()) {
    const FiniteAlgebra& S = catalog.si[i];
    std::vector<Element> a(n, 0);
    while (true) {
      factors.push_back({&S, a});
      std::size_t pos = n;
      while (pos > 0 && ++a[pos - 1] == S.size()) a[--pos] = 0;
      if (pos == 0) break;
    }
  }
  const std::size_t width = factors.size();
  using Tuple = std::vector<Element>;
  struct TupleHash {
    std::size_t operator()(const Tuple& t) const {
      std::size_t h = 1469598103934665603ull;
      for (Element e : t) h = (h ^ e) * 1099511628211ull;
      return h;
    }
  };
  std::vector<Tuple> elements;
  std::vector<std::string> labels;
  std::unordered_map<Tuple, Element, TupleHash> index;
  auto add = [&](Tuple t, auto&& label) -> Element {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    check_cap(elements.size() + 1, limits.free_elements, "free algebra size");
    const Element id = static_cast<Element>(elements.size());
    index.emplace(t, id);
    elements.push_back(std::move(t));
    if constexpr (std::is_invocable_v<decltype(label)>) {
      labels.push_back(label());
    } else {
      labels.push_back(std::string(label));
    }
    return id;
  };
  auto map1 = [&](const Tuple& x, auto&& op) {
    Tuple out(width);
    for (std::size_t f = 0; f < width; ++f) out[f] = op(*factors[f].S, x[f]);
    return out;
  };
  auto map2 = [&](const Tuple& x, const Tuple& y, auto&& op) {
    Tuple out(width);
    for (std::size_t f = 0; f < width; ++f) out[f] = op(*factors[f].S, x[f], y[f]);
    return out;
  };
  const Element zero = add(map1(Tuple(width, 0), [](const FiniteAlgebra& S, Element) { return S.zero(); }), "0");
  const Element one = add(map1(Tuple(width, 0), [](const FiniteAlgebra& S, Element) { return S.one(); }), "1");
  std::vector<Element> gens;
  for (std::size_t g = 0; g < n; ++g) {
    Tuple t(width);
    for (std::size_t f = 0; f < width; ++f) t[f] = factors[f].values[g];
    gens.push_back(add(std::move(t), free_generator_names()[g]));
  }
  auto wrap = [](const std::string& label) {
    return label.find(' ') == std::string::npos ? label : "(" + label + ")";
  };
  // Long terms are replaced by the element's index.
  auto name = [&](std::string term) { return term.size() <= 48 ? term : "t" + std::to_string(elements.size() - 1); };
  for (std::size_t done = 0; done < elements.size(); ++done) {
    const Tuple x = elements[done];
    const std::string lx = labels[done];
    add(map1(x, [](const FiniteAlgebra& S, Element a) { return S.star(a); }), [&] { return name(wrap(lx) + "*"); });
    add(map1(x, [](const FiniteAlgebra& S, Element a) { return S.quote(a); }), [&] { return name(wrap(lx) + "'"); });
    for (std::size_t i = 0; i <= done; ++i) {
      Tuple j = map2(x, elements[i], [](const FiniteAlgebra& S, Element a, Element b) { return S.join(a, b); });
      Tuple m = map2(x, elements[i], [](const FiniteAlgebra& S, Element a, Element b) { return S.meet(a, b); });
      add(std::move(j), [&] { return name(labels[i] + " \\/ " + lx); });
      add(std::move(m), [&] { return name(wrap(labels[i]) + " /\\ " + wrap(lx)); });
    }
  }
  const std::size_t size = elements.size();
  AlgebraTables t;
  t.name = "F_" + std::string(to_string(v.name)) + "(" + std::to_string(n) + ")";
  t.labels = std::move(labels);
  t.join.resize(size * size);
  t.meet.resize(size * size);
  t.star.resize(size);
  t.quote.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    t.star[x] = index.at(map1(elements[x], [](const FiniteAlgebra& S, Element a) { return S.star(a); }));
    t.quote[x] = index.at(map1(elements[x], [](const FiniteAlgebra& S, Element a) { return S.quote(a); }));
    for (std::size_t y = 0; y < size; ++y) {
      t.join[x * size + y] =
          index.at(map2(elements[x], elements[y], [](const FiniteAlgebra& S, Element a, Element b) { return S.join(a, b); }));
      t.meet[x * size + y] =
          index.at(map2(elements[x], elements[y], [](const FiniteAlgebra& S, Element a, Element b) { return S.meet(a, b); }));
    }
  }
  t.zero = zero;
  t.one = one;
  std::vector<std::string> names(free_generator_names().begin(), free_generator_names().begin() + n);
  return FreeAlgebra{FiniteAlgebra::trusted(std::move(t)), std::move(names), std::move(gens)};
}

}  // namespace agkit

#endif
