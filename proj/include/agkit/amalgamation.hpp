#ifndef AGKIT_AMALGAMATION_HPP
#define AGKIT_AMALGAMATION_HPP

// Amalgamation of diagrams B <-f- A -g-> C of finite algebras in a subvariety.
//
// Decision procedure: let P be all pairs (h: B -> S, k: C -> S), S an SI of the
// variety, with h o f = k o g. The diagram is amalgamable iff P separates every
// pair of distinct elements of B (through h) and of C (through k).
//  - sound: the product of the S over a separating set of pairs lies in the
//    variety, and the tupled h's and k's are commuting embeddings;
//  - complete: the subalgebra of any amalgam generated by the images of B and C
//    is finite (the variety is locally finite), hence a subdirect product of SIs of
//    the variety, and its projections give separating pairs.
//
// For the AP verdict, the variety must have CEP and hereditarily SI members; both
// are re-checked on the SIs before the SI diagrams are decided.

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "congruence.hpp"
#include "morphism.hpp"
#include "variety.hpp"

namespace agkit {

struct Diagram {
  FiniteAlgebra base;
  FiniteAlgebra left;
  FiniteAlgebra right;
  Homomorphism f;  // base -> left
  Homomorphism g;  // base -> right

  static Diagram make(FiniteAlgebra A, FiniteAlgebra B, FiniteAlgebra C, Homomorphism f, Homomorphism g) {
    if (!f.injective || !is_homomorphism(A, B, f.map)) throw Error(ErrorKind::InvalidArgument, "f is not an embedding");
    if (!g.injective || !is_homomorphism(A, C, g.map)) throw Error(ErrorKind::InvalidArgument, "g is not an embedding");
    return Diagram{std::move(A), std::move(B), std::move(C), std::move(f), std::move(g)};
  }

  /// The diagram whose maps are the unique embeddings forced by the constants
  /// (base = 2) or, otherwise, the first embeddings in enumeration order.
  static Diagram first(const FiniteAlgebra& A, const FiniteAlgebra& B, const FiniteAlgebra& C) {
    auto fs = enumerate_embeddings(A, B);
    auto gs = enumerate_embeddings(A, C);
    if (fs.empty() || gs.empty()) {
      throw Error(ErrorKind::InvalidArgument, A.name() + " does not embed into both " + B.name() + " and " + C.name());
    }
    return make(A, B, C, fs.front(), gs.front());
  }

  std::string describe() const { return "<" + base.name() + "; " + left.name() + ", " + right.name() + ">"; }
};

enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "LEFT" : "RIGHT"; }

/// Homomorphism counts into one SI.
struct HomCensus {
  std::string si;
  std::size_t left_homs = 0;
  std::size_t right_homs = 0;
  std::size_t commuting_pairs = 0;
  bool operator==(const HomCensus&) const = default;
};

struct Amalgam {
  std::vector<std::size_t> factors;  // catalog indices of the factors of D
  FiniteAlgebra D;
  Homomorphism f1;  // left -> D
  Homomorphism g1;  // right -> D
  std::vector<std::pair<Homomorphism, Homomorphism>> pairs;
};

struct Obstruction {
  Side side;
  std::pair<Element, Element> pair;
  std::vector<HomCensus> census;
};

using AmalgamationResult = std::variant<Amalgam, Obstruction>;

inline bool is_amalgam(const AmalgamationResult& r) { return std::holds_alternative<Amalgam>(r); }

/// Re-checks an amalgam certificate from scratch.
inline bool verify_amalgam(const Diagram& d, const Amalgam& a) {
  if (!is_homomorphism(d.left, a.D, a.f1.map) || !is_homomorphism(d.right, a.D, a.g1.map)) return false;
  auto injective = [](const std::vector<Element>& m) {
    std::vector<Element> s = m;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  };
  if (!injective(a.f1.map) || !injective(a.g1.map)) return false;
  for (Element x = 0; x < d.base.size(); ++x) {
    if (a.f1.map[d.f.map[x]] != a.g1.map[d.g.map[x]]) return false;
  }
  return true;
}

namespace detail {

struct PairFamily {
  std::vector<std::size_t> si;  // catalog index per pair
  std::vector<std::pair<Homomorphism, Homomorphism>> pairs;
  std::vector<HomCensus> census;
};

inline PairFamily commuting_pairs(const VarietyDescriptor& v, const Diagram& d, const Catalog& catalog) {
  PairFamily fam;
  for (std::size_t i : v.si_indices()) {
    const FiniteAlgebra& S = catalog.si[i];
    const auto hs = enumerate_homs(d.left, S);
    const auto ks = enumerate_homs(d.right, S);
    HomCensus c{S.name(), hs.size(), ks.size(), 0};
    for (const auto& h : hs) {
      for (const auto& k : ks) {
        bool commutes = true;
        for (Element x = 0; x < d.base.size() && commutes; ++x) commutes = h.map[d.f.map[x]] == k.map[d.g.map[x]];
        if (!commutes) continue;
        ++c.commuting_pairs;
        fam.si.push_back(i);
        fam.pairs.push_back({h, k});
      }
    }
    fam.census.push_back(c);
  }
  return fam;
}

}  // namespace detail

inline AmalgamationResult decide_amalgamation(const VarietyDescriptor& v, const Diagram& d,
                                              const Catalog& catalog = Catalog::standard(), const Limits& limits = {}) {
  require_member(d.base, v, limits);
  require_member(d.left, v, limits);
  require_member(d.right, v, limits);
  detail::PairFamily fam = detail::commuting_pairs(v, d, catalog);

  std::vector<std::size_t> chosen;
  auto separate = [&](Side side, const FiniteAlgebra& X) -> std::optional<std::pair<Element, Element>> {
    for (Element x = 0; x < X.size(); ++x) {
      for (Element y = x + 1; y < X.size(); ++y) {
        bool found = false;
        for (std::size_t p = 0; p < fam.pairs.size(); ++p) {
          const Homomorphism& m = side == Side::Left ? fam.pairs[p].first : fam.pairs[p].second;
          if (m.map[x] != m.map[y]) {
            if (std::find(chosen.begin(), chosen.end(), p) == chosen.end()) chosen.push_back(p);
            found = true;
            break;
          }
        }
        if (!found) return std::pair{x, y};
      }
    }
    return std::nullopt;
  };
  if (auto bad = separate(Side::Left, d.left)) return Obstruction{Side::Left, *bad, fam.census};
  if (auto bad = separate(Side::Right, d.right)) return Obstruction{Side::Right, *bad, fam.census};
  if (chosen.empty() && !fam.pairs.empty()) chosen.push_back(0);

  std::vector<FiniteAlgebra> factors;
  std::vector<std::size_t> factor_si;
  std::vector<Homomorphism> hs, ks;
  std::vector<std::pair<Homomorphism, Homomorphism>> used;
  for (std::size_t p : chosen) {
    factors.push_back(catalog.si[fam.si[p]]);
    factor_si.push_back(fam.si[p]);
    hs.push_back(fam.pairs[p].first);
    ks.push_back(fam.pairs[p].second);
    used.push_back(fam.pairs[p]);
  }
  FiniteAlgebra D = factors.size() == 1 ? factors.front() : direct_product(std::span<const FiniteAlgebra>(factors), limits);
  Homomorphism f1 = tuple_hom(d.left, D, factors, hs);
  Homomorphism g1 = tuple_hom(d.right, D, factors, ks);
  Amalgam a{std::move(factor_si), std::move(D), std::move(f1), std::move(g1), std::move(used)};
  if (!verify_amalgam(d, a)) throw Error(ErrorKind::InvalidArgument, "internal: amalgam certificate failed to verify");
  return a;
}

/// Re-checks an obstruction by brute force over all maps left -> S and right -> S.
inline bool recheck_obstruction(const VarietyDescriptor& v, const Diagram& d, const Obstruction& o,
                                const Catalog& catalog = Catalog::standard()) {
  auto all_homs = [](const FiniteAlgebra& X, const FiniteAlgebra& S) {
    std::vector<std::vector<Element>> out;
    std::vector<Element> m(X.size(), 0);
    while (true) {
      if (is_homomorphism(X, S, m)) out.push_back(m);
      std::size_t pos = 0;
      while (pos < m.size() && ++m[pos] == S.size()) m[pos++] = 0;
      if (pos == m.size()) break;
    }
    return out;
  };
  const auto [x, y] = o.pair;
  for (std::size_t i : v.si_indices()) {
    const FiniteAlgebra& S = catalog.si[i];
    const auto hs = all_homs(d.left, S);
    const auto ks = all_homs(d.right, S);
    for (const auto& h : hs) {
      for (const auto& k : ks) {
        bool commutes = true;
        for (Element e = 0; e < d.base.size() && commutes; ++e) commutes = h[d.f.map[e]] == k[d.g.map[e]];
        if (!commutes) continue;
        const auto& m = o.side == Side::Left ? h : k;
        if (m[x] != m[y]) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// AP classification

namespace detail {

/// out[i] = fn(i) for i < n, on up to `threads` workers. The first exception
/// (lowest index) is rethrown after all workers finish.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, std::size_t threads, Fn fn) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace detail

struct DiagramResult {
  Diagram diagram;
  AmalgamationResult result;
};

struct APReport {
  VarietyName variety;
  bool hereditarily_si = true;
  std::size_t cep_checks = 0;
  bool cep_ok = true;
  std::vector<DiagramResult> diagrams;
  bool has_ap = true;

  const DiagramResult* first_obstruction() const {
    for (const auto& d : diagrams) {
      if (!is_amalgam(d.result)) return &d;
    }
    return nullptr;
  }
};

inline bool hereditarily_si(const FiniteAlgebra& S, const Limits& limits = {}) {
  for (const auto& sub : enumerate_subalgebras(S, Ops::All, limits)) {
    if (!classify(induced_subalgebra(S, sub), limits).subdirectly_irreducible) return false;
  }
  return true;
}

/// CEP on every embedding SI -> SI and SI -> SI x SI within the variety.
inline std::pair<std::size_t, bool> cep_spot_checks(const VarietyDescriptor& v, const Catalog& catalog = Catalog::standard(),
                                                    const Limits& limits = {}) {
  std::size_t checks = 0;
  bool ok = true;
  const auto idx = v.si_indices();
  for (std::size_t a : idx) {
    const FiniteAlgebra& S = catalog.si[a];
    for (std::size_t b : idx) {
      for (const auto& e : enumerate_embeddings(S, catalog.si[b])) {
        ++checks;
        ok = ok && cep_instance(S, catalog.si[b], e.map, limits);
      }
      for (std::size_t c : idx) {
        if (c < b) continue;
        const std::vector<FiniteAlgebra> factors{catalog.si[b], catalog.si[c]};
        const FiniteAlgebra P = direct_product(std::span<const FiniteAlgebra>(factors), limits);
        for (const auto& e : enumerate_embeddings(S, P)) {
          ++checks;
          ok = ok && cep_instance(S, P, e.map, limits);
        }
      }
    }
  }
  return {checks, ok};
}

/// Every diagram of SIs of v over every pair of embeddings.
inline std::vector<Diagram> si_diagrams(const VarietyDescriptor& v, const Catalog& catalog = Catalog::standard()) {
  std::vector<Diagram> out;
  const auto idx = v.si_indices();
  for (std::size_t a : idx) {
    for (std::size_t b : idx) {
      for (std::size_t c : idx) {
        const auto fs = enumerate_embeddings(catalog.si[a], catalog.si[b]);
        const auto gs = enumerate_embeddings(catalog.si[a], catalog.si[c]);
        for (const auto& f : fs) {
          for (const auto& g : gs) out.push_back(Diagram::make(catalog.si[a], catalog.si[b], catalog.si[c], f, g));
        }
      }
    }
  }
  return out;
}

inline APReport classify_ap(const VarietyDescriptor& v, const Catalog& catalog = Catalog::standard(),
                            const Limits& limits = {}) {
  APReport report;
  report.variety = v.name;
  for (std::size_t i : v.si_indices()) report.hereditarily_si = report.hereditarily_si && hereditarily_si(catalog.si[i], limits);
  std::tie(report.cep_checks, report.cep_ok) = cep_spot_checks(v, catalog, limits);
  const std::vector<Diagram> diagrams = si_diagrams(v, catalog);
  report.diagrams = detail::parallel_map<DiagramResult>(diagrams.size(), limits.threads, [&](std::size_t i) {
    return DiagramResult{diagrams[i], decide_amalgamation(v, diagrams[i], catalog, limits)};
  });
  for (const auto& d : report.diagrams) report.has_ap = report.has_ap && is_amalgam(d.result);
  return report;
}

// ---------------------------------------------------------------------------
// Consequences

/// Diagrams <A; B, C> with B, C SIs of v that no amalgam completes. Finding none
/// does not show that A is an amalgamation base.
inline std::vector<DiagramResult> amal_base_refutations(const VarietyDescriptor& v, const FiniteAlgebra& A,
                                                        const Catalog& catalog = Catalog::standard(),
                                                        const Limits& limits = {}, bool first_only = false) {
  require_member(A, v, limits);
  std::vector<DiagramResult> out;
  for (std::size_t b : v.si_indices()) {
    for (std::size_t c : v.si_indices()) {
      for (const auto& f : enumerate_embeddings(A, catalog.si[b])) {
        for (const auto& g : enumerate_embeddings(A, catalog.si[c])) {
          Diagram d = Diagram::make(A, catalog.si[b], catalog.si[c], f, g);
          AmalgamationResult r = decide_amalgamation(v, d, catalog, limits);
          if (!is_amalgam(r)) {
            out.push_back({std::move(d), std::move(r)});
            if (first_only) return out;
          }
        }
      }
    }
  }
  return out;
}

inline std::optional<DiagramResult> refute_amal_base(const VarietyDescriptor& v, const FiniteAlgebra& A,
                                                     const Catalog& catalog = Catalog::standard(),
                                                     const Limits& limits = {}) {
  auto found = amal_base_refutations(v, A, catalog, limits, true);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

struct JointEmbedding {
  std::string left;
  std::string right;
  bool embeddable = false;
};

struct Applications {
  VarietyName variety;
  bool has_ap = false;
  bool cep = false;
  bool tp = false;
  bool residually_small = true;
  bool ei = false;
  std::vector<JointEmbedding> jep_on_si_pairs;
  bool embedding_property = false;
  bool model_companion = false;
  bool two_in_amal = true;
};

/// Transferability is AP plus CEP; enough injectives is transferability plus
/// residual smallness (finitely many finite SIs); 2 embeds in every member, so joint
/// embeddability of two SIs is amalgamability over 2.
inline Applications applications(const VarietyDescriptor& v, const Catalog& catalog = Catalog::standard(),
                                 const Limits& limits = {}) {
  const APReport ap = classify_ap(v, catalog, limits);
  Applications out;
  out.variety = v.name;
  out.has_ap = ap.has_ap;
  out.cep = ap.cep_ok;
  out.tp = ap.has_ap && ap.cep_ok;
  out.ei = out.tp && out.residually_small;
  const FiniteAlgebra& two = catalog.si[0];
  const auto idx = v.si_indices();
  out.embedding_property = true;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i; j < idx.size(); ++j) {
      const FiniteAlgebra& B = catalog.si[idx[i]];
      const FiniteAlgebra& C = catalog.si[idx[j]];
      bool ok = is_amalgam(decide_amalgamation(v, Diagram::first(two, B, C), catalog, limits));
      out.jep_on_si_pairs.push_back({B.name(), C.name(), ok});
      out.embedding_property = out.embedding_property && ok;
    }
  }
  out.model_companion = ap.has_ap;
  for (const auto& d : ap.diagrams) {
    if (d.diagram.base.size() == 2 && !is_amalgam(d.result)) out.two_in_amal = false;
  }
  return out;
}

}  // namespace agkit

#endif
