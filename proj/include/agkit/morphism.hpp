#ifndef AGKIT_MORPHISM_HPP
#define AGKIT_MORPHISM_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace agkit {

/// Preservation of 0, 1, join, meet, * and ' on every input.
inline bool is_homomorphism(const FiniteAlgebra& A, const FiniteAlgebra& B, std::span<const Element> map) {
  if (map.size() != A.size()) return false;
  for (Element e : map) {
    if (e >= B.size()) return false;
  }
  if (map[A.zero()] != B.zero() || map[A.one()] != B.one()) return false;
  for (Element x = 0; x < A.size(); ++x) {
    if (map[A.star(x)] != B.star(map[x]) || map[A.quote(x)] != B.quote(map[x])) return false;
    for (Element y = 0; y < A.size(); ++y) {
      if (map[A.join(x, y)] != B.join(map[x], map[y])) return false;
      if (map[A.meet(x, y)] != B.meet(map[x], map[y])) return false;
    }
  }
  return true;
}

/// A verified homomorphism between named finite algebras.
struct Homomorphism {
  std::string source;
  std::string target;
  std::vector<Element> map;
  bool injective = false;
  bool surjective = false;

  Element operator()(Element x) const { return map[x]; }
  bool operator==(const Homomorphism&) const = default;

  static Homomorphism make(const FiniteAlgebra& A, const FiniteAlgebra& B, std::vector<Element> map) {
    if (!is_homomorphism(A, B, map)) {
      throw Error(ErrorKind::InvalidArgument, "map " + A.name() + " -> " + B.name() + " is not a homomorphism");
    }
    Homomorphism h{A.name(), B.name(), std::move(map), false, false};
    std::vector<char> hit(B.size(), 0);
    std::size_t distinct = 0;
    for (Element e : h.map) {
      if (!hit[e]) {
        hit[e] = 1;
        ++distinct;
      }
    }
    h.injective = distinct == A.size();
    h.surjective = distinct == B.size();
    return h;
  }
};

inline Homomorphism identity_hom(const FiniteAlgebra& A) {
  std::vector<Element> map(A.size());
  for (Element x = 0; x < A.size(); ++x) map[x] = x;
  return Homomorphism::make(A, A, std::move(map));
}

/// outer o inner.
inline Homomorphism compose(const FiniteAlgebra& A, const FiniteAlgebra& C, const Homomorphism& outer,
                            const Homomorphism& inner) {
  std::vector<Element> map(inner.map.size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = outer.map[inner.map[x]];
  return Homomorphism::make(A, C, std::move(map));
}

/// Projection of a product (built by direct_product from `factors`) onto factor i.
inline Homomorphism projection(const FiniteAlgebra& product, std::span<const FiniteAlgebra> factors, std::size_t i) {
  std::vector<Element> map(product.size());
  for (Element e = 0; e < product.size(); ++e) map[e] = product_coordinates(factors, e)[i];
  return Homomorphism::make(product, factors[i], std::move(map));
}

/// The map x -> (h_0(x), ..., h_k(x)) into direct_product(factors).
inline Homomorphism tuple_hom(const FiniteAlgebra& A, const FiniteAlgebra& product,
                              std::span<const FiniteAlgebra> factors, std::span<const Homomorphism> parts) {
  std::vector<Element> map(A.size());
  std::vector<Element> coords(parts.size());
  for (Element x = 0; x < A.size(); ++x) {
    for (std::size_t i = 0; i < parts.size(); ++i) coords[i] = parts[i].map[x];
    map[x] = product_element(factors, coords);
  }
  return Homomorphism::make(A, product, std::move(map));
}

using PartialMap = std::vector<std::optional<Element>>;

namespace detail {

constexpr Element kUnset = std::numeric_limits<Element>::max();

/// Generators in the order that grows the closure fastest (ties to the lowest index).
inline std::vector<Element> greedy_generators(const FiniteAlgebra& A) {
  std::vector<Element> gens;
  ElementSet current = subuniverse_closure(A, {});
  while (current.size() < A.size()) {
    std::vector<char> in(A.size(), 0);
    for (Element e : current) in[e] = 1;
    Element best = 0;
    std::size_t best_size = 0;
    ElementSet best_set;
    for (Element e = 0; e < A.size(); ++e) {
      if (in[e]) continue;
      ElementSet seed = current;
      seed.push_back(e);
      ElementSet next = subuniverse_closure(A, seed);
      if (next.size() > best_size) {
        best_size = next.size();
        best = e;
        best_set = std::move(next);
      }
    }
    gens.push_back(best);
    current = std::move(best_set);
  }
  return gens;
}

class HomSearch {
 public:
  HomSearch(const FiniteAlgebra& A, const FiniteAlgebra& B, bool injective_only, std::size_t max_results)
      : A_(A), B_(B), injective_only_(injective_only), max_results_(max_results), gens_(greedy_generators(A)) {}

  std::vector<std::vector<Element>> run(const PartialMap& constraint) {
    if (injective_only_ && A_.size() > B_.size()) return {};
    State s{std::vector<Element>(A_.size(), kUnset), {}, std::vector<char>(B_.size(), 0)};
    if (!assign(s, A_.zero(), B_.zero()) || !assign(s, A_.one(), B_.one())) return {};
    for (Element x = 0; x < constraint.size() && x < A_.size(); ++x) {
      if (constraint[x] && (*constraint[x] >= B_.size() || !assign(s, x, *constraint[x]))) return {};
    }
    if (!propagate(s, 0)) return {};
    search(s, 0);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  struct State {
    std::vector<Element> map;
    std::vector<Element> order;  // assigned elements in assignment order
    std::vector<char> used;      // images taken (injective search only)
  };

  bool assign(State& s, Element x, Element image) {
    if (s.map[x] != kUnset) return s.map[x] == image;
    if (injective_only_) {
      if (s.used[image]) return false;
      s.used[image] = 1;
    }
    s.map[x] = image;
    s.order.push_back(x);
    return true;
  }

  // Extends the assignment to the subalgebra generated by the assigned elements,
  // failing on the first preservation conflict.
  bool propagate(State& s, std::size_t from) {
    for (std::size_t i = from; i < s.order.size(); ++i) {
      const Element x = s.order[i];
      const Element hx = s.map[x];
      if (!assign(s, A_.star(x), B_.star(hx)) || !assign(s, A_.quote(x), B_.quote(hx))) return false;
      for (std::size_t j = 0; j <= i; ++j) {
        const Element y = s.order[j];
        const Element hy = s.map[y];
        if (!assign(s, A_.join(x, y), B_.join(hx, hy)) || !assign(s, A_.meet(x, y), B_.meet(hx, hy))) return false;
      }
    }
    return true;
  }

  void search(const State& s, std::size_t gen_index) {
    if (results_.size() >= max_results_) return;
    std::size_t g = gen_index;
    while (g < gens_.size() && s.map[gens_[g]] != kUnset) ++g;
    if (g == gens_.size()) {
      results_.push_back(s.map);
      return;
    }
    for (Element image = 0; image < B_.size(); ++image) {
      State next = s;
      std::size_t from = next.order.size();
      if (assign(next, gens_[g], image) && propagate(next, from)) search(next, g + 1);
      if (results_.size() >= max_results_) return;
    }
  }

  const FiniteAlgebra& A_;
  const FiniteAlgebra& B_;
  bool injective_only_;
  std::size_t max_results_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> results_;
};

inline std::vector<Homomorphism> wrap(const FiniteAlgebra& A, const FiniteAlgebra& B,
                                      std::vector<std::vector<Element>> maps) {
  std::vector<Homomorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(Homomorphism::make(A, B, std::move(m)));
  return out;
}

}  // namespace detail

/// All homomorphisms A -> B extending `constraint`, sorted lexicographically by map.
inline std::vector<Homomorphism> enumerate_homs(const FiniteAlgebra& A, const FiniteAlgebra& B,
                                                const PartialMap& constraint = {}) {
  return detail::wrap(A, B, detail::HomSearch(A, B, false, std::numeric_limits<std::size_t>::max()).run(constraint));
}

inline std::vector<Homomorphism> enumerate_embeddings(const FiniteAlgebra& A, const FiniteAlgebra& B) {
  return detail::wrap(A, B, detail::HomSearch(A, B, true, std::numeric_limits<std::size_t>::max()).run({}));
}

inline std::optional<Homomorphism> is_isomorphic(const FiniteAlgebra& A, const FiniteAlgebra& B) {
  if (A.size() != B.size()) return std::nullopt;
  auto found = detail::HomSearch(A, B, true, 1).run({});
  if (found.empty()) return std::nullopt;
  return Homomorphism::make(A, B, std::move(found.front()));
}

}  // namespace agkit

#endif
