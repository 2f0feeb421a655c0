#ifndef AGKIT_CONGRUENCE_HPP
#define AGKIT_CONGRUENCE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "limits.hpp"

namespace agkit {

/// Equivalence relation on 0..n-1 stored as block ids; ids are first-occurrence
/// ordinals, so equal relations have equal representations.
class Partition {
 public:
  Partition() = default;

  static Partition discrete(std::size_t n) {
    std::vector<Element> ids(n);
    std::iota(ids.begin(), ids.end(), Element{0});
    return Partition(std::move(ids));
  }
  static Partition total(std::size_t n) { return Partition(std::vector<Element>(n, 0)); }

  /// Canonicalises arbitrary block labels.
  static Partition from_labels(const std::vector<Element>& labels) {
    std::vector<Element> ids(labels.size());
    std::vector<std::pair<Element, Element>> seen;
    Element next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == labels[i]; });
      if (it == seen.end()) {
        seen.push_back({labels[i], next});
        ids[i] = next++;
      } else {
        ids[i] = it->second;
      }
    }
    return Partition(std::move(ids));
  }

  std::size_t size() const { return ids_.size(); }
  const std::vector<Element>& block_ids() const { return ids_; }
  Element block(Element x) const { return ids_[x]; }
  bool related(Element x, Element y) const { return ids_[x] == ids_[y]; }
  std::size_t block_count() const {
    return ids_.empty() ? 0 : *std::max_element(ids_.begin(), ids_.end()) + 1;
  }
  bool is_discrete() const { return block_count() == size(); }
  bool is_total() const { return block_count() <= 1; }

  /// Refinement order: every block of *this lies inside a block of other.
  bool refines(const Partition& other) const {
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = x + 1; y < size(); ++y) {
        if (related(x, y) && !other.related(x, y)) return false;
      }
    }
    return true;
  }

  auto operator<=>(const Partition&) const = default;

 private:
  explicit Partition(std::vector<Element> ids) : ids_(std::move(ids)) {}
  std::vector<Element> ids_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Element{0}); }
  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }
  Partition partition() {
    std::vector<Element> labels(parent_.size());
    for (Element x = 0; x < parent_.size(); ++x) labels[x] = find(x);
    return Partition::from_labels(labels);
  }

 private:
  std::vector<Element> parent_;
};

/// Closes a union-find state under all basic translations until nothing merges.
inline void close_under_translations(const FiniteAlgebra& A, UnionFind& uf) {
  const Element n = static_cast<Element>(A.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      const Element r = uf.find(x);
      if (r == x) continue;
      // Pairs (x, representative) generate each block, so compatibility on them suffices.
      changed |= uf.unite(A.star(x), A.star(r));
      changed |= uf.unite(A.quote(x), A.quote(r));
      for (Element c = 0; c < n; ++c) {
        changed |= uf.unite(A.join(x, c), A.join(r, c));
        changed |= uf.unite(A.meet(x, c), A.meet(r, c));
      }
    }
  }
}

}  // namespace detail

/// Least congruence identifying a and b.
inline Partition principal_congruence(const FiniteAlgebra& A, Element a, Element b) {
  if (a >= A.size() || b >= A.size()) throw Error(ErrorKind::OutOfRange, "principal_congruence: element out of range");
  detail::UnionFind uf(A.size());
  uf.unite(a, b);
  detail::close_under_translations(A, uf);
  return uf.partition();
}

/// Join in the lattice of equivalence relations (transitive closure of the union).
inline Partition partition_join(const Partition& p, const Partition& q) {
  detail::UnionFind uf(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (p.related(x, y) || q.related(x, y)) uf.unite(x, y);
    }
  }
  return uf.partition();
}

inline Partition partition_meet(const Partition& p, const Partition& q) {
  std::vector<Element> labels(p.size());
  for (Element x = 0; x < p.size(); ++x) labels[x] = p.block(x) * static_cast<Element>(q.size()) + q.block(x);
  return Partition::from_labels(labels);
}

/// theta o phi == phi o theta as relations.
inline bool partitions_permute(const Partition& theta, const Partition& phi) {
  const std::size_t n = theta.size();
  auto composed = [&](const Partition& first, const Partition& second, Element x, Element z) {
    for (Element y = 0; y < n; ++y) {
      if (first.related(x, y) && second.related(y, z)) return true;
    }
    return false;
  };
  for (Element x = 0; x < n; ++x) {
    for (Element z = 0; z < n; ++z) {
      if (composed(theta, phi, x, z) != composed(phi, theta, x, z)) return false;
    }
  }
  return true;
}

inline bool is_congruence(const FiniteAlgebra& A, const Partition& p) {
  const Element n = static_cast<Element>(A.size());
  if (p.size() != n) return false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.related(x, y)) continue;
      if (!p.related(A.star(x), A.star(y)) || !p.related(A.quote(x), A.quote(y))) return false;
      for (Element c = 0; c < n; ++c) {
        if (!p.related(A.join(x, c), A.join(y, c)) || !p.related(A.meet(x, c), A.meet(y, c))) return false;
      }
    }
  }
  return true;
}

struct CongruenceLattice {
  std::vector<Partition> congruences;  // sorted; Delta first, Nabla last
  std::size_t bottom = 0;
  std::size_t top = 0;

  std::size_t size() const { return congruences.size(); }
  bool leq(std::size_t i, std::size_t j) const { return congruences[i].refines(congruences[j]); }

  /// Congruences covering Delta.
  std::vector<std::size_t> atoms() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i == bottom) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < size() && minimal; ++j) {
        if (j != bottom && j != i && leq(j, i)) minimal = false;
      }
      if (minimal) out.push_back(i);
    }
    return out;
  }
};

/// All congruences, as joins of principal congruences.
inline CongruenceLattice congruence_lattice(const FiniteAlgebra& A, const Limits& limits = {}) {
  check_cap(A.size(), limits.congruence_universe, "congruence lattice universe");
  const std::size_t n = A.size();
  std::set<Partition> all{Partition::discrete(n)};
  std::vector<Partition> principal;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      Partition p = principal_congruence(A, a, b);
      if (all.insert(p).second) principal.push_back(p);
    }
  }
  // Every congruence is a join of principal ones; close the set under joins with them.
  std::vector<Partition> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& p : frontier) {
      for (const auto& q : principal) {
        Partition j = partition_join(p, q);
        if (all.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  CongruenceLattice lattice;
  lattice.congruences.assign(all.begin(), all.end());
  std::sort(lattice.congruences.begin(), lattice.congruences.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a < b;
  });
  lattice.bottom = 0;
  lattice.top = lattice.congruences.size() - 1;
  return lattice;
}

struct Classification {
  bool simple = false;
  bool subdirectly_irreducible = false;
  bool directly_indecomposable = false;
  std::optional<Partition> monolith;
  /// A nontrivial complementary permuting pair, when one exists.
  std::optional<std::pair<Partition, Partition>> factor_pair;
};

inline Classification classify(const FiniteAlgebra& A, const Limits& limits = {}) {
  Classification c;
  if (A.size() < 2) return c;
  const CongruenceLattice con = congruence_lattice(A, limits);
  c.simple = con.size() == 2;
  const auto atoms = con.atoms();
  if (atoms.size() == 1) {
    c.subdirectly_irreducible = true;
    c.monolith = con.congruences[atoms.front()];
  }
  const Partition delta = Partition::discrete(A.size());
  const Partition nabla = Partition::total(A.size());
  for (std::size_t i = 0; i < con.size() && !c.factor_pair; ++i) {
    const Partition& theta = con.congruences[i];
    if (theta.is_discrete() || theta.is_total()) continue;
    for (std::size_t j = i + 1; j < con.size(); ++j) {
      const Partition& phi = con.congruences[j];
      if (phi.is_discrete() || phi.is_total()) continue;
      if (partition_meet(theta, phi) == delta && partition_join(theta, phi) == nabla &&
          partitions_permute(theta, phi)) {
        c.factor_pair = std::pair{theta, phi};
        break;
      }
    }
  }
  c.directly_indecomposable = !c.factor_pair.has_value();
  return c;
}

struct SCReport {
  bool sc = true;                       // for all x != 1: x /\ x'* = 0
  std::vector<Element> sc_violations;   // every x breaking it, ascending
  bool complement_condition = true;     // x \/ x* = 1 implies x in {0, 1}
  std::vector<Element> complement_violations;
};

inline SCReport check_sc(const FiniteAlgebra& A) {
  SCReport r;
  for (Element x = 0; x < A.size(); ++x) {
    if (x != A.one() && A.meet(x, A.star(A.quote(x))) != A.zero()) r.sc_violations.push_back(x);
    if (A.join(x, A.star(x)) == A.one() && x != A.zero() && x != A.one()) r.complement_violations.push_back(x);
  }
  r.sc = r.sc_violations.empty();
  r.complement_condition = r.complement_violations.empty();
  return r;
}

/// Restriction of a congruence of the target to the image of an embedding, as a
/// partition of the source.
inline Partition restrict_congruence(const Partition& theta, std::span<const Element> embedding) {
  std::vector<Element> labels(embedding.size());
  for (std::size_t x = 0; x < embedding.size(); ++x) labels[x] = theta.block(embedding[x]);
  return Partition::from_labels(labels);
}

/// Does every congruence of `sub` arise by restriction from `sup` along `embedding`?
inline bool cep_instance(const FiniteAlgebra& sub, const FiniteAlgebra& sup, std::span<const Element> embedding,
                         const Limits& limits = {}) {
  const CongruenceLattice small = congruence_lattice(sub, limits);
  const CongruenceLattice big = congruence_lattice(sup, limits);
  std::set<Partition> restricted;
  for (const auto& theta : big.congruences) restricted.insert(restrict_congruence(theta, embedding));
  for (const auto& theta : small.congruences) {
    if (!restricted.contains(theta)) return false;
  }
  return true;
}

/// Quotient algebra; element i of the result is block i.
inline FiniteAlgebra quotient(const FiniteAlgebra& A, const Partition& theta) {
  if (!is_congruence(A, theta)) throw Error(ErrorKind::InvalidArgument, "quotient by a non-congruence");
  const std::size_t k = theta.block_count();
  std::vector<Element> rep(k, 0);
  std::vector<char> seen(k, 0);
  for (Element x = 0; x < A.size(); ++x) {
    if (!seen[theta.block(x)]) {
      seen[theta.block(x)] = 1;
      rep[theta.block(x)] = x;
    }
  }
  AlgebraTables t;
  t.name = A.name() + "/theta";
  for (std::size_t b = 0; b < k; ++b) t.labels.push_back("[" + A.label(rep[b]) + "]");
  t.join.resize(k * k);
  t.meet.resize(k * k);
  t.star.resize(k);
  t.quote.resize(k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      t.join[x * k + y] = theta.block(A.join(rep[x], rep[y]));
      t.meet[x * k + y] = theta.block(A.meet(rep[x], rep[y]));
    }
    t.star[x] = theta.block(A.star(rep[x]));
    t.quote[x] = theta.block(A.quote(rep[x]));
  }
  t.zero = theta.block(A.zero());
  t.one = theta.block(A.one());
  return FiniteAlgebra::trusted(std::move(t));
}

}  // namespace agkit

#endif
