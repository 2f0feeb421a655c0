#ifndef AGKIT_ALGEBRA_HPP
#define AGKIT_ALGEBRA_HPP

// Finite algebras in the signature (join, meet, *, ', 0, 1).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "limits.hpp"

namespace agkit {

using Element = std::uint32_t;

/// Sorted, duplicate-free list of elements of one algebra.
using ElementSet = std::vector<Element>;

/// Which basic operations take part in closures. The bounded lattice operations
/// are always present; the unary operations can be dropped to work with reducts.
enum class Ops : unsigned { Lattice = 0, Star = 1, Quote = 2, All = 3 };

constexpr bool has_op(Ops mask, Ops op) {
  return (static_cast<unsigned>(mask) & static_cast<unsigned>(op)) != 0;
}

/// Raw operation tables. Binary tables are row-major: join[x * size + y].
struct AlgebraTables {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Element> join;
  std::vector<Element> meet;
  std::vector<Element> star;
  std::vector<Element> quote;
  Element zero = 0;
  Element one = 0;

  bool operator==(const AlgebraTables&) const = default;
};

class FiniteAlgebra;

namespace detail {

[[noreturn]] inline void lattice_violation(const std::string& axiom, std::initializer_list<Element> witness,
                                           const std::vector<std::string>& labels) {
  std::string msg = "lattice axiom violated: " + axiom + " at (";
  bool first = true;
  for (Element e : witness) {
    if (!first) msg += ", ";
    first = false;
    msg += labels[e];
  }
  msg += ")";
  throw Error(ErrorKind::LatticeAxiom, msg);
}

inline void check_shape(const AlgebraTables& t) {
  const std::size_t n = t.labels.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "algebra '" + t.name + "' has an empty universe");
  auto check_len = [&](const std::vector<Element>& table, std::size_t want, const char* what) {
    if (table.size() != want) {
      throw Error(ErrorKind::OutOfRange, std::string(what) + " table has " + std::to_string(table.size()) +
                                             " entries, expected " + std::to_string(want));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n) {
        throw Error(ErrorKind::OutOfRange, std::string(what) + " entry " + std::to_string(i) + " = " +
                                               std::to_string(table[i]) + " is out of range");
      }
    }
  };
  check_len(t.join, n * n, "join");
  check_len(t.meet, n * n, "meet");
  check_len(t.star, n, "star");
  check_len(t.quote, n, "quote");
  if (t.zero >= n) throw Error(ErrorKind::OutOfRange, "zero constant is out of range");
  if (t.one >= n) throw Error(ErrorKind::OutOfRange, "one constant is out of range");
  std::set<std::string_view> seen;
  for (const auto& label : t.labels) {
    if (!seen.insert(label).second) throw Error(ErrorKind::InvalidArgument, "duplicate element label '" + label + "'");
  }
}

inline void check_lattice(const AlgebraTables& t) {
  const Element n = static_cast<Element>(t.labels.size());
  auto j = [&](Element x, Element y) { return t.join[x * n + y]; };
  auto m = [&](Element x, Element y) { return t.meet[x * n + y]; };
  const auto& L = t.labels;
  for (Element x = 0; x < n; ++x) {
    if (j(x, x) != x) lattice_violation("join idempotence", {x}, L);
    if (m(x, x) != x) lattice_violation("meet idempotence", {x}, L);
    if (j(x, t.zero) != x) lattice_violation("zero is the least element", {x}, L);
    if (m(x, t.one) != x) lattice_violation("one is the greatest element", {x}, L);
    for (Element y = 0; y < n; ++y) {
      if (j(x, y) != j(y, x)) lattice_violation("join commutativity", {x, y}, L);
      if (m(x, y) != m(y, x)) lattice_violation("meet commutativity", {x, y}, L);
      if (j(x, m(x, y)) != x) lattice_violation("absorption x \\/ (x /\\ y) = x", {x, y}, L);
      if (m(x, j(x, y)) != x) lattice_violation("absorption x /\\ (x \\/ y) = x", {x, y}, L);
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (j(j(x, y), z) != j(x, j(y, z))) lattice_violation("join associativity", {x, y, z}, L);
        if (m(m(x, y), z) != m(x, m(y, z))) lattice_violation("meet associativity", {x, y, z}, L);
        if (m(x, j(y, z)) != j(m(x, y), m(x, z))) lattice_violation("distributivity", {x, y, z}, L);
      }
    }
  }
  if (n > 1 && t.zero == t.one) throw Error(ErrorKind::LatticeAxiom, "lattice axiom violated: zero equals one");
}

}  // namespace detail

/// An algebra <A, join, meet, *, ', 0, 1> whose lattice reduct is a bounded
/// distributive lattice. Immutable after construction.
class FiniteAlgebra {
 public:
  /// Validates table shape, ranges, label uniqueness and every bounded
  /// distributive lattice axiom by exhaustive scan.
  explicit FiniteAlgebra(AlgebraTables tables) : t_(std::move(tables)) {
    detail::check_shape(t_);
    detail::check_lattice(t_);
  }

  /// Skips the cubic lattice scan. Only for tables built by closed constructions
  /// (products, subalgebras, quotients) of already validated algebras.
  static FiniteAlgebra trusted(AlgebraTables tables) {
    detail::check_shape(tables);
    return FiniteAlgebra(std::move(tables), TrustedTag{});
  }

  const std::string& name() const { return t_.name; }
  std::size_t size() const { return t_.labels.size(); }
  const std::string& label(Element e) const { return t_.labels.at(e); }
  const std::vector<std::string>& labels() const { return t_.labels; }
  const AlgebraTables& tables() const { return t_; }

  Element join(Element x, Element y) const { return t_.join[x * size() + y]; }
  Element meet(Element x, Element y) const { return t_.meet[x * size() + y]; }
  Element star(Element x) const { return t_.star[x]; }
  Element quote(Element x) const { return t_.quote[x]; }
  Element zero() const { return t_.zero; }
  Element one() const { return t_.one; }
  bool leq(Element x, Element y) const { return meet(x, y) == x; }

  std::optional<Element> find(std::string_view label) const {
    for (Element e = 0; e < size(); ++e) {
      if (t_.labels[e] == label) return e;
    }
    return std::nullopt;
  }

  Element element(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw Error(ErrorKind::NotFound, "algebra '" + name() + "' has no element '" + std::string(label) + "'");
  }

  FiniteAlgebra renamed(std::string name) const {
    AlgebraTables t = t_;
    t.name = std::move(name);
    return FiniteAlgebra(std::move(t), TrustedTag{});
  }

  bool operator==(const FiniteAlgebra& other) const { return t_ == other.t_; }

 private:
  struct TrustedTag {};
  FiniteAlgebra(AlgebraTables tables, TrustedTag) : t_(std::move(tables)) {}

  AlgebraTables t_;
};

// ---------------------------------------------------------------------------
// Builtin algebras

namespace detail {

inline std::vector<Element> chain_table(Element n, bool join) {
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) table[x * n + y] = join ? std::max(x, y) : std::min(x, y);
  }
  return table;
}

}  // namespace detail

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"2", "3_dblst", "3_klst", "4_dmba"};
  return names;
}

/// The four subdirectly irreducible Almost Gautama algebras.
///
/// In 3_dblst the dual pseudocomplement occupies the ' slot. 4_dmba lists its
/// atoms as 0, b, a, 1 with a* = b, b* = a and ' fixing both atoms.
inline FiniteAlgebra builtin(std::string_view name) {
  AlgebraTables t;
  t.name = std::string(name);
  if (name == "2") {
    t.labels = {"0", "1"};
    t.join = detail::chain_table(2, true);
    t.meet = detail::chain_table(2, false);
    t.star = {1, 0};
    t.quote = {1, 0};
    t.zero = 0;
    t.one = 1;
  } else if (name == "3_dblst" || name == "3_klst") {
    t.labels = {"0", "a", "1"};
    t.join = detail::chain_table(3, true);
    t.meet = detail::chain_table(3, false);
    t.star = {2, 0, 0};
    t.quote = name == "3_dblst" ? std::vector<Element>{2, 2, 0} : std::vector<Element>{2, 1, 0};
    t.zero = 0;
    t.one = 2;
  } else if (name == "4_dmba") {
    // 0 = 0, 1 = b, 2 = a, 3 = 1; b and a are the incomparable atoms.
    t.labels = {"0", "b", "a", "1"};
    t.join = {0, 1, 2, 3,  //
              1, 1, 3, 3,  //
              2, 3, 2, 3,  //
              3, 3, 3, 3};
    t.meet = {0, 0, 0, 0,  //
              0, 1, 0, 1,  //
              0, 0, 2, 2,  //
              0, 1, 2, 3};
    t.star = {3, 2, 1, 0};
    t.quote = {3, 1, 2, 0};
    t.zero = 0;
    t.one = 3;
  } else {
    throw Error(ErrorKind::NotFound, "unknown builtin algebra '" + std::string(name) + "'");
  }
  return FiniteAlgebra(std::move(t));
}

// ---------------------------------------------------------------------------
// Products, subuniverses, subalgebras

/// Componentwise product. Element index is mixed-radix with the first factor most
/// significant; labels are tuples "(x,y,...)".
inline FiniteAlgebra direct_product(std::span<const FiniteAlgebra> factors, const Limits& limits = {}) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "direct_product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.size();
    check_cap(n, limits.product_elements, "direct product size");
  }
  const std::size_t k = factors.size();
  std::vector<std::vector<Element>> coords(n, std::vector<Element>(k));
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t rest = e;
    for (std::size_t i = k; i-- > 0;) {
      coords[e][i] = static_cast<Element>(rest % factors[i].size());
      rest /= factors[i].size();
    }
  }
  auto encode = [&](auto&& coord_of) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * factors[i].size() + coord_of(i);
    return static_cast<Element>(idx);
  };

  AlgebraTables t;
  for (std::size_t i = 0; i < k; ++i) t.name += (i ? " x " : "") + factors[i].name();
  t.labels.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::string label = "(";
    for (std::size_t i = 0; i < k; ++i) label += (i ? "," : "") + factors[i].label(coords[e][i]);
    t.labels[e] = label + ")";
  }
  t.join.resize(n * n);
  t.meet.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t.join[x * n + y] = encode([&](std::size_t i) { return factors[i].join(coords[x][i], coords[y][i]); });
      t.meet[x * n + y] = encode([&](std::size_t i) { return factors[i].meet(coords[x][i], coords[y][i]); });
    }
  }
  t.star.resize(n);
  t.quote.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    t.star[x] = encode([&](std::size_t i) { return factors[i].star(coords[x][i]); });
    t.quote[x] = encode([&](std::size_t i) { return factors[i].quote(coords[x][i]); });
  }
  t.zero = encode([&](std::size_t i) { return factors[i].zero(); });
  t.one = encode([&](std::size_t i) { return factors[i].one(); });
  return FiniteAlgebra::trusted(std::move(t));
}

inline FiniteAlgebra direct_product(std::initializer_list<FiniteAlgebra> factors, const Limits& limits = {}) {
  std::vector<FiniteAlgebra> v(factors);
  return direct_product(std::span<const FiniteAlgebra>(v), limits);
}

/// Coordinates of a product element, first factor first.
inline std::vector<Element> product_coordinates(std::span<const FiniteAlgebra> factors, Element e) {
  std::vector<Element> coords(factors.size());
  std::size_t rest = e;
  for (std::size_t i = factors.size(); i-- > 0;) {
    coords[i] = static_cast<Element>(rest % factors[i].size());
    rest /= factors[i].size();
  }
  return coords;
}

inline Element product_element(std::span<const FiniteAlgebra> factors, std::span<const Element> coords) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i].size() + coords[i];
  return static_cast<Element>(idx);
}

/// Least subset containing the seed and both constants that is closed under the
/// operations selected by `ops`.
inline ElementSet subuniverse_closure(const FiniteAlgebra& A, std::span<const Element> seed, Ops ops = Ops::All) {
  std::vector<char> in(A.size(), 0);
  std::vector<Element> members;
  auto add = [&](Element e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
    }
  };
  add(A.zero());
  add(A.one());
  for (Element e : seed) {
    if (e >= A.size()) throw Error(ErrorKind::OutOfRange, "seed element out of range");
    add(e);
  }
  // members[0, done) have been combined with every member before them.
  for (std::size_t done = 0; done < members.size(); ++done) {
    const Element x = members[done];
    if (has_op(ops, Ops::Star)) add(A.star(x));
    if (has_op(ops, Ops::Quote)) add(A.quote(x));
    for (std::size_t i = 0; i <= done; ++i) {
      const Element y = members[i];
      add(A.join(x, y));
      add(A.meet(x, y));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline bool is_subuniverse(const FiniteAlgebra& A, std::span<const Element> set, Ops ops = Ops::All) {
  return subuniverse_closure(A, set, ops) == ElementSet(set.begin(), set.end());
}

/// All subuniverses, sorted by size then lexicographically. Universes up to
/// `limits.subset_scan_size` close every subset; larger ones grow by one-point
/// extensions from the least subuniverse.
inline std::vector<ElementSet> enumerate_subalgebras(const FiniteAlgebra& A, Ops ops = Ops::All,
                                                     const Limits& limits = {}) {
  std::set<ElementSet> found;
  const std::size_t n = A.size();
  if (n <= limits.subset_scan_size) {
    std::vector<Element> seed;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      seed.clear();
      for (Element e = 0; e < n; ++e) {
        if (mask >> e & 1) seed.push_back(e);
      }
      found.insert(subuniverse_closure(A, seed, ops));
    }
  } else {
    check_cap(n, limits.product_elements, "subalgebra enumeration universe");
    std::vector<ElementSet> queue{subuniverse_closure(A, {}, ops)};
    found.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const ElementSet current = queue[head];
      std::vector<char> in(n, 0);
      for (Element e : current) in[e] = 1;
      ElementSet seed = current;
      seed.push_back(0);
      for (Element e = 0; e < n; ++e) {
        if (in[e]) continue;
        seed.back() = e;
        ElementSet next = subuniverse_closure(A, seed, ops);
        if (found.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// The subalgebra on a subuniverse; new element i is the old element set[i].
inline FiniteAlgebra induced_subalgebra(const FiniteAlgebra& A, std::span<const Element> set,
                                        std::string name = {}) {
  if (!is_subuniverse(A, set)) throw Error(ErrorKind::InvalidArgument, "set is not a subuniverse of " + A.name());
  std::vector<Element> index(A.size(), 0);
  for (Element i = 0; i < set.size(); ++i) index[set[i]] = i;
  const std::size_t n = set.size();
  AlgebraTables t;
  if (name.empty()) {
    name = A.name() + "{";
    for (std::size_t i = 0; i < n; ++i) name += (i ? "," : "") + A.label(set[i]);
    name += "}";
  }
  t.name = std::move(name);
  for (Element e : set) t.labels.push_back(A.label(e));
  t.join.resize(n * n);
  t.meet.resize(n * n);
  t.star.resize(n);
  t.quote.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t.join[x * n + y] = index[A.join(set[x], set[y])];
      t.meet[x * n + y] = index[A.meet(set[x], set[y])];
    }
    t.star[x] = index[A.star(set[x])];
    t.quote[x] = index[A.quote(set[x])];
  }
  t.zero = index[A.zero()];
  t.one = index[A.one()];
  return FiniteAlgebra::trusted(std::move(t));
}

// ---------------------------------------------------------------------------
// AlgebraSpec documents

/// Canonical AlgebraSpec text: a single line of JSON with keys in the order
/// name, size, labels, join, meet, star, quote, zero, one, followed by a newline.
inline std::string dump_algebra(const FiniteAlgebra& A) {
  const std::size_t n = A.size();
  nlohmann::ordered_json doc;
  doc["name"] = A.name();
  doc["size"] = n;
  doc["labels"] = A.labels();
  auto rows = [&](const std::vector<Element>& flat) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < n; ++x) {
      out.push_back(std::vector<Element>(flat.begin() + x * n, flat.begin() + (x + 1) * n));
    }
    return out;
  };
  doc["join"] = rows(A.tables().join);
  doc["meet"] = rows(A.tables().meet);
  doc["star"] = A.tables().star;
  doc["quote"] = A.tables().quote;
  doc["zero"] = A.zero();
  doc["one"] = A.one();
  return doc.dump() + "\n";
}

inline FiniteAlgebra load_algebra(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(offset, {"JSON value"}, std::string("algebra document: ") + e.what());
  }
  auto field = [&](const char* key) -> const nlohmann::json& {
    if (!doc.is_object() || !doc.contains(key)) {
      throw ParseError(0, {key}, std::string("algebra document is missing \"") + key + "\"");
    }
    return doc.at(key);
  };
  try {
    const std::size_t n = field("size").get<std::size_t>();
    AlgebraTables t;
    t.name = field("name").get<std::string>();
    t.labels = field("labels").get<std::vector<std::string>>();
    if (t.labels.size() != n) {
      throw Error(ErrorKind::OutOfRange, "labels has " + std::to_string(t.labels.size()) + " entries, size is " +
                                             std::to_string(n));
    }
    auto flatten = [&](const char* key) {
      auto rows = field(key).get<std::vector<std::vector<long long>>>();
      std::vector<Element> flat;
      if (rows.size() != n) throw Error(ErrorKind::OutOfRange, std::string(key) + " must have " + std::to_string(n) + " rows");
      for (const auto& row : rows) {
        if (row.size() != n) throw Error(ErrorKind::OutOfRange, std::string(key) + " rows must have " + std::to_string(n) + " entries");
        for (long long v : row) {
          if (v < 0 || static_cast<std::size_t>(v) >= n) {
            throw Error(ErrorKind::OutOfRange, std::string(key) + " entry " + std::to_string(v) + " is out of range");
          }
          flat.push_back(static_cast<Element>(v));
        }
      }
      return flat;
    };
    auto unary = [&](const char* key) {
      auto row = field(key).get<std::vector<long long>>();
      std::vector<Element> out;
      for (long long v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw Error(ErrorKind::OutOfRange, std::string(key) + " entry " + std::to_string(v) + " is out of range");
        }
        out.push_back(static_cast<Element>(v));
      }
      return out;
    };
    auto constant = [&](const char* key) {
      long long v = field(key).get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(ErrorKind::OutOfRange, std::string(key) + " is out of range");
      return static_cast<Element>(v);
    };
    t.join = flatten("join");
    t.meet = flatten("meet");
    t.star = unary("star");
    t.quote = unary("quote");
    t.zero = constant("zero");
    t.one = constant("one");
    return FiniteAlgebra(std::move(t));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, {"AlgebraSpec field"}, std::string("algebra document: ") + e.what());
  }
}

}  // namespace agkit

#endif
