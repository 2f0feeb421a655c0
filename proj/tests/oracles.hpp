#ifndef AGKIT_TESTS_ORACLES_HPP
#define AGKIT_TESTS_ORACLES_HPP

// Brute-force reference implementations. They share only the table accessors
// and the Term data type with the library.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "agkit/agkit.hpp"

namespace oracle {

using agkit::Element;
using agkit::FiniteAlgebra;
using Map = std::vector<Element>;

inline bool preserves(const FiniteAlgebra& A, const FiniteAlgebra& B, const Map& m) {
  if (m[A.zero()] != B.zero() || m[A.one()] != B.one()) return false;
  for (Element x = 0; x < A.size(); ++x) {
    if (m[A.star(x)] != B.star(m[x])) return false;
    if (m[A.quote(x)] != B.quote(m[x])) return false;
    for (Element y = 0; y < A.size(); ++y) {
      if (m[A.join(x, y)] != B.join(m[x], m[y])) return false;
      if (m[A.meet(x, y)] != B.meet(m[x], m[y])) return false;
    }
  }
  return true;
}

/// Every map A -> B, in lexicographic order, filtered.
inline std::vector<Map> all_homs(const FiniteAlgebra& A, const FiniteAlgebra& B) {
  std::vector<Map> out;
  Map m(A.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m.size()) {
      if (preserves(A, B, m)) out.push_back(m);
      return;
    }
    for (Element b = 0; b < B.size(); ++b) {
      m[i] = b;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline bool injective(const Map& m) { return std::set<Element>(m.begin(), m.end()).size() == m.size(); }

/// Every set partition of {0..n-1}, as restricted growth strings.
inline std::vector<std::vector<Element>> all_partitions(std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> rgs(n, 0);
  std::function<void(std::size_t, Element)> rec = [&](std::size_t i, Element max) {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (Element b = 0; b <= max + 1; ++b) {
      if (i == 0 && b > 0) break;
      rgs[i] = b;
      rec(i + 1, std::max(max, b));
    }
  };
  if (n == 0) return {{}};
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

inline bool compatible(const FiniteAlgebra& A, const std::vector<Element>& p) {
  for (Element x = 0; x < A.size(); ++x) {
    for (Element y = 0; y < A.size(); ++y) {
      if (p[x] != p[y]) continue;
      if (p[A.star(x)] != p[A.star(y)] || p[A.quote(x)] != p[A.quote(y)]) return false;
      for (Element z = 0; z < A.size(); ++z) {
        if (p[A.join(x, z)] != p[A.join(y, z)] || p[A.meet(x, z)] != p[A.meet(y, z)]) return false;
      }
    }
  }
  return true;
}

inline std::vector<std::vector<Element>> all_congruences(const FiniteAlgebra& A) {
  std::vector<std::vector<Element>> out;
  for (auto& p : all_partitions(A.size())) {
    if (compatible(A, p)) out.push_back(p);
  }
  return out;
}

inline bool refines(const std::vector<Element>& p, const std::vector<Element>& q) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p[x] == p[y] && q[x] != q[y]) return false;
    }
  }
  return true;
}

/// The least congruence relating a and b: the one refining all others that relate them.
inline std::vector<Element> principal(const FiniteAlgebra& A, Element a, Element b) {
  std::vector<std::vector<Element>> containing;
  for (auto& p : all_congruences(A)) {
    if (p[a] == p[b]) containing.push_back(p);
  }
  for (const auto& p : containing) {
    bool least = true;
    for (const auto& q : containing) least = least && refines(p, q);
    if (least) return p;
  }
  return {};
}

inline bool closed(const FiniteAlgebra& A, const std::vector<char>& in, agkit::Ops ops = agkit::Ops::All) {
  if (!in[A.zero()] || !in[A.one()]) return false;
  for (Element x = 0; x < A.size(); ++x) {
    if (!in[x]) continue;
    if (agkit::has_op(ops, agkit::Ops::Star) && !in[A.star(x)]) return false;
    if (agkit::has_op(ops, agkit::Ops::Quote) && !in[A.quote(x)]) return false;
    for (Element y = 0; y < A.size(); ++y) {
      if (in[y] && (!in[A.join(x, y)] || !in[A.meet(x, y)])) return false;
    }
  }
  return true;
}

inline std::vector<agkit::ElementSet> all_subuniverses(const FiniteAlgebra& A, agkit::Ops ops = agkit::Ops::All) {
  std::vector<agkit::ElementSet> out;
  const std::size_t n = A.size();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<char> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = (mask >> i) & 1;
    if (!closed(A, in, ops)) continue;
    agkit::ElementSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (in[i]) s.push_back(static_cast<Element>(i));
    }
    out.push_back(s);
  }
  return out;
}

inline Element eval(const FiniteAlgebra& A, const agkit::Term& t, const std::map<std::string, Element>& env) {
  using K = agkit::Term::Kind;
  switch (t.kind) {
    case K::Var: return env.at(t.name);
    case K::Zero: return A.zero();
    case K::One: return A.one();
    case K::Join: return A.join(eval(A, t.args[0], env), eval(A, t.args[1], env));
    case K::Meet: return A.meet(eval(A, t.args[0], env), eval(A, t.args[1], env));
    case K::Star: return A.star(eval(A, t.args[0], env));
    case K::Quote: return A.quote(eval(A, t.args[0], env));
  }
  return 0;
}

inline void vars_of(const agkit::Term& t, std::set<std::string>& out) {
  if (t.kind == agkit::Term::Kind::Var) out.insert(t.name);
  for (const auto& a : t.args) vars_of(a, out);
}

/// Sentence satisfaction by enumerating every assignment.
inline bool satisfies(const FiniteAlgebra& A, const agkit::Sentence& s) {
  std::set<std::string> vs;
  for (const auto& p : s.premises) {
    vars_of(p.lhs, vs);
    vars_of(p.rhs, vs);
  }
  vars_of(s.conclusion.lhs, vs);
  vars_of(s.conclusion.rhs, vs);
  const std::vector<std::string> names(vs.begin(), vs.end());
  std::map<std::string, Element> env;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == names.size()) {
      for (const auto& p : s.premises) {
        if (eval(A, p.lhs, env) != eval(A, p.rhs, env)) return true;
      }
      return eval(A, s.conclusion.lhs, env) == eval(A, s.conclusion.rhs, env);
    }
    for (Element e = 0; e < A.size(); ++e) {
      env[names[i]] = e;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

/// Are x and y separated by some commuting pair (h, k) into some SI of v,
/// enumerating every map B -> S and C -> S?
inline bool separable(const agkit::VarietyDescriptor& v, const agkit::Diagram& d, bool left, Element x, Element y,
                      const agkit::Catalog& catalog = agkit::Catalog::standard()) {
  for (std::size_t i : v.si_indices()) {
    const FiniteAlgebra& S = catalog.si[i];
    for (const auto& h : all_homs(d.left, S)) {
      for (const auto& k : all_homs(d.right, S)) {
        bool commutes = true;
        for (Element a = 0; a < d.base.size(); ++a) commutes = commutes && h[d.f.map[a]] == k[d.g.map[a]];
        if (!commutes) continue;
        const Map& m = left ? h : k;
        if (m[x] != m[y]) return true;
      }
    }
  }
  return false;
}

/// Amalgamability straight from the separation criterion.
inline bool amalgamable(const agkit::VarietyDescriptor& v, const agkit::Diagram& d) {
  for (Element x = 0; x < d.left.size(); ++x) {
    for (Element y = x + 1; y < d.left.size(); ++y) {
      if (!separable(v, d, true, x, y)) return false;
    }
  }
  for (Element x = 0; x < d.right.size(); ++x) {
    for (Element y = x + 1; y < d.right.size(); ++y) {
      if (!separable(v, d, false, x, y)) return false;
    }
  }
  return true;
}

/// Small algebras for exhaustive comparisons: the builtins, their subalgebras and
/// the two-factor products of size <= max_size.
inline std::vector<FiniteAlgebra> small_algebras(std::size_t max_size) {
  std::vector<FiniteAlgebra> out;
  const auto& names = agkit::builtin_names();
  for (const auto& n : names) out.push_back(agkit::builtin(n));
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i; j < names.size(); ++j) {
      FiniteAlgebra P = agkit::direct_product({agkit::builtin(names[i]), agkit::builtin(names[j])});
      if (P.size() <= max_size) out.push_back(P);
    }
  }
  return out;
}

}  // namespace oracle

#endif
