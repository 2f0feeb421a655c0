#ifndef AGKIT_TERM_HPP
#define AGKIT_TERM_HPP

// Terms, identities and quasi-identities over (\/, /\, *, ', 0, 1).
//
// Surface syntax (ASCII):
//   sentence := [equation {"," equation} "=>"] equation
//   equation := term ("=" | "<=") term          s <= t is stored as s /\ t = s
//   term     := meet {"\/" meet}
//   meet     := postfix {"/\" postfix}
//   postfix  := atom {"*" | "'"}
//   atom     := variable | "0" | "1" | "(" term ")"
//   variable := [a-z][a-z0-9]*

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "limits.hpp"

namespace agkit {

struct Term {
  enum class Kind { Var, Zero, One, Join, Meet, Star, Quote };

  Kind kind = Kind::Zero;
  std::string name;        // Var only
  std::vector<Term> args;  // 2 for Join/Meet, 1 for Star/Quote

  static Term var(std::string n) { return Term{Kind::Var, std::move(n), {}}; }
  static Term zero() { return Term{Kind::Zero, {}, {}}; }
  static Term one() { return Term{Kind::One, {}, {}}; }
  static Term join(Term a, Term b) { return Term{Kind::Join, {}, {std::move(a), std::move(b)}}; }
  static Term meet(Term a, Term b) { return Term{Kind::Meet, {}, {std::move(a), std::move(b)}}; }
  static Term star(Term a) { return Term{Kind::Star, {}, {std::move(a)}}; }
  static Term quote(Term a) { return Term{Kind::Quote, {}, {std::move(a)}}; }

  bool operator==(const Term&) const = default;
};

struct Equation {
  Term lhs;
  Term rhs;
  bool operator==(const Equation&) const = default;
};

struct Sentence {
  enum class Kind { Identity, QuasiIdentity };

  std::vector<Equation> premises;
  Equation conclusion;

  Kind kind() const { return premises.empty() ? Kind::Identity : Kind::QuasiIdentity; }
  bool operator==(const Sentence&) const = default;
};

/// Variable name -> element. Ordered by name, which is also the witness order.
using Assignment = std::map<std::string, Element>;

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class SentenceParser {
 public:
  explicit SentenceParser(std::string_view text) : text_(text) {}

  Sentence sentence() {
    std::vector<Equation> eqs{equation()};
    skip();
    while (peek(",")) {
      advance(1);
      eqs.push_back(equation());
      skip();
    }
    Sentence s;
    if (peek("=>")) {
      advance(2);
      s.conclusion = equation();
      s.premises = std::move(eqs);
    } else if (eqs.size() > 1) {
      fail({"=>", ","});
    } else {
      s.conclusion = std::move(eqs.front());
    }
    skip();
    if (pos_ != text_.size()) fail(s.premises.empty() ? std::vector<std::string>{",", "=>", "end of input"}
                                                      : std::vector<std::string>{"end of input"});
    return s;
  }

  Term term_only() {
    Term t = term();
    skip();
    if (pos_ != text_.size()) fail({"\\/", "/\\", "*", "'", "end of input"});
    return t;
  }

 private:
  Equation equation() {
    Term lhs = term();
    skip();
    if (peek("<=")) {
      advance(2);
      Term rhs = term();
      Term left = lhs;
      return Equation{Term::meet(std::move(lhs), std::move(rhs)), std::move(left)};
    }
    if (peek("=") && !peek("=>")) {
      advance(1);
      return Equation{std::move(lhs), term()};
    }
    fail({"=", "<=", "\\/", "/\\", "*", "'"});
  }

  Term term() {
    Term t = meet();
    skip();
    while (peek("\\/")) {
      advance(2);
      t = Term::join(std::move(t), meet());
      skip();
    }
    return t;
  }

  Term meet() {
    Term t = postfix();
    skip();
    while (peek("/\\")) {
      advance(2);
      t = Term::meet(std::move(t), postfix());
      skip();
    }
    return t;
  }

  Term postfix() {
    Term t = atom();
    skip();
    while (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '\'')) {
      t = text_[pos_] == '*' ? Term::star(std::move(t)) : Term::quote(std::move(t));
      advance(1);
      skip();
    }
    return t;
  }

  Term atom() {
    skip();
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '0') {
        advance(1);
        return Term::zero();
      }
      if (c == '1') {
        advance(1);
        return Term::one();
      }
      if (c == '(') {
        advance(1);
        Term t = term();
        skip();
        if (!peek(")")) fail({")", "\\/", "/\\", "*", "'"});
        advance(1);
        return t;
      }
      if (c >= 'a' && c <= 'z') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                                       (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
          ++pos_;
        }
        return Term::var(std::string(text_.substr(start, pos_ - start)));
      }
    }
    fail({"variable", "0", "1", "("});
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(std::string_view tok) const { return text_.substr(pos_, tok.size()) == tok; }
  void advance(std::size_t n) { pos_ += n; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "syntax error at byte " + std::to_string(pos_) + ": expected one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    msg += "}";
    if (pos_ < text_.size()) {
      msg += " but found '" + std::string(1, text_[pos_]) + "'";
    } else {
      msg += " but found end of input";
    }
    throw ParseError(pos_, std::move(expected), msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Sentence parse_sentence(std::string_view text) { return detail::SentenceParser(text).sentence(); }

inline Term parse_term(std::string_view text) { return detail::SentenceParser(text).term_only(); }

// ---------------------------------------------------------------------------
// Printing

namespace detail {

// 0 = join level, 1 = meet level, 2 = postfix operand.
inline void print_term(const Term& t, int context, std::string& out) {
  using K = Term::Kind;
  int own = t.kind == K::Join ? 0 : t.kind == K::Meet ? 1 : 2;
  bool paren = own < context;
  if (paren) out += '(';
  switch (t.kind) {
    case K::Var: out += t.name; break;
    case K::Zero: out += '0'; break;
    case K::One: out += '1'; break;
    case K::Join:
      print_term(t.args[0], 0, out);
      out += " \\/ ";
      print_term(t.args[1], 1, out);
      break;
    case K::Meet:
      print_term(t.args[0], 1, out);
      out += " /\\ ";
      print_term(t.args[1], 2, out);
      break;
    case K::Star:
      print_term(t.args[0], 2, out);
      out += '*';
      break;
    case K::Quote:
      print_term(t.args[0], 2, out);
      out += '\'';
      break;
  }
  if (paren) out += ')';
}

}  // namespace detail

inline std::string to_string(const Term& t) {
  std::string out;
  detail::print_term(t, 0, out);
  return out;
}

inline std::string to_string(const Equation& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

inline std::string to_string(const Sentence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) out += (i ? ", " : "") + to_string(s.premises[i]);
  if (!s.premises.empty()) out += " => ";
  return out + to_string(s.conclusion);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

inline void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  for (const auto& a : t.args) collect_vars(a, out);
}

}  // namespace detail

inline std::vector<std::string> variables(const Term& t) {
  std::set<std::string> vars;
  detail::collect_vars(t, vars);
  return {vars.begin(), vars.end()};
}

inline std::vector<std::string> variables(const Sentence& s) {
  std::set<std::string> vars;
  for (const auto& e : s.premises) {
    detail::collect_vars(e.lhs, vars);
    detail::collect_vars(e.rhs, vars);
  }
  detail::collect_vars(s.conclusion.lhs, vars);
  detail::collect_vars(s.conclusion.rhs, vars);
  return {vars.begin(), vars.end()};
}

inline Element eval_term(const FiniteAlgebra& A, const Term& t, const Assignment& env) {
  using K = Term::Kind;
  switch (t.kind) {
    case K::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw Error(ErrorKind::UnboundVariable, "unbound variable '" + t.name + "'");
      if (it->second >= A.size()) throw Error(ErrorKind::OutOfRange, "assignment of '" + t.name + "' is out of range");
      return it->second;
    }
    case K::Zero: return A.zero();
    case K::One: return A.one();
    case K::Join: return A.join(eval_term(A, t.args[0], env), eval_term(A, t.args[1], env));
    case K::Meet: return A.meet(eval_term(A, t.args[0], env), eval_term(A, t.args[1], env));
    case K::Star: return A.star(eval_term(A, t.args[0], env));
    case K::Quote: return A.quote(eval_term(A, t.args[0], env));
  }
  return A.zero();
}

namespace detail {

/// Postfix program for a term with variables resolved to slots.
struct CompiledTerm {
  struct Op {
    Term::Kind kind;
    std::size_t slot;
  };
  std::vector<Op> ops;

  Element run(const FiniteAlgebra& A, const std::vector<Element>& values, std::vector<Element>& stack) const {
    stack.clear();
    for (const Op& op : ops) {
      switch (op.kind) {
        case Term::Kind::Var: stack.push_back(values[op.slot]); break;
        case Term::Kind::Zero: stack.push_back(A.zero()); break;
        case Term::Kind::One: stack.push_back(A.one()); break;
        case Term::Kind::Star: stack.back() = A.star(stack.back()); break;
        case Term::Kind::Quote: stack.back() = A.quote(stack.back()); break;
        case Term::Kind::Join: {
          Element r = stack.back();
          stack.pop_back();
          stack.back() = A.join(stack.back(), r);
          break;
        }
        case Term::Kind::Meet: {
          Element r = stack.back();
          stack.pop_back();
          stack.back() = A.meet(stack.back(), r);
          break;
        }
      }
    }
    return stack.back();
  }
};

inline void compile_into(const Term& t, const std::vector<std::string>& vars, CompiledTerm& out) {
  for (const auto& a : t.args) compile_into(a, vars, out);
  std::size_t slot = 0;
  if (t.kind == Term::Kind::Var) {
    slot = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), t.name) - vars.begin());
  }
  out.ops.push_back({t.kind, slot});
}

inline CompiledTerm compile(const Term& t, const std::vector<std::string>& vars) {
  CompiledTerm c;
  compile_into(t, vars, c);
  return c;
}

}  // namespace detail

/// Outcome of checking a sentence on one algebra. On failure `witness` is the
/// lexicographically least failing assignment (variables by name, elements by index).
struct Verdict {
  bool holds = true;
  std::optional<Assignment> witness;
  explicit operator bool() const { return holds; }
};

/// Exhaustive check of a sentence on a finite algebra. Premises are tested as
/// soon as their variables are bound, which prunes quasi-identities early.
inline Verdict holds_in(const FiniteAlgebra& A, const Sentence& s, const Limits& limits = {}) {
  const std::vector<std::string> vars = variables(s);
  const std::size_t k = vars.size();
  const std::size_t n = A.size();
  {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      total *= n;
      check_cap(total, limits.assignments, "assignment count");
    }
  }
  struct CompiledEq {
    detail::CompiledTerm lhs, rhs;
    std::size_t depth;  // number of leading variables that must be bound
  };
  auto compile_eq = [&](const Equation& e) {
    std::set<std::string> used;
    detail::collect_vars(e.lhs, used);
    detail::collect_vars(e.rhs, used);
    std::size_t depth = 0;
    for (const auto& v : used) {
      depth = std::max(depth, static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()) + 1);
    }
    return CompiledEq{detail::compile(e.lhs, vars), detail::compile(e.rhs, vars), depth};
  };
  std::vector<std::vector<CompiledEq>> premises_at(k + 1);
  for (const auto& p : s.premises) {
    CompiledEq c = compile_eq(p);
    premises_at[c.depth].push_back(std::move(c));
  }
  const CompiledEq conclusion = compile_eq(s.conclusion);

  std::vector<Element> values(k, 0);
  std::vector<Element> stack;
  auto premises_ok = [&](std::size_t depth) {
    for (const auto& p : premises_at[depth]) {
      if (p.lhs.run(A, values, stack) != p.rhs.run(A, values, stack)) return false;
    }
    return true;
  };

  Verdict verdict;
  if (!premises_ok(0)) return verdict;
  // Odometer over assignments, last variable fastest; `depth` is the number of bound variables.
  std::size_t depth = 0;
  if (k == 0) {
    if (conclusion.lhs.run(A, values, stack) != conclusion.rhs.run(A, values, stack)) {
      verdict.holds = false;
      verdict.witness = Assignment{};
    }
    return verdict;
  }
  std::vector<Element> next(k, 0);
  while (true) {
    if (next[depth] >= n) {
      if (depth == 0) break;
      next[depth] = 0;
      --depth;
      continue;
    }
    values[depth] = next[depth]++;
    if (!premises_ok(depth + 1)) continue;
    if (depth + 1 < k) {
      ++depth;
      continue;
    }
    if (conclusion.lhs.run(A, values, stack) != conclusion.rhs.run(A, values, stack)) {
      verdict.holds = false;
      Assignment w;
      for (std::size_t i = 0; i < k; ++i) w[vars[i]] = values[i];
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  return verdict;
}

inline Verdict holds_in(const FiniteAlgebra& A, std::string_view sentence, const Limits& limits = {}) {
  return holds_in(A, parse_sentence(sentence), limits);
}

inline std::string to_string(const FiniteAlgebra& A, const Assignment& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, value] : a) {
    out += (first ? "" : ", ") + var + "=" + A.label(value);
    first = false;
  }
  return out + "}";
}

}  // namespace agkit

#endif
