#ifndef AGKIT_REPORT_HPP
#define AGKIT_REPORT_HPP

// Check reports and the end-to-end verification pipeline.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "amalgamation.hpp"
#include "axioms.hpp"
#include "congruence.hpp"
#include "lemmas.hpp"
#include "variety.hpp"

namespace agkit {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kExpectationsVersion = 1;

using Json = nlohmann::json;  // std::map backed: keys serialize sorted

struct Record {
  std::string id;
  std::string label;
  bool verdict = false;
  std::optional<bool> expected;  // none: informational
  Json detail = Json::object();

  bool ok() const { return !expected || *expected == verdict; }
  bool operator==(const Record&) const = default;
};

struct Report {
  std::string command;
  std::string version = kToolVersion;
  std::vector<Record> records;

  std::size_t mismatches() const {
    std::size_t n = 0;
    for (const auto& r : records) n += !r.ok();
    return n;
  }
  int exit_code() const { return mismatches() == 0 ? 0 : 1; }
  const Record* find(std::string_view id) const {
    for (const auto& r : records) {
      if (r.id == id) return &r;
    }
    return nullptr;
  }
  bool operator==(const Report&) const = default;
};

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const Record& r) {
  Json j{{"id", r.id}, {"label", r.label}, {"verdict", r.verdict}, {"detail", r.detail}};
  j["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
  j["ok"] = r.ok();
  return j;
}

inline Json to_json(const Report& report) {
  Json records = Json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  const std::size_t bad = report.mismatches();
  return Json{{"schema", kReportSchema},
              {"command", report.command},
              {"version", report.version},
              {"records", std::move(records)},
              {"summary", {{"records", report.records.size()}, {"mismatches", bad}, {"passed", bad == 0}}}};
}

/// Canonical form: sorted keys, two-space indent, trailing newline.
inline std::string dump_report(const Report& report) { return to_json(report).dump(2) + "\n"; }

inline Report load_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, {"JSON"}, e.what());
  }
  if (!j.is_object() || j.value("schema", 0) != kReportSchema) {
    throw Error(ErrorKind::InvalidArgument, "unsupported report schema");
  }
  Report report;
  report.command = j.at("command").get<std::string>();
  report.version = j.at("version").get<std::string>();
  for (const auto& r : j.at("records")) {
    Record rec{r.at("id").get<std::string>(), r.at("label").get<std::string>(), r.at("verdict").get<bool>(),
               std::nullopt, r.at("detail")};
    if (!r.at("expected").is_null()) rec.expected = r.at("expected").get<bool>();
    report.records.push_back(std::move(rec));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Certificates

inline Json map_json(const std::vector<Element>& m) { return Json(m); }

inline Json assignment_json(const FiniteAlgebra& A, const Assignment& a) {
  Json j = Json::object();
  for (const auto& [var, e] : a) j[var] = A.labels()[e];
  return j;
}

inline Json verdict_json(const VarietyVerdict& v, const Catalog& catalog = Catalog::standard()) {
  Json j{{"holds", v.holds}};
  if (v.countermodel) {
    j["countermodel"] = *v.countermodel;
    if (v.witness) j["witness"] = assignment_json(catalog.at(*v.countermodel), *v.witness);
  }
  return j;
}

inline Json diagram_json(const Diagram& d) {
  return Json{{"base", d.base.name()},
              {"left", d.left.name()},
              {"right", d.right.name()},
              {"f", map_json(d.f.map)},
              {"g", map_json(d.g.map)}};
}

inline Json certificate_json(const Diagram& d, const AmalgamationResult& r, const Catalog& catalog = Catalog::standard()) {
  if (const auto* a = std::get_if<Amalgam>(&r)) {
    std::vector<FiniteAlgebra> factors;
    Json names = Json::array();
    for (std::size_t i : a->factors) {
      factors.push_back(catalog.si[i]);
      names.push_back(catalog.si[i].name());
    }
    auto tuples = [&](const Homomorphism& h) {
      Json out = Json::array();
      for (Element e : h.map) {
        out.push_back(factors.size() == 1 ? Json::array({e}) : Json(product_coordinates(factors, e)));
      }
      return out;
    };
    return Json{{"amalgamable", true}, {"factors", names}, {"f1", tuples(a->f1)}, {"g1", tuples(a->g1)}};
  }
  const auto& o = std::get<Obstruction>(r);
  const FiniteAlgebra& X = o.side == Side::Left ? d.left : d.right;
  Json census = Json::array();
  for (const auto& c : o.census) {
    census.push_back(
        {{"si", c.si}, {"left_homs", c.left_homs}, {"right_homs", c.right_homs}, {"commuting_pairs", c.commuting_pairs}});
  }
  return Json{{"amalgamable", false},
              {"side", to_string(o.side)},
              {"pair", {X.labels()[o.pair.first], X.labels()[o.pair.second]}},
              {"hom_census", census}};
}

// ---------------------------------------------------------------------------
// Expectations

struct Expectation {
  std::string id;
  std::string label;
  bool expected;
};

namespace detail {

inline void add_expectation(std::vector<Expectation>& out, std::string id, std::string label, bool expected) {
  out.push_back({std::move(id), std::move(label), expected});
}

inline bool ap_expected(VarietyName v) {
  return v == VarietyName::BA || v == VarietyName::RDBLST || v == VarietyName::RKLST || v == VarietyName::DMBA;
}

// Axiom systems satisfied by each catalog SI, in all_axiom_systems() order.
inline const std::array<std::array<bool, 10>, 4>& axiom_membership() {
  static const std::array<std::array<bool, 10>, 4> m = {{
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},  // 2
      {1, 1, 1, 0, 0, 1, 1, 0, 1, 1},  // 3_dblst
      {1, 1, 0, 1, 1, 1, 0, 1, 1, 1},  // 3_klst
      {1, 1, 0, 1, 0, 1, 0, 0, 0, 1},  // 4_dmba
  }};
  return m;
}

inline std::vector<std::pair<std::size_t, std::size_t>> sample_product_pairs() {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) out.push_back({i, j});
  }
  return out;
}

}  // namespace detail

/// The verdicts the verification run must reproduce, each tagged with the result it
/// comes from.
inline const std::vector<Expectation>& expectations() {
  static const std::vector<Expectation> table = [] {
    std::vector<Expectation> t;
    const auto& names = builtin_names();
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t s = 0; s < all_axiom_systems().size(); ++s) {
        detail::add_expectation(t, "axioms/" + names[i] + "/" + to_string(all_axiom_systems()[s]),
                                "Definitions of the SIs", detail::axiom_membership()[i][s]);
      }
    }
    std::vector<std::string> algebras(names.begin(), names.end());
    for (auto [i, j] : detail::sample_product_pairs()) algebras.push_back(names[i] + "x" + names[j]);
    for (std::size_t k = 0; k < algebras.size(); ++k) {
      const bool si = k < 4;
      for (const char* prop : {"simple", "si", "di", "sc"}) {
        detail::add_expectation(t, "classify/" + algebras[k] + "/" + prop, "Theorem 2.6", si);
      }
    }
    for (std::size_t i = 0; i < 4; ++i) {
      detail::add_expectation(t, "hereditarily-si/" + names[i], "Theorem 3.24 hypotheses", true);
    }
    for (auto v : all_variety_names()) detail::add_expectation(t, std::string("cep/") + to_string(v), "Corollary 2.8", true);
    for (std::size_t i = 0; i < 4; ++i) {
      for (auto v : all_variety_names()) {
        detail::add_expectation(t, "base/" + names[i] + "/" + to_string(v), "Theorem 2.10, Figure 3",
                                variety(v).contains(i));
      }
    }
    for (std::size_t i = 0; i < 4; ++i) {
      detail::add_expectation(t, "discriminator/" + names[i] + "/full", "Theorem 2.8", true);
      detail::add_expectation(t, "discriminator/" + names[i] + "/lattice-reduct", "Theorem 2.8", false);
    }
    for (const auto& r : detail::lemma_rows()) detail::add_expectation(t, std::string("lemma/") + r.id, r.label, true);
    for (auto v : all_variety_names()) {
      const std::string vn = to_string(v);
      detail::add_expectation(t, "ap/" + vn, "Theorem 3.24", detail::ap_expected(v));
      detail::add_expectation(t, "ap-contradiction/" + vn, "Theorems 3.4, 3.11, 3.17, 3.22", true);
    }
    detail::add_expectation(t, "obstruction/G/2,3_dblst,3_klst", "Theorem 3.4", true);
    detail::add_expectation(t, "obstruction/V_DBLST_DMBA/2,3_dblst,4_dmba", "Theorem 3.11", true);
    detail::add_expectation(t, "obstruction/V_KLST_DMBA/2,3_klst,4_dmba", "Theorem 3.17", true);
    detail::add_expectation(t, "obstruction/AG/2,3_dblst,4_dmba", "Theorem 3.22", true);
    detail::add_expectation(t, "obstruction/AG/2,3_klst,4_dmba", "Theorem 3.22", true);
    for (auto v : all_variety_names()) {
      const std::string vn = to_string(v);
      const bool ap = detail::ap_expected(v);
      detail::add_expectation(t, "applications/" + vn + "/tp", "Corollary 4.3", ap);
      detail::add_expectation(t, "applications/" + vn + "/ei", "Corollary 4.6", ap);
      detail::add_expectation(t, "applications/" + vn + "/embedding-property", "Corollary 4.16", ap);
      detail::add_expectation(t, "applications/" + vn + "/model-companion-by-ap", "Corollary 4.21", ap);
      detail::add_expectation(t, "applications/" + vn + "/two-in-amal", "Theorem 4.13", ap);
      detail::add_expectation(t, "applications/" + vn + "/refute-amal-base-2", "Theorem 4.13", !ap);
    }
    detail::add_expectation(t, "applications/G/jep/3_dblst,3_klst", "Corollary 4.16", false);
    return t;
  }();
  return table;
}

inline const Expectation& find_expectation(std::string_view id) {
  for (const auto& e : expectations()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorKind::NotFound, "no expectation for '" + std::string(id) + "'");
}

/// "# agkit-expectations <version>" then id TAB label TAB true|false per line.
inline std::string serialize_expectations() {
  std::string out = "# agkit-expectations " + std::to_string(kExpectationsVersion) + "\n";
  for (const auto& e : expectations()) out += e.id + "\t" + e.label + "\t" + (e.expected ? "true" : "false") + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Verification pipeline

/// Contradiction quasi-identity behind an obstructed diagram of SIs, by the
/// pair {left, right} and the variety.
inline std::optional<std::string> contradiction_for(VarietyName v, const std::string& left, const std::string& right) {
  auto is = [&](const char* a, const char* b) { return (left == a && right == b) || (left == b && right == a); };
  if (is("3_dblst", "3_klst")) return "T3.4";
  if (is("3_dblst", "4_dmba")) return v == VarietyName::AG ? "T3.22" : "T3.11";
  if (is("3_klst", "4_dmba")) return "T3.17";
  return std::nullopt;
}

/// Accumulates records for the verification stages below.
class Verifier {
 public:
  Verifier(std::string command, const Catalog& catalog, const Limits& limits) : catalog_(catalog), limits_(limits) {
    report.command = std::move(command);
  }

  /// Records the verdict of `fn` under the expectation `id`. An exception
  /// becomes a false verdict carrying the error.
  void check(const std::string& id, const std::function<bool(Json&)>& fn) {
    const Expectation& e = find_expectation(id);
    Record r{id, e.label, false, e.expected, Json::object()};
    try {
      r.verdict = fn(r.detail);
    } catch (const Error& err) {
      r.verdict = false;
      r.detail["error"] = {{"kind", to_string(err.kind())}, {"message", err.what()}};
    }
    report.records.push_back(std::move(r));
  }

  const APReport& ap(VarietyName v) {
    auto& slot = ap_[static_cast<std::size_t>(v)];
    if (!slot) slot = classify_ap(variety(v), catalog_, limits_);
    return *slot;
  }

  const Catalog& catalog_;
  const Limits& limits_;
  Report report;

 private:
  std::array<std::optional<APReport>, 8> ap_;
};

inline void verify_axioms(Verifier& p) {
  const Catalog& catalog = p.catalog_;
  const Limits& limits = p.limits_;
  const auto& si = catalog.si;
  for (const auto& A : si) {
    for (auto s : all_axiom_systems()) {
      p.check("axioms/" + A.name() + "/" + to_string(s), [&](Json& d) {
        const AxiomReport r = satisfies_axiom_system(A, s, limits);
        if (const AxiomCheck* bad = r.first_failure()) {
          d["failed"] = bad->label;
          d["sentence"] = bad->text;
          d["witness"] = assignment_json(A, *bad->verdict.witness);
        }
        return r.passed();
      });
    }
  }

}

inline void verify_classification(Verifier& p) {
  const Catalog& catalog = p.catalog_;
  const Limits& limits = p.limits_;
  const auto& si = catalog.si;
  std::vector<FiniteAlgebra> algebras = si;
  for (auto [i, j] : detail::sample_product_pairs()) {
    FiniteAlgebra P = direct_product({si[i], si[j]}, limits);
    algebras.push_back(P.renamed(si[i].name() + "x" + si[j].name()));
  }
  for (const auto& A : algebras) {
    std::optional<Classification> c;
    std::optional<SCReport> sc;
    auto cls = [&]() -> const Classification& {
      if (!c) c = classify(A, limits);
      return *c;
    };
    p.check("classify/" + A.name() + "/simple", [&](Json& d) {
      d["congruences"] = congruence_lattice(A, limits).size();
      return cls().simple;
    });
    p.check("classify/" + A.name() + "/si", [&](Json& d) {
      d["atoms"] = congruence_lattice(A, limits).atoms().size();
      return cls().subdirectly_irreducible;
    });
    p.check("classify/" + A.name() + "/di", [&](Json& d) {
      if (cls().factor_pair) d["factor_pair"] = {cls().factor_pair->first.block_ids(), cls().factor_pair->second.block_ids()};
      return cls().directly_indecomposable;
    });
    p.check("classify/" + A.name() + "/sc", [&](Json& d) {
      sc = check_sc(A);
      Json bad = Json::array();
      for (Element x : sc->sc_violations) bad.push_back(A.labels()[x]);
      d["violations"] = bad;
      return sc->sc;
    });
  }

}

inline void verify_preconditions(Verifier& p) {
  const Catalog& catalog = p.catalog_;
  const Limits& limits = p.limits_;
  const auto& si = catalog.si;
  for (const auto& A : si) {
    p.check("hereditarily-si/" + A.name(), [&](Json& d) {
      d["subalgebras"] = enumerate_subalgebras(A, Ops::All, limits).size();
      return hereditarily_si(A, limits);
    });
  }
  for (auto v : all_variety_names()) {
    p.check(std::string("cep/") + to_string(v), [&](Json& d) {
      auto [checks, ok] = cep_spot_checks(variety(v), catalog, limits);
      d["embeddings_checked"] = checks;
      return ok;
    });
  }

}

inline void verify_base_matrix(Verifier& p) {
  const Catalog& catalog = p.catalog_;
  const Limits& limits = p.limits_;
  const auto& si = catalog.si;
  for (std::size_t i = 0; i < si.size(); ++i) {
    for (auto v : all_variety_names()) {
      p.check("base/" + si[i].name() + "/" + to_string(v), [&](Json& d) {
        const VarietyDescriptor vd = variety(v);
        Json base = Json::array();
        for (const auto& s : vd.base) base.push_back(s.text);
        d["base"] = base;
        return satisfies_base(si[i], vd, limits);
      });
    }
  }

}

inline void verify_discriminators(Verifier& p) {
  const Catalog& catalog = p.catalog_;
  const Limits& limits = p.limits_;
  const auto& si = catalog.si;
  for (const auto& A : si) {
    p.check("discriminator/" + A.name() + "/full", [&](Json& d) {
      const DiscriminatorResult r = discriminator_is_term_op(A, Ops::All, limits);
      d["subuniverses"] = r.subuniverses_checked;
      return r.is_term_operation;
    });
    p.check("discriminator/" + A.name() + "/lattice-reduct", [&](Json& d) {
      const DiscriminatorResult r = discriminator_is_term_op(A, Ops::Lattice, limits);
      d["subuniverses"] = r.subuniverses_checked;
      if (r.violated) {
        Json bad = Json::array();
        const FiniteAlgebra square = direct_product({A, A}, limits);
        for (Element e : *r.violated) bad.push_back(square.labels()[e]);
        d["unpreserved"] = bad;
      }
      return r.is_term_operation;
    });
  }

}

inline void verify_lemmas(Verifier& p, std::optional<VarietyName> only = std::nullopt) {
  const Catalog& catalog = p.catalog_;
  const Limits& limits = p.limits_;
  const LemmaSuiteReport lemmas = lemma_suite(only, catalog, limits);
  for (const auto& r : lemmas.results) {
    p.check("lemma/" + r.record.id, [&](Json& d) {
      d["variety"] = to_string(r.record.variety);
      d["sentence"] = r.record.text;
      d["as_registered"] = verdict_json(r.as_registered, catalog);
      d["with_preamble"] = verdict_json(r.with_preamble, catalog);
      return r.as_registered.holds && r.with_preamble.holds;
    });
  }

}

inline void verify_ap(Verifier& p, VarietyName v) {
  const Catalog& catalog = p.catalog_;
  const Limits& limits = p.limits_;
  const std::string vn = to_string(v);
  p.check("ap/" + vn, [&](Json& d) {
    const APReport& r = p.ap(v);
    d["diagrams"] = r.diagrams.size();
    d["hereditarily_si"] = r.hereditarily_si;
    d["cep"] = r.cep_ok;
    if (const DiagramResult* bad = r.first_obstruction()) {
      d["first_obstruction"] = {{"diagram", diagram_json(bad->diagram)},
                                {"certificate", certificate_json(bad->diagram, bad->result, catalog)}};
    }
    return r.has_ap && r.hereditarily_si && r.cep_ok;
  });
  p.check("ap-contradiction/" + vn, [&](Json& d) {
    const VarietyDescriptor vd = variety(v);
    const auto registry = lemma_registry();
    bool ok = true;
    Json links = Json::array();
    for (const auto& dr : p.ap(v).diagrams) {
      if (is_amalgam(dr.result)) continue;
      const auto id = contradiction_for(v, dr.diagram.left.name(), dr.diagram.right.name());
      const bool holds = id && quasi_identity_holds(vd, find_lemma(registry, *id).sentence, catalog, limits).holds;
      ok = ok && holds;
      links.push_back({{"diagram", dr.diagram.describe()}, {"lemma", id ? Json(*id) : Json(nullptr)}, {"holds", holds}});
    }
    d["obstructed"] = links;
    return ok;
  });
}

inline void verify_obstructions(Verifier& p) {
  const Catalog& catalog = p.catalog_;
  const Limits& limits = p.limits_;
  auto obstruction = [&](VarietyName v, const char* a, const char* b, const char* c) {
    p.check(std::string("obstruction/") + to_string(v) + "/" + a + "," + b + "," + c, [&](Json& d) {
      const VarietyDescriptor vd = variety(v);
      const Diagram dg = Diagram::first(catalog.at(a), catalog.at(b), catalog.at(c));
      const AmalgamationResult r = decide_amalgamation(vd, dg, catalog, limits);
      d["diagram"] = diagram_json(dg);
      d["certificate"] = certificate_json(dg, r, catalog);
      if (is_amalgam(r)) return false;
      const bool rechecked = recheck_obstruction(vd, dg, std::get<Obstruction>(r), catalog);
      d["rechecked"] = rechecked;
      return rechecked;
    });
  };
  obstruction(VarietyName::G, "2", "3_dblst", "3_klst");
  obstruction(VarietyName::V_DBLST_DMBA, "2", "3_dblst", "4_dmba");
  obstruction(VarietyName::V_KLST_DMBA, "2", "3_klst", "4_dmba");
  obstruction(VarietyName::AG, "2", "3_dblst", "4_dmba");
  obstruction(VarietyName::AG, "2", "3_klst", "4_dmba");

}

inline void verify_applications(Verifier& p, VarietyName v) {
  const Catalog& catalog = p.catalog_;
  const Limits& limits = p.limits_;
  const std::string vn = "applications/" + std::string(to_string(v));
  std::optional<Applications> apps;
  auto get = [&]() -> const Applications& {
    if (!apps) apps = applications(variety(v), catalog, limits);
    return *apps;
  };
  p.check(vn + "/tp", [&](Json& d) {
    d["ap"] = get().has_ap;
    d["cep"] = get().cep;
    return get().tp;
  });
  p.check(vn + "/ei", [&](Json& d) {
    d["residually_small"] = get().residually_small;
    return get().ei;
  });
  p.check(vn + "/embedding-property", [&](Json& d) {
    Json pairs = Json::array();
    for (const auto& j : get().jep_on_si_pairs) pairs.push_back({{"left", j.left}, {"right", j.right}, {"jointly_embeddable", j.embeddable}});
    d["si_pairs"] = pairs;
    return get().embedding_property;
  });
  p.check(vn + "/model-companion-by-ap", [&](Json&) { return get().model_companion; });
  p.check(vn + "/two-in-amal", [&](Json&) { return get().two_in_amal; });
  p.check(vn + "/refute-amal-base-2", [&](Json& d) {
    const auto found = refute_amal_base(variety(v), catalog.at("2"), catalog, limits);
    if (found) {
      d["diagram"] = diagram_json(found->diagram);
      d["certificate"] = certificate_json(found->diagram, found->result, catalog);
    }
    return found.has_value();
  });
  if (v == VarietyName::G) {
    p.check("applications/G/jep/3_dblst,3_klst", [&](Json& d) {
      const Diagram dg = Diagram::first(catalog.at("2"), catalog.at("3_dblst"), catalog.at("3_klst"));
      const AmalgamationResult r = decide_amalgamation(variety(VarietyName::G), dg, catalog, limits);
      d["certificate"] = certificate_json(dg, r, catalog);
      return is_amalgam(r);
    });
  }
}

inline Report verify_paper(const Catalog& catalog = Catalog::standard(), const Limits& limits = {}) {
  Verifier p("verify-paper", catalog, limits);
  verify_axioms(p);
  verify_classification(p);
  verify_preconditions(p);
  verify_base_matrix(p);
  verify_discriminators(p);
  verify_lemmas(p);
  for (auto v : all_variety_names()) verify_ap(p, v);
  verify_obstructions(p);
  for (auto v : all_variety_names()) verify_applications(p, v);
  return std::move(p.report);
}

// ---------------------------------------------------------------------------
// Markdown

inline std::string markdown_cell(const Json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  for (char& ch : s) {
    if (ch == '|' || ch == '\n') ch = ' ';
  }
  return s;
}

inline std::string render_markdown(const Report& report) {
  std::ostringstream out;
  out << "# agkit " << report.command << "\n\n";
  out << "| id | label | verdict | expected | ok | detail |\n|---|---|---|---|---|---|\n";
  for (const auto& r : report.records) {
    out << "| " << r.id << " | " << r.label << " | " << (r.verdict ? "true" : "false") << " | "
        << (r.expected ? (*r.expected ? "true" : "false") : "-") << " | " << (r.ok() ? "yes" : "**NO**") << " | "
        << markdown_cell(r.detail) << " |\n";
  }
  out << "\n" << report.records.size() << " records, " << report.mismatches() << " mismatches\n";
  return out.str();
}

/// AP verdicts laid out as the lattice of subvarieties, top row first.
inline std::string render_ap_lattice(const std::vector<APReport>& reports, const Catalog& catalog = Catalog::standard()) {
  auto cell = [&](VarietyName v) -> std::string {
    for (const auto& r : reports) {
      if (r.variety == v) {
        return std::string(to_string(v)) + " " + variety(v).display_name(catalog) + ": AP " + (r.has_ap ? "yes" : "no");
      }
    }
    return "";
  };
  using V = VarietyName;
  std::ostringstream out;
  out << "|   |   |   |\n|---|---|---|\n";
  out << "|   | " << cell(V::AG) << " |   |\n";
  out << "| " << cell(V::V_DBLST_DMBA) << " | " << cell(V::G) << " | " << cell(V::V_KLST_DMBA) << " |\n";
  out << "| " << cell(V::RDBLST) << " | " << cell(V::DMBA) << " | " << cell(V::RKLST) << " |\n";
  out << "|   | " << cell(V::BA) << " |   |\n";
  return out.str();
}

}  // namespace agkit

#endif
