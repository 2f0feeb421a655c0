#ifndef AGKIT_LEMMAS_HPP
#define AGKIT_LEMMAS_HPP

// Registry of the quasi-identities behind the non-amalgamation arguments, each
// checked as a quasi-identity of its variety.
//
// Registry file format (tab separated, '#' starts a comment line):
//   # agkit-lemmas <version>
//   <id> TAB <variety> TAB <label> TAB <sentence>

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "term.hpp"
#include "variety.hpp"

namespace agkit {

inline constexpr int kLemmaRegistryVersion = 1;

struct LemmaRecord {
  std::string id;
  VarietyName variety;
  std::string label;
  std::string text;
  Sentence sentence;
  bool expected = true;
};

namespace detail {

struct LemmaRow {
  const char* id;
  VarietyName variety;
  const char* label;
  const char* text;
};

// Standing hypotheses shared by a variety's records, used for the "with preamble" variant.
inline const char* preamble_for(VarietyName v) {
  switch (v) {
    case VarietyName::V_DBLST_DMBA: return "a* = 0, a' = 1, b \\/ b* = 1, b' = b, b*' = b*";
    case VarietyName::AG: return "a* = 0, a' = 1, b' = b, b** = b, b*' = b*";
    default: return "";
  }
}

inline const std::vector<LemmaRow>& lemma_rows() {
  using V = VarietyName;
  static const std::vector<LemmaRow> rows = {
      {"L3.5a", V::V_DBLST_DMBA, "Lemma 3.5(a)", "x' \\/ x'* = 1"},
      {"L3.5b", V::V_DBLST_DMBA, "Lemma 3.5(b)", "x'** = x'"},
      {"L3.6", V::V_DBLST_DMBA, "Lemma 3.6", "x'' /\\ x'* = x /\\ x'*"},
      {"L3.7", V::V_DBLST_DMBA, "Lemma 3.7", "(a \\/ x) \\/ ((a \\/ x) /\\ (a \\/ x)'*)* = 1"},
      {"J1", V::V_DBLST_DMBA, "Consequence of (J)", "x \\/ (x' \\/ y)'* = 1"},
      {"L3.8", V::V_DBLST_DMBA, "Lemma 3.8", "a* = 0, a' = 1, b*' = b* => (b* \\/ a)' <= b*"},
      {"LH", V::V_DBLST_DMBA, "Equation (LH)", "a* = 0 => ((a \\/ y) /\\ x)* = x*"},
      {"L3.10", V::V_DBLST_DMBA, "Lemma 3.10", "a* = 0 => a \\/ x \\/ (a \\/ x)' = 1"},
      {"L3.13", V::V_KLST_DMBA, "Lemma 3.13", "x*'* /\\ x* = x* /\\ x'"},
      {"L3.14", V::V_KLST_DMBA, "Lemma 3.14", "a* = 0, b' = b, b*' = b* => b* /\\ (b /\\ a)' = 0"},
      {"EqnT", V::V_KLST_DMBA, "Equation (EqnT)", "a* = 0, a' = a, b' = b, b*' = b* => a /\\ b* = 0"},
      {"L3.18", V::AG, "Lemma 3.18", "(x /\\ x'*) \\/ (x /\\ x'*)* = 1"},
      {"L3.19", V::AG, "Lemma 3.19", "a* = 0 => ((x \\/ a) /\\ y)* = y*"},
      {"L3.20", V::AG, "Lemma 3.20", "a* = 0 => x \\/ a \\/ (x \\/ a)'** = 1"},
      {"LX", V::AG, "Lemma LX", "y'' \\/ y* = (x' \\/ x'*)' \\/ y'' \\/ y*"},
      {"181", V::AG, "Lemma 181", "a' = 1, a* = 0 => x' \\/ x'* = 1"},
      {"185", V::AG, "Lemma 185", "a' = 1, a* = 0 => x'** = x'"},
      {"214", V::AG, "Lemma 214", "a' = 1, a* = 0 => x' \\/ y' = (x'* /\\ y'*)*"},
      {"215", V::AG, "Lemma 215", "a' = 1, a* = 0 => (x \\/ y)'' = (x''* /\\ y''*)*"},
      {"256", V::AG, "Lemma 256", "a' = 1, a* = 0 => a \\/ x \\/ x' = 1"},
      {"T3.4", V::G, "Theorem 3.4", "a' = 1, a* = 0, b' = b, b* = 0 => b = 1"},
      {"T3.11", V::V_DBLST_DMBA, "Theorem 3.11", "a* = 0, a' = 1, b \\/ b* = 1, b' = b, b*' = b* => a = 1"},
      {"T3.17", V::V_KLST_DMBA, "Theorem 3.17", "a* = 0, a' = a, b' = b, b*' = b*, b \\/ b* = 1 => b* = 0"},
      {"T3.22", V::AG, "Theorem 3.22", "a* = 0, a' = 1, b' = b, b** = b, b*' = b* => a = 1"},
  };
  return rows;
}

}  // namespace detail

inline std::vector<LemmaRecord> lemma_registry() {
  std::vector<LemmaRecord> out;
  for (const auto& row : detail::lemma_rows()) {
    out.push_back({row.id, row.variety, row.label, row.text, parse_sentence(row.text), true});
  }
  return out;
}

inline const LemmaRecord& find_lemma(const std::vector<LemmaRecord>& registry, std::string_view id) {
  for (const auto& r : registry) {
    if (r.id == id) return r;
  }
  throw Error(ErrorKind::NotFound, "no lemma record '" + std::string(id) + "'");
}

inline std::string serialize_lemma_registry(const std::vector<LemmaRecord>& registry) {
  std::string out = "# agkit-lemmas " + std::to_string(kLemmaRegistryVersion) + "\n";
  out += "# id\tvariety\tlabel\tsentence\n";
  for (const auto& r : registry) {
    out += r.id + "\t" + to_string(r.variety) + "\t" + r.label + "\t" + r.text + "\n";
  }
  return out;
}

inline std::vector<LemmaRecord> parse_lemma_registry(std::string_view text) {
  std::vector<LemmaRecord> out;
  std::size_t offset = 0;
  bool versioned = false;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    const std::size_t line_offset = offset;
    offset = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view tag = "# agkit-lemmas ";
      if (line.substr(0, tag.size()) == tag) {
        if (std::stoi(std::string(line.substr(tag.size()))) != kLemmaRegistryVersion) {
          throw ParseError(line_offset, {std::to_string(kLemmaRegistryVersion)}, "unsupported lemma registry version");
        }
        versioned = true;
      }
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 4) throw ParseError(line_offset, {"4 tab-separated fields"}, "malformed lemma registry line");
    out.push_back({fields[0], variety(fields[1]).name, fields[2], fields[3], parse_sentence(fields[3]), true});
  }
  if (!versioned) throw ParseError(0, {"# agkit-lemmas <version>"}, "lemma registry has no version header");
  return out;
}

/// Adds the standing hypotheses of the record's variety to its premises.
inline Sentence with_preamble(const LemmaRecord& r) {
  Sentence s = r.sentence;
  const std::string preamble = detail::preamble_for(r.variety);
  if (preamble.empty()) return s;
  Sentence p = parse_sentence(preamble + " => 0 = 0");
  for (auto& e : p.premises) {
    if (std::find(s.premises.begin(), s.premises.end(), e) == s.premises.end()) s.premises.push_back(e);
  }
  return s;
}

struct LemmaResult {
  LemmaRecord record;
  VarietyVerdict as_registered;
  VarietyVerdict with_preamble;
  bool passed() const {
    return as_registered.holds == record.expected && with_preamble.holds == record.expected;
  }
};

struct LemmaSuiteReport {
  std::vector<LemmaResult> results;
  std::size_t mismatches() const {
    std::size_t n = 0;
    for (const auto& r : results) n += !r.passed();
    return n;
  }
};

/// Checks every record (optionally only those of one variety) in its variety.
inline LemmaSuiteReport lemma_suite(std::optional<VarietyName> only = std::nullopt,
                                    const Catalog& catalog = Catalog::standard(), const Limits& limits = {},
                                    std::vector<LemmaRecord> registry = lemma_registry()) {
  LemmaSuiteReport report;
  for (const auto& r : registry) {
    if (only && r.variety != *only) continue;
    const VarietyDescriptor v = variety(r.variety);
    report.results.push_back(
        {r, quasi_identity_holds(v, r.sentence, catalog, limits), quasi_identity_holds(v, with_preamble(r), catalog, limits)});
  }
  return report;
}

}  // namespace agkit

#endif
