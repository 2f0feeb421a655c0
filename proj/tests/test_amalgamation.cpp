#include <gtest/gtest.h>

#include "agkit/amalgamation.hpp"
#include "oracles.hpp"

using namespace agkit;

namespace {

const std::set<std::string> kWithAP = {"BA", "RDBLST", "RKLST", "DMBA"};

Diagram first(const std::string& a, const std::string& b, const std::string& c) {
  return Diagram::first(Catalog::standard().at(a), Catalog::standard().at(b), Catalog::standard().at(c));
}

// Members of v with at most max_size elements: SIs and two-factor products.
std::vector<FiniteAlgebra> members(const VarietyDescriptor& v, std::size_t max_size) {
  std::vector<FiniteAlgebra> out;
  for (const auto& A : oracle::small_algebras(max_size)) {
    if (satisfies_base(A, v)) out.push_back(A);
  }
  return out;
}

void expect_consistent(const VarietyDescriptor& v, const Diagram& d, const AmalgamationResult& r) {
  EXPECT_EQ(is_amalgam(r), oracle::amalgamable(v, d)) << to_string(v.name) << " " << d.describe();
  if (const auto* a = std::get_if<Amalgam>(&r)) {
    EXPECT_TRUE(verify_amalgam(d, *a));
    EXPECT_TRUE(satisfies_base(a->D, v));
  } else {
    const auto& o = std::get<Obstruction>(r);
    EXPECT_TRUE(recheck_obstruction(v, d, o));
    EXPECT_FALSE(oracle::separable(v, d, o.side == Side::Left, o.pair.first, o.pair.second));
  }
}

}  // namespace

TEST(ClassifyAP, VerdictPerVariety) {
  for (const auto& v : all_varieties()) {
    const APReport r = classify_ap(v);
    EXPECT_TRUE(r.hereditarily_si);
    EXPECT_TRUE(r.cep_ok);
    EXPECT_GT(r.cep_checks, 0u);
    EXPECT_EQ(r.has_ap, kWithAP.contains(to_string(v.name))) << to_string(v.name);
    EXPECT_EQ(r.first_obstruction() == nullptr, r.has_ap);
  }
}

TEST(ClassifyAP, EverySIDiagramAgreesWithOracle) {
  for (const auto& v : all_varieties()) {
    for (const auto& d : classify_ap(v).diagrams) expect_consistent(v, d.diagram, d.result);
  }
}

TEST(ClassifyAP, DeterministicAcrossThreadCounts) {
  Limits one, many;
  one.threads = 1;
  many.threads = 4;
  for (const auto& v : all_varieties()) {
    const APReport a = classify_ap(v, Catalog::standard(), one);
    const APReport b = classify_ap(v, Catalog::standard(), many);
    ASSERT_EQ(a.diagrams.size(), b.diagrams.size());
    for (std::size_t i = 0; i < a.diagrams.size(); ++i) {
      EXPECT_EQ(a.diagrams[i].diagram.f, b.diagrams[i].diagram.f);
      EXPECT_EQ(a.diagrams[i].diagram.g, b.diagrams[i].diagram.g);
      ASSERT_EQ(a.diagrams[i].result.index(), b.diagrams[i].result.index());
      if (const auto* x = std::get_if<Amalgam>(&a.diagrams[i].result)) {
        const auto& y = std::get<Amalgam>(b.diagrams[i].result);
        EXPECT_EQ(x->factors, y.factors);
        EXPECT_EQ(x->f1, y.f1);
        EXPECT_EQ(x->g1, y.g1);
      } else {
        const auto& x2 = std::get<Obstruction>(a.diagrams[i].result);
        const auto& y = std::get<Obstruction>(b.diagrams[i].result);
        EXPECT_EQ(x2.side, y.side);
        EXPECT_EQ(x2.pair, y.pair);
        EXPECT_EQ(x2.census, y.census);
      }
    }
  }
}

TEST(Obstructions, KnownFailingDiagrams) {
  const std::vector<std::tuple<std::string, std::string, std::string>> cases = {
      {"G", "3_dblst", "3_klst"},
      {"V_DBLST_DMBA", "3_dblst", "4_dmba"},
      {"V_KLST_DMBA", "3_klst", "4_dmba"},
      {"AG", "3_dblst", "4_dmba"},
      {"AG", "3_klst", "4_dmba"},
      {"AG", "3_dblst", "3_klst"},
  };
  for (const auto& [name, b, c] : cases) {
    const VarietyDescriptor v = variety(name);
    const Diagram d = first("2", b, c);
    const AmalgamationResult r = decide_amalgamation(v, d);
    ASSERT_FALSE(is_amalgam(r)) << name << " " << d.describe();
    const auto& o = std::get<Obstruction>(r);
    EXPECT_EQ(o.side, Side::Left);
    EXPECT_EQ(d.left.label(o.pair.first), "0");
    EXPECT_EQ(d.left.label(o.pair.second), "a");
    EXPECT_TRUE(recheck_obstruction(v, d, o));
    expect_consistent(v, d, r);
  }
}

TEST(Amalgams, IdenticalEmbeddingsNeedOneFactor) {
  const Diagram d = first("2", "3_dblst", "3_dblst");
  const AmalgamationResult r = decide_amalgamation(variety("RDBLST"), d);
  ASSERT_TRUE(is_amalgam(r));
  const auto& a = std::get<Amalgam>(r);
  EXPECT_EQ(a.factors, (std::vector<std::size_t>{1}));
  EXPECT_EQ(a.D.size(), 3u);
}

TEST(Amalgams, TrivialDiagramsOverThemselves) {
  for (const auto& n : builtin_names()) {
    const Diagram d = first(n, n, n);
    const AmalgamationResult r = decide_amalgamation(variety("AG"), d);
    ASSERT_TRUE(is_amalgam(r)) << n;
    EXPECT_TRUE(verify_amalgam(d, std::get<Amalgam>(r)));
  }
}

TEST(Amalgams, ProductDiagramsAgreeWithOracle) {
  std::size_t seen[2] = {0, 0};
  for (const auto& v : all_varieties()) {
    const auto ms = members(v, 6);
    for (const auto& A : {Catalog::standard().si[0], Catalog::standard().si[1], Catalog::standard().si[2]}) {
      if (!satisfies_base(A, v)) continue;
      for (const auto& B : ms) {
        for (const auto& C : ms) {
          const auto fs = enumerate_embeddings(A, B);
          const auto gs = enumerate_embeddings(A, C);
          if (fs.empty() || gs.empty()) continue;
          const Diagram d = Diagram::make(A, B, C, fs.back(), gs.front());
          const AmalgamationResult r = decide_amalgamation(v, d);
          ++seen[is_amalgam(r)];
          expect_consistent(v, d, r);
        }
      }
    }
  }
  EXPECT_GT(seen[0], 0u);
  EXPECT_GT(seen[1], 0u);
}

TEST(Amalgams, MonotoneInTheVariety) {
  for (const auto& v : all_varieties()) {
    for (const auto& d : si_diagrams(v)) {
      if (!is_amalgam(decide_amalgamation(v, d))) continue;
      for (const auto& w : all_varieties()) {
        if (v.leq(w)) {
          EXPECT_TRUE(is_amalgam(decide_amalgamation(w, d))) << d.describe();
        }
      }
    }
  }
}

TEST(Amalgams, MembershipIsRequired) {
  try {
    decide_amalgamation(variety("RKLST"), first("2", "3_dblst", "3_klst"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInVariety);
  }
}

TEST(Diagrams, MapsMustBeEmbeddings) {
  EXPECT_THROW(first("3_dblst", "4_dmba", "4_dmba"), Error);
  const FiniteAlgebra two = builtin("2");
  const FiniteAlgebra P = direct_product({two, two});
  const auto onto = enumerate_homs(P, two);
  ASSERT_FALSE(onto.empty());
  EXPECT_THROW(Diagram::make(P, two, two, onto.front(), onto.front()), Error);
}

TEST(Refutations, OnlyNonAPVarietiesHaveThem) {
  const FiniteAlgebra& two = Catalog::standard().si[0];
  for (const auto& v : all_varieties()) {
    const auto found = refute_amal_base(v, two);
    EXPECT_EQ(found.has_value(), !kWithAP.contains(to_string(v.name))) << to_string(v.name);
  }
  bool dblst_dmba = false;
  for (const auto& d : amal_base_refutations(variety("AG"), two)) {
    dblst_dmba = dblst_dmba || (d.diagram.left.name() == "3_dblst" && d.diagram.right.name() == "4_dmba");
  }
  EXPECT_TRUE(dblst_dmba);
}

TEST(Applications, FollowTheAPVerdict) {
  for (const auto& v : all_varieties()) {
    const Applications a = applications(v);
    const bool ap = kWithAP.contains(to_string(v.name));
    EXPECT_EQ(a.has_ap, ap);
    EXPECT_TRUE(a.cep);
    EXPECT_EQ(a.tp, ap);
    EXPECT_EQ(a.ei, ap);
    EXPECT_EQ(a.embedding_property, ap);
    EXPECT_EQ(a.model_companion, ap);
    EXPECT_EQ(a.two_in_amal, ap);
  }
  for (const auto& j : applications(variety("G")).jep_on_si_pairs) {
    EXPECT_EQ(j.embeddable, !(j.left == "3_dblst" && j.right == "3_klst")) << j.left << " " << j.right;
  }
}

TEST(ParallelMap, RethrowsLowestIndexError) {
  try {
    detail::parallel_map<int>(50, 4, [](std::size_t i) -> int {
      if (i == 7 || i == 30) throw Error(ErrorKind::InvalidArgument, std::to_string(i));
      return static_cast<int>(i);
    });
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
  const auto squares = detail::parallel_map<std::size_t>(100, 8, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 100; ++i) EXPECT_EQ(squares[i], i * i);
}
