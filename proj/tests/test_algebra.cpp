#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "agkit/algebra.hpp"
#include "oracles.hpp"

using namespace agkit;

namespace {

AlgebraTables chain2() { return builtin("2").tables(); }

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Builtins, AllNamesConstruct) {
  for (const auto& n : builtin_names()) {
    const FiniteAlgebra A = builtin(n);
    EXPECT_EQ(A.name(), n);
    EXPECT_NE(A.zero(), A.one());
  }
  EXPECT_EQ(builtin("4_dmba").size(), 4u);
  EXPECT_EQ(builtin("3_klst").quote(1), 1u);
  EXPECT_EQ(builtin("3_dblst").quote(1), 2u);
}

TEST(Builtins, UnknownNameIsNotFound) {
  try {
    builtin("5_foo");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFound);
  }
}

TEST(Construction, RejectsNonCommutativeJoin) {
  AlgebraTables t = builtin("3_klst").tables();
  t.join[0 * 3 + 1] = 2;  // 0 \/ a = 1 but a \/ 0 = a
  try {
    FiniteAlgebra A(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LatticeAxiom);
    EXPECT_NE(std::string(e.what()).find("commutativity"), std::string::npos) << e.what();
  }
}

TEST(Construction, RejectsNonDistributiveLattice) {
  // M3: 0 < p, q, r < 1.
  AlgebraTables t;
  t.name = "M3";
  t.labels = {"0", "p", "q", "r", "1"};
  const std::size_t n = 5;
  t.join.assign(n * n, 4);
  t.meet.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    t.join[x * n + x] = x;
    t.meet[x * n + x] = x;
    t.join[0 * n + x] = t.join[x * n + 0] = x;
    t.meet[4 * n + x] = t.meet[x * n + 4] = x;
  }
  t.star = {4, 0, 0, 0, 0};
  t.quote = {4, 0, 0, 0, 0};
  t.zero = 0;
  t.one = 4;
  try {
    FiniteAlgebra A(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LatticeAxiom);
    EXPECT_NE(std::string(e.what()).find("distributivity"), std::string::npos) << e.what();
  }
}

TEST(Construction, RejectsOutOfRangeEntries) {
  AlgebraTables t = chain2();
  t.star = {1, 7};
  try {
    FiniteAlgebra A(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}

TEST(Construction, RejectsZeroEqualOne) {
  AlgebraTables t = chain2();
  t.one = 0;
  EXPECT_THROW(FiniteAlgebra{t}, Error);
}

TEST(Product, SizeLabelsAndCoordinates) {
  const FiniteAlgebra P = direct_product({builtin("2"), builtin("3_dblst")});
  EXPECT_EQ(P.size(), 6u);
  EXPECT_EQ(P.name(), "2 x 3_dblst");
  EXPECT_EQ(P.label(0), "(0,0)");
  EXPECT_EQ(P.label(5), "(1,1)");
  const std::vector<FiniteAlgebra> f{builtin("2"), builtin("3_dblst")};
  for (Element e = 0; e < P.size(); ++e) {
    const auto c = product_coordinates(f, e);
    EXPECT_EQ(product_element(f, c), e);
    EXPECT_EQ(P.star(e), product_element(f, std::vector<Element>{f[0].star(c[0]), f[1].star(c[1])}));
  }
}

TEST(Product, RespectsCap) {
  Limits tight;
  tight.product_elements = 10;
  try {
    direct_product({builtin("4_dmba"), builtin("3_klst")}, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Subalgebras, MatchSubsetOracleOnSmallAlgebras) {
  for (const auto& A : oracle::small_algebras(16)) {
    for (Ops ops : {Ops::All, Ops::Lattice}) {
      EXPECT_EQ(enumerate_subalgebras(A, ops), [&] {
        auto all = oracle::all_subuniverses(A, ops);
        std::stable_sort(all.begin(), all.end(), [](const ElementSet& a, const ElementSet& b) {
          return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return all;
      }()) << A.name();
    }
  }
}

TEST(Subalgebras, OnePointExtensionAgreesWithSubsetScan) {
  const FiniteAlgebra P = direct_product({builtin("2"), builtin("3_klst"), builtin("3_dblst")});
  ASSERT_EQ(P.size(), 18u);
  Limits scan;
  scan.subset_scan_size = 20;
  Limits bfs;
  bfs.subset_scan_size = 4;
  EXPECT_EQ(enumerate_subalgebras(P, Ops::All, scan), enumerate_subalgebras(P, Ops::All, bfs));
}

TEST(Subalgebras, SmallestIsTheConstants) {
  const auto subs = enumerate_subalgebras(builtin("4_dmba"));
  ASSERT_EQ(subs.size(), 2u);
  EXPECT_EQ(subs.front(), (ElementSet{0, 3}));
  const FiniteAlgebra two = induced_subalgebra(builtin("4_dmba"), subs.front(), "two");
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(two.star(0), 1u);
}

TEST(Json, RoundTripsEveryBuiltinAndProduct) {
  for (const auto& A : oracle::small_algebras(16)) {
    const std::string text = dump_algebra(A);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(load_algebra(text), A);
    EXPECT_EQ(dump_algebra(load_algebra(text)), text);
  }
}

TEST(Json, GoldenDocument) {
  EXPECT_EQ(dump_algebra(builtin("3_klst")), read(AGKIT_SOURCE_DIR "/tests/golden/3_klst.json"));
  EXPECT_EQ(dump_algebra(builtin("4_dmba")), read(AGKIT_SOURCE_DIR "/tests/golden/4_dmba.json"));
}

TEST(Json, SyntaxErrorCarriesOffset) {
  const std::string text = R"({"name": "x", "size": 2,, })";
  try {
    load_algebra(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_EQ(text[e.offset()], ',');
  }
}

TEST(Json, OutOfRangeEntry) {
  std::string text = dump_algebra(builtin("2"));
  const auto pos = text.find("\"star\":[1,0]");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 12, "\"star\":[1,9]");
  try {
    load_algebra(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}

TEST(Json, LatticeViolationSurfacesFromDocument) {
  std::string text = dump_algebra(builtin("3_klst"));
  const auto pos = text.find("\"join\":[[0,1,2]");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 15, "\"join\":[[0,2,2]");
  try {
    load_algebra(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LatticeAxiom);
  }
}
