#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "quasichar/errors.hpp"
#include "quasichar/families.hpp"
#include "quasichar/serialization.hpp"

using namespace quasichar;

namespace {

using Cartan = std::vector<std::vector<long>>;

/// a_ij = <alpha_i, alpha_j^vee>, written out by hand per type.
Cartan cartan(char type, std::size_t m) {
  Cartan a(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) a[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j, long aij = -1, long aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < m; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 2 < m; ++i) link(i, i + 1);
      link(m - 2, m - 1, -2, -1);
      break;
    case 'C':
      for (std::size_t i = 0; i + 2 < m; ++i) link(i, i + 1);
      link(m - 2, m - 1, -1, -2);
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < m; ++i) link(i, i + 1);
      link(m - 3, m - 1);
      break;
    case 'E':
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (std::size_t i = 3; i + 1 < m; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2, -2, -1);
      link(2, 3);
      break;
    case 'G':
      link(0, 1, -3, -1);
      break;
  }
  return a;
}

std::vector<std::vector<long>> columns(const IntMatrix& s) {
  std::vector<std::vector<long>> out;
  for (std::size_t c = 0; c < s.cols(); ++c) {
    std::vector<long> v;
    for (std::size_t r = 0; r < s.rows(); ++r) v.push_back(s(r, c).get_si());
    out.push_back(v);
  }
  return out;
}

const std::vector<std::pair<char, std::size_t>> kAllTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 4}, {'B', 5}, {'C', 3},
    {'C', 4}, {'C', 5}, {'D', 4}, {'D', 5}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};

std::size_t expected_roots(char type, std::size_t m) {
  switch (type) {
    case 'A': return m * (m + 1) / 2;
    case 'B':
    case 'C': return m * m;
    case 'D': return m * (m - 1);
    case 'E': return m == 6 ? 36 : m == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

}  // namespace

TEST(RootSystems, CountsNonnegativityAndHighestRoot) {
  for (auto [type, m] : kAllTypes) {
    const auto spec = root_system_spec(type, m);
    EXPECT_EQ(spec.matrix.cols(), expected_roots(type, m)) << spec.label();
    const auto cols = columns(spec.matrix);
    std::vector<long> highest(spec.marks.begin(), spec.marks.end());
    EXPECT_NE(std::find(cols.begin(), cols.end(), highest), cols.end());
    for (const auto& c : cols) {
      EXPECT_TRUE(std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; }));
      EXPECT_TRUE(std::any_of(c.begin(), c.end(), [](long x) { return x > 0; }));
    }
    std::size_t sum = 0;
    for (auto n : spec.marks) sum += n;
    EXPECT_EQ(spec.coxeter, sum + 1);
  }
}

TEST(RootSystems, ClosedUnderSimpleReflections) {
  for (auto [type, m] : kAllTypes) {
    const auto spec = root_system_spec(type, m);
    const auto a = cartan(type, m);
    const auto cols = columns(spec.matrix);
    const std::set<std::vector<long>> roots(cols.begin(), cols.end());
    for (const auto& beta : cols)
      for (std::size_t j = 0; j < m; ++j) {
        long pairing = 0;
        for (std::size_t i = 0; i < m; ++i) pairing += beta[i] * a[i][j];
        auto image = beta;
        image[j] -= pairing;
        auto neg = image;
        for (auto& x : neg) x = -x;
        EXPECT_TRUE(roots.count(image) || roots.count(neg)) << spec.label();
      }
  }
}

TEST(RootSystems, TableRows) {
  auto g2 = root_system_spec('G', 2);
  EXPECT_EQ(g2.marks, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(g2.coxeter, 6u);
  auto a3 = root_system_spec('A', 3);
  EXPECT_EQ(a3.marks, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(a3.coxeter, 4u);
  EXPECT_EQ(root_system_spec('E', 8).marks, (std::vector<std::size_t>{2, 3, 4, 6, 5, 4, 3, 2}));
  EXPECT_EQ(root_system_spec('F', 4).marks, (std::vector<std::size_t>{2, 3, 4, 2}));
  EXPECT_EQ(root_system_spec('D', 5).marks, (std::vector<std::size_t>{1, 2, 2, 1, 1}));
  EXPECT_EQ(root_system_spec('C', 4).marks, (std::vector<std::size_t>{2, 2, 2, 1}));
}

TEST(RootSystems, E6MatchesThePrintedMatrix) {
  const auto fixture = load_arrangement(QUASICHAR_TEST_DATA "/e6.txt").matrix();
  const auto generated = root_system_spec('E', 6).matrix;
  auto a = columns(fixture), b = columns(generated);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(RootSystems, E6Constituents) {
  const auto chi = root_system_quasipolynomial(root_system_spec('E', 6));
  ASSERT_EQ(chi.period, 6u);
  auto head = [](long c2, long c1, long c0) {
    return IntPolynomial::from_descending({1, -36, 510, -3600, c2, c1, c0});
  };
  EXPECT_EQ(chi.constituent(1), head(13089, -22284, 12320));
  EXPECT_EQ(chi.constituent(2), head(13224, -23904, 16640));
  EXPECT_EQ(chi.constituent(3), head(13089, -22284, 12960));
  EXPECT_EQ(chi.constituent(6), head(13224, -23904, 17280));
}

TEST(RootSystems, InvalidPairs) {
  EXPECT_THROW(root_system_spec('A', 0), InputError);
  EXPECT_THROW(root_system_spec('B', 1), InputError);
  EXPECT_THROW(root_system_spec('C', 2), InputError);
  EXPECT_THROW(root_system_spec('D', 3), InputError);
  EXPECT_THROW(root_system_spec('E', 5), InputError);
  EXPECT_THROW(root_system_spec('E', 9), InputError);
  EXPECT_THROW(root_system_spec('F', 5), InputError);
  EXPECT_THROW(root_system_spec('G', 3), InputError);
  EXPECT_THROW(root_system_spec('H', 3), InputError);
}

TEST(RootSystems, ColumnOrderDoesNotMatter) {
  std::mt19937_64 rng(41);
  for (auto [type, m] : std::vector<std::pair<char, std::size_t>>{{'A', 3}, {'B', 3}, {'G', 2}, {'C', 3}}) {
    const auto spec = root_system_spec(type, m);
    const auto want = characteristic_quasipolynomial(spec.arrangement());
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> perm(spec.matrix.cols());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(characteristic_quasipolynomial(Arrangement(spec.matrix.select_columns(perm))), want);
    }
  }
}

TEST(RootSystems, GfAgreesWithSubsetSums) {
  for (auto [type, m] : std::vector<std::pair<char, std::size_t>>{
           {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
    const auto spec = root_system_spec(type, m);
    const auto chi = characteristic_quasipolynomial(spec.arrangement());
    const auto series = series_expand(root_system_gf(spec), 3 * spec.coxeter);
    for (std::size_t q = 1; q <= series.size(); ++q) EXPECT_EQ(series[q - 1], evaluate(chi, q)) << spec.label();
  }
}

TEST(MidHyperplane, SizesAndOrder) {
  EXPECT_EQ(midhyperplane(4).size(), 9u);
  EXPECT_EQ(midhyperplane(5).size(), 25u);
  EXPECT_EQ(midhyperplane(6).size(), 60u);
  EXPECT_THROW(midhyperplane(3), InputError);
  const auto m4 = midhyperplane(4).matrix();
  EXPECT_EQ(m4, IntMatrix::from_rows({{1, 1, 1, 0, 0, 0, 1, 1, 1},
                                      {-1, 0, 0, 1, 1, 0, 1, -1, -1},
                                      {0, -1, 0, -1, 0, 1, -1, 1, -1},
                                      {0, 0, -1, 0, -1, -1, -1, -1, 1}}));
}

TEST(FamilyIds, Parse) {
  auto id = parse_family_id("mid:5");
  EXPECT_EQ(id.kind, FamilyId::Kind::MidHyperplane);
  EXPECT_EQ(id.rank, 5u);
  EXPECT_EQ(family_arrangement(id).size(), 25u);
  id = parse_family_id("E:6");
  EXPECT_EQ(id.type, 'E');
  EXPECT_EQ(id.to_string(), "E:6");
  EXPECT_EQ(family_arrangement(parse_family_id("G:2")).label(), "G:2");
  for (const char* bad : {"B", "B:", "mid:3", "mid:x", "Z:2", "AA:3", "A:-1", "C:2", ":4"})
    EXPECT_THROW(parse_family_id(bad), InputError) << bad;
}
