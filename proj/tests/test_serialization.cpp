#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "quasichar/errors.hpp"
#include "quasichar/families.hpp"
#include "quasichar/serialization.hpp"

using namespace quasichar;

TEST(MatrixFile, ParseAndFormat) {
  const std::string text = "# B2\n2 4\n1 0 1 1\n0 1 1 2\n";
  const IntMatrix s = parse_matrix(text);
  EXPECT_EQ(s, IntMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 2}}));
  EXPECT_EQ(format_matrix(s), "2 4\n1 0 1 1\n0 1 1 2\n");
  EXPECT_EQ(parse_matrix(format_matrix(midhyperplane(5).matrix())), midhyperplane(5).matrix());
}

TEST(MatrixFile, BigEntriesAndComments) {
  const IntMatrix s = parse_matrix("1 2\n# comment between rows\n-123456789012345678901234 5\n");
  EXPECT_EQ(s(0, 0), BigInt("-123456789012345678901234"));
}

TEST(MatrixFile, RejectsMalformedInput) {
  for (const char* bad : {"", "2\n1 2\n", "1 2\n1  2\n", "1 2\n1 2 3\n", "2 2\n1 2\n", "1 2\n1 x\n",
                          "1 1\n1\n2\n", "0 3\n", "1 2\n1 2 \n", "-1 2\n1 2\n"})
    EXPECT_THROW(parse_matrix(std::string(bad)), InputError) << '"' << bad << '"';
}

TEST(MatrixFile, LoadFromDisk) {
  const std::string path = ::testing::TempDir() + "/quasichar_one.txt";
  {
    std::ofstream f(path);
    f << "1 1\n1\n";
  }
  const auto a = load_arrangement(path);
  EXPECT_EQ(a.label(), path);
  EXPECT_EQ(a.size(), 1u);
  std::remove(path.c_str());
  EXPECT_THROW(load_arrangement(path), InputError);
  EXPECT_THROW(load_arrangement(QUASICHAR_TEST_DATA "/missing.txt"), InputError);
}

TEST(Json, QuasiPolynomialRoundTrip) {
  const auto chi = characteristic_quasipolynomial(midhyperplane(5));
  const std::string text = to_json(chi);
  EXPECT_EQ(quasipoly_from_json(text), chi);
  EXPECT_NE(text.find("\"60\""), std::string::npos);
  EXPECT_NE(text.find("\"-25\""), std::string::npos);
}

TEST(Json, QuasiPolynomialAcceptsPlainIntegers) {
  const auto chi = quasipoly_from_json(R"({"m": 1, "period": 1, "constituents": {"1": [1, -1]}})");
  EXPECT_EQ(chi.constituent(1), (IntPolynomial{-1, 1}));
}

TEST(Json, QuasiPolynomialRejectsMalformedDocuments) {
  for (const char* bad : {"{", "[]", R"({"m": 1, "period": 2, "constituents": {"1": ["1", "-1"]}})",
                          R"({"m": 1, "period": 1, "constituents": {"1": ["1"]}})",
                          R"({"m": 1, "period": 1, "constituents": {"3": ["1", "0"]}})",
                          R"({"m": 1, "period": 0, "constituents": {}})",
                          R"({"m": 1, "period": 1, "constituents": {"1": ["1", "x"]}})"})
    EXPECT_THROW(quasipoly_from_json(bad), InputError) << bad;
}

TEST(Json, GfRoundTrip) {
  const auto gf = root_system_gf(root_system_spec('E', 8));
  EXPECT_EQ(gf_from_json(to_json(gf)), gf);
  const RationalGF small{IntPolynomial{0, 0, 1}, {{1, 2}}};
  EXPECT_EQ(gf_from_json(to_json(small)), small);
  EXPECT_EQ(gf_from_json(R"({"numerator": [0, 0, 1], "denominator": [[1, 2]]})"), small);
  EXPECT_THROW(gf_from_json(R"({"numerator": [1], "denominator": [[0, 2]]})"), InputError);
  EXPECT_THROW(gf_from_json(R"({"numerator": [1], "denominator": [[1]]})"), InputError);
  EXPECT_THROW(gf_from_json(R"({"numerator": 1})"), InputError);
}
