#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "oracle.hpp"
#include "zss/error.hpp"
#include "zss/matrix_io.hpp"

using namespace zss;

namespace {

void expect_parse_error(std::string_view text, int line, int column) {
  try {
    parse_matrix(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << text;
    EXPECT_EQ(e.column(), column) << text;
  }
}

}  // namespace

TEST(MatrixIo, ParsesSimpleGrid) {
  const Grid g = parse_matrix("+-\n-+\n");
  EXPECT_EQ(g.rows(), 2);
  EXPECT_EQ(g.cols(), 2);
  EXPECT_EQ(g.at(1, 1), 1);
  EXPECT_EQ(g.at(1, 2), -1);
  EXPECT_EQ(g.at(2, 1), -1);
  EXPECT_EQ(g.at(2, 2), 1);
}

TEST(MatrixIo, ErrorPositions) {
  expect_parse_error("", 1, 0);
  expect_parse_error("+x\n", 1, 2);
  expect_parse_error("++\n+++\n", 2, 3);
  expect_parse_error("+++\n+\n", 2, 2);
  expect_parse_error("++\n\n", 2, 1);
  expect_parse_error("++\n--", 2, 3);
  expect_parse_error("++\r\n--\r\n", 1, 3);
  expect_parse_error("++\n-- \n", 2, 3);
  expect_parse_error("+ -\n", 1, 2);
}

TEST(MatrixIo, RoundTripFuzz) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 500; ++k) {
    const Grid g = oracle::random_grid(rng, 1 + static_cast<int>(rng() % 20), 1 + static_cast<int>(rng() % 150));
    const std::string text = format_matrix(g);
    EXPECT_EQ(text, oracle::text(oracle::to_mat(g)));
    EXPECT_EQ(parse_matrix(text), g);
  }
}

TEST(MatrixIo, FormatRow) {
  const Grid g = parse_matrix("+--\n-++\n");
  EXPECT_EQ(format_row(g, 1), "+--");
  EXPECT_EQ(format_row(g, 2), "-++");
}

TEST(MatrixIo, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "zss_matrix_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "g.txt";
  std::mt19937_64 rng(4);
  const Grid g = oracle::random_grid(rng, 7, 9);
  write_matrix_file(path, g);
  EXPECT_EQ(read_matrix_file(path), g);
  EXPECT_THROW(read_matrix_file(dir / "missing.txt"), EnvironmentError);
  std::filesystem::remove_all(dir);
}
