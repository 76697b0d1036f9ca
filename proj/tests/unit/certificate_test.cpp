#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>

#include "zss/certificate.hpp"
#include "zss/error.hpp"
#include "zss/constructions.hpp"
#include "zss/encode.hpp"

using namespace zss;

namespace {

Certificate sample() {
  QueryParams p{5, 5, 7, true, SymmetryGroup::reflections_negation()};
  return Certificate::make(checkerboard(5, 5), Producer::Sat, p);
}

class StoreTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / "zss_certificate_test";
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

}  // namespace

TEST(Certificate, MakeComputesFields) {
  const Certificate c = sample();
  EXPECT_EQ(c.disc, 7);
  EXPECT_TRUE(c.zssf);
  EXPECT_FALSE(c.diagonal);
  EXPECT_EQ(c.canonical_key, canonical_key(checkerboard(5, 5), SymmetryGroup::reflections_negation()));
  EXPECT_TRUE(c.mismatches().empty());
  EXPECT_EQ(to_string(Producer::BruteForce), "BRUTE_FORCE");
  EXPECT_EQ(to_string(Producer::Sat), "SAT");
}

TEST(Certificate, JsonRoundTrip) {
  const Certificate c = sample();
  const Certificate back = certificate_from_json(to_json(c));
  EXPECT_EQ(back.grid, c.grid);
  EXPECT_EQ(back.disc, c.disc);
  EXPECT_EQ(back.canonical_key, c.canonical_key);
  EXPECT_EQ(back.producer, c.producer);
  EXPECT_EQ(back.params, c.params);
  const auto j = nlohmann::json::parse(to_json(c));
  EXPECT_EQ(j.at("format_version").get<int>(), kCertificateFormatVersion);
}

TEST(Certificate, TamperingIsDetected) {
  auto j = nlohmann::json::parse(to_json(sample()));
  auto bad = j;
  bad["disc"] = 9;
  EXPECT_THROW(certificate_from_json(bad.dump()), IntegrityError);
  bad = j;
  bad["zssf"] = false;
  EXPECT_THROW(certificate_from_json(bad.dump()), IntegrityError);
  bad = j;
  bad["diagonal"] = true;
  EXPECT_THROW(certificate_from_json(bad.dump()), IntegrityError);
  bad = j;
  bad["canonical_key"] = "5x5:0";
  EXPECT_THROW(certificate_from_json(bad.dump()), IntegrityError);
}

TEST(Certificate, MalformedJsonIsParseError) {
  EXPECT_THROW(certificate_from_json("{"), ParseError);
  EXPECT_THROW(certificate_from_json("[]"), ParseError);
  auto j = nlohmann::json::parse(to_json(sample()));
  j["format_version"] = 99;
  EXPECT_THROW(certificate_from_json(j.dump()), ParseError);
  j = nlohmann::json::parse(to_json(sample()));
  j.erase("matrix");
  EXPECT_THROW(certificate_from_json(j.dump()), ParseError);
  j = nlohmann::json::parse(to_json(sample()));
  j["producer"] = "ORACLE";
  EXPECT_THROW(certificate_from_json(j.dump()), ParseError);
}

TEST_F(StoreTest, SaveLoadAndIndex) {
  CertificateStore store(dir_);
  EXPECT_TRUE(store.load_all().empty());
  const Certificate a = sample();
  const Certificate b =
      Certificate::make(figure5_grid(), Producer::Sat, QueryParams{8, 8, 30, true, SymmetryGroup::reflections_negation()});
  const auto pa = store.save(a);
  const auto pb = store.save(b);
  store.save(a);  // idempotent
  EXPECT_TRUE(std::filesystem::exists(pa));
  EXPECT_TRUE(std::filesystem::exists(pb));
  EXPECT_EQ(pa.filename().string().rfind("5x5-", 0), 0u);
  const auto loaded = store.load_all();
  ASSERT_EQ(loaded.size(), 2u);
  std::set<std::string> keys{loaded[0].canonical_key, loaded[1].canonical_key};
  EXPECT_EQ(keys, (std::set<std::string>{a.canonical_key, b.canonical_key}));
  std::ifstream in(dir_ / "index.json");
  const auto index = nlohmann::json::parse(in);
  EXPECT_EQ(index.at("certificates").size(), 2u);
}

TEST_F(StoreTest, TamperedFileFailsOnLoad) {
  CertificateStore store(dir_);
  const auto path = store.save(sample());
  auto j = nlohmann::json::parse(std::ifstream(path));
  j["disc"] = 1;
  std::ofstream(path) << j.dump();
  EXPECT_THROW(store.load_all(), IntegrityError);
}

TEST_F(StoreTest, RefusesInconsistentCertificate) {
  CertificateStore store(dir_);
  Certificate c = sample();
  c.disc = 3;
  EXPECT_THROW(store.save(c), IntegrityError);
}

TEST_F(StoreTest, SavesCnf) {
  CertificateStore store(dir_);
  ZssEncoding enc = encode_query(3, 3, 3, true);
  enc.cnf.comments = {"encoding_version=1"};
  const auto path = store.save_cnf("q-3x3", enc.cnf);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "c encoding_version=1");
}
