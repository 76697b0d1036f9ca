#include "zss/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "zss/dimacs.hpp"
#include "zss/error.hpp"
#include "zss/matrix_io.hpp"

namespace zss {

using nlohmann::json;

std::string_view to_string(Producer p) { return p == Producer::Sat ? "SAT" : "BRUTE_FORCE"; }

Certificate Certificate::make(const Grid& g, Producer producer, const QueryParams& params) {
  Certificate c;
  c.grid = g;
  c.disc = discrepancy(g);
  c.zssf = is_zero_sum_square_free(g);
  c.diagonal = is_diagonal(g);
  c.canonical_key = zss::canonical_key(g, params.group);
  c.producer = producer;
  c.params = params;
  return c;
}

std::vector<std::string> Certificate::mismatches() const {
  std::vector<std::string> out;
  if (disc != discrepancy(grid)) out.push_back("disc " + std::to_string(disc) + " != " + std::to_string(discrepancy(grid)));
  if (zssf != is_zero_sum_square_free(grid)) out.push_back("zssf flag disagrees with grid");
  if (diagonal != is_diagonal(grid)) out.push_back("diagonal flag disagrees with grid");
  if (canonical_key != zss::canonical_key(grid, params.group)) out.push_back("canonical_key disagrees with grid");
  if (params.n != grid.rows() || params.m != grid.cols()) out.push_back("params shape disagrees with grid");
  return out;
}

namespace {

json params_json(const QueryParams& p) {
  json j;
  j["n"] = p.n;
  j["m"] = p.m;
  j["bound"] = p.bound ? json(*p.bound) : json(nullptr);
  j["nondiagonal"] = p.nondiagonal;
  j["group"] = {{"reflections", p.group.use_reflections},
                {"negation", p.group.use_negation},
                {"transpose", p.group.use_transpose}};
  return j;
}

QueryParams params_from(const json& j) {
  QueryParams p;
  p.n = j.at("n").get<int>();
  p.m = j.at("m").get<int>();
  if (!j.at("bound").is_null()) p.bound = j.at("bound").get<int>();
  p.nondiagonal = j.at("nondiagonal").get<bool>();
  const json& g = j.at("group");
  p.group = {g.at("reflections").get<bool>(), g.at("negation").get<bool>(), g.at("transpose").get<bool>()};
  return p;
}

json certificate_json(const Certificate& c) {
  json j;
  j["format_version"] = kCertificateFormatVersion;
  j["n"] = c.grid.rows();
  j["m"] = c.grid.cols();
  json rows = json::array();
  for (int i = 1; i <= c.grid.rows(); ++i) rows.push_back(format_row(c.grid, i));
  j["matrix"] = rows;
  j["disc"] = c.disc;
  j["zssf"] = c.zssf;
  j["diagonal"] = c.diagonal;
  j["canonical_key"] = c.canonical_key;
  j["producer"] = std::string(to_string(c.producer));
  j["params"] = params_json(c.params);
  return j;
}

std::string file_stem(const Certificate& c) {
  std::string key = grid_key(c.grid);
  std::replace(key.begin(), key.end(), ':', '-');
  return key;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw EnvironmentError("cannot write " + path.string());
  out << text;
  if (!out) throw EnvironmentError("write failed for " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EnvironmentError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw EnvironmentError("cannot create results directory " + dir.string() + ": " + ec.message());
}

}  // namespace

std::string to_json(const Certificate& c) { return certificate_json(c).dump(2) + "\n"; }

Certificate certificate_from_json(std::string_view text) {
  Certificate c;
  try {
    const json j = json::parse(text);
    const int version = j.at("format_version").get<int>();
    if (version != kCertificateFormatVersion) {
      throw ParseError("unsupported certificate format_version " + std::to_string(version), 0, 0);
    }
    std::string matrix;
    for (const json& row : j.at("matrix")) matrix += row.get<std::string>() + "\n";
    c.grid = parse_matrix(matrix);
    if (c.grid.rows() != j.at("n").get<int>() || c.grid.cols() != j.at("m").get<int>()) {
      throw ParseError("certificate matrix does not match n, m", 0, 0);
    }
    c.disc = j.at("disc").get<int>();
    c.zssf = j.at("zssf").get<bool>();
    c.diagonal = j.at("diagonal").get<bool>();
    c.canonical_key = j.at("canonical_key").get<std::string>();
    const std::string producer = j.at("producer").get<std::string>();
    if (producer == "SAT") {
      c.producer = Producer::Sat;
    } else if (producer == "BRUTE_FORCE") {
      c.producer = Producer::BruteForce;
    } else {
      throw ParseError("unknown producer '" + producer + "'", 0, 0);
    }
    c.params = params_from(j.at("params"));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0, 0);
  }
  const auto bad = c.mismatches();
  if (!bad.empty()) throw IntegrityError("certificate failed re-verification: " + bad.front());
  return c;
}

std::filesystem::path CertificateStore::save(const Certificate& c) {
  if (const auto bad = c.mismatches(); !bad.empty()) {
    throw IntegrityError("refusing to store inconsistent certificate: " + bad.front());
  }
  ensure_dir(dir_);
  const std::string file = file_stem(c) + ".json";
  write_text(dir_ / file, to_json(c));

  const std::filesystem::path index_path = dir_ / "index.json";
  json index = {{"format_version", kCertificateFormatVersion}, {"certificates", json::array()}};
  if (std::filesystem::exists(index_path)) {
    try {
      index = json::parse(read_text(index_path));
    } catch (const json::exception& e) {
      throw ParseError("malformed index " + index_path.string() + ": " + e.what(), 0, 0);
    }
  }
  json entry = {{"file", file},
                {"disc", c.disc},
                {"canonical_key", c.canonical_key},
                {"producer", std::string(to_string(c.producer))},
                {"params", params_json(c.params)}};
  json& list = index["certificates"];
  if (std::find(list.begin(), list.end(), entry) == list.end()) list.push_back(entry);
  std::sort(list.begin(), list.end(), [](const json& a, const json& b) { return a.dump() < b.dump(); });
  write_text(index_path, index.dump(2) + "\n");
  return dir_ / file;
}

std::filesystem::path CertificateStore::save_cnf(const std::string& stem, const CnfFormula& f) {
  ensure_dir(dir_);
  const std::filesystem::path path = dir_ / (stem + ".cnf");
  write_text(path, to_dimacs(f));
  return path;
}

std::vector<Certificate> CertificateStore::load_all() const {
  const std::filesystem::path index_path = dir_ / "index.json";
  std::vector<Certificate> out;
  if (!std::filesystem::exists(index_path)) return out;
  json index;
  try {
    index = json::parse(read_text(index_path));
  } catch (const json::exception& e) {
    throw ParseError("malformed index " + index_path.string() + ": " + e.what(), 0, 0);
  }
  for (const json& entry : index.at("certificates")) {
    const std::string file = entry.at("file").get<std::string>();
    Certificate c = certificate_from_json(read_text(dir_ / file));
    if (params_json(c.params) != entry.at("params")) {
      // The same grid may be indexed under several queries.
      c.params = params_from(entry.at("params"));
      c.canonical_key = zss::canonical_key(c.grid, c.params.group);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace zss
