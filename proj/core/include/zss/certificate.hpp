#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zss/cnf.hpp"
#include "zss/grid.hpp"
#include "zss/symmetry.hpp"

namespace zss {

inline constexpr int kCertificateFormatVersion = 1;

enum class Producer { BruteForce, Sat };

std::string_view to_string(Producer p);

/// The query that produced a certificate.
struct QueryParams {
  int n = 0;
  int m = 0;
  std::optional<int> bound;
  bool nondiagonal = false;
  SymmetryGroup group = SymmetryGroup::trivial();

  friend bool operator==(const QueryParams&, const QueryParams&) = default;
};

/// A search outcome that can be re-checked from its grid alone.
struct Certificate {
  Grid grid{1, 1};
  int disc = 0;
  bool zssf = false;
  bool diagonal = false;
  std::string canonical_key;
  Producer producer = Producer::BruteForce;
  QueryParams params;

  /// Computes every derived field from the grid.
  static Certificate make(const Grid& g, Producer producer, const QueryParams& params);

  /// Recomputes the derived fields; returns a description of each mismatch.
  std::vector<std::string> mismatches() const;
};

std::string to_json(const Certificate& c);

/// Parses and re-verifies. Throws ParseError on malformed JSON or fields and
/// IntegrityError when a stored flag disagrees with the grid.
Certificate certificate_from_json(std::string_view text);

/// A directory of certificate files plus index.json listing each file with its
/// query parameters. The directory is created on first write.
class CertificateStore {
 public:
  explicit CertificateStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  /// Writes the certificate (file name derived from shape and key) and
  /// records it in the index. Returns the file path.
  std::filesystem::path save(const Certificate& c);

  /// Writes a DIMACS file beside the certificates.
  std::filesystem::path save_cnf(const std::string& stem, const CnfFormula& f);

  /// Every indexed certificate, re-verified on load.
  std::vector<Certificate> load_all() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace zss
