#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spinorfact/io.hpp"

namespace spinorfact {

struct Config {
  double circularity_tol = 1e-9;
  double second_form_tol = 1e-6;
  double exp_tol = 1e-12;
  double disjoint_tol = 1e-6;
  double fd_step = 1e-4;
  std::size_t grid = 41;
  std::size_t random_elements = 200;
  std::size_t family_samples = 25;
  std::size_t trajectory_points = 20;
  std::size_t hopf_pairs = 20;
  std::size_t null_samples = 10;
  std::uint64_t seed = 1;
  std::string out_dir = ".";

  /// Throws Parse on unknown keys or non-positive tolerances.
  static Config from_json(const io::Json& j, Config base);
  static Config from_json(const io::Json& j);
  io::Json to_json() const;
  void validate() const;
};

struct CheckRecord {
  std::string id;
  std::string claim;
  bool passed = false;
  std::string residual;
  std::string provenance;  // "exact" or the float tolerance used
  io::Json details = io::Json::object();
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;
  Config config;

  bool passed() const;
  io::Json to_json() const;
};

/// Deterministic source of small random rationals and points.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(int max_num = 9, int max_den = 5);
  Point point(int max_num = 9, int max_den = 5);
  /// Sparse random multivector with the given number of nonzero terms.
  MV multivector(int terms, bool even_only = false);
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "spinor", "circular", "villarceau", "imagespace", "all"};
  return names;
}

/// Runs a named verification suite. Throws Parse for unknown names.
Report run_suite(const std::string& name, const Config& config);

}  // namespace spinorfact
