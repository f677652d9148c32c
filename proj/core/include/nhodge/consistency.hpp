#pragma once

#include <string>
#include <vector>

#include "nhodge/polyinput.hpp"

namespace nhodge {

struct OracleReport {
  std::string name;
  std::string digest;  // identifies the instance
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteOptions {
  bool oracle_geometry = true;        // brute-force lattice, g and local h comparisons
  bool corrupt_multiplicity = false;  // fault injection: bump every exponent of the product
  std::size_t max_oracle_points = 16;
};

std::string instance_digest(const std::string& text);

// Cross-route and oracle checks on a hypersurface.
std::vector<OracleReport> consistency_suite(const TPolynomial& f, const SuiteOptions& options = {});
// Cross-route checks on a complete intersection (k = 1 also compares with the hypersurface pipeline).
std::vector<OracleReport> consistency_suite(const CISystem& system, const SuiteOptions& options = {});

}  // namespace nhodge
