#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "strata/lattice/orbit.hpp"

namespace strata::catalog {

struct ClaimRecord {
  std::string id;  // "C1" .. "C20"
  std::string description;
  std::string anchor;     // the statement being reproduced
  std::string operation;  // library call that checks it
  std::string expected;
};

struct ClaimResult {
  ClaimRecord claim;
  bool pass = false;
  std::string observed;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::string error;  // set when the check threw
};

struct ClaimOptions {
  const lattice::OrbitCache* cache = nullptr;
};

struct ClaimRun {
  std::vector<ClaimResult> results;

  std::size_t passed() const;
  bool ok() const { return passed() == results.size(); }
};

const std::vector<ClaimRecord>& claim_registry();

// Runs the claims with the given ids (all of them when empty), in registry
// order. Fails with "no such claim" if an id is not registered.
ClaimRun run_claims(const std::vector<std::string>& ids = {}, const ClaimOptions& options = {});

}  // namespace strata::catalog
