#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/lattice/cartan.hpp"
#include "strata/lattice/orbit.hpp"

namespace strata::lattice {

// Index of an integer span inside a lattice; empty value means infinite.
struct LatticeIndex {
  std::optional<Integer> value;

  bool infinite() const { return !value.has_value(); }
  std::string str() const { return value ? value->str() : "infinite"; }
};

// Index of span_of inside Z^rank of the given lattice.
LatticeIndex sublattice_index(const std::vector<LatticeVector>& span_of,
                              const BilinearLattice& ambient);
// Index of span_of inside the Z-span of ambient_basis (independent vectors).
// Fails if some vector of span_of is not an integer combination of the basis.
LatticeIndex sublattice_index(const std::vector<LatticeVector>& span_of,
                              const std::vector<LatticeVector>& ambient_basis);

// Homomorphism to {+1,-1} given by its values on a lattice basis.
struct SignCharacter {
  std::vector<int> values_on_basis;

  int evaluate(const std::vector<Integer>& coords) const;
  // Bit i set when the value on basis vector i is -1.
  std::uint64_t mask() const;
  std::string str() const;

  friend bool operator==(const SignCharacter&, const SignCharacter&) = default;
};

SignCharacter character_from_mask(std::uint64_t mask, std::size_t rank);

struct CharacterCensus {
  std::size_t total = 0;                           // 2^rank
  std::vector<SignCharacter> characters;           // survivors, ordered by mask
  std::vector<std::vector<std::size_t>> orbits;    // Weyl orbits on the survivors
  bool weyl_stable = false;                        // survivors form a union of orbits
  bool transitive = false;                         // exactly one orbit
};

// Characters on Q(R), indexed by the system's simple roots. With a filter,
// keeps those whose kernel roots have the given type and span an index-2
// sublattice of Q(R).
CharacterCensus sign_characters(const RootSystemData& system,
                                const std::optional<std::string>& kernel_type_filter = {});

// Roots of the system on which the character is +1.
std::vector<LatticeVector> kernel_roots(const RootSystemData& system, const SignCharacter& chi);

struct CovectorOrbit {
  std::size_t node = 0;            // index into system.simple_roots()
  int bourbaki_node = 0;           // 1-based Bourbaki label of that node
  std::vector<LatticeVector> orbit;
  bool all_indivisible = false;
  bool kernels_are_subsystems = false;
  bool covers_all_subsystems = false;
};

struct SubsystemCensus {
  std::string target;
  std::vector<std::vector<LatticeVector>> subsystems;  // sorted root sets, sorted list
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> representatives;
  bool transitive = false;
  std::optional<CovectorOrbit> covectors;  // set for corank-one targets
};

// All subsystems of the target type, found by searching for simple systems
// made of positive roots whose pairings realise the target Dynkin diagram.
SubsystemCensus classify_subsystems(const RootSystemData& system, const std::string& target,
                                    const OrbitOptions& orbit_options = {});

}  // namespace strata::lattice
