#include "strata/lattice/subsystems.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "strata/lattice/enumerate.hpp"
#include "strata/lattice/smith.hpp"

namespace strata::lattice {

namespace {

LatticeIndex index_from_rows(const IntegerMatrix& rows, std::size_t n) {
  if (rows.empty())
    return n == 0 ? LatticeIndex{Integer(1)} : LatticeIndex{};
  auto d = elementary_divisors(rows);
  if (d.size() < n)
    return {};
  Integer prod = 1;
  for (const auto& x : d)
    prod *= x;
  return {prod};
}

using RootMask = std::array<std::uint64_t, 2>;

void set_bit(RootMask& m, std::size_t i) { m[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const RootMask& m, std::size_t i) { return (m[i / 64] >> (i % 64)) & 1u; }

// Integer view of a root system: simple coordinates, pairings, reflections.
struct RootTable {
  std::vector<std::vector<int>> coords;
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::vector<int>> pairing;
  std::vector<bool> positive;
  std::vector<std::vector<std::size_t>> simple_perm;  // simple reflection j on root indices

  explicit RootTable(const RootSystemData& sys) {
    const auto& roots = sys.roots();
    if (roots.size() > 128)
      fail("subsystem search supports at most 128 roots");
    for (std::size_t i = 0; i < roots.size(); ++i) {
      std::vector<int> c;
      bool nonneg = true;
      for (const auto& x : sys.root_lattice_coordinates(roots[i])) {
        c.push_back(x.convert_to<int>());
        nonneg = nonneg && c.back() >= 0;
      }
      positive.push_back(nonneg);
      index.emplace(c, i);
      coords.push_back(std::move(c));
    }
    pairing.assign(roots.size(), std::vector<int>(roots.size(), 0));
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i; j < roots.size(); ++j)
        pairing[i][j] = pairing[j][i] = to_integer(roots[i].dot(roots[j])).convert_to<int>();
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      auto sidx = lookup(unit(s, sys.rank()));
      std::vector<std::size_t> perm(roots.size());
      for (std::size_t i = 0; i < roots.size(); ++i) {
        auto c = coords[i];
        c[s] += pairing[i][sidx];
        perm[i] = lookup(c);
      }
      simple_perm.push_back(std::move(perm));
    }
  }

  static std::vector<int> unit(std::size_t s, std::size_t n) {
    std::vector<int> u(n, 0);
    u[s] = 1;
    return u;
  }

  std::size_t lookup(const std::vector<int>& c) const {
    auto it = index.find(c);
    if (it == index.end())
      fail("root table lookup failed (not a root)");
    return it->second;
  }

  RootMask apply(std::size_t s, const RootMask& m) const {
    RootMask out{0, 0};
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (test_bit(m, i))
        set_bit(out, simple_perm[s][i]);
    return out;
  }
};

bool supported_pair(const std::string& system, const std::string& target) {
  static const std::set<std::string> systems = {"E7", "E6", "A1", "A2", "A3", "A4",
                                                "A5", "A6", "A7"};
  static const std::set<std::string> targets = {"A7", "A6", "A5", "E6", "A4",
                                                "A3", "A2", "A1"};
  return systems.count(system) && targets.count(target);
}

}  // namespace

LatticeIndex sublattice_index(const std::vector<LatticeVector>& span_of,
                              const BilinearLattice& ambient) {
  IntegerMatrix rows;
  for (const auto& v : span_of) {
    if (v.size() != ambient.rank())
      fail("sublattice_index: vector of the wrong rank");
    std::vector<Integer> r;
    for (const auto& x : v.coords()) {
      if (!is_integral(x))
        fail("sublattice_index: " + v.expression() + " is not a lattice vector");
      r.push_back(to_integer(x));
    }
    rows.push_back(std::move(r));
  }
  return index_from_rows(rows, ambient.rank());
}

LatticeIndex sublattice_index(const std::vector<LatticeVector>& span_of,
                              const std::vector<LatticeVector>& ambient_basis) {
  std::vector<Vector> basis;
  for (const auto& b : ambient_basis)
    basis.push_back(b.coords());
  if (rank_of(basis) != basis.size())
    fail("sublattice_index: ambient basis is dependent");
  IntegerMatrix rows;
  for (const auto& v : span_of) {
    auto c = coordinates_in(basis, v.coords());
    if (!c)
      fail("sublattice_index: " + v.expression() + " is outside the ambient span");
    std::vector<Integer> r;
    for (const auto& x : *c) {
      if (!is_integral(x))
        fail("sublattice_index: " + v.expression() + " is not in the ambient lattice");
      r.push_back(to_integer(x));
    }
    rows.push_back(std::move(r));
  }
  return index_from_rows(rows, basis.size());
}

int SignCharacter::evaluate(const std::vector<Integer>& coords) const {
  if (coords.size() != values_on_basis.size())
    fail("character evaluated on a vector of the wrong rank");
  int parity = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (values_on_basis[i] == -1 && boost::multiprecision::bit_test(
                                        coords[i] < 0 ? Integer(-coords[i]) : coords[i], 0))
      parity ^= 1;
  return parity ? -1 : 1;
}

std::uint64_t SignCharacter::mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < values_on_basis.size(); ++i)
    if (values_on_basis[i] == -1)
      m |= std::uint64_t{1} << i;
  return m;
}

std::string SignCharacter::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_on_basis.size(); ++i)
    s += (i ? "," : "") + std::string(values_on_basis[i] == 1 ? "+" : "-");
  return s + ")";
}

SignCharacter character_from_mask(std::uint64_t mask, std::size_t rank) {
  SignCharacter chi;
  for (std::size_t i = 0; i < rank; ++i)
    chi.values_on_basis.push_back(((mask >> i) & 1u) ? -1 : 1);
  return chi;
}

std::vector<LatticeVector> kernel_roots(const RootSystemData& system, const SignCharacter& chi) {
  std::vector<LatticeVector> out;
  for (const auto& r : system.roots())
    if (chi.evaluate(system.root_lattice_coordinates(r)) == 1)
      out.push_back(r);
  return out;
}

CharacterCensus sign_characters(const RootSystemData& system,
                                const std::optional<std::string>& kernel_type_filter) {
  std::size_t rank = system.rank();
  if (rank > 20)
    fail("sign_characters: rank too large to enumerate");
  CharacterCensus census;
  census.total = std::size_t{1} << rank;

  std::vector<std::vector<Integer>> coords;
  for (const auto& r : system.roots())
    coords.push_back(system.root_lattice_coordinates(r));

  std::vector<std::uint64_t> survivors;
  for (std::uint64_t m = 0; m < census.total; ++m) {
    auto chi = character_from_mask(m, rank);
    if (kernel_type_filter) {
      std::vector<LatticeVector> ker;
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (chi.evaluate(coords[i]) == 1)
          ker.push_back(system.roots()[i]);
      if (cartan_type(ker).type_label != *kernel_type_filter)
        continue;
      auto idx = sublattice_index(ker, system.simple_roots());
      if (idx.infinite() || *idx.value != 2)
        continue;
    }
    survivors.push_back(m);
    census.characters.push_back(chi);
  }

  // (s_j chi)(alpha_k) = chi(alpha_k + (alpha_k . alpha_j) alpha_j)
  auto cartan = system.cartan();
  auto act = [&](std::size_t j, std::uint64_t m) {
    std::uint64_t out = m;
    for (std::size_t k = 0; k < rank; ++k)
      if ((cartan[k][j] & 1) && ((m >> j) & 1u))
        out ^= std::uint64_t{1} << k;
    return out;
  };

  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < survivors.size(); ++i)
    pos[survivors[i]] = i;
  census.weyl_stable = true;
  std::vector<bool> done(survivors.size(), false);
  for (std::size_t s = 0; s < survivors.size(); ++s) {
    if (done[s])
      continue;
    std::vector<std::size_t> orbit{s};
    done[s] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (std::size_t j = 0; j < rank; ++j) {
        auto it = pos.find(act(j, survivors[orbit[q]]));
        if (it == pos.end()) {
          census.weyl_stable = false;
          continue;
        }
        if (!done[it->second]) {
          done[it->second] = true;
          orbit.push_back(it->second);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    census.orbits.push_back(std::move(orbit));
  }
  census.transitive = census.weyl_stable && census.orbits.size() == 1;
  return census;
}

SubsystemCensus classify_subsystems(const RootSystemData& system, const std::string& target,
                                    const OrbitOptions& orbit_options) {
  if (!supported_pair(system.type_label(), target))
    fail("classify_subsystems: unsupported pair (" + target + " in " + system.type_label() + ")");

  RootTable table(system);
  std::size_t nroots = system.roots().size();

  // Target diagram, a search order in which each vertex after the first of
  // its component is adjacent to an earlier one, and the target's positive
  // roots in its own simple coordinates.
  auto tc = cartan_matrix(target);
  std::size_t tr = tc.size();
  if (tr > system.rank())
    fail("classify_subsystems: target rank exceeds system rank");
  std::vector<std::size_t> order;
  std::vector<long> parent(tr, -1);
  {
    std::vector<bool> seen(tr, false);
    for (std::size_t s = 0; s < tr; ++s) {
      if (seen[s])
        continue;
      std::deque<std::size_t> q{s};
      seen[s] = true;
      while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        order.push_back(v);
        for (std::size_t w = 0; w < tr; ++w)
          if (tc[v][w] == -1 && !seen[w]) {
            seen[w] = true;
            parent[w] = static_cast<long>(v);
            q.push_back(w);
          }
      }
    }
  }
  std::vector<std::vector<int>> target_pos;
  {
    auto tl = root_lattice(target);
    for (const auto& r : enumerate_roots(tl)) {
      std::vector<int> c;
      bool nonneg = true;
      for (const auto& x : r.coords()) {
        c.push_back(to_integer(x).convert_to<int>());
        nonneg = nonneg && c.back() >= 0;
      }
      if (nonneg)
        target_pos.push_back(std::move(c));
    }
  }

  std::vector<std::vector<std::size_t>> plus_neighbors(nroots);
  std::vector<std::size_t> positives;
  for (std::size_t i = 0; i < nroots; ++i) {
    if (table.positive[i])
      positives.push_back(i);
    for (std::size_t j = 0; j < nroots; ++j)
      if (table.positive[j] && table.pairing[i][j] == 1)
        plus_neighbors[i].push_back(j);
  }

  std::set<RootMask> found;
  std::vector<std::size_t> chosen(tr);
  std::size_t rank = system.rank();
  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (depth == tr) {
      RootMask m{0, 0};
      for (const auto& c : target_pos) {
        std::vector<int> sum(rank, 0);
        for (std::size_t k = 0; k < tr; ++k)
          if (c[k])
            for (std::size_t x = 0; x < rank; ++x)
              sum[x] += c[k] * table.coords[chosen[k]][x];
        set_bit(m, table.lookup(sum));
        for (auto& x : sum)
          x = -x;
        set_bit(m, table.lookup(sum));
      }
      found.insert(m);
      return;
    }
    std::size_t v = order[depth];
    const auto& cands = parent[v] >= 0 ? plus_neighbors[chosen[static_cast<std::size_t>(parent[v])]]
                                       : positives;
    for (auto r : cands) {
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t u = order[d];
        int want = tc[u][v] == -1 ? 1 : 0;
        ok = chosen[u] != r && table.pairing[chosen[u]][r] == want;
      }
      if (!ok)
        continue;
      chosen[v] = r;
      search(depth + 1);
    }
  };
  search(0);

  SubsystemCensus census;
  census.target = target;
  std::vector<RootMask> masks(found.begin(), found.end());
  std::vector<std::vector<LatticeVector>> sets;
  for (const auto& m : masks) {
    std::vector<LatticeVector> s;
    for (std::size_t i = 0; i < nroots; ++i)
      if (test_bit(m, i))
        s.push_back(system.roots()[i]);
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
  // Deterministic order: by sorted root set.
  std::vector<std::size_t> perm(masks.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return sets[a] < sets[b]; });
  std::map<RootMask, std::size_t> pos;
  std::vector<RootMask> sorted_masks;
  for (auto p : perm) {
    pos[masks[p]] = census.subsystems.size();
    sorted_masks.push_back(masks[p]);
    census.subsystems.push_back(std::move(sets[p]));
  }

  std::vector<bool> done(sorted_masks.size(), false);
  for (std::size_t s = 0; s < sorted_masks.size(); ++s) {
    if (done[s])
      continue;
    std::vector<std::size_t> orbit{s};
    done[s] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (std::size_t j = 0; j < rank; ++j) {
        auto it = pos.find(table.apply(j, sorted_masks[orbit[q]]));
        if (it == pos.end())
          fail("classify_subsystems: subsystem set is not Weyl-stable");
        if (!done[it->second]) {
          done[it->second] = true;
          orbit.push_back(it->second);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    census.representatives.push_back(orbit.front());
    census.orbits.push_back(std::move(orbit));
  }
  census.transitive = census.orbits.size() == 1;

  if (tr + 1 == rank && !sorted_masks.empty()) {
    // Fundamental coweights whose kernel is a subsystem of the target type.
    auto mask_of_kernel = [&](const LatticeVector& u) {
      RootMask m{0, 0};
      for (std::size_t i = 0; i < nroots; ++i)
        if (u.dot(system.roots()[i]) == 0)
          set_bit(m, i);
      return m;
    };
    auto dynkin = classify_cartan(system.cartan());
    for (std::size_t k = 0; k < rank; ++k) {
      auto w = system.fundamental_coweight(k);
      if (!pos.count(mask_of_kernel(w)))
        continue;
      CovectorOrbit co;
      co.node = k;
      for (const auto& comp : dynkin.components)
        for (std::size_t b = 0; b < comp.nodes.size(); ++b)
          if (comp.nodes[b] == k)
            co.bourbaki_node = static_cast<int>(b + 1);
      co.orbit = weyl_orbit(w, system.simple_reflections(), orbit_options);
      co.all_indivisible = true;
      co.kernels_are_subsystems = true;
      std::set<RootMask> hit;
      for (const auto& u : co.orbit) {
        Integer g = 0;
        for (const auto& a : system.simple_roots()) {
          Rational val = u.dot(a);
          if (!is_integral(val)) {
            co.all_indivisible = false;
            break;
          }
          g = boost::multiprecision::gcd(g, to_integer(val));
        }
        if (g != 1)
          co.all_indivisible = false;
        auto m = mask_of_kernel(u);
        if (!pos.count(m))
          co.kernels_are_subsystems = false;
        hit.insert(m);
      }
      co.covers_all_subsystems = hit.size() == sorted_masks.size();
      census.covectors = std::move(co);
      break;
    }
  }
  return census;
}

}  // namespace strata::lattice
