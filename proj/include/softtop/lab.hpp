#ifndef SOFTTOP_LAB_HPP
#define SOFTTOP_LAB_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "softtop/axioms.hpp"
#include "softtop/generators.hpp"
#include "softtop/json_io.hpp"

namespace softtop::lab {

/// Scale of a sweep. -1 selects the per-claim default (system sweeps run at
/// 3 points x 2 parameters, census sweeps at 2 x 2, converse searches at the
/// smallest scale where the counterexample is known to exist).
struct SweepBounds {
  int max_points = -1;
  int max_parameters = -1;
  std::uint64_t seed = 1;
  int samples = 0;  // 0 = exhaustive, otherwise random sampling
  bool allow_large = false;
};

struct VerificationOutcome {
  std::string id;
  bool proven = false;  // proven-at-scale; for searches: counterexample found
  long long cases_checked = 0;
  io::Json counterexample;  // null unless a concrete instance was found
  std::string note;
};

/// All labeled topologies on a k-point set, k <= 4, each family as sorted
/// subset masks, in ascending family-bitmask order. Counts: 1, 4, 29, 355.
std::vector<std::vector<std::uint32_t>> enumerate_topology_masks(int k);

std::vector<CrispTopology> enumerate_crisp_topologies(int points);
/// Every soft topology on the (n, m) context, through the subsets-of-X-x-E
/// correspondence; requires n*m <= 4.
std::vector<SoftTopology> enumerate_soft_topologies(int points, int params);

/// Context with points x1..xn and parameters e1..em.
ContextPtr sweep_context(int points, int params);

/// Seed-deterministic: the closure of `subbasis_size` uniformly drawn
/// soft sets.
SoftTopology random_soft_topology(const ContextPtr& ctx, std::uint64_t seed, int subbasis_size,
                                  bool allow_large = false);

std::vector<std::string> theorem_ids();
std::vector<std::string> converse_ids();
std::string describe_claim(const std::string& id);

/// Evaluates the claim over all instances in bounds; proven iff no violation.
VerificationOutcome verify_theorem(const std::string& id, const SweepBounds& bounds = {});
/// Finds the first instance, in enumeration order, refuting the converse
/// implication named by a CONV id. Throws NotFound when bounds are too small.
VerificationOutcome search_converse(const std::string& id, const SweepBounds& bounds = {});

struct Fixture {
  std::string name;
  io::Document document;
  std::string notes;  // expected properties and recorded discrepancies
};

/// Every worked instance of the source material, as constructed data.
const std::map<std::string, Fixture>& fixtures();

}  // namespace softtop::lab

#endif
