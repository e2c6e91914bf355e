#ifndef SOFTTOP_AXIOMS_HPP
#define SOFTTOP_AXIOMS_HPP

#include <string>
#include <vector>

#include "softtop/generators.hpp"
#include "softtop/topology.hpp"

namespace softtop {

enum class AxiomKind { T0, T1, T2, Regular, Normal, T3, T4 };

std::string to_string(AxiomKind a);
AxiomKind axiom_from_string(const std::string& name);
inline const std::vector<AxiomKind> kAllAxioms{
    AxiomKind::T0, AxiomKind::T1, AxiomKind::T2,     AxiomKind::Regular,
    AxiomKind::Normal, AxiomKind::T3, AxiomKind::T4};

/// Verdict of a separation-axiom check, with structured evidence: on failure
/// the first (in canonical order) pair that cannot be separated, on success
/// for T0/T1/T2 the separating opens found for the first point pair.
struct AxiomReport {
  bool holds = false;
  AxiomKind axiom = AxiomKind::T0;
  std::string witness_kind;    // point-pair | point-closed-pair | closed-pair | separating-opens
  std::vector<int> points;     // point indices involved in the witness
  std::vector<Mask> sets;      // closed sets of a failure, or separating opens of a success
  std::string detail;
  explicit operator bool() const { return holds; }
};

/// Exhaustive check over the finite space. Crisp topologies are checked with
/// singleton point marks, soft topologies with soft-point marks (membership
/// at every parameter); the two share one quantifier core.
AxiomReport check_crisp(const CrispTopology& t, AxiomKind axiom);
AxiomReport check_soft(const SoftTopology& t, AxiomKind axiom);

/// Replays a failure witness against the definitions; true iff the recorded
/// pair indeed cannot be separated in `t`.
bool replay_witness(const SoftTopology& t, const AxiomReport& report);
bool replay_witness(const CrispTopology& t, const AxiomReport& report);

std::string render_report(const Context& ctx, const AxiomReport& report, bool soft = true);

}  // namespace softtop

#endif
