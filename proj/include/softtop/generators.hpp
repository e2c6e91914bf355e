#ifndef SOFTTOP_GENERATORS_HPP
#define SOFTTOP_GENERATORS_HPP

#include <map>
#include <vector>

#include "softtop/topology.hpp"

namespace softtop {

/// One crisp topology per parameter: the family sigma = {Sigma_e : e in E}.
class CrispSystem {
 public:
  CrispSystem(ContextPtr ctx, std::vector<CrispTopology> per_param);

  const ContextPtr& context() const { return ctx_; }
  const CrispTopology& at(int param) const { return topologies_.at(param); }
  const CrispTopology& at(const std::string& param) const {
    return topologies_.at(ctx_->param_index(param));
  }
  const std::vector<CrispTopology>& topologies() const { return topologies_; }

  friend bool operator==(const CrispSystem& a, const CrispSystem& b) {
    require_same_context(*a.ctx_, *b.ctx_);
    return a.topologies_ == b.topologies_;
  }

 private:
  ContextPtr ctx_;
  std::vector<CrispTopology> topologies_;  // indexed by parameter order
};

/// Deduplicated family of e-th slices of the opens; always a crisp topology.
CrispTopology extract_crisp(const SoftTopology& t, const std::string& param);
CrispTopology extract_crisp(const SoftTopology& t, int param);
CrispSystem extract_system(const SoftTopology& t);

/// The product construction: all soft sets whose every slice is open in the
/// corresponding crisp topology. Already a soft topology; no closure needed.
SoftTopology formula1(const CrispSystem& sigma, bool allow_large = false);

/// The single-set construction: constant soft sets with common value open in
/// the given crisp topology, over the parameter set of `ctx`.
SoftTopology formula2(const CrispTopology& sigma, const ContextPtr& ctx);

/// formula1 of the extracted system; always contains the input.
SoftTopology associated(const SoftTopology& t, bool allow_large = false);

/// Soft topology generated by the union of the per-parameter single-set
/// topologies; coincides with formula2 of the crisp closure of the union.
SoftTopology union_single_set(const CrispSystem& sigma, bool allow_large = false);

/// Product base built from per-parameter bases: all soft sets whose slice at
/// each e lies in beta_e adjoined with the empty set. Each beta_e must itself
/// be a base (unions of its members, plus the empty set, form a topology).
std::vector<SoftSet> product_base(const ContextPtr& ctx,
                                  const std::vector<std::vector<PointSet>>& bases,
                                  bool allow_large = false);

}  // namespace softtop

#endif
