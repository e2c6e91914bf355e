#ifndef SOFTTOP_TOPOLOGY_HPP
#define SOFTTOP_TOPOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "softtop/soft_set.hpp"

namespace softtop {

/// Bits above which closure/enumeration refuses to run without an override.
inline constexpr int kSizeGuardBits = 20;

/// An ordinary finite topology on the universe, opens sorted by bit pattern.
class CrispTopology {
 public:
  CrispTopology(ContextPtr ctx, std::vector<PointSet> opens);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<PointSet>& opens() const { return opens_; }
  int size() const { return static_cast<int>(opens_.size()); }
  bool contains(PointSet s) const;

  friend bool operator==(const CrispTopology& a, const CrispTopology& b) {
    require_same_context(*a.ctx_, *b.ctx_);
    return a.opens_ == b.opens_;
  }

  static CrispTopology indiscrete(const ContextPtr& ctx);
  static CrispTopology discrete(const ContextPtr& ctx);

 private:
  ContextPtr ctx_;
  std::vector<PointSet> opens_;  // sorted, deduplicated
};

/// A family of soft sets satisfying the three soft-topology axioms,
/// opens sorted by bit pattern.
class SoftTopology {
 public:
  SoftTopology(ContextPtr ctx, std::vector<Mask> opens);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Mask>& opens() const { return opens_; }
  int size() const { return static_cast<int>(opens_.size()); }
  bool contains(Mask m) const;
  std::vector<SoftSet> open_sets() const;

  friend bool operator==(const SoftTopology& a, const SoftTopology& b) {
    require_same_context(*a.ctx_, *b.ctx_);
    return a.opens_ == b.opens_;
  }

  static SoftTopology indiscrete(const ContextPtr& ctx);

 private:
  ContextPtr ctx_;
  std::vector<Mask> opens_;  // sorted, deduplicated
};

/// Verdict of an axiom check on a candidate family, with the violated
/// axiom and the offending members when it fails.
struct FamilyCheck {
  bool ok = true;
  std::string violation;            // empty when ok
  std::vector<Mask> witness_sets;   // offending members / missing combination
  explicit operator bool() const { return ok; }
};

FamilyCheck is_crisp_topology(const ContextPtr& ctx, const std::vector<PointSet>& family);
FamilyCheck is_soft_topology(const ContextPtr& ctx, const std::vector<SoftSet>& family);
FamilyCheck is_soft_topology_masks(const ContextPtr& ctx, const std::vector<Mask>& family);

/// Smallest soft topology containing the subbasis: adjoin null and absolute,
/// close under pairwise intersections, then under pairwise unions.
SoftTopology generate_soft(const ContextPtr& ctx, const std::vector<SoftSet>& subbasis,
                           bool allow_large = false);
SoftTopology generate_soft_masks(const ContextPtr& ctx, const std::vector<Mask>& subbasis,
                                 bool allow_large = false);
CrispTopology generate_crisp(const ContextPtr& ctx, const std::vector<PointSet>& subbasis,
                             bool allow_large = false);

/// Closure of raw masks under pairwise & then pairwise |, with 0 and `full`
/// adjoined. Works for crisp and soft families alike.
std::vector<Mask> close_family(std::vector<Mask> seed, Mask full);

/// True iff every open of `t` is a union of members of `base`
/// (the null set being the empty union).
bool is_soft_base(const std::vector<SoftSet>& base, const SoftTopology& t);

enum class Comparison { Equal, StrictlyFiner, StrictlyCoarser, Incomparable };
std::string to_string(Comparison c);

/// Family-inclusion order of t1 relative to t2.
Comparison compare(const SoftTopology& t1, const SoftTopology& t2);
Comparison compare(const CrispTopology& t1, const CrispTopology& t2);

/// Complements of the opens, canonically ordered.
std::vector<SoftSet> soft_closed_family(const SoftTopology& t);
std::vector<Mask> closed_masks(const std::vector<Mask>& opens, Mask full);

/// Characterization of soft closed sets in the single-set soft topology over
/// a crisp topology: every slice complement must be open in it.
bool is_soft_closed_in_single_set_topology(const SoftSet& f, const CrispTopology& sigma);

}  // namespace softtop

#endif
