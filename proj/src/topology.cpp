#include "softtop/topology.hpp"

#include <algorithm>
#include <set>

namespace softtop {

namespace {

std::vector<PointSet> canonical(std::vector<PointSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

std::vector<Mask> canonical(std::vector<Mask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

void check_guard(const Context& ctx, bool allow_large) {
  if (!allow_large && ctx.bits() > kSizeGuardBits)
    throw SizeGuardExceeded("|X|*|E| = " + std::to_string(ctx.bits()) + " bits > " +
                            std::to_string(kSizeGuardBits) + " (pass the override to proceed)");
}

/// Shared axiom check over raw masks; `full` is the top element.
FamilyCheck check_family(std::vector<Mask> fam, Mask full) {
  FamilyCheck r;
  fam = canonical(std::move(fam));
  if (!std::binary_search(fam.begin(), fam.end(), Mask(0))) {
    r.ok = false;
    r.violation = "missing null member";
    return r;
  }
  if (!std::binary_search(fam.begin(), fam.end(), full)) {
    r.ok = false;
    r.violation = "missing absolute member";
    return r;
  }
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j) {
      const Mask meet = fam[i] & fam[j];
      if (!std::binary_search(fam.begin(), fam.end(), meet)) {
        r.ok = false;
        r.violation = "not closed under intersection";
        r.witness_sets = {fam[i], fam[j], meet};
        return r;
      }
      const Mask join = fam[i] | fam[j];
      if (!std::binary_search(fam.begin(), fam.end(), join)) {
        r.ok = false;
        r.violation = "not closed under union";
        r.witness_sets = {fam[i], fam[j], join};
        return r;
      }
    }
  return r;
}

}  // namespace

CrispTopology::CrispTopology(ContextPtr ctx, std::vector<PointSet> opens)
    : ctx_(std::move(ctx)), opens_(canonical(std::move(opens))) {}

bool CrispTopology::contains(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

CrispTopology CrispTopology::indiscrete(const ContextPtr& ctx) {
  return CrispTopology(ctx, {PointSet(0), PointSet::all(*ctx)});
}

CrispTopology CrispTopology::discrete(const ContextPtr& ctx) {
  std::vector<PointSet> opens;
  for (std::uint32_t s = 0; s <= ctx->universe_mask(); ++s) opens.emplace_back(s);
  return CrispTopology(ctx, std::move(opens));
}

SoftTopology::SoftTopology(ContextPtr ctx, std::vector<Mask> opens)
    : ctx_(std::move(ctx)), opens_(canonical(std::move(opens))) {}

bool SoftTopology::contains(Mask m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

std::vector<SoftSet> SoftTopology::open_sets() const {
  std::vector<SoftSet> out;
  out.reserve(opens_.size());
  for (Mask m : opens_) out.emplace_back(ctx_, m);
  return out;
}

SoftTopology SoftTopology::indiscrete(const ContextPtr& ctx) {
  return SoftTopology(ctx, {0, ctx->full_mask()});
}

FamilyCheck is_crisp_topology(const ContextPtr& ctx, const std::vector<PointSet>& family) {
  std::vector<Mask> masks;
  masks.reserve(family.size());
  for (PointSet s : family) {
    if ((s.bits() & ~ctx->universe_mask()) != 0)
      throw UnknownPoint("point set has bits outside the universe");
    masks.push_back(s.bits());
  }
  return check_family(std::move(masks), ctx->universe_mask());
}

FamilyCheck is_soft_topology_masks(const ContextPtr& ctx, const std::vector<Mask>& family) {
  return check_family(family, ctx->full_mask());
}

FamilyCheck is_soft_topology(const ContextPtr& ctx, const std::vector<SoftSet>& family) {
  std::vector<Mask> masks;
  masks.reserve(family.size());
  for (const SoftSet& s : family) {
    require_same_context(*ctx, *s.context());
    masks.push_back(s.mask());
  }
  return check_family(std::move(masks), ctx->full_mask());
}

std::vector<Mask> close_family(std::vector<Mask> seed, Mask full) {
  std::set<Mask> fam(seed.begin(), seed.end());
  fam.insert(0);
  fam.insert(full);
  // All finite intersections first; unions of those then distribute back
  // into the family, so one union pass after the meet fixed point suffices.
  // Both loops still run to their own fixed points.
  auto close_under = [&fam](auto op) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Mask> members(fam.begin(), fam.end());
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          if (fam.insert(op(members[i], members[j])).second) grew = true;
    }
  };
  close_under([](Mask a, Mask b) { return a & b; });
  close_under([](Mask a, Mask b) { return a | b; });
  return std::vector<Mask>(fam.begin(), fam.end());
}

SoftTopology generate_soft_masks(const ContextPtr& ctx, const std::vector<Mask>& subbasis,
                                 bool allow_large) {
  check_guard(*ctx, allow_large);
  return SoftTopology(ctx, close_family(subbasis, ctx->full_mask()));
}

SoftTopology generate_soft(const ContextPtr& ctx, const std::vector<SoftSet>& subbasis,
                           bool allow_large) {
  std::vector<Mask> masks;
  masks.reserve(subbasis.size());
  for (const SoftSet& s : subbasis) {
    require_same_context(*ctx, *s.context());
    masks.push_back(s.mask());
  }
  return generate_soft_masks(ctx, masks, allow_large);
}

CrispTopology generate_crisp(const ContextPtr& ctx, const std::vector<PointSet>& subbasis,
                             bool allow_large) {
  if (!allow_large && ctx->points() > kSizeGuardBits)
    throw SizeGuardExceeded("universe of " + std::to_string(ctx->points()) + " points");
  std::vector<Mask> masks;
  masks.reserve(subbasis.size());
  for (PointSet s : subbasis) masks.push_back(s.bits());
  std::vector<PointSet> opens;
  for (Mask m : close_family(std::move(masks), ctx->universe_mask()))
    opens.emplace_back(static_cast<std::uint32_t>(m));
  return CrispTopology(ctx, std::move(opens));
}

bool is_soft_base(const std::vector<SoftSet>& base, const SoftTopology& t) {
  std::vector<Mask> bm;
  bm.reserve(base.size());
  for (const SoftSet& b : base) {
    require_same_context(*b.context(), *t.context());
    if (!t.contains(b.mask())) throw NotASubfamily();
    bm.push_back(b.mask());
  }
  for (Mask open : t.opens()) {
    Mask covered = 0;
    for (Mask b : bm)
      if ((b & ~open) == 0) covered |= b;
    if (covered != open) return false;
  }
  return true;
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Equal: return "equal";
    case Comparison::StrictlyFiner: return "strictly-finer";
    case Comparison::StrictlyCoarser: return "strictly-coarser";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

namespace {
Comparison compare_sorted(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  const bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
  const bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
  if (a_in_b && b_in_a) return Comparison::Equal;
  if (a_in_b) return Comparison::StrictlyCoarser;
  if (b_in_a) return Comparison::StrictlyFiner;
  return Comparison::Incomparable;
}
}  // namespace

Comparison compare(const SoftTopology& t1, const SoftTopology& t2) {
  require_same_context(*t1.context(), *t2.context());
  return compare_sorted(t1.opens(), t2.opens());
}

Comparison compare(const CrispTopology& t1, const CrispTopology& t2) {
  require_same_context(*t1.context(), *t2.context());
  std::vector<Mask> a, b;
  for (PointSet s : t1.opens()) a.push_back(s.bits());
  for (PointSet s : t2.opens()) b.push_back(s.bits());
  return compare_sorted(a, b);
}

std::vector<Mask> closed_masks(const std::vector<Mask>& opens, Mask full) {
  std::vector<Mask> out;
  out.reserve(opens.size());
  for (Mask m : opens) out.push_back(~m & full);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SoftSet> soft_closed_family(const SoftTopology& t) {
  std::vector<SoftSet> out;
  for (Mask m : closed_masks(t.opens(), t.context()->full_mask()))
    out.emplace_back(t.context(), m);
  return out;
}

bool is_soft_closed_in_single_set_topology(const SoftSet& f, const CrispTopology& sigma) {
  const Context& ctx = *f.context();
  if (ctx.universe() != sigma.context()->universe())
    throw ContextMismatch();
  for (int j = 0; j < ctx.params(); ++j)
    if (!sigma.contains(f.slice(j).complement(ctx))) return false;
  return true;
}

}  // namespace softtop
