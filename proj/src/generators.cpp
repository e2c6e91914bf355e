#include "softtop/generators.hpp"

#include <algorithm>
#include <set>

namespace softtop {

namespace {
void check_guard(const Context& ctx, bool allow_large) {
  if (!allow_large && ctx.bits() > kSizeGuardBits)
    throw SizeGuardExceeded("|X|*|E| = " + std::to_string(ctx.bits()) + " bits > " +
                            std::to_string(kSizeGuardBits) + " (pass the override to proceed)");
}
}  // namespace

CrispSystem::CrispSystem(ContextPtr ctx, std::vector<CrispTopology> per_param)
    : ctx_(std::move(ctx)), topologies_(std::move(per_param)) {
  if (static_cast<int>(topologies_.size()) != ctx_->params())
    throw InvalidContext("system must carry exactly one topology per parameter");
  for (const auto& t : topologies_)
    if (t.context()->universe() != ctx_->universe())
      throw ContextMismatch();
}

CrispTopology extract_crisp(const SoftTopology& t, int param) {
  if (param < 0 || param >= t.context()->params())
    throw UnknownParameter(std::to_string(param));
  std::vector<PointSet> slices;
  slices.reserve(t.size());
  for (Mask m : t.opens())
    slices.emplace_back(slice_of(m, param, t.context()->points()));
  return CrispTopology(t.context(), std::move(slices));
}

CrispTopology extract_crisp(const SoftTopology& t, const std::string& param) {
  return extract_crisp(t, t.context()->param_index(param));
}

CrispSystem extract_system(const SoftTopology& t) {
  std::vector<CrispTopology> per_param;
  per_param.reserve(t.context()->params());
  for (int j = 0; j < t.context()->params(); ++j) per_param.push_back(extract_crisp(t, j));
  return CrispSystem(t.context(), std::move(per_param));
}

SoftTopology formula1(const CrispSystem& sigma, bool allow_large) {
  const ContextPtr& ctx = sigma.context();
  check_guard(*ctx, allow_large);
  const int n = ctx->points();
  std::vector<Mask> opens{0};
  for (int j = 0; j < ctx->params(); ++j) {
    std::vector<Mask> next;
    next.reserve(opens.size() * sigma.at(j).size());
    for (Mask prefix : opens)
      for (PointSet s : sigma.at(j).opens())
        next.push_back(prefix | (Mask(s.bits()) << (j * n)));
    opens = std::move(next);
  }
  return SoftTopology(ctx, std::move(opens));
}

SoftTopology formula2(const CrispTopology& sigma, const ContextPtr& ctx) {
  if (sigma.context()->universe() != ctx->universe())
    throw ContextMismatch();
  std::vector<Mask> opens;
  opens.reserve(sigma.size());
  for (PointSet s : sigma.opens()) {
    std::vector<std::uint32_t> slices(ctx->params(), s.bits());
    opens.push_back(compose_mask(slices, ctx->points()));
  }
  return SoftTopology(ctx, std::move(opens));
}

SoftTopology associated(const SoftTopology& t, bool allow_large) {
  return formula1(extract_system(t), allow_large);
}

SoftTopology union_single_set(const CrispSystem& sigma, bool allow_large) {
  const ContextPtr& ctx = sigma.context();
  std::vector<Mask> subbasis;
  for (int j = 0; j < ctx->params(); ++j) {
    const SoftTopology single = formula2(sigma.at(j), ctx);
    for (Mask m : single.opens()) subbasis.push_back(m);
  }
  return generate_soft_masks(ctx, subbasis, allow_large);
}

std::vector<SoftSet> product_base(const ContextPtr& ctx,
                                  const std::vector<std::vector<PointSet>>& bases,
                                  bool allow_large) {
  check_guard(*ctx, allow_large);
  if (static_cast<int>(bases.size()) != ctx->params())
    throw NotABase("expected one base per parameter");
  const int n = ctx->points();
  // Each beta_e must generate a topology by unions: the union closure of
  // beta_e + {empty} has to contain X and be intersection-closed.
  for (int j = 0; j < ctx->params(); ++j) {
    std::set<Mask> unions{0};
    bool grew = true;
    for (PointSet s : bases[j]) unions.insert(s.bits());
    while (grew) {
      grew = false;
      std::vector<Mask> members(unions.begin(), unions.end());
      for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
          if (unions.insert(members[a] | members[b]).second) grew = true;
    }
    if (!unions.count(ctx->universe_mask()))
      throw NotABase("members of base for " + ctx->param_label(j) + " do not cover X");
    for (Mask a : unions)
      for (Mask b : unions)
        if (!unions.count(a & b))
          throw NotABase("base for " + ctx->param_label(j) +
                         " does not generate a topology by unions");
  }
  std::vector<Mask> result{0};
  for (int j = 0; j < ctx->params(); ++j) {
    std::vector<Mask> choices{0};  // the empty set is always allowed
    for (PointSet s : bases[j]) choices.push_back(s.bits());
    std::sort(choices.begin(), choices.end());
    choices.erase(std::unique(choices.begin(), choices.end()), choices.end());
    std::vector<Mask> next;
    next.reserve(result.size() * choices.size());
    for (Mask prefix : result)
      for (Mask c : choices) next.push_back(prefix | (c << (j * n)));
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  std::vector<SoftSet> out;
  out.reserve(result.size());
  for (Mask m : result) out.emplace_back(ctx, m);
  return out;
}

}  // namespace softtop
