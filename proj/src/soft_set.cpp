#include "softtop/soft_set.hpp"

#include <bit>
#include <sstream>

namespace softtop {

PointSet PointSet::of(const Context& ctx, const std::vector<std::string>& labels) {
  std::uint32_t bits = 0;
  for (const auto& l : labels) bits |= 1u << ctx.point_index(l);
  return PointSet(bits);
}

int PointSet::size() const { return std::popcount(bits_); }

std::vector<std::string> PointSet::labels(const Context& ctx) const {
  std::vector<std::string> out;
  for (int i = 0; i < ctx.points(); ++i)
    if (contains(i)) out.push_back(ctx.point_label(i));
  return out;
}

SoftSet SoftSet::make(const ContextPtr& ctx,
                      const std::vector<std::pair<std::string, PointSet>>& pairs) {
  const int n = ctx->points();
  std::vector<bool> seen(ctx->params(), false);
  Mask mask = 0;
  for (const auto& [param, ps] : pairs) {
    const int j = ctx->param_index(param);
    if (seen[j]) throw DuplicateParameter(param);
    seen[j] = true;
    if ((ps.bits() & ~ctx->universe_mask()) != 0)
      throw UnknownPoint("point set has bits outside the universe");
    mask |= Mask(ps.bits()) << (j * n);
  }
  for (int j = 0; j < ctx->params(); ++j)
    if (!seen[j]) throw MissingParameter(ctx->param_label(j));
  return SoftSet(ctx, mask);
}

SoftSet SoftSet::make_labels(
    const ContextPtr& ctx,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& pairs) {
  std::vector<std::pair<std::string, PointSet>> converted;
  converted.reserve(pairs.size());
  for (const auto& [param, labels] : pairs)
    converted.emplace_back(param, PointSet::of(*ctx, labels));
  return make(ctx, converted);
}

SoftSet SoftSet::soft_point(const ContextPtr& ctx, const std::string& point) {
  return SoftSet(ctx, soft_point_mask(*ctx, ctx->point_index(point)));
}

std::string SoftSet::describe() const {
  std::ostringstream os;
  os << "{";
  for (int j = 0; j < ctx_->params(); ++j) {
    if (j) os << ", ";
    os << "(" << ctx_->param_label(j) << ", " << describe_point_set(*ctx_, slice(j)) << ")";
  }
  os << "}";
  return os.str();
}

SoftSet soft_union(const SoftSet& a, const SoftSet& b) {
  require_same_context(*a.context(), *b.context());
  return SoftSet(a.context(), a.mask() | b.mask());
}

SoftSet soft_intersection(const SoftSet& a, const SoftSet& b) {
  require_same_context(*a.context(), *b.context());
  return SoftSet(a.context(), a.mask() & b.mask());
}

SoftSet soft_complement(const SoftSet& a) {
  return SoftSet(a.context(), ~a.mask() & a.context()->full_mask());
}

bool soft_subset(const SoftSet& a, const SoftSet& b) {
  require_same_context(*a.context(), *b.context());
  return (a.mask() & ~b.mask()) == 0;
}

bool point_in(const std::string& point, const SoftSet& a) {
  const Mask pm = soft_point_mask(*a.context(), a.context()->point_index(point));
  return (pm & a.mask()) == pm;
}

SoftSet upper_cylinder(const ContextPtr& ctx, PointSet g, const std::string& e) {
  const int je = ctx->param_index(e);
  std::vector<std::uint32_t> slices(ctx->params(), ctx->universe_mask());
  slices[je] = g.bits();
  return SoftSet(ctx, compose_mask(slices, ctx->points()));
}

SoftSet lower_cylinder(const ContextPtr& ctx, PointSet h, const std::string& e) {
  const int je = ctx->param_index(e);
  std::vector<std::uint32_t> slices(ctx->params(), 0);
  slices[je] = h.bits();
  return SoftSet(ctx, compose_mask(slices, ctx->points()));
}

std::set<std::pair<std::string, std::string>> to_product_subset(const SoftSet& a) {
  const Context& ctx = *a.context();
  std::set<std::pair<std::string, std::string>> out;
  for (int j = 0; j < ctx.params(); ++j) {
    const PointSet s = a.slice(j);
    for (int i = 0; i < ctx.points(); ++i)
      if (s.contains(i)) out.emplace(ctx.point_label(i), ctx.param_label(j));
  }
  return out;
}

SoftSet from_product_subset(const ContextPtr& ctx,
                            const std::set<std::pair<std::string, std::string>>& s) {
  Mask mask = 0;
  for (const auto& [point, param] : s) {
    const int i = ctx->point_index(point);
    const int j = ctx->param_index(param);
    mask |= Mask(1) << (j * ctx->points() + i);
  }
  return SoftSet(ctx, mask);
}

std::string describe_point_set(const Context& ctx, PointSet s) {
  if (s.bits() == ctx.universe_mask()) return "X";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < ctx.points(); ++i) {
    if (!s.contains(i)) continue;
    if (!first) os << ",";
    os << ctx.point_label(i);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace softtop
