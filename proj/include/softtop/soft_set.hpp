#ifndef SOFTTOP_SOFT_SET_HPP
#define SOFTTOP_SOFT_SET_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "softtop/context.hpp"

namespace softtop {

/// Subset of the universe, encoded as a bit vector in universe order
/// (point i of the context is bit i).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::uint32_t bits) : bits_(bits) {}

  static PointSet of(const Context& ctx, const std::vector<std::string>& labels);
  static PointSet all(const Context& ctx) { return PointSet(ctx.universe_mask()); }

  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  bool contains(int point) const { return (bits_ >> point) & 1u; }
  int size() const;

  std::vector<std::string> labels(const Context& ctx) const;

  friend PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  PointSet complement(const Context& ctx) const {
    return PointSet(~bits_ & ctx.universe_mask());
  }

  auto operator<=>(const PointSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Raw encoding of a soft set: parameter-major blocks of |X| bits, so the
/// slice at parameter j occupies bits [j*n, (j+1)*n). Bit-pattern order is
/// the canonical order everywhere.
using Mask = std::uint64_t;

inline std::uint32_t slice_of(Mask mask, int param, int n) {
  return static_cast<std::uint32_t>((mask >> (param * n)) & ((n == 32) ? ~0u : ((1u << n) - 1u)));
}

inline Mask compose_mask(const std::vector<std::uint32_t>& slices, int n) {
  Mask m = 0;
  for (size_t j = 0; j < slices.size(); ++j) m |= Mask(slices[j]) << (j * n);
  return m;
}

/// Soft point encoding of x: the bit of x set in every parameter slice.
inline Mask soft_point_mask(const Context& ctx, int point) {
  Mask m = 0;
  for (int j = 0; j < ctx.params(); ++j) m |= Mask(1) << (j * ctx.points() + point);
  return m;
}

/// A total assignment of a subset of X to every parameter: the pair (F,E).
class SoftSet {
 public:
  SoftSet(ContextPtr ctx, Mask mask) : ctx_(std::move(ctx)), mask_(mask) {}

  /// Builds from explicit (parameter, point set) pairs; every parameter of the
  /// context must appear exactly once.
  static SoftSet make(const ContextPtr& ctx,
                      const std::vector<std::pair<std::string, PointSet>>& pairs);
  static SoftSet make_labels(
      const ContextPtr& ctx,
      const std::vector<std::pair<std::string, std::vector<std::string>>>& pairs);

  static SoftSet null(const ContextPtr& ctx) { return SoftSet(ctx, 0); }
  static SoftSet absolute(const ContextPtr& ctx) { return SoftSet(ctx, ctx->full_mask()); }
  static SoftSet soft_point(const ContextPtr& ctx, const std::string& point);

  const ContextPtr& context() const { return ctx_; }
  Mask mask() const { return mask_; }
  PointSet slice(int param) const { return PointSet(slice_of(mask_, param, ctx_->points())); }
  PointSet slice(const std::string& param) const { return slice(ctx_->param_index(param)); }

  bool is_null() const { return mask_ == 0; }
  bool is_absolute() const { return mask_ == ctx_->full_mask(); }

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    require_same_context(*a.ctx_, *b.ctx_);
    return a.mask_ == b.mask_;
  }

  std::string describe() const;

 private:
  ContextPtr ctx_;
  Mask mask_;
};

SoftSet soft_union(const SoftSet& a, const SoftSet& b);
SoftSet soft_intersection(const SoftSet& a, const SoftSet& b);
SoftSet soft_complement(const SoftSet& a);
bool soft_subset(const SoftSet& a, const SoftSet& b);

/// Soft-point membership: x is in (F,E) iff x lies in every slice.
/// "x not in (F,E)" from the source algebra is exactly the negation here.
bool point_in(const std::string& point, const SoftSet& a);

/// Cylinder with value G at e and X elsewhere.
SoftSet upper_cylinder(const ContextPtr& ctx, PointSet g, const std::string& e);
/// Cylinder with value H at e and the empty set elsewhere.
SoftSet lower_cylinder(const ContextPtr& ctx, PointSet h, const std::string& e);

/// Canonical bijection between soft sets over (X,E) and subsets of X x E.
std::set<std::pair<std::string, std::string>> to_product_subset(const SoftSet& a);
SoftSet from_product_subset(const ContextPtr& ctx,
                            const std::set<std::pair<std::string, std::string>>& s);

std::string describe_point_set(const Context& ctx, PointSet s);

}  // namespace softtop

#endif
