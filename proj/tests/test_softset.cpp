#include <doctest.h>

#include <algorithm>
#include <iterator>

#include "softtop/soft_set.hpp"

using namespace softtop;

namespace {

ContextPtr ctx3() { return make_context({"x1", "x2", "x3"}, {"e1", "e2"}); }

SoftSet ss(const ContextPtr& c,
           std::vector<std::pair<std::string, std::vector<std::string>>> pairs) {
  return SoftSet::make_labels(c, pairs);
}

// The four named soft sets of the worked six-member topology.
SoftSet f1(const ContextPtr& c) { return ss(c, {{"e1", {"x1"}}, {"e2", {}}}); }
SoftSet f2(const ContextPtr& c) { return ss(c, {{"e1", {"x1", "x2"}}, {"e2", {"x1", "x2", "x3"}}}); }
SoftSet f3(const ContextPtr& c) { return ss(c, {{"e1", {}}, {"e2", {"x3"}}}); }
SoftSet f4(const ContextPtr& c) { return ss(c, {{"e1", {"x1"}}, {"e2", {"x3"}}}); }

}  // namespace

TEST_CASE("context construction rejects degenerate inputs") {
  CHECK_THROWS_AS(Context({}, {"e1"}), InvalidContext);
  CHECK_THROWS_AS(Context({"x1"}, {}), InvalidContext);
  CHECK_THROWS_AS(Context({"x1", "x1"}, {"e1"}), InvalidContext);
  CHECK_THROWS_AS(Context({"x1"}, {"e1", "e1"}), InvalidContext);
}

TEST_CASE("make rejects bad parameter lists") {
  auto c = ctx3();
  CHECK_THROWS_AS(ss(c, {{"e1", {"x1"}}}), MissingParameter);
  CHECK_THROWS_AS(ss(c, {{"e1", {}}, {"e2", {}}, {"e2", {}}}), DuplicateParameter);
  CHECK_THROWS_AS(ss(c, {{"e1", {"bogus"}}, {"e2", {}}}), UnknownPoint);
  CHECK_THROWS_AS(ss(c, {{"e9", {}}, {"e2", {}}}), UnknownParameter);
}

TEST_CASE("make builds the intended assignment") {
  auto c = ctx3();
  const SoftSet f = f1(c);
  CHECK(f.slice("e1") == PointSet::of(*c, {"x1"}));
  CHECK(f.slice("e2").empty());
  CHECK(ss(c, {{"e1", {"x1", "x2", "x3"}}, {"e2", {"x1", "x2", "x3"}}}) == SoftSet::absolute(c));
}

TEST_CASE("union and intersection reproduce the worked values") {
  auto c = ctx3();
  CHECK(soft_union(f1(c), f3(c)) == f4(c));
  CHECK(soft_intersection(f2(c), f4(c)) == f4(c));
  CHECK(soft_intersection(f1(c), f3(c)) == SoftSet::null(c));
  CHECK(soft_union(f1(c), SoftSet::null(c)) == f1(c));
  CHECK(soft_union(f1(c), SoftSet::absolute(c)) == SoftSet::absolute(c));
  CHECK(soft_intersection(f1(c), SoftSet::absolute(c)) == f1(c));
}

TEST_CASE("operations demand a shared context") {
  auto c = ctx3();
  auto other = make_context({"x1", "x2"}, {"e1", "e2"});
  CHECK_THROWS_AS(soft_union(f1(c), SoftSet::null(other)), ContextMismatch);
  CHECK_THROWS_AS(soft_subset(f1(c), SoftSet::null(other)), ContextMismatch);
}

TEST_CASE("complement flips null and absolute and is involutive") {
  auto c = ctx3();
  CHECK(soft_complement(SoftSet::null(c)) == SoftSet::absolute(c));
  CHECK(soft_complement(SoftSet::absolute(c)) == SoftSet::null(c));
  CHECK(soft_complement(soft_complement(f4(c))) == f4(c));
}

TEST_CASE("soft subset is componentwise inclusion") {
  auto c = ctx3();
  CHECK(soft_subset(f1(c), f2(c)));
  CHECK_FALSE(soft_subset(f2(c), f1(c)));
  CHECK(soft_subset(SoftSet::null(c), f3(c)));
}

TEST_CASE("membership requires presence in every slice") {
  auto c2 = make_context({"x1", "x2"}, {"e1", "e2"});
  const SoftSet h6 = ss(c2, {{"e1", {"x1"}}, {"e2", {"x1", "x2"}}});
  CHECK(point_in("x1", h6));
  CHECK_FALSE(point_in("x2", h6));
  CHECK(point_in("x1", SoftSet::absolute(c2)));
  CHECK(point_in("x2", SoftSet::absolute(c2)));
  CHECK_THROWS_AS(point_in("zz", h6), UnknownPoint);
}

TEST_CASE("cylinders") {
  auto c = ctx3();
  const PointSet g = PointSet::of(*c, {"x1"});
  const SoftSet up = upper_cylinder(c, g, "e1");
  CHECK(up == ss(c, {{"e1", {"x1"}}, {"e2", {"x1", "x2", "x3"}}}));
  CHECK(upper_cylinder(c, PointSet::all(*c), "e2") == SoftSet::absolute(c));
  CHECK(lower_cylinder(c, PointSet::of(*c, {"x3"}), "e2") == f3(c));
  CHECK(lower_cylinder(c, PointSet(0), "e1") == SoftSet::null(c));
  CHECK_THROWS_AS(upper_cylinder(c, g, "e7"), UnknownParameter);

  // complement of the upper cylinder at G is the lower cylinder at X \ G
  for (std::uint32_t bits = 0; bits <= c->universe_mask(); ++bits) {
    const PointSet s(bits);
    CHECK(soft_complement(upper_cylinder(c, s, "e1")) ==
          lower_cylinder(c, s.complement(*c), "e1"));
  }
}

TEST_CASE("product-subset bijection on a sample") {
  auto c = ctx3();
  const auto prod = to_product_subset(f4(c));
  const std::set<std::pair<std::string, std::string>> expected{{"x1", "e1"}, {"x3", "e2"}};
  CHECK(prod == expected);
  CHECK(to_product_subset(SoftSet::null(c)).empty());
  CHECK(from_product_subset(c, prod) == f4(c));
}

TEST_CASE("product-subset bijection is a boolean-algebra isomorphism (exhaustive 2x2)") {
  auto c = make_context({"x1", "x2"}, {"e1", "e2"});
  const Mask full = c->full_mask();
  for (Mask a = 0; a <= full; ++a) {
    const SoftSet sa(c, a);
    CHECK(from_product_subset(c, to_product_subset(sa)) == sa);
    for (Mask b = 0; b <= full; ++b) {
      const SoftSet sb(c, b);
      auto pa = to_product_subset(sa), pb = to_product_subset(sb);
      std::set<std::pair<std::string, std::string>> pu, pi;
      std::set_union(pa.begin(), pa.end(), pb.begin(), pb.end(), std::inserter(pu, pu.end()));
      std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                            std::inserter(pi, pi.end()));
      CHECK(to_product_subset(soft_union(sa, sb)) == pu);
      CHECK(to_product_subset(soft_intersection(sa, sb)) == pi);
    }
    // complement commutes too
    auto pc = to_product_subset(soft_complement(sa));
    auto pall = to_product_subset(SoftSet::absolute(c));
    std::set<std::pair<std::string, std::string>> diff;
    auto pa = to_product_subset(sa);
    std::set_difference(pall.begin(), pall.end(), pa.begin(), pa.end(),
                        std::inserter(diff, diff.end()));
    CHECK(pc == diff);
  }
}

TEST_CASE("de morgan and lattice laws, exhaustive at 3 points x 3 parameters") {
  auto c = make_context({"x1", "x2", "x3"}, {"e1", "e2", "e3"});
  const Mask full = c->full_mask();
  REQUIRE(c->bits() == 9);
  for (Mask a = 0; a <= full; ++a) {
    const SoftSet sa(c, a);
    CHECK(soft_union(sa, sa) == sa);
    CHECK(soft_intersection(sa, sa) == sa);
    for (Mask b = a; b <= full; ++b) {
      const SoftSet sb(c, b);
      CHECK(soft_complement(soft_union(sa, sb)) ==
            soft_intersection(soft_complement(sa), soft_complement(sb)));
      CHECK(soft_complement(soft_intersection(sa, sb)) ==
            soft_union(soft_complement(sa), soft_complement(sb)));
      CHECK(soft_union(sa, sb) == soft_union(sb, sa));
      CHECK(soft_intersection(sa, sb) == soft_intersection(sb, sa));
      // mutual inclusion is equality
      CHECK((soft_subset(sa, sb) && soft_subset(sb, sa)) == (sa == sb));
    }
  }
  // associativity over a coarse lattice of samples
  for (Mask a = 0; a <= full; a += 37)
    for (Mask b = 0; b <= full; b += 53)
      for (Mask d = 0; d <= full; d += 71) {
        const SoftSet sa(c, a), sb(c, b), sd(c, d);
        CHECK(soft_union(soft_union(sa, sb), sd) == soft_union(sa, soft_union(sb, sd)));
        CHECK(soft_intersection(soft_intersection(sa, sb), sd) ==
              soft_intersection(sa, soft_intersection(sb, sd)));
      }
}

TEST_CASE("disjointness from a soft point implies non-membership") {
  auto c = make_context({"x1", "x2"}, {"e1", "e2"});
  for (Mask m = 0; m <= c->full_mask(); ++m) {
    const SoftSet f(c, m);
    for (const std::string& x : c->universe()) {
      if (soft_intersection(SoftSet::soft_point(c, x), f).is_null())
        CHECK_FALSE(point_in(x, f));
    }
  }
}
