#include <doctest.h>

#include <algorithm>

#include "softtop/generators.hpp"
#include "softtop/lab.hpp"

using namespace softtop;

namespace {

ContextPtr ctx3() { return make_context({"x1", "x2", "x3"}, {"e1", "e2"}); }

SoftSet ss(const ContextPtr& c,
           std::vector<std::pair<std::string, std::vector<std::string>>> pairs) {
  return SoftSet::make_labels(c, pairs);
}

SoftTopology sigma31(const ContextPtr& c) {
  return SoftTopology(c, {SoftSet::null(c).mask(),
                          ss(c, {{"e1", {"x1"}}, {"e2", {}}}).mask(),
                          ss(c, {{"e1", {"x1", "x2"}}, {"e2", {"x1", "x2", "x3"}}}).mask(),
                          ss(c, {{"e1", {}}, {"e2", {"x3"}}}).mask(),
                          ss(c, {{"e1", {"x1"}}, {"e2", {"x3"}}}).mask(),
                          SoftSet::absolute(c).mask()});
}

CrispSystem system31(const ContextPtr& c) { return extract_system(sigma31(c)); }

}  // namespace

TEST_CASE("extraction of the worked topology") {
  auto c = ctx3();
  const CrispTopology e1 = extract_crisp(sigma31(c), "e1");
  CHECK(e1 == CrispTopology(c, {PointSet(0), PointSet::of(*c, {"x1"}),
                                PointSet::of(*c, {"x1", "x2"}), PointSet::all(*c)}));
  const CrispTopology e2 = extract_crisp(sigma31(c), "e2");
  CHECK(e2 == CrispTopology(c, {PointSet(0), PointSet::of(*c, {"x3"}), PointSet::all(*c)}));
  CHECK(extract_crisp(SoftTopology::indiscrete(c), "e1") == CrispTopology::indiscrete(c));
  CHECK_THROWS_AS(extract_crisp(sigma31(c), "e9"), UnknownParameter);
}

TEST_CASE("formula1 on the worked system yields the 12-member product") {
  auto c = ctx3();
  const SoftTopology t = formula1(system31(c));
  CHECK(t.size() == 12);
  CHECK(is_soft_topology_masks(c, t.opens()).ok);
  // the ten middle members listed in the source, plus null and absolute
  const std::vector<SoftSet> named = {
      ss(c, {{"e1", {}}, {"e2", {"x1", "x2", "x3"}}}),
      ss(c, {{"e1", {}}, {"e2", {"x3"}}}),
      ss(c, {{"e1", {"x1", "x2", "x3"}}, {"e2", {}}}),
      ss(c, {{"e1", {"x1", "x2", "x3"}}, {"e2", {"x3"}}}),
      ss(c, {{"e1", {"x1"}}, {"e2", {}}}),
      ss(c, {{"e1", {"x1"}}, {"e2", {"x1", "x2", "x3"}}}),
      ss(c, {{"e1", {"x1"}}, {"e2", {"x3"}}}),
      ss(c, {{"e1", {"x1", "x2"}}, {"e2", {}}}),
      ss(c, {{"e1", {"x1", "x2"}}, {"e2", {"x1", "x2", "x3"}}}),
      ss(c, {{"e1", {"x1", "x2"}}, {"e2", {"x3"}}})};
  for (const SoftSet& h : named) CHECK(t.contains(h.mask()));
  CHECK(t.contains(0));
  CHECK(t.contains(c->full_mask()));
}

TEST_CASE("formula2 on the worked extractions") {
  auto c = ctx3();
  const SoftTopology t1 = formula2(extract_crisp(sigma31(c), "e1"), c);
  CHECK(t1.size() == 4);
  CHECK(t1.contains(ss(c, {{"e1", {"x1"}}, {"e2", {"x1"}}}).mask()));
  CHECK(t1.contains(ss(c, {{"e1", {"x1", "x2"}}, {"e2", {"x1", "x2"}}}).mask()));

  const SoftTopology t2 = formula2(extract_crisp(sigma31(c), "e2"), c);
  CHECK(t2.size() == 3);
  CHECK(t2.contains(ss(c, {{"e1", {"x3"}}, {"e2", {"x3"}}}).mask()));

  CHECK(formula2(CrispTopology::indiscrete(c), c) == SoftTopology::indiscrete(c));
}

TEST_CASE("union of single-set topologies generates the 6-member constant family") {
  auto c = ctx3();
  const SoftTopology t = union_single_set(system31(c));
  CHECK(t.size() == 6);
  for (const auto& labels : std::vector<std::vector<std::string>>{
           {"x1"}, {"x3"}, {"x1", "x2"}, {"x1", "x3"}}) {
    const PointSet v = PointSet::of(*c, labels);
    std::vector<std::uint32_t> slices(2, v.bits());
    CHECK(t.contains(compose_mask(slices, 3)));
  }
  // matches the single-set topology of the crisp closure of the union
  const CrispSystem sys = system31(c);
  std::vector<PointSet> all_opens;
  for (const auto& topo : sys.topologies())
    for (PointSet o : topo.opens()) all_opens.push_back(o);
  CHECK(t == formula2(generate_crisp(c, all_opens), c));

  const CrispSystem ind(c, {CrispTopology::indiscrete(c), CrispTopology::indiscrete(c)});
  CHECK(union_single_set(ind) == SoftTopology::indiscrete(c));
}

TEST_CASE("relations between the three constructions on the worked example") {
  auto c = ctx3();
  const SoftTopology sigma = sigma31(c);
  const SoftTopology prod = formula1(system31(c));
  const SoftTopology uni = union_single_set(system31(c));
  CHECK(compare(sigma, prod) == Comparison::StrictlyCoarser);
  CHECK(compare(sigma, uni) == Comparison::Incomparable);
  CHECK(compare(uni, prod) == Comparison::Incomparable);
}

TEST_CASE("the second worked topology shares extractions and associated topology") {
  auto c = ctx3();
  const SoftTopology sigma = sigma31(c);
  const SoftTopology sigma_prime(
      c, {0, ss(c, {{"e1", {"x1"}}, {"e2", {}}}).mask(),
          ss(c, {{"e1", {"x1", "x2"}}, {"e2", {"x1", "x2", "x3"}}}).mask(),
          ss(c, {{"e1", {"x1", "x2", "x3"}}, {"e2", {"x3"}}}).mask(),
          ss(c, {{"e1", {"x1", "x2"}}, {"e2", {"x3"}}}).mask(), c->full_mask()});
  CHECK(is_soft_topology_masks(c, sigma_prime.opens()).ok);
  CHECK(compare(sigma, sigma_prime) == Comparison::Incomparable);

  std::vector<Mask> hat = sigma.opens();
  for (Mask m : sigma_prime.opens()) hat.push_back(m);
  const SoftTopology sigma_hat(c, hat);
  CHECK(is_soft_topology_masks(c, sigma_hat.opens()).ok);
  CHECK(compare(sigma_hat, sigma) == Comparison::StrictlyFiner);
  CHECK(compare(sigma_hat, sigma_prime) == Comparison::StrictlyFiner);

  CHECK(extract_system(sigma) == extract_system(sigma_prime));
  CHECK(extract_system(sigma) == extract_system(sigma_hat));
  CHECK(associated(sigma) == associated(sigma_prime));
  CHECK(associated(sigma) == associated(sigma_hat));
  CHECK(associated(sigma) == formula1(system31(c)));
}

TEST_CASE("associated topology of the indiscrete two-parameter space") {
  auto c1 = make_context({"x"}, {"e1", "e2"});
  const SoftTopology assoc = associated(SoftTopology::indiscrete(c1));
  CHECK(assoc.size() == 4);
  CHECK(assoc.contains(0b01));
  CHECK(assoc.contains(0b10));
}

TEST_CASE("product base generates the product topology") {
  auto c = ctx3();
  const CrispSystem sys = system31(c);
  std::vector<std::vector<PointSet>> full_bases;
  for (const auto& t : sys.topologies()) full_bases.push_back(t.opens());
  CHECK(generate_soft(c, product_base(c, full_bases)) == formula1(sys));

  // minimal bases give the same product
  const std::vector<std::vector<PointSet>> minimal = {
      {PointSet::of(*c, {"x1"}), PointSet::of(*c, {"x1", "x2"}), PointSet::all(*c)},
      {PointSet::of(*c, {"x3"}), PointSet::all(*c)}};
  CHECK(generate_soft(c, product_base(c, minimal)) == formula1(sys));

  // indiscrete per-parameter bases
  const std::vector<std::vector<PointSet>> trivial = {{PointSet::all(*c)}, {PointSet::all(*c)}};
  const CrispSystem ind(c, {CrispTopology::indiscrete(c), CrispTopology::indiscrete(c)});
  CHECK(generate_soft(c, product_base(c, trivial)) == formula1(ind));

  // {x1},{x2} does not generate a topology by unions alone on three points
  CHECK_THROWS_AS(product_base(c, {{PointSet::of(*c, {"x1"}), PointSet::of(*c, {"x2"})},
                                   {PointSet::all(*c)}}),
                  NotABase);
}

TEST_CASE("formula1 cardinality and sectioning over the 3-point sweep") {
  const auto topos = lab::enumerate_crisp_topologies(3);
  REQUIRE(topos.size() == 29);
  auto c = lab::sweep_context(3, 2);
  for (size_t a = 0; a < topos.size(); ++a)
    for (size_t b = 0; b < topos.size(); ++b) {
      const CrispSystem sys(
          c, {CrispTopology(c, topos[a].opens()), CrispTopology(c, topos[b].opens())});
      const SoftTopology prod = formula1(sys);
      CHECK(prod.size() == static_cast<int>(topos[a].opens().size() * topos[b].opens().size()));
      CHECK(extract_system(prod) == sys);
    }
}

TEST_CASE("associated is idempotent over the 2x2 census") {
  for (const SoftTopology& t : lab::enumerate_soft_topologies(2, 2)) {
    const SoftTopology a = associated(t);
    CHECK(associated(a) == a);
    CHECK(std::includes(a.opens().begin(), a.opens().end(), t.opens().begin(), t.opens().end()));
  }
}

TEST_CASE("formula2 embeds the crisp topology order-isomorphically") {
  auto c = ctx3();
  for (const CrispTopology& sigma : lab::enumerate_crisp_topologies(3)) {
    const CrispTopology on_c(c, sigma.opens());
    const SoftTopology t = formula2(on_c, c);
    CHECK(t.size() == on_c.size());
    for (PointSet u : on_c.opens())
      for (PointSet v : on_c.opens()) {
        std::vector<std::uint32_t> su(2, (u | v).bits()), si(2, (u & v).bits());
        CHECK(t.contains(compose_mask(su, 3)));
        CHECK(t.contains(compose_mask(si, 3)));
      }
  }
}
