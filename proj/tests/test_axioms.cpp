#include <doctest.h>

#include "softtop/axioms.hpp"
#include "softtop/lab.hpp"

using namespace softtop;

namespace {

ContextPtr ctx2() { return make_context({"x1", "x2"}, {"e1", "e2"}); }
ContextPtr ctx3() { return make_context({"x1", "x2", "x3"}, {"e1", "e2"}); }

SoftSet ss(const ContextPtr& c,
           std::vector<std::pair<std::string, std::vector<std::string>>> pairs) {
  return SoftSet::make_labels(c, pairs);
}

CrispTopology sierpinski(const ContextPtr& c) {
  return CrispTopology(c, {PointSet(0), PointSet::of(*c, {"x1"}), PointSet::all(*c)});
}

CrispTopology discrete(const ContextPtr& c) {
  std::vector<PointSet> opens;
  for (std::uint32_t s = 0; s <= c->universe_mask(); ++s) opens.emplace_back(s);
  return CrispTopology(c, opens);
}

}  // namespace

TEST_CASE("axiom names round-trip") {
  for (AxiomKind a : kAllAxioms) CHECK(axiom_from_string(to_string(a)) == a);
  CHECK(axiom_from_string("T2") == AxiomKind::T2);
  CHECK_THROWS_AS(axiom_from_string("t9"), Error);
}

TEST_CASE("crisp verdicts on the standard small spaces") {
  auto c = ctx2();
  const CrispTopology s = sierpinski(c);
  CHECK(check_crisp(s, AxiomKind::T0).holds);
  CHECK_FALSE(check_crisp(s, AxiomKind::T1).holds);
  CHECK_FALSE(check_crisp(s, AxiomKind::T2).holds);

  const CrispTopology d = discrete(c);
  for (AxiomKind a : kAllAxioms) CHECK(check_crisp(d, a).holds);

  const CrispTopology ind = CrispTopology::indiscrete(c);
  CHECK_FALSE(check_crisp(ind, AxiomKind::T0).holds);
  CHECK(check_crisp(ind, AxiomKind::Regular).holds);
  CHECK(check_crisp(ind, AxiomKind::Normal).holds);
  CHECK_FALSE(check_crisp(ind, AxiomKind::T3).holds);
  CHECK_FALSE(check_crisp(ind, AxiomKind::T4).holds);
}

TEST_CASE("soft T1 on the two-point product with non-T1 slices") {
  auto c = ctx2();
  const CrispSystem sys(
      c, {CrispTopology(c, {PointSet(0), PointSet::of(*c, {"x1"}), PointSet::all(*c)}),
          CrispTopology(c, {PointSet(0), PointSet::of(*c, {"x2"}), PointSet::all(*c)})});
  for (const CrispTopology& t : sys.topologies()) {
    const AxiomReport crisp = check_crisp(t, AxiomKind::T1);
    CHECK_FALSE(crisp.holds);
    CHECK(crisp.witness_kind == "point-pair");
    CHECK(replay_witness(t, crisp));
  }

  const SoftTopology prod = formula1(sys);
  REQUIRE(prod.size() == 9);
  const AxiomReport soft = check_soft(prod, AxiomKind::T1);
  CHECK(soft.holds);
  CHECK(soft.witness_kind == "separating-opens");
  REQUIRE(soft.sets.size() == 2);
  // the only separating pair: ({x1} at e1, X at e2) and (X at e1, {x2} at e2)
  CHECK(soft.sets[0] == ss(c, {{"e1", {"x1"}}, {"e2", {"x1", "x2"}}}).mask());
  CHECK(soft.sets[1] == ss(c, {{"e1", {"x1", "x2"}}, {"e2", {"x2"}}}).mask());
}

TEST_CASE("soft T0 on the three-point product with non-T0 slices") {
  auto c = ctx3();
  const CrispSystem sys(
      c, {CrispTopology(c, {PointSet(0), PointSet::of(*c, {"x1"}),
                            PointSet::of(*c, {"x2", "x3"}), PointSet::all(*c)}),
          CrispTopology(c, {PointSet(0), PointSet::of(*c, {"x3"}),
                            PointSet::of(*c, {"x1", "x2"}), PointSet::all(*c)})});
  for (const CrispTopology& t : sys.topologies()) {
    const AxiomReport crisp = check_crisp(t, AxiomKind::T0);
    CHECK_FALSE(crisp.holds);
    CHECK(replay_witness(t, crisp));
  }
  CHECK(check_soft(formula1(sys), AxiomKind::T0).holds);
}

TEST_CASE("soft normal space with a non-normal extraction") {
  auto c = ctx3();
  const std::vector<Mask> masks = {
      0,
      ss(c, {{"e1", {}}, {"e2", {"x3"}}}).mask(),
      ss(c, {{"e1", {"x3"}}, {"e2", {}}}).mask(),
      ss(c, {{"e1", {"x2", "x3"}}, {"e2", {}}}).mask(),
      ss(c, {{"e1", {"x1", "x2", "x3"}}, {"e2", {}}}).mask(),
      ss(c, {{"e1", {"x1", "x3"}}, {"e2", {}}}).mask(),
      ss(c, {{"e1", {"x3"}}, {"e2", {"x3"}}}).mask(),
      ss(c, {{"e1", {"x2", "x3"}}, {"e2", {"x3"}}}).mask(),
      ss(c, {{"e1", {"x1", "x2", "x3"}}, {"e2", {"x3"}}}).mask(),
      ss(c, {{"e1", {"x1", "x3"}}, {"e2", {"x3"}}}).mask(),
      c->full_mask()};
  const SoftTopology t(c, masks);
  REQUIRE(is_soft_topology_masks(c, t.opens()).ok);
  CHECK(check_soft(t, AxiomKind::Normal).holds);

  const AxiomReport e1 = check_crisp(extract_crisp(t, "e1"), AxiomKind::Normal);
  CHECK_FALSE(e1.holds);
  CHECK(e1.witness_kind == "closed-pair");
  CHECK(replay_witness(extract_crisp(t, "e1"), e1));
}

TEST_CASE("regular slices with a non-regular product on a singleton universe") {
  auto c = make_context({"x"}, {"e1", "e2"});
  const CrispSystem sys(c, {CrispTopology::indiscrete(c), CrispTopology::indiscrete(c)});
  for (const CrispTopology& t : sys.topologies())
    CHECK(check_crisp(t, AxiomKind::Regular).holds);
  const SoftTopology prod = formula1(sys);
  REQUIRE(prod.size() == 4);
  const AxiomReport r = check_soft(prod, AxiomKind::Regular);
  CHECK_FALSE(r.holds);
  CHECK(r.witness_kind == "point-closed-pair");
  CHECK(replay_witness(prod, r));
}

TEST_CASE("normal slices do not force a soft normal product") {
  auto c = ctx3();
  const CrispSystem sys(
      c, {CrispTopology::indiscrete(c),
          CrispTopology(c, {PointSet(0), PointSet::of(*c, {"x1"}),
                            PointSet::of(*c, {"x1", "x2"}), PointSet::of(*c, {"x1", "x3"}),
                            PointSet::all(*c)})});
  const SoftTopology prod = formula1(sys);
  REQUIRE(prod.size() == 10);

  const AxiomReport r = check_soft(prod, AxiomKind::Normal);
  CHECK_FALSE(r.holds);
  CHECK(r.witness_kind == "closed-pair");
  CHECK(replay_witness(prod, r));

  // another unseparable pair, recorded independently, replays as well
  AxiomReport alt;
  alt.holds = false;
  alt.axiom = AxiomKind::Normal;
  alt.witness_kind = "closed-pair";
  alt.sets = {ss(c, {{"e1", {}}, {"e2", {"x3"}}}).mask(),
              ss(c, {{"e1", {"x1", "x2", "x3"}}, {"e2", {"x2"}}}).mask()};
  CHECK(replay_witness(prod, alt));

  // a separable pair does not replay
  AxiomReport bogus = alt;
  bogus.sets = {0, ss(c, {{"e1", {}}, {"e2", {"x3"}}}).mask()};
  CHECK_FALSE(replay_witness(prod, bogus));
}

TEST_CASE("implication hierarchy over the full soft census") {
  for (const SoftTopology& t : lab::enumerate_soft_topologies(2, 2)) {
    const bool t0 = check_soft(t, AxiomKind::T0).holds;
    const bool t1 = check_soft(t, AxiomKind::T1).holds;
    const bool t2 = check_soft(t, AxiomKind::T2).holds;
    const bool reg = check_soft(t, AxiomKind::Regular).holds;
    const bool nor = check_soft(t, AxiomKind::Normal).holds;
    const bool t3 = check_soft(t, AxiomKind::T3).holds;
    const bool t4 = check_soft(t, AxiomKind::T4).holds;
    CHECK((!t2 || t1));
    CHECK((!t1 || t0));
    CHECK(t3 == (t1 && reg));
    CHECK(t4 == (t1 && nor));
  }
}

TEST_CASE("implication hierarchy over the crisp census at four points") {
  for (const CrispTopology& t : lab::enumerate_crisp_topologies(4)) {
    const bool t0 = check_crisp(t, AxiomKind::T0).holds;
    const bool t1 = check_crisp(t, AxiomKind::T1).holds;
    const bool t2 = check_crisp(t, AxiomKind::T2).holds;
    CHECK((!t2 || t1));
    CHECK((!t1 || t0));
    CHECK(check_crisp(t, AxiomKind::T3).holds ==
          (t1 && check_crisp(t, AxiomKind::Regular).holds));
    CHECK(check_crisp(t, AxiomKind::T4).holds ==
          (t1 && check_crisp(t, AxiomKind::Normal).holds));
  }
}

TEST_CASE("single-set topologies inherit exactly the crisp separation axioms") {
  auto c = ctx3();
  for (const CrispTopology& sigma : lab::enumerate_crisp_topologies(3)) {
    const CrispTopology on_c(c, sigma.opens());
    const SoftTopology t = formula2(on_c, c);
    for (AxiomKind a : kAllAxioms)
      CHECK(check_crisp(on_c, a).holds == check_soft(t, a).holds);
  }
}

TEST_CASE("every failure report over the census replays") {
  for (const SoftTopology& t : lab::enumerate_soft_topologies(2, 2))
    for (AxiomKind a : kAllAxioms) {
      const AxiomReport r = check_soft(t, a);
      if (!r.holds) CHECK(replay_witness(t, r));
    }
}

TEST_CASE("reports render with labels") {
  auto c = ctx2();
  const AxiomReport bad = check_crisp(sierpinski(c), AxiomKind::T1);
  const std::string text = render_report(*c, bad, /*soft=*/false);
  CHECK(text.find("fails") != std::string::npos);
  CHECK(text.find("x2") != std::string::npos);

  const AxiomReport good = check_soft(SoftTopology::indiscrete(c), AxiomKind::Normal);
  CHECK(render_report(*c, good).find("holds") == 0);
}
