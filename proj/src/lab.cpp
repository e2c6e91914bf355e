#include "softtop/lab.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace softtop::lab {

namespace {

bool closed_family_bits(std::uint32_t fam, int subset_count) {
  // fam is a bitset over the subsets of the point set; subset s is a member
  // iff bit s of fam is set.
  for (int a = 0; a < subset_count; ++a) {
    if (!((fam >> a) & 1u)) continue;
    for (int b = a + 1; b < subset_count; ++b) {
      if (!((fam >> b) & 1u)) continue;
      if (!((fam >> (a & b)) & 1u)) return false;
      if (!((fam >> (a | b)) & 1u)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_topology_masks(int k) {
  if (k < 1 || k > 4)
    throw BoundExceeded("exhaustive topology enumeration supports 1..4 points, got " +
                        std::to_string(k));
  const int subset_count = 1 << k;
  const std::uint32_t top = 1u << (subset_count - 1);
  const std::uint64_t family_count = 1ull << subset_count;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t fam = 0; fam < family_count; ++fam) {
    if (!(fam & 1u)) continue;           // must contain the empty set
    if (!(fam & top)) continue;          // must contain X
    if (!closed_family_bits(static_cast<std::uint32_t>(fam), subset_count)) continue;
    std::vector<std::uint32_t> opens;
    for (int s = 0; s < subset_count; ++s)
      if ((fam >> s) & 1u) opens.push_back(static_cast<std::uint32_t>(s));
    out.push_back(std::move(opens));
  }
  return out;
}

ContextPtr sweep_context(int points, int params) {
  std::vector<std::string> xs, es;
  for (int i = 1; i <= points; ++i) xs.push_back("x" + std::to_string(i));
  for (int j = 1; j <= params; ++j) es.push_back("e" + std::to_string(j));
  return make_context(std::move(xs), std::move(es));
}

std::vector<CrispTopology> enumerate_crisp_topologies(int points) {
  const ContextPtr ctx = sweep_context(points, 1);
  std::vector<CrispTopology> out;
  for (const auto& masks : enumerate_topology_masks(points)) {
    std::vector<PointSet> opens;
    for (std::uint32_t m : masks) opens.emplace_back(m);
    out.emplace_back(ctx, std::move(opens));
  }
  return out;
}

std::vector<SoftTopology> enumerate_soft_topologies(int points, int params) {
  if (points * params > 4)
    throw BoundExceeded("exhaustive soft-topology enumeration requires |X|*|E| <= 4");
  const ContextPtr ctx = sweep_context(points, params);
  std::vector<SoftTopology> out;
  // A subset of X x E with bit (e*n + x) is exactly our soft-set encoding,
  // so topologies on the product set pull back bit-for-bit.
  for (const auto& masks : enumerate_topology_masks(points * params)) {
    std::vector<Mask> opens(masks.begin(), masks.end());
    out.emplace_back(ctx, std::move(opens));
  }
  return out;
}

SoftTopology random_soft_topology(const ContextPtr& ctx, std::uint64_t seed, int subbasis_size,
                                  bool allow_large) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Mask> dist(0, ctx->full_mask());
  std::vector<Mask> subbasis;
  for (int i = 0; i < subbasis_size; ++i) subbasis.push_back(dist(rng));
  return generate_soft_masks(ctx, subbasis, allow_large);
}

namespace {

io::Json doc_json(const io::Document& doc) { return io::Json::parse(io::serialize(doc)); }

CrispTopology on_context(const ContextPtr& ctx, const std::vector<std::uint32_t>& masks) {
  std::vector<PointSet> opens;
  opens.reserve(masks.size());
  for (std::uint32_t m : masks) opens.emplace_back(m);
  return CrispTopology(ctx, std::move(opens));
}

struct Claim {
  enum class Kind { System, Census, SingleCrisp, Converse };
  Kind kind;
  int def_points;
  int def_params;
  std::string description;
  // System / Converse: predicate over a crisp system (Converse: true when the
  // instance refutes the converse). Census: predicate over a soft topology.
  // SingleCrisp: predicate over one crisp topology with a parameter context.
  std::function<bool(const CrispSystem&)> on_system;
  std::function<bool(const SoftTopology&)> on_census;
  std::function<bool(const CrispTopology&, const ContextPtr&)> on_crisp;
};

bool every_extraction(const SoftTopology& t, AxiomKind a) {
  for (int j = 0; j < t.context()->params(); ++j)
    if (!check_crisp(extract_crisp(t, j), a).holds) return false;
  return true;
}

bool some_param_crisp(const CrispSystem& s, AxiomKind a) {
  for (const auto& t : s.topologies())
    if (check_crisp(t, a).holds) return true;
  return false;
}

bool all_params_crisp(const CrispSystem& s, AxiomKind a) {
  for (const auto& t : s.topologies())
    if (!check_crisp(t, a).holds) return false;
  return true;
}

const std::map<std::string, Claim>& claims() {
  static const std::map<std::string, Claim> table = [] {
    std::map<std::string, Claim> t;
    auto system = [&t](const std::string& id, std::string desc,
                       std::function<bool(const CrispSystem&)> pred) {
      t[id] = Claim{Claim::Kind::System, 3, 2, std::move(desc), std::move(pred), {}, {}};
    };
    auto census = [&t](const std::string& id, std::string desc,
                       std::function<bool(const SoftTopology&)> pred) {
      t[id] = Claim{Claim::Kind::Census, 2, 2, std::move(desc), {}, std::move(pred), {}};
    };
    auto converse = [&t](const std::string& id, int np, std::string desc,
                         std::function<bool(const CrispSystem&)> pred) {
      t[id] = Claim{Claim::Kind::Converse, np, 2, std::move(desc), std::move(pred), {}, {}};
    };

    system("T5.1", "some crisp topology T0 implies the product soft topology is soft T0",
           [](const CrispSystem& s) {
             return !some_param_crisp(s, AxiomKind::T0) ||
                    check_soft(formula1(s), AxiomKind::T0).holds;
           });
    system("T5.2", "some crisp topology T1 implies the product soft topology is soft T1",
           [](const CrispSystem& s) {
             return !some_param_crisp(s, AxiomKind::T1) ||
                    check_soft(formula1(s), AxiomKind::T1).holds;
           });
    system("T5.3", "all crisp topologies T2 iff the product soft topology is soft T2",
           [](const CrispSystem& s) {
             return all_params_crisp(s, AxiomKind::T2) ==
                    check_soft(formula1(s), AxiomKind::T2).holds;
           });
    system("T5.4", "product soft topology soft regular implies every crisp topology regular",
           [](const CrispSystem& s) {
             return !check_soft(formula1(s), AxiomKind::Regular).holds ||
                    all_params_crisp(s, AxiomKind::Regular);
           });
    system("T5.5", "all crisp topologies normal iff the product soft topology is soft normal",
           [](const CrispSystem& s) {
             return all_params_crisp(s, AxiomKind::Normal) ==
                    check_soft(formula1(s), AxiomKind::Normal).holds;
           });
    system("L3.4", "the per-parameter product base generates the product soft topology",
           [](const CrispSystem& s) {
             std::vector<std::vector<PointSet>> bases;
             for (const auto& topo : s.topologies()) bases.push_back(topo.opens());
             return generate_soft(s.context(), product_base(s.context(), bases)) == formula1(s);
           });
    system("L3.6",
           "union of single-set topologies generates the single-set topology of the crisp "
           "closure of the union",
           [](const CrispSystem& s) {
             std::vector<PointSet> all_opens;
             for (const auto& topo : s.topologies())
               for (PointSet o : topo.opens()) all_opens.push_back(o);
             return union_single_set(s) ==
                    formula2(generate_crisp(s.context(), all_opens), s.context());
           });

    census("L3.3", "every soft topology is contained in its associated soft topology",
           [](const SoftTopology& t) {
             const SoftTopology a = associated(t);
             return std::includes(a.opens().begin(), a.opens().end(), t.opens().begin(),
                                  t.opens().end());
           });
    census("L2.7", "soft regular implies all extracted crisp topologies coincide",
           [](const SoftTopology& t) {
             if (!check_soft(t, AxiomKind::Regular).holds) return true;
             const CrispTopology first = extract_crisp(t, 0);
             for (int j = 1; j < t.context()->params(); ++j)
               if (!(extract_crisp(t, j) == first)) return false;
             return true;
           });
    census("C5.1", "soft T2 implies every extracted crisp topology is T2",
           [](const SoftTopology& t) {
             return !check_soft(t, AxiomKind::T2).holds || every_extraction(t, AxiomKind::T2);
           });
    census("C5.2", "soft regular implies every extracted crisp topology is regular",
           [](const SoftTopology& t) {
             return !check_soft(t, AxiomKind::Regular).holds ||
                    every_extraction(t, AxiomKind::Regular);
           });
    census("R-T3", "soft T3 implies every extracted crisp topology is T3",
           [](const SoftTopology& t) {
             return !check_soft(t, AxiomKind::T3).holds || every_extraction(t, AxiomKind::T3);
           });

    t["F2"] = Claim{Claim::Kind::SingleCrisp, 3, 2,
                    "the single-set soft topology satisfies exactly the separation axioms of "
                    "its crisp topology",
                    {},
                    {},
                    [](const CrispTopology& sigma, const ContextPtr& ctx) {
                      const SoftTopology t = formula2(sigma, ctx);
                      for (AxiomKind a : kAllAxioms)
                        if (check_crisp(sigma, a).holds != check_soft(t, a).holds) return false;
                      return true;
                    }};

    converse("CONV-T5.1", 3, "soft T0 product with no crisp topology T0",
             [](const CrispSystem& s) {
               return !some_param_crisp(s, AxiomKind::T0) &&
                      check_soft(formula1(s), AxiomKind::T0).holds;
             });
    converse("CONV-T5.2", 2, "soft T1 product with no crisp topology T1",
             [](const CrispSystem& s) {
               return !some_param_crisp(s, AxiomKind::T1) &&
                      check_soft(formula1(s), AxiomKind::T1).holds;
             });
    converse("CONV-T5.4", 1, "all crisp topologies regular yet the product is not soft regular",
             [](const CrispSystem& s) {
               return all_params_crisp(s, AxiomKind::Regular) &&
                      !check_soft(formula1(s), AxiomKind::Regular).holds;
             });
    return t;
  }();
  return table;
}

/// Runs `body` over every m-tuple of topologies on the n-point sweep context.
/// `body` returns false to stop the sweep.
void for_each_system(int points, int params,
                     const std::function<bool(const CrispSystem&)>& body) {
  const ContextPtr ctx = sweep_context(points, params);
  const auto topos = enumerate_topology_masks(points);
  std::vector<size_t> idx(params, 0);
  while (true) {
    std::vector<CrispTopology> per_param;
    per_param.reserve(params);
    for (int j = 0; j < params; ++j) per_param.push_back(on_context(ctx, topos[idx[j]]));
    if (!body(CrispSystem(ctx, std::move(per_param)))) return;
    int j = params - 1;
    while (j >= 0 && ++idx[j] == topos.size()) idx[j--] = 0;
    if (j < 0) return;
  }
}

CrispSystem random_system(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, ctx->universe_mask());
  std::vector<CrispTopology> per_param;
  for (int j = 0; j < ctx->params(); ++j) {
    std::vector<PointSet> subbasis;
    for (int i = 0; i < 3; ++i) subbasis.emplace_back(dist(rng));
    per_param.push_back(generate_crisp(ctx, subbasis));
  }
  return CrispSystem(ctx, std::move(per_param));
}

VerificationOutcome run_claim(const std::string& id, const Claim& claim,
                              const SweepBounds& bounds, bool searching) {
  VerificationOutcome out;
  out.id = id;
  const int points = bounds.max_points > 0 ? bounds.max_points : claim.def_points;
  const int params = bounds.max_parameters > 0 ? bounds.max_parameters : claim.def_params;

  switch (claim.kind) {
    case Claim::Kind::System:
    case Claim::Kind::Converse: {
      const bool want = claim.kind == Claim::Kind::Converse;  // predicate value to report
      auto visit = [&](const CrispSystem& s) {
        ++out.cases_checked;
        if (claim.on_system(s) != want) return true;
        if (!want) {  // violation of a proved claim
          out.counterexample = doc_json(io::make_document(s));
          return false;
        }
        out.counterexample = doc_json(io::make_document(s));
        return false;  // found the refuting instance
      };
      if (bounds.samples > 0) {
        const ContextPtr ctx = sweep_context(points, params);
        std::mt19937_64 rng(bounds.seed);
        for (int i = 0; i < bounds.samples; ++i)
          if (!visit(random_system(ctx, rng))) break;
      } else {
        for_each_system(points, params, visit);
      }
      out.proven = want ? !out.counterexample.is_null() : out.counterexample.is_null();
      break;
    }
    case Claim::Kind::Census: {
      auto visit = [&](const SoftTopology& t) {
        ++out.cases_checked;
        if (claim.on_census(t)) return true;
        out.counterexample = doc_json(io::make_document(t));
        return false;
      };
      if (bounds.samples > 0) {
        const ContextPtr ctx = sweep_context(points, params);
        for (int i = 0; i < bounds.samples; ++i)
          if (!visit(random_soft_topology(ctx, bounds.seed + i, 3, bounds.allow_large))) break;
      } else {
        for (const SoftTopology& t : enumerate_soft_topologies(points, params))
          if (!visit(t)) break;
      }
      out.proven = out.counterexample.is_null();
      break;
    }
    case Claim::Kind::SingleCrisp: {
      const ContextPtr ctx = sweep_context(points, params);
      for (int n = 1; n <= points; ++n) {
        const ContextPtr c = sweep_context(n, params);
        for (const auto& masks : enumerate_topology_masks(n)) {
          ++out.cases_checked;
          const CrispTopology sigma = on_context(c, masks);
          if (!claim.on_crisp(sigma, c)) {
            out.counterexample = doc_json(io::make_document(sigma));
            break;
          }
        }
        if (!out.counterexample.is_null()) break;
      }
      (void)ctx;
      out.proven = out.counterexample.is_null();
      break;
    }
  }
  if (searching && out.counterexample.is_null())
    throw NotFound("no counterexample for " + id + " within points=" + std::to_string(points) +
                   ", params=" + std::to_string(params));
  return out;
}

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const auto& [id, c] : claims())
    if (c.kind != Claim::Kind::Converse) out.push_back(id);
  return out;
}

std::vector<std::string> converse_ids() {
  std::vector<std::string> out;
  for (const auto& [id, c] : claims())
    if (c.kind == Claim::Kind::Converse) out.push_back(id);
  return out;
}

std::string describe_claim(const std::string& id) {
  auto it = claims().find(id);
  if (it == claims().end()) throw UnknownTheorem(id);
  return it->second.description;
}

VerificationOutcome verify_theorem(const std::string& id, const SweepBounds& bounds) {
  auto it = claims().find(id);
  if (it == claims().end() || it->second.kind == Claim::Kind::Converse) throw UnknownTheorem(id);
  return run_claim(id, it->second, bounds, /*searching=*/false);
}

VerificationOutcome search_converse(const std::string& id, const SweepBounds& bounds) {
  auto it = claims().find(id);
  if (it == claims().end() || it->second.kind != Claim::Kind::Converse) throw UnknownTheorem(id);
  return run_claim(id, it->second, bounds, /*searching=*/true);
}

namespace {

using LabeledSets = std::vector<std::pair<std::string, std::vector<std::string>>>;

SoftSet ss(const ContextPtr& ctx, const LabeledSets& pairs) {
  return SoftSet::make_labels(ctx, pairs);
}

std::map<std::string, Fixture> build_fixtures() {
  std::map<std::string, Fixture> out;
  auto add = [&out](const std::string& name, io::Document doc, std::string notes) {
    out[name] = Fixture{name, std::move(doc), std::move(notes)};
  };

  const ContextPtr c3 = make_context({"x1", "x2", "x3"}, {"e1", "e2"});

  // Worked six-member soft topology on three points, two parameters.
  const std::vector<SoftSet> sigma31 = {
      SoftSet::null(c3),
      ss(c3, {{"e1", {"x1"}}, {"e2", {}}}),
      ss(c3, {{"e1", {"x1", "x2"}}, {"e2", {"x1", "x2", "x3"}}}),
      ss(c3, {{"e1", {}}, {"e2", {"x3"}}}),
      ss(c3, {{"e1", {"x1"}}, {"e2", {"x3"}}}),
      SoftSet::absolute(c3)};
  {
    std::vector<Mask> masks;
    for (const auto& s : sigma31) masks.push_back(s.mask());
    add("example-3.1-sigma", io::make_document(SoftTopology(c3, masks)),
        "six soft opens; extractions are {0,{x1},{x1,x2},X} at e1 and {0,{x3},X} at e2");
    add("example-3.1-system",
        io::make_document(extract_system(SoftTopology(c3, masks))),
        "the system of crisp topologies extracted from example-3.1-sigma");
  }

  // A different soft topology with the same extractions.
  {
    std::vector<Mask> masks = {
        0,
        ss(c3, {{"e1", {"x1"}}, {"e2", {}}}).mask(),
        ss(c3, {{"e1", {"x1", "x2"}}, {"e2", {"x1", "x2", "x3"}}}).mask(),
        ss(c3, {{"e1", {"x1", "x2", "x3"}}, {"e2", {"x3"}}}).mask(),
        ss(c3, {{"e1", {"x1", "x2"}}, {"e2", {"x3"}}}).mask(),
        c3->full_mask()};
    add("example-4.1-sigma-prime", io::make_document(SoftTopology(c3, masks)),
        "incomparable with example-3.1-sigma yet has the same extracted system");
    std::vector<Mask> hat = masks;
    for (const auto& s : sigma31) hat.push_back(s.mask());
    add("example-4.1-sigma-hat", io::make_document(SoftTopology(c3, hat)),
        "literal union of example-3.1-sigma and example-4.1-sigma-prime; "
        "closed as it stands, and strictly finer than both");
  }

  // Product construction whose listed form overcounts by one member.
  {
    std::vector<CrispTopology> per_param = {
        CrispTopology(c3, {PointSet(0), PointSet::of(*c3, {"x1"}),
                           PointSet::of(*c3, {"x2", "x3"}), PointSet::all(*c3)}),
        CrispTopology(c3, {PointSet(0), PointSet::of(*c3, {"x3"}),
                           PointSet::of(*c3, {"x1", "x2"}), PointSet::all(*c3)})};
    const CrispSystem sys(c3, per_param);
    add("example-5.1-system", io::make_document(sys),
        "neither crisp topology is T0, yet the product soft topology is soft T0");
    add("example-5.1-corrected", io::make_document(formula1(sys)),
        "the published list carries 17 members, but the product of two 4-open "
        "topologies has exactly 16; the listed extra member assigns {x2} at e2, "
        "which is not open there, so it cannot belong. This fixture stores the "
        "16-member product; the soft-T0 conclusion is unaffected");
  }

  // Two-point universe: soft T1 without either crisp topology being T1.
  {
    const ContextPtr c2 = make_context({"x1", "x2"}, {"e1", "e2"});
    std::vector<CrispTopology> per_param = {
        CrispTopology(c2, {PointSet(0), PointSet::of(*c2, {"x1"}), PointSet::all(*c2)}),
        CrispTopology(c2, {PointSet(0), PointSet::of(*c2, {"x2"}), PointSet::all(*c2)})};
    add("example-5.2-system", io::make_document(CrispSystem(c2, per_param)),
        "neither crisp topology is T1; the 9-member product is soft T1 with the "
        "unique separating pair ({x1} at e1, X at e2) and (X at e1, {x2} at e2)");
  }

  // Soft normal space with a non-normal extraction.
  {
    std::vector<Mask> masks = {
        0,
        ss(c3, {{"e1", {}}, {"e2", {"x3"}}}).mask(),
        ss(c3, {{"e1", {"x3"}}, {"e2", {}}}).mask(),
        ss(c3, {{"e1", {"x2", "x3"}}, {"e2", {}}}).mask(),
        ss(c3, {{"e1", {"x1", "x2", "x3"}}, {"e2", {}}}).mask(),
        ss(c3, {{"e1", {"x1", "x3"}}, {"e2", {}}}).mask(),
        ss(c3, {{"e1", {"x3"}}, {"e2", {"x3"}}}).mask(),
        ss(c3, {{"e1", {"x2", "x3"}}, {"e2", {"x3"}}}).mask(),
        ss(c3, {{"e1", {"x1", "x2", "x3"}}, {"e2", {"x3"}}}).mask(),
        ss(c3, {{"e1", {"x1", "x3"}}, {"e2", {"x3"}}}).mask(),
        c3->full_mask()};
    add("example-5.5-sigma", io::make_document(SoftTopology(c3, masks)),
        "soft normal (every pair of non-null soft closed sets meets), while the "
        "extraction at e1 is not a normal crisp topology");
  }

  // Singleton universe, both topologies indiscrete: regular slices, product
  // not soft regular.
  {
    const ContextPtr c1 = make_context({"x"}, {"e1", "e2"});
    std::vector<CrispTopology> per_param = {CrispTopology::indiscrete(c1),
                                            CrispTopology::indiscrete(c1)};
    add("example-5.6-system", io::make_document(CrispSystem(c1, per_param)),
        "both crisp topologies are trivially regular; the 4-member product is "
        "not soft regular");
  }

  // Indiscrete at e1, a non-normal 5-open topology at e2.
  {
    std::vector<CrispTopology> per_param = {
        CrispTopology::indiscrete(c3),
        CrispTopology(c3, {PointSet(0), PointSet::of(*c3, {"x1"}),
                           PointSet::of(*c3, {"x1", "x2"}), PointSet::of(*c3, {"x1", "x3"}),
                           PointSet::all(*c3)})};
    add("example-5.7-system", io::make_document(CrispSystem(c3, per_param)),
        "the e2 topology is not normal ({x2} and {x3} cannot be separated); the "
        "10-member product is not soft normal, witnessed by the closed pair "
        "(0 at e1, {x3} at e2) and (X at e1, {x2} at e2)");
  }

  return out;
}

}  // namespace

const std::map<std::string, Fixture>& fixtures() {
  static const std::map<std::string, Fixture> all = build_fixtures();
  return all;
}

}  // namespace softtop::lab
