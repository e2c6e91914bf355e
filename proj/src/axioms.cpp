#include "softtop/axioms.hpp"

#include <algorithm>
#include <sstream>

namespace softtop {

std::string to_string(AxiomKind a) {
  switch (a) {
    case AxiomKind::T0: return "t0";
    case AxiomKind::T1: return "t1";
    case AxiomKind::T2: return "t2";
    case AxiomKind::Regular: return "regular";
    case AxiomKind::Normal: return "normal";
    case AxiomKind::T3: return "t3";
    case AxiomKind::T4: return "t4";
  }
  return "?";
}

AxiomKind axiom_from_string(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "t0") return AxiomKind::T0;
  if (n == "t1") return AxiomKind::T1;
  if (n == "t2") return AxiomKind::T2;
  if (n == "regular") return AxiomKind::Regular;
  if (n == "normal") return AxiomKind::Normal;
  if (n == "t3") return AxiomKind::T3;
  if (n == "t4") return AxiomKind::T4;
  throw Error("unknown axiom: " + name);
}

namespace {

/// Quantifier core shared by crisp and soft checks. `marks[p]` is the mask a
/// member must cover for the point to belong to it: a singleton bit for crisp
/// spaces, the full soft-point column for soft spaces.
struct SepSpace {
  std::vector<Mask> opens;  // sorted ascending
  Mask full = 0;
  std::vector<Mask> marks;
  std::vector<Mask> disj;  // per open: union of all opens disjoint from it

  explicit SepSpace(std::vector<Mask> opens_, Mask full_, std::vector<Mask> marks_)
      : opens(std::move(opens_)), full(full_), marks(std::move(marks_)) {
    disj.resize(opens.size(), 0);
    for (size_t i = 0; i < opens.size(); ++i)
      for (size_t j = 0; j < opens.size(); ++j)
        if ((opens[i] & opens[j]) == 0) disj[i] |= opens[j];
  }

  bool in(int p, Mask u) const { return (marks[p] & u) == marks[p]; }

  /// First open containing p and omitting q, or -1.
  int separating_open(int p, int q) const {
    for (size_t k = 0; k < opens.size(); ++k)
      if (in(p, opens[k]) && !in(q, opens[k])) return static_cast<int>(k);
    return -1;
  }

  /// Disjoint opens around (a, b); the union of all opens disjoint from a
  /// candidate U is itself open, so it is the best possible second set.
  bool separate_sets(Mask a, Mask b) const {
    for (size_t k = 0; k < opens.size(); ++k)
      if ((a & ~opens[k]) == 0 && (b & ~disj[k]) == 0) return true;
    return false;
  }
  bool separate_point_set(int p, Mask b) const {
    for (size_t k = 0; k < opens.size(); ++k)
      if (in(p, opens[k]) && (b & ~disj[k]) == 0) return true;
    return false;
  }

  std::vector<Mask> closed() const { return closed_masks(opens, full); }
};

AxiomReport check_core(const SepSpace& sp, AxiomKind axiom) {
  AxiomReport r;
  r.axiom = axiom;
  r.holds = true;
  const int np = static_cast<int>(sp.marks.size());
  switch (axiom) {
    case AxiomKind::T0: {
      for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
          bool ok = false;
          for (Mask u : sp.opens)
            if (sp.in(i, u) != sp.in(j, u)) {
              ok = true;
              if (r.sets.empty()) {
                r.witness_kind = "separating-opens";
                r.points = {i, j};
                r.sets = {u};
              }
              break;
            }
          if (!ok) {
            r.holds = false;
            r.witness_kind = "point-pair";
            r.points = {i, j};
            r.sets.clear();
            r.detail = "no open distinguishes the pair";
            return r;
          }
        }
      return r;
    }
    case AxiomKind::T1: {
      for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
          const int u = sp.separating_open(i, j);
          const int v = sp.separating_open(j, i);
          if (u < 0 || v < 0) {
            r.holds = false;
            r.witness_kind = "point-pair";
            r.points = u < 0 ? std::vector<int>{i, j} : std::vector<int>{j, i};
            r.detail = "no open contains the first point and omits the second";
            return r;
          }
          if (r.sets.empty()) {
            r.witness_kind = "separating-opens";
            r.points = {i, j};
            r.sets = {sp.opens[u], sp.opens[v]};
          }
        }
      return r;
    }
    case AxiomKind::T2: {
      for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
          bool ok = false;
          for (size_t k = 0; k < sp.opens.size() && !ok; ++k) {
            if (!sp.in(i, sp.opens[k])) continue;
            if ((sp.marks[j] & sp.disj[k]) != sp.marks[j]) continue;
            ok = true;
            if (r.sets.empty()) {
              // pick the first concrete disjoint partner for the witness
              for (Mask v : sp.opens)
                if (sp.in(j, v) && (v & sp.opens[k]) == 0) {
                  r.witness_kind = "separating-opens";
                  r.points = {i, j};
                  r.sets = {sp.opens[k], v};
                  break;
                }
            }
          }
          if (!ok) {
            r.holds = false;
            r.witness_kind = "point-pair";
            r.points = {i, j};
            r.sets.clear();
            r.detail = "no disjoint opens contain the pair";
            return r;
          }
        }
      return r;
    }
    case AxiomKind::Regular: {
      for (Mask f : sp.closed())
        for (int p = 0; p < np; ++p) {
          if ((sp.marks[p] & f) == sp.marks[p]) continue;  // p lies in f
          if (!sp.separate_point_set(p, f)) {
            r.holds = false;
            r.witness_kind = "point-closed-pair";
            r.points = {p};
            r.sets = {f};
            r.detail = "point and closed set cannot be separated";
            return r;
          }
        }
      return r;
    }
    case AxiomKind::Normal: {
      const std::vector<Mask> closed = sp.closed();
      for (size_t i = 0; i < closed.size(); ++i)
        for (size_t j = i + 1; j < closed.size(); ++j) {
          if ((closed[i] & closed[j]) != 0) continue;
          if (!sp.separate_sets(closed[i], closed[j])) {
            r.holds = false;
            r.witness_kind = "closed-pair";
            r.sets = {closed[i], closed[j]};
            r.detail = "disjoint closed sets cannot be separated";
            return r;
          }
        }
      return r;
    }
    case AxiomKind::T3:
    case AxiomKind::T4: {
      AxiomReport t1 = check_core(sp, AxiomKind::T1);
      if (!t1.holds) {
        t1.axiom = axiom;
        t1.detail = "t1 part failed: " + t1.detail;
        return t1;
      }
      AxiomReport second =
          check_core(sp, axiom == AxiomKind::T3 ? AxiomKind::Regular : AxiomKind::Normal);
      second.axiom = axiom;
      if (!second.holds)
        second.detail = (axiom == AxiomKind::T3 ? "regular" : "normal") +
                        std::string(" part failed: ") + second.detail;
      return second;
    }
  }
  return r;
}

SepSpace crisp_space(const CrispTopology& t) {
  std::vector<Mask> opens;
  opens.reserve(t.size());
  for (PointSet s : t.opens()) opens.push_back(s.bits());
  std::vector<Mask> marks;
  for (int i = 0; i < t.context()->points(); ++i) marks.push_back(Mask(1) << i);
  return SepSpace(std::move(opens), t.context()->universe_mask(), std::move(marks));
}

SepSpace soft_space(const SoftTopology& t) {
  std::vector<Mask> marks;
  for (int i = 0; i < t.context()->points(); ++i)
    marks.push_back(soft_point_mask(*t.context(), i));
  return SepSpace(t.opens(), t.context()->full_mask(), std::move(marks));
}

bool replay_core(const SepSpace& sp, const AxiomReport& r) {
  if (r.holds) return true;
  if (r.witness_kind == "point-pair") {
    const int i = r.points.at(0), j = r.points.at(1);
    switch (r.axiom) {
      case AxiomKind::T0: {
        for (Mask u : sp.opens)
          if (sp.in(i, u) != sp.in(j, u)) return false;
        return true;
      }
      case AxiomKind::T1:
      case AxiomKind::T3:
      case AxiomKind::T4:
        return sp.separating_open(i, j) < 0;
      case AxiomKind::T2: {
        for (size_t k = 0; k < sp.opens.size(); ++k)
          if (sp.in(i, sp.opens[k]) && (sp.marks[j] & sp.disj[k]) == sp.marks[j]) return false;
        return true;
      }
      default: return false;
    }
  }
  if (r.witness_kind == "point-closed-pair") {
    const int p = r.points.at(0);
    const Mask f = r.sets.at(0);
    std::vector<Mask> closed = sp.closed();
    if (!std::binary_search(closed.begin(), closed.end(), f)) return false;
    if ((sp.marks[p] & f) == sp.marks[p]) return false;
    return !sp.separate_point_set(p, f);
  }
  if (r.witness_kind == "closed-pair") {
    const Mask f = r.sets.at(0), d = r.sets.at(1);
    std::vector<Mask> closed = sp.closed();
    if (!std::binary_search(closed.begin(), closed.end(), f)) return false;
    if (!std::binary_search(closed.begin(), closed.end(), d)) return false;
    if ((f & d) != 0) return false;
    return !sp.separate_sets(f, d);
  }
  return false;
}

}  // namespace

AxiomReport check_crisp(const CrispTopology& t, AxiomKind axiom) {
  return check_core(crisp_space(t), axiom);
}

AxiomReport check_soft(const SoftTopology& t, AxiomKind axiom) {
  return check_core(soft_space(t), axiom);
}

bool replay_witness(const SoftTopology& t, const AxiomReport& report) {
  return replay_core(soft_space(t), report);
}

bool replay_witness(const CrispTopology& t, const AxiomReport& report) {
  return replay_core(crisp_space(t), report);
}

std::string render_report(const Context& ctx, const AxiomReport& report, bool soft) {
  std::ostringstream os;
  os << (report.holds ? "holds" : "fails");
  auto point_name = [&ctx](int p) { return ctx.point_label(p); };
  auto set_name = [&ctx, soft](Mask m) {
    if (!soft) return describe_point_set(ctx, PointSet(static_cast<std::uint32_t>(m)));
    return SoftSet(std::make_shared<Context>(ctx), m).describe();
  };
  if (!report.witness_kind.empty()) {
    os << "; witness [" << report.witness_kind << "]";
    if (!report.points.empty()) {
      os << " points:";
      for (int p : report.points) os << " " << point_name(p);
    }
    if (!report.sets.empty()) {
      os << " sets:";
      for (Mask m : report.sets) os << " " << set_name(m);
    }
  }
  if (!report.detail.empty()) os << " (" << report.detail << ")";
  return os.str();
}

}  // namespace softtop
