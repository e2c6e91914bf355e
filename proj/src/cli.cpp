#include "softtop/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "softtop/json_io.hpp"
#include "softtop/lab.hpp"

namespace softtop::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct ReportSink {
  bool json = false;
  std::string command;
  std::vector<std::string> inputs;
  Clock::time_point start = Clock::now();

  io::Json verdict;
  io::Json witness;
  long long cases_checked = 0;
  io::Json extra;  // merged into the report when present

  void emit(std::ostream& out) const {
    if (!json) return;
    io::Json r;
    r["command"] = command;
    r["inputs"] = inputs;
    r["verdict"] = verdict;
    r["witness"] = witness;
    r["cases_checked"] = cases_checked;
    r["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (extra.is_object())
      for (const auto& [k, v] : extra.items()) r[k] = v;
    out << r.dump(2) << "\n";
  }
};

io::Json witness_json(const Context& ctx, const AxiomReport& rep, bool soft) {
  if (rep.witness_kind.empty()) return nullptr;
  io::Json w;
  w["kind"] = rep.witness_kind;
  io::Json pts = io::Json::array();
  for (int p : rep.points) pts.push_back(ctx.point_label(p));
  w["points"] = pts;
  io::Json sets = io::Json::array();
  const ContextPtr cp = std::make_shared<Context>(ctx);
  for (Mask m : rep.sets) {
    if (soft)
      sets.push_back(io::soft_set_to_json(SoftSet(cp, m)));
    else
      sets.push_back(io::point_set_to_json(ctx, PointSet(static_cast<std::uint32_t>(m))));
  }
  w["sets"] = sets;
  if (!rep.detail.empty()) w["detail"] = rep.detail;
  return w;
}

io::Json family_witness_json(const Context& ctx, const FamilyCheck& chk, bool soft) {
  if (chk.ok) return nullptr;
  io::Json w;
  w["kind"] = "family-violation";
  w["violation"] = chk.violation;
  io::Json sets = io::Json::array();
  const ContextPtr cp = std::make_shared<Context>(ctx);
  for (Mask m : chk.witness_sets) {
    if (soft)
      sets.push_back(io::soft_set_to_json(SoftSet(cp, m)));
    else
      sets.push_back(io::point_set_to_json(ctx, PointSet(static_cast<std::uint32_t>(m))));
  }
  w["sets"] = sets;
  return w;
}

void write_output(const io::Document& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = io::serialize(doc);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write file: " + out_path);
    f << text;
  }
}

int cmd_validate(const std::string& path, ReportSink& sink, std::ostream& out) {
  const io::Document doc = io::parse_file(path);
  FamilyCheck chk;
  bool soft = true;
  switch (doc.kind) {
    case io::Document::Kind::SoftTopology:
      chk = is_soft_topology(doc.ctx, doc.soft_sets);
      break;
    case io::Document::Kind::CrispTopology:
      chk = is_crisp_topology(doc.ctx, doc.point_sets);
      soft = false;
      break;
    case io::Document::Kind::CrispSystem: {
      soft = false;
      for (int j = 0; j < doc.ctx->params() && chk.ok; ++j) {
        chk = is_crisp_topology(doc.ctx, doc.system[j]);
        if (!chk.ok) chk.violation += " (at parameter " + doc.ctx->param_label(j) + ")";
      }
      break;
    }
    case io::Document::Kind::SoftSetList:
      break;  // membership validity was established by the parse
  }
  sink.verdict = chk.ok ? "valid" : "invalid";
  sink.witness = family_witness_json(*doc.ctx, chk, soft);
  if (!sink.json) {
    out << io::kind_name(doc.kind) << ": " << (chk.ok ? "valid" : "invalid");
    if (!chk.ok) out << " (" << chk.violation << ")";
    out << "\n";
  }
  return chk.ok ? 0 : 1;
}

lab::SweepBounds bounds_from(int max_points, int max_params, std::uint64_t seed, int samples,
                             bool allow_large) {
  lab::SweepBounds b;
  b.max_points = max_points;
  b.max_parameters = max_params;
  b.seed = seed;
  b.samples = samples;
  b.allow_large = allow_large;
  return b;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite soft-topology engine"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "emit a machine-readable report");

  // validate
  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check a document against the topology axioms");
  validate->add_option("file", validate_path)->required();

  // generate
  std::string gen_path, gen_out, gen_param;
  int gen_formula = 0;
  bool gen_closure = false, gen_union = false, gen_allow_large = false;
  auto* generate = app.add_subcommand("generate", "build a soft topology");
  generate->add_option("--formula", gen_formula, "1 = product, 2 = single-set")
      ->check(CLI::IsMember({1, 2}));
  generate->add_flag("--closure", gen_closure, "smallest soft topology containing the sets");
  generate->add_flag("--union-single-set", gen_union,
                     "closure of the union of per-parameter single-set topologies");
  generate->add_option("--parameter", gen_param, "pick one topology out of a crisp system");
  generate->add_flag("--allow-large", gen_allow_large, "override the size guard");
  generate->add_option("-o,--output", gen_out, "write the result document here");
  generate->add_option("file", gen_path)->required();

  // extract
  std::string ex_path, ex_param, ex_out;
  auto* extract = app.add_subcommand("extract", "crisp topologies of a soft topology");
  extract->add_option("--parameter", ex_param, "extract at one parameter only");
  extract->add_option("-o,--output", ex_out);
  extract->add_option("file", ex_path)->required();

  // check
  std::string chk_axiom, chk_flavor = "soft", chk_path;
  auto* check = app.add_subcommand("check", "run a separation-axiom checker");
  check->add_option("--axiom", chk_axiom, "t0|t1|t2|regular|normal|t3|t4, optionally prefixed "
                                          "soft- or crisp-")
      ->required();
  check->add_option("--flavor", chk_flavor)->check(CLI::IsMember({"crisp", "soft"}));
  check->add_option("file", chk_path)->required();

  // compare
  std::string cmp_a, cmp_b;
  auto* cmp = app.add_subcommand("compare", "family-inclusion order of two topologies");
  cmp->add_option("a", cmp_a)->required();
  cmp->add_option("b", cmp_b)->required();

  // sweep flags shared by verify-theorem / search / enumerate
  int sw_points = -1, sw_params = -1, sw_samples = 0;
  std::uint64_t sw_seed = 1;
  bool sw_allow_large = false;

  std::string vt_id;
  auto* verify = app.add_subcommand("verify-theorem", "sweep a claim over enumerable instances");
  verify->add_option("id", vt_id)->required();

  std::string srch_id;
  auto* search = app.add_subcommand("search", "find a converse counterexample");
  search->add_option("id", srch_id)->required();

  int en_points = 0, en_params = 0;
  auto* enumerate = app.add_subcommand("enumerate", "count labeled (soft) topologies");
  enumerate->add_option("--points", en_points)->required();
  enumerate->add_option("--parameters", en_params);

  for (CLI::App* sc : {verify, search}) {
    sc->add_option("--max-points", sw_points);
    sc->add_option("--params", sw_params);
    sc->add_option("--seed", sw_seed);
    sc->add_option("--samples", sw_samples);
    sc->add_flag("--allow-large", sw_allow_large);
  }

  std::string fx_name, fx_write;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "worked instances as documents");
  fixtures_cmd->add_option("--name", fx_name);
  fixtures_cmd->add_option("--write", fx_write, "write every fixture into this directory");

  std::vector<std::string> argv_like = args;
  argv_like.insert(argv_like.begin(), "softtop");
  std::vector<char*> argv;
  for (auto& a : argv_like) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  ReportSink sink;
  sink.json = json;

  try {
    if (*validate) {
      sink.command = "validate";
      sink.inputs = {validate_path};
      const int rc = cmd_validate(validate_path, sink, out);
      sink.emit(out);
      return rc;
    }

    if (*generate) {
      sink.command = "generate";
      sink.inputs = {gen_path};
      const int modes = (gen_formula != 0) + gen_closure + gen_union;
      if (modes != 1)
        throw Error("pick exactly one of --formula, --closure, --union-single-set");
      const io::Document doc = io::parse_file(gen_path);
      SoftTopology result = [&] {
        if (gen_formula == 1) return formula1(io::to_system(doc), gen_allow_large);
        if (gen_formula == 2) {
          if (doc.kind == io::Document::Kind::CrispSystem) {
            if (gen_param.empty())
              throw Error("--formula 2 on a crisp system needs --parameter");
            return formula2(io::to_system(doc).at(gen_param), doc.ctx);
          }
          return formula2(io::to_crisp_topology(doc), doc.ctx);
        }
        if (gen_union) return union_single_set(io::to_system(doc), gen_allow_large);
        if (doc.kind != io::Document::Kind::SoftSetList)
          throw Error("--closure expects a soft-set-list document");
        return generate_soft(doc.ctx, doc.soft_sets, gen_allow_large);
      }();
      sink.verdict = "ok";
      sink.cases_checked = result.size();
      if (sink.json) {
        sink.extra["result"] = io::Json::parse(io::serialize(io::make_document(result)));
        sink.emit(out);
      } else {
        write_output(io::make_document(result), gen_out, out);
      }
      return 0;
    }

    if (*extract) {
      sink.command = "extract";
      sink.inputs = {ex_path};
      const SoftTopology t = io::to_soft_topology(io::parse_file(ex_path));
      const io::Document result = ex_param.empty()
                                      ? io::make_document(extract_system(t))
                                      : io::make_document(extract_crisp(t, ex_param));
      sink.verdict = "ok";
      if (sink.json) {
        sink.extra["result"] = io::Json::parse(io::serialize(result));
        sink.emit(out);
      } else {
        write_output(result, ex_out, out);
      }
      return 0;
    }

    if (*check) {
      sink.command = "check";
      sink.inputs = {chk_path};
      std::string axiom = chk_axiom;
      if (axiom.rfind("soft-", 0) == 0) {
        chk_flavor = "soft";
        axiom = axiom.substr(5);
      } else if (axiom.rfind("crisp-", 0) == 0) {
        chk_flavor = "crisp";
        axiom = axiom.substr(6);
      }
      const AxiomKind kind = axiom_from_string(axiom);
      const io::Document doc = io::parse_file(chk_path);
      AxiomReport rep;
      if (chk_flavor == "soft") {
        rep = check_soft(io::to_soft_topology(doc), kind);
      } else {
        rep = check_crisp(io::to_crisp_topology(doc), kind);
      }
      sink.verdict = rep.holds;
      sink.witness = witness_json(*doc.ctx, rep, chk_flavor == "soft");
      if (!sink.json)
        out << chk_flavor << " " << to_string(kind) << ": "
            << render_report(*doc.ctx, rep, chk_flavor == "soft") << "\n";
      sink.emit(out);
      return rep.holds ? 0 : 1;
    }

    if (*cmp) {
      sink.command = "compare";
      sink.inputs = {cmp_a, cmp_b};
      const io::Document da = io::parse_file(cmp_a);
      const io::Document db = io::parse_file(cmp_b);
      Comparison verdict;
      if (da.kind == io::Document::Kind::CrispTopology)
        verdict = compare(io::to_crisp_topology(da), io::to_crisp_topology(db));
      else
        verdict = compare(io::to_soft_topology(da), io::to_soft_topology(db));
      sink.verdict = to_string(verdict);
      if (!sink.json) out << to_string(verdict) << "\n";
      sink.emit(out);
      return 0;
    }

    if (*verify) {
      sink.command = "verify-theorem";
      sink.inputs = {vt_id};
      const auto outcome = lab::verify_theorem(
          vt_id, bounds_from(sw_points, sw_params, sw_seed, sw_samples, sw_allow_large));
      sink.verdict = outcome.proven ? "proven-at-scale" : "counterexample";
      sink.cases_checked = outcome.cases_checked;
      sink.witness = outcome.counterexample;
      if (!sink.json) {
        out << vt_id << ": " << (outcome.proven ? "proven-at-scale" : "counterexample") << ", "
            << outcome.cases_checked << " cases\n";
        if (!outcome.proven) out << outcome.counterexample.dump(2) << "\n";
      }
      sink.emit(out);
      return outcome.proven ? 0 : 1;
    }

    if (*search) {
      sink.command = "search";
      sink.inputs = {srch_id};
      try {
        const auto outcome = lab::search_converse(
            srch_id, bounds_from(sw_points, sw_params, sw_seed, sw_samples, sw_allow_large));
        sink.verdict = "counterexample";
        sink.cases_checked = outcome.cases_checked;
        sink.witness = outcome.counterexample;
        if (!sink.json) {
          out << srch_id << ": counterexample after " << outcome.cases_checked << " cases\n"
              << outcome.counterexample.dump(2) << "\n";
        }
        sink.emit(out);
        return 0;
      } catch (const NotFound& e) {
        sink.verdict = "not-found";
        if (!sink.json) out << srch_id << ": " << e.what() << "\n";
        sink.emit(out);
        return 1;
      }
    }

    if (*enumerate) {
      sink.command = "enumerate";
      long long count;
      if (en_params > 0)
        count = static_cast<long long>(lab::enumerate_soft_topologies(en_points, en_params).size());
      else
        count = static_cast<long long>(lab::enumerate_topology_masks(en_points).size());
      sink.verdict = "ok";
      sink.cases_checked = count;
      if (!sink.json) out << count << "\n";
      sink.emit(out);
      return 0;
    }

    if (*fixtures_cmd) {
      sink.command = "fixtures";
      const auto& all = lab::fixtures();
      if (!fx_write.empty()) {
        for (const auto& [name, fx] : all) {
          std::ofstream f(fx_write + "/" + name + ".json");
          if (!f) throw Error("cannot write fixture " + name);
          f << io::serialize(fx.document);
        }
        sink.verdict = "ok";
        if (!sink.json) out << "wrote " << all.size() << " fixtures\n";
        sink.emit(out);
        return 0;
      }
      if (fx_name.empty()) {
        sink.verdict = "ok";
        if (sink.json) {
          io::Json names = io::Json::array();
          for (const auto& [name, fx] : all) names.push_back(name);
          sink.extra["fixtures"] = names;
          sink.emit(out);
        } else {
          for (const auto& [name, fx] : all) out << name << "\n";
        }
        return 0;
      }
      auto it = all.find(fx_name);
      if (it == all.end()) throw NotFound("fixture " + fx_name);
      sink.verdict = "ok";
      if (sink.json) {
        sink.extra["fixture"] = {{"name", it->second.name},
                                 {"notes", it->second.notes},
                                 {"document", io::Json::parse(io::serialize(it->second.document))}};
        sink.emit(out);
      } else {
        err << "# " << it->second.notes << "\n";
        out << io::serialize(it->second.document);
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace softtop::cli
