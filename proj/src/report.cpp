#include "bandlab/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "bandlab/generator.hpp"

namespace bandlab {

namespace fs = std::filesystem;

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const RVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const RMat& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(to_json(row));
  return a;
}

Json to_json(const WitnessValue& w) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool> || std::is_same_v<T, long> || std::is_same_v<T, std::string>) {
          return Json(v);
        } else {
          return to_json(v);
        }
      },
      w);
}

Json to_json(const PredicateResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  Json w = Json::object();
  for (const auto& x : r.witnesses) w[x.name] = to_json(x.value);
  j["witnesses"] = w;
  j["justification"] = r.justification;
  return j;
}

namespace {

const char* const kTool = "bandlab";
constexpr int kFormatVersion = 1;

Json header(const std::string& command) {
  Json j;
  j["tool"] = kTool;
  j["format_version"] = kFormatVersion;
  j["command"] = command;
  return j;
}

Json spec_json(const ConeSpec& spec) {
  Json j;
  j["kind"] = spec.kind == ConeSpec::Kind::rays ? "rays" : "inequalities";
  j["n"] = spec.n;
  j["vectors"] = to_json(spec.vectors);
  return j;
}

// ---------------------------------------------------------------------------
// Replaying "no" witnesses through the public operations.

std::optional<bool> recheck_no(const std::string& predicate, const PredicateResult& r, const SubspaceBasis* w,
                               const PolySpace& s) {
  if (!r.no()) return std::nullopt;
  try {
    if (predicate == "is_band" && w) {
      const RVec& b = r.get<RVec>("element");
      return band_generated(*w, s).contains(b) && !w->contains(b);
    }
    if (predicate == "is_solid" && w && r.has("y") && r.has("x")) {
      const RVec& y = r.get<RVec>("y");
      const RVec& x = r.get<RVec>("x");
      return w->contains(y) && !w->contains(x) && dominates(y, x, s);
    }
    if (predicate == "is_directed" && w) {
      const RVec& b = r.get<RVec>("element");
      return w->contains(b) && !SubspaceBasis(s.n, positive_generators(*w, s)).contains(b);
    }
    if (predicate == "is_s_closed" && w) {
      const RVec& z = r.get<RVec>("z");
      SupResult sup = sup_over_set(section(*w, zeros(s.n), z, s), s);
      return s.in_cone(z) && !w->contains(z) && sup.kind == SupResult::Kind::exists && *sup.element == z;
    }
    if (predicate == "is_pervasive") {
      std::size_t j = std::size_t(r.get<long>("coordinate")) - 1;
      auto sup = cover_section_sup(s, zeros(s.m()), unit(s.m(), j));
      return !sup || (*sup)[j] == 0;
    }
  } catch (const std::out_of_range&) {
    return false;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Polyhedral analysis.

struct Context {
  const Instance& inst;
  PolySpace s;
  std::vector<NamedSubspace> subspaces;
  std::map<std::string, RVec> elements;
  Budget budget;
  std::uint64_t seed = 1;

  [[noreturn]] void fail(int line, const std::string& msg) const { throw ParseError(inst.source, line, 1, msg); }

  const SubspaceBasis& subspace(const std::string& name, int line) const {
    for (const auto& ns : subspaces) {
      if (ns.name == name) return ns.basis;
    }
    fail(line, "unknown subspace '" + name + "'");
  }
  const RVec& element(const std::string& name, int line) const {
    auto it = elements.find(name);
    if (it == elements.end()) fail(line, "unknown element '" + name + "'");
    return it->second;
  }
};

void resolve(Context& c) {
  const std::size_t n = c.s.n, m = c.s.m();
  for (const auto& d : c.inst.subspaces) {
    RMat span = d.vectors;
    for (const auto& v : span) {
      if (v.size() != n) c.fail(d.line, "subspace '" + d.name + "': vectors must have " + std::to_string(n) + " entries");
    }
    if (d.cover_band) {
      for (auto j : *d.cover_band) {
        if (j >= m) c.fail(d.line, "subspace '" + d.name + "': cover coordinate out of range 1.." + std::to_string(m));
      }
      c.subspaces.push_back({d.name, restrict_cover_band(*d.cover_band, c.s)});
      continue;
    }
    if (d.rays) {
      for (auto j : *d.rays) {
        if (j >= c.s.cone_v.size()) c.fail(d.line, "subspace '" + d.name + "': ray index out of range");
        span.push_back(c.s.cone_v[j]);
      }
    }
    c.subspaces.push_back({d.name, SubspaceBasis(n, span)});
  }
  for (const auto& d : c.inst.elements) {
    if (d.ray) {
      if (*d.ray >= c.s.cone_v.size()) c.fail(d.line, "element '" + d.name + "': ray index out of range");
      c.elements[d.name] = c.s.cone_v[*d.ray];
    } else {
      if (d.value->size() != n) c.fail(d.line, "element '" + d.name + "' must have " + std::to_string(n) + " entries");
      c.elements[d.name] = *d.value;
    }
  }
}

PredicateResult boolean(bool b, const std::string& why) {
  return PredicateResult(b ? Verdict::yes : Verdict::no).because(why);
}

Json eval_query(const Instance::Query& q, const Context& c) {
  const PolySpace& s = c.s;
  auto want = [&](std::size_t k) {
    if (q.args.size() != k) {
      c.fail(q.line, "predicate '" + q.predicate + "' takes " + std::to_string(k) + " argument(s), got " +
                         std::to_string(q.args.size()));
    }
  };
  auto W = [&](std::size_t i) -> const SubspaceBasis& { return c.subspace(q.args[i], q.line); };
  auto E = [&](std::size_t i) -> const RVec& { return c.element(q.args[i], q.line); };

  Json j;
  j["id"] = q.id;
  j["predicate"] = q.predicate;
  j["args"] = q.args;
  const SubspaceBasis* w = nullptr;
  std::optional<PredicateResult> r;
  const std::string& p = q.predicate;

  static const std::map<std::string, std::function<PredicateResult(const SubspaceBasis&, const Context&)>> on_subspace{
      {"is_band", [](const SubspaceBasis& x, const Context& k) { return is_band(x, k.s); }},
      {"is_solid", [](const SubspaceBasis& x, const Context& k) { return is_solid(x, k.s, k.budget); }},
      {"is_directed", [](const SubspaceBasis& x, const Context& k) { return is_directed(x, k.s); }},
      {"is_solvex", [](const SubspaceBasis& x, const Context& k) { return is_solvex(x, k.s, k.budget); }},
      {"is_s_closed", [](const SubspaceBasis& x, const Context& k) { return is_s_closed(x, k.s); }},
      {"is_o_closed", [](const SubspaceBasis& x, const Context& k) { return is_o_closed(x, k.s); }},
  };
  if (auto it = on_subspace.find(p); it != on_subspace.end()) {
    want(1);
    w = &W(0);
    r = it->second(*w, c);
  } else if (p == "disjoint_complement" || p == "band_generated" || p == "positive_generators") {
    want(1);
    if (p == "positive_generators") {
      j["value"] = to_json(positive_generators(W(0), s));
    } else {
      SubspaceBasis b = p == "disjoint_complement" ? disjoint_complement(W(0), s) : band_generated(W(0), s);
      j["value"] = to_json(b.basis());
    }
    return j;
  } else if (p == "is_lattice_rdp" || p == "is_pervasive" || p == "is_fordable") {
    want(0);
    r = p == "is_lattice_rdp" ? is_lattice_rdp(s) : p == "is_pervasive" ? is_pervasive(s) : is_fordable(s);
  } else if (p == "order_leq") {
    want(2);
    r = boolean(order_leq(E(0), E(1), s), "membership of the difference in the cone");
  } else if (p == "is_disjoint_def") {
    want(2);
    r = boolean(is_disjoint_def(E(0), E(1), s), "equality of the two upper-bound sets");
  } else if (p == "is_disjoint_cover") {
    want(2);
    r = boolean(is_disjoint_cover(E(0), E(1), s), "supports of the cover images");
  } else if (p == "dominates") {
    want(2);
    r = boolean(dominates(E(0), E(1), s), "inclusion of symmetric upper-bound sets");
  } else if (p == "rdp_witness_check") {
    want(3);
    r = rdp_witness_check(s, E(0), E(1), E(2));
  } else if (p == "directed_section_check") {
    want(2);
    r = directed_section_check(W(0), E(1), s);
  } else if (p == "sup_section") {
    want(3);
    SupResult sup = sup_over_set(section(W(0), E(1), E(2), s), s);
    Json v;
    v["kind"] = sup.kind == SupResult::Kind::exists ? "exists" : sup.kind == SupResult::Kind::not_in_x ? "not_in_x" : "empty";
    v["cover_sup"] = to_json(sup.cover_sup);
    if (sup.element) v["element"] = to_json(*sup.element);
    j["value"] = v;
    return j;
  } else if (p == "check_restriction_extension") {
    want(1);
    RestrictionExtensionReport rep = check_restriction_extension(W(0), s);
    bool ok = rep.extension_holds && rep.identity_holds && (!rep.restriction_checked || rep.restriction_holds);
    PredicateResult x(ok ? Verdict::yes : Verdict::no);
    x.with("extension_holds", rep.extension_holds)
        .with("restriction_checked", rep.restriction_checked)
        .with("restriction_holds", rep.restriction_holds)
        .with("identity_holds", rep.identity_holds)
        .with("fordable", std::string(to_string(rep.fordable.verdict)));
    r = x;
  } else if (p == "pervasive_certificates") {
    want(0);
    PervasiveReport rep = pervasive_certificates(s, sample_cover_positive(s.m(), c.seed, 50));
    long fii = 0, fiii = 0, fiv = 0;
    for (const auto& smp : rep.samples) {
      fii += !smp.cond_ii;
      fiii += !smp.cond_iii;
      fiv += !smp.cond_iv;
    }
    PredicateResult x(rep.pervasive.verdict);
    x.with("samples", long(rep.samples.size()))
        .with("failures_ii", fii)
        .with("failures_iii", fiii)
        .with("failures_iv", fiv)
        .with("consistent", rep.consistent);
    r = x;
  } else {
    c.fail(q.line, "unknown predicate '" + p + "'");
  }
  Json body = to_json(*r);
  for (auto& [k, v] : body.items()) j[k] = v;
  if (auto re = recheck_no(p, *r, w, s)) {
    j["recheck"] = *re ? "passed" : "failed";
  } else {
    j["recheck"] = "not_applicable";
  }
  return j;
}

Json diagram_json(const TheoremSuiteReport& rep, const std::vector<NamedSubspace>& subs, const PolySpace& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const TheoremRow& row = rep.rows[i];
    Json j;
    j["name"] = row.name;
    j["basis"] = to_json(subs[i].basis.basis());
    j["disjoint_complement"] = to_json(disjoint_complement(subs[i].basis, s).basis());
    j["bidual"] = to_json(band_generated(subs[i].basis, s).basis());
    j["solid"] = to_string(row.solid.verdict);
    j["directed"] = to_string(row.directed.verdict);
    j["dd_directed"] = to_string(row.dd_directed.verdict);
    j["band"] = to_string(row.band.verdict);
    j["o_closed"] = to_string(row.o_closed.verdict);
    j["s_closed"] = to_string(row.s_closed.verdict);
    j["implications_checked"] = row.checked.size();
    j["violations"] = row.violations;
    j["near_misses"] = row.near_misses;
    j["counterexample_edges"] = row.counterexample_edges;
    rows.push_back(j);
  }
  return rows;
}

Verdict row_flag(const TheoremRow& row, const std::string& flag) {
  if (flag == "solid") return row.solid.verdict;
  if (flag == "directed") return row.directed.verdict;
  if (flag == "dd_directed") return row.dd_directed.verdict;
  if (flag == "band") return row.band.verdict;
  if (flag == "o_closed") return row.o_closed.verdict;
  if (flag == "s_closed") return row.s_closed.verdict;
  throw std::out_of_range(flag);
}

Json flag_json(const FlagRow& f, Verdict expected) {
  Json j;
  j["name"] = f.name;
  j["expected"] = to_string(expected);
  j["computed"] = to_string(f.computed.verdict);
  j["match"] = f.computed.verdict == expected;
  Json w = Json::object();
  for (const auto& x : f.computed.witnesses) w[x.name] = to_json(x.value);
  j["witnesses"] = w;
  j["justification"] = f.computed.justification;
  return j;
}

RunResult example_result(const ExampleReport& ex, const std::vector<Instance::Expectation>* overrides,
                         const std::string& source, const std::string& command) {
  std::map<std::string, Verdict> expected;
  for (const auto& f : ex.flags) expected[f.name] = f.expected;
  if (overrides) {
    for (const auto& e : *overrides) {
      if (!expected.count(e.key)) {
        throw ParseError(source, e.line, e.column, "unknown flag '" + e.key + "' for example " + ex.name);
      }
      expected[e.key] = e.verdict;
    }
  }
  RunResult out;
  Json j = header(command);
  j["example"] = ex.name;
  j["family"] = to_string(ex.space.family);
  Json flags = Json::array();
  Json mismatches = Json::array();
  for (const auto& f : ex.flags) {
    flags.push_back(flag_json(f, expected[f.name]));
    if (f.computed.verdict != expected[f.name]) mismatches.push_back(f.name);
  }
  j["flags"] = flags;
  Json els = Json::object();
  for (const auto& [k, v] : ex.elements) els[k] = to_string(v);
  j["elements"] = els;
  j["notes"] = ex.notes;
  j["mismatches"] = mismatches;
  j["status"] = mismatches.empty() ? "ok" : "mismatch";
  out.exit_code = mismatches.empty() ? 0 : 1;
  out.report = j;
  return out;
}

}  // namespace

RunResult analyze(const Instance& inst, const RunOptions& opts) {
  if (inst.space_kind == Instance::SpaceKind::example) {
    RunResult r = example_result(make_example(inst.example), &inst.expected, inst.source, "analyze");
    return r;
  }
  ConeSpec spec = inst.random ? random_cone(inst.random->seed, inst.random->n, inst.random->m) : inst.cone;
  Context c{inst, build_space(spec), {}, {}, {}, opts.seed};
  if (opts.budget) c.budget.solid_samples = opts.budget;
  resolve(c);
  const PolySpace& s = c.s;

  Json j = header("analyze");
  j["seed"] = opts.seed;
  Json sp;
  sp["spec"] = spec_json(spec);
  if (inst.random) {
    sp["random"] = {{"seed", inst.random->seed}, {"n", inst.random->n}, {"m", inst.random->m}};
  }
  sp["n"] = s.n;
  sp["m"] = s.m();
  sp["dual_rays"] = to_json(s.F);
  sp["extreme_rays"] = to_json(s.cone_v);
  PredicateResult lat = is_lattice_rdp(s), per = is_pervasive(s), ford = is_fordable(s);
  sp["lattice_rdp"] = to_json(lat);
  sp["pervasive"] = to_json(per);
  sp["fordable"] = to_json(ford);
  j["space"] = sp;

  bool failed = false;
  TheoremSuiteReport suite = theorem_suite(s, c.subspaces, sample_elements(s, opts.seed, 6));
  j["diagram"] = diagram_json(suite, c.subspaces, s);
  for (const auto& row : suite.rows) failed = failed || !row.violations.empty();

  Json queries = Json::array();
  std::map<std::string, Verdict> query_verdicts;
  for (const auto& q : inst.queries) {
    Json qj = eval_query(q, c);
    if (qj.contains("verdict")) query_verdicts[q.id] = qj["verdict"] == "yes" ? Verdict::yes : qj["verdict"] == "no" ? Verdict::no : Verdict::unknown;
    if (qj.value("recheck", "") == "failed") failed = true;
    queries.push_back(qj);
  }
  j["queries"] = queries;

  Json expected = Json::array();
  Json mismatches = Json::array();
  for (const auto& e : inst.expected) {
    std::optional<Verdict> got;
    if (auto it = query_verdicts.find(e.key); it != query_verdicts.end()) {
      got = it->second;
    } else if (e.key == "space.lattice_rdp") {
      got = lat.verdict;
    } else if (e.key == "space.pervasive") {
      got = per.verdict;
    } else if (e.key == "space.fordable") {
      got = ford.verdict;
    } else if (auto dot = e.key.rfind('.'); dot != std::string::npos) {
      std::string sub = e.key.substr(0, dot), flag = e.key.substr(dot + 1);
      for (const auto& row : suite.rows) {
        if (row.name != sub) continue;
        try {
          got = row_flag(row, flag);
        } catch (const std::out_of_range&) {
        }
      }
    }
    if (!got) throw ParseError(inst.source, e.line, e.column, "unknown expectation key '" + e.key + "'");
    Json x;
    x["key"] = e.key;
    x["expected"] = to_string(e.verdict);
    x["computed"] = to_string(*got);
    x["match"] = *got == e.verdict;
    if (*got != e.verdict) mismatches.push_back(e.key);
    expected.push_back(x);
  }
  j["expected"] = expected;
  j["mismatches"] = mismatches;
  failed = failed || !mismatches.empty();
  j["status"] = failed ? "mismatch" : "ok";
  return {j, failed ? 1 : 0};
}

RunResult run_example(const std::string& name, const RunOptions& opts) {
  if (!opts.fixtures_dir.empty()) {
    fs::path p = fs::path(opts.fixtures_dir) / (name + ".bli");
    if (fs::exists(p)) {
      RunResult r = analyze(load_instance(p.string()), opts);
      r.report["command"] = "example";
      return r;
    }
  }
  return example_result(make_example(name), nullptr, name, "example");
}

CorpusOutcome run_corpus_seed(std::uint64_t seed, std::size_t n_max) {
  CorpusOutcome o;
  o.seed = seed;
  CorpusCone cc = corpus_cone(seed, n_max);
  o.n = cc.n;
  o.m = cc.m;
  o.spec = cc.spec;
  PolySpace s = build_space(cc.spec);
  o.suite = theorem_suite(s, candidate_subspaces(s, seed), sample_elements(s, seed, 6));
  o.pervasive_matches_rdp = is_pervasive(s).verdict == is_lattice_rdp(s).verdict;
  return o;
}

RunResult run_suite(const RunOptions& opts) {
  const std::size_t budget = opts.budget ? opts.budget : 200;
  Json j = header("suite");
  j["seed"] = opts.seed;
  j["budget"] = budget;
  bool failed = false;
  int exit_code = 0;

  Json fixtures = Json::array();
  std::set<std::string> covered_examples;
  if (!opts.fixtures_dir.empty()) {
    if (!fs::is_directory(opts.fixtures_dir)) throw InputError("fixtures directory '" + opts.fixtures_dir + "' not found");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(opts.fixtures_dir)) {
      if (e.path().extension() == ".bli") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      Json fj;
      fj["fixture"] = f.filename().string();
      try {
        Instance inst = load_instance(f.string());
        if (inst.space_kind == Instance::SpaceKind::example) covered_examples.insert(inst.example);
        RunResult r = analyze(inst, opts);
        fj["status"] = r.report["status"];
        fj["mismatches"] = r.report["mismatches"];
        if (r.exit_code != 0) failed = true;
      } catch (const InputError& e) {
        fj["status"] = "input_error";
        fj["error"] = e.what();
        failed = true;
        exit_code = 2;
      }
      fixtures.push_back(fj);
    }
  }
  j["fixtures"] = fixtures;

  Json examples = Json::array();
  for (const auto& name : example_names()) {
    if (covered_examples.count(name)) continue;
    RunResult r = run_example(name, RunOptions{});
    examples.push_back({{"example", name}, {"status", r.report["status"]}, {"mismatches", r.report["mismatches"]}});
    if (r.exit_code != 0) failed = true;
  }
  j["examples"] = examples;

  std::size_t rows = 0, checked = 0, near = 0, edges = 0;
  Json violations = Json::array();
  Json rdp_mismatch = Json::array();
  for (std::uint64_t seed = opts.seed; seed < opts.seed + budget; ++seed) {
    CorpusOutcome o = run_corpus_seed(seed);
    if (!o.pervasive_matches_rdp) rdp_mismatch.push_back(seed);
    for (const auto& row : o.suite.rows) {
      ++rows;
      checked += row.checked.size();
      near += row.near_misses.size();
      edges += row.counterexample_edges.size();
      for (const auto& v : row.violations) {
        violations.push_back({{"seed", seed}, {"ideal", row.name}, {"implication", v}});
      }
    }
  }
  Json rnd;
  rnd["seeds"] = budget;
  rnd["ideals"] = rows;
  rnd["implications_checked"] = checked;
  rnd["violations"] = violations;
  rnd["pervasive_vs_lattice_mismatches"] = rdp_mismatch;
  rnd["near_misses"] = near;
  rnd["counterexample_edges"] = edges;
  j["randomized"] = rnd;
  failed = failed || !violations.empty() || !rdp_mismatch.empty();
  j["status"] = failed ? "fail" : "ok";
  if (exit_code == 0) exit_code = failed ? 1 : 0;
  return {j, exit_code};
}

RunResult run_falsify(const std::string& config_path, const RunOptions& opts) {
  RawDocument doc = parse_sections(read_text_file(config_path), config_path, "bandlab-falsify");
  std::uint64_t seed = opts.seed;
  std::size_t count = opts.budget ? opts.budget : 40, n_max = 4, max_archive = 50;
  std::optional<fs::path> archive;
  bool have_section = false;
  for (const auto& sec : doc.sections) {
    if (sec.kind != "falsify" || !sec.name.empty()) {
      throw ParseError(config_path, sec.line, sec.column, "unknown section [" + sec.kind + "]");
    }
    if (have_section) throw ParseError(config_path, sec.line, sec.column, "duplicate [falsify] section");
    have_section = true;
    std::set<std::string> seen;
    for (const auto& e : sec.entries) {
      if (!seen.insert(e.key).second) throw ParseError(config_path, e.line, e.key_column, "duplicate key '" + e.key + "'");
      auto integer = [&](long lo, long hi) {
        RVec v = parse_vector(config_path, e);
        if (v.size() != 1 || v[0].get_den() != 1 || v[0] < lo || v[0] > hi) {
          throw ParseError(config_path, e.line, e.value_column,
                           "expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
        return std::size_t(v[0].get_num().get_ui());
      };
      if (e.key == "seed") seed = integer(0, 1L << 40);
      else if (e.key == "count") count = integer(1, 100000);
      else if (e.key == "n_max") n_max = integer(2, 6);
      else if (e.key == "max_archive") max_archive = integer(0, 100000);
      else if (e.key == "archive") archive = fs::path(config_path).parent_path() / e.value;
      else throw ParseError(config_path, e.line, e.key_column, "unknown key '" + e.key + "' in [falsify]");
    }
  }
  if (!have_section) throw ParseError(config_path, 1, 1, "missing [falsify] section");

  Json j = header("falsify");
  j["seed"] = seed;
  j["count"] = count;
  j["n_max"] = n_max;
  Json near = Json::array();
  Json violations = Json::array();
  std::size_t archived = 0;
  if (archive) fs::create_directories(*archive);
  for (std::uint64_t sd = seed; sd < seed + count; ++sd) {
    CorpusOutcome o = run_corpus_seed(sd, n_max);
    PolySpace s = build_space(o.spec);
    std::vector<NamedSubspace> subs = candidate_subspaces(s, sd);
    for (std::size_t i = 0; i < o.suite.rows.size(); ++i) {
      const TheoremRow& row = o.suite.rows[i];
      for (const auto& v : row.violations) violations.push_back({{"seed", sd}, {"ideal", row.name}, {"implication", v}});
      if (row.near_misses.empty()) continue;
      Json nj;
      nj["seed"] = sd;
      nj["n"] = o.n;
      nj["m"] = o.m;
      nj["ideal"] = row.name;
      nj["near_misses"] = row.near_misses;
      if (archive && archived < max_archive) {
        std::string file = "candidate_s" + std::to_string(sd) + "_i" + std::to_string(i) + ".bli";
        std::ofstream out(*archive / file);
        out << "bandlab-instance 1\n";
        out << "# fixture candidate: seed " << sd << ", ideal " << row.name << "\n";
        for (const auto& nm : row.near_misses) out << "# near miss: " << nm << "\n";
        out << "\n" << format_space_section(o.spec) << "\n[subspace I]\n";
        for (const auto& b : subs[i].basis.basis()) {
          out << "vector =";
          for (const auto& x : b) out << " " << to_string(x);
          out << "\n";
        }
        out << "\n[expected]\n";
        for (const char* flag : {"solid", "directed", "dd_directed", "band", "o_closed", "s_closed"}) {
          out << "I." << flag << " = " << to_string(row_flag(row, flag)) << "\n";
        }
        nj["archived_as"] = file;
        ++archived;
      }
      near.push_back(nj);
    }
  }
  j["near_misses"] = near;
  j["archived"] = archived;
  j["violations"] = violations;
  j["status"] = violations.empty() ? "ok" : "violation";
  return {j, violations.empty() ? 0 : 1};
}

namespace {

void render_text(const Json& j, int indent, std::ostringstream& out) {
  std::string pad(std::size_t(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto is_flat = [](const Json& v) {
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured(); });
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    std::string key = j.is_object() ? it.key() + ":" : "-";
    if (!v.is_structured()) {
      out << pad << key << " " << scalar(v) << "\n";
    } else if (v.empty()) {
      out << pad << key << (v.is_array() ? " []" : " {}") << "\n";
    } else if (v.is_array() && is_flat(v)) {
      out << pad << key << " [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
      out << "]\n";
    } else {
      out << pad << key << "\n";
      render_text(v, indent + 2, out);
    }
  }
}

}  // namespace

std::string render(const Json& report, bool as_json) {
  if (as_json) return report.dump(2) + "\n";
  std::ostringstream out;
  render_text(report, 0, out);
  return out.str();
}

}  // namespace bandlab
