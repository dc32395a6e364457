#include "critlab/harness.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "critlab/coloring.hpp"
#include "critlab/error.hpp"
#include "critlab/even_factor.hpp"
#include "critlab/lemma_lab.hpp"

namespace critlab {

namespace {

constexpr std::pair<Subcommand, const char*> kSubcommands[] = {
    {Subcommand::color, "color"},
    {Subcommand::chi, "chi"},
    {Subcommand::critical, "critical"},
    {Subcommand::evenfactor, "evenfactor"},
    {Subcommand::barrier, "barrier"},
    {Subcommand::normalize, "normalize"},
    {Subcommand::lemma1, "lemma1"},
    {Subcommand::lemma2, "lemma2"},
    {Subcommand::audit, "audit"},
    {Subcommand::theorem2_xcheck, "theorem2-xcheck"},
};

}  // namespace

const char* to_string(Subcommand s) {
  for (const auto& [cmd, name] : kSubcommands) {
    if (cmd == s) return name;
  }
  return "?";
}

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  for (const auto& [cmd, n] : kSubcommands) {
    if (name == n) return cmd;
  }
  return std::nullopt;
}

const char* to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::ok: return "ok";
    case RecordStatus::falsification: return "falsification";
    case RecordStatus::budget_exhausted: return "budget_exhausted";
    case RecordStatus::inapplicable: return "inapplicable";
    case RecordStatus::error: return "error";
  }
  return "?";
}

Budgets Budgets::scaled(double f) const {
  if (!(f > 0) || !std::isfinite(f)) throw UsageError("budget scale must be positive");
  auto scale = [f](std::uint64_t b) {
    const long double v = std::floor(static_cast<long double>(b) * f);
    if (v >= static_cast<long double>(UINT64_MAX)) return UINT64_MAX;
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(v));
  };
  return {scale(color), scale(factor), scale(barrier)};
}

double budget_scale_from_env() {
  const char* raw = std::getenv("CRITLAB_BUDGET_SCALE");
  if (!raw || !*raw) return 1.0;
  char* end = nullptr;
  const double f = std::strtod(raw, &end);
  if (*end != '\0' || !(f > 0) || !std::isfinite(f)) {
    throw UsageError(std::string("CRITLAB_BUDGET_SCALE must be a positive number, got '") + raw + "'");
  }
  return f;
}

void JobSpec::validate() const {
  if (budgets.color == 0 || budgets.factor == 0 || budgets.barrier == 0) {
    throw UsageError("budgets must be positive");
  }
  if (jobs < 1) throw UsageError("worker count must be at least 1");
  if (filters.n_min > filters.n_max) throw UsageError("n range is empty (min > max)");
  if (filters.delta_min > filters.delta_max) throw UsageError("delta range is empty (min > max)");
}

ParsedStream read_graph6_stream(std::istream& in) {
  ParsedStream out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6(line);
      out.graphs.push_back({number, line, std::move(g)});
    } catch (const Graph6Error& e) {
      out.errors.push_back({number, std::string(e.what()) + " at byte " + std::to_string(e.offset())});
    }
  }
  return out;
}

namespace {

enum class FilterOutcome { pass, reject, undecided };

// Per-graph searches shared between the filters and the subcommand.
struct Context {
  const Graph& g;
  const Budgets& budgets;
  int threads;
  std::optional<ClassVerdict> cls;
  std::optional<CriticalityReport> report;  // may have stopped at the first non-critical edge

  const ClassVerdict& classification() {
    if (!cls) cls = classify(g, budgets.color);
    return *cls;
  }

  // Nullopt when the graph is outside the domain (no edges or disconnected).
  const CriticalityReport* criticality() {
    if (g.size() == 0 || !is_connected(g)) return nullptr;
    if (!report) {
      CriticalityOptions co;
      co.budget = budgets.color;
      co.stop_at_first_noncritical = true;
      report = is_k_critical(g, co);
      cls = ClassVerdict{report->k, report->chi, 0};
    }
    return &*report;
  }
};

FilterOutcome apply_filters(const Filters& f, Context& ctx) {
  const Graph& g = ctx.g;
  if (g.order() < f.n_min || g.order() > f.n_max) return FilterOutcome::reject;
  const int delta = g.max_degree();
  if (delta < f.delta_min || delta > f.delta_max) return FilterOutcome::reject;
  if (f.class2_only) {
    const ClassVerdict& cls = ctx.classification();
    if (!cls.chi) return FilterOutcome::undecided;
    if (!cls.class_two()) return FilterOutcome::reject;
  }
  if (f.critical_only) {
    const CriticalityReport* rep = ctx.criticality();
    if (!rep || rep->k_critical == Verdict::no) return FilterOutcome::reject;
    if (rep->k_critical == Verdict::unknown) return FilterOutcome::undecided;
  }
  return FilterOutcome::pass;
}

cert::Json json_or_null(const std::optional<int>& v) { return v ? cert::Json(*v) : cert::Json(nullptr); }

void mark(GraphRecord& r, RecordStatus s, std::string detail) {
  r.status = s;
  r.detail = std::move(detail);
}

void do_color(Context& ctx, GraphRecord& r) {
  const ChromaticIndex ci = chromatic_index(ctx.g, ctx.budgets.color);
  r.chi = ci.value;
  r.certificate = {{"delta", r.delta}, {"chi", json_or_null(ci.value)}};
  if (!ci.witness) return mark(r, RecordStatus::budget_exhausted, "color search");
  if (!is_proper(*ci.witness) || !ci.witness->is_total()) {
    return mark(r, RecordStatus::error, "witness coloring failed revalidation");
  }
  r.certificate["coloring"] = cert::coloring(*ci.witness);
}

void do_chi(Context& ctx, GraphRecord& r) {
  const ClassVerdict& cls = ctx.classification();
  r.chi = cls.chi;
  r.certificate = {{"chi", json_or_null(cls.chi)}, {"delta", r.delta}};
  if (!cls.chi) mark(r, RecordStatus::budget_exhausted, "color search");
}

void do_critical(Context& ctx, GraphRecord& r) {
  if (ctx.g.size() == 0 || !is_connected(ctx.g)) {
    return mark(r, RecordStatus::inapplicable, "criticality needs a connected graph with an edge");
  }
  CriticalityOptions co;
  co.budget = ctx.budgets.color;
  co.threads = ctx.threads;
  const CriticalityReport rep = is_k_critical(ctx.g, co);
  r.chi = rep.chi;
  r.critical = rep.k_critical;
  r.critical_known = rep.k_critical != Verdict::unknown;
  r.certificate = cert::criticality(rep, true);
  for (const EdgeCriticality& ec : rep.edges) {
    if (ec.witness && (!is_proper(*ec.witness) || !ec.witness->is_total())) {
      return mark(r, RecordStatus::error, "witness coloring failed revalidation");
    }
  }
  if (rep.k_critical == Verdict::unknown) mark(r, RecordStatus::budget_exhausted, "color search");
}

void do_evenfactor(Context& ctx, GraphRecord& r) {
  const EvenFactorResult ef = find_even_factor(ctx.g, ctx.budgets.factor);
  r.certificate = {{"status", to_string(ef.status)},
                   {"even_factor", ef.factor ? cert::edges(*ef.factor) : cert::Json(nullptr)}};
  if (ef.status == SearchStatus::budget_exceeded) return mark(r, RecordStatus::budget_exhausted, "factor search");
  r.even_factor = ef.status == SearchStatus::found;
  if (ef.factor && !is_even_factor(ctx.g, *ef.factor)) {
    mark(r, RecordStatus::error, "even factor failed revalidation");
  }
}

BarrierResult barrier_search(const Context& ctx) {
  return ctx.threads > 1 ? find_barrier_parallel(ctx.g, ctx.budgets.barrier, ctx.threads)
                         : find_barrier(ctx.g, ctx.budgets.barrier);
}

bool barrier_revalidates(const Graph& g, const Barrier& b) {
  const Barrier again = deficiency(g, b.x);
  return again.is_barrier() && again.deficiency == b.deficiency;
}

void do_barrier(Context& ctx, GraphRecord& r) {
  const BarrierResult br = barrier_search(ctx);
  r.certificate = {{"status", to_string(br.status)},
                   {"barrier", br.barrier ? cert::barrier(*br.barrier) : cert::Json(nullptr)}};
  if (br.status == SearchStatus::budget_exceeded) return mark(r, RecordStatus::budget_exhausted, "barrier search");
  if (br.barrier) {
    r.barrier_size = static_cast<int>(br.barrier->x.size());
    r.even_factor = false;
    if (!barrier_revalidates(ctx.g, *br.barrier)) mark(r, RecordStatus::error, "barrier failed revalidation");
  }
}

void do_normalize(Context& ctx, GraphRecord& r) {
  if (!is_connected(ctx.g)) return mark(r, RecordStatus::inapplicable, "normalization needs a connected graph");
  const BarrierResult br = barrier_search(ctx);
  r.certificate = {{"status", to_string(br.status)}, {"normalized", nullptr}};
  if (br.status == SearchStatus::budget_exceeded) return mark(r, RecordStatus::budget_exhausted, "barrier search");
  if (!br.barrier) return;
  const NormalizedBarrier nb = normalize_barrier(ctx.g, br.barrier->x);
  r.even_factor = false;
  r.barrier_size = static_cast<int>(nb.barrier.x.size());
  r.certificate["normalized"] = cert::normalized(nb);
  if (!barrier_revalidates(ctx.g, nb.barrier)) return mark(r, RecordStatus::error, "barrier failed revalidation");
  if (!nb.properties.all()) mark(r, RecordStatus::falsification, "normalized barrier misses a property");
}

void do_lemma1(Context& ctx, GraphRecord& r) {
  if (r.delta < 3) return mark(r, RecordStatus::inapplicable, "maximum degree below 3");
  const ClassVerdict& cls = ctx.classification();
  r.chi = cls.chi;
  if (!cls.chi) return mark(r, RecordStatus::budget_exhausted, "color search");
  if (!cls.class_two()) return mark(r, RecordStatus::inapplicable, "class 1");
  CriticalityReport shell;
  shell.k = cls.delta;
  shell.chi = cls.chi;
  Lemma1SearchOptions lo;
  lo.color_budget = ctx.budgets.color;
  lo.report = ctx.report ? &*ctx.report : &shell;
  const Lemma1Search search = find_lemma1_configs(ctx.g, lo);
  cert::Json configs = cert::Json::array();
  bool falsified = false, exhausted = !search.complete;
  for (const Lemma1Config& cfg : search.configs) {
    const Edge we = Edge::make(cfg.w_prime, cfg.w);
    const ColorSearchResult cr = color_minus_edge(ctx.g, we, cfg.k, ctx.budgets.color);
    if (!cr.coloring) {
      exhausted = true;
      configs.push_back({{"config", cert::lemma1_config(cfg)}, {"trace", nullptr}});
      continue;
    }
    const Lemma1Trace tr = lemma1_trace(ctx.g, cfg, *cr.coloring);
    falsified |= tr.falsified();
    configs.push_back({{"config", cert::lemma1_config(cfg)}, {"trace", cert::lemma1_trace(tr)}});
  }
  r.certificate = {{"size_cap", search.size_cap},
                   {"subsets", search.subsets},
                   {"complete", search.complete},
                   {"vacuous", search.configs.empty()},
                   {"configs", std::move(configs)}};
  if (falsified) return mark(r, RecordStatus::falsification, "a claim check failed");
  if (exhausted) mark(r, RecordStatus::budget_exhausted, "configuration sweep incomplete");
}

void do_lemma2(Context& ctx, GraphRecord& r) {
  if (r.delta <= 3) return mark(r, RecordStatus::inapplicable, "maximum degree at most 3");
  const ClassVerdict& cls = ctx.classification();
  r.chi = cls.chi;
  if (!cls.chi) return mark(r, RecordStatus::budget_exhausted, "color search");
  if (!cls.class_two()) return mark(r, RecordStatus::inapplicable, "class 1");
  CriticalityReport shell;
  shell.k = cls.delta;
  shell.chi = cls.chi;
  Lemma2Options lo;
  lo.budget = ctx.budgets.color;
  lo.report = ctx.report ? &*ctx.report : &shell;
  const Lemma2Result res = lemma2_check(ctx.g, lo);
  r.certificate = cert::lemma2(res);
  if (!res.violations.empty()) return mark(r, RecordStatus::falsification, "critical 3-cut meets a divalent vertex");
  if (!res.complete) mark(r, RecordStatus::budget_exhausted, "criticality unknown for some cut edge");
}

void do_audit(Context& ctx, GraphRecord& r) {
  if (r.delta < 3) return mark(r, RecordStatus::inapplicable, "maximum degree below 3");
  const CriticalityReport* rep = ctx.criticality();
  if (!rep) return mark(r, RecordStatus::inapplicable, "needs a connected graph");
  r.chi = rep->chi;
  r.critical = rep->k_critical;
  r.critical_known = rep->k_critical != Verdict::unknown;
  if (rep->k_critical == Verdict::unknown) return mark(r, RecordStatus::budget_exhausted, "color search");
  if (rep->k_critical == Verdict::no) return mark(r, RecordStatus::inapplicable, "not k-critical");
  AuditOptions ao;
  ao.color_budget = ctx.budgets.color;
  ao.factor_budget = ctx.budgets.factor;
  ao.barrier_budget = ctx.budgets.barrier;
  ao.report = rep;
  const AuditVerdict v = theorem1_audit(ctx.g, ao);
  r.certificate = cert::audit(v);
  if (v.factor_status != SearchStatus::budget_exceeded) r.even_factor = v.factor_status == SearchStatus::found;
  if (v.barrier) r.barrier_size = static_cast<int>(v.barrier->barrier.x.size());
  if (v.even_factor && !is_even_factor(ctx.g, *v.even_factor)) {
    return mark(r, RecordStatus::error, "even factor failed revalidation");
  }
  if (v.falsification) return mark(r, RecordStatus::falsification, "hypothesis met but no even factor");
  if (!v.theorem2_consistent) return mark(r, RecordStatus::falsification, "no even factor and no barrier");
  if (v.barrier && !v.barrier->properties.all()) {
    return mark(r, RecordStatus::falsification, "normalized barrier misses a property");
  }
  if (!v.conclusive()) mark(r, RecordStatus::budget_exhausted, "factor or barrier search");
}

void do_xcheck(Context& ctx, GraphRecord& r) {
  // K1 has no even factor, yet its only proper subset is empty.
  if (r.n == 1) return mark(r, RecordStatus::inapplicable, "single vertex: no proper subset can be a barrier");
  const EvenFactorResult ef = find_even_factor(ctx.g, ctx.budgets.factor);
  const BarrierResult br = barrier_search(ctx);
  r.certificate = {{"factor_status", to_string(ef.status)},
                   {"even_factor", ef.factor ? cert::edges(*ef.factor) : cert::Json(nullptr)},
                   {"barrier_status", to_string(br.status)},
                   {"barrier", br.barrier ? cert::barrier(*br.barrier) : cert::Json(nullptr)}};
  if (ef.factor && !is_even_factor(ctx.g, *ef.factor)) return mark(r, RecordStatus::error, "even factor failed revalidation");
  if (br.barrier && !barrier_revalidates(ctx.g, *br.barrier)) return mark(r, RecordStatus::error, "barrier failed revalidation");
  if (br.barrier) r.barrier_size = static_cast<int>(br.barrier->x.size());
  if (ef.status == SearchStatus::budget_exceeded || br.status == SearchStatus::budget_exceeded) {
    r.certificate["consistent"] = nullptr;
    return mark(r, RecordStatus::budget_exhausted, "factor or barrier search");
  }
  r.even_factor = ef.status == SearchStatus::found;
  const bool consistent = br.barrier.has_value() != r.even_factor.value();
  r.certificate["consistent"] = consistent;
  if (!consistent) mark(r, RecordStatus::falsification, "barrier existence disagrees with even factor search");
}

// Returns false when the graph is filtered out.
bool process(const JobSpec& spec, const InputGraph& in, int threads, GraphRecord& r) {
  const Graph& g = in.graph;
  Context ctx{g, spec.budgets, threads, std::nullopt, std::nullopt};
  r.line = in.line;
  r.graph6 = in.text;
  r.n = g.order();
  r.m = g.size();
  r.delta = g.max_degree();
  r.divalent_count = divalent_count(g);
  r.hypothesis_met = r.divalent_count <= 2 * r.delta - 6;
  r.certificate = cert::Json::object();
  try {
    const FilterOutcome f = apply_filters(spec.filters, ctx);
    if (f == FilterOutcome::reject) return false;
    if (f == FilterOutcome::undecided) {
      mark(r, RecordStatus::budget_exhausted, "filter undecided within budget");
      return true;
    }
    switch (spec.command) {
      case Subcommand::color: do_color(ctx, r); break;
      case Subcommand::chi: do_chi(ctx, r); break;
      case Subcommand::critical: do_critical(ctx, r); break;
      case Subcommand::evenfactor: do_evenfactor(ctx, r); break;
      case Subcommand::barrier: do_barrier(ctx, r); break;
      case Subcommand::normalize: do_normalize(ctx, r); break;
      case Subcommand::lemma1: do_lemma1(ctx, r); break;
      case Subcommand::lemma2: do_lemma2(ctx, r); break;
      case Subcommand::audit: do_audit(ctx, r); break;
      case Subcommand::theorem2_xcheck: do_xcheck(ctx, r); break;
    }
    if (!r.critical_known && ctx.report && ctx.report->k_critical != Verdict::unknown) {
      r.critical = ctx.report->k_critical;
      r.critical_known = true;
    }
    if (!r.chi && ctx.cls) r.chi = ctx.cls->chi;
  } catch (const UsageError& e) {
    mark(r, RecordStatus::inapplicable, e.what());
  } catch (const HypothesisError& e) {
    mark(r, RecordStatus::inapplicable, e.what());
  } catch (const std::exception& e) {
    mark(r, RecordStatus::error, e.what());
  }
  return true;
}

}  // namespace

std::vector<InputGraph> filter_stream(const JobSpec& spec, std::vector<InputGraph> graphs) {
  std::vector<InputGraph> out;
  for (InputGraph& in : graphs) {
    Context ctx{in.graph, spec.budgets, 1, std::nullopt, std::nullopt};
    if (apply_filters(spec.filters, ctx) != FilterOutcome::reject) out.push_back(std::move(in));
  }
  return out;
}

RunReport run(const JobSpec& spec, const ParsedStream& input) {
  spec.validate();
  RunReport rep;
  rep.command = spec.command;
  rep.malformed = input.errors;
  const int count = static_cast<int>(input.graphs.size());
  std::vector<GraphRecord> slots(count);
  std::vector<char> kept(count, 0);
  // A lone graph gets the workers for its own kernels instead.
  const int inner = count == 1 ? spec.jobs : 1;
  if (spec.jobs > 1 && count > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(spec.jobs)
    for (int i = 0; i < count; ++i) kept[i] = process(spec, input.graphs[i], 1, slots[i]);
  } else {
    for (int i = 0; i < count; ++i) kept[i] = process(spec, input.graphs[i], inner, slots[i]);
  }

  RunSummary& s = rep.summary;
  s.read = count + static_cast<int>(input.errors.size());
  s.malformed = static_cast<int>(input.errors.size());
  for (int i = 0; i < count; ++i) {
    if (!kept[i]) {
      ++s.filtered_out;
      continue;
    }
    GraphRecord& r = slots[i];
    ++s.processed;
    if (r.critical_known && r.critical == Verdict::yes) ++s.critical;
    if (r.even_factor) ++(*r.even_factor ? s.with_even_factor : s.without_even_factor);
    switch (r.status) {
      case RecordStatus::ok: break;
      case RecordStatus::falsification: ++s.falsifications; break;
      case RecordStatus::budget_exhausted: ++s.budget_exhausted; break;
      case RecordStatus::inapplicable: ++s.inapplicable; break;
      case RecordStatus::error: ++s.errors; break;
    }
    rep.records.push_back(std::move(r));
  }
  return rep;
}

RunReport run(const JobSpec& spec) {
  spec.validate();
  ParsedStream input;
  if (!spec.graphs.empty()) {
    std::string joined;
    for (const std::string& s : spec.graphs) joined += s + '\n';
    std::istringstream in(joined);
    input = read_graph6_stream(in);
  } else if (spec.input.empty() || spec.input == "-") {
    input = read_graph6_stream(std::cin);
  } else {
    std::ifstream in(spec.input);
    if (!in) throw UsageError("cannot read input file '" + spec.input + "'");
    input = read_graph6_stream(in);
    if (in.bad()) throw UsageError("read error on '" + spec.input + "'");
  }
  return run(spec, input);
}

int RunReport::exit_code() const {
  if (summary.falsifications > 0 || summary.errors > 0 || summary.malformed > 0) return 1;
  if (summary.budget_exhausted > 0) return 2;
  return 0;
}

cert::Json RunReport::to_json() const {
  using cert::Json;
  Json records_json = Json::array(), exhausted = Json::array(), falsified = Json::array();
  for (const GraphRecord& r : records) {
    Json j{{"line", r.line}, {"graph6", r.graph6}, {"n", r.n}, {"m", r.m}, {"delta", r.delta},
           {"status", to_string(r.status)}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["certificate"] = r.certificate;
    records_json.push_back(std::move(j));
    const Json ref{{"line", r.line}, {"graph6", r.graph6}};
    if (r.status == RecordStatus::budget_exhausted) exhausted.push_back(ref);
    if (r.status == RecordStatus::falsification) falsified.push_back(ref);
  }
  Json malformed_json = Json::array();
  for (const InputError& e : malformed) malformed_json.push_back({{"line", e.line}, {"error", e.message}});
  const RunSummary& s = summary;
  Json sum{{"read", s.read},
           {"malformed", s.malformed},
           {"filtered_out", s.filtered_out},
           {"processed", s.processed},
           {"critical", s.critical},
           {"with_even_factor", s.with_even_factor},
           {"without_even_factor", s.without_even_factor},
           {"falsifications", s.falsifications},
           {"budget_exhausted", s.budget_exhausted},
           {"inapplicable", s.inapplicable},
           {"errors", s.errors}};
  return Json{{"subcommand", to_string(command)},
              {"summary", std::move(sum)},
              {"records", std::move(records_json)},
              {"malformed", std::move(malformed_json)},
              {"budget_exhausted", std::move(exhausted)},
              {"falsifications", std::move(falsified)}};
}

std::string RunReport::to_csv() const {
  std::ostringstream out;
  out << "graph6,n,m,delta,chi,critical,divalent_count,hypothesis_met,even_factor,barrier_size,verdict\n";
  for (const GraphRecord& r : records) {
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.delta << ',';
    if (r.chi) out << *r.chi;
    out << ',';
    if (r.critical_known) out << (r.critical == Verdict::yes ? "yes" : "no");
    out << ',' << r.divalent_count << ',' << (r.hypothesis_met ? "true" : "false") << ',';
    if (r.even_factor) out << (*r.even_factor ? "yes" : "no");
    out << ',';
    if (r.barrier_size) out << *r.barrier_size;
    out << ',' << to_string(r.status) << '\n';
  }
  return out.str();
}

namespace {

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) throw UsageError("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void write_outputs(const JobSpec& spec, const RunReport& report) {
  if (!spec.json_out.empty()) write_atomically(spec.json_out, report.to_json().dump(2) + "\n");
  if (!spec.csv_out.empty()) write_atomically(spec.csv_out, report.to_csv());
  if (spec.falsification_dir.empty()) return;
  const std::filesystem::path dir(spec.falsification_dir);
  for (const GraphRecord& r : report.records) {
    if (r.status != RecordStatus::falsification) continue;
    std::filesystem::create_directories(dir);
    const cert::Json bundle{{"subcommand", to_string(report.command)},
                            {"line", r.line},
                            {"graph6", r.graph6},
                            {"detail", r.detail},
                            {"certificate", r.certificate}};
    write_atomically(dir / ("falsification-line" + std::to_string(r.line) + ".json"), bundle.dump(2) + "\n");
  }
}

}  // namespace critlab
