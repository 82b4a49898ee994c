#include "srgddg/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "srgddg/assembly.hpp"
#include "srgddg/coclique.hpp"
#include "srgddg/errors.hpp"
#include "srgddg/exact.hpp"
#include "srgddg/galois.hpp"
#include "srgddg/graph6.hpp"
#include "srgddg/io.hpp"
#include "srgddg/iso.hpp"
#include "srgddg/recognize.hpp"
#include "srgddg/theory.hpp"

namespace srgddg::cli {

using io::Json;

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
};

Json new_report(const std::string& command) {
  return Json{{"schema_version", kReportSchemaVersion},
              {"command", command},
              {"inputs", Json::array()},
              {"results", nullptr},
              {"diagnostics", Json::array()},
              {"timing", Json::object()}};
}

void emit(Context& ctx, Json& report) {
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.started).count();
  report["timing"] = Json{{"seconds", secs}};
  ctx.out << report.dump(2) << '\n';
}

io::GraphFile load_graphs(Context& ctx, const std::string& path, bool keep_going, Json& report) {
  io::GraphFile file;
  if (path == "-") {
    file = io::read_graphs(ctx.in, keep_going);
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    file = io::read_graphs(f, keep_going);
  }
  report["inputs"].push_back(Json{{"path", path}, {"fnv1a64", file.input_hash}});
  for (const auto& d : file.diagnostics)
    report["diagnostics"].push_back(Json{{"line", d.line}, {"message", d.message}});
  return file;
}

std::string read_text(Context& ctx, const std::string& path, Json& report) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(ctx.in), {});
  } else {
    text = io::slurp(path);
  }
  report["inputs"].push_back(Json{{"path", path}, {"fnv1a64", io::fnv1a64(text)}});
  return text;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(what + ": " + e.what(), e.byte);
  }
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SRGDDG_BUDGET_NODES")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 100'000'000;
}

Json spectrum_json(const exact::Spectrum& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) entries.push_back(Json::array({e.value, e.multiplicity}));
  return entries;
}

Json record_header(const io::GraphRecord& rec, std::size_t index) {
  return Json{{"index", index}, {"line", rec.line}, {"order", rec.graph.order()}, {"edges", rec.graph.edge_count()}};
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> field_of_order(int q) {
  auto pp = theory::prime_power(q);
  if (!pp) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(pp->first), static_cast<std::uint32_t>(pp->second));
}

// ---------------------------------------------------------------- commands

struct GenArgs {
  std::string name;
  std::vector<int> sizes;
  int d = 2, q = 2;
  bool complement = false;
  bool json = false;
};

int cmd_gen(Context& ctx, const GenArgs& a) {
  Graph g;
  if (a.name == "sp-complement") {
    auto f = field_of_order(a.q);
    if (!f) throw Error(ErrorCode::InvalidArgument, "q = " + std::to_string(a.q) + " is not a prime power");
    g = galois::symplectic_complement(a.d, galois::FiniteField(f->first, f->second));
  } else {
    g = gen::named(a.name, a.sizes);
  }
  if (a.complement) g = g.complement().with_label("complement(" + g.label() + ")");
  if (!a.json) {
    ctx.out << graph6::encode(g) << '\n';
    return 0;
  }
  Json report = new_report("gen");
  report["results"] = Json{{"label", g.label()}, {"order", g.order()}, {"graph6", graph6::encode(g)}};
  emit(ctx, report);
  return 0;
}

int cmd_recognize(Context& ctx, const std::string& path, bool keep_going) {
  Json report = new_report("recognize");
  auto file = load_graphs(ctx, path, keep_going, report);
  Json results = Json::array();
  for (std::size_t i = 0; i < file.graphs.size(); ++i) {
    const Graph& g = file.graphs[i].graph;
    Json r = record_header(file.graphs[i], i);
    auto sp = srg_params(g);
    if (sp) {
      r["srg"] = io::srg_to_json(sp.value());
    } else {
      r["srg"] = nullptr;
      r["not_srg"] = Json{{"reason", to_string(sp.error().reason)}, {"message", sp.error().message}};
    }
    auto dz = deza_params(g);
    if (dz) {
      const auto& d = dz.value();
      r["deza"] = Json{{"v", d.v}, {"k", d.k}, {"b", d.b}, {"a", d.a}};
      auto ddg = ddg_recognize(g);
      Json ws = Json::array();
      if (ddg)
        for (const auto& w : ddg.value())
          ws.push_back(Json{{"params", io::ddg_to_json(w.params)}, {"partition", io::partition_to_json(w.partition)}});
      r["ddg"] = ws;
    } else {
      r["deza"] = nullptr;
      r["ddg"] = Json::array();
    }
    results.push_back(std::move(r));
  }
  report["results"] = std::move(results);
  emit(ctx, report);
  return 0;
}

int cmd_spectrum(Context& ctx, const std::string& path, bool keep_going) {
  Json report = new_report("spectrum");
  auto file = load_graphs(ctx, path, keep_going, report);
  Json results = Json::array();
  for (std::size_t i = 0; i < file.graphs.size(); ++i) {
    Json r = record_header(file.graphs[i], i);
    auto spec = exact::integral_spectrum(exact::IntMatrix::adjacency(file.graphs[i].graph));
    if (spec) {
      r["integral"] = true;
      r["spectrum"] = spectrum_json(spec.value());
      r["text"] = spec.value().to_string();
    } else {
      r["integral"] = false;
      r["integral_part"] = spectrum_json(spec.error().integral_part);
      r["unsplit_factor"] = spec.error().unsplit_factor.to_string();
    }
    results.push_back(std::move(r));
  }
  report["results"] = std::move(results);
  emit(ctx, report);
  return 0;
}

int cmd_coclique(Context& ctx, const std::string& path, bool keep_going, const std::string& mode,
                 std::optional<std::int64_t> target, std::uint64_t budget) {
  Json report = new_report("coclique");
  auto file = load_graphs(ctx, path, keep_going, report);
  Json results = Json::array();
  for (std::size_t i = 0; i < file.graphs.size(); ++i) {
    const Graph& g = file.graphs[i].graph;
    Json r = record_header(file.graphs[i], i);
    CocliqueQuery q;
    q.node_budget = budget;
    if (mode == "maximum") {
      auto mis = max_independent_set(g, q);
      r["mode"] = mode;
      r["size"] = mis.set.count();
      r["sets"] = Json::array({mis.set.members()});
      r["nodes"] = mis.nodes;
      r["budget_exceeded"] = mis.budget_exceeded;
    } else {
      q.mode = mode == "first" ? CocliqueMode::First : CocliqueMode::All;
      std::int64_t size = 0;
      if (target) {
        size = *target;
      } else {
        auto sp = srg_params(g);
        if (!sp || !sp.value().c.is_integer())
          throw Error(ErrorCode::NoHoffmanBound,
                      "graph " + std::to_string(i) + " has no integral Hoffman bound; pass --target");
        size = sp.value().c.num;
      }
      auto res = cocliques_of_size(g, size, q);
      Json sets = Json::array();
      for (const auto& s : res.sets) sets.push_back(s.members());
      r["mode"] = mode;
      r["target"] = size;
      r["count"] = res.sets.size();
      r["sets"] = std::move(sets);
      r["nodes"] = res.nodes;
      r["budget_exceeded"] = res.budget_exceeded;
    }
    results.push_back(std::move(r));
  }
  report["results"] = std::move(results);
  emit(ctx, report);
  return 0;
}

Json decompose_json(const Graph& g, const DecomposeResult& res) {
  Json decs = Json::array();
  for (const auto& d : res.decompositions) {
    Json jd = io::decomposition_to_json(d);
    auto bad = verify_coclique_structure(g, d);
    jd["structure_check"] = bad ? bad->what : "ok";
    decs.push_back(std::move(jd));
  }
  Json outside = Json::array();
  for (const auto& o : res.outside_pattern)
    outside.push_back(Json{{"coclique", o.coclique.members()}, {"ddg", io::ddg_to_json(o.params)}});
  return Json{{"cocliques_examined", res.cocliques_examined},
              {"budget_exceeded", res.budget_exceeded},
              {"decompositions", std::move(decs)},
              {"outside_pattern", std::move(outside)},
              {"notes", res.diagnostics}};
}

int cmd_decompose(Context& ctx, const std::string& path, bool keep_going, bool all, unsigned threads,
                  std::uint64_t budget) {
  Json report = new_report("decompose");
  auto file = load_graphs(ctx, path, keep_going, report);
  Json results = Json::array();
  for (std::size_t i = 0; i < file.graphs.size(); ++i) {
    const Graph& g = file.graphs[i].graph;
    Json r = record_header(file.graphs[i], i);
    auto sp = srg_params(g);
    if (!sp) throw Error(ErrorCode::InvalidArgument, "graph " + std::to_string(i) + " is not strongly regular");
    r["srg"] = io::srg_to_json(sp.value());
    DecomposeOptions opts;
    opts.first_only = !all;
    opts.threads = threads;
    opts.node_budget = budget;
    r.update(decompose_json(g, decompose(g, opts)));
    results.push_back(std::move(r));
  }
  report["results"] = std::move(results);
  emit(ctx, report);
  return 0;
}

std::vector<int> parse_phi(const std::string& text) {
  std::vector<int> phi;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      phi.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::PhiNotBijective, "phi entry '" + item + "' is not an integer");
    }
  }
  return phi;
}

int cmd_construct(Context& ctx, const std::string& ddg_path, const std::string& part_path,
                  const std::string& design_path, const std::string& phi_text, bool json) {
  Json report = new_report("construct");
  auto file = load_graphs(ctx, ddg_path, false, report);
  if (file.graphs.size() != 1) throw Error(ErrorCode::InvalidArgument, "--ddg must hold exactly one graph");
  const Graph& delta = file.graphs[0].graph;
  auto partition = io::partition_from_json(parse_json(read_text(ctx, part_path, report), "partition"), delta.order());
  auto design = io::design_from_json(parse_json(read_text(ctx, design_path, report), "design"));
  std::vector<int> phi;
  if (phi_text.empty()) {
    for (std::size_t i = 0; i < partition.class_count(); ++i) phi.push_back(static_cast<int>(i));
  } else {
    phi = parse_phi(phi_text);
  }
  Graph gamma = construct_gamma(delta, partition, design, phi);
  if (!json) {
    ctx.out << graph6::encode(gamma) << '\n';
    return 0;
  }
  report["results"] = Json{{"srg", io::srg_to_json(srg_params(gamma).value())},
                           {"phi", phi},
                           {"graph6", graph6::encode(gamma)}};
  emit(ctx, report);
  return 0;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--s-range", "expected a..b");
  try {
    std::int64_t a = std::stoll(text.substr(0, dots)), b = std::stoll(text.substr(dots + 2));
    return {std::min(a, b), std::max(a, b)};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--s-range", "expected integers a..b");
  }
}

int cmd_feasible(Context& ctx, std::int64_t s_min, std::int64_t s_max, std::int64_t n_max, bool json) {
  auto rows = theory::enumerate_feasible(s_min, s_max, n_max);
  if (!json) {
    ctx.out << "s\tn\tm\tSRG\tDDG\thandshake\tprime-power\n";
    for (const auto& row : rows) {
      const auto& f = row.family;
      ctx.out << f.s << '\t' << f.n << '\t' << f.m << "\t(" << f.srg.v << ',' << f.srg.k << ',' << f.srg.lambda << ','
              << f.srg.mu << ")\t" << f.ddg.to_string() << '\t' << (row.handshake_ok ? "ok" : "eliminated") << '\t';
      if (row.prime_power)
        ctx.out << "q=" << row.prime_power->q << ",d=" << row.prime_power->d;
      else
        ctx.out << '-';
      ctx.out << '\n';
    }
    return 0;
  }
  Json report = new_report("feasible");
  Json out = Json::array();
  for (const auto& row : rows) {
    const auto& f = row.family;
    Json r{{"s", f.s}, {"n", f.n}, {"m", f.m}, {"srg", io::srg_to_json(f.srg)}, {"ddg", io::ddg_to_json(f.ddg)},
           {"handshake_ok", row.handshake_ok}};
    if (row.prime_power)
      r["prime_power"] = Json{{"q", row.prime_power->q}, {"d", row.prime_power->d}};
    else
      r["prime_power"] = nullptr;
    if (!row.prime_power_note.empty()) r["note"] = row.prime_power_note;
    out.push_back(std::move(r));
  }
  report["results"] = Json{{"s_min", s_min}, {"s_max", s_max}, {"n_max", n_max}, {"rows", std::move(out)}};
  emit(ctx, report);
  return 0;
}

int cmd_iso(Context& ctx, const std::string& a, const std::string& b) {
  Json report = new_report("iso");
  auto fa = load_graphs(ctx, a, false, report);
  auto fb = load_graphs(ctx, b, false, report);
  if (fa.graphs.empty() || fb.graphs.empty()) throw Error(ErrorCode::InvalidArgument, "iso needs one graph per file");
  const auto ca = canonical_form(fa.graphs[0].graph);
  const auto cb = canonical_form(fb.graphs[0].graph);
  report["results"] = Json{{"isomorphic", ca.certificate == cb.certificate},
                           {"certificates", Json::array({ca.certificate, cb.certificate})}};
  emit(ctx, report);
  return 0;
}

int cmd_canon(Context& ctx, const std::string& path, bool keep_going, bool json) {
  Json report = new_report("canon");
  auto file = load_graphs(ctx, path, keep_going, report);
  Json results = Json::array();
  for (std::size_t i = 0; i < file.graphs.size(); ++i) {
    const auto cf = canonical_form(file.graphs[i].graph);
    if (!json) {
      ctx.out << cf.certificate << '\n';
      continue;
    }
    Json r = record_header(file.graphs[i], i);
    r["certificate"] = cf.certificate;
    r["labeling"] = cf.labeling;
    results.push_back(std::move(r));
  }
  if (!json) return 0;
  report["results"] = std::move(results);
  emit(ctx, report);
  return 0;
}

struct CensusItem {
  Json result;
  std::vector<std::string> certificates;
  bool decomposable = false;
};

CensusItem census_one(const io::GraphRecord& rec, std::size_t index, std::uint64_t budget) {
  CensusItem item;
  item.result = record_header(rec, index);
  try {
    DecomposeOptions opts;
    opts.node_budget = budget;
    auto res = decompose(rec.graph, opts);
    std::set<std::string> certs;
    for (const auto& d : res.decompositions) certs.insert(canonical_form(d.delta).certificate);
    item.decomposable = !res.decompositions.empty();
    item.certificates.assign(certs.begin(), certs.end());
    item.result["decompositions"] = res.decompositions.size();
    item.result["distinct_ddgs"] = certs.size();
    item.result["budget_exceeded"] = res.budget_exceeded;
  } catch (const Error& e) {
    item.result["error"] = Json{{"code", to_string(e.code())}, {"message", e.what()}};
  }
  return item;
}

int cmd_census(Context& ctx, const std::string& path, bool keep_going, unsigned threads, std::uint64_t budget) {
  Json report = new_report("census");
  std::ifstream file;
  std::istream* src = &ctx.in;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    src = &file;
  }
  io::GraphReader reader(*src, keep_going);
  threads = std::max(1U, threads);

  Json per_graph = Json::array();
  std::set<std::string> all_certs;
  std::size_t graphs = 0, decomposable = 0;
  // Batches of `threads` graphs keep memory bounded and output in input order.
  for (bool more = true; more;) {
    std::vector<io::GraphRecord> batch;
    while (batch.size() < threads) {
      auto rec = reader.next();
      if (!rec) {
        more = false;
        break;
      }
      batch.push_back(std::move(*rec));
    }
    std::vector<CensusItem> items(batch.size());
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < batch.size(); ++i)
      pool.emplace_back([&, i] { items[i] = census_one(batch[i], graphs + i, budget); });
    for (auto& t : pool) t.join();
    for (auto& item : items) {
      if (item.decomposable) ++decomposable;
      all_certs.insert(item.certificates.begin(), item.certificates.end());
      per_graph.push_back(std::move(item.result));
    }
    graphs += batch.size();
  }
  report["inputs"].push_back(Json{{"path", path}, {"fnv1a64", reader.input_hash()}});
  for (const auto& d : reader.diagnostics())
    report["diagnostics"].push_back(Json{{"line", d.line}, {"message", d.message}});
  report["results"] = Json{{"graphs", graphs},
                           {"decomposable", decomposable},
                           {"distinct_ddg_certificates", all_certs.size()},
                           {"per_graph", std::move(per_graph)}};
  emit(ctx, report);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out};
  CLI::App app{"Strongly regular graphs, Hoffman cocliques and divisible design graphs", "srgddg"};
  app.require_subcommand(1);

  std::uint64_t budget = default_budget();
  bool keep_going = false;
  bool json = false;
  unsigned threads = 1;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", budget, "Search node budget (env SRGDDG_BUDGET_NODES)");
    sub->add_flag("--keep-going", keep_going, "Skip unparsable lines and report them");
  };

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a graph as graph6");
  gen->add_option("name", gen_args.name, "sp-complement, petersen, triangular, grid, complete, edgeless, cycle, path, prism")
      ->required();
  gen->add_option("sizes", gen_args.sizes, "Size arguments of the generator");
  gen->add_option("--d", gen_args.d, "Symplectic dimension parameter");
  gen->add_option("--q", gen_args.q, "Field order");
  gen->add_flag("--complement", gen_args.complement);
  gen->add_flag("--json", gen_args.json);

  std::string file = "-";
  auto* recognize = app.add_subcommand("recognize", "SRG, Deza and DDG parameters");
  recognize->add_option("file", file);
  add_common(recognize);

  auto* spectrum = app.add_subcommand("spectrum", "Exact integral spectrum");
  spectrum->add_option("file", file);
  add_common(spectrum);

  std::string mode = "all";
  std::optional<std::int64_t> target;
  auto* coclique = app.add_subcommand("coclique", "Cocliques of the Hoffman size or a given size");
  coclique->add_option("file", file);
  coclique->add_option("--mode", mode)->check(CLI::IsMember({"first", "all", "maximum"}));
  coclique->add_option("--target", target);
  add_common(coclique);

  bool all = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "Split an SRG into a Hoffman coclique and a DDG");
  decompose_cmd->add_option("file", file);
  decompose_cmd->add_flag("--all", all, "Report every decomposition, not just the first");
  decompose_cmd->add_option("--threads", threads);
  add_common(decompose_cmd);

  std::string ddg_path, part_path, design_path, phi_text;
  auto* construct = app.add_subcommand("construct", "Glue a design onto a DDG");
  construct->add_option("--ddg", ddg_path)->required();
  construct->add_option("--partition", part_path)->required();
  construct->add_option("--design", design_path)->required();
  construct->add_option("--phi", phi_text, "Comma-separated block index per class (default identity)");
  construct->add_flag("--json", json);

  std::optional<std::int64_t> s_single;
  std::string s_range;
  std::int64_t n_max = 100;
  auto* feasible = app.add_subcommand("feasible", "Enumerate admissible (n, s)");
  auto* s_opt = feasible->add_option("--s", s_single);
  auto* r_opt = feasible->add_option("--s-range", s_range, "a..b");
  s_opt->excludes(r_opt);
  feasible->add_option("--n-max", n_max);
  feasible->add_flag("--json", json);

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  auto* canon = app.add_subcommand("canon", "Canonical certificates");
  canon->add_option("file", file);
  canon->add_flag("--json", json);
  add_common(canon);

  auto* census = app.add_subcommand("census", "Decompose every graph of a catalog");
  census->add_option("file", file);
  census->add_option("--threads", threads);
  add_common(census);

  std::vector<std::string> argv_store{"srgddg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (gen->parsed()) return cmd_gen(ctx, gen_args);
    if (recognize->parsed()) return cmd_recognize(ctx, file, keep_going);
    if (spectrum->parsed()) return cmd_spectrum(ctx, file, keep_going);
    if (coclique->parsed()) return cmd_coclique(ctx, file, keep_going, mode, target, budget);
    if (decompose_cmd->parsed()) return cmd_decompose(ctx, file, keep_going, all, threads, budget);
    if (construct->parsed()) return cmd_construct(ctx, ddg_path, part_path, design_path, phi_text, json);
    if (feasible->parsed()) {
      std::int64_t lo = -2, hi = -2;
      if (s_single) {
        lo = hi = *s_single;
      } else if (!s_range.empty()) {
        std::tie(lo, hi) = parse_range(s_range);
      } else {
        err << "feasible: pass --s or --s-range\n";
        return 2;
      }
      return cmd_feasible(ctx, lo, hi, n_max, json);
    }
    if (iso->parsed()) return cmd_iso(ctx, iso_a, iso_b);
    if (canon->parsed()) return cmd_canon(ctx, file, keep_going, json);
    if (census->parsed()) return cmd_census(ctx, file, keep_going, threads, budget);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    Json report = new_report(command);
    report["error"] = Json{{"code", to_string(e.code())}, {"message", e.what()}};
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) report["error"]["line"] = pe->line();
    emit(ctx, report);
    return 1;
  } catch (const Json::exception& e) {
    Json report = new_report(command);
    report["error"] = Json{{"code", "ParseError"}, {"message", e.what()}};
    emit(ctx, report);
    return 1;
  }
  return 2;
}

}  // namespace srgddg::cli
