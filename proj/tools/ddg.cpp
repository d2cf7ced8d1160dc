// Command line front end: construct + certify the four graph families,
// verify/spectrum/prank/classify arbitrary graph6 inputs, and convert
// between regular Hadamard matrices and their strongly regular graphs.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddgraph/affine_design.hpp"
#include "ddgraph/canonical.hpp"
#include "ddgraph/construction.hpp"
#include "ddgraph/errors.hpp"
#include "ddgraph/exact_rank.hpp"
#include "ddgraph/finite_field.hpp"
#include "ddgraph/graph.hpp"
#include "ddgraph/graph6.hpp"
#include "ddgraph/hadamard.hpp"
#include "ddgraph/latin_square.hpp"
#include "ddgraph/report.hpp"
#include "ddgraph/spectrum.hpp"

namespace {

using nlohmann::json;
using namespace ddgraph;

// 0 success, 2 bad input / bad spec, 3 a mathematical check failed.
int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotRegular:
    case ErrorKind::NotDivisible:
    case ErrorKind::Degenerate:
    case ErrorKind::NoPartition:
    case ErrorKind::NotSrg:
    case ErrorKind::Disconnected:
    case ErrorKind::NotDistanceRegular:
    case ErrorKind::Infeasible:
    case ErrorKind::NotHadamard:
    case ErrorKind::NotGraphical:
    case ErrorKind::NotRegularRows:
    case ErrorKind::WrongParameters:
      return 3;
    default:
      return 2;
  }
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// Paths are taken as written; a miss retries under $DDG_FIXTURE_ROOT.
std::string resolve_input(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (const char* root = std::getenv("DDG_FIXTURE_ROOT")) {
    fs::path alt = fs::path(root) / path;
    if (fs::exists(alt)) return alt.string();
  }
  fail(ErrorKind::BadInput, "cannot open " + path);
}

Graph read_one_graph(const std::string& path) {
  std::vector<Graph> gs = read_graph6_file(resolve_input(path));
  if (gs.size() != 1)
    fail(ErrorKind::BadInput, path + " holds " + std::to_string(gs.size()) +
                                  " graphs, expected exactly one");
  return gs.front();
}

int emit(const json& rep, const std::string& path, int code) {
  if (path.empty())
    std::cout << rep.dump(2) << "\n";
  else
    write_report_file(path, rep);
  return code;
}

json error_json(const Error& e) {
  return json{{"kind", to_string(e.kind())}, {"witness", e.what()}};
}

// ---------------------------------------------------------------- construct

struct DesignDirective {
  int index = -1;
  std::string kind;  // "ag", "file", "hadamard"
  std::string path;
};

struct ConstructOptions {
  int which = 0;
  int q = 0;
  int d = 0;
  std::string latin;
  int h = -1;
  std::string mask;
  std::string bijections_path;
  std::string numbering_path;
  std::string spec_path;
  std::string out;
  std::string report_path;
  std::vector<int> primes;
  bool with_aut = false;

  // accumulated from a spec file
  std::vector<DesignDirective> designs;
  std::vector<std::vector<int>> numbering_rows;              // [index, perm...]
  std::vector<std::vector<int>> bijection_rows;              // [i, j, perm...]
};

std::vector<int> parse_ints(std::istringstream& in, const std::string& what) {
  std::vector<int> out;
  int x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) fail(ErrorKind::BadInput, "bad integer in " + what);
  return out;
}

void parse_spec_file(const std::string& path, ConstructOptions& o) {
  std::ifstream in(resolve_input(path));
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto where = [&] { return path + ":" + std::to_string(lineno); };
    if (key == "construction") {
      if (!(ls >> o.which)) fail(ErrorKind::BadInput, "construction needs a number at " + where());
    } else if (key == "q") {
      if (!(ls >> o.q)) fail(ErrorKind::BadInput, "q needs a number at " + where());
    } else if (key == "d") {
      if (!(ls >> o.d)) fail(ErrorKind::BadInput, "d needs a number at " + where());
    } else if (key == "latin") {
      if (!(ls >> o.latin)) fail(ErrorKind::BadInput, "latin needs a path at " + where());
    } else if (key == "h") {
      if (!(ls >> o.h)) fail(ErrorKind::BadInput, "h needs a number at " + where());
    } else if (key == "mask") {
      if (!(ls >> o.mask)) fail(ErrorKind::BadInput, "mask needs a bit string at " + where());
    } else if (key == "design") {
      DesignDirective d;
      if (!(ls >> d.index >> d.kind))
        fail(ErrorKind::BadInput, "design needs an index and a kind at " + where());
      if (d.kind == "file" || d.kind == "hadamard") {
        if (!(ls >> d.path)) fail(ErrorKind::BadInput, "design kind needs a path at " + where());
      } else if (d.kind != "ag") {
        fail(ErrorKind::BadInput, "design kind must be ag, file or hadamard at " + where());
      }
      o.designs.push_back(std::move(d));
    } else if (key == "numbering") {
      o.numbering_rows.push_back(parse_ints(ls, "numbering at " + where()));
      if (o.numbering_rows.back().size() < 2)
        fail(ErrorKind::BadInput, "numbering needs an index and a permutation at " + where());
    } else if (key == "bijection") {
      o.bijection_rows.push_back(parse_ints(ls, "bijection at " + where()));
      if (o.bijection_rows.back().size() < 3)
        fail(ErrorKind::BadInput, "bijection needs two indices and a permutation at " + where());
    } else {
      fail(ErrorKind::BadInput, "unknown spec key '" + key + "' at " + where());
    }
  }
}

// Whitespace-separated integer rows, one directive per line.
std::vector<std::vector<int>> read_int_rows(const std::string& path) {
  std::ifstream in(resolve_input(path));
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> row = parse_ints(ls, path);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

struct BuiltSpec {
  ConstructionSpec spec;
  json echo;
};

BuiltSpec build_spec(ConstructOptions o) {
  if (!o.spec_path.empty()) parse_spec_file(o.spec_path, o);
  if (o.which < 1 || o.which > 4)
    fail(ErrorKind::BadInput, "construction variant 1..4 required");
  if (o.latin.empty()) fail(ErrorKind::BadInput, "a selector square file is required");
  if (o.which == 2 && o.h < 0) o.h = 0;

  std::string latin_path = resolve_input(o.latin);
  Square sel = read_square_file(latin_path);
  int side = sel.side;

  ConstructionSpec spec;
  spec.which = o.which;
  spec.selector = sel;
  spec.h = o.h;
  for (char c : o.mask) {
    if (c != '0' && c != '1') fail(ErrorKind::BadInput, "mask must be a string of 0s and 1s");
    spec.mask.push_back(c == '1');
  }

  // One design per selector row; unnamed rows default to the geometric design.
  std::vector<std::optional<AffineDesign>> slots(side);
  for (const DesignDirective& dd : o.designs) {
    if (dd.index < 0 || dd.index >= side)
      fail(ErrorKind::BadInput, "design index " + std::to_string(dd.index) + " out of range");
    if (dd.kind == "file")
      slots[dd.index] = read_design_file(resolve_input(dd.path));
    else if (dd.kind == "hadamard")
      slots[dd.index] = hadamard_3_design(read_pm_matrix_file(resolve_input(dd.path)));
  }
  bool need_default = false;
  for (const auto& s : slots)
    if (!s) need_default = true;
  if (need_default) {
    if (o.q < 2 || o.d < 2)
      fail(ErrorKind::BadInput, "--q and --d are required when any design defaults");
    FiniteField F(o.q);
    AffineDesign base = affine_geometry_design(F, o.d);
    for (auto& s : slots)
      if (!s) s = base;
  }
  for (auto& s : slots) spec.designs.push_back(std::move(*s));

  // Class renumberings, indexed by selector row (the pre-deletion row for
  // variant two).
  std::vector<std::vector<int>> numbering_rows = o.numbering_rows;
  if (!o.numbering_path.empty())
    for (auto& r : read_int_rows(o.numbering_path)) numbering_rows.push_back(r);
  if (!numbering_rows.empty()) {
    spec.numbering.assign(side, {});
    for (const auto& row : numbering_rows) {
      int idx = row[0];
      if (idx < 0 || idx >= side)
        fail(ErrorKind::BadInput, "numbering index " + std::to_string(idx) + " out of range");
      spec.numbering[idx].assign(row.begin() + 1, row.end());
    }
  }

  // Block bijections, indexed by the rows of the effective selector (so for
  // variant two the indices refer to the square after the cut).
  std::vector<std::vector<int>> bijection_rows = o.bijection_rows;
  if (!o.bijections_path.empty())
    for (auto& r : read_int_rows(o.bijections_path)) bijection_rows.push_back(r);
  if (!bijection_rows.empty()) {
    int classes = o.which == 2 ? side - 1 : side;
    BijectionFamily fam(classes, spec.designs.front().q());
    for (const auto& row : bijection_rows)
      fam.set(row[0], row[1], std::vector<int>(row.begin() + 2, row.end()));
    spec.bijections = std::move(fam);
  }

  json echo;
  echo["construction"] = o.which;
  echo["q"] = spec.designs.front().q();
  echo["d"] = o.d > 0 ? json(o.d) : json();
  echo["latin"] = json{{"path", latin_path}, {"side", side}};
  if (o.which == 2) {
    echo["h"] = o.h;
    echo["mask"] = o.mask.empty() ? std::string(side - 1, '0') : o.mask;
  }
  echo["designs"] = json::array();
  for (int i = 0; i < side; ++i) {
    std::string kind = "ag";
    std::string dpath;
    for (const DesignDirective& dd : o.designs)
      if (dd.index == i) {
        kind = dd.kind;
        dpath = dd.path;
      }
    json dj{{"kind", kind}};
    if (!dpath.empty()) dj["path"] = dpath;
    echo["designs"].push_back(dj);
  }
  echo["numbering"] = numbering_rows;
  echo["bijections"] = bijection_rows;
  return {std::move(spec), std::move(echo)};
}

int cmd_construct(const ConstructOptions& o) {
  Stopwatch total;
  BuiltSpec built = build_spec(o);

  json rep = base_report("construct");
  rep["spec"] = built.echo;
  json timings;

  Stopwatch t_build;
  ConstructionResult res = construct(built.spec);
  timings["build_ms"] = t_build.ms();

  rep["expected"] = json{{"srg", res.expected.srg}, {"params", params_json(res.params)}};
  {
    json evs = json::array();
    for (const Eigenvalue& e : res.expected.distinct_eigenvalues)
      evs.push_back(eigenvalue_json(e));
    rep["expected"]["distinct_eigenvalues"] = evs;
  }
  if (!o.out.empty()) write_graph6_file(o.out, res.graph);
  rep["graph"] = json{{"vertices", res.graph.n()},
                      {"edges", res.graph.edge_count()},
                      {"file", o.out.empty() ? json() : json(o.out)}};

  // Certification: exhaustively re-verify the emitted graph and require the
  // measured tuple to equal the closed-form one.
  Stopwatch t_verify;
  try {
    if (res.expected.srg) {
      SrgParams sp = verify_srg(res.graph);
      rep["certified"] = json{{"kind", "srg"}, {"params", srg_json(sp)}};
      if (sp != res.expected.srg_params)
        fail(ErrorKind::WrongParameters,
             "certified " + sp.str() + ", expected " + res.expected.srg_params.str());
    } else {
      DdgCertificate cert = verify_ddg(res.graph, res.canonical_classes);
      rep["certified"] = json{{"kind", "ddg"}, {"params", params_json(cert.params)}};
      if (cert.params != res.params)
        fail(ErrorKind::WrongParameters,
             "certified " + cert.params.str() + ", expected " + res.params.str());
    }
    timings["verify_ms"] = t_verify.ms();

    Stopwatch t_spec;
    SpectrumSolution sol = graph_spectrum(res.graph, res.params);
    rep["spectrum"] = solution_json(sol);
    timings["spectrum_ms"] = t_spec.ms();
  } catch (const Error& e) {
    if (exit_code_for(e.kind()) != 3) throw;
    rep["error"] = error_json(e);
    rep["timings"] = timings;
    return emit(rep, o.report_path, 3);
  }

  Stopwatch t_rank;
  std::vector<int> primes = o.primes.empty() ? std::vector<int>{2, 3} : o.primes;
  json ranks;
  for (int p : primes) ranks[std::to_string(p)] = p_rank(res.graph, p);
  rep["p_ranks"] = ranks;
  timings["rank_ms"] = t_rank.ms();

  Stopwatch t_canon;
  if (res.graph.n() <= 128) {
    try {
      rep["canonical_hash"] = certificate_hash(canonical_form(res.graph).certificate);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      rep["canonical_hash"] = nullptr;
      rep["canonical_note"] = "search budget exceeded";
    }
  } else {
    rep["canonical_hash"] = nullptr;
    rep["canonical_note"] = "skipped above 128 vertices";
  }
  timings["canonical_ms"] = t_canon.ms();

  if (o.with_aut) {
    try {
      rep["aut_order"] = automorphism_group_order(res.graph);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      rep["aut_order"] = nullptr;
    }
  }

  timings["total_ms"] = total.ms();
  rep["timings"] = timings;
  return emit(rep, o.report_path, 0);
}

// ------------------------------------------------------------ verify et al.

struct VerifyOptions {
  std::string ddg_path;
  std::string srg_path;
  std::string report_path;
};

int cmd_verify(const VerifyOptions& o) {
  if (o.ddg_path.empty() == o.srg_path.empty())
    fail(ErrorKind::BadInput, "verify needs exactly one of --ddg or --srg");
  json rep = base_report("verify");
  Stopwatch total;
  try {
    if (!o.ddg_path.empty()) {
      Graph g = read_one_graph(o.ddg_path);
      rep["input"] = o.ddg_path;
      rep["mode"] = "ddg";
      DdgCertificate cert = verify_ddg(g);
      rep["params"] = params_json(cert.params);
      rep["is_srg"] = cert.is_srg;
      rep["partition"] = json{{"m", cert.params.m},
                              {"n", cert.params.n},
                              {"assignment", cert.partition.classes}};
      rep["views"] = cert.all.size();
    } else {
      Graph g = read_one_graph(o.srg_path);
      rep["input"] = o.srg_path;
      rep["mode"] = "srg";
      SrgParams sp = verify_srg(g);
      rep["params"] = srg_json(sp);
    }
  } catch (const Error& e) {
    if (exit_code_for(e.kind()) != 3) throw;
    rep["error"] = error_json(e);
    return emit(rep, o.report_path, 3);
  }
  rep["timings"] = json{{"total_ms", total.ms()}};
  return emit(rep, o.report_path, 0);
}

struct SpectrumOptions {
  std::string graph_path;
  std::string tuple;
  std::string report_path;
};

DdgParams parse_tuple(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  DdgParams p;
  if (!(in >> p.v >> p.k >> p.lambda1 >> p.lambda2 >> p.m >> p.n))
    fail(ErrorKind::BadInput, "tuple must be v,k,lambda1,lambda2,m,n");
  long long extra;
  if (in >> extra) fail(ErrorKind::BadInput, "tuple must have exactly six entries");
  return p;
}

int cmd_spectrum(const SpectrumOptions& o) {
  if (o.graph_path.empty() && o.tuple.empty())
    fail(ErrorKind::BadInput, "spectrum needs a graph file or --tuple");
  json rep = base_report("spectrum");
  try {
    if (!o.graph_path.empty()) {
      Graph g = read_one_graph(o.graph_path);
      rep["input"] = o.graph_path;
      DdgParams p = o.tuple.empty() ? verify_ddg(g).params : parse_tuple(o.tuple);
      rep["params"] = params_json(p);
      rep["source"] = o.tuple.empty() ? "discovered" : "supplied";
      rep["solution"] = solution_json(graph_spectrum(g, p));
    } else {
      DdgParams p = parse_tuple(o.tuple);
      rep["params"] = params_json(p);
      rep["source"] = "tuple";
      rep["spectrum"] = spectrum_json(ddg_spectrum(p));
    }
  } catch (const Error& e) {
    if (exit_code_for(e.kind()) != 3) throw;
    rep["error"] = error_json(e);
    return emit(rep, o.report_path, 3);
  }
  return emit(rep, o.report_path, 0);
}

struct PrankOptions {
  std::string graph_path;
  std::vector<int> primes;
  std::string report_path;
};

int cmd_prank(const PrankOptions& o) {
  Graph g = read_one_graph(o.graph_path);
  json rep = base_report("prank");
  rep["input"] = o.graph_path;
  json ranks;
  std::vector<int> primes = o.primes.empty() ? std::vector<int>{2} : o.primes;
  for (int p : primes) ranks[std::to_string(p)] = p_rank(g, p);
  rep["ranks"] = ranks;
  return emit(rep, o.report_path, 0);
}

struct ClassifyOptions {
  std::vector<std::string> files;
  std::vector<int> primes;
  std::string report_path;
};

int cmd_classify(const ClassifyOptions& o) {
  std::vector<Graph> graphs;
  std::vector<std::string> names;
  for (const std::string& f : o.files) {
    std::vector<Graph> gs = read_graph6_file(resolve_input(f));
    for (size_t i = 0; i < gs.size(); ++i) {
      names.push_back(gs.size() == 1 ? f : f + ":" + std::to_string(i + 1));
      graphs.push_back(std::move(gs[i]));
    }
  }
  if (graphs.empty()) fail(ErrorKind::BadInput, "no graphs to classify");

  std::vector<std::vector<int>> buckets = classify(graphs);
  json rep = base_report("classify");
  rep["inputs"] = names;
  rep["count"] = buckets.size();
  std::vector<int> primes = o.primes.empty() ? std::vector<int>{2, 3} : o.primes;
  json classes = json::array();
  for (const std::vector<int>& bucket : buckets) {
    const Graph& repg = graphs[bucket.front()];
    json cj;
    cj["members"] = bucket;
    json files = json::array();
    for (int idx : bucket) files.push_back(names[idx]);
    cj["files"] = files;
    cj["vertices"] = repg.n();
    cj["canonical_hash"] = certificate_hash(canonical_form(repg).certificate);
    if (repg.n() <= 128) {
      try {
        cj["aut_order"] = automorphism_group_order(repg);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooLarge) throw;
        cj["aut_order"] = nullptr;
      }
    } else {
      cj["aut_order"] = nullptr;
    }
    json ranks;
    for (int p : primes) ranks[std::to_string(p)] = p_rank(repg, p);
    cj["p_ranks"] = ranks;
    classes.push_back(cj);
  }
  rep["classes"] = classes;
  return emit(rep, o.report_path, 0);
}

struct HadamardOptions {
  std::string from_srg;
  std::string to_srg;
  std::string sign;
  std::string out;
  std::string report_path;
};

int cmd_hadamard(const HadamardOptions& o) {
  if (o.from_srg.empty() == o.to_srg.empty())
    fail(ErrorKind::BadInput, "hadamard needs exactly one of --from-srg or --to-srg");
  json rep = base_report("hadamard");
  try {
    if (!o.from_srg.empty()) {
      Graph g = read_one_graph(o.from_srg);
      rep["input"] = o.from_srg;
      rep["direction"] = "from-srg";
      HadamardFromSrg r = srg_to_hadamard(g);
      rep["order"] = r.h.n;
      rep["sign"] = r.sign == RowSumSign::Positive ? "positive" : "negative";
      if (!o.out.empty()) {
        std::ofstream out(o.out);
        write_hadamard(out, r.h);
        rep["file"] = o.out;
      }
    } else {
      if (o.sign != "pos" && o.sign != "neg")
        fail(ErrorKind::BadInput, "--to-srg needs --sign pos|neg");
      HadamardMatrix h = read_hadamard_file(resolve_input(o.to_srg));
      rep["input"] = o.to_srg;
      rep["direction"] = "to-srg";
      SrgFromHadamard r = hadamard_to_srg(
          h, o.sign == "pos" ? RowSumSign::Positive : RowSumSign::Negative);
      rep["params"] = srg_json(r.params);
      rep["sign"] = r.sign == RowSumSign::Positive ? "positive" : "negative";
      if (!o.out.empty()) {
        write_graph6_file(o.out, r.graph);
        rep["file"] = o.out;
      }
    }
  } catch (const Error& e) {
    if (exit_code_for(e.kind()) != 3) throw;
    rep["error"] = error_json(e);
    return emit(rep, o.report_path, 3);
  }
  return emit(rep, o.report_path, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisible design graph construction and certification"};
  app.require_subcommand(1);

  ConstructOptions co;
  CLI::App* c = app.add_subcommand("construct", "build one of the four families and certify it");
  c->set_help_flag("--help", "print help");  // frees -h for the --h option below
  c->add_option("--construction", co.which, "variant 1..4");
  c->add_option("--q", co.q, "field order for default geometric designs");
  c->add_option("--d", co.d, "affine dimension for default geometric designs");
  c->add_option("--latin", co.latin, "selector square file");
  c->add_option("--h", co.h, "variant 2: deleted row/column");
  c->add_option("--mask", co.mask, "variant 2: diagonal bit string");
  c->add_option("--bijections", co.bijections_path, "block bijection file: lines 'i j perm...'");
  c->add_option("--numbering", co.numbering_path, "class numbering file: lines 'i perm...'");
  c->add_option("--spec", co.spec_path, "spec file (keys: construction q d latin h mask design numbering bijection)");
  c->add_option("--out", co.out, "write the graph6 encoding here");
  c->add_option("--report", co.report_path, "write the JSON report here (default stdout)");
  c->add_option("--p", co.primes, "adjacency rank primes (default 2 3)");
  c->add_flag("--aut", co.with_aut, "include the automorphism group order");

  VerifyOptions vo;
  CLI::App* v = app.add_subcommand("verify", "certify a graph6 file by exhaustive counting");
  v->add_option("--ddg", vo.ddg_path, "check the divisible design property");
  v->add_option("--srg", vo.srg_path, "check strong regularity");
  v->add_option("--report", vo.report_path);

  SpectrumOptions so;
  CLI::App* s = app.add_subcommand("spectrum", "exact eigenvalues with multiplicities");
  s->add_option("graph", so.graph_path, "graph6 file");
  s->add_option("--tuple", so.tuple, "v,k,lambda1,lambda2,m,n");
  s->add_option("--report", so.report_path);

  PrankOptions po;
  CLI::App* p = app.add_subcommand("prank", "adjacency matrix rank over GF(p)");
  p->add_option("graph", po.graph_path, "graph6 file")->required();
  p->add_option("--p", po.primes, "primes (default 2)");
  p->add_option("--report", po.report_path);

  ClassifyOptions lo;
  CLI::App* l = app.add_subcommand("classify", "bucket graph6 inputs into isomorphism classes");
  l->add_option("files", lo.files, "graph6 files")->required();
  l->add_option("--p", lo.primes, "representative rank primes (default 2 3)");
  l->add_option("--report", lo.report_path);

  HadamardOptions ho;
  CLI::App* h = app.add_subcommand("hadamard", "convert between regular Hadamard matrices and SRGs");
  h->add_option("--from-srg", ho.from_srg, "graph6 file");
  h->add_option("--to-srg", ho.to_srg, "matrix file");
  h->add_option("--sign", ho.sign, "expected row-sum sign: pos|neg")
      ->check(CLI::IsMember({"pos", "neg"}));
  h->add_option("--out", ho.out, "output file (matrix or graph6)");
  h->add_option("--report", ho.report_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c->parsed()) return cmd_construct(co);
    if (v->parsed()) return cmd_verify(vo);
    if (s->parsed()) return cmd_spectrum(so);
    if (p->parsed()) return cmd_prank(po);
    if (l->parsed()) return cmd_classify(lo);
    if (h->parsed()) return cmd_hadamard(ho);
  } catch (const ddgraph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
