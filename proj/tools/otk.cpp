// Command-line front end.  Reports are deterministic key=value lines on
// stdout; prose diagnostics go to stderr.  Exit codes: 0 success / property
// holds, 1 property fails or a failure witness was produced, 2 invalid
// input, 3 a budget was exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "otk/otk.hpp"

namespace {

using namespace otk;

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::parse_error: return "parse-error";
    case errc::duplicate_point: return "duplicate-point";
    case errc::duplicate_x: return "duplicate-x";
    case errc::collinear_triple: return "collinear-triple";
    case errc::bad_line_order: return "bad-line-order";
    case errc::invalid_union: return "invalid-union";
    case errc::bad_cut: return "bad-cut";
    case errc::bad_index: return "bad-index";
    case errc::size_mismatch: return "size-mismatch";
    case errc::size_limit: return "size-limit";
    case errc::not_a_bijection: return "not-a-bijection";
    case errc::decode_failure: return "decode-failure";
    case errc::not_a_wheel_set: return "not-a-wheel-set";
    case errc::not_nonconvex_quad: return "not-nonconvex-quad";
    case errc::not_decomposable: return "not-decomposable";
    case errc::precondition_violated: return "precondition-violated";
    case errc::wrong_witness_shape: return "wrong-witness-shape";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::enumeration_budget: return "enumeration-budget";
    case errc::search_budget: return "search-budget";
    case errc::resample_budget: return "resample-budget";
    case errc::duplicate_exhaustion: return "duplicate-exhaustion";
  }
  return "unknown";
}

int exit_code_for(errc c) {
  switch (c) {
    case errc::budget_exceeded:
    case errc::enumeration_budget:
    case errc::search_budget:
    case errc::resample_budget:
    case errc::duplicate_exhaustion:
      return 3;
    case errc::decode_failure:
    case errc::not_decomposable:
      return 1;
    default:
      return 2;
  }
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open point file: " + path);
  return read_point_set(in);
}

PredicateTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open table file: " + path);
  return read_predicate_table(in);
}

// Artifact emission: to --out when given, to stdout after the report lines
// otherwise.
template <typename Fn>
void emit(const std::string& out, Fn&& write) {
  if (out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream os(out);
  if (!os) fail(errc::invalid_argument, "cannot write: " + out);
  write(os);
}

std::string triple_str(const std::array<std::size_t, 3>& t) {
  std::ostringstream os;
  os << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1;
  return os.str();
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_ordertype(const std::string& file, const std::string& out) {
  const PointSet P = load_points(file);
  std::cout << "points=" << P.size() << "\n";
  emit(out, [&](std::ostream& os) { write_order_type(os, OrderTypeTable(P)); });
  return 0;
}

int cmd_signature_eq(const std::string& a, const std::string& b) {
  const bool eq = same_signature(load_points(a), load_points(b));
  std::cout << "equal=" << (eq ? "true" : "false") << "\n";
  return eq ? 0 : 1;
}

int cmd_decompose(const std::string& file) {
  const auto t = decompose(load_points(file));
  if (!t) {
    std::cout << "decomposable=false\n";
    return 1;
  }
  std::cout << "decomposable=true\n";
  std::cout << "tree=" << format_split_tree(*t) << "\n";
  return 0;
}

int cmd_psi_encode(const std::string& file, const std::string& out) {
  const PredicateTable T = psi_encode(load_points(file));
  std::cout << "points=" << T.size() << "\n";
  emit(out, [&](std::ostream& os) { write_predicate_table(os, T); });
  return 0;
}

int cmd_psi_decode(const std::string& file, const std::string& out,
                   std::size_t node_budget) {
  const PredicateTable T = load_table(file);
  DecodeStats stats;
  const OrderTypeTable O = psi_decode(T, &stats, node_budget);
  std::cout << "backtracking=" << (stats.used_backtracking ? "true" : "false")
            << "\n";
  std::cout << "nodes=" << stats.nodes << "\n";
  emit(out, [&](std::ostream& os) { write_order_type(os, O); });
  return 0;
}

int cmd_psi_roundtrip(const std::string& file) {
  DecodeStats stats;
  const bool ok = psi_roundtrip(load_points(file), &stats);
  std::cout << "roundtrip=" << (ok ? "true" : "false") << "\n";
  std::cout << "backtracking=" << (stats.used_backtracking ? "true" : "false")
            << "\n";
  std::cout << "nodes=" << stats.nodes << "\n";
  return ok ? 0 : 1;
}

int cmd_phi_encode(const std::string& file, const std::string& out) {
  const PointSet P = load_points(file);
  std::cout << "center=" << wheel_center(P) + 1 << "\n";
  emit(out,
       [&](std::ostream& os) { write_predicate_table(os, phi_encode(P)); });
  return 0;
}

int cmd_check_consistency(const std::string& pfile, const std::string& tfile) {
  const PointSet P = load_points(pfile);
  const auto v = is_locally_consistent(P, load_table(tfile));
  if (!v) {
    std::cout << "consistent=true\n";
    return 0;
  }
  std::cout << "consistent=false\n";
  std::cout << "tripleA=" << triple_str(v->tripleA) << "\n";
  std::cout << "tripleB=" << triple_str(v->tripleB) << "\n";
  return 1;
}

void emit_built(const PointSet& P, const std::string& out,
                const std::string& recipe) {
  std::cout << "points=" << P.size() << "\n";
  emit(out, [&](std::ostream& os) { write_point_set(os, P, recipe); });
}

int cmd_build_product(const std::string& a, const std::string& b,
                      const BuildBudget& budget, const std::string& out) {
  const PointSet R = product(load_points(a), load_points(b), budget);
  emit_built(R, out, "built-by: build product " + a + " " + b);
  return 0;
}

int cmd_build_stack(const std::string& a, const std::string& b,
                    const BuildBudget& budget, const std::string& out) {
  const StackResult r = stack_splitting(load_points(a), load_points(b), budget);
  std::cout << "cut=" << r.cut << "\n";
  emit_built(r.set, out, "built-by: build stack " + a + " " + b);
  return 0;
}

int cmd_build_amplify(const std::string& a, const std::string& b,
                      std::size_t k, const BuildBudget& budget,
                      const std::string& out) {
  const AmplifierResult r =
      bipartite_amplifier(load_points(a), load_points(b), k, budget);
  std::cout << "cut=" << r.cut << "\n";
  emit_built(r.set, out,
             "built-by: build amplify " + a + " " + b + " --k " +
                 std::to_string(k));
  return 0;
}

int cmd_build_ramsey(const std::vector<std::string>& files,
                     const BuildBudget& budget, const std::string& out) {
  std::vector<PointSet> Qs;
  std::string recipe = "built-by: build ramsey";
  for (const auto& f : files) {
    Qs.push_back(load_points(f));
    recipe += " " + f;
  }
  const PointSet R = ramsey_build(Qs, budget);
  emit_built(R, out, recipe);
  return 0;
}

MatchMode parse_mode(const std::string& mode) {
  if (mode == "signature") return MatchMode::signature;
  if (mode == "ordertype") return MatchMode::ordertype;
  fail(errc::invalid_argument, "mode must be signature or ordertype");
}

int cmd_verify_pair(const std::string& pfile, const std::string& qfile,
                    std::size_t k, const std::string& mode,
                    const VerifyStrategy& strategy, std::size_t cap,
                    const std::string& out) {
  const PairArrowResult r = verify_pair_arrow(
      load_points(pfile), load_points(qfile), k, parse_mode(mode), strategy,
      cap);
  std::cout << "holds=" << (r.holds ? "true" : "false") << "\n";
  std::cout << "colorings=" << r.colorings_checked << "\n";
  if (r.counterexample && !out.empty())
    emit(out,
         [&](std::ostream& os) { write_pair_coloring(os, *r.counterexample); });
  return r.holds ? 0 : 1;
}

int cmd_verify_point(const std::string& pfile,
                     const std::vector<std::string>& qfiles,
                     const std::string& mode, const VerifyStrategy& strategy,
                     std::size_t cap, const std::string& out) {
  std::vector<PointSet> Qs;
  for (const auto& f : qfiles) Qs.push_back(load_points(f));
  const PointArrowResult r = verify_point_arrow(
      load_points(pfile), Qs, parse_mode(mode), strategy, cap);
  std::cout << "holds=" << (r.holds ? "true" : "false") << "\n";
  std::cout << "colorings=" << r.colorings_checked << "\n";
  if (r.counterexample && !out.empty())
    emit(out, [&](std::ostream& os) {
      write_point_coloring(os, *r.counterexample);
    });
  return r.holds ? 0 : 1;
}

int cmd_adversary(const std::string& file, std::size_t p, std::size_t i,
                  const std::string& out) {
  const TupleColoring c = adversary_coloring(load_points(file), p, i);
  std::cout << "tuples=" << c.color.size() << "\n";
  emit(out, [&](std::ostream& os) { write_tuple_coloring(os, c); });
  return 0;
}

int cmd_refute(std::size_t k, bool control, bool regenerate) {
  PointSet R = control ? make_convex(5) : five_point_witness().set;
  if (regenerate) {
    const auto w = find_five_point_witness();
    if (!w) fail(errc::wrong_witness_shape, "witness regeneration failed");
    bool match = true;
    const PointSet& frozen = five_point_witness().set;
    for (std::size_t i = 0; i < 5; ++i)
      if (w->set[i].x != frozen[i].x || w->set[i].y != frozen[i].y)
        match = false;
    std::cout << "regenerated=true\n";
    std::cout << "match=" << (match ? "true" : "false") << "\n";
    if (!control) R = w->set;
  }
  const RefutationReport rep = refute_monochromatic(R, k);
  std::cout << "enumerated=" << rep.enumerated << "\n";
  std::cout << "consistent=" << rep.consistent << "\n";
  return rep.consistent == 0 ? 0 : 1;
}

int cmd_search_predicate(const std::string& file, std::size_t k,
                         bool single_class, std::size_t node_budget,
                         const std::string& out) {
  const auto T = search_predicate(load_points(file), k, single_class,
                                  node_budget);
  std::cout << "found=" << (T ? "true" : "false") << "\n";
  if (!T) return 1;
  emit(out, [&](std::ostream& os) { write_predicate_table(os, *T); });
  return 0;
}

int cmd_search_tournament(const std::string& file, std::size_t node_budget,
                          const std::string& out) {
  const auto T = antisymmetric_search(load_points(file), node_budget);
  std::cout << "found=" << (T ? "true" : "false") << "\n";
  if (!T) return 1;
  emit(out, [&](std::ostream& os) { write_predicate_table(os, *T); });
  return 0;
}

int cmd_lll_threshold(std::size_t n) {
  std::cout << "threshold=" << lll_threshold(n) << "\n";
  return 0;
}

int cmd_lll_sample(std::size_t n, std::size_t k, std::uint64_t seed,
                   std::size_t max_resamples, const std::string& out) {
  if (k == 0) k = lll_threshold(n);
  const SampleResult r = moser_tardos_sample(n, k, seed, max_resamples);
  std::cout << "k=" << k << "\n";
  std::cout << "resamples=" << r.resamples << "\n";
  std::cout << "collisions=" << (has_collision(r.f) ? 1 : 0) << "\n";
  emit(out, [&](std::ostream& os) { write_pair_function(os, r.f); });
  return 0;
}

int cmd_lll_synthesize(const std::vector<std::string>& files, std::size_t k,
                       std::uint64_t seed, std::size_t max_resamples,
                       const std::string& out_prefix) {
  std::vector<PointSet> catalog;
  for (const auto& f : files) catalog.push_back(load_points(f));
  const auto fs = synthesize_predicate(catalog, k, seed, max_resamples);
  std::cout << "classes=" << fs.size() << "\n";
  for (const auto& [idx, f] : fs) {
    if (out_prefix.empty()) {
      std::cout << "# class " << idx + 1 << "\n";
      write_pair_function(std::cout, f);
    } else {
      const std::string path =
          out_prefix + std::to_string(idx + 1) + ".pf";
      emit(path, [&](std::ostream& os) { write_pair_function(os, f); });
      std::cout << "class=" << idx + 1 << " file=" << path << "\n";
    }
  }
  return 0;
}

int cmd_gen_corpus(std::size_t count, std::size_t min_size,
                   std::size_t max_size, const std::string& generator,
                   std::uint64_t seed, const std::string& dir) {
  if (min_size < 1 || max_size < min_size)
    fail(errc::invalid_argument, "gen-corpus: need 1 <= min-size <= max-size");
  std::mt19937_64 sizes(derive_seed(seed, 0));
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n =
        min_size + uniform_below(sizes, max_size - min_size + 1);
    const std::uint64_t s = derive_seed(seed, i + 1);
    PointSet P;
    if (generator == "random-grid")
      P = make_random_grid(n, s);
    else if (generator == "cup")
      P = make_cup(n);
    else if (generator == "cap")
      P = make_cap(n);
    else if (generator == "convex")
      P = make_convex(n);
    else if (generator == "wheel")
      P = make_random_wheel(n, s);
    else
      fail(errc::invalid_argument, "unknown generator: " + generator);

    std::ostringstream name;
    name << dir << "/" << generator << "-" << std::setw(3)
         << std::setfill('0') << i + 1 << ".pts";
    std::ostringstream recipe;
    recipe << "built-by: gen-corpus " << generator << " seed=" << seed
           << " index=" << i + 1;
    emit(name.str(),
         [&](std::ostream& os) { write_point_set(os, P, recipe.str()); });
    std::cout << "file=" << name.str() << " points=" << P.size() << "\n";
  }
  std::cout << "written=" << count << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact order-type toolkit"};
  app.require_subcommand(1);

  int rc = 0;
  std::string file, file2, out, mode = "signature";
  std::vector<std::string> files;
  std::size_t k = 2, n = 0, p = 3, tuple_i = 1;
  std::size_t cap = 1u << 22;
  std::size_t node_budget = 10'000'000;
  std::size_t max_resamples = 200'000;
  std::size_t count = 10, min_size = 3, max_size = 8;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  bool single_class = false, control = false, regenerate = false;
  BuildBudget budget;
  std::string generator = "random-grid", dir = ".";

  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", out, "write the artifact to this file");
  };

  // ordertype
  {
    auto* c = app.add_subcommand("ordertype", "orientation table of a set");
    c->add_option("file", file)->required();
    add_out(c);
    c->callback([&] { rc = cmd_ordertype(file, out); });
  }
  // signature-eq
  {
    auto* c = app.add_subcommand("signature-eq",
                                 "compare two sets' orientation signatures");
    c->add_option("file", file)->required();
    c->add_option("file2", file2)->required();
    c->callback([&] { rc = cmd_signature_eq(file, file2); });
  }
  // decompose
  {
    auto* c = app.add_subcommand("decompose", "recursive splitting tree");
    c->add_option("file", file)->required();
    c->callback([&] { rc = cmd_decompose(file); });
  }
  // psi
  {
    auto* c = app.add_subcommand("psi", "crossing predicate");
    c->require_subcommand(1);
    auto* e = c->add_subcommand("encode", "point set -> crossing table");
    e->add_option("file", file)->required();
    add_out(e);
    e->callback([&] { rc = cmd_psi_encode(file, out); });
    auto* d = c->add_subcommand("decode", "crossing table -> order type");
    d->add_option("file", file)->required();
    d->add_option("--node-budget", node_budget, "decode search node cap");
    add_out(d);
    d->callback([&] { rc = cmd_psi_decode(file, out, node_budget); });
    auto* r = c->add_subcommand("roundtrip", "encode, decode, compare");
    r->add_option("file", file)->required();
    r->callback([&] { rc = cmd_psi_roundtrip(file); });
  }
  // phi
  {
    auto* c = app.add_subcommand("phi", "wheel-set predicate");
    c->require_subcommand(1);
    auto* e = c->add_subcommand("encode", "point set -> center table");
    e->add_option("file", file)->required();
    add_out(e);
    e->callback([&] { rc = cmd_phi_encode(file, out); });
  }
  // check-consistency
  {
    auto* c = app.add_subcommand("check-consistency",
                                 "local consistency of a table on a set");
    c->add_option("points", file)->required();
    c->add_option("table", file2)->required();
    c->callback([&] { rc = cmd_check_consistency(file, file2); });
  }
  // build
  {
    auto* c = app.add_subcommand("build", "point-set constructions");
    c->require_subcommand(1);
    auto add_budget = [&](CLI::App* s) {
      s->add_option("--budget-points", budget.max_points,
                    "cumulative point cap");
      s->add_option("--budget-depth", budget.max_depth, "recursion cap");
    };
    auto* pr = c->add_subcommand("product", "copies of B around points of A");
    pr->add_option("a", file)->required();
    pr->add_option("b", file2)->required();
    add_budget(pr);
    add_out(pr);
    pr->callback([&] { rc = cmd_build_product(file, file2, budget, out); });
    auto* st = c->add_subcommand("stack", "splitting of two sets");
    st->add_option("a", file)->required();
    st->add_option("b", file2)->required();
    add_budget(st);
    add_out(st);
    st->callback([&] { rc = cmd_build_stack(file, file2, budget, out); });
    auto* am = c->add_subcommand("amplify", "bipartite coloring amplifier");
    am->add_option("a", file)->required();
    am->add_option("b", file2)->required();
    am->add_option("--k", k, "number of colors");
    add_budget(am);
    add_out(am);
    am->callback([&] { rc = cmd_build_amplify(file, file2, k, budget, out); });
    auto* ra = c->add_subcommand("ramsey", "recursive arrow construction");
    ra->add_option("targets", files, "target point sets")->required();
    add_budget(ra);
    add_out(ra);
    ra->callback([&] { rc = cmd_build_ramsey(files, budget, out); });
  }
  // verify
  {
    auto* c = app.add_subcommand("verify", "arrow property checks");
    c->require_subcommand(1);
    auto strategy = [&]() -> VerifyStrategy {
      return trials == 0 ? VerifyStrategy::all()
                         : VerifyStrategy::sampled(seed, trials);
    };
    auto add_common = [&](CLI::App* s) {
      s->add_option("--mode", mode, "signature or ordertype");
      s->add_option("--trials", trials, "sample this many colorings");
      s->add_flag("--exhaustive", "enumerate every coloring (default)");
      s->add_option("--seed", seed, "sampling seed");
      s->add_option("--cap", cap, "enumeration size cap");
      add_out(s);
    };
    auto* vp = c->add_subcommand("arrow-pair", "pair-coloring arrow");
    vp->add_option("p", file)->required();
    vp->add_option("q", file2)->required();
    vp->add_option("--k", k, "number of colors");
    add_common(vp);
    vp->callback([&] {
      rc = cmd_verify_pair(file, file2, k, mode, strategy(), cap, out);
    });
    auto* vt = c->add_subcommand("arrow-point", "point-coloring arrow");
    vt->add_option("p", file)->required();
    vt->add_option("targets", files, "one target per color")->required();
    add_common(vt);
    vt->callback([&] {
      rc = cmd_verify_point(file, files, mode, strategy(), cap, out);
    });
  }
  // adversary-color
  {
    auto* c = app.add_subcommand("adversary-color",
                                 "orientation-based tuple coloring");
    c->add_option("file", file)->required();
    c->add_option("--p", p, "tuple size");
    c->add_option("--i", tuple_i, "middle position (1-based window start)");
    add_out(c);
    c->callback([&] { rc = cmd_adversary(file, p, tuple_i, out); });
  }
  // refute-5pt
  {
    auto* c = app.add_subcommand(
        "refute-5pt", "single-class tables on the five-point witness");
    c->add_option("--k", k, "number of values");
    c->add_flag("--control", control, "use a convex 5-gon instead");
    c->add_flag("--regenerate", regenerate,
                "re-run the witness search and compare");
    c->callback([&] { rc = cmd_refute(k, control, regenerate); });
  }
  // search-predicate
  {
    auto* c = app.add_subcommand("search-predicate",
                                 "locally consistent table search");
    c->add_option("file", file)->required();
    c->add_option("--k", k, "codomain size");
    c->add_flag("--single-class", single_class, "monochromatic restriction");
    c->add_option("--node-budget", node_budget, "search node cap");
    add_out(c);
    c->callback([&] {
      rc = cmd_search_predicate(file, k, single_class, node_budget, out);
    });
  }
  // search-tournament
  {
    auto* c = app.add_subcommand("search-tournament",
                                 "antisymmetric consistent table search");
    c->add_option("file", file)->required();
    c->add_option("--node-budget", node_budget, "search node cap");
    add_out(c);
    c->callback(
        [&] { rc = cmd_search_tournament(file, node_budget, out); });
  }
  // lll
  {
    auto* c = app.add_subcommand("lll", "collision-free synthesis");
    c->require_subcommand(1);
    auto* th = c->add_subcommand("threshold", "smallest admissible codomain");
    th->add_option("--n", n, "point count")->required();
    th->callback([&] { rc = cmd_lll_threshold(n); });
    auto* sa = c->add_subcommand("sample", "resample to a collision-free f");
    static std::size_t sample_k = 0;  // 0: use the threshold for n
    sa->add_option("--n", n, "point count")->required();
    sa->add_option("--k", sample_k, "codomain size (default: threshold)");
    sa->add_option("--seed", seed, "sampling seed");
    sa->add_option("--max-resamples", max_resamples, "resampling cap");
    add_out(sa);
    sa->callback(
        [&] { rc = cmd_lll_sample(n, sample_k, seed, max_resamples, out); });
    auto* sy = c->add_subcommand("synthesize", "one function per catalog set");
    sy->add_option("targets", files, "catalog point sets")->required();
    sy->add_option("--k", k, "codomain size")->required();
    sy->add_option("--seed", seed, "sampling seed");
    sy->add_option("--max-resamples", max_resamples, "resampling cap");
    sy->add_option("--out", out, "artifact file prefix");
    sy->callback([&] {
      rc = cmd_lll_synthesize(files, k, seed, max_resamples, out);
    });
  }
  // gen-corpus
  {
    auto* c = app.add_subcommand("gen-corpus", "seeded point-set corpus");
    c->add_option("--count", count, "number of sets");
    c->add_option("--min-size", min_size, "smallest set size");
    c->add_option("--max-size", max_size, "largest set size");
    c->add_option("--generator", generator,
                  "random-grid, cup, cap, wheel or convex");
    c->add_option("--seed", seed, "corpus seed");
    c->add_option("--out-dir", dir, "output directory");
    c->callback([&] {
      rc = cmd_gen_corpus(count, min_size, max_size, generator, seed, dir);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const otk::Error& e) {
    std::cout << "error=" << errc_name(e.code) << "\n";
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return rc;
}
