// Command-line front end: construct, dualize, verify, decompose, aut, iso,
// census, roundtrip, audit, cg.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ucsiac/json_io.hpp"
#include "ucsiac/ucsiac.hpp"

namespace {

using namespace ucs;
using io::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  unsigned jobs = 1;
  std::uint64_t budget = 0;  // 0: built-in per-routine caps
  std::string output = "-";

  Limits limits() const {
    Limits l = budget ? Limits::uniform(budget, jobs) : Limits{};
    l.jobs = jobs;
    return l;
  }
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Globals& g, const std::string& text) {
  if (g.output == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + g.output);
  out << text;
}

ACAlgebra read_algebra(const std::string& path) { return io::algebra_from_json(io::parse(slurp(path))); }

/// Group input is JSON when it starts with '{', pc-presentation text otherwise.
PcGroup read_group(const std::string& path) {
  const std::string text = slurp(path);
  const auto b = text.find_first_not_of(" \t\r\n");
  if (b != std::string::npos && text[b] == '{') return io::group_from_json(io::parse(text));
  return io::group_from_pcp(text);
}

Field field_arg(std::uint64_t q) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "--q (or --p) is required");
  return Field::of_order(q);
}

std::string b(bool x) { return x ? "true" : "false"; }

/// Collects named checks; a false one is reported as violated.
struct Checks {
  std::vector<std::pair<std::string, bool>> items;
  void add(const std::string& name, bool ok) { items.emplace_back(name, ok); }
  int report() const {
    int rc = kOk;
    for (const auto& [name, ok] : items)
      if (!ok) {
        std::cerr << "violated: " << name << "\n";
        rc = kFailed;
      }
    return rc;
  }
};

// ---- construct

struct ConstructArgs {
  std::string kind;
  std::uint64_t q = 0;
  std::size_t dim = 2;
  std::uint64_t b = 0, n = 0;
  std::size_t m = 0;
  std::size_t t = 5;
  bool frobenius = false;
  bool printed = false;
};

int run_construct(const Globals& g, const ConstructArgs& a) {
  const Limits lim = g.limits();
  ACAlgebra L;
  Checks checks;
  if (a.kind == "sl2") {
    L = sl2(field_arg(a.q ? a.q : 3));
  } else if (a.kind == "th52b") {
    const Field f = field_arg(a.q ? a.q : 3);
    L = a.printed ? th52b_printed(f) : th52b(f);
  } else if (a.kind == "abelian") {
    L = ACAlgebra::abelian(field_arg(a.q ? a.q : 3), a.dim);
  } else if (a.kind == "sec6") {
    const auto r = family_sec6(a.b, a.n, field_arg(a.q), lim);
    checks.add("relations", r.relations);
    checks.add("decomposition", r.decomposition);
    checks.add("psi_intertwines", r.psi_intertwines);
    checks.add("table_matches", r.table_matches);
    checks.add("simple", r.simple);
    checks.add("generators_are_automorphisms", r.generators_are_automorphisms);
    L = r.algebra;
  } else if (a.kind == "gamma") {
    const auto r = gamma_construction(a.m, field_arg(a.q), lim);
    checks.add("generators_are_automorphisms", r.generators_are_automorphisms);
    checks.add("simple", r.simple);
    checks.add("perfect", r.perfect);
    L = r.algebra;
  } else if (a.kind == "agl") {
    const Field f = field_arg(a.q);
    const auto V = deleted_perm_module(agl_generators(a.t, a.frobenius), a.t, f);
    const auto structures = esq_structures(V, lim);
    if (structures.empty()) {
      std::cerr << "no surjective intertwiner wedge^2 V -> V for t = " << a.t << " over " << f.name() << "\n";
      return kFailed;
    }
    L = structures.front().algebra;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown construction " + a.kind);
  }
  emit(g, io::dump(io::to_json(L)));
  return checks.report();
}

// ---- dualize

int run_dualize(const Globals& g, const std::string& path, bool to_group, bool to_algebra, const std::string& format) {
  if (to_group == to_algebra) throw Error(ErrorCode::InvalidArgument, "give exactly one of --to-group, --to-algebra");
  if (to_group) {
    const PcGroup G = G_of_L(read_algebra(path));
    emit(g, format == "pcp" ? G.pc_presentation() : io::dump(io::to_json(G)));
  } else {
    emit(g, io::dump(io::to_json(L_of_G(read_group(path)))));
  }
  return kOk;
}

// ---- verify

int run_verify(const Globals& g, const std::string& path, const std::vector<std::string>& expect) {
  const Limits lim = g.limits();
  const ACAlgebra L = read_algebra(path);
  std::vector<std::pair<std::string, std::string>> kv;
  auto put = [&](const std::string& k, const std::string& v) { kv.emplace_back(k, v); };
  Checks checks;

  put("field", L.field().name());
  put("dim", std::to_string(L.dim()));
  const auto ids = identity_checks(L);
  put("abelian", b(ids.abelian));
  put("jacobi", b(ids.jacobi));
  put("malcev", b(ids.malcev));
  put("simple", b(is_simple(L, lim)));
  const Subspace Z = center(L);
  const Subspace D = derived_subspace(L);
  put("center_dim", std::to_string(Z.dim()));
  put("derived_dim", std::to_string(D.dim()));
  put("perfect", b(D.is_full()));
  if (L.field().is_prime_field()) {
    const auto rt = round_trip(L);
    put("round_trip", b(rt.tables_identical && rt.relations_hold));
    checks.add("round_trip", rt.tables_identical && rt.relations_hold);
    const PcGroup G = G_of_L(L);
    put("group_order", std::to_string(G.order()));
    if (G.order() <= lim.group_elements) {
      const auto inv = group_invariants(G, lim);
      put("group_exponent", std::to_string(inv.exponent));
      put("lemma1", b(inv.lemma1.all()));
      // Each group-side subgroup has the size predicted by the algebra.
      checks.add("derived_matches", inv.derived == D);
      checks.add("center_order", inv.center.order == checked_pow(G.prime(), L.dim() + Z.dim()));
    }
  }
  std::ostringstream out;
  for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
  emit(g, out.str());
  for (const auto& e : expect) {
    const auto eq = e.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--expect takes key=value, got " + e);
    const std::string key = e.substr(0, eq), want = e.substr(eq + 1);
    auto it = std::find_if(kv.begin(), kv.end(), [&](const auto& p) { return p.first == key; });
    if (it == kv.end()) throw Error(ErrorCode::InvalidArgument, "unknown key in --expect: " + key);
    checks.add(key + " (expected " + want + ", got " + it->second + ")", it->second == want);
  }
  return checks.report();
}

// ---- decompose, aut, iso

int run_decompose(const Globals& g, const std::string& path) {
  const ACAlgebra L = read_algebra(path);
  const auto dec = semisimple_decompose(L, g.limits());
  Json ideals = Json::array();
  for (const auto& I : dec.ideals) {
    Json basis = Json::array();
    for (const auto& v : I.basis_vectors()) basis.push_back(io::vec_to_json(L.field(), v));
    const ACAlgebra sub = restrict_to(L, I);
    ideals.push_back(Json{{"dim", I.dim()}, {"basis", basis}, {"simple", is_simple_incl_dim1(sub, g.limits())},
                          {"algebra", io::to_json(sub)}});
  }
  emit(g, io::dump(Json{{"abelian", dec.abelian}, {"count", dec.ideals.size()}, {"ideals", ideals}}));
  return kOk;
}

int run_aut(const Globals& g, const std::string& path, bool list) {
  const ACAlgebra L = read_algebra(path);
  const auto auts = automorphisms(L, g.limits());
  std::map<std::uint64_t, std::uint64_t> orders;
  const Matrix I = Matrix::identity(L.field(), L.dim());
  for (const auto& a : auts) {
    std::uint64_t k = 1;
    for (Matrix x = a; !(x == I); x = x * a) ++k;
    ++orders[k];
  }
  Json ord = Json::object();
  for (const auto& [k, c] : orders) ord[std::to_string(k)] = c;
  Json out{{"count", auts.size()}, {"element_orders", ord}};
  if (list) {
    Json mats = Json::array();
    for (const auto& a : auts) mats.push_back(io::to_json(a));
    out["automorphisms"] = mats;
  }
  emit(g, io::dump(out));
  return kOk;
}

int run_iso(const Globals& g, const std::string& p1, const std::string& p2) {
  const auto phi = find_isomorphism(read_algebra(p1), read_algebra(p2), g.limits());
  Json out{{"isomorphic", phi.has_value()}};
  out["map"] = phi ? io::to_json(*phi) : Json(nullptr);
  emit(g, io::dump(out));
  return kOk;
}

// ---- census, roundtrip, audit, cg

int run_census(const Globals& g, std::uint32_t q) {
  const auto rep = dim4_census(q, g.limits());
  emit(g, io::dump(io::to_json(rep)));
  Checks checks;
  if (rep.cross_checked) checks.add("agl_cross_check", rep.cross_check_ok);
  return checks.report();
}

int run_roundtrip(const Globals& g, const std::string& path) {
  const auto rt = round_trip(read_algebra(path));
  emit(g, "tables identical: " + b(rt.tables_identical) + "\nrelations hold: " + b(rt.relations_hold) + "\n");
  Checks checks;
  checks.add("tables_identical", rt.tables_identical);
  checks.add("relations_hold", rt.relations_hold);
  return checks.report();
}

int run_audit(const Globals& g, const std::string& path, bool full) {
  const ACAlgebra L = read_algebra(path);
  AuditOptions opt;
  opt.full_lattice = full;
  const auto rep = correspondence_audit(L, G_of_L(L), opt, g.limits());
  emit(g, io::dump(io::to_json(rep, L.field())));
  Checks checks;
  checks.add("subspace correspondence", rep.all_agree);
  return checks.report();
}

Json summands_json(const std::vector<CgSummand>& s) {
  Json out = Json::array();
  for (const auto& x : s)
    out.push_back(Json{{"module", x.name()}, {"det_power", x.det_power}, {"degree", x.degree}, {"dim", x.dim()},
                       {"multiplicity", x.multiplicity}});
  return out;
}

int run_cg(const Globals& g, std::size_t m, std::size_t n, std::uint32_t p, bool square) {
  const Field f = field_arg(p);
  if (!f.is_prime_field()) throw Error(ErrorCode::InvalidArgument, "--p must be prime");
  const auto gens = gl2_generators(f);
  Checks checks;
  Json out;
  if (square) {
    const auto r = cg_wedge_sym_decompose(m, f, gens);
    out = Json{{"m", m}, {"p", p}, {"wedge", summands_json(r.wedge_multiplicities)},
               {"sym", summands_json(r.sym_multiplicities)}, {"ok", r.ok()}};
    checks.add("wedge/sym decomposition", r.ok());
  } else {
    const auto r = cg_tensor_decompose(m, n, f, gens);
    out = Json{{"m", m},
               {"n", n},
               {"p", p},
               {"multiplicities", summands_json(r.multiplicities)},
               {"rank_delta", r.rank_delta},
               {"rank_pi", r.rank_pi},
               {"image_is_kernel", r.image_is_kernel},
               {"delta_meets_W", r.delta_meets_W},
               {"direct_sum_full", r.direct_sum_full},
               {"pieces_direct", r.pieces_direct},
               {"ok", r.ok()}};
    checks.add("tensor decomposition", r.ok());
  }
  emit(g, io::dump(out));
  return checks.report();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite anti-commutative algebras, class-2 p-groups and their dualities"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("UCSIAC_BUDGET")) {
    try {
      g.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "UCSIAC_BUDGET must be a positive integer\n";
      return kUsage;
    }
  }
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", g.budget, "cap on every exhaustive enumeration")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", g.output, "output file, - for stdout");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a named algebra and print its JSON");
  construct->add_option("kind", ca.kind, "sl2 | th52b | abelian | sec6 | gamma | agl")
      ->required()
      ->check(CLI::IsMember({"sl2", "th52b", "abelian", "sec6", "gamma", "agl"}));
  construct->add_option("--q,--p", ca.q, "field order");
  construct->add_option("--dim", ca.dim, "dimension (abelian)");
  construct->add_option("--b", ca.b, "sec6 parameter b");
  construct->add_option("--n", ca.n, "sec6 parameter n");
  construct->add_option("--m", ca.m, "gamma degree m");
  construct->add_option("--t", ca.t, "agl degree t");
  construct->add_flag("--frobenius", ca.frobenius, "agl: include x -> x^p");
  construct->add_flag("--printed", ca.printed, "th52b: the verbatim printed table");

  std::string file, file2, format = "json";
  bool to_group = false, to_algebra = false, list = false, full = false, square = false;
  std::vector<std::string> expect;
  std::uint32_t q = 0, p = 0;
  std::size_t m = 0, n = 0;

  auto* dualize = app.add_subcommand("dualize", "algebra <-> group");
  dualize->add_flag("--to-group", to_group);
  dualize->add_flag("--to-algebra", to_algebra);
  dualize->add_option("--format", format, "group output: json | pcp")->check(CLI::IsMember({"json", "pcp"}));
  dualize->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "identity and invariant suite, key=value lines");
  verify->add_option("file", file)->required();
  verify->add_option("--expect", expect, "key=value that must hold");

  auto* decompose = app.add_subcommand("decompose", "minimal ideals of a semisimple algebra");
  decompose->add_option("file", file)->required();

  auto* aut = app.add_subcommand("aut", "automorphism group");
  aut->add_option("file", file)->required();
  aut->add_flag("--list", list, "include the matrices");

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();

  auto* census = app.add_subcommand("census", "4-dimensional simple algebras over F_q");
  census->add_option("--q", q)->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "algebra -> group -> algebra");
  roundtrip->add_option("file", file)->required();

  auto* audit = app.add_subcommand("audit", "subspace / subgroup correspondence audit");
  audit->add_option("file", file)->required();
  audit->add_flag("--full", full, "whole subspace lattice");

  auto* cg = app.add_subcommand("cg", "Clebsch-Gordan decomposition of V_m (x) V_n over F_p");
  cg->add_option("--m", m)->required();
  cg->add_option("--n", n);
  cg->add_option("--p", p)->required();
  cg->add_flag("--square", square, "decompose wedge^2 V_m and S^2 V_m instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return run_construct(g, ca);
    if (*dualize) return run_dualize(g, file, to_group, to_algebra, format);
    if (*verify) return run_verify(g, file, expect);
    if (*decompose) return run_decompose(g, file);
    if (*aut) return run_aut(g, file, list);
    if (*iso) return run_iso(g, file, file2);
    if (*census) return run_census(g, q);
    if (*roundtrip) return run_roundtrip(g, file);
    if (*audit) return run_audit(g, file, full);
    if (*cg) return run_cg(g, m, square ? m : n, p, square);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kUsage : kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
