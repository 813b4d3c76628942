#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holonomy/errors.hpp"
#include "holonomy/io.hpp"

using namespace holonomy;
using io::Json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string family;
  std::optional<std::size_t> n, m, m1, m2, k;
  std::vector<std::string> lprime;
  std::string h0, h;
  std::string spec_file, raw_file, params_file;
  std::string counterexample, exemplar;
  std::string alpha = "1", beta = "0";
  std::string expect;
  std::string out, format = "json";
  bool parabolic = false, sp = false, opt_in_n2 = false;
  bool all = false, minimal = false, n1 = false;
  bool timing = false, emit_basis = false;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json options_json(const std::string& command, const Options& o) {
  Json j;
  j["command"] = command;
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) j[key] = v;
  };
  auto put_n = [&](const char* key, const std::optional<std::size_t>& v) {
    if (v) j[key] = *v;
  };
  put("family", o.family);
  put_n("n", o.n);
  put_n("m", o.m);
  put_n("m1", o.m1);
  put_n("m2", o.m2);
  put_n("k", o.k);
  if (!o.lprime.empty()) j["Lprime"] = o.lprime;
  put("h0", o.h0);
  put("h", o.h);
  if (!o.spec_file.empty()) j["spec"] = read_json_file(o.spec_file);
  if (!o.raw_file.empty()) j["raw"] = read_json_file(o.raw_file);
  if (!o.params_file.empty()) j["params"] = read_json_file(o.params_file);
  put("counterexample", o.counterexample);
  if (!o.counterexample.empty()) {
    j["alpha"] = o.alpha;
    j["beta"] = o.beta;
  }
  put("exemplar", o.exemplar);
  put("expect", o.expect);
  if (o.parabolic) j["parabolic"] = true;
  if (o.sp) j["sp"] = true;
  if (o.opt_in_n2) j["opt_in_n2_parabolic"] = true;
  if (o.all) j["all"] = true;
  if (o.minimal) j["minimal"] = true;
  if (o.n1) j["n1_nonexistence"] = true;
  return j;
}

H0 parse_h0(const std::string& s) {
  if (s == "zero" || s == "0") return H0::zero;
  if (s == "Ri") return H0::Ri;
  if (s == "sp1") return H0::sp1;
  throw InputError("--h0 must be zero, Ri or sp1");
}

// "B2" appends an interval block after the previous ones; "B:1,0" gives explicit indices.
std::vector<BBlock> parse_lprime(const std::vector<std::string>& items, std::size_t offset) {
  std::vector<BBlock> out;
  for (const auto& item : items) {
    if (item.size() < 2 || item[0] != 'B') throw InputError("--Lprime expects B<l> or B:i,j,...");
    if (item[1] == ':') {
      BBlock b;
      std::stringstream ss(item.substr(2));
      std::string tok;
      while (std::getline(ss, tok, ',')) b.indices.push_back(std::stoul(tok));
      out.push_back(b);
    } else {
      const std::size_t l = std::stoul(item.substr(1));
      out.push_back(BBlock::interval(l, offset));
      offset += l;
    }
  }
  return out;
}

// Families whose h carries no extra data default to h = sp(m); the others keep
// the documented minimal h together with its maps.
Subalgebra family_from_flags(const Options& o) {
  const int f = io::parse_family(o.family);
  auto [spec, space] = minimal_family(f);
  if (o.m) spec.m = *o.m;
  if (o.m1) spec.m1 = *o.m1;
  if (o.m2) spec.m2 = *o.m2;
  if (o.k) spec.k = *o.k;
  if (!o.h0.empty()) spec.h0 = parse_h0(o.h0);
  const bool plain_h = f == 1 || f == 6 || f == 7;
  const std::string h = o.h.empty() ? (plain_h ? "full" : "") : o.h;
  if (h == "full") {
    if (!plain_h && o.h.empty()) throw InputError("internal: h");
    spec.h_generators = sp_basis(f == 9 ? spec.k : spec.m);
  } else if (h == "zero") {
    spec.h_generators.clear();
  } else if (!h.empty()) {
    throw InputError("--h-basis must be full or zero");
  }
  if (!o.lprime.empty()) spec.lprime = parse_lprime(o.lprime, spec.m + spec.m1 + spec.m2);
  if (o.n && *o.n != space->n()) space = std::make_shared<const HermitianSpace>(HermitianSpace::standard(*o.n));
  return family_g(spec, space);
}

Subalgebra family_from_file(const std::string& path) {
  const Json j = read_json_file(path);
  const FamilySpec spec = io::family_spec_from_json(j);
  std::shared_ptr<const HermitianSpace> space;
  if (j.contains("n"))
    space = io::space_from_json(j);
  else
    space = minimal_family(spec.family).second;
  return family_g(spec, space);
}

std::size_t n_or(const Options& o, std::size_t fallback) { return o.n ? *o.n : fallback; }

void require_desk_scale(const Options& o, std::size_t n) {
  if (n >= 2 && !o.opt_in_n2)
    throw InputError("the full parabolic algebra at n >= 2 needs --opt-in-n2-parabolic");
  if (n > 2) throw InputError("n > 2 is outside the supported scale");
}

/// The algebra selected by --spec, --family, --counterexample, --exemplar or --parabolic.
Subalgebra resolve_algebra(const Options& o, bool& counterexample) {
  counterexample = false;
  if (!o.spec_file.empty()) return family_from_file(o.spec_file);
  if (!o.family.empty()) return family_from_flags(o);
  if (!o.counterexample.empty()) {
    counterexample = true;
    auto space = std::make_shared<const HermitianSpace>(HermitianSpace::standard(n_or(o, 1)));
    if (o.counterexample == "lemma1") return lemma1_algebra(space);
    if (o.counterexample == "twisted")
      return twisted_algebra(space, parse_scalar(o.alpha), parse_scalar(o.beta));
    throw InputError("--counterexample must be lemma1 or twisted");
  }
  if (!o.exemplar.empty()) {
    if (o.exemplar != "n2") throw InputError("--exemplar must be n2");
    return exemplar_n2().g;
  }
  if (o.parabolic) {
    const std::size_t n = n_or(o, 1);
    require_desk_scale(o, n);
    auto space = std::make_shared<const HermitianSpace>(HermitianSpace::standard(n));
    return Subalgebra(space, parabolic_basis(*space));
  }
  throw InputError("select an algebra with --family, --spec, --counterexample, --exemplar or --parabolic");
}

Json identity_json(const IdentityReport& r) {
  Json j;
  j["bianchi"] = r.bianchi;
  if (r.bianchi_violation) j["bianchi_violation"] = *r.bianchi_violation;
  j["eq_star"] = r.eq_star;
  j["sym_R"] = r.sym_R;
  j["RI"] = r.ri;
  j["RI_quaternionic"] = r.ri_quaternionic;
  j["triple_star"] = r.triple_star;
  return j;
}

Json lp_json(const LPReport& r) {
  Json j;
  j["L_P0"] = r.l_p0;
  j["tau_A"] = r.tau_a;
  j["theta_S"] = r.theta_s;
  j["B_C"] = r.b_c;
  return j;
}

bool sanity(const Subalgebra& g) {
  for (const auto& m : g.matrices())
    if (!is_quaternionic_skew(g.space(), m)) return false;
  return true;
}

// ---------------------------------------------------------------- commands

bool cmd_solve(const Options& o, Json& rep) {
  if (!o.raw_file.empty()) {
    const Json j = read_json_file(o.raw_file);
    RealMatrix eta;
    std::shared_ptr<const HermitianSpace> space;
    if (j.contains("eta")) {
      eta = io::real_matrix_from_json(j["eta"]);
    } else {
      space = io::space_from_json(j);
      eta = space->eta_full_matrix();
    }
    std::vector<RealMatrix> gens;
    for (const auto& m : j.value("generators", Json::array())) gens.push_back(io::real_matrix_from_json(m));
    const auto rs = solve_R(gens, eta);
    bool ok = true;
    Json basis = Json::array();
    for (std::size_t t = 0; t < rs.dim(); ++t) {
      const auto r = rs.tensor(t);
      ok = ok && satisfies_bianchi(r);
      if (o.emit_basis) basis.push_back(io::to_json(r));
    }
    rep["ambient_dim"] = eta.rows();
    rep["generators"] = gens.size();
    rep["dim_R"] = rs.dim();
    rep["bianchi_ok"] = ok;
    if (o.emit_basis) rep["basis"] = basis;
    return ok;
  }
  if (o.sp) {
    const auto space = HermitianSpace::standard(n_or(o, 1));
    if (space.n() > 2) throw InputError("n > 2 is outside the supported scale");
    const auto gens = sp_generators(space);
    const auto rs = solve_R(gens, space.eta_matrix());
    const auto ps = solve_P(gens, space.eta_matrix());
    bool ok = true;
    for (std::size_t t = 0; t < rs.dim(); ++t) ok = ok && satisfies_bianchi(rs.tensor(t));
    for (std::size_t t = 0; t < ps.dim(); ++t) ok = ok && satisfies_cyclic_P(ps.tensor(t), space.eta_matrix());
    rep["n"] = space.n();
    rep["dim_sp"] = gens.size();
    rep["dim_R"] = rs.dim();
    rep["dim_P"] = ps.dim();
    rep["identities_ok"] = ok;
    return ok;
  }
  bool counterexample = false;
  const Subalgebra g = resolve_algebra(o, counterexample);
  const auto rs = solve_R(g);
  bool ok = true;
  Json basis = Json::array();
  for (std::size_t t = 0; t < rs.dim(); ++t) {
    const auto r = rs.tensor(t);
    ok = ok && check_curvature_identities(g.space(), r).all();
    if (o.emit_basis) basis.push_back(io::to_json(r));
  }
  rep["n"] = g.space().n();
  if (!g.label.empty()) rep["algebra"] = g.label;
  rep["dim_g"] = g.dim();
  rep["closed"] = g.is_closed();
  rep["dim_R"] = rs.dim();
  rep["equations"] = rs.equations;
  rep["identities_ok"] = ok;
  if (o.parabolic) {
    const auto pr = prop1_rank_check(g.space());
    Json p;
    p["dim_sp"] = pr.dim_sp;
    p["dim_R_sp"] = pr.dim_R_sp;
    p["dim_P_sp"] = pr.dim_P_sp;
    p["parameter_count"] = pr.parameter_count;
    p["rank"] = pr.rank;
    p["matches_dim_R"] = pr.all() && pr.dim_R == rs.dim();
    rep["prop1"] = p;
    ok = ok && pr.all() && pr.dim_R == rs.dim();
  }
  if (o.emit_basis) rep["basis"] = basis;
  return ok && g.is_closed();
}

bool cmd_berger(const Options& o, Json& rep) {
  bool counterexample = false;
  const Subalgebra g = resolve_algebra(o, counterexample);
  const bool expected = o.expect.empty() ? !counterexample : o.expect == "true";
  if (!o.expect.empty() && o.expect != "true" && o.expect != "false") throw InputError("--expect must be true or false");
  const auto r = berger_check(g);
  rep["n"] = g.space().n();
  if (!g.label.empty()) rep["algebra"] = g.label;
  rep["berger"] = r.is_berger;
  rep["dim_g"] = r.dim_g;
  rep["dim_R"] = r.dim_R;
  rep["span_dim"] = r.span_dim;
  rep["S02_zero"] = r.s02_zero;
  rep["expected"] = expected;
  if (!g.side_conditions_ok) rep["side_condition_notes"] = g.side_condition_notes;
  return r.is_berger == expected;
}

Json certificate_json(const SymmetricReport& r) {
  Json c = Json::array();
  for (const auto& v : r.certificate) {
    Json e;
    e["xi"] = v.xi;
    e["x"] = v.x;
    e["y"] = v.y;
    c.push_back(e);
  }
  return c;
}

bool cmd_symmetric(const Options& o, Json& rep) {
  if (o.n1) {
    bool ok = true;
    Json cases = Json::array();
    for (const std::string which : {"ImH", "C"}) {
      const auto r = n1_nonexistence(which);
      Json e;
      e["L"] = r.L;
      e["s_equation_solutions"] = r.s_equation_solutions;
      e["pair_solutions"] = r.pair_solutions;
      e["S_zero"] = r.S_zero;
      cases.push_back(e);
      ok = ok && r.S_zero;
    }
    rep["n1_nonexistence"] = cases;
    return ok;
  }
  if (!o.exemplar.empty()) {
    if (o.exemplar != "n2") throw InputError("--exemplar must be n2");
    const auto ex = exemplar_n2();
    const auto& space = ex.g.space();
    const auto ids = check_curvature_identities(space, ex.R);
    const auto lp = check_LP(space, ex.R);
    const auto sym = is_symmetric_pair(ex.g, ex.R);
    FamilySpec g6;
    g6.family = 6;
    g6.lprime = {BBlock{{1, 0}}};
    const auto fam = family_g(g6, ex.g.space_ptr());
    bool same = fam.dim() == ex.g.dim();
    for (const auto& u : ex.g.basis()) same = same && fam.contains(u);
    const auto X = solve_base_change(ex.params, space);
    bool d_zero = X.has_value();
    if (X) {
      const auto D = change_base_q(ex.params, space, *X);
      for (const auto& row : D)
        for (const auto& q : row) d_zero = d_zero && q.is_zero();
    }
    rep["symmetric"] = sym.symmetric();
    rep["dim_g"] = sym.dim_g;
    rep["span_dim"] = sym.span_dim;
    rep["certificate"] = certificate_json(sym);
    rep["identities"] = identity_json(ids);
    rep["LP"] = lp_json(lp);
    rep["family_g6"] = same;
    rep["base_change"] = {{"found", X.has_value()}, {"X", X ? io::to_json(*X) : Json()}, {"D_prime_zero", d_zero}};
    return sym.symmetric() && ids.all() && lp.all() && same && d_zero;
  }
  if (o.spec_file.empty() || o.params_file.empty())
    throw InputError("symmetric needs --exemplar n2, --n1-nonexistence, or --spec with --params");
  const Subalgebra g = family_from_file(o.spec_file);
  const Prop1Params p = io::params_from_json(read_json_file(o.params_file), g.space().n());
  const auto r = prop1_construct(p, g.space());
  const auto sym = is_symmetric_pair(g, r);
  rep["symmetric"] = sym.symmetric();
  rep["dim_g"] = sym.dim_g;
  rep["span_dim"] = sym.span_dim;
  rep["annihilated"] = sym.annihilated;
  rep["certificate"] = certificate_json(sym);
  rep["obstructions"] = sym.obstructions;
  return sym.symmetric();
}

bool cmd_families(const Options& o, Json& rep) {
  std::vector<std::pair<std::string, Subalgebra>> algebras;
  if (o.all || o.minimal) {
    if (!o.all && o.family.empty()) throw InputError("families needs --all or --family");
    std::vector<int> which;
    if (o.all)
      for (int f = 1; f <= 9; ++f) which.push_back(f);
    else
      which.push_back(io::parse_family(o.family));
    for (int f : which) {
      const auto [spec, space] = minimal_family(f);
      algebras.emplace_back(spec.name(), family_g(spec, space));
    }
  } else {
    bool ce = false;
    Subalgebra g = resolve_algebra(o, ce);
    algebras.emplace_back(o.family.empty() ? "algebra" : o.family, std::move(g));
  }
  Json table = Json::array();
  bool ok = true;
  for (const auto& [name, g] : algebras) {
    const auto b = berger_check(g);
    Json row;
    row["family"] = name;
    row["n"] = g.space().n();
    row["dim_g"] = g.dim();
    row["closed"] = g.is_closed();
    row["sanity"] = sanity(g);
    row["dim_R"] = b.dim_R;
    row["span_dim"] = b.span_dim;
    row["berger"] = b.is_berger;
    row["side_conditions_ok"] = g.side_conditions_ok;
    ok = ok && b.is_berger && g.is_closed() && row["sanity"].get<bool>();
    table.push_back(row);
  }
  rep["table"] = table;
  return ok;
}

bool cmd_decompose(const Options& o, Json& rep) {
  std::shared_ptr<const HermitianSpace> space;
  RealSubspace l(0);
  if (!o.spec_file.empty()) {
    const Json j = read_json_file(o.spec_file);
    space = io::space_from_json(j);
    std::vector<QVector> vs;
    for (const auto& v : j.at("vectors")) vs.push_back(io::qvector_from_json(v));
    l = RealSubspace::span(space->n(), vs);
  } else {
    if (!o.n) throw InputError("decompose needs --n (or --spec)");
    space = std::make_shared<const HermitianSpace>(HermitianSpace::standard(*o.n));
    const std::size_t m = o.m.value_or(0), m1 = o.m1.value_or(0), m2 = o.m2.value_or(0);
    l = build_L(*space, m, m1, m2, parse_lprime(o.lprime, m + m1 + m2));
  }
  const auto d = decompose_L(*space, l);
  auto basis = [](const RealSubspace& s) {
    Json b = Json::array();
    for (const auto& v : s.basis()) b.push_back(io::to_json(v));
    return b;
  };
  rep["n"] = space->n();
  rep["dim_L"] = l.dim();
  rep["dim_L1"] = d.l1.dim();
  rep["dim_L5"] = d.l5.dim();
  rep["dim_L4c"] = d.l4c.dim();
  rep["dim_Lrest"] = d.lrest.dim();
  rep["dim_U"] = d.u.dim();
  rep["L1"] = basis(d.l1);
  rep["L5"] = basis(d.l5);
  rep["L4c"] = basis(d.l4c);
  rep["Lrest"] = basis(d.lrest);
  const bool ok = d.l1.dim() + d.l5.dim() + d.l4c.dim() + d.lrest.dim() == l.dim();
  rep["direct_sum"] = ok;
  return ok;
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string to_csv(const Json& rep) {
  std::ostringstream os;
  if (rep.contains("table") && !rep["table"].empty()) {
    const Json& t = rep["table"];
    bool first = true;
    for (const auto& [key, _] : t[0].items()) {
      os << (first ? "" : ",") << key;
      first = false;
    }
    os << "\n";
    for (const auto& row : t) {
      first = true;
      for (const auto& [_, v] : row.items()) {
        os << (first ? "" : ",") << csv_cell(v);
        first = false;
      }
      os << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  for (const auto& [key, v] : rep.items())
    if (v.is_primitive()) os << key << "," << csv_cell(v) << "\n";
  return os.str();
}

void emit(const Options& o, const Json& rep) {
  const std::string text = o.format == "csv" ? to_csv(rep) : rep.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
  }
}

void add_algebra_flags(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "g1..g9");
  sub->add_option("--n", o.n, "quaternionic dimension n");
  sub->add_option("--m", o.m);
  sub->add_option("--m1", o.m1);
  sub->add_option("--m2", o.m2);
  sub->add_option("--k", o.k, "g9: dimension of H^k");
  sub->add_option("--Lprime", o.lprime, "B<l> (next free coordinates) or B:i,j,... (explicit)");
  sub->add_option("--h0", o.h0, "zero | Ri | sp1");
  sub->add_option("--h-basis", o.h, "h inside sp(m): full | zero");
  sub->add_option("--spec", o.spec_file, "JSON family spec");
  sub->add_option("--counterexample", o.counterexample, "lemma1 | twisted");
  sub->add_option("--alpha", o.alpha, "twisted parameter");
  sub->add_option("--beta", o.beta, "twisted parameter");
  sub->add_option("--exemplar", o.exemplar, "n2");
  sub->add_flag("--parabolic", o.parabolic, "the full algebra sp(1,n+1)_Hp");
  sub->add_flag("--opt-in-n2-parabolic", o.opt_in_n2, "allow the n = 2 parabolic solve");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature and Berger checks for subalgebras of sp(1,n+1)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "write the report to a file");
  app.add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--timing", o.timing, "include wall-clock time (breaks byte-identical output)");

  auto* solve = app.add_subcommand("solve", "solve for R(g), R(sp(n)) and P(sp(n))");
  add_algebra_flags(solve, o);
  solve->add_option("--raw", o.raw_file, "JSON {eta | n, gram; generators}");
  solve->add_flag("--sp", o.sp, "R(sp(n)) and P(sp(n)) on R^{4n}");
  solve->add_flag("--emit-basis", o.emit_basis, "include the basis tensors");

  auto* berger = app.add_subcommand("berger", "Berger property check");
  add_algebra_flags(berger, o);
  berger->add_option("--expect", o.expect, "expected verdict (default: true, false for counterexamples)");

  auto* symmetric = app.add_subcommand("symmetric", "symmetric pair checks");
  symmetric->add_option("--exemplar", o.exemplar, "n2");
  symmetric->add_option("--spec", o.spec_file, "JSON family spec");
  symmetric->add_option("--params", o.params_file, "JSON curvature parameters (C01, C02, A0, S01, S02, d, Rprime, P0)");
  symmetric->add_flag("--n1-nonexistence", o.n1, "n = 1: only S = 0 survives");
  symmetric->add_subcommand("verify", "alias; takes the same flags")->fallthrough();

  auto* families = app.add_subcommand("families", "build and check family algebras");
  add_algebra_flags(families, o);
  families->add_flag("--all", o.all, "all nine families");
  families->add_flag("--minimal", o.minimal, "documented minimal instances");

  auto* decompose = app.add_subcommand("decompose", "decompose L = L1 + L5 + L4c + L'");
  decompose->add_option("--n", o.n);
  decompose->add_option("--m", o.m);
  decompose->add_option("--m1", o.m1);
  decompose->add_option("--m2", o.m2);
  decompose->add_option("--Lprime", o.lprime);
  decompose->add_option("--spec", o.spec_file, "JSON {n, gram?, vectors}");

  for (auto* sub : {solve, berger, symmetric, families, decompose}) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  Json rep;
  try {
    const Json input = options_json(command, o);
    rep["toolkit"] = "holonomy-lab";
    rep["version"] = kVersion;
    rep["command"] = command;
    rep["input"] = input;
    rep["input_hash"] = io::spec_hash(input);
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    if (command == "solve") ok = cmd_solve(o, rep);
    if (command == "berger") ok = cmd_berger(o, rep);
    if (command == "symmetric") ok = cmd_symmetric(o, rep);
    if (command == "families") ok = cmd_families(o, rep);
    if (command == "decompose") ok = cmd_decompose(o, rep);
    if (o.timing)
      rep["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep["passed"] = ok;
    emit(o, rep);
    return ok ? 0 : 1;
  } catch (const ValidationError& e) {
    rep["error"] = e.what();
    rep["clause"] = e.clause();
  } catch (const std::exception& e) {
    rep["error"] = e.what();
  }
  rep["passed"] = false;
  std::cerr << "holonomy-lab: " << rep["error"].get<std::string>() << "\n";
  try {
    emit(o, rep);
  } catch (const std::exception&) {
  }
  return 2;
}
