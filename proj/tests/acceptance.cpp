// Acceptance run: one line per criterion, exact arithmetic throughout.
// Usage: acceptance [--opt-in-n2-parabolic]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "holonomy/subspace.hpp"
#include "holonomy/symmetric_pair.hpp"

using namespace holonomy;

namespace {

using PE = ParabolicElement;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " FAILED: " << what << ";";
    }
  }
};

std::shared_ptr<const HermitianSpace> standard(std::size_t n) {
  return std::make_shared<const HermitianSpace>(HermitianSpace::standard(n));
}

void bracket_oracle(Outcome& out) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto s = HermitianSpace::standard(n);
    const auto basis = parabolic_basis(s);
    std::size_t pairs = 0, equal = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        ++pairs;
        if (to_matrix(s, bracket(s, basis[i], basis[j])) ==
            commutator(to_matrix(s, basis[i]), to_matrix(s, basis[j])))
          ++equal;
      }
    out.detail << " n=" << n << ": " << basis.size() << " elements, " << equal << "/" << pairs << " pairs;";
    out.require(basis.size() == (n == 1 ? 14u : 25u), "basis size");
    out.require(pairs == (n == 1 ? 91u : 300u), "pair count");
    out.require(equal == pairs, "bracket mismatch");
  }
}

void parametric_rank(Outcome& out, std::size_t n) {
  const auto rep = prop1_rank_check(HermitianSpace::standard(n));
  const std::size_t expected = 8 + 5 + 3 * rep.dim_sp + 8 * n + rep.dim_R_sp + rep.dim_P_sp;
  out.detail << " n=" << n << ": dim sp=" << rep.dim_sp << ", dim R(sp)=" << rep.dim_R_sp
             << ", dim P(sp)=" << rep.dim_P_sp << ", parameters=" << rep.parameter_count
             << ", rank=" << rep.rank << ", dim solve_R=" << rep.dim_R << ";";
  out.require(rep.parameter_count == expected, "parameter count");
  if (n == 1) out.require(expected == 21 + 9 + rep.dim_R_sp + rep.dim_P_sp, "21 + 9 split");
  out.require(rep.rank == rep.parameter_count, "map not injective");
  out.require(rep.rank == rep.dim_R, "rank differs from dim solve_R");
  out.require(rep.images_satisfy_bianchi && rep.images_in_solution_space, "image soundness");
}

void berger_positives(Outcome& out) {
  for (int f = 1; f <= 9; ++f) {
    const auto [spec, space] = minimal_family(f);
    const auto g = family_g(spec, space);
    const auto rep = berger_check(g);
    out.detail << " g" << f << "(n=" << space->n() << ",dim " << rep.dim_g << ",R " << rep.dim_R << ")="
               << (rep.is_berger ? "Berger" : "not Berger") << ";";
    out.require(rep.is_berger, "g" + std::to_string(f) + " not Berger");
  }
}

void berger_negatives(Outcome& out) {
  const auto s1 = standard(1);
  const auto r1 = berger_check(lemma1_algebra(s1));
  out.detail << " dim_R pr_H = 1 algebra: dim " << r1.dim_g << ", span " << r1.span_dim << ";";
  out.require(!r1.is_berger, "dim_R pr_H = 1 algebra is Berger");
  const auto r2 = berger_check(twisted_algebra(s1, 1, 0));
  out.detail << " (alpha,beta)=(1,0) algebra: dim " << r2.dim_g << ", span " << r2.span_dim
             << ", S02 zero=" << (r2.s02_zero ? "yes" : "no") << ";";
  out.require(!r2.is_berger, "(1,0) algebra is Berger");
  out.require(r2.s02_zero, "S02 not identically zero");
}

void rho_lemma(Outcome& out) {
  out.require(rho_closure(build_A(3)).dim() == 0, "rho(A(3)) != 0");
  for (std::size_t l = 2; l <= 4; ++l)
    out.require(rho_closure(build_B(l)) == build_B(l), "rho(B(" + std::to_string(l) + ")) != B(l)");
  out.require(rho_closure(build_B(1)).dim() == 0, "rho(B(1)) != 0");
  out.detail << " A(3), B(1..4) checked;";
}

void exemplar(Outcome& out) {
  const auto ex = exemplar_n2();
  const auto& space = ex.g.space();
  const auto ids = check_curvature_identities(space, ex.R);
  const bool lp = check_LP(space, ex.R).all();
  out.detail << " (a) bianchi=" << ids.bianchi << " star=" << ids.eq_star << " RI=" << ids.ri << " LP=" << lp
             << ";";
  out.require(ids.all() && lp, "(a) identities");

  bool annihilated = true;
  for (const auto& xi : ex.g.basis()) annihilated = annihilated && act_on_R(space, xi, ex.R).is_zero();
  out.detail << " (b) " << ex.g.dim() << " basis elements annihilate R=" << annihilated << ";";
  out.require(ex.g.dim() == 6 && annihilated, "(b) xi . R = 0");

  const auto rep = is_symmetric_pair(ex.g, ex.R);
  out.detail << " (c) span dim " << rep.span_dim << ";";
  out.require(rep.spans && rep.span_dim == ex.g.dim(), "(c) span");

  // (d) on the exemplar itself and with fixed non-zero D data added.
  std::vector<Prop1Params> cases{ex.params, ex.params};
  cases[1].d = {Scalar(1), Scalar(-2), Scalar(3, 2), Scalar(5), Scalar(-1, 3)};
  bool base_ok = true;
  for (const auto& p : cases) {
    const auto X = solve_base_change(p, space);
    if (!X) {
      base_ok = false;
      continue;
    }
    const auto Dp = change_base_q(p, space, *X);
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) base_ok = base_ok && Dp[r][s].is_zero();
  }
  out.detail << " (d) D' vanishes after base change=" << base_ok << ";";
  out.require(base_ok, "(d) base change");
}

void nonexistence(Outcome& out) {
  for (const std::string which : {"ImH", "C"}) {
    const auto rep = n1_nonexistence(which);
    out.detail << " L=" << which << ": S solutions " << rep.s_equation_solutions << ", pair solutions "
               << rep.pair_solutions << ", S=0 " << rep.S_zero << ";";
    out.require(rep.s_equation_solutions == 0 && rep.S_zero, "non-zero S for L=" + which);
  }
}

bool quaternionic_skew_all(const HermitianSpace& s, const std::vector<PE>& elems) {
  for (const auto& u : elems)
    if (!is_quaternionic_skew(s, to_matrix(s, u))) return false;
  return true;
}

void structural(Outcome& out) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto s = HermitianSpace::standard(n);
    const auto basis = parabolic_basis(s);
    out.require(quaternionic_skew_all(s, basis), "parabolic basis n=" + std::to_string(n));
    checked += basis.size();

    bool hom = true;
    for (const auto& x : basis)
      for (const auto& y : basis)
        hom = hom && f_projection(bracket(s, x, y)) == sim_bracket(f_projection(x), f_projection(y));
    out.require(hom, "f_projection n=" + std::to_string(n));
    const PE one = PE::grading(n);
    for (const auto& u : basis) {
      const Grading g = grading_decompose(u);
      const bool ok = g.g0 + g.g1 + g.g2 == u && bracket(s, one, g.g0).is_zero() &&
                      bracket(s, one, g.g1) == g.g1 && bracket(s, one, g.g2) == Scalar(2) * g.g2;
      out.require(ok, "grading n=" + std::to_string(n));
    }
  }
  for (int f = 1; f <= 9; ++f) {
    const auto [spec, space] = minimal_family(f);
    const auto g = family_g(spec, space);
    out.require(quaternionic_skew_all(*space, g.basis()), "family g" + std::to_string(f));
    checked += g.dim();
  }
  const auto s1 = standard(1);
  for (const auto& g : {lemma1_algebra(s1), twisted_algebra(s1, 1, 0)}) {
    out.require(quaternionic_skew_all(*s1, g.basis()), "counterexample algebra");
    checked += g.dim();
  }
  out.detail << " " << checked << " elements quaternionic and eta-skew; f_projection and grading on all basis "
             << "pairs;";
}

}  // namespace

int main(int argc, char** argv) {
  bool n2 = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--opt-in-n2-parabolic") == 0) n2 = true;

  struct Criterion {
    std::string id, name;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria{
      {"1", "bracket oracle", bracket_oracle},
      {"2", "parametric tensors span R(sp(1,2)_Hp)", [](Outcome& o) { parametric_rank(o, 1); }},
      {"3", "nine families are Berger", berger_positives},
      {"4", "non-Berger algebras", berger_negatives},
      {"5", "rho closure", rho_lemma},
      {"6", "symmetric exemplar at n = 2", exemplar},
      {"7", "no non-zero S at n = 1", nonexistence},
      {"8", "structural sanity", structural},
  };
  if (n2)
    criteria.push_back(
        {"2b", "parametric tensors span R(sp(1,3)_Hp)", [](Outcome& o) { parametric_rank(o, 2); }});

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!out.ok) ++failed;
    std::printf("[%s] criterion %s %s (%.2f s):%s\n", out.ok ? "PASS" : "FAIL", c.id.c_str(), c.name.c_str(),
                secs, out.detail.str().c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
