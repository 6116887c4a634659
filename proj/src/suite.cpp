#include "cayley/suite.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "cayley/builtins.hpp"
#include "cayley/deformations.hpp"
#include "cayley/io.hpp"
#include "json.hpp"

namespace cayley {

using namespace fx;

Form SuiteContext::cayley_plus() const {
  Form Phi = bilinear(4, unit(Signature::Euclid), unit(Signature::Euclid));
  if (opt_.corrupt_cayley_plus) Phi += Form::basis(8, {0, 1, 2, 3});
  return Phi;
}

int SuiteReport::passed() const {
  int n = 0;
  for (const auto& r : records) n += r.pass;
  return n;
}

int SuiteReport::failed() const { return static_cast<int>(records.size()) - passed(); }

namespace {

const Scalar I = Scalar::i();

// Collects failures; the first one becomes the witness.
struct Expect {
  Outcome out{true, ""};
  void operator()(bool cond, const std::string& what) {
    if (!cond && out.pass) {
      out.pass = false;
      out.witness = what;
    }
  }
  template <class T>
  void eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", expected " << want;
      (*this)(false, os.str());
    }
  }
  void forms(const Form& got, const Form& want, const std::string& what) {
    if (!(got == want)) (*this)(false, what + ": differs by " + describe(got - want));
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

Scalar theta_u() { return Scalar(Q2(mpq_class(3, 5)), Q2(mpq_class(4, 5))); }

Vec vec8(std::initializer_list<std::pair<int, Scalar>> t) {
  Vec v(8);
  for (const auto& [a, c] : t) v[a] += c;
  return v;
}

SMat columns(const std::vector<Vec>& cols) {
  SMat m(8, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < 8; ++i) m(i, j) = cols[j][i];
  return m;
}

double max_diff(const RealMatrix& a, const SMat& b, int sign = 1) {
  double d = 0;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) d = std::max(d, std::abs(a(i, j) - sign * b(i, j).re().to_double()));
  return d;
}

Outcome clifford(Signature s) {
  Expect x;
  const GammaSet& gs = gamma(s);
  SMat id = SMat::identity(16);
  for (int a = 0; a < 8; ++a)
    for (int b = a; b < 8; ++b) {
      SMat ga = gs.g[a].dense(), gb = gs.g[b].dense();
      SMat ac = ga * gb + gb * ga;
      SMat want = Scalar(a == b ? 2 * gs.eta[a] : 0) * id;
      x(ac == want, "anticommutator (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  return x.out;
}

Outcome family_ok(Family f, const Scalar& p) {
  Expect x;
  try {
    build_family(f, p);
  } catch (const std::exception& e) {
    x(false, e.what());
  }
  return x.out;
}

Outcome compat(const Form& Phi, const SMat& g) {
  Expect x;
  auto r = verify_metric_compat(Phi, g, volume_form(g, 1));
  x(r.ok, r.witness);
  return x.out;
}

Outcome recovery(const Form& Phi, const SMat& ref) {
  Expect x;
  auto r = recover_metric(Phi);
  x(r.residual < 1e-9, "residual " + fmt(r.residual));
  double d = max_diff(r.g, ref);
  x(d < 1e-9, "distance to reference " + fmt(d));
  return x.out;
}

Outcome reduction(const CayleyForm& cf, const std::vector<int>& H, const Triple& s, int pos, int neg) {
  Expect x;
  auto r = reduce_from_cayley(cf, H, s);
  x(r.conformal < 1e-9, "conformal residual " + fmt(r.conformal));
  x(r.urbantke.selfdual_residual < 1e-9, "self-duality residual " + fmt(r.urbantke.selfdual_residual));
  bool sig = (r.urbantke.pos == pos && r.urbantke.neg == neg) || (r.urbantke.pos == neg && r.urbantke.neg == pos);
  x(sig, "signature " + std::to_string(r.urbantke.pos) + "," + std::to_string(r.urbantke.neg));
  if (r.triple.mode == TripleMode::Lorentzian) x(reality_check(r.triple).ok, "reality conditions fail");
  return x.out;
}

Outcome four_metric(const std::string& name, int pos, int neg) {
  Expect x;
  auto T = *builtin::triple(name);
  auto u = urbantke_metric(T);
  bool sig = (u.pos == pos && u.neg == neg) || (u.pos == neg && u.neg == pos);
  x(sig, name + " signature " + std::to_string(u.pos) + "," + std::to_string(u.neg));
  x(u.selfdual_residual < 1e-9, name + " self-duality residual " + fmt(u.selfdual_residual));
  return x.out;
}

std::vector<Spinor> pure_corpus() {
  std::vector<Spinor> seeds{psi_p(), conjugate(psi_p()), psi_p_split(), psi_plus(), psi_minus(), pair_p()};
  std::vector<Spinor> out = seeds;
  for (const auto& s : seeds)
    for (int a = 0; a < 8 && out.size() < 44; ++a)
      for (int b = a + 1; b < 8 && out.size() < 44; b += 3) out.push_back(gamma_apply(a, gamma_apply(b, s)));
  return out;
}

std::vector<Spinor> impure_corpus() {
  std::vector<Spinor> out{unit(Signature::Euclid), unit(Signature::Split), psi_L(),
                          build_family(Family::RiemannianComplexTau, Scalar(2)).seed};
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int k = 0; k < 4; ++k) {
    Vec v(8);
    for (auto& c : v) c = Scalar(d(rng));
    v[0] = Scalar(5);
    Spinor s = Spinor::plus(k % 2 ? Signature::Split : Signature::Euclid, v);
    // a split sample can land on the null cone
    while (bilinear(0, s, s).is_zero()) {
      v[0] += Scalar(1);
      s = Spinor::plus(s.sig, v);
    }
    out.push_back(s);
  }
  return out;
}

SMat random_frame(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> val(-1, 1);
  std::uniform_real_distribution<double> coin(0, 1);
  while (true) {
    SMat A = SMat::identity(8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (coin(rng) < 0.25) A(i, j) += Scalar(val(rng));
    if (!det(A).is_zero()) return A;
  }
}

std::vector<Check> make_checks() {
  std::vector<Check> c;
  auto add = [&](std::string n, std::string a, int k, std::function<Outcome(const SuiteContext&)> f) {
    c.push_back({std::move(n), std::move(a), k, std::move(f)});
  };

  add("clifford-relations-8-0", "Γ(ξ)Γ(ξ) = g_Φ(ξ,ξ)𝕀", 1, [](auto&) { return clifford(Signature::Euclid); });
  add("clifford-relations-4-4", "Ẽ₅,₆,₇ square to minus the identity", 1,
      [](auto&) { return clifford(Signature::Split); });

  add("cayley-plus-form", "Φ := ⟨𝕀, ΓΓΓΓ𝕀⟩ = e⁰∧φ − *φ", 2, [](const SuiteContext& ctx) {
    Expect x;
    Form phi = structure_3form(Algebra::O), sphi = structure_4form(Algebra::O);
    x.forms(ctx.cayley_plus(), wedge(e(0), phi) - sphi, "bilinear vs e0^phi - *phi");
    Form orient = Form::basis(7, {0, 1, 2, 3, 4, 5, 6});
    x.forms(to8(hodge(to7(phi), diag(std::vector<long>(7, 1)), orient)), sphi, "hodge of phi");
    return x.out;
  });
  add("cayley-plus-pinned-component", "(𝕀, E₁E₂E₃E₄𝕀)=−1", 2, [](const SuiteContext& ctx) {
    Expect x;
    x.eq(ctx.cayley_plus().coeff({1, 2, 3, 4}), Scalar(-1), "component 1234");
    x(bilinear(2, unit(Signature::Euclid), unit(Signature::Euclid)).is_zero(), "B2(1,1) nonzero");
    return x.out;
  });

  add("split-cayley-form", "but with the opposite sign in front of the terms", 3, [](auto&) {
    Expect x;
    Form phi = structure_3form(Algebra::Split), sphi = structure_4form(Algebra::Split);
    Spinor one = unit(Signature::Split);
    x.forms(bilinear(4, one, one), wedge(e(0), phi) - sphi, "bilinear vs e0^phi - *phi");
    Form orient = Form::basis(7, {0, 1, 2, 3, 4, 5, 6});
    x.forms(to8(hodge(to7(phi), diag({-1, -1, -1, -1, 1, 1, 1}), orient)), sphi, "hodge of split phi");
    x(bilinear(2, one, one).is_zero(), "B2(1,1) nonzero");
    return x.out;
  });

  add("complex-structure-form", "Φ = Re(Ω) − ½ω∧ω = e⁰∧C − *C", 4, [](const SuiteContext& ctx) {
    Expect x;
    auto d = structure_from_pure(psi_p());
    x.forms(d.omega, omega_std(), "omega");
    x.forms(d.Omega, Omega_std(), "Omega");
    x(d.J * d.J == Scalar(-1) * SMat::identity(8), "J^2 != -1");
    x.forms(d.Omega.real_part() - half() * wedge(d.omega, d.omega), ctx.cayley_plus(), "Re(Omega) - omega^2/2");
    return x.out;
  });
  add("complex-structure-split", "ω = e¹²+e³⁴+e⁵⁶+e⁷⁰", 4, [](auto&) {
    Expect x;
    auto d = structure_from_pure(psi_p_split());
    x.forms(d.omega, omega_split(), "omega");
    x.forms(d.Omega, Omega_split(), "Omega");
    x(d.J * d.J == Scalar(-1) * SMat::identity(8), "J^2 != -1");
    x.forms(d.Omega.real_part() - half() * wedge(d.omega, d.omega), bilinear(4, unit(Signature::Split), unit(Signature::Split)),
            "Re(Omega) - omega^2/2");
    return x.out;
  });
  add("paracomplex-structure", "Ω₊ = (e⁴+e⁰)(e¹+e⁵)(e²+e⁶)(e³+e⁷)", 4, [](auto&) {
    Expect x;
    auto d = structure_from_real_pair(psi_plus(), psi_minus());
    x.forms(d.Omega_plus, Omega_plus(), "Omega+");
    x.forms(d.Omega_minus, Omega_minus(), "Omega-");
    x.forms(d.omega_r, omega_r(), "omega_r");
    // the swap matrix acts on covectors
    SMat g = vector_metric(Signature::Split);
    x(g * d.K * g == K_matrix(), "K differs from the swap matrix");
    x.forms(half() * (d.Omega_plus + d.Omega_minus) + half() * wedge(d.omega_r, d.omega_r),
            bilinear(4, unit(Signature::Split), unit(Signature::Split)), "split real form");
    return x.out;
  });

  add("tau-family-t2", "cosh(2τ)Re(Ω) − ½ω∧ω + i sinh(2τ)Im(Ω)", 5, [](auto&) {
    Expect x;
    x.out = family_ok(Family::RiemannianComplexTau, Scalar(2));
    x.eq(cosh2(Scalar(2)), Scalar::frac(17, 8), "cosh 2tau");
    x.eq(sinh2(Scalar(2)), Scalar::frac(15, 8), "sinh 2tau");
    Spinor s = build_family(Family::RiemannianComplexTau, Scalar(2)).seed;
    x.eq(pairing(conjugate(s), s), Scalar::frac(17, 8), "<hat psi, psi>");
    Form tau = family_closed_form(Family::RiemannianComplexTau, Scalar(2));
    Form direct = Scalar::frac(17, 8) * Omega_std().real_part() - half() * wedge(omega_std(), omega_std()) +
                  (I * Scalar::frac(15, 8)) * Omega_std().imag_part();
    x.forms(tau, direct, "closed form with 17/8, 15/8");
    return x.out;
  });
  add("tau-family-degeneration", "When τ=0 the complex Cayley form becomes real", 5, [](const SuiteContext& ctx) {
    Expect x;
    Form f = build_family(Family::RiemannianComplexTau, Scalar(1)).Phi;
    x(f.is_real(), "t = 1 form not real");
    x.forms(f, ctx.cayley_plus(), "t = 1 form");
    x.out.pass = x.out.pass && family_ok(Family::SplitComplexTau, Scalar(2)).pass;
    return x.out;
  });

  add("theta-family-generic", "cos(2θ)½(Ω₊+Ω₋) + i sin(2θ)½(Ω₊−Ω₋) + ½ω_r∧ω_r", 6, [](auto&) {
    Expect x;
    x.out = family_ok(Family::SplitComplexTheta, theta_u());
    Scalar u2 = theta_u() * theta_u();
    x.eq(u2, Scalar(Q2(mpq_class(-7, 25)), Q2(mpq_class(24, 25))), "u^2");
    Form direct = Scalar::frac(-7, 50) * (Omega_plus() + Omega_minus()) +
                  (I * Scalar::frac(24, 50)) * (Omega_plus() - Omega_minus()) + half() * wedge(omega_r(), omega_r());
    x.forms(build_family(Family::SplitComplexTheta, theta_u()).Phi, direct, "closed form with -7/25, 24/25");
    Spinor s = build_family(Family::SplitComplexTheta, theta_u()).seed;
    x.eq(pairing(conjugate(s), s), Scalar::frac(-7, 25), "<hat psi, psi>");
    return x.out;
  });
  add("theta-family-degenerations", "coincides with the real split Cayley form", 6, [](auto&) {
    Expect x;
    Form split_real = half() * (Omega_plus() + Omega_minus()) + half() * wedge(omega_r(), omega_r());
    Form f0 = build_family(Family::SplitComplexTheta, Scalar(1)).Phi;
    x(f0.is_real(), "theta = 0 form not real");
    x.forms(f0, split_real, "theta = 0");
    x.forms(f0, bilinear(4, unit(Signature::Split), unit(Signature::Split)), "theta = 0 vs split real form");
    Form f1 = build_family(Family::SplitComplexTheta, I).Phi;
    x(f1.is_real(), "theta = pi/2 form not real");
    // same shape with both Omega+- flipped
    x.forms(f1, -half() * (Omega_plus() + Omega_minus()) + half() * wedge(omega_r(), omega_r()), "theta = pi/2");
    return x.out;
  });

  add("lorentzian-cayley", "(i/2)(Ω₊−Ω₋) + ½ω_r∧ω_r", 7, [](auto&) {
    Expect x;
    x.out = family_ok(Family::Lorentzian, Scalar(1));
    Spinor s = psi_L();
    x.eq(pairing(conjugate(s), s), Scalar(), "<hat psi_L, psi_L>");
    x(s == build_family(Family::SplitComplexTheta, Scalar(Q2(0, mpq_class(1, 2)), Q2(0, mpq_class(1, 2)))).seed,
      "psi_L is not the theta = pi/4 member");
    return x.out;
  });
  add("lorentzian-block-form", "Φ_L = i e⁰∧φ_L + *φ_L", 7, [](auto&) {
    Expect x;
    x.forms(build_family(Family::Lorentzian).Phi, I * wedge(e(0), phi_L()) + star_phi_L(), "block form");
    return x.out;
  });
  add("lorentzian-mixed-representation", "an alternative expression for the Lorentzian Cayley form", 7, [](auto&) {
    Expect x;
    auto m = mixed_representation_check();
    x(m.sum_ok, "psi_p + psi_p' != psi_L");
    x.eq(m.pairing, half(), "<psi_p', psi_p>");
    x.eq(m.real_index, 2, "real index of psi_p");
    x(m.Omega_c_ok, "Omega_c");
    x(m.Omega_c_prime_ok, "Omega_c'");
    x(m.omega_c_ok, "omega_c");
    x(m.identity_ok, "Phi_L = (Omega_c + Omega_c')/2 + omega_c^2/2");
    return x.out;
  });

  auto calib = [&](std::string n, std::string a, CalibTag t) {
    add(std::move(n), std::move(a), 8, [t](auto&) {
      Expect x;
      auto r = calibration_identity(t, Scalar(2));
      x.forms(r.built, r.family, "identity");
      return x.out;
    });
  };
  calib("calibration-riemannian", "Φ = −(1/6)ΣΣ − (1/6)Σ′Σ′ + ΣΣ′", CalibTag::Riemannian);
  calib("calibration-split-first", "the only difference … is the sign in front of the last term", CalibTag::SplitFirst);
  calib("calibration-split-second", "η_ij = diag(−1,−1,1) is the metric", CalibTag::SplitSecond);
  calib("calibration-lorentzian", "Φ_c = −(1/6)Σ_LΣ_L − (1/6)Σ′_LΣ′_L − Σ_LΣ′_L", CalibTag::Lorentzian);
  calib("calibration-tau", "in a basis adapted to its calibration", CalibTag::Tau);
  add("calibrated-planes", "Φ_L(ξ₁,ξ₂,ξ₃,ξ₄)=±i", 8, [](auto&) {
    Expect x;
    auto b = [](int k) { return basis_vec(8, k); };
    Scalar p(mpq_class(3, 5)), q(mpq_class(4, 5));
    auto R = build_family(Family::RiemannianReal);
    auto c1 = is_calibrated(R, {b(0), b(5), b(6), b(7)}, R.metric);
    x(c1.calibrated, "e0567 plane: value " + to_string(c1.value));
    auto c1b = is_calibrated(R, {vec8({{0, p}, {5, q}}), vec8({{0, -q}, {5, p}}), b(6), b(7)}, R.metric);
    x(c1b.calibrated && (c1b.value == c1.value || c1b.value == -c1.value), "second basis of e0567");
    auto T = build_family(Family::RiemannianComplexTau, Scalar(2));
    auto c2 = is_calibrated(T, {b(4), b(1), b(2), b(3)}, T.metric);
    x(c2.calibrated, "tau on e4123: value " + to_string(c2.value));
    auto L = build_family(Family::Lorentzian);
    auto c3 = is_calibrated(L, {b(4), b(5), b(6), b(7)}, L.metric);
    x(c3.calibrated && c3.constant == I, "Phi_L on e4567: value " + to_string(c3.value));
    auto c3b = is_calibrated(L, {b(4), vec8({{5, p}, {6, q}}), vec8({{5, -q}, {6, p}}), b(7)}, L.metric);
    x(c3b.calibrated && (c3b.value == c3.value || c3b.value == -c3.value), "second basis of e4567");
    auto c4 = is_calibrated(L, {b(2), b(3), b(6), b(7)}, L.metric);
    x(c4.calibrated && c4.constant == Scalar(1) && c4.plane.pos == 2, "Phi_L on e2367: value " + to_string(c4.value));
    return x.out;
  });

  const std::string va = "v_Φ is the volume form of the metric";
  add("metric-compat-cayley-plus", va, 9,
      [](const SuiteContext& ctx) { return compat(ctx.cayley_plus(), vector_metric(Signature::Euclid)); });
  add("metric-compat-split", va, 9, [](auto&) {
    return compat(build_family(Family::SplitReal).Phi, vector_metric(Signature::Split));
  });
  add("metric-compat-tau", va, 9, [](auto&) {
    return compat(build_family(Family::RiemannianComplexTau, Scalar(2)).Phi, vector_metric(Signature::Euclid));
  });
  add("metric-compat-theta", va, 9, [](auto&) {
    return compat(build_family(Family::SplitComplexTheta, theta_u()).Phi, vector_metric(Signature::Split));
  });
  add("metric-compat-lorentzian", va, 9, [](auto&) {
    return compat(build_family(Family::Lorentzian).Phi, vector_metric(Signature::Split));
  });
  add("metric-compat-wrong-scale", va, 9, [](const SuiteContext& ctx) {
    Expect x;
    SMat g = Scalar(2) * vector_metric(Signature::Euclid);
    auto r = verify_metric_compat(ctx.cayley_plus(), g, volume_form(g, 1));
    x(!r.ok && !r.witness.empty(), "2 delta accepted");
    return x.out;
  });

  const std::string ra = "the inner product defined by a Cayley form Φ can be explicitly extracted";
  add("metric-recovery-references", ra, 10, [](const SuiteContext& ctx) {
    Expect x;
    SMat d = vector_metric(Signature::Euclid), h = vector_metric(Signature::Split);
    std::vector<std::pair<Form, SMat>> cases{{ctx.cayley_plus(), d},
                                             {build_family(Family::SplitReal).Phi, h},
                                             {build_family(Family::RiemannianComplexTau, Scalar(2)).Phi, d},
                                             {build_family(Family::SplitComplexTheta, theta_u()).Phi, h},
                                             {build_family(Family::Lorentzian).Phi, h}};
    for (std::size_t k = 0; k < cases.size(); ++k) {
      Outcome o = recovery(cases[k].first, cases[k].second);
      x(o.pass, "case " + std::to_string(k) + ": " + o.witness);
    }
    return x.out;
  });
  add("metric-recovery-equivariance", ra, 10, [](const SuiteContext& ctx) {
    Expect x;
    std::mt19937_64 rng(2024);
    std::vector<std::pair<Form, SMat>> cases{{ctx.cayley_plus(), vector_metric(Signature::Euclid)},
                                             {build_family(Family::SplitReal).Phi, vector_metric(Signature::Split)},
                                             {build_family(Family::Lorentzian).Phi, vector_metric(Signature::Split)}};
    for (int t = 0; t < 5; ++t) {
      SMat A = random_frame(rng);
      for (std::size_t k = 0; k < cases.size(); ++k) {
        SMat want = A.transpose() * cases[k].second * A;
        try {
          auto r = recover_metric(pullback(A, cases[k].first));
          double d = std::min(max_diff(r.g, want, 1), max_diff(r.g, want, -1));
          x(r.residual < 1e-8 && d < 1e-8,
            "frame " + std::to_string(t) + " case " + std::to_string(k) + ": distance " + fmt(d));
        } catch (const std::exception& e) {
          x(false, "frame " + std::to_string(t) + " case " + std::to_string(k) + ": " + e.what());
        }
      }
    }
    return x.out;
  });

  const std::string sa = "there exists an orientation of V and the associated volume form";
  add("seven-metric-g2", sa, 11, [](auto&) {
    Expect x;
    auto m = metric_from_3form(to7(structure_3form(Algebra::O)));
    x(m.metric && *m.metric == diag(std::vector<long>(7, 1)), "metric is not delta_7");
    x(m.signature.pos == 7 && m.signature.neg == 0, "signature");
    return x.out;
  });
  add("seven-metric-split", sa, 11, [](auto&) {
    Expect x;
    auto m = metric_from_3form(to7(structure_3form(Algebra::Split)));
    x(m.metric && *m.metric == diag({-1, -1, -1, -1, 1, 1, 1}), "metric is not diag(-,-,-,-,+,+,+)");
    x(m.signature.pos == 3 && m.signature.neg == 4, "signature");
    return x.out;
  });

  add("orbit-dimension-cayley-plus", "64−21=43", 12, [](const SuiteContext& ctx) {
    Expect x;
    x.eq(orbit_dimension(ctx.cayley_plus()), 43, "orbit dimension");
    return x.out;
  });
  add("orbit-dimension-tau", "64−15=49", 12, [](auto&) {
    Expect x;
    x.eq(orbit_dimension(build_family(Family::RiemannianComplexTau, Scalar(2)).Phi), 49, "orbit dimension");
    return x.out;
  });
  add("orbit-dimension-lorentzian", "The dimension of this space is 64−15=49", 12, [](auto&) {
    Expect x;
    x.eq(orbit_dimension(build_family(Family::Lorentzian).Phi), 49, "orbit dimension");
    return x.out;
  });
  add("stabilizer-unit", "whose stabiliser in GL(8,ℝ) is Spin(7)", 12, [](auto&) {
    Expect x;
    x.eq(stabilizer_dim(unit(Signature::Euclid)), 21, "(8,0)");
    x.eq(stabilizer_dim(unit(Signature::Split)), 21, "(4,4)");
    return x.out;
  });
  add("stabilizer-tau", "The Spin(8) stabiliser of a complex unit spinor ψ_τ, τ≠0 is SU(4)", 12, [](auto&) {
    Expect x;
    x.eq(stabilizer_dim(build_family(Family::RiemannianComplexTau, Scalar(2)).seed), 15, "psi_tau");
    x.eq(stabilizer_dim(build_family(Family::SplitComplexTheta, theta_u()).seed), 15, "psi_theta");
    return x.out;
  });
  add("stabilizer-lorentzian", "which is Spin(3,3)=SL(4,ℝ)", 12, [](auto&) {
    Expect x;
    x.eq(stabilizer_dim(psi_L()), 15, "psi_L");
    return x.out;
  });
  add("fibre-dimension-riemannian", "the 7-dimensional space of unit spinors", 12, [](auto&) {
    Expect x;
    auto f = fibre_dimension_riemannian();
    x.eq(f.kernel, 7, "constraint kernel");
    x.eq(f.image, 7, "image in 4-forms");
    return x.out;
  });
  add("fibre-dimension-lorentzian", "dimension 16−2−1=13", 12, [](auto&) {
    Expect x;
    auto f = fibre_dimension_lorentzian();
    x.eq(f.kernel, 13, "constraint kernel");
    x.eq(f.image, 13, "image in 4-forms");
    return x.out;
  });

  add("pure-spinor-corpus", "for a pure spinor B₀(φ,φ)=0", 13, [](auto&) {
    Expect x;
    int n = 0;
    for (const auto& s : pure_corpus()) {
      bool b0 = bilinear(0, s, s).is_zero();
      int dim = annihilator(s).dim;
      x(b0 && is_pure(s) && dim == 4, "pure corpus member " + std::to_string(n));
      auto nsd = annihilator(s);
      SMat g = vector_metric(s.sig);
      x((nsd.basis.transpose() * g * nsd.basis).is_zero(), "annihilator not totally null, member " + std::to_string(n));
      ++n;
    }
    for (const auto& s : impure_corpus()) {
      x(!bilinear(0, s, s).is_zero() && !is_pure(s) && annihilator(s).dim == 0,
        "impure corpus member " + std::to_string(n));
      ++n;
    }
    return x.out;
  });
  add("annihilator-spans", "E⁺ = Span(e⁴+ie⁰, e¹+ie⁵, e²+ie⁶, e³+ie⁷)", 13, [](auto&) {
    Expect x;
    SMat a = columns({vec8({{4, 1}, {0, I}}), vec8({{1, 1}, {5, I}}), vec8({{2, 1}, {6, I}}), vec8({{3, 1}, {7, I}})});
    x(same_span(annihilator(psi_p()).basis, a), "M(psi_p)");
    SMat b = columns({vec8({{7, 1}, {0, I}}), vec8({{1, 1}, {2, -I}}), vec8({{3, 1}, {4, -I}}), vec8({{5, 1}, {6, I}})});
    x(same_span(annihilator(psi_p_split()).basis, b), "M(split psi_p)");
    x(same_span(conj(annihilator(psi_p()).basis), annihilator(conjugate(psi_p())).basis), "conj M(psi) != M(conj psi)");
    x.eq(span_dim(hcat(annihilator(psi_p()).basis, annihilator(conjugate(psi_p())).basis)), 8, "M + conj M");
    return x.out;
  });
  add("real-index-and-intersections", "these are pure spinors of real index two", 13, [](auto&) {
    Expect x;
    x.eq(real_index(psi_p_split()), 0, "split psi_p");
    x.eq(real_index(psi_plus()), 4, "psi_+");
    x.eq(real_index(pair_p()), 2, "psi_p of the real index two pair");
    x.eq(intersection_type(psi_p(), conjugate(psi_p())).common, 0, "psi_p and its conjugate");
    x.eq(intersection_type(psi_p(), Scalar(3) * psi_p()).common, 4, "proportional");
    // the two pieces of the real index two spinor
    Spinor a = half() * (unit(Signature::Split) + I * Spinor::plus_unit(Signature::Split, 7));
    Spinor b = (half() * I) * (Spinor::plus_unit(Signature::Split, 4) + I * Spinor::plus_unit(Signature::Split, 3));
    auto t = intersection_type(a, b);
    x.eq(t.common, 2, "pieces of psi_p");
    x.eq(intersection_dim(annihilator(a).basis, annihilator(b).basis), 2, "direct intersection");
    x(is_pure(a + b), "sum of intersecting pure spinors is impure");
    return x.out;
  });

  add("four-metric-euclidean", "It is the first of these two cases for which the metric arising … is Euclidean", 14,
      [](auto&) {
        Expect x;
        auto o = four_metric("sigma", 4, 0);
        x(o.pass, o.witness);
        o = four_metric("sigma-prime", 4, 0);
        x(o.pass, o.witness);
        return x.out;
      });
  add("four-metric-split", "The indefinite case gives the split signature metric", 14, [](auto&) {
    Expect x;
    auto o = four_metric("sigma-s", 2, 2);
    x(o.pass, o.witness);
    o = four_metric("sigma-s-prime", 2, 2);
    x(o.pass, o.witness);
    return x.out;
  });
  add("four-metric-lorentzian", "guarantee that the conformal metric … is real Lorentzian", 14, [](auto&) {
    Expect x;
    auto o = four_metric("sigma-L", 1, 3);
    x(o.pass, o.witness);
    o = four_metric("sigma-L-prime", 1, 3);
    x(o.pass, o.witness);
    return x.out;
  });
  add("reality-conditions", "These are nine reality conditions", 14, [](auto&) {
    Expect x;
    x(reality_check(*builtin::triple("sigma-L")).ok, "Sigma_L triple fails");
    auto r = reality_check(*builtin::triple("sigma"));
    x(!r.ok && r.i == 0 && r.j == 0, "real triple passes");
    auto T = *builtin::triple("sigma-L");
    T.B[1] = T.B[0].conj();
    x(!reality_check(T).ok, "triple with a conjugated member passes");
    auto R = *builtin::triple("sigma");
    R.mode = TripleMode::Lorentzian;
    bool threw = false;
    try {
      urbantke_metric(R);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    x(threw, "real triple accepted in lorentzian mode");
    return x.out;
  });

  const std::string da = "we get a triple of 2-forms B^i := σ^i⌟Φ|_{H⊥} on H^⊥";
  add("urbantke-reduction-cayley-plus", da, 15, [](const SuiteContext& ctx) {
    CayleyForm cf = build_family(Family::RiemannianReal);
    cf.Phi = ctx.cayley_plus();
    return reduction(cf, {4, 1, 2, 3}, Sigma(), 4, 0);
  });
  add("urbantke-reduction-split", da, 15,
      [](auto&) { return reduction(build_family(Family::SplitReal), {3, 4, 5, 6}, Sigma_s(), 2, 2); });
  add("urbantke-reduction-lorentzian", da, 15,
      [](auto&) { return reduction(build_family(Family::Lorentzian), {0, 1, 2, 3}, Sigma_L_prime(), 1, 3); });

  add("appendix-eigenspace-bilinears", "we list the following results, obtained by explicit computation", 16,
      [](auto&) {
        Expect x;
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> d(-4, 4);
        Spinor one = unit(Signature::Split), e4 = Spinor::plus_unit(Signature::Split, 4);
        x.forms(eigenspace_bilinear(true, one + e4), Omega_plus(), "psi+ with 1 + e4");
        x.forms(eigenspace_bilinear(false, one - e4), Omega_minus(), "psi- with 1 - e4");
        x.forms(eigenspace_bilinear(true, one - e4), half() * wedge(omega_r(), omega_r()), "psi+ with 1 - e4");
        for (int t = 0; t < 6; ++t)
          for (int s : {1, -1}) {
            Vec v(8);
            v[0] = Scalar(d(rng));
            v[4] = Scalar(s) * v[0];
            for (int k = 1; k < 4; ++k) {
              v[k] = Scalar(d(rng));
              v[k + 4] = Scalar(s) * v[k];
            }
            Spinor X = Spinor::plus(Signature::Split, v);
            for (bool p : {true, false})
              x.forms(eigenspace_bilinear(p, X), eigenspace_closed(p, X),
                      std::string("sample ") + std::to_string(t) + (p ? " psi+" : " psi-") + (s > 0 ? " even" : " odd"));
          }
        return x.out;
      });
  add("appendix-delta-phi", "variation of the Cayley form in the remaining tangent directions spanned by", 16,
      [](auto&) {
        Expect x;
        LorentzPerturbation a1;
        a1.a = Scalar(1);
        x.forms(lorentzian_tangent_bilinear(a1), I * (Omega_plus() + Omega_minus()), "a = 1");
        std::mt19937_64 rng(13);
        std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
        std::vector<LorentzPerturbation> grid;
        for (int k = 0; k < 13; ++k) grid.push_back(unit_perturbation(k));
        for (int t = 0; t < 24; ++t) {
          LorentzPerturbation p;
          p.a = Scalar::frac(num(rng), den(rng));
          for (auto& v : p.xi) v = Scalar::frac(num(rng), den(rng));
          for (auto& v : p.eta) v = Scalar::frac(num(rng), den(rng));
          grid.push_back(p);
        }
        for (std::size_t k = 0; k < grid.size(); ++k) {
          Form b = lorentzian_tangent_bilinear(grid[k]);
          x.forms(b, lorentzian_tangent_closed(grid[k]), "grid point " + std::to_string(k));
          x(decompose_wrt_K(b).resums, "re-summation at grid point " + std::to_string(k));
        }
        return x.out;
      });
  add("appendix-decomposition", "decomposes into the following irreducible components", 16, [](auto&) {
    Expect x;
    auto s = sweep_dimensions();
    x.eq(s.total, 13, "tangent dimension");
    x.eq(s.re, 12, "real part dimension");
    x.eq(s.im, 13, "imaginary part dimension");
    x(s.re20 == 6 && s.re02 == 6 && s.im20 == 6 && s.im02 == 6 && s.im_r == 1, "block dimensions");
    x(s.bijection, "matched parametrization is not invertible");
    auto d0 = decompose_wrt_K(lorentzian_tangent_bilinear(unit_perturbation(0)));
    x(d0.re20.is_zero() && d0.re02.is_zero() && d0.re_r.is_zero() && d0.im20.is_zero() && d0.im02.is_zero() &&
          !d0.im_r.is_zero(),
      "a = 1 is not purely radial imaginary");
    for (int k = 1; k < 13; ++k) {
      auto d = decompose_wrt_K(lorentzian_tangent_bilinear(unit_perturbation(k)));
      for (const Form* f : {&d.re20, &d.im20})
        if (!f->is_zero()) x(k_leg_types(*f) == std::set<std::pair<int, int>>{{3, 1}}, "2,0 block leg type");
      for (const Form* f : {&d.re02, &d.im02})
        if (!f->is_zero()) x(k_leg_types(*f) == std::set<std::pair<int, int>>{{1, 3}}, "0,2 block leg type");
    }
    x(k_leg_types(Omega_plus() + Omega_minus()) == std::set<std::pair<int, int>>{{4, 0}, {0, 4}}, "radial leg type");
    return x.out;
  });
  add("appendix-transversality", "𝔰𝔩(4,ℝ)^⊥ = Λ^{2,0} ⊕ Λ^{0,2} ⊕ ℝ", 16, [](auto&) {
    Expect x;
    Form L = build_family(Family::Lorentzian).Phi;
    std::vector<Mask> slots;
    for (Mask m = 0; m < 256; ++m)
      if (popcount(m) == 4) slots.push_back(m);
    SMat fib(70, 13), orb(70, 28);
    for (int k = 0; k < 13; ++k) {
      Form d = lorentzian_tangent_bilinear(unit_perturbation(k));
      x(compat_first_order(L, d).is_zero(), "metric moves along direction " + std::to_string(k));
      for (int s = 0; s < 70; ++s) fib(s, k) = d.coeff(slots[s]);
    }
    const auto& gens = spin_generators(Signature::Split);
    for (int k = 0; k < 28; ++k) {
      Form d = lie_act(gens.vector[k], L);
      for (int s = 0; s < 70; ++s) orb(s, k) = d.coeff(slots[s]);
    }
    QMat rf = realify_rows(fib), ro = realify_rows(orb);
    int inter = static_cast<int>(rank(rf) + rank(ro)) - static_cast<int>(rank(hcat(rf, ro)));
    x.eq(inter, 13, "so(4,4) orbit directions inside the fibre");
    return x.out;
  });

  add("fibre-closed-form", "gives an explicit description of the 4-forms of the Cayley algebraic type", 17,
      [](const SuiteContext& ctx) {
        Expect x;
        Vec a(7);
        a[0] = Scalar::frac(3, 5);
        Spinor s = fibre_spinor(a, Scalar::frac(4, 5));
        x.forms(closed_form_fibre(a, Scalar::frac(4, 5)), bilinear(4, s, s), "alpha = 3/5 e1");
        x.forms(closed_form_fibre(Vec(7), Scalar(1)), ctx.cayley_plus(), "alpha = 0");
        Vec b(7);
        b[1] = Scalar::frac(2, 7);
        b[2] = Scalar::frac(3, 7);
        b[5] = Scalar::frac(-6, 7);
        bool threw = false;
        try {
          closed_form_fibre(b, Scalar());
        } catch (const std::invalid_argument&) {
          threw = true;
        }
        x(threw, "|alpha| = 1 accepted");
        Vec c(7);
        c[1] = Scalar::frac(8, 9);
        c[3] = Scalar::frac(2, 9);
        c[6] = Scalar::frac(-2, 9);
        Spinor t = fibre_spinor(c, Scalar::frac(1, 3));
        x.forms(closed_form_fibre(c, Scalar::frac(1, 3)), bilinear(4, t, t), "alpha on e2, e4, e7");
        return x.out;
      });
  add("fibre-first-order", "tangent space to the space of such 4-forms", 17, [](const SuiteContext& ctx) {
    Expect x;
    SMat m(70, 7);
    std::vector<Mask> slots;
    for (Mask s = 0; s < 256; ++s)
      if (popcount(s) == 4) slots.push_back(s);
    for (int k = 0; k < 7; ++k) {
      Vec Y(7), Y2(7);
      Y[k] = Scalar(1);
      Y2[k] = Scalar(2);
      Form d = riemannian_fibre_tangent(Y, ctx.cayley_plus());
      x.forms(fibre_first_order(Y), riemannian_fibre_tangent(Y2, ctx.cayley_plus()), "Y = e" + std::to_string(k + 1));
      for (int s = 0; s < 70; ++s) m(s, k) = d.coeff(slots[s]);
    }
    x.eq(static_cast<int>(rank(m)), 7, "rank of Y -> dPhi");
    return x.out;
  });

  add("form-roundtrip", "invented — artifact plumbing", 18, [](auto&) {
    Expect x;
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 8), terms(0, 12);
    for (int k = 0; k < 50; ++k) {
      int n = dim(rng);
      std::uniform_int_distribution<int> gr(0, n);
      Form f = random_form(rng, n, gr(rng), terms(rng));
      std::string text = serialize_form(f);
      Form g = parse_form(text);
      x(g == f && serialize_form(g) == text, "document " + std::to_string(k));
    }
    Spinor s = psi_L();
    x(parse_spinor(serialize_spinor(s)) == s, "spinor round trip");
    SMat g = vector_metric(Signature::Split);
    x(parse_metric(serialize_metric(g)) == g, "metric round trip");
    try {
      parse_form("form dim=4 grade=2\n[1,0,0,0] e0^e1\n[1,0,0] e2^e3\n");
      x(false, "malformed document accepted");
    } catch (const ParseError& e) {
      x(e.line == 3 && e.col == 7, std::string("error position: ") + e.what());
    }
    return x.out;
  });

  return c;
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> c = make_checks();
  return c;
}

SuiteReport run_suite(const SuiteOptions& opt) {
  SuiteContext ctx(opt);
  SuiteReport rep;
  for (const auto& chk : all_checks()) {
    if (!opt.filter.empty() && chk.name.find(opt.filter) == std::string::npos) continue;
    CheckRecord r{chk.name, chk.anchor, chk.criterion, false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = chk.run(ctx);
      r.pass = o.pass;
      r.witness = o.witness;
    } catch (const std::exception& e) {
      r.pass = false;
      r.witness = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    if (opt.timings) r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rep.records.push_back(std::move(r));
  }
  return rep;
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.records) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << "  [" << c.anchor << "]";
    if (c.ms) os << "  " << c.ms << " ms";
    os << "\n";
    if (!c.pass) os << "     witness: " << c.witness << "\n";
  }
  os << r.passed() << " passed, " << r.failed() << " failed\n";
  return os.str();
}

std::string report_json(const SuiteReport& r) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : r.records) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    o["anchor"] = c.anchor;
    o["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) o["witness"] = c.witness;
    o["ms"] = c.ms;
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

}  // namespace cayley
