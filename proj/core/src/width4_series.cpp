#include <stdexcept>

#include "latcap/series.hpp"
#include "series_solver.hpp"

namespace latcap {

namespace {

Monomial mono(int c, int ex, int et = 0, int es = 0, int eu = 0, int ev = 0) {
  return Monomial{c, ex, {et, es, eu, ev}};
}

Monomial mmul(const Monomial& a, const Monomial& b) {
  return Monomial{a.coef * b.coef,
                  a.ex + b.ex,
                  {a.ev[0] + b.ev[0], a.ev[1] + b.ev[1], a.ev[2] + b.ev[2],
                   a.ev[3] + b.ev[3]}};
}

Monomial mneg(Monomial m) {
  m.coef = -m.coef;
  return m;
}

Monomial var_mono(Var w) {
  Monomial m;
  m.ev[int(w)] = 1;
  return m;
}

// substituted arguments of the width-4 shape polynomial:
// (x/t, x^2 t^2/s, x^2 s^2/(t u), x^2 u^2/s, x/u)
const Monomial a1 = mono(1, 1, -1, 0, 0);
const Monomial a2 = mono(1, 2, 2, -1, 0);
const Monomial a3 = mono(1, 2, -1, 2, -1);
const Monomial a4 = mono(1, 2, 0, -1, 2);
const Monomial a5 = mono(1, 1, 0, 0, -1);

} // namespace

LaurentSeries width4_q(int N) {
  return series_of({mono(1, 0), mneg(a1), mneg(a2), mneg(a3), mneg(a4), mneg(a5),
                    mmul(a1, a3), mmul(a1, a4), mmul(a1, a5), mmul(a2, a4), mmul(a2, a5),
                    mmul(a3, a5), mneg(mmul(mmul(a1, a3), a5))},
                   N);
}

LaurentSeries width4_p(int N) { return series_of({mono(1, 0), mneg(a4), mneg(a5)}, N); }

LaurentSeries width4_r(int N) {
  return series_of({mono(1, 0), mneg(a1), mneg(a5), mmul(a1, a5)}, N);
}

// ============================================================
//  Order-by-order solution of the width-4 system
// ============================================================

SeriesFamily solve_width4(int N) {
  if (N < 2) throw std::invalid_argument("solve_width4: order too small");
  using solver::Node;
  using solver::Stream;
  using solver::Term;

  const int kmin = -3;
  LaurentSeries q = width4_q(N);
  LaurentSeries p_su = width4_p(N);
  LaurentSeries p_st = substitute_monomial(p_su, {{Var::u, var_mono(Var::t)}});
  LaurentSeries r = width4_r(N);
  LaurentSeries one = series_monomial(mono(1, 0), N);
  LaurentSeries geom_t = series_geom(Var::t, N);
  LaurentSeries geom_u = series_geom(Var::u, N);

  auto xm = [N](int c, int ex, int et = 0, int es = 0, int eu = 0) {
    return series_monomial(mono(c, ex, et, es, eu), N);
  };

  Stream f(kmin), g1(kmin), g2(kmin), h1(kmin), h2(kmin), h3(kmin), j1(kmin);

  Stream cf_t_f = solver::extract_stream(f, {{Var::t, -1}}, kmin);
  Stream cf_s_f = solver::extract_stream(f, {{Var::s, -1}}, kmin);
  Stream cf_tu_f = solver::extract_stream(f, {{Var::t, -1}, {Var::u, -1}}, kmin);
  Stream g1_st = solver::rename_stream(g1, {{Var::u, var_mono(Var::t)}}, kmin);
  Stream cf_t_g1st = solver::extract_stream(g1_st, {{Var::t, -1}}, kmin);
  Stream cf_s_g1 = solver::extract_stream(g1, {{Var::s, -1}}, kmin);
  Stream cf_u_g1 = solver::extract_stream(g1, {{Var::u, -1}}, kmin);
  Stream cf_t_g2 = solver::extract_stream(g2, {{Var::t, -1}}, kmin);
  Stream h2_t = solver::rename_stream(h2, {{Var::u, var_mono(Var::t)}}, kmin);
  Stream cf_u_h2 = solver::extract_stream(h2, {{Var::u, -1}}, kmin);

  std::vector<Node> nodes;
  // f q = x t p(s,u) g1(s,u) + x s r g2(t,u) + x u p(s,t) g1(s,t) - (x^2 t u/s) h3(s)
  nodes.push_back(Node{&f,
                       q,
                       {Term{series_mul(xm(1, 1, 1), p_su), &g1},
                        Term{series_mul(xm(1, 1, 0, 1), r), &g2},
                        Term{series_mul(xm(1, 1, 0, 0, 1), p_st), &g1_st},
                        Term{xm(-1, 2, 1, -1, 1), &h3}},
                       series_zero(N)});
  // g1 p = (x/s) p cf_t f - (x^2 u/s) cf_t g1(s,t) + (x(u-x)/u) h1 + (x u/s) h3
  nodes.push_back(Node{&g1,
                       p_su,
                       {Term{series_mul(xm(1, 1, 0, -1), p_su), &cf_t_f},
                        Term{xm(-1, 2, 0, -1, 1), &cf_t_g1st},
                        Term{series_of({mono(1, 1), mono(-1, 2, 0, 0, -1)}, N), &h1},
                        Term{xm(1, 1, 0, -1, 1), &h3}},
                       series_zero(N)});
  // g2 = (x/(t u)) cf_s f + (x t/(t-x)) h2(u) + (x u/(u-x)) h2(t)
  nodes.push_back(Node{&g2,
                       one,
                       {Term{xm(1, 1, -1, 0, -1), &cf_s_f},
                        Term{series_mul(xm(1, 1), geom_t), &h2},
                        Term{series_mul(xm(1, 1), geom_u), &h2_t}},
                       series_zero(N)});
  // h1 = x cf_t g2 + u/(x^3 (u-x))
  nodes.push_back(Node{&h1,
                       one,
                       {Term{xm(1, 1), &cf_t_g2}},
                       series_shift_x(series_geom(Var::u, N + 3), -3)});
  // h2 = (x/u) cf_s g1
  nodes.push_back(Node{&h2, one, {Term{xm(1, 1, 0, 0, -1), &cf_s_g1}}, series_zero(N)});
  // h3 = 2x cf_u g1 - (x^2/s) cf_t cf_u f
  nodes.push_back(Node{&h3,
                       one,
                       {Term{xm(2, 1), &cf_u_g1}, Term{xm(-1, 2, 0, -1), &cf_tu_f}},
                       series_zero(N)});
  // j1 = x cf_u h2
  nodes.push_back(Node{&j1, one, {Term{xm(1, 1), &cf_u_h2}}, series_zero(N)});

  std::vector<Stream*> streams = {&f,        &g1,       &g2,      &h1,      &h2,   &h3,
                                  &j1,       &cf_t_f,   &cf_s_f,  &cf_tu_f, &g1_st,
                                  &cf_t_g1st, &cf_s_g1, &cf_u_g1, &cf_t_g2, &h2_t, &cf_u_h2};
  solver::run(nodes, streams, kmin, N);

  SeriesFamily fam;
  fam.width = 4;
  fam.lambda = 0;
  fam.trunc = N;
  fam.members = {{"f", f.s},   {"g1", g1.s}, {"g2", g2.s}, {"h1", h1.s},
                 {"h2", h2.s}, {"h3", h3.s}, {"j1", j1.s}};
  return fam;
}

std::vector<BigCount> width4_J_coeffs(const SeriesFamily& fam) {
  if (fam.width != 4) throw std::invalid_argument("width4_J_coeffs: wrong family");
  LaurentSeries m = series_shift_x(fam.member("j1"), 4);
  std::vector<BigCount> J(std::size_t(m.trunc / 4) + 1);
  for (const auto& [xe, poly] : m.cx) {
    if (xe < 0 || xe % 4 != 0 || poly.size() != 1 || poly.begin()->first != kKeyOne)
      throw std::logic_error("width4_J_coeffs: unexpected shape of j1");
    if (xe / 4 < int(J.size())) J[std::size_t(xe / 4)] = poly.begin()->second;
  }
  return J;
}

// ============================================================
//  Kernels
// ============================================================

namespace {

struct W4Kernels {
  LaurentSeries q, p_su, p_st, r, inv_q, inv_p;
  LaurentSeries phi1, phi2, phi3, psi1, psi2, psi3;
  LaurentSeries one, geom_t, geom_u;
};

W4Kernels make_w4_kernels(int N) {
  W4Kernels k;
  k.q = width4_q(N);
  k.p_su = width4_p(N);
  k.p_st = substitute_monomial(k.p_su, {{Var::u, var_mono(Var::t)}});
  k.r = width4_r(N);
  k.one = series_monomial(mono(1, 0), N);
  k.geom_t = series_geom(Var::t, N);
  k.geom_u = series_geom(Var::u, N);
  k.inv_q = series_inverse(k.q);
  k.inv_p = series_inverse(k.p_su);
  k.phi1 = cf_extract(series_mul(series_monomial(mono(1, 0, 1), N), k.inv_q), Var::t, -1);
  k.phi2 = cf_extract(series_mul(series_monomial(mono(1, 0, 0, 1), N), k.inv_q), Var::s, -1);
  k.phi3 = cf_extract(
      cf_extract(series_mul(series_monomial(mono(1, 0, 1, 0, 1), N), k.inv_q), Var::t, -1),
      Var::u, -1);
  k.psi1 = series_sub(
      k.one, series_mul(series_monomial(mono(1, 2, 0, -1), N), series_mul(k.p_su, k.phi1)));
  k.psi2 = series_sub(
      k.one, series_mul(series_monomial(mono(1, 2, -1, 0, -1), N), series_mul(k.r, k.phi2)));
  k.psi3 = series_sub(k.one,
                      series_mul(series_monomial(mono(1, 4, 0, -2), N), k.phi3));
  return k;
}

} // namespace

LaurentSeries width4_phi(int k, int N) {
  W4Kernels kk = make_w4_kernels(N);
  switch (k) {
    case 1: return kk.phi1;
    case 2: return kk.phi2;
    case 3: return kk.phi3;
  }
  throw std::invalid_argument("width4_phi: k must be 1, 2, or 3");
}

LaurentSeries width4_psi(int k, int N) {
  W4Kernels kk = make_w4_kernels(N);
  switch (k) {
    case 1: return kk.psi1;
    case 2: return kk.psi2;
    case 3: return kk.psi3;
  }
  throw std::invalid_argument("width4_psi: k must be 1, 2, or 3");
}

// ============================================================
//  Identity residuals
// ============================================================

namespace {

LaurentSeries w4_residual(const SeriesFamily& fam, const W4Kernels& k, const std::string& id) {
  int N = fam.trunc;
  auto xm = [N](int c, int ex, int et = 0, int es = 0, int eu = 0) {
    return series_monomial(mono(c, ex, et, es, eu), N);
  };
  const LaurentSeries& g1 = fam.member("g1");
  const LaurentSeries& g2 = fam.member("g2");
  const LaurentSeries& h3 = fam.member("h3");
  LaurentSeries g1_st = substitute_monomial(g1, {{Var::u, var_mono(Var::t)}});

  if (id == "t4.g1") {
    LaurentSeries lhs = series_mul(k.psi1, g1);
    LaurentSeries inner1 = series_sub(series_mul(k.p_st, k.inv_q), k.inv_p);
    LaurentSeries rhs = series_mul(
        xm(1, 2, 0, -1, 1), cf_extract(series_mul(inner1, g1_st), Var::t, -1));
    LaurentSeries inner2 = series_add(
        series_mul(series_of({mono(1, 0), mono(-1, 1, -1)}, N), k.inv_q), k.inv_p);
    rhs = series_add(rhs,
                     series_mul(series_of({mono(1, 2), mono(-1, 3, 0, 0, -1)}, N),
                                cf_extract(series_mul(inner2, g2), Var::t, -1)));
    rhs = series_add(
        rhs, series_mul(series_mul(xm(1, 1, 0, -1, 1), series_mul(k.psi1, k.inv_p)), h3));
    rhs = series_add(rhs, series_shift_x(k.inv_p, -2));
    return series_sub(lhs, rhs);
  }
  if (id == "t4.g2") {
    LaurentSeries lhs = series_mul(k.psi2, g2);
    LaurentSeries rhs = series_mul(
        xm(1, 2, 0, 0, -1),
        cf_extract(series_mul(series_add(series_mul(k.p_su, k.inv_q), k.geom_t), g1),
                   Var::s, -1));
    rhs = series_add(
        rhs, series_mul(xm(1, 2, -1),
                        cf_extract(series_mul(
                                       series_add(series_mul(k.p_st, k.inv_q), k.geom_u),
                                       g1_st),
                                   Var::s, -1)));
    rhs = series_sub(
        rhs, cf_extract(series_mul(series_mul(xm(1, 3, 0, -1), k.inv_q), h3), Var::s, -1));
    return series_sub(lhs, rhs);
  }
  if (id == "t4.h3") {
    LaurentSeries lhs = series_mul(k.psi3, h3);
    LaurentSeries rhs =
        series_mul(xm(2, 1), cf_extract(series_mul(k.psi1, g1), Var::u, -1));
    rhs = series_sub(
        rhs,
        series_mul(xm(1, 3),
                   cf_extract(cf_extract(series_mul(series_mul(k.r, k.inv_q), g2),
                                         Var::t, -1),
                              Var::u, -1)));
    return series_sub(lhs, rhs);
  }
  if (id == "t4.j1") {
    LaurentSeries rhs = series_mul(
        xm(1, 2),
        cf_extract(cf_extract(series_mul(g1, xm(1, 0, 0, 0, -1)), Var::s, -1), Var::u, -1));
    return series_sub(fam.member("j1"), rhs);
  }
  throw std::invalid_argument("verify_identity: unknown id " + id);
}

} // namespace

std::vector<std::string> identity_catalog(int width) {
  if (width == 4) return {"t4.g1", "t4.g2", "t4.h3", "t4.j1"};
  if (width == 5)
    return {"t5.h3",   "t5.g1-1", "t5.g2-1",  "t5.h4-1", "t5.h5-1",
            "t5.j2-1", "t5.l12-1", "eq.phi0", "eq.L2",   "rem.phi0"};
  throw std::invalid_argument("identity_catalog: width must be 4 or 5");
}

// defined in width5_series.cpp
LaurentSeries w5_verify(const SeriesFamily& fam, const std::string& id);
std::map<std::string, LaurentSeries> w5_verify_all(const SeriesFamily& fam);

LaurentSeries verify_identity(const SeriesFamily& fam, const std::string& id) {
  if (fam.width == 4) return w4_residual(fam, make_w4_kernels(fam.trunc), id);
  return w5_verify(fam, id);
}

std::map<std::string, LaurentSeries> verify_identities(const SeriesFamily& fam) {
  std::map<std::string, LaurentSeries> out;
  if (fam.width == 4) {
    W4Kernels k = make_w4_kernels(fam.trunc);
    for (const std::string& id : identity_catalog(4)) out.emplace(id, w4_residual(fam, k, id));
    return out;
  }
  return w5_verify_all(fam);
}

} // namespace latcap
