#include "cuspidal/radon.hpp"

#include "cuspidal/geometry.hpp"
#include "cuspidal/quadrature.hpp"
#include "cuspidal/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

namespace cuspidal {

std::string_view to_string(Substitution s) {
  switch (s) {
    case Substitution::Auto: return "auto";
    case Substitution::Direct: return "direct";
    case Substitution::CompactifyTan: return "compactify_tan";
    case Substitution::SubstA: return "subst_a";
    case Substitution::SubstB_zz: return "subst_b_zz";
    case Substitution::SubstB_uv: return "subst_b_uv";
  }
  return "?";
}

Substitution parse_substitution(std::string_view name) {
  for (auto s : {Substitution::Auto, Substitution::Direct, Substitution::CompactifyTan, Substitution::SubstA,
                 Substitution::SubstB_zz, Substitution::SubstB_uv}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown substitution '" + std::string(name) + "'");
}

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be >= 1");
  if (!(truncation_margin > 0.0)) throw std::invalid_argument("truncation_margin must be positive");
}

QuadratureFailure::QuadratureFailure(const std::string& what, RadonSample best)
    : std::runtime_error(what), best_(best) {}

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

// A variable t in [lo, hi] mapped to a physical coordinate z(t) with Jacobian dz/dt.
// `offset` is z minus the natural origin of the coordinate, kept separately where the
// subtraction would cancel.
struct Node {
  double z;
  double offset;
  double jac;
};

struct Piece {
  double lo;
  double hi;
  std::function<Node(double)> map;
};

Piece linear(double a, double b, double origin = 0.0) {
  return {a, b, [origin](double t) { return Node{t, t - origin, 1.0}; }};
}

// z = centre + L sinh(tan t): power-law tails in z become exponentially small near
// t = pi/2. Beyond tan t = kTanCap the map is cut off (z ~ L e^{150}).
constexpr double kTanCap = 150.0;

Node sinh_tan(double centre, double L, double origin, double t) {
  const double u = std::tan(t);
  if (u > kTanCap) return Node{centre + L * std::sinh(kTanCap), centre + L * std::sinh(kTanCap) - origin, 0.0};
  const double c = std::cos(t);
  const double z = centre + L * std::sinh(u);
  return Node{z, z - origin, L * std::cosh(u) / (c * c)};
}

// z in [0, inf) with scale L.
Piece tan_full(double L) {
  return {0.0, kHalfPi, [L](double t) { return sinh_tan(0.0, L, 0.0, t); }};
}

// z in [start, inf), concentrated around `centre` with scale L; offset is measured from `origin`.
Piece tan_tail(double centre, double L, double start, double origin) {
  return {std::atan(std::asinh((start - centre) / L)), kHalfPi,
          [=](double t) { return sinh_tan(centre, L, origin, t); }};
}

// z = origin + t^2 on [origin, origin + d]; removes a square-root endpoint singularity.
Piece sqrt_head(double origin, double d) {
  return {0.0, std::sqrt(d), [origin](double t) { return Node{origin + t * t, t * t, 2.0 * t}; }};
}

// [a, b] cut at a + 2^k so that a plain rule on each piece sees the mass near a.
std::vector<Piece> dyadic(double a, double b) {
  std::vector<Piece> pieces;
  double lo = a;
  for (double step = 1.0; lo < b; step *= 2.0) {
    const double hi = std::min(b, a + step);
    pieces.push_back(linear(lo, hi));
    lo = hi;
  }
  return pieces;
}

struct Accumulator {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;

  void add(const quad::Result& r) {
    value += r.value;
    error += r.error;
    l1 += r.l1;
    converged = converged && r.converged;
  }
};

double pieces_length(const std::vector<Piece>& pieces) {
  double total = 0.0;
  for (const auto& p : pieces) total += std::abs(p.hi - p.lo);
  return total;
}

// Real integrand in physical coordinates: outer node, inner node -> value (Jacobians excluded).
using Kernel2 = std::function<double(const Node&, const Node&)>;
using Kernel1 = std::function<double(const Node&)>;
using InnerPieces = std::function<std::vector<Piece>(const Node&)>;

Accumulator integrate_1d(const std::vector<Piece>& pieces, const Kernel1& kernel, const quad::Tolerance& tol) {
  Accumulator acc;
  quad::Tolerance piece_tol = tol;
  piece_tol.abs = tol.abs / static_cast<double>(pieces.size());
  for (const auto& piece : pieces) {
    auto r = quad::integrate(
        [&](double t) {
          const Node n = piece.map(t);
          if (n.jac == 0.0) return 0.0;
          ++acc.evaluations;
          return kernel(n) * n.jac;
        },
        piece.lo, piece.hi, piece_tol);
    acc.add(r);
  }
  return acc;
}

Accumulator integrate_2d(const std::vector<Piece>& outer, const InnerPieces& inner_of, const Kernel2& kernel,
                         const quad::Tolerance& tol) {
  Accumulator acc;
  quad::Tolerance outer_tol = tol;
  outer_tol.abs = tol.abs / static_cast<double>(outer.size());
  quad::Tolerance inner_tol = tol;
  inner_tol.rel = tol.rel / 4.0;
  inner_tol.abs = tol.abs / (4.0 * std::max(1.0, pieces_length(outer)));
  for (const auto& piece : outer) {
    auto r = quad::integrate(
        quad::Integrand([&](double t) {
          const Node o = piece.map(t);
          quad::Estimate e;
          if (o.jac == 0.0) return e;
          const auto inner = inner_of(o);
          // The outer Jacobian multiplies the inner result, so the inner absolute
          // tolerance is divided by it.
          quad::Tolerance tol_i = inner_tol;
          tol_i.abs = inner_tol.abs / (static_cast<double>(inner.size()) * std::abs(o.jac));
          for (const auto& ip : inner) {
            auto ri = quad::integrate(
                [&](double u) {
                  const Node n = ip.map(u);
                  if (n.jac == 0.0) return 0.0;
                  ++acc.evaluations;
                  return kernel(o, n) * n.jac;
                },
                ip.lo, ip.hi, tol_i);
            acc.converged = acc.converged && ri.converged;
            e.value += ri.value;
            e.error += ri.error;
          }
          e.value *= o.jac;
          e.error *= std::abs(o.jac);
          return e;
        }),
        piece.lo, piece.hi, outer_tol);
    acc.add(r);
  }
  return acc;
}

// f at the point with cosh t * cos theta = cnum, cosh t * |sin theta| = snum, cosh^2 t = w.
// For q == 1 the two signs of sin theta are averaged.
std::complex<double> f_value(const GeneratingFunction& f, double cnum, double snum, double w) {
  if (!std::isfinite(w)) return 0.0;
  const double r = std::sqrt(w);
  const double c = cnum / r;
  const double sn = snum / r;
  if (f.space().q == 1) return 0.5 * (f.at({c, sn, w}) + f.at({c, -sn, w}));
  return f.at({c, sn, w});
}

double pow_measure(double z, int exponent) { return exponent == 0 ? 1.0 : std::pow(z, exponent); }

// fv * m, where far out in the tails m may overflow while fv has already underflowed.
std::complex<double> weigh(std::complex<double> fv, double m) {
  if (fv == 0.0) return 0.0;
  const std::complex<double> r = fv * m;
  if ((!std::isfinite(r.real()) || !std::isfinite(r.imag())) && std::abs(fv) < 1e-100) return 0.0;
  return r;
}

// One concrete substitution: how to lay out the pieces and evaluate the integrand.
struct Layout {
  bool two_d = true;
  std::vector<Piece> outer;
  InnerPieces inner;
  // Complex integrand; the real and imaginary parts are integrated separately.
  std::function<std::complex<double>(const Node& o, const Node& i)> integrand2;
  std::function<std::complex<double>(const Node& o)> integrand1;
  double tail_bound = 0.0;
};

Layout layout_compactify(const GeneratingFunction& f, double s) {
  const SpaceParams& sp = f.space();
  const double ch = std::cosh(s);
  const double half_es = 0.5 * std::exp(s);
  Layout L;
  L.two_d = !sp.degenerate_x;
  if (sp.case_tag == SpaceCase::A) {
    L.outer = {tan_full(ch)};
    L.inner = [=](const Node& y) { return std::vector<Piece>{tan_full(std::sqrt(std::sqrt(ch * ch + y.z * y.z) / half_es))}; };
    L.integrand2 = [&f, ch, half_es, sp](const Node& y, const Node& x) {
      const double cnum = ch + half_es * x.z * x.z;
      const double w = y.z * y.z + cnum * cnum;
      return weigh(f_value(f, cnum, y.z, w), pow_measure(x.z, sp.alpha) * pow_measure(y.z, sp.beta));
    };
    L.integrand1 = [&f, ch, sp](const Node& y) {
      return weigh(f_value(f, ch, y.z, y.z * y.z + ch * ch), pow_measure(y.z, sp.beta));
    };
    return L;
  }
  // Case B: split the outer y-range at the ridge where cosh s = e^s y^2 / 2.
  const double y0 = std::sqrt(1.0 + std::exp(-2.0 * s));
  const double width = std::sqrt(1.0 + y0 * y0) / (2.0 * half_es * y0);
  L.outer = {linear(0.0, y0), tan_tail(y0, width, y0, 0.0)};
  L.inner = [=](const Node& y) {
    const double cnum = ch - half_es * y.z * y.z;
    return std::vector<Piece>{tan_full(std::sqrt(y.z * y.z + cnum * cnum))};
  };
  L.integrand2 = [&f, ch, half_es, sp](const Node& y, const Node& x) {
    const double cnum = ch - half_es * y.z * y.z;
    const double w = x.z * x.z + y.z * y.z + cnum * cnum;
    return weigh(f_value(f, cnum, std::hypot(x.z, y.z), w), pow_measure(x.z, sp.alpha) * pow_measure(y.z, sp.beta));
  };
  L.integrand1 = [&f, ch, half_es, sp](const Node& y) {
    const double cnum = ch - half_es * y.z * y.z;
    return weigh(f_value(f, cnum, y.z, y.z * y.z + cnum * cnum), pow_measure(y.z, sp.beta));
  };
  return L;
}

Layout layout_subst_a(const GeneratingFunction& f, double s) {
  const SpaceParams& sp = f.space();
  if (sp.case_tag != SpaceCase::A) throw std::invalid_argument("subst_a applies to case A (p > q) only");
  const double ch = std::cosh(s);
  const double kx = std::sqrt(2.0 * std::exp(-s) * ch);
  const double scale = std::pow(ch, sp.beta + 1) * (sp.degenerate_x ? 1.0 : std::pow(kx, sp.alpha + 1));
  Layout L;
  L.two_d = !sp.degenerate_x;
  L.outer = {tan_full(1.0)};
  L.inner = [](const Node& eta) { return std::vector<Piece>{tan_full(std::sqrt(std::hypot(1.0, eta.z)))}; };
  L.integrand2 = [&f, ch, scale, sp](const Node& eta, const Node& xi) {
    const double q = 1.0 + xi.z * xi.z;
    const double w = ch * ch * (eta.z * eta.z + q * q);
    return weigh(f_value(f, ch * q, ch * eta.z, w), scale * pow_measure(xi.z, sp.alpha) * pow_measure(eta.z, sp.beta));
  };
  L.integrand1 = [&f, ch, scale, sp](const Node& eta) {
    const double w = ch * ch * (eta.z * eta.z + 1.0);
    return weigh(f_value(f, ch, ch * eta.z, w), scale * pow_measure(eta.z, sp.beta));
  };
  return L;
}

// v = -sinh s + e^s y^2 / 2: Theta = 1 + x^2 + v^2 and y^beta dy = e^{-s} (y^2)^{(beta-1)/2} dv.
Layout layout_zz(const GeneratingFunction& f, double s) {
  const SpaceParams& sp = f.space();
  if (sp.case_tag != SpaceCase::B) throw std::invalid_argument("subst_b_zz applies to case B (q >= p) only");
  const double v0 = -std::sinh(s);
  const double es = std::exp(-s);
  const double half_beta = 0.5 * (sp.beta - 1);
  Layout L;
  L.two_d = !sp.degenerate_x;
  L.outer = {sqrt_head(v0, 1.0), tan_tail(0.0, 1.0, v0 + 1.0, v0)};
  L.inner = [](const Node& v) { return std::vector<Piece>{tan_full(std::hypot(1.0, v.z))}; };
  auto measure_v = [=](const Node& v) { return es * std::pow(2.0 * es * v.offset, half_beta); };
  L.integrand2 = [&f, es, sp, measure_v](const Node& v, const Node& x) {
    const double y2 = 2.0 * es * v.offset;
    const double w = 1.0 + x.z * x.z + v.z * v.z;
    return weigh(f_value(f, es - v.z, std::sqrt(x.z * x.z + y2), w), measure_v(v) * pow_measure(x.z, sp.alpha));
  };
  L.integrand1 = [&f, es, measure_v](const Node& v) {
    const double y2 = 2.0 * es * v.offset;
    return weigh(f_value(f, es - v.z, std::sqrt(y2), 1.0 + v.z * v.z), measure_v(v));
  };
  return L;
}

// u = e^s x, v = (1 + e^{2s}(y^2 - 1)) / 2: Theta = 1 + e^{-2s}(u^2 + v^2).
Layout layout_uv(const GeneratingFunction& f, double s) {
  const SpaceParams& sp = f.space();
  if (sp.case_tag != SpaceCase::B) throw std::invalid_argument("subst_b_uv applies to case B (q >= p) only");
  const double e2s = std::exp(2.0 * s);
  const double em2s = std::exp(-2.0 * s);
  const double ems = std::exp(-s);
  const double v0 = 0.5 * (1.0 - e2s);
  const double Lv = std::max(std::exp(s), std::abs(v0));
  const double half_beta = 0.5 * (sp.beta - 1);
  const double prefactor = em2s * (sp.degenerate_x ? 1.0 : std::pow(ems, sp.alpha + 1));
  Layout L;
  L.two_d = !sp.degenerate_x;
  L.outer = {sqrt_head(v0, Lv), tan_tail(0.0, Lv, v0 + Lv, v0)};
  L.inner = [=](const Node& v) { return std::vector<Piece>{tan_full(std::sqrt(e2s + v.z * v.z))}; };
  auto measure_v = [=](const Node& v) { return prefactor * std::pow(2.0 * em2s * v.offset, half_beta); };
  L.integrand2 = [&f, ems, em2s, sp, measure_v](const Node& v, const Node& u) {
    const double y2 = 2.0 * em2s * v.offset;
    const double x = ems * u.z;
    const double w = 1.0 + em2s * (u.z * u.z + v.z * v.z);
    return weigh(f_value(f, ems * (1.0 - v.z), std::sqrt(x * x + y2), w), measure_v(v) * pow_measure(u.z, sp.alpha));
  };
  L.integrand1 = [&f, ems, em2s, measure_v](const Node& v) {
    const double y2 = 2.0 * em2s * v.offset;
    return weigh(f_value(f, ems * (1.0 - v.z), std::sqrt(y2), 1.0 + em2s * v.z * v.z), measure_v(v));
  };
  return L;
}

// Closed-form bound for the integral of C Theta^{-gamma/2} x^alpha y^beta outside [0,R]^2,
// using Theta >= Q^2 + a P^4 + b with (Q, P) = (y, x) in case A and (x, y) in case B.
struct TailModel {
  double C;
  double g;  // gamma / 2
  double a;
  bool has_q;
  bool has_p;
  int dq;
  int dp;

  double operator()(double R) const {
    double total = 0.0;
    if (has_q && has_p) {
      const double kp = (dp + 1) / 4.0;
      const double kq = (dq + 1) / 2.0;
      // Q > R, any P.
      const double inner_p = std::pow(a, -kp) * 0.25 * beta_integral(kp, g);
      const double e1 = dq - 2.0 * g + 2.0 * kp;
      total += inner_p * std::pow(R, e1 + 1.0) / -(e1 + 1.0);
      // P > R, any Q.
      const double inner_q = std::pow(a, kq - g) * 0.5 * beta_integral(kq, g);
      const double e2 = dp + 4.0 * (kq - g);
      total += inner_q * std::pow(R, e2 + 1.0) / -(e2 + 1.0);
    } else if (has_q) {
      const double e = dq - 2.0 * g;
      total += std::pow(R, e + 1.0) / -(e + 1.0);
    } else {
      const double e = dp - 4.0 * g;
      total += std::pow(a, -g) * std::pow(R, e + 1.0) / -(e + 1.0);
    }
    return C * total;
  }
};

Layout layout_direct(const GeneratingFunction& f, double s, const QuadratureConfig& cfg) {
  const SpaceParams& sp = f.space();
  const ThetaBound bound = theta_lower_bound(sp, s);
  const Majorant maj = f.majorant();
  const bool case_a = sp.case_tag == SpaceCase::A;

  double R = 1.0;
  double tail = 0.0;
  if (std::isfinite(maj.support_cosh2)) {
    // Outside the box Theta >= min(R^2, a R^4) + b, so f vanishes once that reaches the support.
    const double S = maj.support_cosh2;
    R = bound.b >= S ? 1.0 : 1.0001 * std::max(std::sqrt(S), std::pow(S / bound.a, 0.25));
  } else {
    TailModel model{maj.constant, 0.5 * maj.gamma, bound.a, true, !sp.degenerate_x, case_a ? sp.beta : sp.alpha,
                    case_a ? sp.alpha : sp.beta};
    if (!case_a) {
      // Case B: the quadratic variable is x (absent when degenerate), the quartic one is y.
      model.has_q = !sp.degenerate_x;
      model.has_p = true;
    }
    const double kq = (model.dq + 1) / 2.0;
    const double kp = (model.dp + 1) / 4.0;
    const double need = (model.has_q ? kq : 0.0) + (model.has_p ? kp : 0.0);
    if (!(model.g > need)) {
      throw std::invalid_argument("direct: the majorant of f does not certify a finite tail");
    }
    const double target = cfg.truncation_margin * cfg.abs_tol;
    constexpr double kMaxR = 1e15;
    R = 1.0;
    while (model(R) > target && R < kMaxR) R *= 2.0;
    tail = model(R);
  }

  Layout L = layout_compactify(f, s);
  L.tail_bound = tail;
  L.inner = [R](const Node&) { return dyadic(0.0, R); };
  if (case_a) {
    L.outer = dyadic(0.0, R);
  } else {
    const double y0 = std::sqrt(1.0 + std::exp(-2.0 * s));
    L.outer = dyadic(0.0, std::min(y0, R));
    if (y0 < R) {
      auto rest = dyadic(y0, R);
      L.outer.insert(L.outer.end(), rest.begin(), rest.end());
    }
  }
  return L;
}

Layout make_layout(const GeneratingFunction& f, double s, Substitution sub, const QuadratureConfig& cfg) {
  if (sub == Substitution::Auto) {
    sub = f.space().case_tag == SpaceCase::B && s > 0.0 ? Substitution::SubstB_zz : Substitution::CompactifyTan;
  }
  switch (sub) {
    case Substitution::Direct: return layout_direct(f, s, cfg);
    case Substitution::CompactifyTan: return layout_compactify(f, s);
    case Substitution::SubstA: return layout_subst_a(f, s);
    case Substitution::SubstB_zz: return layout_zz(f, s);
    case Substitution::SubstB_uv: return layout_uv(f, s);
    case Substitution::Auto: break;
  }
  throw std::logic_error("unreachable substitution");
}

RadonSample evaluate_layout(const GeneratingFunction& f, double s, const Layout& L, const QuadratureConfig& cfg) {
  quad::Tolerance tol{cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions};
  const bool complex = f.value_kind() == ValueKind::Complex;
  RadonSample out;
  out.s = s;
  out.tail_bound = L.tail_bound;

  auto run = [&](auto component) {
    if (L.two_d) {
      return integrate_2d(L.outer, L.inner,
                          [&](const Node& o, const Node& i) { return component(L.integrand2(o, i)); }, tol);
    }
    return integrate_1d(L.outer, [&](const Node& o) { return component(L.integrand1(o)); }, tol);
  };
  const Accumulator re = run([](std::complex<double> z) { return z.real(); });
  Accumulator im;
  if (complex) im = run([](std::complex<double> z) { return z.imag(); });

  out.value = {re.value, im.value};
  out.error_estimate = re.error + im.error + L.tail_bound;
  out.evaluations = re.evaluations + im.evaluations;
  out.l1_norm = re.l1 + im.l1;
  out.converged = re.converged && im.converged && std::isfinite(re.value) && std::isfinite(im.value) &&
                  L.tail_bound <= cfg.abs_tol;
  if (!out.converged) {
    throw QuadratureFailure("Rf(" + std::to_string(s) + "): tolerance not reached", out);
  }
  return out;
}

void check_decay(const GeneratingFunction& f) {
  if (!std::isfinite(decay_norm(f, 2))) {
    throw DecayViolation("f does not decay like (cosh t)^{-rho} (1 + log cosh t)^{-2}; Rf may not converge");
  }
}

}  // namespace

RadonSample radon_at(const GeneratingFunction& f, double s, const QuadratureConfig& cfg) {
  cfg.validate();
  check_decay(f);
  return evaluate_layout(f, s, make_layout(f, s, cfg.substitution, cfg), cfg);
}

RadonSample radon_substituted_B(const GeneratingFunction& f, double s, const QuadratureConfig& cfg) {
  cfg.validate();
  if (f.space().case_tag != SpaceCase::B) throw std::invalid_argument("radon_substituted_B: case B (q >= p) only");
  check_decay(f);
  Substitution sub = cfg.substitution;
  if (sub != Substitution::SubstB_zz && sub != Substitution::SubstB_uv) {
    sub = s > 0.0 ? Substitution::SubstB_zz : Substitution::SubstB_uv;
  }
  return evaluate_layout(f, s, make_layout(f, s, sub, cfg), cfg);
}

unsigned radon_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CUSPIDAL_RADON_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::vector<RadonSample> radon_profile(const GeneratingFunction& f, const std::vector<double>& s_values,
                                       const QuadratureConfig& cfg) {
  cfg.validate();
  check_decay(f);
  std::vector<RadonSample> out(s_values.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < s_values.size(); i = next++) {
      try {
        out[i] = evaluate_layout(f, s_values[i], make_layout(f, s_values[i], cfg.substitution, cfg), cfg);
      } catch (const QuadratureFailure& e) {
        out[i] = e.best();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<unsigned>(radon_threads(), static_cast<unsigned>(std::max<std::size_t>(1, s_values.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw std::invalid_argument("grid needs step > 0 and hi >= lo");
  std::vector<double> grid;
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-3));
  for (long k = 0; k <= n; ++k) grid.push_back(lo + static_cast<double>(k) * step);
  return grid;
}

double limit_at_plus_infinity(const GeneratingFunction& f, const QuadratureConfig& cfg) {
  cfg.validate();
  const SpaceParams& sp = f.space();
  if (!(sp.p < sp.q)) throw std::invalid_argument("limit_at_plus_infinity: requires p < q");
  if (!f.k_invariant()) throw std::invalid_argument("limit_at_plus_infinity: f must be K-invariant");
  quad::Tolerance tol{cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions};
  // The v-integrand is even, so integrate over v >= 0 and double.
  const std::vector<Piece> outer{tan_full(1.0)};
  Accumulator acc;
  if (sp.degenerate_x) {
    acc = integrate_1d(outer, [&](const Node& v) { return f.radial_value(1.0 + v.z * v.z); }, tol);
  } else {
    acc = integrate_2d(
        outer, [](const Node& v) { return std::vector<Piece>{tan_full(std::hypot(1.0, v.z))}; },
        [&](const Node& v, const Node& x) {
          return f.radial_value(1.0 + x.z * x.z + v.z * v.z) * pow_measure(x.z, sp.alpha);
        },
        tol);
  }
  if (!acc.converged) {
    RadonSample best;
    best.s = std::numeric_limits<double>::infinity();
    best.value = 2.0 * acc.value;
    best.error_estimate = 2.0 * acc.error;
    best.converged = false;
    throw QuadratureFailure("limit_at_plus_infinity: tolerance not reached", best);
  }
  return 2.0 * acc.value;
}

std::vector<TruncatedIntegral> divergence_witness(const SpaceParams& space, double nu, const std::vector<double>& T_list,
                                                  const QuadratureConfig& cfg) {
  cfg.validate();
  if (space.p <= 1 || space.p + space.q <= 3) throw std::invalid_argument("divergence_witness: needs p > 1, p + q > 3");
  if (!(nu > 0.0)) throw std::invalid_argument("divergence_witness: nu must be positive");
  const double g = 0.5 * (to_double(space.rho) + nu);
  const int ax = space.p - 2;
  const int by = space.q - 1;
  quad::Tolerance tol{cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions};
  std::vector<TruncatedIntegral> out;
  for (double T : T_list) {
    if (!(T > 0.0)) throw std::invalid_argument("divergence_witness: T must be positive");
    // The integrand peaks along 1 + (x^2 - y^2)/2 = 0; the inner range is split there.
    auto inner = [T](const Node& y) {
      const double ridge = std::sqrt(std::max(0.0, y.z * y.z - 2.0));
      if (ridge <= 0.0 || ridge >= T) return std::vector<Piece>{linear(0.0, T)};
      return std::vector<Piece>{linear(0.0, ridge), linear(ridge, T)};
    };
    const double split = std::min(T, std::sqrt(2.0));
    const std::vector<Piece> outer{linear(0.0, split), linear(split, T)};
    auto acc = integrate_2d(
        outer, inner,
        [&](const Node& y, const Node& x) {
          const double c = 1.0 + 0.5 * (x.z - y.z) * (x.z + y.z);
          const double w = y.z * y.z + c * c;
          return std::pow(w, -g) * pow_measure(x.z, ax) * pow_measure(y.z, by);
        },
        tol);
    out.push_back({T, acc.value, acc.error});
  }
  return out;
}

}  // namespace cuspidal
