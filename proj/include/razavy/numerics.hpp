#pragma once

// Self-contained 1-D numerical kernels: adaptive quadrature on a truncated
// (effectively infinite) domain, first-root location by uniform scan plus
// refinement, and local extremum refinement by golden-section search.
//
// Everything here is a pure function of its arguments; no shared mutable
// state, safe for concurrent use.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace razavy {

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

struct BracketInvalid : std::invalid_argument {
  explicit BracketInvalid(const std::string& msg) : std::invalid_argument(msg) {}
};

// Integration domain and tolerances for integrate()/integrate_simpson().
//
// The integrands this library cares about all carry exp(-xi*cosh(2x)/2),
// which for xi >= 0.5 is below abs_tol long before |x| = 6, so truncating
// the infinite domain at the default halfwidth loses nothing at double
// precision.
struct QuadratureSpec {
  double truncation_halfwidth = 6.0;
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_subdivisions = 60;

  void validate() const {
    if (!(truncation_halfwidth > 0.0) || !(rel_tol > 0.0) || !(abs_tol > 0.0) ||
        max_subdivisions < 1)
      throw std::invalid_argument("QuadratureSpec: halfwidth, tolerances must be > 0");
  }
};

namespace detail {

// Gauss-Kronrod 7-15 nodes on [-1,1]: {abscissa, Gauss-7 weight, Kronrod-15
// weight}. Rows 1-3 are shared Gauss/Kronrod nodes, rows 4-7 Kronrod-only.
inline constexpr double kGK15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
inline void gk15(const F& f, double a, double b, double& value, double& error) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  double g7 = kGK15[0][1] * fc;
  double k15 = kGK15[0][2] * fc;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGK15[i][0];
    const double s = f(mid + dx) + f(mid - dx);
    g7 += kGK15[i][1] * s;
    k15 += kGK15[i][2] * s;
  }
  value = k15 * half;
  error = std::abs((k15 - g7) * half);
}

template <class F>
inline double simpson(const F& f, double a, double m, double b, double fa, double fm,
                      double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth, int max_depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, lm, m, fa, flm, fm);
  const double right = simpson(f, m, rm, b, fm, frm, fb);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol) return left + right + err;
  if (depth >= max_depth)
    throw NonConvergence("integrate_simpson: subdivision limit reached");
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [-H, H].
// Guarantees |result - integral| <= max(abs_tol, rel_tol*|result|); throws
// NonConvergence when the subdivision depth limit is reached first.
template <class F>
double integrate(const F& f, const QuadratureSpec& spec = {}) {
  spec.validate();
  const double H = spec.truncation_halfwidth;

  double whole, whole_err;
  detail::gk15(f, -H, H, whole, whole_err);
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(whole));

  struct Interval {
    double a, b, tol;
    int depth;
  };
  std::vector<Interval> stack{{-H, H, tol, 0}};
  double total = 0.0;
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();
    double v, e;
    detail::gk15(f, iv.a, iv.b, v, e);
    if (e <= iv.tol) {
      total += v;
      continue;
    }
    if (iv.depth >= spec.max_subdivisions)
      throw NonConvergence("integrate: subdivision limit reached without meeting tolerance");
    const double m = 0.5 * (iv.a + iv.b);
    stack.push_back({iv.a, m, 0.5 * iv.tol, iv.depth + 1});
    stack.push_back({m, iv.b, 0.5 * iv.tol, iv.depth + 1});
  }
  return total;
}

// Adaptive Simpson integration over the same domain. Entirely independent
// rule and error estimate; kept as a cross-check for integrate().
template <class F>
double integrate_simpson(const F& f, const QuadratureSpec& spec = {}) {
  spec.validate();
  const double H = spec.truncation_halfwidth;
  const double fa = f(-H), fm = f(0.0), fb = f(H);
  const double whole = detail::simpson(f, -H, 0.0, H, fa, fm, fb);
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(whole));
  return detail::adaptive_simpson(f, -H, H, fa, fm, fb, whole, tol, 0,
                                  spec.max_subdivisions);
}

// Uniform-scan controls for find_first_root(). The step is one
// samples_per_fastest_period-th of the caller-supplied fastest oscillation
// period, which keeps the scan valid when frequencies change by orders of
// magnitude across a parameter sweep.
struct ScanSpec {
  double t_max;
  double fastest_period;
  int samples_per_fastest_period;
  double refine_tol;

  ScanSpec(double t_max_, double fastest_period_, int samples = 256,
           double refine_tol_ = 1e-10)
      : t_max(t_max_),
        fastest_period(fastest_period_),
        samples_per_fastest_period(samples),
        refine_tol(refine_tol_) {
    if (!(t_max > 0.0) || !(fastest_period > 0.0))
      throw std::invalid_argument("ScanSpec: t_max and fastest_period must be > 0");
    if (samples_per_fastest_period < 8)
      throw std::invalid_argument("ScanSpec: need >= 8 samples per fastest period");
    if (!(refine_tol > 0.0)) throw std::invalid_argument("ScanSpec: refine_tol must be > 0");
  }

  double step() const { return fastest_period / samples_per_fastest_period; }
};

struct Extremum {
  double t;
  double value;
};

namespace detail {

// Golden-section minimization on [lo, hi]; assumes a single interior minimum.
template <class F>
Extremum golden_minimize(const F& f, double lo, double hi, double tol) {
  constexpr double kGolden = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 300 && (b - a) > tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  const double tm = 0.5 * (a + b);
  const double fm = f(tm);
  if (fc < fm && fc < fd) return {c, fc};
  if (fd < fm) return {d, fd};
  return {tm, fm};
}

template <class F>
double bisect_root(const F& f, double a, double b, double fa, double) {
  for (int it = 0; it < 200 && (b - a) > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) != (fm < 0.0))
      b = m;
    else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace detail

// Smallest t in (0, t_max] with |f(t)| <= scan.refine_tol. Candidates are
// sign changes (bisected) and local minima of |f| (golden-section refined,
// which also catches roots where f only touches zero). Returns nullopt when
// no candidate reaches the tolerance.
template <class F>
std::optional<double> find_first_root(const F& f, const ScanSpec& scan) {
  const double h = scan.step();
  const long n = static_cast<long>(std::ceil(scan.t_max / h));
  double t_prev2 = 0.0, t_prev = 0.0;
  double f_prev2 = 0.0, f_prev = f(0.0);
  bool have_prev2 = false;
  for (long i = 1; i <= n; ++i) {
    const double t = std::min(i * h, scan.t_max);
    const double ft = f(t);
    // grazing root: |f| has a strict local minimum at t_prev
    if (have_prev2 && std::abs(f_prev) < std::abs(f_prev2) &&
        std::abs(f_prev) < std::abs(ft)) {
      const Extremum m =
          detail::golden_minimize([&](double u) { return std::abs(f(u)); }, t_prev2, t,
                                  scan.refine_tol);
      if (m.value <= scan.refine_tol && m.t > 0.0) return m.t;
    }
    // crossing root in (t_prev, t]
    if ((f_prev < 0.0) != (ft < 0.0)) {
      const double r = detail::bisect_root(f, t_prev, t, f_prev, ft);
      if (std::abs(f(r)) <= scan.refine_tol && r > 0.0) return r;
    } else if (ft == 0.0 && t > 0.0) {
      return t;
    }
    t_prev2 = t_prev;
    f_prev2 = f_prev;
    t_prev = t;
    f_prev = ft;
    have_prev2 = true;
  }
  return std::nullopt;
}

enum class ExtremumKind { minimum, maximum };

// Refine the single local extremum of f inside (t_lo, t_hi).
template <class F>
Extremum refine_local_extremum(const F& f, double t_lo, double t_hi, ExtremumKind kind,
                               double tol = 1e-10) {
  if (!(t_lo < t_hi)) throw BracketInvalid("refine_local_extremum: need t_lo < t_hi");
  if (kind == ExtremumKind::minimum) return detail::golden_minimize(f, t_lo, t_hi, tol);
  Extremum m = detail::golden_minimize([&](double u) { return -f(u); }, t_lo, t_hi, tol);
  return {m.t, -m.value};
}

}  // namespace razavy
