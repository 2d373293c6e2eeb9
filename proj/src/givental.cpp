#include <qwhit/givental.hpp>

#include <qwhit/parallel.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace qwhit {

int default_nodes_per_axis(int rank) {
  if (rank <= 2) return 257;
  if (rank == 3) return 129;
  return 33;
}

std::complex<double> givental_kernel(std::span<const double> xu, std::span<const double> xl,
                                     double lambda) {
  if (xu.size() != xl.size() + 1) throw std::invalid_argument("givental_kernel: row lengths");
  double su = 0, sl = 0, pot = 0;
  for (double v : xu) su += v;
  for (double v : xl) sl += v;
  for (size_t i = 0; i < xl.size(); ++i)
    pot += std::exp(xl[i] - xu[i]) + std::exp(xu[i + 1] - xl[i]);
  return std::polar(std::exp(-pot), lambda * (su - sl));
}

namespace {

constexpr double kGauss10[10][2] = {
    {-0.97390652851717174, 0.066671344308688069}, {-0.86506336668898454, 0.14945134915058036},
    {-0.67940956829902444, 0.21908636251598201},  {-0.43339539412924721, 0.26926671930999652},
    {-0.14887433898163122, 0.29552422471475298},  {0.14887433898163122, 0.29552422471475298},
    {0.43339539412924721, 0.26926671930999652},   {0.67940956829902444, 0.21908636251598201},
    {0.86506336668898454, 0.14945134915058036},   {0.97390652851717174, 0.066671344308688069}};

struct AxisRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

AxisRule make_rule(QuadratureConfig::Scheme scheme, int nodes_per_axis, double a, double b) {
  AxisRule r;
  if (scheme == QuadratureConfig::Scheme::gauss10) {
    int panels = std::max(1, nodes_per_axis / 10);
    double pw = (b - a) / panels;
    r.nodes.reserve(static_cast<size_t>(panels) * 10);
    r.weights.reserve(static_cast<size_t>(panels) * 10);
    for (int p = 0; p < panels; ++p) {
      double mid = a + (p + 0.5) * pw;
      for (const auto& nw : kGauss10) {
        r.nodes.push_back(mid + 0.5 * pw * nw[0]);
        r.weights.push_back(0.5 * pw * nw[1]);
      }
    }
  } else {
    int n = std::max(9, nodes_per_axis | 1);
    double h = (b - a) / (n - 1);
    r.nodes.resize(static_cast<size_t>(n));
    r.weights.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) r.nodes[static_cast<size_t>(i)] = a + i * h;
    r.weights[0] = r.weights[static_cast<size_t>(n - 1)] = h / 3;
    for (int i = 1; i < n - 1; ++i)
      r.weights[static_cast<size_t>(i)] = (i % 2 ? 4.0 : 2.0) * h / 3;
  }
  return r;
}

void check_config(const QuadratureConfig& cfg) {
  if (!(cfg.half_width > 0)) throw std::invalid_argument("QuadratureConfig: half_width must be > 0");
  if (cfg.nodes_per_axis != 0 && cfg.nodes_per_axis < 8)
    throw std::invalid_argument("QuadratureConfig: nodes_per_axis must be >= 8");
}

// Integration windows for evaluating level k at y: axis i centered between
// neighboring upper coordinates y_i, y_{i+1}.
std::vector<double> window_centers(std::span<const double> y) {
  std::vector<double> c(y.size() - 1);
  for (size_t i = 0; i + 1 < y.size(); ++i) c[i] = 0.5 * (y[i] + y[i + 1]);
  return c;
}

// psi^{gl_k} at a single point y; sub is the tabulated level k-1 (nullptr for
// k <= 2, where the closed-form gl_1 value is used directly).
std::complex<double> eval_level(std::span<const double> y, std::span<const double> lambda,
                                const QuadratureConfig& cfg, int nodes,
                                const TabulatedFunction* sub, bool parallel) {
  size_t k = y.size();
  if (k == 1) return std::polar(1.0, lambda[0] * y[0]);
  size_t d = k - 1;
  std::vector<double> centers = window_centers(y);
  std::vector<AxisRule> rules(d);
  size_t total = 1;
  for (size_t i = 0; i < d; ++i) {
    rules[i] = make_rule(cfg.scheme, nodes, centers[i] - cfg.half_width,
                         centers[i] + cfg.half_width);
    total *= rules[i].nodes.size();
  }
  double lam_k = lambda[k - 1];

  auto integrand = [&](size_t flat) {
    std::vector<double> t(d);
    double weight = 1.0;
    size_t rem = flat;
    for (size_t i = d; i-- > 0;) {
      size_t m = rules[i].nodes.size();
      size_t idx = rem % m;
      rem /= m;
      t[i] = rules[i].nodes[idx];
      weight *= rules[i].weights[idx];
    }
    std::complex<double> inner = (d == 1) ? std::polar(1.0, lambda[0] * t[0])
                                          : sub->eval_cubic(t);
    return weight * givental_kernel(y, t, lam_k) * inner;
  };

  if (parallel && total >= 4096) {
    std::vector<std::complex<double>> buf =
        parallel_map<std::complex<double>>(total, integrand);
    std::complex<double> acc(0, 0);
    for (const auto& v : buf) acc += v;
    return acc;
  }
  std::complex<double> acc(0, 0);
  for (size_t f = 0; f < total; ++f) acc += integrand(f);
  return acc;
}

// Cascaded midpoint centers: level n centers at x itself, each level below at
// the midpoints of the level above.
std::vector<std::vector<double>> center_cascade(const std::vector<double>& x) {
  size_t n = x.size();
  std::vector<std::vector<double>> c(n + 1);
  c[n] = x;
  for (size_t k = n; k-- > 1;) c[k] = window_centers(c[k + 1]);
  return c;
}

std::complex<double> eval_chain(const std::vector<double>& x, const std::vector<double>& lambda,
                                const QuadratureConfig& cfg, int nodes) {
  size_t n = x.size();
  if (n == 1) return std::polar(1.0, lambda[0] * x[0]);
  auto centers = center_cascade(x);
  double R = cfg.half_width;
  // Tables for levels 2..n-1; level k box half-width (n-k)(R+1) keeps every
  // sampled window plus the cubic stencil interior.
  std::vector<TabulatedFunction> tables(n);  // tables[k] = level k, built for k in [2, n-1]
  for (size_t k = 2; k < n; ++k) {
    double hw = static_cast<double>(n - k) * (R + 1.0);
    std::vector<TabulatedFunction::Axis> axes(k);
    for (size_t i = 0; i < k; ++i) {
      int m = std::max(9, static_cast<int>(std::lround(nodes * hw / R)) | 1);
      axes[i].lo = centers[k][i] - hw;
      axes[i].step = 2 * hw / (m - 1);
      axes[i].count = m;
    }
    const TabulatedFunction* sub = (k >= 3) ? &tables[k - 1] : nullptr;
    tables[k] = TabulatedFunction(std::move(axes), [&](std::span<const double> pt) {
      return eval_level(pt, lambda, cfg, nodes, sub, false);
    });
  }
  const TabulatedFunction* sub = (n >= 3) ? &tables[n - 1] : nullptr;
  return eval_level(x, lambda, cfg, nodes, sub, true);
}

}  // namespace

TabulatedFunction::TabulatedFunction(
    std::vector<Axis> axes, const std::function<std::complex<double>(std::span<const double>)>& fn)
    : axes_(std::move(axes)) {
  size_t total = 1;
  for (const Axis& a : axes_) {
    if (a.count < 2) throw std::invalid_argument("TabulatedFunction: need >= 2 nodes per axis");
    total *= static_cast<size_t>(a.count);
  }
  values_.resize(total);
  parallel_for(total, [&](size_t flat) {
    std::vector<double> pt(axes_.size());
    size_t rem = flat;
    for (size_t i = axes_.size(); i-- > 0;) {
      size_t m = static_cast<size_t>(axes_[i].count);
      pt[i] = axes_[i].lo + axes_[i].step * static_cast<double>(rem % m);
      rem /= m;
    }
    values_[flat] = fn(pt);
  });
}

std::complex<double> TabulatedFunction::eval_cubic(std::span<const double> pt) const {
  size_t d = axes_.size();
  if (pt.size() != d) throw std::invalid_argument("TabulatedFunction::eval_cubic: dim mismatch");
  // Per-axis stencil base index and Catmull-Rom weights.
  std::vector<int> base(d);
  std::vector<std::array<double, 4>> wt(d);
  for (size_t i = 0; i < d; ++i) {
    const Axis& a = axes_[i];
    double s = (pt[i] - a.lo) / a.step;
    int cell = static_cast<int>(std::floor(s));
    cell = std::clamp(cell, 1, a.count - 3);
    double u = s - cell;
    u = std::clamp(u, -1.0, 2.0);  // samples just outside the box stay finite
    double u2 = u * u, u3 = u2 * u;
    wt[i] = {0.5 * (-u3 + 2 * u2 - u), 0.5 * (3 * u3 - 5 * u2 + 2),
             0.5 * (-3 * u3 + 4 * u2 + u), 0.5 * (u3 - u2)};
    base[i] = cell - 1;
  }
  size_t stencil = size_t{1} << (2 * d);  // 4^d
  std::complex<double> acc(0, 0);
  for (size_t s = 0; s < stencil; ++s) {
    double w = 1.0;
    size_t flat = 0;
    size_t rem = s;
    for (size_t i = 0; i < d; ++i) {
      size_t oi = rem & 3u;
      rem >>= 2;
      w *= wt[i][oi];
      flat = flat * static_cast<size_t>(axes_[i].count) +
             static_cast<size_t>(base[i] + static_cast<int>(oi));
    }
    acc += w * values_[flat];
  }
  return acc;
}

WhittakerResult whittaker_classical(const std::vector<double>& x,
                                    const std::vector<double>& lambda,
                                    const QuadratureConfig& cfg) {
  size_t n = x.size();
  if (n < 1) throw std::invalid_argument("whittaker_classical: empty coordinates");
  if (n > 4) throw std::invalid_argument("whittaker_classical: rank > 4 is out of scope");
  if (lambda.size() != n) throw std::invalid_argument("whittaker_classical: lambda rank mismatch");
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("whittaker_classical: non-finite coordinate");
  check_config(cfg);

  int nodes = cfg.nodes_per_axis ? cfg.nodes_per_axis : default_nodes_per_axis(static_cast<int>(n));
  WhittakerResult out;
  out.value = eval_chain(x, lambda, cfg, nodes);
  if (n == 1) {
    out.value_coarse = out.value;
    out.error_estimate = 0;
    return out;
  }
  out.value_coarse = eval_chain(x, lambda, cfg, std::max(8, nodes / 2));
  out.error_estimate = std::abs(out.value - out.value_coarse);
  double scale = std::max(std::abs(out.value), 1e-300);
  if (out.error_estimate > cfg.tolerance * scale)
    throw ConvergenceError("whittaker_classical: two-resolution estimates disagree (rel " +
                           std::to_string(out.error_estimate / scale) + ")");
  return out;
}

ClassicalEigenReport classical_eigencheck(const std::vector<double>& x,
                                          const std::vector<double>& lambda, double h,
                                          const QuadratureConfig& cfg) {
  if (!(h > 0)) throw std::invalid_argument("classical_eigencheck: h must be positive");
  size_t n = x.size();
  std::complex<double> psi0 = whittaker_classical(x, lambda, cfg).value;
  double apsi = std::abs(psi0);
  if (apsi < 1e-12)
    throw std::domain_error("classical_eigencheck: |psi| below 1e-12, residual undefined");

  std::complex<double> d1(0, 0), d2(0, 0);
  for (size_t i = 0; i < n; ++i) {
    std::vector<double> xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    std::complex<double> pp = whittaker_classical(xp, lambda, cfg).value;
    std::complex<double> pm = whittaker_classical(xm, lambda, cfg).value;
    d1 += (pp - pm) / (2 * h);
    d2 += (pp - 2.0 * psi0 + pm) / (h * h);
  }
  double lam_sum = 0, lam_sq = 0, pot = 0;
  for (double l : lambda) {
    lam_sum += l;
    lam_sq += l * l;
  }
  for (size_t i = 0; i + 1 < n; ++i) pot += std::exp(x[i + 1] - x[i]);

  ClassicalEigenReport rep;
  rep.h = h;
  rep.abs_psi = apsi;
  rep.residual_h1 = std::abs(d1 - std::complex<double>(0, lam_sum) * psi0) / apsi;
  rep.residual_h2 = std::abs(-0.5 * d2 + pot * psi0 - 0.5 * lam_sq * psi0) / apsi;
  return rep;
}

}  // namespace qwhit
