#include "fht/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

namespace fht {

const char* to_string(QuadMode m) {
  return m == QuadMode::SmoothSubtraction ? "smooth" : "chebyshev";
}

void QuadratureConfig::validate() const {
  if (!std::isfinite(tol) || tol < 1e-14)
    throw DomainError("QuadratureConfig: tol must be finite and >= 1e-14");
  if (max_depth < 1 || max_depth > 60)
    throw DomainError("QuadratureConfig: max_depth must lie in [1,60]");
  if (!std::isfinite(endpoint_margin) || endpoint_margin <= 0.0 || endpoint_margin >= 1.0)
    throw DomainError("QuadratureConfig: endpoint_margin must lie in (0,1)");
}

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1,1] (positive half; symmetric).
constexpr std::array<double, 8> kXgk = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kWg = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
  double a, b;
  Complex value;
  double err;
  int depth;
  std::uint64_t id;  // creation order, for deterministic tie-breaking
};

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.id > y.id;
  }
};

Panel evaluate_panel(const std::function<Complex(double)>& f, double a, double b,
                     int depth, std::uint64_t id) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  Complex kron = kWgk[7] * f(mid);
  Complex gauss = kWg[3] * f(mid);
  for (int k = 0; k < 7; ++k) {
    const double dx = half * kXgk[k];
    const Complex sum = f(mid - dx) + f(mid + dx);
    kron += kWgk[k] * sum;
    if (k % 2 == 1) gauss += kWg[k / 2] * sum;
  }
  kron *= half;
  gauss *= half;
  return Panel{a, b, kron, std::abs(kron - gauss), depth, id};
}

// Safety valve against runaway refinement; depth caps normally bind first.
constexpr size_t kMaxPanels = 200000;

}  // namespace

IntegrationResult integrate_adaptive(const std::function<Complex(double)>& f,
                                     double a, double b, double tol, int max_depth) {
  if (!(b > a)) return {Complex(0.0, 0.0), 0.0, true};

  std::uint64_t next_id = 0;
  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> active;
  active.push(evaluate_panel(f, a, b, 0, next_id++));

  Complex frozen_value(0.0, 0.0);
  double frozen_err = 0.0;
  size_t frozen_count = 0;
  double active_err = active.top().err;

  auto total_err = [&] { return frozen_err + active_err; };

  while (total_err() > tol && !active.empty() &&
         frozen_count + active.size() < kMaxPanels) {
    Panel worst = active.top();
    active.pop();
    active_err -= worst.err;
    if (worst.depth >= max_depth) {
      // Cannot refine further; park it and keep working on the rest.
      frozen_value += worst.value;
      frozen_err += worst.err;
      ++frozen_count;
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid, worst.depth + 1, next_id++);
    Panel right = evaluate_panel(f, mid, worst.b, worst.depth + 1, next_id++);
    active_err += left.err + right.err;
    active.push(std::move(left));
    active.push(std::move(right));
  }

  IntegrationResult out;
  out.value = frozen_value;
  out.error_bound = frozen_err;
  while (!active.empty()) {
    out.value += active.top().value;
    out.error_bound += active.top().err;
    active.pop();
  }
  out.converged = out.error_bound <= tol && is_finite(out.value);
  return out;
}

}  // namespace fht
