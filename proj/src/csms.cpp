#include "dualnav/csms.hpp"

#include <cmath>
#include <limits>

namespace dualnav {

const char* to_string(MultiplierVerdict v) {
  switch (v) {
    case MultiplierVerdict::Multipliers: return "Multipliers";
    case MultiplierVerdict::ShortestFeasible: return "ShortestFeasible";
    case MultiplierVerdict::Infeasible: return "Infeasible";
  }
  return "?";
}

namespace {
bool same_values(const VPath& a, const VPath& b) {
  return std::abs(a.length - b.length) <= 1e-9 * (1.0 + a.length) && std::abs(a.bound - b.bound) <= 1e-9 * (1.0 + a.bound);
}
}  // namespace

MultiplierSide secant_search(const VirtualGraph& g, NodeId s, NodeId t, double budget, const EdgeWeight& bound,
                             const CsmsOptions& opt) {
  MultiplierSide side;
  auto finite_len = [&](double l) { return std::isfinite(bound(l)) ? l : std::numeric_limits<double>::infinity(); };
  auto p = dijkstra_path(g, s, t, bound, bound);  // least-bound path
  // Edges whose bound is infinite cannot be realised at all, so they are left out of every search.
  auto q = dijkstra_path(g, s, t, finite_len, bound);
  if (!p || !q) return side;
  side.valid = true;
  double r = 0.0;
  while (side.iterations < opt.max_iterations) {
    double denom = p->bound - q->bound;
    if (std::abs(denom) <= 1e-12) break;
    double r_new = (q->length - p->length) / denom;
    if (!(r_new > 0.0) || !std::isfinite(r_new)) break;
    ++side.iterations;
    auto x = dijkstra_path(
        g, s, t,
        [&](double l) {
          double b = bound(l);
          return std::isfinite(b) ? l + r_new * b : std::numeric_limits<double>::infinity();
        },
        bound);
    bool small_step = opt.delta && r > 0 && std::abs(r_new - r) <= *opt.delta * r;
    r = r_new;
    if (!x || small_step || same_values(*x, *p) || same_values(*x, *q)) break;
    if (x->bound <= budget + 1e-9) p = x;
    else q = x;
  }
  side.r_star = r;
  side.feasible = p;
  side.infeasible = q;
  return side;
}

MultiplierResult csms(const VirtualGraph& g, NodeId s, NodeId t, double budget, const MILRange& range, const CsmsOptions& opt) {
  MultiplierResult res;
  EdgeWeight alpha = [&](double l) { return range.alpha(l); };
  EdgeWeight beta = [&](double l) { return range.beta(l); };
  res.shortest = dijkstra_path(g, s, t, [](double l) { return l; }, beta);
  if (!res.shortest) return res;
  if (res.shortest->bound <= budget + 1e-9) {
    res.verdict = MultiplierVerdict::ShortestFeasible;
    return res;
  }
  auto least_alpha = dijkstra_path(g, s, t, alpha, alpha);
  if (!least_alpha || least_alpha->bound > budget + 1e-9) return res;
  res.verdict = MultiplierVerdict::Multipliers;
  res.alpha = secant_search(g, s, t, budget, alpha, opt);
  res.beta = secant_search(g, s, t, budget, beta, opt);
  return res;
}

}  // namespace dualnav
