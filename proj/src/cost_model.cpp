#include "dualnav/cost_model.hpp"

#include <algorithm>
#include <cmath>

#include "dualnav/errors.hpp"

namespace dualnav {

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<double, double>> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
}

double PiecewiseLinear::operator()(double x) const {
  if (points_.empty()) return 0.0;
  if (x <= points_.front().first) return points_.front().second;
  if (x >= points_.back().first) return points_.back().second;
  auto hi = std::upper_bound(points_.begin(), points_.end(), x,
                             [](double v, const std::pair<double, double>& p) { return v < p.first; });
  auto lo = hi - 1;
  double t = (x - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

PiecewiseLinear default_likelihood_curve(OpKind kind, const GainInterval& in) {
  double id = kind == OpKind::Curvature ? 0.0 : 1.0;
  std::vector<std::pair<double, double>> pts{
      {id - 2.0 * (id - in.lo), 1.0}, {in.lo, 0.0}, {in.hi, 0.0}, {id + 2.0 * (in.hi - id), 1.0}};
  if (kind == OpKind::Translation && 0.6 < in.lo && 0.6 > pts.front().first) pts.push_back({0.6, 0.9});
  return PiecewiseLinear(std::move(pts));
}

namespace {
const GainInterval& interval_for(const CostModel& m, OpKind k) {
  return k == OpKind::Translation ? m.translation : k == OpKind::Rotation ? m.rotation : m.curvature;
}
const PiecewiseLinear& curve_for(const CostModel& m, OpKind k) {
  return k == OpKind::Translation ? m.translation_curve : k == OpKind::Rotation ? m.rotation_curve : m.curvature_curve;
}
}  // namespace

double operation_cost(const RWOperation& op, const CostModel& model) {
  if (op.is_identity()) return 0.0;
  double cost = 0.0;
  if (model.kind == CostKind::Custom) {
    if (!model.custom) throw Error(ErrorKind::InvalidInput, "custom cost model without a function");
    cost = model.custom(op);
  } else if (op.kind == OpKind::Reset) {
    cost = model.reset_cost;
    if (model.reset_angle_weighted) cost *= std::abs(wrap_signed_degrees(op.magnitude)) / 180.0;
  } else {
    double z = op.magnitude;
    switch (model.kind) {
      case CostKind::UsageCount: return 1.0;
      case CostKind::DetectionThreshold: cost = interval_for(model, op.kind).contains(z) ? 0.0 : 1.0; break;
      case CostKind::DetectionLikelihood: {
        const auto& c = curve_for(model, op.kind);
        cost = c.empty() ? default_likelihood_curve(op.kind, interval_for(model, op.kind))(z) : c(z);
        break;
      }
      case CostKind::Custom: break;
    }
    if (op.is_walk() && model.weight_walking_by_distance) cost *= op.walk_length;
  }
  if (cost < 0) throw Error(ErrorKind::InvalidInput, "negative RW cost");
  return cost;
}

double sequence_cost(const OperationSequence& ops, const CostModel& model) {
  double s = 0.0;
  for (const auto& op : ops) s += operation_cost(op, model);
  return s;
}

double max_orientation_correction_cost(const CostModel& model) {
  if (model.kind == CostKind::Custom && model.custom) return model.custom(RWOperation::reset(180.0));
  return model.reset_cost;
}

}  // namespace dualnav
