#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dualnav/rw_ops.hpp"

namespace dualnav {

enum class CostKind { UsageCount, DetectionLikelihood, DetectionThreshold, Custom };

struct GainInterval {
  double lo = 1.0, hi = 1.0;
  bool contains(double z) const { return z >= lo - 1e-12 && z <= hi + 1e-12; }
};

class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  explicit PiecewiseLinear(std::vector<std::pair<double, double>> points);
  double operator()(double x) const;
  bool empty() const { return points_.empty(); }

 private:
  std::vector<std::pair<double, double>> points_;
};

struct CostModel {
  CostKind kind = CostKind::DetectionThreshold;
  double reset_cost = 1.0;
  bool reset_angle_weighted = false;
  bool weight_walking_by_distance = true;
  GainInterval translation{0.78, 1.22};
  GainInterval rotation{0.77, 1.10};
  GainInterval curvature{-1.0 / 7.5, 1.0 / 7.5};
  // Empty curves fall back to default_likelihood_curve.
  PiecewiseLinear translation_curve, rotation_curve, curvature_curve;
  std::function<double(const RWOperation&)> custom;
};

// Ramp from 0 at each interval edge to 1 where the deviation from identity is twice the edge's.
// The lower translation side also passes through the published sample (0.6, 0.9).
PiecewiseLinear default_likelihood_curve(OpKind kind, const GainInterval& interval);

double operation_cost(const RWOperation& op, const CostModel& model);
double sequence_cost(const OperationSequence& ops, const CostModel& model);
// Largest cost of re-aligning headings by one Reset; the per-hop constant of the COS bound.
double max_orientation_correction_cost(const CostModel& model);

}  // namespace dualnav
