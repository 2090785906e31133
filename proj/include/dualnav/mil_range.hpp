#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "dualnav/mil.hpp"

namespace dualnav {

struct MILBounds {
  double alpha = 0.0;  // cheapest transition of this length anywhere
  double beta = 0.0;   // worst source's cheapest transition of this length
};

// Per quantised edge length, bounds on the MIL of any transition of that length.
class MILRange {
 public:
  explicit MILRange(double quantum = 0.1) : quantum_(quantum) {}

  double quantum() const { return quantum_; }
  long bin(double length) const { return std::lround(length / quantum_); }
  void set(double length, MILBounds b) { bins_[bin(length)] = b; }
  // Folds one (source, edge) minimum into its bin.
  void include(double length, double min_cost);
  std::optional<MILBounds> lookup(double length) const;
  // +inf for absent bins: no transition of that length is realizable.
  double alpha(double length) const;
  double beta(double length) const;
  const std::map<long, MILBounds>& bins() const { return bins_; }

  std::string to_csv() const;
  static MILRange from_csv(const std::string& text);

 private:
  double quantum_;
  std::map<long, MILBounds> bins_;
};

MILRange build_mil_range(const MILProvider& provider, double quantum = 0.1);

struct PathBounds {
  double alpha = 0.0;
  double beta = 0.0;
};

// Throws Error{NotAPath} when consecutive nodes are not adjacent.
PathBounds aggregate_bounds(const VirtualGraph& graph, std::span<const NodeId> path, const MILRange& range);

}  // namespace dualnav
