#include "dualnav/mil_range.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "dualnav/errors.hpp"

namespace dualnav {

void MILRange::include(double length, double min_cost) {
  auto [it, fresh] = bins_.try_emplace(bin(length), MILBounds{min_cost, min_cost});
  if (!fresh) {
    it->second.alpha = std::min(it->second.alpha, min_cost);
    it->second.beta = std::max(it->second.beta, min_cost);
  }
}

std::optional<MILBounds> MILRange::lookup(double length) const {
  auto it = bins_.find(bin(length));
  if (it == bins_.end()) return std::nullopt;
  return it->second;
}

double MILRange::alpha(double length) const {
  auto b = lookup(length);
  return b ? b->alpha : std::numeric_limits<double>::infinity();
}

double MILRange::beta(double length) const {
  auto b = lookup(length);
  return b ? b->beta : std::numeric_limits<double>::infinity();
}

std::string MILRange::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(12) << "length,alpha,beta\n";
  for (const auto& [b, v] : bins_) os << b * quantum_ << ',' << v.alpha << ',' << v.beta << '\n';
  return os.str();
}

MILRange MILRange::from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  MILRange r;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    double l, a, b;
    char c1, c2;
    if (!(ls >> l >> c1 >> a >> c2 >> b)) throw Error(ErrorKind::InvalidInput, "bad MIL range row: " + line);
    r.set(l, {a, b});
  }
  return r;
}

MILRange build_mil_range(const MILProvider& provider, double quantum) {
  MILRange range(quantum);
  provider.for_each_edge_minimum([&](double length, double cost) { range.include(length, cost); });
  return range;
}

PathBounds aggregate_bounds(const VirtualGraph& graph, std::span<const NodeId> path, const MILRange& range) {
  PathBounds out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto len = graph.edge_length(path[i], path[i + 1]);
    if (!len) throw Error(ErrorKind::NotAPath, "consecutive v-path nodes are not adjacent");
    out.alpha += range.alpha(*len);
    out.beta += range.beta(*len);
  }
  return out;
}

}  // namespace dualnav
