#include "dualnav/rounded_dp.hpp"

#include <cmath>

#include "dualnav/errors.hpp"

namespace dualnav {

SolveResult rounded_dp(const MILProvider& provider, const DROPQuery& query, const StateSet& space, double lower,
                       double upper, double epsilon) {
  if (!(epsilon > 0)) throw Error(ErrorKind::InvalidInput, "epsilon must be positive");
  if (space.empty() || !space.count(query.start)) return SolveResult{};
  if (!(lower > 0)) throw Error(ErrorKind::InvalidInput, "length lower bound must be positive");
  double quantum = epsilon * lower / static_cast<double>(space.size());
  LabelDPConfig cfg;
  cfg.unit = quantum;
  cfg.round_up = true;
  cfg.allowed = &space;
  cfg.max_key = static_cast<long long>(std::ceil(upper / quantum - 1e-9)) + static_cast<long long>(space.size());
  return label_dp(provider, query, cfg).result;
}

}  // namespace dualnav
