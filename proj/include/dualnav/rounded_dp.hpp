#pragma once

#include "dualnav/basic_dp.hpp"

namespace dualnav {

// The exact DP restricted to `space`, with every edge length rounded up to a multiple of
// epsilon * lower / |space|, stopping at ceil(upper / quantum) + |space| quanta.
SolveResult rounded_dp(const MILProvider& provider, const DROPQuery& query, const StateSet& space, double lower,
                       double upper, double epsilon);

}  // namespace dualnav
