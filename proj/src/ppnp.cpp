#include "dualnav/ppnp.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>

#include "dualnav/rw_path.hpp"

namespace dualnav {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTol = 1e-9;

struct Labels {
  double l_l = kInf, c_l = kInf;  // shortest label and its cost
  double l_c = kInf, c_c = kInf;  // cheapest label and its length
  unsigned version = 0;
  bool visited = false, locked = false, pruned = false;
};

// Dijkstra from the start on (primary, secondary) = (length, cost) or (cost, length).
template <bool ByCost, class Admit>
std::unordered_map<LocoState, std::pair<double, double>> exact_labels(const MILProvider& provider, const LocoState& start,
                                                                      Admit&& admit) {
  std::unordered_map<LocoState, std::pair<double, double>> best;
  std::set<LocoState> done;
  using Entry = std::tuple<double, double, LocoState>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  best[start] = {0.0, 0.0};
  open.emplace(0.0, 0.0, start);
  while (!open.empty()) {
    auto [a, b, st] = open.top();
    open.pop();
    auto cur = best[st];
    if (a > cur.first + 1e-12 || (a >= cur.first - 1e-12 && b > cur.second + 1e-12) || !done.insert(st).second) continue;
    double len = ByCost ? b : a, cost = ByCost ? a : b;
    if (!admit(st, len, cost)) continue;
    for (const auto& t : provider.successors(st)) {
      double na = a + (ByCost ? t.cost : t.length), nb = b + (ByCost ? t.length : t.cost);
      auto it = best.find(t.to);
      if (it != best.end() && (it->second.first < na - 1e-12 || (it->second.first <= na + 1e-12 && it->second.second <= nb + 1e-12)))
        continue;
      best[t.to] = {na, nb};
      open.emplace(na, nb, t.to);
    }
  }
  return best;
}
}  // namespace

PpnpResult ppnp(const MILProvider& provider, const DROPQuery& query, double reference_length, const Heuristics& h,
                const PruningOptions& opt) {
  PpnpResult out;
  const double C = query.budget;
  double upper = reference_length;
  std::unordered_map<LocoState, Labels> lab;
  std::set<LocoState> locked;
  std::unordered_map<LocoState, std::optional<double>> greedy_cost;

  auto v_of = [](const LocoState& st) { return st.v.value; };
  auto ilsp_fails = [&](const LocoState& st) {
    return h.alpha_from_source[v_of(st)] + h.alpha_to_target[v_of(st)] > C + kTol;
  };
  auto slsp_fails = [&](const LocoState& st) {
    return h.len_from_source[v_of(st)] + h.len_to_target[v_of(st)] > upper + kTol;
  };
  auto must_wait = [&](const LocoState& st, const Labels& L) {
    return L.c_c + h.alpha_to_target[v_of(st)] > C + kTol || L.l_l + h.len_to_target[v_of(st)] > upper + kTol;
  };

  // 0 = just unlocked (served first), 1 = regular; regular order is by the length bound, deeper first.
  using Entry = std::tuple<int, long long, double, LocoState, unsigned>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  auto push = [&](const LocoState& st, int cls) {
    auto& L = lab[st];
    ++L.version;
    double bound = L.l_l + h.len_to_target[v_of(st)];
    open.emplace(cls, std::isfinite(bound) ? std::llround(bound * 1e9) : std::numeric_limits<long long>::max(), -L.l_l, st,
                 L.version);
  };

  // A label pair certifies a shorter feasible completion when the greedy walk along the remaining shortest
  // v-path fits in the leftover budget.
  auto certify = [&](const LocoState& st, double l, double c) {
    double rest = h.len_to_target[v_of(st)];
    if (!(l + rest < upper - kTol) || !(c + h.beta_on_shortest[v_of(st)] <= C + kTol)) return;
    auto [it, fresh] = greedy_cost.try_emplace(st);
    if (fresh) {
      auto vp = h.shortest_to_target(st.v);
      if (!vp.empty())
        if (auto g = greedy_realize(provider, vp, st)) it->second = g->cost;
    }
    if (it->second && c + *it->second <= C + kTol) upper = l + rest;
  };

  lab[query.start] = Labels{0.0, 0.0, 0.0, 0.0};
  push(query.start, 1);

  for (;;) {
    while (!open.empty()) {
      auto [cls, key, depth, st, ver] = open.top();
      open.pop();
      auto& L = lab[st];
      if (ver != L.version || L.pruned) continue;
      auto& counts = out.per_node[st.v];
      ++counts.popped;
      if (opt.ilsp && ilsp_fails(st)) {
        L.pruned = true;
        ++out.ilsp_pruned;
        ++counts.ilsp;
        continue;
      }
      if (opt.slsp && slsp_fails(st)) {
        L.pruned = true;
        ++out.slsp_pruned;
        ++counts.slsp;
        continue;
      }
      if (opt.ulsl && must_wait(st, L)) {
        if (!L.locked) {
          L.locked = true;
          locked.insert(st);
          ++out.locks;
        }
        continue;
      }
      L.visited = true;
      out.trimmed.insert(st);
      if (st.v == query.target) continue;
      ++out.expanded;
      const Labels from = L;
      for (const auto& t : provider.successors(st)) {
        auto& T = lab[t.to];
        if (T.pruned) continue;
        bool len_improved = false, cost_improved = false;
        double nl = from.l_l + t.length, ncl = from.c_l + t.cost;
        if (nl < T.l_l - 1e-12 || (nl <= T.l_l + 1e-12 && ncl < T.c_l - 1e-12)) {
          T.l_l = nl;
          T.c_l = ncl;
          len_improved = true;
        }
        double ncc = from.c_c + t.cost, nlc = from.l_c + t.length;
        if (ncc < T.c_c - 1e-12 || (ncc <= T.c_c + 1e-12 && nlc < T.l_c - 1e-12)) {
          T.c_c = ncc;
          T.l_c = nlc;
          cost_improved = true;
        }
        if (!len_improved && !cost_improved) continue;
        certify(t.to, T.l_l, T.c_l);
        certify(t.to, T.l_c, T.c_c);
        if (T.locked) {
          if (!must_wait(t.to, T)) {
            T.locked = false;
            locked.erase(t.to);
            ++out.unlocks;
            push(t.to, 0);
          }
        } else if (len_improved || !T.visited) {
          // A cheaper label alone does not re-open a visited state: the search runs in length order and
          // the exact rounds below settle whatever the cheaper labels would have released.
          push(t.to, 1);
        }
      }
    }
    if (locked.empty()) break;

    // Every remaining state is shelved: recompute exact labels over the unpruned region and retry.
    ++out.exact_rounds;
    auto admissible = [&](const LocoState& st) {
      auto it = lab.find(st);
      if (it != lab.end() && it->second.pruned) return false;
      return !(opt.ilsp && ilsp_fails(st)) && !(opt.slsp && slsp_fails(st));
    };
    auto by_len = exact_labels<false>(provider, query.start, [&](const LocoState& st, double l, double) {
      return admissible(st) && l + h.len_to_target[v_of(st)] <= upper + kTol;
    });
    auto by_cost = exact_labels<true>(provider, query.start, [&](const LocoState& st, double, double c) {
      return admissible(st) && c + h.alpha_to_target[v_of(st)] <= C + kTol;
    });
    std::vector<LocoState> released;
    for (const auto& st : locked) {
      auto& L = lab[st];
      if (auto it = by_len.find(st); it != by_len.end() && it->second.first < L.l_l - 1e-12) {
        L.l_l = it->second.first;
        L.c_l = it->second.second;
      }
      if (auto it = by_cost.find(st); it != by_cost.end() && it->second.first < L.c_c - 1e-12) {
        L.c_c = it->second.first;
        L.l_c = it->second.second;
      }
      if (!must_wait(st, L)) released.push_back(st);
    }
    if (released.empty()) break;
    for (const auto& st : released) {
      lab[st].locked = false;
      locked.erase(st);
      ++out.unlocks;
      push(st, 0);
    }
  }
  out.upper_bound = upper;
  return out;
}

}  // namespace dualnav
