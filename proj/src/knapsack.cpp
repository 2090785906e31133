#include "dualnav/knapsack.hpp"

#include <algorithm>

#include "dualnav/errors.hpp"

namespace dualnav {

KnapsackReduction kp_to_drop(const std::vector<KnapsackItem>& items, int capacity) {
  if (capacity < 0) throw Error(ErrorKind::InvalidInput, "negative capacity");
  for (const auto& it : items)
    if (it.weight < 0 || it.value < 0) throw Error(ErrorKind::InvalidInput, "negative item");
  KnapsackReduction red;
  red.items = items;
  red.capacity = capacity;
  int n = static_cast<int>(items.size());
  int vmax = 0;
  for (const auto& it : items) vmax = std::max(vmax, it.value);
  const double V = vmax;

  // The physical side mirrors the virtual one: one cell per node, every state faces east.
  auto world = std::make_shared<DualWorld>();
  world->orientations = OrientationSet(1);
  int cells = 2 * n + 1;
  world->grid = PhysicalGrid(cells + 2, 3, 1.0);
  auto cell_for = [&](int i) { return world->grid.id({i + 1, 1}); };
  for (int i = 0; i <= n; ++i) red.a_nodes.push_back(world->vgraph.add_node({i * (V + 2.0), 0.0}, "a" + std::to_string(i)));
  for (int i = 1; i <= n; ++i) red.b_nodes.push_back(world->vgraph.add_node({(i - 1) * (V + 2.0), 1.0}, "b" + std::to_string(i)));

  std::vector<LocoState> state_of(world->vgraph.node_count());
  for (std::uint32_t v = 0; v < world->vgraph.node_count(); ++v) state_of[v] = {NodeId(v), HeadingId(0), cell_for(static_cast<int>(v)), HeadingId(0)};

  std::vector<MILRecord> records;
  const double back = 2.0 * capacity;
  auto link = [&](NodeId x, NodeId y, double len, double cost) {
    world->vgraph.add_edge(x, y, len);
    records.push_back({state_of[x.value], state_of[y.value], cost});
    records.push_back({state_of[y.value], state_of[x.value], back});
  };
  for (int i = 0; i < n; ++i) {
    const auto& item = items[i];
    link(red.a_nodes[i], red.a_nodes[i + 1], V + 2.0, 0.0);
    link(red.a_nodes[i], red.b_nodes[i], V - item.value + 1.0, item.weight);
    link(red.b_nodes[i], red.a_nodes[i + 1], 1.0, 0.0);
  }
  red.provider = std::make_shared<TableMILProvider>(world, std::move(records), std::vector<LocoState>{state_of[0]});
  red.query = {state_of[0], red.a_nodes[n], static_cast<double>(capacity)};
  return red;
}

std::vector<int> KnapsackReduction::decode(const RWPath& path) const {
  std::vector<int> chosen;
  for (const auto& st : path.states)
    for (std::size_t i = 0; i < b_nodes.size(); ++i)
      if (st.v == b_nodes[i] && std::find(chosen.begin(), chosen.end(), static_cast<int>(i)) == chosen.end())
        chosen.push_back(static_cast<int>(i));
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

int KnapsackReduction::value_of(const std::vector<int>& chosen) const {
  int v = 0;
  for (int i : chosen) v += items[i].value;
  return v;
}

}  // namespace dualnav
