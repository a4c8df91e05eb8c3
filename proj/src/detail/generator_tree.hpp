#pragma once

#include <cstddef>
#include <vector>

#include "holoreg/group.hpp"

namespace holoreg::detail {

// Spanning tree of a group over an ordered generating set, organised so that
// the elements of <g_1..g_j> form a prefix of `order`.
struct GeneratorTree {
  std::vector<Elem> gens;
  std::vector<Elem> order;
  std::vector<std::size_t> layer_end;
  std::vector<Elem> parent;  // by element
  std::vector<int> via;      // generator index used to reach it
  std::vector<std::size_t> position;

  GeneratorTree(const FiniteGroup& g, std::vector<Elem> generators) : gens(std::move(generators)) {
    const std::size_t n = g.order();
    parent.assign(n, -1);
    via.assign(n, -1);
    position.assign(n, n);
    order.push_back(0);
    position[0] = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t q = 0; q < order.size(); ++q) {
        for (std::size_t i = 0; i <= j; ++i) {
          const Elem b = g.mul(order[q], gens[i]);
          if (position[static_cast<std::size_t>(b)] == n) {
            position[static_cast<std::size_t>(b)] = order.size();
            parent[static_cast<std::size_t>(b)] = order[q];
            via[static_cast<std::size_t>(b)] = static_cast<int>(i);
            order.push_back(b);
          }
        }
      }
      layer_end.push_back(order.size());
    }
  }
};

}  // namespace holoreg::detail
