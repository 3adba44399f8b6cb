// Copyright 2026 The rematch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rematch/graph_equal.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rematch {
namespace {

using Color = std::size_t;

struct EdgeKey {
  NodeIndex source;
  NodeIndex target;
  bool operator==(const EdgeKey&) const = default;
};

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const noexcept {
    return std::hash<std::size_t>{}(k.source * 1000003u ^ k.target);
  }
};

// Colour refinement run jointly on both graphs so colours are comparable.
class Refiner {
 public:
  Refiner(const AmrGraph& a, const AmrGraph& b) : graphs_{&a, &b} {}

  std::pair<std::vector<Color>, std::vector<Color>> run() {
    std::map<std::string, Color> initial;
    std::vector<Color> ca = seed(*graphs_[0], initial);
    std::vector<Color> cb = seed(*graphs_[1], initial);
    std::size_t classes = initial.size();
    for (std::size_t round = 0; round < ca.size() + 1; ++round) {
      std::map<std::vector<std::size_t>, Color> table;
      auto na = refine(*graphs_[0], ca, table);
      auto nb = refine(*graphs_[1], cb, table);
      ca = std::move(na);
      cb = std::move(nb);
      if (table.size() == classes) break;
      classes = table.size();
    }
    return {std::move(ca), std::move(cb)};
  }

 private:
  static std::vector<Color> seed(const AmrGraph& g, std::map<std::string, Color>& table) {
    std::vector<Color> colors(g.node_count());
    for (NodeIndex n = 0; n < g.node_count(); ++n) {
      std::vector<std::string> attrs;
      for (std::size_t i : g.attributes_of(n)) {
        const Attribute& a = g.attributes()[i];
        attrs.push_back(a.label + '\x1f' + std::to_string(static_cast<int>(a.value.kind)) + '\x1f' +
                        a.value.lexical);
      }
      std::sort(attrs.begin(), attrs.end());
      std::string key = (n == g.root() ? "R\x1e" : "N\x1e") + g.concept_of(n);
      for (const auto& s : attrs) key += '\x1e' + s;
      colors[n] = table.emplace(std::move(key), table.size()).first->second;
    }
    return colors;
  }

  std::vector<Color> refine(const AmrGraph& g, const std::vector<Color>& colors,
                            std::map<std::vector<std::size_t>, Color>& table) {
    std::vector<Color> next(g.node_count());
    for (NodeIndex n = 0; n < g.node_count(); ++n) {
      std::vector<std::tuple<int, std::size_t, Color>> nbrs;
      for (std::size_t r : g.outgoing(n)) {
        const Relation& rel = g.relations()[r];
        nbrs.emplace_back(0, role_id(rel.role), colors[rel.target]);
      }
      for (std::size_t r : g.incoming(n)) {
        const Relation& rel = g.relations()[r];
        nbrs.emplace_back(1, role_id(rel.role), colors[rel.source]);
      }
      std::sort(nbrs.begin(), nbrs.end());
      std::vector<std::size_t> key{colors[n]};
      for (const auto& [dir, role, c] : nbrs) {
        key.push_back(static_cast<std::size_t>(dir));
        key.push_back(role);
        key.push_back(c);
      }
      next[n] = table.emplace(std::move(key), table.size()).first->second;
    }
    return next;
  }

  std::size_t role_id(const std::string& role) {
    return roles_.emplace(role, roles_.size()).first->second;
  }

  const AmrGraph* graphs_[2];
  std::unordered_map<std::string, std::size_t> roles_;
};

class Matcher {
 public:
  Matcher(const AmrGraph& a, const AmrGraph& b, std::vector<Color> ca, std::vector<Color> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        forward_(a.node_count(), kUnmapped), backward_(b.node_count(), kUnmapped) {
    for (const auto& r : b.relations()) b_edges_.emplace(EdgeKey{r.source, r.target}, &r.role);
    order_ = bfs_order();
  }

  bool run() { return extend(0); }

 private:
  static constexpr NodeIndex kUnmapped = static_cast<NodeIndex>(-1);

  std::vector<NodeIndex> bfs_order() const {
    std::vector<NodeIndex> order{a_.root()};
    std::vector<bool> seen(a_.node_count(), false);
    seen[a_.root()] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      NodeIndex n = order[head];
      auto visit = [&](NodeIndex m) {
        if (!seen[m]) {
          seen[m] = true;
          order.push_back(m);
        }
      };
      for (std::size_t r : a_.outgoing(n)) visit(a_.relations()[r].target);
      for (std::size_t r : a_.incoming(n)) visit(a_.relations()[r].source);
    }
    return order;
  }

  bool consistent(NodeIndex x, NodeIndex y) const {
    std::size_t mapped_edges_a = 0;
    auto check = [&](std::size_t r, bool out) {
      const Relation& rel = a_.relations()[r];
      NodeIndex other = out ? rel.target : rel.source;
      if (forward_[other] == kUnmapped) return true;
      ++mapped_edges_a;
      EdgeKey key = out ? EdgeKey{y, forward_[other]} : EdgeKey{forward_[other], y};
      auto it = b_edges_.find(key);
      return it != b_edges_.end() && *it->second == rel.role;
    };
    for (std::size_t r : a_.outgoing(x))
      if (!check(r, true)) return false;
    for (std::size_t r : a_.incoming(x))
      if (!check(r, false)) return false;

    std::size_t mapped_edges_b = 0;
    for (std::size_t r : b_.outgoing(y))
      if (backward_[b_.relations()[r].target] != kUnmapped) ++mapped_edges_b;
    for (std::size_t r : b_.incoming(y))
      if (backward_[b_.relations()[r].source] != kUnmapped) ++mapped_edges_b;
    return mapped_edges_a == mapped_edges_b;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    NodeIndex x = order_[depth];
    for (NodeIndex y = 0; y < b_.node_count(); ++y) {
      if (backward_[y] != kUnmapped || cb_[y] != ca_[x] || !consistent(x, y)) continue;
      forward_[x] = y;
      backward_[y] = x;
      if (extend(depth + 1)) return true;
      forward_[x] = kUnmapped;
      backward_[y] = kUnmapped;
    }
    return false;
  }

  const AmrGraph& a_;
  const AmrGraph& b_;
  std::vector<Color> ca_;
  std::vector<Color> cb_;
  std::vector<NodeIndex> forward_;
  std::vector<NodeIndex> backward_;
  std::vector<NodeIndex> order_;
  std::unordered_map<EdgeKey, const std::string*, EdgeKeyHash> b_edges_;
};

}  // namespace

bool graph_equal(const AmrGraph& a, const AmrGraph& b) {
  if (a.node_count() != b.node_count() || a.relations().size() != b.relations().size() ||
      a.attributes().size() != b.attributes().size())
    return false;
  auto [ca, cb] = Refiner(a, b).run();
  auto sa = ca;
  auto sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return Matcher(a, b, std::move(ca), std::move(cb)).run();
}

}  // namespace rematch
