#include "dyckstat/pi.hpp"

#include <algorithm>
#include <optional>

#include "dyckstat/error.hpp"

// Planted trees are handled through their "top": the subtree hanging below
// the planting stalk. For a planted tree T with stalk uv, top(T) is v.

namespace dyckstat {

std::string to_string(PhiCase c) {
  switch (c) {
    case PhiCase::Base: return "Base";
    case PhiCase::Case1: return "Case1";
    case PhiCase::Case2: return "Case2";
    case PhiCase::Case3: return "Case3";
  }
  return "?";
}

namespace {

// tau(vw) is exterior iff the subtree rooted at w has at least two leaves.
bool exterior_below(const OrderedTree& w) { return w.leaf_count() >= 2; }

OrderedTree leaves(std::size_t count) { return OrderedTree(std::vector<OrderedTree>(count)); }

// Top of a path tree with k edges: a chain of k-1 edges.
OrderedTree chain_top(std::size_t k) { return make_path_tree(static_cast<int>(k)).top(); }

std::string planted_word(const OrderedTree& top) {
  std::string w = "U";
  w += render_word(top);
  w += 'D';
  return w;
}

// Every recursive call works on strictly fewer edges than its caller.
void guard_shrinks(std::size_t edges, std::size_t caller_edges) {
  if (edges >= caller_edges) throw Error(ErrorKind::Internal, "recursion did not shrink the tree");
}

void record(PhiTrace* trace, int depth, PhiCase label, const OrderedTree& top) {
  if (trace) trace->entries.push_back({depth, label, planted_word(top)});
}

PhiCase forward_case(const OrderedTree& v) {
  if (is_path_tree(v)) return PhiCase::Base;
  const auto& w = v.children();
  const std::size_t r = w.size();
  if (exterior_below(w[r - 1])) return PhiCase::Case1;
  if (r < 2) throw Error(ErrorKind::Internal, "single non-exterior child below a non-path tree");
  if (exterior_below(w[r - 2])) return PhiCase::Case2;
  return PhiCase::Case3;
}

// Position of x in q's children: the last child of q that has children.
std::optional<std::size_t> rightmost_level3_parent(const OrderedTree& q) {
  const auto& kids = q.children();
  for (std::size_t i = kids.size(); i-- > 0;) {
    if (!kids[i].is_leaf()) return i;
  }
  return std::nullopt;
}

PhiCase inverse_case(const OrderedTree& q) {
  const auto ix = rightmost_level3_parent(q);
  if (!ix) return PhiCase::Base;
  const auto& kids = q.children();
  if (kids[*ix].children().size() > 1) return PhiCase::Case1;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i != *ix && !kids[i].is_leaf()) return PhiCase::Case2;
  }
  return PhiCase::Case3;
}

OrderedTree phi_top(const OrderedTree& v, std::size_t caller_edges, int depth, PhiTrace* trace);

// Tops of phi(tau(v w_j)) for j in [0, count), i.e. the vertices that get
// merged into y.
std::vector<OrderedTree> phi_children(const OrderedTree& v, std::size_t count, int depth, PhiTrace* trace) {
  std::vector<OrderedTree> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(phi_top(v.children()[j], v.edge_count(), depth + 1, trace));
  return out;
}

OrderedTree phi_top(const OrderedTree& v, std::size_t caller_edges, int depth, PhiTrace* trace) {
  guard_shrinks(v.edge_count(), caller_edges);
  const PhiCase label = forward_case(v);
  record(trace, depth, label, v);
  const auto& w = v.children();
  const std::size_t r = w.size();

  switch (label) {
    case PhiCase::Base:
      // Bouquet of the same size.
      return leaves(v.edge_count());

    case PhiCase::Case1: {
      auto below_y = phi_children(v, r - 1, depth, trace);
      auto q_kids = phi_top(w[r - 1], v.edge_count(), depth + 1, trace).children();
      OrderedTree q(std::move(q_kids));
      const auto ix = rightmost_level3_parent(q);
      if (!ix) throw Error(ErrorKind::Internal, "image of an exterior subtree has no level-3 edge");
      auto kids = std::move(q).children();
      auto x_kids = std::move(kids[*ix]).children();
      x_kids.emplace_back(std::move(below_y));
      kids[*ix] = OrderedTree(std::move(x_kids));
      return OrderedTree(std::move(kids));
    }

    case PhiCase::Case2: {
      const std::size_t t = 1 + w[r - 1].edge_count();
      auto below_y = phi_children(v, r - 2, depth, trace);
      auto kids = phi_top(w[r - 2], v.edge_count(), depth + 1, trace).children();
      std::vector<OrderedTree> x_kids;
      x_kids.emplace_back(std::move(below_y));
      kids.emplace_back(std::move(x_kids));
      kids.resize(kids.size() + (t - 1));
      return OrderedTree(std::move(kids));
    }

    case PhiCase::Case3: {
      const std::size_t t1 = 1 + w[r - 2].edge_count();
      const std::size_t t2 = 1 + w[r - 1].edge_count();
      auto below_y = phi_children(v, r - 2, depth, trace);
      std::vector<OrderedTree> kids(t1 - 1);
      std::vector<OrderedTree> x_kids;
      x_kids.emplace_back(std::move(below_y));
      kids.emplace_back(std::move(x_kids));
      kids.resize(kids.size() + (t2 - 1));
      return OrderedTree(std::move(kids));
    }
  }
  throw Error(ErrorKind::Internal, "unreachable case in phi");
}

OrderedTree phi_inverse_top(const OrderedTree& q, std::size_t caller_edges, int depth, PhiTrace* trace) {
  guard_shrinks(q.edge_count(), caller_edges);
  const PhiCase label = inverse_case(q);
  record(trace, depth, label, q);

  if (label == PhiCase::Base) {
    if (!std::all_of(q.children().begin(), q.children().end(), [](const OrderedTree& c) { return c.is_leaf(); })) {
      throw Error(ErrorKind::Internal, "tree without red edges is not a bouquet");
    }
    return chain_top(1 + q.edge_count());
  }

  const std::size_t ix = *rightmost_level3_parent(q);
  const auto& kids = q.children();
  const OrderedTree& x = kids[ix];
  const OrderedTree& y = x.children().back();

  std::vector<OrderedTree> v_kids;
  for (const auto& wj : y.children()) v_kids.push_back(phi_inverse_top(wj, q.edge_count(), depth + 1, trace));

  switch (label) {
    case PhiCase::Case1: {
      // Q = T - tau(xy).
      std::vector<OrderedTree> x_kids(x.children().begin(), x.children().end() - 1);
      std::vector<OrderedTree> q_kids = kids;
      q_kids[ix] = OrderedTree(std::move(x_kids));
      v_kids.push_back(phi_inverse_top(OrderedTree(std::move(q_kids)), q.edge_count(), depth + 1, trace));
      break;
    }
    case PhiCase::Case2: {
      // Q = T - tau(qx) - {q z_1, ..., q z_t}; the z's are the leaves right of x.
      const std::size_t t = kids.size() - ix - 1;
      for (std::size_t i = ix + 1; i < kids.size(); ++i) {
        if (!kids[i].is_leaf()) throw Error(ErrorKind::Internal, "non-leaf right of the rightmost level-3 edge");
      }
      std::vector<OrderedTree> q_kids(kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(ix));
      v_kids.push_back(phi_inverse_top(OrderedTree(std::move(q_kids)), q.edge_count(), depth + 1, trace));
      v_kids.push_back(chain_top(t + 1));
      break;
    }
    case PhiCase::Case3: {
      const std::size_t t1 = ix;
      const std::size_t t2 = kids.size() - ix - 1;
      v_kids.push_back(chain_top(t1 + 1));
      v_kids.push_back(chain_top(t2 + 1));
      break;
    }
    case PhiCase::Base:
      break;
  }
  return OrderedTree(std::move(v_kids));
}

}  // namespace

PhiCase phi_case(const PlantedTree& t) { return forward_case(t.top()); }

PhiCase phi_inverse_case(const PlantedTree& t) { return inverse_case(t.top()); }

PlantedTree phi(const PlantedTree& t, PhiTrace* trace) { return PlantedTree::stalk_over(phi_top(t.top(), t.edge_count(), 0, trace)); }

PlantedTree phi_inverse(const PlantedTree& t, PhiTrace* trace) {
  return PlantedTree::stalk_over(phi_inverse_top(t.top(), t.edge_count(), 0, trace));
}

OrderedTree Phi(const OrderedTree& t, PhiTrace* trace) {
  std::vector<PlantedTree> parts;
  for (const auto& part : decompose_planted(t)) parts.push_back(phi(part, trace));
  return merge_planted(parts);
}

OrderedTree Phi_inverse(const OrderedTree& t, PhiTrace* trace) {
  std::vector<PlantedTree> parts;
  for (const auto& part : decompose_planted(t)) parts.push_back(phi_inverse(part, trace));
  return merge_planted(parts);
}

DyckPath Pi(const DyckPath& p, PhiTrace* trace) { return tree_to_path(Phi(path_to_tree(p), trace)); }

DyckPath Pi_inverse(const DyckPath& p, PhiTrace* trace) {
  return tree_to_path(Phi_inverse(path_to_tree(p), trace));
}

}  // namespace dyckstat
