#include "dyckstat/tree.hpp"

#include <algorithm>

#include "dyckstat/error.hpp"

namespace dyckstat {

std::size_t OrderedTree::edge_count() const noexcept {
  std::size_t n = children_.size();
  for (const auto& c : children_) n += c.edge_count();
  return n;
}

std::size_t OrderedTree::leaf_count() const noexcept {
  if (children_.empty()) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

int OrderedTree::height() const noexcept {
  int h = 0;
  for (const auto& c : children_) h = std::max(h, 1 + c.height());
  return h;
}

PlantedTree::PlantedTree(OrderedTree tree) : tree_(std::move(tree)) {
  if (tree_.children().size() != 1) {
    throw Error(ErrorKind::NotPlanted,
                "root has " + std::to_string(tree_.children().size()) + " children, expected exactly one");
  }
}

PlantedTree PlantedTree::stalk_over(OrderedTree below) {
  std::vector<OrderedTree> one;
  one.push_back(std::move(below));
  return PlantedTree(OrderedTree(std::move(one)));
}

OrderedTree path_to_tree(const DyckPath& p) {
  // Stack of open vertices; each holds the children collected so far.
  std::vector<std::vector<OrderedTree>> open(1);
  for (Step st : p.steps()) {
    if (st == Step::Up) {
      open.emplace_back();
    } else {
      OrderedTree done(std::move(open.back()));
      open.pop_back();
      open.back().push_back(std::move(done));
    }
  }
  return OrderedTree(std::move(open.front()));
}

namespace {

void append_word(const OrderedTree& t, std::vector<Step>& out) {
  for (const auto& c : t.children()) {
    out.push_back(Step::Up);
    append_word(c, out);
    out.push_back(Step::Down);
  }
}

void collect_edges(const OrderedTree& t, std::size_t self, int level, std::size_t& next,
                   std::vector<EdgeRef>& out, std::vector<std::size_t>* leaves) {
  for (const auto& c : t.children()) {
    const std::size_t id = ++next;
    out.push_back({self, id, level + 1});
    if (leaves) leaves->push_back(c.leaf_count());
    collect_edges(c, id, level + 1, next, out, leaves);
  }
}

void outline(const OrderedTree& t, int depth, std::string& out) {
  for (const auto& c : t.children()) {
    out.append(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    out += c.is_leaf() ? "o\n" : "+\n";
    outline(c, depth + 1, out);
  }
}

}  // namespace

DyckPath tree_to_path(const OrderedTree& t) {
  std::vector<Step> steps;
  steps.reserve(2 * t.edge_count());
  append_word(t, steps);
  return DyckPath(std::move(steps));
}

std::string render_word(const OrderedTree& t) { return render_text(tree_to_path(t)); }

std::string render_outline(const OrderedTree& t) {
  std::string out = "*\n";
  outline(t, 0, out);
  return out;
}

std::vector<EdgeRef> edges(const OrderedTree& t) {
  std::vector<EdgeRef> out;
  std::size_t next = 0;
  collect_edges(t, 0, 0, next, out, nullptr);
  return out;
}

std::vector<EdgeRef> exterior_edges(const OrderedTree& t) {
  std::vector<EdgeRef> all;
  std::vector<std::size_t> leaves;
  std::size_t next = 0;
  collect_edges(t, 0, 0, next, all, &leaves);
  std::vector<EdgeRef> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (leaves[i] >= 2) out.push_back(all[i]);
  }
  return out;
}

int edges_at_residue(const OrderedTree& t, const ResidueSpec& spec) {
  int count = 0;
  for (const auto& e : edges(t)) {
    if (spec.marks(e.level)) ++count;
  }
  return count;
}

int red_edge_count(const OrderedTree& t) { return edges_at_residue(t, ResidueSpec(3, {0})); }

std::vector<PlantedTree> decompose_planted(const OrderedTree& t) {
  std::vector<PlantedTree> out;
  out.reserve(t.children().size());
  for (const auto& c : t.children()) out.push_back(PlantedTree::stalk_over(c));
  return out;
}

OrderedTree merge_planted(const std::vector<PlantedTree>& parts) {
  std::vector<OrderedTree> children;
  children.reserve(parts.size());
  for (const auto& p : parts) children.push_back(p.top());
  return OrderedTree(std::move(children));
}

PlantedTree make_bouquet(int k) {
  if (k < 1) throw Error(ErrorKind::NonPositiveSize, "bouquet size must be positive");
  return PlantedTree::stalk_over(OrderedTree(std::vector<OrderedTree>(static_cast<std::size_t>(k - 1))));
}

PlantedTree make_path_tree(int k) {
  if (k < 1) throw Error(ErrorKind::NonPositiveSize, "path length must be positive");
  OrderedTree t;
  for (int i = 1; i < k; ++i) {
    std::vector<OrderedTree> one;
    one.push_back(std::move(t));
    t = OrderedTree(std::move(one));
  }
  return PlantedTree::stalk_over(std::move(t));
}

bool is_bouquet(const OrderedTree& t) {
  if (t.children().size() != 1) return false;
  const auto& v = t.children().front();
  return std::all_of(v.children().begin(), v.children().end(), [](const OrderedTree& c) { return c.is_leaf(); });
}

bool is_path_tree(const OrderedTree& t) {
  const OrderedTree* cur = &t;
  while (!cur->is_leaf()) {
    if (cur->children().size() != 1) return false;
    cur = &cur->children().front();
  }
  return true;
}

}  // namespace dyckstat
