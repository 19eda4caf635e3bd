#include "fpaths/wtree.hpp"

#include <cassert>
#include <cctype>
#include <functional>

#include "fpaths/error.hpp"

namespace fpaths {

namespace {

int count_edges(const std::vector<WNode>& forest) {
  int total = 0;
  for (const WNode& v : forest) total += 1 + count_edges(v.children);
  return total;
}

void check_node(const WNode& v, int& label) {
  const int here = ++label;
  if (v.is_leaf()) {
    if (v.weight != 0) throw Error(ErrorKind::WeightOnLeafOrRoot, "leaf carries a weight", static_cast<std::size_t>(here));
    return;
  }
  const int degree = static_cast<int>(v.children.size());
  if (v.weight < 1 || v.weight > degree) {
    throw Error(ErrorKind::WeightOutOfRange,
                "weight " + std::to_string(v.weight) + " with outdegree " + std::to_string(degree),
                static_cast<std::size_t>(here));
  }
  for (const WNode& c : v.children) check_node(c, label);
}

void walk(const WNode& v, int parent, bool first, std::vector<PreorderVertex>& out) {
  const int here = static_cast<int>(out.size());
  out.push_back({parent, v.weight, static_cast<int>(v.children.size()), first});
  for (std::size_t i = 0; i < v.children.size(); ++i) walk(v.children[i], here, i == 0, out);
}

}  // namespace

int WTree::edges() const { return count_edges(subtrees_); }

WTree WTree::from_subtrees(std::vector<WNode> subtrees) {
  if (subtrees.empty()) throw Error(ErrorKind::EmptyTree, "tree has no edges", 0);
  int label = 0;
  for (const WNode& v : subtrees) check_node(v, label);
  return WTree(std::move(subtrees));
}

WTree validate_wtree(std::vector<WNode> subtrees) { return WTree::from_subtrees(std::move(subtrees)); }

std::vector<PreorderVertex> preorder(const WTree& t) {
  std::vector<PreorderVertex> out;
  out.push_back({-1, 0, t.root_degree(), false});
  for (std::size_t i = 0; i < t.subtrees().size(); ++i) walk(t.subtrees()[i], 0, i == 0, out);
  return out;
}

StatTriple wtree_stats(const WTree& t) {
  const auto vs = preorder(t);
  StatTriple s;
  s.h = t.root_degree() - 1;
  int leaves = 0;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    leaves += vs[i].degree == 0;
    s.a1 += vs[i].weight == 1;
  }
  s.l = leaves - 1;
  return s;
}

FPath phi_T(const WTree& t) {
  const auto vs = preorder(t);
  const int n = static_cast<int>(vs.size()) - 2;
  std::vector<FStep> steps;
  for (int i = 1; i <= n; ++i) {
    const PreorderVertex& v = vs[static_cast<std::size_t>(n - i + 2)];
    if (v.first_child && v.parent > 0) {
      const PreorderVertex& p = vs[static_cast<std::size_t>(v.parent)];
      steps.push_back({p.weight, p.weight - p.degree + 1});
    } else {
      steps.push_back(kNorth);
    }
  }
  return FPath::trusted(std::move(steps));
}

WTree psi_T(const FPath& q) {
  const int n = static_cast<int>(q.size());
  // Flat construction: vertex 0 is the root, vertex j is v_j.
  std::vector<int> weight(static_cast<std::size_t>(n) + 2, 0);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 2);
  struct Open {
    int vertex;
    int slots;
  };
  std::vector<Open> stack{{0, q.height() + 1}};
  auto attach_to_open = [&](int j) {
    while (!stack.empty() && stack.back().slots == 0) stack.pop_back();
    assert(!stack.empty());
    children[static_cast<std::size_t>(stack.back().vertex)].push_back(j);
    --stack.back().slots;
  };
  attach_to_open(1);
  for (int j = 2; j <= n + 1; ++j) {
    const FStep& s = q[static_cast<std::size_t>(n - j + 1)];
    if (s.is_north()) {
      attach_to_open(j);
    } else {
      weight[static_cast<std::size_t>(j - 1)] = s.dx;
      stack.push_back({j - 1, s.dx - s.dy + 1});
      children[static_cast<std::size_t>(j - 1)].push_back(j);
      --stack.back().slots;
    }
  }
  for ([[maybe_unused]] const Open& o : stack) assert(o.slots == 0);

  std::function<WNode(int)> build = [&](int v) {
    WNode node{weight[static_cast<std::size_t>(v)], {}};
    for (int c : children[static_cast<std::size_t>(v)]) node.children.push_back(build(c));
    return node;
  };
  std::vector<WNode> subtrees;
  for (int c : children[0]) subtrees.push_back(build(c));
  return WTree::trusted(std::move(subtrees));
}

namespace {

// All ordered forests with the given number of edges, unweighted.
std::vector<std::vector<WNode>> forests(int edges) {
  if (edges == 0) return {{}};
  std::vector<std::vector<WNode>> out;
  for (int k = 1; k <= edges; ++k) {
    const auto inner = forests(k - 1);
    const auto rest = forests(edges - k);
    for (const auto& in : inner) {
      for (const auto& tail : rest) {
        std::vector<WNode> f;
        f.push_back(WNode{in.empty() ? 0 : 1, in});
        f.insert(f.end(), tail.begin(), tail.end());
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

void interior_nodes(std::vector<WNode>& forest, std::vector<WNode*>& out) {
  for (WNode& v : forest) {
    if (!v.is_leaf()) out.push_back(&v);
    interior_nodes(v.children, out);
  }
}

}  // namespace

std::vector<WTree> gen_wtrees(int edges, int guard) {
  check_guard(edges, guard + 1, "gen_wtrees");
  std::vector<WTree> out;
  if (edges < 1) return out;
  for (auto shape : forests(edges)) {
    std::vector<WNode*> interior;
    interior_nodes(shape, interior);
    for (WNode* v : interior) v->weight = 1;
    while (true) {
      out.push_back(WTree::trusted(shape));
      // Odometer over the preorder weight vector, last vertex fastest.
      std::size_t i = interior.size();
      while (i > 0) {
        WNode* v = interior[i - 1];
        if (v->weight < static_cast<int>(v->children.size())) {
          ++v->weight;
          break;
        }
        v->weight = 1;
        --i;
      }
      if (i == 0) break;
    }
  }
  return out;
}

WTree wtree_direct_sum(const WTree& t, const WTree& s) {
  std::vector<WNode> subtrees = s.subtrees();
  subtrees.insert(subtrees.end(), t.subtrees().begin(), t.subtrees().end());
  return WTree::trusted(std::move(subtrees));
}

namespace {

void render_node(const WNode& v, std::string& out) {
  if (v.is_leaf()) {
    out += 'L';
    return;
  }
  out += '(';
  out += std::to_string(v.weight);
  for (const WNode& c : v.children) {
    out += ' ';
    render_node(c, out);
  }
  out += ')';
}

class TreeParser {
 public:
  explicit TreeParser(const std::string& text) : text_(text) {}

  std::vector<WNode> parse() {
    skip_space();
    expect('[');
    std::vector<WNode> subtrees;
    while (true) {
      skip_space();
      if (peek() == ']') break;
      subtrees.push_back(subtree());
    }
    expect(']');
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return subtrees;
  }

 private:
  WNode subtree() {
    skip_space();
    if (peek() == 'L') {
      ++pos_;
      return {};
    }
    expect('(');
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a weight");
    int weight = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      weight = weight * 10 + (text_[pos_++] - '0');
      if (weight > 1'000'000) fail("weight too large");
    }
    WNode node{weight, {}};
    while (true) {
      skip_space();
      if (peek() == ')') break;
      node.children.push_back(subtree());
    }
    if (node.children.empty()) fail("interior vertex needs a child");
    expect(')');
    return node;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what, pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_wtree(const WTree& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.subtrees().size(); ++i) {
    if (i > 0) out += ' ';
    render_node(t.subtrees()[i], out);
  }
  out += ']';
  return out;
}

WTree parse_wtree(const std::string& text) {
  return WTree::from_subtrees(TreeParser(text).parse());
}

}  // namespace fpaths
