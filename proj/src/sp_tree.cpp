#include "stg/sp_tree.hpp"

#include <cctype>

#include "stg/errors.hpp"

namespace stg {

SpTree SpTree::leaf(Probability p) {
  SpTree t;
  SpNode node;
  node.kind = SpKind::Leaf;
  node.p = p;
  t.nodes_.push_back(node);
  t.assign_terminals();
  return t;
}

SpTree SpTree::series(const SpTree& first, const SpTree& second) {
  SpTree t;
  t.nodes_ = first.nodes_;
  const std::size_t offset = first.nodes_.size();
  for (SpNode n : second.nodes_) {
    if (n.kind != SpKind::Leaf) {
      n.left += offset;
      n.right += offset;
    }
    t.nodes_.push_back(n);
  }
  SpNode root;
  root.kind = SpKind::Series;
  root.left = offset - 1;
  root.right = t.nodes_.size() - 1;
  t.nodes_.push_back(root);
  t.assign_terminals();
  return t;
}

SpTree SpTree::parallel(const SpTree& first, const SpTree& second) {
  SpTree t = series(first, second);
  t.nodes_.back().kind = SpKind::Parallel;
  t.assign_terminals();
  return t;
}

void SpTree::assign_terminals() {
  // Pre-order walk from the root; children sit at lower indices.
  VertexId next_vertex = 2;
  EdgeId next_edge = 0;
  std::vector<std::size_t> stack{root()};
  nodes_.back().source = 0;
  nodes_.back().sink = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    SpNode& node = nodes_[i];
    switch (node.kind) {
      case SpKind::Leaf:
        node.edge = next_edge++;
        node.orientation = node.source > node.sink;
        break;
      case SpKind::Series: {
        const VertexId mid = next_vertex++;
        nodes_[node.left].source = node.source;
        nodes_[node.left].sink = mid;
        nodes_[node.right].source = mid;
        nodes_[node.right].sink = node.sink;
        stack.push_back(node.right);
        stack.push_back(node.left);
        break;
      }
      case SpKind::Parallel:
        nodes_[node.left].source = node.source;
        nodes_[node.left].sink = node.sink;
        nodes_[node.right].source = node.source;
        nodes_[node.right].sink = node.sink;
        stack.push_back(node.right);
        stack.push_back(node.left);
        break;
    }
  }
  vertex_count_ = next_vertex;
}

std::vector<Probability> SpTree::edge_probabilities() const {
  std::vector<Probability> probs(leaf_count());
  for (const SpNode& n : nodes_) {
    if (n.kind == SpKind::Leaf) probs[n.edge] = n.p;
  }
  return probs;
}

StaticGraph SpTree::underlying_graph(bool directed) const {
  std::vector<Edge> edges(leaf_count());
  for (const SpNode& n : nodes_) {
    if (n.kind == SpKind::Leaf) edges[n.edge] = {n.source, n.sink};
  }
  StaticGraph g(vertex_count_, directed);
  for (const Edge& e : edges) {
    if (g.find_edge(e.u, e.v) || (!directed && g.find_edge(e.v, e.u))) {
      throw PreconditionError("parallel composition duplicates edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "); multigraphs are not supported");
    }
    g.add_edge(e.u, e.v);
  }
  return g;
}

std::string SpTree::to_string() const {
  std::vector<std::string> text(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const SpNode& n = nodes_[i];
    switch (n.kind) {
      case SpKind::Leaf:
        text[i] = "e(" + n.p.to_string() + ")";
        break;
      case SpKind::Series:
        text[i] = "S(" + text[n.left] + ", " + text[n.right] + ")";
        break;
      case SpKind::Parallel:
        text[i] = "P(" + text[n.left] + ", " + text[n.right] + ")";
        break;
    }
  }
  return text.back();
}

namespace {

class SpParser {
 public:
  explicit SpParser(std::string_view text) : text_(text) {}

  SpTree parse() {
    SpTree t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("SP expression, offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  SpTree expr() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char head = text_[pos_++];
    if (head == 'e') {
      expect('(');
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')' && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      Probability p;
      try {
        p = Probability::parse(text_.substr(start, pos_ - start));
      } catch (const Error& e) {
        fail(e.what());
      }
      expect(')');
      return SpTree::leaf(p);
    }
    if (head == 'S' || head == 'P') {
      expect('(');
      SpTree a = expr();
      expect(',');
      SpTree b = expr();
      expect(')');
      return head == 'S' ? SpTree::series(a, b) : SpTree::parallel(a, b);
    }
    --pos_;
    fail(std::string("unexpected '") + head + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SpTree parse_sp_expression(std::string_view text) { return SpParser(text).parse(); }

}  // namespace stg
