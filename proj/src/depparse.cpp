#include "tamilparse/depparse.hpp"

#include <algorithm>
#include <sstream>

namespace tamilparse {

namespace {

constexpr size_t kUnassigned = static_cast<size_t>(-2);
constexpr size_t kRoot = static_cast<size_t>(-1);

// Innermost spans first: narrower before wider, later start first on ties.
std::vector<ClauseSpan> innermost_first(std::vector<ClauseSpan> spans) {
  std::stable_sort(spans.begin(), spans.end(),
                   [](const ClauseSpan& a, const ClauseSpan& b) {
                     const size_t wa = a.end - a.start, wb = b.end - b.start;
                     if (wa != wb) return wa < wb;
                     return a.start > b.start;
                   });
  return spans;
}

}  // namespace

DependencyTree build_tree(const AnnotatedSentence& sentence) {
  const size_t n = sentence.size();
  if (n == 0) throw StructuralError("build_tree: empty sentence");
  if (Verdict v = validate_chunks(sentence.chunks, n); !v)
    throw StructuralError("build_tree: " + v.reason);

  const auto& chunks = sentence.chunks;
  std::vector<size_t> parent(n, kUnassigned);

  // (1) chunk-internal attachment
  for (const Chunk& c : chunks)
    for (size_t i = c.start; i < c.end; ++i)
      if (i != c.head) parent[i] = c.head;

  // (2) root: head of the last VP; else head of the last chunk; else the
  // final token (SOV word order puts the predicate last).
  size_t root = n - 1;
  if (!chunks.empty()) {
    root = chunks.back().head;
    for (auto it = chunks.rbegin(); it != chunks.rend(); ++it)
      if (it->label == ChunkLabel::VP) {
        root = it->head;
        break;
      }
  }
  parent[root] = kRoot;

  std::vector<size_t> chunk_heads;
  for (const Chunk& c : chunks) chunk_heads.push_back(c.head);

  // (3) clause spans, innermost first
  const auto spans = innermost_first(clause_spans_from_labels(
      sentence.clause_labels.size() == n ? sentence.clause_labels
                                         : std::vector<ClauseLabel>(n,
                                                             ClauseLabel::O)));
  for (const ClauseSpan& span : spans) {
    // The clause's verbal head: head of the last VP inside the span, else
    // the rightmost chunk head inside it.
    size_t verbal = kUnassigned;
    bool have_vp = false;
    for (const Chunk& c : chunks) {
      if (c.head < span.start || c.head > span.end) continue;
      if (c.label == ChunkLabel::VP) {
        verbal = c.head;
        have_vp = true;
      } else if (!have_vp) {
        verbal = c.head;  // rightmost chunk head when no VP exists
      }
    }
    if (verbal == kUnassigned) continue;

    for (size_t h : chunk_heads) {
      if (h < span.start || h > span.end || h == verbal) continue;
      if (parent[h] == kUnassigned) parent[h] = verbal;
    }
    if (parent[verbal] == kUnassigned) {
      // Relative participle attaches to its following head noun.
      for (size_t h : chunk_heads) {
        if (h > span.end) {
          parent[verbal] = h;
          break;
        }
      }
    }
  }

  // (4) remaining chunk heads: PP to the nearest preceding NP head, the
  // rest to the root.
  for (const Chunk& c : chunks) {
    if (parent[c.head] != kUnassigned) continue;
    size_t target = root;
    if (c.label == ChunkLabel::PP) {
      for (auto it = chunks.rbegin(); it != chunks.rend(); ++it)
        if (it->label == ChunkLabel::NP && it->head < c.head) {
          target = it->head;
          break;
        }
    }
    parent[c.head] = target == c.head ? root : target;
  }

  // (5) unchunked tokens
  for (size_t i = 0; i < n; ++i)
    if (parent[i] == kUnassigned) parent[i] = root;

  // Cycle repair: anything that cannot reach ROOT reattaches to the root.
  for (size_t i = 0; i < n; ++i) {
    size_t cur = i, steps = 0;
    while (parent[cur] != kRoot && steps <= n) {
      cur = parent[cur];
      ++steps;
    }
    if (steps > n) parent[i] = root;
  }

  DependencyTree tree;
  tree.heads.resize(n);
  tree.relations.resize(n);
  for (size_t i = 0; i < n; ++i) {
    tree.heads[i] = parent[i] == kRoot ? 0 : parent[i] + 1;
    tree.relations[i] = parent[i] == kRoot ? "root" : "dep";
  }
  return tree;
}

std::string render_dot(const DependencyTree& tree,
                       const std::vector<Token>& tokens) {
  if (Verdict v = validate_tree(tree); !v)
    throw StructuralError("render_dot: " + v.reason);
  if (tree.size() != tokens.size())
    throw StructuralError("render_dot: token count differs from tree size");

  std::ostringstream out;
  out << "digraph dependency {\n";
  out << "  root [label=\"ROOT\"];\n";
  for (size_t i = 0; i < tokens.size(); ++i)
    out << "  n" << (i + 1) << " [label=\"" << (i + 1) << ':'
        << tokens[i].surface << "\"];\n";
  for (size_t i = 0; i < tokens.size(); ++i) {
    out << "  n" << (i + 1) << " -> ";
    if (tree.heads[i] == 0)
      out << "root";
    else
      out << 'n' << tree.heads[i];
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_text(const DependencyTree& tree,
                        const std::vector<Token>& tokens) {
  if (Verdict v = validate_tree(tree); !v)
    throw StructuralError("render_text: " + v.reason);
  if (tree.size() != tokens.size())
    throw StructuralError("render_text: token count differs from tree size");

  const size_t n = tokens.size();
  std::vector<std::vector<size_t>> children(n);
  size_t root = 0;
  for (size_t i = 0; i < n; ++i) {
    if (tree.heads[i] == 0)
      root = i;
    else
      children[tree.heads[i] - 1].push_back(i);  // token order preserved
  }

  std::ostringstream out;
  auto emit = [&](auto&& self, size_t node, size_t depth) -> void {
    out << std::string(depth * 2, ' ') << tokens[node].surface << '\n';
    for (size_t child : children[node]) self(self, child, depth + 1);
  };
  emit(emit, root, 0);
  return out.str();
}

}  // namespace tamilparse
