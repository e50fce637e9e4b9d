#include "tamilparse/core.hpp"

#include <algorithm>
#include <array>

namespace tamilparse {

namespace {

const std::array<std::string, kNumPosTags> kPosNames = {
    "N",   "V",   "ADJ", "ADV", "DET", "P",    "PRP",
    "CRD", "INT", "CNJ", "RCM", "VAUX", "SYM", "UNK"};

const std::array<std::string, 5> kChunkNames = {"NP", "VP", "PP", "ADJP",
                                                "ADVP"};

const std::array<std::string, 3> kClauseNames = {"O", "CB-REL", "CE"};

}  // namespace

const std::string& to_string(PosTag tag) {
  return kPosNames[static_cast<int>(tag)];
}

std::optional<PosTag> parse_pos_tag(const std::string& name) {
  for (int i = 0; i < kNumPosTags; ++i)
    if (kPosNames[i] == name) return static_cast<PosTag>(i);
  return std::nullopt;
}

const std::string& to_string(ChunkLabel label) {
  return kChunkNames[static_cast<int>(label)];
}

std::optional<ChunkLabel> parse_chunk_label(const std::string& name) {
  for (size_t i = 0; i < kChunkNames.size(); ++i)
    if (kChunkNames[i] == name) return static_cast<ChunkLabel>(i);
  return std::nullopt;
}

std::string to_string(const ChunkTag& tag) {
  switch (tag.kind) {
    case ChunkTag::O: return "O";
    case ChunkTag::B: return "B-" + to_string(tag.label);
    case ChunkTag::I: return "I-" + to_string(tag.label);
  }
  return "O";
}

std::optional<ChunkTag> parse_chunk_tag(const std::string& text) {
  if (text == "O") return ChunkTag::outside();
  if (text.size() > 2 && (text[0] == 'B' || text[0] == 'I') && text[1] == '-') {
    auto label = parse_chunk_label(text.substr(2));
    if (!label) return std::nullopt;
    return text[0] == 'B' ? ChunkTag::begin(*label) : ChunkTag::inside(*label);
  }
  return std::nullopt;
}

const std::string& to_string(ClauseLabel label) {
  return kClauseNames[static_cast<int>(label)];
}

std::optional<ClauseLabel> parse_clause_label(const std::string& name) {
  for (size_t i = 0; i < kClauseNames.size(); ++i)
    if (kClauseNames[i] == name) return static_cast<ClauseLabel>(i);
  return std::nullopt;
}

std::vector<std::string> default_clause_alphabet() {
  return {kClauseNames.begin(), kClauseNames.end()};
}

Verdict validate_chunks(const std::vector<Chunk>& chunks, size_t n) {
  size_t prev_end = 0;
  for (size_t k = 0; k < chunks.size(); ++k) {
    const Chunk& c = chunks[k];
    if (!(c.start < c.end && c.end <= n))
      return Verdict::invalid("chunk " + std::to_string(k) +
                              " span out of range");
    if (!(c.start <= c.head && c.head < c.end))
      return Verdict::invalid("chunk " + std::to_string(k) +
                              " head outside span");
    if (k > 0 && c.start < prev_end)
      return Verdict::invalid("chunk " + std::to_string(k) +
                              " overlaps or is unsorted");
    prev_end = c.end;
  }
  return Verdict::valid();
}

std::vector<ChunkTag> chunks_to_bio(const std::vector<Chunk>& chunks,
                                    size_t n) {
  if (Verdict v = validate_chunks(chunks, n); !v)
    throw StructuralError("chunks_to_bio: " + v.reason);
  std::vector<ChunkTag> tags(n, ChunkTag::outside());
  for (const Chunk& c : chunks) {
    tags[c.start] = ChunkTag::begin(c.label);
    for (size_t i = c.start + 1; i < c.end; ++i)
      tags[i] = ChunkTag::inside(c.label);
  }
  return tags;
}

std::vector<Chunk> bio_to_chunks(const std::vector<ChunkTag>& tags) {
  std::vector<Chunk> chunks;
  for (size_t i = 0; i < tags.size(); ++i) {
    const ChunkTag& t = tags[i];
    if (t.kind == ChunkTag::O) continue;
    if (t.kind == ChunkTag::I) {
      const bool continues = !chunks.empty() && chunks.back().end == i &&
                             chunks.back().label == t.label;
      if (!continues)
        throw StructuralError("bio_to_chunks: illegal I-" +
                              to_string(t.label) + " at index " +
                              std::to_string(i));
      chunks.back().end = i + 1;
    } else {
      chunks.push_back(Chunk{t.label, i, i + 1, i});
    }
  }
  // Heads default to the chunk start; the chunker recomputes them.
  return chunks;
}

std::vector<ClauseSpan> clause_spans_from_labels(
    const std::vector<ClauseLabel>& labels) {
  std::vector<ClauseSpan> spans;
  std::vector<size_t> open;
  for (size_t i = 0; i < labels.size(); ++i) {
    switch (labels[i]) {
      case ClauseLabel::CB_REL:
        open.push_back(i);
        break;
      case ClauseLabel::CE:
        if (!open.empty()) {  // stray CE dropped
          spans.push_back(ClauseSpan{"REL", open.back(), i});
          open.pop_back();
        }
        break;
      case ClauseLabel::O:
        break;
    }
  }
  // Unmatched beginnings close at sentence end, innermost first.
  while (!open.empty()) {
    spans.push_back(ClauseSpan{"REL", open.back(), labels.size() - 1});
    open.pop_back();
  }
  return spans;
}

Verdict validate_tree(const DependencyTree& tree) {
  const size_t n = tree.heads.size();
  if (tree.relations.size() != n)
    return Verdict::invalid("relations length differs from heads length");
  size_t roots = 0;
  for (size_t i = 0; i < n; ++i) {
    if (tree.heads[i] > n)
      return Verdict::invalid("head of token " + std::to_string(i) +
                              " out of range");
    if (tree.heads[i] == i + 1)
      return Verdict::invalid("token " + std::to_string(i) +
                              " is its own head");
    const bool is_root = tree.heads[i] == 0;
    if (is_root) ++roots;
    if (is_root != (tree.relations[i] == "root"))
      return Verdict::invalid("relation of token " + std::to_string(i) +
                              " inconsistent with its head");
  }
  if (roots != 1)
    return Verdict::invalid("expected exactly one root, found " +
                            std::to_string(roots));
  for (size_t i = 0; i < n; ++i) {
    size_t cur = i, steps = 0;
    while (tree.heads[cur] != 0) {
      cur = tree.heads[cur] - 1;
      if (++steps > n)
        return Verdict::invalid("cycle reachable from token " +
                                std::to_string(i));
    }
  }
  return Verdict::valid();
}

}  // namespace tamilparse
