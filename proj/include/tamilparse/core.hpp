// core.hpp -- shared sentence/annotation data model, BIO and clause-label
// codecs, and the structural validators used by every pipeline stage.

#ifndef TAMILPARSE_CORE_HPP
#define TAMILPARSE_CORE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tamilparse {

// Raised when annotations violate a structural invariant (overlapping
// chunks, malformed BIO continuation, out-of-range indices, ...).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PosTag {
  N, V, ADJ, ADV, DET, P, PRP, CRD, INT, CNJ, RCM, VAUX, SYM, UNK
};
constexpr int kNumPosTags = 14;

const std::string& to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(const std::string& name);

enum class ChunkLabel { NP, VP, PP, ADJP, ADVP };

const std::string& to_string(ChunkLabel label);
std::optional<ChunkLabel> parse_chunk_label(const std::string& name);

struct Token {
  std::string surface;  // NFC-normalized, non-empty, no whitespace
  size_t index = 0;     // 0-based position within its sentence
};

struct Chunk {
  ChunkLabel label;
  size_t start;  // inclusive token index
  size_t end;    // exclusive token index
  size_t head;   // token index, start <= head < end

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

// Per-token chunk tag: B-X, I-X or O.
struct ChunkTag {
  enum Kind { B, I, O } kind = O;
  ChunkLabel label = ChunkLabel::NP;  // meaningful only for B/I

  static ChunkTag outside() { return {O, ChunkLabel::NP}; }
  static ChunkTag begin(ChunkLabel l) { return {B, l}; }
  static ChunkTag inside(ChunkLabel l) { return {I, l}; }

  friend bool operator==(const ChunkTag& a, const ChunkTag& b) {
    return a.kind == b.kind && (a.kind == O || a.label == b.label);
  }
};

std::string to_string(const ChunkTag& tag);
std::optional<ChunkTag> parse_chunk_tag(const std::string& text);

// Clause boundary labels. O first so the zero-weight CRF tie-break
// decodes to all-O.
enum class ClauseLabel { O, CB_REL, CE };

const std::string& to_string(ClauseLabel label);
std::optional<ClauseLabel> parse_clause_label(const std::string& name);
std::vector<std::string> default_clause_alphabet();

struct ClauseSpan {
  std::string kind = "REL";
  size_t start;  // inclusive begin token
  size_t end;    // inclusive end token

  friend bool operator==(const ClauseSpan&, const ClauseSpan&) = default;
};

// 1-based head convention: heads[i] = 0 means ROOT, j > 0 means token j-1.
struct DependencyTree {
  std::vector<size_t> heads;
  std::vector<std::string> relations;  // "root" or "dep"

  size_t size() const { return heads.size(); }
};

struct Verdict {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Verdict valid() { return {true, ""}; }
  static Verdict invalid(std::string why) { return {false, std::move(why)}; }
};

// BIO codec.
std::vector<ChunkTag> chunks_to_bio(const std::vector<Chunk>& chunks, size_t n);
std::vector<Chunk> bio_to_chunks(const std::vector<ChunkTag>& tags);

// Pairs each CB-REL with the nearest following CE (stack discipline).
// Unmatched CB-REL closes at sentence end; stray CE is dropped. Spans are
// returned innermost-first.
std::vector<ClauseSpan> clause_spans_from_labels(
    const std::vector<ClauseLabel>& labels);

Verdict validate_tree(const DependencyTree& tree);
Verdict validate_chunks(const std::vector<Chunk>& chunks, size_t n);

}  // namespace tamilparse

#endif
