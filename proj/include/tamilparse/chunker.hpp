// chunker.hpp -- deterministic grammar-rule phrase chunker over POS tags.

#ifndef TAMILPARSE_CHUNKER_HPP
#define TAMILPARSE_CHUNKER_HPP

#include <vector>

#include "tamilparse/core.hpp"

namespace tamilparse {

// One rhs symbol of a grammar rule: either a POS tag or a reference to
// another chunk rule. Chunk references never absorb tokens (chunks are
// flat); they are kept so the rule table mirrors the grammar.
struct RuleSymbol {
  enum Kind { Tag, Nominal, ChunkRef } kind = Tag;
  PosTag tag = PosTag::N;          // for Tag
  ChunkLabel ref = ChunkLabel::NP; // for ChunkRef
  bool optional = false;
};

struct GrammarRule {
  ChunkLabel lhs;
  std::vector<RuleSymbol> rhs;
};

// The fixed grammar: NP -> (Det)(Adj) N (PP); VP -> V (NP)(PP)(Adv);
// PP -> P (NP); ADJP -> (CRD) ADJ; ADVP -> ADV (INT)(CRD); plus the
// NP -> NP conj NP merge handled as a second pass.
const std::vector<GrammarRule>& grammar_rules();

// Chunk head per the fixed head rules (rightmost nominal for NP, leftmost
// V for VP, the P token for PP, rightmost ADJ/ADV for ADJP/ADVP).
size_t chunk_head(ChunkLabel label, const std::vector<PosTag>& tags,
                  size_t start, size_t end);

// Recompute heads for externally produced chunks (e.g. BIO decoding).
void assign_heads(std::vector<Chunk>& chunks, const std::vector<PosTag>& tags);

// Greedy longest-match cascade, then VAUX/RCM absorption and the conj
// merge pass. Total and deterministic; pre: no UNK tags.
std::vector<Chunk> chunk(const std::vector<PosTag>& tags);

// Advisory check against S -> (NP)* (VP): at most one VP and, if present,
// it must be final.
Verdict validate_sentence(const std::vector<Chunk>& chunks);

}  // namespace tamilparse

#endif
