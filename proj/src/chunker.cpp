#include "tamilparse/chunker.hpp"

#include <algorithm>

namespace tamilparse {

namespace {

RuleSymbol tag_sym(PosTag t, bool opt) { return {RuleSymbol::Tag, t, ChunkLabel::NP, opt}; }
RuleSymbol nominal_sym() { return {RuleSymbol::Nominal, PosTag::N, ChunkLabel::NP, false}; }
RuleSymbol ref_sym(ChunkLabel l) { return {RuleSymbol::ChunkRef, PosTag::N, l, true}; }

}  // namespace

const std::vector<GrammarRule>& grammar_rules() {
  static const std::vector<GrammarRule> rules = {
      {ChunkLabel::NP,
       {tag_sym(PosTag::DET, true), tag_sym(PosTag::ADJ, true), nominal_sym(),
        ref_sym(ChunkLabel::PP)}},
      {ChunkLabel::VP,
       {tag_sym(PosTag::V, false), ref_sym(ChunkLabel::NP),
        ref_sym(ChunkLabel::PP), tag_sym(PosTag::ADV, true)}},
      {ChunkLabel::PP, {tag_sym(PosTag::P, false), ref_sym(ChunkLabel::NP)}},
      {ChunkLabel::ADJP,
       {tag_sym(PosTag::CRD, true), tag_sym(PosTag::ADJ, false)}},
      {ChunkLabel::ADVP,
       {tag_sym(PosTag::ADV, false), tag_sym(PosTag::INT, true),
        tag_sym(PosTag::CRD, true)}},
  };
  return rules;
}

namespace {

bool is_nominal(PosTag t) { return t == PosTag::N || t == PosTag::PRP; }

// Tokens consumed by `rule` at position `pos`, or 0 when the rule fails.
// Chunk references never absorb tokens.
size_t match_rule(const GrammarRule& rule, const std::vector<PosTag>& tags,
                  size_t pos) {
  size_t i = pos;
  for (const RuleSymbol& sym : rule.rhs) {
    if (sym.kind == RuleSymbol::ChunkRef) continue;
    const bool have = i < tags.size();
    const bool matches =
        have && (sym.kind == RuleSymbol::Nominal ? is_nominal(tags[i])
                                                 : tags[i] == sym.tag);
    if (matches) {
      ++i;
    } else if (!sym.optional) {
      return 0;
    }
  }
  return i - pos;
}

}  // namespace

size_t chunk_head(ChunkLabel label, const std::vector<PosTag>& tags,
                  size_t start, size_t end) {
  auto rightmost = [&](auto pred) -> std::optional<size_t> {
    for (size_t i = end; i > start; --i)
      if (pred(tags[i - 1])) return i - 1;
    return std::nullopt;
  };
  std::optional<size_t> h;
  switch (label) {
    case ChunkLabel::NP:
      h = rightmost([](PosTag t) {
        return t == PosTag::N || t == PosTag::PRP || t == PosTag::CRD;
      });
      break;
    case ChunkLabel::VP:
      for (size_t i = start; i < end; ++i)
        if (tags[i] == PosTag::V) { h = i; break; }
      break;
    case ChunkLabel::PP:
      for (size_t i = start; i < end; ++i)
        if (tags[i] == PosTag::P) { h = i; break; }
      break;
    case ChunkLabel::ADJP:
      h = rightmost([](PosTag t) { return t == PosTag::ADJ; });
      break;
    case ChunkLabel::ADVP:
      h = rightmost([](PosTag t) { return t == PosTag::ADV; });
      break;
  }
  return h.value_or(start);
}

void assign_heads(std::vector<Chunk>& chunks,
                  const std::vector<PosTag>& tags) {
  for (Chunk& c : chunks) c.head = chunk_head(c.label, tags, c.start, c.end);
}

namespace {

void absorb_following(std::vector<Chunk>& chunks,
                      const std::vector<PosTag>& tags) {
  for (size_t k = 0; k < chunks.size(); ++k) {
    Chunk& c = chunks[k];
    const size_t limit =
        (k + 1 < chunks.size()) ? chunks[k + 1].start : tags.size();
    // VAUX joins the preceding VP and never heads it.
    if (c.label == ChunkLabel::VP) {
      while (c.end < limit && tags[c.end] == PosTag::VAUX) ++c.end;
    }
    // RCM joins the VP/NP it immediately follows.
    if ((c.label == ChunkLabel::VP || c.label == ChunkLabel::NP) &&
        c.end < limit && tags[c.end] == PosTag::RCM) {
      ++c.end;
    }
  }
}

void merge_conj(std::vector<Chunk>& chunks, const std::vector<PosTag>& tags) {
  for (size_t k = 0; k + 1 < chunks.size();) {
    Chunk& a = chunks[k];
    const Chunk& b = chunks[k + 1];
    if (a.label == ChunkLabel::NP && b.label == ChunkLabel::NP &&
        b.start == a.end + 1 && tags[a.end] == PosTag::CNJ) {
      a.end = b.end;
      a.head = chunk_head(ChunkLabel::NP, tags, a.start, a.end);
      chunks.erase(chunks.begin() + k + 1);
    } else {
      ++k;
    }
  }
}

}  // namespace

std::vector<Chunk> chunk(const std::vector<PosTag>& tags) {
  const auto& rules = grammar_rules();
  std::vector<Chunk> chunks;
  size_t i = 0;
  while (i < tags.size()) {
    size_t best_len = 0;
    ChunkLabel best_label = ChunkLabel::NP;
    for (const GrammarRule& rule : rules) {  // tie broken by rule order
      const size_t len = match_rule(rule, tags, i);
      if (len > best_len) {
        best_len = len;
        best_label = rule.lhs;
      }
    }
    if (best_len == 0) {
      ++i;  // unchunked, O in BIO form
      continue;
    }
    chunks.push_back(Chunk{best_label, i, i + best_len,
                           chunk_head(best_label, tags, i, i + best_len)});
    i += best_len;
  }
  absorb_following(chunks, tags);
  merge_conj(chunks, tags);
  return chunks;
}

Verdict validate_sentence(const std::vector<Chunk>& chunks) {
  for (size_t k = 0; k < chunks.size(); ++k) {
    if (chunks[k].label == ChunkLabel::VP && k + 1 != chunks.size())
      return Verdict::invalid("VP is not sentence-final");
  }
  return Verdict::valid();
}

}  // namespace tamilparse
