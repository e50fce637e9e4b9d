// lexical.hpp -- tokenization, lexicon-based POS tagging and the rule-based
// suffix-stripping morphological analyzer for agglutinative Tamil words.

#ifndef TAMILPARSE_LEXICAL_HPP
#define TAMILPARSE_LEXICAL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tamilparse/core.hpp"
#include "tamilparse/unicode.hpp"

namespace tamilparse {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Surface-form -> tag map plus the verb/noun root sets used by the stemmer.
// Entries tagged V double as verb roots, entries tagged N as noun roots.
class Lexicon {
 public:
  void add(const std::string& form, PosTag tag);

  std::optional<PosTag> lookup(const std::string& form) const;
  bool is_verb_root(const std::string& form) const;
  bool is_noun_root(const std::string& form) const;
  bool is_root(const std::string& form) const;

  size_t size() const { return entries_.size(); }
  const std::map<std::string, PosTag>& entries() const { return entries_; }

  // TSV: FORM<TAB>TAG, '#' comments. Forms are NFC-normalized on load.
  static Lexicon load(const std::string& path);

 private:
  std::map<std::string, PosTag> entries_;
  std::set<std::string> verb_roots_;
  std::set<std::string> noun_roots_;
};

enum class SuffixCategory { VerbSuffix, NounSuffix, CaseMarker };

struct SuffixRule {
  std::string pattern;        // orthographic form, e.g. "ஆன்"
  SuffixCategory category;
  std::string features;       // pipe-separated key=value
  int priority = 0;           // larger wins ties at equal phoneme length
  CodepointSeq phonemes;      // pattern in phonemic form (derived)

  std::string feature(const std::string& key) const;
};

class SuffixTable {
 public:
  void add(SuffixRule rule);

  const std::vector<SuffixRule>& rules() const { return rules_; }

  // Longest phonemic suffix of `phonemes` matching a rule, considering only
  // patterns of at most `max_len` phonemes; ties broken by priority (larger
  // wins). Returns rules_.size() when nothing matches.
  size_t match_longest(const CodepointSeq& phonemes,
                       size_t max_len = static_cast<size_t>(-1)) const;

  // TSV: PATTERN<TAB>CATEGORY(V|N|CASE)<TAB>FEATURES<TAB>PRIORITY.
  static SuffixTable load(const std::string& path);

 private:
  std::vector<SuffixRule> rules_;
};

enum class RootCategory { VerbRoot, NounRoot };

struct MorphAnalysis {
  std::string root;
  std::vector<SuffixRule> suffixes;  // left-to-right as they follow the root
  RootCategory category = RootCategory::NounRoot;
  PosTag derived_tag = PosTag::N;
  std::string sandhi;    // stripped word-final stop consonant, if any
  bool fallback = false; // default-noun policy fired (no analysis possible)
};

// Orthographic join of root + suffixes (+ sandhi consonant): phonemic
// concatenation re-encoded as Tamil script. Inverse of stem() on composed
// words.
std::string morph_join(const std::string& root,
                       const std::vector<SuffixRule>& suffixes,
                       const std::string& sandhi = "");

// Sentence splitting at . ? !, whitespace tokenization, punctuation split
// into its own tokens. Output is NFC-normalized.
std::vector<std::vector<Token>> tokenize(const std::string& text);

bool is_punctuation(const std::string& surface);

std::vector<PosTag> tag_with_lexicon(const std::vector<Token>& tokens,
                                     const Lexicon& lexicon);

// Forward suffix-stripping algorithm: known roots pass through; otherwise a
// word-final sandhi stop (க்/ச்/த்/ப் after a vowel) is stripped, then the
// longest matching suffix is removed repeatedly (innermost last, at most 8
// iterations, stopping at known roots). Any verb suffix in the chain makes
// the root verbal; otherwise the root is nominal and case markers carry the
// case features. Unanalyzable words fall back to a bare noun root.
MorphAnalysis stem(const std::string& word, const SuffixTable& rules,
                   const Lexicon& lexicon);

// Lexicon tagging with morphological fallback; no UNK survives.
std::pair<std::vector<PosTag>, std::vector<MorphAnalysis>> tag_sentence(
    const std::vector<Token>& tokens, const Lexicon& lexicon,
    const SuffixTable& rules);

}  // namespace tamilparse

#endif
