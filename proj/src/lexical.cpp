#include "tamilparse/lexical.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tamilparse {

namespace {

std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> cols;
  std::string cur;
  for (char ch : line) {
    if (ch == '\t') {
      cols.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cols.push_back(cur);
  return cols;
}

bool is_comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

void Lexicon::add(const std::string& form, PosTag tag) {
  if (tag == PosTag::UNK)
    throw DataError("lexicon entry '" + form + "' maps to UNK");
  const std::string norm = nfc(form);
  entries_[norm] = tag;
  if (tag == PosTag::V) verb_roots_.insert(norm);
  if (tag == PosTag::N) noun_roots_.insert(norm);
}

std::optional<PosTag> Lexicon::lookup(const std::string& form) const {
  auto it = entries_.find(nfc(form));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::is_verb_root(const std::string& form) const {
  return verb_roots_.count(nfc(form)) > 0;
}

bool Lexicon::is_noun_root(const std::string& form) const {
  return noun_roots_.count(nfc(form)) > 0;
}

bool Lexicon::is_root(const std::string& form) const {
  return is_verb_root(form) || is_noun_root(form);
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open lexicon file: " + path);
  Lexicon lex;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    const auto cols = split_tsv(line);
    if (cols.size() != 2)
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": expected FORM<TAB>TAG");
    const auto tag = parse_pos_tag(cols[1]);
    if (!tag)
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": unknown POS tag '" + cols[1] + "'");
    lex.add(cols[0], *tag);
  }
  return lex;
}

std::string SuffixRule::feature(const std::string& key) const {
  std::stringstream ss(features);
  std::string item;
  while (std::getline(ss, item, '|')) {
    const auto eq = item.find('=');
    if (eq != std::string::npos && item.substr(0, eq) == key)
      return item.substr(eq + 1);
  }
  return "";
}

void SuffixTable::add(SuffixRule rule) {
  if (rule.pattern.empty()) throw DataError("empty suffix pattern");
  rule.pattern = nfc(rule.pattern);
  rule.phonemes = to_phonemes(rule.pattern);
  for (const SuffixRule& r : rules_)
    if (r.pattern == rule.pattern && r.category == rule.category)
      throw DataError("duplicate suffix rule: " + rule.pattern);
  rules_.push_back(std::move(rule));
}

size_t SuffixTable::match_longest(const CodepointSeq& phonemes,
                                  size_t max_len) const {
  size_t best = rules_.size();
  for (size_t k = 0; k < rules_.size(); ++k) {
    const CodepointSeq& p = rules_[k].phonemes;
    if (p.size() > phonemes.size() || p.size() > max_len) continue;
    if (!std::equal(p.begin(), p.end(), phonemes.end() - p.size())) continue;
    if (best == rules_.size() ||
        p.size() > rules_[best].phonemes.size() ||
        (p.size() == rules_[best].phonemes.size() &&
         rules_[k].priority > rules_[best].priority)) {
      best = k;
    }
  }
  return best;
}

SuffixTable SuffixTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open suffix table: " + path);
  SuffixTable table;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    const auto cols = split_tsv(line);
    if (cols.size() != 4)
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": expected PATTERN<TAB>CATEGORY<TAB>FEATURES<TAB>PRIORITY");
    SuffixRule rule;
    rule.pattern = cols[0];
    if (cols[1] == "V") rule.category = SuffixCategory::VerbSuffix;
    else if (cols[1] == "N") rule.category = SuffixCategory::NounSuffix;
    else if (cols[1] == "CASE") rule.category = SuffixCategory::CaseMarker;
    else
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": category must be V, N or CASE");
    rule.features = cols[2];
    try {
      rule.priority = std::stoi(cols[3]);
    } catch (const std::exception&) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": priority must be an integer");
    }
    table.add(std::move(rule));
  }
  return table;
}

std::string morph_join(const std::string& root,
                       const std::vector<SuffixRule>& suffixes,
                       const std::string& sandhi) {
  CodepointSeq phonemes = to_phonemes(root);
  for (const SuffixRule& s : suffixes) {
    const CodepointSeq sp = to_phonemes(s.pattern);
    phonemes.insert(phonemes.end(), sp.begin(), sp.end());
  }
  if (!sandhi.empty()) {
    const CodepointSeq sp = to_phonemes(sandhi);
    phonemes.insert(phonemes.end(), sp.begin(), sp.end());
  }
  return from_phonemes(phonemes);
}

bool is_punctuation(const std::string& surface) {
  if (surface.empty()) return false;
  for (char ch : surface) {
    if (!ispunct(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

namespace {

bool is_ascii_punct(char32_t cp) {
  return cp < 0x80 && ispunct(static_cast<int>(cp));
}

bool is_sentence_terminal(char32_t cp) {
  return cp == U'.' || cp == U'?' || cp == U'!';
}

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v';
}

}  // namespace

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  const CodepointSeq cps = utf8_decode(nfc(text));
  std::vector<std::vector<Token>> sentences;
  std::vector<Token> sentence;
  CodepointSeq word;

  auto flush_word = [&] {
    if (!word.empty()) {
      sentence.push_back(Token{utf8_encode(word), sentence.size()});
      word.clear();
    }
  };
  auto flush_sentence = [&] {
    if (!sentence.empty()) {
      sentences.push_back(std::move(sentence));
      sentence.clear();
    }
  };

  for (char32_t cp : cps) {
    if (is_space(cp)) {
      flush_word();
    } else if (is_ascii_punct(cp)) {
      flush_word();
      sentence.push_back(Token{utf8_encode({cp}), sentence.size()});
      if (is_sentence_terminal(cp)) flush_sentence();
    } else {
      word.push_back(cp);
    }
  }
  flush_word();
  flush_sentence();
  return sentences;
}

std::vector<PosTag> tag_with_lexicon(const std::vector<Token>& tokens,
                                     const Lexicon& lexicon) {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (is_punctuation(t.surface)) {
      tags.push_back(PosTag::SYM);
    } else if (auto tag = lexicon.lookup(t.surface)) {
      tags.push_back(*tag);
    } else {
      tags.push_back(PosTag::UNK);
    }
  }
  return tags;
}

namespace {

constexpr int kMaxStripIterations = 8;
constexpr size_t kMinRootPhonemes = 2;

bool is_sandhi_stop(char32_t cp) {
  return cp == 0x0B95 || cp == 0x0B9A || cp == 0x0BA4 || cp == 0x0BAA;
}

}  // namespace

MorphAnalysis stem(const std::string& word, const SuffixTable& rules,
                   const Lexicon& lexicon) {
  if (word.empty()) throw DataError("stem: empty word");
  const std::string norm = nfc(word);

  MorphAnalysis out;
  if (lexicon.is_verb_root(norm)) {
    out.root = norm;
    out.category = RootCategory::VerbRoot;
    out.derived_tag = PosTag::V;
    return out;
  }
  if (lexicon.is_noun_root(norm)) {
    out.root = norm;
    out.category = RootCategory::NounRoot;
    out.derived_tag = PosTag::N;
    return out;
  }

  CodepointSeq phonemes = to_phonemes(norm);

  // Word-final sandhi stop consonant after a vowel, e.g. பையனைக்.
  if (phonemes.size() >= 2 && is_sandhi_stop(phonemes.back()) &&
      is_tamil_independent_vowel(phonemes[phonemes.size() - 2])) {
    out.sandhi = from_phonemes({phonemes.back()});
    phonemes.pop_back();
  }

  std::vector<SuffixRule> reversed;
  for (int iter = 0; iter < kMaxStripIterations; ++iter) {
    const std::string residue = from_phonemes(phonemes);
    if (lexicon.is_root(residue)) break;
    if (phonemes.size() <= kMinRootPhonemes) break;
    const size_t k =
        rules.match_longest(phonemes, phonemes.size() - kMinRootPhonemes);
    if (k == rules.rules().size()) break;
    const SuffixRule& rule = rules.rules()[k];
    reversed.push_back(rule);
    phonemes.resize(phonemes.size() - rule.phonemes.size());
  }

  out.root = from_phonemes(phonemes);
  out.suffixes.assign(reversed.rbegin(), reversed.rend());

  if (out.suffixes.empty() && out.sandhi.empty() && !lexicon.is_root(out.root)) {
    // Default-noun policy: nothing matched and the word is unknown.
    out.fallback = true;
  }

  const bool verbal =
      std::any_of(out.suffixes.begin(), out.suffixes.end(),
                  [](const SuffixRule& s) {
                    return s.category == SuffixCategory::VerbSuffix;
                  }) ||
      lexicon.is_verb_root(out.root);
  out.category = verbal ? RootCategory::VerbRoot : RootCategory::NounRoot;
  out.derived_tag = verbal ? PosTag::V : PosTag::N;
  return out;
}

std::pair<std::vector<PosTag>, std::vector<MorphAnalysis>> tag_sentence(
    const std::vector<Token>& tokens, const Lexicon& lexicon,
    const SuffixTable& rules) {
  std::vector<PosTag> tags = tag_with_lexicon(tokens, lexicon);
  std::vector<MorphAnalysis> morphs(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tags[i] == PosTag::UNK) {
      morphs[i] = stem(tokens[i].surface, rules, lexicon);
      tags[i] = morphs[i].derived_tag;
    } else {
      morphs[i].root = nfc(tokens[i].surface);
      morphs[i].category =
          tags[i] == PosTag::V ? RootCategory::VerbRoot : RootCategory::NounRoot;
      morphs[i].derived_tag = tags[i];
    }
  }
  return {std::move(tags), std::move(morphs)};
}

}  // namespace tamilparse
