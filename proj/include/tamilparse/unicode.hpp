// unicode.hpp -- UTF-8 handling, Tamil NFC normalization, grapheme clusters
// and the phonemic decomposition used by the stemmer.

#ifndef TAMILPARSE_UNICODE_HPP
#define TAMILPARSE_UNICODE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tamilparse {

using CodepointSeq = std::vector<char32_t>;

// UTF-8 <-> codepoints. Invalid bytes are replaced by U+FFFD on decode.
CodepointSeq utf8_decode(const std::string& text);
std::string utf8_encode(const CodepointSeq& cps);

// Canonical composition for the Tamil block (the only compositions Tamil
// text can contain: ஔ, ொ, ோ, ௌ from their decomposed pairs).
std::string nfc(const std::string& text);

// Tamil codepoint classification.
bool is_tamil_consonant(char32_t cp);
bool is_tamil_independent_vowel(char32_t cp);
bool is_tamil_vowel_sign(char32_t cp);
bool is_tamil_combining(char32_t cp);  // vowel signs, virama, anusvara, length marks

constexpr char32_t kVirama = 0x0BCD;
constexpr char32_t kVowelA = 0x0B85;  // inherent vowel

// Extended grapheme clusters, Tamil-aware: a base codepoint plus any
// following combining marks. Concatenation reproduces the input.
std::vector<std::string> split_graphemes(const std::string& word);

// Phonemic decomposition of Tamil orthography: each consonant letter is a
// pure consonant, vowel signs and the inherent 'a' become independent
// vowels. "படி" -> [ப், அ, ட், இ] (consonants carry an implicit virama in
// this representation). Non-Tamil codepoints pass through unchanged.
CodepointSeq to_phonemes(const std::string& text);

// Inverse of to_phonemes on well-formed Tamil: consonant+vowel pairs merge
// back into consonant letters with vowel signs.
std::string from_phonemes(const CodepointSeq& phonemes);

}  // namespace tamilparse

#endif
