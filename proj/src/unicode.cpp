#include "tamilparse/unicode.hpp"

#include <array>

namespace tamilparse {

CodepointSeq utf8_decode(const std::string& text) {
  CodepointSeq out;
  out.reserve(text.size());
  size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0xFFFD;
    size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0 && i + 1 < n) {
      cp = (b0 & 0x1F);
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0 && i + 2 < n) {
      cp = (b0 & 0x0F);
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0 && i + 3 < n) {
      cp = (b0 & 0x07);
      len = 4;
    }
    if (len > 1) {
      for (size_t k = 1; k < len; ++k) {
        const unsigned char bk = static_cast<unsigned char>(text[i + k]);
        if ((bk & 0xC0) != 0x80) {
          cp = 0xFFFD;
          len = 1;
          break;
        }
        cp = (cp << 6) | (bk & 0x3F);
      }
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(const CodepointSeq& cps) {
  std::string out;
  out.reserve(cps.size() * 3);
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

namespace {

// Tamil canonical compositions (starter, combiner) -> composite.
struct Composition {
  char32_t first, second, composed;
};
constexpr std::array<Composition, 4> kCompositions{{
    {0x0B92, 0x0BD7, 0x0B94},  // ஒ + ௗ -> ஔ
    {0x0BC6, 0x0BBE, 0x0BCA},  // ெ + ா -> ொ
    {0x0BC7, 0x0BBE, 0x0BCB},  // ே + ா -> ோ
    {0x0BC6, 0x0BD7, 0x0BCC},  // ெ + ௗ -> ௌ
}};

}  // namespace

std::string nfc(const std::string& text) {
  CodepointSeq cps = utf8_decode(text);
  CodepointSeq out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    bool composed = false;
    if (!out.empty()) {
      for (const auto& c : kCompositions) {
        if (out.back() == c.first && cp == c.second) {
          out.back() = c.composed;
          composed = true;
          break;
        }
      }
    }
    if (!composed) out.push_back(cp);
  }
  return utf8_encode(out);
}

bool is_tamil_consonant(char32_t cp) { return cp >= 0x0B95 && cp <= 0x0BB9; }

bool is_tamil_independent_vowel(char32_t cp) {
  return (cp >= 0x0B85 && cp <= 0x0B94);
}

bool is_tamil_vowel_sign(char32_t cp) {
  return (cp >= 0x0BBE && cp <= 0x0BC2) || (cp >= 0x0BC6 && cp <= 0x0BC8) ||
         (cp >= 0x0BCA && cp <= 0x0BCC);
}

bool is_tamil_combining(char32_t cp) {
  return is_tamil_vowel_sign(cp) || cp == kVirama || cp == 0x0B82 ||
         cp == 0x0BD7;
}

std::vector<std::string> split_graphemes(const std::string& word) {
  const CodepointSeq cps = utf8_decode(nfc(word));
  std::vector<std::string> out;
  CodepointSeq cluster;
  for (char32_t cp : cps) {
    if (!cluster.empty() && is_tamil_combining(cp)) {
      cluster.push_back(cp);
    } else {
      if (!cluster.empty()) out.push_back(utf8_encode(cluster));
      cluster = {cp};
    }
  }
  if (!cluster.empty()) out.push_back(utf8_encode(cluster));
  return out;
}

namespace {

// Vowel signs in Tamil block order; index maps to the independent vowel.
char32_t sign_to_vowel(char32_t sign) {
  switch (sign) {
    case 0x0BBE: return 0x0B86;  // ா -> ஆ
    case 0x0BBF: return 0x0B87;  // ி -> இ
    case 0x0BC0: return 0x0B88;  // ீ -> ஈ
    case 0x0BC1: return 0x0B89;  // ு -> உ
    case 0x0BC2: return 0x0B8A;  // ூ -> ஊ
    case 0x0BC6: return 0x0B8E;  // ெ -> எ
    case 0x0BC7: return 0x0B8F;  // ே -> ஏ
    case 0x0BC8: return 0x0B90;  // ை -> ஐ
    case 0x0BCA: return 0x0B92;  // ொ -> ஒ
    case 0x0BCB: return 0x0B93;  // ோ -> ஓ
    case 0x0BCC: return 0x0B94;  // ௌ -> ஔ
    default: return 0;
  }
}

char32_t vowel_to_sign(char32_t vowel) {
  switch (vowel) {
    case 0x0B86: return 0x0BBE;
    case 0x0B87: return 0x0BBF;
    case 0x0B88: return 0x0BC0;
    case 0x0B89: return 0x0BC1;
    case 0x0B8A: return 0x0BC2;
    case 0x0B8E: return 0x0BC6;
    case 0x0B8F: return 0x0BC7;
    case 0x0B90: return 0x0BC8;
    case 0x0B92: return 0x0BCA;
    case 0x0B93: return 0x0BCB;
    case 0x0B94: return 0x0BCC;
    default: return 0;
  }
}

}  // namespace

CodepointSeq to_phonemes(const std::string& text) {
  const CodepointSeq cps = utf8_decode(nfc(text));
  CodepointSeq out;
  out.reserve(cps.size() + 4);
  for (size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (is_tamil_consonant(cp)) {
      out.push_back(cp);
      const char32_t next = (i + 1 < cps.size()) ? cps[i + 1] : 0;
      if (next == kVirama) {
        ++i;  // pure consonant
      } else if (is_tamil_vowel_sign(next)) {
        out.push_back(sign_to_vowel(next));
        ++i;
      } else {
        out.push_back(kVowelA);  // inherent vowel
      }
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

std::string from_phonemes(const CodepointSeq& phonemes) {
  CodepointSeq out;
  out.reserve(phonemes.size() + 4);
  for (size_t i = 0; i < phonemes.size(); ++i) {
    const char32_t cp = phonemes[i];
    if (is_tamil_consonant(cp)) {
      out.push_back(cp);
      const char32_t next = (i + 1 < phonemes.size()) ? phonemes[i + 1] : 0;
      if (next == kVowelA) {
        ++i;  // inherent vowel, no sign
      } else if (is_tamil_independent_vowel(next)) {
        out.push_back(vowel_to_sign(next));
        ++i;
      } else {
        out.push_back(kVirama);
      }
    } else {
      out.push_back(cp);
    }
  }
  return utf8_encode(out);
}

}  // namespace tamilparse
