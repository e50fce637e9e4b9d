// depparse.hpp -- head-dependent tree assembly from chunks and clause
// spans, plus DOT and indented-text rendering.

#ifndef TAMILPARSE_DEPPARSE_HPP
#define TAMILPARSE_DEPPARSE_HPP

#include <string>
#include <vector>

#include "tamilparse/sentence.hpp"

namespace tamilparse {

// Attachment cascade: chunk-internal tokens to the chunk head; the head of
// the last VP is the root (SOV); inside each innermost clause span chunk
// heads attach to the clause's verbal head, which attaches to the nearest
// following chunk head outside the span; PP heads attach to the nearest
// preceding NP head; everything left attaches to the root. Always yields a
// tree accepted by validate_tree. pre: sentence non-empty with POS/chunks.
DependencyTree build_tree(const AnnotatedSentence& sentence);

// Deterministic digraph text, one node per token labeled "index:surface",
// synthetic ROOT node first, edges dependent -> head in token order.
std::string render_dot(const DependencyTree& tree,
                       const std::vector<Token>& tokens);

// Root at column 0, dependents indented two spaces under their head,
// children ordered by token index.
std::string render_text(const DependencyTree& tree,
                        const std::vector<Token>& tokens);

}  // namespace tamilparse

#endif
