"""POS-tagged tokens plus a fixture-grade tokenizer and lexicon tagger.

Real deployments feed pre-tagged tokens from an external tagger. The
lexicon tagger here exists so fixtures, demos, and the CLI can run without
any NLP dependency; it is word-list based and makes no claim to accuracy.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass


class PosTag(enum.Enum):
    NOUN = "noun"
    PROPN = "propn"
    ADJ = "adj"
    VERB = "verb"
    OTHER = "other"


@dataclass(frozen=True)
class TaggedToken:
    """One token with its POS tag and 0-based position in the document."""

    text: str
    pos: PosTag
    index: int


_WORD_RE = re.compile(r"[A-Za-z0-9][A-Za-z0-9'\-]*")

# Small closed-class word lists; anything else defaults to NOUN, which is the
# permissive choice for noun-chunk extraction on scientific prose.
_VERBS = {
    "is", "are", "was", "were", "be", "been", "conduct", "conducts", "use",
    "uses", "used", "propose", "proposes", "present", "presents", "show",
    "shows", "perform", "performs", "apply", "applies", "develop", "develops",
    "evaluate", "evaluates", "introduce", "introduces", "demonstrate",
    "demonstrates", "provide", "provides", "build", "builds", "describe",
    "describes", "explore", "explores", "analyze", "analyzes", "compare",
    "compares", "design", "designs", "support", "supports", "enable",
    "enables", "create", "creates", "achieve", "achieves",
}
_OTHER = {
    "we", "i", "you", "they", "it", "this", "that", "these", "those", "a",
    "an", "the", "to", "of", "in", "on", "for", "with", "and", "or", "but",
    "as", "by", "from", "at", "into", "over", "our", "its", "their", "can",
    "may", "will", "such", "both", "each", "also", "than", "then",
    "how", "what", "which", "when", "where", "not", "no",
}
_ADJS = {
    "interactive", "visual", "novel", "new", "large", "small", "semantic",
    "deep", "neural", "efficient", "effective", "multiple", "various",
    "latent", "statistical", "graphical", "hierarchical", "temporal",
    "spatial", "high-dimensional", "scalable", "automatic", "flexible",
}


def tokenize(text: str) -> list[str]:
    """Split text into word tokens, dropping punctuation."""
    return _WORD_RE.findall(text)


def tag_tokens(words: list[str], lexicon: dict[str, PosTag] | None = None) -> list[TaggedToken]:
    """Tag words with the built-in lexicon, optionally overridden per word.

    Capitalized words off the lexicon become PROPN, everything else NOUN.
    """
    lex = lexicon or {}
    out = []
    for i, word in enumerate(words):
        lower = word.lower()
        if lower in lex:
            pos = lex[lower]
        elif lower in _OTHER:
            pos = PosTag.OTHER
        elif lower in _VERBS:
            pos = PosTag.VERB
        elif lower in _ADJS:
            pos = PosTag.ADJ
        elif word[:1].isupper() and i > 0:
            pos = PosTag.PROPN
        else:
            pos = PosTag.NOUN
        out.append(TaggedToken(text=word, pos=pos, index=i))
    return out
