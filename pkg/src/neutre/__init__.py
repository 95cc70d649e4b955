"""neutre: gender-neutral rewriting of French with collective nouns."""

from .annotation import (
    AnnotatedSentence,
    MemberSpan,
    Token,
    bind_spans,
    detokenize_sentence,
    iter_conllu,
    parse_conllu,
    strip_tags,
)
from .dependencies import (
    DependencySet,
    detect,
    detect_baseline,
    score_corpus,
    score_detection,
)
from .dictionary import CnDictionary, CnEntry, load_dictionary
from .evaluation import bleu, cosine_eval, evaluate, wer
from .extraction import ExtractConfig, Extractor
from .generation import RewriteResult, compute_dependencies, rewrite
from .morphology import MorphAnalysis, MorphFeatures, MorphLexicon, load_lexicon

__version__ = "0.1.0"

__all__ = [
    "AnnotatedSentence",
    "CnDictionary",
    "CnEntry",
    "DependencySet",
    "ExtractConfig",
    "Extractor",
    "MemberSpan",
    "MorphAnalysis",
    "MorphFeatures",
    "MorphLexicon",
    "RewriteResult",
    "Token",
    "bind_spans",
    "bleu",
    "compute_dependencies",
    "cosine_eval",
    "detect",
    "detect_baseline",
    "detokenize_sentence",
    "evaluate",
    "iter_conllu",
    "load_dictionary",
    "load_lexicon",
    "parse_conllu",
    "rewrite",
    "score_corpus",
    "score_detection",
    "strip_tags",
    "wer",
]
