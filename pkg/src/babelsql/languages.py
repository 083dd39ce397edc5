"""Language codes and per-language constants used across the toolkit."""

from __future__ import annotations

from enum import Enum


class Language(str, Enum):
    """ISO 639-1 codes for dataset languages and back-translation pivots."""

    EN = "en"
    DE = "de"
    ES = "es"
    FR = "fr"
    JA = "ja"
    ZH = "zh"
    VI = "vi"
    # Extra pivot languages used only as back-translation intermediates.
    RU = "ru"
    PT = "pt"
    NL = "nl"
    SV = "sv"

    @classmethod
    def parse(cls, code: str) -> "Language":
        try:
            return cls(code.strip().lower())
        except ValueError:
            raise ValueError(f"unknown language code: {code!r}") from None


#: Languages a dataset may be annotated in.
DATASET_LANGUAGES: tuple[Language, ...] = (
    Language.EN,
    Language.DE,
    Language.ES,
    Language.FR,
    Language.JA,
    Language.ZH,
    Language.VI,
)

#: Full pool of languages the back-translation loop cycles through.
PIVOT_LANGUAGES: tuple[Language, ...] = tuple(Language)

#: Languages tokenized at the character level (no whitespace word boundaries).
CJK_LANGUAGES: frozenset[Language] = frozenset({Language.ZH, Language.JA})

#: Bidirectional entailment acceptance thresholds for synonym verification.
DEFAULT_ENTAILMENT_THRESHOLD = 0.65
ENTAILMENT_THRESHOLD_OVERRIDES: dict[Language, float] = {Language.ZH: 0.68}


def entailment_threshold(
    language: Language, overrides: dict[Language, float] | None = None
) -> float:
    """Return the synonym acceptance threshold for ``language``.

    ``overrides`` replaces the built-in per-language table entirely when given.
    """
    table = ENTAILMENT_THRESHOLD_OVERRIDES if overrides is None else overrides
    return table.get(language, DEFAULT_ENTAILMENT_THRESHOLD)
