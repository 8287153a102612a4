from ._phonodist import (
    ParseError,
    PhonodistError,
    ResourceLimitError,
    ValidationError,
    autoseg_compatible,
    compare_schemes_json,
    default_inventory_symbols,
    intersection_cost_profile,
    knn,
    phoneme_distance,
    soundex,
    soundex_code_space,
    soundex_collisions,
    template_distance,
    word_distance,
)

__all__ = [
    "ParseError",
    "PhonodistError",
    "ResourceLimitError",
    "ValidationError",
    "autoseg_compatible",
    "compare_schemes_json",
    "default_inventory_symbols",
    "intersection_cost_profile",
    "knn",
    "phoneme_distance",
    "soundex",
    "soundex_code_space",
    "soundex_collisions",
    "template_distance",
    "word_distance",
]
