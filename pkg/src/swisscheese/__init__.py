"""Counting, enumerating and sampling closed linear and affine lambda terms."""

from swisscheese.counting import count, count_closed, series
from swisscheese.generation import enumerate_cheeses, enumerate_closed
from swisscheese.normal_forms import count_neutral, count_nf
from swisscheese.sampling import SamplerConfig, sample, unrank
from swisscheese.terms import (
    Abs,
    App,
    Family,
    Hole,
    Index,
    SizeModel,
    TermClass,
    parse_debruijn,
    print_debruijn,
    print_named,
)

__all__ = [
    "Abs",
    "App",
    "Family",
    "Hole",
    "Index",
    "SamplerConfig",
    "SizeModel",
    "TermClass",
    "count",
    "count_closed",
    "count_neutral",
    "count_nf",
    "enumerate_cheeses",
    "enumerate_closed",
    "parse_debruijn",
    "print_debruijn",
    "print_named",
    "sample",
    "series",
    "unrank",
]
