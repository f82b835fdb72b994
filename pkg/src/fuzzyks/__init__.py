"""Knowledge structures delineated by fuzzy skill multimaps."""

from .delineation import DelineationResult, delineate, problem_function
from .fuzzy_core import FuzzySet, SkillDomain, format_grade, parse_grade
from .multimap import FuzzySkillMultimap, InvalidMultimapError, validate
from .structure import KnowledgeStructure

__all__ = [
    "DelineationResult",
    "FuzzySet",
    "FuzzySkillMultimap",
    "InvalidMultimapError",
    "KnowledgeStructure",
    "SkillDomain",
    "delineate",
    "format_grade",
    "parse_grade",
    "problem_function",
    "validate",
]
