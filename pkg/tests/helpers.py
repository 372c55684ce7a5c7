"""Shared memoized builders so the expensive enumerations run once."""

from __future__ import annotations

from functools import lru_cache

from adinkra.codes import LinearCode, enumerate_doubly_even_codes
from adinkra.graph import Adinkra, build_quotient
from adinkra.monodromy import AnalysisReport, analyze


@lru_cache(maxsize=None)
def all_codes(length: int) -> tuple[LinearCode, ...]:
    return tuple(enumerate_doubly_even_codes(length, length))


@lru_cache(maxsize=None)
def quotient(code: LinearCode) -> Adinkra:
    return build_quotient(code)


@lru_cache(maxsize=None)
def report(code: LinearCode) -> AnalysisReport:
    return analyze(quotient(code))


def code_of(*rows: str) -> LinearCode:
    return LinearCode.from_texts(len(rows[0]), *rows)
