"""Helpers for finitely supported term maps key -> coefficient."""

from typing import Hashable, Iterable, Mapping


def add_term(acc: dict, key: Hashable, coeff) -> None:
    """acc[key] += coeff, dropping the key when the sum vanishes."""
    if key in acc:
        total = acc[key] + coeff
        if total:
            acc[key] = total
        else:
            del acc[key]
    elif coeff:
        acc[key] = coeff


def combine(*parts: tuple[Mapping, object]) -> dict:
    """sum of scale * terms over (terms, scale) pairs."""
    out: dict = {}
    for terms, scale in parts:
        for key, c in terms.items():
            add_term(out, key, c * scale)
    return out


def scale(terms: Mapping, factor) -> dict:
    out: dict = {}
    for key, c in terms.items():
        add_term(out, key, c * factor)
    return out


def pruned(items: Iterable[tuple[Hashable, object]]) -> dict:
    out: dict = {}
    for key, c in items:
        add_term(out, key, c)
    return out
