"""
Brute-force word rewriting in H^_{r,n}, independent of the PBW multiplication.

A word is a tuple of letters ("1", lam), ("X", j, +-1) or ("g", i). Adjacent
pairs are rewritten by the defining relations until every word has the shape
[1_lam] X... g... with a reduced g-suffix; the result is read off as
X^alpha 1_lam g_w.
"""

from itertools import product

from src.algebras.idempotent import HhatElement
from src.coeffs.laurent import ONE, Q_DIFF
from src.combinatorics.permutations import identity_perm, left_mul_simple


def _swap(values: tuple, i: int) -> tuple:
    out = list(values)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def _equal_tuples(r: int, n: int, i: int) -> list[tuple[int, ...]]:
    return [lam for lam in product(range(1, r + 1), repeat=n) if lam[i - 1] == lam[i]]


def expand_letters(r: int, n: int, letters: list[str]) -> dict[tuple, object]:
    """Words over {1_lam, X_j^(+-1), g_i} for a list of letter strings like "g1^-1" or "1(1,2)"."""
    words: dict[tuple, object] = {(): ONE}
    for text in letters:
        options: list[tuple[tuple, object]]
        if text == "1":
            options = [((), ONE)]
        elif text.startswith("1("):
            lam = tuple(int(v) for v in text[2:-1].split(","))
            options = [((("1", lam),), ONE)]
        else:
            name, _, exp = text.partition("^")
            k = int(exp) if exp else 1
            index = int(name[1:])
            if name[0] == "X":
                options = [((("X", index, 1 if k > 0 else -1),) * abs(k), ONE)]
            elif k > 0:
                options = [((("g", index),) * k, ONE)]
            else:
                # g_i^-1 = g_i - c e^_i
                single = [((("g", index),), ONE)]
                single += [((("1", lam),), -Q_DIFF) for lam in _equal_tuples(r, n, index)]
                options = [((), ONE)]
                for _ in range(-k):
                    options = [(w + s, c * d) for w, c in options for s, d in single]
        joined: dict[tuple, object] = {}
        for (w, c), (s, d) in product(words.items(), options):
            joined[w + s] = joined[w + s] + c * d if w + s in joined else c * d
        words = joined
    return words


def _perm_of(word: list[int], n: int) -> list[int]:
    values = list(range(1, n + 1))
    for i in word:
        values[i - 1], values[i] = values[i], values[i - 1]
    return values


def _length(values: list[int]) -> int:
    return sum(1 for a in range(len(values)) for b in range(a + 1, len(values)) if values[a] > values[b])


def _rewrite_pair(r: int, n: int, a, b) -> list[tuple[tuple, object]] | None:
    """Replacements for the pair ab, or None when ab is already in order."""
    if a[0] == "X" and b[0] == "1":
        return [((b, a), ONE)]
    if a[0] == "g" and b[0] == "1":
        return [((("1", _swap(b[1], a[1])), a), ONE)]
    if a[0] == "1" and b[0] == "1":
        return [((a,), ONE)] if a[1] == b[1] else []
    if a[0] == "X" and b[0] == "X":
        if a[1] == b[1] and a[2] == -b[2]:
            return [((), ONE)]
        if b[1] < a[1]:
            return [((b, a), ONE)]
        return None
    if a[0] == "g" and b[0] == "g" and a[1] == b[1]:
        # g_i^2 = 1 + c g_i e^_i
        i = a[1]
        return [((), ONE)] + [((a, ("1", lam)), Q_DIFF) for lam in _equal_tuples(r, n, i)]
    if a[0] == "g" and b[0] == "X":
        i, (_, j, e) = a[1], b
        if j not in (i, i + 1):
            return [((b, a), ONE)]
        eq = _equal_tuples(r, n, i)
        if j == i and e == 1:
            # g_i X_i = X_(i+1) g_i - c X_(i+1) e^_i
            head, tail, sign = ("X", i + 1, 1), ("X", i + 1, 1), -1
        elif j == i + 1 and e == 1:
            # g_i X_(i+1) = X_i g_i + c X_(i+1) e^_i
            head, tail, sign = ("X", i, 1), ("X", i + 1, 1), 1
        elif j == i:
            # g_i X_i^-1 = X_(i+1)^-1 g_i + c X_i^-1 e^_i
            head, tail, sign = ("X", i + 1, -1), ("X", i, -1), 1
        else:
            # g_i X_(i+1)^-1 = X_i^-1 g_i - c X_i^-1 e^_i
            head, tail, sign = ("X", i, -1), ("X", i, -1), -1
        coeff = Q_DIFF if sign > 0 else -Q_DIFF
        return [((head, a), ONE)] + [((tail, ("1", lam)), coeff) for lam in eq]
    return None


def _exchange(word: tuple, n: int) -> tuple | None:
    """Bring a non-reduced g-suffix to a word with g_s g_s adjacent, by braid moves."""
    start = next((p for p, letter in enumerate(word) if letter[0] == "g"), len(word))
    gens = [letter[1] for letter in word[start:]]
    for k in range(2, len(gens) + 1):
        if _length(_perm_of(gens[:k], n)) == k:
            continue
        prefix, s = gens[:k - 1], gens[k - 1]
        target = _perm_of(prefix + [s], n)
        for j in range(len(prefix)):
            shorter = prefix[:j] + prefix[j + 1:]
            if _perm_of(shorter, n) == target:
                new = shorter + [s, s] + gens[k:]
                return word[:start] + tuple(("g", i) for i in new)
    return None


def rewrite(r: int, n: int, words: dict[tuple, object]) -> HhatElement:
    """Rewrite a combination of words to the basis X^alpha 1_lam g_w."""
    pending = list(words.items())
    out: dict = {}
    while pending:
        word, coeff = pending.pop()
        for p in range(len(word) - 1):
            replacement = _rewrite_pair(r, n, word[p], word[p + 1])
            if replacement is not None:
                pending += [(word[:p] + rep + word[p + 2:], coeff * d) for rep, d in replacement]
                break
        else:
            exchanged = _exchange(word, n)
            if exchanged is not None:
                pending.append((exchanged, coeff))
                continue
            alpha = [0] * n
            lams = [letter[1] for letter in word if letter[0] == "1"]
            w = identity_perm(n)
            for letter in reversed(word):
                if letter[0] == "X":
                    alpha[letter[1] - 1] += letter[2]
                elif letter[0] == "g":
                    w = left_mul_simple(letter[1], w)
            for lam in lams or list(product(range(1, r + 1), repeat=n)):
                key = (tuple(alpha), lam, w)
                out[key] = out[key] + coeff if key in out else coeff
    return HhatElement(r, n, out)


def rewrite_letters(r: int, n: int, letters: list[str]) -> HhatElement:
    return rewrite(r, n, expand_letters(r, n, letters))
