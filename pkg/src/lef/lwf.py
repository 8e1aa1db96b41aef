"""Wrapping-map construction for the two six-relation word hosts.

A word is pre-accurate for the subset of host elements carrying a
representative of length at most n when its own element lies in that subset
and, unless it is a single letter, it splits into two pre-accurate words.
Concatenations of pre-accurate words then cover every product of subset
elements, which lets a finite cut-off of the free semigroup wrap the subset:
by plain length for the t host, and by e-reduced length with runs of e folded
below a fixed modulus for the s host, whose pre-accurate words pump
arbitrarily long runs of e.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .approx import FiniteSubset, WrapMap
from .constructors import quotient_by_length_ideal
from .fsg import MulTable
from .oracle import invariant_separates, sm_canonical, word_equal_bfs, \
    word_equal_nf
from .words import ALPHABETS, e_reduced_length

_WORD_HOSTS = ("q", "s", "t", "c")


def _alphabet(preset: str) -> str:
    key = preset.split(":")[0]
    if key not in ALPHABETS:
        raise ValueError(f"no word alphabet for preset {preset!r}")
    return ALPHABETS[key]


def _equal(preset: str, u: str, v: str) -> bool | None:
    """Three-valued word equality: None when the oracle cannot decide."""
    if u == v:
        return True
    if preset == "q" or preset.startswith("fn:"):
        return word_equal_nf(preset, u, v).status == "equal"
    verdict = word_equal_bfs(preset, u, v)
    if verdict.status == "unknown":
        return None
    return verdict.status == "equal"


@dataclass(frozen=True)
class PreAccurateSet:
    """Pre-accurate words for the subset bounded by representative length n,
    enumerated up to length_cap.

    base_elements holds one representative per distinct element among the
    defining words of length <= n.  Words whose membership the oracle could
    not settle are listed in indeterminate and conservatively excluded.
    """

    preset: str
    n: int
    length_cap: int
    base_words: tuple[str, ...]
    base_elements: tuple[str, ...]
    words: tuple[str, ...]
    indeterminate: tuple[str, ...]

    @property
    def max_length(self) -> int:
        return max(len(w) for w in self.words)

    @property
    def truncated(self) -> bool:
        """True when the cap stopped short of twice the observed maximum
        length plus two, the point past which emptiness of every longer
        length follows by induction on splits."""
        return self.length_cap < 2 * self.max_length + 2

    def as_json(self) -> dict:
        return {
            "preset": self.preset,
            "n": self.n,
            "length_cap": self.length_cap,
            "base_words": list(self.base_words),
            "base_elements": list(self.base_elements),
            "words": list(self.words),
            "max_length": self.max_length,
            "truncated": self.truncated,
            "indeterminate": list(self.indeterminate),
        }


def enumerate_preaccurate(preset: str, n: int,
                          length_cap: int | None = None) -> PreAccurateSet:
    """All pre-accurate words up to the cap, by increasing length.

    Every word of length <= n is pre-accurate outright.  A longer word
    qualifies when it concatenates two pre-accurate words and equals some
    defining word in the host, so candidates at each length come from joining
    shorter pre-accurate words, and membership is settled by the word oracle
    against the base representatives.  Raises when the base words themselves
    cannot be partitioned.
    """
    pid = preset.lower()
    if pid not in _WORD_HOSTS:
        raise ValueError("pre-accurate enumeration covers the word presets "
                         "q, s, t and c")
    if n < 1:
        raise ValueError("the subset bound n must be at least 1")
    cap = 2 * n + 4 if length_cap is None else length_cap
    if cap < n:
        raise ValueError(f"length cap {cap} falls below the subset bound {n}")
    letters = sorted(_alphabet(pid))
    base_words = tuple("".join(t) for ell in range(1, n + 1)
                       for t in itertools.product(letters, repeat=ell))

    reps: list[str] = []
    for w in base_words:
        hit = False
        for r in reps:
            eq = _equal(pid, w, r)
            if eq is None:
                raise RuntimeError(
                    f"cannot partition the defining words: {w!r} vs {r!r} "
                    f"is undecided")
            if eq:
                hit = True
                break
        if not hit:
            reps.append(w)

    def in_subset(w: str) -> bool | None:
        undecided = False
        for r in reps:
            eq = _equal(pid, w, r)
            if eq:
                return True
            if eq is None:
                undecided = True
        return None if undecided else False

    by_length: dict[int, list[str]] = {
        ell: ["".join(t) for t in itertools.product(letters, repeat=ell)]
        for ell in range(1, min(n, cap) + 1)}
    indeterminate: list[str] = []
    for ell in range(n + 1, cap + 1):
        candidates = sorted({u + v
                             for j in range(1, ell)
                             for u in by_length.get(j, ())
                             for v in by_length.get(ell - j, ())})
        found = []
        for w in candidates:
            verdict = in_subset(w)
            if verdict:
                found.append(w)
            elif verdict is None:
                indeterminate.append(w)
        if found:
            by_length[ell] = found
    words = tuple(w for ell in sorted(by_length) for w in by_length[ell])
    return PreAccurateSet(preset=pid, n=n, length_cap=cap,
                          base_words=base_words, base_elements=tuple(reps),
                          words=words, indeterminate=tuple(indeterminate))


def apriori_length_bound(n: int) -> int:
    """Crude a priori cap on the length of pre-accurate words over a
    six-letter alphabet, n * 2**(6**(n+1)).  Astronomical already at n = 1;
    the builder measures the true maximum instead and certifies completeness
    by enumerating past twice that length."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return n * 2 ** (6 ** (n + 1))


def fallback_element(preset: str, bound: int) -> str:
    """First word of length bound+1 (alphabetically) that the conserved
    quantities separate from every word of length <= bound; its element is
    guaranteed to lie outside the length-bound subset."""
    pid = preset.lower()
    letters = sorted(_alphabet(pid))
    shorter = ["".join(t) for ell in range(1, bound + 1)
               for t in itertools.product(letters, repeat=ell)]
    for t in itertools.product(letters, repeat=bound + 1):
        w = "".join(t)
        if all(invariant_separates(pid, w, u) is not None for u in shorter):
            return w
    raise RuntimeError(f"no invariant-separated word of length {bound + 1} "
                       f"over preset {pid}")


def sm_ideal_quotient(m: int, bound: int) -> tuple[MulTable, dict[str, int]]:
    """Finite carrier over the five-letter alphabet with runs of e folded
    modulo e**m = e: canonical words of e-reduced length at most bound, plus
    a zero at index 0 absorbing every longer product.

    Returns the table and the word-to-index map.
    """
    if m < 2:
        raise ValueError("the e-run modulus m must be at least 2")
    if bound < 0:
        raise ValueError("the e-reduced length bound must be nonnegative")
    skeleton = sorted(set(ALPHABETS["s"]) - {"e"})
    words = ["0"]
    by_level: list[list[int]] = []
    for k in range(bound + 1):
        level: list[str] = []
        if k == 0:
            level = ["e" * r for r in range(1, m)]
        else:
            for skel in itertools.product(skeleton, repeat=k):
                for runs in itertools.product(range(m), repeat=k + 1):
                    parts = []
                    for i in range(k):
                        parts.append("e" * runs[i])
                        parts.append(skel[i])
                    parts.append("e" * runs[k])
                    level.append("".join(parts))
        level.sort(key=lambda w: (len(w), w))
        start = len(words)
        words.extend(level)
        by_level.append(list(range(start, start + len(level))))
    index = {w: i for i, w in enumerate(words)}
    total = len(words)
    dtype = np.uint16 if total <= np.iinfo(np.uint16).max else np.uint32
    table = np.zeros((total, total), dtype=dtype)
    for ki, rows in enumerate(by_level):
        for kj in range(bound + 1 - ki):
            cols = by_level[kj]
            for i in rows:
                wi = words[i]
                for j in cols:
                    table[i, j] = index[sm_canonical(wi + words[j], m)]
    return MulTable(table, labels=tuple(words)), index


def build_lwf_wrapping(preset: str, subset, n: int) -> WrapMap:
    """Wrapping map for a set of words of length <= n in the s or t host.

    subset is a FiniteSubset over the preset or a plain iterable of words.
    The pre-accurate words for the doubled bound 2n are enumerated first;
    they absorb every product of two subset elements, so mapping them to
    themselves and everything else to an element outside the doubled subset
    yields the wrapping.  The t carrier cuts the free semigroup off past the
    longest pre-accurate word.  The s carrier folds runs of e modulo 2n+1 and
    cuts off on e-reduced length, after verifying that words sharing a folded
    form are equal in the host.
    """
    pid = preset.lower()
    if pid not in ("s", "t"):
        raise ValueError("the wrapping construction covers the s and t presets")
    if isinstance(subset, FiniteSubset):
        if subset.host != pid:
            raise ValueError(f"subset host {subset.host!r} does not match "
                             f"preset {pid!r}")
        members = tuple(subset.elements)
    else:
        members = tuple(str(w) for w in subset)
    if not members:
        raise ValueError("the subset must be nonempty")
    alphabet = set(_alphabet(pid))
    for w in members:
        if not w or set(w) - alphabet:
            raise ValueError(f"{w!r} is not a word over the {pid} alphabet")
        if len(w) > n:
            raise ValueError(f"{w!r} exceeds the representative bound {n}")
    if pid == "t":
        return _wrap_t(n)
    return _wrap_s(n)


def _require_settled(pre: PreAccurateSet) -> None:
    if pre.indeterminate:
        sample = ", ".join(repr(w) for w in pre.indeterminate[:5])
        raise RuntimeError(f"subset membership undecided for {sample}")


def _wrap_t(n: int) -> WrapMap:
    nn = 2 * n
    cap = 2 * nn + 4
    for _ in range(3):
        pre = enumerate_preaccurate("t", nn, cap)
        _require_settled(pre)
        if not pre.truncated:
            break
        cap = 2 * pre.max_length + 2
    else:
        raise RuntimeError(f"pre-accurate words still appearing at length {cap}")
    fallback = fallback_element("t", nn)
    D = quotient_by_length_ideal(ALPHABETS["t"], pre.max_length)
    members = set(pre.words)
    d = tuple(w if w in members else fallback
              for w in (D.label(i) for i in range(D.order)))
    return WrapMap(D=D, d=d)


def _wrap_s(n: int) -> WrapMap:
    nn = 2 * n
    m = nn + 1
    cap = 2 * nn + 6
    pre = enumerate_preaccurate("s", nn, cap)
    _require_settled(pre)

    groups: dict[str, list[str]] = {}
    early: set[str] = set()
    for w in pre.words:
        c = sm_canonical(w, m)
        groups.setdefault(c, []).append(w)
        if len(w) <= cap - 2:
            early.add(c)
    if early != set(groups):
        fresh = ", ".join(repr(c) for c in sorted(set(groups) - early)[:5])
        raise RuntimeError(f"folded forms still appearing near the length "
                           f"cap: {fresh}")

    rep: dict[str, str] = {}
    for c, ws in groups.items():
        ws.sort(key=lambda w: (len(w), w))
        head = ws[0]
        for other in ws[1:]:
            if _equal("s", head, other) is not True:
                raise RuntimeError(f"{head!r} and {other!r} share the folded "
                                   f"form {c!r} but are not provably equal")
        rep[c] = head

    bound = max(e_reduced_length(c) for c in groups)
    D, _ = sm_ideal_quotient(m, bound)
    fallback = fallback_element("s", nn)
    d = tuple(rep.get(w, fallback)
              for w in (D.label(i) for i in range(D.order)))
    return WrapMap(D=D, d=d)
