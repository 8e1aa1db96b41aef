"""Word-problem oracles for the preset presentations.

Exact answers come from confluent rewriting (q, fn:<n>) or canonical forms
(sm:<m>); everywhere else the oracle combines conserved-quantity separation
with bounded bidirectional closure of the single-relation-application graph,
and says so when the bounds ran out.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .constructors import build_fn
from .presets import Q_SYSTEM, preset_presentation
from .rewrite import check_local_confluence, normal_form
from .words import ALPHABETS, separating_quantity


@dataclass(frozen=True)
class EqualityVerdict:
    status: str      # equal | distinct | unknown
    evidence: dict

    def as_json(self) -> dict:
        return {"status": self.status, "evidence": dict(self.evidence)}


def _validate_letters(word: str, alphabet: str, preset: str) -> None:
    bad = set(word) - set(alphabet)
    if bad:
        raise ValueError(f"word {word!r} uses letters {sorted(bad)} outside "
                         f"the {preset} alphabet {alphabet!r}")


# ---------------------------------------------------------------------------
# exact oracles


_CONFLUENCE_SANITY_BOUND = 2
_confluence_checked: set[str] = set()


def _ensure_locally_confluent(system) -> None:
    """One cheap local-confluence pass per system per process.  The heavyweight
    campaigns at higher exponent bounds belong to the verification suite."""
    if system.name in _confluence_checked:
        return
    report = check_local_confluence(system, exponent_bound=_CONFLUENCE_SANITY_BOUND)
    if report.unresolved:
        pair = report.unresolved[0]
        raise RuntimeError(
            f"system {system.name} is not locally confluent: "
            f"{pair.joint!r} splits to {pair.left_result!r} / {pair.right_result!r}")
    _confluence_checked.add(system.name)


def word_equal_nf(preset: str, u: str, v: str) -> EqualityVerdict:
    """Equality by normal form; presets q and fn:<n> only, never unknown."""
    pid = preset.lower()
    if pid == "q":
        _validate_letters(u, ALPHABETS["q"], pid)
        _validate_letters(v, ALPHABETS["q"], pid)
        _ensure_locally_confluent(Q_SYSTEM)
        nu, nv = normal_form(Q_SYSTEM, u), normal_form(Q_SYSTEM, v)
    elif pid.startswith("fn:"):
        handle = build_fn(int(pid.split(":", 1)[1]))
        _validate_letters(u, ALPHABETS["fn"], pid)
        _validate_letters(v, ALPHABETS["fn"], pid)
        _ensure_locally_confluent(handle.system)
        nu, nv = handle.element(u), handle.element(v)
    else:
        raise ValueError(f"no confluent system for preset {preset!r}; "
                         "use word_equal_bfs")
    evidence = {"kind": "normal_form", "left": nu, "right": nv}
    return EqualityVerdict("equal" if nu == nv else "distinct", evidence)


def sm_canonical(word: str, m: int) -> str:
    """Canonical form in Sm: each maximal run of m or more e's drops down to
    its residue ((k-1) mod (m-1)) + 1, other letters untouched."""
    if m < 2:
        raise ValueError("sm needs m >= 2")
    _validate_letters(word, ALPHABETS["sm"], f"sm:{m}")
    out = []
    for ch, run in groupby(word):
        k = sum(1 for _ in run)
        if ch == "e" and k >= m:
            k = ((k - 1) % (m - 1)) + 1
        out.append(ch * k)
    return "".join(out)


# ---------------------------------------------------------------------------
# the relation graph


def one_step_words(w: str, relations) -> list[str]:
    """Every word reachable from w by one application of a relation, in either
    direction, at any position."""
    out = []
    seen = {w}
    for l, r in relations:
        for big, small in ((l, r), (r, l)):
            start = 0
            while True:
                pos = w.find(big, start)
                if pos < 0:
                    break
                w2 = w[:pos] + small + w[pos + len(big):]
                if w2 not in seen:
                    seen.add(w2)
                    out.append(w2)
                start = pos + 1
    return out


def bounded_closure(relations, seeds, length_bound: int,
                    node_bound: int = 1_000_000) -> tuple[set[str], bool]:
    """Closure of the seed set under single relation applications, keeping
    words of length <= length_bound.  The flag reports completeness: False as
    soon as any successor was discarded for length or the node budget ran out,
    in which case the set is a genuine subset of the congruence closure."""
    seen = set(seeds)
    frontier = list(seen)
    complete = True
    while frontier:
        nxt = []
        for w in frontier:
            for w2 in one_step_words(w, relations):
                if w2 in seen:
                    continue
                if len(w2) > length_bound:
                    complete = False
                    continue
                if len(seen) >= node_bound:
                    return seen, False
                seen.add(w2)
                nxt.append(w2)
        frontier = nxt
    return seen, complete


def _back_chain(parents: dict[str, str | None], w: str) -> list[str]:
    out = [w]
    while parents[out[-1]] is not None:
        out.append(parents[out[-1]])
    return out


def _bidirectional_search(relations, u: str, v: str, length_bound: int,
                          node_bound: int):
    """Meet-in-the-middle over the relation graph.  Returns (path, None, nodes)
    on success, (None, closure_info, nodes) when a side's closure completed
    without meeting, or (None, None, nodes) when the bounds ran out."""
    if u == v:
        return [u], None, 1
    parents = ({u: None}, {v: None})
    frontier: list[list[str]] = [[u], [v]]
    complete = [True, True]
    exhausted = [False, False]
    nodes = 2

    def path_through(meet: str) -> list[str]:
        left = _back_chain(parents[0], meet)
        right = _back_chain(parents[1], meet)
        return list(reversed(left)) + right[1:]

    while True:
        live = [s for s in (0, 1) if not exhausted[s]]
        if not live:
            break
        s = min(live, key=lambda side: len(frontier[side]))
        nxt = []
        for w in frontier[s]:
            for w2 in one_step_words(w, relations):
                if w2 in parents[s]:
                    continue
                if len(w2) > length_bound:
                    complete[s] = False
                    continue
                parents[s][w2] = w
                if w2 in parents[1 - s]:
                    return path_through(w2), None, nodes + 1
                nxt.append(w2)
                nodes += 1
                if nodes > node_bound:
                    complete[s] = False
                    return None, None, nodes
        frontier[s] = nxt
        if not nxt:
            exhausted[s] = True
            # a complete closure that never met the other word settles the
            # question no matter how far the other side still reaches
            if complete[s]:
                return None, {"side": "left" if s == 0 else "right",
                              "closure_size": len(parents[s])}, nodes
    return None, None, nodes


# ---------------------------------------------------------------------------
# the bounded oracle


DEFAULT_NODE_BOUND = 1_000_000

_verdict_memo: dict[tuple, EqualityVerdict] = {}


def _flip_path(verdict: EqualityVerdict) -> EqualityVerdict:
    if verdict.evidence.get("kind") != "path":
        return verdict
    ev = dict(verdict.evidence)
    ev["path"] = list(reversed(ev["path"]))
    return EqualityVerdict(verdict.status, ev)


def word_equal_bfs(preset: str, u: str, v: str, length_bound: int | None = None,
                   node_bound: int = DEFAULT_NODE_BOUND) -> EqualityVerdict:
    """Equality for the presets without a confluent system (s, t, c, sm:<m>;
    q is accepted too, for cross-checking against the normal forms).

    Three tiers: a conserved quantity that differs settles distinctness; a
    meeting of the two relation-graph balls settles equality with a replayable
    path; a side whose entire congruence class fit under the bounds settles
    distinctness by exhaustion.  Anything else is unknown.
    """
    pid = preset.lower()
    if pid.startswith("sm:"):
        m = int(pid.split(":", 1)[1])
        cu, cv = sm_canonical(u, m), sm_canonical(v, m)
        return EqualityVerdict("equal" if cu == cv else "distinct",
                               {"kind": "normal_form", "left": cu, "right": cv})
    if pid not in ("q", "s", "t", "c"):
        raise ValueError(f"word_equal_bfs does not know preset {preset!r}")
    alphabet = ALPHABETS[pid]
    _validate_letters(u, alphabet, pid)
    _validate_letters(v, alphabet, pid)
    if length_bound is None:
        length_bound = len(u) + len(v) + 4

    a, b = sorted((u, v))
    key = (pid, a, b, length_bound, node_bound)
    if key in _verdict_memo:
        cached = _verdict_memo[key]
        return cached if (a, b) == (u, v) else _flip_path(cached)

    name = separating_quantity(a, b, pid)
    if name is not None:
        verdict = EqualityVerdict("distinct", {"kind": "invariant", "name": name})
    else:
        relations = preset_presentation(pid).relations
        path, closure, nodes = _bidirectional_search(
            relations, a, b, length_bound, node_bound)
        if path is not None:
            verdict = EqualityVerdict("equal", {"kind": "path", "path": path})
        elif closure is not None:
            verdict = EqualityVerdict(
                "distinct", {"kind": "closure", "explored": nodes, **closure})
        else:
            verdict = EqualityVerdict(
                "unknown", {"kind": "bound", "length_bound": length_bound,
                            "node_bound": node_bound, "explored": nodes})
    _verdict_memo[key] = verdict
    return verdict if (a, b) == (u, v) else _flip_path(verdict)


def invariant_separates(preset: str, u: str, v: str) -> str | None:
    """Name of the first conserved quantity distinguishing u from v, if any."""
    pid = preset.lower()
    if pid not in ("q", "s", "t", "c"):
        raise ValueError(f"no conserved-quantity registry for preset {preset!r}")
    return separating_quantity(u, v, pid)


def replay_path(preset: str, path) -> bool:
    """Check that consecutive path entries differ by one relation application."""
    path = list(path)
    if not path:
        return False
    relations = preset_presentation(preset.lower()).relations
    for cur, nxt in zip(path, path[1:]):
        if nxt not in one_step_words(cur, relations):
            return False
    return True
