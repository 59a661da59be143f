"""Decision procedures: complement, asymptotic complement, minimality.

Every predicate returns a Verdict rather than a bare bool.  A verdict's
``exact`` flag separates two grades of answer: exact verdicts are proved
over all of Z by a closed-form computation or a structural argument, while
window-grade verdicts (exact=False) report what holds on the stated window
and record it.  False verdicts always carry at least one witness; witnesses
are ordered by absolute value with ties going to the negative element.

Statuses are "true", "false", and "unknown"; "unknown" appears when neither
an exact route nor a trustworthy window answer exists, and for questions
whose truth would settle open problems about primes (coverage by several
prime-shifted classes of one parity), where honest tooling must not guess.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import (
    EmptySetError,
    RadiusTooSmallError,
    UndecidablePairError,
)
from .intset import (
    BEPSet,
    CofiniteSet,
    FamilySet,
    FiniteSet,
    IntSet,
    PointwiseSet,
    Window,
    enumerate_window,
    is_prime,
    minus,
    negate,
    normalize,
    rule_gap,
    smallest_abs_elements,
)
from .sumset import (
    bep_sumset,
    closed_form,
    complement_set,
    windowed_sumset,
)

DEFAULT_WINDOW = Window(-200, 200)


@dataclass(frozen=True)
class Verdict:
    status: str
    exact: bool
    witnesses: tuple[int, ...] = ()
    evidence: tuple[int, ...] | None = None
    family: dict | None = None
    window: Window | None = None
    removals: tuple[tuple[int, tuple[int, ...]], ...] = ()
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status not in ("true", "false", "unknown"):
            raise ValueError(f"bad status {self.status!r}")

    @property
    def is_true(self) -> bool:
        return self.status == "true"

    @property
    def is_false(self) -> bool:
        return self.status == "false"

    def exit_code(self) -> int:
        return {"true": 0, "false": 1, "unknown": 2}[self.status]

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "exact": self.exact,
            "witnesses": list(self.witnesses),
            "evidence": None if self.evidence is None else list(self.evidence),
            "family": self.family,
            "window": None if self.window is None else self.window.to_json(),
            "removals": [[c, list(w)] for c, w in self.removals],
            "detail": self.detail,
        }


def order_witnesses(points, limit: int = 8) -> tuple[int, ...]:
    return tuple(sorted(points, key=lambda t: (abs(t), t > 0))[:limit])


def _describe(s: IntSet) -> dict:
    """Structured shape of a closed-form descriptor, for false verdicts."""
    s = normalize(s)
    if isinstance(s, FiniteSet):
        return {"kind": "finite", "elements": list(s.elements)}
    if isinstance(s, CofiniteSet):
        return {"kind": "cofinite", "excluded": list(s.excluded)}
    if isinstance(s, BEPSet):
        def side(tail):
            if tail.kind != "periodic":
                return None
            return {"period": tail.period, "residues": sorted(tail.residues)}
        return {
            "kind": "bep",
            "left": side(s.left),
            "right": side(s.right),
            "window": [s.core_lo, s.core_hi],
            "sporadic": list(s.core),
        }
    return {"kind": type(s).__name__}


# ---------------------------------------------------------------------------
# complement


def is_complement(
    w: IntSet, c: IntSet, window: Window | None = None, radius: int | None = None
) -> Verdict:
    """Is w + c all of Z?"""
    nw, nc = normalize(w), normalize(c)
    if closed_form(nw) and closed_form(nc):
        comp = complement_set(bep_sumset(nw, nc))
        if comp is None:
            return Verdict("true", True, evidence=(), detail="sumset covers every integer")
        return Verdict(
            "false",
            True,
            witnesses=order_witnesses(smallest_abs_elements(comp, 8)),
            family=_describe(comp),
            detail="uncovered set computed in closed form",
        )
    win = window or DEFAULT_WINDOW
    try:
        mask = windowed_sumset(nw, nc, win, radius)
    except (UndecidablePairError, RadiusTooSmallError) as e:
        return Verdict("unknown", False, window=win, detail=str(e))
    if mask.interior_margin == 0 and mask.bits == (1 << len(win)) - 1:
        # structural full-coverage routes land here with margin 0
        exact = _provably_full(nw, nc)
        return Verdict(
            "true",
            exact,
            evidence=() if exact else None,
            window=None if exact else win,
            detail="full coverage by the long-runs argument" if exact else "no gap on the window",
        )
    bad = mask.uncovered_interior()
    if bad:
        exact = mask.interior_margin == 0
        return Verdict(
            "false",
            exact,
            witnesses=order_witnesses(bad),
            window=win,
            detail="uncovered points are exact" if exact else (
                f"uncovered inside the trusted interior (margin {mask.interior_margin})"
            ),
        )
    edge = [t for t in mask.uncovered() if t not in set(bad)]
    return Verdict(
        "true",
        False,
        window=win,
        detail="covered on the trusted interior"
        + (f"; {len(edge)} untrusted edge gaps" if edge else ""),
    )


def _provably_full(nw: IntSet, nc: IntSet) -> bool:
    from .sumset import _full_coverage_provable
    from .intset import is_infinite

    for x, y in ((nw, nc), (nc, nw)):
        if isinstance(x, CofiniteSet) and not x.excluded:
            return True
        if isinstance(x, CofiniteSet) and is_infinite(y):
            return True
    return _full_coverage_provable(nw, nc)


# ---------------------------------------------------------------------------
# asymptotic complement


def asymptotic_exceptional_set(
    w: IntSet, c: IntSet, window: Window | None = None, radius: int | None = None
) -> Verdict:
    """Verdict on whether Z minus (w + c) is finite, with the exceptional
    set as evidence when it is exactly computable."""
    nw, nc = normalize(w), normalize(c)
    if closed_form(nw) and closed_form(nc):
        comp = complement_set(bep_sumset(nw, nc))
        if comp is None:
            return Verdict("true", True, evidence=(), detail="no exceptional points")
        comp = normalize(comp)
        if isinstance(comp, FiniteSet):
            return Verdict(
                "true",
                True,
                evidence=comp.elements,
                detail=f"{len(comp.elements)} exceptional points",
            )
        return Verdict(
            "false",
            True,
            witnesses=order_witnesses(smallest_abs_elements(comp, 8)),
            family=_describe(comp),
            detail="uncovered set is infinite, described by its closed form",
        )
    if _provably_full(nw, nc):
        return Verdict("true", True, evidence=(), detail="full coverage by the long-runs argument")
    v = _nonprime_route(nw, nc, window)
    if v is not None:
        return v
    v = _block_gap_route(nw, nc)
    if v is not None:
        return v
    win = window or DEFAULT_WINDOW
    try:
        mask = windowed_sumset(nw, nc, win, radius)
    except (UndecidablePairError, RadiusTooSmallError) as e:
        return Verdict("unknown", False, window=win, detail=str(e))
    bad = mask.uncovered_interior()
    if not bad:
        return Verdict(
            "true", False, window=win, detail="no gap on the trusted interior"
        )
    return Verdict(
        "unknown",
        False,
        witnesses=order_witnesses(bad),
        window=win,
        detail=(
            f"{len(bad)} uncovered points on the trusted interior; "
            "no exact route decides whether the global gap set is finite"
        ),
    )


def _pointwise_finite_pair(nw: IntSet, nc: IntSet):
    for x, y in ((nw, nc), (nc, nw)):
        if isinstance(x, PointwiseSet) and isinstance(y, FiniteSet):
            return x, y
    return None


def _nonprime_route(
    nw: IntSet, nc: IntSet, window: Window | None
) -> Verdict | None:
    """Exact asymptotic answers for the nonprime set against a finite set.

    The sum covers a residue parity class wherever some shift lands on an
    even value other than 2, so with both parities present among c + shift
    the exceptional set is confined to an explicit finite candidate list.
    With a single shift the gap set is exactly a translated copy of the
    primes (infinite).  Several shifts of one parity would need simultaneous
    prime values, which is open, so that case stays unknown.
    """
    pair = _pointwise_finite_pair(nw, nc)
    if pair is None:
        return None
    pw, fin = pair
    sign = -1 if pw.negated else 1
    shifts = [c + pw.shift for c in fin.elements]
    parities = {s % 2 for s in shifts}

    def covered(t: int) -> bool:
        return any(pw.member(t - c) for c in fin.elements)

    if len(parities) == 2:
        cand: set[int] = set()
        for p in (0, 1):
            cls = [c for c in fin.elements if (c + pw.shift) % 2 == p]
            if not cls:
                continue
            inter: set[int] | None = None
            for c in cls:
                opts = {c + pw.shift + 2 * sign}
                opts.update(c + r for r in pw.removes)
                inter = opts if inter is None else inter & opts
            cand |= inter or set()
        bad = sorted(t for t in cand if not covered(t))
        return Verdict(
            "true",
            True,
            evidence=tuple(bad),
            detail="both parities reached; candidates checked pointwise",
        )
    if len(fin.elements) == 1:
        c0 = fin.elements[0]
        pool: list[int] = []
        p = 2
        while len(pool) < 12 and p < 200:
            if is_prime(p):
                t = c0 + pw.shift + sign * p
                if not covered(t):
                    pool.append(t)
            p += 1
        for r in pw.removes:
            t = c0 + r
            if not covered(t):
                pool.append(t)
        return Verdict(
            "false",
            True,
            witnesses=order_witnesses(pool),
            family={
                "kind": "shifted_primes",
                "offset": c0 + pw.shift,
                "scale": sign,
            },
            detail="single shift leaves a translated copy of the primes uncovered",
        )
    win = window or DEFAULT_WINDOW
    bad = [t for t in win if not covered(t)]
    return Verdict(
        "unknown",
        False,
        witnesses=order_witnesses(bad),
        window=win,
        detail=(
            f"all shifts share one parity; finiteness of the gap set is a "
            f"simultaneous-primes question ({len(bad)} gaps on the window)"
        ),
    )


def _family_finite_pair(nw: IntSet, nc: IntSet):
    for x, y in ((nw, nc), (nc, nw)):
        if isinstance(x, FamilySet) and isinstance(y, FiniteSet):
            return x, y
    return None


def _block_gap_route(nw: IntSet, nc: IntSet) -> Verdict | None:
    """A block family plus a finite set never covers cofinitely: once the
    between-block gaps outgrow the finite set's diameter, each gap keeps an
    uncovered point."""
    pair = _family_finite_pair(nw, nc)
    if pair is None:
        return None
    fam, fin = pair
    if fam.negated:
        inner = _block_gap_route(normalize(negate(fam)), normalize(negate(fin)))
        if inner is None:
            return None
        fam_desc = dict(inner.family or {})
        fam_desc["mirrored"] = True
        return replace(
            inner,
            witnesses=order_witnesses([-t for t in inner.witnesses]),
            family=fam_desc,
        )
    span = fin.elements[-1] - fin.elements[0]
    witnesses: list[int] = []
    first_k = None
    for k in range(1, min(fam.rule.max_k(), 200_000)):
        if len(witnesses) >= 5:
            break
        g_lo, g_hi = rule_gap(fam.rule, k)
        if g_hi - g_lo < span:
            continue
        if first_k is None:
            first_k = k
        t_lo = g_lo + fam.shift + fin.elements[-1]
        t_hi = g_hi + fam.shift + fin.elements[0]
        for t in range(t_lo, t_hi + 1):
            if not any(fam.member(t - c) for c in fin.elements):
                witnesses.append(t)
                break
    if first_k is None or not witnesses:
        return None
    return Verdict(
        "false",
        True,
        witnesses=tuple(witnesses),
        family={
            "kind": "block_gaps",
            "rule": fam.rule.params(),
            "firstGapIndex": first_k,
        },
        detail=(
            "between-block gaps outgrow the finite diameter from index "
            f"{first_k}; one uncovered point per later gap"
        ),
    )


def is_asymptotic_complement(
    w: IntSet, c: IntSet, window: Window | None = None, radius: int | None = None
) -> Verdict:
    v = asymptotic_exceptional_set(w, c, window, radius)
    n = len(v.evidence) if v.evidence is not None else None
    extra = f"; exceptional set size {n}" if n is not None else ""
    return replace(v, evidence=None, detail=(v.detail + extra).strip("; "))


# ---------------------------------------------------------------------------
# minimality


def _removal_candidates(nc: IntSet) -> list[int] | None:
    """Elements whose removal is tested for minimality.

    Finite sets test every element.  BEP sets test the core and two full
    periods into each periodic tail (removals deeper in a tail are related
    to those by the tail translation).  Other kinds are not supported.
    """
    if isinstance(nc, FiniteSet):
        return list(nc.elements)
    if isinstance(nc, BEPSet):
        cands = list(nc.core)
        if nc.left.kind == "periodic":
            lo = nc.core_lo - 2 * nc.left.period
            cands = nc.left.elements(lo, nc.core_lo - 1) + cands
        if nc.right.kind == "periodic":
            hi = nc.core_hi + 2 * nc.right.period
            cands = cands + nc.right.elements(nc.core_hi + 1, hi)
        return cands
    if isinstance(nc, CofiniteSet):
        # a cofinite set minus one point is still cofinite, so the first
        # sampled removal already decides; sampling can never certify true
        bound = max((abs(e) for e in nc.excluded), default=0) + 4
        return smallest_abs_elements(nc, 3, bound)
    return None


def _minimality(
    w: IntSet,
    c: IntSet,
    predicate,
    window: Window | None,
    radius: int | None,
    name: str,
) -> Verdict:
    base = predicate(w, c, window, radius)
    if not base.is_true:
        return replace(
            base, detail=f"not a {name} in the first place; {base.detail}".strip("; ")
        )
    nc = normalize(c)
    cands = _removal_candidates(nc)
    if cands is None:
        return Verdict(
            "unknown",
            False,
            detail=f"minimality testing needs a finite or bounded-except-periodic candidate, "
            f"got {type(nc).__name__}",
        )
    sampled = not isinstance(nc, FiniteSet)
    removals: list[tuple[int, tuple[int, ...]]] = []
    exact = base.exact and not sampled
    for x in sorted(cands):
        if isinstance(nc, FiniteSet) and len(nc.elements) == 1:
            sub = Verdict("false", True, witnesses=(0,), detail="empty removal covers nothing")
        else:
            sub = predicate(w, minus(nc, {x}), window, radius)
        if sub.is_true:
            return Verdict(
                "false",
                sub.exact and base.exact,
                witnesses=(x,),
                window=sub.window,
                detail=f"remains a {name} after removing {x}",
            )
        if sub.status == "unknown":
            return Verdict(
                "unknown",
                False,
                witnesses=(x,),
                window=sub.window,
                detail=f"cannot decide the removal of {x}: {sub.detail}",
            )
        exact = exact and sub.exact
        removals.append((x, sub.witnesses[:4]))
    if isinstance(nc, CofiniteSet):
        return Verdict(
            "unknown",
            False,
            removals=tuple(removals),
            detail="sampled removals all break it, but a cofinite candidate "
            "has untestable elements beyond the sample",
        )
    detail = f"every removal ({len(removals)} tested) breaks the {name}"
    if sampled:
        detail += "; tail removals sampled two periods beyond each threshold"
    return Verdict(
        "true",
        exact,
        evidence=base.evidence,
        window=base.window,
        removals=tuple(removals),
        detail=detail,
    )


def is_minimal_complement(
    w: IntSet, c: IntSet, window: Window | None = None, radius: int | None = None
) -> Verdict:
    return _minimality(w, c, is_complement, window, radius, "complement")


def is_minimal_asymptotic_complement(
    w: IntSet, c: IntSet, window: Window | None = None, radius: int | None = None
) -> Verdict:
    # the exceptional-set form of the predicate, so a true verdict carries
    # the exceptional set as evidence
    return _minimality(
        w, c, asymptotic_exceptional_set, window, radius, "asymptotic complement"
    )


# ---------------------------------------------------------------------------
# redundancy


def removal_growth(
    w: IntSet,
    c: IntSet,
    removed,
    window: Window | None = None,
    radius: int | None = None,
) -> tuple[list[int], bool, Window | None]:
    """Newly uncovered points after removing ``removed`` from c, restricted
    to the trusted interior, plus whether that growth sits clear of the
    window edges (fully enclosed) and the trusted interior used.

    Enclosure means no new gap within max(8, len//20) of either trusted
    edge, so the finite loss visibly stops before the horizon does.
    """
    win = window or DEFAULT_WINDOW
    base = windowed_sumset(w, c, win, radius)
    after = windowed_sumset(w, minus(c, removed), win, radius)
    margin = max(base.interior_margin, after.interior_margin)
    slack = max(8, len(win) // 20)
    trusted = win.shrink(margin)
    if trusted is None:
        return [], False, None
    growth = [
        t
        for t in trusted
        if base.covered(t) and not after.covered(t)
    ]
    inner = win.shrink(margin + slack)
    if inner is None:
        return growth, False, trusted
    enclosed = all(t in inner for t in growth)
    return growth, enclosed, trusted


def redundant_elements(
    w: IntSet, c: IntSet, window: Window | None = None, radius: int | None = None
) -> list[tuple[int, tuple[int, ...]]]:
    """Elements of c (within the window) whose removal costs only a finite,
    fully-enclosed set of newly uncovered points; each comes with that set."""
    win = window or DEFAULT_WINDOW
    nc = normalize(c)
    out: list[tuple[int, tuple[int, ...]]] = []
    for x in enumerate_window(nc, win):
        if isinstance(nc, FiniteSet) and len(nc.elements) == 1:
            break
        try:
            growth, enclosed, trusted = removal_growth(w, nc, {x}, win, radius)
        except (UndecidablePairError, RadiusTooSmallError, EmptySetError):
            continue
        if trusted is not None and enclosed:
            out.append((x, tuple(growth)))
    return out
