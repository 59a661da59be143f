"""Symbolic descriptors for infinite (and finite) subsets of the integers.

Every set handled by this package is one of six descriptor kinds:

* ``FiniteSet``: explicit sorted elements.
* ``CofiniteSet``: all integers except an explicit finite exclusion list.
* ``BEPSet``: bounded-except-periodic.  A finite explicit core on a window
  ``[core_lo, core_hi]`` plus a left tail pattern governing all
  ``t < core_lo`` and a right tail pattern governing all ``t > core_hi``.
  Each tail is either empty or periodic (a residue set modulo a period).
  This kind subsumes arithmetic progressions, rays, finite unions of
  shifted subgroups, and any set that is eventually periodic in both
  directions.
* ``FamilySet``: a block family.  A rule gives, for each index ``k >= 1``,
  an interval block ``[start(k), start(k)+length(k)-1]`` with block lengths
  and gap lengths strictly increasing.  An optional periodic tail covers
  everything below the first block, and finite add/remove edits, an integer
  shift, and a reflection flag are applied on the outside.
* ``PointwiseSet``: membership by arithmetic predicate.  The only built-in
  predicate is "nonprime" (negatives, 0, 1, and composites), again with
  outside edits, shift, and reflection.
* ``UnionSet``: a union of descriptors that does not fold into one of the
  closed forms above.

All element values are validated against signed 64-bit range; arithmetic
that would leave that range raises the builtin ``OverflowError``.  The empty
set is rejected everywhere with ``EmptySetError``.

``normalize`` produces canonical forms: Finite/Cofinite/BEP descriptors are
unique per set (minimal core window, reduced tail periods, canonical split
point for pure periodic sets), family and pointwise edits are folded so that
adds are genuinely outside and removes genuinely inside the base set, and
unions are folded pairwise wherever a closed form exists.
"""
from __future__ import annotations

import ast
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable, Iterable

from .errors import (
    BadParamsError,
    EmptySetError,
    OutOfDecidableRangeError,
    TooFewElementsError,
)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def check_i64(value: int, what: str = "value") -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise BadParamsError(f"{what} must be an int, got {type(value).__name__}")
    if value < INT64_MIN or value > INT64_MAX:
        raise OverflowError(f"{what} {value} outside signed 64-bit range")
    return value


def checked_add(a: int, b: int) -> int:
    r = a + b
    if r < INT64_MIN or r > INT64_MAX:
        raise OverflowError(f"sum {r} outside signed 64-bit range")
    return r


# ---------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class Window:
    """Closed integer interval [lo, hi], never empty."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        check_i64(self.lo, "window lo")
        check_i64(self.hi, "window hi")
        if self.lo > self.hi:
            raise BadParamsError(f"window [{self.lo}, {self.hi}] is empty")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, t: int) -> bool:
        return self.lo <= t <= self.hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def shrink(self, margin: int) -> "Window | None":
        if self.lo + margin > self.hi - margin:
            return None
        return Window(self.lo + margin, self.hi - margin)

    def to_json(self) -> list[int]:
        return [self.lo, self.hi]


# ---------------------------------------------------------------------------
# tail patterns


@dataclass(frozen=True)
class TailSpec:
    """One-sided behaviour of a BEP set beyond its core window.

    ``kind`` is "empty" or "periodic".  A periodic tail holds the residues
    (mod ``period``) that belong to the set on that side.  ``threshold`` is
    the boundary: a left tail applies to ``t < threshold``, a right tail to
    ``t > threshold``.  The all-residues pattern ("full") is represented,
    after reduction, as period 1 with residue set {0}.
    """

    kind: str
    threshold: int
    period: int = 1
    residues: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        check_i64(self.threshold, "tail threshold")
        if self.kind not in ("empty", "periodic"):
            raise BadParamsError(f"unknown tail kind {self.kind!r}")
        if self.period < 1:
            raise BadParamsError("tail period must be >= 1")
        if self.kind == "periodic":
            if not self.residues:
                raise BadParamsError("periodic tail needs a nonempty residue set")
            if any(r < 0 or r >= self.period for r in self.residues):
                raise BadParamsError("tail residues must lie in [0, period)")
        else:
            if self.residues:
                raise BadParamsError("empty tail must carry no residues")

    # -- constructors

    @staticmethod
    def empty(threshold: int) -> "TailSpec":
        return TailSpec("empty", threshold, 1, frozenset())

    @staticmethod
    def full(threshold: int) -> "TailSpec":
        return TailSpec("periodic", threshold, 1, frozenset({0}))

    @staticmethod
    def periodic(threshold: int, period: int, residues: Iterable[int]) -> "TailSpec":
        if period < 1:
            raise BadParamsError("tail period must be >= 1")
        res = frozenset(r % period for r in residues)
        if not res:
            return TailSpec.empty(threshold)
        return TailSpec("periodic", threshold, period, res)

    # -- queries

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"

    @property
    def is_full(self) -> bool:
        return self.kind == "periodic" and len(self.residues) == self.period

    def pattern(self, t: int) -> bool:
        """Membership by pattern alone, ignoring the threshold."""
        return self.kind == "periodic" and (t % self.period) in self.residues

    # -- transforms

    def reduced(self) -> "TailSpec":
        """Least-period form with the same pattern."""
        if self.kind == "empty":
            return TailSpec.empty(self.threshold)
        for d in range(1, self.period + 1):
            if self.period % d:
                continue
            if all(((r + d) % self.period) in self.residues for r in self.residues):
                return TailSpec.periodic(self.threshold, d, {r % d for r in self.residues})
        return self

    def with_threshold(self, threshold: int) -> "TailSpec":
        return replace(self, threshold=check_i64(threshold, "tail threshold"))

    def shifted(self, g: int) -> "TailSpec":
        """Pattern of the translated set; threshold moves with it."""
        if self.kind == "empty":
            return TailSpec.empty(checked_add(self.threshold, g))
        res = frozenset((r + g) % self.period for r in self.residues)
        return TailSpec("periodic", checked_add(self.threshold, g), self.period, res)

    def mirrored(self, threshold: int) -> "TailSpec":
        """Pattern of the negated set (t -> -t); caller supplies threshold."""
        if self.kind == "empty":
            return TailSpec.empty(threshold)
        res = frozenset((-r) % self.period for r in self.residues)
        return TailSpec("periodic", threshold, self.period, res)

    def inverted(self) -> "TailSpec":
        """Complement pattern on the same side."""
        if self.kind == "empty":
            return TailSpec.full(self.threshold)
        res = frozenset(range(self.period)) - self.residues
        if not res:
            return TailSpec.empty(self.threshold)
        return TailSpec("periodic", self.threshold, self.period, res)

    def elements(self, lo: int, hi: int) -> list[int]:
        """Sorted pattern elements in [lo, hi], ignoring the threshold."""
        if self.kind == "empty" or lo > hi:
            return []
        out: list[int] = []
        for r in self.residues:
            first = lo + ((r - lo) % self.period)
            out.extend(range(first, hi + 1, self.period))
        out.sort()
        return out


# ---------------------------------------------------------------------------
# descriptor kinds


class IntSet:
    """Base for the six descriptor kinds; see the module docstring."""

    def member(self, t: int) -> bool:
        raise NotImplementedError

    def __contains__(self, t: int) -> bool:
        return self.member(check_i64(t, "element"))


@dataclass(frozen=True)
class FiniteSet(IntSet):
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise EmptySetError("finite set needs at least one element")
        for t in self.elements:
            check_i64(t, "element")
        if list(self.elements) != sorted(set(self.elements)):
            raise BadParamsError("finite elements must be sorted and distinct")

    def member(self, t: int) -> bool:
        i = bisect_left(self.elements, t)
        return i < len(self.elements) and self.elements[i] == t


@dataclass(frozen=True)
class CofiniteSet(IntSet):
    excluded: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for t in self.excluded:
            check_i64(t, "excluded element")
        if list(self.excluded) != sorted(set(self.excluded)):
            raise BadParamsError("excluded elements must be sorted and distinct")

    def member(self, t: int) -> bool:
        i = bisect_left(self.excluded, t)
        return not (i < len(self.excluded) and self.excluded[i] == t)


@dataclass(frozen=True)
class BEPSet(IntSet):
    left: TailSpec
    core: tuple[int, ...]
    core_lo: int
    core_hi: int
    right: TailSpec

    def __post_init__(self) -> None:
        check_i64(self.core_lo, "core_lo")
        check_i64(self.core_hi, "core_hi")
        if self.core_hi < self.core_lo - 1:
            raise BadParamsError("core window must be an interval or empty (hi = lo-1)")
        if self.left.threshold != self.core_lo or self.right.threshold != self.core_hi:
            raise BadParamsError("tail thresholds must match the core window bounds")
        if list(self.core) != sorted(set(self.core)):
            raise BadParamsError("core must be sorted and distinct")
        if self.core and (self.core[0] < self.core_lo or self.core[-1] > self.core_hi):
            raise BadParamsError("core elements must lie inside the core window")
        if self.left.is_empty and self.right.is_empty and not self.core:
            raise EmptySetError("BEP descriptor describes the empty set")

    def member(self, t: int) -> bool:
        if t < self.core_lo:
            return self.left.pattern(t)
        if t > self.core_hi:
            return self.right.pattern(t)
        i = bisect_left(self.core, t)
        return i < len(self.core) and self.core[i] == t


def make_bep(
    left: TailSpec,
    core: Iterable[int],
    core_lo: int,
    core_hi: int,
    right: TailSpec,
) -> IntSet:
    """Canonicalize a raw BEP description.

    Reduces tail periods, absorbs core boundary points that agree with the
    adjacent tail pattern, slides the split point of a coreless description
    to its least valid position, and collapses to FiniteSet or CofiniteSet
    when the tails allow it.  Raises EmptySetError for the empty set.
    """
    check_i64(core_lo, "core_lo")
    check_i64(core_hi, "core_hi")
    left = left.reduced()
    right = right.reduced()
    members = sorted(set(core))
    if members and (members[0] < core_lo or members[-1] > core_hi):
        raise BadParamsError("core elements outside the stated window")
    have = set(members)

    # shrink the window from both ends while the boundary agrees with the tail
    while core_lo <= core_hi:
        present = core_lo in have
        if present != left.pattern(core_lo):
            break
        if present:
            have.discard(core_lo)
        core_lo += 1
    while core_hi >= core_lo:
        present = core_hi in have
        if present != right.pattern(core_hi):
            break
        if present:
            have.discard(core_hi)
        core_hi -= 1

    if core_lo > core_hi:
        # coreless: slide the split point down to its least valid position
        if left.is_empty and right.is_empty:
            raise EmptySetError("descriptor describes the empty set")
        probe = math.lcm(left.period, right.period)
        split = core_lo
        moved = True
        for j in range(1, probe + 1):
            if left.pattern(split - j) != right.pattern(split - j):
                split = split - j + 1
                moved = False
                break
        if moved:
            # patterns agree on a full common period: the set is purely periodic
            if left.kind != right.kind or left.period != right.period or (
                left.residues != right.residues
            ):
                # identical patterns reduce identically; disagreement here
                # means one side is full and the other full at another period
                left = right = left if not left.is_empty else right
            if left.is_full:
                return CofiniteSet(())
            split = 0
        return BEPSet(
            left.with_threshold(split),
            (),
            split,
            split - 1,
            right.with_threshold(split - 1),
        )

    if left.is_empty and right.is_empty:
        return FiniteSet(tuple(sorted(have)))
    if left.is_full and right.is_full:
        missing = tuple(t for t in range(core_lo, core_hi + 1) if t not in have)
        return CofiniteSet(missing)
    return BEPSet(
        left.with_threshold(core_lo),
        tuple(sorted(have)),
        core_lo,
        core_hi,
        right.with_threshold(core_hi),
    )


# ---------------------------------------------------------------------------
# block family rules


def _compile_length_expr(src: str) -> Callable[[int], int]:
    """Compile a length expression in the single variable k.

    Allowed: integer literals, k, + - * // % **, unary minus, parentheses.
    """
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as e:
        raise BadParamsError(f"bad length expression {src!r}: {e.msg}") from None
    allowed_ops = (ast.Add, ast.Sub, ast.Mult, ast.FloorDiv, ast.Mod, ast.Pow)
    for node in ast.walk(tree):
        if isinstance(node, (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Constant, ast.Name, ast.Load)):
            if isinstance(node, ast.Constant) and not isinstance(node.value, int):
                raise BadParamsError(f"non-integer literal in {src!r}")
            if isinstance(node, ast.Name) and node.id != "k":
                raise BadParamsError(f"only the variable k is allowed, saw {node.id!r}")
            continue
        if isinstance(node, allowed_ops) or isinstance(node, (ast.USub, ast.UAdd)):
            continue
        if isinstance(node, ast.Div):
            raise BadParamsError("use // for division in length expressions")
        raise BadParamsError(f"disallowed syntax in length expression {src!r}")
    code = compile(tree, "<length-expr>", "eval")

    def fn(k: int) -> int:
        v = eval(code, {"__builtins__": {}}, {"k": k})
        if not isinstance(v, int):
            raise BadParamsError(f"length expression {src!r} gave non-int at k={k}")
        return v

    return fn


@lru_cache(maxsize=256)
def _cached_expr(src: str) -> Callable[[int], int]:
    return _compile_length_expr(src)


@dataclass(frozen=True)
class Lemma43Rule:
    """Block starts (k-1)(k+2)/2 + 2^(k+1), block lengths k+1."""

    name: str = "lemma43"
    cap: int = 40

    def max_k(self) -> int:
        return self.cap

    def start(self, k: int) -> int:
        if k < 1:
            raise BadParamsError("block index must be >= 1")
        if k > self.cap:
            raise OverflowError(f"block index {k} beyond the evaluation cap {self.cap}")
        return (k - 1) * (k + 2) // 2 + 2 ** (k + 1)

    def length(self, k: int) -> int:
        if k < 1:
            raise BadParamsError("block index must be >= 1")
        if k > self.cap:
            raise OverflowError(f"block index {k} beyond the evaluation cap {self.cap}")
        return k + 1

    def params(self) -> dict:
        return {"rule": "lemma43"}


@dataclass(frozen=True)
class Blocks10Rule:
    """Blocks [10k^2, 10k(k+1)]; the complement flag swaps blocks and gaps."""

    complement: bool = False

    @property
    def name(self) -> str:
        return "blocks10-complement" if self.complement else "blocks10"

    def max_k(self) -> int:
        return 960_000_000

    def start(self, k: int) -> int:
        if k < 1:
            raise BadParamsError("block index must be >= 1")
        if k > self.max_k():
            raise OverflowError(f"block index {k} beyond 64-bit block range")
        if self.complement:
            return 10 * k * (k - 1) + 1
        return 10 * k * k

    def length(self, k: int) -> int:
        if k < 1:
            raise BadParamsError("block index must be >= 1")
        if self.complement:
            return 10 * k - 1
        return 10 * k + 1

    def params(self) -> dict:
        return {"rule": self.name}


@dataclass(frozen=True)
class GenericIJRule:
    """Adjacent blocks from length expressions.

    Block k has length len_i(k); the gap after it has length len_j(k); the
    first block starts at origin.  Both length sequences must be strictly
    increasing and positive, which is validated as blocks are evaluated.
    """

    len_i_src: str
    len_j_src: str
    origin: int = 0
    name: str = "generic"

    def __post_init__(self) -> None:
        check_i64(self.origin, "origin")
        _cached_expr(self.len_i_src)
        _cached_expr(self.len_j_src)
        for k in range(1, 9):
            self.length(k)
            self._gap_len(k)

    def max_k(self) -> int:
        return 1 << 40

    def length(self, k: int) -> int:
        if k < 1:
            raise BadParamsError("block index must be >= 1")
        fn = _cached_expr(self.len_i_src)
        v = fn(k)
        if v < 1 or (k > 1 and fn(k - 1) >= v):
            raise BadParamsError(
                f"block lengths must be positive and strictly increasing; "
                f"len_i({k}) = {v}"
            )
        return v

    def _gap_len(self, k: int) -> int:
        fn = _cached_expr(self.len_j_src)
        v = fn(k)
        if v < 1 or (k > 1 and fn(k - 1) >= v):
            raise BadParamsError(
                f"gap lengths must be positive and strictly increasing; "
                f"len_j({k}) = {v}"
            )
        return v

    def start(self, k: int) -> int:
        if k < 1:
            raise BadParamsError("block index must be >= 1")
        starts = _generic_starts(self)
        while len(starts) < k:
            j = len(starts)
            nxt = starts[-1] + self.length(j) + self._gap_len(j)
            check_i64(nxt, "block start")
            starts.append(nxt)
        return starts[k - 1]

    def params(self) -> dict:
        return {
            "rule": "generic",
            "lenI": self.len_i_src,
            "lenJ": self.len_j_src,
            "origin": self.origin,
        }


_GENERIC_STARTS: dict[GenericIJRule, list[int]] = {}


def _generic_starts(rule: GenericIJRule) -> list[int]:
    lst = _GENERIC_STARTS.get(rule)
    if lst is None:
        lst = [rule.origin]
        _GENERIC_STARTS[rule] = lst
    return lst


FamilyRule = Lemma43Rule | Blocks10Rule | GenericIJRule


def rule_end(rule: FamilyRule, k: int) -> int:
    return rule.start(k) + rule.length(k) - 1


def rule_gap(rule: FamilyRule, k: int) -> tuple[int, int]:
    """The gap interval between block k and block k+1 (inclusive ends)."""
    return rule_end(rule, k) + 1, rule.start(k + 1) - 1


def _rule_block_search(rule: FamilyRule, u: int) -> tuple[int, bool]:
    """Largest k with start(k) <= u, and whether u lies inside block k.

    Returns (0, False) when u is below the first block.  Raises
    OverflowError when u is beyond the last evaluable block.
    """
    if u < rule.start(1):
        return 0, False
    lo, hi = 1, 1
    while rule_end(rule, hi) < u:
        if hi >= rule.max_k():
            raise OverflowError(f"membership at {u} needs blocks beyond index cap")
        lo = hi
        hi = min(hi * 2, rule.max_k())
        if rule.start(hi) > u:
            break
    # invariant: start(lo) <= u (lo >= 1), and either start(hi) > u or end(hi) >= u
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if rule.start(mid) <= u:
            lo = mid
        else:
            hi = mid - 1
    return lo, u <= rule_end(rule, lo)


@dataclass(frozen=True)
class FamilySet(IntSet):
    rule: FamilyRule
    left: TailSpec
    adds: tuple[int, ...] = ()
    removes: tuple[int, ...] = ()
    shift: int = 0
    negated: bool = False

    def __post_init__(self) -> None:
        check_i64(self.shift, "shift")
        for t in self.adds:
            check_i64(t, "added element")
        for t in self.removes:
            check_i64(t, "removed element")
        if list(self.adds) != sorted(set(self.adds)):
            raise BadParamsError("adds must be sorted and distinct")
        if list(self.removes) != sorted(set(self.removes)):
            raise BadParamsError("removes must be sorted and distinct")

    def inner(self, t: int) -> int:
        return self.shift - t if self.negated else t - self.shift

    def outer(self, u: int) -> int:
        return checked_add(self.shift, -u) if self.negated else checked_add(self.shift, u)

    def base_member(self, u: int) -> bool:
        if u < self.left.threshold and self.left.pattern(u):
            return True
        if u < self.rule.start(1):
            return False
        _, inside = _rule_block_search(self.rule, u)
        return inside

    def member(self, t: int) -> bool:
        i = bisect_left(self.removes, t)
        if i < len(self.removes) and self.removes[i] == t:
            return False
        i = bisect_left(self.adds, t)
        if i < len(self.adds) and self.adds[i] == t:
            return True
        return self.base_member(self.inner(t))


@dataclass(frozen=True)
class PointwiseSet(IntSet):
    predicate: str = "nonprimes"
    adds: tuple[int, ...] = ()
    removes: tuple[int, ...] = ()
    shift: int = 0
    negated: bool = False

    def __post_init__(self) -> None:
        if self.predicate != "nonprimes":
            raise BadParamsError(f"unknown pointwise predicate {self.predicate!r}")
        check_i64(self.shift, "shift")
        for t in self.adds:
            check_i64(t, "added element")
        for t in self.removes:
            check_i64(t, "removed element")
        if list(self.adds) != sorted(set(self.adds)):
            raise BadParamsError("adds must be sorted and distinct")
        if list(self.removes) != sorted(set(self.removes)):
            raise BadParamsError("removes must be sorted and distinct")

    def inner(self, t: int) -> int:
        return self.shift - t if self.negated else t - self.shift

    def outer(self, u: int) -> int:
        return checked_add(self.shift, -u) if self.negated else checked_add(self.shift, u)

    def base_member(self, u: int) -> bool:
        if u < INT64_MIN or u > INT64_MAX:
            raise OutOfDecidableRangeError(f"pointwise query at {u} beyond 64-bit range")
        return not is_prime(u)

    def member(self, t: int) -> bool:
        if t in self.removes:
            return False
        if t in self.adds:
            return True
        return self.base_member(self.inner(t))


@dataclass(frozen=True)
class UnionSet(IntSet):
    parts: tuple[IntSet, ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise BadParamsError("a union descriptor needs at least two parts")

    def member(self, t: int) -> bool:
        return any(p.member(t) for p in self.parts)


# ---------------------------------------------------------------------------
# primality (for the nonprime pointwise predicate)

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=1 << 18)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n in small:
        return True
    if any(n % p == 0 for p in small):
        return False
    if n < 41 * 41:
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# public constructors


def finite(elements: Iterable[int]) -> FiniteSet:
    return FiniteSet(tuple(sorted({check_i64(t, "element") for t in elements})))


def cofinite(excluded: Iterable[int] = ()) -> CofiniteSet:
    return CofiniteSet(tuple(sorted({check_i64(t, "excluded element") for t in excluded})))


def integers() -> CofiniteSet:
    return CofiniteSet(())


def below(x: int) -> IntSet:
    """All t < x."""
    check_i64(x, "bound")
    return make_bep(TailSpec.full(x), (), x, x - 1, TailSpec.empty(x - 1))


def above(x: int) -> IntSet:
    """All t > x."""
    check_i64(x, "bound")
    return make_bep(TailSpec.empty(x + 1), (), x + 1, x, TailSpec.full(x))


def ap(res: int, mod: int, side: str, start: int) -> IntSet:
    """One residue class cut to a side: t = res (mod mod) with t < start
    (side "below") or t > start (side "above")."""
    if mod < 1:
        raise BadParamsError("mod must be >= 1")
    check_i64(start, "start")
    tail = TailSpec.periodic(0, mod, {res % mod})
    if side == "below":
        return make_bep(tail.with_threshold(start), (), start, start - 1, TailSpec.empty(start - 1))
    if side == "above":
        return make_bep(TailSpec.empty(start + 1), (), start + 1, start, tail.with_threshold(start))
    raise BadParamsError(f"side must be 'below' or 'above', got {side!r}")


def subgroup_set(n: int) -> IntSet:
    """The subgroup n*Z."""
    if n < 1:
        raise BadParamsError("subgroup index must be >= 1")
    tail = TailSpec.periodic(0, n, {0})
    return make_bep(tail, (), 0, -1, tail.with_threshold(-1))


def nonprimes() -> PointwiseSet:
    return PointwiseSet()


def lemma43_set() -> FamilySet:
    """The ray below 4 together with the lemma43 blocks."""
    rule = Lemma43Rule()
    return FamilySet(rule, TailSpec.full(rule.start(1)))


def lemma44_set() -> FamilySet:
    """The lemma43 blocks alone, no ray."""
    rule = Lemma43Rule()
    return FamilySet(rule, TailSpec.empty(rule.start(1)))


def generic_family(len_i: str, len_j: str, origin: int = 0) -> FamilySet:
    rule = GenericIJRule(len_i, len_j, origin)
    return FamilySet(rule, TailSpec.empty(rule.start(1)))


def blocks10_family(complement: bool = False) -> FamilySet:
    rule = Blocks10Rule(complement)
    return FamilySet(rule, TailSpec.empty(rule.start(1)))


# ---------------------------------------------------------------------------
# membership / enumeration


def contains(s: IntSet, t: int) -> bool:
    return check_i64(t, "element") in s


def enumerate_window(s: IntSet, window: Window) -> list[int]:
    """Sorted elements of s in the window."""
    if isinstance(s, FiniteSet):
        lo = bisect_left(s.elements, window.lo)
        hi = bisect_right(s.elements, window.hi)
        return list(s.elements[lo:hi])
    if isinstance(s, CofiniteSet):
        ex = set(s.excluded)
        return [t for t in window if t not in ex]
    if isinstance(s, BEPSet):
        out = s.left.elements(window.lo, min(window.hi, s.core_lo - 1))
        lo = bisect_left(s.core, window.lo)
        hi = bisect_right(s.core, window.hi)
        out.extend(s.core[lo:hi])
        out.extend(s.right.elements(max(window.lo, s.core_hi + 1), window.hi))
        return out
    if isinstance(s, FamilySet):
        if s.negated:
            ilo, ihi = s.shift - window.hi, s.shift - window.lo
        else:
            ilo, ihi = window.lo - s.shift, window.hi - s.shift
        inner: list[int] = s.left.elements(ilo, min(ihi, s.left.threshold - 1))
        start1 = s.rule.start(1)
        if ihi >= start1:
            k = 1 if ilo <= start1 else _rule_block_search(s.rule, ilo)[0]
            while s.rule.start(k) <= ihi:
                blo, bhi = s.rule.start(k), rule_end(s.rule, k)
                inner.extend(range(max(blo, ilo), min(bhi, ihi) + 1))
                if k >= s.rule.max_k():
                    if ihi > bhi:
                        raise OverflowError("window reaches beyond the block index cap")
                    break
                k += 1
        pts = {s.outer(u) for u in inner}
        pts.update(t for t in s.adds if window.lo <= t <= window.hi)
        pts.difference_update(s.removes)
        return sorted(pts)
    if isinstance(s, PointwiseSet):
        return [t for t in window if s.member(t)]
    if isinstance(s, UnionSet):
        pts: set[int] = set()
        for p in s.parts:
            pts.update(enumerate_window(p, window))
        return sorted(pts)
    raise BadParamsError(f"unknown descriptor {type(s).__name__}")


# ---------------------------------------------------------------------------
# normalization and folding


def normalize(s: IntSet) -> IntSet:
    if isinstance(s, (FiniteSet, CofiniteSet)):
        return s
    if isinstance(s, BEPSet):
        return make_bep(s.left, s.core, s.core_lo, s.core_hi, s.right)
    if isinstance(s, (FamilySet, PointwiseSet)):
        base = replace(s, adds=(), removes=())
        adds = tuple(sorted({t for t in s.adds if t not in s.removes and not base.member(t)}))
        removes = tuple(sorted({t for t in s.removes if base.member(t)}))
        left = s.left.reduced() if isinstance(s, FamilySet) else None
        if isinstance(s, FamilySet):
            return FamilySet(s.rule, left, adds, removes, s.shift, s.negated)
        return PointwiseSet(s.predicate, adds, removes, s.shift, s.negated)
    if isinstance(s, UnionSet):
        parts: list[IntSet] = []
        stack = [normalize(p) for p in s.parts]
        while stack:
            p = stack.pop()
            if isinstance(p, UnionSet):
                stack.extend(p.parts)
            else:
                parts.append(p)
        folded = _fold_parts(parts)
        if len(folded) == 1:
            return folded[0]
        return UnionSet(tuple(sorted(folded, key=_sort_key)))
    raise BadParamsError(f"unknown descriptor {type(s).__name__}")


def _sort_key(s: IntSet) -> tuple:
    rank = {FiniteSet: 0, CofiniteSet: 1, BEPSet: 2, FamilySet: 3, PointwiseSet: 4, UnionSet: 5}
    return (rank[type(s)], repr(s))


def _fold_parts(parts: list[IntSet]) -> list[IntSet]:
    parts = list(parts)
    changed = True
    while changed and len(parts) > 1:
        changed = False
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                merged = _fold_pair(parts[i], parts[j])
                if merged is None:
                    merged = _fold_pair(parts[j], parts[i])
                if merged is not None:
                    rest = [p for k, p in enumerate(parts) if k not in (i, j)]
                    parts = rest + [merged]
                    changed = True
                    break
            if changed:
                break
    return parts


def _tail_hits(tail: TailSpec, r: int) -> bool:
    return tail.kind == "periodic" and (r % tail.period) in tail.residues


def _merge_patterns(a: TailSpec, b: TailSpec, threshold: int) -> TailSpec:
    """Union of two tail patterns as one TailSpec at the given threshold."""
    if a.is_empty and b.is_empty:
        return TailSpec.empty(threshold)
    period = math.lcm(a.period if not a.is_empty else 1, b.period if not b.is_empty else 1)
    res = {r for r in range(period) if _tail_hits(a, r) or _tail_hits(b, r)}
    return TailSpec.periodic(threshold, period, res).reduced()


def _fold_pair(a: IntSet, b: IntSet) -> IntSet | None:
    """Union of a and b as a single descriptor, or None if not foldable."""
    if isinstance(a, CofiniteSet):
        return cofinite(g for g in a.excluded if not b.member(g))
    if isinstance(a, FiniteSet) and isinstance(b, FiniteSet):
        return finite(a.elements + b.elements)
    if isinstance(a, FiniteSet) and isinstance(b, BEPSet):
        lo = min(b.core_lo, a.elements[0])
        hi = max(b.core_hi, a.elements[-1])
        members = set(a.elements)
        members.update(enumerate_window(b, Window(lo, hi)) if lo <= hi else [])
        return make_bep(b.left, members, lo, hi, b.right)
    if isinstance(a, FiniteSet) and isinstance(b, (FamilySet, PointwiseSet)):
        removes = tuple(t for t in b.removes if t not in set(a.elements))
        adds = tuple(sorted(set(b.adds) | set(a.elements)))
        return normalize(replace(b, adds=adds, removes=removes))
    if isinstance(a, BEPSet) and isinstance(b, BEPSet):
        lo = min(a.core_lo, b.core_lo)
        hi = max(a.core_hi, b.core_hi)
        left = _merge_patterns(a.left, b.left, lo)
        right = _merge_patterns(a.right, b.right, hi)
        members: set[int] = set()
        if lo <= hi:
            members.update(enumerate_window(a, Window(lo, hi)))
            members.update(enumerate_window(b, Window(lo, hi)))
        return make_bep(left, members, lo, hi, right)
    if isinstance(a, BEPSet) and isinstance(b, FamilySet):
        if b.negated:
            merged = _fold_pair(negate(a), negate(b))
            return negate(merged) if merged is not None else None
        if not a.right.is_empty:
            return None
        inner_bep = translate(a, -b.shift)
        if not isinstance(inner_bep, BEPSet):
            return None
        theta = min(b.left.threshold, inner_bep.core_lo)
        merged_left = _merge_patterns(b.left, inner_bep.left, theta)
        band_hi = max(b.left.threshold - 1, inner_bep.core_hi)
        band_pts: list[int] = []
        if theta <= band_hi:
            band_pts.extend(
                u for u in b.left.elements(theta, min(band_hi, b.left.threshold - 1))
            )
            band_pts.extend(enumerate_window(inner_bep, Window(theta, band_hi)))
        adds = set(b.adds)
        adds.update(b.outer(u) for u in band_pts)
        removes = tuple(t for t in b.removes if not a.member(t))
        return normalize(
            FamilySet(b.rule, merged_left, tuple(sorted(adds)), removes, b.shift, b.negated)
        )
    if isinstance(a, FamilySet) and isinstance(b, FamilySet):
        if (a.rule, a.shift, a.negated) != (b.rule, b.shift, b.negated):
            return None
        theta = min(a.left.threshold, b.left.threshold)
        merged_left = _merge_patterns(a.left, b.left, theta)
        band_hi = max(a.left.threshold, b.left.threshold) - 1
        band_pts: list[int] = []
        if theta <= band_hi:
            band_pts.extend(a.left.elements(theta, min(band_hi, a.left.threshold - 1)))
            band_pts.extend(b.left.elements(theta, min(band_hi, b.left.threshold - 1)))
        adds = set(a.adds) | set(b.adds)
        adds.update(a.outer(u) for u in band_pts)
        removes = tuple(
            sorted(t for t in set(a.removes) | set(b.removes) if not a.member(t) and not b.member(t))
        )
        return normalize(
            FamilySet(a.rule, merged_left, tuple(sorted(adds)), removes, a.shift, a.negated)
        )
    if isinstance(a, PointwiseSet) and isinstance(b, PointwiseSet):
        if (a.predicate, a.shift, a.negated) != (b.predicate, b.shift, b.negated):
            return None
        adds = tuple(sorted(set(a.adds) | set(b.adds)))
        removes = tuple(
            sorted(t for t in set(a.removes) | set(b.removes) if not a.member(t) and not b.member(t))
        )
        return normalize(PointwiseSet(a.predicate, adds, removes, a.shift, a.negated))
    return None


def union(a: IntSet, b: IntSet) -> IntSet:
    return normalize(UnionSet((normalize(a), normalize(b))))


def minus(s: IntSet, removed: Iterable[int] | FiniteSet) -> IntSet:
    """s with finitely many elements removed."""
    if isinstance(removed, FiniteSet):
        gone = set(removed.elements)
    else:
        gone = {check_i64(t, "removed element") for t in removed}
    if not gone:
        return s
    if isinstance(s, FiniteSet):
        return finite(t for t in s.elements if t not in gone)
    if isinstance(s, CofiniteSet):
        return cofinite(set(s.excluded) | gone)
    if isinstance(s, BEPSet):
        lo = min([s.core_lo] + [t for t in gone])
        hi = max([s.core_hi] + [t for t in gone])
        members = set(enumerate_window(s, Window(lo, hi))) - gone if lo <= hi else set()
        return make_bep(s.left, members, lo, hi, s.right)
    if isinstance(s, (FamilySet, PointwiseSet)):
        adds = tuple(t for t in s.adds if t not in gone)
        removes = tuple(sorted(set(s.removes) | gone))
        return normalize(replace(s, adds=adds, removes=removes))
    if isinstance(s, UnionSet):
        kept: list[IntSet] = []
        for p in s.parts:
            try:
                kept.append(minus(p, gone))
            except EmptySetError:
                continue
        if not kept:
            raise EmptySetError("every part vanished under removal")
        if len(kept) == 1:
            return kept[0]
        return normalize(UnionSet(tuple(kept)))
    raise BadParamsError(f"unknown descriptor {type(s).__name__}")


# ---------------------------------------------------------------------------
# translate / negate


def translate(s: IntSet, g: int) -> IntSet:
    check_i64(g, "translation")
    if g == 0:
        return s
    if isinstance(s, FiniteSet):
        return finite(checked_add(t, g) for t in s.elements)
    if isinstance(s, CofiniteSet):
        return cofinite(checked_add(t, g) for t in s.excluded)
    if isinstance(s, BEPSet):
        return make_bep(
            s.left.shifted(g),
            tuple(checked_add(t, g) for t in s.core),
            checked_add(s.core_lo, g),
            checked_add(s.core_hi, g),
            s.right.shifted(g),
        )
    if isinstance(s, (FamilySet, PointwiseSet)):
        return replace(
            s,
            shift=checked_add(s.shift, g),
            adds=tuple(checked_add(t, g) for t in s.adds),
            removes=tuple(checked_add(t, g) for t in s.removes),
        )
    if isinstance(s, UnionSet):
        return UnionSet(tuple(translate(p, g) for p in s.parts))
    raise BadParamsError(f"unknown descriptor {type(s).__name__}")


def negate(s: IntSet) -> IntSet:
    if isinstance(s, FiniteSet):
        return finite(-t for t in s.elements)
    if isinstance(s, CofiniteSet):
        return cofinite(-t for t in s.excluded)
    if isinstance(s, BEPSet):
        return make_bep(
            s.right.mirrored(-s.core_hi),
            tuple(-t for t in reversed(s.core)),
            -s.core_hi,
            -s.core_lo,
            s.left.mirrored(-s.core_lo),
        )
    if isinstance(s, (FamilySet, PointwiseSet)):
        return replace(
            s,
            shift=-s.shift,
            negated=not s.negated,
            adds=tuple(sorted(-t for t in s.adds)),
            removes=tuple(sorted(-t for t in s.removes)),
        )
    if isinstance(s, UnionSet):
        return UnionSet(tuple(negate(p) for p in s.parts))
    raise BadParamsError(f"unknown descriptor {type(s).__name__}")


# ---------------------------------------------------------------------------
# gaps and classification


def gap_sequence(s: IntSet, window: Window) -> list[int]:
    """Differences of consecutive elements inside the window."""
    elems = enumerate_window(s, window)
    if len(elems) < 2:
        raise TooFewElementsError(
            f"need at least two elements in [{window.lo}, {window.hi}], found {len(elems)}"
        )
    return [b - a for a, b in zip(elems, elems[1:])]


def gap_summary(s: IntSet, window: Window) -> dict:
    """Companion statistics for a gap sequence: extremes and a growth hint."""
    gaps = gap_sequence(s, window)
    elems = enumerate_window(s, window)
    mx = max(gaps)
    at = gaps.index(mx)
    q = max(1, len(gaps) // 4)
    quarter_mins = [min(gaps[i : i + q] or [gaps[-1]]) for i in range(0, len(gaps), q)][:4]
    return {
        "elements": len(elems),
        "gaps": len(gaps),
        "max_gap": mx,
        "max_gap_left": elems[at],
        "last_gap": gaps[-1],
        "quarter_mins": quarter_mins,
        "min_nondecreasing": all(x <= y for x, y in zip(quarter_mins, quarter_mins[1:])),
    }


@dataclass(frozen=True)
class Classification:
    kind: str
    bounded_below: bool
    bounded_above: bool
    eventually_periodic: bool
    period: int | None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "boundedBelow": self.bounded_below,
            "boundedAbove": self.bounded_above,
            "eventuallyPeriodic": self.eventually_periodic,
            "period": self.period,
            "detail": self.detail,
        }


def classify(s: IntSet) -> Classification:
    """Structural classification of the normalized descriptor.

    The eventually-periodic flag follows the bounded-below convention: it is
    set only for sets bounded below whose forward behaviour is periodic, so
    two-sided periodic sets report their period without the flag.
    """
    s = normalize(s)
    if isinstance(s, FiniteSet):
        return Classification("finite", True, True, False, None)
    if isinstance(s, CofiniteSet):
        return Classification("cofinite", False, False, False, 1, "full pattern beyond exclusions")
    if isinstance(s, BEPSet):
        bb = s.left.is_empty
        ba = s.right.is_empty
        ep = bb and s.right.kind == "periodic"
        if ep:
            period: int | None = s.right.period
        elif s.left.kind == "periodic" and s.right.kind == "periodic":
            period = math.lcm(s.left.period, s.right.period)
        elif s.left.kind == "periodic":
            period = s.left.period
        elif s.right.kind == "periodic":
            period = s.right.period
        else:
            period = None
        detail = "" if ep else ("two-sided pattern; period reported for information" if period else "")
        return Classification("bep", bb, ba, ep, period, detail)
    if isinstance(s, FamilySet):
        base_bb = s.left.is_empty
        bb, ba = (False, base_bb) if s.negated else (base_bb, False)
        return Classification(
            "family", bb, ba, False, None, "block gaps grow without bound, no period"
        )
    if isinstance(s, PointwiseSet):
        return Classification("pointwise", False, False, False, None)
    if isinstance(s, UnionSet):
        cls = [classify(p) for p in s.parts]
        return Classification(
            "union",
            all(c.bounded_below for c in cls),
            all(c.bounded_above for c in cls),
            False,
            None,
            "unfolded union; flags from parts, periodicity not decided",
        )
    raise BadParamsError(f"unknown descriptor {type(s).__name__}")


# ---------------------------------------------------------------------------
# structural queries used by the decision procedures


def is_infinite(s: IntSet) -> bool:
    s = normalize(s)
    if isinstance(s, FiniteSet):
        return False
    if isinstance(s, UnionSet):
        return any(is_infinite(p) for p in s.parts)
    return True


def min_element(s: IntSet) -> int | None:
    """Smallest element, or None when unbounded below."""
    s = normalize(s)
    if isinstance(s, FiniteSet):
        return s.elements[0]
    if isinstance(s, CofiniteSet):
        return None
    if isinstance(s, BEPSet):
        if not s.left.is_empty:
            return None
        if s.core:
            return s.core[0]
        return min(s.right.elements(s.core_hi + 1, s.core_hi + s.right.period))
    if isinstance(s, FamilySet):
        if s.negated or not s.left.is_empty:
            return None
        u = s.rule.start(1)
        candidates = []
        while True:
            t = s.outer(u)
            if t not in s.removes:
                candidates.append(t)
                break
            nxt = _family_base_min_ge(s, u + 1)
            if nxt is None:
                break
            u = nxt
        candidates.extend(s.adds[:1])
        return min(candidates) if candidates else None
    if isinstance(s, PointwiseSet):
        return None
    if isinstance(s, UnionSet):
        mins = [min_element(p) for p in s.parts]
        if any(m is None for m in mins):
            return None
        return min(m for m in mins if m is not None)
    raise BadParamsError(f"unknown descriptor {type(s).__name__}")


def _family_base_min_ge(s: FamilySet, u: int) -> int | None:
    """Smallest base element (inner coords) >= u, tail included."""
    if u < s.left.threshold:
        cand = None
        for r in sorted(s.left.residues):
            first = u + ((r - u) % s.left.period) if not s.left.is_empty else None
            if first is not None and first < s.left.threshold:
                cand = first if cand is None else min(cand, first)
        if cand is not None:
            return cand
        u = s.left.threshold
    if u <= s.rule.start(1):
        return s.rule.start(1)
    k, inside = _rule_block_search(s.rule, u)
    if inside:
        return u
    if k >= s.rule.max_k():
        raise OverflowError("search beyond the block index cap")
    return s.rule.start(k + 1)


def _family_base_max_le(s: FamilySet, u: int) -> int | None:
    """Largest base element (inner coords) <= u, tail included."""
    if u >= s.rule.start(1):
        k, inside = _rule_block_search(s.rule, u)
        if inside:
            return u
        if k >= 1:
            return rule_end(s.rule, k)
    bound = min(u, s.left.threshold - 1)
    if not s.left.is_empty:
        best = None
        for r in s.left.residues:
            c = bound - ((bound - r) % s.left.period)
            best = c if best is None else max(best, c)
        return best
    return None


def max_element_le(s: IntSet, t: int) -> int | None:
    """Largest element of s that is <= t, or None if there is none."""
    check_i64(t, "bound")
    if isinstance(s, FiniteSet):
        i = bisect_right(s.elements, t)
        return s.elements[i - 1] if i else None
    if isinstance(s, CofiniteSet):
        c = t
        ex = set(s.excluded)
        while c in ex:
            c -= 1
        return c
    if isinstance(s, BEPSet):
        if t > s.core_hi and not s.right.is_empty:
            best = None
            for r in s.right.residues:
                c = t - ((t - r) % s.right.period)
                if c > s.core_hi:
                    best = c if best is None else max(best, c)
            if best is not None:
                return best
        bound = min(t, s.core_hi)
        i = bisect_right(s.core, bound)
        if i:
            return s.core[i - 1]
        bound = min(t, s.core_lo - 1)
        if not s.left.is_empty:
            best = None
            for r in s.left.residues:
                c = bound - ((bound - r) % s.left.period)
                best = c if best is None else max(best, c)
            return best
        return None
    if isinstance(s, FamilySet):
        if s.negated:
            mirror = negate(s)
            assert isinstance(mirror, FamilySet)
            v = min_element_ge(mirror, -t)
            return -v if v is not None else None
        cand: int | None = None
        u = s.inner(t)
        while True:
            b = _family_base_max_le(s, u)
            if b is None:
                break
            tb = s.outer(b)
            if tb not in s.removes:
                cand = tb
                break
            u = b - 1
        for x in reversed(s.adds):
            if x <= t:
                cand = x if cand is None else max(cand, x)
                break
        return cand
    if isinstance(s, PointwiseSet):
        c = t
        for _ in range(100_000):
            if s.member(c):
                return c
            c -= 1
        return None
    if isinstance(s, UnionSet):
        vals = [max_element_le(p, t) for p in s.parts]
        vals = [v for v in vals if v is not None]
        return max(vals) if vals else None
    raise BadParamsError(f"unknown descriptor {type(s).__name__}")


def min_element_ge(s: IntSet, t: int) -> int | None:
    """Smallest element of s that is >= t, or None if there is none."""
    check_i64(t, "bound")
    if isinstance(s, FiniteSet):
        i = bisect_left(s.elements, t)
        return s.elements[i] if i < len(s.elements) else None
    if isinstance(s, CofiniteSet):
        c = t
        ex = set(s.excluded)
        while c in ex:
            c += 1
        return c
    if isinstance(s, BEPSet):
        if t < s.core_lo and not s.left.is_empty:
            best = None
            for r in s.left.residues:
                c = t + ((r - t) % s.left.period)
                if c < s.core_lo:
                    best = c if best is None else min(best, c)
            if best is not None:
                return best
        bound = max(t, s.core_lo)
        i = bisect_left(s.core, bound)
        if i < len(s.core):
            return s.core[i]
        bound = max(t, s.core_hi + 1)
        if not s.right.is_empty:
            best = None
            for r in s.right.residues:
                c = bound + ((r - bound) % s.right.period)
                best = c if best is None else min(best, c)
            return best
        return None
    if isinstance(s, FamilySet):
        if s.negated:
            mirror = negate(s)
            assert isinstance(mirror, FamilySet)
            v = max_element_le(mirror, -t)
            return -v if v is not None else None
        cand: int | None = None
        u = s.inner(t)
        while True:
            b = _family_base_min_ge(s, u)
            if b is None:
                break
            tb = s.outer(b)
            if tb not in s.removes:
                cand = tb
                break
            u = b + 1
        for x in s.adds:
            if x >= t:
                cand = x if cand is None else min(cand, x)
                break
        return cand
    if isinstance(s, PointwiseSet):
        c = t
        for _ in range(100_000):
            if s.member(c):
                return c
            c += 1
        return None
    if isinstance(s, UnionSet):
        vals = [min_element_ge(p, t) for p in s.parts]
        vals = [v for v in vals if v is not None]
        return min(vals) if vals else None
    raise BadParamsError(f"unknown descriptor {type(s).__name__}")


def smallest_abs_elements(s: IntSet, count: int, bound: int = 10**6) -> list[int]:
    """Up to ``count`` elements ordered by absolute value, ties negative first."""
    if isinstance(s, FiniteSet):
        # the scan below would walk the whole bound when fewer than count exist
        ordered = sorted(s.elements, key=lambda t: (abs(t), t > 0))
        return [t for t in ordered if abs(t) <= bound][:count]
    out: list[int] = []
    if 0 in s:
        out.append(0)
    m = 1
    while len(out) < count and m <= bound:
        if -m in s:
            out.append(-m)
        if len(out) < count and m in s:
            out.append(m)
        m += 1
    return out[:count]


def runs_unbounded_toward(s: IntSet, direction: int) -> bool:
    """Whether s provably contains intervals of unbounded length toward
    +infinity (direction > 0) or -infinity (direction < 0).

    Family blocks have strictly increasing lengths; the nonprime predicate
    has factorial runs upward and a full ray downward; finite edits cannot
    destroy either property.
    """
    s = normalize(s)
    if isinstance(s, FiniteSet):
        return False
    if isinstance(s, CofiniteSet):
        return True
    if isinstance(s, BEPSet):
        tail = s.right if direction > 0 else s.left
        return tail.is_full
    if isinstance(s, FamilySet):
        forward = direction < 0 if s.negated else direction > 0
        if forward:
            return True
        return s.left.is_full
    if isinstance(s, PointwiseSet):
        return True
    if isinstance(s, UnionSet):
        return any(runs_unbounded_toward(p, direction) for p in s.parts)
    return False


def gaps_bounded_toward(s: IntSet, direction: int) -> bool:
    """Whether s provably has bounded gaps toward the given direction
    (infinitely many elements with gap sizes bounded by a constant)."""
    s = normalize(s)
    if isinstance(s, FiniteSet):
        return False
    if isinstance(s, CofiniteSet):
        return True
    if isinstance(s, BEPSet):
        tail = s.right if direction > 0 else s.left
        return tail.kind == "periodic"
    if isinstance(s, FamilySet):
        forward = direction < 0 if s.negated else direction > 0
        if forward:
            return False  # block gaps grow without bound
        return s.left.kind == "periodic"
    if isinstance(s, PointwiseSet):
        # downward: a full ray below 2 minus finite edits; upward: no two
        # consecutive integers beyond 4 are both prime, so gaps stay <= 2
        return True
    if isinstance(s, UnionSet):
        return any(gaps_bounded_toward(p, direction) for p in s.parts)
    return False
