"""Finitely generated module congruences on free T-modules.

A congruence is presented by generating pairs; the relation it defines is
the transitive closure of the submodule of the square generated by the
oriented pairs together with the diagonal.  One-step membership in that
submodule is decidable exactly by residuation; full membership is
semi-decided by breadth-first chain search, with a three-valued answer
(True / False / None-for-unknown) that is definitively false only when the
reachable state space was exhausted.  Over the boolean subsemiring the state
space is finite and membership is decided outright.

Internally vectors are "raw" tuples of Fraction-or-None (None = -inf); the
public API speaks TropicalValue.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Callable, List, Optional, Sequence, Set, Tuple

from .polynomials import Monomial
from .semiring import NEG_INF, TropicalValue, to_boolean

Vector = Tuple[TropicalValue, ...]
Pair = Tuple[Vector, Vector]
Raw = Tuple[Optional[Fraction], ...]

_UNBOUNDED = object()


def _to_raw(vec: Sequence[TropicalValue]) -> Raw:
    return tuple(c.finite for c in vec)


def _rmax(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return x if x >= y else y


def _residual_raw(u: Raw, w: Raw):
    """Largest lam with lam*u <= w: None-sentinel _UNBOUNDED when u is zero,
    -inf encoded as the string 'empty' is never needed; returns None for
    lam = -inf is impossible, so uses False for infeasible."""
    lam = _UNBOUNDED
    for uj, wj in zip(u, w):
        if uj is None:
            continue
        if wj is None:
            return False  # infeasible: lam would have to be -inf
        q = wj - uj
        if lam is _UNBOUNDED or q < lam:
            lam = q
    return lam


@dataclass(frozen=True)
class ModuleCongruence:
    """Generating pairs of a module congruence; each stored pair stands for
    both orientations."""

    ambient_size: int
    pairs: Tuple[Pair, ...]
    ambient_basis: Optional[Tuple[Monomial, ...]] = None

    @cached_property
    def _oriented_raw(self) -> Tuple[Tuple[Raw, Raw], ...]:
        out = []
        for u, v in self.pairs:
            ru, rv = _to_raw(u), _to_raw(v)
            if ru == rv:
                continue
            out.append((ru, rv))
            out.append((rv, ru))
        return tuple(out)

    def oriented_pairs(self) -> List[Pair]:
        out = []
        for u, v in self.pairs:
            if u == v:
                continue
            out.append((u, v))
            out.append((v, u))
        return out

    def map_coefficients(self, fn: Callable[[TropicalValue], TropicalValue]) -> "ModuleCongruence":
        return ModuleCongruence(
            self.ambient_size,
            tuple(
                (tuple(fn(c) for c in u), tuple(fn(c) for c in v)) for u, v in self.pairs
            ),
            self.ambient_basis,
        )

    def is_boolean(self) -> bool:
        return all(
            c.finite in (None, 0)
            for u, v in self.pairs
            for c in (*u, *v)
        )


def _one_step_raw(a: Raw, b: Raw, oriented: Sequence[Tuple[Raw, Raw]], n: int) -> bool:
    if a == b:
        return True
    s: List = [None] * n
    t: List = [None] * n
    for u, v in oriented:
        lam_u = _residual_raw(u, a)
        if lam_u is False:
            continue
        lam_v = _residual_raw(v, b)
        if lam_v is False:
            continue
        if lam_u is _UNBOUNDED and lam_v is _UNBOUNDED:
            continue
        if lam_u is _UNBOUNDED:
            lam = lam_v
        elif lam_v is _UNBOUNDED:
            lam = lam_u
        else:
            lam = lam_u if lam_u <= lam_v else lam_v
        for j in range(n):
            uj = u[j]
            if uj is not None:
                s[j] = _rmax(s[j], lam + uj)
            vj = v[j]
            if vj is not None:
                t[j] = _rmax(t[j], lam + vj)
    for j in range(n):
        aj, bj = a[j], b[j]
        forced_a = s[j] != aj and aj is not None
        forced_b = t[j] != bj and bj is not None
        if forced_a and forced_b:
            if aj != bj:
                return False
        elif forced_a:
            if bj is None or aj > bj:
                return False
        elif forced_b:
            if aj is None or bj > aj:
                return False
    return True


def one_step_member(pair: Pair, cong: ModuleCongruence) -> bool:
    """Exact membership of the pair in the submodule spanned by the oriented
    generating pairs and the diagonal.

    The maximal admissible scalar for each oriented generator is forced by
    residuation; feasibility of the diagonal summand is then a pointwise
    check on the coordinates where the generator combination falls short.
    """
    a, b = pair
    n = cong.ambient_size
    if len(a) != n or len(b) != n:
        raise ValueError("pair does not match the ambient module")
    return _one_step_raw(_to_raw(a), _to_raw(b), cong._oriented_raw, n)


def _canonical_successors(
    w: Raw, oriented: Sequence[Tuple[Raw, Raw]], target: Raw, n: int
) -> Set[Raw]:
    """Finite successor set for the chain search.

    For each oriented generator (u, v) and each admissible scalar taken from
    the levels at which a scaled copy of u or v touches the current state or
    v touches the target, emit the absorbing move w + lam*v and the
    rewriting move that erases the coordinates where lam*u accounts for all
    of w.
    """
    out: Set[Raw] = set()
    for u, v in oriented:
        lam_max = _residual_raw(u, w)
        if lam_max is False:
            continue
        candidates = set()
        if lam_max is not _UNBOUNDED:
            candidates.add(lam_max)
        for j in range(n):
            wj, tj, uj, vj = w[j], target[j], u[j], v[j]
            if uj is not None and wj is not None:
                candidates.add(wj - uj)
            if vj is not None:
                if tj is not None:
                    candidates.add(tj - vj)
                if wj is not None:
                    candidates.add(wj - vj)
        for lam in candidates:
            if lam_max is not _UNBOUNDED and lam > lam_max:
                continue
            grown = tuple(
                _rmax(w[j], lam + v[j]) if v[j] is not None else w[j] for j in range(n)
            )
            out.add(grown)
            rewritten = tuple(
                _rmax(
                    w[j] if (u[j] is None or lam + u[j] != w[j]) else None,
                    lam + v[j] if v[j] is not None else None,
                )
                for j in range(n)
            )
            out.add(rewritten)
    out.discard(w)
    return out


def congruence_member(
    pair: Pair,
    cong: ModuleCongruence,
    max_chain: Optional[int] = None,
    max_states: int = 20_000,
    boolean_exhaustive_size: int = 10,
) -> Optional[bool]:
    """Three-valued chain-search membership in the congruence.

    True is definitive.  False is returned when the search space was fully
    explored (always the case over the boolean subsemiring at small ambient
    size, where the state space is finite and the search is exhaustive).
    None means the frontier was truncated by max_chain or max_states.
    """
    a, b = _to_raw(pair[0]), _to_raw(pair[1])
    n = cong.ambient_size
    if len(a) != n or len(b) != n:
        raise ValueError("pair does not match the ambient module")
    if max_chain is None:
        max_chain = n + len(cong.pairs) + 4
    if a == b:
        return True
    oriented = cong._oriented_raw

    def is_bool(vec: Raw) -> bool:
        return all(c is None or c == 0 for c in vec)

    if (
        n <= boolean_exhaustive_size
        and is_bool(a)
        and is_bool(b)
        and all(is_bool(u) and is_bool(v) for u, v in oriented)
    ):
        return _boolean_exhaustive_member(a, b, oriented, n)

    visited: Set[Raw] = {a}
    frontier: List[Raw] = [a]
    truncated = False
    depth = 0
    while frontier:
        if depth >= max_chain:
            truncated = True
            break
        depth += 1
        next_frontier: List[Raw] = []
        for w in frontier:
            if _one_step_raw(w, b, oriented, n):
                return True
            for w2 in _canonical_successors(w, oriented, b, n):
                if w2 in visited:
                    continue
                if len(visited) >= max_states:
                    truncated = True
                    continue
                visited.add(w2)
                next_frontier.append(w2)
        frontier = next_frontier
    return None if truncated else False


def _boolean_exhaustive_member(a: Raw, b: Raw, oriented, n: int) -> bool:
    """Decide membership over B by BFS on the full finite state space."""
    zero = Fraction(0)
    all_states = [tuple(zero if bit else None for bit in bits) for bits in product((0, 1), repeat=n)]
    a = tuple(zero if c is not None else None for c in a)
    b = tuple(zero if c is not None else None for c in b)
    visited = {a}
    frontier = [a]
    while frontier:
        next_frontier = []
        for w in frontier:
            if w == b:
                return True
            for w2 in all_states:
                if w2 not in visited and _one_step_raw(w, w2, oriented, n):
                    visited.add(w2)
                    next_frontier.append(w2)
        frontier = next_frontier
    return b in visited


def dual_member(pair: Pair, dual_space) -> bool:
    """True iff every generator of the dual space evaluates equally on both
    members: complete for bend congruences whose full solution space the
    dual generators span."""
    a, b = _to_raw(pair[0]), _to_raw(pair[1])
    for p in dual_space.generators:
        va = None
        vb = None
        for pj, aj, bj in zip(_to_raw(p), a, b):
            if pj is None:
                continue
            if aj is not None:
                va = _rmax(va, pj + aj)
            if bj is not None:
                vb = _rmax(vb, pj + bj)
        if va != vb:
            return False
    return True


def congruence_contains(
    big: ModuleCongruence,
    small: ModuleCongruence,
    method: str = "saturation",
    max_chain: Optional[int] = None,
    dual_space=None,
    max_states: int = 20_000,
) -> Tuple[Optional[bool], Optional[Pair]]:
    """Check every generating pair of `small` for membership in `big`.

    Returns (verdict, witness): the verdict aggregates three-valued results
    with False dominating, then None-for-unknown; the witness is the first
    pair that failed (or could not be decided).
    """
    if big.ambient_size != small.ambient_size:
        raise ValueError("congruences live on different ambient modules")
    verdict: Optional[bool] = True
    witness: Optional[Pair] = None
    for pair in small.pairs:
        if method == "saturation":
            got = congruence_member(pair, big, max_chain=max_chain, max_states=max_states)
        elif method == "dual":
            if dual_space is None:
                raise ValueError("dual method requires a dual space")
            got = dual_member(pair, dual_space)
        else:
            raise ValueError(f"unknown method {method!r}")
        if got is False:
            return False, pair
        if got is None and verdict is not None:
            verdict = None
            witness = pair
    return verdict, witness


def pushforward(
    cong: ModuleCongruence,
    mapping: Sequence[Optional[int]],
    target_size: int,
    target_basis: Optional[Tuple[Monomial, ...]] = None,
) -> ModuleCongruence:
    """Apply a monomial-basis map (index -> index or None for zero) to every
    generating pair, collecting merged coordinates by tropical addition."""

    def push(vec: Vector) -> Vector:
        out = [NEG_INF] * target_size
        for j, c in enumerate(vec):
            k = mapping[j]
            if k is not None:
                out[k] = out[k] + c
        return tuple(out)

    return ModuleCongruence(
        target_size,
        tuple((push(u), push(v)) for u, v in cong.pairs),
        target_basis,
    )


def base_change(
    cong: ModuleCongruence, fn: Callable[[TropicalValue], TropicalValue] = to_boolean
) -> ModuleCongruence:
    """Apply a semiring map (by default T -> B) to every coefficient."""
    return cong.map_coefficients(fn)
