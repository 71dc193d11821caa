"""Shared fixtures: the test corpus and independent brute-force oracles.

The oracles only use the leq relation, never the bitmask shortcuts or
the arrow labelings, so they stay independent of the code paths they
check.
"""

from __future__ import annotations

from functools import cache

from kappalat import (
    Lattice,
    bits_of,
    full_labeling,
    gen_a2,
    gen_boolean,
    gen_chain,
    gen_ex424,
    gen_ex426,
    gen_fig1,
    gen_weak_dihedral,
    gen_weak_sym,
)


@cache
def corpus() -> tuple[tuple[str, Lattice], ...]:
    """Every lattice the identity suite runs over."""
    items = [
        ("fig1", gen_fig1()),
        ("a2", gen_a2()),
        ("ex424", gen_ex424()),
        ("ex426", gen_ex426()),
    ]
    items += [(f"chain({k})", gen_chain(k)) for k in range(1, 11)]
    items += [(f"boolean({k})", gen_boolean(k)) for k in range(1, 6)]
    items += [(f"weak_sym({k})", gen_weak_sym(k)) for k in range(2, 6)]
    items += [(f"weak_dihedral({k})", gen_weak_dihedral(k)) for k in range(2, 13)]
    return tuple(items)


@cache
def labeled_corpus():
    return tuple((name, lat, full_labeling(lat)) for name, lat in corpus())


def small_corpus(limit: int = 12):
    return [(name, lat) for name, lat in corpus() if lat.n <= limit]


def small_labeled_corpus(limit: int = 40):
    return [(name, lat, lab) for name, lat, lab in labeled_corpus() if lat.n <= limit]


def brute_join(lattice: Lattice, xs) -> int | None:
    """Unique minimal common upper bound by leq scan, or None."""
    xs = list(xs)
    uppers = [y for y in range(lattice.n) if all(lattice.leq(x, y) for x in xs)]
    minimal = [
        y for y in uppers if not any(z != y and lattice.leq(z, y) for z in uppers)
    ]
    return minimal[0] if len(minimal) == 1 else None


def brute_meet(lattice: Lattice, xs) -> int | None:
    xs = list(xs)
    lowers = [y for y in range(lattice.n) if all(lattice.leq(y, x) for x in xs)]
    maximal = [
        y for y in lowers if not any(z != y and lattice.leq(y, z) for z in lowers)
    ]
    return maximal[0] if len(maximal) == 1 else None


def brute_covers(lattice: Lattice) -> set[tuple[int, int]]:
    """(upper, lower) cover pairs recomputed from leq alone."""
    n = lattice.n
    pairs = set()
    for lower in range(n):
        for upper in range(n):
            if upper == lower or not lattice.leq(lower, upper):
                continue
            if not any(
                z != lower and z != upper and lattice.leq(lower, z) and lattice.leq(z, upper)
                for z in range(n)
            ):
                pairs.add((upper, lower))
    return pairs


def brute_semidistributive(lattice: Lattice) -> bool:
    """Semidistributivity by the arbitrary-subset definition (both laws).

    For every element a and nonempty subset X: if a v x is constant on X
    then a v meet(X) equals that constant, and dually.  Exponential.
    """
    n = lattice.n
    for xmask in range(1, 1 << n):
        xs = list(bits_of(xmask))
        meet_x = lattice.meet(xs)
        join_x = lattice.join(xs)
        for a in range(n):
            j0 = lattice.join((a, xs[0]))
            if all(lattice.join((a, x)) == j0 for x in xs[1:]):
                if lattice.join((a, meet_x)) != j0:
                    return False
            m0 = lattice.meet((a, xs[0]))
            if all(lattice.meet((a, x)) == m0 for x in xs[1:]):
                if lattice.meet((a, join_x)) != m0:
                    return False
    return True
