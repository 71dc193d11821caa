"""Pure-Python implementations of the hot kernels.

The compiled twin (kappalat._fast) exposes the same four functions with
identical semantics; kappalat._backend picks one at import time.  Both
operate on order data given as lists of int bitmasks: up[x] is the set
{y | x <= y} and down[x] the set {x' | x' <= x}, each including x.

All kernels assume a validated lattice, so joins and meets can be read
off as extreme bits of intersected masks without existence checks.
"""

from __future__ import annotations

NAME = "pure"


def first_missing_meet(n: int, up: list[int], down: list[int]) -> tuple[int, int] | None:
    """First incomparable pair (by lex id order) lacking a greatest lower bound.

    Bounded posets are lattices iff all pairwise meets exist, so this is
    the whole lattice test once top and bottom are known to be unique.
    """
    full = (1 << n) - 1
    for a in range(n):
        incomp = full & ~(up[a] | down[a])
        incomp >>= a
        da = down[a]
        while incomp:
            low = incomp & -incomp
            b = a + low.bit_length() - 1
            incomp ^= low
            common = da & down[b]
            m = common.bit_length() - 1
            if common & ~down[m]:
                return (a, b)
    return None


def _join(up: list[int], x: int, y: int) -> int:
    u = up[x] & up[y]
    return (u & -u).bit_length() - 1


def _meet(down: list[int], x: int, y: int) -> int:
    return (down[x] & down[y]).bit_length() - 1


def sd_witness(n: int, up: list[int], down: list[int]) -> tuple[str, int, int, int] | None:
    """First triple violating a pairwise semidistributive law, or None.

    For fixed a the law SDv (a|x = a|y implies a|(x&y) = a|x) holds for
    all pairs iff, for every fiber C of x -> a|x, joining a with the
    meet of all of C lands back on the fiber value.  Checking one meet
    per fiber replaces the cubic triple scan; a failing fiber is then
    rescanned pairwise to report a concrete triple.  The meet law is
    handled dually.  Scan order (join law first, then meet law, elements
    in id order) makes the witness deterministic.
    """
    for a in range(n):
        fiber_meet: dict[int, int] = {}
        members: dict[int, int] = {}
        for x in range(n):
            v = _join(up, a, x)
            if v in fiber_meet:
                fiber_meet[v] &= down[x]
                members[v] |= 1 << x
            else:
                fiber_meet[v] = down[x]
                members[v] = 1 << x
        for v, dm in fiber_meet.items():
            m = dm.bit_length() - 1
            if _join(up, a, m) != v:
                return ("join",) + _locate_join_pair(up, down, a, v, members[v])
    for a in range(n):
        fiber_join: dict[int, int] = {}
        members = {}
        for x in range(n):
            v = _meet(down, a, x)
            if v in fiber_join:
                fiber_join[v] &= up[x]
                members[v] |= 1 << x
            else:
                fiber_join[v] = up[x]
                members[v] = 1 << x
        for v, um in fiber_join.items():
            j = (um & -um).bit_length() - 1
            if _meet(down, a, j) != v:
                return ("meet",) + _locate_meet_pair(up, down, a, v, members[v])
    return None


def _locate_join_pair(up, down, a, v, member_mask):
    xs = []
    m = member_mask
    while m:
        low = m & -m
        xs.append(low.bit_length() - 1)
        m ^= low
    for i, x in enumerate(xs):
        for y in xs[i + 1:]:
            if _join(up, a, _meet(down, x, y)) != v:
                return (a, x, y)
    raise AssertionError("fiber meet escaped but every pair agrees")


def _locate_meet_pair(up, down, a, v, member_mask):
    xs = []
    m = member_mask
    while m:
        low = m & -m
        xs.append(low.bit_length() - 1)
        m ^= low
    for i, x in enumerate(xs):
        for y in xs[i + 1:]:
            if _meet(down, a, _join(up, x, y)) != v:
                return (a, x, y)
    raise AssertionError("fiber join escaped but every pair agrees")


def transitive_reduction(n: int, up: list[int], down: list[int]) -> list[tuple[int, int]]:
    """Cover pairs (upper, lower) of the order given by the masks, lex-sorted."""
    pairs = []
    for upper in range(n):
        strict_down = down[upper] ^ (1 << upper)
        m = strict_down
        while m:
            low = m & -m
            lower = low.bit_length() - 1
            m ^= low
            if (up[lower] ^ low) & strict_down == 0:
                pairs.append((upper, lower))
    pairs.sort()
    return pairs


def interval_images(
    n: int,
    up: list[int],
    down: list[int],
    belowj: list[int],
    kge: list[int],
    cover_ups: list[tuple[int, ...]],
    kind: str,
) -> dict[int, tuple[int, int]]:
    """Map each distinct interval label set to its first witness interval.

    Enumerates intervals [a, b] in lex (a, b) order, keeps those of the
    requested kind (all / wide / ice), and records the label bitmask
    belowj[b] & kge[a].  belowj and kge are caller-compressed masks over
    join-irreducible positions, so the per-interval step is one AND.
    """
    images: dict[int, tuple[int, int]] = {}
    for a in range(n):
        kga = kge[a]
        cu = cover_ups[a]
        if kind == "ice":
            bound = a
            for c in cu:
                bound = _join(up, bound, c)
            reach = down[bound]
        m = up[a]
        while m:
            low = m & -m
            b = low.bit_length() - 1
            m ^= low
            if kind == "wide":
                w = a
                db = down[b]
                for c in cu:
                    if (db >> c) & 1:
                        w = _join(up, w, c)
                if w != b:
                    continue
            elif kind == "ice":
                if not (reach >> b) & 1:
                    continue
            jl = belowj[b] & kga
            if jl not in images:
                images[jl] = (a, b)
    return images
