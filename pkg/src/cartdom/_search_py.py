"""Pure-Python exact search for minimum dominating-type sets.

This is the fallback for the compiled kernel in ``_search_c.pyx`` and must
return identical results.  Masks are Python ints, so any order works.
"""

from __future__ import annotations


def _lex_less(a: int, b: int) -> bool:
    # equal-size sets: the one holding the lowest differing vertex sorts first
    d = a ^ b
    return bool(a & d & -d)


def min_dominating(n: int, cover, cand, partner, paired: bool) -> int:
    """Return the lexicographically smallest minimum set as a bit mask.

    ``cover[w]`` is the mask of vertices that ``w`` dominates once chosen,
    ``cand[v]`` the mask of vertices able to dominate ``v``.  In paired mode
    vertices are added as edges ``(a, b)`` with ``a`` in ``cand[v]`` and ``b`` in
    ``partner[a]``.  Returns -1 when no set exists.

    The search always branches on the lowest undominated vertex, trying
    candidates in ascending order; a candidate is forbidden in later sibling
    branches once its own branch is exhausted.
    """
    full = (1 << n) - 1
    cover = list(cover)
    cand = list(cand)
    partner = list(partner) if paired else None
    step = 2 if paired else 1

    best_size = n + 1
    best_mask = -1
    strict = True

    def bound(undom: int, blocked: int) -> int:
        maxcov = 0
        avail = full & ~blocked
        while avail:
            low = avail & -avail
            avail ^= low
            c = (cover[low.bit_length() - 1] & undom).bit_count()
            if c > maxcov:
                maxcov = c
        if maxcov == 0:
            return n + 1
        lb = -(-undom.bit_count() // maxcov)
        if paired and lb & 1:
            lb += 1
        return lb

    def dfs(undom: int, chosen: int, forbidden: int, size: int) -> None:
        nonlocal best_size, best_mask
        if not undom:
            if size < best_size or (size == best_size and _lex_less(chosen, best_mask)):
                best_size = size
                best_mask = chosen
            return
        blocked = chosen | forbidden
        limit = size + bound(undom, blocked)
        if limit > best_size or (strict and limit == best_size):
            return
        if size + step > best_size:
            return
        v = (undom & -undom).bit_length() - 1
        todo = cand[v] & ~blocked
        while todo:
            low = todo & -todo
            todo ^= low
            a = low.bit_length() - 1
            if paired:
                mates = partner[a] & ~(blocked | low)
                rest = undom & ~cover[a]
                while mates:
                    lb_ = mates & -mates
                    mates ^= lb_
                    b = lb_.bit_length() - 1
                    dfs(rest & ~cover[b], chosen | low | lb_, forbidden, size + 2)
            else:
                dfs(undom & ~cover[a], chosen | low, forbidden, size + 1)
            forbidden |= low
            blocked |= low

    dfs(full, 0, 0, 0)
    if best_mask < 0:
        return -1
    # second pass: enumerate every set of the optimal size, keep the lex-smallest
    strict = False
    dfs(full, 0, 0, 0)
    return best_mask
