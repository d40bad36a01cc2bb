# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact search; mirrors ``_search_py.min_dominating`` for n <= 64."""

from libc.stdint cimport uint64_t


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil


cdef enum:
    MAXN = 64

cdef struct Ctx:
    int n
    int paired
    int strict
    int best_size
    uint64_t best_mask
    uint64_t full
    uint64_t cover[MAXN]
    uint64_t cand[MAXN]
    uint64_t partner[MAXN]


cdef inline bint lex_less(uint64_t a, uint64_t b) noexcept nogil:
    cdef uint64_t d = a ^ b
    return (a & d & (~d + 1)) != 0


cdef int bound(Ctx* ctx, uint64_t undom, uint64_t blocked) noexcept nogil:
    cdef uint64_t avail = ctx.full & ~blocked
    cdef int maxcov = 0, c, w, lb
    while avail:
        w = ctz64(avail)
        avail &= avail - 1
        c = popcount64(ctx.cover[w] & undom)
        if c > maxcov:
            maxcov = c
    if maxcov == 0:
        return ctx.n + 1
    lb = (popcount64(undom) + maxcov - 1) // maxcov
    if ctx.paired and (lb & 1):
        lb += 1
    return lb


cdef void dfs(Ctx* ctx, uint64_t undom, uint64_t chosen, uint64_t forbidden, int size) noexcept nogil:
    cdef uint64_t blocked, todo, low, mates, lowb, rest
    cdef int limit, v, a, b
    if undom == 0:
        if size < ctx.best_size or (size == ctx.best_size and lex_less(chosen, ctx.best_mask)):
            ctx.best_size = size
            ctx.best_mask = chosen
        return
    blocked = chosen | forbidden
    limit = size + bound(ctx, undom, blocked)
    if limit > ctx.best_size or (ctx.strict and limit == ctx.best_size):
        return
    if size + (2 if ctx.paired else 1) > ctx.best_size:
        return
    v = ctz64(undom)
    todo = ctx.cand[v] & ~blocked
    while todo:
        a = ctz64(todo)
        low = (<uint64_t>1) << a
        todo &= todo - 1
        if ctx.paired:
            mates = ctx.partner[a] & ~(blocked | low)
            rest = undom & ~ctx.cover[a]
            while mates:
                b = ctz64(mates)
                lowb = (<uint64_t>1) << b
                mates &= mates - 1
                dfs(ctx, rest & ~ctx.cover[b], chosen | low | lowb, forbidden, size + 2)
        else:
            dfs(ctx, undom & ~ctx.cover[a], chosen | low, forbidden, size + 1)
        forbidden |= low
        blocked |= low


def min_dominating(int n, cover, cand, partner, bint paired):
    if n < 1 or n > MAXN:
        raise ValueError(f"compiled kernel supports 1..{MAXN} vertices, got {n}")
    cdef Ctx ctx
    cdef int i
    ctx.n = n
    ctx.paired = paired
    ctx.strict = 1
    ctx.best_size = n + 1
    ctx.best_mask = 0
    ctx.full = (<uint64_t>0xFFFFFFFFFFFFFFFF) if n == 64 else (((<uint64_t>1) << n) - 1)
    for i in range(n):
        ctx.cover[i] = cover[i]
        ctx.cand[i] = cand[i]
        ctx.partner[i] = partner[i] if paired else 0
    with nogil:
        dfs(&ctx, ctx.full, 0, 0, 0)
    if ctx.best_size > n:
        return -1
    ctx.strict = 0
    with nogil:
        dfs(&ctx, ctx.full, 0, 0, 0)
    return ctx.best_mask
