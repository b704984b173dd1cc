# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: initializedcheck=False, language_level=3
"""Compiled maximal-clique counting kernel.

Same algorithm as the pure-Python kernel — degeneracy-ordered outer loop,
Tomita pivoting on neighborhood-local bitsets — with the recursion running
on C buffers and the GIL released.  Vertices are first relabeled by a
reverse breadth-first pass (Cuthill–McKee style) so that neighborhoods map
to few machine words; the size histogram is invariant under relabeling.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

import numpy as np

ctypedef long long i64
ctypedef unsigned long long u64

cdef extern from *:
    """
    #define POPCNT64(x) ((int)__builtin_popcountll(x))
    #define CTZ64(x) ((int)__builtin_ctzll(x))
    #if defined(__BMI2__)
    #include <immintrin.h>
    #define PEXT64(x, m) ((unsigned long long)_pext_u64((x), (m)))
    #else
    static inline unsigned long long PEXT64(unsigned long long x,
                                            unsigned long long m) {
        unsigned long long out = 0, bit = 1;
        while (m) {
            unsigned long long low = m & (~m + 1ULL);
            if (x & low) out |= bit;
            bit <<= 1;
            m &= m - 1;
        }
        return out;
    }
    #endif
    """
    int POPCNT64(u64 x) nogil
    int CTZ64(u64 x) nogil
    u64 PEXT64(u64 x, u64 m) nogil


cdef struct Ctx:
    const i64 *indptr
    const i64 *indices
    u64 *rows       # k rows of `words` words each, current outer subproblem
    u64 *buf_p      # per-depth candidate bitsets
    u64 *buf_x      # per-depth exclusion bitsets
    u64 *buf_e      # per-depth extension snapshots
    u64 *cols       # transpose of rows: word w of every row, contiguous
    u64 *hist_lo
    u64 *hist_hi
    int words
    int kloc        # candidate count of the current outer subproblem
    u64 cbuf[64]    # compressed rows of a repacked subproblem


cdef void bump(Ctx *c, int size) nogil:
    c.hist_lo[size] += 1
    if c.hist_lo[size] == 0:
        c.hist_hi[size] += 1


cdef void expand1(Ctx *c, u64 P, u64 X, int depth, const u64 *col) nogil:
    # Single-word specialization: once P and X fit in one word the whole
    # subtree below stays in that word, so the recursion runs on register
    # values with no buffer traffic.  ``col`` points at this word's column
    # of the transposed row matrix, pre-offset so candidate bit b of the
    # word is ``col[b]`` — 64 consecutive entries, cache-friendly.
    cdef int b, cnt, best, pcnt
    cdef u64 m, e, bit, row_w, pivot_w

    pcnt = POPCNT64(P)
    if pcnt == 0:
        if X == 0:
            bump(c, depth)
        return

    # Any excluded vertex adjacent to all of P would extend every clique
    # reachable from here, so nothing below is maximal.
    m = X
    while m:
        b = CTZ64(m)
        m &= m - 1
        if P & ~col[b] == 0:
            return

    # If P induces a complete subgraph, the one candidate clique below is
    # R + P itself: branching would walk it one vertex per level.
    m = P
    while m:
        b = CTZ64(m)
        m &= m - 1
        if POPCNT64(col[b] & P) != pcnt - 1:
            break
    else:
        bump(c, depth + pcnt)
        return

    # With dominators gone no candidate reaches pcnt, so the first one at
    # pcnt - 1 (ascending scan) is already the smallest-id maximizer.
    best = -1
    pivot_w = 0
    m = P | X
    while m:
        b = CTZ64(m)
        m &= m - 1
        row_w = col[b]
        cnt = POPCNT64(row_w & P)
        if cnt > best:
            best = cnt
            pivot_w = row_w
            if cnt >= pcnt - 1:
                break

    e = P & ~pivot_w
    while e:
        b = CTZ64(e)
        bit = (<u64> 1) << b
        e &= e - 1
        row_w = col[b]
        expand1(c, P & row_w, X & row_w, depth + 1, col)
        P &= ~bit
        X |= bit


cdef void expand(Ctx *c, u64 *P, u64 *X, int depth, int w0, int w1) nogil:
    # [w0, w1) bounds the words where P or X can be nonzero; words outside
    # the range may hold stale data from sibling branches and are never read.
    cdef int w = c.words
    cdef int i, j, b, cnt, best, pcnt, cw0, cw1, complete
    cdef int ucnt, shift, sh2, t
    cdef u64 m, e, allx, both, cp, cx, acc
    cdef u64 *row
    cdef u64 *pivot_row
    cdef u64 *np_
    cdef u64 *nx_
    cdef u64 *E

    pcnt = 0
    for i in range(w0, w1):
        pcnt += POPCNT64(P[i])
    if pcnt == 0:
        allx = 0
        for i in range(w0, w1):
            allx |= X[i]
        if allx == 0:
            bump(c, depth)
        return

    # Any excluded vertex adjacent to all of P would extend every clique
    # reachable from here, so nothing below is maximal.
    for i in range(w0, w1):
        m = X[i]
        while m:
            b = CTZ64(m)
            m &= m - 1
            row = c.rows + (<size_t> (i * 64 + b)) * w
            for j in range(w0, w1):
                if P[j] & ~row[j]:
                    break
            else:
                return

    # If P induces a complete subgraph, the one candidate clique below is
    # R + P itself: branching would walk it one vertex per level.
    complete = 1
    for i in range(w0, w1):
        m = P[i]
        while m:
            b = CTZ64(m)
            m &= m - 1
            row = c.rows + (<size_t> (i * 64 + b)) * w
            cnt = 0
            for j in range(w0, w1):
                cnt += POPCNT64(row[j] & P[j])
            if cnt != pcnt - 1:
                complete = 0
                break
        if not complete:
            break
    if complete:
        bump(c, depth + pcnt)
        return

    # When every remaining candidate fits one machine word, repack them
    # into a fresh single-word universe once (bit order preserved) and run
    # the whole subtree register-resident.
    ucnt = pcnt
    for i in range(w0, w1):
        ucnt += POPCNT64(X[i])
    if ucnt <= 64:
        cp = 0
        cx = 0
        shift = 0
        t = 0
        for i in range(w0, w1):
            both = P[i] | X[i]
            if both == 0:
                continue
            cp |= PEXT64(P[i], both) << shift
            cx |= PEXT64(X[i], both) << shift
            shift += POPCNT64(both)
        for i in range(w0, w1):
            both = P[i] | X[i]
            while both:
                b = CTZ64(both)
                both &= both - 1
                row = c.rows + (<size_t> (i * 64 + b)) * w
                acc = 0
                sh2 = 0
                for j in range(w0, w1):
                    m = P[j] | X[j]
                    if m == 0:
                        continue
                    acc |= PEXT64(row[j], m) << sh2
                    sh2 += POPCNT64(m)
                c.cbuf[t] = acc
                t += 1
        expand1(c, cp, cx, depth, c.cbuf)
        return

    # With dominators gone no candidate reaches pcnt, so the first one at
    # pcnt - 1 (ascending scan) is already the smallest-id maximizer.
    best = -1
    pivot_row = NULL
    for i in range(w0, w1):
        m = P[i] | X[i]
        while m:
            b = CTZ64(m)
            m &= m - 1
            row = c.rows + (<size_t> (i * 64 + b)) * w
            cnt = 0
            for j in range(w0, w1):
                cnt += POPCNT64(row[j] & P[j])
            if cnt > best:
                best = cnt
                pivot_row = row
                if cnt >= pcnt - 1:
                    break
        if best >= pcnt - 1:
            break

    E = c.buf_e + (<size_t> depth) * w
    for i in range(w0, w1):
        E[i] = P[i] & ~pivot_row[i]
    np_ = c.buf_p + (<size_t> (depth + 1)) * w
    nx_ = c.buf_x + (<size_t> (depth + 1)) * w
    for i in range(w0, w1):
        e = E[i]
        while e:
            b = CTZ64(e)
            e &= e - 1
            row = c.rows + (<size_t> (i * 64 + b)) * w
            cw0 = w1
            cw1 = w0
            for j in range(w0, w1):
                np_[j] = P[j] & row[j]
                nx_[j] = X[j] & row[j]
                both = np_[j] | nx_[j]
                if both:
                    if cw0 == w1:
                        cw0 = j
                    cw1 = j + 1
            if cw0 > cw1:
                bump(c, depth + 1)  # both child sets empty: new clique
            elif cw1 - cw0 == 1:
                expand1(c, np_[cw0], nx_[cw0], depth + 1,
                        c.cols + (<size_t> cw0) * c.kloc + cw0 * 64)
            else:
                expand(c, np_, nx_, depth + 1, cw0, cw1)
            P[i] &= ~((<u64> 1) << b)
            X[i] |= (<u64> 1) << b


cdef void run_outer(Ctx *c, const i64 *order, const i64 *rank, i64 n) nogil:
    cdef i64 oi, v, u, a, bnd
    cdef int k, words, i, j
    cdef const i64 *local
    cdef u64 *row
    cdef u64 *P
    cdef u64 *X
    for oi in range(n):
        v = order[oi]
        k = <int> (c.indptr[v + 1] - c.indptr[v])
        if k == 0:
            bump(c, 1)
            continue
        words = (k + 63) >> 6
        c.words = words
        c.kloc = k
        local = c.indices + c.indptr[v]
        memset(c.rows, 0, (<size_t> k) * words * sizeof(u64))
        for i in range(k):
            u = local[i]
            a = c.indptr[u]
            bnd = c.indptr[u + 1]
            j = 0
            row = c.rows + (<size_t> i) * words
            while a < bnd and j < k:
                if c.indices[a] == local[j]:
                    row[j >> 6] |= (<u64> 1) << (j & 63)
                    a += 1
                    j += 1
                elif c.indices[a] < local[j]:
                    a += 1
                else:
                    j += 1
        for i in range(k):
            row = c.rows + (<size_t> i) * words
            for j in range(words):
                c.cols[(<size_t> j) * k + i] = row[j]
        P = c.buf_p + words  # depth-1 slot
        X = c.buf_x + words
        memset(P, 0, (<size_t> words) * sizeof(u64))
        memset(X, 0, (<size_t> words) * sizeof(u64))
        for i in range(k):
            if rank[local[i]] > rank[v]:
                P[i >> 6] |= (<u64> 1) << (i & 63)
            else:
                X[i >> 6] |= (<u64> 1) << (i & 63)
        if words == 1:
            expand1(c, P[0], X[0], 1, c.cols)
        else:
            expand(c, P, X, 1, 0, words)


cdef void sort_rows_by_degree(const i64 *indptr, const i64 *indices, i64 n,
                              const i64 *deg, i64 *adj2, i64 *cnt) nogil:
    # Stable counting sort of each adjacency row by neighbor degree; `cnt`
    # must arrive zeroed (length > max degree) and is left zeroed again.
    cdef i64 v, t, s, e, u, d, dmin, dmax, run, cc
    for v in range(n):
        s = indptr[v]
        e = indptr[v + 1]
        if e - s <= 1:
            for t in range(s, e):
                adj2[t] = indices[t]
            continue
        dmin = deg[indices[s]]
        dmax = dmin
        for t in range(s, e):
            d = deg[indices[t]]
            cnt[d] += 1
            if d < dmin:
                dmin = d
            if d > dmax:
                dmax = d
        run = 0
        for d in range(dmin, dmax + 1):
            cc = cnt[d]
            cnt[d] = run
            run += cc
        for t in range(s, e):
            u = indices[t]
            d = deg[u]
            adj2[s + cnt[d]] = u
            cnt[d] += 1
        for d in range(dmin, dmax + 1):
            cnt[d] = 0


cdef void bandwidth_order(const i64 *indptr, const i64 *adj2, i64 n,
                          const i64 *seeds, i64 *queue, unsigned char *vis,
                          i64 *perm) nogil:
    # Breadth-first over degree-sorted adjacency, components seeded in
    # ascending-degree order, visit sequence reversed.
    cdef i64 head = 0, tail = 0, si, s, v, t, u
    for si in range(n):
        s = seeds[si]
        if vis[s]:
            continue
        vis[s] = 1
        queue[tail] = s
        tail += 1
        while head < tail:
            v = queue[head]
            head += 1
            for t in range(indptr[v], indptr[v + 1]):
                u = adj2[t]
                if not vis[u]:
                    vis[u] = 1
                    queue[tail] = u
                    tail += 1
    for t in range(n):
        perm[t] = queue[n - 1 - t]


cdef void relabel_csr(const i64 *indptr, const i64 *indices, i64 n,
                      const i64 *perm, const i64 *inv,
                      i64 *ptr2, i64 *idx2, i64 *cursor) nogil:
    # Rows stay sorted: new ids are emitted in ascending order below.
    cdef i64 i, j2, t, vold
    ptr2[0] = 0
    for i in range(n):
        ptr2[i + 1] = ptr2[i] + (indptr[perm[i] + 1] - indptr[perm[i]])
        cursor[i] = ptr2[i]
    for j2 in range(n):
        vold = perm[j2]
        for t in range(indptr[vold], indptr[vold + 1]):
            i = inv[indices[t]]
            idx2[cursor[i]] = j2
            cursor[i] += 1


cdef i64 degeneracy_order(const i64 *indptr, const i64 *indices, i64 n,
                          i64 *deg, i64 *order_by_deg, i64 *pos,
                          i64 *bucket_start, i64 *rank) nogil:
    # Smallest-last bucket peeling; order_by_deg/pos/bucket_start arrive
    # prefilled for the initial degrees and are updated in place.
    cdef i64 i, v, dv, t, u, du, pw, w, pu
    cdef i64 degeneracy = 0
    for i in range(n):
        v = order_by_deg[i]
        dv = deg[v]
        if dv > degeneracy:
            degeneracy = dv
        for t in range(indptr[v], indptr[v + 1]):
            u = indices[t]
            du = deg[u]
            # Degrees at or below the current minimum stay frozen; that
            # keeps processed vertices out and the buckets consistent.
            if du > dv:
                pw = bucket_start[du]
                w = order_by_deg[pw]
                if w != u:
                    pu = pos[u]
                    order_by_deg[pu] = w
                    order_by_deg[pw] = u
                    pos[u] = pw
                    pos[w] = pu
                bucket_start[du] += 1
                deg[u] = du - 1
    for i in range(n):
        rank[order_by_deg[i]] = i
    return degeneracy


def count_histogram(indptr_arr, indices_arr):
    """Maximal-clique size histogram; index = clique size."""
    cdef const i64[::1] indptr = np.ascontiguousarray(indptr_arr,
                                                      dtype=np.int64)
    cdef const i64[::1] indices = np.ascontiguousarray(indices_arr,
                                                       dtype=np.int64)
    cdef i64 n = indptr.shape[0] - 1
    if n == 0:
        return []
    deg_np = np.diff(np.asarray(indptr_arr)).astype(np.int64)
    cdef i64 kmax = int(deg_np.max())
    if kmax == 0:
        return [0, int(n)]
    cdef i64 nedges = indices.shape[0]

    # Bandwidth-reducing relabel, then a degeneracy order of the relabeled
    # graph; the histogram is invariant under both.
    adj2_np = np.empty(nedges, dtype=np.int64)
    cnt_np = np.zeros(kmax + 2, dtype=np.int64)
    seeds_np = np.argsort(deg_np, kind="stable").astype(np.int64)
    queue_np = np.empty(n, dtype=np.int64)
    vis_np = np.zeros(n, dtype=np.uint8)
    perm_np = np.empty(n, dtype=np.int64)
    cdef i64[::1] adj2 = adj2_np
    cdef i64[::1] cnt = cnt_np
    cdef const i64[::1] seeds = seeds_np
    cdef i64[::1] queue = queue_np
    cdef unsigned char[::1] vis = vis_np
    cdef i64[::1] perm = perm_np
    cdef const i64[::1] degv = deg_np
    sort_rows_by_degree(&indptr[0], &indices[0], n, &degv[0],
                        &adj2[0], &cnt[0])
    bandwidth_order(&indptr[0], &adj2[0], n, &seeds[0], &queue[0], &vis[0],
                    &perm[0])
    inv_np = np.empty(n, dtype=np.int64)
    inv_np[perm_np] = np.arange(n, dtype=np.int64)
    ptr2_np = np.empty(n + 1, dtype=np.int64)
    idx2_np = np.empty(nedges, dtype=np.int64)
    cursor_np = np.empty(n, dtype=np.int64)
    cdef const i64[::1] inv = inv_np
    cdef i64[::1] ptr2 = ptr2_np
    cdef i64[::1] idx2 = idx2_np
    cdef i64[::1] cursor = cursor_np
    relabel_csr(&indptr[0], &indices[0], n, &perm[0], &inv[0], &ptr2[0],
                &idx2[0], &cursor[0])

    deg2_np = deg_np[perm_np].copy()
    obd_np = np.argsort(deg2_np, kind="stable").astype(np.int64)
    pos_np = np.empty(n, dtype=np.int64)
    pos_np[obd_np] = np.arange(n, dtype=np.int64)
    bstart_np = np.zeros(kmax + 2, dtype=np.int64)
    np.cumsum(np.bincount(deg2_np, minlength=kmax + 1), out=bstart_np[1:])
    bstart_np = bstart_np[:-1].copy()
    rank_np = np.empty(n, dtype=np.int64)
    cdef i64[::1] deg2 = deg2_np
    cdef i64[::1] obd = obd_np
    cdef i64[::1] pos = pos_np
    cdef i64[::1] bstart = bstart_np
    cdef i64[::1] rank = rank_np
    degeneracy_order(&ptr2[0], &idx2[0], n, &deg2[0], &obd[0], &pos[0],
                     &bstart[0], &rank[0])

    cdef size_t wmax = (kmax + 63) >> 6
    cdef Ctx c
    c.indptr = &ptr2[0]
    c.indices = &idx2[0]
    c.hist_lo = <u64 *> malloc((<size_t> (n + 1)) * sizeof(u64))
    c.hist_hi = <u64 *> malloc((<size_t> (n + 1)) * sizeof(u64))
    c.rows = <u64 *> malloc((<size_t> kmax) * wmax * sizeof(u64))
    c.buf_p = <u64 *> malloc((<size_t> (kmax + 3)) * wmax * sizeof(u64))
    c.buf_x = <u64 *> malloc((<size_t> (kmax + 3)) * wmax * sizeof(u64))
    c.buf_e = <u64 *> malloc((<size_t> (kmax + 3)) * wmax * sizeof(u64))
    c.cols = <u64 *> malloc((<size_t> kmax) * wmax * sizeof(u64))
    if (c.hist_lo == NULL or c.hist_hi == NULL or c.rows == NULL
            or c.buf_p == NULL or c.buf_x == NULL or c.buf_e == NULL
            or c.cols == NULL):
        free(c.hist_lo); free(c.hist_hi); free(c.rows)
        free(c.buf_p); free(c.buf_x); free(c.buf_e); free(c.cols)
        raise MemoryError("clique kernel buffers")
    memset(c.hist_lo, 0, (<size_t> (n + 1)) * sizeof(u64))
    memset(c.hist_hi, 0, (<size_t> (n + 1)) * sizeof(u64))

    with nogil:
        run_outer(&c, &obd[0], &rank[0], n)

    hist = [(int(c.hist_hi[i]) << 64) | int(c.hist_lo[i])
            for i in range(n + 1)]
    free(c.hist_lo); free(c.hist_hi); free(c.rows)
    free(c.buf_p); free(c.buf_x); free(c.buf_e); free(c.cols)
    return hist
