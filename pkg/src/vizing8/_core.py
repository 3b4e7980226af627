# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Array kernels for the batched 8-edge-coloring.

This file is valid Python and valid Cython (pure-Python mode).  When the
extension is built, ``vizing8._core`` is the compiled module; the same source
is loaded as plain Python when the extension is missing or disabled.

Conventions
-----------
Colors are 1..8, 0 means uncolored.  ``mask[v]`` holds bit ``c-1`` for every
color present at ``v``; ``at[8*v + c-1]`` is the edge of color ``c`` at ``v``
or -1.  Adjacency uses 8 slots per vertex (``nbr``/``inc``), valid up to
``deg[v]``.
"""
import cython
import numpy as np

_NC = cython.declare(cython.int, 8)
_ROW = cython.declare(cython.int, 46)
_PLAN = cython.declare(cython.int, 40)
_MAXSTEP = cython.declare(cython.int, 10)

_T0 = cython.declare(cython.int, 0)
_T1 = cython.declare(cython.int, 1)
_T2 = cython.declare(cython.int, 2)
_T3 = cython.declare(cython.int, 3)
_T4 = cython.declare(cython.int, 4)
_T5 = cython.declare(cython.int, 5)
_T6 = cython.declare(cython.int, 6)
_FAN = cython.declare(cython.int, 7)
_AB = cython.declare(cython.int, 8)

_ASSIGN = cython.declare(cython.int, 1)
_SWAP = cython.declare(cython.int, 2)
_RECOLOR = cython.declare(cython.int, 3)

_OK = cython.declare(cython.int, 0)
_E_NOTBFLY = cython.declare(cython.int, 1)
_E_PRECOND = cython.declare(cython.int, 2)
_E_FAN = cython.declare(cython.int, 3)
_E_COHERENCE = cython.declare(cython.int, 4)
_E_CONFLICT = cython.declare(cython.int, 5)
_E_UNSUPPORTED = cython.declare(cython.int, 6)
_E_WITNESS = cython.declare(cython.int, 7)
_E_INCOMPLETE = cython.declare(cython.int, 8)
_E_NOTWEAK = cython.declare(cython.int, 9)
_E_INTERNAL = cython.declare(cython.int, 10)


def layout():
    """Constants shared with the Python layer, checked at import."""
    return (_ROW, _PLAN, _MAXSTEP, _FAN, _AB)


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _pair(a: cython.int, b: cython.int) -> cython.int:
    t: cython.int
    if a > b:
        t = a
        a = b
        b = t
    return (a - 1) * 8 - ((a - 1) * a) // 2 + (b - a - 1)


def pair_index(a, b):
    return _pair(a, b)


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _lowc(m: cython.int) -> cython.int:
    c: cython.int
    for c in range(1, 9):
        if (m >> (c - 1)) & 1:
            return c
    return 0


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _popc(m: cython.int) -> cython.int:
    k: cython.int = 0
    while m:
        m &= m - 1
        k += 1
    return k


@cython.cclass
class Core:
    n: cython.int
    m: cython.int
    eu: cython.int[:]
    ev: cython.int[:]
    deg: cython.int[:]
    nbr: cython.int[:]
    inc: cython.int[:]
    color: cython.schar[:]
    mask: cython.uchar[:]
    at: cython.int[:]

    # chain index: cid[28*v + p] -> record id; rec[4*k..] = end0, end1, cyc, len
    cid: cython.int[:]
    rec: cython.int[:]
    nch: cython.int
    lazy: cython.bint
    touched: cython.int[:]
    ntouched: cython.int
    visits: cython.longlong

    # walk scratch and last walk result
    vbuf: cython.int[:]
    ebuf: cython.int[:]
    w_len: cython.int
    w_elen: cython.int
    w_cyc: cython.int
    w_e0: cython.int
    w_e1: cython.int

    # stamps
    vst: cython.int[:]
    vown: cython.int[:]
    vtok: cython.int
    bst: cython.int[:]
    dd: cython.int[:]
    btok: cython.int
    queue: cython.int[:]
    est: cython.int[:]
    etok: cython.int
    sbuf: cython.int[:]
    last_recolored: cython.longlong
    has_index: cython.bint

    # peeling state
    ealive: cython.schar[:]
    c8: cython.int[:]
    have_c8: cython.bint
    nvact: cython.int
    bufw: cython.int[:]
    bufb: cython.int[:]

    def __init__(self, eu, ev, deg, nbr, inc, color, mask, at):
        self.eu = eu
        self.ev = ev
        self.deg = deg
        self.nbr = nbr
        self.inc = inc
        self.color = color
        self.mask = mask
        self.at = at
        self.n = deg.shape[0]
        self.m = eu.shape[0]
        self.vbuf = np.zeros(self.n + 2, dtype=np.int32)
        self.ebuf = np.zeros(self.m + 2, dtype=np.int32)
        self.vst = np.zeros(self.n + 1, dtype=np.int32)
        self.vown = np.zeros(self.n + 1, dtype=np.int32)
        self.bst = np.zeros(self.n + 1, dtype=np.int32)
        self.dd = np.zeros(self.n + 1, dtype=np.int32)
        self.queue = np.zeros(self.n + 1, dtype=np.int32)
        self.est = np.zeros(self.m + 1, dtype=np.int32)
        self.sbuf = np.zeros(128, dtype=np.int32)
        self.vtok = 0
        self.btok = 0
        self.etok = 0
        self.nch = 0
        self.ntouched = 0
        self.visits = 0
        self.lazy = True
        self.last_recolored = 0
        self.nvact = 0
        self.has_index = False
        self.have_c8 = False

    # ------------------------------------------------------------------
    # small helpers
    @cython.cfunc
    @cython.inline
    @cython.exceptval(check=False)
    def _other(self, e: cython.int, v: cython.int) -> cython.int:
        return self.eu[e] + self.ev[e] - v

    @cython.cfunc
    @cython.inline
    @cython.exceptval(check=False)
    def _has(self, v: cython.int, c: cython.int) -> cython.int:
        return (cython.cast(cython.int, self.mask[v]) >> (c - 1)) & 1

    @cython.cfunc
    @cython.inline
    @cython.exceptval(check=False)
    def _free(self, v: cython.int) -> cython.int:
        return 0xFF ^ cython.cast(cython.int, self.mask[v])

    @cython.cfunc
    @cython.exceptval(check=False)
    def _edge(self, u: cython.int, v: cython.int) -> cython.int:
        s: cython.int
        b: cython.int = 8 * u
        for s in range(self.deg[u]):
            if self.nbr[b + s] == v:
                return self.inc[b + s]
        return -1

    @cython.cfunc
    @cython.exceptval(check=False)
    def _col(self, u: cython.int, v: cython.int) -> cython.int:
        e: cython.int = self._edge(u, v)
        if e < 0:
            return -1
        return cython.cast(cython.int, self.color[e])

    @cython.cfunc
    @cython.exceptval(check=False)
    def _set(self, e: cython.int, c: cython.int) -> cython.void:
        u: cython.int = self.eu[e]
        v: cython.int = self.ev[e]
        self.color[e] = c
        self.mask[u] |= 1 << (c - 1)
        self.mask[v] |= 1 << (c - 1)
        self.at[8 * u + c - 1] = e
        self.at[8 * v + c - 1] = e

    @cython.cfunc
    @cython.exceptval(check=False)
    def _clear(self, e: cython.int) -> cython.void:
        c: cython.int = cython.cast(cython.int, self.color[e])
        u: cython.int
        v: cython.int
        if c == 0:
            return
        u = self.eu[e]
        v = self.ev[e]
        self.mask[u] &= 0xFF ^ (1 << (c - 1))
        self.mask[v] &= 0xFF ^ (1 << (c - 1))
        self.at[8 * u + c - 1] = -1
        self.at[8 * v + c - 1] = -1
        self.color[e] = 0

    @cython.cfunc
    @cython.exceptval(check=False)
    def _can(self, e: cython.int, c: cython.int) -> cython.bint:
        return not (self._has(self.eu[e], c) or self._has(self.ev[e], c))

    @cython.cfunc
    @cython.exceptval(check=False)
    def _saturated(self, v: cython.int, skip: cython.int) -> cython.bint:
        # all incident edges colored, apart from edge `skip`
        s: cython.int
        k: cython.int = 0
        b: cython.int = 8 * v
        for s in range(self.deg[v]):
            if self.inc[b + s] != skip and cython.cast(cython.int, self.color[self.inc[b + s]]) == 0:
                k += 1
        return k == 0

    def edge_between(self, u, v):
        return self._edge(u, v)

    def recolored(self):
        return self.last_recolored

    def chain_visits(self):
        return self.visits

    # ------------------------------------------------------------------
    # chains
    @cython.cfunc
    @cython.exceptval(check=False)
    def _walk(self, v: cython.int, a: cython.int, b: cython.int) -> cython.void:
        ha: cython.int = self._has(v, a)
        hb: cython.int = self._has(v, b)
        cur: cython.int
        c: cython.int
        e: cython.int
        k: cython.int
        start: cython.int
        if not ha and not hb:
            self.vbuf[0] = v
            self.w_len = 1
            self.w_elen = 0
            self.w_cyc = 0
            self.w_e0 = v
            self.w_e1 = v
            return
        start = v
        if ha and hb:
            cur = v
            c = a
            while True:
                e = self.at[8 * cur + c - 1]
                if e < 0:
                    break
                cur = self._other(e, cur)
                c = a + b - c
                if cur == v:
                    break
            if cur == v:
                k = 0
                c = a
                self.vbuf[0] = v
                while True:
                    e = self.at[8 * cur + c - 1]
                    self.ebuf[k] = e
                    k += 1
                    cur = self._other(e, cur)
                    c = a + b - c
                    if cur == v:
                        break
                    self.vbuf[k] = cur
                self.w_len = k
                self.w_elen = k
                self.w_cyc = 1
                self.w_e0 = -1
                self.w_e1 = -1
                return
            start = cur
        c = a if self._has(start, a) else b
        self.vbuf[0] = start
        cur = start
        k = 0
        while True:
            e = self.at[8 * cur + c - 1]
            if e < 0:
                break
            self.ebuf[k] = e
            k += 1
            cur = self._other(e, cur)
            self.vbuf[k] = cur
            c = a + b - c
        self.w_len = k + 1
        self.w_elen = k
        self.w_cyc = 0
        self.w_e0 = start
        self.w_e1 = cur

    @cython.cfunc
    @cython.exceptval(check=False)
    def _kempe(self, v: cython.int, a: cython.int, b: cython.int) -> cython.int:
        i: cython.int
        u: cython.int
        e: cython.int
        t: cython.int
        ba: cython.int
        bb: cython.int
        mk: cython.int
        self._walk(v, a, b)
        for i in range(self.w_elen):
            e = self.ebuf[i]
            self.color[e] = a + b - cython.cast(cython.int, self.color[e])
        for i in range(self.w_len):
            u = self.vbuf[i]
            t = self.at[8 * u + a - 1]
            self.at[8 * u + a - 1] = self.at[8 * u + b - 1]
            self.at[8 * u + b - 1] = t
            mk = cython.cast(cython.int, self.mask[u])
            ba = (mk >> (a - 1)) & 1
            bb = (mk >> (b - 1)) & 1
            mk &= 0xFF ^ ((1 << (a - 1)) | (1 << (b - 1)))
            mk |= (bb << (a - 1)) | (ba << (b - 1))
            self.mask[u] = mk
        return self.w_elen

    def walk(self, v, a, b):
        """(is_cycle, end0, end1, vertices, edges) of the (a,b)-chain at v."""
        self._walk(v, a, b)
        return (bool(self.w_cyc), self.w_e0, self.w_e1,
                np.asarray(self.vbuf[:self.w_len]).copy(),
                np.asarray(self.ebuf[:self.w_elen]).copy())

    def kempe(self, v, a, b):
        k = self._kempe(v, a, b)
        return np.asarray(self.ebuf[:k]).copy()

    def index_reset(self, lazy=True):
        """Start a new index epoch; all records become unknown."""
        i: cython.int
        if not self.has_index:
            self.has_index = True
            self.cid = np.full(28 * self.n, -1, dtype=np.int32)
            self.rec = np.zeros(4 * 64, dtype=np.int32)
            self.touched = np.zeros(256, dtype=np.int32)
        elif self.lazy and self.ntouched < 7 * self.n:
            for i in range(self.ntouched):
                self.cid[self.touched[i]] = -1
        else:
            np.asarray(self.cid).fill(-1)
        self.ntouched = 0
        self.nch = 0
        self.lazy = lazy

    @cython.cfunc
    def _grow(self) -> cython.void:
        r = np.zeros(2 * self.rec.shape[0], dtype=np.int32)
        r[:self.rec.shape[0]] = self.rec
        self.rec = r

    @cython.cfunc
    def _cq(self, v: cython.int, a: cython.int, b: cython.int) -> cython.int:
        p: cython.int = _pair(a, b)
        k: cython.int = self.cid[28 * v + p]
        i: cython.int
        slot: cython.int
        if k >= 0:
            return k
        self._walk(v, a, b)
        k = self.nch
        if 4 * k + 4 > self.rec.shape[0]:
            self._grow()
        self.rec[4 * k] = self.w_e0
        self.rec[4 * k + 1] = self.w_e1
        self.rec[4 * k + 2] = self.w_cyc
        self.rec[4 * k + 3] = self.w_elen
        if self.lazy and self.ntouched + self.w_len > self.touched.shape[0]:
            t = np.zeros(2 * (self.ntouched + self.w_len), dtype=np.int32)
            t[:self.ntouched] = self.touched[:self.ntouched]
            self.touched = t
        for i in range(self.w_len):
            slot = 28 * self.vbuf[i] + p
            self.cid[slot] = k
            if self.lazy:
                self.touched[self.ntouched] = slot
                self.ntouched += 1
        self.visits += self.w_len
        self.nch += 1
        return k

    @cython.cfunc
    def _chain_other(self, v: cython.int, a: cython.int, b: cython.int) -> cython.int:
        # other endpoint of the (a,b)-chain at endpoint v; -1 on a cycle
        k: cython.int = self._cq(v, a, b)
        if self.rec[4 * k + 2]:
            return -1
        if self.rec[4 * k] == v:
            return self.rec[4 * k + 1]
        return self.rec[4 * k]

    @cython.cfunc
    def _is_cycle(self, v: cython.int, a: cython.int, b: cython.int) -> cython.bint:
        k: cython.int = self._cq(v, a, b)
        return self.rec[4 * k + 2] != 0

    def index_build_all(self):
        """Populate every (vertex, pair) record; returns the chain count."""
        v: cython.int
        a: cython.int
        b: cython.int
        for a in range(1, 9):
            for b in range(a + 1, 9):
                for v in range(self.n):
                    self._cq(v, a, b)
        return self.nch

    def chain_query(self, v, a, b):
        k = self._cq(v, a, b)
        return (k, self.rec[4 * k], self.rec[4 * k + 1], bool(self.rec[4 * k + 2]))

    # ------------------------------------------------------------------
    # reducible edges
    @cython.cfunc
    @cython.exceptval(check=False)
    def _count8(self, v: cython.int) -> cython.int:
        s: cython.int
        k: cython.int = 0
        b: cython.int = 8 * v
        if self.have_c8:
            return self.c8[v]
        for s in range(self.deg[v]):
            if self.deg[self.nbr[b + s]] == 8:
                k += 1
        return k

    @cython.cfunc
    @cython.exceptval(check=False)
    def _weak_end(self, e: cython.int) -> cython.int:
        x: cython.int = self.eu[e]
        y: cython.int = self.ev[e]
        dx: cython.int = self.deg[x]
        dy: cython.int = self.deg[y]
        if self._count8(x) <= 8 - dy + (1 if dy == 8 else 0):
            return x
        if self._count8(y) <= 8 - dx + (1 if dx == 8 else 0):
            return y
        return -1

    @cython.cfunc
    @cython.exceptval(check=False)
    def _adj(self, u: cython.int, v: cython.int) -> cython.bint:
        return self._edge(u, v) >= 0

    @cython.cfunc
    @cython.exceptval(check=False)
    def _two_others(self, y: cython.int, x: cython.int, out: cython.int) -> cython.bint:
        # the two neighbours of 3-vertex y other than x, stored at sbuf[out..out+1];
        # both must be 8-vertices adjacent to x
        s: cython.int
        k: cython.int = 0
        w: cython.int
        for s in range(3):
            w = self.nbr[8 * y + s]
            if w == x:
                continue
            if self.deg[w] != 8 or not self._adj(x, w):
                return False
            self.sbuf[out + k] = w
            k += 1
        return k == 2

    @cython.cfunc
    @cython.exceptval(check=False)
    def _bfly(self, e: cython.int) -> cython.int:
        """Butterfly witness for e into sbuf[0..7]: kind, x, y, z, v1..v4.

        kind is 1 (B1), 2 (B2) or 0 when e is not butterfly-like.
        """
        o: cython.int
        x: cython.int
        y: cython.int
        z: cython.int
        s: cython.int
        p: cython.int
        q: cython.int
        r: cython.int
        t: cython.int
        have2: cython.bint
        sh: cython.int
        for o in range(2):
            if o == 0:
                x = self.eu[e]
                y = self.ev[e]
            else:
                x = self.ev[e]
                y = self.eu[e]
            if self.deg[x] != 8 or self.deg[y] != 3:
                continue
            if not self._two_others(y, x, 8):
                continue
            p = self.sbuf[8]
            q = self.sbuf[9]
            have2 = False
            for s in range(8):
                z = self.nbr[8 * x + s]
                if z == y or self.deg[z] != 3:
                    continue
                if not self._two_others(z, x, 10):
                    continue
                r = self.sbuf[10]
                t = self.sbuf[11]
                sh = (1 if (r == p or r == q) else 0) + (1 if (t == p or t == q) else 0)
                if sh == 1:
                    # shared v1; v3 is y's other neighbour, v2 is z's
                    self.sbuf[0] = 1
                    self.sbuf[1] = x
                    self.sbuf[2] = y
                    self.sbuf[3] = z
                    if r == p or r == q:
                        self.sbuf[4] = r
                        self.sbuf[5] = t
                    else:
                        self.sbuf[4] = t
                        self.sbuf[5] = r
                    self.sbuf[6] = q if self.sbuf[4] == p else p
                    self.sbuf[7] = -1
                    return 1
                if sh == 0 and not have2:
                    have2 = True
                    self.sbuf[12] = z
                    self.sbuf[13] = r
                    self.sbuf[14] = t
            if have2:
                self.sbuf[0] = 2
                self.sbuf[1] = x
                self.sbuf[2] = y
                self.sbuf[3] = self.sbuf[12]
                self.sbuf[4] = p
                self.sbuf[5] = self.sbuf[13]
                self.sbuf[6] = self.sbuf[14]
                self.sbuf[7] = q
                return 2
        return 0

    def weak_end(self, e):
        return self._weak_end(e)

    def butterfly(self, e):
        """(kind, x, y, z, v1, v2, v3, v4) or None."""
        k = self._bfly(e)
        if k == 0:
            return None
        return tuple(int(self.sbuf[i]) for i in range(8))

    def scan(self, edges, outw, outb):
        """Split `edges` into weak and butterfly-like; returns the two counts."""
        i: cython.int
        e: cython.int
        nw: cython.int = 0
        nb: cython.int = 0
        ed: cython.int[:] = edges
        ow: cython.int[:] = outw
        ob: cython.int[:] = outb
        for i in range(ed.shape[0]):
            e = ed[i]
            if self._weak_end(e) >= 0:
                ow[nw] = e
                nw += 1
            if self._bfly(e) > 0:
                ob[nb] = e
                nb += 1
        return nw, nb

    # ------------------------------------------------------------------
    # independence filters
    @cython.cfunc
    def _ball(self, u: cython.int, v: cython.int, radius: cython.int) -> cython.void:
        # stamp every vertex within `radius` of {u, v} with vtok
        h: cython.int = 0
        t: cython.int = 0
        w: cython.int
        s: cython.int
        z: cython.int
        self.btok += 1
        self.bst[u] = self.btok
        self.dd[u] = 0
        self.queue[t] = u
        t += 1
        if self.bst[v] != self.btok:
            self.bst[v] = self.btok
            self.dd[v] = 0
            self.queue[t] = v
            t += 1
        while h < t:
            w = self.queue[h]
            h += 1
            self.vst[w] = self.vtok
            if self.dd[w] >= radius:
                continue
            for s in range(self.deg[w]):
                z = self.nbr[8 * w + s]
                if self.bst[z] != self.btok:
                    self.bst[z] = self.btok
                    self.dd[z] = self.dd[w] + 1
                    self.queue[t] = z
                    t += 1

    def filter_independent(self, cands, out, radius=4):
        """Greedy scan keeping edges whose endpoints are farther than `radius`
        from every kept edge; returns the number written to `out`."""
        i: cython.int
        e: cython.int
        u: cython.int
        v: cython.int
        k: cython.int = 0
        rad: cython.int = radius
        cd: cython.int[:] = cands
        ot: cython.int[:] = out
        self.vtok += 1
        for i in range(cd.shape[0]):
            e = cd[i]
            u = self.eu[e]
            v = self.ev[e]
            if self.vst[u] == self.vtok or self.vst[v] == self.vtok:
                continue
            ot[k] = e
            k += 1
            self._ball(u, v, rad)
        return k

    # ------------------------------------------------------------------
    # butterfly classification
    @cython.cfunc
    @cython.exceptval(check=False)
    def _rinit(self, row: cython.int[:], e: cython.int) -> cython.void:
        i: cython.int
        for i in range(_ROW):
            row[i] = 0
        for i in range(5, 11):
            row[i] = -1
        row[44] = e

    @cython.cfunc
    @cython.exceptval(check=False)
    def _rstep(self, row: cython.int[:], op: cython.int, p: cython.int, q: cython.int) -> cython.void:
        k: cython.int = row[11]
        row[12 + 3 * k] = op
        row[13 + 3 * k] = p
        row[14 + 3 * k] = q
        row[11] = k + 1

    @cython.cfunc
    @cython.exceptval(check=False)
    def _rtype(self, row: cython.int[:], tag: cython.int, a: cython.int, b: cython.int,
               c: cython.int, d: cython.int) -> cython.void:
        row[0] = tag
        row[1] = a
        row[2] = b
        row[3] = c
        row[4] = d

    @cython.cfunc
    @cython.exceptval(check=False)
    def _near_colored(self, x: cython.int, y: cython.int, e: cython.int) -> cython.bint:
        s: cython.int
        if cython.cast(cython.int, self.color[e]) != 0:
            return False
        if not self._saturated(x, e) or not self._saturated(y, e):
            return False
        for s in range(self.deg[x]):
            if not self._saturated(self.nbr[8 * x + s], e):
                return False
        for s in range(self.deg[y]):
            if not self._saturated(self.nbr[8 * y + s], e):
                return False
        return True

    @cython.cfunc
    def _classify_b1(self, e: cython.int, row: cython.int[:], x: cython.int, y: cython.int,
                     z: cython.int, v1: cython.int, v2: cython.int, v3: cython.int,
                     f: cython.int) -> cython.int:
        xz: cython.int = self._edge(x, z)
        xv1: cython.int = self._edge(x, v1)
        xv2: cython.int = self._edge(x, v2)
        xv3: cython.int = self._edge(x, v3)
        yv1: cython.int = self._edge(y, v1)
        yv3: cython.int = self._edge(y, v3)
        zv1: cython.int = self._edge(z, v1)
        zv2: cython.int = self._edge(z, v2)
        a: cython.int = cython.cast(cython.int, self.color[xz])
        b: cython.int = cython.cast(cython.int, self.color[xv1])
        c: cython.int = cython.cast(cython.int, self.color[xv2])
        d: cython.int = cython.cast(cython.int, self.color[xv3])
        Y1: cython.int = cython.cast(cython.int, self.color[yv1])
        Y3: cython.int = cython.cast(cython.int, self.color[yv3])
        Z1: cython.int = cython.cast(cython.int, self.color[zv1])
        Z2: cython.int = cython.cast(cython.int, self.color[zv2])
        self._rtype(row, _T0, 0, 0, 0, 0)
        row[5] = x
        row[6] = y
        row[7] = z
        row[9] = v1
        row[10] = v2
        row[8] = v3
        if not self._has(y, f):
            self._rstep(row, _ASSIGN, e, f)
        elif not self._has(z, f):
            if not self._has(y, a):
                self._rstep(row, _RECOLOR, xz, f)
                self._rstep(row, _ASSIGN, e, a)
            elif Y1 == f:
                self._rstep(row, _SWAP, yv1, zv1)
                self._rstep(row, _ASSIGN, e, f)
            else:
                self._rstep(row, _SWAP, yv1, zv1)
                self._rstep(row, _RECOLOR, xz, f)
                self._rstep(row, _ASSIGN, e, a)
        elif Y3 == f and Z1 == f:
            if Z2 != b:
                self._rstep(row, _SWAP, xv1, zv1)
                self._rstep(row, _ASSIGN, e, b)
            elif Y1 != c:
                self._rstep(row, _SWAP, xv1, zv1)
                self._rstep(row, _SWAP, xv2, zv2)
                self._rstep(row, _ASSIGN, e, c)
            else:
                self._rstep(row, _SWAP, xv3, yv3)
                self._rstep(row, _RECOLOR, xz, d)
                self._rstep(row, _ASSIGN, e, a)
        elif Y3 == f and Z2 == f:
            if Z1 == c:
                self._rstep(row, _SWAP, xv1, zv1)
                self._rstep(row, _SWAP, xv2, zv2)
                self._rstep(row, _ASSIGN, e, b)
            elif Y1 == c:
                self._rstep(row, _SWAP, yv1, zv1)
                self._rstep(row, _SWAP, xv1, zv1)
                self._rstep(row, _SWAP, xv2, zv2)
                self._rstep(row, _ASSIGN, e, b)
            else:
                self._rstep(row, _SWAP, xv2, zv2)
                self._rstep(row, _ASSIGN, e, c)
        elif Y1 == f and Z2 == f:
            if Y3 == c:
                self._rstep(row, _SWAP, xv1, yv1)
                self._rstep(row, _RECOLOR, xz, b)
                self._rstep(row, _ASSIGN, e, a)
            elif Z1 != c:
                self._rstep(row, _SWAP, xv2, zv2)
                self._rstep(row, _ASSIGN, e, c)
            elif Y3 != b:
                self._rstep(row, _SWAP, xv1, zv1)
                self._rstep(row, _SWAP, xv2, zv2)
                self._rstep(row, _ASSIGN, e, b)
            else:
                self._rstep(row, _SWAP, xv1, yv1)
                self._rstep(row, _SWAP, xv3, yv3)
                self._rstep(row, _RECOLOR, xz, d)
                self._rstep(row, _ASSIGN, e, a)
        else:
            return _E_INTERNAL
        return _OK

    @cython.cfunc
    def _classify_b2(self, e: cython.int, row: cython.int[:], x: cython.int, y: cython.int,
                     z: cython.int, v1: cython.int, v2: cython.int, v3: cython.int,
                     v4: cython.int, f: cython.int) -> cython.int:
        t: cython.int
        k: cython.int
        km: cython.int
        a: cython.int
        b: cython.int
        c: cython.int
        d: cython.int
        row[5] = x
        row[6] = y
        if not self._has(y, f):
            self._rtype(row, _T0, 0, 0, 0, 0)
            self._rstep(row, _ASSIGN, e, f)
            return _OK
        if self._col(y, v1) != f:
            t = v1
            v1 = v4
            v4 = t
            t = v2
            v2 = v3
            v3 = t
        km = self._free(y)
        for k in range(1, 9):
            if (km >> (k - 1)) & 1:
                if self._chain_other(y, f, k) != x:
                    self._rtype(row, _T1, f, k, 0, 0)
                    return _OK
        a = self._col(x, z)
        b = self._col(x, v1)
        c = self._col(x, v2)
        d = self._col(x, v3)
        row[7] = z
        if self._col(y, v4) != a:
            if not self._has(z, f):
                self._rtype(row, _T0, 0, 0, 0, 0)
                self._rstep(row, _RECOLOR, self._edge(x, z), f)
                self._rstep(row, _ASSIGN, e, a)
                return _OK
            km = cython.cast(cython.int, self.mask[x]) & self._free(y) & self._free(z)
            k = _lowc(km)
            if k == 0:
                return _E_INTERNAL
            self._rtype(row, _T3, f, k, 0, 0)
            row[43] = a
            return _OK
        km = self._free(y)
        for k in range(1, 9):
            if k != b and (km >> (k - 1)) & 1:
                if not self._is_cycle(x, b, k):
                    self._rtype(row, _T2, b, k, 0, 0)
                    row[7] = v1
                    row[43] = f
                    return _OK
        if self._has(z, f):
            if self._col(z, v3) == f:
                t = v2
                v2 = v3
                v3 = t
                t = c
                c = d
                d = t
            if self._col(z, v3) != c:
                self._rtype(row, _T0, 0, 0, 0, 0)
                self._rstep(row, _SWAP, self._edge(x, v2), self._edge(z, v2))
                self._rstep(row, _ASSIGN, e, c)
                return _OK
            self._rtype(row, _T4, c, b, 0, 0)
            row[8] = v2
            row[43] = f
            return _OK
        if self._col(z, v3) != c:
            self._rtype(row, _T5, self._col(z, v2), f, 0, 0)
            row[8] = v2
            row[43] = c
            return _OK
        if self._col(z, v2) != d:
            self._rtype(row, _T5, c, f, 0, 0)
            row[8] = v3
            row[43] = d
            return _OK
        self._rtype(row, _T6, d, f, c, b)
        row[9] = v2
        row[10] = v3
        return _OK

    @cython.cfunc
    def _classify_bfly(self, e: cython.int, row: cython.int[:]) -> cython.int:
        kind: cython.int
        x: cython.int
        y: cython.int
        f: cython.int
        self._rinit(row, e)
        kind = self._bfly(e)
        if kind == 0:
            return _E_NOTBFLY
        x = self.sbuf[1]
        y = self.sbuf[2]
        row[42] = kind
        if not self._near_colored(x, y, e):
            return _E_PRECOND
        f = _lowc(self._free(x))
        if kind == 1:
            return self._classify_b1(e, row, x, y, self.sbuf[3], self.sbuf[4],
                                     self.sbuf[5], self.sbuf[6], f)
        return self._classify_b2(e, row, x, y, self.sbuf[3], self.sbuf[4],
                                 self.sbuf[5], self.sbuf[6], self.sbuf[7], f)

    # ------------------------------------------------------------------
    # weak edges: multifan at the weak endpoint
    @cython.cfunc
    @cython.exceptval(check=False)
    def _rotate(self, row: cython.int[:], t: cython.int, lam: cython.int) -> cython.void:
        # fan vertex i: sbuf[32+i] vertex, sbuf[40+i] x-edge, sbuf[48+i] parent
        u: cython.int = t
        newc: cython.int = lam
        oldc: cython.int
        p: cython.int
        while True:
            p = self.sbuf[48 + u]
            if p < 0:
                self._rstep(row, _ASSIGN, self.sbuf[40 + u], newc)
                return
            oldc = cython.cast(cython.int, self.color[self.sbuf[40 + u]])
            self._rstep(row, _RECOLOR, self.sbuf[40 + u], newc)
            newc = oldc
            u = p

    @cython.cfunc
    def _classify_weak(self, e: cython.int, row: cython.int[:]) -> cython.int:
        x: cython.int
        y: cython.int
        fx: cython.int
        k: cython.int
        i: cython.int
        j: cython.int
        cm: cython.int
        union: cython.int = 0
        usedx: cython.int = 0
        g: cython.int
        w: cython.int
        ew: cython.int
        alpha: cython.int
        beta: cython.int
        oth: cython.int
        t: cython.int
        self._rinit(row, e)
        x = self._weak_end(e)
        if x < 0:
            return _E_NOTWEAK
        y = self._other(e, x)
        if cython.cast(cython.int, self.color[e]) != 0 or not self._saturated(x, e):
            return _E_PRECOND
        row[5] = x
        row[6] = y
        fx = self._free(x)
        self.sbuf[32] = y
        self.sbuf[40] = e
        self.sbuf[48] = -1
        self.sbuf[56] = self._free(y)
        k = 1
        while True:
            i = k - 1
            cm = self.sbuf[56 + i] & fx
            if cm:
                self._rtype(row, _FAN, 0, 0, 0, 0)
                row[7] = self.sbuf[32 + i]
                self._rotate(row, i, _lowc(cm))
                return _OK
            cm = self.sbuf[56 + i] & union
            if cm:
                beta = _lowc(cm)
                j = 0
                while not ((self.sbuf[56 + j] >> (beta - 1)) & 1):
                    j += 1
                alpha = _lowc(fx)
                oth = self._chain_other(x, alpha, beta)
                t = i if oth == self.sbuf[32 + j] else j
                self._rtype(row, _AB, alpha, beta, 0, 0)
                row[7] = self.sbuf[32 + t]
                self._rotate(row, t, alpha)
                return _OK
            union |= self.sbuf[56 + i]
            g = _lowc(union & (0xFF ^ usedx))
            if g == 0 or k >= 8:
                return _E_FAN
            usedx |= 1 << (g - 1)
            ew = self.at[8 * x + g - 1]
            w = self._other(ew, x)
            j = 0
            while not ((self.sbuf[56 + j] >> (g - 1)) & 1):
                j += 1
            self.sbuf[32 + k] = w
            self.sbuf[40 + k] = ew
            self.sbuf[48 + k] = j
            self.sbuf[56 + k] = self._free(w)
            k += 1

    def classify(self, edges, rows, weak):
        """Classify every edge of `edges` into `rows`; returns (status, index)."""
        i: cython.int
        st: cython.int
        wk: cython.bint = weak
        ed: cython.int[:] = edges
        rw: cython.int[:, :] = rows
        for i in range(ed.shape[0]):
            if wk:
                st = self._classify_weak(ed[i], rw[i])
            else:
                st = self._classify_bfly(ed[i], rw[i])
            if st != _OK:
                return st, i
        return _OK, -1

    # ------------------------------------------------------------------
    # plans
    @cython.cfunc
    @cython.exceptval(check=False)
    def _pstep(self, plan: cython.int[:], op: cython.int, p: cython.int, q: cython.int) -> cython.void:
        k: cython.int = plan[8]
        plan[9 + 3 * k] = op
        plan[10 + 3 * k] = p
        plan[11 + 3 * k] = q
        plan[8] = k + 1

    @cython.cfunc
    @cython.exceptval(check=False)
    def _pchain(self, plan: cython.int[:], v: cython.int, a: cython.int, b: cython.int) -> cython.void:
        k: cython.int = plan[1]
        plan[2 + 3 * k] = v
        plan[3 + 3 * k] = a
        plan[4 + 3 * k] = b
        plan[1] = k + 1

    @cython.cfunc
    def _plan(self, row: cython.int[:], plan: cython.int[:]) -> cython.int:
        i: cython.int
        tag: cython.int = row[0]
        e: cython.int = row[44]
        x: cython.int = row[5]
        y: cython.int = row[6]
        z: cython.int = row[7]
        v: cython.int = row[8]
        a: cython.int = row[1]
        b: cython.int = row[2]
        for i in range(_PLAN):
            plan[i] = 0
        plan[0] = e
        if tag == _T0 or tag == _FAN or tag == _AB:
            if tag == _AB:
                self._pchain(plan, z, a, b)
            for i in range(row[11]):
                self._pstep(plan, row[12 + 3 * i], row[13 + 3 * i], row[14 + 3 * i])
        elif tag == _T1:
            self._pchain(plan, y, a, b)
            self._pstep(plan, _ASSIGN, e, a)
        elif tag == _T3:
            self._pchain(plan, z, a, b)
            self._pstep(plan, _RECOLOR, self._edge(x, z), a)
            self._pstep(plan, _ASSIGN, e, row[43])
        elif tag == _T4:
            self._pchain(plan, z, a, b)
            self._pstep(plan, _SWAP, self._edge(x, v), self._edge(z, v))
            self._pstep(plan, _ASSIGN, e, a)
        elif tag == _T5:
            self._pchain(plan, z, a, b)
            self._pstep(plan, _SWAP, self._edge(x, v), self._edge(z, v))
            self._pstep(plan, _ASSIGN, e, row[43])
        elif tag == _T6:
            self._pchain(plan, z, a, b)
            self._pchain(plan, z, row[3], row[4])
            self._pstep(plan, _SWAP, self._edge(x, row[9]), self._edge(z, row[9]))
            self._pstep(plan, _ASSIGN, e, row[3])
        else:
            return _E_UNSUPPORTED
        return _OK

    def plans(self, rows, plans):
        i: cython.int
        st: cython.int
        rw: cython.int[:, :] = rows
        pl: cython.int[:, :] = plans
        for i in range(rw.shape[0]):
            st = self._plan(rw[i], pl[i])
            if st != _OK:
                return st, i
        return _OK, -1

    @cython.cfunc
    @cython.exceptval(check=False)
    def _mark(self, e: cython.int, base: cython.int, tok: cython.int, debug: cython.bint) -> cython.bint:
        # False when e was already recolored by an earlier plan of this batch
        if debug and self.est[e] >= base and self.est[e] != tok:
            return False
        self.est[e] = tok
        return True

    @cython.cfunc
    def _exec_one(self, plan: cython.int[:], base: cython.int, tok: cython.int,
                  debug: cython.bint) -> cython.int:
        i: cython.int
        j: cython.int
        k: cython.int
        op: cython.int
        p: cython.int
        q: cython.int
        t: cython.int
        nt: cython.int = 0
        ne: cython.int
        i_p: cython.int
        i_q: cython.int
        # sbuf[64..87] touched edges, sbuf[96..119] their simulated colors
        for i in range(plan[1]):
            ne = self._kempe(plan[2 + 3 * i], plan[3 + 3 * i], plan[4 + 3 * i])
            self.last_recolored += ne
            for j in range(ne):
                if not self._mark(self.ebuf[j], base, tok, debug):
                    return _E_COHERENCE
        for i in range(plan[8]):
            op = plan[9 + 3 * i]
            p = plan[10 + 3 * i]
            q = plan[11 + 3 * i]
            for k in range(2 if op == _SWAP else 1):
                t = p if k == 0 else q
                j = 0
                while j < nt and self.sbuf[64 + j] != t:
                    j += 1
                if j == nt:
                    if nt >= 24:
                        return _E_INTERNAL
                    self.sbuf[64 + nt] = t
                    self.sbuf[96 + nt] = cython.cast(cython.int, self.color[t])
                    nt += 1
            if op == _SWAP:
                i_p = 0
                i_q = 0
                while self.sbuf[64 + i_p] != p:
                    i_p += 1
                while self.sbuf[64 + i_q] != q:
                    i_q += 1
                t = self.sbuf[96 + i_p]
                self.sbuf[96 + i_p] = self.sbuf[96 + i_q]
                self.sbuf[96 + i_q] = t
            else:
                j = 0
                while self.sbuf[64 + j] != p:
                    j += 1
                self.sbuf[96 + j] = q
        for j in range(nt):
            if not self._mark(self.sbuf[64 + j], base, tok, debug):
                return _E_COHERENCE
            self._clear(self.sbuf[64 + j])
        for j in range(nt):
            t = self.sbuf[64 + j]
            if self.sbuf[96 + j] > 0:
                if not self._can(t, self.sbuf[96 + j]):
                    return _E_CONFLICT
                self._set(t, self.sbuf[96 + j])
        self.last_recolored += nt
        if cython.cast(cython.int, self.color[plan[0]]) == 0:
            return _E_INCOMPLETE
        return _OK

    def execute(self, plans, debug=False):
        """Run plans in order; returns (status, index of the failing plan)."""
        i: cython.int
        st: cython.int
        pl: cython.int[:, :] = plans
        base: cython.int
        dbg: cython.bint = debug
        if self.etok > 2000000000:
            np.asarray(self.est).fill(0)
            self.etok = 0
        base = self.etok + 1
        self.last_recolored = 0
        for i in range(pl.shape[0]):
            st = self._exec_one(pl[i], base, base + i, dbg)
            if st != _OK:
                self.etok = base + pl.shape[0]
                return st, i
        self.etok = base + pl.shape[0]
        return _OK, -1

    # ------------------------------------------------------------------
    # type-2 elimination
    @cython.cfunc
    def _t2_ok(self, x: cython.int, y: cython.int, z: cython.int, a: cython.int,
               b: cython.int, c: cython.int) -> cython.bint:
        if c == b or c == a or not ((self._free(x) >> (c - 1)) & 1):
            return False
        if self._col(x, z) != a or self._col(y, z) != c:
            return False
        return not self._is_cycle(x, a, b)

    def eliminate_type2(self, rows):
        """Swap yz and xz for each type-2 row; rows become type 1 in place.

        Returns (status, index)."""
        i: cython.int
        s: cython.int
        x: cython.int
        y: cython.int
        z: cython.int
        a: cython.int
        b: cython.int
        c: cython.int
        w: cython.int
        exz: cython.int
        eyz: cython.int
        found: cython.bint
        rw: cython.int[:, :] = rows
        for i in range(rw.shape[0]):
            x = rw[i, 5]
            y = rw[i, 6]
            z = rw[i, 7]
            a = rw[i, 1]
            b = rw[i, 2]
            c = rw[i, 43]
            if not ((self._free(y) >> (a - 1)) & 1 and (self._free(y) >> (b - 1)) & 1):
                return _E_WITNESS, i
            found = z >= 0 and self._col(y, z) == c and self._t2_ok(x, y, z, a, b, c)
            if not found:
                for s in range(self.deg[x]):
                    w = self.nbr[8 * x + s]
                    if w == y or not self._adj(w, y):
                        continue
                    c = self._col(y, w)
                    if c > 0 and self._t2_ok(x, y, w, a, b, c):
                        z = w
                        found = True
                        break
            if not found:
                return _E_WITNESS, i
            exz = self._edge(x, z)
            eyz = self._edge(y, z)
            self._clear(exz)
            self._clear(eyz)
            self._set(eyz, a)
            self._set(exz, c)
            rw[i, 0] = _T1
            rw[i, 7] = z
            rw[i, 43] = c
        return _OK, -1

    # ------------------------------------------------------------------
    # chain independence
    @cython.cfunc
    def _near_hits(self, v: cython.int, a: cython.int, b: cython.int,
                   own: cython.int) -> cython.bint:
        # does the (a,b)-chain ending at v end at a vertex marked by another edge
        k: cython.int = self._cq(v, a, b)
        w: cython.int
        if self.rec[4 * k + 2]:
            return False
        if self.rec[4 * k] == v:
            w = self.rec[4 * k + 1]
        elif self.rec[4 * k + 1] == v:
            w = self.rec[4 * k]
        else:
            return False
        return w != v and self.vst[w] == self.vtok and self.vown[w] != own

    @cython.cfunc
    def _dependent(self, e: cython.int, a: cython.int, b: cython.int,
                   own: cython.int) -> cython.bint:
        x: cython.int = self.eu[e]
        y: cython.int = self.ev[e]
        s: cython.int
        if self._near_hits(x, a, b, own) or self._near_hits(y, a, b, own):
            return True
        for s in range(self.deg[x]):
            if self._near_hits(self.nbr[8 * x + s], a, b, own):
                return True
        for s in range(self.deg[y]):
            if self._near_hits(self.nbr[8 * y + s], a, b, own):
                return True
        return False

    @cython.cfunc
    @cython.exceptval(check=False)
    def _stamp_near(self, e: cython.int, own: cython.int) -> cython.void:
        x: cython.int = self.eu[e]
        y: cython.int = self.ev[e]
        s: cython.int
        w: cython.int
        self.vst[x] = self.vtok
        self.vown[x] = own
        self.vst[y] = self.vtok
        self.vown[y] = own
        for s in range(self.deg[x]):
            w = self.nbr[8 * x + s]
            self.vst[w] = self.vtok
            self.vown[w] = own
        for s in range(self.deg[y]):
            w = self.nbr[8 * y + s]
            self.vst[w] = self.vtok
            self.vown[w] = own

    def filter_chains(self, rows, out):
        """Greedy chain-independence filter over same-type rows.

        Writes accepted row indices to `out` and returns their number."""
        i: cython.int
        k: cython.int = 0
        tag: cython.int
        e: cython.int
        rw: cython.int[:, :] = rows
        ot: cython.int[:] = out
        self.vtok += 1
        for i in range(rw.shape[0]):
            tag = rw[i, 0]
            e = rw[i, 44]
            if tag != _T0 and tag != _FAN:
                if self._dependent(e, rw[i, 1], rw[i, 2], i + 1):
                    continue
                if tag == _T6 and self._dependent(e, rw[i, 3], rw[i, 4], i + 1):
                    continue
            ot[k] = i
            k += 1
            self._stamp_near(e, i + 1)
        return k

    # ------------------------------------------------------------------
    # peeling (the working graph is mutated in place)
    def peel_init(self):
        v: cython.int
        self.ealive = np.ones(self.m, dtype=np.int8)
        self.bufw = np.zeros(self.m + 1, dtype=np.int32)
        self.bufb = np.zeros(self.m + 1, dtype=np.int32)
        self.nvact = 0
        self.have_c8 = False
        self.c8 = np.zeros(self.n + 1, dtype=np.int32)
        for v in range(self.n):
            if self.deg[v] > 0:
                self.nvact += 1
            self.c8[v] = self._count8(v)
        self.have_c8 = True

    @cython.cfunc
    @cython.exceptval(check=False)
    def _c8_add(self, v: cython.int, delta: cython.int) -> cython.void:
        # v just became (delta=1) or stopped being (delta=-1) an 8-vertex
        s: cython.int
        b: cython.int = 8 * v
        for s in range(self.deg[v]):
            self.c8[self.nbr[b + s]] += delta

    @cython.cfunc
    @cython.exceptval(check=False)
    def _unlink(self, v: cython.int, e: cython.int) -> cython.void:
        b: cython.int = 8 * v
        s: cython.int
        last: cython.int = self.deg[v] - 1
        for s in range(self.deg[v]):
            if self.inc[b + s] == e:
                self.inc[b + s] = self.inc[b + last]
                self.nbr[b + s] = self.nbr[b + last]
                self.inc[b + last] = -1
                self.nbr[b + last] = -1
                break
        self.deg[v] = last
        if last == 0:
            self.nvact -= 1

    @cython.cfunc
    @cython.exceptval(check=False)
    def _link(self, v: cython.int, w: cython.int, e: cython.int) -> cython.void:
        b: cython.int = 8 * v
        if self.deg[v] == 0:
            self.nvact += 1
        self.inc[b + self.deg[v]] = e
        self.nbr[b + self.deg[v]] = w
        self.deg[v] += 1

    @cython.cfunc
    @cython.exceptval(check=False)
    def _remove(self, e: cython.int) -> cython.void:
        u: cython.int = self.eu[e]
        v: cython.int = self.ev[e]
        if self.have_c8:
            if self.deg[u] == 8:
                self._c8_add(u, -1)
            if self.deg[v] == 8:
                self._c8_add(v, -1)
        self._unlink(u, e)
        self._unlink(v, e)
        self.ealive[e] = 0

    @cython.cfunc
    @cython.exceptval(check=False)
    def _restore(self, e: cython.int) -> cython.void:
        u: cython.int = self.eu[e]
        v: cython.int = self.ev[e]
        self._link(u, v, e)
        self._link(v, u, e)
        self.ealive[e] = 1
        if self.have_c8:
            if self.deg[u] == 8:
                self._c8_add(u, 1)
            if self.deg[v] == 8:
                self._c8_add(v, 1)

    def remove_edges(self, edges):
        i: cython.int
        ed: cython.int[:] = edges
        for i in range(ed.shape[0]):
            self._remove(ed[i])

    def restore_edges(self, edges):
        i: cython.int
        ed: cython.int[:] = edges
        for i in range(ed.shape[0]):
            self._restore(ed[i])

    def active_vertices(self):
        return self.nvact

    def peel_level(self, act, nact, out, base):
        """One peeling level over the first `nact` entries of `act`.

        Picks the larger of the weak and butterfly-like sets, writes a greedy
        4-independent subset to `out`, removes it from the working graph and
        compacts `act`.  Returns (|I|, |E_w|, |E_b|, kind, new nact) with kind
        0 for weak and 1 for butterfly; |I| = 0 means no reducible edge.
        """
        i: cython.int
        e: cython.int
        k: cython.int = 0
        nw: cython.int = 0
        nb: cython.int = 0
        na: cython.int = nact
        kind: cython.int
        u: cython.int
        v: cython.int
        ac: cython.int[:] = act
        ot: cython.int[:] = out
        src: cython.int[:]
        nsrc: cython.int
        k2: cython.int
        for i in range(na):
            e = ac[i]
            if self._weak_end(e) >= 0:
                self.bufw[nw] = e
                nw += 1
            if self._bfly(e) > 0:
                self.bufb[nb] = e
                nb += 1
        if nw == 0 and nb == 0:
            return 0, 0, 0, -1, na
        if nw >= nb:
            src = self.bufw
            nsrc = nw
            kind = 0
        else:
            src = self.bufb
            nsrc = nb
            kind = 1
        if self.nvact <= base:
            ot[0] = src[0]
            k = 1
        else:
            self.vtok += 1
            for i in range(nsrc):
                e = src[i]
                u = self.eu[e]
                v = self.ev[e]
                if self.vst[u] == self.vtok or self.vst[v] == self.vtok:
                    continue
                ot[k] = e
                k += 1
                self._ball(u, v, 4)
        for i in range(k):
            self._remove(ot[i])
        k2 = 0
        for i in range(na):
            e = ac[i]
            if self.ealive[e]:
                ac[k2] = e
                k2 += 1
        return k, nw, nb, kind, k2
