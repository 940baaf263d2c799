"""Left-right planarity test with embedding (Brandes' formulation).

Three DFS passes over an undirected simple graph: orientation with
lowpoints and nesting depths, the constraint test over a stack of conflict
pairs, and, for planar inputs, construction of a rotation system.  All
passes are iterative so deep DFS trees do not hit the recursion limit.
"""

from __future__ import annotations

from collections.abc import Sequence

Edge = tuple[int, int]


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low: Edge | None = None, high: Edge | None = None) -> None:
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> _Interval:
        return _Interval(self.low, self.high)

    def conflicting(self, b: Edge, lowpt: dict) -> bool:
        return not self.empty() and lowpt[self.high] > lowpt[b]


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left: _Interval | None = None, right: _Interval | None = None) -> None:
        self.left = left or _Interval()
        self.right = right or _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left

    def lowest(self, lowpt: dict) -> int:
        if self.left.empty():
            return lowpt[self.right.low]
        if self.right.empty():
            return lowpt[self.left.low]
        return min(lowpt[self.left.low], lowpt[self.right.low])


class _Rotation:
    """Cyclic neighbour orders under incremental insertion."""

    def __init__(self, n: int) -> None:
        self.cw: list[dict[int, int]] = [{} for _ in range(n)]
        self.ccw: list[dict[int, int]] = [{} for _ in range(n)]
        self.first: list[int | None] = [None] * n

    def add_cw(self, v: int, w: int, ref: int | None) -> None:
        """Insert ``w`` right after ``ref`` (clockwise) around ``v``."""
        cw, ccw = self.cw[v], self.ccw[v]
        if ref is None:
            cw[w] = ccw[w] = w
            self.first[v] = w
            return
        nxt = cw[ref]
        cw[ref] = w
        cw[w] = nxt
        ccw[nxt] = w
        ccw[w] = ref

    def add_ccw(self, v: int, w: int, ref: int | None) -> None:
        """Insert ``w`` right before ``ref`` around ``v``."""
        if ref is None:
            self.add_cw(v, w, None)
            return
        self.add_cw(v, w, self.ccw[v][ref])
        if ref == self.first[v]:
            self.first[v] = w

    def add_first(self, v: int, w: int) -> None:
        self.add_ccw(v, w, self.first[v])

    def orders(self) -> list[list[int]]:
        out = []
        for v, start in enumerate(self.first):
            seq = []
            if start is not None:
                w = start
                while True:
                    seq.append(w)
                    w = self.cw[v][w]
                    if w == start:
                        break
            out.append(seq)
        return out


class _LRState:
    def __init__(self, nbrs: Sequence[Sequence[int]]) -> None:
        n = len(nbrs)
        self.nbrs = nbrs
        self.height: list[int | None] = [None] * n
        self.parent_edge: list[Edge | None] = [None] * n
        self.lowpt: dict[Edge, int] = {}
        self.lowpt2: dict[Edge, int] = {}
        self.nesting: dict[Edge, int] = {}
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.roots: list[int] = []
        self.ordered: list[list[int]] = []
        self.S: list[_ConflictPair] = []
        self.stack_bottom: dict[Edge, _ConflictPair | None] = {}
        self.lowpt_edge: dict[Edge, Edge] = {}
        self.ref: dict[Edge, Edge | None] = {}
        self.side: dict[Edge, int] = {}

    def top(self) -> _ConflictPair | None:
        return self.S[-1] if self.S else None

    # -- phase 1 ----------------------------------------------------------

    def orient(self) -> None:
        n = len(self.nbrs)
        height, parent_edge = self.height, self.parent_edge
        lowpt, lowpt2, nesting = self.lowpt, self.lowpt2, self.nesting
        oriented: set[Edge] = set()
        descended: set[Edge] = set()
        ind = [0] * n
        for s in range(n):
            if height[s] is not None:
                continue
            height[s] = 0
            self.roots.append(s)
            stack = [s]
            while stack:
                v = stack.pop()
                e = parent_edge[v]
                adj = self.nbrs[v]
                while ind[v] < len(adj):
                    w = adj[ind[v]]
                    vw = (v, w)
                    if vw not in descended:
                        if vw in oriented or (w, v) in oriented:
                            ind[v] += 1
                            continue
                        oriented.add(vw)
                        self.out[v].append(w)
                        lowpt[vw] = lowpt2[vw] = height[v]
                        if height[w] is None:  # tree edge
                            parent_edge[w] = vw
                            height[w] = height[v] + 1
                            stack.append(v)
                            stack.append(w)
                            descended.add(vw)
                            break
                        lowpt[vw] = height[w]  # back edge
                    nesting[vw] = 2 * lowpt[vw] + (lowpt2[vw] < height[v])
                    if e is not None:
                        if lowpt[vw] < lowpt[e]:
                            lowpt2[e] = min(lowpt[e], lowpt2[vw])
                            lowpt[e] = lowpt[vw]
                        elif lowpt[vw] > lowpt[e]:
                            lowpt2[e] = min(lowpt2[e], lowpt[vw])
                        else:
                            lowpt2[e] = min(lowpt2[e], lowpt2[vw])
                    ind[v] += 1

    # -- phase 2 ----------------------------------------------------------

    def test(self) -> bool:
        self.ordered = [sorted(ws, key=lambda w, v=v: self.nesting[(v, w)]) for v, ws in enumerate(self.out)]
        n = len(self.nbrs)
        ind = [0] * n
        descended: set[Edge] = set()
        for s in self.roots:
            stack = [s]
            while stack:
                v = stack.pop()
                e = self.parent_edge[v]
                adj = self.ordered[v]
                paused = False
                while ind[v] < len(adj):
                    w = adj[ind[v]]
                    ei = (v, w)
                    if ei not in descended:
                        self.stack_bottom[ei] = self.top()
                        if ei == self.parent_edge[w]:
                            stack.append(v)
                            stack.append(w)
                            descended.add(ei)
                            paused = True
                            break
                        self.lowpt_edge[ei] = ei
                        self.S.append(_ConflictPair(right=_Interval(ei, ei)))
                    if self.lowpt[ei] < self.height[v]:
                        if w == adj[0]:
                            self.lowpt_edge[e] = self.lowpt_edge[ei]
                        elif not self._add_constraints(ei, e):
                            return False
                    ind[v] += 1
                if not paused and e is not None:
                    self._remove_back_edges(e)
        return True

    def _add_constraints(self, ei: Edge, e: Edge) -> bool:
        lowpt, ref = self.lowpt, self.ref
        P = _ConflictPair()
        # merge return edges of ei into P.right
        while True:
            Q = self.S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if lowpt[Q.right.low] > lowpt[e]:
                if P.right.empty():
                    P.right = Q.right.copy()
                else:
                    ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:
                ref[Q.right.low] = self.lowpt_edge[e]
            if self.top() is self.stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into P.left
        while self.S and (self.S[-1].left.conflicting(ei, lowpt) or self.S[-1].right.conflicting(ei, lowpt)):
            Q = self.S.pop()
            if Q.right.conflicting(ei, lowpt):
                Q.swap()
            if Q.right.conflicting(ei, lowpt):
                return False
            ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left = Q.left.copy()
            else:
                ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            self.S.append(P)
        return True

    def _remove_back_edges(self, e: Edge) -> None:
        u = e[0]
        lowpt, ref, side, S = self.lowpt, self.ref, self.side, self.S
        # drop conflict pairs whose return edges all end at u
        while S and S[-1].lowest(lowpt) == self.height[u]:
            P = S.pop()
            if P.left.low is not None:
                side[P.left.low] = -1
        if S:
            P = S.pop()
            while P.left.high is not None and P.left.high[1] == u:
                P.left.high = ref.get(P.left.high)
            if P.left.high is None and P.left.low is not None:
                ref[P.left.low] = P.right.low
                side[P.left.low] = -1
                P.left.low = None
            while P.right.high is not None and P.right.high[1] == u:
                P.right.high = ref.get(P.right.high)
            if P.right.high is None and P.right.low is not None:
                ref[P.right.low] = P.left.low
                side[P.right.low] = -1
                P.right.low = None
            S.append(P)
        # e takes the side of its highest return edge
        if lowpt[e] < self.height[u]:
            hl, hr = S[-1].left.high, S[-1].right.high
            if hl is not None and (hr is None or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    # -- phase 3 ----------------------------------------------------------

    def _sign(self, e: Edge) -> int:
        ref, side = self.ref, self.side
        stack = [e]
        pending: dict[Edge, Edge] = {}
        while stack:
            x = stack.pop()
            r = ref.get(x)
            if r is not None:
                stack.append(x)
                stack.append(r)
                pending[x] = r
                ref[x] = None
            elif x in pending:
                side[x] = side.get(x, 1) * side.get(pending.pop(x), 1)
        return side.get(e, 1)

    def embed(self) -> list[list[int]]:
        n = len(self.nbrs)
        for e in list(self.nesting):
            self.nesting[e] *= self._sign(e)
        self.ordered = [sorted(ws, key=lambda w, v=v: self.nesting[(v, w)]) for v, ws in enumerate(self.out)]
        rot = _Rotation(n)
        for v in range(n):
            prev = None
            for w in self.ordered[v]:
                rot.add_cw(v, w, prev)
                prev = w
        left_ref: list[int | None] = [None] * n
        right_ref: list[int | None] = [None] * n
        ind = [0] * n
        for s in self.roots:
            stack = [s]
            while stack:
                v = stack.pop()
                adj = self.ordered[v]
                while ind[v] < len(adj):
                    w = adj[ind[v]]
                    ind[v] += 1
                    ei = (v, w)
                    if ei == self.parent_edge[w]:
                        rot.add_first(w, v)
                        left_ref[v] = right_ref[v] = w
                        stack.append(v)
                        stack.append(w)
                        break
                    if self.side.get(ei, 1) == 1:
                        rot.add_cw(w, v, right_ref[w])
                    else:
                        rot.add_ccw(w, v, left_ref[w])
                        left_ref[w] = v
        return rot.orders()


def lr_planarity(nbrs: Sequence[Sequence[int]], *, embed: bool = False) -> tuple[bool, list[list[int]] | None]:
    """Planarity of the simple graph with adjacency lists ``nbrs``.

    Returns ``(planar, rotation)``; ``rotation[v]`` is the clockwise
    neighbour order of ``v`` when ``embed`` is set and the graph is planar.
    """
    n = len(nbrs)
    m = sum(len(a) for a in nbrs) // 2
    if n > 2 and m > 3 * n - 6:
        return False, None
    st = _LRState(nbrs)
    st.orient()
    if not st.test():
        return False, None
    return True, (st.embed() if embed else None)


def edges_planar(n: int, edges: Sequence[Edge]) -> bool:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    for a in nbrs:
        a.sort()
    return lr_planarity(nbrs)[0]
