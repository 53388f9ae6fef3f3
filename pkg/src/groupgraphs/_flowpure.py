"""Pure-Python connectivity kernels (Dinic blocking-flow max-flow).

This is the fallback implementation selected when the compiled extension is
unavailable (or forced off via ``GG_PURE=1``).  The compiled kernel in
``_flowcore.pyx`` implements the same functions with the same scan orders, so
the two backends are interchangeable.

Conventions shared by both backends:

* graphs arrive as parallel endpoint lists ``us``/``vs`` in canonical edge
  order (u < v, sorted lexicographically);
* undirected edges become mutually-reverse arc pairs of capacity 1, so a max
  flow counts edge-disjoint paths;
* vertex capacities use the in/out node-splitting construction, counting
  internally vertex-disjoint paths;
* all flow values are exact; ``cutoff`` only allows stopping once a flow is
  known to reach a bound that cannot change the surrounding minimum.
"""

from __future__ import annotations


def _build_edge_net(n: int, us: list[int], vs: list[int]):
    """Arc-pair network for edge-disjoint paths: arcs 2i / 2i+1 per edge."""
    m = len(us)
    first = [-1] * n
    nxt = [-1] * (2 * m)
    to = [0] * (2 * m)
    for i in range(m):
        u, v = us[i], vs[i]
        a = 2 * i
        to[a] = v
        nxt[a] = first[u]
        first[u] = a
        to[a + 1] = u
        nxt[a + 1] = first[v]
        first[v] = a + 1
    return first, nxt, to, [1] * (2 * m)


def _build_node_net(n: int, us: list[int], vs: list[int]):
    """Node-split network: vertex v becomes 2v (in) -> 2v+1 (out)."""
    m = len(us)
    arcs = 2 * n + 4 * m
    first = [-1] * (2 * n)
    nxt = [-1] * arcs
    to = [0] * arcs
    cap = [0] * arcs

    def add(a, src, dst, c):
        to[a] = dst
        cap[a] = c
        nxt[a] = first[src]
        first[src] = a

    for v in range(n):
        add(2 * v, 2 * v, 2 * v + 1, 1)      # split arc, index 2v
        add(2 * v + 1, 2 * v + 1, 2 * v, 0)  # its reverse
    base = 2 * n
    for i in range(m):
        u, v = us[i], vs[i]
        a = base + 4 * i
        add(a, 2 * u + 1, 2 * v, 1)
        add(a + 1, 2 * v, 2 * u + 1, 0)
        add(a + 2, 2 * v + 1, 2 * u, 1)
        add(a + 3, 2 * u, 2 * v + 1, 0)
    return first, nxt, to, cap


def _dinic(first, nxt, to, cap, n_nodes: int, s: int, t: int, cutoff: int) -> int:
    """Exact max flow, stopping early once ``cutoff`` is reached."""
    flow = 0
    while flow < cutoff:
        level = [-1] * n_nodes
        level[s] = 0
        queue = [s]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            lu = level[u] + 1
            a = first[u]
            while a != -1:
                if cap[a] > 0:
                    v = to[a]
                    if level[v] < 0:
                        level[v] = lu
                        queue.append(v)
                a = nxt[a]
        if level[t] < 0:
            break
        it = first[:]
        path: list[int] = []
        u = s
        while True:
            if u == t:
                push = min(cap[a] for a in path)
                if flow + push > cutoff:
                    push = cutoff - flow
                for a in path:
                    cap[a] -= push
                    cap[a ^ 1] += push
                flow += push
                if flow >= cutoff:
                    return flow
                keep = 0
                while keep < len(path) and cap[path[keep]] > 0:
                    keep += 1
                del path[keep:]
                u = to[path[-1]] if path else s
                continue
            a = it[u]
            while a != -1 and not (cap[a] > 0 and level[to[a]] == level[u] + 1):
                a = nxt[a]
            it[u] = a
            if a == -1:
                level[u] = -1
                if not path:
                    break
                dead = path.pop()
                u = to[dead ^ 1]
            else:
                path.append(a)
                u = to[a]
    return flow


def max_flow(n: int, us: list[int], vs: list[int], s: int, t: int,
             node_caps: bool, cutoff: int = -1) -> int:
    """Max edge-disjoint (or internally vertex-disjoint) s-t paths."""
    if node_caps:
        first, nxt, to, cap = _build_node_net(n, us, vs)
        cap[2 * s] = n
        cap[2 * t] = n
        limit = n if cutoff < 0 else cutoff
        return _dinic(first, nxt, to, cap, 2 * n, 2 * s + 1, 2 * t, limit)
    first, nxt, to, cap = _build_edge_net(n, us, vs)
    limit = len(us) + 1 if cutoff < 0 else cutoff
    return _dinic(first, nxt, to, cap, n, s, t, limit)


def edge_conn(n: int, us: list[int], vs: list[int]) -> int:
    """Global edge connectivity: min over t of the flow from vertex 0."""
    if not us:
        return 0
    first, nxt, to, cap0 = _build_edge_net(n, us, vs)
    cap = cap0[:]
    best = n - 1
    for t in range(1, n):
        cap[:] = cap0
        f = _dinic(first, nxt, to, cap, n, 0, t, best)
        if f < best:
            best = f
            if best == 0:
                break
    return best


def _adjacency(n: int, us: list[int], vs: list[int]):
    rows = [0] * n
    degs = [0] * n
    for u, v in zip(us, vs):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        degs[u] += 1
        degs[v] += 1
    return rows, degs


class _NodeScan:
    """Node-split network reused across (s, t) pairs with full cap resets."""

    def __init__(self, n: int, us: list[int], vs: list[int]):
        self.n = n
        self.first, self.nxt, self.to, self.cap0 = _build_node_net(n, us, vs)
        self.cap = self.cap0[:]

    def flow(self, s: int, t: int, cutoff: int, skip_edge: int = -1) -> int:
        cap = self.cap
        cap[:] = self.cap0
        if skip_edge >= 0:
            base = 2 * self.n + 4 * skip_edge
            cap[base] = 0
            cap[base + 2] = 0
        cap[2 * s] = self.n
        cap[2 * t] = self.n
        return _dinic(self.first, self.nxt, self.to, cap, 2 * self.n,
                      2 * s + 1, 2 * t, cutoff)


def _vertex_conn_scan(scan: _NodeScan, n: int, rows: list[int],
                      min_degree: int, cutoff: int, skip_edge: int = -1) -> int:
    """Exact vertex connectivity via the fixed-(delta+1)-source pair scan,
    capped at ``cutoff`` (values >= cutoff are reported as cutoff)."""
    best = min(n - 1, cutoff)
    full = (1 << n) - 1
    for s in range(min_degree + 1):
        if best == 0:
            break
        nonadj = full & ~(rows[s] | (1 << s))
        while nonadj:
            low = nonadj & -nonadj
            t = low.bit_length() - 1
            nonadj ^= low
            f = scan.flow(s, t, best, skip_edge)
            if f < best:
                best = f
                if best == 0:
                    break
    return best


def vertex_conn(n: int, us: list[int], vs: list[int]) -> int:
    rows, degs = _adjacency(n, us, vs)
    delta = min(degs)
    if delta == n - 1:
        return n - 1  # complete
    scan = _NodeScan(n, us, vs)
    return _vertex_conn_scan(scan, n, rows, delta, n - 1)


def mec_witness(n: int, us: list[int], vs: list[int]) -> int:
    """First edge (canonical order) whose deletion fails to drop the edge
    connectivity by exactly 1, or -1 when every deletion drops it.

    Deleting one edge lowers the edge connectivity k0 by at most 1, so each
    deleted edge only needs a certificate flow below k0 (cutoff k0); the
    endpoint targets are tried first since their degree just dropped.
    """
    m = len(us)
    first, nxt, to, cap0 = _build_edge_net(n, us, vs)
    cap = cap0[:]
    k0 = n - 1
    for t in range(1, n):
        cap[:] = cap0
        f = _dinic(first, nxt, to, cap, n, 0, t, k0)
        if f < k0:
            k0 = f
    for ei in range(m):
        u, v = us[ei], vs[ei]
        dropped = False
        targets = [x for x in (u, v) if x != 0]
        targets.extend(t for t in range(1, n) if t != u and t != v)
        for t in targets:
            cap[:] = cap0
            cap[2 * ei] = 0
            cap[2 * ei + 1] = 0
            f = _dinic(first, nxt, to, cap, n, 0, t, k0)
            if f < k0:
                dropped = True
                break
        if not dropped:
            return ei
    return -1


def mc_witness(n: int, us: list[int], vs: list[int]) -> int:
    """Vertex-connectivity analogue of :func:`mec_witness`."""
    m = len(us)
    rows, degs = _adjacency(n, us, vs)
    delta = min(degs)
    scan = _NodeScan(n, us, vs)
    if delta == n - 1:
        k0 = n - 1
    else:
        k0 = _vertex_conn_scan(scan, n, rows, delta, n - 1)
    for ei in range(m):
        u, v = us[ei], vs[ei]
        # the deleted pair is now non-adjacent and is the cheapest certificate
        if scan.flow(u, v, k0, ei) < k0:
            continue
        degs[u] -= 1
        degs[v] -= 1
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        punct_kappa = _vertex_conn_scan(scan, n, rows, min(degs), k0, ei)
        degs[u] += 1
        degs[v] += 1
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        if punct_kappa >= k0:
            return ei
    return -1
