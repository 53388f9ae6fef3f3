# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled connectivity kernels (Dinic blocking-flow max-flow).

Mirrors ``_flowpure.py`` function for function; the pure module is the
readable reference, this one exists because the theorem sweeps recompute
connectivity across thousands of punctured graphs.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64


cdef struct FlowNet:
    int n_nodes
    int n_arcs
    int* first
    int* nxt
    int* head   # arc target
    int* cap
    int* cap0
    int* level
    int* queue
    int* cur
    int* path


cdef int net_alloc(FlowNet* net, int n_nodes, int n_arcs) except -1:
    net.n_nodes = n_nodes
    net.n_arcs = n_arcs
    net.first = <int*> malloc(n_nodes * sizeof(int))
    net.nxt = <int*> malloc(n_arcs * sizeof(int))
    net.head = <int*> malloc(n_arcs * sizeof(int))
    net.cap = <int*> malloc(n_arcs * sizeof(int))
    net.cap0 = <int*> malloc(n_arcs * sizeof(int))
    net.level = <int*> malloc(n_nodes * sizeof(int))
    net.queue = <int*> malloc(n_nodes * sizeof(int))
    net.cur = <int*> malloc(n_nodes * sizeof(int))
    net.path = <int*> malloc((n_nodes + 1) * sizeof(int))
    if (net.first == NULL or net.nxt == NULL or net.head == NULL or
            net.cap == NULL or net.cap0 == NULL or net.level == NULL or
            net.queue == NULL or net.cur == NULL or net.path == NULL):
        raise MemoryError()
    memset(net.first, 0xFF, n_nodes * sizeof(int))
    return 0


cdef void net_free(FlowNet* net):
    free(net.first)
    free(net.nxt)
    free(net.head)
    free(net.cap)
    free(net.cap0)
    free(net.level)
    free(net.queue)
    free(net.cur)
    free(net.path)


cdef inline void add_arc(FlowNet* net, int idx, int src, int dst, int capacity):
    net.head[idx] = dst
    net.cap0[idx] = capacity
    net.nxt[idx] = net.first[src]
    net.first[src] = idx


cdef inline void reset_caps(FlowNet* net):
    memcpy(net.cap, net.cap0, net.n_arcs * sizeof(int))


cdef int dinic(FlowNet* net, int s, int t, int cutoff):
    """Exact max flow from s to t, stopping early at ``cutoff``."""
    cdef int flow = 0
    cdef int qi, qn, u, v, a, lu, push, i, keep, plen
    cdef int* level = net.level
    cdef int* cap = net.cap
    cdef int* nxt = net.nxt
    cdef int* head = net.head
    cdef int* path = net.path
    cdef int* cur = net.cur
    while flow < cutoff:
        memset(level, 0xFF, net.n_nodes * sizeof(int))
        level[s] = 0
        net.queue[0] = s
        qn = 1
        qi = 0
        while qi < qn:
            u = net.queue[qi]
            qi += 1
            lu = level[u] + 1
            a = net.first[u]
            while a != -1:
                if cap[a] > 0:
                    v = head[a]
                    if level[v] < 0:
                        level[v] = lu
                        net.queue[qn] = v
                        qn += 1
                a = nxt[a]
        if level[t] < 0:
            break
        memcpy(cur, net.first, net.n_nodes * sizeof(int))
        plen = 0
        u = s
        while True:
            if u == t:
                push = cutoff - flow
                for i in range(plen):
                    if cap[path[i]] < push:
                        push = cap[path[i]]
                for i in range(plen):
                    a = path[i]
                    cap[a] -= push
                    cap[a ^ 1] += push
                flow += push
                if flow >= cutoff:
                    return flow
                keep = 0
                while keep < plen and cap[path[keep]] > 0:
                    keep += 1
                plen = keep
                u = head[path[plen - 1]] if plen > 0 else s
                continue
            a = cur[u]
            while a != -1:
                if cap[a] > 0 and level[head[a]] == level[u] + 1:
                    break
                a = nxt[a]
            cur[u] = a
            if a == -1:
                level[u] = -1
                if plen == 0:
                    break
                plen -= 1
                u = head[path[plen] ^ 1]
            else:
                path[plen] = a
                plen += 1
                u = head[a]
    return flow


cdef int build_edge_net(FlowNet* net, int n, int m, int* us, int* vs) except -1:
    """Arc pair 2i / 2i+1 per undirected edge, capacity 1 each way."""
    cdef int i
    net_alloc(net, n, 2 * m)
    for i in range(m):
        add_arc(net, 2 * i, us[i], vs[i], 1)
        add_arc(net, 2 * i + 1, vs[i], us[i], 1)
    return 0


cdef int build_node_net(FlowNet* net, int n, int m, int* us, int* vs) except -1:
    """Node-split network: vertex v becomes 2v (in) -> 2v+1 (out); the split
    arc of v sits at index 2v, edge arcs for edge i start at 2n + 4i."""
    cdef int i, base
    net_alloc(net, 2 * n, 2 * n + 4 * m)
    for i in range(n):
        add_arc(net, 2 * i, 2 * i, 2 * i + 1, 1)
        add_arc(net, 2 * i + 1, 2 * i + 1, 2 * i, 0)
    base = 2 * n
    for i in range(m):
        add_arc(net, base + 4 * i, 2 * us[i] + 1, 2 * vs[i], 1)
        add_arc(net, base + 4 * i + 1, 2 * vs[i], 2 * us[i] + 1, 0)
        add_arc(net, base + 4 * i + 2, 2 * vs[i] + 1, 2 * us[i], 1)
        add_arc(net, base + 4 * i + 3, 2 * us[i], 2 * vs[i] + 1, 0)
    return 0


cdef int* copy_endpoints(list us, list vs, int m) except? NULL:
    """Pack both endpoint lists into one malloc'd block: us at [0:m], vs at [m:2m]."""
    cdef int* buf = <int*> malloc(2 * m * sizeof(int)) if m > 0 else <int*> malloc(sizeof(int))
    cdef int i
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = us[i]
        buf[m + i] = vs[i]
    return buf


cdef inline int node_flow(FlowNet* net, int n, int s, int t, int cutoff,
                          int skip_edge):
    """One (s, t) run on the node-split net with full cap reset."""
    cdef int base
    reset_caps(net)
    if skip_edge >= 0:
        base = 2 * n + 4 * skip_edge
        net.cap[base] = 0
        net.cap[base + 2] = 0
    net.cap[2 * s] = n
    net.cap[2 * t] = n
    return dinic(net, 2 * s + 1, 2 * t, cutoff)


cdef int vertex_conn_scan(FlowNet* net, int n, u64* rows, int words,
                          int min_degree, int cutoff, int skip_edge):
    """Fixed-(delta+1)-source non-adjacent pair scan, capped at ``cutoff``."""
    cdef int best = cutoff if cutoff < n - 1 else n - 1
    cdef int s, t, f
    for s in range(min_degree + 1):
        if best == 0:
            break
        for t in range(n):
            if t == s or (rows[s * words + (t >> 6)] >> (t & 63)) & 1:
                continue
            f = node_flow(net, n, s, t, best, skip_edge)
            if f < best:
                best = f
                if best == 0:
                    break
    return best


# --- public kernels -----------------------------------------------------------

def max_flow(int n, list us, list vs, int s, int t, bint node_caps,
             int cutoff=-1):
    cdef int m = len(us)
    cdef int* ends = copy_endpoints(us, vs, m)
    cdef FlowNet net
    cdef int limit, result
    net.first = NULL
    try:
        if node_caps:
            build_node_net(&net, n, m, ends, ends + m)
            reset_caps(&net)
            net.cap[2 * s] = n
            net.cap[2 * t] = n
            limit = n if cutoff < 0 else cutoff
            result = dinic(&net, 2 * s + 1, 2 * t, limit)
        else:
            build_edge_net(&net, n, m, ends, ends + m)
            reset_caps(&net)
            limit = m + 1 if cutoff < 0 else cutoff
            result = dinic(&net, s, t, limit)
        return result
    finally:
        if net.first != NULL:
            net_free(&net)
        free(ends)


def edge_conn(int n, list us, list vs):
    cdef int m = len(us)
    if m == 0:
        return 0
    cdef int* ends = copy_endpoints(us, vs, m)
    cdef FlowNet net
    cdef int best = n - 1
    cdef int t, f
    net.first = NULL
    try:
        build_edge_net(&net, n, m, ends, ends + m)
        for t in range(1, n):
            reset_caps(&net)
            f = dinic(&net, 0, t, best)
            if f < best:
                best = f
                if best == 0:
                    break
        return best
    finally:
        if net.first != NULL:
            net_free(&net)
        free(ends)


cdef u64* build_rows(int n, int m, int* us, int* vs, int words, int* degs) except? NULL:
    cdef u64* rows = <u64*> calloc(n * words, sizeof(u64))
    cdef int i
    if rows == NULL:
        raise MemoryError()
    memset(degs, 0, n * sizeof(int))
    for i in range(m):
        rows[us[i] * words + (vs[i] >> 6)] |= (<u64> 1) << (vs[i] & 63)
        rows[vs[i] * words + (us[i] >> 6)] |= (<u64> 1) << (us[i] & 63)
        degs[us[i]] += 1
        degs[vs[i]] += 1
    return rows


def vertex_conn(int n, list us, list vs):
    cdef int m = len(us)
    cdef int words = (n + 63) >> 6
    cdef int* ends = copy_endpoints(us, vs, m)
    cdef int* degs = <int*> malloc(n * sizeof(int))
    cdef u64* rows = NULL
    cdef FlowNet net
    cdef int delta, i, result
    net.first = NULL
    if degs == NULL:
        free(ends)
        raise MemoryError()
    try:
        rows = build_rows(n, m, ends, ends + m, words, degs)
        delta = degs[0]
        for i in range(1, n):
            if degs[i] < delta:
                delta = degs[i]
        if delta == n - 1:
            return n - 1  # complete
        build_node_net(&net, n, m, ends, ends + m)
        result = vertex_conn_scan(&net, n, rows, words, delta, n - 1, -1)
        return result
    finally:
        if net.first != NULL:
            net_free(&net)
        if rows != NULL:
            free(rows)
        free(degs)
        free(ends)


def mec_witness(int n, list us, list vs):
    """First edge (canonical order) whose deletion fails to drop the edge
    connectivity by exactly 1; -1 when minimally edge connected.

    Per deleted edge only a certificate flow below k0 is needed, since one
    deletion lowers the edge connectivity by at most 1; the deleted edge's
    endpoints are tried as targets first.
    """
    cdef int m = len(us)
    cdef int* ends = copy_endpoints(us, vs, m)
    cdef FlowNet net
    cdef int k0 = n - 1
    cdef int t, f, ei, u, v, phase, dropped
    net.first = NULL
    try:
        build_edge_net(&net, n, m, ends, ends + m)
        for t in range(1, n):
            reset_caps(&net)
            f = dinic(&net, 0, t, k0)
            if f < k0:
                k0 = f
        for ei in range(m):
            u = ends[ei]
            v = ends[m + ei]
            dropped = 0
            for phase in range(2):
                if dropped:
                    break
                if phase == 0:
                    # endpoint targets first
                    for t in (u, v):
                        if t == 0:
                            continue
                        reset_caps(&net)
                        net.cap[2 * ei] = 0
                        net.cap[2 * ei + 1] = 0
                        f = dinic(&net, 0, t, k0)
                        if f < k0:
                            dropped = 1
                            break
                else:
                    for t in range(1, n):
                        if t == u or t == v:
                            continue
                        reset_caps(&net)
                        net.cap[2 * ei] = 0
                        net.cap[2 * ei + 1] = 0
                        f = dinic(&net, 0, t, k0)
                        if f < k0:
                            dropped = 1
                            break
            if not dropped:
                return ei
        return -1
    finally:
        if net.first != NULL:
            net_free(&net)
        free(ends)


def mc_witness(int n, list us, list vs):
    """Vertex-connectivity analogue of mec_witness."""
    cdef int m = len(us)
    cdef int words = (n + 63) >> 6
    cdef int* ends = copy_endpoints(us, vs, m)
    cdef int* degs = <int*> malloc(n * sizeof(int))
    cdef u64* rows = NULL
    cdef FlowNet net
    cdef int k0, delta, i, ei, u, v, delta2, punct_kappa
    net.first = NULL
    if degs == NULL:
        free(ends)
        raise MemoryError()
    try:
        rows = build_rows(n, m, ends, ends + m, words, degs)
        delta = degs[0]
        for i in range(1, n):
            if degs[i] < delta:
                delta = degs[i]
        build_node_net(&net, n, m, ends, ends + m)
        if delta == n - 1:
            k0 = n - 1
        else:
            k0 = vertex_conn_scan(&net, n, rows, words, delta, n - 1, -1)
        for ei in range(m):
            u = ends[ei]
            v = ends[m + ei]
            # the deleted pair is now non-adjacent and the cheapest certificate
            if node_flow(&net, n, u, v, k0, ei) < k0:
                continue
            degs[u] -= 1
            degs[v] -= 1
            rows[u * words + (v >> 6)] &= ~((<u64> 1) << (v & 63))
            rows[v * words + (u >> 6)] &= ~((<u64> 1) << (u & 63))
            delta2 = degs[0]
            for i in range(1, n):
                if degs[i] < delta2:
                    delta2 = degs[i]
            punct_kappa = vertex_conn_scan(&net, n, rows, words, delta2, k0, ei)
            degs[u] += 1
            degs[v] += 1
            rows[u * words + (v >> 6)] |= (<u64> 1) << (v & 63)
            rows[v * words + (u >> 6)] |= (<u64> 1) << (u & 63)
            if punct_kappa >= k0:
                return ei
        return -1
    finally:
        if net.first != NULL:
            net_free(&net)
        if rows != NULL:
            free(rows)
        free(degs)
        free(ends)
