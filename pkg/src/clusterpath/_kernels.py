"""Compiled per-cycle kernels shared by the harness and the module wrappers.

All window state lives in plain numpy arrays (see window.NodeWindow); these
njit functions are the only implementation of the block-search cycle:

    push -> search (global or incremental) -> extend -> pattern -> measure

The wrappers in search.py / pattern.py and the Monte Carlo driver in
experiment.py call the same functions, so unit tests exercise exactly the
code that produces the sweep statistics.

Array conventions:
  u8    : uint8[9, cap, H] packed byte fields, first axis indexed by F_*
  dist  : int32[cap, H], -1 when unset
  pred  : int8[cap, H], -1 or a direction code toward the predecessor
  theta : float64[cap, H] base measurement angles
  span  : int64[2] = (tail_x, head_x) global column indices of the live range
  counters : int64[6] MemCounters slots (see window.C_*)
  qx/qy/qreg : the search queue and its (lo, hi) indices; the queue persists
               across cycles for the incremental search
  px/py/preg : the logical path and its registers (see P_* below)

Directions are 0=up, 1=right, 2=down, 3=left; the opposite of d is (d+2)%4.
Successor sets are 4-bit masks over directions.
"""

import numpy as np
from numba import njit

# byte-field indices in the packed u8 array
F_VERT = 0
F_HORIZ = 1
F_SUCC = 2
F_RIGHT = 3
F_INACC = 4
F_KIND = 5
F_RSET = 6
F_RBYP = 7
F_OFLIP = 8
F_RBLATE = 9
N_FIELDS = 10

# counter slots (mirrors window.py)
C_RESETS = 0
C_DIST = 1
C_PRED = 2
C_SUCC = 3
C_FLAG = 4
C_READS = 5

# pattern kinds
K_NONE = 0
K_PATH = 1
K_CUT = 2

# path registers
P_LEN = 0
P_RUNMAX = 1
P_PROG = 2
P_BX = 3
P_BZ = 4
P_MEAS = 5
N_PREG = 6

# trial termination codes
T_REACHED_END = 0
T_NO_RIGHT_NODE = 1
T_SEARCH_DEATH = 2

_DX = np.array([0, 1, 0, -1], dtype=np.int64)
_DY = np.array([-1, 0, 1, 0], dtype=np.int64)


@njit(cache=True)
def seed_choice_stream(seed):
    np.random.seed(seed)


@njit(cache=True, inline="always")
def _has_edge(u8, span, x, y, d):
    """Edge presence from (x, y) toward direction d, both ends live."""
    cap = u8.shape[1]
    H = u8.shape[2]
    nx = x + _DX[d]
    ny = y + _DY[d]
    if ny < 0 or ny >= H or nx < span[0] or nx > span[1]:
        return False
    s = x % cap
    if d == 0:
        return u8[F_VERT, s, y - 1] != 0
    if d == 2:
        return u8[F_VERT, s, y] != 0
    if d == 1:
        return u8[F_HORIZ, nx % cap, y] != 0
    return u8[F_HORIZ, s, y] != 0


@njit(cache=True)
def push_column(u8, dist, pred, theta, span, counters, ve_row, he_row):
    """Install a new column at head+1, evicting the tail when full.

    Returns the evicted global column index or -1. Initializes H fresh
    records (counted as resets) and touches nothing else.
    """
    cap = u8.shape[1]
    H = u8.shape[2]
    evicted = -1
    if span[1] >= 0 and span[1] - span[0] + 1 >= cap:
        evicted = span[0]
        span[0] += 1
    span[1] += 1
    s = span[1] % cap
    for y in range(H):
        u8[F_VERT, s, y] = ve_row[y]
        u8[F_HORIZ, s, y] = he_row[y]
        dist[s, y] = -1
        pred[s, y] = -1
        u8[F_SUCC, s, y] = 0
        u8[F_RIGHT, s, y] = 0
        u8[F_INACC, s, y] = 0
        u8[F_KIND, s, y] = K_NONE
        theta[s, y] = 0.0
        u8[F_RSET, s, y] = 0
        u8[F_RBYP, s, y] = 0
        u8[F_OFLIP, s, y] = 0
        u8[F_RBLATE, s, y] = 0
    counters[C_RESETS] += H
    return evicted


@njit(cache=True)
def clear_all(u8, dist, pred, span, counters):
    """Unconditional reset of all live search fields (pattern data kept).

    Counted as one reset, one predecessor write and one distance write per
    live node, matching the cost model of the global search's clearing step.
    """
    cap = u8.shape[1]
    H = u8.shape[2]
    n = 0
    for x in range(span[0], span[1] + 1):
        s = x % cap
        for y in range(H):
            dist[s, y] = -1
            pred[s, y] = -1
            u8[F_SUCC, s, y] = 0
            u8[F_RIGHT, s, y] = 0
            u8[F_INACC, s, y] = 0
        n += H
    counters[C_RESETS] += n
    counters[C_PRED] += n
    counters[C_DIST] += n


@njit(cache=True)
def reverse_walk(u8, dist, pred, span, counters, ex, ey, write_succ_from_x):
    """Walk predecessor links from one exit back to the chain's origin.

    Recasts predecessor links as successor links (every hop whose child lies
    at or right of write_succ_from_x writes, and counts, a successor entry),
    marks the first node encountered in column tail+1 as a right node, and
    clears the inaccessible flag of any flagged node it passes through.
    Returns 1 if a right node was flagged.
    """
    cap = u8.shape[1]
    x, y = ex, ey
    flagged = 0
    while True:
        counters[C_READS] += 1
        if u8[F_INACC, x % cap, y] != 0:
            u8[F_INACC, x % cap, y] = 0
            counters[C_FLAG] += 1
        if flagged == 0 and x == span[0] + 1:
            if u8[F_RIGHT, x % cap, y] == 0:
                u8[F_RIGHT, x % cap, y] = 1
                counters[C_FLAG] += 1
            flagged = 1
        d = pred[x % cap, y]
        if d < 0:
            break
        nx = x + _DX[d]
        ny = y + _DY[d]
        if nx < span[0] or nx > span[1]:
            break
        if x >= write_succ_from_x:
            u8[F_SUCC, nx % cap, ny] |= np.uint8(1 << ((d + 2) % 4))
            counters[C_SUCC] += 1
        x, y = nx, ny
    return flagged


@njit(cache=True)
def bfs_forward(u8, dist, pred, span, counters, qx, qy, qreg, min_x, strict):
    """FIFO breadth-first pass from the queued roots, visit-once.

    Only unvisited nodes at or right of min_x are visited; each gets a
    distance one above its parent and a unique predecessor. In strict mode,
    nodes already committed to the measurement pattern (on-path or cut-out)
    are never visited: they cannot carry a future path extension without
    breaking the pattern, so the pass routes around them. The plain mode
    searches every node, which is what the timing emulation counts. The
    queue is consumed and extended in place.
    """
    cap = u8.shape[1]
    lo = qreg[0]
    hi = qreg[1]
    while lo < hi:
        x = qx[lo]
        y = qy[lo]
        lo += 1
        base = dist[x % cap, y]
        counters[C_READS] += 1
        for d in range(4):
            nx = x + _DX[d]
            if nx < min_x:
                continue
            if not _has_edge(u8, span, x, y, d):
                continue
            ny = y + _DY[d]
            counters[C_READS] += 1
            if dist[nx % cap, ny] >= 0:
                continue
            if strict != 0 and u8[F_KIND, nx % cap, ny] != K_NONE:
                continue
            dist[nx % cap, ny] = base + 1
            pred[nx % cap, ny] = (d + 2) % 4
            counters[C_DIST] += 1
            counters[C_PRED] += 1
            qx[hi] = nx
            qy[hi] = ny
            hi += 1
    qreg[0] = lo
    qreg[1] = hi


@njit(cache=True)
def collect_exit_nodes(u8, dist, span, counters, qx, qy, qreg, mark_inacc):
    """Refill the queue with the visited nodes of the rightmost column.

    Scanned top to bottom. When mark_inacc is nonzero each exit is also
    flagged inaccessible, the presumption the next incremental cycle's
    reverse pass has to overturn. Returns the number of exits.
    """
    cap = u8.shape[1]
    H = u8.shape[2]
    rx = span[1]
    n = 0
    for y in range(H):
        counters[C_READS] += 1
        if dist[rx % cap, y] >= 0:
            qx[n] = rx
            qy[n] = y
            if mark_inacc != 0:
                u8[F_INACC, rx % cap, y] = 1
                counters[C_FLAG] += 1
            n += 1
    qreg[0] = 0
    qreg[1] = n
    return n


@njit(cache=True)
def prune_failed_paths(u8, dist, pred, span, counters):
    """Detach successor branches that only lead to failed exit nodes.

    A failed exit is a penultimate-column node still flagged inaccessible
    after the reverse pass. Each one starts an upward walk that removes the
    node from its predecessor's successor set and keeps climbing while the
    predecessor is left with no successors at all, so a branch disappears
    from its tree root exactly when its whole subtree is dead. Returns the
    number of successor deletions.
    """
    cap = u8.shape[1]
    H = u8.shape[2]
    penult = span[1] - 1
    if penult < span[0]:
        return 0
    n_pruned = 0
    for y in range(H):
        counters[C_READS] += 1
        if dist[penult % cap, y] < 0 or u8[F_INACC, penult % cap, y] == 0:
            continue
        if u8[F_SUCC, penult % cap, y] != 0:
            continue
        x = penult
        cy = y
        while True:
            d = pred[x % cap, cy]
            counters[C_READS] += 1
            if d < 0:
                break
            nx = x + _DX[d]
            ny = cy + _DY[d]
            if nx < span[0] or nx > span[1]:
                break
            mask = np.uint8(1 << ((d + 2) % 4))
            if u8[F_SUCC, nx % cap, ny] & mask == 0:
                break
            u8[F_SUCC, nx % cap, ny] &= np.uint8(~mask & 0xF)
            counters[C_SUCC] += 1
            n_pruned += 1
            if u8[F_SUCC, nx % cap, ny] != 0:
                break
            x, cy = nx, ny
    return n_pruned


@njit(cache=True)
def gbfs_search(u8, dist, pred, theta, span, counters, qx, qy, qreg,
                rootx, rooty, mark_exits, strict):
    """Global block search: clear, forward BFS from the root, reverse pass.

    The forward pass writes a distance and a unique predecessor for every
    node reachable from the root inside the live block. The reverse pass
    walks from every exit node (visited nodes in the rightmost column,
    top to bottom) back to the root, recasting predecessors as successors
    and flagging right nodes. The queue is left holding the exit nodes; when
    mark_exits is nonzero they are also flagged inaccessible so that a
    following incremental cycle can prune the ones that fail.

    Returns (n_exits, n_right).
    """
    cap = u8.shape[1]
    clear_all(u8, dist, pred, span, counters)
    qreg[0] = 0
    qreg[1] = 1
    qx[0] = rootx
    qy[0] = rooty
    dist[rootx % cap, rooty] = 0
    counters[C_DIST] += 1
    bfs_forward(u8, dist, pred, span, counters, qx, qy, qreg, span[0], strict)
    n_exits = collect_exit_nodes(u8, dist, span, counters, qx, qy, qreg, 0)
    n_right = 0
    for i in range(n_exits):
        n_right += reverse_walk(u8, dist, pred, span, counters,
                                qx[i], qy[i], span[0])
    if mark_exits != 0:
        for i in range(n_exits):
            u8[F_INACC, qx[i] % cap, qy[i]] = 1
            counters[C_FLAG] += 1
    return n_exits, n_right


@njit(cache=True)
def ibfs_step(u8, dist, pred, theta, span, counters, qx, qy, qreg, strict):
    """One incremental search cycle, reusing the previous predecessor trees.

    No clearing happens. The forward pass starts from the queue left by the
    previous cycle (the old exit nodes, now in the penultimate column) and
    only nodes at or right of the penultimate column are eligible, so
    distances are never rewritten. The reverse pass runs over the whole
    block from the new exits, writing successors only inside the new region,
    flagging right nodes near the left edge, and marking the old exits it
    reaches as accessible. Failed old exits then have their dead branches
    pruned from the successor forest, and the queue is refilled with the new
    exits, flagged inaccessible for the next cycle.

    Returns (status, n_exits, n_right, n_pruned); status 1 means the queue
    was empty at cycle start (search death).
    """
    cap = u8.shape[1]
    H = u8.shape[2]
    if qreg[0] >= qreg[1]:
        return 1, 0, 0, 0
    tail = span[0]
    penult = span[1] - 1
    # stale right-node flags from the previous cycle sit in today's leftmost
    # column; drop them before computing this cycle's flags
    for y in range(H):
        counters[C_READS] += 1
        if u8[F_RIGHT, tail % cap, y] != 0:
            u8[F_RIGHT, tail % cap, y] = 0
            counters[C_FLAG] += 1
    bfs_forward(u8, dist, pred, span, counters, qx, qy, qreg, penult, strict)
    rx = span[1]
    n_right = 0
    for y in range(H):
        counters[C_READS] += 1
        if dist[rx % cap, y] >= 0:
            n_right += reverse_walk(u8, dist, pred, span, counters,
                                    rx, y, penult)
    n_pruned = prune_failed_paths(u8, dist, pred, span, counters)
    n_exits = collect_exit_nodes(u8, dist, span, counters, qx, qy, qreg, 1)
    return 0, n_exits, n_right, n_pruned


@njit(cache=True)
def extend_path(u8, dist, pred, theta, span, counters, px, py, preg, strict):
    """Walk successor links from the path head to the next right node.

    At each node the walk picks uniformly at random among the live
    successors; the walk stops on the first right-node flag it steps onto
    and the traversed route is appended to the path. Dead ends backtrack,
    so the walk fails only when no usable successor chain from the head
    reaches a right node at all; the successor structure is a forest, so no
    node is tried twice. Returns 1 on success, 0 on failure (the path then
    keeps only its committed nodes).

    In strict mode a successor is usable only if it can physically join the
    path: not already committed to the pattern, and not entangled with any
    on-path qubit other than the node the walk is stepping from (such a
    step would put a stray entangling link inside the pattern).
    """
    cap = u8.shape[1]
    H = u8.shape[2]
    n0 = preg[P_LEN]
    maxdepth = (span[1] - span[0] + 1) * H + 4
    tried = np.zeros(maxdepth + 2, dtype=np.uint8)
    cand = np.empty(4, dtype=np.int64)
    depth = 0
    x = px[n0 - 1]
    y = py[n0 - 1]
    while True:
        m = u8[F_SUCC, x % cap, y]
        counters[C_READS] += 1
        k = 0
        for d in range(4):
            bit = np.uint8(1 << d)
            if m & bit == 0 or tried[depth] & bit != 0:
                continue
            nx = x + _DX[d]
            ny = y + _DY[d]
            if nx < span[0] or nx > span[1]:
                tried[depth] |= bit
                continue
            if strict != 0:
                counters[C_READS] += 1
                if u8[F_KIND, nx % cap, ny] != K_NONE:
                    tried[depth] |= bit
                    continue
                chord = False
                for dd in range(4):
                    if not _has_edge(u8, span, nx, ny, dd):
                        continue
                    mx = nx + _DX[dd]
                    my = ny + _DY[dd]
                    if mx == x and my == y:
                        continue
                    counters[C_READS] += 1
                    if u8[F_KIND, mx % cap, my] == K_PATH:
                        chord = True
                        break
                if chord:
                    tried[depth] |= bit
                    continue
            cand[k] = d
            k += 1
        if k == 0:
            if depth == 0:
                preg[P_LEN] = n0
                return 0
            depth -= 1
            if depth == 0:
                x = px[n0 - 1]
                y = py[n0 - 1]
            else:
                x = px[n0 + depth - 1]
                y = py[n0 + depth - 1]
            continue
        d = cand[np.random.randint(0, k)] if k > 1 else cand[0]
        tried[depth] |= np.uint8(1 << d)
        x = x + _DX[d]
        y = y + _DY[d]
        depth += 1
        tried[depth] = 0
        px[n0 + depth - 1] = x
        py[n0 + depth - 1] = y
        counters[C_READS] += 1
        if u8[F_RIGHT, x % cap, y] != 0:
            preg[P_LEN] = n0 + depth
            return 1


@njit(cache=True)
def generate_pattern(u8, dist, pred, theta, span, counters, px, py, preg,
                     seg, angles):
    """Write local pattern rules for the path segment starting at index seg.

    Each new on-path node a_n gets its byproduct rule from the path-index
    parity (even outcomes flip z, odd flip x) and, when it carries a program
    angle, the matching base angle and adaptive-setting rule. Neighbors of
    new nodes that are not on the path are flagged as cut-out qubits and
    accumulate, adjacency by adjacency, the XOR of the adjacent on-path
    byproduct rules.

    Flagging around the segment's final node (the new right node) is
    deferred, except for its left neighbor whose column is measured this
    cycle: the rest of its surroundings are committed on the next cycle's
    call (the anchor revisit), after the extension walk has had the chance
    to continue through them. Program angles are only placed on nodes that
    open a fresh rightmost column, where every adaptive-setting input is
    already measured by the time the node's column is read out.
    """
    cap = u8.shape[1]
    plen = preg[P_LEN]
    # commit the whole segment to the path before any neighbor flagging
    for i in range(seg, plen):
        u8[F_KIND, px[i] % cap, py[i]] = K_PATH
        counters[C_FLAG] += 1
    # anchor revisit: the previous head's deferred neighbors (all but left)
    if seg > 0:
        ax = px[seg - 1]
        ay = py[seg - 1]
        arb = u8[F_RBYP, ax % cap, ay]
        for d in range(3):  # up, right, down
            if not _has_edge(u8, span, ax, ay, d):
                continue
            nx = ax + _DX[d]
            ny = ay + _DY[d]
            counters[C_READS] += 1
            if u8[F_KIND, nx % cap, ny] == K_PATH:
                continue
            if u8[F_KIND, nx % cap, ny] == K_NONE:
                u8[F_KIND, nx % cap, ny] = K_CUT
                counters[C_FLAG] += 1
            u8[F_RBYP, nx % cap, ny] ^= arb
            if nx == span[0]:
                u8[F_RBLATE, nx % cap, ny] ^= arb
            counters[C_FLAG] += 1
    # per-node rules for the new segment
    for i in range(seg, plen):
        x = px[i]
        y = py[i]
        s = x % cap
        r_bit = i & 1
        s_bit = (i + 1) & 1
        u8[F_RBYP, s, y] = np.uint8(r_bit | (s_bit << 1))
        counters[C_FLAG] += 1
        placed = False
        t = preg[P_PROG]
        if (i == plen - 1 and x > preg[P_RUNMAX] and t < angles.shape[0]
                and (i & 1) == (t & 1)):
            placed = True
        if placed:
            theta[s, y] = -angles[t]
            u8[F_RSET, s, y] = np.uint8(1) if (i & 1) == 0 else np.uint8(2)
            preg[P_PROG] = t + 1
        else:
            theta[s, y] = 0.0
            u8[F_RSET, s, y] = 0
        counters[C_FLAG] += 2
        if x > preg[P_RUNMAX]:
            preg[P_RUNMAX] = x
        nd = 4 if i < plen - 1 else 1
        for j in range(nd):
            d = j if i < plen - 1 else 3  # head commits its left side only
            nx = x + _DX[d]
            if nx < span[0]:
                continue
            if not _has_edge(u8, span, x, y, d):
                continue
            ny = y + _DY[d]
            counters[C_READS] += 1
            if u8[F_KIND, nx % cap, ny] == K_PATH:
                continue
            if u8[F_KIND, nx % cap, ny] == K_NONE:
                u8[F_KIND, nx % cap, ny] = K_CUT
                counters[C_FLAG] += 1
            u8[F_RBYP, nx % cap, ny] ^= u8[F_RBYP, s, y]
            if nx == span[0]:
                u8[F_RBLATE, nx % cap, ny] ^= u8[F_RBYP, s, y]
            counters[C_FLAG] += 1


@njit(cache=True)
def measure_column_classical(u8, dist, pred, theta, span, counters,
                             px, py, preg):
    """Measure out the leftmost column with random outcomes and retire it.

    Cut-out and unruled qubits go first (computational basis): cut-out
    outcomes fold the early part of their stored rule into the byproduct
    pair, and any computational-basis outcome next to an uncommitted live
    right neighbor leaves a pending outcome flip there. On-path qubits
    follow in path order: each computes its adaptive setting from the
    current byproduct pair, draws its outcome, applies its pending flip and
    folds the result through its byproduct rule. Rule contributions that
    were accumulated onto this column only during the current cycle's
    pattern generation belong to later path slots than any angle-carrying
    node of the column, so they fold last.
    """
    cap = u8.shape[1]
    H = u8.shape[2]
    tail = span[0]
    s = tail % cap
    mz = np.zeros(H, dtype=np.int64)
    for y in range(H):
        counters[C_READS] += 1
        kind = u8[F_KIND, s, y]
        if kind == K_PATH:
            continue
        m = np.random.randint(0, 2)
        mz[y] = m
        if kind == K_CUT:
            rb = u8[F_RBYP, s, y] ^ u8[F_RBLATE, s, y]
            preg[P_BX] ^= np.int64(m * (rb & 1))
            preg[P_BZ] ^= np.int64(m * ((rb >> 1) & 1))
        if m == 1 and tail + 1 <= span[1] and u8[F_HORIZ, (tail + 1) % cap, y] != 0:
            counters[C_READS] += 1
            if u8[F_KIND, (tail + 1) % cap, y] == K_NONE:
                u8[F_OFLIP, (tail + 1) % cap, y] ^= 1
                counters[C_FLAG] += 1
    i = preg[P_MEAS]
    plen = preg[P_LEN]
    while i < plen:
        if px[i] == tail:
            y = py[i]
            counters[C_READS] += 2
            # the adaptive setting drives the measurement basis only; the
            # classical emulation draws the outcome either way
            rs = u8[F_RSET, s, y]
            _ = ((rs & 1) & preg[P_BX]) ^ (((rs >> 1) & 1) & preg[P_BZ])
            m = np.random.randint(0, 2)
            m ^= u8[F_OFLIP, s, y]
            rb = u8[F_RBYP, s, y]
            preg[P_BX] ^= np.int64(m * (rb & 1))
            preg[P_BZ] ^= np.int64(m * ((rb >> 1) & 1))
        i += 1
    for y in range(H):
        rb = u8[F_RBLATE, s, y]
        if u8[F_KIND, s, y] == K_CUT and rb != 0:
            counters[C_READS] += 1
            preg[P_BX] ^= np.int64(mz[y] * (rb & 1))
            preg[P_BZ] ^= np.int64(mz[y] * ((rb >> 1) & 1))
    span[0] += 1
    i = preg[P_MEAS]
    while i < preg[P_LEN] and px[i] < span[0]:
        i += 1
    preg[P_MEAS] = i


@njit(cache=True)
def run_trial_kernel(ve, he, u8, dist, pred, theta, span, counters,
                     qx, qy, qreg, px, py, preg, angles, percycle,
                     alg, W, B, choice_seed, strict):
    """Full emulation of one trial; returns (termination, n_cycles).

    Cycle 1 searches the freshly filled initial block with the global search
    for both algorithms (the incremental search bootstraps its queue from
    those exits); every later cycle pushes one column, searches, extends the
    path, maps the pattern, and measures out the leftmost column. Per-cycle
    counter deltas land in percycle rows. The trial ends when the path cannot
    be extended, the incremental queue dies, or the cluster is exhausted.
    """
    H = u8.shape[2]
    np.random.seed(choice_seed)
    span[0] = 0
    span[1] = -1
    counters[:] = 0
    qreg[0] = 0
    qreg[1] = 0
    px[0] = 0
    py[0] = H // 2
    preg[P_LEN] = 1
    preg[P_RUNMAX] = 0
    preg[P_PROG] = 0
    preg[P_BX] = 0
    preg[P_BZ] = 0
    preg[P_MEAS] = 0
    for x in range(B):
        push_column(u8, dist, pred, theta, span, counters, ve[x], he[x])
    termination = T_REACHED_END
    cycles = 0
    prev = np.zeros(6, dtype=np.int64)
    c = 0
    while True:
        c += 1
        if c > 1:
            nxt = B + c - 2
            if nxt < W:
                push_column(u8, dist, pred, theta, span, counters,
                            ve[nxt], he[nxt])
            elif span[0] + 1 > span[1]:
                termination = T_REACHED_END
                break
        for j in range(6):
            prev[j] = counters[j]
        if alg == 0 or c == 1:
            rootx = px[preg[P_LEN] - 1]
            rooty = py[preg[P_LEN] - 1]
            gbfs_search(u8, dist, pred, theta, span, counters, qx, qy, qreg,
                        rootx, rooty, alg, strict)
        else:
            status, _, _, _ = ibfs_step(u8, dist, pred, theta, span,
                                        counters, qx, qy, qreg, strict)
            if status != 0:
                for j in range(6):
                    percycle[c - 1, j] = counters[j] - prev[j]
                cycles = c
                termination = T_SEARCH_DEATH
                break
        seg = 0 if c == 1 else preg[P_LEN]
        ok = extend_path(u8, dist, pred, theta, span, counters, px, py, preg,
                         strict)
        if ok == 0:
            for j in range(6):
                percycle[c - 1, j] = counters[j] - prev[j]
            cycles = c
            termination = T_NO_RIGHT_NODE
            break
        generate_pattern(u8, dist, pred, theta, span, counters, px, py, preg,
                         seg, angles)
        measure_column_classical(u8, dist, pred, theta, span, counters,
                                 px, py, preg)
        for j in range(6):
            percycle[c - 1, j] = counters[j] - prev[j]
        cycles = c
        if c >= percycle.shape[0] - 1:
            break
    return termination, cycles
