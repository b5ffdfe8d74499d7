import numpy as np
import pytest

from clusterpath.lattice import ColumnEdges
from clusterpath.window import NodeWindow


def make_window(vert, horiz, B=None):
    """Build a NodeWindow by pushing every column of explicit edge arrays.

    vert[x, y] is the edge (x,y)-(x,y+1) (row H-1 ignored), horiz[x, y] the
    edge (x-1,y)-(x,y); column 0's horizontal bits are forced absent.
    """
    vert = np.asarray(vert, dtype=np.uint8)
    horiz = np.asarray(horiz, dtype=np.uint8)
    W, H = vert.shape
    if B is None:
        B = W
    w = NodeWindow(H, B)
    for x in range(W):
        hrow = horiz[x].copy()
        if x == 0:
            hrow[:] = 0
        w.push_column(ColumnEdges(x=x, vertical=vert[x, : H - 1],
                                  horizontal=hrow))
    return w


def full_block(W, H, B=None):
    """Window over a fully connected W-column block."""
    return make_window(np.ones((W, H)), np.ones((W, H)), B=B)


def empty_block(W, H, B=None):
    return make_window(np.zeros((W, H)), np.zeros((W, H)), B=B)


def oracle_bfs(w, root):
    """Plain breadth-first distances inside the live window, written without
    the package's search machinery (the independent reference)."""
    from collections import deque

    dist = {tuple(root): 0}
    q = deque([tuple(root)])
    while q:
        x, y = q.popleft()
        for dx, dy in ((0, -1), (1, 0), (0, 1), (-1, 0)):
            nx, ny = x + dx, y + dy
            if ny < 0 or ny >= w.H or not w.contains(nx):
                continue
            if dx == 0:
                present = w.vert[w.slot(x), min(y, ny)]
            else:
                present = w.horiz[w.slot(max(x, nx)), y]
            if not present or (nx, ny) in dist:
                continue
            dist[(nx, ny)] = dist[(x, y)] + 1
            q.append((nx, ny))
    return dist


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
