import numpy as np
import pytest

from clusterpath.lattice import ColumnEdges
from clusterpath.window import NodeWindow, MemCounters, K_CUT, K_PATH

from conftest import full_block, empty_block


def push_ones(w, x):
    return w.push_column(ColumnEdges(x=x, vertical=np.ones(w.H - 1, bool),
                                     horizontal=np.ones(w.H, bool)))


def test_push_empty_window():
    w = NodeWindow(H=4, B=5)
    assert push_ones(w, 0) is None
    assert w.n_live == 1
    assert w.tail_x == 0 and w.head_x == 0


def test_push_full_window_evicts_oldest():
    w = NodeWindow(H=4, B=5)
    for x in range(6):
        assert push_ones(w, x) is None
    assert w.n_live == 6
    assert push_ones(w, 6) == 0
    assert w.n_live == 6
    assert w.tail_x == 1


def test_fifo_eviction_order():
    w = NodeWindow(H=3, B=2)
    evicted = [push_ones(w, x) for x in range(8)]
    assert evicted == [None, None, None, 0, 1, 2, 3, 4]


def test_push_counts_initialization_writes():
    H, W = 7, 23
    w = NodeWindow(H=H, B=4)
    for x in range(W):
        push_ones(w, x)
    assert w.snapshot_counters().resets == W * H


def test_push_does_not_touch_other_columns():
    w = full_block(4, 5, B=5)
    r = w.record((2, 3))
    r.distance = 9
    r.predecessor = (2, 2)
    before = (w.u8.copy(), w.dist.copy(), w.pred.copy())
    push_ones(w, 4)
    s_new = w.slot(4)
    mask = np.ones(w.cap, dtype=bool)
    mask[s_new] = False
    assert np.array_equal(w.u8[:, mask], before[0][:, mask])
    assert np.array_equal(w.dist[mask], before[1][mask])
    assert np.array_equal(w.pred[mask], before[2][mask])
    assert w.record((2, 3)).distance == 9


def test_clear_all_counts():
    w = full_block(5, 20, B=5)
    w.reset_counters()
    w.clear_all()
    c = w.snapshot_counters()
    assert c.predecessor_writes == 100
    assert c.distance_writes == 100
    assert c.resets == 100


def test_clear_all_empty_window():
    w = NodeWindow(H=4, B=3)
    w.clear_all()
    assert w.snapshot_counters().predecessor_writes == 0


def test_clear_all_is_unconditional():
    w = full_block(3, 4, B=3)
    w.reset_counters()
    w.clear_all()
    w.clear_all()
    assert w.snapshot_counters().predecessor_writes == 2 * 3 * 4


def test_clear_all_preserves_pattern_fields():
    w = full_block(3, 4, B=3)
    r = w.record((1, 2))
    r.kind = K_CUT
    r.theta = 0.5
    r.byproduct_rule = (1, 1)
    r.distance = 3
    w.clear_all()
    r = w.record((1, 2))
    assert r.distance is None
    assert r.kind == K_CUT
    assert r.theta == 0.5
    assert r.byproduct_rule == (1, 1)


def test_record_write_counters():
    w = full_block(2, 3, B=2)
    w.reset_counters()
    r = w.record((1, 1))
    r.predecessor = (0, 1)
    assert w.snapshot_counters().predecessor_writes == 1
    r.distance = 4
    assert w.snapshot_counters().distance_writes == 1
    r.add_successor((1, 0))
    r.add_successor((1, 2))
    assert w.snapshot_counters().successor_writes == 2
    r.right_node = True
    assert w.snapshot_counters().flag_writes == 1


def test_record_clear_counting_convention():
    w = full_block(2, 3, B=2)
    r = w.record((1, 1))
    r.distance = 2
    r.predecessor = (0, 1)
    w.reset_counters()
    r.clear()
    c = w.snapshot_counters()
    assert (c.resets, c.predecessor_writes, c.distance_writes) == (1, 1, 1)
    assert r.distance is None and r.predecessor is None


def test_record_roundtrip_fields():
    w = full_block(2, 4, B=2)
    r = w.record((1, 2))
    r.predecessor = (1, 1)
    assert r.predecessor == (1, 1)
    r.add_successor((0, 2))
    assert r.successors == {(0, 2)}
    r.remove_successor((0, 2))
    assert r.successors == set()
    r.setting_rule = (1, 0)
    assert r.setting_rule == (1, 0)
    r.byproduct_rule = (0, 1)
    assert r.byproduct_rule == (0, 1)
    r.inaccessible = True
    assert r.inaccessible


def test_counter_conservation():
    # every write issued through the record API lands in exactly one counter
    w = full_block(3, 5, B=3)
    w.reset_counters()
    writes = 0
    r = w.record((1, 2))
    r.distance = 1; writes += 1
    r.predecessor = (0, 2); writes += 1
    r.add_successor((2, 2)); writes += 1
    r.right_node = True; writes += 1
    r.kind = K_PATH; writes += 1
    r.theta = 0.3; writes += 1
    r.setting_rule = (1, 0); writes += 1
    r.byproduct_rule = (0, 1); writes += 1
    assert w.snapshot_counters().total_writes() == writes


def test_out_of_window_record():
    w = full_block(3, 4, B=3)
    with pytest.raises(IndexError):
        w.record((9, 0))


def test_retire_tail():
    w = full_block(4, 3, B=4)
    assert w.retire_tail() == 0
    assert w.tail_x == 1
    with pytest.raises(IndexError):
        w.record((0, 0))


def test_dump_format():
    w = empty_block(2, 2, B=2)
    r = w.record((0, 1))
    r.distance = 0
    line = w.dump().splitlines()[1]
    assert line == "0,1,0,-,-,0,0"


def test_mem_counters_dataclass():
    c = MemCounters(resets=1, distance_writes=2, predecessor_writes=3,
                    successor_writes=4, flag_writes=5, node_reads=6)
    assert c.total_writes() == 15
