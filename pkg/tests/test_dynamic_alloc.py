import json
import random

import pytest

from hexchan.config import load_config
from hexchan.dynamic_alloc import (
    SuperframeConfig,
    activity_csv,
    activity_matrix,
    allocate_dynamic,
    allocation_csv,
    allocation_json_doc,
    cycle_structure,
)
from hexchan.errors import InvalidSuperframeError, NotInLatticeError
from hexchan.interference import build_interference_graph
from hexchan.lattice import DATA_REUSE_METRIC, CellIndex, build_lattice, lattice_metric
from hexchan.spectrum import EUROPE, channel_plan, default_domain
from hexchan.static_alloc import allocate_static_data

C = CellIndex
SF = SuperframeConfig


@pytest.fixture
def europe_plan():
    return channel_plan(default_domain(EUROPE))


@pytest.fixture
def reference(reference_config_path):
    cfg = load_config(reference_config_path)
    return cfg.lattice, cfg.superframes, cfg.plan()


def test_superframe_validation():
    with pytest.raises(InvalidSuperframeError):
        SF(pan_cell=C(0, 0), so=3, bo=2)
    with pytest.raises(InvalidSuperframeError):
        SF(pan_cell=C(0, 0), so=-1, bo=2)
    cfg = SF(pan_cell=C(0, 0), so=2, bo=5)
    assert cfg.sd == 4 and cfg.bi == 32


def test_cycle_structure_single_pan():
    cs = cycle_structure([SF(pan_cell=C(0, 0), so=0, bo=0)])
    assert (cs.bi_maj, cs.sd_min, cs.u_cycles) == (1, 1, 1)


def test_cycle_structure_mixed():
    cs = cycle_structure([SF(pan_cell=C(0, 0), so=1, bo=3), SF(pan_cell=C(1, 1), so=0, bo=5)])
    assert (cs.bi_maj, cs.sd_min, cs.u_cycles) == (32, 1, 32)


def test_cycle_structure_reference_scenario(reference):
    _, configs, _ = reference
    cs = cycle_structure(configs)
    assert (cs.bi_maj, cs.sd_min, cs.u_cycles) == (32, 1, 32)


def test_activity_always_on_when_so_equals_bo():
    cfg = SF(pan_cell=C(0, 0), so=2, bo=2)
    cs = cycle_structure([cfg, SF(pan_cell=C(1, 1), so=0, bo=3)])
    act = activity_matrix([cfg], cs)
    assert all(act.active[0])


def test_activity_pattern_so1_bo2():
    # SD=2, BI=4 with sd_min=1: active in cycles {0,1,4,5} out of 8
    cfgs = [SF(pan_cell=C(0, 0), so=1, bo=2), SF(pan_cell=C(1, 1), so=0, bo=3)]
    cs = cycle_structure(cfgs)
    assert cs.sd_min == 1 and cs.u_cycles == 8
    act = activity_matrix(cfgs, cs)
    assert [t for t in range(8) if act.active[0][t]] == [0, 1, 4, 5]


def test_activity_row_sums():
    rng = random.Random(11)
    lat = build_lattice(3, 1.0)
    cells = rng.sample(lat.cells, 6)
    cfgs = []
    for cell in cells:
        bo = rng.randint(0, 5)
        cfgs.append(SF(pan_cell=cell, so=rng.randint(0, bo), bo=bo, phase=rng.randint(0, 7)))
    cs = cycle_structure(cfgs)
    act = activity_matrix(cfgs, cs)
    for k, cfg in enumerate(cfgs):
        expected = (cfg.sd // cs.sd_min) * (cs.bi_maj // cfg.bi)
        assert sum(act.active[k]) == expected


def test_phase_shifts_activity():
    cfgs = [SF(pan_cell=C(0, 0), so=0, bo=2, phase=1), SF(pan_cell=C(1, 1), so=0, bo=2)]
    cs = cycle_structure(cfgs)
    act = activity_matrix(cfgs, cs)
    assert [t for t in range(4) if act.active[0][t]] == [1]
    assert [t for t in range(4) if act.active[1][t]] == [0]


def test_reference_scenario_channel_counts(reference):
    lattice, configs, plan = reference
    cs = cycle_structure(configs)
    act = activity_matrix(configs, cs)
    alloc = allocate_dynamic(lattice, configs, plan)
    counts = {
        t: sorted({len(alloc.channels[k][t]) for k in range(len(configs)) if act.active[k][t]})
        for t in range(cs.u_cycles)
    }
    # all 12 active: 4 channels each
    assert counts[0] == [4]
    # exactly two mutually-interfering PANs: 7 each
    assert counts[2] == [7] and counts[3] == [7]
    # one isolated PAN: the whole data set
    assert counts[4] == [14]
    # two active PANs out of range of each other: the whole data set each
    assert counts[9] == [14]
    active_9 = [k for k in range(len(configs)) if act.active[k][9]]
    assert [k + 1 for k in active_9] == [6, 10]
    a, b = (configs[k].pan_cell for k in active_9)
    assert lattice_metric(a, b) >= DATA_REUSE_METRIC


def test_inactive_entries_are_empty(reference):
    lattice, configs, plan = reference
    cs = cycle_structure(configs)
    act = activity_matrix(configs, cs)
    alloc = allocate_dynamic(lattice, configs, plan)
    for k in range(len(configs)):
        for t in range(cs.u_cycles):
            if not act.active[k][t]:
                assert alloc.channels[k][t] == ()
            else:
                assert alloc.channels[k][t]


def test_grants_stay_inside_data_set(reference):
    lattice, configs, plan = reference
    alloc = allocate_dynamic(lattice, configs, plan)
    for row in alloc.channels:
        for grant in row:
            assert set(grant) <= plan.data_set
            assert not (set(grant) & plan.control_set)


def test_per_cycle_disjointness(reference):
    lattice, configs, plan = reference
    cs = cycle_structure(configs)
    act = activity_matrix(configs, cs)
    alloc = allocate_dynamic(lattice, configs, plan)
    cells = [cfg.pan_cell for cfg in configs]
    graph = build_interference_graph(lattice, cells, DATA_REUSE_METRIC)
    for t in range(cs.u_cycles):
        for a in range(len(configs)):
            for b in range(a + 1, len(configs)):
                if not (act.active[a][t] and act.active[b][t]):
                    continue
                if graph.has_edge(cells[a], cells[b]):
                    assert not (set(alloc.channels[a][t]) & set(alloc.channels[b][t]))


def test_dynamic_dominates_static(reference):
    lattice, configs, plan = reference
    _, k_static = allocate_static_data(lattice, plan)
    alloc = allocate_dynamic(lattice, configs, plan)
    for row in alloc.channels:
        for grant in row:
            if grant:
                assert len(grant) >= k_static


def test_isolation_maximality(reference):
    lattice, configs, plan = reference
    cs = cycle_structure(configs)
    act = activity_matrix(configs, cs)
    alloc = allocate_dynamic(lattice, configs, plan)
    cells = [cfg.pan_cell for cfg in configs]
    graph = build_interference_graph(lattice, cells, DATA_REUSE_METRIC)
    for t in range(cs.u_cycles):
        for k in range(len(configs)):
            if not act.active[k][t]:
                continue
            has_active_neighbor = any(
                act.active[m][t] and graph.has_edge(cells[k], cells[m])
                for m in range(len(configs))
                if m != k
            )
            if not has_active_neighbor:
                assert set(alloc.channels[k][t]) == plan.data_set


def test_major_cycle_periodicity(reference):
    lattice, configs, plan = reference
    cs = cycle_structure(configs)
    alloc = allocate_dynamic(lattice, configs, plan, num_cycles=2 * cs.u_cycles)
    u = cs.u_cycles
    for row in alloc.channels:
        assert row[:u] == row[u:]
    assert alloc.per_cycle_chi[:u] == alloc.per_cycle_chi[u:]


def test_all_active_reduces_to_static(europe_plan):
    lat = build_lattice(2, 1.0)
    configs = [SF(pan_cell=cell, so=1, bo=1) for cell in lat.cells]
    alloc = allocate_dynamic(lat, configs, europe_plan)
    groups, _ = allocate_static_data(lat, europe_plan)
    for k, cfg in enumerate(configs):
        for grant in alloc.channels[k]:
            assert grant == groups[cfg.pan_cell]


def test_duplicate_pan_cells_rejected(europe_plan):
    lat = build_lattice(1, 1.0)
    configs = [SF(pan_cell=C(0, 0), so=0, bo=0), SF(pan_cell=C(0, 0), so=0, bo=1)]
    with pytest.raises(ValueError):
        allocate_dynamic(lat, configs, europe_plan)


def test_pan_cell_must_be_in_lattice(europe_plan):
    lat = build_lattice(1, 1.0)
    with pytest.raises(NotInLatticeError):
        allocate_dynamic(lat, [SF(pan_cell=C(4, 4), so=0, bo=0)], europe_plan)


def test_exports_parse(reference):
    lattice, configs, plan = reference
    cs = cycle_structure(configs)
    act = activity_matrix(configs, cs)
    alloc = allocate_dynamic(lattice, configs, plan)
    activity_text = activity_csv(configs, act)
    assert activity_text.splitlines()[0] == "cycle,pan_i,pan_j,active"
    assert len(activity_text.strip().splitlines()) == 1 + cs.u_cycles * len(configs)
    alloc_text = allocation_csv(configs, act, alloc)
    assert alloc_text.splitlines()[0] == "cycle,pan_i,pan_j,active,chi,k,channels"
    doc = json.loads(allocation_json_doc(configs, cs, alloc))
    assert doc["u_cycles"] == 32
    assert len(doc["pans"]) == 12
    assert len(doc["pans"][0]["channels_per_cycle"]) == 32
