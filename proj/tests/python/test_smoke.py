import pytest

import confsched as cs


def e1():
    return cs.Instance(2, [2, 1, 3], [(0, 1)], "E1")


def test_instance_round_trip(tmp_path):
    inst = e1()
    assert (inst.n, inst.m, inst.p, inst.edges) == (3, 2, [2, 1, 3], [(0, 1)])
    assert cs.parse_instance(cs.format_instance(inst)) == inst
    path = tmp_path / "e1.txt.gz"
    cs.write_instance(inst, path)
    assert cs.read_instance(path) == inst
    with pytest.raises(ValueError, match="line"):
        cs.parse_instance("2 1\n1 1\n1 1\n")


def test_decoders_and_bounds():
    inst = e1()
    assert cs.decode(inst, [0, 1, 2], "ECTF")["value"] == 7
    assert cs.decode(inst, [0, 1, 2], "FIFO")["value"] == 8
    r = cs.decode(inst, [0, 1, 2], "GT")
    s = cs.Schedule(3)
    s.machines, s.starts = r["machines"], r["starts"]
    assert cs.check_feasible(inst, s)
    assert cs.total_flow_time(inst, s) == r["value"] == 8
    assert cs.bounds(inst)["best"] == 7
    with pytest.raises(ValueError):
        cs.decode(inst, [0, 1, 2], "SPT")


def test_exact_and_special_cases():
    inst = e1()
    assert cs.structure(inst) == "complement-of-star"
    assert cs.solve_special(inst)["value"] == 7
    assert cs.exact(inst)["value"] == cs.exact(inst, "ti")["value"] == 7
    assert cs.solve_special(cs.Instance(2, [1, 2, 1, 1], [(0, 1), (2, 3)])) is None


def test_ga_is_seeded():
    inst = cs.generate(15, 3, 2, 0.5, seed=5)
    a = cs.run_ga(inst, "tuning", seed=3, max_iters=2000)
    b = cs.run_ga(inst, "tuning", seed=3, max_iters=2000)
    assert a["value"] == b["value"] and a["generations"] == b["generations"]
    assert a["value"] >= cs.bounds(inst)["best"]


def test_lp_export():
    text = cs.export_lp(e1(), "F1")
    assert text.startswith("\\") and "Subject To" in text and text.rstrip().endswith("End")
    with pytest.raises(ValueError):
        cs.export_lp(e1(), "F3", 1)
