import json

import pytest

import srgddg


def test_generate_and_recognize():
    g = srgddg.symplectic_complement(2, 2)
    assert g.order == 15
    p = srgddg.srg_params(g)
    assert (p["v"], p["k"], p["lambda"], p["mu"]) == (15, 8, 4, 4)
    assert srgddg.spectrum(g) == [(8, 1), (2, 5), (-2, 9)]
    assert srgddg.srg_params(srgddg.cycle(5)) is None


def test_graph6_roundtrip():
    g = srgddg.petersen()
    assert g.graph6() == "IheA@GUAo"
    assert srgddg.Graph.from_graph6("IheA@GUAo") == g
    with pytest.raises(srgddg.SrgddgError):
        srgddg.Graph.from_graph6("I!!")


def test_decompose_and_rebuild():
    g = srgddg.symplectic_complement(2, 3)
    res = srgddg.decompose(g, all=False)
    dec = res["decompositions"][0]
    assert dec["ddg"] == {"V": 36, "K": 24, "lambda1": 15, "lambda2": 16, "m": 4, "n": 9}
    assert dec["design"]["k"] == 3

    keep = [v for v in range(g.order) if v not in dec["coclique"]]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges() if a in index and b in index]
    delta = srgddg.Graph.from_edges(len(keep), edges)
    classes = [[index[v] for v in cls] for cls in dec["classes"]]
    out = srgddg.construct(delta, classes, dec["design"]["blocks"], [1, 0, 3, 2])
    assert srgddg.srg_params(out)["v"] == 40
    assert srgddg.are_isomorphic(out, g)


def test_grid_has_no_decomposition():
    res = srgddg.decompose(srgddg.grid(6, 6))
    assert res["cocliques_examined"] == 720
    assert res["decompositions"] == []


def test_theory():
    rows = srgddg.feasible(-6, -6, 40)
    assert [r["n"] for r in rows] == [9, 12, 36]
    assert [r["handshake_ok"] for r in rows] == [False, True, True]
    verdicts = srgddg.match_cases(40, 27, 18, 18)
    accepted = [m for m in verdicts if m["verdict"] == "accepted"]
    assert len(accepted) == 1 and accepted[0]["m"] == 4


def test_cli_from_python():
    code, out, _ = srgddg.run_cli(["gen", "petersen"])
    assert code == 0
    code, out, _ = srgddg.run_cli(["recognize", "-"], out)
    assert code == 0
    assert json.loads(out)["results"][0]["srg"]["k"] == 3
    code, _, err = srgddg.run_cli(["nope"])
    assert code == 2 and err
