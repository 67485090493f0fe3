#!/usr/bin/env python3
"""Smoke test for the hypercycle_py extension module.

Builds are located automatically: run `cargo build -p hypercycle-py`
(optionally --release) first, then `python3 python/smoke_test.py`.
"""

import shutil
import sys
import tempfile
from fractions import Fraction
from math import log
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / profile / "libhypercycle_py.so"
        for profile in ("release", "debug")
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("build the extension first: cargo build -p hypercycle-py")
    src = max(built, key=lambda p: p.stat().st_mtime)
    stage = Path(tempfile.mkdtemp(prefix="hypercycle-py-"))
    shutil.copy(src, stage / "hypercycle_py.so")
    sys.path.insert(0, str(stage))
    import hypercycle_py

    return hypercycle_py


def main():
    hc = load_module()

    # constructions and basic structure
    c33 = hc.linear_cycle(3, 3)
    assert c33.vertex_count == 6 and c33.edge_count == 3
    sts = hc.steiner_triple_9()
    assert sts.vertex_count == 9 and sts.edge_count == 12
    assert sts.is_linear()
    assert sts.codegree([0, 1]) == 1

    # text format round trip
    again = hc.Hypergraph.from_text(sts.to_text())
    assert again == sts

    # exact counting against the brute oracle
    hom = hc.hom_count(c33, sts)
    assert hom == 504, hom
    assert hom == hc.brute_hom(c33, sts)
    assert hc.labeled_copy_count(c33, sts) == 432
    assert hc.automorphism_count(c33) == 6

    # girth with witness
    girth, witness = hc.berge_girth(sts)
    assert girth == 3 and witness is not None

    # densities: exact-integer Sidorenko verdict and the gap estimate
    assert hc.sidorenko_check(c33, sts) == "violated"
    gap = hc.gap_estimate(c33, sts)
    expected = log(Fraction(504, 9**6)) / log(Fraction(72, 729)) - 3
    assert abs(gap - expected) < 1e-9, (gap, expected)

    # blow-up identities
    b = hc.blow_up(sts, 2)
    assert b.vertex_count == 18 and b.edge_count == 12 * 8
    girth2, _ = hc.berge_girth(b)
    assert girth2 == 2

    # exponent algebra
    bounds = hc.bound_values(3, 2, 100, 5000)
    assert bounds["f_r"] == ("1", "1")
    assert bounds["conditional_lower_gap"] == ("1", "3")

    # pipeline on a dense random host
    g = hc.random_uniform(12, 3, 200, 7)
    out = hc.supersat_pipeline(g, 2, mode="shadow", budget=8, seed=1)
    assert all(rec["pass"] is not False for rec in out["records"])
    for cert in out["certificates"]:
        assert len(cert["hinges"]) == 5
        for edge in cert["edges"]:
            assert g.has_edge(edge)

    # greedy expansion on a complete 3-partite host
    edges = [
        [a, 6 + b, 12 + c] for a in range(6) for b in range(6) for c in range(6)
    ]
    host = hc.Hypergraph(3, 18, edges)
    expansion = hc.greedy_expand_cycles(host, 6, 2, budget=5)
    assert expansion["fast_path"] and expansion["count_is_exact"]
    assert expansion["count"] >= expansion["floor"]
    assert expansion["count"] > 0
    assert len(expansion["certificates"]) == 5

    print("smoke test OK")


if __name__ == "__main__":
    main()
