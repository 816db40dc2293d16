import json

from nakayama import (
    INFINITY,
    QuiverKind,
    compute_report,
    make_algebra,
    report_to_dict,
)
from nakayama.reports import format_report, report_to_json_line
from conftest import small_algebras

C = QuiverKind.CYCLE
L = QuiverKind.LINE


def cyc(*c):
    return make_algebra(C, c)


def test_report_fields_cycle_example():
    r = compute_report(cyc(2, 4, 3, 3, 3))
    d = report_to_dict(r)
    assert d["v"] == 1
    assert d["kupisch"] == [2, 4, 3, 3, 3]
    assert d["defect"] == 2
    assert d["sdomdim"] == 5 and d["scodomdim"] == 4
    assert d["rq"]["sources"] == 2 and d["rq"]["connected"] is True
    assert d["rq"]["weight"] == [1, 1]
    assert d["phidim"] is None  # finite global dimension
    assert "d1" not in d  # defect 2


def test_report_selfinjective_nulls():
    d = report_to_dict(compute_report(cyc(3, 3, 3)))
    assert d["gldim"] == "inf" and d["gdim"] == 0
    assert d["sdomdim"] is None and d["scodomdim"] is None
    assert d["domdim"] == "inf"
    assert d["phidim"] == 0
    assert d["flags"]["selfinjective"] is True


def test_report_line_fields():
    d = report_to_dict(compute_report(make_algebra(L, (2, 2, 1))))
    assert d["kind"] == "line"
    assert d["rq"] is None and d["phidim"] is None
    assert d["flags"]["quasi_hereditary"] is True
    assert d["flags"]["higher_auslander"] is True


def test_report_d1_and_z_stamps():
    d = report_to_dict(compute_report(cyc(2, 2, 2, 3)))
    assert d["d1"] == {"a": 2, "s": 3}
    assert d["gldim"] == 4
    assert d["z"] == {"n": 4, "m": 1}
    # defect-1 but infinite gldim: d1 stamp only
    d = report_to_dict(compute_report(cyc(2, 2, 3, 3)))
    assert d["d1"] == {"a": 2, "s": 2}
    assert d["gldim"] == "inf"
    assert "z" not in d


def test_report_morita_stamp_passthrough():
    d = report_to_dict(compute_report(cyc(2, 2, 3), morita={"n": 2, "w": 2}))
    assert d["morita"] == {"n": 2, "w": 2}


def test_report_canonicalizes():
    d = report_to_dict(compute_report(cyc(3, 2, 2)))
    assert d["kupisch"] == [2, 2, 3]


def test_json_line_round_trips():
    for a in (cyc(2, 3), cyc(4, 4, 5, 6, 5), make_algebra(L, (3, 2, 2, 2, 1))):
        line = report_to_json_line(compute_report(a))
        rec = json.loads(line)
        assert rec["kupisch"] == list(a.c)
        assert "\n" not in line


def test_report_internal_consistency_small():
    for a in small_algebras(4, 7, 5):
        r = compute_report(a)
        if r.gldim != INFINITY:
            assert r.gdim == r.gldim == r.findim
            assert r.phidim is None
        else:
            assert r.gdim == INFINITY or r.gdim == r.findim
        if r.flags["higher_auslander"]:
            assert r.gldim == r.domdim and r.gldim >= 2
        if r.flags["min_auslander_gorenstein"]:
            assert r.gdim == r.domdim and r.gdim >= 2
        if r.rq is not None and not r.flags["selfinjective"]:
            assert r.rq["sources"] == r.defect
        assert r.flags["selfinjective"] == (r.defect == 0)
        if r.sdomdim is not None:
            n = r.algebra.n
            assert r.sdomdim <= 2 * n - max(r.defect, 1)


def test_format_report_human():
    text = format_report(compute_report(cyc(2, 4, 3, 3, 3)))
    assert "sdomdim    5" in text
    assert "rq         weight=1/1" in text
    text = format_report(compute_report(cyc(4, 4, 5, 6, 5)))
    assert "gdim       inf" in text
    assert "phidim     4" in text
