"""Full invariant bundles per algebra, with JSONL and human rendering.

The JSON schema is versioned ("v": 1) and stable: kupisch, kind, n, defect,
gldim, findim, domdim, sdomdim, scodomdim, gdim, phidim, flags, rq, plus the
optional classification stamps d1, z, and morita.  Infinite dimensions render
as the string "inf"; inapplicable fields are null.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .classify import (
    d1_params,
    is_higher_auslander,
    is_min_auslander_gorenstein,
    z_match,
)
from .core import Algebra, QuiverKind, canonical_form, format_kupisch
from .homology import (
    INFINITY,
    defect,
    domdim_algebra,
    fin_dim,
    global_dim,
    gorenstein_dim,
    is_quasi_hereditary_cyclic,
    phi_dim,
    resolution_quiver,
    scodomdim,
    sdomdim,
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class InvariantReport:
    """Everything this package knows about one algebra, canonical form."""

    algebra: Algebra
    defect: int
    gldim: object
    findim: int
    domdim: object
    sdomdim: int | None
    scodomdim: int | None
    gdim: object
    phidim: int | None
    flags: dict
    rq: dict | None
    d1: dict | None
    z: dict | None
    morita: dict | None


def compute_report(a: Algebra, morita: dict | None = None) -> InvariantReport:
    a = canonical_form(a)
    selfinj = a.selfinjective
    gldim = global_dim(a)
    cyclic = a.kind is QuiverKind.CYCLE

    rq = None
    if cyclic:
        graph = resolution_quiver(a)
        weight = graph.weight()
        rq = {
            "weight": [weight.numerator, weight.denominator],
            "cycles": len(graph.cycles),
            "sources": len(graph.sources),
            "connected": graph.connected,
        }

    if cyclic:
        quasi_hereditary = is_quasi_hereditary_cyclic(a)
    else:
        quasi_hereditary = True  # directed quiver
    flags = {
        "selfinjective": selfinj,
        "higher_auslander": is_higher_auslander(a),
        "min_auslander_gorenstein": is_min_auslander_gorenstein(a),
        "quasi_hereditary": quasi_hereditary,
    }

    p = d1_params(a)
    zm = z_match(a)
    return InvariantReport(
        algebra=a,
        defect=defect(a),
        gldim=gldim,
        findim=fin_dim(a),
        domdim=domdim_algebra(a),
        sdomdim=None if selfinj else sdomdim(a),
        scodomdim=None if selfinj else scodomdim(a),
        gdim=gorenstein_dim(a),
        phidim=phi_dim(a) if cyclic and gldim == INFINITY else None,
        flags=flags,
        rq=rq,
        d1=None if p is None else {"a": p.a, "s": p.s},
        z=None if zm is None else {"n": zm[0], "m": zm[1]},
        morita=morita,
    )


def _ext(value):
    if value is None:
        return None
    return "inf" if value == INFINITY else int(value)


def report_to_dict(r: InvariantReport) -> dict:
    a = r.algebra
    out = {
        "v": SCHEMA_VERSION,
        "kupisch": list(a.c),
        "kind": a.kind.value,
        "n": a.n,
        "defect": r.defect,
        "gldim": _ext(r.gldim),
        "findim": r.findim,
        "domdim": _ext(r.domdim),
        "sdomdim": r.sdomdim,
        "scodomdim": r.scodomdim,
        "gdim": _ext(r.gdim),
        "phidim": r.phidim,
        "flags": r.flags,
        "rq": r.rq,
    }
    if r.d1 is not None:
        out["d1"] = r.d1
    if r.z is not None:
        out["z"] = r.z
    if r.morita is not None:
        out["morita"] = r.morita
    return out


def report_to_json_line(r: InvariantReport) -> str:
    return json.dumps(report_to_dict(r), sort_keys=False, separators=(",", ":"))


def format_report(r: InvariantReport) -> str:
    a = r.algebra

    def show(value):
        v = _ext(value)
        return "-" if v is None else str(v)

    lines = [
        f"kupisch    {format_kupisch(a)}  ({a.kind.value}, n={a.n}, dim={a.dim})",
        f"defect     {r.defect}",
        f"gldim      {show(r.gldim)}",
        f"findim     {r.findim}",
        f"domdim     {show(r.domdim)}",
        f"sdomdim    {show(r.sdomdim)}",
        f"scodomdim  {show(r.scodomdim)}",
        f"gdim       {show(r.gdim)}",
        f"phidim     {show(r.phidim)}",
        "flags      " + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in r.flags.items()),
    ]
    if r.rq is not None:
        w = r.rq["weight"]
        lines.append(
            f"rq         weight={w[0]}/{w[1]} cycles={r.rq['cycles']}"
            f" sources={r.rq['sources']} connected={'yes' if r.rq['connected'] else 'no'}"
        )
    if r.d1 is not None:
        lines.append(f"d1         a={r.d1['a']} s={r.d1['s']}")
    if r.z is not None:
        lines.append(f"z          n={r.z['n']} m={r.z['m']}")
    if r.morita is not None:
        lines.append(f"morita     n={r.morita['n']} w={r.morita['w']}")
    return "\n".join(lines)
