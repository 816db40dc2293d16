"""Homological invariants of Nakayama algebras from Kupisch series."""

from .census import (
    EnumSpec,
    SpectrumResult,
    VerificationReport,
    iter_algebras,
    iter_cycle_series,
    iter_line_series,
    spectrum,
    verify,
)
from .classify import (
    CLineMarker,
    DOneParams,
    MoritaSpec,
    c_line,
    d1_gorenstein_criterion,
    d1_params,
    e_map,
    e_map_closed_form,
    e_map_inverse,
    is_higher_auslander,
    is_min_auslander_gorenstein,
    make_d1,
    morita_domdim_formula,
    morita_gorenstein,
    morita_nakayama,
    z_algebra,
    z_params,
    z_params_recursive,
)
from .core import (
    Algebra,
    QuiverKind,
    UniserialModule,
    canonical_form,
    cosyzygy,
    format_kupisch,
    hom_dim,
    injective_envelope,
    injectives,
    is_injective,
    is_projective,
    make_algebra,
    module,
    modules,
    opposite,
    parse_kupisch,
    projective_cover,
    projectives,
    simples,
    socle_vertex,
    syzygy,
    tau,
    tau_inverse,
    truncate_last_vertex,
)
from .errors import (
    InternalError,
    InvalidParams,
    InvalidSeries,
    InvalidSpec,
    NakayamaError,
    NotApplicable,
    NotInDomain,
    Semisimple,
    SelfinjectiveInput,
)
from .homology import (
    INFINITY,
    ExtNat,
    is_finite,
    FunctionalGraph,
    codomdim_module,
    defect,
    domdim_algebra,
    domdim_module,
    fin_dim,
    global_dim,
    gorenstein_dim,
    inj_dim,
    injective_resolution_quiver,
    is_quasi_hereditary_cyclic,
    phi_dim,
    proj_dim,
    resolution_quiver,
    scodomdim,
    sdomdim,
    shen_finite_gldim,
    shen_gorenstein,
)
from .reports import InvariantReport, compute_report, format_report, report_to_dict

__version__ = "0.1.0"
