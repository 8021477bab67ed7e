"""The associativity isomorphism for iterated crossed products.

Given two linked, twisted quadruples over a common monoid A with preunits,
the double crossed product can be formed in two ways: all at once on
A (x) (V (x) W), or in two stages, crossing A with V first and then the
result with W.  This module constructs both, builds the comparison map
omega between them, and verifies that omega is an isomorphism of monoids.

The two-stage monoid is obtained by transporting the product on
A (x) V (x) W along the splittings: first to (A x V) (x) W through the
inner projection/injection pair, then to the image of the restricted
idempotent.  Associativity and unitality of the result are re-verified
rather than inherited.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fdvect import (
    FMor,
    FObj,
    MonoidData,
    check_equal,
    check_monoid,
    compose,
    identity,
    tensor,
    vobj,
)
from .kernel import rank, split_idempotent
from .iterate import IterSetup, build_iterated, iterated_preunit, quadruple_vw
from .preunit import UnitalCrossedProduct, build_unital
from .report import Report, ReportItem
from .wcp import PreconditionError, nabla


def check_newit(s: IterSetup, nu_v: FMor, nu_w: FMor) -> Report:
    """The three extra identities that make the two-stage product work."""
    ida, idv, idw = s.ids()
    mu = s.qv.monoid.mul
    psi_v, psi_w = s.qv.psi, s.qw.psi
    sig_v, sig_w = s.qv.sigma, s.qw.sigma
    nab = nabla(quadruple_vw(s))
    rep = Report()
    inner1 = compose(tensor(mu, idv), tensor(ida, psi_v), tensor(sig_v, ida))
    inner2 = compose(tensor(mu, idv), tensor(ida, sig_v))
    rep.add(check_equal(
        "new-it-1",
        compose(nab, tensor(inner1, idw), tensor(idv, idv, nu_w)),
        compose(nab, tensor(inner2, idw), tensor(psi_v, s.tau),
                tensor(idv, nu_w, idv)),
    ))
    inner3 = compose(tensor(mu, idv), tensor(ida, psi_v))
    rep.add(check_equal(
        "new-it-2",
        compose(nab, tensor(sig_v, idw)),
        compose(tensor(inner3, idw), tensor(sig_v, psi_w),
                tensor(idv, s.delta, s.qv.monoid.unit)),
    ))
    rep.add(check_equal(
        "new-it-3",
        compose(nab, tensor(psi_v, idw), tensor(idv, sig_w)),
        compose(tensor(psi_v, idw), tensor(idv, sig_w), tensor(s.delta, idw)),
    ))
    return rep


@dataclass
class IsoBundle:
    """Staged state for the two-stage / one-shot comparison.

    Populated incrementally by build_embeddings, build_omega and
    verify_monoid_iso; ``report`` accumulates every check performed.
    """

    setup: IterSetup
    ucp_v: UnitalCrossedProduct  # the monoid A x V
    ucp_w: UnitalCrossedProduct  # the monoid A x W
    ucp_vw: UnitalCrossedProduct  # the monoid A x (V (x) W)
    nu_vw: FMor
    i_axv: FMor  # A x V -> A x (V (x) W)
    i_w: FMor  # W -> A x (V (x) W)
    nabla_axv_w: FMor  # restricted idempotent on (A x V) (x) W
    report: Report
    outer_obj: FObj | None = None
    inj_outer: FMor | None = None
    proj_outer: FMor | None = None
    omega: FMor | None = None
    omega_inv: FMor | None = None
    outer: MonoidData | None = None


def build_embeddings(s: IterSetup, nu_v: FMor, nu_w: FMor) -> IsoBundle:
    """Build all three crossed products and the two embedding morphisms.

    Verifies the three extra identities first, then checks that the
    embedding of A x V is a monoid morphism and that the restricted
    idempotent is idempotent and linear over A x V.
    """
    field = s.field
    ida, idv, idw = s.ids()
    mu = s.qv.monoid.mul

    qvw, _ = build_iterated(s)
    nu_vw, _ = iterated_preunit(s, nu_v, nu_w)
    ucp_vw = build_unital(qvw, nu_vw)
    ucp_v = build_unital(s.qv, nu_v)
    ucp_w = build_unital(s.qw, nu_w)

    rep = Report()
    rep.extend(check_newit(s, nu_v, nu_w))
    if not rep.ok:
        raise PreconditionError(
            "extra identities fail: " + ", ".join(rep.failed_labels()), rep
        )

    p_avw = ucp_vw.cp.proj
    p_av, i_av = ucp_v.cp.proj, ucp_v.cp.inj

    i_axv = compose(
        p_avw,
        tensor(mu, idv, idw),
        tensor(ida, s.qv.psi, idw),
        tensor(i_av, nu_w),
    )
    i_axv = FMor(ucp_v.cp.obj, ucp_vw.cp.obj, i_axv.mat)
    rep.add(check_equal(
        "i-axv-mult",
        compose(i_axv, ucp_v.cp.mul),
        compose(ucp_vw.cp.mul, tensor(i_axv, i_axv)),
    ))
    rep.add(check_equal("i-axv-unit", compose(i_axv, ucp_v.unit), ucp_vw.unit))

    i_w = compose(p_avw, tensor(nu_v, idw))
    i_w = FMor(s.qw.v, ucp_vw.cp.obj, i_w.mat)

    nab_small = compose(tensor(p_av, idw), ucp_vw.cp.nabla, tensor(i_av, idw))
    rep.add(check_equal(
        "nabla-axvw-idem", compose(nab_small, nab_small), nab_small
    ))
    rep.add(check_equal(
        "nabla-axvw-linear",
        compose(nab_small, tensor(ucp_v.cp.mul, idw)),
        compose(tensor(ucp_v.cp.mul, idw),
                tensor(identity(ucp_v.cp.obj, field), nab_small)),
    ))
    if not rep.ok:
        raise PreconditionError(
            "embedding verification failed: " + ", ".join(rep.failed_labels()),
            rep,
        )
    return IsoBundle(
        setup=s, ucp_v=ucp_v, ucp_w=ucp_w, ucp_vw=ucp_vw, nu_vw=nu_vw,
        i_axv=i_axv, i_w=i_w, nabla_axv_w=nab_small, report=rep,
    )


def build_omega(bundle: IsoBundle):
    """Split the restricted idempotent and build omega and its inverse.

    Checks that the two composites are identities both ways and that
    omega intertwines the projection with the product of the embeddings.
    Returns (omega, omega_inv) and records everything on the bundle.
    """
    s = bundle.setup
    field = s.field
    idw = identity(s.qw.v, field)
    ucp_v, ucp_vw = bundle.ucp_v, bundle.ucp_vw
    rep = bundle.report

    sp = split_idempotent(bundle.nabla_axv_w.mat)
    outer_obj = vobj(f"({ucp_v.cp.obj.factors[0][0]}xW)", sp.rank)
    inj = FMor(outer_obj, bundle.nabla_axv_w.dom, sp.inj)
    proj = FMor(bundle.nabla_axv_w.dom, outer_obj, sp.proj)

    omega = compose(ucp_vw.cp.proj, tensor(ucp_v.cp.inj, idw), inj)
    omega = FMor(outer_obj, ucp_vw.cp.obj, omega.mat)
    omega_inv = compose(proj, tensor(ucp_v.cp.proj, idw), ucp_vw.cp.inj)
    omega_inv = FMor(ucp_vw.cp.obj, outer_obj, omega_inv.mat)

    rep.add(check_equal(
        "omega-right-inv", compose(omega, omega_inv),
        identity(ucp_vw.cp.obj, field),
    ))
    rep.add(check_equal(
        "omega-left-inv", compose(omega_inv, omega),
        identity(outer_obj, field),
    ))
    rep.add(check_equal(
        "omega-compat",
        compose(omega, proj),
        compose(ucp_vw.cp.mul, tensor(bundle.i_axv, bundle.i_w)),
    ))
    if not rep.ok:
        raise PreconditionError(
            "omega verification failed: " + ", ".join(rep.failed_labels()), rep
        )
    bundle.outer_obj = outer_obj
    bundle.inj_outer = inj
    bundle.proj_outer = proj
    bundle.omega = omega
    bundle.omega_inv = omega_inv
    return omega, omega_inv


def verify_monoid_iso(bundle: IsoBundle) -> Report:
    """Equip the two-stage object with its monoid structure and compare.

    The product on (A x V) x W is the big product transported along the
    splittings; its unit is the transported preunit.  The monoid axioms
    are checked from scratch, then omega is verified to be a monoid
    isomorphism, and the two sides are confirmed to have equal dimension.
    """
    s = bundle.setup
    field = s.field
    idw = identity(s.qw.v, field)
    ucp_v, ucp_vw = bundle.ucp_v, bundle.ucp_vw
    inj, proj = bundle.inj_outer, bundle.proj_outer
    outer_obj = bundle.outer_obj
    rep = bundle.report

    mu_mid = compose(
        tensor(ucp_v.cp.proj, idw),
        ucp_vw.cp.mu_big,
        tensor(tensor(ucp_v.cp.inj, idw), tensor(ucp_v.cp.inj, idw)),
    )
    mu_outer = compose(proj, mu_mid, tensor(inj, inj))
    eta_outer = compose(proj, tensor(ucp_v.cp.proj, idw), bundle.nu_vw)
    outer = MonoidData(
        outer_obj.factors[0][0], outer_obj,
        FMor(outer_obj @ outer_obj, outer_obj, mu_outer.mat),
        FMor(eta_outer.dom, outer_obj, eta_outer.mat),
    )
    rep.extend(check_monoid(outer, prefix="outer-"))
    rep.add(check_equal(
        "omega-mult",
        compose(bundle.omega, outer.mul),
        compose(ucp_vw.cp.mul, tensor(bundle.omega, bundle.omega)),
    ))
    rep.add(check_equal(
        "omega-unit", compose(bundle.omega, outer.unit), ucp_vw.unit
    ))
    rep.add(ReportItem(
        "rank-match",
        outer_obj.dim == ucp_vw.cp.obj.dim
        and rank(bundle.nabla_axv_w.mat) == rank(ucp_vw.cp.nabla.mat),
    ))
    bundle.outer = outer
    return rep


def build_iso(s: IterSetup, nu_v: FMor, nu_w: FMor) -> IsoBundle:
    """Run the full pipeline: embeddings, omega, and the monoid check."""
    bundle = build_embeddings(s, nu_v, nu_w)
    build_omega(bundle)
    verify_monoid_iso(bundle)
    if not bundle.report.ok:
        raise PreconditionError(
            "isomorphism verification failed: "
            + ", ".join(bundle.report.failed_labels()),
            bundle.report,
        )
    return bundle
