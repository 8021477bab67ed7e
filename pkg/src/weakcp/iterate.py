"""Iteration of weak crossed products over a common monoid.

Two quadruples (A, V, psi_V, sigma_V) and (A, W, psi_W, sigma_W) sharing
the monoid A can be combined into a quadruple on V (x) W when a link
morphism Delta : V (x) W -> V (x) W and a twisting morphism
tau : W (x) V -> V (x) W satisfying the compatibility conditions below
are supplied.  This module builds the combined quadruple and its preunit,
checking every hypothesis and every claimed consequence along the way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fdvect import FMor, check_equal, compose, identity, tensor
from .preunit import check_pre_system, check_preunit_axioms
from .report import Report
from .wcp import (
    PreconditionError,
    Quadruple,
    check_cocycle,
    check_quadruple,
    check_twisted,
    check_wmeas,
    nabla,
    product_mu,
)


@dataclass(frozen=True)
class IterSetup:
    """Two quadruples over one monoid, with link and twisting morphisms."""

    qv: Quadruple
    qw: Quadruple
    delta: FMor  # V (x) W -> V (x) W
    tau: FMor  # W (x) V -> V (x) W

    def __post_init__(self):
        if self.qv.monoid is not self.qw.monoid and not (
            self.qv.monoid == self.qw.monoid
        ):
            raise ValueError("the two quadruples must share the same monoid")
        v, w = self.qv.v, self.qw.v
        if (self.delta.dom.dim, self.delta.cod.dim) != ((v @ w).dim,) * 2:
            raise ValueError("link morphism must be an endomap of V (x) W")
        if (self.tau.dom.dim, self.tau.cod.dim) != ((w @ v).dim, (v @ w).dim):
            raise ValueError("twisting morphism must map W (x) V to V (x) W")

    @property
    def field(self):
        return self.qv.field

    def ids(self):
        f = self.field
        return (
            identity(self.qv.a, f),
            identity(self.qv.v, f),
            identity(self.qw.v, f),
        )


def psi_iter(s: IterSetup) -> FMor:
    """psi on V (x) W: (psi_V (x) W) o (V (x) psi_W) o (Delta (x) A)."""
    ida, idv, idw = s.ids()
    raw = compose(tensor(s.qv.psi, idw), tensor(idv, s.qw.psi), tensor(s.delta, ida))
    vw, a = s.qv.v @ s.qw.v, s.qv.a
    return FMor(vw @ a, a @ vw, raw.mat)


def nabla_iter(s: IterSetup) -> FMor:
    """The canonical idempotent on A (x) V (x) W for the combined psi."""
    return nabla(quadruple_vw(s))


def sigma_iter(s: IterSetup) -> FMor:
    """sigma on V (x) W built from sigma_V, sigma_W and the twisting."""
    ida, idv, idw = s.ids()
    mu = s.qv.monoid.mul
    raw = compose(
        tensor(mu, idv, idw),
        tensor(ida, s.qv.psi, idw),
        tensor(s.qv.sigma, s.qw.sigma),
        tensor(idv, s.tau, idw),
    )
    vw, a = s.qv.v @ s.qw.v, s.qv.a
    return FMor(vw @ vw, a @ vw, raw.mat)


def quadruple_vw(s: IterSetup) -> Quadruple:
    """The combined quadruple on V (x) W (without any checking)."""
    return Quadruple(s.qv.monoid, s.qv.v @ s.qw.v, psi_iter(s), sigma_iter(s))


def check_link(s: IterSetup) -> Report:
    """Link-morphism conditions and their claimed consequences.

    The combined psi must absorb Delta on the left and be fixed by the
    combined idempotent; as a consequence it is itself a weak measuring.
    All four statements are verified, not assumed.
    """
    ida, idv, idw = s.ids()
    psi_vw = psi_iter(s)
    qvw = quadruple_vw(s)
    nab = nabla(qvw)
    rep = Report()
    rep.add(check_equal(
        "falso-idemp",
        psi_vw,
        compose(tensor(ida, s.delta), psi_vw),
    ))
    rep.add(check_equal(
        "falso-idemp2",
        psi_vw,
        compose(nab, tensor(s.qv.psi, idw), tensor(idv, s.qw.psi)),
    ))
    wm = check_wmeas(qvw)
    rep.add(wm)
    rep.add(check_equal("falso-idemp-link", psi_vw, compose(nab, psi_vw)))
    return rep


def check_twisting(s: IterSetup) -> Report:
    """The two defining conditions for the twisting morphism tau."""
    ida, idv, idw = s.ids()
    mu = s.qv.monoid.mul
    psi_v, psi_w = s.qv.psi, s.qw.psi
    sig_v, sig_w = s.qv.sigma, s.qw.sigma
    rep = Report()
    rep.add(check_equal(
        "twisting-i",
        compose(tensor(psi_v, idw), tensor(idv, psi_w), tensor(s.tau, ida)),
        compose(tensor(ida, s.tau), tensor(psi_w, idv), tensor(idw, psi_v)),
    ))
    rep.add(check_equal(
        "twisting-ii",
        compose(
            tensor(mu, idv, idw),
            tensor(ida, sig_v, idw),
            tensor(psi_v, s.tau),
            tensor(idv, sig_w, idv),
            tensor(s.tau, idw, idv),
        ),
        compose(
            tensor(mu, idv, idw),
            tensor(ida, psi_v, idw),
            tensor(ida, idv, sig_w),
            tensor(ida, s.tau, idw),
            tensor(psi_w, idv, idw),
            tensor(idw, sig_v, idw),
            tensor(idw, idv, s.tau),
        ),
    ))
    return rep


def check_sigma_conditions(s: IterSetup) -> Report:
    """Compatibility of the combined sigma with the link morphism."""
    sig = sigma_iter(s)
    ida, idv, idw = s.ids()
    idvw = tensor(idv, idw)
    rep = Report()
    rep.add(check_equal("sigma1", sig, compose(sig, tensor(s.delta, idvw))))
    rep.add(check_equal("sigma2", sig, compose(sig, tensor(idvw, s.delta))))
    rep.add(check_equal("sigma3", sig, compose(tensor(ida, s.delta), sig)))
    return rep


def build_iterated(s: IterSetup):
    """Build the combined quadruple on V (x) W and verify everything.

    Hypotheses: both quadruples satisfy the twisted and cocycle
    conditions, Delta is a link morphism, tau a twisting morphism, and
    the combined sigma is compatible with Delta.  Consequences re-checked
    on the result: the combined quadruple again satisfies the weak
    measuring, twisted, cocycle and normalization conditions.

    Returns (combined quadruple, report).
    """
    pre = Report()
    for q, tag in ((s.qv, "first"), (s.qw, "second")):
        for item in (check_wmeas(q), check_twisted(q), check_cocycle(q)):
            pre.add(type(item)(item.label, item.passed, item.witness,
                               note=f"{tag} factor"))
    pre.extend(check_link(s))
    pre.extend(check_twisting(s))
    pre.extend(check_sigma_conditions(s))
    if not pre.ok:
        raise PreconditionError(
            "iteration hypotheses fail: " + ", ".join(pre.failed_labels()), pre
        )
    qvw = quadruple_vw(s)
    rep = Report()
    rep.extend(pre)
    rep.extend(check_quadruple(qvw))
    if not rep.ok:
        raise PreconditionError(
            "combined quadruple fails: " + ", ".join(rep.failed_labels()), rep
        )
    return qvw, rep


def check_iterated_preunit_hypotheses(s: IterSetup, nu_v: FMor, nu_w: FMor) -> Report:
    """The two extra equations needed to combine the two preunits."""
    ida, idv, idw = s.ids()
    mu = s.qv.monoid.mul
    qvw = quadruple_vw(s)
    nab = nabla(qvw)
    target = compose(nab, tensor(s.qv.monoid.unit, idv, idw))
    rep = Report()
    rep.add(check_equal(
        "pre-1",
        compose(
            tensor(mu, idv, idw),
            tensor(ida, s.qv.sigma, idw),
            tensor(s.qv.psi, s.tau),
            tensor(idv, s.qw.psi, idv),
            tensor(s.delta, nu_v),
        ),
        target,
    ))
    rep.add(check_equal(
        "pre-2",
        compose(
            tensor(mu, idv, idw),
            tensor(ida, s.qv.psi, idw),
            tensor(ida, idv, s.qw.sigma),
            tensor(ida, s.tau, idw),
            tensor(nu_w, idv, idw),
        ),
        target,
    ))
    return rep


def iterated_preunit(s: IterSetup, nu_v: FMor, nu_w: FMor):
    """Combine preunits of the two factors into one for V (x) W.

    nu = nabla o (mu (x) V (x) W) o (A (x) psi_V (x) W) o (nu_V (x) nu_W).
    The hypotheses and the resulting full preunit system for the combined
    quadruple are verified; returns (nu, report).
    """
    for q, nu, tag in ((s.qv, nu_v, "first"), (s.qw, nu_w, "second")):
        chk = check_preunit_axioms(product_mu(q), nu, label="preunit")
        if not chk.passed:
            raise PreconditionError(
                f"the {tag} preunit is not a preunit for its product",
                Report([chk]),
            )
    pre = check_iterated_preunit_hypotheses(s, nu_v, nu_w)
    if not pre.ok:
        raise PreconditionError(
            "iterated preunit hypotheses fail: "
            + ", ".join(pre.failed_labels()),
            pre,
        )
    ida, idv, idw = s.ids()
    mu = s.qv.monoid.mul
    qvw = quadruple_vw(s)
    nab = nabla(qvw)
    raw = compose(
        nab,
        tensor(mu, idv, idw),
        tensor(ida, s.qv.psi, idw),
        tensor(nu_v, nu_w),
    )
    nu_vw = FMor(raw.dom, qvw.a @ qvw.v, raw.mat)
    rep = Report()
    rep.extend(pre)
    rep.add(check_preunit_axioms(product_mu(qvw), nu_vw, label="iterated-preunit"))
    rep.extend(check_pre_system(qvw, nu_vw))
    if not rep.ok:
        raise PreconditionError(
            "iterated preunit fails verification: "
            + ", ".join(rep.failed_labels()),
            rep,
        )
    return nu_vw, rep
