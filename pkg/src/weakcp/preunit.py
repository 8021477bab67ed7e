"""Preunits and unital crossed products.

A preunit is a map nu : K -> A (x) V that plays the role of a unit for the
crossed-product multiplication on A (x) V even though A (x) V itself is
not a monoid; it induces a genuine unit on the split image.  This module
decides the preunit system for a quadruple, builds the resulting monoid,
and runs the converse direction: recovering (psi, sigma) from an abstract
associative product with preunit.
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
)
from .report import Report, ReportItem
from .wcp import (
    CrossedProduct,
    PreconditionError,
    Quadruple,
    build_crossed_product,
    nabla,
    product_mu,
)


def beta_nu(q: Quadruple, nu: FMor) -> FMor:
    """beta = (mu (x) V) o (A (x) nu) : A -> A (x) V."""
    _, idv = q.ids()
    ida = identity(q.a, q.field)
    return compose(tensor(q.monoid.mul, idv), tensor(ida, nu))


def nabla_nu(m: FMor, nu: FMor) -> FMor:
    """The idempotent m o (A (x) V (x) nu) induced by a preunit."""
    av_dim = m.cod.dim
    id_av = identity(m.cod, m.field)
    if m.dom.dim != av_dim * av_dim:
        raise ValueError("product must be a binary operation on its codomain")
    return compose(m, tensor(id_av, nu))


def check_preunit_axioms(m: FMor, nu: FMor, label: str = "preunit") -> ReportItem:
    """nu is a preunit for m: right and left absorption agree and equal
    absorption of nu*nu."""
    id_av = identity(m.cod, m.field)
    right = compose(m, tensor(id_av, nu))
    left = compose(m, tensor(nu, id_av))
    square = compose(m, tensor(id_av, compose(m, tensor(nu, nu))))
    item = check_equal(label, right, left, note="right vs left")
    if item.passed:
        item = check_equal(label, right, square, note="vs squared preunit")
    if item.passed:
        item = ReportItem(label, True)
    return item


def check_pre_system(q: Quadruple, nu: FMor) -> Report:
    """The three compatibility equations tying nu to (psi, sigma)."""
    ida, idv = q.ids()
    mu = q.monoid.mul
    muv = tensor(mu, idv)
    nab = nabla(q)
    target = compose(nab, tensor(q.monoid.unit, idv))
    rep = Report()
    rep.add(check_equal(
        "pre1-wcp",
        compose(muv, tensor(ida, q.sigma), tensor(q.psi, idv), tensor(idv, nu)),
        target,
    ))
    rep.add(check_equal(
        "pre2-wcp",
        compose(muv, tensor(ida, q.sigma), tensor(nu, idv)),
        target,
    ))
    rep.add(check_equal(
        "pre3-wcp",
        compose(muv, tensor(ida, q.psi), tensor(nu, ida)),
        beta_nu(q, nu),
    ))
    rep.add(check_equal("preunit-idemp", compose(nab, nu), nu))
    return rep


@dataclass(frozen=True)
class UnitalCrossedProduct:
    """A weak crossed product with preunit: a monoid on the split image."""

    cp: CrossedProduct
    nu: FMor
    unit: FMor
    monoid: MonoidData
    report: Report


def build_unital(q: Quadruple, nu: FMor) -> UnitalCrossedProduct:
    """Build the monoid on the image of nabla from a preunit.

    Verifies the preunit system first; afterwards re-checks that nu is a
    genuine preunit for the product, that the two idempotents (from psi
    and from nu) coincide, the full monoid axioms for the induced unit,
    and that beta transported to the image is a monoid morphism.
    """
    pre = check_pre_system(q, nu)
    if not pre.ok:
        raise PreconditionError(
            "preunit system fails: " + ", ".join(pre.failed_labels()), pre
        )
    cp = build_crossed_product(q)
    unit = compose(cp.proj, nu)
    axv = MonoidData(cp.obj.factors[0][0], cp.obj, cp.mul, unit)

    rep = Report()
    rep.extend(pre)
    rep.add(check_preunit_axioms(cp.mu_big, nu))
    rep.add(check_equal("nu-nabla", nabla_nu(cp.mu_big, nu), cp.nabla))
    rep.extend(check_monoid(axv, prefix="product-"))

    ida = identity(q.a, q.field)
    beta = beta_nu(q, nu)
    rep.add(check_equal("beta-eta", compose(beta, q.monoid.unit), nu))
    rep.add(check_equal(
        "beta-mult",
        compose(cp.mu_big, tensor(beta, beta)),
        compose(beta, q.monoid.mul),
    ))
    rep.add(check_equal(
        "beta-linear",
        compose(beta, q.monoid.mul),
        compose(tensor(q.monoid.mul, identity(q.v, q.field)), tensor(ida, beta)),
    ))
    beta_bar = compose(cp.proj, beta)
    rep.add(check_equal(
        "beta-bar-mult",
        compose(cp.mul, tensor(beta_bar, beta_bar)),
        compose(beta_bar, q.monoid.mul),
    ))
    rep.add(check_equal("beta-bar-unit", compose(beta_bar, q.monoid.unit), unit))
    if not rep.ok:
        raise PreconditionError(
            "unital construction postconditions failed: "
            + ", ".join(rep.failed_labels()),
            rep,
        )
    return UnitalCrossedProduct(cp=cp, nu=nu, unit=unit, monoid=axv, report=rep)


def derive_psi_sigma(a: MonoidData, v: FObj, m: FMor, nu: FMor):
    """Recover (psi, sigma) from an abstract product with preunit.

    Given an associative, left A-linear product m on A (x) V that is
    normalized with respect to the idempotent induced by its preunit nu,
    returns a quadruple whose canonical crossed-product multiplication
    reproduces m, together with the report of all hypothesis checks.
    """
    field = a.field
    av = m.cod
    id_av = identity(av, field)
    ida, idv = identity(a.obj, field), identity(v, field)
    muv = tensor(a.mul, idv)

    hyp = Report()
    hyp.add(check_equal(
        "product-assoc",
        compose(m, tensor(m, id_av)),
        compose(m, tensor(id_av, m)),
    ))
    hyp.add(check_equal(
        "product-linear",
        compose(m, tensor(muv, id_av)),
        compose(muv, tensor(ida, m)),
    ))
    hyp.add(check_preunit_axioms(m, nu))
    nab = nabla_nu(m, nu)
    hyp.add(check_equal("product-normal-left", compose(nab, m), m))
    hyp.add(check_equal(
        "product-normal-right", compose(m, tensor(nab, nab)), m
    ))
    if not hyp.ok:
        raise PreconditionError(
            "product fails recovery hypotheses: "
            + ", ".join(hyp.failed_labels()),
            hyp,
        )

    beta = compose(muv, tensor(ida, nu))
    psi = compose(m, tensor(a.unit, idv, beta))
    sigma = compose(m, tensor(a.unit, idv, a.unit, idv))
    psi = FMor(v @ a.obj, a.obj @ v, psi.mat)
    sigma = FMor(v @ v, a.obj @ v, sigma.mat)
    q = Quadruple(a, v, psi, sigma)

    hyp.add(check_equal("fi-wcp", product_mu(q), m, note="round trip"))
    if not hyp.ok:
        raise PreconditionError("recovered quadruple does not reproduce the product", hyp)
    return q, hyp
