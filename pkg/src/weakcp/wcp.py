"""Weak crossed products.

The central datum is a quadruple (A, V, psi, sigma): a monoid A, a space V,
a weak measuring psi : V (x) A -> A (x) V and a cocycle-like map
sigma : V (x) V -> A (x) V.  From these the engine builds the canonical
idempotent on A (x) V, the crossed product on its split image, and decides
every defining and derived identity by exact matrix comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fdvect import (
    FMor,
    FObj,
    MonoidData,
    check_equal,
    compose,
    identity,
    mor_eq,
    tensor,
    vobj,
)
from .kernel import Splitting, split_idempotent
from .report import Report, ReportItem


class PreconditionError(ValueError):
    """A construction was attempted on data failing its preconditions.

    Carries the report whose failing items explain which identities broke.
    """

    def __init__(self, message, report: Report):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Quadruple:
    """A quadruple (A, V, psi, sigma).

    ``psi`` must be a map V (x) A -> A (x) V and ``sigma`` a map
    V (x) V -> A (x) V; shapes are validated on construction.
    """

    monoid: MonoidData
    v: FObj
    psi: FMor
    sigma: FMor

    def __post_init__(self):
        a, v = self.monoid.obj, self.v
        if (self.psi.dom.dim, self.psi.cod.dim) != ((v @ a).dim, (a @ v).dim):
            raise ValueError(
                f"psi has shape {self.psi.dom!r} -> {self.psi.cod!r}, "
                f"expected {v @ a!r} -> {a @ v!r}"
            )
        if (self.sigma.dom.dim, self.sigma.cod.dim) != ((v @ v).dim, (a @ v).dim):
            raise ValueError(
                f"sigma has shape {self.sigma.dom!r} -> {self.sigma.cod!r}, "
                f"expected {v @ v!r} -> {a @ v!r}"
            )

    @property
    def field(self):
        return self.monoid.field

    @property
    def a(self) -> FObj:
        return self.monoid.obj

    def ids(self):
        """(id_A, id_V) over the quadruple's field."""
        return identity(self.a, self.field), identity(self.v, self.field)


def nabla(q: Quadruple) -> FMor:
    """The canonical idempotent on A (x) V.

    nabla = (mu (x) V) o (A (x) psi) o (A (x) V (x) eta).
    """
    ida, idv = q.ids()
    return compose(
        tensor(q.monoid.mul, idv),
        tensor(ida, q.psi),
        tensor(ida, idv, q.monoid.unit),
    )


def check_wmeas(q: Quadruple) -> ReportItem:
    """Weak measuring: (mu(x)V) o (A(x)psi) o (psi(x)A) = psi o (V(x)mu)."""
    ida, idv = q.ids()
    return check_equal(
        "wmeas-wcp",
        compose(tensor(q.monoid.mul, idv), tensor(ida, q.psi), tensor(q.psi, ida)),
        compose(q.psi, tensor(idv, q.monoid.mul)),
    )


def check_twisted(q: Quadruple) -> ReportItem:
    """Twisted condition relating psi and sigma."""
    ida, idv = q.ids()
    mu = q.monoid.mul
    return check_equal(
        "twis-wcp",
        compose(tensor(mu, idv), tensor(ida, q.psi), tensor(q.sigma, ida)),
        compose(
            tensor(mu, idv),
            tensor(ida, q.sigma),
            tensor(q.psi, idv),
            tensor(idv, q.psi),
        ),
    )


def check_cocycle(q: Quadruple) -> ReportItem:
    """2-cocycle condition for sigma."""
    ida, idv = q.ids()
    mu = q.monoid.mul
    return check_equal(
        "cocy2-wcp",
        compose(tensor(mu, idv), tensor(ida, q.sigma), tensor(q.sigma, idv)),
        compose(
            tensor(mu, idv),
            tensor(ida, q.sigma),
            tensor(q.psi, idv),
            tensor(idv, q.sigma),
        ),
    )


def check_sigma_normalized(q: Quadruple) -> ReportItem:
    """nabla o sigma = sigma."""
    return check_equal("idemp-sigma-inv", compose(nabla(q), q.sigma), q.sigma)


def normalize_sigma(q: Quadruple) -> Quadruple:
    """Replace sigma by nabla o sigma, which is always normalized."""
    return Quadruple(q.monoid, q.v, q.psi, compose(nabla(q), q.sigma))


def check_quadruple(q: Quadruple) -> Report:
    """All defining conditions plus the idempotency of nabla.

    The idempotency and left A-linearity of nabla are consequences of the
    weak measuring condition, but they are re-checked rather than trusted.
    """
    rep = Report()
    rep.add(check_wmeas(q))
    rep.add(check_twisted(q))
    rep.add(check_cocycle(q))
    rep.add(check_sigma_normalized(q))
    nab = nabla(q)
    rep.add(check_equal("idem-wcp", compose(nab, nab), nab))
    ida, idv = q.ids()
    muv = tensor(q.monoid.mul, idv)
    rep.add(check_equal(
        "nabla-left-linear",
        compose(nab, muv),
        compose(muv, tensor(ida, nab)),
    ))
    return rep


def product_mu(q: Quadruple) -> FMor:
    """The crossed-product multiplication on A (x) V.

    mu_{A(x)V} = (mu (x) V) o (mu (x) sigma) o (A (x) psi (x) V).
    """
    ida, idv = q.ids()
    mu = q.monoid.mul
    return compose(
        tensor(mu, idv),
        tensor(mu, q.sigma),
        tensor(ida, q.psi, idv),
    )


def check_derived_identities(q: Quadruple) -> Report:
    """Consequences of the defining conditions, with applicability tracking.

    The first identity needs only the weak measuring condition; the next
    two hold under the twisted condition; the last two additionally need
    sigma normalized.  Identities whose hypotheses fail on the given data
    are reported as not applicable instead of being asserted.
    """
    ida, idv = q.ids()
    mu = q.monoid.mul
    nab = nabla(q)
    muv = tensor(mu, idv)
    rep = Report()

    base = compose(muv, tensor(ida, q.psi))
    mid = check_equal("fi-nab", compose(base, tensor(nab, ida)), base)
    if mid.passed:
        mid = check_equal("fi-nab", base, compose(nab, base))
    rep.add(mid)

    twisted = check_twisted(q).passed
    sig_part = compose(muv, tensor(ida, q.sigma), tensor(q.psi, idv))
    if twisted:
        rep.add(check_equal(
            "c1",
            compose(sig_part, tensor(idv, nab)),
            compose(nab, sig_part),
        ))
        rep.add(check_equal(
            "aw",
            compose(nab, muv, tensor(ida, q.sigma), tensor(nab, idv)),
            compose(nab, muv, tensor(ida, q.sigma)),
        ))
    else:
        note = "requires the twisted condition, which fails on this data"
        rep.add(ReportItem("c1", None, note=note))
        rep.add(ReportItem("aw", None, note=note))

    normalized = twisted and mor_eq(compose(nab, q.sigma), q.sigma)
    if normalized:
        rep.add(check_equal(
            "c11",
            compose(sig_part, tensor(idv, nab)),
            sig_part,
        ))
        rep.add(check_equal(
            "aw1",
            compose(muv, tensor(ida, q.sigma), tensor(nab, idv)),
            compose(muv, tensor(ida, q.sigma)),
        ))
    else:
        note = "requires the twisted condition and a normalized sigma"
        rep.add(ReportItem("c11", None, note=note))
        rep.add(ReportItem("aw1", None, note=note))
    return rep


@dataclass(frozen=True)
class CrossedProduct:
    """A built weak crossed product.

    ``obj`` is the split image of nabla with injection ``inj`` and
    projection ``proj``; ``mu_big`` is the product on A (x) V and ``mul``
    the induced associative product on the image.  ``report`` records the
    post-construction verifications.
    """

    quad: Quadruple
    nabla: FMor
    obj: FObj
    inj: FMor
    proj: FMor
    mu_big: FMor
    mul: FMor
    report: Report

    @property
    def rank(self) -> int:
        return self.obj.dim


def split_nabla(q: Quadruple):
    """Split the canonical idempotent; returns (obj, inj, proj, nabla)."""
    nab = nabla(q)
    s: Splitting = split_idempotent(nab.mat)
    av = q.a @ q.v
    vname = ".".join(n for n, _ in q.v.factors) or "K"
    name = f"({q.monoid.name}x{vname})"
    obj = vobj(name, s.rank)
    inj = FMor(obj, av, s.inj)
    proj = FMor(av, obj, s.proj)
    return obj, inj, proj, nab


def build_crossed_product(q: Quadruple, require_normalized: bool = True) -> CrossedProduct:
    """Construct the weak crossed product, verifying everything.

    Preconditions (weak measuring, twisted, cocycle, and optionally a
    normalized sigma) are checked first; on failure a PreconditionError
    carrying the offending report is raised.  After the construction the
    associativity and normalization of the product are re-verified and the
    results recorded in the returned report.
    """
    pre = Report()
    pre.add(check_wmeas(q))
    pre.add(check_twisted(q))
    pre.add(check_cocycle(q))
    if require_normalized:
        pre.add(check_sigma_normalized(q))
    if not pre.ok:
        raise PreconditionError(
            "quadruple fails: " + ", ".join(pre.failed_labels()), pre
        )

    obj, inj, proj, nab = split_nabla(q)
    mu_big = product_mu(q)
    mul = compose(proj, mu_big, tensor(inj, inj))

    ida, idv = q.ids()
    av = q.a @ q.v
    id_av = identity(av, q.field)
    rep = Report()
    rep.extend(pre)
    rep.add(check_equal(
        "assoc-big",
        compose(mu_big, tensor(mu_big, id_av)),
        compose(mu_big, tensor(id_av, mu_big)),
    ))
    rep.add(check_equal("normal-left", compose(nab, mu_big), mu_big))
    rep.add(check_equal(
        "normal-right", compose(mu_big, tensor(nab, nab)), mu_big
    ))
    rep.add(check_equal(
        "otra-prop", compose(mu_big, tensor(nab, id_av)), mu_big
    ))
    rep.add(check_equal(
        "vieja-proof", compose(mu_big, tensor(id_av, nab)), mu_big
    ))
    idx = identity(obj, q.field)
    rep.add(check_equal(
        "assoc",
        compose(mul, tensor(mul, idx)),
        compose(mul, tensor(idx, mul)),
    ))
    if not rep.ok:
        raise PreconditionError(
            "construction postconditions failed: "
            + ", ".join(rep.failed_labels()),
            rep,
        )
    return CrossedProduct(
        quad=q, nabla=nab, obj=obj, inj=inj, proj=proj,
        mu_big=mu_big, mul=mul, report=rep,
    )
