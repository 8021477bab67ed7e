"""Shared test helpers: deterministic random matrices and idempotents."""

import random

from weakcp.fields import GF, QQ
from weakcp.kernel import Mat, identity_mat, mat_compose, rank, solve_right


def random_entry(rng, field):
    if field is QQ:
        return field.coerce(rng.randint(-4, 4))
    return field.coerce(rng.randrange(field.p))


def random_mat(rng, rows, cols, field) -> Mat:
    return Mat(
        rows, cols,
        tuple(random_entry(rng, field) for _ in range(rows * cols)),
        field,
    )


def random_idempotent(rng, n: int, field) -> Mat:
    """A random n x n idempotent of random positive rank.

    Built from a random full-column-rank injection i and a random left
    inverse p (p = (p0 i)^(-1) p0 for a p0 making p0 i invertible), so
    E = i p satisfies E^2 = E by construction.
    """
    r = rng.randint(1, n)
    while True:
        inj = random_mat(rng, n, r, field)
        if rank(inj) != r:
            continue
        p0 = random_mat(rng, r, n, field)
        gram = mat_compose(p0, inj)
        if rank(gram) != r:
            continue
        gram_inv = solve_right(gram, identity_mat(r, field))
        proj = mat_compose(gram_inv, p0)
        return mat_compose(inj, proj)


FIELDS = (QQ, GF(2), GF(3), GF(5))
