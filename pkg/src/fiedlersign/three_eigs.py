"""Connected graphs whose Laplacian has exactly the three eigenvalues 0, alpha, n.

These are exactly K_p v N_r v ... v N_r (q copies), read off from the join
factors; the spectral property is only used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistencyError
from .graphcore import Graph, clique_number, complete, empty, is_connected, join
from .join_theory import decide_i01, join_factorization
from .spectra import laplacian_spectrum


@dataclass(frozen=True)
class ThreeEigsForm:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.p < 0 or self.q < 1 or self.r < 2 or self.p + self.q < 2:
            raise ValueError(f"invalid form p={self.p}, q={self.q}, r={self.r}")

    @property
    def n(self) -> int:
        return self.q * self.r + self.p

    @property
    def alpha(self) -> int:
        return self.r * (self.q - 1) + self.p

    @property
    def am(self) -> int:
        return self.q * (self.r - 1)

    @property
    def omega(self) -> int:
        return self.n - self.am

    def build(self) -> Graph:
        parts = [complete(self.p)] if self.p else []
        return join(*parts, *[empty(self.r)] * self.q)


def _spectral_three(g: Graph) -> tuple[bool, bool]:
    """(exactly three distinct Laplacian eigenvalues, largest equals n)."""
    spec = laplacian_spectrum(g)
    three = len(spec.groups) == 3
    return three, three and abs(spec.groups[0].value - g.n) <= 1e-7


def recognize_three_eigs(g: Graph) -> ThreeEigsForm | None:
    if not is_connected(g) or g.is_complete:
        raise ValueError("graph must be connected and non-complete")
    p, sizes = 0, set()
    ok = True
    for f in join_factorization(g):
        if f.n == 1:
            p += 1
        elif f.edge_count == 0:
            sizes.add(f.n)
        else:
            ok = False
    ok = ok and len(sizes) == 1
    form = None
    if ok:
        r = sizes.pop()
        q = (g.n - p) // r
        if p + q >= 2:
            form = ThreeEigsForm(p, q, r)
    _, spectral = _spectral_three(g)
    if spectral != (form is not None):
        raise InconsistencyError(f"three-eigenvalue spectrum={spectral} but join form={form}")
    return form


def classify(g: Graph) -> str:
    """'three-eigenvalue join', 'three-eigenvalue, non-join' or 'other'."""
    if recognize_three_eigs(g) is not None:
        return "three-eigenvalue join"
    three, _ = _spectral_three(g)
    return "three-eigenvalue, non-join" if three else "other"


def three_eigs_invariants(form: ThreeEigsForm, g: Graph) -> dict[str, bool]:
    spec = laplacian_spectrum(g)
    alpha_grp = spec.groups[1]
    return {
        "order": form.n == g.n,
        "alpha": abs(alpha_grp.value - form.alpha) <= 1e-7,
        "multiplicity": alpha_grp.multiplicity == form.am,
        "i_equals_1": decide_i01(g).verdict == "i=1",
        "clique_number": clique_number(g) == g.n - form.am,
    }
