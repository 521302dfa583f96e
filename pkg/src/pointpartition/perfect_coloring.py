"""Optimal colorings and maximum SD_t-sets of chi_t-perfect graphs.

For a chi_t-perfect graph G every proper coloring of S_t(G) is an
SD_t-coloring of G, and every independent set of S_t(G) is an SD_t-set.  Both
problems therefore reduce to the simple graph S_t(G), which is solved here by
exact search.
"""

from __future__ import annotations

from .degeneracy import Coloring
from .exact import chi_t, maximum_independent_set
from .graph import MultiGraph, s_t
from .structural import PerfectionCertificate, perfection_certificate


class ImperfectGraphError(ValueError):
    """The input is not chi_t-perfect; ``certificate`` says why."""

    def __init__(self, certificate: PerfectionCertificate):
        super().__init__(str(certificate))
        self.certificate = certificate


def _require_perfect(G: MultiGraph, t: int) -> None:
    cert = perfection_certificate(G, t)
    if not cert.perfect:
        raise ImperfectGraphError(cert)


def color_perfect(G: MultiGraph, t: int) -> Coloring:
    """Optimal SD_t-coloring of a chi_t-perfect graph, using omega_t(G) colors."""
    _require_perfect(G, t)
    _, coloring = chi_t(s_t(G, t), 1)
    return coloring


def max_sdt_set_perfect(G: MultiGraph, t: int) -> tuple[int, ...]:
    """A maximum SD_t-set of a chi_t-perfect graph (maximum independent set of S_t(G))."""
    _require_perfect(G, t)
    return maximum_independent_set(s_t(G, t))
