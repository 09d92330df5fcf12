"""One-shot verification of the rank-3 polytope for a given ``n``.

A certificate records every check as ``true``, ``false`` or ``null``; null
means the check did not run (skipped lattice, or an earlier stage failed),
which is different from failing.  The field order is fixed; see
``CERTIFICATE_FIELDS``.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, fields
from typing import Optional

from .construction import build_group
from .errors import RegpolyError
from .fpgroup import DEFAULT_MAX_COSETS, check_self_dual, paper_presentation, verify_presentation
from .polytope import build_lattice, check_diamond, check_strong_connectivity, enumerate_flags
from .sggi import GeneratorSystem, check_sggi, intersection_condition_full, intersection_condition_rank3

LATTICE_MAX_N = 10

CHECKS = ("sggi_ok", "intersection_ok", "diamond_ok", "connectivity_ok",
          "self_dual", "presentation_verified")


@dataclass
class Certificate:
    n: int
    group_order: Optional[int] = None
    schlafli_type: Optional[list[int]] = None
    flag_count: Optional[int] = None
    sggi_ok: Optional[bool] = None
    intersection_ok: Optional[bool] = None
    diamond_ok: Optional[bool] = None
    connectivity_ok: Optional[bool] = None
    self_dual: Optional[bool] = None
    presentation_verified: Optional[bool] = None
    elapsed_ms: int = 0
    tool_version: str = ""
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        """No check false, no error, and the flag count (if computed)
        matches the group order."""
        if self.error is not None:
            return False
        if any(getattr(self, name) is False for name in CHECKS):
            return False
        return self.flag_count is None or self.flag_count == self.group_order

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


CERTIFICATE_FIELDS = tuple(f.name for f in fields(Certificate))


def _version() -> str:
    from . import __version__
    return __version__


def verify(n: int, skip_lattice: Optional[bool] = None,
           max_cosets: int = DEFAULT_MAX_COSETS) -> Certificate:
    """Run every check for ``n`` and return the certificate.

    ``skip_lattice=None`` means skip only when ``n > LATTICE_MAX_N``.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if skip_lattice is None:
        skip_lattice = n > LATTICE_MAX_N
    cert = Certificate(n, tool_version=_version())
    start = time.perf_counter()
    try:
        _run(cert, n, skip_lattice, max_cosets)
    except RegpolyError as exc:
        cert.error = f"{type(exc).__name__}: {exc}"
    cert.elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    return cert


def _run(cert: Certificate, n: int, skip_lattice: bool, max_cosets: int) -> None:
    group = build_group(n)
    cert.group_order = group.order
    sys = GeneratorSystem(tuple(group.generators), group)

    rep = check_sggi(sys)
    cert.schlafli_type = list(rep.schlafli)
    cert.sggi_ok = rep.ok and rep.schlafli == (n, n)
    cert.intersection_ok = intersection_condition_rank3(sys) and intersection_condition_full(sys)

    if not skip_lattice:
        lat = build_lattice(sys)
        cert.flag_count = len(enumerate_flags(lat))
        cert.diamond_ok = check_diamond(lat)
        cert.connectivity_ok = check_strong_connectivity(lat)

    cert.presentation_verified = verify_presentation(n, max_cosets).ok
    cert.self_dual = check_self_dual(sys, paper_presentation(n))
