"""Certificates of integrality over commutative rings."""

from ._integra import (
    Element,
    IntegraError,
    ReesCertificate,
    Ring,
    RingCertificate,
    Semifiltration,
    SemifilCertificate,
    Verdict,
    charpoly,
    diff,
    drop,
    lift,
    lift_accel,
    lombardi,
    negate,
    pad,
    product,
    run_cli,
    semifil_product,
    semifil_sum,
    sum,
    transitivity,
    truncation,
    verify,
    verify_sf,
)

__all__ = [name for name in dir() if not name.startswith("_")]
