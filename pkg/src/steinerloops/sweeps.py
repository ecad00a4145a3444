"""Backend selection for the assignment-sweep kernels.

The compiled extension (``_fastsweep``, built from Cython) is preferred; the
pure-Python module ``_pysweep`` is a drop-in replacement used when the
extension was not built.  ``steinerloops.sweeps.BACKEND`` names the active
one.  Run ``benchmarks/bench_sweeps.py`` to compare them.
"""

try:
    from . import _fastsweep as _impl
except ImportError:  # extension not compiled; fall back to pure Python
    from . import _pysweep as _impl

BACKEND: str = _impl.BACKEND


def first_divergence(lhs_code, rhs_code, n: int, flat, k: int) -> int:
    """First assignment index where the two postfix codes evaluate unequally.

    Assignments of ``k`` variables over ``0..n-1`` are enumerated in
    lexicographic order (first variable most significant); returns -1 when
    the codes agree everywhere.
    """
    return _impl.first_divergence(lhs_code, rhs_code, n, flat, k)


def fingerprint(code, n: int, flat, k: int) -> bytes:
    """Packed value vector of one postfix code over the full sweep.

    Two terms get equal fingerprints on a table exactly when the identity
    between them holds in that table.
    """
    return _impl.fingerprint(code, n, flat, k)
