"""Kernel backend selection.

The compiled extension is preferred when it was built; otherwise the
pure-Python kernels are used.  Both expose the same functions with the
same exact-integer semantics, and ``benchmarks/bench_backends.py``
compares their speed.
"""

try:
    from . import _kernels as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on how the package was built
    from . import _kernels_py as _impl

    BACKEND = "python"

circle_points = _impl.circle_points
disc_points = _impl.disc_points
disc_card_enum = _impl.disc_card_enum
intersection_card = _impl.intersection_card
boundaries_share_pixel = _impl.boundaries_share_pixel
hausdorff_points = _impl.hausdorff_points


def available_backends():
    """Map of backend name to kernel module, for tests and benchmarks."""
    from . import _kernels_py

    out = {}
    try:
        from . import _kernels

        out["compiled"] = _kernels
    except ImportError:  # pragma: no cover
        pass
    out["python"] = _kernels_py
    return out
