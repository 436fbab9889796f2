"""Kernel backend selection: numba-jitted loops or pure-numpy vector code.

Both backends produce the same uniform streams bit-for-bit (the generator
is integer arithmetic); float kernels agree to rounding error.  The
BENFORDLAB_BACKEND environment variable chooses the initial backend:

    auto   use numba when importable, else numpy (default)
    numba  require numba, fail fast if missing
    numpy  force the pure-numpy fallback

The variable is read once at import and only selects the numerical engine;
all command-line behaviour is configured through flags.
"""
import os

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

_VALID = ("auto", "numba", "numpy")


def _resolve(choice: str) -> str:
    if choice not in _VALID:
        raise ValueError(
            f"unknown backend {choice!r}; expected one of {_VALID}"
        )
    if choice == "numba" and not HAVE_NUMBA:
        raise ImportError("BENFORDLAB_BACKEND=numba but numba is not installed")
    if choice == "auto":
        return "numba" if HAVE_NUMBA else "numpy"
    return choice


_active = _resolve(os.environ.get("BENFORDLAB_BACKEND", "auto").lower())


def get_backend() -> str:
    """Name of the backend currently executing the hot kernels."""
    return _active


def set_backend(name: str) -> str:
    """Switch kernel backend at runtime; returns the previous name."""
    global _active
    previous = _active
    _active = _resolve(name.lower())
    return previous


def using_numba() -> bool:
    return _active == "numba"
