"""Normalized Schur-type characters: exact evaluation, asymptotics and applications."""
from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("artifact")
except PackageNotFoundError:
    __version__ = "0.1.0"

from .errors import SchurAsymError  # noqa: E402
from .symfunc import normalized_character, weyl_dim, symplectic_dim  # noqa: E402

__all__ = ["SchurAsymError", "normalized_character", "weyl_dim", "symplectic_dim", "__version__"]
