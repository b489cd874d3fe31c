"""Bundled algebra and extension files."""
from __future__ import annotations

from importlib import resources
from pathlib import Path

from .formats import load_algebra, load_extension

ALGEBRAS = ("abelian2", "heisenberg", "sl2", "solvable2", "solvable3")
EXTENSIONS = ("heisenberg-center", "affine-line", "sl2-plane")


def path(filename: str) -> Path:
    return Path(str(resources.files("wreathlie") / "data" / filename))


def algebra(name: str):
    return load_algebra(path(f"{name}.alg"))


def extension(name: str):
    """``(Extension, Section)`` for a bundled ``.ext`` file."""
    return load_extension(path(f"{name}.ext"))


def algebra_paths() -> list[Path]:
    return [path(f"{n}.alg") for n in ALGEBRAS]


def extension_paths() -> list[Path]:
    return [path(f"{n}.ext") for n in EXTENSIONS]
