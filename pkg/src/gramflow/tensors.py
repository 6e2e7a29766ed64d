"""Dense tensors over typed wire spaces: shapes, products, and file I/O.

Tensors are plain float64 numpy arrays; a rank-0 array is a scalar.  The
structure added here is the link between a grammatical type and an array
shape: every basic type is assigned a fixed dimension, and a simple type's
wire carries the dimension of its base regardless of adjoint order.  Each
space carries a fixed orthonormal basis and is identified with its dual,
which is what makes the delta cups and caps of :mod:`gramflow.semantics`
basis-meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold

import numpy as np

from .errors import ParseError, SpaceError
from .pregroup import BasicType, PregroupType

__all__ = ["SpaceAssignment", "shape_of", "kron", "cup", "read_tensor", "write_tensor"]


@dataclass(frozen=True)
class SpaceAssignment:
    """Dimension of the vector space attached to each basic type."""

    dims: dict

    def __post_init__(self):
        clean = {}
        for base, d in self.dims.items():
            name = base.name if isinstance(base, BasicType) else str(base)
            if int(d) < 1:
                raise ValueError(f"dimension for base {name!r} must be >= 1, got {d}")
            clean[name] = int(d)
        object.__setattr__(self, "dims", clean)

    def dim(self, base) -> int:
        name = base.name if isinstance(base, BasicType) else str(base)
        try:
            return self.dims[name]
        except KeyError:
            raise SpaceError(f"no dimension assigned to basic type {name!r}") from None


def shape_of(ptype: PregroupType, space: SpaceAssignment) -> tuple[int, ...]:
    """Shape of the tensor space a type lives in: one axis per simple type."""
    return tuple(space.dim(t.base) for t in ptype)


def kron(a, b) -> np.ndarray:
    """Tensor product with axis-concatenating shape.

    ``kron(a, b)[i..., j...] = a[i...] * b[j...]`` and the result shape is
    ``a.shape + b.shape`` (unlike ``np.kron``, which flattens axis pairs).
    Associative, with the rank-0 scalar 1 as unit.
    """
    return np.multiply.outer(np.asarray(a, dtype=float), np.asarray(b, dtype=float))


def kron_all(tensors) -> np.ndarray:
    """Left fold of :func:`kron` over a sequence; empty product is scalar 1."""
    tensors = list(tensors)
    if not tensors:
        return np.asarray(1.0)
    return _fold(kron, (np.asarray(t, dtype=float) for t in tensors))


def cup(d: int) -> np.ndarray:
    """The maximally correlated pair state: shape [d, d] with entries d_ij.

    Used both as a state (cup) and, read as a bilinear functional, as the
    cap that cancels a pair of wires by summing their matched coordinates.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    return np.eye(d)


def read_tensor(path) -> np.ndarray:
    """Read the whitespace tensor format.

    Line 1 holds the space-separated dimensions (empty for a rank-0 tensor),
    later lines hold the row-major values; ``#`` lines are comments.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if not line.lstrip().startswith("#")]
    if not lines:
        raise ParseError(f"{path}: empty tensor file")
    header = lines[0].split()
    try:
        shape = tuple(int(tok) for tok in header)
    except ValueError:
        raise ParseError(f"{path}: bad dimension line {lines[0]!r}") from None
    tokens = " ".join(lines[1:]).split()
    try:
        values = [float(tok) for tok in tokens]
    except ValueError:
        raise ParseError(f"{path}: non-numeric tensor value") from None
    expected = int(np.prod(shape, dtype=object)) if shape else 1
    if len(values) != expected:
        raise ParseError(f"{path}: expected {expected} values for shape {list(shape)}, got {len(values)}")
    return np.array(values, dtype=float).reshape(shape)


def write_tensor(tensor, path) -> None:
    """Write the whitespace tensor format; values round-trip bit-exactly."""
    arr = np.asarray(tensor, dtype=float)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(" ".join(str(d) for d in arr.shape) + "\n")
        if arr.ndim == 0:
            fh.write(repr(float(arr)) + "\n")
            return
        rows = arr.reshape(-1, arr.shape[-1]) if arr.ndim > 1 else arr.reshape(1, -1)
        for row in rows:
            fh.write(" ".join(repr(float(v)) for v in row) + "\n")
