"""Pure numpy implementations of the partition-check kernels.

Same signatures and semantics as the compiled module _ckernels; selected by
wepart.kernels when the extension is unavailable (or WEPART_NO_EXT is set).

All kernels take the CSR adjacency (indptr, indices; 0-based int32), the
Perron weights nu (float64), the 0-based cell assignment (int32), and the
cell count m.
"""

from __future__ import annotations

import numpy as np


def _weighted_cell_sums(indptr: np.ndarray, indices: np.ndarray,
                        nu: np.ndarray, cell: np.ndarray, m: int) -> np.ndarray:
    """T[u, j] = sum of nu_v over neighbors v of u lying in cell j."""
    n = len(indptr) - 1
    rep = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    flat = rep * m + cell[indices]
    return np.bincount(flat, weights=nu[indices], minlength=n * m).reshape(n, m)


def _cell_spread(rows: np.ndarray, cell: np.ndarray, m: int) -> float:
    """Max over (i, j) of the within-cell-i spread of rows[u, j]."""
    lo = np.full((m, rows.shape[1]), np.inf)
    hi = np.full((m, rows.shape[1]), -np.inf)
    np.minimum.at(lo, cell, rows)
    np.maximum.at(hi, cell, rows)
    return float((hi - lo).max())


def we_deviation(indptr, indices, nu, cell, m: int) -> float:
    """Largest within-cell spread of the weight-intersection numbers."""
    t = _weighted_cell_sums(indptr, indices, nu, cell, m)
    return _cell_spread(t / nu[:, np.newaxis], cell, m)


def eq_deviation(indptr, indices, cell, m: int) -> int:
    """Largest within-cell spread of the plain neighbor counts (exact)."""
    n = len(indptr) - 1
    rep = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    flat = rep * m + cell[indices].astype(np.int64)
    counts = np.bincount(flat, minlength=n * m).reshape(n, m)
    lo = np.full((m, m), np.iinfo(np.int64).max, dtype=np.int64)
    hi = np.full((m, m), np.iinfo(np.int64).min, dtype=np.int64)
    np.minimum.at(lo, cell, counts)
    np.maximum.at(hi, cell, counts)
    return int((hi - lo).max())


def commutator_deviation(indptr, indices, nu, cell, m: int) -> float:
    """‖A X - X A‖_inf (entrywise max) for the projector X of the partition.

    Uses A X = T diag-scaled and X A = (A X)^T for symmetric A and X:
    (A X)[u, w] = T[u, cell(w)] * nu_w / ‖rho(cell(w))‖^2.
    """
    t = _weighted_cell_sums(indptr, indices, nu, cell, m)
    s2 = np.bincount(cell, weights=nu * nu, minlength=m)
    ax = t[:, cell] * (nu / s2[cell])[np.newaxis, :]
    return float(np.abs(ax - ax.T).max())
