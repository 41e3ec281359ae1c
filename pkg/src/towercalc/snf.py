"""Smith normal form over the integers, with unimodular transforms.

Two computation paths share one contract:

* a compiled kernel (:mod:`towercalc._snfcore`, built from Cython) working in
  fixed-width 64-bit arithmetic, where every add/multiply is overflow-checked;
* a pure-Python path in arbitrary precision.

Results are exact either way. The dispatcher runs the kernel when it is
available and the input fits in 64 bits, and falls back to the pure path
whenever the kernel reports that an intermediate value would leave the
representable range. Overflow is detected, never wrapped.

>>> smith_normal_form([[2, 4], [6, 8]]).diagonal
(2, 4)
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import Matrix, as_matrix

try:
    from . import _snfcore
except ImportError:  # pure-Python install
    _snfcore = None

HAVE_COMPILED_KERNEL = _snfcore is not None

# Below this many entries the numpy round trip costs more than it saves.
_KERNEL_MIN_ENTRIES = 64


@dataclass(frozen=True)
class SNFResult:
    """Decomposition ``u @ a @ v == d`` with ``u``, ``v`` unimodular.

    ``diagonal`` holds the full diagonal of the min(m,n) pivots: the nonzero
    leading entries are the invariant factors (each nonnegative, each dividing
    the next), followed by zeros.
    """

    diagonal: tuple[int, ...]
    u: Matrix
    v: Matrix

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(x for x in self.diagonal if x != 0)

    @property
    def matrix(self) -> Matrix:
        """The diagonal matrix d, with the shape of the input."""
        return Matrix.diagonal(self.diagonal, self.u.rows, self.v.rows)


def smith_normal_form(a, method: str = "auto") -> SNFResult:
    """Diagonalize an integer matrix by unimodular row/column operations.

    ``a`` may be a :class:`Matrix` or any iterable of rows. ``method`` is
    ``"auto"`` (kernel when available and profitable), ``"pure"`` or
    ``"compiled"`` (fails if the extension is missing).

    >>> res = smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    >>> res.diagonal
    (1, 1, 1)
    """
    mat = as_matrix(a) if not _is_rowlist_without_width(a) else as_matrix(a, cols=0)
    if method not in ("auto", "pure", "compiled"):
        raise ValueError(f"unknown method {method!r}")
    if method == "compiled" and _snfcore is None:
        raise RuntimeError("compiled kernel is not available in this install")

    use_kernel = _snfcore is not None and method != "pure"
    if method == "auto" and mat.rows * mat.cols < _KERNEL_MIN_ENTRIES:
        use_kernel = False
    if use_kernel:
        result = _try_kernel(mat)
        if result is not None:
            return result
        if method == "compiled":
            raise OverflowError("input does not fit the 64-bit kernel")
    return _snf_pure(mat)


def invariant_diagonal(a, method: str = "auto") -> tuple[int, ...]:
    """The diagonal of the Smith form, without the transforms.

    Same exactness contract as :func:`smith_normal_form`; skipping the
    transform bookkeeping keeps intermediate values smaller, so the compiled
    kernel covers more inputs before falling back.
    """
    mat = as_matrix(a) if not _is_rowlist_without_width(a) else as_matrix(a, cols=0)
    if method not in ("auto", "pure", "compiled"):
        raise ValueError(f"unknown method {method!r}")
    if method == "compiled" and _snfcore is None:
        raise RuntimeError("compiled kernel is not available in this install")
    use_kernel = _snfcore is not None and method != "pure"
    if method == "auto" and mat.rows * mat.cols < _KERNEL_MIN_ENTRIES:
        use_kernel = False
    if use_kernel:
        diagonal = _try_kernel_diagonal(mat)
        if diagonal is not None:
            return diagonal
        if method == "compiled":
            raise OverflowError("input does not fit the 64-bit kernel")
    return _snf_pure(mat, want_transforms=False).diagonal


def _is_rowlist_without_width(a) -> bool:
    # [] means a 0 x 0 matrix when no width can be inferred.
    return not isinstance(a, Matrix) and isinstance(a, (list, tuple)) and len(a) == 0


def _try_kernel(mat: Matrix) -> SNFResult | None:
    import numpy as np

    try:
        arr = np.array(mat.to_lists(), dtype=np.int64).reshape(mat.rows, mat.cols)
    except OverflowError:
        return None
    try:
        diag, u, v = _snfcore.snf_i64(arr)
    except _snfcore.KernelOverflow:
        return None
    return SNFResult(
        diagonal=tuple(int(x) for x in diag),
        u=Matrix.from_rows([[int(x) for x in row] for row in u], cols=mat.rows),
        v=Matrix.from_rows([[int(x) for x in row] for row in v], cols=mat.cols),
    )


def _try_kernel_diagonal(mat: Matrix) -> tuple[int, ...] | None:
    import numpy as np

    try:
        arr = np.array(mat.to_lists(), dtype=np.int64).reshape(mat.rows, mat.cols)
    except OverflowError:
        return None
    try:
        diag, _, _ = _snfcore.snf_i64(arr, want_transforms=False)
    except _snfcore.KernelOverflow:
        return None
    return tuple(int(x) for x in diag)


# ---- pure-Python path ---------------------------------------------------


def _snf_pure(mat: Matrix, want_transforms: bool = True) -> SNFResult:
    m, n = mat.rows, mat.cols
    a = [list(row) for row in mat.data]
    if want_transforms:
        u = [[int(i == j) for j in range(m)] for i in range(m)]
        v = [[int(i == j) for j in range(n)] for i in range(n)]
    else:
        u = v = None

    t = 0
    while t < min(m, n):
        pivot = _find_pivot(a, t, m, n)
        if pivot is None:
            break
        pi, pj = pivot
        _swap_rows(a, u, t, pi)
        _swap_cols(a, v, t, pj)
        while True:
            if _clear_cross(a, u, v, t, m, n):
                continue
            # Pivot now divides everything it cleared; force it to divide the
            # rest of the submatrix so the invariant factors form a chain.
            bad = _find_nondivisible(a, t, m, n)
            if bad is None:
                break
            _add_row(a, u, t, bad, 1)
        if a[t][t] < 0:
            _negate_row(a, u, t)
        t += 1

    diag = tuple(a[i][i] for i in range(min(m, n)))
    if not want_transforms:
        return SNFResult(diag, Matrix.identity(m), Matrix.identity(n))
    return SNFResult(
        diagonal=diag,
        u=Matrix(m, m, tuple(tuple(r) for r in u)),
        v=Matrix(n, n, tuple(tuple(r) for r in v)),
    )


def _find_pivot(a, t, m, n):
    """Entry of minimal magnitude, ties broken by least fill-in.

    The Markowitz cost (nonzeros in row - 1)(nonzeros in column - 1) keeps
    boundary-like sparse matrices sparse during the reduction, which is what
    bounds coefficient growth in practice.
    """
    best_val = None
    row_nnz = [0] * m
    col_nnz = [0] * n
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            if row[j] != 0:
                row_nnz[i] += 1
                col_nnz[j] += 1
                ax = abs(row[j])
                if best_val is None or ax < best_val:
                    best_val = ax
    if best_val is None:
        return None
    best = None
    best_cost = None
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            if row[j] != 0 and abs(row[j]) == best_val:
                cost = (row_nnz[i] - 1) * (col_nnz[j] - 1)
                if best_cost is None or cost < best_cost:
                    best, best_cost = (i, j), cost
    return best


def _clear_cross(a, u, v, t, m, n) -> bool:
    """One reduction sweep of row t and column t.

    Returns True when a remainder was swapped into the pivot slot and the
    sweep must be restarted (the pivot magnitude strictly decreased).
    """
    for i in range(t + 1, m):
        if a[i][t] != 0:
            q = a[i][t] // a[t][t]
            if q:
                _add_row(a, u, i, t, -q)
            if a[i][t] != 0:
                _swap_rows(a, u, t, i)
                return True
    for j in range(t + 1, n):
        if a[t][j] != 0:
            q = a[t][j] // a[t][t]
            if q:
                _add_col(a, v, j, t, -q)
            if a[t][j] != 0:
                _swap_cols(a, v, t, j)
                return True
    return False


def _find_nondivisible(a, t, m, n):
    p = a[t][t]
    if p in (1, -1):
        return None
    for i in range(t + 1, m):
        row = a[i]
        for j in range(t + 1, n):
            if row[j] % p != 0:
                return i
    return None


def _swap_rows(a, u, i, j):
    a[i], a[j] = a[j], a[i]
    if u is not None:
        u[i], u[j] = u[j], u[i]


def _swap_cols(a, v, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]
    if v is not None:
        for row in v:
            row[i], row[j] = row[j], row[i]


def _add_row(a, u, dst, src, k):
    a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
    if u is not None:
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]


def _add_col(a, v, dst, src, k):
    for row in a:
        row[dst] += k * row[src]
    if v is not None:
        for row in v:
            row[dst] += k * row[src]


def _negate_row(a, u, i):
    a[i] = [-x for x in a[i]]
    if u is not None:
        u[i] = [-x for x in u[i]]
