"""Exact rational linear algebra on sparse rows, backed by sympy's DomainMatrix.

Rows are ``{column: value}`` dicts with int or Fraction values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Row = Mapping[int, "int | Fraction"]


def _qq(v) -> object:
    if isinstance(v, Fraction):
        return QQ(v.numerator, v.denominator)
    return QQ(v)


def to_domain_matrix(rows: Sequence[Row], ncols: int) -> DomainMatrix:
    data = {i: {j: _qq(v) for j, v in r.items() if v} for i, r in enumerate(rows)}
    data = {i: r for i, r in data.items() if r}
    return DomainMatrix.from_dod(data, (len(rows), ncols), QQ) if rows else DomainMatrix.zeros((0, ncols), QQ)


def _fraction(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def rank(rows: Sequence[Row], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return to_domain_matrix(rows, ncols).rank()


def nullspace(rows: Sequence[Row], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of {x : M x = 0} as sparse vectors."""
    if not rows:
        return [{j: Fraction(1)} for j in range(ncols)]
    ns = to_domain_matrix(rows, ncols).nullspace().to_dense().rep.to_ddm()
    out = []
    for vec in ns:
        out.append({j: _fraction(v) for j, v in enumerate(vec) if v})
    return out


def solve(columns: Sequence[Row], target: Row, nrows: int) -> list[Fraction]:
    """Unique x with sum_j x_j * columns[j] == target; raises if none or not unique."""
    m = len(columns)
    rows: list[dict[int, Fraction]] = [dict() for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows[i][j] = Fraction(v)
    for i, v in target.items():
        rows[i][m] = Fraction(v)
    aug = to_domain_matrix(rows, m + 1)
    coeff_rank = rank([{j: v for j, v in r.items() if j < m} for r in rows], m)
    if aug.rank() != coeff_rank:
        raise ArithmeticError("target is not in the span of the columns")
    if coeff_rank != m:
        raise ArithmeticError("columns are linearly dependent; solution not unique")
    rref, pivots = aug.rref()
    dense = rref.to_dense().rep.to_ddm()
    x = [Fraction(0)] * m
    for r, p in enumerate(pivots):
        if p < m:
            x[p] = _fraction(dense[r][m])
    return x


def determinant(rows: Sequence[Sequence]) -> Fraction:
    n = len(rows)
    dm = to_domain_matrix([{j: v for j, v in enumerate(r)} for r in rows], n)
    return _fraction(dm.to_dense().det())
