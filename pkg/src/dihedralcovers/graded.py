"""Graded matrices: maps between twisted sums of line bundles on a line.

A :class:`GradedMatrix` represents a sheaf map

    O(-c_0) + ... + O(-c_{m-1})  -->  O(-r_0) + ... + O(-r_{n-1})

by an n x m array of binary forms where entry (i, j) is homogeneous of
degree c_j - r_i.  Entries whose forced degree is negative must be zero.
The twist lists are part of the data; composition and transposition
check them.

``kernel_basis`` computes a minimal generating set of the graded kernel
degree by degree.  On a line the kernel of a map of split bundles is
itself split, so the number of minimal generators equals the corank and
the search terminates; a degree bound derived from the column degrees
caps the loop defensively.

Rank is taken over the fraction field.  Setting x1 = 1 identifies each
form with a univariate polynomial without changing any minor's
vanishing, so fraction-free elimination on the dehomogenized matrix
gives the exact rank.
"""

from .poly import Poly
from .homog import HForm
from . import linalg


class GradedMatrix:
    __slots__ = ("field", "row_twists", "col_twists", "entries")

    def __init__(self, field, row_twists, col_twists, entries):
        self.field = field
        self.row_twists = list(row_twists)
        self.col_twists = list(col_twists)
        if len(entries) != len(self.row_twists):
            raise ValueError("row count mismatch")
        for i, row in enumerate(entries):
            if len(row) != len(self.col_twists):
                raise ValueError("column count mismatch in row %d" % i)
            for j, e in enumerate(row):
                want = self.col_twists[j] - self.row_twists[i]
                if e is None:
                    row[j] = HForm.zero(field, 2, max(want, 0))
                    e = row[j]
                if want < 0:
                    if not e.is_zero():
                        raise ValueError("entry (%d,%d) must vanish: degree %d < 0"
                                         % (i, j, want))
                elif e.deg != want:
                    raise ValueError("entry (%d,%d) has degree %d, expected %d"
                                     % (i, j, e.deg, want))
        self.entries = entries

    @property
    def nrows(self):
        return len(self.row_twists)

    @property
    def ncols(self):
        return len(self.col_twists)

    def entry(self, i, j):
        return self.entries[i][j]

    def transpose(self):
        """The dual map, with all twists negated."""
        ent = [[self.entries[i][j] for i in range(self.nrows)]
               for j in range(self.ncols)]
        return GradedMatrix(self.field,
                            [-c for c in self.col_twists],
                            [-r for r in self.row_twists], ent)

    def twist(self, k):
        """Tensor source and target by O(-k)."""
        return GradedMatrix(self.field,
                            [r + k for r in self.row_twists],
                            [c + k for c in self.col_twists],
                            [list(row) for row in self.entries])

    def compose(self, other):
        """self after other; other's target twists must match self's source."""
        if other.row_twists != self.col_twists:
            raise ValueError("twist mismatch in composition")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                deg = other.col_twists[j] - self.row_twists[i]
                acc = HForm.zero(self.field, 2, max(deg, 0))
                for k in range(self.ncols):
                    t = self.entries[i][k] * other.entries[k][j]
                    if not t.is_zero():
                        acc = acc + t
                row.append(acc)
            out.append(row)
        return GradedMatrix(self.field, self.row_twists, other.col_twists, out)

    def univar(self):
        """Entries as univariate polynomials (x1 = 1)."""
        return [[e.to_univar() for e in row] for row in self.entries]

    def rank(self):
        return linalg.bareiss_rank(self.univar(), Poly.one(self.field))

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.row_twists == other.row_twists
                and self.col_twists == other.col_twists
                and self.entries == other.entries)

    def __repr__(self):
        return "GradedMatrix(rows=%s, cols=%s, %s)" % (
            self.row_twists, self.col_twists, self.entries)


def kernel_basis(m):
    """Minimal homogeneous generators of ker(m) as a GradedMatrix.

    The returned matrix K maps a twisted sum onto the kernel subsheaf of
    m's source: m.compose(K) vanishes and K has full column rank equal
    to m.ncols - m.rank().
    """
    field = m.field
    nullity = m.ncols - m.rank()
    gens = []          # list of (twist, [Poly per source column])
    if nullity == 0:
        return GradedMatrix(field, list(m.col_twists), [], [[] for _ in m.col_twists])
    uni = m.univar()
    tmin = min(m.col_twists)
    span = sum(max(max((e.deg for e in (m.entries[i][j] for i in range(m.nrows))
                        if not e.is_zero()), default=0), 0) + 1
               for j in range(m.ncols))
    t = tmin
    while len(gens) < nullity:
        if t > tmin + span + max(m.col_twists) - tmin:
            raise RuntimeError("kernel degree bound exceeded; matrix is not graded-consistent")
        # unknowns: coefficients of a degree (t - c_j) form per column j
        offs = []
        pos = 0
        for c in m.col_twists:
            d = t - c
            offs.append((pos, d))
            if d >= 0:
                pos += d + 1
        nunk = pos
        if nunk:
            rows = []
            for i in range(m.nrows):
                dtar = t - m.row_twists[i]
                if dtar < 0:
                    continue
                for k in range(dtar + 1):
                    row = [field.zero] * nunk
                    for j in range(m.ncols):
                        o, d = offs[j]
                        if d < 0:
                            continue
                        e = uni[i][j]
                        for s in range(d + 1):
                            a = e.coeff(k - s)
                            if a:
                                row[o + s] = row[o + s] + a
                    rows.append(row)
            sols = linalg.nullspace(rows, field) if rows else [
                [field.one if idx == q else field.zero for idx in range(nunk)]
                for q in range(nunk)]
            if sols:
                # quotient out shifts of generators found in lower degrees
                old = []
                for tw, vec in gens:
                    for s in range(t - tw + 1):
                        shifted = [field.zero] * nunk
                        for j in range(m.ncols):
                            o, d = offs[j]
                            g = vec[j].shift(s)
                            for q in range(d + 1):
                                a = g.coeff(q)
                                if a:
                                    shifted[o + q] = shifted[o + q] + a
                        old.append(shifted)
                basis = list(old)
                r0 = linalg.rank(basis) if basis else 0
                for v in sols:
                    cand = basis + [v]
                    if linalg.rank(cand) > r0:
                        basis = cand
                        r0 += 1
                        polys = []
                        for j in range(m.ncols):
                            o, d = offs[j]
                            polys.append(Poly(field, [v[o + q] for q in range(d + 1)])
                                         if d >= 0 else Poly.zero(field))
                        gens.append((t, polys))
                        if len(gens) == nullity:
                            break
        t += 1
    gens.sort(key=lambda g: g[0])
    col_tw = [tw for tw, _ in gens]
    ent = []
    for j in range(m.ncols):
        row = []
        for tw, vec in gens:
            d = tw - m.col_twists[j]
            row.append(HForm.from_univar(vec[j], d) if d >= 0
                       else HForm.zero(field, 2, 0))
        ent.append(row)
    return GradedMatrix(field, list(m.col_twists), col_tw, ent)
