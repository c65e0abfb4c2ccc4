"""Sparse exact linear algebra over the rationals.

Everything the duality checks need reduces to three primitives on
sparse rational vectors: rank, membership in a row space, and the null
space of a sparse system (for commutants).  Vectors are dicts mapping
coordinate -> Fraction with no explicit zeros; matrices store their
entries the same way keyed by (row, col).  No tolerances anywhere."""

from fractions import Fraction
from typing import Iterable

from .diagrams import SizeGuardError

COMMUTANT_UNKNOWN_LIMIT = 70_000


class ExactMatrix:
    """Immutable sparse matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict):
        clean = {}
        for (r, c), v in entries.items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r},{c}) outside {rows}x{cols}")
            v = Fraction(v)
            if v:
                clean[(r, c)] = v
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, d: int):
        return cls(d, d, {(i, i): 1 for i in range(d)})

    @classmethod
    def zero(cls, rows: int, cols: int):
        return cls(rows, cols, {})

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __add__(self, other):
        self._check_shape(other)
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out.get(key, 0) + v
        return ExactMatrix(self.rows, self.cols, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return ExactMatrix(
            self.rows, self.cols, {key: c * v for key, v in self.entries.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = {}
        for (r, m), a in self.entries.items():
            for c, b in by_row.get(m, ()):
                key = (r, c)
                out[key] = out.get(key, 0) + a * b
        return ExactMatrix(self.rows, other.cols, out)

    def transpose(self):
        return ExactMatrix(
            self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def vectorize(self) -> dict:
        """Flatten to a sparse vector, coordinate = row*cols + col."""
        return {r * self.cols + c: v for (r, c), v in self.entries.items()}

    def row_dicts(self):
        rows = {}
        for (r, c), v in self.entries.items():
            rows.setdefault(r, {})[c] = v
        return [rows.get(r, {}) for r in range(self.rows)]

    def _check_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, {len(self.entries)} entries)"


class RowSpace:
    """Incrementally built row-echelon basis of sparse rational vectors.

    Pivot rows are normalized to a leading 1 at their pivot coordinate;
    reduction always eliminates the smallest remaining coordinate, so
    reduce() terminates and membership tests are exact."""

    def __init__(self):
        self.pivot_rows: dict[int, dict] = {}

    @property
    def dimension(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, vector: dict) -> dict:
        v = {c: Fraction(x) for c, x in vector.items() if x}
        while v:
            c = min(v)
            pivot = self.pivot_rows.get(c)
            if pivot is None:
                return v
            coef = v.pop(c)
            for cc, pv in pivot.items():
                if cc == c:
                    continue
                nv = v.get(cc, 0) - coef * pv
                if nv:
                    v[cc] = nv
                else:
                    v.pop(cc, None)
        return v

    def add(self, vector: dict) -> bool:
        """Reduce and absorb; True iff the vector enlarged the space."""
        v = self.reduce(vector)
        if not v:
            return False
        c = min(v)
        lead = v[c]
        self.pivot_rows[c] = {cc: vv / lead for cc, vv in v.items()}
        return True

    def contains(self, vector: dict) -> bool:
        return not self.reduce(vector)


def rank(m: ExactMatrix) -> int:
    space = RowSpace()
    for row in m.row_dicts():
        space.add(row)
    return space.dimension


def span_dimension(matrices: Iterable[ExactMatrix]) -> int:
    """Dimension of the span of the given matrices inside End(space)."""
    space = RowSpace()
    for m in matrices:
        space.add(m.vectorize())
    return space.dimension


def in_span(target: ExactMatrix, basis: Iterable[ExactMatrix]) -> bool:
    space = RowSpace()
    for m in basis:
        space.add(m.vectorize())
    return space.contains(target.vectorize())


def commutant_basis(
    generators: Iterable[ExactMatrix], d: int, unguarded: bool = False
) -> list:
    """Basis of {X : XG = GX for every generator G}.

    Solves the stacked linear system over d*d unknowns by sparse
    elimination; the result is one ExactMatrix per free variable, with
    the free entry normalized to 1.  Because the sources of generators
    in this package are monoid images, commuting with a generating set
    is the same as commuting with the whole image algebra."""
    if d * d > COMMUTANT_UNKNOWN_LIMIT and not unguarded:
        raise SizeGuardError(
            f"commutant guard: {d * d} unknowns exceed {COMMUTANT_UNKNOWN_LIMIT}"
        )
    gens = list(generators)
    for g in gens:
        if g.rows != d or g.cols != d:
            raise ValueError("generators must be d x d")
    space = RowSpace()
    for g in gens:
        by_col = {}
        by_row = {}
        for (r, c), v in g.entries.items():
            by_col.setdefault(c, []).append((r, v))
            by_row.setdefault(r, []).append((c, v))
        for i in range(d):
            for j in range(d):
                eq = {}
                for l, v in by_col.get(j, ()):
                    key = i * d + l
                    eq[key] = eq.get(key, 0) + v
                for l, v in by_row.get(i, ()):
                    key = l * d + j
                    eq[key] = eq.get(key, 0) - v
                if eq:
                    space.add(eq)
    return _null_space_matrices(space, d)


def _null_space_matrices(space: RowSpace, d: int) -> list:
    """Null-space basis of an echelon system, one matrix per free column."""
    pivots = space.pivot_rows
    n_unknowns = d * d
    free_cols = [c for c in range(n_unknowns) if c not in pivots]
    basis = []
    pivot_cols_desc = sorted(pivots, reverse=True)
    for f in free_cols:
        x = {f: Fraction(1)}
        for p in pivot_cols_desc:
            if p > f:
                continue
            acc = Fraction(0)
            for c, v in pivots[p].items():
                if c == p:
                    continue
                xc = x.get(c)
                if xc:
                    acc += v * xc
            if acc:
                x[p] = -acc
        entries = {divmod(c, d): v for c, v in x.items() if v}
        basis.append(ExactMatrix(d, d, entries))
    return basis


class AlgebraElement:
    """Formal rational linear combination of semigroup elements.

    ``carrier`` tags which semigroup the terms live in so that unlike
    elements never mix; term values are non-zero Fractions."""

    __slots__ = ("carrier", "terms")

    def __init__(self, carrier: str, terms: dict):
        clean = {}
        for element, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff:
                clean[element] = coeff
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def basis(cls, carrier: str, element):
        return cls(carrier, {element: 1})

    @classmethod
    def zero(cls, carrier: str):
        return cls(carrier, {})

    def _check(self, other):
        if self.carrier != other.carrier:
            raise ValueError(
                f"cannot combine carriers {self.carrier!r} and {other.carrier!r}"
            )

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for element, coeff in other.terms.items():
            out[element] = out.get(element, 0) + coeff
        return AlgebraElement(self.carrier, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return AlgebraElement(
            self.carrier, {e: scalar * c for e, c in self.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.carrier == other.carrier
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.carrier, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"AlgebraElement({self.carrier!r}, 0)"
        parts = " + ".join(f"{c}*{e}" for e, c in sorted(
            self.terms.items(), key=lambda item: str(item[0])))
        return f"AlgebraElement({self.carrier!r}, {parts})"
