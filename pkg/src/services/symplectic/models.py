"""
Pydantic models for 4x4 matrices over Z/p^m and the algebra sp4 over F_p
"""

from typing import ClassVar, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.exceptions import NotInvertible
from src.services.modarith import mod_inv
from src.services.pairsearch.models import DELTA_SET

Rows = Tuple[Tuple[int, ...], ...]
Unit = Tuple[int, int, int]  # (row, col, sign)

SIZE = 4


class RingMatrix(BaseModel):
    """4x4 matrix with entries reduced into [0, p^m)"""
    model_config = ConfigDict(frozen=True)

    entries: Rows
    p: int
    m: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _reduced(self) -> "RingMatrix":
        if len(self.entries) != SIZE or any(len(row) != SIZE for row in self.entries):
            raise ValueError("entries must be 4x4")
        q = self.modulus
        if any(not 0 <= x < q for row in self.entries for x in row):
            raise ValueError(f"entries must lie in [0, {q})")
        return self

    @property
    def modulus(self) -> int:
        return self.p ** self.m

    # --- construction ---

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], p: int, m: int = 1) -> "RingMatrix":
        q = p ** m
        return cls(entries=tuple(tuple(x % q for x in row) for row in rows), p=p, m=m)

    @classmethod
    def identity(cls, p: int, m: int = 1) -> "RingMatrix":
        return cls.diag((1, 1, 1, 1), p, m)

    @classmethod
    def zero(cls, p: int, m: int = 1) -> "RingMatrix":
        return cls.of([[0] * SIZE for _ in range(SIZE)], p, m)

    @classmethod
    def diag(cls, values: Sequence[int], p: int, m: int = 1) -> "RingMatrix":
        return cls.of([[values[i] if i == j else 0 for j in range(SIZE)] for i in range(SIZE)], p, m)

    @classmethod
    def from_units(cls, units: Sequence[Unit], p: int, m: int = 1) -> "RingMatrix":
        """Signed sum of matrix units E_ij (0-based)."""
        rows = [[0] * SIZE for _ in range(SIZE)]
        for i, j, sign in units:
            rows[i][j] += sign
        return cls.of(rows, p, m)

    @classmethod
    def j(cls, p: int, m: int = 1) -> "RingMatrix":
        return cls.from_units([(0, 2, 1), (1, 3, 1), (2, 0, -1), (3, 1, -1)], p, m)

    def _make(self, rows: Sequence[Sequence[int]]) -> "RingMatrix":
        q = self.modulus
        return RingMatrix.model_construct(
            entries=tuple(tuple(x % q for x in row) for row in rows), p=self.p, m=self.m
        )

    # --- arithmetic ---

    def _compatible(self, other: "RingMatrix") -> None:
        if (self.p, self.m) != (other.p, other.m):
            raise ValueError(f"ring mismatch: Z/{self.p}^{self.m} vs Z/{other.p}^{other.m}")

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        self._compatible(other)
        a, b = self.entries, other.entries
        return self._make(
            [[sum(a[i][k] * b[k][j] for k in range(SIZE)) for j in range(SIZE)] for i in range(SIZE)]
        )

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._compatible(other)
        return self._make([[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        self._compatible(other)
        return self._make([[x - y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self) -> "RingMatrix":
        return self._make([[-x for x in row] for row in self.entries])

    def scale(self, k: int) -> "RingMatrix":
        return self._make([[k * x for x in row] for row in self.entries])

    def transpose(self) -> "RingMatrix":
        return self._make([list(col) for col in zip(*self.entries)])

    def at_precision(self, m: int) -> "RingMatrix":
        """Same integer representatives read modulo p^m (reduction or canonical lift)."""
        return RingMatrix.of(self.entries, self.p, m)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def inverse(self) -> "RingMatrix":
        """Inverse mod p^m: F_p inverse lifted by X <- X(2 - MX).

        Raises:
            NotInvertible: If the matrix is singular mod p.
        """
        x = RingMatrix.of(_inverse_mod_p(self.entries, self.p), self.p, self.m)
        two = RingMatrix.identity(self.p, self.m).scale(2)
        precision = 1
        while precision < self.m:
            x = x @ (two - self @ x)
            precision *= 2
        return x

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]


def _inverse_mod_p(rows: Rows, p: int) -> List[List[int]]:
    """Gauss-Jordan over F_p."""
    work = [[x % p for x in row] + [1 if i == j else 0 for j in range(SIZE)] for i, row in enumerate(rows)]
    for col in range(SIZE):
        pivot = next((r for r in range(col, SIZE) if work[r][col]), None)
        if pivot is None:
            raise NotInvertible(f"matrix is singular mod {p}")
        work[col], work[pivot] = work[pivot], work[col]
        inv = mod_inv(work[col][col], p)
        work[col] = [x * inv % p for x in work[col]]
        for r in range(SIZE):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [(x - factor * y) % p for x, y in zip(work[r], work[col])]
    return [row[SIZE:] for row in work]


class AdBasis(BaseModel):
    """The basis of Ad0 = sp4 over F_p: T1, T2 and the root vectors X_(d1,d2).

    Root vectors sit at the entries where conjugation by
    diag(c^a, c^b, c^-a, c^-b) scales by c^(d1*a + d2*b).
    """
    model_config = ConfigDict(frozen=True)

    TORUS_UNITS: ClassVar[Dict[str, Tuple[Unit, ...]]] = {
        "t1": ((0, 0, 1), (2, 2, -1)),
        "t2": ((1, 1, 1), (3, 3, -1)),
    }
    ROOT_UNITS: ClassVar[Dict[Tuple[int, int], Tuple[Unit, ...]]] = {
        (2, 0): ((0, 2, 1),),
        (-2, 0): ((2, 0, 1),),
        (0, 2): ((1, 3, 1),),
        (0, -2): ((3, 1, 1),),
        (1, 1): ((0, 3, 1), (1, 2, 1)),
        (1, -1): ((0, 1, 1), (3, 2, -1)),
        (-1, 1): ((1, 0, 1), (2, 3, -1)),
        (-1, -1): ((3, 0, 1), (2, 1, 1)),
    }
    ROOTS: ClassVar[Tuple[Tuple[int, int], ...]] = DELTA_SET
    LABELS: ClassVar[Tuple[str, ...]] = ("t1", "t2") + tuple(f"x[{d1},{d2}]" for d1, d2 in DELTA_SET)

    p: int

    def torus(self, name: str) -> RingMatrix:
        return RingMatrix.from_units(self.TORUS_UNITS[name], self.p)

    def root(self, delta: Tuple[int, int], m: int = 1) -> RingMatrix:
        return RingMatrix.from_units(self.ROOT_UNITS[tuple(delta)], self.p, m)

    def elements(self) -> List[RingMatrix]:
        """The 10 basis matrices in coordinate order."""
        return [self.torus("t1"), self.torus("t2")] + [self.root(d) for d in self.ROOTS]

    @classmethod
    def coordinate_positions(cls) -> List[Tuple[int, int]]:
        """Entry that carries each coordinate."""
        firsts = [units[0] for units in cls.TORUS_UNITS.values()]
        firsts += [cls.ROOT_UNITS[d][0] for d in cls.ROOTS]
        return [(i, j) for i, j, _ in firsts]


def is_sp4(x: RingMatrix) -> bool:
    """X^T J + J X = 0."""
    j = RingMatrix.j(x.p, x.m)
    return (x.transpose() @ j + j @ x).is_zero()


def assemble(p: int, coords: Sequence[int]) -> RingMatrix:
    total = RingMatrix.zero(p)
    for c, basis_element in zip(coords, AdBasis(p=p).elements()):
        if c % p:
            total = total + basis_element.scale(c)
    return total


class AdElement(BaseModel):
    """An element of sp4 over F_p with its coordinates in AdBasis"""
    model_config = ConfigDict(frozen=True)

    matrix: RingMatrix
    coords: Tuple[int, ...] = Field(min_length=10, max_length=10)

    @model_validator(mode="after")
    def _faithful(self) -> "AdElement":
        if self.matrix.m != 1:
            raise ValueError("Ad0 elements live over F_p")
        if any(not 0 <= c < self.matrix.p for c in self.coords):
            raise ValueError("coordinates must be residues mod p")
        if not is_sp4(self.matrix):
            raise ValueError("matrix is not in sp4")
        if assemble(self.matrix.p, self.coords) != self.matrix:
            raise ValueError("coordinates do not reproduce the matrix")
        return self

    @property
    def p(self) -> int:
        return self.matrix.p

    @classmethod
    def from_coords(cls, p: int, coords: Sequence[int]) -> "AdElement":
        reduced = tuple(c % p for c in coords)
        return cls(matrix=assemble(p, reduced), coords=reduced)

    @classmethod
    def basis(cls, p: int, label: str) -> "AdElement":
        coords = [0] * 10
        coords[AdBasis.LABELS.index(label)] = 1
        return cls.from_coords(p, coords)

    @classmethod
    def root(cls, p: int, delta: Tuple[int, int]) -> "AdElement":
        d1, d2 = delta
        return cls.basis(p, f"x[{d1},{d2}]")

    def coord(self, label: str) -> int:
        return self.coords[AdBasis.LABELS.index(label)]


class RootConstant(BaseModel):
    """[w, X_delta] = c X_delta for w = a T1 + b T2"""
    a: int
    b: int
    delta: Tuple[int, int]
    c: int


class BracketTableReport(BaseModel):
    p: int
    bullets: Dict[str, bool]
    constants: List[RootConstant]
    vanishing: List[RootConstant]


class LieCheckReport(BaseModel):
    p: int
    trials: int
    seed: int
    basis_rank: int
    bracket_table: BracketTableReport
    eigen_table_passed: bool
    grading_passed: bool
    jacobi_passed: bool
    omega_passed: bool
    multiplicative_passed: bool
    filtration_passed: bool
    filtration_independent: bool
    similitude_adjust_passed: bool
    passed: bool
    failures: List[str] = []
    notes: Optional[List[str]] = None
