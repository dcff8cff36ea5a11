"""Homology-level model of relative trisection diagrams.

Curves on the genus-g surface with b boundary components are integer
vectors in the basis a_1, b_1, ..., a_g, b_g, d_1, ..., d_{b-1}, where
(a_i, b_i) are the handle classes with a_i . b_i = 1 and the d_j are
boundary-parallel classes pairing to zero with everything.  The
standardness check compares Smith normal forms of intersection
matrices; it is a necessary condition for a genuine diagram, never a
sufficient one, since surface diffeomorphisms and geometric handle
slides see far more than homology.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .tripar import TrisectionType

NECESSITY_NOTE = (
    "homology-level checks only: passing is necessary for a genuine "
    "relative trisection diagram, not sufficient"
)


def _check_vector(vec, rank, what):
    if not isinstance(vec, (list, tuple)):
        raise ValueError(f"{what} must be a vector of integers, got {vec!r}")
    if len(vec) != rank:
        raise ValueError(f"{what} has length {len(vec)}, expected rank {rank}")
    for v in vec:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"{what} entries must be integers, got {v!r}")
    return list(vec)


@dataclass(frozen=True)
class SurfaceModel:
    """Genus and boundary count, with the induced intersection pairing."""

    genus: int
    boundaries: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or isinstance(self.genus, bool) or self.genus < 0:
            raise ValueError(f"genus must be a nonnegative integer, got {self.genus!r}")
        if not isinstance(self.boundaries, int) or isinstance(self.boundaries, bool) or self.boundaries < 1:
            raise ValueError(f"boundaries must be a positive integer, got {self.boundaries!r}")

    @property
    def rank(self) -> int:
        return 2 * self.genus + self.boundaries - 1

    def pairing(self) -> list[list[int]]:
        """The full skew-symmetric pairing matrix on the basis."""
        n = self.rank
        mat = [[0] * n for _ in range(n)]
        for i in range(self.genus):
            mat[2 * i][2 * i + 1] = 1
            mat[2 * i + 1][2 * i] = -1
        return mat

    def pair(self, u, v) -> int:
        """Algebraic intersection number of two classes."""
        u = _check_vector(u, self.rank, "class")
        v = _check_vector(v, self.rank, "class")
        return sum(
            u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i]
            for i in range(self.genus)
        )


@dataclass(frozen=True)
class CurveSystem:
    """An ordered family of homology classes of the same length."""

    classes: tuple[tuple[int, ...], ...]

    def __init__(self, classes=()):
        rows = []
        width = None
        for vec in classes:
            if not isinstance(vec, (list, tuple)):
                raise ValueError(f"curve class must be a vector, got {vec!r}")
            for v in vec:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ValueError(f"curve class entries must be integers, got {v!r}")
            if width is None:
                width = len(vec)
            elif len(vec) != width:
                raise ValueError("all curve classes must have the same length")
            rows.append(tuple(vec))
        object.__setattr__(self, "classes", tuple(rows))

    def __len__(self):
        return len(self.classes)

    def handle_slide(self, i: int, j: int, sign: int) -> "CurveSystem":
        """Replace class i by class i + sign * class j (sign is +1 or -1)."""
        n = len(self.classes)
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"slide indices ({i}, {j}) out of range for {n} classes")
        if i == j:
            raise ValueError("a curve cannot slide over itself")
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        rows = [list(v) for v in self.classes]
        rows[i] = [x + sign * y for x, y in zip(rows[i], rows[j])]
        return CurveSystem(rows)


def pair_matrix(x: CurveSystem, y: CurveSystem, s: SurfaceModel) -> list[list[int]]:
    """Matrix of algebraic intersection numbers between two systems."""
    for sys in (x, y):
        for vec in sys.classes:
            if len(vec) != s.rank:
                raise ValueError(
                    f"class length {len(vec)} does not match surface rank {s.rank}"
                )
    return [[s.pair(u, v) for v in y.classes] for u in x.classes]


def smith_normal_form(mat) -> list[int]:
    """Diagonal d_1 | d_2 | ... of the Smith normal form, all nonnegative.

    Exact over arbitrary-precision integers; returns min(rows, cols)
    entries, padding with zeros for the rank deficit.
    """
    a = []
    width = None
    for row in mat:
        if not isinstance(row, (list, tuple)):
            raise ValueError(f"matrix row must be a list, got {row!r}")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"matrix entries must be integers, got {v!r}")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError("matrix rows must all have the same length")
        a.append(list(row))
    rows = len(a)
    cols = width or 0
    n = min(rows, cols)
    diag = []
    t = 0
    while t < n:
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (pivot is None or abs(v) < abs(pivot[2])):
                    pivot = (i, j, v)
        if pivot is None:
            break
        i0, j0, _ = pivot
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        while True:
            for i in range(t + 1, rows):
                while a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        for j in range(t, cols):
                            a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
            for j in range(t + 1, cols):
                while a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for i in range(t, rows):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
            if all(a[i][t] == 0 for i in range(t + 1, rows)) and all(
                a[t][j] == 0 for j in range(t + 1, cols)
            ):
                offender = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % a[t][t]:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                for j in range(t, cols):
                    a[t][j] += a[offender][j]
        diag.append(abs(a[t][t]))
        t += 1
    diag.extend([0] * (n - len(diag)))
    return diag


@dataclass(frozen=True)
class ValidationReport:
    """Per-check outcome of the homology-level standardness test."""

    counts_ok: dict
    disjoint_ok: dict
    cross_snf: dict
    expected_snf: list
    note: str = NECESSITY_NOTE

    @property
    def snf_ok(self) -> dict:
        return {name: snf == self.expected_snf for name, snf in self.cross_snf.items()}

    @property
    def passed(self) -> bool:
        return (
            all(self.counts_ok.values())
            and all(self.disjoint_ok.values())
            and all(self.snf_ok.values())
        )

    def to_json_dict(self) -> dict:
        return {
            "counts_ok": dict(self.counts_ok),
            "disjoint_ok": dict(self.disjoint_ok),
            "cross_snf": {k: list(v) for k, v in self.cross_snf.items()},
            "expected_snf": list(self.expected_snf),
            "snf_ok": self.snf_ok,
            "passed": self.passed,
            "note": self.note,
        }


@dataclass(frozen=True)
class RelTrisectionDiagram:
    """Surface, three curve systems, and the declared parameter tuple."""

    surface: SurfaceModel
    alpha: CurveSystem
    beta: CurveSystem
    gamma: CurveSystem
    declared: TrisectionType

    def __post_init__(self):
        if self.surface.genus != self.declared.g or self.surface.boundaries != self.declared.b:
            raise ValueError(
                f"surface ({self.surface.genus},{self.surface.boundaries}) does not "
                f"match declared type {self.declared}"
            )
        for name, sys in self.systems().items():
            if not isinstance(sys, CurveSystem):
                raise ValueError(f"{name} must be a CurveSystem")
            for vec in sys.classes:
                if len(vec) != self.surface.rank:
                    raise ValueError(
                        f"{name} class length {len(vec)} does not match "
                        f"surface rank {self.surface.rank}"
                    )

    def systems(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}

    def validate(self) -> ValidationReport:
        """Counts, within-family disjointness, and the three cross SNF checks."""
        expected_count = self.declared.g - self.declared.p
        a = self.declared.intersection_pairs()
        expected_snf = [1] * a + [0] * (expected_count - a)
        counts_ok = {name: len(sys) == expected_count for name, sys in self.systems().items()}
        disjoint_ok = {
            name: all(v == 0 for row in pair_matrix(sys, sys, self.surface) for v in row)
            for name, sys in self.systems().items()
        }
        cross_snf = {
            "alpha_beta": smith_normal_form(pair_matrix(self.alpha, self.beta, self.surface)),
            "beta_gamma": smith_normal_form(pair_matrix(self.beta, self.gamma, self.surface)),
            "gamma_alpha": smith_normal_form(pair_matrix(self.gamma, self.alpha, self.surface)),
        }
        return ValidationReport(counts_ok, disjoint_ok, cross_snf, expected_snf)

    def consistency_with_euler(self) -> int:
        """Euler characteristic of the declared type, for validated diagrams."""
        if not self.validate().passed:
            raise ValueError("diagram does not pass validation")
        return self.declared.euler_char()

    def to_json_dict(self) -> dict:
        t = self.declared
        return {
            "genus": self.surface.genus,
            "boundaries": self.surface.boundaries,
            "type": [t.g, t.k, t.p, t.b],
            "alpha": [list(v) for v in self.alpha.classes],
            "beta": [list(v) for v in self.beta.classes],
            "gamma": [list(v) for v in self.gamma.classes],
        }

    @classmethod
    def from_json_dict(cls, obj) -> "RelTrisectionDiagram":
        required = {"genus", "boundaries", "type", "alpha", "beta", "gamma"}
        if not isinstance(obj, dict) or not required.issubset(obj):
            raise ParseError(f"diagram file needs the keys {sorted(required)}")
        g, b = obj["genus"], obj["boundaries"]
        for v in (g, b):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"genus and boundaries must be integers, got {v!r}")
        spec = obj["type"]
        if (
            not isinstance(spec, list)
            or len(spec) != 4
            or any(not isinstance(v, int) or isinstance(v, bool) for v in spec)
        ):
            raise ParseError('"type" must be a list of four integers [g, k, p, b]')
        rank = 2 * g + b - 1
        systems = {}
        for name in ("alpha", "beta", "gamma"):
            raw = obj[name]
            if not isinstance(raw, list):
                raise ParseError(f'"{name}" must be a list of integer vectors')
            vectors = []
            for vec in raw:
                if (
                    not isinstance(vec, list)
                    or any(not isinstance(v, int) or isinstance(v, bool) for v in vec)
                ):
                    raise ParseError(f'"{name}" must contain integer vectors, got {vec!r}')
                if len(vec) != rank:
                    raise ParseError(
                        f'"{name}" vector has length {len(vec)}, expected 2g+b-1 = {rank}'
                    )
                vectors.append(vec)
            systems[name] = CurveSystem(vectors)
        declared = TrisectionType(*spec)
        return cls(SurfaceModel(g, b), systems["alpha"], systems["beta"], systems["gamma"], declared)


def std_diagram(t: TrisectionType) -> RelTrisectionDiagram:
    """Homology image of the standard diagram of the given type.

    The first A = intersection_pairs(t) curves of each family realize
    the once-intersecting pattern (a_i, b_i, a_i + b_i); the remaining
    g - p curves are parallel across all three families, sharing the
    class a_j.
    """
    surface = SurfaceModel(t.g, t.b)
    rank = surface.rank
    n = t.g - t.p
    a = t.intersection_pairs()

    def basis(idx):
        vec = [0] * rank
        vec[idx] = 1
        return vec

    alpha, beta, gamma = [], [], []
    for i in range(n):
        alpha.append(basis(2 * i))
        if i < a:
            beta.append(basis(2 * i + 1))
            mixed = [0] * rank
            mixed[2 * i] = 1
            mixed[2 * i + 1] = 1
            gamma.append(mixed)
        else:
            beta.append(basis(2 * i))
            gamma.append(basis(2 * i))
    return RelTrisectionDiagram(
        surface, CurveSystem(alpha), CurveSystem(beta), CurveSystem(gamma), t
    )
