"""Graded free modules over the coefficient algebra and degreewise computation.

A graded free module is given by generator degrees; its degree-d slice over k
is spanned by generator-times-monomial pairs in a fixed reporting order
(generators by index, monomials in the order 1, x, y, y^2, ...).  Homogeneous
maps are matrices of algebra elements together with a degree shift; kernels,
images and homology are computed one degree slice at a time as exact k-linear
algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .coeffalg import AElement, a_dim, a_monomials, monomial_labels
from .linalg import Matrix


class GradedFreeModule:
    __slots__ = ("field", "gen_degrees")

    def __init__(self, field, gen_degrees):
        degs = tuple(int(d) for d in gen_degrees)
        if any(d < 0 for d in degs):
            raise ValueError("generator degrees must be >= 0")
        self.field = field
        self.gen_degrees = degs

    @property
    def ngens(self) -> int:
        return len(self.gen_degrees)

    def is_zero(self) -> bool:
        return self.ngens == 0

    def dim_at(self, d: int) -> int:
        return sum(a_dim(d - g) for g in self.gen_degrees)

    def dims_upto(self, bound: int):
        return [self.dim_at(d) for d in range(bound + 1)]

    def basis_at(self, d: int):
        """Slice basis as (generator index, monomial index, monomial degree)."""
        out = []
        for j, g in enumerate(self.gen_degrees):
            for m in range(a_dim(d - g)):
                out.append((j, m, d - g))
        return out

    def basis_labels(self, d: int):
        out = []
        for j, g in enumerate(self.gen_degrees):
            for lbl in monomial_labels(d - g):
                out.append(f"g{j}*{lbl}" if lbl != "1" else f"g{j}")
        return out

    def __eq__(self, other):
        return (
            isinstance(other, GradedFreeModule)
            and self.field == other.field
            and self.gen_degrees == other.gen_degrees
        )

    def __hash__(self):
        return hash(self.gen_degrees)

    def __repr__(self):
        return f"GradedFreeModule(degrees={self.gen_degrees})"


def direct_sum_modules(mods):
    mods = list(mods)
    if not mods:
        raise ValueError("empty direct sum")
    f = mods[0].field
    degs = []
    for m in mods:
        if m.field != f:
            raise ValueError("mixed fields in direct sum")
        degs.extend(m.gen_degrees)
    return GradedFreeModule(f, degs)


class GradedMap:
    """Homogeneous A-linear map given on generators by an AElement matrix.

    Entry (i, j) is the coefficient of target generator i in the image of
    source generator j; each entry must be homogeneous of degree
    source_deg(j) + shift - target_deg(i).
    """

    __slots__ = ("source", "target", "shift", "entries")

    def __init__(self, source: GradedFreeModule, target: GradedFreeModule, shift: int, entries):
        self.source = source
        self.target = target
        self.shift = int(shift)
        if len(entries) != target.ngens or any(
            len(r) != source.ngens for r in entries
        ):
            raise ValueError("entry matrix shape must be (target gens) x (source gens)")
        self.entries = [list(r) for r in entries]
        self._check_homogeneous()

    def _check_homogeneous(self):
        for i in range(self.target.ngens):
            for j in range(self.source.ngens):
                e = self.entries[i][j]
                deg = e.homogeneous_degree()
                if deg is None:
                    continue
                expected = self.source.gen_degrees[j] + self.shift - self.target.gen_degrees[i]
                if deg != expected:
                    raise ValueError(
                        f"entry ({i},{j}) = {e} has degree {deg}, expected {expected} "
                        f"for shift {self.shift}"
                    )

    @classmethod
    def zero(cls, source, target, shift: int = 0):
        z = AElement.zero(source.field)
        return cls(
            source,
            target,
            shift,
            [[z] * source.ngens for _ in range(target.ngens)],
        )

    @classmethod
    def identity(cls, module: GradedFreeModule):
        one = AElement.one(module.field)
        z = AElement.zero(module.field)
        return cls(
            module,
            module,
            0,
            [
                [one if i == j else z for j in range(module.ngens)]
                for i in range(module.ngens)
            ],
        )

    @classmethod
    def from_scalar_matrix(cls, source, target, mat: Matrix, shift: int = 0):
        """Lift a k-matrix to generator entries (entries become degree-0 scalars)."""
        f = source.field
        entries = [
            [AElement.scalar(f, mat.data[i][j]) for j in range(source.ngens)]
            for i in range(target.ngens)
        ]
        return cls(source, target, shift, entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        if self.source != other.source or self.target != other.target:
            raise ValueError("shape mismatch in graded map sum")
        if not self.is_zero() and not other.is_zero() and self.shift != other.shift:
            raise ValueError("cannot add graded maps of different shifts")
        shift = other.shift if self.is_zero() else self.shift
        return GradedMap(
            self.source,
            self.target,
            shift,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __neg__(self):
        return GradedMap(
            self.source,
            self.target,
            self.shift,
            [[-e for e in row] for row in self.entries],
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GradedMap":
        return GradedMap(
            self.source,
            self.target,
            self.shift,
            [[e.scale(c) for e in row] for row in self.entries],
        )

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self after other."""
        if other.target != self.source:
            raise ValueError("composition mismatch")
        z = AElement.zero(self.source.field)
        entries = []
        for i in range(self.target.ngens):
            row = []
            for j in range(other.source.ngens):
                acc = z
                for k in range(self.source.ngens):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            entries.append(row)
        return GradedMap(other.source, self.target, self.shift + other.shift, entries)

    def component_matrix(self, d: int) -> Matrix:
        """The k-matrix of the map from degree d of the source to d + shift."""
        f = self.source.field
        src = self.source.basis_at(d)
        tgt = self.target.basis_at(d + self.shift)
        tgt_index = {}
        pos = 0
        for i, g in enumerate(self.target.gen_degrees):
            for m in range(a_dim(d + self.shift - g)):
                tgt_index[(i, m)] = pos
                pos += 1
        out = Matrix(f, len(tgt), len(src))
        for col, (j, m, mdeg) in enumerate(src):
            mono = a_monomials(f, mdeg)[m]
            for i in range(self.target.ngens):
                prod = self.entries[i][j] * mono
                coeffs = prod.degree_coeffs(d + self.shift - self.target.gen_degrees[i])
                for mm, c in enumerate(coeffs):
                    if not f.is_zero(c):
                        out.data[tgt_index[(i, mm)]][col] = c
        return out

    def verify_square_zero(self):
        """For endomaps: symbolic check of self∘self = 0; witness entry on failure."""
        if self.source != self.target:
            raise ValueError("square only defined for endomaps")
        sq = self.compose(self)
        for i, row in enumerate(sq.entries):
            for j, e in enumerate(row):
                if not e.is_zero():
                    return False, (i, j, e)
        return True, None

    def __repr__(self):
        return f"GradedMap(shift={self.shift}, {self.source.ngens}->{self.target.ngens} gens)"


def graded_component_map(f: GradedMap, d: int) -> Matrix:
    """Spec-level accessor for the degree-d slice matrix of a homogeneous map."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    return f.component_matrix(d)


@dataclass
class GradedHomologyReport:
    """Slice dimensions and bases of Ker, Im and H = Ker/Im for a square-zero map."""

    degree_bound: int
    shift: int
    ker_dims: list
    im_dims: list
    h_dims: list
    ker_bases: dict = dc_field(default_factory=dict)
    im_bases: dict = dc_field(default_factory=dict)
    h_reps: dict = dc_field(default_factory=dict)


def graded_homology(d_map: GradedMap, bound: int) -> GradedHomologyReport:
    """Degreewise Ker/Im/H of a square-zero graded endomap, degrees 0..bound.

    Incoming image at degree d is computed from the degree d - shift slice.
    """
    ok, witness = d_map.verify_square_zero()
    if not ok:
        i, j, e = witness
        raise ValueError(f"map does not square to zero: entry ({i},{j}) of square is {e}")
    shift = d_map.shift
    report = GradedHomologyReport(bound, shift, [], [], [])
    components = {d: d_map.component_matrix(d) for d in range(-shift, bound + 1) if d >= 0}
    for d in range(bound + 1):
        comp = components[d]
        ker = comp.kernel_basis()
        prev = components.get(d - shift)
        if prev is not None and d - shift >= 0:
            im = prev.image_basis()
        else:
            im = Matrix(comp.field, d_map.source.dim_at(d), 0)
        # homology representatives: kernel vectors adding new pivots over the image
        combined = im.hstack(ker)
        _, pivots = combined.rref()
        reps = [p - im.cols for p in pivots if p >= im.cols]
        h_basis = ker.submatrix_columns(reps)
        report.ker_dims.append(ker.cols)
        report.im_dims.append(im.cols)
        report.h_dims.append(h_basis.cols)
        report.ker_bases[d] = ker
        report.im_bases[d] = im
        report.h_reps[d] = h_basis
    return report


class GradedSubspace:
    """A degreewise subspace of a graded free module, one column basis per degree."""

    def __init__(self, ambient: GradedFreeModule, bases: dict):
        self.ambient = ambient
        self.bases = {}
        for d, b in bases.items():
            if b.rows != ambient.dim_at(d):
                raise ValueError(f"degree {d} basis has wrong ambient dimension")
            self.bases[d] = b.image_basis()

    def dim_at(self, d: int) -> int:
        b = self.bases.get(d)
        return b.cols if b is not None else 0

    def dims_upto(self, bound: int):
        return [self.dim_at(d) for d in range(bound + 1)]

    def is_zero_upto(self, bound: int) -> bool:
        return all(self.dim_at(d) == 0 for d in range(bound + 1))

    def equals_ambient_upto(self, bound: int) -> bool:
        return all(self.dim_at(d) == self.ambient.dim_at(d) for d in range(bound + 1))


# Known graded dimension patterns inside A, used only for report display.
def identify_ideal_pattern(dims) -> str:
    bound = len(dims) - 1
    patterns = {
        "0": [0] * (bound + 1),
        "A": [a_dim(d) for d in range(bound + 1)],
        "(x)": [0] + [1 if d == 1 else 0 for d in range(1, bound + 1)],
        "(x,y)": [0] + [2 if d == 1 else 1 for d in range(1, bound + 1)],
        "A/(x)": [1] * (bound + 1),
    }
    for name, pat in patterns.items():
        if list(dims) == pat:
            return name
    return "?"


class GradedPresentation:
    """A graded module presented degreewise: slice dims plus x and y actions.

    Used for projectivity testing over the local algebra; over A the finitely
    generated projectives are free, detected by lifting a basis of M/(x,y)M.
    """

    def __init__(self, field, dims, x_act, y_act):
        self.field = field
        self.dims = list(dims)
        self.bound = len(self.dims) - 1
        self.x_act = list(x_act)
        self.y_act = list(y_act)
        if len(self.x_act) != self.bound or len(self.y_act) != self.bound:
            raise ValueError("need action matrices for every degree below the bound")
        for d in range(self.bound):
            for act in (self.x_act[d], self.y_act[d]):
                if act.rows != self.dims[d + 1] or act.cols != self.dims[d]:
                    raise ValueError(f"action matrix at degree {d} has wrong shape")
        # relations x^2 = xy = yx = 0 degreewise
        for d in range(self.bound - 1):
            for first, second in (
                (self.x_act[d], self.x_act[d + 1]),
                (self.x_act[d], self.y_act[d + 1]),
                (self.y_act[d], self.x_act[d + 1]),
            ):
                if not (second * first).is_zero():
                    raise ValueError("presented actions violate x^2 = xy = 0")

    @classmethod
    def from_free(cls, module: GradedFreeModule, bound: int):
        f = module.field
        dims = [module.dim_at(d) for d in range(bound + 1)]
        # multiplication by x / y as graded maps of shift 1
        x_el = AElement.x(f)
        y_el = AElement.y(f)
        z = AElement.zero(f)
        x_map = GradedMap(
            module,
            module,
            1,
            [
                [x_el if i == j else z for j in range(module.ngens)]
                for i in range(module.ngens)
            ],
        )
        y_map = GradedMap(
            module,
            module,
            1,
            [
                [y_el if i == j else z for j in range(module.ngens)]
                for i in range(module.ngens)
            ],
        )
        x_act = [x_map.component_matrix(d) for d in range(bound)]
        y_act = [y_map.component_matrix(d) for d in range(bound)]
        return cls(f, dims, x_act, y_act)

    def radical_dims(self):
        """Slice dims of (x,y)M."""
        out = [0]
        for d in range(1, self.bound + 1):
            span = self.x_act[d - 1].hstack(self.y_act[d - 1])
            out.append(span.rank())
        return out

    def minimal_generator_degrees(self):
        """Degrees of a basis of M/(x,y)M (with chosen lifts), by Nakayama."""
        f = self.field
        gens = []
        lifts = {}
        for d in range(self.bound + 1):
            if d == 0:
                rad = Matrix(f, self.dims[0], 0)
            else:
                rad = self.x_act[d - 1].hstack(self.y_act[d - 1]).image_basis()
            full = rad.hstack(Matrix.identity(f, self.dims[d]))
            _, pivots = full.rref()
            complement = [p - rad.cols for p in pivots if p >= rad.cols]
            if complement:
                lifts[d] = Matrix.identity(f, self.dims[d]).submatrix_columns(complement)
                gens.extend([d] * len(complement))
        return gens, lifts

    def is_free(self):
        """Nakayama test: compare against the free module on minimal generators.

        Returns (flag, generator degrees, first failing degree or None).  Top
        degrees near the bound cannot distinguish a truncated free module from
        a non-free one; the comparison runs through the full bound, which is
        exact for the degreewise semantics used throughout.
        """
        gens, lifts = self.minimal_generator_degrees()
        free = GradedFreeModule(self.field, gens)
        for d in range(self.bound + 1):
            free_dim = free.dim_at(d)
            if free_dim != self.dims[d]:
                return False, gens, d
            # the canonical map must be a degreewise isomorphism
            cols = []
            for g_deg, lift in sorted(lifts.items()):
                for c in range(lift.cols):
                    vec = lift.submatrix_columns([c])
                    for mono_deg in [d - g_deg] if d - g_deg >= 0 else []:
                        for mono_idx in range(a_dim(mono_deg)):
                            cols.append(self._apply_monomial(vec, g_deg, mono_deg, mono_idx))
            if not cols:
                if self.dims[d] != 0:
                    return False, gens, d
                continue
            mat = cols[0]
            for cmat in cols[1:]:
                mat = mat.hstack(cmat)
            if mat.rank() != self.dims[d]:
                return False, gens, d
        return True, gens, None

    def _apply_monomial(self, vec: Matrix, start_deg: int, mono_deg: int, mono_idx: int) -> Matrix:
        # monomial order per slice: degree 0 -> 1; degree 1 -> x, y; degree d -> y^d
        if mono_deg == 0:
            return vec
        if mono_deg == 1 and mono_idx == 0:
            return self.x_act[start_deg] * vec
        out = vec
        for step in range(mono_deg):
            out = self.y_act[start_deg + step] * out
        return out
