"""Finite CW/chain complexes over the field with two elements.

A complex stores, per dimension, an ordered list of string cell identifiers,
and for every cell of positive dimension the *set* of faces that appear with
odd incidence (mod-2 boundaries carry no signs and no multiplicities).  The
boundary-of-boundary condition is checked at construction time, so every
value of :class:`ChainComplexF2` in circulation is a valid chain complex.

Betti numbers are computed by Gaussian elimination over GF(2) on bit-packed
boundary matrices: one arbitrary-precision Python integer per matrix row,
eliminated with word-level XOR.
"""

from __future__ import annotations

import json
from typing import Callable, Iterable, Mapping

BettiVector = tuple[int, ...]


class InvalidComplexError(ValueError):
    """The given cells/boundaries/labels do not form a valid complex."""


class InterfaceMismatch(ValueError):
    """A gluing map is not a chain isomorphism of the labeled subcomplexes."""


class CWFormatError(ValueError):
    """Malformed CW-complex JSON input."""


class BitMatrixF2(object):
    """Dense matrix over GF(2); each row is one Python int used as a bitmask.

    Bit j of ``rows[i]`` is the (i, j) entry.  Rank is computed by reducing
    each row against a growing pivot basis keyed by leading bit; every
    reduction step is a single big-int XOR, so words of 64 columns are
    processed per machine operation.
    """

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        self.rows = tuple(int(r) for r in rows)
        self.ncols = int(ncols)
        if self.ncols < 0:
            raise ValueError("ncols must be nonnegative")
        limit = 1 << self.ncols
        for i, r in enumerate(self.rows):
            if r < 0 or r >= limit:
                raise ValueError(f"row {i} does not fit in {self.ncols} columns")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def rank(self) -> int:
        basis: dict[int, int] = {}
        rank = 0
        for row in self.rows:
            while row:
                pivot = row.bit_length() - 1
                reducer = basis.get(pivot)
                if reducer is None:
                    basis[pivot] = row
                    rank += 1
                    break
                row ^= reducer
        return rank

    def transpose(self) -> "BitMatrixF2":
        cols = [0] * self.ncols
        for i, row in enumerate(self.rows):
            bit = 1 << i
            while row:
                j = (row & -row).bit_length() - 1
                cols[j] |= bit
                row &= row - 1
        return BitMatrixF2(cols, len(self.rows))

    def with_extra_row(self, row: int) -> "BitMatrixF2":
        return BitMatrixF2(self.rows + (int(row),), self.ncols)


class ChainComplexF2(object):
    """Immutable finite chain complex over GF(2) with labeled subcomplexes."""

    __slots__ = ("_cells", "_boundary", "_labels", "_dims")

    def __init__(
        self,
        cells: Mapping[int, Iterable[str]],
        boundary: Mapping[str, Iterable[str]],
        labels: Mapping[str, Iterable[str]] | None = None,
    ):
        by_dim: dict[int, tuple[str, ...]] = {}
        for dim, ids in cells.items():
            d = int(dim)
            if d < 0:
                raise InvalidComplexError(f"negative cell dimension {d}")
            by_dim[d] = tuple(str(i) for i in ids)
        top = max((d for d, ids in by_dim.items() if ids), default=-1)
        self._cells = {d: by_dim.get(d, ()) for d in range(top + 1)}

        dims: dict[str, int] = {}
        for d in range(top + 1):
            for cid in self._cells[d]:
                if not cid:
                    raise InvalidComplexError("empty cell identifier")
                if cid in dims:
                    raise InvalidComplexError(f'duplicate cell id "{cid}"')
                dims[cid] = d
        self._dims = dims

        bnd: dict[str, frozenset[str]] = {}
        for cid, faces in boundary.items():
            cid = str(cid)
            if cid not in dims:
                raise InvalidComplexError(f'boundary given for unknown cell "{cid}"')
            face_list = [str(f) for f in faces]
            face_set = frozenset(face_list)
            if len(face_set) != len(face_list):
                raise InvalidComplexError(
                    f'cell "{cid}": repeated face (mod-2 boundaries must be pre-reduced)'
                )
            d = dims[cid]
            if d == 0:
                if face_set:
                    raise InvalidComplexError(f'0-cell "{cid}" cannot have a boundary')
                continue
            for f in face_set:
                if f not in dims:
                    raise InvalidComplexError(f'cell "{cid}": unknown face "{f}"')
                if dims[f] != d - 1:
                    raise InvalidComplexError(
                        f'cell "{cid}": face "{f}" has dimension {dims[f]}, expected {d - 1}'
                    )
            bnd[cid] = face_set
        for d in range(1, top + 1):
            for cid in self._cells[d]:
                bnd.setdefault(cid, frozenset())
        self._boundary = bnd

        for cid, faces in bnd.items():
            if dims[cid] >= 2:
                acc: set[str] = set()
                for f in faces:
                    acc ^= bnd[f]
                if acc:
                    raise InvalidComplexError(
                        f'cell "{cid}": boundary of boundary is {sorted(acc)}, not zero'
                    )

        labs: dict[str, frozenset[str]] = {}
        for name, ids in (labels or {}).items():
            name = str(name)
            members = frozenset(str(i) for i in ids)
            for cid in members:
                if cid not in dims:
                    raise InvalidComplexError(f'label "{name}": unknown cell "{cid}"')
                if dims[cid] >= 1 and not bnd[cid] <= members:
                    raise InvalidComplexError(
                        f'label "{name}": not closed under boundary at cell "{cid}"'
                    )
            labs[name] = members
        self._labels = labs

    @property
    def dim(self) -> int:
        """Top cell dimension; -1 for the empty complex."""
        return len(self._cells) - 1

    def cells_of(self, dim: int) -> tuple[str, ...]:
        return self._cells.get(dim, ())

    def n_cells(self, dim: int) -> int:
        return len(self._cells.get(dim, ()))

    def all_cells(self):
        for d in range(self.dim + 1):
            for cid in self._cells[d]:
                yield d, cid

    def dim_of(self, cid: str) -> int:
        return self._dims[cid]

    def __contains__(self, cid: str) -> bool:
        return cid in self._dims

    def boundary_of(self, cid: str) -> frozenset[str]:
        if self._dims[cid] == 0:
            return frozenset()
        return self._boundary[cid]

    @property
    def labels(self) -> dict[str, frozenset[str]]:
        return dict(self._labels)

    def label(self, name: str) -> frozenset[str]:
        return self._labels[name]

    def __repr__(self) -> str:
        counts = [self.n_cells(d) for d in range(self.dim + 1)]
        return f"ChainComplexF2(cells={counts}, labels={sorted(self._labels)})"

    def to_json_obj(self) -> dict:
        cells = {str(d): list(self._cells[d]) for d in range(self.dim + 1)}
        bnd = {}
        for d in range(1, self.dim + 1):
            for cid in self._cells[d]:
                bnd[cid] = sorted(self._boundary[cid])
        labs = {name: sorted(self._labels[name]) for name in sorted(self._labels)}
        return {"cells": cells, "boundary": bnd, "labels": labs}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    @classmethod
    def from_json_obj(cls, obj) -> "ChainComplexF2":
        if not isinstance(obj, dict):
            raise CWFormatError("top level must be a JSON object")
        for key in obj:
            if key not in ("cells", "boundary", "labels"):
                raise CWFormatError(f'unknown top-level key "{key}"')
        cells_obj = obj.get("cells")
        if not isinstance(cells_obj, dict):
            raise CWFormatError('"cells" must be an object mapping dimension to id list')
        cells: dict[int, list[str]] = {}
        for dim_key, ids in cells_obj.items():
            if not isinstance(dim_key, str) or not dim_key.isdigit():
                raise CWFormatError(f'cell dimension key "{dim_key}" is not a nonnegative integer')
            if not isinstance(ids, list) or not all(isinstance(i, str) for i in ids):
                raise CWFormatError(f'cell list for dimension {dim_key} must be a list of strings')
            cells[int(dim_key)] = ids
        boundary_obj = obj.get("boundary", {})
        if not isinstance(boundary_obj, dict):
            raise CWFormatError('"boundary" must be an object mapping cell id to face list')
        for cid, faces in boundary_obj.items():
            if not isinstance(faces, list) or not all(isinstance(f, str) for f in faces):
                raise CWFormatError(f'cell "{cid}": face list must be a list of strings')
        labels_obj = obj.get("labels", {})
        if not isinstance(labels_obj, dict):
            raise CWFormatError('"labels" must be an object mapping label name to id list')
        for name, ids in labels_obj.items():
            if not isinstance(ids, list) or not all(isinstance(i, str) for i in ids):
                raise CWFormatError(f'label "{name}": member list must be a list of strings')
        try:
            return cls(cells, boundary_obj, labels_obj)
        except InvalidComplexError as exc:
            raise CWFormatError(str(exc)) from exc

    @classmethod
    def from_json(cls, text: str) -> "ChainComplexF2":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CWFormatError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)


def boundary_matrix(c: ChainComplexF2, k: int) -> BitMatrixF2:
    """Matrix of the k-th boundary map; one bit row per k-cell."""
    faces = c.cells_of(k - 1)
    index = {f: i for i, f in enumerate(faces)}
    rows = []
    for cid in c.cells_of(k):
        mask = 0
        for f in c.boundary_of(cid):
            mask |= 1 << index[f]
        rows.append(mask)
    return BitMatrixF2(rows, len(faces))


def betti(c: ChainComplexF2) -> BettiVector:
    """Mod-2 Betti numbers b_0 .. b_top, via bit-packed matrix ranks.

    b_k = dim ker(d_k) - rank(d_{k+1}); in particular b_0 is the number of
    connected components.
    """
    top = c.dim
    if top < 0:
        return ()
    ranks = [boundary_matrix(c, k).rank() for k in range(top + 2)]
    return tuple(c.n_cells(k) - ranks[k] - ranks[k + 1] for k in range(top + 1))


def euler_char(c: ChainComplexF2) -> int:
    """Alternating sum of cell counts."""
    return sum((-1) ** d * c.n_cells(d) for d in range(c.dim + 1))


def is_nullhomologous(c: ChainComplexF2, dim: int, chain: Iterable[str]) -> bool:
    """Whether a cycle (set of dim-cells with zero mod-2 boundary) bounds."""
    members = set(str(x) for x in chain)
    index = {cid: i for i, cid in enumerate(c.cells_of(dim))}
    acc: set[str] = set()
    for cid in members:
        if cid not in index:
            raise ValueError(f'"{cid}" is not a {dim}-cell of the complex')
        if dim >= 1:
            acc ^= c.boundary_of(cid)
    if acc:
        raise ValueError(f"chain is not a cycle; boundary is {sorted(acc)}")
    vec = 0
    for cid in members:
        vec |= 1 << index[cid]
    mat = boundary_matrix(c, dim + 1)
    return mat.with_extra_row(vec).rank() == mat.rank()


def label_subcomplex(c: ChainComplexF2, name: str) -> ChainComplexF2:
    """The labeled subcomplex as a standalone complex (labels are dropped)."""
    members = c.label(name)
    cells: dict[int, list[str]] = {}
    bnd: dict[str, frozenset[str]] = {}
    for d, cid in c.all_cells():
        if cid in members:
            cells.setdefault(d, []).append(cid)
            if d >= 1:
                bnd[cid] = c.boundary_of(cid)
    return ChainComplexF2(cells, bnd)


def without_labels(c: ChainComplexF2) -> ChainComplexF2:
    """The same complex with every label removed (useful before products of
    a model with itself, where label names would collide)."""
    cells = {d: c.cells_of(d) for d in range(c.dim + 1)}
    bnd = {cid: c.boundary_of(cid) for d in range(1, c.dim + 1) for cid in c.cells_of(d)}
    return ChainComplexF2(cells, bnd)


def rename_cells(c: ChainComplexF2, fn: Callable[[str], str]) -> ChainComplexF2:
    """Apply an injective renaming to every cell identifier."""
    new_id = {cid: str(fn(cid)) for _, cid in c.all_cells()}
    if len(set(new_id.values())) != len(new_id):
        raise ValueError("renaming is not injective")
    cells = {d: [new_id[cid] for cid in c.cells_of(d)] for d in range(c.dim + 1)}
    bnd = {}
    for d in range(1, c.dim + 1):
        for cid in c.cells_of(d):
            bnd[new_id[cid]] = [new_id[f] for f in c.boundary_of(cid)]
    labs = {name: [new_id[cid] for cid in members] for name, members in c.labels.items()}
    return ChainComplexF2(cells, bnd, labs)


def disjoint_union(a: ChainComplexF2, b: ChainComplexF2) -> ChainComplexF2:
    """Disjoint union; cells and labels of the two sides get u0:/u1: prefixes."""
    cells: dict[int, list[str]] = {}
    bnd: dict[str, list[str]] = {}
    labs: dict[str, list[str]] = {}
    for prefix, side in (("u0", a), ("u1", b)):
        for d in range(side.dim + 1):
            cells.setdefault(d, []).extend(f"{prefix}:{cid}" for cid in side.cells_of(d))
            if d >= 1:
                for cid in side.cells_of(d):
                    bnd[f"{prefix}:{cid}"] = [f"{prefix}:{f}" for f in side.boundary_of(cid)]
        for name, members in side.labels.items():
            labs[f"{prefix}:{name}"] = [f"{prefix}:{cid}" for cid in members]
    return ChainComplexF2(cells, bnd, labs)


def product(a: ChainComplexF2, b: ChainComplexF2) -> ChainComplexF2:
    """Cellwise product complex with the mod-2 Leibniz boundary.

    The product of cells s and t is the cell ``s*t`` of dimension
    dim(s) + dim(t) with boundary (ds)*t + s*(dt); signs vanish mod 2.
    A label on either factor induces the label (subcomplex x full factor)
    with the same name on the product.
    """
    cells: dict[int, list[str]] = {}
    bnd: dict[str, list[str]] = {}
    for da in range(a.dim + 1):
        for db in range(b.dim + 1):
            d = da + db
            for xa in a.cells_of(da):
                for xb in b.cells_of(db):
                    cid = f"{xa}*{xb}"
                    cells.setdefault(d, []).append(cid)
                    if d >= 1:
                        faces = [f"{fa}*{xb}" for fa in a.boundary_of(xa)]
                        faces += [f"{xa}*{fb}" for fb in b.boundary_of(xb)]
                        bnd[cid] = faces
    labs: dict[str, list[str]] = {}
    for name, members in a.labels.items():
        labs[name] = [f"{xa}*{xb}" for xa in members for _, xb in b.all_cells()]
    for name, members in b.labels.items():
        if name in labs:
            raise ValueError(f'label "{name}" exists on both factors; rename before taking products')
        labs[name] = [f"{xa}*{xb}" for _, xa in a.all_cells() for xb in members]
    return ChainComplexF2(cells, bnd, labs)


def glue(
    a: ChainComplexF2,
    la: str,
    b: ChainComplexF2,
    lb: str,
    match: Mapping[str, str],
    prefix: str = "glued",
) -> ChainComplexF2:
    """Pushout of b onto a along a chain isomorphism of labeled subcomplexes.

    ``match`` sends each cell of b's label ``lb`` to a cell of a's label
    ``la``; it must be a dimension- and boundary-preserving bijection, or
    :class:`InterfaceMismatch` is raised.  Cells of a keep their identifiers,
    the remaining cells of b get a ``prefix:`` namespace, and b's labels other
    than ``lb`` survive under the same namespace.
    """
    if la not in a.labels:
        raise InterfaceMismatch(f'no label "{la}" on the base complex')
    if lb not in b.labels:
        raise InterfaceMismatch(f'no label "{lb}" on the attached complex')
    la_cells = a.label(la)
    lb_cells = b.label(lb)
    match = {str(k): str(v) for k, v in match.items()}
    if set(match) != set(lb_cells):
        raise InterfaceMismatch("match domain differs from the attached-side label")
    if set(match.values()) != set(la_cells) or len(set(match.values())) != len(match):
        raise InterfaceMismatch("match is not a bijection onto the base-side label")
    for src, dst in match.items():
        if b.dim_of(src) != a.dim_of(dst):
            raise InterfaceMismatch(f'match sends "{src}" to "{dst}" of different dimension')
    for src, dst in match.items():
        if b.dim_of(src) >= 1:
            image = {match[f] for f in b.boundary_of(src)}
            if image != set(a.boundary_of(dst)):
                raise InterfaceMismatch(
                    f'match does not commute with the boundary at cell "{src}"'
                )

    def translate(cid: str) -> str:
        if cid in match:
            return match[cid]
        return f"{prefix}:{cid}"

    cells: dict[int, list[str]] = {}
    bnd: dict[str, list[str]] = {}
    for d in range(a.dim + 1):
        cells.setdefault(d, []).extend(a.cells_of(d))
        if d >= 1:
            for cid in a.cells_of(d):
                bnd[cid] = list(a.boundary_of(cid))
    existing = {cid for _, cid in a.all_cells()}
    for d in range(b.dim + 1):
        for cid in b.cells_of(d):
            if cid in lb_cells:
                continue
            new = translate(cid)
            if new in existing:
                raise ValueError(f'cell id collision "{new}"; pick a different prefix')
            existing.add(new)
            cells.setdefault(d, []).append(new)
            if d >= 1:
                bnd[new] = [translate(f) for f in b.boundary_of(cid)]

    labs: dict[str, list[str]] = {name: list(members) for name, members in a.labels.items()}
    for name, members in b.labels.items():
        if name == lb:
            continue
        new_name = f"{prefix}:{name}"
        if new_name in labs:
            raise ValueError(f'label name collision "{new_name}"; pick a different prefix')
        labs[new_name] = [translate(cid) for cid in members]
    return ChainComplexF2(cells, bnd, labs)
