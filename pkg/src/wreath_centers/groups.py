"""Finite groups presented by multiplication tables.

Elements are ints 0..order-1 with 0 the identity; ingestion relabels the
identity to 0 when the table puts it elsewhere. Conjugacy classes are
sorted by (size ascending, minimal member ascending), which pins class 0
to {0}. Character tables come from simultaneous diagonalization of the
class-sum matrices (Burnside); cyclic groups use the exact root-of-unity
closed form instead.
"""

from __future__ import annotations

import cmath
import json
import math
import re

import numpy as np

from .errors import (DiagonalizationFailed, NoIdentity, NotAssociative,
                     NotBijectiveRow, UnsupportedSpec)

MAX_GROUP_ORDER = 24
_EIG_SEED = 20240811
_ORTHO_TOL = 1e-9


class FiniteGroup:
    """Immutable finite group with precomputed class data.

    The constructor assumes a valid table with identity 0; build instances
    through group_from_table / builtin_group, which validate and relabel.
    """

    __slots__ = ("order", "mul", "inv", "classes", "class_of", "xi",
                 "_char_table", "_hash")

    def __init__(self, table):
        self.order = len(table)
        self.mul = tuple(tuple(row) for row in table)
        self.inv = tuple(self.mul[a].index(0) for a in range(self.order))
        orbits = self._conjugacy_classes()
        self.classes = tuple(orbits)
        class_of = [0] * self.order
        for ci, members in enumerate(self.classes):
            for x in members:
                class_of[x] = ci
        self.class_of = tuple(class_of)
        # xi[c] = |G| / |c|, the centralizer order of any member
        self.xi = tuple(self.order // len(c) for c in self.classes)
        self._char_table = None
        self._hash = hash(self.mul)

    def _conjugacy_classes(self):
        seen = [False] * self.order
        orbits = []
        for x in range(self.order):
            if seen[x]:
                continue
            orbit = {self.mul[self.mul[g][x]][self.inv[g]] for g in range(self.order)}
            for y in orbit:
                seen[y] = True
            orbits.append(tuple(sorted(orbit)))
        orbits.sort(key=lambda c: (len(c), c[0]))
        return orbits

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def centralizer_order(self, c: int) -> int:
        return self.xi[c]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mul[y][x]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    def cyclic_generator(self):
        """An element of full order, or None."""
        for x in range(self.order):
            if self.element_order(x) == self.order:
                return x
        return None

    def character_table(self) -> "CharacterTable":
        if self._char_table is None:
            gen = self.cyclic_generator()
            if gen is not None:
                rows = _cyclic_rows(self, gen)
            else:
                rows = _burnside_rows(self)
            self._char_table = CharacterTable(self, rows)
        return self._char_table

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.mul == other.mul

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


class CharacterTable:
    """Irreducible characters as rows over the canonical class order.

    Rows are sorted by (degree, entrywise rounded values), making the
    row index a stable label for the irreducible characters.
    """

    __slots__ = ("group", "rows", "degrees")

    def __init__(self, group: FiniteGroup, rows, tol: float = _ORTHO_TOL):
        k = group.num_classes
        rows = [tuple(complex(v) for v in row) for row in rows]
        if len(rows) != k or any(len(r) != k for r in rows):
            raise DiagonalizationFailed(
                f"expected a {k} x {k} table, got {len(rows)} rows")
        rows.sort(key=_row_sort_key)
        self.group = group
        self.rows = tuple(rows)
        degrees = []
        for row in rows:
            d = row[0]
            if abs(d.imag) > tol or abs(d.real - round(d.real)) > 1e-6 or d.real < 0.5:
                raise DiagonalizationFailed(f"non-integral degree {d}")
            degrees.append(round(d.real))
        self.degrees = tuple(degrees)
        self._check_orthogonality(tol)

    def _check_orthogonality(self, tol):
        g = self.group
        sizes = [len(c) for c in g.classes]
        for i, ri in enumerate(self.rows):
            for j, rj in enumerate(self.rows):
                val = sum(sizes[c] * ri[c] * rj[c].conjugate()
                          for c in range(g.num_classes)) / g.order
                if abs(val - (1 if i == j else 0)) > tol:
                    raise DiagonalizationFailed(
                        f"row orthogonality fails at ({i},{j}): {val}")

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]


def _row_sort_key(row):
    return (round(row[0].real), tuple((round(v.real, 6) + 0.0, round(v.imag, 6) + 0.0)
                                      for v in row))


def _cyclic_rows(G: FiniteGroup, gen: int):
    n = G.order
    power = {0: 0}
    x, k = gen, 1
    while x != 0:
        power[x] = k
        x = G.mul[x][gen]
        k += 1
    rows = []
    for i in range(n):
        row = [0j] * n
        for elt in range(n):
            # abelian group: class index of a singleton class equals its member
            row[G.class_of[elt]] = cmath.exp(2j * cmath.pi * i * power[elt] / n)
        rows.append(row)
    return rows


def _class_sum_matrices(G: FiniteGroup):
    k = G.num_classes
    mats = np.zeros((k, k, k))
    for c in range(k):
        for j in range(k):
            bucket = [0] * k
            for x in G.classes[c]:
                row = G.mul[x]
                for y in G.classes[j]:
                    bucket[G.class_of[row[y]]] += 1
            for t in range(k):
                # pair counts are constant on the target class
                mats[c][t][j] = bucket[t] // len(G.classes[t])
    return mats


def _burnside_rows(G: FiniteGroup):
    k = G.num_classes
    mats = _class_sum_matrices(G)
    sizes = np.array([len(c) for c in G.classes], dtype=float)
    rng = np.random.default_rng(_EIG_SEED)
    for _ in range(8):
        coeffs = rng.normal(size=k) + 1j * rng.normal(size=k)
        combo = np.tensordot(coeffs, mats, axes=1)
        _, vecs = np.linalg.eig(combo)
        try:
            rows = []
            for idx in range(k):
                v = vecs[:, idx]
                norm = np.vdot(v, v).real
                omega = np.array([np.vdot(v, mats[c] @ v) / norm for c in range(k)])
                d_sq = G.order / np.sum(np.abs(omega) ** 2 / sizes)
                d = math.sqrt(d_sq.real if isinstance(d_sq, complex) else d_sq)
                if abs(d - round(d)) > 1e-6:
                    raise DiagonalizationFailed(f"degree {d} not integral")
                rows.append(tuple(round(d) * omega[c] / sizes[c] for c in range(k)))
            return CharacterTable(G, rows).rows
        except DiagonalizationFailed:
            continue
    raise DiagonalizationFailed(
        f"character table did not separate after retries (order {G.order})")


def group_from_table(rows, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """Validate a multiplication table and build the group.

    Checks shape, row/column bijectivity, existence of a two-sided
    identity and associativity, each with a witness in the error message.
    The identity is relabeled to 0 if needed.
    """
    n = len(rows)
    if n == 0:
        raise NoIdentity("empty table")
    if n > max_order:
        raise UnsupportedSpec(f"order {n} exceeds the cap {max_order}")
    table = []
    for i, row in enumerate(rows):
        row = [int(v) for v in row]
        if len(row) != n:
            raise NotBijectiveRow(f"row {i} has length {len(row)}, expected {n}")
        if any(v < 0 or v >= n for v in row):
            raise NotBijectiveRow(f"row {i} has out-of-range entries: {row}")
        table.append(row)
    full = set(range(n))
    for i in range(n):
        if set(table[i]) != full:
            raise NotBijectiveRow(f"row {i} is not a permutation: {table[i]}")
        col = {table[a][i] for a in range(n)}
        if col != full:
            raise NotBijectiveRow(f"column {i} is not a permutation")
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("table has no two-sided identity")
    if identity != 0:
        swap = list(range(n))
        swap[0], swap[identity] = identity, 0
        table = [[swap[table[swap[a]][swap[b]]] for b in range(n)]
                 for a in range(n)]
    for a in range(n):
        for b in range(n):
            tab = table[a][b]
            for c in range(n):
                if table[tab][c] != table[a][table[b][c]]:
                    raise NotAssociative(f"(a,b,c)=({a},{b},{c}): "
                                         f"(ab)c={table[tab][c]} a(bc)={table[a][table[b][c]]}")
    return FiniteGroup(table)


def _sym_table(k: int):
    import itertools
    elems = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(elems)}
    # composition convention: (pq)(i) = q(p(i)), apply p first
    return [[index[tuple(q[p[i]] for i in range(k))] for q in elems] for p in elems]


def _dihedral_table(k: int):
    # elements (t, a) = s^t r^a with id t*k + a; s r s = r^-1
    def mul(x, y):
        t1, a1 = divmod(x, k)
        t2, a2 = divmod(y, k)
        a = (a1 * (-1) ** t2 + a2) % k
        return ((t1 + t2) % 2) * k + a
    return [[mul(x, y) for y in range(2 * k)] for x in range(2 * k)]


def builtin_group(spec: str, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """Build one of the named groups: trivial, cyclic:k, sym:k, dihedral:k."""
    spec = spec.strip()
    if spec == "trivial":
        return group_from_table([[0]], max_order)
    m = re.fullmatch(r"(cyclic|sym|dihedral):(\d+)", spec)
    if not m:
        raise UnsupportedSpec(f"unknown group spec {spec!r}")
    kind, k = m.group(1), int(m.group(2))
    if k < 1:
        raise UnsupportedSpec(f"{kind} parameter must be >= 1")
    if kind == "cyclic":
        if k > max_order:
            raise UnsupportedSpec(f"cyclic:{k} exceeds the order cap {max_order}")
        return group_from_table([[(a + b) % k for b in range(k)] for a in range(k)],
                                max_order)
    if kind == "sym":
        if math.factorial(k) > max_order:
            raise UnsupportedSpec(f"sym:{k} has order {math.factorial(k)} > cap {max_order}")
        return group_from_table(_sym_table(k), max_order)
    if 2 * k > max_order:
        raise UnsupportedSpec(f"dihedral:{k} has order {2 * k} > cap {max_order}")
    return group_from_table(_dihedral_table(k), max_order)


def group_from_json(obj, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """Build a group from the file format {"order", "table", ["characters"]}."""
    if not isinstance(obj, dict) or "table" not in obj:
        raise UnsupportedSpec("group JSON must be an object with a 'table' field")
    table = obj["table"]
    if "order" in obj and int(obj["order"]) != len(table):
        raise UnsupportedSpec(f"declared order {obj['order']} != table size {len(table)}")
    G = group_from_table(table, max_order)
    if "characters" in obj:
        rows = [[complex(re_im[0], re_im[1]) for re_im in row]
                for row in obj["characters"]]
        G._char_table = CharacterTable(G, rows)
    return G


def resolve_group(spec: str, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """Resolve a CLI group argument: builtin spec string or JSON file path."""
    if spec == "trivial" or re.fullmatch(r"(cyclic|sym|dihedral):\d+", spec.strip()):
        return builtin_group(spec, max_order)
    try:
        with open(spec) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UnsupportedSpec(f"not a builtin spec and not a readable file: {spec} ({exc})")
    return group_from_json(obj, max_order)
