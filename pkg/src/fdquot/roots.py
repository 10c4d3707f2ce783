"""Root systems and root data built by reflection closure from a Cartan matrix.

Conventions, fixed once for the whole package:

* ``entries[i][j]`` of a Cartan matrix is the pairing of the j-th simple root
  against the i-th simple coroot.  For G2 with alpha short (index 0) and beta
  long (index 1) this stores ``entries[0][1] = -3`` and ``entries[1][0] = -1``.
* Roots are integer coordinate vectors in the simple-root basis, coroots in
  the simple-coroot basis.  Lattice embeddings live on :class:`RootDatum`.
* Positive roots are enumerated by height, then lexicographically by
  coordinates, so every table this package prints is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError, NotFiniteTypeError, UnknownNameError

CLOSURE_BOUND = 10000


# ---------------------------------------------------------------------------
# Cartan matrices


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix plus optional per-positive-root dimensions.

    ``root_dims``, when given, lists dim U_beta for each positive root in
    enumeration order; it defaults to all ones (the split case).
    """

    entries: tuple
    root_dims: tuple | None = None

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise InputError("Cartan matrix must be square")
            for j, x in enumerate(row):
                if not isinstance(x, int):
                    raise InputError("Cartan entries must be integers")
                if i == j and x != 2:
                    raise InputError("Cartan diagonal must be 2")
                if i != j and x > 0:
                    raise InputError("off-diagonal Cartan entries must be <= 0")
                if i != j and (x == 0) != (self.entries[j][i] == 0):
                    raise InputError("Cartan zero pattern must be symmetric")
        if self.root_dims is not None:
            for d in self.root_dims:
                if not isinstance(d, int) or d < 1:
                    raise InputError("root dimensions must be positive integers")

    @property
    def rank(self):
        return len(self.entries)

    def submatrix(self, indices):
        idx = tuple(indices)
        rows = tuple(tuple(self.entries[i][j] for j in idx) for i in idx)
        return CartanMatrix(rows)

    def components(self):
        """Connected components of the Dynkin graph, as sorted index tuples."""
        n = self.rank
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j != i and not seen[j] and self.entries[i][j] != 0:
                        seen[j] = True
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return comps

    def norms(self):
        """Squared-length markers n_i with n_i * entries[i][j] symmetric.

        Normalized so the minimum within each component is 1.
        """
        n = self.rank
        vals = [None] * n
        for comp in self.components():
            vals[comp[0]] = Fraction(1)
            stack = [comp[0]]
            while stack:
                i = stack.pop()
                for j in comp:
                    if j != i and self.entries[i][j] != 0 and vals[j] is None:
                        vals[j] = vals[i] * self.entries[i][j] / self.entries[j][i]
                        stack.append(j)
            low = min(vals[i] for i in comp)
            for i in comp:
                vals[i] /= low
        return tuple(vals)


_SERIES = "ABCDEFG"


def cartan_entries(letter, rank):
    """Cartan matrix of a simple type, in this package's index convention."""
    letter = letter.upper()
    if letter not in _SERIES:
        raise UnknownNameError(f"unknown series {letter!r}")
    n = rank

    def chain_edges(k):
        return [(i, i + 1, -1, -1) for i in range(k - 1)]

    # each edge is (i, j, a_ij, a_ji) with a[i][j] = <alpha_j, alpha_i^vee>
    if letter == "A":
        if n < 1:
            raise InputError("A requires rank >= 1")
        edges = chain_edges(n)
    elif letter == "B":
        if n < 2:
            raise InputError("B requires rank >= 2")
        edges = chain_edges(n - 1) + [(n - 2, n - 1, -1, -2)]
    elif letter == "C":
        if n < 2:
            raise InputError("C requires rank >= 2")
        edges = chain_edges(n - 1) + [(n - 2, n - 1, -2, -1)]
    elif letter == "D":
        if n < 3:
            raise InputError("D requires rank >= 3")
        edges = chain_edges(n - 1) + [(n - 3, n - 1, -1, -1)]
    elif letter == "E":
        if n not in (6, 7, 8):
            raise InputError("E requires rank 6, 7 or 8")
        edges = [(0, 2, -1, -1), (1, 3, -1, -1)] + [(i, i + 1, -1, -1) for i in range(2, n - 1)]
    elif letter == "F":
        if n != 4:
            raise InputError("F requires rank 4")
        edges = [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    else:  # G
        if n != 2:
            raise InputError("G requires rank 2")
        # alpha short first: <beta, alpha^vee> = -3, <alpha, beta^vee> = -1
        edges = [(0, 1, -3, -1)]

    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in edges:
        a[i][j] = aij
        a[j][i] = aji
    return tuple(tuple(row) for row in a)


# ---------------------------------------------------------------------------
# Roots, coroots and the reflection closure


@dataclass(frozen=True)
class Root:
    coords: tuple
    positive: bool
    length2class: str

    @property
    def height(self):
        return sum(self.coords)


@dataclass(frozen=True)
class Coroot:
    coords: tuple


def _pair_with_simple_coroot(cartan, coords, i):
    # <sum_j coords_j alpha_j, alpha_i^vee>
    return sum(c * cartan.entries[i][j] for j, c in enumerate(coords))


def _pair_simple_root_with(cartan, i, coords):
    # <alpha_i, sum_k coords_k alpha_k^vee>
    return sum(c * cartan.entries[k][i] for k, c in enumerate(coords))


def reflect_root_coords(cartan, i, coords):
    k = _pair_with_simple_coroot(cartan, coords, i)
    out = list(coords)
    out[i] -= k
    return tuple(out)


def reflect_coroot_coords(cartan, i, coords):
    k = _pair_simple_root_with(cartan, i, coords)
    out = list(coords)
    out[i] -= k
    return tuple(out)


@dataclass(frozen=True)
class RootSystem:
    """All positive roots of a finite-type Cartan matrix, with coroots."""

    cartan: CartanMatrix
    positive_roots: tuple
    coroots: tuple
    root_dims: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {r.coords: k for k, r in enumerate(self.positive_roots)}
        )

    @property
    def rank(self):
        return self.cartan.rank

    @property
    def num_positive(self):
        return len(self.positive_roots)

    def index_of(self, coords):
        try:
            return self._index[tuple(coords)]
        except KeyError:
            raise InputError(f"{tuple(coords)} is not a positive root") from None

    def contains(self, coords):
        return tuple(coords) in self._index

    def simple_index(self, i):
        e = tuple(1 if j == i else 0 for j in range(self.rank))
        return self.index_of(e)

    def coroot_of(self, coords):
        return self.coroots[self.index_of(coords)]

    def dim_of(self, coords):
        return self.root_dims[self.index_of(coords)]

    def pairing(self, x, coroot):
        """Exact pairing of a rational simple-root-basis vector with a coroot."""
        c = coroot.coords if isinstance(coroot, Coroot) else tuple(coroot)
        if len(x) != self.rank or len(c) != self.rank:
            raise InputError("rank mismatch in pairing")
        total = Fraction(0)
        for i, d in enumerate(c):
            total += d * sum(Fraction(xj) * self.cartan.entries[i][j] for j, xj in enumerate(x))
        return total

    def is_reduced(self):
        return all(
            not self.contains(tuple(2 * c for c in r.coords)) for r in self.positive_roots
        )


def build_root_system(cartan):
    """Enumerate the positive roots of a finite-type Cartan matrix.

    Works by closing the simple (root, coroot) pairs under all simple
    reflections and keeping the positive orbit part.  Raises
    :class:`NotFiniteTypeError` once more than ``CLOSURE_BOUND`` positive
    roots appear, which is how non-finite input is detected.
    """
    n = cartan.rank
    norms = cartan.norms()
    simple = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        simple.append((e, e, i))

    found = {t[0]: t for t in simple}
    frontier = list(simple)
    while frontier:
        fresh = []
        for coords, cocoords, origin in frontier:
            for i in range(n):
                rc = reflect_root_coords(cartan, i, coords)
                if all(c >= 0 for c in rc) and rc not in found:
                    cc = reflect_coroot_coords(cartan, i, cocoords)
                    found[rc] = (rc, cc, origin)
                    fresh.append(found[rc])
                    if len(found) > CLOSURE_BOUND:
                        raise NotFiniteTypeError("not finite type")
        frontier = fresh

    order = sorted(found, key=lambda c: (sum(c), c))
    classes = {}
    for comp in cartan.components():
        comp_norms = sorted({norms[i] for i in comp})
        for i in comp:
            if len(comp_norms) == 1:
                classes[i] = "long"
            elif norms[i] == comp_norms[0]:
                classes[i] = "short"
            elif norms[i] == comp_norms[-1]:
                classes[i] = "long"
            else:
                classes[i] = "intermediate"

    positives = tuple(
        Root(coords=c, positive=True, length2class=classes[found[c][2]]) for c in order
    )
    coroots = tuple(Coroot(coords=found[c][1]) for c in order)

    if cartan.root_dims is not None:
        if len(cartan.root_dims) != len(positives):
            raise InputError(
                f"root_dims has {len(cartan.root_dims)} entries, expected {len(positives)}"
            )
        dims = tuple(cartan.root_dims)
    else:
        dims = (1,) * len(positives)
    return RootSystem(cartan=cartan, positive_roots=positives, coroots=coroots, root_dims=dims)


# ---------------------------------------------------------------------------
# Weyl group elements


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as a reduced word plus its matrix on root coords."""

    word: tuple
    matrix: tuple

    def apply(self, coords):
        return tuple(
            sum(row[j] * c for j, c in enumerate(coords)) for row in self.matrix
        )

    @property
    def length(self):
        return len(self.word)

    def root_permutation(self, rs):
        """Signed images of the positive roots: (sign, positive index) pairs."""
        out = []
        for r in rs.positive_roots:
            img = self.apply(r.coords)
            if all(c >= 0 for c in img):
                out.append((1, rs.index_of(img)))
            else:
                out.append((-1, rs.index_of(tuple(-c for c in img))))
        return tuple(out)


def _identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def reflection_matrix(cartan, i):
    n = cartan.rank
    cols = []
    for j in range(n):
        e = tuple(1 if k == j else 0 for k in range(n))
        cols.append(reflect_root_coords(cartan, i, e))
    return tuple(tuple(cols[j][i2] for j in range(n)) for i2 in range(n))


def word_to_matrix(cartan, word):
    m = _identity_matrix(cartan.rank)
    for i in word:
        m = _matmul(m, reflection_matrix(cartan, i))
    return m


def _matrix_apply(m, coords):
    return tuple(sum(row[j] * c for j, c in enumerate(coords)) for row in m)


def reduced_word_from_matrix(cartan, matrix):
    n = cartan.rank
    ident = _identity_matrix(n)
    m = matrix
    rev = []
    guard = 0
    while m != ident:
        for i in range(n):
            e = tuple(1 if k == i else 0 for k in range(n))
            img = _matrix_apply(m, e)
            if all(c <= 0 for c in img) and any(img):
                rev.append(i)
                m = _matmul(m, reflection_matrix(cartan, i))
                break
        else:
            raise InputError("matrix is not a Weyl group element")
        guard += 1
        if guard > CLOSURE_BOUND:
            raise InputError("matrix is not a Weyl group element")
    return tuple(reversed(rev))


def _longest_matrix_in(cartan, theta):
    """Matrix of the longest element of the parabolic subgroup W_theta."""
    m = _identity_matrix(cartan.rank)
    while True:
        for i in theta:
            e = tuple(1 if k == i else 0 for k in range(cartan.rank))
            if all(c >= 0 for c in _matrix_apply(m, e)):
                m = _matmul(m, reflection_matrix(cartan, i))
                break
        else:
            return m


def longest_element(rs, theta=()):
    """Longest element of W modulo the parabolic W_theta.

    For theta empty this is the longest element w0 itself; for a maximal
    theta = Delta - {alpha} it is the element carrying theta into Delta and
    alpha to a negative root.
    """
    theta = tuple(theta)
    for i in theta:
        if not 0 <= i < rs.rank:
            raise InputError(f"theta index {i} out of range")
    w0 = _longest_matrix_in(rs.cartan, tuple(range(rs.rank)))
    wt = _longest_matrix_in(rs.cartan, theta)
    m = _matmul(w0, wt)
    return WeylElement(word=reduced_word_from_matrix(rs.cartan, m), matrix=m)


# ---------------------------------------------------------------------------
# Whole-group enumeration (permutation form) and the group order


def all_root_coords(rs):
    pos = [r.coords for r in rs.positive_roots]
    return pos + [tuple(-c for c in v) for v in pos]

def simple_reflection_perms(rs):
    roots = all_root_coords(rs)
    index = {v: k for k, v in enumerate(roots)}
    perms = []
    for i in range(rs.rank):
        perms.append(bytes(index[reflect_root_coords(rs.cartan, i, v)] for v in roots))
    return perms


def enumerate_weyl_perms(rs):
    """Every Weyl group element as a permutation (bytes) of all roots.

    Breadth-first closure over the simple reflections; fine up to rank 6.
    """
    gens = simple_reflection_perms(rs)
    n = 2 * rs.num_positive
    ident = bytes(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for w in frontier:
            for g in gens:
                wg = bytes(w[x] for x in g)
                if wg not in seen:
                    seen.add(wg)
                    fresh.append(wg)
        frontier = fresh
    return seen


@lru_cache(maxsize=None)
def weyl_order(cartan):
    """Order of the Weyl group by recursive orbit-stabilizer on weights.

    Weights are tracked by their pairings against the simple coroots, so no
    lattice embedding is needed.  Orbits stay small even for E8.
    """
    n = cartan.rank
    if n == 0:
        return 1
    start = tuple(1 if i == 0 else 0 for i in range(n))
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for lam in frontier:
            for j in range(n):
                if lam[j] == 0:
                    continue
                img = tuple(lam[i] - lam[j] * cartan.entries[i][j] for i in range(n))
                if img not in seen:
                    seen.add(img)
                    fresh.append(img)
        frontier = fresh
    rest = cartan.submatrix(range(1, n))
    return len(seen) * weyl_order(rest)


# ---------------------------------------------------------------------------
# Root data: lattice embeddings


@dataclass(frozen=True)
class RootDatum:
    """A root system embedded in a character lattice X with its dual.

    ``root_embed[i]`` is the i-th simple root as a vector in X and
    ``coroot_embed[i]`` the i-th simple coroot in the dual lattice; the dot
    product of the two sides realizes the canonical pairing.
    """

    name: str
    root_system: RootSystem
    lattice_rank: int
    root_embed: tuple
    coroot_embed: tuple
    labels: tuple

    def __post_init__(self):
        rs = self.root_system
        if self.lattice_rank < rs.rank:
            raise InputError("lattice rank below semisimple rank")
        if len(self.root_embed) != rs.rank or len(self.coroot_embed) != rs.rank:
            raise InputError("embedding size must match the number of simple roots")
        for v in self.root_embed + self.coroot_embed:
            if len(v) != self.lattice_rank:
                raise InputError("embedding vectors must have the lattice rank")
        for i in range(rs.rank):
            for j in range(rs.rank):
                got = sum(x * y for x, y in zip(self.root_embed[i], self.coroot_embed[j]))
                if got != rs.cartan.entries[j][i]:
                    raise InputError(
                        f"embedding pairing <alpha_{i}, alpha_{j}^vee> = {got} "
                        f"differs from the Cartan entry {rs.cartan.entries[j][i]}"
                    )
        if len(self.labels) != rs.rank:
            raise InputError("need one label per simple root")

    @property
    def semisimple_rank(self):
        return self.root_system.rank

    @property
    def central_rank(self):
        return self.lattice_rank - self.semisimple_rank

    def pairing(self, x, lam):
        if len(x) != self.lattice_rank or len(lam) != self.lattice_rank:
            raise InputError("rank mismatch in lattice pairing")
        return sum(Fraction(a) * b for a, b in zip(x, lam))

    def embed_root_vector(self, coords):
        """Push a rational simple-root-basis vector into the lattice X."""
        out = [Fraction(0)] * self.lattice_rank
        for i, c in enumerate(coords):
            for k in range(self.lattice_rank):
                out[k] += Fraction(c) * self.root_embed[i][k]
        return tuple(out)

    def embed_coroot_vector(self, coords):
        out = [Fraction(0)] * self.lattice_rank
        for i, c in enumerate(coords):
            for k in range(self.lattice_rank):
                out[k] += Fraction(c) * self.coroot_embed[i][k]
        return tuple(out)

    def dimension(self):
        rs = self.root_system
        return self.lattice_rank + 2 * sum(rs.root_dims)

    def label_index(self, text):
        """Resolve a simple root given by label or 1-based position."""
        t = str(text).strip().lower()
        for i, lab in enumerate(self.labels):
            if t == lab.lower():
                return i
        if t.isdigit():
            k = int(t)
            if 1 <= k <= self.semisimple_rank:
                return k - 1
        raise UnknownNameError(
            f"unknown simple root {text!r}; expected one of {list(self.labels)}"
        )


def adjoint_datum(cartan, name, labels=None):
    n = cartan.rank
    labels = labels or tuple(f"a{i + 1}" for i in range(n))
    root_embed = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    coroot_embed = tuple(tuple(cartan.entries[i]) for i in range(n))
    return RootDatum(
        name=name,
        root_system=build_root_system(cartan),
        lattice_rank=n,
        root_embed=root_embed,
        coroot_embed=coroot_embed,
        labels=tuple(labels),
    )


def simply_connected_datum(cartan, name, labels=None):
    n = cartan.rank
    labels = labels or tuple(f"a{i + 1}" for i in range(n))
    root_embed = tuple(tuple(cartan.entries[k][i] for k in range(n)) for i in range(n))
    coroot_embed = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    return RootDatum(
        name=name,
        root_system=build_root_system(cartan),
        lattice_rank=n,
        root_embed=root_embed,
        coroot_embed=coroot_embed,
        labels=tuple(labels),
    )


def gl_datum(n, name=None):
    """GL_n as a root datum on the standard character lattice Z^n."""
    if n < 1:
        raise InputError("GL requires n >= 1")
    if n == 1:
        return RootDatum(
            name=name or "GL1",
            root_system=build_root_system(CartanMatrix(())),
            lattice_rank=1,
            root_embed=(),
            coroot_embed=(),
            labels=(),
        )
    cartan = CartanMatrix(cartan_entries("A", n - 1))

    def e(i, sign=1):
        return tuple(sign if k == i else (-sign if k == i + 1 else 0) for k in range(n))

    embeds = tuple(e(i) for i in range(n - 1))
    return RootDatum(
        name=name or f"GL{n}",
        root_system=build_root_system(cartan),
        lattice_rank=n,
        root_embed=embeds,
        coroot_embed=embeds,
        labels=tuple(f"a{i + 1}" for i in range(n - 1)),
    )


def _builtin_names():
    names = ["G2", "F4", "E6", "E7", "E8"]
    names += [f"A{n}" for n in range(1, 9)]
    names += [f"B{n}" for n in range(2, 9)]
    names += [f"C{n}" for n in range(2, 9)]
    names += [f"D{n}" for n in range(4, 9)]
    names += [f"GL{n}" for n in range(1, 13)]
    names += [f"SL{n}" for n in range(2, 10)]
    return names


BUILTIN_NAMES = tuple(_builtin_names())


def builtin_datum(name):
    """Construct a named builtin group as a root datum."""
    key = str(name).strip().upper()
    if key not in BUILTIN_NAMES:
        raise UnknownNameError(f"unknown group {name!r}; builtins: {', '.join(BUILTIN_NAMES)}")
    if key.startswith("GL"):
        return gl_datum(int(key[2:]), name=key)
    if key.startswith("SL"):
        n = int(key[2:])
        return simply_connected_datum(CartanMatrix(cartan_entries("A", n - 1)), name=key)
    letter, rank = key[0], int(key[1:])
    labels = ("alpha", "beta") if key == "G2" else None
    return adjoint_datum(CartanMatrix(cartan_entries(letter, rank)), name=key, labels=labels)


def datum_from_json(doc):
    """Build a root datum from the structured-document form.

    Expected keys: ``cartan`` (required), ``latticeRank``, ``rootEmbed``,
    ``corootEmbed``, ``rootDims``, ``name``, ``labels``.
    """
    if not isinstance(doc, dict) or "cartan" not in doc:
        raise InputError('datum document needs a "cartan" key')
    raw = doc["cartan"]
    try:
        entries = tuple(tuple(int(x) for x in row) for row in raw)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad Cartan matrix: {exc}") from exc
    dims = doc.get("rootDims")
    cartan = CartanMatrix(entries, root_dims=tuple(dims) if dims else None)
    n = cartan.rank
    name = doc.get("name", "custom")
    labels = tuple(doc["labels"]) if "labels" in doc else None

    if "rootEmbed" in doc or "corootEmbed" in doc:
        if "rootEmbed" not in doc or "corootEmbed" not in doc:
            raise InputError("rootEmbed and corootEmbed must be given together")
        rank = int(doc.get("latticeRank") or len(doc["rootEmbed"][0]) if doc["rootEmbed"] else n)
        return RootDatum(
            name=name,
            root_system=build_root_system(cartan),
            lattice_rank=rank,
            root_embed=tuple(tuple(int(x) for x in v) for v in doc["rootEmbed"]),
            coroot_embed=tuple(tuple(int(x) for x in v) for v in doc["corootEmbed"]),
            labels=labels or tuple(f"a{i + 1}" for i in range(n)),
        )
    if doc.get("latticeRank", n) != n:
        raise InputError("latticeRank without embeddings must equal the Cartan rank")
    return adjoint_datum(cartan, name=name, labels=labels)
