"""Permutations, permutation groups, orbits, and stabilizer chains.

Conventions used throughout the package:

- points are 0-based internally; every parser/formatter speaks 1-based
- composition is left-to-right: (p * q) means "apply p, then q", so that
  x.(p*q) = (x.p).q and the group acts on the right
- orbit walks are breadth-first with a visited-set on canonical forms, and
  refuse to return a truncated orbit: exceeding the cap raises
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

DEFAULT_ORBIT_CAP = 10**7
DEFAULT_ENUM_CAP = 10**6


class OrbitCapExceeded(RuntimeError):
    """Raised when an orbit walk visits more objects than its cap allows."""


class EnumerationCapExceeded(RuntimeError):
    """Raised when element enumeration exceeds its cap."""


class GroupFileError(ValueError):
    """Malformed group file; message carries the offending line number."""


class InternalCheckError(RuntimeError):
    """An exact-arithmetic consistency check failed (never a user error)."""


class Permutation:
    """An element of S_n stored as a 0-based image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation: %r" % (images,))
        self.images = images

    @staticmethod
    def identity(degree):
        return Permutation(range(degree))

    @staticmethod
    def from_one_line(values):
        """Build from a 1-based image row like [2, 3, 1]."""
        return Permutation(v - 1 for v in values)

    @staticmethod
    def from_cycles(degree, cycles):
        """Build from 1-based cycles, e.g. [(1, 2, 3), (4, 5)]."""
        images = list(range(degree))
        for cycle in cycles:
            pts = [c - 1 for c in cycle]
            if any(p < 0 or p >= degree for p in pts):
                raise ValueError("cycle point out of range 1..%d" % degree)
            if len(set(pts)) != len(pts):
                raise ValueError("repeated point in cycle %r" % (cycle,))
            for a, b in zip(pts, pts[1:]):
                images[a] = b
            if pts:
                images[pts[-1]] = pts[0]
        return Permutation(images)

    @property
    def degree(self):
        return len(self.images)

    def __mul__(self, other):
        """self then other."""
        q = other.images
        return Permutation(q[i] for i in self.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def one_line(self):
        """1-based image row."""
        return tuple(i + 1 for i in self.images)

    def cycle_string(self):
        """1-based disjoint-cycle form, '()' for the identity."""
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append("(" + " ".join(str(c + 1) for c in cycle) + ")")
        return "".join(out) or "()"

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%s)" % (self.cycle_string(),)


def parse_cycles(text, degree):
    """Parse 1-based cycle notation like '(1 2 3)(4 5)' or '(1,2,3)'."""
    text = text.strip()
    if text in ("()", ""):
        return Permutation.identity(degree)
    if not text.startswith("("):
        raise ValueError("cycle notation must start with '('")
    cycles = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "(":
            raise ValueError("unexpected %r in cycle notation" % text[pos])
        end = text.find(")", pos)
        if end < 0:
            raise ValueError("unbalanced '(' in cycle notation")
        body = text[pos + 1:end].replace(",", " ").split()
        if body:
            try:
                cycles.append(tuple(int(tok) for tok in body))
            except ValueError:
                raise ValueError("non-integer point in cycle %r" % text[pos:end + 1])
        pos = end + 1
    return Permutation.from_cycles(degree, cycles)


# ---------------------------------------------------------------------------
# actions


def act_point(x, images):
    return images[x]


def act_tuple(xs, images):
    return tuple(images[x] for x in xs)


def act_set(xs, images):
    """Action on a k-subset held as a sorted tuple."""
    return tuple(sorted(images[x] for x in xs))


# ---------------------------------------------------------------------------
# stabilizer chains


@dataclass
class ChainLevel:
    point: int
    gens: list = field(default_factory=list)
    transversal: dict = field(default_factory=dict)


@dataclass
class StabilizerChain:
    """Base-and-strong-generators data; levels[i] stabilizes base[:i]."""

    degree: int
    levels: list

    @property
    def base(self):
        return tuple(level.point for level in self.levels)

    def order(self):
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def sift(self, perm):
        """Factor perm through the transversals; identity residue = member."""
        g = perm
        for level in self.levels:
            x = g.images[level.point]
            u = level.transversal.get(x)
            if u is None:
                return g
            g = g * u.inverse()
        return g

    def contains(self, perm):
        return self.sift(perm).is_identity()


def schreier_sims(degree, generators):
    """Deterministic base/strong-generating-set construction.

    Base points are taken as the smallest point moved at each level, so for a
    fixed generator list the chain (and all transversals) is reproducible.
    Level k sees every strong generator fixing the first k base points, which
    keeps the level groups nested the way the order product requires.
    """
    ident = Permutation.identity(degree)
    base = []
    strong = []
    levels = []

    def rebuild(k):
        level = levels[k]
        level.gens = [g for g in strong
                      if all(g.images[base[m]] == base[m] for m in range(k))]
        trans = {level.point: ident}
        frontier = [level.point]
        while frontier:
            nxt = []
            for x in frontier:
                ux = trans[x]
                for s in level.gens:
                    y = s.images[x]
                    if y not in trans:
                        trans[y] = ux * s
                        nxt.append(y)
            frontier = nxt
        level.transversal = trans

    def strip(g, start):
        for j in range(start, len(levels)):
            x = g.images[levels[j].point]
            u = levels[j].transversal.get(x)
            if u is None:
                return g, j
            g = g * u.inverse()
            if g.is_identity():
                break
        return g, len(levels)

    def add_generator(g, start):
        """Sift g in; returns True if a new strong generator was absorbed."""
        residue, j = strip(g, start)
        if residue.is_identity():
            return False
        strong.append(residue)
        if j == len(levels):
            moved = min(i for i in range(degree) if residue.images[i] != i)
            base.append(moved)
            levels.append(ChainLevel(moved))
        for k in range(j + 1):
            rebuild(k)
        return True

    for g in generators:
        if not g.is_identity():
            add_generator(g, 0)

    # Close under Schreier generators: repeat full passes until no level
    # absorbs a new strong generator.  Each absorption strictly grows the
    # product of transversal sizes, so the loop terminates.
    changed = True
    while changed:
        changed = False
        for i in range(len(levels)):
            level = levels[i]
            for x in list(level.transversal):
                ux = level.transversal[x]
                for s in level.gens:
                    y = s.images[x]
                    uy = level.transversal[y]
                    schreier = ux * s * uy.inverse()
                    if schreier.is_identity():
                        continue
                    if add_generator(schreier, i + 1):
                        changed = True
            if changed:
                break

    return StabilizerChain(degree, levels)


# ---------------------------------------------------------------------------
# groups


class PermGroup:
    """A permutation group given by generators on 1..degree (0-based inside)."""

    def __init__(self, degree, generators, name=None):
        generators = tuple(generators)
        if not generators:
            generators = (Permutation.identity(degree),)
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree %d != group degree %d"
                                 % (g.degree, degree))
        self.degree = degree
        self.generators = generators
        self.name = name or ("group of degree %d" % degree)
        self._chain = None
        self._lock = threading.Lock()

    def raw_gens(self):
        """Image tuples of the generators, for tight orbit loops."""
        return [g.images for g in self.generators]

    def chain(self):
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = schreier_sims(self.degree, self.generators)
        return self._chain

    def order(self):
        return self.chain().order()

    def contains(self, perm):
        if perm.degree != self.degree:
            return False
        return self.chain().contains(perm)

    def __repr__(self):
        return "PermGroup(%s)" % self.name


def enumerate_elements(group, cap=DEFAULT_ENUM_CAP):
    """All elements by word BFS over the generators; cap is a hard limit."""
    ident = Permutation.identity(group.degree)
    raw = [g.images for g in group.generators]
    seen = {ident.images}
    out = [ident]
    frontier = [ident.images]
    while frontier:
        nxt = []
        for p in frontier:
            for q in raw:
                r = tuple(q[i] for i in p)
                if r not in seen:
                    if len(seen) >= cap:
                        raise EnumerationCapExceeded(
                            "group enumeration exceeded cap %d" % cap)
                    seen.add(r)
                    out.append(Permutation(r))
                    nxt.append(r)
        frontier = nxt
    return out


def orbit(group, seed, act, cap=DEFAULT_ORBIT_CAP):
    """Breadth-first orbit of seed under the group, as a set of canonical objects.

    `act(obj, images)` must return the canonical form of obj moved by the
    permutation with the given image tuple.  Exceeding `cap` raises
    OrbitCapExceeded rather than returning a truncated orbit.
    """
    raw = group.raw_gens()
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for images in raw:
                y = act(x, images)
                if y not in seen:
                    if len(seen) >= cap:
                        raise OrbitCapExceeded(
                            "orbit of %r exceeded cap %d" % (seed, cap))
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def orbit_transversal(group, seed, act, cap=DEFAULT_ORBIT_CAP):
    """Orbit walk that also records one group element mapping seed to each point."""
    ident = Permutation.identity(group.degree)
    trans = {seed: ident}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            ux = trans[x]
            for g in group.generators:
                y = act(x, g.images)
                if y not in trans:
                    if len(trans) >= cap:
                        raise OrbitCapExceeded(
                            "orbit of %r exceeded cap %d" % (seed, cap))
                    trans[y] = ux * g
                    nxt.append(y)
        frontier = nxt
    return trans


def stabilizer_generators(group, seed, act, cap=DEFAULT_ORBIT_CAP):
    """Setwise/pointwise stabilizer of seed via Schreier generators.

    Works for any action the orbit machinery accepts; the result is a group on
    the same points as `group` whose elements all fix `seed` under `act`.
    """
    trans = orbit_transversal(group, seed, act, cap=cap)
    gens = []
    seen = set()
    for x, ux in trans.items():
        for g in group.generators:
            y = act(x, g.images)
            schreier = ux * g * trans[y].inverse()
            if schreier.is_identity() or schreier.images in seen:
                continue
            seen.add(schreier.images)
            gens.append(schreier)
    if not gens:
        gens = [Permutation.identity(group.degree)]
    return PermGroup(group.degree, gens,
                     name="stabilizer in %s" % group.name)


def induced_action(group, domain):
    """Restrict the group to an invariant list of points (0-based).

    The returned group acts on 0..len(domain)-1 by position.  A generator
    moving any domain point outside the domain is an error.
    """
    index = {p: i for i, p in enumerate(domain)}
    gens = []
    seen = set()
    for g in group.generators:
        images = []
        for p in domain:
            q = g.images[p]
            if q not in index:
                raise ValueError(
                    "domain not invariant: generator moves point %d out" % (p + 1))
            images.append(index[q])
        t = tuple(images)
        if t not in seen:
            seen.add(t)
            gens.append(Permutation(t))
    return PermGroup(len(domain), gens, name="induced from %s" % group.name)


def burnside_orbit_count(group, domain, act, cap=DEFAULT_ENUM_CAP):
    """Number of orbits on `domain` by averaging fixed points, exactly.

    Enumerates the whole group (within cap), so only suitable for small
    groups; a non-integer average means the inputs were inconsistent and is
    an internal error, never rounded away.
    """
    elements = enumerate_elements(group, cap=cap)
    total = 0
    for g in elements:
        images = g.images
        total += sum(1 for x in domain if act(x, images) == x)
    if total % len(elements) != 0:
        raise InternalCheckError(
            "fixed-point total %d not divisible by group order %d"
            % (total, len(elements)))
    return total // len(elements)


def orbit_count(group, domain, act):
    """Number of orbits on an explicit finite domain, by BFS flood fill."""
    raw = group.raw_gens()
    remaining = set(domain)
    count = 0
    while remaining:
        seed = remaining.pop()
        count += 1
        frontier = [seed]
        while frontier:
            nxt = []
            for x in frontier:
                for images in raw:
                    y = act(x, images)
                    if y in remaining:
                        remaining.remove(y)
                        nxt.append(y)
            frontier = nxt
    return count


# ---------------------------------------------------------------------------
# group files


def parse_group_file(text, name=None):
    """Parse the plain-text group format.

    First effective line: `degree <n>`.  Each following effective line is one
    generator, either `img: i1 i2 ... in` (1-based image row) or disjoint
    cycles like `(1 2 3)(4 5)`.  `#` starts a comment.  Malformed input raises
    GroupFileError naming the line.
    """
    degree = None
    gens = []
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise GroupFileError(
                    "line %d: expected 'degree <n>', got %r" % (lineno, line))
            try:
                degree = int(parts[1])
            except ValueError:
                raise GroupFileError(
                    "line %d: degree is not an integer: %r" % (lineno, parts[1]))
            if degree < 1:
                raise GroupFileError("line %d: degree must be >= 1" % lineno)
            continue
        try:
            if line.startswith("img:"):
                values = [int(tok) for tok in line[4:].replace(",", " ").split()]
                if len(values) != degree:
                    raise ValueError(
                        "image row has %d entries, degree is %d"
                        % (len(values), degree))
                gens.append(Permutation.from_one_line(values))
            elif line.startswith("("):
                gens.append(parse_cycles(line, degree))
            else:
                raise ValueError("expected 'img:' row or cycle notation")
        except ValueError as exc:
            raise GroupFileError("line %d: %s" % (lineno, exc))
    if degree is None:
        raise GroupFileError("no 'degree <n>' line found")
    if not gens:
        gens = [Permutation.identity(degree)]
    return PermGroup(degree, gens, name=name)


def render_group_file(group, comment=None):
    """Serialize a group in the format parse_group_file reads back."""
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append("# " + c)
    lines.append("degree %d" % group.degree)
    for g in group.generators:
        lines.append(g.cycle_string())
    return "\n".join(lines) + "\n"
