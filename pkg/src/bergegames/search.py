"""Mixed-strategy Berge existence for own-payoff-independent 2x2x2 games,
plus an exact grid search over simplex grids for general small games.

For a 2x2x2 game in which no player can influence their own payoff, player
i's expected payoff is a single bilinear form in the two co-players'
first-strategy probabilities.  The graph of the best-support correspondence
is then (own coordinate free) x (argmax faces of that form), a union of
axis-aligned faces of the unit cube.  A Berge equilibrium exists iff the
three graphs intersect; the intersection is computed exactly by
coordinate-wise meets, and a nonempty meet yields a witness that is
re-verified, while an empty one yields a coordinate conflict certificate.
"""

from __future__ import annotations

import heapq
import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from . import equilibria
from .game import Game, MixedProfile, MixedStrategy, UnsupportedGameError

# A face of [0,1]^d: per coordinate either a fixed value 0/1 or None (free).
Face = tuple[Optional[int], ...]


def face_str(face: Face) -> str:
    return "(" + ",".join("*" if c is None else str(c) for c in face) + ")"


def face_contains(outer: Face, inner: Face) -> bool:
    """inner is a subface of outer."""
    return all(o is None or o == i for o, i in zip(outer, inner))


def meet_faces(f: Face, g: Face) -> Optional[Face]:
    """Coordinate-wise intersection; None when some coordinate is fixed to
    0 in one face and 1 in the other."""
    out = []
    for a, b in zip(f, g):
        if a is None:
            out.append(b)
        elif b is None or a == b:
            out.append(a)
        else:
            return None
    return tuple(out)


@dataclass(frozen=True)
class FaceSet:
    """A deduplicated union of faces of [0,1]^dim; faces contained in other
    faces of the set are pruned."""

    dim: int
    faces: frozenset[Face]

    def __post_init__(self):
        faces = set()
        for f in self.faces:
            f = tuple(f)
            if len(f) != self.dim:
                raise ValueError(f"face {f} has wrong dimension, expected {self.dim}")
            faces.add(f)
        pruned = {f for f in faces
                  if not any(g != f and face_contains(g, f) for g in faces)}
        object.__setattr__(self, "faces", frozenset(pruned))

    def __bool__(self):
        return bool(self.faces)

    def intersect(self, other: "FaceSet") -> "FaceSet":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        met = set()
        for f, g in itertools.product(self.faces, other.faces):
            m = meet_faces(f, g)
            if m is not None:
                met.add(m)
        return FaceSet(self.dim, frozenset(met))

    def forced_value(self, coordinate: int) -> Optional[int]:
        """The value every face of the set fixes `coordinate` to, if any."""
        values = {f[coordinate] for f in self.faces}
        if len(values) == 1:
            (v,) = values
            if v is not None:
                return v
        return None

    def sample_points(self, step: Fraction) -> Iterator[tuple[Fraction, ...]]:
        """Grid points of every face, free coordinates stepped by `step`."""
        ticks = []
        t = Fraction(0)
        while t < 1:
            ticks.append(t)
            t += step
        ticks.append(Fraction(1))
        for face in sorted(self.faces, key=lambda f: tuple(-1 if c is None else c for c in f)):
            axes = [[Fraction(c)] if c is not None else ticks for c in face]
            yield from itertools.product(*axes)

    def sorted_faces(self) -> list[Face]:
        return sorted(self.faces, key=lambda f: tuple(2 if c is None else c for c in f))


@dataclass(frozen=True)
class BilinearForm:
    """f(q, r) = a*q*r + b*q + c*r + d over the unit square."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __call__(self, q, r) -> Fraction:
        return self.a * q * r + self.b * q + self.c * r + self.d


def bilinear_argmax(form: BilinearForm) -> tuple[FaceSet, Fraction]:
    """All maximizers of a bilinear form over [0,1]^2, as a FaceSet.

    A bilinear function is linear along every axis-parallel segment, so its
    maximum over the square is attained at a corner, a whole edge attains it
    iff both endpoints do, and the full square only when f is constant
    (which all four corners being equal already forces).
    """
    corners = {(0, 0): form.d,
               (0, 1): form.c + form.d,
               (1, 0): form.b + form.d,
               (1, 1): form.a + form.b + form.c + form.d}
    best = max(corners.values())
    attaining = {c for c, v in corners.items() if v == best}
    faces: set[Face] = set(attaining)
    for fixed_axis in (0, 1):
        for fixed_val in (0, 1):
            ends = [c for c in corners if c[fixed_axis] == fixed_val]
            if all(e in attaining for e in ends):
                edge = [None, None]
                edge[fixed_axis] = fixed_val
                faces.add(tuple(edge))
    if len(attaining) == 4 and form.a == 0:
        faces.add((None, None))
    return FaceSet(2, frozenset(faces)), best


def _co_payoff_form(game: Game, player: int) -> BilinearForm:
    # Player's expected payoff as a bilinear form in the co-players'
    # first-strategy probabilities (own index pinned to 0: it is irrelevant
    # under own-payoff independence).
    j, k = [p for p in range(3) if p != player]

    def u(cj, ck):
        profile = [0, 0, 0]
        profile[j], profile[k] = cj, ck
        return game.payoff(tuple(profile), player)

    # x_j, x_k are probabilities of strategy 0; corner (1,1) is (0,0) in indices.
    d = u(1, 1)
    b = u(0, 1) - d
    c = u(1, 0) - d
    a = u(0, 0) - u(0, 1) - u(1, 0) + u(1, 1)
    return BilinearForm(a, b, c, d)


def _require_oi222(game: Game):
    if game.strategy_counts != (2, 2, 2):
        raise UnsupportedGameError(
            f"requires a 2x2x2 game, got shape {game.strategy_counts}")
    flags = equilibria.own_payoff_independent(game)
    for player, ok in enumerate(flags):
        if not ok:
            raise UnsupportedGameError(
                f"player {player + 1} can influence their own payoff")


def best_support_graph_222(game: Game) -> tuple[FaceSet, FaceSet, FaceSet]:
    """Per player, the graph of the best-support correspondence as a union
    of faces of the cube, coordinates being each player's first-strategy
    probability."""
    _require_oi222(game)
    graphs = []
    for player in range(3):
        argmax, _ = bilinear_argmax(_co_payoff_form(game, player))
        co_axes = [p for p in range(3) if p != player]
        embedded = set()
        for face in argmax.faces:
            cube: list[Optional[int]] = [None, None, None]
            for axis, c in zip(co_axes, face):
                cube[axis] = c
            embedded.add(tuple(cube))
        graphs.append(FaceSet(3, frozenset(embedded)))
    return tuple(graphs)


@dataclass(frozen=True)
class CoordinateConflict:
    """A coordinate one player's graph forces to 0 while another forces
    it to 1; proof that the graphs cannot intersect."""

    coordinate: int
    player_forcing_zero: int
    player_forcing_one: int


@dataclass(frozen=True)
class ExistenceCertificate:
    exists: bool
    witness: Optional[MixedProfile]
    per_player_graphs: tuple[FaceSet, FaceSet, FaceSet]
    conflict: Optional[CoordinateConflict]


def _witness_from_face(face: Face) -> MixedProfile:
    # Free coordinates completed with 1/2; coordinate = prob of strategy 0.
    strategies = []
    for c in face:
        x = Fraction(1, 2) if c is None else Fraction(c)
        strategies.append(MixedStrategy((x, 1 - x)))
    return MixedProfile(tuple(strategies))


def decide_berge_existence_oi222(game: Game) -> ExistenceCertificate:
    """Exact existence decision for own-payoff-independent 2x2x2 games:
    Berge equilibria are precisely the points common to the three
    best-support graphs."""
    graphs = best_support_graph_222(game)
    meet = graphs[0].intersect(graphs[1]).intersect(graphs[2])
    if meet:
        face = meet.sorted_faces()[0]
        witness = _witness_from_face(face)
        verdict = equilibria.is_berge(game, witness)
        assert verdict.is_equilibrium, "witness failed exact re-verification"
        return ExistenceCertificate(True, witness, graphs, None)
    conflict = None
    for coord in range(3):
        forced = [(p, graphs[p].forced_value(coord)) for p in range(3)]
        zeros = [p for p, v in forced if v == 0]
        ones = [p for p, v in forced if v == 1]
        if zeros and ones:
            conflict = CoordinateConflict(coord, zeros[0], ones[0])
            break
    return ExistenceCertificate(False, None, graphs, conflict)


def simplex_grid(size: int, resolution: int) -> Iterator[tuple[Fraction, ...]]:
    """All probability vectors of length `size` whose entries are multiples
    of 1/resolution, lexicographic."""
    for cuts in itertools.combinations(range(resolution + size - 1), size - 1):
        prev = -1
        parts = []
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        parts.append(resolution + size - 2 - prev)
        yield tuple(Fraction(p, resolution) for p in parts)


def grid_search_min_deficiency(game: Game, resolution: int,
                               top: int = 10) -> list[tuple[MixedProfile, Fraction]]:
    """Evaluate the Berge deficiency on the full simplex grid of step
    1/resolution per player, exactly; return the `top` best profiles in
    ascending deficiency (lexicographic tiebreak).  Any deficiency-0 result
    is a certified Berge equilibrium."""
    if resolution < 1:
        raise ValueError("resolution must be a positive integer")
    if top < 1:
        raise ValueError("top must be a positive integer")
    per_player = [math.comb(resolution + m - 1, m - 1) for m in game.strategy_counts]
    total = math.prod(per_player)
    if total > 10**7:
        warnings.warn(f"grid has {total} points; this will be slow", RuntimeWarning)

    def entries():
        grids = [list(simplex_grid(m, resolution)) for m in game.strategy_counts]
        for combo in itertools.product(*grids):
            profile = MixedProfile(tuple(MixedStrategy(probs) for probs in combo))
            yield equilibria.berge_deficiency(game, profile), combo, profile

    best = heapq.nsmallest(top, entries(), key=lambda e: (e[0], e[1]))
    return [(profile, deficiency) for deficiency, _, profile in best]
