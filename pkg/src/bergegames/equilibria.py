"""Nash and Berge equilibrium checks, best supports, and game structure.

Every check reduces the quantification over mixed deviations/complements to
pure ones:

* a player's own expected payoff is affine in their own probability vector,
  so the best unilateral deviation is attained at a pure strategy;
* the expected payoff is multilinear in the co-players' probability vectors,
  so its maximum over the product of their simplices is attained at a pure
  complement (vertex attainment).

Verdicts therefore carry an exact *deficiency*: the largest gap any player
(Nash) or any coalition of co-players (Berge) could close.  Deficiency 0 is
exact equality; there is no tolerance anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .game import Game, MixedProfile, MixedStrategy, PureProfile, UnsupportedGameError


@dataclass(frozen=True)
class EquilibriumVerdict:
    """Boolean verdict plus the exact gap and a witness attaining it.

    For Nash the witness is ``(player, pure deviation index)``; for Berge it
    is ``(player, pure complement indices)`` with the complement listed in
    increasing player order, the checked player omitted.
    """

    is_equilibrium: bool
    deficiency: Fraction
    worst_witness: tuple

    def __post_init__(self):
        assert self.is_equilibrium == (self.deficiency == 0)


@dataclass(frozen=True)
class BestSupportResult:
    """The exact maximum a player can receive from the co-players, with all
    pure complements attaining it (lexicographic order)."""

    player: int
    value: Fraction
    supports: tuple[tuple[int, ...], ...]


def _co_counts(game: Game, player: int) -> tuple[int, ...]:
    return tuple(m for j, m in enumerate(game.strategy_counts) if j != player)


def _insert(complement: Sequence[int], player: int, own: int) -> PureProfile:
    parts = list(complement)
    parts.insert(player, own)
    return tuple(parts)


def _payoff_vs_pure_complement(game: Game, player: int, strategy: MixedStrategy,
                               complement: Sequence[int]) -> Fraction:
    # Expected payoff of (strategy at `player`, point distributions elsewhere).
    total = Fraction(0)
    for own, p in enumerate(strategy.probs):
        if p:
            total += p * game.payoff(_insert(complement, player, own), player)
    return total


def best_own_deviation_value(game: Game, profile: MixedProfile, player: int) -> Fraction:
    """Max payoff `player` can reach by unilateral deviation, holding the
    co-players fixed.  Equals the supremum over mixed deviations by affinity."""
    game.validate_profile(profile)
    best = None
    for own in range(game.strategy_counts[player]):
        value = game.expected_payoff(
            profile.replace(player, MixedStrategy.point(own, game.strategy_counts[player])),
            player)
        if best is None or value > best:
            best = value
    return best


def is_nash(game: Game, profile: MixedProfile) -> EquilibriumVerdict:
    """Exact Nash check: no player gains by any unilateral (mixed) deviation."""
    game.validate_profile(profile)
    worst_gap = Fraction(0)
    worst_witness = None
    for player in range(game.player_count):
        realized = game.expected_payoff(profile, player)
        m = game.strategy_counts[player]
        for own in range(m):
            value = game.expected_payoff(
                profile.replace(player, MixedStrategy.point(own, m)), player)
            gap = value - realized
            if worst_witness is None or gap > worst_gap:
                worst_gap = gap
                worst_witness = (player, own)
    return EquilibriumVerdict(worst_gap == 0, max(worst_gap, Fraction(0)), worst_witness)


def best_support(game: Game, player: int, strategy: MixedStrategy) -> BestSupportResult:
    """Max of the player's expected payoff over all pure complements, with
    every maximizer.  By multilinearity this bounds all mixed complements."""
    if len(strategy) != game.strategy_counts[player]:
        raise ValueError("strategy does not match the player's strategy count")
    value = None
    supports = []
    for complement in itertools.product(*(range(m) for m in _co_counts(game, player))):
        u = _payoff_vs_pure_complement(game, player, strategy, complement)
        if value is None or u > value:
            value, supports = u, [complement]
        elif u == value:
            supports.append(complement)
    return BestSupportResult(player, value, tuple(supports))


def is_berge(game: Game, profile: MixedProfile) -> EquilibriumVerdict:
    """Exact Berge check (in the sense of Zhukovskii): no coalition of all
    co-players of any player can raise that player's payoff."""
    game.validate_profile(profile)
    worst_gap = Fraction(0)
    worst_witness = None
    for player in range(game.player_count):
        realized = game.expected_payoff(profile, player)
        result = best_support(game, player, profile[player])
        gap = result.value - realized
        if worst_witness is None or gap > worst_gap:
            worst_gap = gap
            worst_witness = (player, result.supports[0])
    return EquilibriumVerdict(worst_gap == 0, max(worst_gap, Fraction(0)), worst_witness)


def berge_deficiency(game: Game, profile: MixedProfile) -> Fraction:
    """The Berge gap: 0 exactly at Berge equilibria."""
    return is_berge(game, profile).deficiency


def enumerate_pure_nash(game: Game) -> list[PureProfile]:
    """All pure Nash equilibria, lexicographic."""
    found = []
    for profile in game.pure_profiles():
        vec = game.payoff_vector(profile)
        if all(game.payoff(_insert(_drop(profile, i), i, own), i) <= vec[i]
               for i in range(game.player_count)
               for own in range(game.strategy_counts[i])):
            found.append(profile)
    return found


def enumerate_pure_berge(game: Game) -> list[PureProfile]:
    """All pure Berge equilibria, lexicographic."""
    found = []
    for profile in game.pure_profiles():
        vec = game.payoff_vector(profile)
        ok = True
        for i in range(game.player_count):
            own = profile[i]
            for complement in itertools.product(*(range(m) for m in _co_counts(game, i))):
                if game.payoff(_insert(complement, i, own), i) > vec[i]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(profile)
    return found


def _drop(profile: Sequence[int], player: int) -> tuple[int, ...]:
    return tuple(v for j, v in enumerate(profile) if j != player)


def constant_sum(game: Game) -> Optional[Fraction]:
    """The common payoff-vector sum over all pure profiles, or None."""
    total = None
    for profile in game.pure_profiles():
        s = sum(game.payoff_vector(profile))
        if total is None:
            total = s
        elif s != total:
            return None
    return total


def own_payoff_independent(game: Game) -> tuple[bool, ...]:
    """Per player: is the player's payoff the same under every own strategy,
    for every fixed pure profile of the co-players?"""
    flags = []
    for player in range(game.player_count):
        independent = True
        for complement in itertools.product(*(range(m) for m in _co_counts(game, player))):
            values = {game.payoff(_insert(complement, player, own), player)
                      for own in range(game.strategy_counts[player])}
            if len(values) > 1:
                independent = False
                break
        flags.append(independent)
    return tuple(flags)


def is_pareto_optimal_pure(game: Game, profile: Sequence[int]) -> bool:
    """True iff no other pure profile weakly dominates this one."""
    vec = game.payoff_vector(profile)
    for other in game.pure_profiles():
        ovec = game.payoff_vector(other)
        if all(o >= v for o, v in zip(ovec, vec)) and any(o > v for o, v in zip(ovec, vec)):
            return False
    return True


def swap_payoffs_2p(game: Game) -> Game:
    """The 2-player game with payoff vectors (u1, u2) turned into (u2, u1).

    Berge equilibria of the original game are exactly Nash equilibria of the
    swapped game, and vice versa.
    """
    if game.player_count != 2:
        raise UnsupportedGameError("payoff swap is defined for 2-player games only")
    table = {profile: tuple(reversed(game.payoff_vector(profile)))
             for profile in game.pure_profiles()}
    return Game(game.strategy_counts, table, game.strategy_names)
