"""Game documents: a JSON format with exact rational payoffs, plus the
built-in games used throughout the test suite and CLI.

Document layout::

    {"players": 3,
     "strategies": [["A1","A2"], ["B1","B2"], ["C1","C2"]],
     "payoffs": [{"profile": [0,0,0], "u": ["2","1","0"]}, ...]}

Payoff entries are integers or strings "num/den"; floating-point numbers
are rejected so the format stays exact.  Each payoff record names its
profile explicitly, so record order does not matter.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction

from .game import Game


class GameFormatError(ValueError):
    """A game document is malformed."""


def _parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise GameFormatError(f"{where}: boolean is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise GameFormatError(f"{where}: floating-point payoffs are not allowed, "
                              "use an integer or a 'num/den' string")
    if isinstance(value, str):
        try:
            frac = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise GameFormatError(f"{where}: malformed rational {value!r} ({exc})") from None
        return frac
    raise GameFormatError(f"{where}: cannot read a rational from {value!r}")


def parse_game(text: str) -> Game:
    """Parse a game document into a Game; raises GameFormatError with the
    offending location on any defect."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GameFormatError("document must be a JSON object")
    for key in ("players", "strategies", "payoffs"):
        if key not in doc:
            raise GameFormatError(f"missing member {key!r}")

    n = doc["players"]
    if not isinstance(n, int) or n < 1:
        raise GameFormatError("'players' must be a positive integer")
    names = doc["strategies"]
    if (not isinstance(names, list) or len(names) != n
            or any(not isinstance(ns, list) or not ns
                   or any(not isinstance(s, str) for s in ns) for ns in names)):
        raise GameFormatError("'strategies' must be one nonempty list of names per player")
    counts = tuple(len(ns) for ns in names)

    records = doc["payoffs"]
    if not isinstance(records, list):
        raise GameFormatError("'payoffs' must be a list of records")
    table = {}
    for rec in records:
        if not isinstance(rec, dict) or "profile" not in rec or "u" not in rec:
            raise GameFormatError(f"payoff record {rec!r} needs 'profile' and 'u'")
        raw = rec["profile"]
        if (not isinstance(raw, list) or len(raw) != n
                or any(not isinstance(i, int) or isinstance(i, bool) for i in raw)):
            raise GameFormatError(f"profile {raw!r} must be {n} integer indices")
        profile = tuple(raw)
        for j, (i, m) in enumerate(zip(profile, counts)):
            if not 0 <= i < m:
                raise GameFormatError(f"profile {list(profile)}: index {i} of player "
                                      f"{j + 1} out of range [0, {m})")
        if profile in table:
            raise GameFormatError(f"duplicate payoff record for profile {list(profile)}")
        u = rec["u"]
        if not isinstance(u, list) or len(u) != n:
            raise GameFormatError(f"profile {list(profile)}: 'u' must have {n} entries")
        table[profile] = tuple(
            _parse_rational(v, f"profile {list(profile)}, player {j + 1}")
            for j, v in enumerate(u))

    expected = 1
    for m in counts:
        expected *= m
    if len(table) != expected:
        missing = [p for p in itertools.product(*(range(m) for m in counts))
                   if p not in table]
        raise GameFormatError(f"expected {expected} payoff records, got {len(table)}; "
                              f"missing profiles: {[list(p) for p in missing[:5]]}")
    return Game(counts, table, names)


def load_game(path) -> Game:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_game(fh.read())


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize_game(game: Game) -> str:
    """Document text for a Game; parse_game(serialize_game(g)) == g."""
    doc = {
        "players": game.player_count,
        "strategies": [list(ns) for ns in game.strategy_names],
        "payoffs": [
            {"profile": list(profile),
             "u": [format_rational(u) for u in game.payoff_vector(profile)]}
            for profile in game.pure_profiles()
        ],
    }
    return json.dumps(doc, indent=2)


def _doc(names, payoff_fn) -> str:
    counts = tuple(len(ns) for ns in names)
    doc = {
        "players": len(names),
        "strategies": [list(ns) for ns in names],
        "payoffs": [
            {"profile": list(p), "u": [str(v) for v in payoff_fn(p)]}
            for p in itertools.product(*(range(m) for m in counts))
        ],
    }
    return json.dumps(doc, indent=2)


# The 3-player 2x2x2 game in which no player can influence their own payoff,
# every profile is a weak Nash equilibrium, yet no Berge equilibrium exists
# in pure or mixed strategies.
_EQ5_TABLE = {
    (0, 0, 0): (2, 1, 0), (0, 1, 0): (1, 1, 1),
    (1, 0, 0): (2, 0, 1), (1, 1, 0): (1, 0, 2),
    (0, 0, 1): (1, 2, 0), (0, 1, 1): (0, 2, 1),
    (1, 0, 1): (1, 1, 1), (1, 1, 1): (0, 1, 2),
}


def _builtin_eq5() -> str:
    return _doc((("A1", "A2"), ("B1", "B2"), ("C1", "C2")),
                lambda p: _EQ5_TABLE[p])


def _builtin_zero222() -> str:
    return _doc((("A1", "A2"), ("B1", "B2"), ("C1", "C2")),
                lambda p: (0, 0, 0))


def _builtin_pd() -> str:
    table = {(0, 0): (3, 3), (0, 1): (0, 5), (1, 0): (5, 0), (1, 1): (1, 1)}
    return _doc((("C", "D"), ("C", "D")), lambda p: table[p])


def _builtin_sumgame222() -> str:
    # Own-payoff-independent positive control: each player's payoff counts
    # how many co-players pick their first strategy, so all three
    # best-support graphs meet at the all-first-strategies corner.
    def u(p):
        first = [int(i == 0) for i in p]
        return tuple(sum(first) - first[j] for j in range(3))
    return _doc((("A1", "A2"), ("B1", "B2"), ("C1", "C2")), u)


_BUILTINS = {
    "eq5": _builtin_eq5,
    "zero222": _builtin_zero222,
    "pd": _builtin_pd,
    "sumgame222": _builtin_sumgame222,
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin(name: str) -> str:
    """The canonical document text of a built-in game."""
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}; available: "
                         + ", ".join(BUILTIN_NAMES)) from None


def builtin_game(name: str) -> Game:
    return parse_game(builtin(name))
