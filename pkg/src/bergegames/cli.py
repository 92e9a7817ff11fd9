"""Command-line interface.

Exit codes are a stable contract:
  0  affirmative result (equilibrium / exists / plain success)
  1  input error (missing file, malformed document or arguments)
  2  unsupported operation for the given game
  3  negative verdict (no equilibrium / not-exists)
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import equilibria, search
from .game import Game, MixedProfile, MixedStrategy, UnsupportedGameError
from .gamefile import (BUILTIN_NAMES, GameFormatError, builtin, format_rational,
                       load_game)

COORD_NAMES = ("p", "q", "r")


def _profile_str(game: Game, profile) -> str:
    return " ".join(game.name_of(profile))


def _strategy_str(strategy: MixedStrategy) -> str:
    return "(" + ",".join(format_rational(p) for p in strategy.probs) + ")"


def _mixed_profile_str(profile: MixedProfile) -> str:
    return " ".join(_strategy_str(s) for s in profile.strategies)


def _parse_profile_spec(game: Game, spec: str) -> MixedProfile:
    if spec == "uniform":
        return game.uniform()
    try:
        raw = json.loads(spec)
    except json.JSONDecodeError as exc:
        raise ValueError(f"profile spec is neither 'uniform' nor valid JSON: {exc}")
    if not isinstance(raw, list) or len(raw) != game.player_count:
        raise ValueError(f"profile spec must list {game.player_count} probability vectors")
    strategies = []
    for j, vec in enumerate(raw):
        if not isinstance(vec, list):
            raise ValueError(f"player {j + 1}: expected a probability vector")
        try:
            probs = tuple(Fraction(str(v)) for v in vec)
            strategies.append(MixedStrategy(probs))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ValueError(f"player {j + 1}: bad probability vector ({exc})")
    return game.validate_profile(MixedProfile(tuple(strategies)))


def _cmd_info(args) -> int:
    game = load_game(args.file)
    print(f"players: {game.player_count}")
    for j, names in enumerate(game.strategy_names):
        print(f"player {j + 1}: {len(names)} strategies ({', '.join(names)})")
    total = equilibria.constant_sum(game)
    if total is None:
        print("constant sum: no")
    else:
        print(f"constant sum: {format_rational(total)}")
    flags = equilibria.own_payoff_independent(game)
    print("own-payoff independent: "
          + " ".join(f"player {j + 1}={'yes' if f else 'no'}" for j, f in enumerate(flags)))
    return 0


def _cmd_enumerate(args, kind: str) -> int:
    game = load_game(args.file)
    finder = equilibria.enumerate_pure_nash if kind == "nash" else equilibria.enumerate_pure_berge
    profiles = finder(game)
    for profile in profiles:
        print(_profile_str(game, profile))
    print(f"count: {len(profiles)}")
    return 0


def _cmd_check(args) -> int:
    game = load_game(args.file)
    profile = _parse_profile_spec(game, args.profile)
    if args.kind == "nash":
        verdict = equilibria.is_nash(game, profile)
        player, deviation = verdict.worst_witness
        witness = (f"player {player + 1} deviating to "
                   f"{game.strategy_names[player][deviation]}")
    else:
        verdict = equilibria.is_berge(game, profile)
        player, complement = verdict.worst_witness
        co_names = [game.strategy_names[j][i]
                    for j, i in zip((j for j in range(game.player_count) if j != player),
                                    complement)]
        witness = f"player {player + 1} with complement ({', '.join(co_names)})"
    print(f"kind: {args.kind}")
    print(f"equilibrium: {'yes' if verdict.is_equilibrium else 'no'}")
    print(f"deficiency: {format_rational(verdict.deficiency)}")
    print(f"worst witness: {witness}")
    return 0 if verdict.is_equilibrium else 3


def _graph_lines(graphs):
    for j, fs in enumerate(graphs):
        faces = " ".join(search.face_str(f) for f in fs.sorted_faces())
        yield f"player {j + 1}: {faces}"


def _cmd_decide_berge(args) -> int:
    game = load_game(args.file)
    cert = search.decide_berge_existence_oi222(game)
    print(f"outcome: {'exists' if cert.exists else 'not-exists'}")
    for line in _graph_lines(cert.per_player_graphs):
        print(line)
    if cert.exists:
        print(f"witness: {_mixed_profile_str(cert.witness)}")
        return 0
    if cert.conflict is not None:
        c = cert.conflict
        print(f"conflict: coordinate {COORD_NAMES[c.coordinate]} is fixed to 0 by "
              f"player {c.player_forcing_zero + 1} and to 1 by "
              f"player {c.player_forcing_one + 1}")
    return 3


def _cmd_search(args) -> int:
    game = load_game(args.file)
    results = search.grid_search_min_deficiency(game, args.resolution, args.top)
    for profile, deficiency in results:
        print(f"deficiency {format_rational(deficiency)} at {_mixed_profile_str(profile)}")
    return 0


def _face_json(face):
    return ["*" if c is None else c for c in face]


def _cmd_bsg(args) -> int:
    game = load_game(args.file)
    graphs = search.best_support_graph_222(game)
    step = Fraction(1, 20)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["player", "p", "q", "r", "face"])
        for j, fs in enumerate(graphs):
            for face in fs.sorted_faces():
                single = search.FaceSet(3, frozenset([face]))
                for point in single.sample_points(step):
                    writer.writerow([j + 1, *(format_rational(x) for x in point),
                                     search.face_str(face)])
    sidecar = (args.out[:-4] if args.out.endswith(".csv") else args.out) + ".json"
    payload = {"players": [{"player": j + 1,
                            "faces": [_face_json(f) for f in fs.sorted_faces()]}
                           for j, fs in enumerate(graphs)]}
    with open(sidecar, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
    print(f"wrote {args.out} and {sidecar}")
    return 0


def _cmd_builtin(args) -> int:
    text = builtin(args.name)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bergegames",
        description="Exact Berge/Nash equilibrium computations on game files.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="game shape, constant sum, own-payoff independence")
    p.add_argument("file")

    p = sub.add_parser("pure-nash", help="enumerate pure Nash equilibria")
    p.add_argument("file")
    p = sub.add_parser("pure-berge", help="enumerate pure Berge equilibria")
    p.add_argument("file")

    p = sub.add_parser("check", help="check a mixed profile exactly")
    p.add_argument("file")
    p.add_argument("--profile", required=True,
                   help="'uniform' or a JSON list of per-player probability vectors "
                        "of rational strings, e.g. '[[\"1/2\",\"1/2\"],...]'")
    p.add_argument("--kind", required=True, choices=("nash", "berge"))

    p = sub.add_parser("decide-berge",
                       help="exact mixed Berge existence for own-payoff-independent "
                            "2x2x2 games")
    p.add_argument("file")

    p = sub.add_parser("search", help="exact Berge-deficiency grid search")
    p.add_argument("file")
    p.add_argument("--resolution", type=int, required=True, metavar="K")
    p.add_argument("--top", type=int, default=10, metavar="T")

    p = sub.add_parser("bsg", help="export best-support graphs as CSV + JSON")
    p.add_argument("file")
    p.add_argument("--out", required=True)

    p = sub.add_parser("builtin", help="write a built-in game document")
    p.add_argument("name", help="one of: " + ", ".join(BUILTIN_NAMES))
    p.add_argument("--out", required=True)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "info": _cmd_info,
        "pure-nash": lambda a: _cmd_enumerate(a, "nash"),
        "pure-berge": lambda a: _cmd_enumerate(a, "berge"),
        "check": _cmd_check,
        "decide-berge": _cmd_decide_berge,
        "search": _cmd_search,
        "bsg": _cmd_bsg,
        "builtin": _cmd_builtin,
    }
    try:
        return handlers[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: no such file: {exc.filename}", file=sys.stderr)
        return 1
    except GameFormatError as exc:
        print(f"error: bad game document: {exc}", file=sys.stderr)
        return 1
    except UnsupportedGameError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():  # console-script shim
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
