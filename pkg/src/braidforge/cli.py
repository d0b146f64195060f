"""Command-line frontend.

Exit codes: 0 success, 1 domain error, 2 resource cap exceeded, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import replace

from . import render as render_mod
from .bricks import build_bricks
from .config import Config, apply_overrides, config_from_env
from .errors import BraidForgeError, ResourceCapError
from .garside import (
    conjugacy_move_sequence_detailed,
    are_conjugate,
    contains_half_twist,
    normal_form,
    summit,
)
from .invariants import abelianization, hom_count, hom_count_up_to_conjugacy
from .isomaps import check_map, maps_along_moves
from .linking import build_graph
from .presentations import presentation_of, serialize
from .words import (
    BraidWord,
    MoveKind,
    WordMove,
    apply_move,
    enumerate_moves,
    parse_word,
    replay,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


_MOVE_TOKENS = {k.value: k for k in MoveKind}


def _parse_move_script(text: str) -> list[tuple[MoveKind, int | None]]:
    moves: list[tuple[MoveKind, int | None]] = []
    for token in text.replace(";", ",").split(","):
        token = token.strip()
        if not token:
            continue
        name, _, pos = token.partition("@")
        if name not in _MOVE_TOKENS:
            raise UsageError(f"unknown move token {name!r}")
        moves.append((_MOVE_TOKENS[name], int(pos) if pos else None))
    return moves


def _resolve_moves(
    w: BraidWord, script: list[tuple[MoveKind, int | None]]
) -> list[WordMove]:
    out = []
    cur = w
    for kind, pos in script:
        if pos is None:
            if kind is MoveKind.ELEM_CONJ_LEFT:
                pos = 1
            elif kind in (MoveKind.ELEM_CONJ_RIGHT, MoveKind.MARKOV_DESTAB):
                pos = len(cur.letters)
            elif kind is MoveKind.MARKOV_STAB:
                pos = len(cur.letters) + 1
            else:
                raise UsageError(f"move {kind.value} needs a position: {kind.value}@p")
        m = WordMove(kind, pos)
        out.append(m)
        cur = apply_move(cur, m)
    return out


def _moves_json(moves) -> list[dict]:
    return [{"kind": m.kind.value, "position": m.position} for m in moves]


def _word_json(w: BraidWord) -> dict:
    return {"strands": w.strands, "letters": list(w.letters)}


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strands", type=int, default=None, help="explicit strand count")
    p.add_argument("--format", default=None, help="output format")
    p.add_argument("--sign-convention", choices=["left-positive", "right-positive"])
    p.add_argument("--targets", default=None, help="comma list of finite targets")
    p.add_argument("--tables", default=None, help="comma list of table files")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--caps.generators", dest="caps_generators", default=None)
    p.add_argument("--caps.summit-set", dest="caps_summit", type=int, default=None)
    p.add_argument("--caps.cycling", dest="caps_cycling", type=int, default=None)
    p.add_argument("--caps.word-search", dest="caps_word_search", type=int, default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="braidforge")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, nwords: int, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        for i in range(nwords):
            p.add_argument(f"word{i + 1}" if nwords > 1 else "word")
        _common_flags(p)
        return p

    add("parse", 1)
    add("bricks", 1)
    add("graph", 1)
    add("present", 1)
    add("nf", 1)
    p = add("conj", 2)
    p = add("summit", 1)
    p.add_argument("--full", action="store_true", help="list summit set members")
    add("halftwist", 1)
    add("moveseq", 2)
    p = add("invariants", 1)
    p.add_argument("--up-to-conjugacy", action="store_true")
    p = add("isocheck", 2)
    p.add_argument("--moves", default=None, help="move script, e.g. 'conjR, braid@2'")
    p = add("verify", 1)
    p.add_argument("--moves", type=int, default=200, dest="n_moves")
    p = add("render", 1)
    p.add_argument("--what", choices=["bricks", "graph", "both"], default="both")
    p.add_argument("--svg", action="store_true")
    p.add_argument("--dot", action="store_true")
    return parser


def _config_from_args(args: argparse.Namespace) -> Config:
    cfg = config_from_env()
    values: dict[str, str] = {}
    if args.sign_convention:
        values["sign_convention"] = args.sign_convention
    if args.targets:
        values["targets"] = args.targets
    if args.caps_generators:
        values["caps.generators"] = args.caps_generators
    if args.caps_summit is not None:
        values["caps.summit_set"] = str(args.caps_summit)
    if args.caps_cycling is not None:
        values["caps.cycling"] = str(args.caps_cycling)
    if args.caps_word_search is not None:
        values["caps.word_search"] = str(args.caps_word_search)
    if args.tables:
        values["table_files"] = args.tables
    cfg = apply_overrides(cfg, values)
    if args.format:
        cfg = replace(cfg, format=args.format)
    return cfg


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _cmd_parse(args, cfg: Config) -> int:
    w = parse_word(args.word, args.strands)
    if cfg.format == "plain":
        _emit(str(w))
    else:
        _emit(w.to_json())
    return 0


def _cmd_bricks(args, cfg: Config) -> int:
    w = parse_word(args.word, args.strands)
    d = build_bricks(w)
    if cfg.format == "plain":
        lines = [f"{b.id}: column {b.column}, positions {b.lo}..{b.hi}" for b in d.bricks]
        _emit("\n".join(lines) if lines else "(no bricks)")
    else:
        _emit(d.to_json())
    return 0


def _cmd_graph(args, cfg: Config) -> int:
    w = parse_word(args.word, args.strands)
    g = build_graph(build_bricks(w), cfg.sign_convention)
    if cfg.format == "dot":
        _emit(render_mod.render_graph_dot(g))
    elif cfg.format == "svg":
        _emit(render_mod.render_graph_svg(g))
    else:
        _emit(g.to_json())
    return 0


def _cmd_present(args, cfg: Config) -> int:
    w = parse_word(args.word, args.strands)
    p = presentation_of(build_graph(build_bricks(w), cfg.sign_convention))
    fmt = cfg.format if cfg.format in ("plain", "gap-style", "json") else "json"
    _emit(serialize(p, fmt))
    return 0


def _cmd_nf(args, cfg: Config) -> int:
    w = parse_word(args.word, args.strands)
    nf = normal_form(w)
    if cfg.format == "plain":
        factors = " ".join(str([x + 1 for x in p]) for p in nf.factors)
        _emit(f"delta^{nf.delta_power} * [{factors}]")
    else:
        _emit(nf.to_json())
    return 0


def _cmd_conj(args, cfg: Config) -> int:
    a = parse_word(args.word1, args.strands)
    b = parse_word(args.word2, args.strands)
    if args.strands is None:
        n = max(a.strands, b.strands)
        a, b = BraidWord(n, a.letters), BraidWord(n, b.letters)
    result = are_conjugate(a, b, cfg.garside_caps)
    _emit(
        json.dumps(
            {"first": _word_json(a), "second": _word_json(b), "conjugate": result}
        )
    )
    return 0


def _cmd_summit(args, cfg: Config) -> int:
    w = parse_word(args.word, args.strands)
    data = summit(normal_form(w), cfg.garside_caps)
    payload = {
        "word": _word_json(w),
        "summit_power": data.summit_power,
        "size": len(data.summit_set),
    }
    if args.full:
        members = sorted(data.summit_set, key=lambda nf: nf.key())
        payload["members"] = [
            {"k": nf.delta_power, "factors": [[x + 1 for x in p] for p in nf.factors]}
            for nf in members
        ]
    _emit(json.dumps(payload))
    return 0


def _cmd_halftwist(args, cfg: Config) -> int:
    w = parse_word(args.word, args.strands)
    _emit(
        json.dumps(
            {
                "word": _word_json(w),
                "contains_half_twist": contains_half_twist(w, cfg.garside_caps),
            }
        )
    )
    return 0


def _cmd_moveseq(args, cfg: Config) -> int:
    a = parse_word(args.word1, args.strands)
    b = parse_word(args.word2, args.strands)
    if args.strands is None:
        n = max(a.strands, b.strands)
        a, b = BraidWord(n, a.letters), BraidWord(n, b.letters)
    result = conjugacy_move_sequence_detailed(a, b, cfg.garside_caps)
    ok = replay(a, list(result.moves)) == b
    _emit(
        json.dumps(
            {
                "source": _word_json(a),
                "target": _word_json(b),
                "method": result.method,
                "moves": _moves_json(result.moves),
                "replay_ok": ok,
            }
        )
    )
    return 0


def _cmd_invariants(args, cfg: Config) -> int:
    w = parse_word(args.word, args.strands)
    p = presentation_of(build_graph(build_bricks(w), cfg.sign_convention))
    ab = abelianization(p)
    counts: dict[str, int] = {}
    conj_counts: dict[str, int] = {}
    skipped = []
    for t in cfg.resolve_targets():
        try:
            counts[t.name] = hom_count(p, t, cfg.generator_caps).count
            if args.up_to_conjugacy:
                conj_counts[t.name] = hom_count_up_to_conjugacy(
                    p, t, cfg.generator_caps
                ).count
        except ResourceCapError:
            skipped.append(t.name)
    payload = {
        "word": _word_json(w),
        "abelianization": list(ab.invariant_factors),
        "rank": ab.rank,
        "hom_counts": counts,
        "skipped_targets": skipped,
    }
    if args.up_to_conjugacy:
        payload["hom_counts_up_to_conjugacy"] = conj_counts
    _emit(json.dumps(payload))
    return 0


def _cmd_isocheck(args, cfg: Config) -> int:
    a = parse_word(args.word1, args.strands)
    b = parse_word(args.word2, args.strands)
    if args.strands is None:
        n = max(a.strands, b.strands)
        a, b = BraidWord(n, a.letters), BraidWord(n, b.letters)
    if args.moves:
        moves = _resolve_moves(a, _parse_move_script(args.moves))
        method = "given"
    else:
        result = conjugacy_move_sequence_detailed(a, b, cfg.garside_caps)
        moves = list(result.moves)
        method = result.method
    if replay(a, moves) != b:
        raise BraidForgeError("move script does not transform the first word into the second")
    gmap = maps_along_moves(a, moves)
    report = check_map(gmap, cfg.resolve_targets(), cfg.generator_caps)
    _emit(
        json.dumps(
            {
                "source": _word_json(a),
                "target": _word_json(b),
                "method": method,
                "moves": _moves_json(moves),
                "images": [list(w) for w in gmap.images],
                "inverse_images": [list(w) for w in gmap.inverse_images],
                "report": report.to_dict(),
            }
        )
    )
    return 0 if report.consistent else 1


def _graph_signature(w: BraidWord, cfg: Config):
    return build_graph(build_bricks(w), cfg.sign_convention).combinatorial_signature()


def _cmd_verify(args, cfg: Config) -> int:
    w = parse_word(args.word, args.strands)
    rng = random.Random(args.seed)
    targets = cfg.resolve_targets()

    def measure(word: BraidWord):
        p = presentation_of(build_graph(build_bricks(word), cfg.sign_convention))
        counts = {}
        for t in targets:
            try:
                counts[t.name] = hom_count(p, t, cfg.generator_caps).count
            except ResourceCapError:
                counts[t.name] = None
        return abelianization(p).invariant_factors, counts

    base_ab, base_counts = measure(w)
    failures = []
    cur = w
    applied = 0
    for step in range(args.n_moves):
        moves = enumerate_moves(cur)
        if not moves:
            break
        m = rng.choice(moves)
        nxt = apply_move(cur, m)
        applied += 1
        ab, counts = measure(nxt)
        if ab != base_ab:
            failures.append(
                {
                    "step": step,
                    "move": {"kind": m.kind.value, "position": m.position},
                    "check": "abelianization",
                    "detail": f"{base_ab} became {ab}",
                }
            )
        for name, count in counts.items():
            if count is not None and base_counts.get(name) is not None:
                if count != base_counts[name]:
                    failures.append(
                        {
                            "step": step,
                            "move": {"kind": m.kind.value, "position": m.position},
                            "check": f"hom_count:{name}",
                            "detail": f"{base_counts[name]} became {count}",
                        }
                    )
        if m.kind in (MoveKind.FAR_COMM, MoveKind.MARKOV_STAB, MoveKind.MARKOV_DESTAB):
            if _graph_signature(cur, cfg) != _graph_signature(nxt, cfg):
                failures.append(
                    {
                        "step": step,
                        "move": {"kind": m.kind.value, "position": m.position},
                        "check": "graph-signature",
                        "detail": "linking graph changed under a neutral move",
                    }
                )
        cur = nxt
    payload = {
        "word": _word_json(w),
        "seed": args.seed,
        "requested_moves": args.n_moves,
        "applied_moves": applied,
        "stable": not failures,
        "targets": [t.name for t in targets],
        "failures": failures,
    }
    _emit(json.dumps(payload))
    return 0 if not failures else 1


def _cmd_render(args, cfg: Config) -> int:
    w = parse_word(args.word, args.strands)
    g = build_graph(build_bricks(w), cfg.sign_convention)
    fmt = "svg"
    if args.dot or cfg.format == "dot":
        fmt = "dot"
    if fmt == "dot":
        _emit(render_mod.render_graph_dot(g))
        return 0
    if args.what == "bricks":
        _emit(render_mod.render_bricks_svg(g.diagram))
    elif args.what == "graph":
        _emit(render_mod.render_graph_svg(g))
    else:
        _emit(render_mod.render_both_svg(g))
    return 0


_COMMANDS = {
    "parse": _cmd_parse,
    "bricks": _cmd_bricks,
    "graph": _cmd_graph,
    "present": _cmd_present,
    "nf": _cmd_nf,
    "conj": _cmd_conj,
    "summit": _cmd_summit,
    "halftwist": _cmd_halftwist,
    "moveseq": _cmd_moveseq,
    "invariants": _cmd_invariants,
    "isocheck": _cmd_isocheck,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config_from_args(args)
        return _COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    except ResourceCapError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 2
    except (BraidForgeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
