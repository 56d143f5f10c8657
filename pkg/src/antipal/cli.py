"""Command line front end and the exhaustive small-morphism scan.

Exit codes: 0 success, 1 parse or usage problem, 2 a consistency check
failed or the scan produced counterexample candidates (loudly reported;
either a bug or a genuine discovery).

The scan enumerates every morphism with image lengths up to a bound,
deduplicated under the relabeling that swaps the two letters everywhere
(a morphism and its relabeled mirror classify identically), classifies
each one, and writes one JSON record per line.  The enumeration order is
lexicographic in the morphism text; work is chunked and merged in order,
so output files are byte-identical for every parallelism level, and an
interrupted scan resumes after the last complete record.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from pathlib import Path

from . import equations
from .errors import AntipalError, ConsistencyError, NoSolution, ParseError
from .language import build_index
from .membership import EvidenceConfig, classify
from .morphisms import (
    Morphism,
    format_morphism,
    is_primitive,
    letter_frequencies,
    parse_morphism,
    prolongable_letters,
)
from .words import complement, parse_word

_SCAN_CHUNK = 8


def _auto_letter(m: Morphism, requested: str | None) -> str:
    letters = prolongable_letters(m)
    if requested is not None:
        if requested not in letters:
            raise ParseError(f"morphism is not prolongable on letter {requested!r}")
        return requested
    if not letters:
        raise ParseError("morphism has no prolongable letter; pick another morphism")
    return sorted(letters)[0]


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "csv":
        raise ParseError("csv output is only available for the factors census")
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------- analyze


def _frequencies_payload(m: Morphism):
    if not is_primitive(m):
        return None
    fv = letter_frequencies(m)
    exact = isinstance(fv.rho0, Fraction)
    rho0, rho1 = fv.as_floats()
    payload = {"rho0": rho0, "rho1": rho1, "exact": exact}
    if exact:
        payload["rho0_fraction"] = str(fv.rho0)
        payload["rho1_fraction"] = str(fv.rho1)
    return payload


def _membership_text(name, mem):
    parts = []
    for label, value in (
        ("direct", mem["direct"]),
        ("conjugate", mem["conjugate"] is not None),
        ("square", mem["square"]),
        ("square-conjugate", mem["square_conjugate"] is not None),
    ):
        parts.append(f"{label}={'yes' if value else 'no'}")
    line = f"  {name:<4} " + " ".join(parts)
    if mem["witness"]:
        line += f"  witness={mem['witness']}"
    return line


def _report_text(report: dict) -> str:
    flags = report["flags"]
    lines = [
        f"morphism: {report['morphism']}",
        "flags: "
        + f"primitive={flags['primitive']} uniform={flags['uniform']} "
        + f"cyclic={flags['cyclic']} periodicity={flags['periodicity']}",
        "classes:",
        _membership_text("P", report["class_p"]),
        _membership_text("EP", report["class_ep"]),
        _membership_text("A1", report["class_a1"]),
        _membership_text("A2", report["class_a2"]),
        f"palindromic: {report['palindromic']['status']} ({report['palindromic']['basis']})",
        f"antipalindromic: {report['antipalindromic']['verdict']} ({report['antipalindromic']['basis']})",
    ]
    ev = report["antipalindromic"]["evidence"]
    if ev:
        lines.append(
            f"evidence: A({ev['prefix_len']})={ev['a_small']}  A({ev['big_len']})={ev['a_big']}"
            f"  [{ev['source']}, seed {ev['letter']}]"
        )
    if report["counterexample_candidate"]:
        lines.append("counterexample_candidate: TRUE")
    return "\n".join(lines)


def cmd_classify(args) -> int:
    m = parse_morphism(args.morphism)
    cfg = EvidenceConfig(args.prefix_len, args.evidence_factor, args.seed_letter)
    report = classify(m, cfg).to_dict()
    _emit(args, report, _report_text(report))
    return 0


def cmd_analyze(args) -> int:
    m = parse_morphism(args.morphism)
    cfg = EvidenceConfig(args.prefix_len, args.evidence_factor, args.seed_letter)
    full = classify(m, cfg)
    report = full.to_dict()
    chain = full.chain
    payload = dict(report)
    payload["chain"] = {
        "cyclic": chain.cyclic,
        "elements": [format_morphism(e) for e in chain.chain],
        "q_full": chain.q_full,
    }
    payload["frequencies"] = _frequencies_payload(m)

    census_payload = None
    try:
        letter = _auto_letter(m, args.seed_letter)
    except ParseError:
        letter = None
    if letter is not None:
        n_max = min(64, args.prefix_len // 4)
        idx = build_index(m, letter, args.prefix_len, n_max)
        rows = idx.census()
        census_payload = {
            "prefix_len": idx.prefix_len,
            "stable_up_to": idx.stable_up_to,
            "factors": sum(r.factor_count for r in rows if r.certified),
            "palindromes": sum(r.palindrome_count for r in rows if r.certified),
            "antipalindromes": sum(r.antipalindrome_count for r in rows if r.certified),
        }
    payload["census"] = census_payload

    text = [_report_text(report)]
    text.append(f"chain: {' | '.join(payload['chain']['elements'])}  q={chain.q_full!r}")
    if payload["frequencies"]:
        f = payload["frequencies"]
        text.append(f"frequencies: rho0={f['rho0']:.6f} rho1={f['rho1']:.6f}")
    if census_payload:
        c = census_payload
        text.append(
            f"census (lengths 1..certified {c['stable_up_to']}): {c['factors']} factors, "
            f"{c['palindromes']} palindromes, {c['antipalindromes']} antipalindromes"
        )
    _emit(args, payload, "\n".join(text))
    return 0


# ------------------------------------------------------- fixedpoint, factors


def cmd_fixedpoint(args) -> int:
    from .morphisms import fixed_point_prefix

    m = parse_morphism(args.morphism)
    letter = _auto_letter(m, args.letter or args.seed_letter)
    word = fixed_point_prefix(m, letter, args.length)
    if args.format == "json":
        print(json.dumps({"morphism": format_morphism(m), "letter": letter, "prefix": word}))
    else:
        print(word)
    return 0


def cmd_factors(args) -> int:
    m = parse_morphism(args.morphism)
    letter = _auto_letter(m, args.seed_letter)
    n_max = args.max_len or min(64, args.prefix_len // 4)
    idx = build_index(m, letter, args.prefix_len, n_max)
    rows = idx.census()
    if args.format == "csv":
        print("length,factor_count,palindrome_count,antipalindrome_count,certified")
        for r in rows:
            print(
                f"{r.length},{r.factor_count},{r.palindrome_count},"
                f"{r.antipalindrome_count},{str(r.certified).lower()}"
            )
    elif args.format == "json":
        print(
            json.dumps(
                {
                    "morphism": format_morphism(m),
                    "stable_up_to": idx.stable_up_to,
                    "census": [r.__dict__ for r in rows],
                }
            )
        )
    else:
        for r in rows:
            mark = "" if r.certified else "  (uncertified)"
            line = (
                f"n={r.length}: {r.factor_count} factors, {r.palindrome_count} palindromes, "
                f"{r.antipalindrome_count} antipalindromes{mark}"
            )
            if args.list and r.length <= 8:
                line += "  " + " ".join(sorted(idx.factors(r.length)))
            print(line)
    return 0


def cmd_bispecials(args) -> int:
    from .language import bispecial_orbit

    m = parse_morphism(args.morphism)
    letter = _auto_letter(m, args.seed_letter)
    n_max = args.max_len or min(64, args.prefix_len // 4)
    idx = build_index(m, letter, args.prefix_len, n_max)
    if args.orbit is not None:
        orbit = bispecial_orbit(m, parse_word(args.orbit), args.steps)
        payload = {"seed": orbit.seed, "steps": list(orbit.steps)}
        _emit(args, payload, "\n".join([orbit.seed or "(empty)"] + list(orbit.steps)))
        return 0
    bs = idx.bispecials()
    if args.format == "json":
        print(json.dumps({"stable_up_to": idx.stable_up_to, "bispecials": list(bs)}))
    else:
        for w in bs:
            print(w or "(empty)")
    return 0


# ------------------------------------------------------------------ equation


def cmd_equation(args) -> int:
    kind = args.kind
    ws = [parse_word(w) for w in args.words]

    def need(n):
        if len(ws) != n:
            raise ParseError(f"equation {kind} expects {n} word(s), got {len(ws)}")

    try:
        if kind == "commutation":
            need(2)
            s = equations.solve_commutation(*ws)
            payload = {"ok": True, "u": s.u, "i": s.i, "j": s.j}
            text = f"u={s.u} i={s.i} j={s.j}"
        elif kind == "transfer":
            need(3)
            s = equations.solve_transfer(*ws)
            payload = {"ok": True, "u": s.u, "v": s.v, "i": s.i}
            text = f"u={s.u} v={s.v} i={s.i}"
        elif kind == "pal-antipal":
            need(2)
            s = equations.solve_pal_antipal(*ws)
            payload = {"ok": True, "u": s.u, "i": s.i, "j": s.j}
            text = f"u={s.u} i={s.i} j={s.j}"
        elif kind == "fine-wilf":
            need(3)
            z = equations.fine_wilf_root(*ws)
            payload = {"ok": True, "z": z}
            text = f"z={z}"
        elif kind == "two-palindromes":
            need(1)
            splits = equations.decompose_two_palindromes(*ws)
            payload = {"ok": True, "splits": [list(s) for s in splits]}
            text = "\n".join(f"{p}|{q}" for p, q in splits) or "(no split)"
        elif kind == "two-antipalindromes":
            need(1)
            splits = equations.decompose_two_antipalindromes(*ws)
            payload = {"ok": True, "splits": [list(s) for s in splits]}
            text = "\n".join(f"{p}|{q}" for p, q in splits) or "(no split)"
        elif kind == "normal-form":
            need(1)
            c, k = equations.antipal_periodic_normal_form(*ws)
            payload = {"ok": True, "c": c, "k": k}
            text = f"c={c} k={k}"
        else:
            raise ParseError(f"unknown equation kind {kind!r}")
    except NoSolution as exc:
        payload = {"ok": False, "error": type(exc).__name__, "detail": str(exc)}
        text = f"no solution: {type(exc).__name__}: {exc}"
    _emit(args, payload, text)
    return 0


# ---------------------------------------------------------------------- scan


def _mirror(m: Morphism) -> Morphism:
    """Relabel both letters: 0 and 1 swap everywhere."""
    return Morphism(complement(m.image1), complement(m.image0))


def scan_space(max_image_len: int) -> list[str]:
    """Canonical morphism texts, lexicographically sorted.

    Of each mirror pair only the lexicographically smaller text survives.
    """
    images = [
        "".join(bits)
        for n in range(1, max_image_len + 1)
        for bits in product("01", repeat=n)
    ]
    texts = []
    for i0 in images:
        for i1 in images:
            m = Morphism(i0, i1)
            t = format_morphism(m)
            if t <= format_morphism(_mirror(m)):
                texts.append(t)
    texts.sort()
    return texts


def _classify_chunk(chunk: list[str], prefix_len: int, factor: int) -> list[str]:
    lines = []
    for text in chunk:
        report = classify(parse_morphism(text), EvidenceConfig(prefix_len, factor))
        lines.append(json.dumps(report.to_dict(), separators=(",", ":")))
    return lines


def _valid_existing_lines(path: Path, space: list[str]) -> list[str]:
    """Complete records already on disk, in order; a damaged tail is dropped."""
    lines = []
    raw = path.read_text().split("\n")
    for i, line in enumerate(raw):
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError:
            break
        if len(lines) >= len(space) or record.get("morphism") != space[len(lines)]:
            break
        lines.append(line)
    return lines


def cmd_scan(args) -> int:
    if args.max_image_len < 1:
        raise ParseError("--max-image-len must be at least 1")
    space = scan_space(args.max_image_len)
    out = Path(args.out)

    existing: list[str] = []
    if out.exists() and not args.overwrite:
        existing = _valid_existing_lines(out, space)
    todo = space[len(existing) :]

    chunks = [todo[i : i + _SCAN_CHUNK] for i in range(0, len(todo), _SCAN_CHUNK)]
    mode = "w"
    prelude = existing
    with out.open(mode) as fh:
        for line in prelude:
            fh.write(line + "\n")
        if args.parallelism > 1 and chunks:
            with ProcessPoolExecutor(max_workers=args.parallelism) as pool:
                for lines in pool.map(
                    _classify_chunk,
                    chunks,
                    [args.prefix_len] * len(chunks),
                    [args.evidence_factor] * len(chunks),
                ):
                    fh.write("\n".join(lines) + "\n")
        else:
            for chunk in chunks:
                fh.write("\n".join(_classify_chunk(chunk, args.prefix_len, args.evidence_factor)) + "\n")

    verdicts: dict[str, int] = {}
    candidates = []
    with out.open() as fh:
        for line in fh:
            record = json.loads(line)
            v = record["antipalindromic"]["verdict"]
            verdicts[v] = verdicts.get(v, 0) + 1
            if record["counterexample_candidate"]:
                candidates.append(record["morphism"])
    summary = {
        "records": sum(verdicts.values()),
        "resumed": len(existing),
        "verdicts": dict(sorted(verdicts.items())),
        "counterexample_candidates": candidates,
        "out": str(out),
    }
    if args.format == "json":
        print(json.dumps(summary, indent=2))
    else:
        print(f"records: {summary['records']} (resumed {summary['resumed']}) -> {out}")
        for v, n in summary["verdicts"].items():
            print(f"  {v}: {n}")
        print(f"counterexample candidates: {len(candidates)}")
    if candidates:
        print(
            "CONSISTENCY ALERT: counterexample candidate(s) found: "
            + ", ".join(candidates),
            file=sys.stderr,
        )
        return 2
    return 0


# ---------------------------------------------------------------------- main


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--prefix-len", type=int, default=25_000)
    common.add_argument("--seed-letter", choices=("0", "1"), default=None)

    parser = argparse.ArgumentParser(
        prog="antipal",
        description="Analyze binary morphisms and the antipalindromic structure of their fixed points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report: classes, chain, frequencies, census")
    p.add_argument("morphism")
    p.add_argument("--evidence-factor", type=int, default=4)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", parents=[common], help="classification report only")
    p.add_argument("morphism")
    p.add_argument("--evidence-factor", type=int, default=4)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fixedpoint", parents=[common], help="print a fixed-point prefix")
    p.add_argument("morphism")
    p.add_argument("--letter", choices=("0", "1"), default=None)
    p.add_argument("--length", type=int, default=64)
    p.set_defaults(func=cmd_fixedpoint)

    p = sub.add_parser("factors", parents=[common], help="per-length factor census of a fixed-point prefix")
    p.add_argument("morphism")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--list", action="store_true", help="also list factors of length <= 8")
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("bispecials", parents=[common], help="bispecial factors, or a successor orbit")
    p.add_argument("morphism")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--orbit", default=None, help="seed word for the successor orbit")
    p.add_argument("--steps", type=int, default=3)
    p.set_defaults(func=cmd_bispecials)

    p = sub.add_parser("equation", parents=[common], help="solve one of the supported word equations")
    p.add_argument(
        "kind",
        choices=(
            "commutation",
            "transfer",
            "pal-antipal",
            "fine-wilf",
            "two-palindromes",
            "two-antipalindromes",
            "normal-form",
        ),
    )
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_equation)

    p = sub.add_parser("scan", parents=[common], help="classify every small morphism, hunting counterexamples")
    p.add_argument("--max-image-len", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--evidence-factor", type=int, default=4)
    p.add_argument("--overwrite", action="store_true")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"CONSISTENCY ALERT: {exc}", file=sys.stderr)
        return 2
    except AntipalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
