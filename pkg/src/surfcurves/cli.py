"""Command line front end.

    surfcurves self SURFACE WORD [--json]
    surfcurves pair SURFACE WORD1 WORD2 [--json]
    surfcurves points SURFACE WORD1 WORD2 --points FILE [--json]
    surfcurves oracle-check SURFACE [--max-len N]

Exit status: 0 success, 1 oracle mismatch, 2 parse error, 3 surface not
admissible for the request, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cosets, geodesics, nielsen, oracle
from .surfaces import AdmissibilityError, SurfaceError, build_surface
from .words import WordError, check_word, cyclic_classes

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_ADMISSIBILITY, EXIT_INTERNAL = 0, 1, 2, 3, 4


class PointsFileError(ValueError):
    pass


class NotAdmissible(ValueError):
    pass


def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _value(v):
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "-"
    return str(v)


def render_text(doc: dict) -> str:
    rows = [("surface", doc["query"]["surface"]), ("words", " ".join(doc["query"]["words"]) or "-")]
    for key in sorted(doc):
        if key in ("query", "inventory"):
            continue
        rows.append((key, _value(doc[key])))
    rows += [("inventory." + k, _value(v)) for k, v in sorted(doc["inventory"].items())]
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def self_document(surface: str, word: str) -> dict:
    s = build_surface(surface)
    r = nielsen.self_report(s, check_word(word)).as_dict()
    return {
        "query": {"surface": surface, "words": [word]},
        "mi": r["MI"],
        "ni": r["NI"],
        "ni_star": r["NIstar"],
        "mi_geom": r["MI_geom"],
        "ni_geom": r["NI_geom"],
        "ni_star_geom": r["NIstar_geom"],
        "ri": r["RI"],
        "ri_geom": r["RI_geom"],
        "wecken": r["wecken"],
        "wecken_geom": r["wecken_geom"],
        "k_prime": r["k_prime"],
        "inventory": r["inventory"],
        "branch": r["branch"],
    }


def pair_document(surface: str, w1: str, w2: str) -> dict:
    s = build_surface(surface)
    r = nielsen.pair_report(s, check_word(w1), check_word(w2)).as_dict()
    return {
        "query": {"surface": surface, "words": [w1, w2]},
        "mi": r["MI"],
        "ni": r["NI"],
        "ni_star": r["NIstar"],
        "ri": r["RI"],
        "wecken": r["wecken"],
        "special_pair": r["special_pair"],
        "inventory": r["inventory"],
        "branch": r["branch"],
    }


def _sign(text: str, key: str, lineno: int) -> int:
    if text.strip() in ("1", "+1"):
        return 1
    if text.strip() == "-1":
        return -1
    raise PointsFileError(f"line {lineno}: {key} must be +1 or -1, got {text.strip()!r}")


def parse_points(text: str) -> list[cosets.PointDatum]:
    """One record per line: ``g=<word>[;eta=..;eta1=..;eta2=..;case=..]``.

    Blank lines and lines starting with ``#`` are skipped.  Ordering data is
    all or nothing, so the cyclic case is never guessed.
    """
    points = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = {}
        for part in line.split(";"):
            if "=" not in part:
                raise PointsFileError(f"line {lineno}: expected key=value, got {part.strip()!r}")
            key, val = (x.strip() for x in part.split("=", 1))
            if key not in ("g", "eta", "eta1", "eta2", "case") or key in fields:
                raise PointsFileError(f"line {lineno}: unexpected key {key!r}")
            fields[key] = val
        if "g" not in fields:
            raise PointsFileError(f"line {lineno}: missing g=")
        try:
            word = check_word(fields["g"])
        except WordError as e:
            raise PointsFileError(f"line {lineno}: {e}") from None
        order_keys = {"eta", "eta1", "eta2", "case"} & fields.keys()
        ordering = None
        if order_keys:
            missing = sorted({"eta", "eta1", "eta2", "case"} - order_keys)
            if missing:
                raise PointsFileError(f"line {lineno}: ordering data needs {', '.join(missing)}")
            if fields["case"] not in cosets.CASES:
                raise PointsFileError(f"line {lineno}: unknown case {fields['case']!r}")
            ordering = cosets.PointOrdering(
                _sign(fields["eta"], "eta", lineno),
                _sign(fields["eta1"], "eta1", lineno),
                _sign(fields["eta2"], "eta2", lineno),
                fields["case"],
            )
        points.append(cosets.PointDatum(word, ordering))
    return points


def points_table(surface: str, w1: str, w2: str, points: list[cosets.PointDatum]) -> list[dict]:
    s = build_surface(surface)
    w1, w2 = check_word(w1), check_word(w2)
    same = w1 == w2
    reps: list[cosets.PointDatum] = []
    rows = []
    for d in points:
        label = next(
            (i + 1 for i, r in enumerate(reps) if cosets.nielsen_equivalent(s, w1, w2, d, r)), None
        )
        if label is None:
            reps.append(d)
            label = len(reps)
        row = {
            "g": d.connecting_word,
            "class": label,
            "special": cosets.is_special_point(s, w1, w2, d),
            "self_cancelling": cosets.is_self_cancelling(s, w1, w2, d),
        }
        if same:
            row["trivial"] = cosets.is_trivial_point(s, w1, d)
            row["geom_special"] = cosets.is_geometrically_special(s, w1, d)
            row["geom_self_cancelling"] = cosets.is_geometrically_self_cancelling(s, w1, d)
            if d.ordering is not None:
                strict = cosets.strict_predicates(s, w1, d, d)
                row["special*"] = strict.special
                row["geom_special*"] = strict.geom_special
                row["self_cancelling*"] = strict.self_cancelling
                row["geom_self_cancelling*"] = strict.geom_self_cancelling
        rows.append(row)
    return rows


def render_points(rows: list[dict]) -> str:
    cols = []
    for row in rows:
        cols += [k for k in row if k not in cols]
    table = [cols] + [[_value(row.get(c, "")) if c != "g" else (row[c] or "1") for c in cols] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(cols))]
    return "".join("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n" for r in table)


def oracle_check(surface: str, max_len: int, out=sys.stdout) -> bool:
    s = build_surface(surface)
    if not s.is_fatgraph or not s.orientable or s.rank < 1:
        raise NotAdmissible(f"oracle requires orientable ribbon-graph surface, got {surface!r}")
    words = cyclic_classes(s.generators, max_len, primitive_only=True)
    bad = 0
    for c in words:
        want = geodesics.self_intersection_geom(s, c)
        got = oracle.stable_self(s, c)
        if want != got:
            bad += 1
            print(f"mismatch {c}: counter {want}, oracle {got}", file=out)
    status = "agree" if not bad else "FAIL"
    print(f"{surface}: {len(words)} primitive classes up to length {max_len}, "
          f"{bad} mismatches: {status}", file=out)
    return bad == 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfcurves", description="Intersection invariants of curves on surfaces.")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("self", help="self-intersection report for one curve")
    a.add_argument("surface")
    a.add_argument("word")
    a.add_argument("--json", action="store_true")
    b = sub.add_parser("pair", help="intersection report for two curves")
    b.add_argument("surface")
    b.add_argument("word1")
    b.add_argument("word2")
    b.add_argument("--json", action="store_true")
    c = sub.add_parser("points", help="classify user-supplied intersection points")
    c.add_argument("surface")
    c.add_argument("word1")
    c.add_argument("word2")
    c.add_argument("--points", required=True, metavar="FILE")
    c.add_argument("--json", action="store_true")
    d = sub.add_parser("oracle-check", help="compare the counter with the hyperbolic oracle")
    d.add_argument("surface")
    d.add_argument("--max-len", type=int, default=6)
    return p


def _run(args, out) -> int:
    if args.command == "self":
        doc = self_document(args.surface, args.word)
    elif args.command == "pair":
        doc = pair_document(args.surface, args.word1, args.word2)
    elif args.command == "points":
        with open(args.points, encoding="utf-8") as fh:
            points = parse_points(fh.read())
        rows = points_table(args.surface, args.word1, args.word2, points)
        out.write(render_json({"points": rows}) if args.json else render_points(rows))
        return EXIT_OK
    else:
        return EXIT_OK if oracle_check(args.surface, args.max_len, out) else EXIT_MISMATCH
    out.write(render_json(doc) if args.json else render_text(doc))
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _run(args, out)
    except (SurfaceError, WordError, PointsFileError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (AdmissibilityError, NotAdmissible) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ADMISSIBILITY
    except (AssertionError, oracle.OracleError, geodesics.GeodesicError, cosets.CosetError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
