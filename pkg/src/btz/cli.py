"""Command line front end.

Exit codes: 0 for a member or a passing check, 1 for a non-member or a
violation, 2 for invalid input or any other error.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from btz import complex as cx
from btz import render
from btz.core import (
    BTZError,
    InvalidArgument,
    InvalidHorizon,
    InvalidRank,
    Vertex,
    as_point,
    critical_index,
    d_diagram,
    d_sequence,
    is_weyl,
    member_W_dk,
)

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2

DEFAULTS = {
    "d": "inf",
    "kind": "W",
    "N": 5,
    "margin": 1,
    "seed": 0,
    "format": None,
    "length": 16,
}


class Output:
    def __init__(self, as_json: bool, quiet: bool) -> None:
        self.as_json = as_json
        self.quiet = quiet

    def emit(self, payload: dict, text: str) -> None:
        if self.quiet:
            return
        if self.as_json:
            print(json.dumps(payload, sort_keys=True))
        else:
            print(text)


# ---------------------------------------------------------------------------
# value parsing


def parse_horizon(text) -> Optional[int]:
    if text is None or str(text).lower() in ("inf", "infinity", "oo"):
        return None
    try:
        d = int(text)
    except ValueError:
        raise InvalidHorizon(f"horizon must be a positive integer or 'inf', got {text!r}") from None
    if d < 1:
        raise InvalidHorizon(f"horizon must be a positive integer or 'inf', got {text!r}")
    return d


def parse_point(text: str, r: Optional[int]):
    try:
        coords = [Fraction(t.strip()) for t in str(text).split(",") if t.strip()]
    except ValueError:
        raise InvalidArgument(f"cannot parse coordinates {text!r}") from None
    if len(coords) < 2:
        raise InvalidRank(f"a point needs at least 2 coordinates, got {text!r}")
    if r is not None and len(coords) != r:
        raise InvalidRank(f"--r {r} does not match {len(coords)} coordinates")
    if all(c.denominator == 1 for c in coords):
        return as_point([int(c) for c in coords])
    return as_point(coords)


def parse_weights(text, r: int, d: Optional[int]) -> list[int]:
    """``6``, ``4,5,6``, ``1-5`` or ``all`` (every ``1 <= k < rd``)."""
    s = str(text).strip()
    if s == "all":
        if d is None:
            raise InvalidArgument("k=all needs a finite horizon")
        return list(range(1, r * d))
    out = []
    for part in s.split(","):
        part = part.strip()
        try:
            if "-" in part[1:]:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise InvalidArgument(f"cannot parse weight list {text!r}") from None
    return out


def single_weight(text, r: int, d: Optional[int]) -> int:
    ks = parse_weights(text, r, d)
    if len(ks) != 1:
        raise InvalidArgument(f"expected a single weight, got {text!r}")
    return ks[0]


def load_flat_config(path: str) -> dict:
    """``key = value`` lines without sections; ``#`` starts a comment."""
    parser = configparser.ConfigParser()
    parser.optionxform = str
    text = Path(path).read_text()
    parser.read_string("[run]\n" + text)
    return dict(parser["run"])


# ---------------------------------------------------------------------------
# commands


def cmd_member(args, out: Output) -> int:
    x = parse_point(args.n, args.r)
    d = parse_horizon(args.d)
    k = single_weight(args.k, x.r, d)
    ok = member_W_dk(x, d, k)
    eff = d if d is not None else k + 1
    seq = d_sequence(x, eff)
    vk, vk1 = seq.v(k), seq.v(k + 1)
    rho = None
    if ok and isinstance(x, Vertex) and is_weyl(x):
        rho = critical_index(x, d, k)
    dtxt = "inf" if d is None else str(d)
    payload = {
        "point": [str(c) for c in x.coords],
        "d": dtxt,
        "k": k,
        "member": ok,
        "v_k": str(vk),
        "v_k1": str(vk1),
        "rho": rho,
    }
    verdict = "member" if ok else "non-member"
    text = f"{verdict}: {x} at d={dtxt}, k={k}; v_k={vk}, v_(k+1)={vk1}"
    if rho is not None:
        text += f", rho={rho}"
    out.emit(payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def diagram_table(n: Vertex, d: Optional[int], length: int, k: Optional[int]) -> str:
    diag = d_diagram(n, d, length=None if d is not None else length)
    number = {b: i + 1 for i, b in enumerate(diag.boxes)}
    lo = min(b.value for b in diag.boxes)
    hi = max(b.value for b in diag.boxes)
    width = max(3, len(str(len(diag.boxes))) + 2)
    head = "i/v".rjust(4) + "".join(str(v).rjust(width) for v in range(lo, hi + 1))
    rows = [head]
    for i in range(1, n.r + 1):
        cells = []
        for v in range(lo, hi + 1):
            num = number.get((i, v))
            if num is None:
                cells.append(".".rjust(width))
            elif k is not None and num in (k, k + 1):
                cells.append(f"[{num}]".rjust(width))
            else:
                cells.append(str(num).rjust(width))
        rows.append(str(i).rjust(4) + "".join(cells))
    return "\n".join(rows)


def cmd_diagram(args, out: Output) -> int:
    n = parse_point(args.n, args.r)
    if not isinstance(n, Vertex):
        raise InvalidArgument("diagrams need integer coordinates")
    d = parse_horizon(args.d)
    k = None if args.k is None else single_weight(args.k, n.r, d)
    length = int(args.length)
    diag = d_diagram(n, d, length=None if d is not None else length)
    payload = {
        "vertex": list(n.coords),
        "d": "inf" if d is None else d,
        "boxes": [[b.index, b.value] for b in diag.boxes],
        "highlight": None if k is None else [k, k + 1],
    }
    out.emit(payload, diagram_table(n, d, length, k))
    return EXIT_OK


def _window_args(args):
    r = int(args.r)
    d = parse_horizon(args.d)
    return r, d, int(args.N), args.kind, int(args.margin)


def cmd_build(args, out: Output) -> int:
    r, d, N, kind, margin = _window_args(args)
    k = single_weight(args.k, r, d)
    cw = cx.build_complex(r, d, k, N, kind, margin)
    fmt = args.format or ("dot" if args.output and args.output.endswith(".dot") else "json")
    data = render.export_dot(cw) if fmt == "dot" else render.export_json(cw)
    if args.output:
        Path(args.output).write_bytes(data)
    elif not out.quiet and not out.as_json:
        sys.stdout.write(data.decode())
    payload = {
        "r": r,
        "d": "inf" if d is None else d,
        "k": k,
        "kind": kind,
        "N": N,
        "vertices": len(cw.vertices),
        "maximal_simplices": len(cw.maximal_simplices),
        "output": args.output,
    }
    if args.output or out.as_json:
        out.emit(payload, f"wrote {len(cw.vertices)} vertices, {len(cw.maximal_simplices)} maximal simplices to {args.output}")
    return EXIT_OK


def verify_suite(r: int, d: Optional[int], k: int, N: int, kind: str, margin: int) -> dict:
    """Run every applicable verifier on one window; ``ok`` is the combined verdict."""
    cw = cx.build_complex(r, d, k, N, kind, margin)
    reports = {}
    eq = cx.verify_strong_equidimensionality(cw, margin)
    reports["strong_equidimensionality"] = eq.as_dict()
    failed = not eq.ok
    if kind == "A":
        bl = cx.verify_boundaryless(cw, max(margin, 1))
        failed |= not bl.ok
    else:
        bl = cx.verify_boundaryless(cw, max(margin, 1), report_only=True)
        failed |= bl.notes.get("off_chamber_boundary", 0) > 0
        bl_dict = bl.as_dict()
        bl_dict["report_only"] = True
    reports["boundaryless"] = bl.as_dict() if kind == "A" else bl_dict
    comps = cx.connected_components(cw, margin=margin)
    conn = {"components": comps.count, "paths_checked": 0, "path_failures": []}
    weyl_members = [v for v in cw.vertices if is_weyl(v)]
    for v in weyl_members:
        try:
            path = cx.reduce_to_fundamental(v, d, k)
            problems = cx.validate_path(path, d, k)
        except BTZError as exc:
            problems = [str(exc)]
        conn["paths_checked"] += 1
        if problems:
            conn["path_failures"].append({"vertex": list(v.coords), "problems": problems})
    conn["ok"] = not conn["path_failures"] and (comps.count == 1 or r == 2 or not cw.vertices)
    failed |= not conn["ok"]
    reports["connectivity"] = conn
    if d is not None:
        st = cx.check_stratification(r, d, k, N)
        reports["stratification"] = st.as_dict()
        failed |= not st.ok
    return {"r": r, "d": "inf" if d is None else d, "k": k, "kind": kind, "N": N, "margin": margin, "ok": not failed, "reports": reports}


def cmd_verify(args, out: Output) -> int:
    r, d, N, kind, margin = _window_args(args)
    results = [verify_suite(r, d, k, N, kind, margin) for k in parse_weights(args.k, r, d)]
    lines = []
    for res in results:
        status = "ok" if res["ok"] else "FAIL"
        lines.append(f"{status}: r={r} d={res['d']} k={res['k']} kind={kind} N={N}")
        if not res["ok"]:
            for name, rep in res["reports"].items():
                for viol in rep.get("violations", [])[:5]:
                    lines.append(f"  {name}: {viol['simplex']} {viol['reason']}")
                for fail in rep.get("path_failures", [])[:5]:
                    lines.append(f"  {name}: {fail['vertex']} {fail['problems']}")
    ok = all(res["ok"] for res in results)
    if args.output:
        Path(args.output).write_text(json.dumps(results, sort_keys=True, indent=2) + "\n")
    out.emit({"ok": ok, "results": results}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_symmetry(args, out: Output) -> int:
    r = int(args.r)
    d = parse_horizon(args.d)
    if d is None:
        raise InvalidHorizon("the involution check needs a finite horizon")
    ks = parse_weights(args.k or "all", r, d)
    N = int(args.N)
    results = []
    for k in ks:
        rep = cx.check_involution_symmetry(r, d, k, N)
        results.append({"k": k, "dual": r * d - k, "ok": rep.ok, "mismatches": [v.as_dict() for v in rep.violations]})
    ok = all(x["ok"] for x in results)
    text = "\n".join(f"{'match' if x['ok'] else 'MISMATCH'}: k={x['k']} <-> {x['dual']}" for x in results)
    out.emit({"ok": ok, "r": r, "d": d, "N": N, "pairs": results}, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(args, out: Output) -> int:
    r = int(args.r)
    d = parse_horizon(args.d)
    N = int(args.N)
    ks = parse_weights(args.k, r, d)
    cws = [cx.build_complex(r, d, k, N, "W") for k in ks]
    fmt = args.format or ("dot" if args.output and args.output.endswith(".dot") else "svg")
    if fmt == "dot":
        data = b"".join(render.export_dot(cw) for cw in cws)
    else:
        data = render.render_svg(cws)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.write(data.decode())
        return EXIT_OK
    out.emit({"output": args.output, "format": fmt, "k": ks}, f"wrote {fmt} for k={ks} to {args.output}")
    return EXIT_OK


def cmd_reduce(args, out: Output) -> int:
    n = parse_point(args.n, args.r)
    d = parse_horizon(args.d)
    k = single_weight(args.k, n.r, d)
    path = cx.reduce_to_fundamental(n, d, k)
    problems = cx.validate_path(path, d, k)
    payload = {"path": [list(v.coords) for v in path.vertices], "valid": not problems, "problems": problems}
    out.emit(payload, " -> ".join(str(v) for v in path.vertices))
    return EXIT_OK if not problems else EXIT_FAIL


def cmd_batch(args, out: Output) -> int:
    parser = configparser.ConfigParser()
    parser.optionxform = str
    parser.read_string(Path(args.manifest).read_text())
    worst = EXIT_OK
    summary = []
    for name in parser.sections():
        section = dict(parser[name])
        command = section.pop("command", None)
        argv = [command] if command else []
        for key, value in section.items():
            if key in ("json", "quiet"):
                continue
            argv += [f"--{key}", value]
        if out.as_json:
            argv.insert(0, "--json")
        argv.insert(0, "--quiet")
        code = main(argv)
        summary.append({"run": name, "command": command, "exit": code})
        worst = max(worst, code)
    out.emit({"runs": summary}, "\n".join(f"{s['run']}: {s['command']} -> exit {s['exit']}" for s in summary))
    return worst


COMMANDS = {
    "member": cmd_member,
    "diagram": cmd_diagram,
    "build": cmd_build,
    "verify": cmd_verify,
    "symmetry": cmd_symmetry,
    "render": cmd_render,
    "reduce": cmd_reduce,
    "batch": cmd_batch,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="btz", description="Vanishing complexes W(d,k) and A(d,k) in the Weyl chamber.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--quiet", action="store_true", help="print nothing; rely on the exit code")
    p.add_argument("--config", help="flat key = value file supplying defaults for flags")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, point=False, window=False):
        sp.add_argument("--r", type=int)
        sp.add_argument("--d", help="horizon: positive integer or 'inf'")
        sp.add_argument("--k", help="weight; lists like 4,5,6 or ranges 1-5 where accepted")
        if point:
            sp.add_argument("--n", help="coordinates, e.g. 4,3,1,0 or 3/2,1/2,0")
        if window:
            sp.add_argument("--N", type=int, help="window bound")
            sp.add_argument("--kind", choices=["W", "A"])
            sp.add_argument("--margin", type=int)
        sp.add_argument("--seed", type=int)
        sp.add_argument("-o", "--output")
        sp.add_argument("--format", choices=["json", "dot", "svg", "text"])

    common(sub.add_parser("member", help="membership test with v_k, v_(k+1) and the critical index"), point=True)
    sp = sub.add_parser("diagram", help="print a d-diagram with box numbers")
    common(sp, point=True)
    sp.add_argument("--length", type=int, help="prefix length for the infinite diagram")
    common(sub.add_parser("build", help="build a window and write its JSON document"), window=True)
    common(sub.add_parser("verify", help="run the verifier suite on windows"), window=True)
    common(sub.add_parser("symmetry", help="compare W(d,k) with W(d,rd-k) under the hat map"), window=True)
    common(sub.add_parser("render", help="draw rank-3 windows as SVG or DOT"), window=True)
    common(sub.add_parser("reduce", help="edge path from a member to a fundamental weight"), point=True)
    sp = sub.add_parser("batch", help="run every section of a manifest")
    sp.add_argument("manifest")
    return p


def _boolean(text: str, key: str) -> bool:
    value = text.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise InvalidArgument(f"{key}: expected a boolean, got {text!r}")


def _apply_defaults(args, config: dict) -> None:
    for key, value in config.items():
        if hasattr(args, key) and getattr(args, key) in (None, False):
            if key in ("r", "N", "margin", "seed", "length"):
                value = int(value)
            setattr(args, key, value)
    for key, value in DEFAULTS.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)
    if getattr(args, "r", 1) is None and getattr(args, "n", None) is None and args.command in ("build", "verify", "symmetry", "render"):
        raise InvalidArgument("--r is required")
    if args.command in ("member", "diagram", "reduce") and not getattr(args, "n", None):
        raise InvalidArgument("--n is required")
    if args.command in ("member", "build", "verify", "render", "reduce") and getattr(args, "k", None) is None:
        raise InvalidArgument("--k is required")


def _glue_negative_values(argv: list) -> list:
    """Turn ``--n -1,0,0`` into ``--n=-1,0,0`` so argparse keeps the value."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--n":
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    out = Output(args.json, args.quiet)
    try:
        config = load_flat_config(args.config) if args.config else {}
        for flag in ("json", "quiet"):
            if flag in config:
                setattr(args, flag, getattr(args, flag) or _boolean(config.pop(flag), flag))
        out = Output(args.json, args.quiet)
        _apply_defaults(args, config)
        return COMMANDS[args.command](args, out)
    except BTZError as exc:
        if not args.quiet:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError, configparser.Error) as exc:
        if not args.quiet:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
