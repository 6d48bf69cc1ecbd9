"""Command-line interface: ``artin-growth {count,series,roots,growth,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import __version__, battery, census, charpoly, hilbert, rewrite, spectra
from .coxeter import CoxeterGraph, Family, FamilyId, build_family, parse_graph, presentation, rightangle
from .errors import CertificationError, GuardExceeded, UnsupportedGraph


@dataclass
class JobSpec:
    command: str
    family: Optional[FamilyId]
    graph_path: Optional[str]
    rightangled: bool
    max_k: int
    width: Fraction
    fmt: str
    method: str
    guard: Optional[int]
    starts: bool = False

    def __post_init__(self):
        if self.command != "verify" and (self.family is None) == (self.graph_path is None):
            raise ValueError("give exactly one of --family or --graph")


def parse_width(text: str) -> Fraction:
    """Accepts ``2^-40``, ``1/1024`` or a decimal such as ``0.001``."""
    t = text.strip().replace("**", "^")
    if "^" in t:
        base, exp = t.split("^", 1)
        return Fraction(int(base)) ** int(exp)
    w = Fraction(t)
    if w <= 0:
        raise argparse.ArgumentTypeError("width must be positive")
    return w


def _spec_from_args(args) -> JobSpec:
    fam = None
    if getattr(args, "family", None):
        fam = FamilyId.parse(args.family, args.rank, args.p)
    return JobSpec(
        command=args.command,
        family=fam,
        graph_path=getattr(args, "graph", None),
        rightangled=getattr(args, "rightangled", False),
        max_k=getattr(args, "max_k", 10),
        width=getattr(args, "width", spectra.DEFAULT_WIDTH),
        fmt=args.format,
        method=getattr(args, "method", "auto"),
        guard=getattr(args, "guard", None),
        starts=getattr(args, "starts", False),
    )


def resolve_graph(spec: JobSpec) -> CoxeterGraph:
    if spec.graph_path is not None:
        with open(spec.graph_path, encoding="utf-8") as fh:
            g = parse_graph(fh.read(), name=spec.graph_path)
    else:
        g = build_family(spec.family)
    return rightangle(g) if spec.rightangled else g


def known_family(g: CoxeterGraph) -> Optional[tuple[str, int]]:
    """Identify ``g`` as one of the right-angled families with a known recurrence."""
    n = g.n
    candidates = []
    if n >= 3:
        candidates.append(("K", build_family(FamilyId(Family.K_INF, n))))
    candidates.append(("A", rightangle(build_family(FamilyId(Family.A, n)))))
    if n >= 4:
        candidates.append(("D", rightangle(build_family(FamilyId(Family.D, n)))))
    if n in (6, 7, 8):
        candidates.append(("E", rightangle(build_family(FamilyId(Family.E, n)))))
    for tag, h in candidates:
        if h == g:
            return tag, n
    return None


_RECURRENCES = {
    "K": (census.count_K, charpoly.k_script),
    "A": (census.count_A_infty, charpoly.a_script),
    "D": (census.count_D_infty, charpoly.d_script),
    "E": (census.count_E, charpoly.e_script),
}


def _metadata(spec: JobSpec, g: CoxeterGraph, **extra) -> dict:
    md = {"tool": "artin-growth", "version": __version__, "graph": str(g), "n": g.n}
    md.update(extra)
    return md


def _emit(payload: dict, fmt: str, out, table: Optional[list[list]] = None, header=None) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    elif fmt == "csv":
        if table is None:
            raise UnsupportedGraph("CSV output is only available for count tables")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(table)
        out.write(buf.getvalue())
    else:
        out.write(_as_text(payload) + "\n")


def _as_text(payload, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for k in sorted(payload):
            v = payload[k]
            nested = isinstance(v, dict) or (isinstance(v, list) and any(isinstance(x, dict) for x in v))
            if nested and v:
                lines.append(f"{pad}{k}:")
                lines.append(_as_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(payload, list):
        items = []
        for v in payload:
            if isinstance(v, dict):
                body = _as_text(v, indent + 1)
                items.append(f"{pad}- " + body[len(pad) + 2 :])
            else:
                items.append(f"{pad}- {v}")
        return "\n".join(items)
    return f"{pad}{payload}"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_count(spec: JobSpec, out) -> int:
    g = resolve_graph(spec)
    K = spec.max_k
    method = spec.method
    fam = known_family(g)
    if method == "auto":
        if fam is not None:
            method = "recurrence"
        elif g.is_right_angled():
            method = "canonical" if rewrite.commutation_system_complete(g) else "mobius"
        else:
            method = "brute"
    starts = None
    if method == "recurrence":
        if fam is None:
            raise UnsupportedGraph(f"{g}: no recurrence known for this graph")
        tag, n = fam
        vectors = _RECURRENCES[tag][0](n, K)
        counts = census.totals(vectors)
        starts = [list(v.starts) for v in vectors]
        method = f"recurrence:{tag}"
    elif method == "canonical":
        counts = [rewrite.count_canonical(g, k) for k in range(K + 1)]
    elif method == "mobius":
        counts = hilbert.coefficients(hilbert.mobius_series(g), K)
    elif method == "brute":
        counts = census.count_bruteforce_series(presentation(g), K, spec.guard)
    else:
        raise ValueError(f"unknown method {method!r}")

    rows = []
    table = []
    for k, c in enumerate(counts):
        row = {"k": k, "c_k": c}
        trow = [k, c]
        if spec.starts and starts is not None:
            row["starts"] = starts[k]
            trow += starts[k]
        rows.append(row)
        table.append(trow)
    header = ["k", "c_k"]
    if spec.starts and starts is not None:
        header += [f"c_k;{i}" for i in range(1, g.n + 1)]
    payload = {"metadata": _metadata(spec, g, method=method), "counts": rows}
    if spec.fmt == "text":
        out.write("\n".join(" ".join(str(x) for x in r) for r in table) + "\n")
    else:
        _emit(payload, spec.fmt, out, table, header)
    return 0


def _series_for(g: CoxeterGraph) -> tuple[str, hilbert.RationalSeries]:
    if not g.is_right_angled():
        raise UnsupportedGraph(f"{g}: series are computed for right-angled graphs (use --rightangled)")
    fam = known_family(g)
    if fam is not None:
        tag, n = fam
        return f"charpoly:{tag}", hilbert.series_from_charpoly(_RECURRENCES[tag][1](n))
    return "mobius", hilbert.mobius_series(g)


def _charpoly_for(g: CoxeterGraph) -> tuple[str, charpoly.IntPolynomial]:
    route, s = _series_for(g)
    return route, s.denominator.reciprocal()


def cmd_series(spec: JobSpec, out) -> int:
    g = resolve_graph(spec)
    route, s = _series_for(g)
    payload = {"metadata": _metadata(spec, g, method=route), **s.to_json(spec.max_k)}
    _emit(payload, spec.fmt, out)
    return 0


def cmd_roots(spec: JobSpec, out) -> int:
    g = resolve_graph(spec)
    route, p = _charpoly_for(g)
    R = spectra.dyadic_radius(p)
    cert = spectra.isolate(p, -R, R, spec.width)
    payload = {
        "metadata": _metadata(spec, g, method=route),
        "polynomial_text": p.format(),
        "certificate": cert.to_json(),
        "verified": cert.verify(),
        "roots_approx": [round(r, 12) for r in cert.roots()],
    }
    _emit(payload, spec.fmt, out)
    return 0 if payload["verified"] else 1


def cmd_growth(spec: JobSpec, out) -> int:
    if spec.family is not None and spec.graph_path is None:
        gb = spectra.growth_bound(spec.family, spec.width)
        payload = {"metadata": {"tool": "artin-growth", "version": __version__, "family": str(spec.family)},
                   **gb.to_json()}
        ok = gb.gamma < 4
    else:
        g = resolve_graph(spec)
        route, p = _charpoly_for(g)
        rb = spectra.spectral_radius_bound(p, spec.width)
        ok = rb.bound < 4
        payload = {
            "metadata": _metadata(spec, g, method=route),
            "gamma": [rb.bound.numerator, rb.bound.denominator],
            "gamma_float": float(rb.bound),
            "route": rb.route,
            "certificate": rb.certificate.to_json(),
            "below_4": ok,
        }
    _emit(payload, spec.fmt, out)
    return 0 if ok else 1


def cmd_verify(spec: JobSpec, out) -> int:
    results = battery.run_battery()
    if spec.fmt == "json":
        payload = {
            "metadata": {"tool": "artin-growth", "version": __version__},
            "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
        }
        _emit(payload, "json", out)
    else:
        for r in results:
            out.write(r.line() + "\n")
    return 0 if all(r.ok for r in results) else 1


COMMANDS = {
    "count": cmd_count,
    "series": cmd_series,
    "roots": cmd_roots,
    "growth": cmd_growth,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="artin-growth", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def inputs(p):
        p.add_argument("--family", help="A, B, D, E, F4, G2, H, I2:p, Kinf, free, freeabelian")
        p.add_argument("--rank", type=int)
        p.add_argument("--p", type=int, help="label for I2(p)")
        p.add_argument("--graph", metavar="FILE", help="custom graph in 'n / i j r' text format")
        p.add_argument("--rightangled", action="store_true", help="replace labels >= 3 by infinity")
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("count", help="element counts by length")
    inputs(p)
    p.add_argument("--max-k", type=int, default=10)
    p.add_argument("--method", choices=("auto", "recurrence", "canonical", "brute"), default="auto")
    p.add_argument("--starts", action="store_true", help="per-start-letter columns (recurrence only)")
    p.add_argument("--guard", type=int, help="brute-force ceiling on n^k (env ARTIN_GROWTH_GUARD)")

    p = sub.add_parser("series", help="rational Hilbert series")
    inputs(p)
    p.add_argument("--max-k", type=int, default=10)

    for name, help_ in (("roots", "root isolation certificate"), ("growth", "certified growth bound")):
        p = sub.add_parser(name, help=help_)
        inputs(p)
        p.add_argument("--width", type=parse_width, default=spectra.DEFAULT_WIDTH)

    p = sub.add_parser("verify", help="run the identity and certification battery")
    p.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        spec = _spec_from_args(args)
        return COMMANDS[spec.command](spec, out)
    except (ValueError, GuardExceeded, UnsupportedGraph, CertificationError, OSError) as exc:
        print(f"artin-growth: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
