"""Command-line interface: analyze, bound, certify, generate, table2."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import families
from .certify import certify as run_certify
from .graphcore import (
    Graph,
    Graph6Error,
    SizeCapError,
    diameter,
    girth_bfs,
    is_connected,
    is_distance_regular,
    parse_graph6,
    regularity,
    write_graph6,
)
from .lpbound import certificate_from_spectrum, lp_bound_dual, lp_bound_primal
from .spectral import girth_spectral, spectral_gap, spectrum

__all__ = ["CliConfig", "main"]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_SIZE = 3
EXIT_INVALID_CERT = 4


@dataclass(frozen=True)
class CliConfig:
    """Parsed invocation: subcommand, I/O selections and tolerance overrides."""

    command: str
    path: Optional[str] = None
    as_json: bool = False
    tol_cluster: Optional[float] = None
    tol_slack: float = 1e-9
    k: Optional[int] = None
    eigenvalues: tuple = ()
    degree: Optional[int] = None
    method: str = "both"
    family: Optional[str] = None


def _read_graph(path: str) -> Graph:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    for line in data.splitlines():
        line = line.strip()
        if line:
            return parse_graph6(line)
    raise Graph6Error("no graph6 word in input", 0)


def _parse_eigenvalues(text: str) -> tuple:
    """Comma-separated reals; integers and a/b ratios stay exact."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise ValueError("empty eigenvalue entry")
        try:
            out.append(int(tok))
            continue
        except ValueError:
            pass
        if "/" in tok:
            out.append(Fraction(tok))
            continue
        out.append(float(tok))
    return tuple(out)


def _fmt_eig(e: float) -> str:
    if abs(e - round(e)) < 1e-9:
        return str(int(round(e)))
    return f"{e:.6f}"


def _fmt_spectrum(entries) -> str:
    parts = []
    for e, m in entries:
        s = _fmt_eig(e)
        if float(e) < 0:
            s = f"({s})"
        parts.append(s if m == 1 else f"{s}^{m}")
    return ", ".join(parts)


def cmd_analyze(cfg: CliConfig) -> int:
    g = _read_graph(cfg.path or "-")
    k = regularity(g)
    connected = is_connected(g)
    info: dict = {
        "v": g.n,
        "edges": g.edge_count(),
        "k": k,
        "connected": connected,
        "girth": girth_bfs(g),
    }
    info["diameter"] = diameter(g) if connected and g.n else None
    spec = spectrum(g, cfg.tol_cluster) if g.n else None
    info["spectrum"] = None if spec is None else [[e, m] for e, m in spec.entries]
    info["d"] = None if spec is None else spec.d
    if k is not None and connected and k >= 2:
        info["girth_trace"] = girth_spectral(g)
        info["spectral_gap"] = spectral_gap(g)
        array = is_distance_regular(g)
        info["distance_regular"] = (
            None if array is None else {"b": list(array.b), "c": list(array.c)}
        )
    else:
        info["girth_trace"] = None
        info["spectral_gap"] = None
        info["distance_regular"] = None
    if cfg.as_json:
        print(json.dumps(info, indent=2, allow_nan=False))
        return EXIT_OK
    print(f"vertices: {info['v']}")
    print(f"edges: {info['edges']}")
    print(f"regular: {'no' if k is None else f'k = {k}'}")
    print(f"connected: {'yes' if connected else 'no'}")
    print(f"girth: {info['girth'] if info['girth'] is not None else 'none (acyclic)'}")
    if info["girth_trace"] is not None:
        print(f"girth via traces: {info['girth_trace']}")
    if info["diameter"] is not None:
        print(f"diameter: {info['diameter']}")
    if spec is not None:
        print(f"spectrum: {_fmt_spectrum(spec.entries)}")
    if info["spectral_gap"] is not None:
        print(f"spectral gap: {_fmt_eig(info['spectral_gap'])}")
    if info["distance_regular"] is not None:
        print(
            f"distance-regular: b={info['distance_regular']['b']} c={info['distance_regular']['c']}"
        )
    return EXIT_OK


def cmd_bound(cfg: CliConfig) -> int:
    out: dict = {"k": cfg.k, "eigenvalues": [float(t) for t in cfg.eigenvalues], "method": cfg.method}
    invalid = False
    if cfg.method in ("certificate", "both"):
        cert = certificate_from_spectrum(cfg.k, cfg.eigenvalues, tol=cfg.tol_slack)
        out["certificate"] = {
            "bound": None if cert.bound is None else float(cert.bound),
            "f_coeffs": [float(c) for c in cert.poly.coeffs],
            "conditions": cert.conditions.to_json_dict(),
        }
        invalid = cert.bound is None
    if cfg.method in ("lp", "both"):
        sol = lp_bound_dual(cfg.k, cfg.eigenvalues, cfg.degree)
        out["lp"] = {
            "status": sol.status,
            "bound": None if sol.objective is None else float(sol.objective),
            "f_coeffs": [float(x) for x in sol.variables],
        }
    if cfg.as_json:
        print(json.dumps(out, indent=2, allow_nan=False))
    else:
        if "certificate" in out:
            cert = out["certificate"]
            print(f"certificate bound: {cert['bound'] if cert['bound'] is not None else 'invalid'}")
            print(f"certificate coefficients: {cert['f_coeffs']}")
            for name, rep in cert["conditions"].items():
                state = "ok" if rep["ok"] else "VIOLATED"
                print(f"  {name}: {state} (slack {rep['slack']:.6g})")
        if "lp" in out:
            lp = out["lp"]
            if lp["status"] == "optimal":
                print(f"lp bound (degree <= {cfg.degree or 'default'}): {lp['bound']:.9g}")
            else:
                print(f"lp: {lp['status']} (no finite bound at this degree)")
    if cfg.method == "certificate" and invalid:
        return EXIT_INVALID_CERT
    return EXIT_OK


def cmd_certify(cfg: CliConfig) -> int:
    g = _read_graph(cfg.path or "-")
    report = run_certify(g, tol_cluster=cfg.tol_cluster, tol_slack=cfg.tol_slack)
    if cfg.as_json:
        print(report.to_json())
    else:
        doc = report.to_json_dict()
        for key in ("v", "k", "girth", "diameter", "d", "moore_bound", "tutte_bound"):
            print(f"{key}: {doc[key]}")
        if report.spec is not None:
            print(f"spectrum: {_fmt_spectrum(report.spec.entries)}")
        if doc["lp"] is not None:
            print(f"lp bound: {doc['lp']['bound']}")
            print(f"tight: {doc['lp']['tight']}")
        print(f"verdict: {doc['verdict']}")
        if doc["reason"]:
            print(f"reason: {doc['reason']}")
    return EXIT_OK


def cmd_generate(cfg: CliConfig) -> int:
    spec = families.parse_family(cfg.family)
    g = families.build(spec)
    sys.stdout.write(write_graph6(g).decode("ascii") + "\n")
    return EXIT_OK


def cmd_table2(cfg: CliConfig) -> int:
    rows = []
    for spec in families.TABLE_SPECS:
        g = families.build(spec)
        sp = spectrum(g)
        k = regularity(g)
        sol = lp_bound_dual(k, sp.nontrivial, 2 * sp.d - 1)
        cert = certificate_from_spectrum(k, sp.nontrivial)
        from .lpbound import check_attainment

        att = check_attainment(g, cert)
        rows.append(
            {
                "name": str(spec),
                "v": g.n,
                "k": k,
                "girth": girth_bfs(g),
                "spectrum": [[e, m] for e, m in sp.entries],
                "bound": None if sol.objective is None else float(sol.objective),
                "tight": att.tight,
            }
        )
    if cfg.as_json:
        print(json.dumps(rows, allow_nan=False))
        return EXIT_OK
    header = f"{'family':>20} {'v':>4} {'k':>2} {'girth':>5} {'bound':>10} {'tight':>5}  spectrum"
    print(header)
    for row in rows:
        bound = "-" if row["bound"] is None else f"{row['bound']:.4f}"
        print(
            f"{row['name']:>20} {row['v']:>4} {row['k']:>2} {row['girth']:>5} "
            f"{bound:>10} {'yes' if row['tight'] else 'NO':>5}  {_fmt_spectrum(row['spectrum'])}"
        )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expanderlp",
        description="Bounds and certificates for regular graphs with prescribed eigenvalues.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="metrics and spectrum of a graph6 input")
    p.add_argument("path", nargs="?", default="-", help="graph6 file or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tol-cluster", type=float, default=None)

    p = sub.add_parser("bound", help="order bound for a degree and eigenvalue set")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eigenvalues", required=True, help="comma-separated, below k")
    p.add_argument("--degree", type=int, default=None, help="largest coefficient index")
    p.add_argument("--method", choices=("certificate", "lp", "both"), default="both")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tol-slack", type=float, default=1e-9)

    p = sub.add_parser("certify", help="certify a graph6 input as spectrum-extremal")
    p.add_argument("path", nargs="?", default="-")
    p.add_argument("--text", action="store_true", help="human summary instead of JSON")
    p.add_argument("--tol-cluster", type=float, default=None)
    p.add_argument("--tol-slack", type=float, default=1e-9)

    p = sub.add_parser("generate", help="emit a named family member as graph6")
    p.add_argument("family", help="e.g. cycle:5, pg2:3, gq:2, kneser:7,3, petersen")

    p = sub.add_parser("table2", help="catalog of bundled certified families")
    p.add_argument("--json", action="store_true")
    return parser


def _config_from_args(ns: argparse.Namespace) -> CliConfig:
    if ns.command == "analyze":
        return CliConfig("analyze", path=ns.path, as_json=ns.json, tol_cluster=ns.tol_cluster)
    if ns.command == "bound":
        return CliConfig(
            "bound", as_json=ns.json, tol_slack=ns.tol_slack, k=ns.k,
            eigenvalues=_parse_eigenvalues(ns.eigenvalues), degree=ns.degree, method=ns.method,
        )
    if ns.command == "certify":
        return CliConfig(
            "certify", path=ns.path, as_json=not ns.text,
            tol_cluster=ns.tol_cluster, tol_slack=ns.tol_slack,
        )
    if ns.command == "generate":
        return CliConfig("generate", family=ns.family)
    return CliConfig("table2", as_json=ns.json)


_COMMANDS = {
    "analyze": cmd_analyze,
    "bound": cmd_bound,
    "certify": cmd_certify,
    "generate": cmd_generate,
    "table2": cmd_table2,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    ns = _build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(ns)
        return _COMMANDS[cfg.command](cfg)
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
