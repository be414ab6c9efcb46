"""Command line interface: compute, study, assemble, verify."""

import argparse
import csv
import io
import json
import logging
import os
import sys

import numpy as np

from .checks import run_all
from .element import WedgeElement
from .errors import WedgeMassError
from .mass import KINDS, Scheme, element_masses
from .mesh import assemble_global, read_mesh
from .oracle import exact_masses
from .study import delta_grid, records_to_csv, records_to_json, run_study

EXIT_OK, EXIT_VALIDATION, EXIT_INPUT = 0, 1, 2
SCHEME_CHOICES = [s.value for s in Scheme]


class InputError(Exception):
    pass


def _fmt(v):
    return format(float(v), ".17g")


def _parse_element(spec, density):
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError:
            doc = text
        if isinstance(doc, dict):
            density = doc.get("density", density)
            doc = doc.get("nodes")
        if isinstance(doc, str):
            coords = doc.replace(",", " ").split()
        else:
            coords = np.asarray(doc, dtype=float).ravel()
    else:
        coords = spec.replace(",", " ").split()
    try:
        return WedgeElement.from_coords([float(c) for c in coords], density)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad element: {exc}") from None


def _matrix_output(m, fmt):
    if fmt == "json":
        return json.dumps(np.asarray(m).tolist()) + "\n"
    rows = np.atleast_2d(m) if m.ndim == 2 else m[:, None]
    return "".join(",".join(_fmt(v) for v in row) + "\n" for row in rows)


def cmd_compute(args):
    if args.density <= 0:
        raise InputError("density must be positive")
    e = _parse_element(args.element, args.density)
    nodes = e.nodes[None]
    if args.scheme == "exact":
        m = exact_masses(nodes, args.kind, e.density)[0]
    else:
        m = element_masses(nodes, args.scheme, args.kind, e.density)[0]
    sys.stdout.write(_matrix_output(m, args.format))
    return EXIT_OK


def cmd_study(args):
    try:
        grid = delta_grid(args.delta_min, args.delta_max, args.delta_step)
        if grid[0] < 0:
            raise ValueError("delta must be non-negative")
    except ValueError as exc:
        raise InputError(str(exc)) from None
    schemes = [s for s in args.schemes.replace(",", " ").split() if s]
    records = run_study(grid, schemes, args.kind)
    text = records_to_csv(records) if args.format == "csv" else records_to_json(records)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_assemble(args):
    mesh = read_mesh(args.mesh, strict=args.strict)
    g = assemble_global(mesh, args.scheme, args.kind)
    if args.format == "json":
        doc = {"scheme": g.scheme, "kind": g.kind, "nodes": list(g.node_ids),
               "entries": [list(t) for t in g.triplets()]}
        sys.stdout.write(json.dumps(doc) + "\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row", "col", "value"])
        for r, c, v in g.triplets():
            w.writerow([r, c, _fmt(v)])
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_verify(args):
    print(f"seed: {args.seed}")
    results = run_all(args.count, args.seed)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_VALIDATION if failed else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="wedgemass",
                                description="Six-node wedge mass matrices.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="element mass matrix to stdout")
    c.add_argument("--element", required=True,
                   help="file (JSON nodes or 18 numbers) or inline 18 coordinates x1,y1,z1,...")
    c.add_argument("--scheme", default="ex", choices=SCHEME_CHOICES + ["exact"])
    c.add_argument("--kind", default="consistent", choices=KINDS)
    c.add_argument("--density", type=float, default=1.0)
    c.add_argument("--format", default="csv", choices=["csv", "json"])
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("study", help="coarse-element accuracy study")
    s.add_argument("--delta-min", type=float, default=0.0)
    s.add_argument("--delta-max", type=float, default=2.0)
    s.add_argument("--delta-step", type=float, default=0.05)
    s.add_argument("--schemes", default="cm,lm,ex,gauss2,gauss9")
    s.add_argument("--kind", default="consistent", choices=KINDS)
    s.add_argument("--format", default="csv", choices=["csv", "json"])
    s.add_argument("--out")
    s.set_defaults(func=cmd_study)

    a = sub.add_parser("assemble", help="global mass matrix triplets")
    a.add_argument("--mesh", required=True)
    a.add_argument("--scheme", default="ex", choices=SCHEME_CHOICES)
    a.add_argument("--kind", default="consistent", choices=KINDS)
    a.add_argument("--format", default="coo-csv", choices=["coo-csv", "json"])
    a.add_argument("--strict", action="store_true",
                   help="treat elements with non-positive metric as errors")
    a.set_defaults(func=cmd_assemble)

    v = sub.add_parser("verify", help="coefficient regeneration and EX exactness checks")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=1000)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, WedgeMassError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
