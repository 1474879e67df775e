"""Command line front end: ``turaev <command> ...``.

Diagram files hold either PD text or the JSON document written by
``LinkDiagram.to_json``; Heegaard files hold the JSON written by
``turaev heegaard --json``.  Use ``-`` to read standard input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .diagram import DiagramError, load_diagram, validate
from .heegaard import (
    ALTERNATING_MODE,
    GENERALIZED_MODE,
    EMPTY,
    TRIPLE,
    LinkAdaptedHeegaardDiagram,
    SurgeryError,
    build_heegaard,
    homology_report,
    surgery_to_sphere,
    verify,
)
from .states import State, StateError
from .surface import SurfaceError
from .turaev import build_generalized, genus_sweep, min_genus_over_states


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _diagram(args):
    return load_diagram(_read(args.file))


def _state(args, d) -> State:
    return State(args.state) if args.state else State.all_a(d.n_crossings)


def _heegaard(args) -> LinkAdaptedHeegaardDiagram:
    return LinkAdaptedHeegaardDiagram.from_json(json.loads(_read(args.file)))


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_validate(args) -> int:
    report = validate(load_diagram(_read(args.file), check=False))
    _emit(report.to_json())
    return 0 if report.accepted else 1


def cmd_genus(args) -> int:
    d = _diagram(args)
    if args.min:
        g, witness = min_genus_over_states(d, args.cap)
        _emit({"genus": g, "state": str(witness)})
    else:
        print(build_generalized(d, _state(args, d)).genus)
    return 0


def cmd_surface(args) -> int:
    d = _diagram(args)
    t = build_generalized(d, _state(args, d))
    if args.json:
        _emit(t.to_json())
    else:
        m = t.map
        print(f"state {t.state}: genus {t.genus}, V={len(m.vertices)} E={len(m.edges)} F={len(m.faces)}")
    return 0


def cmd_sweep(args) -> int:
    rows = genus_sweep(_diagram(args), args.cap)
    if args.format == "json":
        _emit(rows)
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=["state", "circles", "dualCircles", "genus"])
        writer.writeheader()
        writer.writerows(rows)
    return 0


def cmd_heegaard(args) -> int:
    d = _diagram(args)
    h = build_heegaard(build_generalized(d, _state(args, d)))
    if args.json:
        _emit(h.to_json())
    else:
        print(
            f"genus {h.genus}, triple points {len(h.vertices_of_kind(TRIPLE))}, "
            f"|alpha| {len(h.alpha)}, |beta| {len(h.beta)}, empty faces {len(h.faces_of_kind(EMPTY))}"
        )
    return 0


def cmd_verify(args) -> int:
    mode = GENERALIZED_MODE if args.generalized else ALTERNATING_MODE
    report = verify(_heegaard(args), mode)
    _emit(report.to_json())
    return 0 if report.passed else 1


def cmd_surgery(args) -> int:
    result = surgery_to_sphere(_heegaard(args))
    if args.json:
        _emit(result.to_json())
    else:
        print(result.diagram.to_pd())
        print(result.state)
    return 0


def cmd_homology(args) -> int:
    doc = homology_report(_heegaard(args))
    _emit(doc)
    return 0 if doc["generates"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turaev", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, state: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="input file, or - for stdin")
        if state:
            p.add_argument("--state", help="A/B string, one letter per crossing (default all-A)")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check that a diagram is connected and planar")
    p = add("genus", cmd_genus, "genus of the (generalized) Turaev surface", state=True)
    p.add_argument("--min", action="store_true", help="minimize over all states")
    p.add_argument("--cap", type=int, default=20, help="largest crossing count to enumerate")
    p = add("surface", cmd_surface, "build a (generalized) Turaev surface", state=True)
    p.add_argument("--json", action="store_true")
    p = add("sweep", cmd_sweep, "genus of every state")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--cap", type=int, default=20)
    p = add("heegaard", cmd_heegaard, "build the link-adapted Heegaard diagram", state=True)
    p.add_argument("--json", action="store_true")
    p = add("verify", cmd_verify, "check a Heegaard diagram bullet by bullet")
    p.add_argument("--generalized", action="store_true", help="do not require D to alternate")
    p = add("surgery", cmd_surgery, "surger a Heegaard diagram back to a sphere diagram")
    p.add_argument("--json", action="store_true")
    add("homology", cmd_homology, "first homology and the classes of the attaching circles")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, StateError, SurfaceError, SurgeryError, ValueError, KeyError, OSError) as exc:
        print(f"turaev: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
