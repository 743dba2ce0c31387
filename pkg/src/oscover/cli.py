"""Command-line front end.

All vectors are comma-separated integers in the order (w0, w1, w2, w3).
Every subcommand prints one JSON document (or CSV for ``enumerate``).
Exit codes: 0 ok, 1 domain error, 2 usage error, 3 inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .builder import EpsilonChoice, build_family, epsilon_from_vector
from .certificates import family_document
from .enumerator import SweepConfig, enumerate_families, render
from .errors import ConstructionInconsistency, DomainError, OscoverError
from .piclattice import PicClass, adjunction_genus, canonical_class, intersect, lin_equiv
from .typesystem import CoverSpec, check_cover, parse_vector
from .verify import run_suite

EXIT_CODES = {"ok": 0, "domain-error": 1, "inconsistency": 3}


@dataclass
class CommandResult:
    status: str
    payload: Any = None
    diagnostics: list[dict[str, Any]] = field(default_factory=list)
    text: str | None = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> dict[str, Any]:
        return {"status": self.status, "payload": self.payload, "diagnostics": self.diagnostics}


def _vector(text: str) -> tuple[int, ...]:
    try:
        return parse_vector(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _class(text: str) -> PicClass:
    try:
        return PicClass.from_json(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _signs(text: str) -> tuple[int, ...]:
    v = _vector(text)
    if any(x not in (1, -1) for x in v):
        raise argparse.ArgumentTypeError(f"signs must be +1/-1, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oscover", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check-cover", help="evaluate the necessary conditions on (d, n, rho, g, gamma)")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--rho", type=int, default=1)
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--gamma", type=_vector, required=True)

    b = sub.add_parser("build-family", help="construct and verify a family")
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--mu", type=_vector, required=True)
    b.add_argument("--family", choices=("A", "B"), default="A")
    b.add_argument("--k", type=int, choices=range(4), default=0)
    b.add_argument("--signs", type=_signs, default=(1, 1, 1, 1))
    b.add_argument("--eps", type=_vector, default=None,
                   help="explicit epsilon vector (overrides --family/--k/--signs)")
    b.add_argument("--eps-convention", choices=("french", "english"), default="french",
                   help="english: gamma = (2d-1) mu + 2 eps")

    e = sub.add_parser("enumerate", help="table of constructed families")
    e.add_argument("--d-max", type=int, required=True)
    e.add_argument("--mu-max", type=int, required=True)
    e.add_argument("--genus-max", type=int, required=True)
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.add_argument("--out", type=Path, default=None)
    e.add_argument("--workers", type=int, default=1)

    i = sub.add_parser("intersect", help="intersection number of two classes")
    i.add_argument("--a", type=_class, required=True)
    i.add_argument("--b", type=_class, required=True)

    g = sub.add_parser("genus", help="arithmetic genus of a class by adjunction")
    g.add_argument("--class", dest="cls", type=_class, required=True)

    v = sub.add_parser("verify-paper", help="run the full consistency suite")
    v.add_argument("--d-max", type=int, default=4)
    v.add_argument("--mu-max", type=int, default=5)
    v.add_argument("--trials", type=int, default=10_000)
    return p


def _check_cover(args) -> CommandResult:
    spec = CoverSpec(args.d, args.n, args.rho, args.g, tuple(args.gamma))
    return CommandResult("ok", check_cover(spec).to_json())


def _build_family(args) -> CommandResult:
    if args.eps is not None:
        eps = epsilon_from_vector(args.d, args.eps, args.eps_convention)
    else:
        eps = EpsilonChoice(args.family, args.k, tuple(args.signs))
    spec = build_family(args.d, tuple(args.mu), eps)
    return CommandResult("ok", family_document(spec))


def _enumerate(args) -> CommandResult:
    cfg = SweepConfig(args.d_max, args.mu_max, args.genus_max, args.format)
    rows = enumerate_families(cfg, workers=args.workers)
    text = render(rows, cfg.format)
    if args.out is not None:
        args.out.write_text(text)
        return CommandResult("ok", {"rows": len(rows), "out": str(args.out), "format": cfg.format})
    return CommandResult("ok", {"rows": len(rows)}, text=text)


def _intersect(args) -> CommandResult:
    return CommandResult("ok", {
        "intersection": intersect(args.a, args.b),
        "linearly_equivalent": lin_equiv(args.a, args.b),
    })


def _genus(args) -> CommandResult:
    D = args.cls
    return CommandResult("ok", {
        "class": D.to_json(),
        "genus": adjunction_genus(D),
        "self_intersection": intersect(D, D),
        "canonical_degree": intersect(D, canonical_class()),
    })


def _verify_paper(args) -> CommandResult:
    results = run_suite(args.d_max, args.mu_max, trials=args.trials)
    for r in results:
        print(r.line(), file=sys.stderr)
    payload = {"d_max": args.d_max, "mu_max": args.mu_max, "criteria": [r.to_json() for r in results]}
    if all(r.passed for r in results):
        return CommandResult("ok", payload)
    diags = [{"severity": "error", "criterion": r.key, "message": f}
             for r in results if not r.passed for f in r.failures[:5]]
    return CommandResult("inconsistency", payload, diags)


HANDLERS = {
    "check-cover": _check_cover,
    "build-family": _build_family,
    "enumerate": _enumerate,
    "intersect": _intersect,
    "genus": _genus,
    "verify-paper": _verify_paper,
}


def run(argv: Sequence[str] | None = None) -> CommandResult:
    """Parse and dispatch; argparse handles usage errors by raising SystemExit(2)."""
    args = build_parser().parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except ConstructionInconsistency as exc:
        return CommandResult("inconsistency", {"check": exc.check, "classes": {
            k: v.to_json() for k, v in exc.classes.items()}},
            [{"severity": "error", "message": str(exc)}])
    except (DomainError, OscoverError) as exc:
        return CommandResult("domain-error", None, [{"severity": "error", "message": str(exc)}])


def main(argv: Sequence[str] | None = None) -> int:
    result = run(argv)
    if result.text is not None and result.status == "ok":
        sys.stdout.write(result.text)
    else:
        json.dump(result.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
