"""Command-line surface.

Exit codes: 0 success, 1 usage error, 2 violated mathematical precondition.
All numbers are printed as exact rational strings ("4/3", never 1.333).
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from . import affine, characters, integral_weyl
from .affine import AffineWeight
from .errors import PreconditionError, UsageError, WkcharError
from .integral_weyl import IntegralCoxeterContext
from .rootdata import LieType, RootSystem, build_root_system

COMMANDS = ("central-charge", "conformal-weight", "verma-char", "vacuum-char",
            "irr-char", "integral-weyl", "kl-poly", "check")


@dataclass(frozen=True)
class CommandSpec:
    command: str
    algebra: Optional[LieType] = None
    kappa: Optional[Fraction] = None
    weight: Optional[Tuple[Fraction, ...]] = None
    word: Optional[Tuple[int, ...]] = None
    order: int = 8
    reduction: str = "plus"
    format: str = "text"
    delta_bound: Optional[int] = None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational {text!r}") from exc


def _weight(text: str, rank: int) -> Tuple[Fraction, ...]:
    parts = [p for p in text.split(",") if p.strip() != ""]
    coords = tuple(_fraction(p) for p in parts)
    if len(coords) != rank:
        raise UsageError(f"--weight needs {rank} coordinates, got {len(coords)}")
    return coords


def _word(text: str) -> Tuple[int, ...]:
    items = text.split()
    try:
        return tuple(int(x) for x in items)
    except ValueError as exc:
        raise UsageError(f"malformed word {text!r}") from exc


_NEEDS = {
    "central-charge": ("algebra", "kappa"),
    "conformal-weight": ("algebra", "kappa", "weight"),
    "verma-char": ("algebra", "kappa", "weight"),
    "vacuum-char": ("algebra",),
    "irr-char": ("algebra", "kappa", "weight", "word"),
    "integral-weyl": ("algebra", "kappa", "weight"),
    "kl-poly": ("algebra", "kappa", "weight", "word"),
    "check": ("algebra", "kappa", "weight"),
}


_FLAGS = ("--algebra", "--kappa", "--weight", "--w", "--order",
          "--reduction", "--format", "--delta-bound")


def _collect_flags(argv: Sequence[str]) -> dict:
    """Tokenize ``--flag value`` / ``--flag=value`` pairs by hand.

    Values may start with '-' (negative rationals), which rules out argparse.
    """
    flags: dict = {}
    i = 0
    tokens = list(argv)
    while i < len(tokens):
        token = tokens[i]
        name, eq, inline = token.partition("=")
        if name not in _FLAGS:
            raise UsageError(f"unknown flag {token!r}")
        if eq:
            value = inline
        else:
            if i + 1 >= len(tokens):
                raise UsageError(f"flag {name} needs a value")
            i += 1
            value = tokens[i]
        if name in flags:
            raise UsageError(f"flag {name} given twice")
        flags[name] = value
        i += 1
    return flags


def parse_spec(argv: Sequence[str]) -> CommandSpec:
    argv = list(argv)
    if not argv:
        raise UsageError(f"expected a command, one of: {', '.join(COMMANDS)}")
    command = argv[0]
    if command in ("-h", "--help"):
        raise UsageError(_usage())
    if command not in COMMANDS:
        raise UsageError(f"unknown command {command!r}; "
                         f"expected one of: {', '.join(COMMANDS)}")
    flags = _collect_flags(argv[1:])

    for flag in _NEEDS[command]:
        dashed = {"word": "--w", "algebra": "--algebra", "kappa": "--kappa",
                  "weight": "--weight"}[flag]
        if dashed not in flags:
            raise UsageError(f"{command} requires {dashed}")

    try:
        algebra = LieType.parse(flags["--algebra"])
    except WkcharError as exc:
        raise UsageError(str(exc)) from exc
    kappa = _fraction(flags["--kappa"]) if "--kappa" in flags else None
    if kappa is not None and kappa == 0:
        raise UsageError("--kappa must be nonzero")
    weight = (_weight(flags["--weight"], algebra.rank)
              if "--weight" in flags else None)
    word = _word(flags["--w"]) if "--w" in flags else None
    try:
        order = int(flags.get("--order", "8"))
        delta_bound = (int(flags["--delta-bound"])
                       if "--delta-bound" in flags else None)
    except ValueError as exc:
        raise UsageError(f"malformed integer flag: {exc}") from exc
    if order < 0:
        raise UsageError("--order must be >= 0")
    reduction = flags.get("--reduction", "plus")
    if reduction not in ("plus", "minus"):
        raise UsageError("--reduction must be plus or minus")
    fmt = flags.get("--format", "text")
    if fmt not in ("text", "json"):
        raise UsageError("--format must be text or json")
    return CommandSpec(command=command, algebra=algebra, kappa=kappa,
                       weight=weight, word=word, order=order,
                       reduction=reduction, format=fmt, delta_bound=delta_bound)


def _usage() -> str:
    return (
        "wkchar <command> [flags]\n"
        f"commands: {', '.join(COMMANDS)}\n"
        "flags: --algebra A1|B3|... --kappa p/q --weight c1,c2,... --w 'i j k'\n"
        "       --order N --reduction plus|minus --format text|json --delta-bound N"
    )


# -- execution ----------------------------------------------------------------

def _affine_weight(rs: RootSystem, spec: CommandSpec) -> AffineWeight:
    return AffineWeight(spec.weight, spec.kappa - rs.dual_coxeter, Fraction(0))


def _context(rs: RootSystem, lam: AffineWeight, spec: CommandSpec) -> IntegralCoxeterContext:
    return IntegralCoxeterContext(rs, lam, spec.delta_bound)


def _series_record(series) -> dict:
    return {
        "offset": str(series.offset),
        "step": str(series.step),
        "coefficients": [str(c) for c in series.coefficients],
    }


def _root_text(rs: RootSystem, root: affine.AffineRealRoot) -> str:
    coords = rs.root_basis_coords(root.finite)
    parts = []
    for i, c in enumerate(coords, start=1):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        parts.append(("+" if c > 0 else "-") + f"{mag}a{i}")
    body = "".join(parts).lstrip("+") or "0"
    return f"{body}{root.degree:+d}d"


def execute(spec: CommandSpec) -> dict:
    rs = build_root_system(spec.algebra)
    out: dict = {"command": spec.command, "algebra": str(spec.algebra)}

    if spec.command == "central-charge":
        out["kappa"] = str(spec.kappa)
        out["central_charge"] = str(characters.central_charge(rs, spec.kappa))
        return out

    if spec.command == "conformal-weight":
        out["kappa"] = str(spec.kappa)
        out["weight"] = [str(c) for c in spec.weight]
        out["central_charge"] = str(characters.central_charge(rs, spec.kappa))
        out["delta"] = str(characters.conformal_weight(rs, spec.weight, spec.kappa))
        return out

    if spec.command == "verma-char":
        res = characters.verma_character(rs, spec.weight, spec.kappa, spec.order)
        out["kappa"] = str(spec.kappa)
        out["central_charge"] = str(res.central_charge)
        out["delta"] = str(res.conformal_weight)
        out.update(_series_record(res.series))
        return out

    if spec.command == "vacuum-char":
        series = characters.vacuum_algebra_character(rs, spec.order)
        out.update(_series_record(series))
        return out

    if spec.command == "irr-char":
        lam = _affine_weight(rs, spec)
        ctx = _context(rs, lam, spec)
        w = ctx.from_word(spec.word)
        fn = (characters.irreducible_character_plus if spec.reduction == "plus"
              else characters.irreducible_character_minus)
        res = fn(rs, lam, w, spec.order, ctx=ctx)
        out["kappa"] = str(spec.kappa)
        out["reduction"] = spec.reduction
        out["word"] = list(spec.word)
        out["central_charge"] = str(res.central_charge)
        out["delta"] = str(res.conformal_weight)
        out.update(_series_record(res.series))
        return out

    if spec.command == "integral-weyl":
        lam = _affine_weight(rs, spec)
        ctx = _context(rs, lam, spec)
        out["kappa"] = str(spec.kappa)
        out["slice_bound"] = ctx.slice_bound
        out["simple_roots"] = [_root_text(rs, beta) for beta in ctx.simple_roots]
        out["coxeter_matrix"] = [list(row) for row in ctx.coxeter_matrix]
        return out

    if spec.command == "kl-poly":
        lam = _affine_weight(rs, spec)
        ctx = _context(rs, lam, spec)
        w = ctx.from_word(spec.word)
        from .integral_weyl import IntegralWeylCoxeter
        from .kl import KLSession
        session = KLSession(IntegralWeylCoxeter(ctx))
        rows = []
        for y in ctx.interval_below(w.element):
            poly = session.kl_polynomial(y.element, w.element)
            rows.append({"y_word": list(y.word), "length": y.length,
                         "P": [str(c) for c in poly.coefficients]})
        out["kappa"] = str(spec.kappa)
        out["word"] = list(spec.word)
        out["table"] = rows
        return out

    if spec.command == "check":
        lam = _affine_weight(rs, spec)
        out["kappa"] = str(spec.kappa)
        out["weight"] = [str(c) for c in spec.weight]
        out["nondegenerate"] = integral_weyl.is_nondegenerate(rs, lam)
        out["cond_plus"] = integral_weyl.satisfies_cond_plus(rs, lam)
        out["antidominant"] = integral_weyl.is_antidominant(rs, lam)
        out["dom_plus"] = integral_weyl.domain_membership(rs, lam, "+")
        out["dom_minus"] = integral_weyl.domain_membership(rs, lam, "-")
        return out

    raise UsageError(f"unknown command {spec.command}")


# -- rendering ----------------------------------------------------------------

def _series_text(record: dict) -> str:
    offset = Fraction(record["offset"])
    step = Fraction(record["step"])
    coeffs = [Fraction(c) for c in record["coefficients"]]
    if all(c == 0 for c in coeffs):
        return "0"
    terms = []
    for k, a in enumerate(coeffs):
        if a == 0:
            continue
        e = k * step
        if e == 0:
            terms.append(str(a))
        else:
            base = "q" if e == 1 else f"q^{e}" if e.denominator == 1 else f"q^{{{e}}}"
            terms.append(base if a == 1 else f"{a}{base}")
    body = " + ".join(terms)
    if offset == 0:
        return body
    head = f"q^{offset}" if offset.denominator == 1 else f"q^{{{offset}}}"
    return f"{head}({body})"


def render(result: dict, format: str) -> str:
    if format == "json":
        return json.dumps(result, indent=None, separators=(", ", ": "))
    lines = []
    series_keys = {"offset", "step", "coefficients"}
    for key, value in result.items():
        if key in series_keys:
            continue
        if key == "table":
            for row in value:
                word = " ".join(str(i) for i in row["y_word"]) or "e"
                poly = " + ".join(
                    (f"{c}q^{k}" if k else str(c))
                    for k, c in enumerate(row["P"]) if c != "0") or "0"
                lines.append(f"P[{word}] = {poly}")
            continue
        if isinstance(value, list):
            value = ", ".join(str(v) for v in value)
        lines.append(f"{key} = {value}")
    if series_keys <= set(result):
        lines.append("series = " + _series_text(result))
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        spec = parse_spec(argv)
        result = execute(spec)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    except WkcharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(result, spec.format))
    return 0


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
