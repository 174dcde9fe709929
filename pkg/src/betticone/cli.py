"""Command-line front end.

All commands read and write the package's JSON sequence schema (rationals
are strings, never JSON numbers, so nothing is ever rounded):

    {"kind": "finite", "n": 3, "entries": ["1", "3", "3", "1"]}
    {"kind": "tail", "stab": 2, "head": ["1", "3"],
     "tail_even": "4", "tail_odd": "4"}

Exit codes: 0 success, 1 malformed input or usage error, 2 precondition
violation (e.g. a vector outside the requested cone, with the violated
functional named), 3 internal verification failure.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import hyper_fixed, hyper_total, pure, regular, verification
from .errors import (ConeInputError, InternalInconsistencyError,
                     MalformedInputError, NotInConeError)
from .hyper_fixed import MEMBERSHIP_CAVEAT, FixedConeParams
from .sequences import (BettiVector, TailPeriodicSequence, embed, rational_str,
                        sequence_from_json, sequence_to_json)


def _echo_json(payload) -> None:
    click.echo(json.dumps(payload))


def _load_sequence(input_path: str | None, inline: str | None):
    if (input_path is None) == (inline is None):
        raise click.UsageError("exactly one of --input and --inline is required")
    if input_path is not None:
        try:
            text = Path(input_path).read_text()
        except OSError as exc:
            raise MalformedInputError(f"cannot read {input_path}: {exc}") from exc
    else:
        text = inline
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON: {exc}") from exc
    return sequence_from_json(data)


def _finite(seq, n: int) -> BettiVector:
    if isinstance(seq, TailPeriodicSequence):
        raise ConeInputError(
            "this command needs a finite sequence (kind \"finite\")")
    if seq.n != n:
        raise ConeInputError(f"sequence has n={seq.n}, but --n {n} was given")
    return seq


def _tail(seq) -> TailPeriodicSequence:
    if isinstance(seq, BettiVector):
        return embed(seq)
    return seq


def _violations_json(violations) -> list[dict]:
    return [{"constraint": name, "value": rational_str(value)}
            for name, value in violations]


input_option = click.option("--input", "input_path", type=str, default=None,
                            help="Path of a JSON sequence file.")
inline_option = click.option("--inline", type=str, default=None,
                             help="Inline JSON sequence.")


@click.group()
def cli():
    """Exact cone computations for shapes of minimal free resolutions."""


@cli.command()
@click.option("--degrees", required=True,
              help="Comma-separated strictly increasing integers, e.g. 0,1,3.")
@click.option("--n", type=int, required=True, help="Ambient homological length.")
@click.option("--normalize-at", type=int, default=None,
              help="Scale the result so this entry becomes 1.")
def hk(degrees: str, n: int, normalize_at: int | None):
    """Shape vector of the pure resolution for a degree sequence."""
    try:
        parsed = tuple(int(part) for part in degrees.split(","))
    except ValueError as exc:
        raise MalformedInputError(f"invalid --degrees {degrees!r}") from exc
    v = pure.herzog_kuhl(pure.DegreeSequence(parsed), n)
    if normalize_at is not None:
        v = pure.normalize_at(v, normalize_at)
    _echo_json(sequence_to_json(v))


@cli.command()
@click.option("--j", type=int, required=True, help="Which two-term ray to approach.")
@click.option("--t", type=int, required=True, help="Family parameter (>= 2).")
@click.option("--n", type=int, required=True, help="Ambient homological length.")
def limit(j: int, t: int, n: int):
    """Exact max-norm gap between the normalized pure shape and its limit ray."""
    click.echo(rational_str(pure.limit_gap(j, t, n)))


@cli.command()
@input_option
@inline_option
@click.option("--n", type=int, default=None,
              help="Optional check that the input has this ambient length.")
def phi(input_path, inline, n):
    """Even/odd prefix-sum transform of a finite sequence."""
    v = _load_sequence(input_path, inline)
    if isinstance(v, TailPeriodicSequence):
        raise ConeInputError("the transform applies to finite sequences")
    if n is not None and v.n != n:
        raise ConeInputError(f"sequence has n={v.n}, but --n {n} was given")
    _echo_json(sequence_to_json(hyper_total.phi(v)))


@cli.command()
@input_option
@inline_option
@click.option("--cone", type=click.Choice(["regular", "total", "fixed"]),
              required=True)
@click.option("--n", type=int, required=True)
@click.option("--mult", type=int, default=None,
              help="Multiplicity d (required for --cone fixed).")
def member(input_path, inline, cone, n, mult):
    """Cone membership with the violated constraints named."""
    seq = _load_sequence(input_path, inline)
    payload = {"cone": cone, "n": n}
    if cone == "regular":
        v = _finite(seq, n)
        violations = regular.facet_violations(v)
        payload["member"] = not violations
        payload["violations"] = _violations_json(violations)
    elif cone == "total":
        report = hyper_total.facets_check(_tail(seq), n)
        payload["member"] = report.ok
        payload["violations"] = _violations_json(report.violations)
    else:
        if mult is None:
            raise click.UsageError("--cone fixed requires --mult")
        report = hyper_fixed.member(_tail(seq), FixedConeParams(n, mult))
        payload["multiplicity"] = mult
        payload["member"] = report.ok
        payload["violations"] = _violations_json(report.violations)
        payload["caveat"] = MEMBERSHIP_CAVEAT
    _echo_json(payload)


def _hyper_decomposition_json(dec) -> dict:
    return {
        "triangulation": dec.label,
        "simplex": [dec.names[k] for k in dec.simplex_used],
        "coefficients": {name: rational_str(c)
                         for name, c in zip(dec.names, dec.coefficients)},
    }


@cli.command()
@input_option
@inline_option
@click.option("--cone", type=click.Choice(["regular", "total", "fixed"]),
              required=True)
@click.option("--n", type=int, required=True)
@click.option("--mult", type=int, default=None)
@click.option("--triangulation", type=click.Choice(["1", "2"]), default="1",
              help="1 = omit_odd, 2 = omit_even (total/fixed cones, n >= 3).")
def decompose(input_path, inline, cone, n, mult, triangulation):
    """Nonnegative ray-coefficient certificate for a member vector."""
    seq = _load_sequence(input_path, inline)
    which = int(triangulation)
    payload = {"cone": cone, "n": n}
    if cone == "regular":
        dec = regular.decompose(_finite(seq, n))
        payload["coefficients"] = {
            name: rational_str(c)
            for name, c in zip(regular.ray_names(n), dec.a)}
    elif cone == "total":
        dec = hyper_total.decompose(_tail(seq), n, which)
        payload.update(_hyper_decomposition_json(dec))
    else:
        if mult is None:
            raise click.UsageError("--cone fixed requires --mult")
        dec = hyper_fixed.decompose(_tail(seq), FixedConeParams(n, mult), which)
        payload["multiplicity"] = mult
        payload.update(_hyper_decomposition_json(dec))
        payload["caveat"] = MEMBERSHIP_CAVEAT
    _echo_json(payload)


@cli.command()
@input_option
@inline_option
@click.option("--n", type=int, required=True)
def classify(input_path, inline, n):
    """Shape classification over the regular cone: closure membership,
    realizability, depth, and the Cohen-Macaulay coefficient criterion."""
    v = _finite(_load_sequence(input_path, inline), n)
    sc = regular.classify(v)
    payload = {
        "n": n,
        "member_of_closure": sc.member_of_closure,
        "realizable": sc.realizable,
        "cm_choice_exists": sc.cm_choice_exists,
        "decomposition": {
            "a_minus_1": rational_str(sc.decomposition.a_minus_1),
            "a": [rational_str(sc.decomposition.coefficient(i)) for i in range(n)],
        },
    }
    if sc.depth is not None:
        payload["depth"] = sc.depth
    _echo_json(payload)


@cli.command()
@input_option
@inline_option
@click.option("--n", type=int, required=True)
def split(input_path, inline, n):
    """Write a total-cone member as transform image plus finite part."""
    w = _tail(_load_sequence(input_path, inline))
    v1, v2 = hyper_total.split(w, n)
    _echo_json({"n": n, "v1": sequence_to_json(v1), "v2": sequence_to_json(v2)})


@cli.command()
@click.option("--n-max", type=int, default=8, show_default=True)
@click.option("--mult-max", type=int, default=6, show_default=True)
@click.pass_context
def verify(ctx, n_max: int, mult_max: int):
    """Run the oracle sweep re-deriving every rays/facets equivalence."""
    results = verification.run_sweep(n_max, mult_max)
    failures = 0
    for result in results:
        status = "ok" if result.ok else "FAIL"
        suffix = f"  [{result.detail}]" if result.detail else ""
        click.echo(f"{status:4} {result.name}{suffix}")
        failures += 0 if result.ok else 1
    click.echo(f"{len(results) - failures}/{len(results)} checks passed")
    if failures:
        raise InternalInconsistencyError(f"{failures} oracle checks failed")


@cli.command()
@input_option
@inline_option
@click.option("--len", "length", type=int, required=True,
              help="Number of leading entries to emit.")
def plot(input_path, inline, length):
    """CSV rows `index,approx,exact` for external plotting of a shape."""
    seq = _load_sequence(input_path, inline)
    if length < 1:
        raise ConeInputError("--len must be at least 1")
    if isinstance(seq, BettiVector):
        entries = [seq[i] if i <= seq.n else Fraction(0) for i in range(length)]
    else:
        entries = list(seq.prefix(length))
    click.echo("index,approx,exact")
    for i, value in enumerate(entries):
        click.echo(f"{i},{float(value):.12g},{rational_str(value)}")


def main(argv=None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, prog_name="betticone", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 1
    except MalformedInputError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except NotInConeError as exc:
        click.echo(f"error: {exc}", err=True)
        for name, value in exc.violations:
            click.echo(f"  violated: {name} = {rational_str(value)}", err=True)
        return 2
    except ConeInputError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except InternalInconsistencyError as exc:
        click.echo(f"internal verification failure: {exc}", err=True)
        return 3
    except click.Abort:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
