"""
CLI entry point for the Yokonuma-Hecke toolkit.

Normal forms, products and conversions of elements given as generator words
or JSON documents, the verification suites, the block decomposition of
E^_{r,n} and canonical basis tables.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or parse errors.
"""

import logging
import sys
from pathlib import Path

import click
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

ALGEBRAS = ["Hhat", "Y", "AH"]
SUITE_NAMES = ["relations-Y", "relations-Hhat", "iso-roundtrip", "tau-identities", "kl", "cellular"]


def _usage_error(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _parse_word(algebra: str, r: int, n: int, word: str):
    from src.algebras.idempotent import nf
    from src.algebras.iwahori import ah_nf
    from src.algebras.yokonuma import y_nf

    if algebra == "Hhat":
        return nf(r, n, word)
    if algebra == "Y":
        return y_nf(r, n, word)
    return ah_nf(n, word)


def _read_element(stream):
    from pydantic import ValidationError

    from src.models.documents import ElementDoc, doc_to_element

    try:
        return doc_to_element(ElementDoc.model_validate_json(stream.read()))
    except ValidationError as exc:
        _usage_error(f"invalid element document: {exc}")


def _load(algebra: str, r: int, n: int, word: str | None, stream):
    from src.errors import AlgebraError

    try:
        if stream is not None:
            return _read_element(stream)
        if word is None:
            _usage_error("give a generator word or --input FILE")
        return _parse_word(algebra, r, n, word)
    except AlgebraError as exc:
        _usage_error(str(exc))


def _emit(elem, as_json: bool):
    from src.models.documents import element_to_doc

    if as_json:
        click.echo(element_to_doc(elem).to_json())
    else:
        click.echo(str(elem))


def _write_xlsx(buffer, path: str):
    Path(path).write_bytes(buffer.getvalue())
    click.echo(f"Saved to {path}", err=True)


@click.group()
@click.version_option(version="0.1.0")
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr")
def cli(verbose):
    """Exact computations in affine Yokonuma-Hecke algebras."""
    from src.config import get_settings

    level = logging.DEBUG if verbose else get_settings().log_level
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@cli.command("nf")
@click.argument("word", required=False)
@click.option("--algebra", "-a", type=click.Choice(ALGEBRAS), default="Hhat", show_default=True)
@click.option("--r", "r", type=int, default=2, show_default=True)
@click.option("--n", "n", type=int, default=2, show_default=True)
@click.option("--input", "stream", type=click.File("r"), help="Element document (JSON); '-' reads stdin")
@click.option("--json/--text", "as_json", default=False, help="Output format")
def nf_command(word, algebra, r, n, stream, as_json):
    """Normal form of WORD, or re-normalize a document.

    Example: yhecke nf "g1 X2" --r 2 --n 2
    """
    _emit(_load(algebra, r, n, word, stream), as_json)


@cli.command()
@click.argument("left")
@click.argument("right")
@click.option("--algebra", "-a", type=click.Choice(ALGEBRAS), default="Hhat", show_default=True)
@click.option("--r", "r", type=int, default=2, show_default=True)
@click.option("--n", "n", type=int, default=2, show_default=True)
@click.option("--json/--text", "as_json", default=False)
def mul(left, right, algebra, r, n, as_json):
    """Product of two generator words, LEFT * RIGHT.

    Example: yhecke mul "t1" "h1" --algebra Y --r 3 --n 2
    """
    a = _load(algebra, r, n, left, None)
    b = _load(algebra, r, n, right, None)
    _emit(a * b, as_json)


@cli.command()
@click.argument("word", required=False)
@click.option("--to", "target", type=click.Choice(["E", "Hhat"]), required=True,
              help="E: apply Psi to an H^ element; Hhat: Phi of an E document, or the image of a Y word")
@click.option("--algebra", "-a", type=click.Choice(["Hhat", "Y"]), default="Hhat", show_default=True)
@click.option("--r", "r", type=int, default=2, show_default=True)
@click.option("--n", "n", type=int, default=2, show_default=True)
@click.option("--input", "stream", type=click.File("r"))
@click.option("--json/--text", "as_json", default=False)
def convert(word, target, algebra, r, n, stream, as_json):
    """Move an element across the isomorphisms Y -> H^ <-> E^.

    Example: yhecke convert "g1 X1" --to E
    """
    from src.algebras.idempotent import HhatElement
    from src.algebras.matrix_model import EElement, from_matrix_model, to_matrix_model
    from src.algebras.yokonuma import YElement, to_idempotent_presentation
    from src.errors import AlgebraError

    elem = _load(algebra, r, n, word, stream)
    try:
        if target == "E" and isinstance(elem, HhatElement):
            out = to_matrix_model(elem)
        elif target == "Hhat" and isinstance(elem, EElement):
            out = from_matrix_model(elem)
        elif target == "Hhat" and isinstance(elem, YElement):
            out = to_idempotent_presentation(elem)
        else:
            _usage_error(f"cannot convert {type(elem).__name__} to {target}")
    except AlgebraError as exc:
        _usage_error(str(exc))
    _emit(out, as_json)


@cli.command()
@click.argument("suite", type=click.Choice(SUITE_NAMES))
@click.option("--r", "r", type=int, default=2, show_default=True)
@click.option("--n", "n", type=int, default=2, show_default=True)
@click.option("--maxlen", type=int, default=2, show_default=True, help="Length bound for balls and intervals")
@click.option("--max-deg", type=int, default=1, show_default=True, help="Largest |X exponent| in monomial grids")
@click.option("--samples", type=int, default=None, help="Random samples (default from YHECKE_SAMPLES)")
@click.option("--seed", type=int, default=None, help="Random seed (default from YHECKE_SEED)")
@click.option("--guard", type=int, default=None, help="Override the enumeration (length) guard")
@click.option("--rank-guard", type=int, default=None, help="Override the largest r^n n! a suite accepts")
@click.option("--json/--text", "as_json", default=False)
@click.option("--xlsx", type=click.Path(dir_okay=False), default=None, help="Also write the report as a workbook")
def verify(suite, r, n, maxlen, max_deg, samples, seed, guard, rank_guard, as_json, xlsx):
    """Run a verification SUITE and exit nonzero on any failure.

    Example: yhecke verify iso-roundtrip --r 2 --n 2
    """
    from src.calculators.suites import run_suite
    from src.config import get_settings
    from src.errors import AlgebraError
    from src.generators.text_report import render_json, render_text

    settings = get_settings()
    try:
        result = run_suite(
            suite, r=r, n=n, max_length=maxlen, max_deg=max_deg,
            samples=settings.samples if samples is None else samples,
            seed=settings.seed if seed is None else seed,
            guard=guard, rank_guard=rank_guard,
        )
    except AlgebraError as exc:
        _usage_error(str(exc))

    click.echo(render_json(result) if as_json else render_text(result))
    if xlsx:
        from src.generators.excel_export import generate_excel_report
        _write_xlsx(generate_excel_report([result]), xlsx)
    sys.exit(0 if result.passed else 1)


@cli.command()
@click.option("--r", "r", type=int, default=2, show_default=True)
@click.option("--n", "n", type=int, default=2, show_default=True)
@click.option("--json/--text", "as_json", default=False)
@click.option("--xlsx", type=click.Path(dir_okay=False), default=None)
def blocks(r, n, as_json, xlsx):
    """Block decomposition of E^_{r,n} and the rank identity.

    Example: yhecke blocks --r 2 --n 3
    """
    import json

    from src.algebras.matrix_model import block_decompose, rank_identity
    from src.combinatorics.residues import format_residues
    from src.errors import AlgebraError
    from src.generators.text_report import format_table

    try:
        rows = block_decompose(r, n)
        total, expected = rank_identity(r, n)
    except AlgebraError as exc:
        _usage_error(str(exc))

    if as_json:
        click.echo(json.dumps({
            "r": r, "n": n,
            "blocks": [
                {"lambda0": list(row.lam0), "n_lambda": row.n_lambda, "sizes": list(row.sizes), "rank": row.rank}
                for row in rows
            ],
            "rank_sum": total, "expected": expected,
        }, indent=2))
    else:
        table = [["lambda0", "n_lambda", "sizes", "rank"]] + [
            [format_residues(row.lam0), str(row.n_lambda), format_residues(row.sizes), str(row.rank)]
            for row in rows
        ]
        click.echo(format_table(table))
        click.echo(f"\nsum n_lambda^2 prod n_i! = {total}; r^n n! = {expected}")
    if xlsx:
        from src.generators.excel_export import generate_table_workbook
        table = [["lambda0", "n_lambda", "sizes", "rank"]] + [
            [format_residues(row.lam0), row.n_lambda, format_residues(row.sizes), row.rank] for row in rows
        ]
        _write_xlsx(generate_table_workbook(f"blocks r={r} n={n}", table), xlsx)
    sys.exit(0 if total == expected else 1)


@cli.command()
@click.argument("element")
@click.option("--n", "n", type=int, default=2, show_default=True)
@click.option("--guard", type=int, default=None)
@click.option("--json/--text", "as_json", default=False)
def kl(element, n, guard, as_json):
    """Canonical basis element c_w for w given as a word like "s1*s0" or "t[1,0]*pi^-1".

    Example: yhecke kl "s1*s0*s1" --n 2
    """
    import json

    from src.algebras.canonical import kl_basis
    from src.combinatorics.affine_weyl import parse_ext
    from src.errors import AlgebraError
    from src.generators.text_report import format_table

    try:
        c_w = kl_basis(parse_ext(n, element), guard)
    except AlgebraError as exc:
        _usage_error(str(exc))

    if as_json:
        from src.models.documents import encode_coeff
        click.echo(json.dumps({
            "w": str(c_w.top),
            "terms": [{"y": str(y), "length": length, "coeff": encode_coeff(p)} for y, length, p in c_w.table()],
        }, indent=2))
    else:
        rows = [["y", "l(y)", "p(y,w)"]] + [[str(y), str(length), str(p)] for y, length, p in c_w.table()]
        click.echo(f"c_{c_w.top}:")
        click.echo(format_table(rows))


if __name__ == "__main__":
    cli()
