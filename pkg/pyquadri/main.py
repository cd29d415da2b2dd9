#!/usr/bin/env python3
#

import functools
import json
import logging
import sys

import click

from . import PyQuadri
from .bialgebra import QuadriBialgebra, check_bialgebra, check_q_equation, coboundary_comults, dual_bialgebra
from .constant import EXIT_ERROR, EXIT_FAIL, EXIT_PASS
from .dendriform import (
    OpAlgebra,
    check_dd_2cocycle,
    check_dd_bimodule,
    check_dendriform,
    check_manin_dd,
    dual_dd_bimodule,
)
from .document import Document, document_of, encode
from .operators import check_nijenhuis, check_o_operator, check_rota_baxter, rb_family
from .quadri import (
    check_invariant_form,
    check_manin_quadri,
    check_omega_2cocycle,
    check_quadri,
    check_quadri_bimodule,
    dual_quadri_bimodule,
    project_dd,
)
from .report import DocumentError, PreconditionError, QuadriError, Report
from .util import parse_entries, parse_mask, scalar_str, to_scalar

logging.basicConfig(level=logging.ERROR,
                    format='%(asctime)s:%(name)s:%(levelname)s: %(message)s')
_LOGGER = logging.getLogger('pyquadri')

opts = {
    "format": "json",
    "lanes": 1,
    "storage-dir": "./",
    "verbose": 0,
}


def _debug(args):
    _LOGGER.debug("{}".format(args))


def _vdebug(args):
    if opts["verbose"] > 2:
        _debug(args)


def _info(args):
    _LOGGER.info("{}".format(args))


def _fatal(args):
    click.echo("FATAL-ERROR:{}".format(args), err=True)
    sys.exit(EXIT_ERROR)


def _print(msg):
    click.echo("{}".format(msg))


def _print_report(report, split=None):
    if opts["format"] == "text":
        _print(report.to_text(split))
    else:
        _print(report.to_json())


def _finish(reports, split=None):
    """Print every report and exit 0 only when all passed."""
    for report in reports:
        _print_report(report, split)
    sys.exit(EXIT_PASS if all(report.passed for report in reports) else EXIT_FAIL)


def _guarded(func):
    """Map library misuse onto exit code 2."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except PreconditionError as e:
            if e.report is not None:
                _debug(e.report.to_text())
            _fatal(e)
        except (QuadriError, OSError, ValueError) as e:
            _fatal(e)
    return wrapper


def _load(path, *kinds):
    doc = Document.load(path)
    if kinds and doc.kind not in kinds:
        raise DocumentError("{}: expected a {} document, got {}".format(path, " or ".join(kinds), doc.kind))
    _vdebug("loaded {!r} from {}".format(doc, path))
    return doc


def _write(doc, out):
    if out is None:
        _print(doc.to_json())
    else:
        doc.save(out)
        _info("wrote {} document to {}".format(doc.kind, out))


def _session():
    return PyQuadri(lanes=opts["lanes"], storage_dir=opts["storage-dir"], verbose=opts["verbose"] > 2,
                    report_format=opts["format"])


@click.group()
@click.option('-f', '--format', 'report_format', default="json", show_default=True,
              type=click.Choice(['json', 'text'], case_sensitive=False),
              help="How reports are printed")
@click.option('-l', '--lanes', default=1, show_default=True, type=int,
              help="Worker lanes for searches and certification")
@click.option('-s', '--storage-dir',
              default="./", show_default='current dir',
              help="Where to keep the catalog")
@click.option("-v", "--verbose", count=True,
              help="Be chatty. More is more chatty!")
def cli(report_format, lanes, storage_dir, verbose):
    if report_format is not None:
        opts['format'] = report_format.lower()
    if lanes is not None:
        opts['lanes'] = lanes
    if storage_dir is not None:
        opts['storage-dir'] = storage_dir
    if verbose is not None:
        opts['verbose'] = verbose
        if verbose == 0:
            _LOGGER.setLevel(logging.ERROR)
        if verbose == 1:
            _LOGGER.setLevel(logging.INFO)
        if verbose > 1:
            _LOGGER.setLevel(logging.DEBUG)


# check <kind> ...

@cli.group()
def check():
    """Validity checks; exit 1 when any check fails."""


@check.command('dendriform')
@click.argument('files', nargs=-1, required=True, type=click.Path())
@_guarded
def check_dendriform_cmd(files):
    _finish([check_dendriform(_load(f, "dendriform").value) for f in files])


@check.command('quadri')
@click.argument('files', nargs=-1, required=True, type=click.Path())
@_guarded
def check_quadri_cmd(files):
    _finish([check_quadri(_load(f, "quadri").value) for f in files])


@check.command('bialgebra')
@click.argument('files', nargs=-1, required=True, type=click.Path())
@_guarded
def check_bialgebra_cmd(files):
    _finish([check_bialgebra(_load(f, "bialgebra").value) for f in files])


@check.command('bimodule')
@click.argument('algebra')
@click.argument('bimodule')
@_guarded
def check_bimodule_cmd(algebra, bimodule):
    alg = _load(algebra, "dendriform", "quadri").value
    mod = _load(bimodule, "bimodule").value
    checker = check_quadri_bimodule if alg.species == "quadri" else check_dd_bimodule
    _finish([checker(alg, mod)])


@check.command('invariant')
@click.argument('algebra')
@click.argument('form')
@_guarded
def check_invariant_cmd(algebra, form):
    _finish([check_invariant_form(_load(algebra, "quadri").value, _load(form, "form").value)])


@check.command('cocycle')
@click.argument('algebra')
@click.argument('form')
@_guarded
def check_cocycle_cmd(algebra, form):
    alg = _load(algebra, "dendriform", "quadri").value
    gram = _load(form, "form").value
    checker = check_omega_2cocycle if alg.species == "quadri" else check_dd_2cocycle
    _finish([checker(alg, gram)])


@check.command('manin')
@click.argument('file')
@click.option('--split', type=int, required=False,
              help="Dimension of A; default is half the algebra")
@_guarded
def check_manin_cmd(file, split):
    alg = _load(file, "dendriform", "quadri").value
    n = alg.dim // 2 if split is None else split
    checker = check_manin_quadri if alg.species == "quadri" else check_manin_dd
    _finish([checker(alg, n)], split=n)


# derive

@cli.command()
@click.argument('which', type=click.Choice(['vertical', 'horizontal', 'assoc', 'dual'], case_sensitive=False))
@click.argument('file')
@click.option('-o', '--output', required=False,
              help="Write the derived document here instead of printing it")
@_guarded
def derive(which, file, output):
    which = which.lower()
    if which in ("vertical", "horizontal"):
        doc = document_of(project_dd(_load(file, "quadri").value, which))
    elif which == "assoc":
        alg = _load(file, "dendriform", "quadri").value
        doc = document_of(OpAlgebra({"star": alg.star}))
    else:
        src = _load(file, "bialgebra", "bimodule")
        if src.kind == "bialgebra":
            doc = document_of(dual_bialgebra(src.value))
        elif src.value.species == "quadri":
            doc = document_of(dual_quadri_bimodule(src.value))
        else:
            doc = document_of(dual_dd_bimodule(src.value))
    _write(doc, output)


# enumerate

def _summary(result):
    return {
        "found": len(result),
        "examined": result.examined,
        "total": result.total,
        "coverage": scalar_str(result.coverage),
        "exhaustive": result.exhaustive,
    }


@cli.command('enumerate')
@click.argument('kind', type=click.Choice(['quadri', 'dendriform'], case_sensitive=False))
@click.option('--dim', type=int, required=True, help="Dimension of the algebras")
@click.option('--entries', default="-1,0,1", show_default=True, help="Coefficient set")
@click.option('--mask', required=False, help='Allowed positions, e.g. "se:0,0,1;se:1,1,1"')
@click.option('--max-nonzero', type=int, required=False, help="Most nonzero constants per candidate")
@click.option('--seed', type=int, default=0, show_default=True, help="Seed for sampling")
@click.option('--budget', type=int, default=100000, show_default=True, help="Largest space walked exhaustively")
@click.option('--strict/--no-strict', default=False, help="Fail instead of sampling")
@click.option('-o', '--output', required=False, help="Write the hits as a catalog here")
@_guarded
def enumerate_cmd(kind, dim, entries, mask, max_nonzero, seed, budget, strict, output):
    ar = _session()
    try:
        result = ar.enumerate(kind.lower(), dim, entries=parse_entries(entries), mask=parse_mask(mask),
                              max_nonzero=max_nonzero, seed=seed, budget=budget, strict=strict,
                              catalog=output is not None)
        if output is not None:
            with open(output, "w", encoding="utf-8") as f:
                f.write(ar.catalog.to_ndjson("{}/dim{}/".format(kind.lower(), dim)))
    finally:
        ar.stop()
    summary = _summary(result)
    summary["structures"] = [document_of(a).to_dict() for a in result]
    _print(json.dumps(summary, sort_keys=True, indent=2))


# qeq check | search

@cli.group()
def qeq():
    """Q-equation checks and searches."""


@qeq.command('check')
@click.argument('algebra')
@click.argument('tensor')
@_guarded
def qeq_check(algebra, tensor):
    _finish([check_q_equation(_load(algebra, "quadri").value, _load(tensor, "tensor").value)])


@qeq.command('search')
@click.argument('algebra')
@click.option('--entries', default="-1,0,1", show_default=True, help="Coefficient set")
@click.option('--mask', required=False, help='Free tensor entries, e.g. "0,1;0,2"')
@click.option('--seed', type=int, default=0, show_default=True, help="Seed for sampling")
@click.option('--budget', type=int, default=100000, show_default=True, help="Largest space walked exhaustively")
@click.option('--skew/--no-skew', default=True, help="Only skew-symmetric tensors")
@click.option('--nondegenerate/--any-rank', default=False, help="Only invertible tensors")
@click.option('-o', '--output', required=False, help="Write the solutions as a catalog here")
@_guarded
def qeq_search(algebra, entries, mask, seed, budget, skew, nondegenerate, output):
    q = _load(algebra, "quadri").value
    ar = _session()
    try:
        result = ar.search_q(q, entries=parse_entries(entries), mask=parse_mask(mask), skew=skew,
                             nondegenerate=nondegenerate, seed=seed, budget=budget, catalog=output is not None)
        if output is not None:
            with open(output, "w", encoding="utf-8") as f:
                f.write(ar.catalog.to_ndjson("tensor/dim{}/".format(q.dim)))
    finally:
        ar.stop()
    summary = _summary(result)
    summary["solutions"] = [encode(r) for r in result]
    _print(json.dumps(summary, sort_keys=True, indent=2))


# double

@cli.command()
@click.argument('algebra')
@click.argument('source')
@click.option('-o', '--output', required=False, help="Write the double as a bialgebra document here")
@_guarded
def double(algebra, source, output):
    q = _load(algebra, "quadri").value
    src = _load(source, "tensor", "bialgebra")
    if src.kind == "tensor":
        qb = QuadriBialgebra(q, coboundary_comults(q, src.value))
    else:
        qb = src.value
        if qb.algebra != q:
            raise DocumentError("bialgebra {} is not built on {}".format(source, algebra))
    ar = _session()
    try:
        d_alg, d_co, report = ar.certify_double(qb)
    finally:
        ar.stop()
    if output is not None:
        Document("bialgebra", QuadriBialgebra(d_alg, d_co)).save(output)
    _finish([report], split=q.dim)


# op rb-check | nij-check | o-check | family

@cli.group()
def op():
    """Rota-Baxter, Nijenhuis and O-operators."""


def _algebra_of(path, *kinds):
    """The algebra of a document, or of the bialgebra it holds."""
    doc = _load(path, "bialgebra", *kinds)
    return doc.value.algebra if doc.kind == "bialgebra" else doc.value


def _operator_algebra(path):
    return _algebra_of(path, "dendriform", "quadri", "associative")


@op.command('rb-check')
@click.argument('algebra')
@click.argument('operator')
@click.option('--lambda', 'weight', required=False, help="Weight; default is the document's or 0")
@_guarded
def op_rb_check(algebra, operator, weight):
    doc = _load(operator, "operator")
    if weight is None:
        weight = doc.weight if doc.weight is not None else 0
    _finish([check_rota_baxter(_operator_algebra(algebra), doc.value, to_scalar(weight))])


@op.command('nij-check')
@click.argument('algebra')
@click.argument('operator')
@_guarded
def op_nij_check(algebra, operator):
    _finish([check_nijenhuis(_operator_algebra(algebra), _load(operator, "operator").value)])


@op.command('o-check')
@click.argument('algebra')
@click.argument('bimodule')
@click.argument('operator')
@_guarded
def op_o_check(algebra, bimodule, operator):
    alg = _load(algebra, "dendriform", "quadri").value
    _finish([check_o_operator(alg.species, alg, _load(bimodule, "bimodule").value, _load(operator, "operator").value)])


@op.command('family')
@click.argument('algebra')
@click.argument('tensor')
@click.option('--kind', required=True, type=click.Choice(['F1', 'F2', 'F3', 'G1', 'G2', 'G3'], case_sensitive=False))
@click.option('--sign', default="+", type=click.Choice(['+', '-']), show_default=True)
@click.option('--lambda', 'weight', required=False, help="Weight; the G kinds fix it at -1")
@click.option('--k', required=False, help="k, or the hatted k of F2")
@click.option('--k1', required=False)
@click.option('--k2', required=False)
@click.option('-o', '--output', required=False, help="Write the operator document here")
@_guarded
def op_family(algebra, tensor, kind, sign, weight, k, k1, k2, output):
    qd = _algebra_of(algebra, "quadri")
    r = _load(tensor, "tensor").value
    params = {"lambda": weight, "k": k, "k1": k1, "k2": k2}
    p = rb_family(kind.upper(), sign, params, qd, r)
    lam = to_scalar(-1) if kind.upper().startswith("G") else to_scalar(weight or 0)
    if output is not None:
        Document("operator", p, lam).save(output)
    _finish([check_rota_baxter(qd, p, lam)], split=r.shape[0])


# report

@cli.command('report')
@click.argument('file')
@click.option('--split', type=int, required=False, help="Render indices from here on as e_k*")
@_guarded
def report_cmd(file, split):
    try:
        with open(file, "r", encoding="utf-8") as f:
            saved = Report.from_json(f.read())
    except (KeyError, TypeError, ZeroDivisionError) as e:
        raise DocumentError("{}: not a report ({})".format(file, e))
    _finish([saved], split=split)


def main_func():
    cli()


if __name__ == '__main__':
    cli()
