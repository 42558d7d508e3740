#
# File: cli.py
# Version: 1.3.0
#
# Description: Command-line front end of frobkit. Builds rings and ideals from
#              ideal files or from family parameters, runs one operation or
#              certificate check, and writes a JSON report with a stable key
#              order. Only the 'runtime' block varies between identical runs.
#
#              Exit codes: 0 established / witness-found / result-computed,
#                          2 inconclusive or refuted,
#                          1 error (report carries {"error": {code, message}}).
#
# Changelog:
# - v1.3.0: --check-remark52 is the closed-form check flag (--check-closed-form
#           stays as an alias); fedder residual validates --n and --s.
# - v1.2.0: --archive stores every report in an SQLite archive.
# - v1.1.0: glassbrenner and fedder accept determinantal and link families.
# - v1.0.0: Initial version.
#
import argparse
import json
import logging
import sys
import time

import psutil

from errors import ToolkitError, UsageError
from prime_field import PrimeField
from config_loader import ToolkitSettings
from poly_text import read_ideal_file, format_polynomial, format_ideal_file, parse_polynomial
from ideal_ops import Ideal, bracket_power, colon, intersect, height, dimension
from determinantal import GenericMatrix, det_ideal, maximal_minors, staircase_minors, determinantal_generic_link
from linkage import (generic_link, generic_residual_intersection, maximal_ideal_link, beta_sequence,
                     link_regular_sequence_a)
import fcriteria
from fcriteria import (fedder_fpure, fedder_ci_fast, glassbrenner_witness, lemma_check_det,
                       lemma_check_residual, lemma_check_genlink)
from report_archive import ReportArchive

__version__ = "1.3.0"

TOOLKIT = "frobkit"

RESULT_COMPUTED = "result-computed"
SUCCESS_VERDICTS = (fcriteria.ESTABLISHED, fcriteria.WITNESS_FOUND, RESULT_COMPUTED)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2

COMMANDS = ("gb", "colon", "intersect", "bracket", "height", "det-ideal", "genlink", "resint",
            "fedder", "glassbrenner", "verify-lemma")
LEMMAS = ("det", "residual", "genlink")
FAMILIES = ("file", "det", "residual", "genlink")


class JobSpec:
    """
    One CLI job: the command, its parameters and the caps it runs under.
    Parameter ranges are validated before any computation.
    """
    FIELDS = ("command", "lemma", "family", "p", "t", "n", "s", "e", "order", "input", "second",
              "element", "output", "ideal_out", "degree_guard", "term_cap", "workers", "config",
              "archive", "timings", "det", "maximal", "check_closed_form", "ci")

    def __init__(self, command, **params):
        if command not in COMMANDS:
            raise UsageError(f"Unknown command '{command}'.")
        self.command = command
        for name in self.FIELDS[1:]:
            setattr(self, name, params.get(name))
        if self.timings is None:
            self.timings = True
        if self.family is None:
            self.family = "file"

    @classmethod
    def from_args(cls, args):
        params = {name: getattr(args, name, None) for name in cls.FIELDS[1:]}
        params["timings"] = not getattr(args, "no_timings", False)
        return cls(args.command, **params)

    def overrides(self):
        return {"degree_guard": self.degree_guard, "term_cap": self.term_cap, "workers": self.workers}

    def _positive(self, name):
        value = getattr(self, name)
        if value is None:
            raise UsageError(f"'{self.command}' needs --{name}.")
        if value < 1:
            raise UsageError(f"--{name} must be positive, got {value}.")
        return value

    def validate(self):
        if self.p is not None:
            PrimeField(self.p)
        if self.e is not None and self.e < 1:
            raise UsageError(f"--e must be at least 1, got {self.e}.")
        if self.order is not None and self.order not in ("lex", "grevlex"):
            raise UsageError(f"--order must be lex or grevlex, got '{self.order}'.")

        cmd = self.command
        if cmd in ("gb", "bracket", "height") or (cmd in ("fedder", "glassbrenner") and self.family == "file"):
            if not self.input:
                raise UsageError(f"'{cmd}' needs --input.")
        if cmd in ("colon", "intersect") and not (self.input and self.second):
            raise UsageError(f"'{cmd}' needs --input and --second.")
        if cmd == "glassbrenner" and self.family == "file" and not self.element:
            raise UsageError("'glassbrenner' on a file needs --element.")
        if cmd == "det-ideal" or (cmd == "genlink" and self.det) or \
                (cmd in ("fedder", "glassbrenner") and self.family in ("det", "genlink")):
            t, n = self._positive("t"), self._positive("n")
            if t > n:
                raise UsageError(f"Need t <= n, got t={t}, n={n}.")
        if (cmd == "genlink" and self.maximal) or (cmd == "resint" and self.maximal):
            self._positive("n")
        if cmd == "resint":
            self._positive("s")
            if not (self.maximal or self.input):
                raise UsageError("'resint' needs --maximal or --input.")
        if cmd == "genlink" and not (self.det or self.maximal or self.input):
            raise UsageError("'genlink' needs --det, --maximal or --input.")
        if cmd in ("fedder", "glassbrenner") and self.family == "residual":
            n, s = self._positive("n"), self._positive("s")
            if s < n:
                raise UsageError(f"Need s >= n, got n={n}, s={s}.")
        if cmd == "verify-lemma":
            if self.lemma not in LEMMAS:
                raise UsageError(f"verify-lemma needs one of {', '.join(LEMMAS)}.")
            if self.lemma == "residual":
                self._positive("n")
                self._positive("s")
            else:
                self._positive("t")
                self._positive("n")
        return self

    def inputs(self):
        """The parameters echoed into the report (unset ones left out)."""
        keys = ("lemma", "family", "p", "t", "n", "s", "e", "order", "input", "second", "element",
                "det", "maximal", "check_closed_form", "ci")
        echoed = {}
        for k in keys:
            v = getattr(self, k)
            if v is None or v is False:
                continue
            if k == "family" and self.command not in ("fedder", "glassbrenner"):
                continue
            echoed[k] = v
        return echoed


# --- Helpers ---

def _p(job):
    return job.p if job.p is not None else 2


def _e(job, settings):
    return job.e if job.e is not None else settings.default_e


def load_ideal(path, job=None):
    """Reads an ideal file; --p, when given, must match its header."""
    ring, gens = read_ideal_file(path)
    if job is not None and job.p is not None and job.p != ring.p:
        raise UsageError(f"--p {job.p} disagrees with p={ring.p} in {path}.")
    return ring, Ideal(ring, gens)


def parse_ideal_file(path):
    """(PolyRing, Ideal) from an ideal file."""
    return load_ideal(path)


def _texts(polys):
    return [format_polynomial(g) for g in polys]


def _canonical(ideal):
    """Generators of the reduced Groebner basis (working order), for reports."""
    return _texts(ideal.groebner().generators)


def _write_ideal(job, ideal):
    if job.ideal_out:
        with open(job.ideal_out, "w", encoding="utf-8") as handle:
            handle.write(format_ideal_file(ideal.ring, ideal.generators))
        logging.info(f"Wrote ideal file {job.ideal_out}")


def _ring_info(ring):
    return {"p": ring.p, "variables": [str(v) for v in ring.variables], "order": ring.default_order.kind}


# --- Command handlers: each returns (verdict, body dict) ---

def _cmd_gb(job, settings):
    ring, ideal = load_ideal(job.input, job)
    order = ring.order(job.order) if job.order else ring.default_order
    basis = ideal.groebner(order)
    _write_ideal(job, Ideal(ring, basis.generators))
    return RESULT_COMPUTED, {"ring": _ring_info(ring), "order": order.kind, "basis": _texts(basis.generators)}


def _two_ideals(job):
    ring, first = load_ideal(job.input, job)
    ring2, second = load_ideal(job.second, job)
    if ring2 != ring:
        raise UsageError("--input and --second must declare the same p and variables.")
    return ring, first, Ideal(ring, second.generators)


def _cmd_colon(job, settings):
    ring, first, second = _two_ideals(job)
    result = colon(first, second)
    _write_ideal(job, result)
    return RESULT_COMPUTED, {"ring": _ring_info(ring), "ideal": _canonical(result)}


def _cmd_intersect(job, settings):
    ring, first, second = _two_ideals(job)
    result = intersect(first, second)
    _write_ideal(job, result)
    return RESULT_COMPUTED, {"ring": _ring_info(ring), "ideal": _canonical(result)}


def _cmd_bracket(job, settings):
    ring, ideal = load_ideal(job.input, job)
    q = ring.p ** _e(job, settings)
    result = bracket_power(ideal, q)
    _write_ideal(job, result)
    return RESULT_COMPUTED, {"ring": _ring_info(ring), "q": q, "ideal": _texts(result.generators)}


def _cmd_height(job, settings):
    ring, ideal = load_ideal(job.input, job)
    return RESULT_COMPUTED, {"ring": _ring_info(ring), "height": height(ideal), "dimension": dimension(ideal)}


def _cmd_det_ideal(job, settings):
    matrix = GenericMatrix.generic(_p(job), job.t, job.n)
    ideal = det_ideal(matrix, job.t)
    _write_ideal(job, ideal)
    return RESULT_COMPUTED, {"ring": _ring_info(matrix.ring), "generators": _texts(ideal.generators),
                             "count": len(ideal.generators)}


def _link_body(link, job):
    body = {"shape": link.shape(), "a": _texts(link.a_generators),
            "a_regular_sequence": link_regular_sequence_a(link), "assertions": list(link.assertions)}
    verdict = RESULT_COMPUTED
    if job.check_closed_form:
        if not link.is_maximal_ideal_link() or link.rows < link.generator_count:
            raise UsageError("--check-remark52 applies to links of the maximal ideal only.")
        J = link.link_ideal(cross_check=True)
        body["J"] = _canonical(J)
        body["closed_form_equals_colon"] = link.cross_checked
        body["height_J"] = height(J)
        if not link.cross_checked or body["height_J"] != link.rows:
            verdict = fcriteria.REFUTED
    return verdict, body


def _cmd_genlink(job, settings):
    if job.det:
        link = determinantal_generic_link(job.t, job.n, _p(job))
    elif job.maximal:
        link = maximal_ideal_link(job.n, job.n, _p(job))
    else:
        _, ideal = load_ideal(job.input, job)
        link = generic_link(ideal)
    return _link_body(link, job)


def _cmd_resint(job, settings):
    if job.maximal:
        link = maximal_ideal_link(job.n, job.s, _p(job))
    else:
        _, ideal = load_ideal(job.input, job)
        link = generic_residual_intersection(ideal, job.s)
    return _link_body(link, job)


def _certificate_body(cert):
    return cert.verdict, {"certificate": cert.to_dict()}


def _cmd_fedder(job, settings):
    e = _e(job, settings)
    if job.family == "det":
        matrix = GenericMatrix.generic(_p(job), job.t, job.n)
        cert = fedder_fpure(det_ideal(matrix, job.t), e=e, subideal=staircase_minors(matrix))
    elif job.family == "genlink":
        cert = fedder_fpure(determinantal_generic_link(job.t, job.n, _p(job)), e=e)
    elif job.family == "residual":
        cert = fedder_fpure(maximal_ideal_link(job.n, job.s, _p(job)), e=e)
    else:
        _, ideal = load_ideal(job.input, job)
        if job.ci:
            cert = fedder_ci_fast(ideal.generators)
        else:
            cert = fedder_fpure(ideal, e=e)
    return _certificate_body(cert)


def _cmd_glassbrenner(job, settings):
    e = _e(job, settings)
    p = _p(job)
    if job.family == "det":
        matrix = GenericMatrix.generic(p, job.t, job.n, order="lex")
        ideal = Ideal(matrix.ring, maximal_minors(matrix))
        prefer = fcriteria.determinantal_closed_form(matrix.ring, job.t, job.n, p) if e == 1 else None
        cert = glassbrenner_witness(ideal, matrix.entry(1, job.n), e=e, shortcut=staircase_minors(matrix),
                                    prefer=prefer)
    elif job.family == "genlink":
        link = determinantal_generic_link(job.t, job.n, p)
        if job.t == 1:
            cert = glassbrenner_witness(link, link.ring.var("x[1,1]"), e=e,
                                        shortcut=fcriteria.genlink_beta_shortcut(link, job.n, p))
        else:
            prefer = fcriteria.genlink_closed_form(link, job.t, job.n, p) if e == 1 else None
            cert = glassbrenner_witness(link, link.ring.var(f"x[1,{job.n}]"), e=e, prefer=prefer)
    elif job.family == "residual":
        link = maximal_ideal_link(job.n, job.s, p)
        shortcut = beta_sequence(job.n, job.s, p, presentation=link) if job.n > 1 else None
        prefer = fcriteria.residual_closed_form(link.ring, job.n, job.s, p) if e == 1 and job.n > 1 else None
        cert = glassbrenner_witness(link, link.ring.var("x[1]"), e=e, shortcut=shortcut,
                                    prefer=prefer)
    else:
        ring, ideal = load_ideal(job.input, job)
        cert = glassbrenner_witness(ideal, parse_polynomial(ring, job.element), e=e)
    return _certificate_body(cert)


def _cmd_verify_lemma(job, settings):
    p = _p(job)
    if job.lemma == "det":
        cert = lemma_check_det(job.t, job.n, p)
    elif job.lemma == "residual":
        cert = lemma_check_residual(job.n, job.s, p)
    else:
        cert = lemma_check_genlink(job.t, job.n, p)
    return _certificate_body(cert)


HANDLERS = {
    "gb": _cmd_gb,
    "colon": _cmd_colon,
    "intersect": _cmd_intersect,
    "bracket": _cmd_bracket,
    "height": _cmd_height,
    "det-ideal": _cmd_det_ideal,
    "genlink": _cmd_genlink,
    "resint": _cmd_resint,
    "fedder": _cmd_fedder,
    "glassbrenner": _cmd_glassbrenner,
    "verify-lemma": _cmd_verify_lemma,
}


def exit_code_for(verdict):
    return EXIT_OK if verdict in SUCCESS_VERDICTS else EXIT_NEGATIVE


def run(job, settings=None):
    """
    Runs one job.

    Returns:
        tuple: (report dict, exit code)
    """
    started = time.perf_counter()
    report = {"toolkit": TOOLKIT, "toolkit_version": __version__, "command": job.command}
    try:
        job.validate()
        report["inputs"] = job.inputs()
        settings = settings or ToolkitSettings.load(job.config, job.overrides())
        settings.apply()
        verdict, body = HANDLERS[job.command](job, settings)
        report["verdict"] = verdict
        report.update(body)
        code = exit_code_for(verdict)
    except ToolkitError as e:
        logging.error(f"{job.command} failed: [{e.code}] {e.message}")
        report["error"] = e.to_dict()
        code = EXIT_ERROR
    except OSError as e:
        logging.error(f"{job.command} failed: {e}")
        report["error"] = {"code": UsageError.code, "message": str(e)}
        code = EXIT_ERROR
    if job.timings:
        report["runtime"] = {
            "wall_seconds": round(time.perf_counter() - started, 6),
            "rss_bytes": psutil.Process().memory_info().rss,
        }
    return report, code


def render(report, indent=2):
    return json.dumps(report, indent=indent, ensure_ascii=False) + "\n"


# --- Argument parsing ---

def _add_common(sub):
    sub.add_argument("--p", type=int, help="Prime characteristic (default 2 for generated families).")
    sub.add_argument("--e", type=int, help="Frobenius exponent (q = p^e).")
    sub.add_argument("--order", choices=["lex", "grevlex"], help="Monomial order override.")
    sub.add_argument("--output", help="Write the report here instead of stdout.")
    sub.add_argument("--ideal-out", dest="ideal_out", help="Also write the resulting ideal as an ideal file.")
    sub.add_argument("--degree-guard", dest="degree_guard", type=int, help="Groebner degree guard.")
    sub.add_argument("--term-cap", dest="term_cap", type=int, help="Term cap for explicit expansions.")
    sub.add_argument("--workers", type=int, help="Threads for S-pair reduction.")
    sub.add_argument("--config", help="Configuration .ini file.")
    sub.add_argument("--archive", help="SQLite file that archives the report.")
    sub.add_argument("--no-timings", dest="no_timings", action="store_true", help="Omit the runtime block.")
    sub.add_argument("--t", type=int, help="Rows of the generic matrix X.")
    sub.add_argument("--n", type=int, help="Columns of X, or number of variables.")
    sub.add_argument("--s", type=int, help="Rows of U for residual intersections.")


def build_parser():
    parser = argparse.ArgumentParser(prog="frobkit", description="Exact F-singularity certificates over F_p.")
    parser.add_argument("--version", action="version", version=f"frobkit {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    for name, text in (("gb", "Reduced Groebner basis of an ideal file."),
                       ("bracket", "Frobenius bracket power I^[p^e]."),
                       ("height", "Height and dimension of an ideal.")):
        sub = subs.add_parser(name, help=text)
        _add_common(sub)
        sub.add_argument("--input", required=True, help="Ideal file.")

    for name, text in (("colon", "Colon ideal I : J."), ("intersect", "Intersection I ∩ J.")):
        sub = subs.add_parser(name, help=text)
        _add_common(sub)
        sub.add_argument("--input", required=True, help="Ideal file for I.")
        sub.add_argument("--second", required=True, help="Ideal file for J.")

    sub = subs.add_parser("det-ideal", help="Maximal minors of a generic t x n matrix.")
    _add_common(sub)

    for name, text in (("genlink", "Generic link."), ("resint", "Generic residual intersection.")):
        sub = subs.add_parser(name, help=text)
        _add_common(sub)
        sub.add_argument("--input", help="Ideal file for I.")
        sub.add_argument("--maximal", action="store_true", help="I = (x[1], ..., x[n]).")
        sub.add_argument("--check-remark52", "--check-closed-form", dest="check_closed_form", action="store_true",
                         help="Compare a + I_n(U) with the colon a : m and check height(J).")
        if name == "genlink":
            sub.add_argument("--det", action="store_true", help="I = I_t(X) with its maximal minors.")

    sub = subs.add_parser("fedder", help="Fedder's F-purity criterion.")
    _add_common(sub)
    sub.add_argument("family", nargs="?", choices=FAMILIES, default="file")
    sub.add_argument("--input", help="Ideal file (family 'file').")
    sub.add_argument("--ci", action="store_true", help="Generators form a complete intersection.")

    sub = subs.add_parser("glassbrenner", help="Glassbrenner witness condition.")
    _add_common(sub)
    sub.add_argument("family", nargs="?", choices=FAMILIES, default="file")
    sub.add_argument("--input", help="Ideal file (family 'file').")
    sub.add_argument("--element", help="The element s, in the polynomial grammar (family 'file').")

    sub = subs.add_parser("verify-lemma", help="Initial-monomial lemma checks.")
    _add_common(sub)
    sub.add_argument("lemma", choices=LEMMAS)
    return parser


def main(argv=None):
    logging.basicConfig(
        level=logging.WARNING,
        format='%(asctime)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s',
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)
    job = JobSpec.from_args(args)

    settings = None
    try:
        settings = ToolkitSettings.load(job.config, job.overrides())
        logging.getLogger().setLevel(settings.log_level.upper())
    except (ToolkitError, ValueError) as e:
        logging.error(f"Settings could not be loaded: {e}")

    report, code = run(job, settings)
    text = render(report, settings.indent if settings else 2)
    if job.output:
        with open(job.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)

    if job.archive:
        ReportArchive(job.archive).record(job.command, report, code)
    return code


if __name__ == "__main__":
    sys.exit(main())
