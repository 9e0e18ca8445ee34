"""Command-line front end.

Exit codes: 0 all checks pass, 1 a verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import __version__
from .adic import (
    Verdict,
    check_theorem1,
    check_theorem2,
    gcd_divisibility_check,
    raa_synthesize,
    two_adic_complexity,
)
from .circulant import MAX_N, match_closed_form
from .cyclotomy import build_partition
from .numtheory import ParamError, make_params
from .sequence import autocorrelation_spectrum, generate, linear_complexity
from .spectra import (
    det_closed_form,
    gauss_periods,
    lemma1_residuals,
    lemma2_check,
    spectrum_residual,
    spectrum_table,
    tolerance,
)

COMMANDS = ("validate", "generate", "analyze", "spectrum", "det", "table", "raa")
TABLE_PAIRS = ((5, 3), (5, 7), (5, 11), (13, 11), (13, 23), (17, 11), (17, 19), (17, 23), (17, 31), (17, 43))
CSV_HEADER = ("p", "q", "phi2", "lower_bound", "maximal", "matched_sign")


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    q: int | None = None
    g_override: int | None = None
    strict: bool = True
    output_format: str = "json"
    output_path: str | None = None
    pairs: tuple[tuple[int, int], ...] = TABLE_PAIRS
    bits: int | None = None
    det_limit: int = MAX_N
    partition: bool = False

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.command != "table" and (self.p is None or self.q is None):
            raise ValueError(f"{self.command} needs --p and --q")
        if self.output_format == "csv" and self.command != "table":
            raise ValueError("--format csv is only valid for table")
        if self.output_format == "raw" and self.command != "generate":
            raise ValueError("--format raw is only valid for generate")


def _cx(z: complex) -> list[float]:
    return [z.real, z.imag]


def _verdict(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


def _envelope(params, report, verdicts) -> dict:
    return {
        "params": params.as_dict() if params is not None else None,
        "report": report,
        "verdicts": {k: v.value for k, v in verdicts.items()},
        "version": __version__,
    }


def _params(cfg: RunConfig, p: int | None = None, q: int | None = None):
    return make_params(cfg.p if p is None else p, cfg.q if q is None else q, strict=cfg.strict, g=cfg.g_override)


def _cmd_validate(cfg: RunConfig):
    params = _params(cfg)
    report = {"partition": build_partition(params).as_dict()} if cfg.partition else {}
    return _envelope(params, report, {})


def _cmd_generate(cfg: RunConfig):
    seq = generate(build_partition(_params(cfg)))
    if cfg.output_format == "raw":
        return seq.bitstring
    return _envelope(seq.params, {"bits": seq.bitstring, "weight": sum(seq.bits)}, {})


def _cmd_analyze(cfg: RunConfig):
    seq = generate(build_partition(_params(cfg)))
    rep = two_adic_complexity(seq)
    report = rep.as_dict()
    report["linear_complexity"] = linear_complexity(seq)
    report["autocorrelation"] = {str(k): v for k, v in autocorrelation_spectrum(seq).items()}
    verdicts = {
        "theorem1": check_theorem1(rep),
        "theorem2": check_theorem2(rep),
    }
    return _envelope(seq.params, report, verdicts)


def _cmd_spectrum(cfg: RunConfig):
    part = build_partition(_params(cfg))
    seq = generate(part)
    gp = gauss_periods(part)
    tol = tolerance(part.N)
    residual = spectrum_residual(part, seq, gp)
    l1 = lemma1_residuals(gp)
    verdicts = {
        "lemma1": _verdict(max(l1.values()) < tol),
        "lemma5": _verdict(residual < tol),
    }
    report = {
        "gauss_periods": {
            "eta0": _cx(gp.eta0), "eta1": _cx(gp.eta1),
            "delta0p": _cx(gp.delta0p), "delta1p": _cx(gp.delta1p),
            "delta0q": _cx(gp.delta0q), "delta1q": _cx(gp.delta1q),
        },
        "classes": {lab.name: _cx(v) for lab, v in spectrum_table(gp).items()},
        "max_residual": residual,
        "tolerance": tol,
        "lemma1_residuals": l1,
    }
    if part.params.satisfies_congruences:
        l2 = lemma2_check(gp)
        report["lemma2"] = {"value": _cx(l2.value), "sign": l2.sign, "residual": l2.residual}
        verdicts["lemma2"] = _verdict(l2.ok)
    return _envelope(part.params, report, verdicts)


def _cmd_det(cfg: RunConfig):
    params = _params(cfg)
    seq = generate(build_partition(params))
    cf = det_closed_form(params)
    rep = match_closed_form(seq, cf)
    report = rep.as_dict()
    report["d"] = cf.d
    report["delta_plus"] = str(cf.delta_plus)
    report["delta_minus"] = str(cf.delta_minus)
    verdicts = {
        "closed_form": _verdict(rep.matched_sign != "none"),
        "nonzero": _verdict(rep.det_exact != 0),
        "gcd_divisibility": gcd_divisibility_check(seq, rep.det_exact),
    }
    return _envelope(params, report, verdicts)


def _cmd_raa(cfg: RunConfig):
    seq = generate(build_partition(_params(cfg)))
    T = cfg.bits if cfg.bits is not None else 2 * seq.N
    stream = [seq.bits[i % seq.N] for i in range(T)]
    m, n = raa_synthesize(stream)
    rep = two_adic_complexity(seq)
    size_bits = max(abs(m), abs(n)).bit_length()
    report = {
        "T": T,
        "m": str(m),
        "n": str(n),
        "expected_m": str(rep.adic_sign * rep.m),
        "expected_n": str(rep.n),
        "size_bits": size_bits,
        "phi2": rep.phi2,
    }
    verdicts = {
        "recovered": _verdict((m, n) == (rep.adic_sign * rep.m, rep.n)),
        "size_matches_phi2": _verdict(size_bits == rep.phi2),
    }
    return _envelope(seq.params, report, verdicts)


def table_rows(
    pairs=TABLE_PAIRS, *, strict: bool = True, det_limit: int = MAX_N
) -> tuple[list[dict], list[Verdict]]:
    rows, verdicts = [], []
    for p, q in pairs:
        params = make_params(p, q, strict=strict)
        seq = generate(build_partition(params))
        rep = two_adic_complexity(seq)
        matched = "skipped"
        if params.N <= det_limit and params.satisfies_congruences:
            matched = match_closed_form(seq, det_closed_form(params)).matched_sign
            verdicts.append(_verdict(matched != "none"))
        verdicts.extend((check_theorem1(rep), check_theorem2(rep)))
        rows.append({
            "p": p,
            "q": q,
            "phi2": rep.phi2,
            "lower_bound": params.lower_bound,
            "maximal": rep.is_maximal,
            "matched_sign": matched,
        })
    return rows, verdicts


def _cmd_table(cfg: RunConfig):
    rows, verdicts = table_rows(cfg.pairs, strict=cfg.strict, det_limit=cfg.det_limit)
    failed = any(v is Verdict.FAIL for v in verdicts)
    if cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({**row, "maximal": str(row["maximal"]).lower()})
        return buf.getvalue(), failed
    summary = {"all": Verdict.FAIL if failed else Verdict.PASS}
    return _envelope(None, {"rows": rows}, summary), failed


_HANDLERS = {
    "validate": _cmd_validate,
    "generate": _cmd_generate,
    "analyze": _cmd_analyze,
    "spectrum": _cmd_spectrum,
    "det": _cmd_det,
    "raa": _cmd_raa,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit_status, text)``."""
    try:
        cfg.validate()
    except ValueError as exc:
        return 2, f"error: {exc}\n"
    try:
        if cfg.command == "table":
            payload, failed = _cmd_table(cfg)
        else:
            payload = _HANDLERS[cfg.command](cfg)
            failed = isinstance(payload, dict) and "fail" in payload["verdicts"].values()
    except ParamError as exc:
        return 2, json.dumps({"error": {"reason": exc.reason, "message": str(exc)}}, sort_keys=True) + "\n"
    if isinstance(payload, dict):
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = payload if payload.endswith("\n") else payload + "\n"
    return (1 if failed else 0), text


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    try:
        out = []
        for item in text.split(","):
            p, q = item.strip().split(":")
            out.append((int(p), int(q)))
        return tuple(out)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected p1:q1,p2:q2,... got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclo2adic", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        if name != "table":
            sp.add_argument("--p", type=int, required=True)
            sp.add_argument("--q", type=int, required=True)
            sp.add_argument("--g", type=int, default=None, help="override the common primitive root")
        sp.add_argument("--no-strict", dest="strict", action="store_false",
                        help="drop the p = 1, q = 3 (mod 4) requirement")
        sp.add_argument("--format", dest="output_format", choices=("json", "csv", "raw"), default="json")
        sp.add_argument("--out", dest="output_path", default=None)
        if name == "table":
            sp.add_argument("--pairs", type=_parse_pairs, default=TABLE_PAIRS)
            sp.add_argument("--det-limit", type=int, default=MAX_N,
                            help="skip the determinant check for N above this (default %(default)s)")
        if name == "raa":
            sp.add_argument("--bits", type=int, default=None, help="prefix length (default 2N)")
        if name == "validate":
            sp.add_argument("--partition", action="store_true", help="include the class dump")
    return parser


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=ns.command,
        p=getattr(ns, "p", None),
        q=getattr(ns, "q", None),
        g_override=getattr(ns, "g", None),
        strict=ns.strict,
        output_format=ns.output_format,
        output_path=ns.output_path,
        pairs=getattr(ns, "pairs", TABLE_PAIRS),
        bits=getattr(ns, "bits", None),
        det_limit=getattr(ns, "det_limit", MAX_N),
        partition=getattr(ns, "partition", False),
    )
    status, text = run(cfg)
    stream = sys.stderr if status == 2 else sys.stdout
    if cfg.output_path and status != 2:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
